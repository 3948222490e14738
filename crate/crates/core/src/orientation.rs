use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{check_permutation, SimpleGraph, VertexId};

/// A direction for every edge of a base graph.
///
/// `forward[k]` is true when the k-th base edge `(u, v)`, `u < v`, points
/// from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: SimpleGraph,
    forward: Vec<bool>,
}

impl Orientation {
    /// Builds an orientation from 1-based `(tail, head)` arcs, which must
    /// cover every base edge exactly once.
    pub fn from_arcs(base: SimpleGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut forward = vec![None; base.size()];
        for &(t, h) in arcs {
            for id in [t, h] {
                if id == 0 || id > base.order() {
                    return Err(Error::VertexOutOfRange { id, n: base.order() });
                }
            }
            let k = base.edge_position(t - 1, h - 1).ok_or_else(|| {
                Error::Precondition(format!("arc ({t},{h}) is not a base edge"))
            })?;
            if forward[k].replace(t < h).is_some() {
                return Err(Error::Precondition(format!("edge {{{t},{h}}} oriented twice")));
            }
        }
        let forward = forward
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("some edge has no direction".into()))?;
        Ok(Orientation { base, forward })
    }

    /// Directs each edge from the endpoint that appears first in `ordering`.
    pub fn by_ordering(base: &SimpleGraph, ordering: &[VertexId]) -> Result<Self> {
        check_permutation(base.order(), ordering)?;
        let mut rank = vec![0; base.order()];
        for (k, v) in ordering.iter().enumerate() {
            rank[v.index()] = k;
        }
        let forward = base.index_edges().iter().map(|&(u, v)| rank[u] < rank[v]).collect();
        Ok(Orientation { base: base.clone(), forward })
    }

    pub(crate) fn from_forward(base: SimpleGraph, forward: Vec<bool>) -> Self {
        debug_assert_eq!(base.size(), forward.len());
        Orientation { base, forward }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    /// 0-based `(tail, head)` pairs aligned with the base edge list.
    pub(crate) fn index_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .index_edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
    }

    /// 1-based `(tail, head)` arcs in base-edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.index_arcs().map(|(t, h)| (t + 1, h + 1)).collect()
    }

    /// `(outdeg, indeg)` of `v`.
    pub fn degrees(&self, v: VertexId) -> (usize, usize) {
        let i = v.index();
        self.index_arcs().fold((0, 0), |(o, d), (t, h)| {
            (o + usize::from(t == i), d + usize::from(h == i))
        })
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.base.order()];
        for (t, _) in self.index_arcs() {
            out[t] += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut inn = vec![0; self.base.order()];
        for (_, h) in self.index_arcs() {
            inn[h] += 1;
        }
        inn
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            base: self.base.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// Kahn's algorithm; `None` when a directed cycle exists.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let n = self.base.order();
        let mut indeg = self.in_degrees();
        let mut succ = vec![Vec::new(); n];
        for (t, h) in self.index_arcs() {
            succ[t].push(h);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(VertexId::from_index(u));
            for &w in &succ[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}
