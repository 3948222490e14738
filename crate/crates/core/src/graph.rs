//! Undirected simple graphs with 1-based vertex ids.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex label `v_i`, stored 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics on 0; ids are 1-based.
    pub fn new(id: usize) -> Self {
        assert!(id >= 1, "vertex ids are 1-based");
        VertexId(id)
    }

    pub(crate) fn from_index(index: usize) -> Self {
        VertexId(index + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based position in adjacency tables.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Undirected simple graph on vertices `1..=n`.
///
/// Edges are kept as sorted `(u, v)` index pairs with `u < v` (0-based
/// internally). Connectivity is not an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from 1-based pairs. Duplicate edges (in either
    /// direction) are merged; loops and out-of-range ids are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            for id in [u, v] {
                if id == 0 || id > n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            set.insert((u.min(v) - 1, u.max(v) - 1));
        }
        Ok(Self::from_index_edges(n, set.into_iter().collect()))
    }

    /// `edges` must already be sorted, deduplicated and normalised.
    pub(crate) fn from_index_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_index_edges(n, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_index_edges(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_index_edges(n, edges)
    }

    /// `K_{1,leaves}` with the hub as `v1`.
    pub fn star(leaves: usize) -> Self {
        Self::from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_index_edges(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId::new)
    }

    /// 1-based edge pairs, sorted.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    pub(crate) fn index_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub(crate) fn neighbours(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    pub fn neighbours_of(&self, v: VertexId) -> Vec<VertexId> {
        self.adj[v.index()].iter().map(|&u| VertexId::from_index(u)).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub(crate) fn degree_at(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.index()].binary_search(&v.index()).is_ok()
    }

    /// Position of edge `{u, v}` (0-based endpoints) in the sorted edge list.
    pub(crate) fn edge_position(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.get() > self.n {
            Err(Error::VertexOutOfRange { id: v.get(), n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adjacency bitmasks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect()
    }

    /// Vertices of `H` are shifted by `n(G)`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_index_edges(self.n + other.n, edges)
    }

    /// Induced subgraph on `keep`, relabelled `1..=keep.len()` in the given order.
    pub fn induced(&self, keep: &[VertexId]) -> SimpleGraph {
        let mut position = vec![usize::MAX; self.n];
        for (k, v) in keep.iter().enumerate() {
            position[v.index()] = k;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (position[u], position[v]);
                (a != usize::MAX && b != usize::MAX).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_unstable();
        Self::from_index_edges(keep.len(), edges)
    }

    /// Relabels so that old vertex `v` becomes `perm[v.index()]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<SimpleGraph> {
        check_permutation(self.n, perm)?;
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u].index(), perm[v].index());
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Self::from_index_edges(self.n, edges))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp.into_iter().map(VertexId::from_index).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All-pairs hop counts by one BFS per vertex.
    pub fn bfs_distances(&self) -> DistanceMatrix {
        let mut dist = vec![None; self.n * self.n];
        for s in 0..self.n {
            let row = &mut dist[s * self.n..(s + 1) * self.n];
            row[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let d = row[u].unwrap();
                for &w in &self.adj[u] {
                    if row[w].is_none() {
                        row[w] = Some(d + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n: self.n, dist }
    }
}

/// Hop counts between every pair; `None` means unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.dist[u.index() * self.n + v.index()]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Maximum pairwise distance within `set`; 0 for singletons and `None`
    /// if two members lie in different components.
    pub fn spread(&self, set: &[VertexId]) -> Option<usize> {
        let mut worst = 0;
        for (k, &u) in set.iter().enumerate() {
            for &v in &set[k + 1..] {
                worst = worst.max(self.get(u, v)?);
            }
        }
        Some(worst)
    }
}

pub(crate) fn check_permutation(n: usize, perm: &[VertexId]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotPermutation(n));
    }
    let mut seen = vec![false; n];
    for v in perm {
        if v.get() > n || std::mem::replace(&mut seen[v.index()], true) {
            return Err(Error::NotPermutation(n));
        }
    }
    Ok(())
}

pub fn ids(list: &[usize]) -> Vec<VertexId> {
    list.iter().map(|&i| VertexId::new(i)).collect()
}
