//! The Mycielski transform `μ(G)`.

use serde::{Deserialize, Serialize};

use crate::graph::{SimpleGraph, VertexId};

/// Which part of `μ(G)` a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// `v_i`, ids `1..=n`.
    Original(usize),
    /// `x_i`, ids `n+1..=2n`.
    Shadow(usize),
    /// `w`, id `2n+1`.
    Apex,
}

impl Role {
    pub fn label(self) -> String {
        match self {
            Role::Original(i) => format!("v{i}"),
            Role::Shadow(i) => format!("x{i}"),
            Role::Apex => "w".to_string(),
        }
    }
}

/// Vertex roles for a graph on `2n+1` vertices laid out as
/// originals, shadows, apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    base_order: usize,
}

impl Partition {
    pub fn new(base_order: usize) -> Self {
        Partition { base_order }
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn role(&self, v: VertexId) -> Role {
        let n = self.base_order;
        match v.get() {
            i if i <= n => Role::Original(i),
            i if i <= 2 * n => Role::Shadow(i - n),
            _ => Role::Apex,
        }
    }

    pub fn originals(&self) -> Vec<VertexId> {
        (1..=self.base_order).map(VertexId::new).collect()
    }

    pub fn shadows(&self) -> Vec<VertexId> {
        (self.base_order + 1..=2 * self.base_order).map(VertexId::new).collect()
    }

    pub fn apex(&self) -> VertexId {
        VertexId::new(2 * self.base_order + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MycielskiGraph {
    pub graph: SimpleGraph,
    pub partition: Partition,
}

/// `μ(G)`: keep `G`, add a shadow `x_i` adjacent to every neighbour of
/// `v_i`, and an apex `w` adjacent to all shadows.
pub fn mycielskian(g: &SimpleGraph) -> MycielskiGraph {
    let n = g.order();
    let mut edges = Vec::with_capacity(3 * g.size() + n);
    for &(u, v) in g.index_edges() {
        edges.push((u, v));
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    let apex = 2 * n;
    edges.extend((0..n).map(|i| (n + i, apex)));
    edges.sort_unstable();
    MycielskiGraph {
        graph: SimpleGraph::from_index_edges(2 * n + 1, edges),
        partition: Partition::new(n),
    }
}
