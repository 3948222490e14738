//! Finite Jaco graphs `J_n(1)`.
//!
//! The arc `(v_i, v_j)`, `i < j`, is present iff `2i - indeg(v_i) >= j`.
//! All in-arcs of `v_i` come from lower indices, so one left-to-right pass
//! fixes `indeg(v_i)` before any out-arc of `v_i` is decided.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoGraph {
    n: usize,
    orientation: Orientation,
    outdeg: Vec<usize>,
    indeg: Vec<usize>,
}

/// Structural data around the maximum degree of `J_n(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JaconianData {
    pub max_degree: usize,
    pub jaconian_set: Vec<VertexId>,
    pub prime_jaconian: VertexId,
    /// Vertices `v_{p+1}..v_n` above the prime Jaconian vertex `v_p`.
    pub hope_vertices: Vec<VertexId>,
    /// Subgraph induced on `hope_vertices`, relabelled from 1.
    pub hope: SimpleGraph,
}

impl JacoGraph {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("Jaco graphs need n >= 1".into()));
        }
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut arcs = Vec::new();
        for i in 1..=n {
            // 2i - indeg(v_i) >= i always holds since indeg(v_i) < i.
            let reach = (2 * i - indeg[i - 1]).min(n);
            for j in i + 1..=reach {
                arcs.push((i - 1, j - 1));
                indeg[j - 1] += 1;
                outdeg[i - 1] += 1;
            }
        }
        let base = SimpleGraph::from_index_edges(n, {
            let mut e = arcs.clone();
            e.sort_unstable();
            e
        });
        // Every arc goes from the lower index, so all base edges point forward.
        let orientation = Orientation::from_forward(base, vec![true; arcs.len()]);
        Ok(JacoGraph { n, orientation, outdeg, indeg })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.orientation.base()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.outdeg[v.index()]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.indeg[v.index()]
    }

    pub fn out_degrees(&self) -> &[usize] {
        &self.outdeg
    }

    pub fn in_degrees(&self) -> &[usize] {
        &self.indeg
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.outdeg[v.index()] + self.indeg[v.index()]
    }

    pub fn jaconian_data(&self) -> Result<JaconianData> {
        if self.n < 2 {
            return Err(Error::Precondition("Jaconian data needs n >= 2".into()));
        }
        let degrees: Vec<usize> = (0..self.n).map(|i| self.outdeg[i] + self.indeg[i]).collect();
        let max_degree = *degrees.iter().max().unwrap();
        let jaconian_set: Vec<VertexId> = (0..self.n)
            .filter(|&i| degrees[i] == max_degree)
            .map(VertexId::from_index)
            .collect();
        let prime_jaconian = jaconian_set[0];
        let hope_vertices: Vec<VertexId> =
            (prime_jaconian.get() + 1..=self.n).map(VertexId::new).collect();
        let hope = self.graph().induced(&hope_vertices);
        Ok(JaconianData { max_degree, jaconian_set, prime_jaconian, hope_vertices, hope })
    }
}

pub fn build_jaco(n: usize) -> Result<JacoGraph> {
    JacoGraph::build(n)
}

/// Out-degree of `v_i` in every prefix large enough to hold all its
/// out-neighbours, read off `J_{2i}(1)`.
pub fn out_degree_unbounded(i: VertexId) -> usize {
    let j = JacoGraph::build(2 * i.get()).expect("2i >= 2");
    j.out_degree(i)
}

/// `indeg(v_i) + (n - i)`, valid only while `v_i` is adjacent to every
/// later vertex of `J_n(1)`, i.e. `n < i + out_degree_unbounded(i)`.
pub fn smaller_graph_degree(n: usize, i: VertexId) -> Result<usize> {
    if i.get() > n {
        return Err(Error::VertexOutOfRange { id: i.get(), n });
    }
    let unbounded = out_degree_unbounded(i);
    if n >= i.get() + unbounded {
        return Err(Error::Precondition(format!(
            "n = {n} >= i + d+(v_i) = {}; the truncated-degree identity does not apply",
            i.get() + unbounded
        )));
    }
    let indeg = JacoGraph::build(n)?.in_degree(i);
    Ok(indeg + (n - i.get()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids;

    // Direct transcription of the arc rule, re-evaluated against the
    // finished graph's in-degrees.
    fn arcs_by_rule(j: &JacoGraph) -> Vec<(usize, usize)> {
        let n = j.order();
        let mut arcs = Vec::new();
        for i in 1..=n {
            for t in i + 1..=n {
                if 2 * i >= t + j.in_degree(VertexId::new(i)) {
                    arcs.push((i, t));
                }
            }
        }
        arcs
    }

    #[test]
    fn small_prefixes_are_paths() {
        for n in 1..=4 {
            let j = JacoGraph::build(n).unwrap();
            assert_eq!(j.graph(), &SimpleGraph::path(n));
        }
        assert!(JacoGraph::build(0).is_err());
    }

    #[test]
    fn j5_edges() {
        let j = JacoGraph::build(5).unwrap();
        assert_eq!(j.orientation().arcs(), vec![(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(j.orientation().degrees(VertexId::new(3)), (2, 1));
    }

    #[test]
    fn j9_out_degrees() {
        let j = JacoGraph::build(9).unwrap();
        assert_eq!(j.out_degrees(), &[1, 1, 2, 3, 3, 3, 2, 1, 0]);
        assert_eq!(j.out_degrees().iter().sum::<usize>(), 16);
    }

    #[test]
    fn arcs_match_rule() {
        for n in 1..=30 {
            let j = JacoGraph::build(n).unwrap();
            assert_eq!(j.orientation().arcs(), arcs_by_rule(&j), "n = {n}");
        }
    }

    #[test]
    fn unbounded_out_degree() {
        assert_eq!(out_degree_unbounded(VertexId::new(1)), 1);
        assert_eq!(out_degree_unbounded(VertexId::new(2)), 1);
        assert_eq!(out_degree_unbounded(VertexId::new(5)), 3);
        let j10 = JacoGraph::build(10).unwrap();
        assert_eq!(j10.graph().neighbours_of(VertexId::new(5)), ids(&[3, 4, 6, 7, 8]));
    }

    #[test]
    fn jaconian() {
        let d = JacoGraph::build(5).unwrap().jaconian_data().unwrap();
        assert_eq!(d.max_degree, 3);
        assert_eq!(d.jaconian_set, ids(&[3]));
        assert_eq!(d.prime_jaconian, VertexId::new(3));
        assert_eq!(d.hope_vertices, ids(&[4, 5]));

        let d = JacoGraph::build(9).unwrap().jaconian_data().unwrap();
        assert_eq!(d.prime_jaconian, VertexId::new(5));
        assert_eq!(d.hope_vertices, ids(&[6, 7, 8, 9]));

        let d = JacoGraph::build(2).unwrap().jaconian_data().unwrap();
        assert_eq!(d.max_degree, 1);
        assert_eq!(d.jaconian_set, ids(&[1, 2]));
        assert_eq!(d.prime_jaconian, VertexId::new(1));

        assert!(JacoGraph::build(1).unwrap().jaconian_data().is_err());
    }

    #[test]
    fn truncated_degree_identity() {
        assert_eq!(smaller_graph_degree(9, VertexId::new(7)).unwrap(), 5);
        assert_eq!(smaller_graph_degree(5, VertexId::new(4)).unwrap(), 2);
        assert!(matches!(
            smaller_graph_degree(9, VertexId::new(5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn structural_properties() {
        for n in 2..=40 {
            let j = JacoGraph::build(n).unwrap();
            let data = j.jaconian_data().unwrap();
            let k = data.hope_vertices.len();
            assert_eq!(data.hope.size(), k * k.saturating_sub(1) / 2, "Hope complete, n = {n}");
            for i in 1..=n {
                let v = VertexId::new(i);
                if i + out_degree_unbounded(v) <= n {
                    assert_eq!(j.degree(v), i, "degree-k property, n = {n}, i = {i}");
                } else {
                    assert_eq!(smaller_graph_degree(n, v).unwrap(), j.degree(v));
                }
                // tails into v_i are v_{i-indeg}..v_{i-1}
                let tails: Vec<usize> = j
                    .orientation()
                    .arcs()
                    .into_iter()
                    .filter(|&(_, h)| h == i)
                    .map(|(t, _)| t)
                    .collect();
                let expect: Vec<usize> = (i - j.in_degree(v)..i).collect();
                assert_eq!(tails, expect, "contiguous tails, n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn prefix_stability() {
        let big = JacoGraph::build(40).unwrap();
        for n in 1..=40 {
            let keep: Vec<VertexId> = (1..=n).map(VertexId::new).collect();
            assert_eq!(&big.graph().induced(&keep), JacoGraph::build(n).unwrap().graph());
        }
    }
}
