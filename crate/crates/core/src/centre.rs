//! Brush centres: the smallest vertex sets that can hold all `b_r(G)`
//! brushes and still clean the graph, tie-broken by the largest pairwise
//! distance inside the set.

use serde::Serialize;

use crate::cleaning::{clean, clean_directed, reverse_clean, BrushAllocation, Policy, EXHAUSTIVE_CAP};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};
use crate::jaco::JacoGraph;
use crate::solvers::{brush_number_exact, minimal_allocation_jaco};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Support {
    pub vertices: Vec<VertexId>,
    pub allocation: BrushAllocation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentreSupport {
    pub vertices: Vec<VertexId>,
    pub allocation: BrushAllocation,
    /// Whether a cleaning from some other `b_r`-brush allocation ends
    /// exactly on `allocation`; shown by running the reversed cleaning.
    pub reachable_as_end: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrushCentre {
    pub b_r: u64,
    pub cardinality: usize,
    /// Max pairwise distance inside each support; `None` if a support
    /// spans two components.
    pub spread: Option<usize>,
    pub supports: Vec<CentreSupport>,
}

impl BrushCentre {
    pub fn vertex_sets(&self) -> Vec<Vec<VertexId>> {
        self.supports.iter().map(|s| s.vertices.clone()).collect()
    }
}

fn policy_for(g: &SimpleGraph) -> Policy {
    if g.order() <= EXHAUSTIVE_CAP {
        Policy::exhaustive()
    } else {
        Policy::Greedy
    }
}

/// Every `k`-subset `S` for which some allocation of `b` brushes, at least
/// one on each member of `S` and none elsewhere, cleans `g`. One witness
/// allocation per set; sets in lexicographic order.
pub fn valid_supports(g: &SimpleGraph, b: u64, k: usize) -> Result<Vec<Support>> {
    if k == 0 {
        return Err(Error::Precondition("support cardinality must be >= 1".into()));
    }
    let n = g.order();
    if k > n || (k as u64) > b {
        return Ok(Vec::new());
    }
    let policy = policy_for(g);
    let mut found = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        // Some member must be able to fire first: β(v) >= deg(v) with at
        // most b - (k - 1) brushes on one vertex.
        let spare = b - (k as u64 - 1);
        if subset.iter().any(|&v| g.degree_at(v) as u64 <= spare) {
            if let Some(allocation) = first_cleaning_composition(g, &subset, b, &policy)? {
                found.push(Support {
                    vertices: subset.iter().map(|&v| VertexId::from_index(v)).collect(),
                    allocation,
                });
            }
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    Ok(found)
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Tries compositions of `b` into `|subset|` positive parts in
/// lexicographic order and returns the first that cleans.
fn first_cleaning_composition(
    g: &SimpleGraph,
    subset: &[usize],
    b: u64,
    policy: &Policy,
) -> Result<Option<BrushAllocation>> {
    let k = subset.len();
    let mut parts = vec![1u64; k];
    parts[k - 1] = b - (k as u64 - 1);
    loop {
        let can_start = subset.iter().zip(&parts).any(|(&v, &p)| p >= g.degree_at(v) as u64);
        if can_start {
            let mut beta = BrushAllocation::zeros(g.order());
            for (&v, &p) in subset.iter().zip(&parts) {
                beta.set(VertexId::from_index(v), p as u32);
            }
            if clean(g, &beta, policy)?.is_cleaned() {
                return Ok(Some(beta));
            }
        }
        if !next_composition(&mut parts) {
            return Ok(None);
        }
    }
}

/// Next composition (positive parts, fixed sum) in lexicographic order.
fn next_composition(parts: &mut [u64]) -> bool {
    let k = parts.len();
    if k < 2 {
        return false;
    }
    // rightmost position before the tail that can still grow
    let mut i = k - 1;
    while i > 0 {
        i -= 1;
        let tail: u64 = parts[i + 1..].iter().sum();
        if tail > (k - i - 1) as u64 {
            parts[i] += 1;
            let rest = tail - 1;
            for p in parts[i + 1..k - 1].iter_mut() {
                *p = 1;
            }
            parts[k - 1] = rest - (k - i - 2) as u64;
            return true;
        }
    }
    false
}

/// Lexicographic minimum of (support size, spread) over all valid
/// `b_r(G)`-allocations. `max_support` bounds the search.
pub fn brush_centre(g: &SimpleGraph, max_support: Option<usize>) -> Result<BrushCentre> {
    let b_r = brush_number_exact(g)?.value;
    if b_r == 0 {
        return Ok(BrushCentre { b_r, cardinality: 0, spread: Some(0), supports: Vec::new() });
    }
    let dist = g.bfs_distances();
    let limit = max_support.unwrap_or(g.order()).min(g.order());
    for k in 1..=limit {
        let found = valid_supports(g, b_r, k)?;
        if found.is_empty() {
            continue;
        }
        // None (disconnected) ranks after every finite spread.
        let key = |s: &Support| dist.spread(&s.vertices).map_or(usize::MAX, |d| d);
        let best = found.iter().map(key).min().unwrap();
        let mut supports = Vec::new();
        for s in found.into_iter().filter(|s| key(s) == best) {
            let reachable_as_end = reachable_as_end(g, &s.allocation)?;
            supports.push(CentreSupport { vertices: s.vertices, allocation: s.allocation, reachable_as_end });
        }
        return Ok(BrushCentre {
            b_r,
            cardinality: k,
            spread: (best != usize::MAX).then_some(best),
            supports,
        });
    }
    Err(Error::CapExceeded { what: "brush centre support size", size: limit + 1, cap: limit })
}

/// Clean from `allocation`, then run the reversed cleaning: it starts from
/// another `b`-brush allocation and should end exactly on `allocation`.
fn reachable_as_end(g: &SimpleGraph, allocation: &BrushAllocation) -> Result<bool> {
    let first = clean(g, allocation, &policy_for(g))?;
    if !first.is_cleaned() {
        return Ok(false);
    }
    let second = reverse_clean(g, &first)?;
    Ok(second.is_cleaned() && &second.end == allocation)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem31Row {
    pub n: usize,
    pub end_allocation: BrushAllocation,
    pub end_support: Vec<VertexId>,
    pub end_spread: Option<usize>,
    /// Whether the end support lies in the Hope subgraph.
    pub end_in_hope: bool,
    pub centre: BrushCentre,
    pub pass: bool,
}

/// Cleans `J_n` canonically from its minimal allocation and checks whether
/// the support of the end configuration is one of the brush-centre supports.
pub fn verify_theorem_31(n: usize) -> Result<Theorem31Row> {
    let j = JacoGraph::build(n)?;
    let start = minimal_allocation_jaco(n)?;
    let trace = clean_directed(j.orientation(), &start)?;
    let end_allocation = trace.end_configuration()?.clone();
    let end_support = end_allocation.support();
    let end_spread = j.graph().bfs_distances().spread(&end_support);
    let end_in_hope = match j.jaconian_data() {
        Ok(data) => end_support.iter().all(|v| data.hope_vertices.contains(v)),
        Err(_) => false,
    };
    let centre = brush_centre(j.graph(), None)?;
    let pass = centre.supports.iter().any(|s| s.vertices == end_support);
    Ok(Theorem31Row { n, end_allocation, end_support, end_spread, end_in_hope, centre, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids;

    #[test]
    fn compositions_enumerate() {
        let mut parts = vec![1, 1, 3];
        let mut seen = vec![parts.clone()];
        while next_composition(&mut parts) {
            seen.push(parts.clone());
        }
        // C(4, 2) compositions of 5 into 3 positive parts
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![3, 1, 1]);
        assert!(seen.iter().all(|p| p.iter().sum::<u64>() == 5));
    }

    #[test]
    fn subsets_enumerate() {
        let mut s = vec![0, 1];
        let mut count = 1;
        while next_subset(&mut s, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }

    #[test]
    fn path_supports() {
        let sets: Vec<_> = valid_supports(&SimpleGraph::path(4), 1, 1)
            .unwrap()
            .into_iter()
            .map(|s| s.vertices)
            .collect();
        assert_eq!(sets, vec![ids(&[1]), ids(&[4])]);
    }

    #[test]
    fn cycle_supports() {
        let found = valid_supports(&SimpleGraph::cycle(5), 2, 1).unwrap();
        assert_eq!(found.len(), 5);
    }

    #[test]
    fn star_with_hub_budget() {
        let found = valid_supports(&SimpleGraph::star(4), 4, 1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].vertices, ids(&[1]));
        assert_eq!(found[0].allocation.get(VertexId::new(1)), 4);
        assert!(valid_supports(&SimpleGraph::star(4), 4, 0).is_err());
    }

    #[test]
    fn centres() {
        let c = brush_centre(&SimpleGraph::path(6), None).unwrap();
        assert_eq!(c.vertex_sets(), vec![ids(&[1]), ids(&[6])]);
        assert_eq!((c.cardinality, c.spread), (1, Some(0)));

        // v4 and v5 are interchangeable in J_5, so both are centres.
        let j5 = JacoGraph::build(5).unwrap();
        let c = brush_centre(j5.graph(), None).unwrap();
        assert_eq!(c.vertex_sets(), vec![ids(&[4]), ids(&[5])]);
        assert_eq!(c.supports[1].allocation.get(VertexId::new(5)), 2);
        assert!(c.supports.iter().all(|s| s.reachable_as_end));

        // b_r(K_1,3) = 2: one leaf fires into the hub, which then needs one more.
        let c = brush_centre(&SimpleGraph::star(3), None).unwrap();
        assert_eq!(c.b_r, 2);
        assert_eq!((c.cardinality, c.spread), (2, Some(1)));
        assert_eq!(c.vertex_sets(), vec![ids(&[1, 2]), ids(&[1, 3]), ids(&[1, 4])]);
    }

    #[test]
    fn edgeless_and_caps() {
        let c = brush_centre(&SimpleGraph::empty(3), None).unwrap();
        assert_eq!((c.b_r, c.cardinality), (0, 0));
        assert!(brush_centre(&SimpleGraph::star(4), Some(1)).is_err());
    }

    #[test]
    fn theorem_31_small() {
        let row = verify_theorem_31(5).unwrap();
        assert_eq!(row.end_support, ids(&[5]));
        assert!(row.pass);
        let row = verify_theorem_31(4).unwrap();
        assert_eq!(row.end_support, ids(&[4]));
        assert_eq!(row.centre.vertex_sets(), vec![ids(&[1]), ids(&[4])]);
        assert!(row.pass);
        let row = verify_theorem_31(9).unwrap();
        assert_eq!(row.end_support, ids(&[7, 8, 9]));
        assert_eq!(row.end_spread, Some(1));
        assert!(row.end_in_hope);
    }
}
