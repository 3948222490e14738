//! Brush numbers: exact solvers, orientation costs and the closed-form
//! values for Jaco and Mycielski Jaco graphs.
//!
//! The exact value is a minimum over firing orders rather than over all
//! orientations. A cyclic orientation can have zero imbalance and still be
//! impossible to clean, while every firing order induces an acyclic one.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::cleaning::{clean, BrushAllocation, Policy};
use crate::error::{Error, Result};
use crate::graph::{check_permutation, SimpleGraph, VertexId};
use crate::jaco::JacoGraph;
use crate::mycielski::mycielskian;
use crate::orientation::Orientation;

pub const SUBSET_DP_CAP: usize = 24;
pub const PERMUTATION_CAP: usize = 9;

/// `Σ_v max(0, outdeg(v) - indeg(v))`.
pub fn orientation_cost(o: &Orientation) -> u64 {
    o.out_degrees()
        .iter()
        .zip(o.in_degrees())
        .map(|(&out, inn)| out.saturating_sub(inn) as u64)
        .sum()
}

/// Brushes needed when vertices fire in `ordering`: a vertex with `k`
/// earlier neighbours has received `k` brushes and must clean `deg - k`
/// edges, so it needs `max(0, deg - 2k)` of its own.
pub fn ordering_cost(g: &SimpleGraph, ordering: &[VertexId]) -> Result<u64> {
    Ok(ordering_allocation(g, ordering)?.total())
}

fn ordering_allocation(g: &SimpleGraph, ordering: &[VertexId]) -> Result<BrushAllocation> {
    check_permutation(g.order(), ordering)?;
    let mut placed = vec![false; g.order()];
    let mut beta = BrushAllocation::zeros(g.order());
    for &v in ordering {
        let i = v.index();
        let pred = g.neighbours(i).iter().filter(|&&u| placed[u]).count();
        beta.set(v, g.degree_at(i).saturating_sub(2 * pred) as u32);
        placed[i] = true;
    }
    Ok(beta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrushNumberResult {
    pub value: u64,
    pub witness_ordering: Vec<VertexId>,
    pub witness_allocation: BrushAllocation,
}

pub fn brush_number_exact(g: &SimpleGraph) -> Result<BrushNumberResult> {
    brush_number_exact_capped(g, SUBSET_DP_CAP)
}

/// Subset dynamic programme over fired sets:
/// `f(S) = min_{v in S} f(S - v) + max(0, deg(v) - 2|N(v) ∩ (S - v)|)`.
pub fn brush_number_exact_capped(g: &SimpleGraph, cap: usize) -> Result<BrushNumberResult> {
    let n = g.order();
    if n > cap.min(SUBSET_DP_CAP) {
        return Err(Error::CapExceeded { what: "subset DP", size: n, cap: cap.min(SUBSET_DP_CAP) });
    }
    let adj = g.adjacency_masks();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let step = |v: usize, before: u64| -> u16 {
        let pred = (adj[v] & before).count_ones();
        deg[v].saturating_sub(2 * pred) as u16
    };
    let full = (1u64 << n) - 1;
    let mut best = vec![0u16; 1 << n];
    for set in 1..=full {
        let mut rest = set;
        let mut m = u16::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before = set & !(1 << v);
            m = m.min(best[before as usize] + step(v, before));
        }
        best[set as usize] = m;
    }
    // Walk back from the full set, peeling off the last-fired vertex.
    let mut reversed = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = (0..n)
            .find(|&v| {
                set >> v & 1 == 1 && {
                    let before = set & !(1 << v);
                    best[before as usize] + step(v, before) == best[set as usize]
                }
            })
            .expect("some vertex attains the minimum");
        reversed.push(VertexId::from_index(v));
        set &= !(1 << v);
    }
    reversed.reverse();
    let witness_allocation = ordering_allocation(g, &reversed)?;
    Ok(BrushNumberResult {
        value: u64::from(best[full as usize]),
        witness_ordering: reversed,
        witness_allocation,
    })
}

/// Minimum over all `n!` firing orders, each scored by stepping the
/// cleaning process: brushes arrive along cleaned edges and a vertex is
/// topped up to its dirty degree just before it fires.
pub fn brush_number_permutation_check(g: &SimpleGraph) -> Result<u64> {
    let n = g.order();
    if n > PERMUTATION_CAP {
        return Err(Error::CapExceeded { what: "permutation oracle", size: n, cap: PERMUTATION_CAP });
    }
    struct Walk<'a> {
        g: &'a SimpleGraph,
        fired: Vec<bool>,
        held: Vec<u64>,
        best: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, depth: usize, spent: u64) {
            if depth == self.fired.len() {
                self.best = self.best.min(spent);
                return;
            }
            for v in 0..self.fired.len() {
                if self.fired[v] {
                    continue;
                }
                let dirty: Vec<usize> =
                    self.g.neighbours(v).iter().copied().filter(|&u| !self.fired[u]).collect();
                let need = (dirty.len() as u64).saturating_sub(self.held[v]);
                self.held[v] += need;
                self.held[v] -= dirty.len() as u64;
                for &u in &dirty {
                    self.held[u] += 1;
                }
                self.fired[v] = true;
                self.go(depth + 1, spent + need);
                self.fired[v] = false;
                for &u in &dirty {
                    self.held[u] -= 1;
                }
                self.held[v] += dirty.len() as u64;
                self.held[v] -= need;
            }
        }
    }
    let mut walk = Walk { g, fired: vec![false; n], held: vec![0; n], best: u64::MAX };
    walk.go(0, 0);
    Ok(if n == 0 { 0 } else { walk.best })
}

/// Closed-form brush number of `J_n(1)` with prime Jaconian vertex `v_p`:
/// `Σ_{j<=p} (d+(v_j) - d-(v_j)) + Σ_{j>p} max(0, (n-j) - d-(v_j))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacoFormula {
    pub value: i64,
    pub prime_jaconian: VertexId,
    /// Vertices in the first sum whose term `d+ - d-` is negative. Such
    /// terms are summed as written, not clamped.
    pub negative_terms: Vec<VertexId>,
}

pub fn evaluate_jaco_formula(n: usize) -> Result<JacoFormula> {
    if n < 2 {
        return Err(Error::Precondition("the Jaco formula needs n >= 2".into()));
    }
    let j = JacoGraph::build(n)?;
    let prime = j.jaconian_data()?.prime_jaconian;
    let (out, inn) = (j.out_degrees(), j.in_degrees());
    let mut value = 0i64;
    let mut negative_terms = Vec::new();
    for idx in 0..prime.get() {
        let term = out[idx] as i64 - inn[idx] as i64;
        if term < 0 {
            negative_terms.push(VertexId::from_index(idx));
        }
        value += term;
    }
    for idx in prime.get()..n {
        let j_index = idx as i64 + 1;
        value += ((n as i64 - j_index) - inn[idx] as i64).max(0);
    }
    Ok(JacoFormula { value, prime_jaconian: prime, negative_terms })
}

pub fn brush_number_formula_jaco(n: usize) -> Result<i64> {
    Ok(evaluate_jaco_formula(n)?.value)
}

/// `β(v) = max(0, d+(v) - d-(v))` under the canonical orientation.
pub fn minimal_allocation_jaco(n: usize) -> Result<BrushAllocation> {
    let j = JacoGraph::build(n)?;
    Ok(BrushAllocation::from_counts(
        j.out_degrees()
            .iter()
            .zip(j.in_degrees())
            .map(|(&o, &i)| o.saturating_sub(i) as u32)
            .collect(),
    ))
}

/// The claimed value `2 Σ_i d+(v_i)` for `μ(J_n(1))`. Returned as stated;
/// nothing here checks it.
pub fn brush_number_formula_mycielski_jaco(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition("the Mycielski Jaco formula needs n >= 2".into()));
    }
    let j = JacoGraph::build(n)?;
    Ok(2 * j.out_degrees().iter().sum::<usize>() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// Closed form for `b_r(J_n(1))`.
    Thm21,
    /// Doubling formula for `b_r(μ(J_n(1)))`.
    Thm22,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Thm21 => "thm21",
            Claim::Thm22 => "thm22",
        }
    }
}

/// An oracle witness that has been re-run through the cleaning engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ordering: Vec<VertexId>,
    pub allocation: BrushAllocation,
    pub total: u64,
    pub cleans: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimRow {
    pub label: String,
    pub n: usize,
    pub formula: i64,
    pub oracle: u64,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub negative_terms: Vec<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub rows: Vec<ClaimRow>,
}

impl ClaimReport {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| !r.agrees).count()
    }
}

/// Simulates `result`'s witness with the explicit ordering. Errors if it
/// fails to clean or does not use exactly `result.value` brushes.
pub fn verify_witness(g: &SimpleGraph, result: &BrushNumberResult) -> Result<Witness> {
    let trace = clean(
        g,
        &result.witness_allocation,
        &Policy::Explicit(result.witness_ordering.clone()),
    )?;
    trace.check_identities(g)?;
    let witness = Witness {
        ordering: result.witness_ordering.clone(),
        allocation: result.witness_allocation.clone(),
        total: result.witness_allocation.total(),
        cleans: trace.is_cleaned(),
    };
    if !witness.cleans || witness.total != result.value {
        return Err(Error::Precondition(format!(
            "oracle witness failed to re-verify (cleans = {}, total = {}, value = {})",
            witness.cleans, witness.total, result.value
        )));
    }
    Ok(witness)
}

/// Formula against oracle for every `n` in `range`. The oracle runs on
/// `J_n` (Thm21) or `μ(J_n)` (Thm22); disagreeing rows carry a
/// simulation-checked witness.
pub fn compare_claims(range: RangeInclusive<usize>, which: Claim) -> Result<ClaimReport> {
    let mut rows = Vec::new();
    for n in range {
        let j = JacoGraph::build(n)?;
        let (label, graph, formula, negative_terms) = match which {
            Claim::Thm21 => {
                let f = evaluate_jaco_formula(n)?;
                (format!("J_{n}"), j.graph().clone(), f.value, f.negative_terms)
            }
            Claim::Thm22 => {
                let m = mycielskian(j.graph());
                let f = brush_number_formula_mycielski_jaco(n)? as i64;
                (format!("mu(J_{n})"), m.graph, f, Vec::new())
            }
        };
        let result = brush_number_exact(&graph)?;
        let witness = verify_witness(&graph, &result)?;
        let agrees = formula == result.value as i64;
        rows.push(ClaimRow {
            label,
            n,
            formula,
            oracle: result.value,
            agrees,
            negative_terms,
            witness: (!agrees).then_some(witness),
        });
    }
    Ok(ClaimReport { claim: which, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleaning::clean_directed;
    use crate::graph::ids;

    #[test]
    fn orientation_costs() {
        let j5 = JacoGraph::build(5).unwrap();
        assert_eq!(orientation_cost(j5.orientation()), 2);
        let j9 = JacoGraph::build(9).unwrap();
        assert_eq!(orientation_cost(j9.orientation()), 6);
        let directed_c4 =
            Orientation::from_arcs(SimpleGraph::cycle(4), &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(orientation_cost(&directed_c4), 0);
        assert!(!directed_c4.is_acyclic());
    }

    #[test]
    fn ordering_costs() {
        assert_eq!(ordering_cost(&SimpleGraph::path(3), &ids(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(ordering_cost(&SimpleGraph::star(3), &ids(&[1, 2, 3, 4])).unwrap(), 3);
        let c3 = SimpleGraph::cycle(3);
        for p in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
            assert_eq!(ordering_cost(&c3, &ids(&p)).unwrap(), 2);
        }
        assert!(ordering_cost(&c3, &ids(&[1, 2])).is_err());
    }

    #[test]
    fn exact_classics() {
        for n in 3..=10 {
            assert_eq!(brush_number_exact(&SimpleGraph::cycle(n)).unwrap().value, 2);
        }
        for n in 2..=10 {
            assert_eq!(brush_number_exact(&SimpleGraph::path(n)).unwrap().value, 1);
        }
        for n in 2..=8 {
            let g = SimpleGraph::complete(n);
            let expect = (n * n / 4) as u64;
            assert_eq!(brush_number_exact(&g).unwrap().value, expect);
            assert_eq!(brush_number_permutation_check(&g).unwrap(), expect);
        }
        assert!(brush_number_exact(&SimpleGraph::path(25)).is_err());
    }

    #[test]
    fn stars_need_half_their_leaves() {
        // Firing ceil(k/2) leaves first leaves the hub enough brushes.
        for k in 1..=8 {
            let g = SimpleGraph::star(k);
            let expect = k.div_ceil(2) as u64;
            assert_eq!(brush_number_exact(&g).unwrap().value, expect, "K_1,{k}");
            assert_eq!(brush_number_permutation_check(&g).unwrap(), expect);
        }
    }

    #[test]
    fn permutation_oracle() {
        assert_eq!(brush_number_permutation_check(JacoGraph::build(5).unwrap().graph()).unwrap(), 2);
        let mu2 = mycielskian(JacoGraph::build(2).unwrap().graph());
        assert_eq!(brush_number_permutation_check(&mu2.graph).unwrap(), 2);
        assert_eq!(brush_number_permutation_check(&SimpleGraph::star(4)).unwrap(), 2);
        assert!(brush_number_permutation_check(&SimpleGraph::path(10)).is_err());
    }

    #[test]
    fn union_of_triangles() {
        let g = SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3));
        assert_eq!(brush_number_exact(&g).unwrap().value, 4);
    }

    #[test]
    fn jaco_formula() {
        assert_eq!(brush_number_formula_jaco(3).unwrap(), 1);
        assert_eq!(brush_number_formula_jaco(5).unwrap(), 2);
        assert_eq!(brush_number_formula_jaco(9).unwrap(), 6);
        assert!(brush_number_formula_jaco(1).is_err());
    }

    #[test]
    fn jaco_minimal_allocations() {
        assert_eq!(minimal_allocation_jaco(9).unwrap().counts(), &[1, 0, 1, 2, 1, 1, 0, 0, 0]);
        assert_eq!(minimal_allocation_jaco(5).unwrap().support(), ids(&[1, 3]));
        assert_eq!(minimal_allocation_jaco(2).unwrap().counts(), &[1, 0]);
        for n in 2..=20 {
            let beta = minimal_allocation_jaco(n).unwrap();
            assert_eq!(beta.total() as i64, brush_number_formula_jaco(n).unwrap());
            let j = JacoGraph::build(n).unwrap();
            assert!(clean_directed(j.orientation(), &beta).unwrap().is_cleaned());
        }
    }

    #[test]
    fn mycielski_formula() {
        assert_eq!(brush_number_formula_mycielski_jaco(2).unwrap(), 2);
        assert_eq!(brush_number_formula_mycielski_jaco(3).unwrap(), 4);
        assert_eq!(brush_number_formula_mycielski_jaco(9).unwrap(), 32);
        assert!(brush_number_formula_mycielski_jaco(1).is_err());
    }

    #[test]
    fn claim_rows() {
        let r = compare_claims(5..=5, Claim::Thm21).unwrap();
        assert_eq!((r.rows[0].formula, r.rows[0].oracle, r.rows[0].agrees), (2, 2, true));
        let r = compare_claims(2..=3, Claim::Thm22).unwrap();
        assert_eq!((r.rows[0].formula, r.rows[0].oracle, r.rows[0].agrees), (2, 2, true));
        assert_eq!(r.rows[1].formula, 4);
        let row = &r.rows[1];
        if !row.agrees {
            let w = row.witness.as_ref().unwrap();
            assert!(w.cleans);
            assert_eq!(w.total, row.oracle);
        }
    }

    #[test]
    fn witness_is_checked() {
        let g = SimpleGraph::cycle(5);
        let mut r = brush_number_exact(&g).unwrap();
        verify_witness(&g, &r).unwrap();
        r.witness_allocation = BrushAllocation::from_pairs(5, &[(1, 1)]).unwrap();
        assert!(verify_witness(&g, &r).is_err());
    }
}
