//! Verification suites that set claimed values against computed ones.
//!
//! A disagreement is a finding and is reported in a row. Errors are kept
//! for broken infrastructure: a witness that does not re-simulate, a trace
//! that breaks conservation, a cap that was exceeded.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::centre::verify_theorem_31;
use crate::cleaning::{clean, clean_directed, reverse_clean, BrushAllocation, CleaningTrace, Policy};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};
use crate::jaco::JacoGraph;
use crate::solvers::{brush_number_exact, brush_number_permutation_check, compare_claims, minimal_allocation_jaco, verify_witness, Claim};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub label: String,
    pub claimed: String,
    pub computed: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<SuiteRow>,
    /// Full typed report (claim rows with witnesses, centre objects, ...).
    pub detail: Value,
}

impl SuiteReport {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| !r.agrees).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyCaps {
    pub thm21_n_max: usize,
    pub thm22_n_max: usize,
    pub thm31_n_max: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps { thm21_n_max: 12, thm22_n_max: 8, thm31_n_max: 10, seed: DEFAULT_SEED, samples: 200 }
    }
}

fn row(label: impl Into<String>, claimed: impl ToString, computed: impl ToString) -> SuiteRow {
    let (claimed, computed) = (claimed.to_string(), computed.to_string());
    SuiteRow { label: label.into(), agrees: claimed == computed, claimed, computed }
}

/// Exact brush numbers of paths, cycles, stars and complete graphs against
/// their stated values. Complete graphs are also cross-checked by
/// permutation enumeration.
pub fn classics_suite() -> Result<SuiteReport> {
    let mut rows = Vec::new();
    let witnessed = |rows: &mut Vec<SuiteRow>, label: String, g: &SimpleGraph, claimed: u64| -> Result<()> {
        let r = brush_number_exact(g)?;
        verify_witness(g, &r)?;
        rows.push(row(label, claimed, r.value));
        Ok(())
    };
    for n in 2..=10 {
        witnessed(&mut rows, format!("P_{n}"), &SimpleGraph::path(n), 1)?;
    }
    for n in 3..=10 {
        witnessed(&mut rows, format!("C_{n}"), &SimpleGraph::cycle(n), 2)?;
    }
    for n in 2..=8 {
        witnessed(&mut rows, format!("K_1,{n}"), &SimpleGraph::star(n), n as u64)?;
    }
    for n in 2..=8 {
        let g = SimpleGraph::complete(n);
        let claimed = (n * n / 4) as u64;
        witnessed(&mut rows, format!("K_{n}"), &g, claimed)?;
        rows.push(row(format!("K_{n} (permutations)"), claimed, brush_number_permutation_check(&g)?));
    }
    Ok(SuiteReport { suite: "classics".into(), rows, detail: Value::Null })
}

pub fn claim_suite(claim: Claim, n_max: usize) -> Result<SuiteReport> {
    let report = compare_claims(2..=n_max, claim)?;
    let rows = report
        .rows
        .iter()
        .map(|r| row(r.label.clone(), r.formula, r.oracle))
        .collect();
    Ok(SuiteReport {
        suite: claim.name().into(),
        rows,
        detail: serde_json::to_value(&report)?,
    })
}

pub fn theorem31_suite(n_max: usize) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    let mut details = Vec::new();
    for n in 5..=n_max {
        let r = verify_theorem_31(n)?;
        let sets: Vec<String> = r.centre.supports.iter().map(|s| fmt_set(&s.vertices)).collect();
        rows.push(SuiteRow {
            label: format!("J_{n}"),
            claimed: format!("end support {}", fmt_set(&r.end_support)),
            computed: format!("centre {}", sets.join(" ")),
            agrees: r.pass,
        });
        details.push(r);
    }
    Ok(SuiteReport { suite: "thm31".into(), rows, detail: serde_json::to_value(&details)? })
}

fn fmt_set(vs: &[VertexId]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Random connected graph: a random tree on `n` vertices plus each
/// remaining pair with probability `p`, under a random labelling.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        pairs.push((labels[i], labels[j]));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    SimpleGraph::from_edge_list(n, &pairs).expect("valid by construction")
}

fn random_allocation<R: Rng>(rng: &mut R, g: &SimpleGraph) -> BrushAllocation {
    BrushAllocation::from_counts(
        g.degrees()
            .iter()
            .map(|&d| if rng.gen_bool(0.5) { rng.gen_range(0..=d as u32) } else { 0 })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub edges: Vec<(usize, usize)>,
    pub n: usize,
    pub allocation: BrushAllocation,
    pub greedy_cleaned: bool,
    pub exhaustive_cleaned: bool,
}

/// Greedy min-index cleaning against exhaustive firing-order search on
/// random connected graphs with at most `max_n` vertices.
pub fn confluence_suite(seed: u64, samples: usize, max_n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut divergences = Vec::new();
    let mut cleaned = 0;
    for _ in 0..samples {
        let n = rng.gen_range(2..=max_n);
        let g = random_connected_graph(&mut rng, n, 0.35);
        let beta = random_allocation(&mut rng, &g);
        let greedy = clean(&g, &beta, &Policy::Greedy)?;
        let exhaustive = clean(&g, &beta, &Policy::exhaustive())?;
        greedy.check_identities(&g)?;
        exhaustive.check_identities(&g)?;
        cleaned += usize::from(exhaustive.is_cleaned());
        if greedy.is_cleaned() != exhaustive.is_cleaned() {
            divergences.push(Divergence {
                edges: g.edge_pairs(),
                n,
                allocation: beta,
                greedy_cleaned: greedy.is_cleaned(),
                exhaustive_cleaned: exhaustive.is_cleaned(),
            });
        }
    }
    let rows = vec![row(
        format!("{samples} graphs <= {max_n} vertices, seed {seed}"),
        "0 divergences",
        format!("{} divergences", divergences.len()),
    )];
    Ok(SuiteReport {
        suite: "confluence".into(),
        rows,
        detail: json!({"samples": samples, "cleanable": cleaned, "divergences": divergences}),
    })
}

/// A first cleaning followed by its reversal; checks both traces and that
/// the reversal cleans with the same brushes.
pub fn reversal_holds(g: &SimpleGraph, first: &CleaningTrace) -> Result<bool> {
    first.check_identities(g)?;
    if !first.is_cleaned() {
        return Err(Error::NotCleaned);
    }
    let second = reverse_clean(g, first)?;
    second.check_identities(g)?;
    Ok(second.is_cleaned() && second.initial.total() == first.initial.total())
}

/// Reversed second cleaning for the canonical minimal cleanings of
/// `J_2..J_jaco_max` and for optimal cleanings of random graphs.
pub fn reversibility_suite(seed: u64, samples: usize, jaco_max: usize, max_n: usize) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for n in 2..=jaco_max {
        let j = JacoGraph::build(n)?;
        let first = clean_directed(j.orientation(), &minimal_allocation_jaco(n)?)?;
        rows.push(row(format!("J_{n}"), "reversal cleans", verdict(reversal_holds(j.graph(), &first)?)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let n = rng.gen_range(2..=max_n);
        let g = random_connected_graph(&mut rng, n, 0.3);
        let best = brush_number_exact(&g)?;
        let first = clean(&g, &best.witness_allocation, &Policy::Greedy)?;
        if !first.is_cleaned() || !reversal_holds(&g, &first)? {
            failures += 1;
        }
    }
    rows.push(row(
        format!("{samples} random graphs <= {max_n} vertices, seed {seed}"),
        "0 failures",
        format!("{failures} failures"),
    ));
    Ok(SuiteReport { suite: "reversibility".into(), rows, detail: Value::Null })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "reversal cleans"
    } else {
        "reversal fails"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateReport {
    pub suites: Vec<SuiteReport>,
}

impl AggregateReport {
    pub fn disagreements(&self) -> usize {
        self.suites.iter().map(SuiteReport::disagreements).sum()
    }
}

pub fn verify_all(caps: &VerifyCaps) -> Result<AggregateReport> {
    Ok(AggregateReport {
        suites: vec![
            classics_suite()?,
            claim_suite(Claim::Thm21, caps.thm21_n_max)?,
            claim_suite(Claim::Thm22, caps.thm22_n_max)?,
            theorem31_suite(caps.thm31_n_max)?,
            confluence_suite(caps.seed, caps.samples, 6)?,
            reversibility_suite(caps.seed, caps.samples, 12, 10)?,
        ],
    })
}

/// Aligned text table, one line per row.
pub fn render_table(suites: &[SuiteReport]) -> String {
    let header = ["suite", "instance", "claimed", "computed", "status"];
    let mut lines: Vec<[String; 5]> = vec![header.map(String::from)];
    for s in suites {
        for r in &s.rows {
            lines.push([
                s.suite.clone(),
                r.label.clone(),
                r.claimed.clone(),
                r.computed.clone(),
                if r.agrees { "agree" } else { "DISAGREE" }.to_string(),
            ]);
        }
    }
    let widths: Vec<usize> = (0..5).map(|c| lines.iter().map(|l| l[c].len()).max().unwrap()).collect();
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_connected_and_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = a.gen_range(1..=9);
            let _: usize = b.gen_range(1..=9);
            let g = random_connected_graph(&mut a, n, 0.3);
            assert!(g.is_connected());
            assert_eq!(g, random_connected_graph(&mut b, n, 0.3));
        }
    }

    #[test]
    fn table_alignment() {
        let s = SuiteReport {
            suite: "x".into(),
            rows: vec![row("P_2", 1, 1), row("K_1,2", 2, 1)],
            detail: Value::Null,
        };
        let t = render_table(&[s]);
        assert!(t.contains("DISAGREE"));
        assert_eq!(t.lines().count(), 3);
    }

    #[test]
    fn small_suites_run() {
        let s = confluence_suite(1, 20, 5).unwrap();
        assert_eq!(s.disagreements(), 0);
        let s = reversibility_suite(1, 10, 6, 6).unwrap();
        assert_eq!(s.disagreements(), 0);
    }
}
