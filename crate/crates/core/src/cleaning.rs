//! The brush-cleaning process.
//!
//! A vertex fires once: it sends one brush along every incident dirty edge,
//! cleaning those edges, and keeps any surplus. It may fire when it holds at
//! least as many brushes as it has dirty edges. In the directed variant a
//! vertex must also have no dirty in-arcs, so it only ever cleans out-arcs.

use std::collections::{BTreeMap, HashSet};

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::graph::{check_permutation, SimpleGraph, VertexId};
use crate::orientation::Orientation;

/// Exhaustive firing-order search is limited to this many vertices by default.
pub const EXHAUSTIVE_CAP: usize = 12;

/// Brush counts per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrushAllocation {
    counts: Vec<u32>,
}

impl BrushAllocation {
    pub fn zeros(n: usize) -> Self {
        BrushAllocation { counts: vec![0; n] }
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        BrushAllocation { counts }
    }

    /// From 1-based `(vertex, count)` pairs; unlisted vertices get 0.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<Self> {
        let mut counts = vec![0; n];
        for &(id, c) in pairs {
            if id == 0 || id > n {
                return Err(Error::VertexOutOfRange { id, n });
            }
            counts[id - 1] += c;
        }
        Ok(BrushAllocation { counts })
    }

    pub fn from_map(n: usize, map: &BTreeMap<usize, u32>) -> Result<Self> {
        let pairs: Vec<_> = map.iter().map(|(&k, &v)| (k, v)).collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn order(&self) -> usize {
        self.counts.len()
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.counts[v.index()]
    }

    pub fn set(&mut self, v: VertexId, count: u32) {
        self.counts[v.index()] = count;
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Vertices holding at least one brush.
    pub fn support(&self) -> Vec<VertexId> {
        (0..self.counts.len())
            .filter(|&i| self.counts[i] > 0)
            .map(VertexId::from_index)
            .collect()
    }

    /// Nonzero entries keyed by 1-based id.
    pub fn to_map(&self) -> BTreeMap<usize, u32> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
            .collect()
    }
}

impl Serialize for BrushAllocation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map = self.to_map();
        let mut out = serializer.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            out.serialize_entry(&k.to_string(), &v)?;
        }
        out.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringEvent {
    pub vertex: VertexId,
    /// Receivers, one brush each; the edge `{vertex, receiver}` is cleaned.
    pub dispatched: Vec<VertexId>,
    pub surplus_retained: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Cleaned,
    Stuck {
        /// Edges still dirty, as sorted 1-based pairs.
        dirty: Vec<(usize, usize)>,
        /// For explicit orderings: the first vertex that could not fire.
        blocked: Option<VertexId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleaningTrace {
    pub initial: BrushAllocation,
    pub events: Vec<FiringEvent>,
    pub outcome: Outcome,
    /// Brush counts after the last event.
    pub end: BrushAllocation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Policy {
    /// Fire the smallest-index eligible vertex until none is left.
    Greedy,
    /// Fire in this order, skipping vertices with no dirty edges left.
    Explicit(Vec<VertexId>),
    /// Search every firing order; `cap` bounds the vertex count.
    Exhaustive { cap: usize },
}

impl Policy {
    pub fn exhaustive() -> Self {
        Policy::Exhaustive { cap: EXHAUSTIVE_CAP }
    }
}

/// Mutable state of one cleaning run.
#[derive(Debug, Clone)]
pub struct CleaningState<'g> {
    graph: &'g SimpleGraph,
    dirty: Vec<bool>,
    dirty_degree: Vec<usize>,
    /// Dirty in-arcs per vertex; all zero in the undirected model.
    dirty_in: Vec<usize>,
    /// Head of each edge in the directed model.
    heads: Option<Vec<usize>>,
    brushes: Vec<u32>,
    fired: Vec<bool>,
}

impl<'g> CleaningState<'g> {
    pub fn new(graph: &'g SimpleGraph, initial: &BrushAllocation) -> Result<Self> {
        check_allocation(graph, initial)?;
        Ok(CleaningState {
            graph,
            dirty: vec![true; graph.size()],
            dirty_degree: graph.degrees(),
            dirty_in: vec![0; graph.order()],
            heads: None,
            brushes: initial.counts.clone(),
            fired: vec![false; graph.order()],
        })
    }

    pub fn directed(orientation: &'g Orientation, initial: &BrushAllocation) -> Result<Self> {
        let mut state = Self::new(orientation.base(), initial)?;
        state.dirty_in = orientation.in_degrees();
        state.heads = Some(orientation.index_arcs().map(|(_, h)| h).collect());
        Ok(state)
    }

    pub fn dirty_degree(&self, v: VertexId) -> usize {
        self.dirty_degree[v.index()]
    }

    pub fn brushes(&self, v: VertexId) -> u32 {
        self.brushes[v.index()]
    }

    pub fn has_fired(&self, v: VertexId) -> bool {
        self.fired[v.index()]
    }

    pub fn is_clean(&self) -> bool {
        self.dirty.iter().all(|d| !d)
    }

    pub fn is_eligible(&self, v: VertexId) -> bool {
        let i = v.index();
        !self.fired[i]
            && self.dirty_in[i] == 0
            && self.brushes[i] as usize >= self.dirty_degree[i]
    }

    /// Eligible and actually has something to clean.
    fn is_useful(&self, i: usize) -> bool {
        self.dirty_degree[i] > 0 && self.is_eligible(VertexId::from_index(i))
    }

    pub fn fire(&mut self, v: VertexId) -> Result<FiringEvent> {
        self.graph.check_vertex(v)?;
        if !self.is_eligible(v) {
            return Err(Error::Ineligible(v.get()));
        }
        let i = v.index();
        let mut dispatched = Vec::with_capacity(self.dirty_degree[i]);
        for &u in self.graph.neighbours(i) {
            let k = self.graph.edge_position(i, u).expect("neighbour edge");
            if !self.dirty[k] {
                continue;
            }
            self.dirty[k] = false;
            self.dirty_degree[i] -= 1;
            self.dirty_degree[u] -= 1;
            if let Some(heads) = &self.heads {
                debug_assert_eq!(heads[k], u);
                self.dirty_in[u] -= 1;
            }
            self.brushes[i] -= 1;
            self.brushes[u] += 1;
            dispatched.push(VertexId::from_index(u));
        }
        self.fired[i] = true;
        Ok(FiringEvent { vertex: v, dispatched, surplus_retained: self.brushes[i] })
    }

    fn dirty_pairs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edge_pairs()
            .into_iter()
            .zip(&self.dirty)
            .filter(|(_, &d)| d)
            .map(|(e, _)| e)
            .collect()
    }

    fn finish(self, initial: &BrushAllocation, events: Vec<FiringEvent>, blocked: Option<VertexId>) -> CleaningTrace {
        let outcome = if self.is_clean() {
            Outcome::Cleaned
        } else {
            Outcome::Stuck { dirty: self.dirty_pairs(), blocked }
        };
        CleaningTrace {
            initial: initial.clone(),
            events,
            outcome,
            end: BrushAllocation::from_counts(self.brushes),
        }
    }

    fn run_greedy(mut self, initial: &BrushAllocation) -> CleaningTrace {
        let mut events = Vec::new();
        while !self.is_clean() {
            let Some(i) = (0..self.graph.order()).find(|&i| self.is_useful(i)) else {
                break;
            };
            events.push(self.fire(VertexId::from_index(i)).expect("eligible"));
        }
        self.finish(initial, events, None)
    }
}

fn check_allocation(g: &SimpleGraph, beta: &BrushAllocation) -> Result<()> {
    if beta.order() != g.order() {
        return Err(Error::Precondition(format!(
            "allocation covers {} vertices, graph has {}",
            beta.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Runs the undirected cleaning process under `policy`.
pub fn clean(g: &SimpleGraph, beta: &BrushAllocation, policy: &Policy) -> Result<CleaningTrace> {
    let state = CleaningState::new(g, beta)?;
    match policy {
        Policy::Greedy => Ok(state.run_greedy(beta)),
        Policy::Explicit(order) => {
            check_permutation(g.order(), order)?;
            Ok(run_explicit(state, beta, order))
        }
        Policy::Exhaustive { cap } => {
            if g.order() > *cap {
                return Err(Error::CapExceeded {
                    what: "exhaustive cleaning",
                    size: g.order(),
                    cap: *cap,
                });
            }
            let order = exhaustive_order(g, beta);
            Ok(run_explicit(state, beta, &order))
        }
    }
}

fn run_explicit(mut state: CleaningState<'_>, beta: &BrushAllocation, order: &[VertexId]) -> CleaningTrace {
    let mut events = Vec::new();
    for &v in order {
        if state.dirty_degree(v) == 0 {
            continue;
        }
        if !state.is_eligible(v) {
            return state.finish(beta, events, Some(v));
        }
        events.push(state.fire(v).expect("eligible"));
    }
    state.finish(beta, events, None)
}

/// Depth-first search over sets of fired vertices. The set alone fixes the
/// state: an unfired vertex holds its initial brushes plus one per fired
/// neighbour, and an edge is dirty iff neither endpoint has fired. Returns
/// a successful firing order when one exists, else the order that cleaned
/// the most edges.
fn exhaustive_order(g: &SimpleGraph, beta: &BrushAllocation) -> Vec<VertexId> {
    struct Search<'a> {
        n: usize,
        adj: Vec<u64>,
        beta: &'a [u32],
        edges: &'a [(usize, usize)],
        seen: HashSet<u64>,
        path: Vec<usize>,
        best: (usize, Vec<usize>),
    }
    impl Search<'_> {
        fn cleaned(&self, fired: u64) -> usize {
            self.edges
                .iter()
                .filter(|&&(u, v)| (fired >> u | fired >> v) & 1 == 1)
                .count()
        }
        fn go(&mut self, fired: u64) -> bool {
            if !self.seen.insert(fired) {
                return false;
            }
            let done = self.cleaned(fired);
            if done > self.best.0 || self.best.1.is_empty() {
                self.best = (done, self.path.clone());
            }
            if done == self.edges.len() {
                return true;
            }
            for v in 0..self.n {
                if fired >> v & 1 == 1 {
                    continue;
                }
                let dirty = (self.adj[v] & !fired).count_ones();
                let held = self.beta[v] + (self.adj[v] & fired).count_ones();
                if dirty == 0 || held < dirty {
                    continue;
                }
                self.path.push(v);
                if self.go(fired | 1 << v) {
                    return true;
                }
                self.path.pop();
            }
            false
        }
    }
    let mut search = Search {
        n: g.order(),
        adj: g.adjacency_masks(),
        beta: beta.counts(),
        edges: g.index_edges(),
        seen: HashSet::new(),
        path: Vec::new(),
        best: (0, Vec::new()),
    };
    let prefix = if search.go(0) { search.path.clone() } else { search.best.1.clone() };
    // Complete to a permutation; the explicit run stops at the first
    // blocked vertex after the prefix.
    let mut used = vec![false; g.order()];
    let mut order: Vec<VertexId> = prefix
        .iter()
        .map(|&v| {
            used[v] = true;
            VertexId::from_index(v)
        })
        .collect();
    order.extend((0..g.order()).filter(|&v| !used[v]).map(VertexId::from_index));
    order
}

/// Directed cleaning: fire the smallest-index vertex that has no dirty
/// in-arcs and enough brushes for its out-arcs.
pub fn clean_directed(o: &Orientation, beta: &BrushAllocation) -> Result<CleaningTrace> {
    let state = CleaningState::directed(o, beta)?;
    Ok(state.run_greedy(beta))
}

impl CleaningTrace {
    pub fn is_cleaned(&self) -> bool {
        self.outcome == Outcome::Cleaned
    }

    pub fn end_configuration(&self) -> Result<&BrushAllocation> {
        if self.is_cleaned() {
            Ok(&self.end)
        } else {
            Err(Error::NotCleaned)
        }
    }

    pub fn firing_order(&self) -> Vec<VertexId> {
        self.events.iter().map(|e| e.vertex).collect()
    }

    /// Orientation along which brushes travelled. Requires a cleaned trace.
    pub fn induced_orientation(&self, g: &SimpleGraph) -> Result<Orientation> {
        if !self.is_cleaned() {
            return Err(Error::NotCleaned);
        }
        let arcs: Vec<(usize, usize)> = self
            .events
            .iter()
            .flat_map(|e| e.dispatched.iter().map(move |r| (e.vertex.get(), r.get())))
            .collect();
        Orientation::from_arcs(g.clone(), &arcs)
    }

    /// Replays the events from `initial` on `g`, checking each against the
    /// firing rule, and returns the resulting brush counts.
    pub fn replay(&self, g: &SimpleGraph) -> Result<BrushAllocation> {
        check_allocation(g, &self.initial)?;
        let mut brushes = self.initial.counts.clone();
        let mut dirty = vec![true; g.size()];
        let mut fired = vec![false; g.order()];
        for e in &self.events {
            g.check_vertex(e.vertex)?;
            let i = e.vertex.index();
            if std::mem::replace(&mut fired[i], true) {
                return Err(Error::InvalidOrder(format!("{} fires twice", e.vertex)));
            }
            let mut incident: Vec<usize> = g
                .neighbours(i)
                .iter()
                .copied()
                .filter(|&u| dirty[g.edge_position(i, u).unwrap()])
                .collect();
            let mut sent: Vec<usize> = e.dispatched.iter().map(|r| r.index()).collect();
            incident.sort_unstable();
            sent.sort_unstable();
            if incident != sent {
                return Err(Error::InvalidOrder(format!(
                    "{} must clean exactly its dirty edges",
                    e.vertex
                )));
            }
            if (brushes[i] as usize) < sent.len() {
                return Err(Error::Ineligible(e.vertex.get()));
            }
            for &u in &sent {
                dirty[g.edge_position(i, u).unwrap()] = false;
                brushes[u] += 1;
            }
            brushes[i] -= sent.len() as u32;
            if brushes[i] != e.surplus_retained {
                return Err(Error::InvalidOrder(format!("surplus mismatch at {}", e.vertex)));
            }
        }
        let all_clean = dirty.iter().all(|d| !d);
        if all_clean != self.is_cleaned() {
            return Err(Error::InvalidOrder("recorded outcome does not match replay".into()));
        }
        Ok(BrushAllocation::from_counts(brushes))
    }

    /// Conservation, faithful replay and, for cleaned traces, the identity
    /// `end(v) = initial(v) + indeg(v) - outdeg(v)` under the induced
    /// orientation.
    pub fn check_identities(&self, g: &SimpleGraph) -> Result<()> {
        if self.end.total() != self.initial.total() {
            return Err(Error::InvalidOrder("brush total not conserved".into()));
        }
        if self.replay(g)? != self.end {
            return Err(Error::InvalidOrder("replay does not reproduce end state".into()));
        }
        if self.is_cleaned() {
            let o = self.induced_orientation(g)?;
            let (outd, ind) = (o.out_degrees(), o.in_degrees());
            for i in 0..g.order() {
                let expect = i64::from(self.initial.counts[i]) + ind[i] as i64 - outd[i] as i64;
                if i64::from(self.end.counts[i]) != expect {
                    return Err(Error::InvalidOrder(format!(
                        "end-configuration identity fails at v{}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Second cleaning: start from the end configuration of `trace` and clean
/// along the reverse of the orientation the first cleaning induced.
pub fn reverse_clean(g: &SimpleGraph, trace: &CleaningTrace) -> Result<CleaningTrace> {
    let start = trace.end_configuration()?;
    let reversed = trace.induced_orientation(g)?.reversed();
    clean_directed(&reversed, start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids;
    use crate::jaco::JacoGraph;

    fn alloc(n: usize, pairs: &[(usize, u32)]) -> BrushAllocation {
        BrushAllocation::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn dirty_degrees() {
        let p3 = SimpleGraph::path(3);
        let mut s = CleaningState::new(&p3, &alloc(3, &[(1, 1)])).unwrap();
        assert_eq!(s.dirty_degree(VertexId::new(2)), 2);
        s.fire(VertexId::new(1)).unwrap();
        assert_eq!(s.dirty_degree(VertexId::new(2)), 1);
        s.fire(VertexId::new(2)).unwrap();
        assert!(s.is_clean());
        for v in p3.vertices() {
            assert_eq!(s.dirty_degree(v), 0);
        }
    }

    #[test]
    fn firing() {
        let p3 = SimpleGraph::path(3);
        let mut s = CleaningState::new(&p3, &alloc(3, &[(1, 1)])).unwrap();
        let e = s.fire(VertexId::new(1)).unwrap();
        assert_eq!(e.dispatched, ids(&[2]));
        assert_eq!(s.brushes(VertexId::new(2)), 1);
        assert!(matches!(s.fire(VertexId::new(1)), Err(Error::Ineligible(1))));

        let star = SimpleGraph::star(3);
        let mut s = CleaningState::new(&star, &alloc(4, &[(1, 3)])).unwrap();
        s.fire(VertexId::new(1)).unwrap();
        assert!(s.is_clean());
        assert!((2..=4).all(|i| s.brushes(VertexId::new(i)) == 1));

        // 5 brushes, 3 dirty edges: 2 stay behind
        let mut s = CleaningState::new(&star, &alloc(4, &[(1, 5)])).unwrap();
        let e = s.fire(VertexId::new(1)).unwrap();
        assert_eq!((e.dispatched.len(), e.surplus_retained), (3, 2));

        let mut s = CleaningState::new(&star, &alloc(4, &[(1, 2)])).unwrap();
        assert!(s.fire(VertexId::new(1)).is_err());
    }

    #[test]
    fn greedy_examples() {
        let j5 = JacoGraph::build(5).unwrap();
        let t = clean(j5.graph(), &alloc(5, &[(1, 1), (3, 1)]), &Policy::Greedy).unwrap();
        assert!(t.is_cleaned());

        let p3 = SimpleGraph::path(3);
        let t = clean(&p3, &alloc(3, &[(2, 1)]), &Policy::Greedy).unwrap();
        assert!(matches!(t.outcome, Outcome::Stuck { .. }));
        assert!(t.end_configuration().is_err());

        let c5 = SimpleGraph::cycle(5);
        let t = clean(&c5, &alloc(5, &[(1, 2)]), &Policy::Greedy).unwrap();
        assert!(t.is_cleaned());
    }

    #[test]
    fn explicit_and_exhaustive() {
        let p3 = SimpleGraph::path(3);
        let beta = alloc(3, &[(1, 1)]);
        let t = clean(&p3, &beta, &Policy::Explicit(ids(&[1, 2, 3]))).unwrap();
        assert!(t.is_cleaned());
        let t = clean(&p3, &beta, &Policy::Explicit(ids(&[2, 1, 3]))).unwrap();
        match t.outcome {
            Outcome::Stuck { blocked, dirty } => {
                assert_eq!(blocked, Some(VertexId::new(2)));
                assert_eq!(dirty, vec![(1, 2), (2, 3)]);
            }
            _ => panic!("expected stuck"),
        }
        assert!(clean(&p3, &beta, &Policy::Explicit(ids(&[1, 2]))).is_err());
        let t = clean(&p3, &beta, &Policy::exhaustive()).unwrap();
        assert!(t.is_cleaned());
        let t = clean(&p3, &alloc(3, &[(2, 1)]), &Policy::exhaustive()).unwrap();
        assert!(!t.is_cleaned());
        let big = SimpleGraph::path(13);
        assert!(matches!(
            clean(&big, &BrushAllocation::zeros(13), &Policy::exhaustive()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn directed_examples() {
        let j3 = JacoGraph::build(3).unwrap();
        let t = clean_directed(j3.orientation(), &alloc(3, &[(1, 1)])).unwrap();
        assert!(t.is_cleaned());

        let j9 = JacoGraph::build(9).unwrap();
        let beta = alloc(9, &[(1, 1), (3, 1), (4, 2), (5, 1), (6, 1)]);
        let t = clean_directed(j9.orientation(), &beta).unwrap();
        assert!(t.is_cleaned());
        assert_eq!(t.end.to_map(), BTreeMap::from([(7, 1), (8, 2), (9, 3)]));

        let c3 = Orientation::from_arcs(SimpleGraph::cycle(3), &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let t = clean_directed(&c3, &alloc(3, &[(1, 9), (2, 9), (3, 9)])).unwrap();
        assert!(t.events.is_empty());
        assert!(!t.is_cleaned());
    }

    #[test]
    fn end_configurations() {
        let j5 = JacoGraph::build(5).unwrap();
        let t = clean_directed(j5.orientation(), &alloc(5, &[(1, 1), (3, 1)])).unwrap();
        assert_eq!(t.end_configuration().unwrap().to_map(), BTreeMap::from([(5, 2)]));

        let p3 = SimpleGraph::path(3);
        let t = clean(&p3, &alloc(3, &[(1, 1)]), &Policy::Greedy).unwrap();
        assert_eq!(t.end_configuration().unwrap().to_map(), BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn reversal() {
        let j5 = JacoGraph::build(5).unwrap();
        let first = clean_directed(j5.orientation(), &alloc(5, &[(1, 1), (3, 1)])).unwrap();
        let second = reverse_clean(j5.graph(), &first).unwrap();
        assert!(second.is_cleaned());
        assert_eq!(second.end.support(), ids(&[1, 3]));

        for n in 2..=8 {
            let p = SimpleGraph::path(n);
            let first = clean(&p, &alloc(n, &[(1, 1)]), &Policy::Greedy).unwrap();
            assert_eq!(first.end.to_map(), BTreeMap::from([(n, 1)]));
            let back = reverse_clean(&p, &first).unwrap();
            assert!(back.is_cleaned());
            assert_eq!(back.end.to_map(), BTreeMap::from([(1, 1)]));
        }

        let c5 = SimpleGraph::cycle(5);
        let first = clean(&c5, &alloc(5, &[(1, 2)]), &Policy::Greedy).unwrap();
        // both brushes meet at the far side
        assert_eq!(first.end.support().len(), 1);
        let back = reverse_clean(&c5, &first).unwrap();
        assert!(back.is_cleaned());
        assert_eq!(back.end, first.initial);

        let stuck = clean(&p3(), &alloc(3, &[(2, 1)]), &Policy::Greedy).unwrap();
        assert!(matches!(reverse_clean(&p3(), &stuck), Err(Error::NotCleaned)));
    }

    fn p3() -> SimpleGraph {
        SimpleGraph::path(3)
    }

    #[test]
    fn identities_and_tampering() {
        let j9 = JacoGraph::build(9).unwrap();
        let beta = alloc(9, &[(1, 1), (3, 1), (4, 2), (5, 1), (6, 1)]);
        let t = clean(j9.graph(), &beta, &Policy::Greedy).unwrap();
        assert!(t.is_cleaned());
        t.check_identities(j9.graph()).unwrap();

        let mut bad = t.clone();
        bad.end.set(VertexId::new(9), 0);
        assert!(bad.check_identities(j9.graph()).is_err());

        let mut bad = t.clone();
        bad.events[0].dispatched.clear();
        assert!(bad.replay(j9.graph()).is_err());

        let mut bad = t;
        let first = bad.events[0].clone();
        bad.events.push(first);
        assert!(bad.replay(j9.graph()).is_err());
    }

    #[test]
    fn allocation_size_mismatch() {
        let p3 = SimpleGraph::path(3);
        assert!(clean(&p3, &BrushAllocation::zeros(2), &Policy::Greedy).is_err());
        assert!(BrushAllocation::from_pairs(3, &[(4, 1)]).is_err());
    }
}
