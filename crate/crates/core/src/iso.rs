//! Exhaustive isomorphism test for small graphs.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const ISO_CAP: usize = 10;

/// True iff an edge-preserving bijection exists. Backtracking with degree
/// filtering; both graphs must have at most [`ISO_CAP`] vertices.
pub fn is_isomorphic_small(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    for graph in [g, h] {
        if graph.order() > ISO_CAP {
            return Err(Error::CapExceeded {
                what: "isomorphism check",
                size: graph.order(),
                cap: ISO_CAP,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }
    let (ag, ah) = (g.adjacency_masks(), h.adjacency_masks());
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    Ok(extend(0, &ag, &ah, &dg, &dh, &mut map, &mut used))
}

fn extend(
    next: usize,
    ag: &[u64],
    ah: &[u64],
    dg: &[usize],
    dh: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == map.len() {
        return true;
    }
    for cand in 0..used.len() {
        if used[cand] || dg[next] != dh[cand] {
            continue;
        }
        let consistent = (0..next).all(|prev| {
            let in_g = ag[next] >> prev & 1 == 1;
            let in_h = ah[cand] >> map[prev] & 1 == 1;
            in_g == in_h
        });
        if !consistent {
            continue;
        }
        map[next] = cand;
        used[cand] = true;
        if extend(next + 1, ag, ah, dg, dh, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[next] = usize::MAX;
    false
}
