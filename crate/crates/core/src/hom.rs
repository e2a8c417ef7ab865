//! Graph homomorphism search.

use serde::{Deserialize, Serialize};

use crate::andrasfai::generalized_andrasfai;
use crate::error::{Error, Result};
use crate::graph::{iter_mask, Graph};

/// Size limits for [`find_homomorphism`]. The target is additionally
/// limited to 64 vertices since domains are single-word bitsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCaps {
    pub max_source: usize,
    pub max_target: usize,
}

impl Default for HomCaps {
    fn default() -> Self {
        HomCaps { max_source: 40, max_target: 40 }
    }
}

/// A vertex map `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    pub source: Graph,
    pub target: Graph,
    pub map: Vec<usize>,
}

impl Homomorphism {
    /// `other ∘ self`, mapping `self.source -> other.target`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        let map = self
            .map
            .iter()
            .map(|&a| other.map.get(a).copied().ok_or(Error::VertexOutOfRange { vertex: a, n: other.map.len() }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Homomorphism { source: self.source.clone(), target: other.target.clone(), map })
    }
}

/// `true` iff every source edge lands on a target edge.
pub fn verify_homomorphism(h: &Homomorphism) -> Result<bool> {
    if h.map.len() != h.source.n() {
        return Err(Error::InvalidParameter(format!(
            "map has {} entries for a source on {} vertices",
            h.map.len(),
            h.source.n()
        )));
    }
    for &a in &h.map {
        h.target.check_vertex(a)?;
    }
    Ok(h.source.edges().all(|(x, y)| h.target.has_edge(h.map[x], h.map[y])))
}

struct Search<'a> {
    g: &'a Graph,
    h_rows: Vec<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// AC-3 starting from the arcs into `changed`. Returns `false` on a wipe-out.
    fn propagate(&self, domains: &mut [u64], changed: &[usize]) -> bool {
        let mut queue: Vec<usize> = changed.to_vec();
        while let Some(z) = queue.pop() {
            let support = iter_mask(domains[z]).fold(0u64, |acc, b| acc | self.h_rows[b]);
            for y in self.g.neighbors(z) {
                let revised = domains[y] & support;
                if revised != domains[y] {
                    if revised == 0 {
                        return false;
                    }
                    domains[y] = revised;
                    queue.push(y);
                }
            }
        }
        true
    }

    fn run(&self, pos: usize, domains: &mut Vec<u64>) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        for a in iter_mask(domains[v]) {
            let mut next = domains.clone();
            next[v] = 1 << a;
            if self.propagate(&mut next, &[v]) && self.run(pos + 1, &mut next) {
                *domains = next;
                return true;
            }
        }
        false
    }
}

/// Finds a homomorphism `g -> h` by backtracking with arc consistency.
///
/// Source vertices are assigned by descending degree (ties by index) and
/// target values are tried in ascending order, so the witness is the first
/// one in that branch order. `Ok(None)` is backed by exhaustive search.
pub fn find_homomorphism(g: &Graph, h: &Graph, caps: HomCaps) -> Result<Option<Homomorphism>> {
    if g.n() > caps.max_source {
        return Err(Error::CapExceeded { what: "homomorphism source", size: g.n(), cap: caps.max_source });
    }
    let target_cap = caps.max_target.min(64);
    if h.n() > target_cap {
        return Err(Error::CapExceeded { what: "homomorphism target", size: h.n(), cap: target_cap });
    }
    if g.n() == 0 {
        return Ok(Some(Homomorphism { source: g.clone(), target: h.clone(), map: Vec::new() }));
    }
    if h.n() == 0 {
        return Ok(None);
    }
    let h_rows: Vec<u64> = (0..h.n()).map(|b| h.row64(b)).collect();
    let all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let non_isolated = (0..h.n()).filter(|&b| h_rows[b] != 0).fold(0u64, |m, b| m | 1 << b);
    let mut domains: Vec<u64> = (0..g.n()).map(|v| if g.degree(v) > 0 { non_isolated } else { all }).collect();
    if domains.contains(&0) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let search = Search { g, h_rows, order };
    let everything: Vec<usize> = (0..g.n()).collect();
    if !search.propagate(&mut domains, &everything) {
        return Ok(None);
    }
    if !search.run(0, &mut domains) {
        return Ok(None);
    }
    let map = domains.iter().map(|d| d.trailing_zeros() as usize).collect();
    Ok(Some(Homomorphism { source: g.clone(), target: h.clone(), map }))
}

/// Least `d` in `1..=d_max` with `g -> F^k_d`, if any.
pub fn min_andrasfai_index(g: &Graph, k: usize, d_max: usize, caps: HomCaps) -> Result<Option<usize>> {
    for d in 1..=d_max {
        let f = generalized_andrasfai(k, d)?;
        if find_homomorphism(g, &f, caps)?.is_some() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
