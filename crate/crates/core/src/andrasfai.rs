//! Generalised Andrásfai graphs and blow-ups.
//!
//! The usual presentation labels the vertices of `F^k_d` as `v_1..v_m`;
//! here vertex `v_i` is index `i - 1`. Differences `|i - j|` are unaffected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of vertices of `F^k_d`: `(2k-1)(d-1) + 2`.
pub fn andrasfai_order(k: usize, d: usize) -> usize {
    (2 * k - 1) * (d - 1) + 2
}

/// The generalised Andrásfai graph `F^k_d`: `(2k-1)(d-1)+2` vertices on a
/// line, `{i, j}` an edge iff `(k-1)(d-1)+1 <= |i-j| <= k(d-1)+1`.
///
/// It is `d`-regular with odd-girth `2k+1` for `d >= 2`; `F^k_1 = K_2` and
/// `F^k_2 = C_{2k+1}`.
pub fn generalized_andrasfai(k: usize, d: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("F(k,d) needs k >= 2, got k = {k}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter(format!("F(k,d) needs d >= 1, got d = {d}")));
    }
    let m = andrasfai_order(k, d);
    let lo = (k - 1) * (d - 1) + 1;
    let hi = k * (d - 1) + 1;
    Ok(Graph::from_fn(m, |i, j| (lo..=hi).contains(&(j - i))))
}

/// The Andrásfai graph `F_d = F^2_d` on `3d - 1` vertices.
pub fn andrasfai(d: usize) -> Result<Graph> {
    generalized_andrasfai(2, d)
}

/// Returns `d` if `g` is exactly `F^k_d` under the standard labelling.
pub fn andrasfai_index(g: &Graph, k: usize) -> Option<usize> {
    if k < 2 || g.n() < 2 {
        return None;
    }
    let span = 2 * k - 1;
    if !(g.n() - 2).is_multiple_of(span) {
        return None;
    }
    let d = (g.n() - 2) / span + 1;
    match generalized_andrasfai(k, d) {
        Ok(f) if f == *g => Some(d),
        _ => None,
    }
}

/// A blow-up of `base`: vertex `i` of the base is replaced by an independent
/// class of `multiplicities[i]` vertices and classes of adjacent base
/// vertices are joined completely.
///
/// Result vertices are numbered class by class in base order, so class `i`
/// occupies a contiguous index range. Zero multiplicities are allowed; the
/// class simply disappears and `class_of` is then not surjective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUp {
    pub base: Graph,
    pub multiplicities: Vec<usize>,
    pub result: Graph,
    /// Base vertex of every result vertex; a homomorphism `result -> base`.
    pub class_of: Vec<usize>,
}

impl BlowUp {
    /// Index range of class `i` inside `result`.
    pub fn class_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.multiplicities[..i].iter().sum();
        start..start + self.multiplicities[i]
    }

    pub fn is_balanced(&self) -> bool {
        self.multiplicities.windows(2).all(|w| w[0] == w[1])
    }
}

pub fn blow_up(base: &Graph, multiplicities: &[usize]) -> Result<BlowUp> {
    if multiplicities.len() != base.n() {
        return Err(Error::InvalidParameter(format!(
            "{} multiplicities given for a base graph on {} vertices",
            multiplicities.len(),
            base.n()
        )));
    }
    let class_of: Vec<usize> =
        multiplicities.iter().enumerate().flat_map(|(i, &t)| std::iter::repeat_n(i, t)).collect();
    let result = Graph::from_fn(class_of.len(), |x, y| base.has_edge(class_of[x], class_of[y]));
    Ok(BlowUp { base: base.clone(), multiplicities: multiplicities.to_vec(), result, class_of })
}

/// Blow-up with every class of size `t`.
pub fn balanced_blow_up(base: &Graph, t: usize) -> Result<BlowUp> {
    blow_up(base, &vec![t; base.n()])
}
