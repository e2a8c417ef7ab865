//! Circle representations of blow-ups of `F^k_d`.
//!
//! Vertices sit at distinct points of `R/Z` and `{x, y}` is an edge exactly
//! when the smaller angle between `x` and `y` exceeds `(k-1)/(2k-1)` of a
//! full turn.

use serde::{Deserialize, Serialize};

use crate::andrasfai::{andrasfai_index, BlowUp};
use crate::arith::{angle_fraction, member_weight2, CirclePoint, CircularInterval, EndMode, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson, VertexSubset};

/// `(k-1)/(2k-1)`, the adjacency threshold.
pub fn threshold(k: usize) -> Rational {
    Rational::new(k as i64 - 1, 2 * k as i64 - 1)
}

/// `1/(2k-1)`.
pub fn gon_step(k: usize) -> Rational {
    Rational::new(1, 2 * k as i64 - 1)
}

/// Vertices of `graph` placed on the circle.
///
/// Construction only checks that positions are distinct; the angle
/// criterion is checked by [`verify_angle_property`]. Arrangements produced
/// by [`represent_blow_up`] always satisfy it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArrangement {
    k: usize,
    graph: Graph,
    positions: Vec<CirclePoint>,
    sorted_order: Vec<usize>,
    /// `rank[v]` is the index of `v` in `sorted_order`.
    rank: Vec<usize>,
}

impl CircularArrangement {
    pub fn new(k: usize, graph: Graph, positions: Vec<CirclePoint>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("arrangement needs k >= 2, got {k}")));
        }
        if positions.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} positions for a graph on {} vertices",
                positions.len(),
                graph.n()
            )));
        }
        let mut sorted_order: Vec<usize> = (0..graph.n()).collect();
        sorted_order.sort_by(|&a, &b| positions[a].cmp(&positions[b]).then(a.cmp(&b)));
        if let Some(w) = sorted_order.windows(2).find(|w| positions[w[0]] == positions[w[1]]) {
            return Err(Error::InvalidParameter(format!(
                "vertices {} and {} share position {}",
                w[0], w[1], positions[w[0]]
            )));
        }
        let mut rank = vec![0; graph.n()];
        for (r, &v) in sorted_order.iter().enumerate() {
            rank[v] = r;
        }
        Ok(CircularArrangement { k, graph, positions, sorted_order, rank })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[CirclePoint] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> &CirclePoint {
        &self.positions[v]
    }

    /// Vertices in increasing position.
    pub fn sorted_order(&self) -> &[usize] {
        &self.sorted_order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn threshold(&self) -> Rational {
        threshold(self.k)
    }

    /// Every position shifted by `-offset`.
    pub fn rotated(&self, offset: &Rational) -> CircularArrangement {
        let neg = -offset;
        let positions = self.positions.iter().map(|p| p.shift(&neg)).collect();
        CircularArrangement::new(self.k, self.graph.clone(), positions).expect("rotation keeps positions distinct")
    }

    /// The reflection `x -> -x`; it preserves all angles.
    pub fn mirrored(&self) -> CircularArrangement {
        let positions = self.positions.iter().map(CirclePoint::mirrored).collect();
        CircularArrangement::new(self.k, self.graph.clone(), positions).expect("reflection keeps positions distinct")
    }

    /// The `count` vertices following sorted rank `start_rank` clockwise,
    /// starting with it.
    pub fn run_from_rank(&self, start_rank: usize, count: usize) -> Vec<usize> {
        let n = self.n();
        (0..count.min(n)).map(|i| self.sorted_order[(start_rank + i) % n]).collect()
    }

    pub fn to_json(&self) -> ArrangementJson {
        ArrangementJson { k: self.k, graph: self.graph.to_json(), positions: self.positions.clone() }
    }

    pub fn from_json(json: &ArrangementJson) -> Result<Self> {
        CircularArrangement::new(json.k, Graph::from_json(&json.graph)?, json.positions.clone())
    }
}

impl Serialize for CircularArrangement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CircularArrangement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = ArrangementJson::deserialize(deserializer)?;
        CircularArrangement::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// On-disk arrangement schema: `{"k": int, "graph": {...}, "positions": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub k: usize,
    pub graph: GraphJson,
    pub positions: Vec<CirclePoint>,
}

/// Places a blow-up of `F^k_d` on the circle.
///
/// With `m = |V(F^k_d)|` and `eps = 1/(2(2k-1)m)`, the `j`-th vertex of
/// class `i` (0-based) goes to `i/m + j*eps/t_i`, inside `[i/m, i/m + eps)`.
pub fn represent_blow_up(blow_up: &BlowUp, k: usize) -> Result<CircularArrangement> {
    if andrasfai_index(&blow_up.base, k).is_none() {
        return Err(Error::NotAndrasfai { k });
    }
    let m = blow_up.base.n() as i64;
    let eps = Rational::new(1, 2 * (2 * k as i64 - 1) * m);
    let mut positions = Vec::with_capacity(blow_up.result.n());
    for (i, &t) in blow_up.multiplicities.iter().enumerate() {
        let centre = Rational::new(i as i64, m);
        for j in 0..t {
            let offset = &eps * Rational::new(j as i64, t as i64);
            positions.push(CirclePoint::new(&centre + offset));
        }
    }
    CircularArrangement::new(k, blow_up.result.clone(), positions)
}

/// Outcome of [`verify_angle_property`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleCheck {
    pub holds: bool,
    /// First pair `(u, v)`, `u < v`, where adjacency and the angle test disagree.
    pub violation: Option<(usize, usize)>,
}

/// Checks `{x,y} ∈ E  <=>  angle(x,y) > (k-1)/(2k-1)` over all pairs.
pub fn verify_angle_property(arr: &CircularArrangement) -> AngleCheck {
    let c = arr.threshold();
    for u in 0..arr.n() {
        for v in u + 1..arr.n() {
            let far = angle_fraction(arr.position(u), arr.position(v)) > c;
            if far != arr.graph.has_edge(u, v) {
                return AngleCheck { holds: false, violation: Some((u, v)) };
            }
        }
    }
    AngleCheck { holds: true, violation: None }
}

/// `λ(I)` doubled: vertices inside count 2, on a half-weighted endpoint 1.
pub fn lambda_count(arr: &CircularArrangement, interval: &CircularInterval) -> u64 {
    arr.positions.iter().map(|p| member_weight2(interval, p)).sum()
}

/// `λ(I)` as an exact rational.
pub fn lambda(arr: &CircularArrangement, interval: &CircularInterval) -> Rational {
    Rational::new(lambda_count(arr, interval) as i64, 2)
}

/// Vertices with positive weight in `interval`.
pub fn vertices_in(arr: &CircularArrangement, interval: &CircularInterval) -> VertexSubset {
    let members = (0..arr.n()).filter(|&v| member_weight2(interval, arr.position(v)) > 0).collect::<Vec<_>>();
    VertexSubset::from_sorted(members)
}

/// Sorted rank of the first vertex at or clockwise after `xi`.
pub fn first_rank_at_or_after(arr: &CircularArrangement, xi: &CirclePoint) -> usize {
    let order = &arr.sorted_order;
    let r = order.partition_point(|&v| arr.positions[v] < *xi);
    if r == order.len() {
        0
    } else {
        r
    }
}

/// The vertex `z` such that the closed arc `[xi, z]` holds exactly
/// `floor(n/2)` vertices. A vertex sitting at `xi` itself is counted.
pub fn z_xi(arr: &CircularArrangement, xi: &CirclePoint) -> Result<usize> {
    let n = arr.n();
    if n < 2 {
        return Err(Error::Precondition(format!("z_xi needs n >= 2, got {n}")));
    }
    let start = first_rank_at_or_after(arr, xi);
    Ok(arr.sorted_order[(start + n / 2 - 1) % n])
}

/// The vertex `z'` such that `[z', xi]` holds exactly `floor(n/2)` vertices,
/// i.e. `z_xi` read counter-clockwise.
pub fn z_xi_backward(arr: &CircularArrangement, xi: &CirclePoint) -> Result<usize> {
    let n = arr.n();
    if n < 2 {
        return Err(Error::Precondition(format!("z_xi needs n >= 2, got {n}")));
    }
    let order = &arr.sorted_order;
    // last rank at or before xi
    let after = order.partition_point(|&v| arr.positions[v] <= *xi);
    let last = if after == 0 { n - 1 } else { after - 1 };
    Ok(order[(last + n - (n / 2 - 1)) % n])
}

/// Best-effort converse: reads twin classes in circular order and checks
/// whether they form `F^k_d` for some `d`, returning `(d, multiplicities)`.
///
/// Not every arrangement satisfying the angle criterion is recognised (for
/// instance when some classes of the underlying `F^k_d` are empty).
pub fn recognize_blow_up(arr: &CircularArrangement) -> Option<(usize, Vec<usize>)> {
    let n = arr.n();
    if n < 2 {
        return None;
    }
    let g = &arr.graph;
    // Maximal runs of consecutive (in circular order) vertices with equal rows.
    let order = &arr.sorted_order;
    let same = |a: usize, b: usize| g.row(a) == g.row(b);
    let cut = (0..n).find(|&r| !same(order[(r + n - 1) % n], order[r]))?;
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let v = order[(cut + i) % n];
        match runs.last_mut() {
            Some(run) if same(run[0], v) => run.push(v),
            _ => runs.push(vec![v]),
        }
    }
    let m = runs.len();
    let quotient = Graph::from_fn(m, |a, b| g.has_edge(runs[a][0], runs[b][0]));
    for shift in 0..m {
        let relabelled = Graph::from_fn(m, |a, b| quotient.has_edge((a + shift) % m, (b + shift) % m));
        if let Some(d) = andrasfai_index(&relabelled, arr.k) {
            let mult = (0..m).map(|a| runs[(a + shift) % m].len()).collect();
            return Some((d, mult));
        }
    }
    None
}

/// Convenience constructor for closed arcs of a given length from `start`.
pub fn arc(start: &CirclePoint, len: &Rational, start_mode: EndMode, end_mode: EndMode) -> CircularInterval {
    CircularInterval::from_length(start.clone(), len, start_mode, end_mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::andrasfai::{andrasfai, balanced_blow_up, blow_up, generalized_andrasfai};
    use crate::graph::cycle;

    fn p(a: i64, b: i64) -> CirclePoint {
        CirclePoint::from_ratio(a, b)
    }

    fn c5_blow_up(t: usize) -> CircularArrangement {
        represent_blow_up(&balanced_blow_up(&andrasfai(2).unwrap(), t).unwrap(), 2).unwrap()
    }

    #[test]
    fn unit_c5_positions_are_fifths() {
        let arr = c5_blow_up(1);
        let want: Vec<_> = (0..5).map(|i| p(i, 5)).collect();
        assert_eq!(arr.positions(), &want[..]);
        assert!(verify_angle_property(&arr).holds);
    }

    #[test]
    fn doubled_c5_class_spacing() {
        // eps = 1/(2*3*5) = 1/30, second vertex of a class at eps/2
        let arr = c5_blow_up(2);
        assert_eq!(arr.position(0), &p(0, 1));
        assert_eq!(arr.position(1), &p(1, 60));
        assert_eq!(arr.position(5), &p(2, 5).shift(&Rational::new(1, 60)));
        assert!(verify_angle_property(&arr).holds);
    }

    #[test]
    fn non_andrasfai_base_is_rejected() {
        let b = balanced_blow_up(&cycle(5).unwrap(), 2).unwrap();
        assert!(matches!(represent_blow_up(&b, 2), Err(Error::NotAndrasfai { k: 2 })));
        let b = balanced_blow_up(&generalized_andrasfai(3, 2).unwrap(), 1).unwrap();
        assert!(represent_blow_up(&b, 2).is_err());
        assert!(represent_blow_up(&b, 3).is_ok());
    }

    #[test]
    fn moved_vertex_violates_angle_property() {
        let arr = c5_blow_up(1);
        let mut pos = arr.positions().to_vec();
        // Vertex 2 next to vertex 0 while still adjacent to it.
        pos[2] = p(1, 10);
        let bad = CircularArrangement::new(2, arr.graph().clone(), pos).unwrap();
        let check = verify_angle_property(&bad);
        assert!(!check.holds);
        assert_eq!(check.violation, Some((0, 2)));
    }

    #[test]
    fn c5_on_fifth_roots() {
        let g = andrasfai(2).unwrap();
        let arr = CircularArrangement::new(2, g, (0..5).map(|i| p(i, 5)).collect()).unwrap();
        assert!(verify_angle_property(&arr).holds);
    }

    #[test]
    fn duplicate_positions_rejected() {
        let g = cycle(3).unwrap();
        assert!(CircularArrangement::new(2, g, vec![p(0, 1), p(1, 3), p(0, 1)]).is_err());
    }

    #[test]
    fn lambda_examples() {
        let arr = c5_blow_up(2);
        let i = CircularInterval::closed(p(0, 1), p(2, 5));
        assert_eq!(lambda_count(&arr, &i), 10);
        let full = CircularInterval::full(arr.position(3).clone(), EndMode::Half, EndMode::Half);
        assert_eq!(lambda_count(&arr, &full), 2 * 10);
        let empty = CircularInterval::closed(p(1, 7), p(1, 7));
        assert_eq!(lambda_count(&arr, &empty), 0);
        assert_eq!(vertices_in(&arr, &i).members(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn z_xi_examples() {
        let arr = c5_blow_up(2);
        let z = z_xi(&arr, &p(0, 1)).unwrap();
        assert_eq!(z, 4);
        assert_eq!(arr.position(z), &p(2, 5));
        let c = threshold(2);
        let lo = c.clone();
        let hi = Rational::new(2, 3);
        let v = arr.position(z).value().clone();
        assert!(v > lo && v < hi);
        let unit = c5_blow_up(1);
        assert_eq!(unit.position(z_xi(&unit, &p(0, 1)).unwrap()), &p(1, 5));
        // between vertices: starts at the next one
        assert_eq!(z_xi(&unit, &p(1, 10)).unwrap(), 2);
        assert_eq!(z_xi(&unit, &p(9, 10)).unwrap(), 1);
    }

    #[test]
    fn backward_z_counts_half_the_vertices() {
        let arr = c5_blow_up(2);
        for v in 0..arr.n() {
            let xi = arr.position(v).clone();
            let zb = z_xi_backward(&arr, &xi).unwrap();
            let i = CircularInterval::closed(arr.position(zb).clone(), xi);
            assert_eq!(lambda_count(&arr, &i), 10);
        }
        let xi = p(1, 7);
        let zb = z_xi_backward(&arr, &xi).unwrap();
        assert_eq!(lambda_count(&arr, &CircularInterval::closed(arr.position(zb).clone(), xi)), 10);
    }

    #[test]
    fn json_round_trip() {
        let arr = c5_blow_up(2);
        let s = serde_json::to_string(&arr).unwrap();
        assert!(s.starts_with(r#"{"k":2,"graph":{"n":10"#));
        assert!(s.contains(r#""1/60""#));
        let back: CircularArrangement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, arr);
    }

    #[test]
    fn recognizer_reads_back_multiplicities() {
        let base = generalized_andrasfai(3, 3).unwrap();
        let mult = vec![1, 2, 1, 3, 1, 1, 2, 1, 1, 1, 2, 1];
        let arr = represent_blow_up(&blow_up(&base, &mult).unwrap(), 3).unwrap();
        assert_eq!(recognize_blow_up(&arr), Some((3, mult)));
    }

    #[test]
    fn rotation_and_mirror_keep_angles() {
        let arr = c5_blow_up(2);
        assert!(verify_angle_property(&arr.rotated(&Rational::new(3, 7))).holds);
        assert!(verify_angle_property(&arr.mirrored()).holds);
    }
}
