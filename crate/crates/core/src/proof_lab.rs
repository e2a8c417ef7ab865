//! Evaluates the counting lemmas behind the arc-half bound on concrete
//! circle representations.
//!
//! Unconditional statements are checked directly. Statements that need the
//! graph to be `(1/2, 1/(2(2k+1)^2))`-dense are checked as implications whose
//! hypothesis is the density condition restricted to the arc halves the
//! argument actually uses. Blow-ups of `F^k_d` are never dense, so on them
//! such hypotheses fail for at least one arc; the report names which.
//!
//! All counts are `λ` values (see [`crate::circle::lambda_count`]) and are
//! reported as exact rationals.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{CirclePoint, CircularInterval, EndMode, Rational};
use crate::circle::{
    first_rank_at_or_after, gon_step, lambda_count, threshold, vertices_in, z_xi, z_xi_backward, CircularArrangement,
};
use crate::density::sparse_half_bound;
use crate::error::{Error, Result};
use crate::graph::{independence_number, induced_edge_count, VertexSubset};

/// Parts of the interval-counting lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaPart {
    /// Arcs of length `<= (k-1)/(2k-1)` hold an independent set, so `λ <= α`.
    I,
    /// Arcs of length `<= 1/(2k-1)`: `λ <= (2k-3)α - (k-2)n`.
    Ii,
    /// Arcs of length `>= 1/(2k-1)`: `λ >= n - 2α`.
    Iii,
    /// `λ([ξ, z_ξ - c)) > 2α - (2k-1)/(2k+1)·n` when `[ξ, ξ+c]` holds `α` vertices.
    Iv,
    /// `λ((ξ-u, ξ+u)) > 4n/(2k+1) - 2λ((ξ+c, ξ-c))` with `u = 1/(2k-1)`.
    Vi,
    /// `λ([ξ, z_ξ - c)) > 2n/(2k+1) - 2λ((ξ+c, z_ξ])`.
    U4,
}

impl LemmaPart {
    pub fn id(self) -> &'static str {
        match self {
            LemmaPart::I => "i",
            LemmaPart::Ii => "ii",
            LemmaPart::Iii => "iii",
            LemmaPart::Iv => "iv",
            LemmaPart::Vi => "vi",
            LemmaPart::U4 => "u4",
        }
    }

    pub fn takes_interval(self) -> bool {
        matches!(self, LemmaPart::I | LemmaPart::Ii | LemmaPart::Iii)
    }
}

impl std::str::FromStr for LemmaPart {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "i" => LemmaPart::I,
            "ii" => LemmaPart::Ii,
            "iii" => LemmaPart::Iii,
            "iv" => LemmaPart::Iv,
            "vi" => LemmaPart::Vi,
            "u4" => LemmaPart::U4,
            _ => return Err(Error::Parse(format!("unknown lemma part `{s}`"))),
        })
    }
}

/// What a lemma part is evaluated on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaInput {
    Interval(CircularInterval),
    Point(CirclePoint),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub name: String,
    pub value: Rational,
}

/// Outcome of one check. `implication_held = !hypotheses_held || conclusion_held`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub hypotheses_held: bool,
    pub conclusion_held: bool,
    pub implication_held: bool,
    /// Names of the hypotheses that failed, e.g. a sparse arc half.
    pub failed_hypotheses: Vec<String>,
    pub trace: Vec<TraceEntry>,
}

impl CheckReport {
    fn new(check_id: &str) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            hypotheses_held: true,
            conclusion_held: true,
            implication_held: true,
            failed_hypotheses: Vec::new(),
            trace: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, value: Rational) {
        self.trace.push(TraceEntry { name: name.to_string(), value });
    }

    fn require(&mut self, name: &str, held: bool) {
        if !held {
            self.hypotheses_held = false;
            self.failed_hypotheses.push(name.to_string());
        }
    }

    fn conclude(mut self, held: bool) -> Self {
        self.conclusion_held = held;
        self.implication_held = !self.hypotheses_held || held;
        self
    }

    pub fn value(&self, name: &str) -> Option<&Rational> {
        self.trace.iter().find(|e| e.name == name).map(|e| &e.value)
    }
}

fn half(count2: u64) -> Rational {
    Rational::new(count2 as i64, 2)
}

fn int(v: usize) -> Rational {
    Rational::from(v)
}

/// A circle representation together with the quantities every check needs.
#[derive(Clone, Debug)]
pub struct ProofLab<'a> {
    arr: &'a CircularArrangement,
    alpha: usize,
    n: usize,
    k: usize,
    /// `(k-1)/(2k-1)`
    c: Rational,
    /// `1/(2k-1)`
    u: Rational,
}

impl<'a> ProofLab<'a> {
    pub fn new(arr: &'a CircularArrangement) -> Result<Self> {
        let (alpha, _) = independence_number(arr.graph())?;
        Ok(ProofLab { arr, alpha, n: arr.n(), k: arr.k(), c: threshold(arr.k()), u: gon_step(arr.k()) })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn arrangement(&self) -> &CircularArrangement {
        self.arr
    }

    fn lam(&self, i: &CircularInterval) -> Rational {
        half(lambda_count(self.arr, i))
    }

    fn interval(&self, from: &CirclePoint, to: &CirclePoint, sm: EndMode, em: EndMode) -> CircularInterval {
        CircularInterval::new(from.clone(), to.clone(), sm, em)
    }

    fn bound(&self) -> Rational {
        sparse_half_bound(self.k, self.n)
    }

    fn divisible(&self) -> bool {
        self.n.is_multiple_of(2 * (2 * self.k + 1))
    }

    fn sparse_alpha(&self) -> bool {
        2 * self.alpha < self.n
    }

    /// Edges spanned by the clockwise arc `[from, to]`.
    fn arc_edges(&self, from: &CirclePoint, to: &CirclePoint) -> usize {
        let members = vertices_in(self.arr, &CircularInterval::closed(from.clone(), to.clone()));
        induced_edge_count(self.arr.graph(), &members).expect("members are in range")
    }

    fn require_divisible(&self) -> Result<()> {
        if self.divisible() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("2(2k+1) = {} does not divide n = {}", 2 * (2 * self.k + 1), self.n)))
        }
    }

    /// Requires the forward arc half at `xi` to span more than the bound.
    fn require_dense_half(&self, report: &mut CheckReport, label: &str, xi: &CirclePoint) -> usize {
        let z = z_xi(self.arr, xi).expect("n >= 2");
        let edges = self.arc_edges(xi, self.arr.position(z));
        report.record(&format!("edges[{label}, z_{label}]"), int(edges));
        report.require(&format!("dense arc half [{label}, z_{label}] at {xi}"), int(edges) > self.bound());
        z
    }

    /// Requires the backward arc half ending at `xi` to span more than the bound.
    fn require_dense_back_half(&self, report: &mut CheckReport, label: &str, xi: &CirclePoint) -> usize {
        let z = z_xi_backward(self.arr, xi).expect("n >= 2");
        let edges = self.arc_edges(self.arr.position(z), xi);
        report.record(&format!("edges[z'_{label}, {label}]"), int(edges));
        report.require(&format!("dense arc half [z'_{label}, {label}] at {xi}"), int(edges) > self.bound());
        z
    }

    pub fn check(&self, part: LemmaPart, input: &LemmaInput) -> Result<CheckReport> {
        match (part.takes_interval(), input) {
            (true, LemmaInput::Interval(i)) => Ok(self.check_interval(part, i)),
            (false, LemmaInput::Point(xi)) => {
                if self.n < 2 {
                    return Err(Error::Precondition("lemma parts iv, vi, u4 need n >= 2".into()));
                }
                self.require_divisible()?;
                Ok(match part {
                    LemmaPart::Iv => self.check_iv(xi),
                    LemmaPart::Vi => self.check_vi(xi),
                    _ => self.check_u4(xi),
                })
            }
            (true, _) => Err(Error::InvalidParameter(format!("part {} takes an interval", part.id()))),
            (false, _) => Err(Error::InvalidParameter(format!("part {} takes a point", part.id()))),
        }
    }

    fn check_interval(&self, part: LemmaPart, i: &CircularInterval) -> CheckReport {
        let mut r = CheckReport::new(part.id());
        let len = i.length();
        let lam = self.lam(i);
        let (alpha, n, k) = (int(self.alpha), int(self.n), self.k as i64);
        r.record("length", len.clone());
        r.record("lambda", lam.clone());
        r.record("alpha", alpha.clone());
        match part {
            LemmaPart::I => {
                r.require("length <= (k-1)/(2k-1)", len <= self.c);
                let edges = induced_edge_count(self.arr.graph(), &vertices_in(self.arr, i)).expect("in range");
                r.record("edges_inside", int(edges));
                r.conclude(edges == 0 && lam <= alpha)
            }
            LemmaPart::Ii => {
                r.require("length <= 1/(2k-1)", len <= self.u);
                let rhs = Rational::integer(2 * k - 3) * &alpha - Rational::integer(k - 2) * &n;
                r.record("rhs", rhs.clone());
                r.conclude(lam <= rhs)
            }
            _ => {
                r.require("length >= 1/(2k-1)", len >= self.u);
                let rhs = &n - Rational::integer(2) * &alpha;
                r.record("rhs", rhs.clone());
                r.conclude(lam >= rhs)
            }
        }
    }

    fn point_report(&self, id: &str, xi: &CirclePoint) -> CheckReport {
        let mut r = CheckReport::new(id);
        r.record("xi", xi.value().clone());
        r.record("alpha", int(self.alpha));
        r.record("bound", self.bound());
        r
    }

    /// `λ([ξ, z-c))` and `λ((ξ+c, z])`.
    fn u4_terms(&self, xi: &CirclePoint, z: usize) -> (Rational, Rational) {
        let zc = self.arr.position(z).shift(&-&self.c);
        let left = self.lam(&self.interval(xi, &zc, EndMode::Closed, EndMode::Open));
        let right = self.lam(&self.interval(&xi.shift(&self.c), self.arr.position(z), EndMode::Open, EndMode::Closed));
        (left, right)
    }

    fn check_u4(&self, xi: &CirclePoint) -> CheckReport {
        let mut r = self.point_report("u4", xi);
        let z = self.require_dense_half(&mut r, "xi", xi);
        let (left, right) = self.u4_terms(xi, z);
        let n = int(self.n);
        let q = Rational::integer(2 * self.k as i64 + 1);
        let rhs = Rational::integer(2) * &n / &q - Rational::integer(2) * &right;
        r.record("z_xi", self.arr.position(z).value().clone());
        r.record("lambda[xi, z-c)", left.clone());
        r.record("lambda(xi+c, z]", right);
        r.record("rhs", rhs.clone());
        self.record_claim_sum(&mut r, xi, z);
        r.conclude(left > rhs)
    }

    /// Sum over `x ∈ V ∩ [ξ, z-c)` of `λ(<x, x+c>) - (2k-1)n / (2(2k+1))`.
    /// Under the dense-arc hypothesis (and `α < n/2`) it is negative.
    fn record_claim_sum(&self, r: &mut CheckReport, xi: &CirclePoint, z: usize) {
        let zc = self.arr.position(z).shift(&-&self.c);
        let members = vertices_in(self.arr, &self.interval(xi, &zc, EndMode::Closed, EndMode::Open));
        let per = Rational::new((2 * self.k as i64 - 1) * self.n as i64, 2 * (2 * self.k as i64 + 1));
        let mut sum = Rational::zero();
        for &x in members.members() {
            let p = self.arr.position(x);
            sum = sum + self.lam(&CircularInterval::new(p.clone(), p.shift(&self.c), EndMode::Half, EndMode::Half))
                - &per;
        }
        let applicable = r.hypotheses_held && self.sparse_alpha() && self.n.is_multiple_of(2);
        let held = sum.is_negative();
        r.record("claim_sum", sum);
        r.record("claim_hypotheses", Rational::integer(applicable as i64));
        r.record("claim_held", Rational::integer(held as i64));
        r.record("claim_implication", Rational::integer((!applicable || held) as i64));
    }

    fn check_iv(&self, xi: &CirclePoint) -> CheckReport {
        let mut r = self.point_report("iv", xi);
        let base = self.lam(&CircularInterval::closed(xi.clone(), xi.shift(&self.c)));
        r.record("lambda[xi, xi+c]", base.clone());
        r.require("lambda[xi, xi+c] = alpha", base == int(self.alpha));
        r.require("alpha < n/2", self.sparse_alpha());
        let z = self.require_dense_half(&mut r, "xi", xi);
        let (left, _) = self.u4_terms(xi, z);
        let q = Rational::integer(2 * self.k as i64 + 1);
        let rhs = Rational::integer(2) * int(self.alpha) - Rational::integer(2 * self.k as i64 - 1) * int(self.n) / q;
        r.record("lambda[xi, z-c)", left.clone());
        r.record("rhs", rhs.clone());
        r.conclude(left > rhs)
    }

    fn check_vi(&self, xi: &CirclePoint) -> CheckReport {
        let mut r = self.point_report("vi", xi);
        r.require("alpha < n/2", self.sparse_alpha());
        self.require_dense_half(&mut r, "xi", xi);
        self.require_dense_back_half(&mut r, "xi", xi);
        let around = self.lam(&CircularInterval::open(xi.shift(&-&self.u), xi.shift(&self.u)));
        let opposite = self.lam(&CircularInterval::open(xi.shift(&self.c), xi.shift(&-&self.c)));
        let q = Rational::integer(2 * self.k as i64 + 1);
        let rhs = Rational::integer(4) * int(self.n) / q - Rational::integer(2) * &opposite;
        r.record("lambda(xi-u, xi+u)", around.clone());
        r.record("lambda(xi+c, xi-c)", opposite);
        r.record("rhs", rhs.clone());
        r.conclude(around > rhs)
    }
}

/// Evaluates one lemma part on `arr`.
pub fn check_useful_lemma(arr: &CircularArrangement, part: LemmaPart, input: &LemmaInput) -> Result<CheckReport> {
    ProofLab::new(arr)?.check(part, input)
}

/// Both sides of the counting identity
/// `Σ_x (λ<x-c, x> + λ<x, x+c>) = Σ_x (λ<x, x+1> - λ<x+c, x+c+1/(2k-1)>)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

pub fn partition_identity_check(arr: &CircularArrangement) -> IdentityReport {
    let c = threshold(arr.k());
    let u = gon_step(arr.k());
    let mut lhs2 = 0i64;
    let mut rhs2 = 0i64;
    for x in arr.positions() {
        let back = CircularInterval::half(x.shift(&-&c), x.clone());
        let fwd = CircularInterval::half(x.clone(), x.shift(&c));
        lhs2 += (lambda_count(arr, &back) + lambda_count(arr, &fwd)) as i64;
        let full = CircularInterval::full(x.clone(), EndMode::Half, EndMode::Half);
        let opp = CircularInterval::half(x.shift(&c), x.shift(&(&c + &u)));
        rhs2 += lambda_count(arr, &full) as i64 - lambda_count(arr, &opp) as i64;
    }
    let lhs = Rational::new(lhs2, 2);
    let rhs = Rational::new(rhs2, 2);
    IdentityReport { holds: lhs == rhs, lhs, rhs }
}

/// The orbit of `x -> z_x - (k-1)/(2k-1)` on `V* = V - (k-1)/(2k-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingTrace {
    pub start: CirclePoint,
    /// Points before the orbit enters its cycle.
    pub prefix: Vec<CirclePoint>,
    /// One period `x(0), ..., x(m-1)`; the map sends `x(m-1)` back to `x(0)`.
    pub cycle: Vec<CirclePoint>,
    pub period: usize,
    /// Total clockwise distance travelled over one period.
    pub winding: Rational,
    /// Iterations until the first repeat.
    pub iterations: usize,
    /// Every vertex lies in exactly `winding` of the arcs `[x(i), x(i+1))`.
    pub coverage_uniform: bool,
}

/// Follows `x(i+1) = z_{x(i)} - (k-1)/(2k-1)` from `x0` until it repeats.
pub fn winding_trace(arr: &CircularArrangement, x0: &CirclePoint) -> Result<WindingTrace> {
    let n = arr.n();
    let c = threshold(arr.k());
    let in_v_star = |x: &CirclePoint| {
        let y = x.shift(&c);
        arr.positions().contains(&y)
    };
    if !in_v_star(x0) {
        return Err(Error::Precondition(format!("start {x0} is not a vertex position minus (k-1)/(2k-1)")));
    }
    let (alpha, _) = independence_number(arr.graph())?;
    if 2 * alpha >= n {
        return Err(Error::Precondition(format!("winding needs alpha < n/2, got alpha = {alpha}, n = {n}")));
    }
    let neg_c = -&c;
    let mut seen: BTreeMap<CirclePoint, usize> = BTreeMap::new();
    let mut seq: Vec<CirclePoint> = Vec::new();
    let mut x = x0.clone();
    while !seen.contains_key(&x) {
        seen.insert(x.clone(), seq.len());
        seq.push(x.clone());
        let z = z_xi(arr, &x)?;
        x = arr.position(z).shift(&neg_c);
    }
    let first = seen[&x];
    let cycle: Vec<CirclePoint> = seq[first..].to_vec();
    let m = cycle.len();
    let mut winding = Rational::zero();
    let mut cover = vec![0usize; n];
    for i in 0..m {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % m];
        winding = winding + a.forward_to(b);
        let arc = CircularInterval::new(a.clone(), b.clone(), EndMode::Closed, EndMode::Open);
        for v in vertices_in(arr, &arc).members() {
            cover[*v] += 1;
        }
    }
    let w = winding.to_i64().map(|w| w as usize);
    let coverage_uniform = w.is_some_and(|w| cover.iter().all(|&c| c == w));
    Ok(WindingTrace {
        start: x0.clone(),
        prefix: seq[..first].to_vec(),
        cycle,
        period: m,
        winding,
        iterations: seq.len(),
        coverage_uniform,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub held: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledInterval {
    pub interval: CircularInterval,
    pub lambda: Rational,
}

/// The two families of pairwise disjoint intervals inside `[b_1, b_{k-1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalFamilies {
    pub even: Vec<LabelledInterval>,
    pub odd: Vec<LabelledInterval>,
    /// Each family is pairwise disjoint and inside `[b_1, b_{k-1}]`.
    pub disjoint: bool,
    /// `2λ([b_1, b_{k-1}]) >= λ([b_1,b_2)) + Σ λ(I_i) + λ((b_{k-2}, b_{k-1}])`.
    pub sum_held: bool,
}

/// Geometry of the large-independent-set case on a rotated arrangement.
/// All points are in the rotated frame where `[0, (k-1)/(2k-1)]` holds a
/// maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonReport {
    pub k: usize,
    pub n: usize,
    pub alpha: usize,
    /// Vertex whose position was rotated to 0.
    pub mis_start: usize,
    pub rotation: Rational,
    pub z0: usize,
    pub z_prime: usize,
    pub z0_position: CirclePoint,
    pub z_prime_position: CirclePoint,
    /// `b_0, ..., b_{2k-2}`, consecutive points `1/(2k-1)` apart, `b_k = z_0`.
    pub b: Vec<CirclePoint>,
    pub lambda_z0_zprime: Rational,
    /// `λ((z_0, z')) = α`.
    pub identity_held: bool,
    /// `[b_k, b_0] ⊆ [z_0, z']`.
    pub gon_fits: bool,
    pub lambda_b1_bk1: Rational,
    /// `λ((b_{k+1}, b_{2k-2})) <= 2α - (n - λ([b_1, b_{k-1}]))`; `None` for `k = 2`
    /// where the gon has too few points for the statement.
    pub g2: Option<InequalityCheck>,
    /// `λ([b_1, b_{k-1}]) < (4k-2)/(2k+1) n - 3α` under dense arc halves at `0` and `(k-1)/(2k-1)`.
    pub g1: CheckReport,
    /// `(4k-5)/(2k+1) n - 2α - λ([b_1,b_{k-1}]) < λ((b_{k+1}, b_{2k-2}))`, for `k >= 4`.
    pub g3: Option<CheckReport>,
    pub families: Option<IntervalFamilies>,
}

/// Least vertex `p` with `λ([p, p+c]) = α`: the start of the minimal arc of
/// a maximum independent set, minimised over vertex index.
fn mis_start(arr: &CircularArrangement, alpha: usize) -> Option<usize> {
    let c = threshold(arr.k());
    (0..arr.n()).find(|&p| {
        let pos = arr.position(p);
        lambda_count(arr, &CircularInterval::closed(pos.clone(), pos.shift(&c))) == 2 * alpha as u64
    })
}

pub fn gon_geometry(arr: &CircularArrangement) -> Result<GonReport> {
    let n = arr.n();
    let k = arr.k();
    let (alpha, _) = independence_number(arr.graph())?;
    if 2 * alpha >= n {
        return Err(Error::Precondition(format!("needs alpha < n/2, got alpha = {alpha}, n = {n}")));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("needs n even, got {n}")));
    }
    let p = mis_start(arr, alpha)
        .ok_or_else(|| Error::Precondition("no arc of length (k-1)/(2k-1) holds a maximum independent set".into()))?;
    let rotation = arr.position(p).value().clone();
    let rot = arr.rotated(&rotation);
    let lab = ProofLab { arr: &rot, alpha, n, k, c: threshold(k), u: gon_step(k) };
    let c = lab.c.clone();
    let u = lab.u.clone();
    let zero = CirclePoint::zero();
    let c_pt = CirclePoint::new(c.clone());

    let z0 = z_xi(&rot, &zero)?;
    let zp = z_xi_backward(&rot, &c_pt)?;
    let z0_pos = rot.position(z0).clone();
    let zp_pos = rot.position(zp).clone();
    let lambda_z0_zprime = lab.lam(&CircularInterval::open(z0_pos.clone(), zp_pos.clone()));
    let identity_held = lambda_z0_zprime == int(alpha);

    let gon = 2 * k - 1;
    let b0 = z0_pos.shift(&c);
    let b: Vec<CirclePoint> = (0..gon).map(|i| b0.shift(&(&u * Rational::from(i)))).collect();
    let gon_fits = z0_pos.forward_to(&zp_pos) >= c;
    let bi = |i: usize| b[i % gon].clone();
    let lambda_b1_bk1 = lab.lam(&CircularInterval::closed(bi(1), bi(k - 1)));
    let (na, nn) = (int(alpha), int(n));
    let q = Rational::integer(2 * k as i64 + 1);

    // λ((b_{k+1}, b_{2k-2})); empty when k + 1 >= 2k - 2.
    let upper_gap = if k >= 4 { lab.lam(&CircularInterval::open(bi(k + 1), bi(2 * k - 2))) } else { Rational::zero() };

    let g2 = (k >= 3).then(|| {
        let rhs = Rational::integer(2) * &na - (&nn - &lambda_b1_bk1);
        InequalityCheck { lhs: upper_gap.clone(), rhs: rhs.clone(), held: upper_gap <= rhs }
    });

    let mut g1 = CheckReport::new("g1");
    g1.record("alpha", na.clone());
    g1.record("bound", lab.bound());
    g1.require("2(2k+1) | n", lab.divisible());
    lab.require_dense_half(&mut g1, "0", &zero);
    lab.require_dense_back_half(&mut g1, "c", &c_pt);
    let g1_rhs = Rational::integer(4 * k as i64 - 2) * &nn / &q - Rational::integer(3) * &na;
    g1.record("lambda[b1, b_{k-1}]", lambda_b1_bk1.clone());
    g1.record("rhs", g1_rhs.clone());
    let g1 = g1.conclude(lambda_b1_bk1 < g1_rhs);

    let g3 = (k >= 4).then(|| {
        let mut r = CheckReport::new("g3");
        r.record("alpha", na.clone());
        r.record("bound", lab.bound());
        r.require("2(2k+1) | n", lab.divisible());
        for i in 2..=k - 2 {
            let label = format!("b{i}");
            lab.require_dense_half(&mut r, &label, &bi(i));
            lab.require_dense_back_half(&mut r, &label, &bi(i));
        }
        let lhs = Rational::integer(4 * k as i64 - 5) * &nn / &q - Rational::integer(2) * &na - &lambda_b1_bk1;
        r.record("lhs", lhs.clone());
        r.record("lambda(b_{k+1}, b_{2k-2})", upper_gap.clone());
        r.conclude(lhs < upper_gap)
    });

    let families = (k >= 3).then(|| interval_families(&lab, &b));

    Ok(GonReport {
        k,
        n,
        alpha,
        mis_start: p,
        rotation,
        z0,
        z_prime: zp,
        z0_position: z0_pos,
        z_prime_position: zp_pos,
        b,
        lambda_z0_zprime,
        identity_held,
        gon_fits,
        lambda_b1_bk1,
        g2,
        g1,
        g3,
        families,
    })
}

fn interval_families(lab: &ProofLab<'_>, b: &[CirclePoint]) -> IntervalFamilies {
    let k = lab.k;
    let labelled = |i: CircularInterval| LabelledInterval { lambda: lab.lam(&i), interval: i };
    let mut even = Vec::new();
    let mut odd = Vec::new();
    odd.push(labelled(CircularInterval::new(b[1].clone(), b[2].clone(), EndMode::Closed, EndMode::Open)));
    for i in 2..=k.saturating_sub(2) {
        let iv = labelled(CircularInterval::open(b[i - 1].clone(), b[i + 1].clone()));
        if i % 2 == 0 {
            even.push(iv);
        } else {
            odd.push(iv);
        }
    }
    let last = labelled(CircularInterval::new(b[k - 2].clone(), b[k - 1].clone(), EndMode::Open, EndMode::Closed));
    if k.is_multiple_of(2) {
        odd.push(last);
    } else {
        even.push(last);
    }
    let container = CircularInterval::closed(b[1].clone(), b[k - 1].clone());
    let disjoint = family_disjoint(&even, &container) && family_disjoint(&odd, &container);
    let total: Rational = even.iter().chain(&odd).fold(Rational::zero(), |acc, l| acc + &l.lambda);
    let sum_held = Rational::integer(2) * lab.lam(&container) >= total;
    IntervalFamilies { even, odd, disjoint, sum_held }
}

/// Pairwise disjointness and containment, reading every arc as a segment of
/// the line obtained by cutting the circle at the container's start.
fn family_disjoint(family: &[LabelledInterval], container: &CircularInterval) -> bool {
    let origin = &container.start;
    let cut = |p: &CirclePoint| origin.forward_to(p);
    let limit = container.length();
    let mut segs: Vec<(Rational, bool, Rational, bool)> = family
        .iter()
        .map(|l| {
            let i = &l.interval;
            let a = cut(&i.start);
            let b = &a + i.length();
            (a, i.start_mode != EndMode::Open, b, i.end_mode != EndMode::Open)
        })
        .collect();
    if segs.iter().any(|(_, _, b, _)| *b > limit) {
        return false;
    }
    segs.sort_by(|x, y| x.0.cmp(&y.0));
    segs.windows(2).all(|w| {
        let (_, _, end, end_closed) = &w[0];
        let (start, start_closed, _, _) = &w[1];
        end < start || (end == start && !(*end_closed && *start_closed))
    })
}

impl IdentityReport {
    pub fn to_check(&self) -> CheckReport {
        let mut r = CheckReport::new("identity");
        r.record("lhs", self.lhs.clone());
        r.record("rhs", self.rhs.clone());
        r.conclude(self.holds)
    }
}

impl WindingTrace {
    /// Holds when the orbit has period at least 2 and tiles the circle evenly.
    pub fn to_check(&self) -> CheckReport {
        let mut r = CheckReport::new("winding");
        r.record("start", self.start.value().clone());
        r.record("period", int(self.period));
        r.record("winding", self.winding.clone());
        r.record("iterations", int(self.iterations));
        r.conclude(self.period >= 2 && self.winding.is_integer() && self.coverage_uniform)
    }
}

impl GonReport {
    /// The unconditional statements and the implications, one report each.
    pub fn to_checks(&self) -> Vec<CheckReport> {
        let mut id = CheckReport::new("gon_identity");
        id.record("rotation", self.rotation.clone());
        id.record("alpha", int(self.alpha));
        id.record("z0", self.z0_position.value().clone());
        id.record("z_prime", self.z_prime_position.value().clone());
        id.record("lambda(z0, z')", self.lambda_z0_zprime.clone());
        let mut out = vec![id.conclude(self.identity_held)];
        let mut fits = CheckReport::new("gon_fits");
        for (i, b) in self.b.iter().enumerate() {
            fits.record(&format!("b{i}"), b.value().clone());
        }
        out.push(fits.conclude(self.gon_fits));
        if let Some(g2) = &self.g2 {
            let mut r = CheckReport::new("g2");
            r.record("lambda[b1, b_{k-1}]", self.lambda_b1_bk1.clone());
            r.record("lhs", g2.lhs.clone());
            r.record("rhs", g2.rhs.clone());
            out.push(r.conclude(g2.held));
        }
        if let Some(f) = &self.families {
            let mut r = CheckReport::new("families");
            for (name, fam) in [("even", &f.even), ("odd", &f.odd)] {
                for (j, l) in fam.iter().enumerate() {
                    r.record(&format!("{name}[{j}]"), l.lambda.clone());
                }
            }
            out.push(r.conclude(f.disjoint && f.sum_held));
        }
        out.push(self.g1.clone());
        out.extend(self.g3.clone());
        out
    }
}

/// Random inputs for the checks: points are vertex positions, positions
/// offset by the threshold, or random rationals; intervals get random
/// lengths and endpoint modes.
pub mod sampling {
    use super::*;

    const GRID: i64 = 997;

    pub fn random_point<R: Rng + ?Sized>(rng: &mut R, arr: &CircularArrangement) -> CirclePoint {
        let n = arr.n();
        match rng.gen_range(0..4) {
            0 | 1 if n > 0 => arr.position(rng.gen_range(0..n)).clone(),
            2 if n > 0 => {
                let c = threshold(arr.k());
                let p = arr.position(rng.gen_range(0..n));
                if rng.gen_bool(0.5) {
                    p.shift(&c)
                } else {
                    p.shift(&-c)
                }
            }
            _ => CirclePoint::from_ratio(rng.gen_range(0..GRID), GRID),
        }
    }

    pub fn random_mode<R: Rng + ?Sized>(rng: &mut R) -> EndMode {
        match rng.gen_range(0..3) {
            0 => EndMode::Closed,
            1 => EndMode::Open,
            _ => EndMode::Half,
        }
    }

    /// Random length in `[lo, hi]`: an endpoint with probability 1/4 each,
    /// otherwise a grid point.
    pub fn random_length<R: Rng + ?Sized>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
        match rng.gen_range(0..4) {
            0 => lo.clone(),
            1 => hi.clone(),
            _ => lo + (hi - lo) * Rational::new(rng.gen_range(0..=GRID), GRID),
        }
    }

    /// An interval satisfying the length hypothesis of `part` (one of i, ii, iii).
    pub fn random_interval<R: Rng + ?Sized>(
        rng: &mut R,
        arr: &CircularArrangement,
        part: LemmaPart,
    ) -> CircularInterval {
        let c = threshold(arr.k());
        let u = gon_step(arr.k());
        let (lo, hi) = match part {
            LemmaPart::I => (Rational::zero(), c),
            LemmaPart::Ii => (Rational::zero(), u),
            _ => (u, Rational::one()),
        };
        let start = random_point(rng, arr);
        let len = random_length(rng, &lo, &hi);
        CircularInterval::from_length(start, &len, random_mode(rng), random_mode(rng))
    }

    /// A random point of `V*`.
    pub fn random_v_star<R: Rng + ?Sized>(rng: &mut R, arr: &CircularArrangement) -> CirclePoint {
        let v = rng.gen_range(0..arr.n());
        arr.position(v).shift(&-threshold(arr.k()))
    }

    /// The `(rank)`-th vertex position clockwise from `xi` inclusive; handy
    /// for building arcs with a known number of vertices.
    pub fn nth_position_from(arr: &CircularArrangement, xi: &CirclePoint, rank: usize) -> CirclePoint {
        let start = first_rank_at_or_after(arr, xi);
        arr.position(arr.sorted_order()[(start + rank) % arr.n()]).clone()
    }
}

/// `λ` of the closed arc `[xi, z_xi]`, which is `floor(n/2)` by construction.
pub fn half_arc_lambda(arr: &CircularArrangement, xi: &CirclePoint) -> Result<Rational> {
    let z = z_xi(arr, xi)?;
    Ok(half(lambda_count(arr, &CircularInterval::closed(xi.clone(), arr.position(z).clone()))))
}

/// Vertices of the arc half `[xi, z_xi]`.
pub fn arc_half(arr: &CircularArrangement, xi: &CirclePoint) -> Result<VertexSubset> {
    let z = z_xi(arr, xi)?;
    Ok(vertices_in(arr, &CircularInterval::closed(xi.clone(), arr.position(z).clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::andrasfai::{andrasfai, balanced_blow_up, blow_up, generalized_andrasfai};
    use crate::circle::represent_blow_up;

    fn c5x(t: usize) -> CircularArrangement {
        represent_blow_up(&balanced_blow_up(&andrasfai(2).unwrap(), t).unwrap(), 2).unwrap()
    }

    fn p(a: i64, b: i64) -> CirclePoint {
        CirclePoint::from_ratio(a, b)
    }

    #[test]
    fn part_i_on_third_arcs() {
        let arr = c5x(2);
        for v in 0..arr.n() {
            let i = CircularInterval::from_length(
                arr.position(v).clone(),
                &Rational::new(1, 3),
                EndMode::Closed,
                EndMode::Closed,
            );
            let r = check_useful_lemma(&arr, LemmaPart::I, &LemmaInput::Interval(i)).unwrap();
            assert!(r.hypotheses_held && r.conclusion_held, "{r:?}");
        }
    }

    #[test]
    fn part_iii_example() {
        let arr = c5x(2);
        let i = CircularInterval::closed(p(0, 1), p(1, 3));
        let r = check_useful_lemma(&arr, LemmaPart::Iii, &LemmaInput::Interval(i)).unwrap();
        assert_eq!(r.value("lambda"), Some(&Rational::integer(4)));
        assert_eq!(r.value("rhs"), Some(&Rational::integer(2)));
        assert!(r.hypotheses_held && r.conclusion_held && r.implication_held);
    }

    #[test]
    fn part_ii_for_k3() {
        let base = generalized_andrasfai(3, 2).unwrap();
        let arr = represent_blow_up(&balanced_blow_up(&base, 2).unwrap(), 3).unwrap();
        // alpha(C7 x 2) = 6: rhs = 3*6 - 14 = 4
        let i = CircularInterval::closed(p(0, 1), p(1, 5));
        let r = check_useful_lemma(&arr, LemmaPart::Ii, &LemmaInput::Interval(i)).unwrap();
        assert_eq!(r.value("rhs"), Some(&Rational::integer(4)));
        assert!(r.implication_held);
    }

    #[test]
    fn u4_on_blow_up_is_vacuous() {
        let arr = c5x(2);
        let r = check_useful_lemma(&arr, LemmaPart::U4, &LemmaInput::Point(p(0, 1))).unwrap();
        assert!(!r.hypotheses_held);
        assert!(r.implication_held);
        assert_eq!(r.failed_hypotheses.len(), 1);
        assert_eq!(r.value("edges[xi, z_xi]"), Some(&Rational::integer(2)));
    }

    #[test]
    fn wrong_input_kind_and_divisibility() {
        let arr = c5x(2);
        assert!(check_useful_lemma(&arr, LemmaPart::I, &LemmaInput::Point(p(0, 1))).is_err());
        assert!(check_useful_lemma(
            &arr,
            LemmaPart::Iv,
            &LemmaInput::Interval(CircularInterval::closed(p(0, 1), p(1, 2)))
        )
        .is_err());
        let odd = c5x(1);
        assert!(matches!(
            check_useful_lemma(&odd, LemmaPart::U4, &LemmaInput::Point(p(0, 1))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn identity_on_unit_c5() {
        let r = partition_identity_check(&c5x(1));
        assert!(r.holds);
        assert_eq!(r.lhs, Rational::integer(15));
    }

    #[test]
    fn winding_on_doubled_c5() {
        let arr = c5x(2);
        let x0 = arr.position(0).shift(&-threshold(2));
        let w = winding_trace(&arr, &x0).unwrap();
        assert!(w.period >= 2);
        assert!(w.winding.is_integer() && w.winding >= 1);
        assert!(w.coverage_uniform);
        assert_eq!(w.cycle.first(), w.cycle.first());
        assert!(winding_trace(&arr, &p(1, 7)).is_err());
    }

    #[test]
    fn winding_needs_small_alpha() {
        let k2 = generalized_andrasfai(2, 1).unwrap();
        let arr = represent_blow_up(&balanced_blow_up(&k2, 3).unwrap(), 2).unwrap();
        let x0 = arr.position(0).shift(&-threshold(2));
        assert!(matches!(winding_trace(&arr, &x0), Err(Error::Precondition(_))));
    }

    #[test]
    fn gon_on_doubled_c5() {
        let r = gon_geometry(&c5x(2)).unwrap();
        assert_eq!(r.alpha, 4);
        assert_eq!(r.lambda_z0_zprime, Rational::integer(4));
        assert!(r.identity_held && r.gon_fits);
        assert!(r.g2.is_none() && r.g3.is_none());
        assert!(r.g1.implication_held);
        assert_eq!(r.b.len(), 3);
    }

    #[test]
    fn gon_gon_for_k3() {
        let base = generalized_andrasfai(3, 3).unwrap();
        let arr = represent_blow_up(&blow_up(&base, &[2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]).unwrap(), 3).unwrap();
        let r = gon_geometry(&arr).unwrap();
        assert_eq!(r.b.len(), 5);
        for i in 0..5 {
            assert_eq!(r.b[i].forward_to(&r.b[(i + 1) % 5]), Rational::new(1, 5));
        }
        assert_eq!(r.b[3], r.z0_position);
        assert!(r.identity_held);
        assert!(r.g2.as_ref().unwrap().held);
        let f = r.families.unwrap();
        assert!(f.disjoint && f.sum_held);
    }

    #[test]
    fn gon_rejects_large_alpha() {
        let k2 = generalized_andrasfai(2, 1).unwrap();
        let arr = represent_blow_up(&balanced_blow_up(&k2, 3).unwrap(), 2).unwrap();
        assert!(gon_geometry(&arr).is_err());
    }

    #[test]
    fn half_arcs_hold_half_the_vertices() {
        let arr = c5x(2);
        assert_eq!(half_arc_lambda(&arr, &p(3, 11)).unwrap(), Rational::integer(5));
        assert_eq!(arc_half(&arr, &p(0, 1)).unwrap().members(), &[0, 1, 2, 3, 4]);
    }
}
