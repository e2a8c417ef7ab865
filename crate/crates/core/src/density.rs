//! Local density: minimum-edge `s`-subsets, `(alpha, beta)`-density and
//! arc-half sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{CirclePoint, CircularInterval, Rational};
use crate::circle::{z_xi, CircularArrangement};
use crate::error::{Error, Result};
use crate::graph::{induced_edge_count, iter_mask, Graph, VertexSubset};

/// Limits for the exact subset search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetBudget {
    /// Largest accepted vertex count (never more than 64).
    pub max_n: usize,
    /// Node expansions before giving up.
    pub max_nodes: u64,
    /// Split the search tree across threads. The result does not depend on it.
    pub parallel: bool,
}

impl Default for SubsetBudget {
    fn default() -> Self {
        SubsetBudget { max_n: 30, max_nodes: 4_000_000_000, parallel: true }
    }
}

impl SubsetBudget {
    pub fn with_max_n(self, max_n: usize) -> Self {
        SubsetBudget { max_n, ..self }
    }

    pub fn with_max_nodes(self, max_nodes: u64) -> Self {
        SubsetBudget { max_nodes, ..self }
    }

    pub fn sequential(self) -> Self {
        SubsetBudget { parallel: false, ..self }
    }
}

/// Result of [`min_edges_over_subsets`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetMinimum {
    pub s: usize,
    pub min_edges: usize,
    /// Lexicographically least `s`-subset attaining the minimum.
    pub witness: VertexSubset,
    pub nodes: u64,
}

/// `n^2 / (2 (2k+1)^2)`: no blow-up of `F^k_d` has all halves above it.
pub fn sparse_half_bound(k: usize, n: usize) -> Rational {
    let q = 2 * k as i64 + 1;
    Rational::new((n * n) as i64, 2 * q * q)
}

#[derive(Clone, Copy)]
struct Node {
    idx: usize,
    chosen: u64,
    size: usize,
    edges: usize,
    /// Vertices that may no longer be picked: later twins of an excluded vertex.
    dead: u64,
}

struct Solver {
    n: usize,
    s: usize,
    rows: Vec<u64>,
    later_twins: Vec<u64>,
    upper: usize,
    max_nodes: u64,
}

#[derive(Default)]
struct Outcome {
    best: Option<(usize, u64)>,
    nodes: u64,
    exhausted: bool,
}

fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Solver {
    fn new(g: &Graph, s: usize) -> Self {
        let n = g.n();
        let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
        let mut later_twins = vec![0u64; n];
        for class in g.twin_classes() {
            for (i, &v) in class.iter().enumerate() {
                later_twins[v] = class[i + 1..].iter().fold(0, |m, &u| m | 1 << u);
            }
        }
        let mut solver = Solver { n, s, rows, later_twins, upper: usize::MAX, max_nodes: 0 };
        solver.upper = solver.heuristic_upper_bound();
        solver
    }

    fn edges_of(&self, mask: u64) -> usize {
        iter_mask(mask).map(|v| (self.rows[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    /// Greedy fill followed by first-improvement swaps.
    fn heuristic_upper_bound(&self) -> usize {
        let mut chosen = 0u64;
        for _ in 0..self.s {
            let v = (0..self.n)
                .filter(|&v| chosen >> v & 1 == 0)
                .min_by_key(|&v| ((self.rows[v] & chosen).count_ones(), v))
                .expect("s <= n");
            chosen |= 1 << v;
        }
        let mut value = self.edges_of(chosen);
        loop {
            let mut improved = false;
            'outer: for out in iter_mask(chosen) {
                for inn in iter_mask(low_mask(self.n) & !chosen) {
                    let cand = (chosen & !(1 << out)) | 1 << inn;
                    let v = self.edges_of(cand);
                    if v < value {
                        chosen = cand;
                        value = v;
                        improved = true;
                        break 'outer;
                    }
                }
            }
            if !improved {
                return value;
            }
        }
    }

    /// Lower bound on the final edge count below `node`, or `None` if too
    /// few candidates remain.
    fn lower_bound(&self, node: &Node, remaining: u64) -> Option<usize> {
        let r = self.s - node.size;
        let avail = remaining.count_ones() as usize;
        if avail < r {
            return None;
        }
        if r == 0 {
            return Some(node.edges);
        }
        let mut costs: Vec<usize> = iter_mask(remaining)
            .map(|v| {
                let to_chosen = (self.rows[v] & node.chosen).count_ones() as usize;
                let deg_r = (self.rows[v] & remaining).count_ones() as usize;
                // Neighbours forced among the other r-1 picks.
                let forced = (r + deg_r).saturating_sub(avail);
                2 * to_chosen + forced
            })
            .collect();
        let extra: usize = if r < costs.len() {
            costs.select_nth_unstable(r - 1);
            costs[..r].iter().sum()
        } else {
            costs.iter().sum()
        };
        Some(node.edges + extra.div_ceil(2))
    }

    fn remaining(&self, node: &Node) -> u64 {
        low_mask(self.n) & !low_mask(node.idx) & !node.dead
    }

    fn solve(&self, root: Node) -> Outcome {
        let mut out = Outcome::default();
        self.dfs(root, &mut out);
        out
    }

    fn dfs(&self, node: Node, out: &mut Outcome) {
        if out.exhausted {
            return;
        }
        out.nodes += 1;
        if out.nodes > self.max_nodes {
            out.exhausted = true;
            return;
        }
        let remaining = self.remaining(&node);
        let Some(lb) = self.lower_bound(&node, remaining) else {
            return;
        };
        if lb > self.upper || out.best.is_some_and(|(b, _)| lb >= b) {
            return;
        }
        let r = self.s - node.size;
        if r == 0 {
            out.best = Some((node.edges, node.chosen));
            return;
        }
        if remaining.count_ones() as usize == r {
            let all = node.chosen | remaining;
            let edges = self.edges_of(all);
            if out.best.is_none_or(|(b, _)| edges < b) && edges <= self.upper {
                out.best = Some((edges, all));
            }
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let include = Node {
            idx: v + 1,
            chosen: node.chosen | bit,
            size: node.size + 1,
            edges: node.edges + (self.rows[v] & node.chosen).count_ones() as usize,
            dead: node.dead,
        };
        self.dfs(include, out);
        let exclude = Node { idx: v + 1, dead: node.dead | self.later_twins[v], ..node };
        self.dfs(exclude, out);
    }

    /// Open subproblems after fixing the first decisions, in include-first order.
    fn frontier(&self, root: Node, depth: usize) -> Vec<Node> {
        let mut out = Vec::new();
        let mut stack = vec![(root, 0usize)];
        while let Some((node, level)) = stack.pop() {
            let remaining = self.remaining(&node);
            let r = self.s - node.size;
            if level == depth || r == 0 || remaining.count_ones() as usize <= r {
                out.push(node);
                continue;
            }
            let v = remaining.trailing_zeros() as usize;
            let bit = 1u64 << v;
            let include = Node {
                idx: v + 1,
                chosen: node.chosen | bit,
                size: node.size + 1,
                edges: node.edges + (self.rows[v] & node.chosen).count_ones() as usize,
                dead: node.dead,
            };
            let exclude = Node { idx: v + 1, dead: node.dead | self.later_twins[v], ..node };
            stack.push((exclude, level + 1));
            stack.push((include, level + 1));
        }
        out
    }
}

/// Exact minimum number of edges spanned by an `s`-subset of `g`, with the
/// lexicographically least minimiser.
///
/// Branch and bound over vertices in index order, include first. The bound
/// adds to the current count the `r` cheapest remaining vertices, each
/// charged its edges into the chosen set plus half the neighbours it is
/// forced to have among the other picks. Of two twins (equal open
/// neighbourhoods) the later one is only picked together with the earlier
/// one, which keeps the lexicographically least minimiser reachable.
pub fn min_edges_over_subsets(g: &Graph, s: usize, budget: SubsetBudget) -> Result<SubsetMinimum> {
    let n = g.n();
    let cap = budget.max_n.min(64);
    if n > cap {
        return Err(Error::CapExceeded { what: "subset search", size: n, cap });
    }
    if s > n {
        return Err(Error::Precondition(format!("subset size {s} exceeds n = {n}")));
    }
    let mut solver = Solver::new(g, s);
    solver.max_nodes = budget.max_nodes;
    let root = Node { idx: 0, chosen: 0, size: 0, edges: 0, dead: 0 };
    let outcomes: Vec<Outcome> = if budget.parallel && n >= 20 {
        let frontier = solver.frontier(root, 10);
        frontier.into_par_iter().map(|node| solver.solve(node)).collect()
    } else {
        vec![solver.solve(root)]
    };
    let nodes: u64 = outcomes.iter().map(|o| o.nodes).sum();
    if nodes > budget.max_nodes || outcomes.iter().any(|o| o.exhausted) {
        return Err(Error::BudgetExceeded { budget: budget.max_nodes });
    }
    // Outcomes are in lexicographic order; keep the first strict minimum.
    let mut best: Option<(usize, u64)> = None;
    for o in &outcomes {
        if let Some((e, m)) = o.best {
            if best.is_none_or(|(b, _)| e < b) {
                best = Some((e, m));
            }
        }
    }
    let (min_edges, mask) = best.expect("the heuristic subset is never pruned");
    Ok(SubsetMinimum { s, min_edges, witness: VertexSubset::from_mask(mask), nodes })
}

/// Outcome of an `(alpha, beta)`-density query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityVerdict {
    pub alpha: Rational,
    pub beta: Rational,
    pub n: usize,
    /// `floor(alpha * n)`.
    pub s: usize,
    /// `beta * n^2`, exact.
    pub threshold: Rational,
    pub min_edges: usize,
    pub dense: bool,
    /// Present iff not dense: an `s`-subset spanning at most `beta * n^2` edges.
    pub witness: Option<VertexSubset>,
    pub witness_edges: Option<usize>,
}

/// Decides whether every `floor(alpha n)`-subset spans strictly more than
/// `beta n^2` edges.
pub fn is_dense(g: &Graph, alpha: &Rational, beta: &Rational, budget: SubsetBudget) -> Result<DensityVerdict> {
    if alpha.is_negative() || alpha.is_zero() || *alpha > Rational::one() {
        return Err(Error::Precondition(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if beta.is_negative() {
        return Err(Error::Precondition(format!("beta must be >= 0, got {beta}")));
    }
    let n = g.n();
    let s = (alpha * Rational::from(n)).floor().to_i64().expect("small") as usize;
    let threshold = beta * Rational::from(n * n);
    let best = min_edges_over_subsets(g, s, budget)?;
    let dense = Rational::from(best.min_edges) > threshold;
    Ok(DensityVerdict {
        alpha: alpha.clone(),
        beta: beta.clone(),
        n,
        s,
        threshold,
        min_edges: best.min_edges,
        dense,
        witness: (!dense).then(|| best.witness.clone()),
        witness_edges: (!dense).then_some(best.min_edges),
    })
}

/// Edge count of one arc half.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcHalf {
    pub start: usize,
    pub xi: CirclePoint,
    pub z: usize,
    pub edges: usize,
}

/// Result of [`arc_sweep`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub k: usize,
    pub n: usize,
    pub half: usize,
    pub min_edges: usize,
    /// Least vertex index whose arc half attains the minimum.
    pub witness_start: usize,
    pub witness_interval: CircularInterval,
    pub witness: VertexSubset,
    /// `n^2 / (2(2k+1)^2)`.
    pub bound: Rational,
    /// Whether `2(2k+1)` divides `n`.
    pub divisible: bool,
    pub per_start: Vec<ArcHalf>,
}

impl SweepReport {
    pub fn within_bound(&self) -> bool {
        Rational::from(self.min_edges) <= self.bound
    }
}

/// Minimum edge count over the arc halves `V ∩ [xi, z_xi]`, `xi` ranging
/// over vertex positions. Moving `xi` between consecutive vertices does not
/// change the half, so this covers every arc half.
pub fn arc_sweep(arr: &CircularArrangement) -> Result<SweepReport> {
    let n = arr.n();
    if n < 2 {
        return Err(Error::Precondition(format!("arc sweep needs n >= 2, got {n}")));
    }
    let half = n / 2;
    let mut per_start = Vec::with_capacity(n);
    for v in 0..n {
        let xi = arr.position(v).clone();
        let z = z_xi(arr, &xi)?;
        let members = VertexSubset::new(arr.run_from_rank(arr.rank(v), half), n)?;
        let edges = induced_edge_count(arr.graph(), &members)?;
        per_start.push(ArcHalf { start: v, xi, z, edges });
    }
    let best = per_start.iter().min_by_key(|a| (a.edges, a.start)).expect("n >= 2").clone();
    let witness = VertexSubset::new(arr.run_from_rank(arr.rank(best.start), half), n)?;
    let q = 2 * (2 * arr.k() + 1);
    Ok(SweepReport {
        k: arr.k(),
        n,
        half,
        min_edges: best.edges,
        witness_start: best.start,
        witness_interval: CircularInterval::closed(best.xi.clone(), arr.position(best.z).clone()),
        witness,
        bound: sparse_half_bound(arr.k(), n),
        divisible: n.is_multiple_of(q),
        per_start,
    })
}

/// One row of a `beta(alpha)` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaRow {
    pub construction: String,
    pub n: usize,
    pub alpha: Rational,
    pub s: usize,
    /// `Err` carries the per-row failure (typically an exhausted budget).
    pub min_edges: std::result::Result<usize, String>,
    pub eq1_target: Rational,
    pub eq2_target: Rational,
}

impl BetaRow {
    /// `min_edges / n^2`.
    pub fn ratio(&self) -> Option<Rational> {
        let e = *self.min_edges.as_ref().ok()?;
        Some(Rational::from(e) / Rational::from(self.n * self.n))
    }
}

/// `(2 alpha - 1) / 4`, the complete bipartite prediction.
pub fn eq1_target(alpha: &Rational) -> Rational {
    (Rational::integer(2) * alpha - Rational::one()) / Rational::integer(4)
}

/// `(5 alpha - 2) / 25`, the five-cycle blow-up prediction.
pub fn eq2_target(alpha: &Rational) -> Rational {
    (Rational::integer(5) * alpha - Rational::integer(2)) / Rational::integer(25)
}

/// Exact minimum `floor(alpha n)`-subset densities for each construction
/// and each alpha. Rows are ordered construction-major.
pub fn beta_table(constructions: &[(String, Graph)], alphas: &[Rational], budget: SubsetBudget) -> Vec<BetaRow> {
    let mut rows = Vec::new();
    for (name, g) in constructions {
        for alpha in alphas {
            let n = g.n();
            let s = (alpha * Rational::from(n)).floor().to_i64().unwrap_or(0).max(0) as usize;
            let min_edges = min_edges_over_subsets(g, s, budget).map(|m| m.min_edges).map_err(|e| e.to_string());
            rows.push(BetaRow {
                construction: name.clone(),
                n,
                alpha: alpha.clone(),
                s,
                min_edges,
                eq1_target: eq1_target(alpha),
                eq2_target: eq2_target(alpha),
            });
        }
    }
    rows
}

pub const BETA_TABLE_HEADER: &str = "construction,n,alpha,s,min_edges,ratio,eq1_target,eq2_target";

/// CSV rendering with exact `p/q` cells.
pub fn beta_table_csv(rows: &[BetaRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = BETA_TABLE_HEADER.split(',').collect();
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        let (edges, ratio) = match (&row.min_edges, row.ratio()) {
            (Ok(e), Some(r)) => (e.to_string(), r.to_string()),
            _ => ("budget_exceeded".to_string(), "budget_exceeded".to_string()),
        };
        w.write_record([
            row.construction.clone(),
            row.n.to_string(),
            row.alpha.to_string(),
            row.s.to_string(),
            edges,
            ratio,
            row.eq1_target.to_string(),
            row.eq2_target.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}
