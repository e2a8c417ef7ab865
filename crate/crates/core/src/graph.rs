//! Simple undirected graphs on `0..n` with bitset adjacency rows.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the (twin-reduced) vertex count for exact `alpha` and `chi`.
pub const DEFAULT_EXACT_CAP: usize = 64;

/// Simple undirected graph. Adjacency is stored row-major as packed `u64`
/// words, so subset edge counts reduce to `popcount(row & subset)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, adj: vec![0; n * words] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(u, v)` for all `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row as a single word. Only meaningful when `n <= 64`.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Partition of the vertices into classes with identical open
    /// neighbourhoods. Twins are never adjacent. Classes are listed in order
    /// of their least member; members are increasing.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut by_row: BTreeMap<&[u64], usize> = BTreeMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let idx = *by_row.entry(self.row(v)).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(v);
        }
        classes
    }

    /// Quotient by twin classes, with class sizes as weights.
    pub(crate) fn twin_quotient(&self) -> (Graph, Vec<Vec<usize>>) {
        let classes = self.twin_classes();
        let q = Graph::from_fn(classes.len(), |a, b| self.has_edge(classes[a][0], classes[b][0]));
        (q, classes)
    }

    /// Serializable `{"n", "edges"}` form.
    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges().map(|(u, v)| [u, v]).collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        Graph::from_edges(json.n, json.edges.iter().map(|e| (e[0], e[1])))
    }

    /// Graphviz rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = GraphJson::deserialize(deserializer)?;
        Graph::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// On-disk graph schema: `{"n": int, "edges": [[u,v],...]}` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

pub(crate) fn iter_mask(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// A set of vertices of some host graph, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    /// Validates `members` against a host of `n` vertices.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(VertexSubset { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSubset { members }
    }

    pub fn all(n: usize) -> Self {
        VertexSubset { members: (0..n).collect() }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSubset { members: iter_mask(mask).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    fn to_words(&self, words: usize) -> Vec<u64> {
        let mut out = vec![0u64; words];
        for &v in &self.members {
            out[v / 64] |= 1 << (v % 64);
        }
        out
    }
}

/// Number of edges of `g` with both ends in `s`.
pub fn induced_edge_count(g: &Graph, s: &VertexSubset) -> Result<usize> {
    if let Some(&v) = s.members.last() {
        g.check_vertex(v)?;
    }
    let mask = s.to_words(g.words());
    let twice: usize = s
        .members
        .iter()
        .map(|&v| g.row(v).iter().zip(&mask).map(|(a, b)| (a & b).count_ones() as usize).sum::<usize>())
        .sum();
    Ok(twice / 2)
}

/// `true` iff `s` spans no edge.
pub fn is_independent(g: &Graph, s: &VertexSubset) -> Result<bool> {
    Ok(induced_edge_count(g, s)? == 0)
}

/// Length of the shortest odd cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OddGirth {
    Finite(usize),
    /// The graph is bipartite.
    Infinite,
}

/// Shortest odd cycle length via one BFS per source: an edge inside a BFS
/// layer at depth `l` closes an odd walk of length `2l + 1`, and the minimum
/// over all sources is attained by a shortest odd cycle.
pub fn odd_girth(g: &Graph) -> OddGirth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                } else if dist[v] == dist[u] {
                    best = best.min(2 * dist[u] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        OddGirth::Infinite
    } else {
        OddGirth::Finite(best)
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    let cap = cap.min(64);
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// Exact independence number with the default cap.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSubset)> {
    independence_number_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Exact independence number and the lexicographically least maximum
/// independent set.
///
/// A maximum independent set always contains whole twin classes, so the
/// search runs on the twin quotient with class sizes as weights. `cap`
/// bounds the number of twin classes (hard limit 64).
pub fn independence_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, VertexSubset)> {
    let (q, classes) = g.twin_quotient();
    check_cap("independence number (twin classes)", q.n(), cap)?;
    let weights: Vec<usize> = classes.iter().map(Vec::len).collect();
    let (w, mask) = max_weight_independent_set(&q, &weights);
    let mut members: Vec<usize> = iter_mask(mask).flat_map(|c| classes[c].iter().copied()).collect();
    members.sort_unstable();
    Ok((w, VertexSubset::from_sorted(members)))
}

/// Branch and bound over vertices in index order, include-first, so the
/// first maximiser found is lexicographically least. Bound: greedy clique
/// cover of the candidates, each clique contributing its heaviest member.
pub(crate) fn max_weight_independent_set(g: &Graph, weights: &[usize]) -> (usize, u64) {
    struct Search<'a> {
        rows: Vec<u64>,
        weights: &'a [usize],
        best: usize,
        best_mask: u64,
        found: bool,
    }

    impl Search<'_> {
        fn cover_bound(&self, cand: u64) -> usize {
            let mut cliques: Vec<(u64, usize)> = Vec::new();
            for v in iter_mask(cand) {
                match cliques.iter_mut().find(|(m, _)| m & !self.rows[v] == 0) {
                    Some((m, w)) => {
                        *m |= 1 << v;
                        *w = (*w).max(self.weights[v]);
                    }
                    None => cliques.push((1 << v, self.weights[v])),
                }
            }
            cliques.iter().map(|c| c.1).sum()
        }

        fn run(&mut self, cand: u64, chosen: u64, weight: usize) {
            if cand == 0 {
                if !self.found || weight > self.best {
                    self.found = true;
                    self.best = weight;
                    self.best_mask = chosen;
                }
                return;
            }
            if self.found && weight + self.cover_bound(cand) <= self.best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            let bit = 1u64 << v;
            self.run(cand & !bit & !self.rows[v], chosen | bit, weight + self.weights[v]);
            self.run(cand & !bit, chosen, weight);
        }
    }

    let n = g.n();
    assert!(n <= 64);
    let mut s = Search { rows: (0..n).map(|v| g.row64(v)).collect(), weights, best: 0, best_mask: 0, found: false };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    s.run(all, 0, 0);
    (s.best, s.best_mask)
}

/// Exact chromatic number with the default cap.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Exact chromatic number by iterative deepening over the number of colours
/// with DSATUR-ordered backtracking. Twins may share a colour, so the search
/// runs on the twin quotient; `cap` bounds the number of twin classes.
pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let (q, _) = g.twin_quotient();
    check_cap("chromatic number (twin classes)", q.n(), cap)?;
    let start = if odd_girth(&q) == OddGirth::Infinite { 2 } else { 3 };
    let rows: Vec<u64> = (0..q.n()).map(|v| q.row64(v)).collect();
    let mut colours = start;
    loop {
        let mut colour = vec![usize::MAX; q.n()];
        if colourable(&rows, &mut colour, colours, 0) {
            return Ok(colours);
        }
        colours += 1;
    }
}

fn colourable(rows: &[u64], colour: &mut [usize], k: usize, used: usize) -> bool {
    let n = rows.len();
    // DSATUR pick: most distinct neighbour colours, then highest degree, then lowest index.
    let mut pick: Option<(usize, usize, usize)> = None;
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for u in iter_mask(rows[v]) {
            if colour[u] != usize::MAX {
                seen |= 1 << colour[u];
            }
        }
        let sat = seen.count_ones() as usize;
        let deg = rows[v].count_ones() as usize;
        if pick.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
            pick = Some((v, sat, deg));
        }
    }
    let Some((v, _, _)) = pick else {
        return true;
    };
    let mut forbidden = 0u64;
    for u in iter_mask(rows[v]) {
        if colour[u] != usize::MAX {
            forbidden |= 1 << colour[u];
        }
    }
    // Colours beyond `used` are interchangeable; try only the first fresh one.
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colour[v] = c;
        if colourable(rows, colour, k, used.max(c + 1)) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!("complete bipartite needs a, b >= 1, got ({a},{b})")));
    }
    Ok(Graph::from_fn(a + b, |u, v| (u < a) != (v < a)))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

/// The Petersen graph as the Kneser graph `K(5,2)`: vertices are the ten
/// 2-subsets of `{0..4}` in lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    Graph::from_fn(10, |u, v| {
        let (a, b) = pairs[u];
        let (c, d) = pairs[v];
        a != c && a != d && b != c && b != d
    })
}

/// Named graph families accepted by [`named_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    Petersen,
}

pub fn named_graph(spec: NamedGraph) -> Result<Graph> {
    match spec {
        NamedGraph::Cycle(n) => cycle(n),
        NamedGraph::CompleteBipartite(a, b) => complete_bipartite(a, b),
        NamedGraph::Complete(n) => complete(n),
        NamedGraph::Petersen => Ok(petersen()),
    }
}
