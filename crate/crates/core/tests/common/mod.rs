//! Small, deliberately naive reference implementations used to cross-check
//! the library. Nothing here shares code with the algorithms under test.
#![allow(dead_code)]

use rand::Rng;
use sparse_halves::arith::{CirclePoint, CircularInterval, EndMode, Rational};
use sparse_halves::{blow_up, generalized_andrasfai, represent_blow_up, BlowUp, CircularArrangement, Graph};

pub fn r(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn weight(mode: EndMode) -> u64 {
    match mode {
        EndMode::Closed => 2,
        EndMode::Half => 1,
        EndMode::Open => 0,
    }
}

/// Doubled vertex count of an interval, computed point by point.
pub fn lambda2(positions: &[CirclePoint], i: &CircularInterval) -> u64 {
    let len = i.length();
    let full = len == Rational::one();
    positions
        .iter()
        .map(|p| {
            let d = i.start.forward_to(p);
            let (sw, ew) = (weight(i.start_mode), weight(i.end_mode));
            if full {
                if d.is_zero() {
                    sw + ew
                } else {
                    2
                }
            } else if d.is_zero() && len.is_zero() {
                sw.min(ew)
            } else if d.is_zero() {
                sw
            } else if d < len {
                2
            } else if d == len {
                ew
            } else {
                0
            }
        })
        .sum()
}

/// Maximum independent set size by textbook branching: a vertex of degree
/// at most one is always taken, otherwise branch on a vertex of maximum degree.
pub fn alpha(g: &Graph) -> usize {
    fn go(g: &Graph, cand: &[usize]) -> usize {
        if cand.is_empty() {
            return 0;
        }
        let deg = |v: usize| cand.iter().filter(|&&u| g.has_edge(u, v)).count();
        let without = |v: usize| cand.iter().copied().filter(|&u| u != v).collect::<Vec<_>>();
        let closed = |v: usize| cand.iter().copied().filter(|&u| u != v && !g.has_edge(u, v)).collect::<Vec<_>>();
        let low = *cand.iter().min_by_key(|&&v| deg(v)).unwrap();
        if deg(low) <= 1 {
            return 1 + go(g, &closed(low));
        }
        let high = *cand.iter().max_by_key(|&&v| deg(v)).unwrap();
        go(g, &without(high)).max(1 + go(g, &closed(high)))
    }
    go(g, &(0..g.n()).collect::<Vec<_>>())
}

pub fn edges_within(g: &Graph, members: &[usize]) -> usize {
    let mut e = 0;
    for (a, &x) in members.iter().enumerate() {
        for &y in &members[a + 1..] {
            e += g.has_edge(x, y) as usize;
        }
    }
    e
}

/// Minimum edges over all `s`-subsets by plain enumeration (small n only).
pub fn brute_min_edges(g: &Graph, s: usize) -> usize {
    fn go(g: &Graph, next: usize, s: usize, chosen: &mut Vec<usize>, edges: usize, best: &mut usize) {
        if edges >= *best {
            return;
        }
        if chosen.len() == s {
            *best = edges;
            return;
        }
        if g.n() - next < s - chosen.len() {
            return;
        }
        let add = chosen.iter().filter(|&&u| g.has_edge(u, next)).count();
        chosen.push(next);
        go(g, next + 1, s, chosen, edges + add, best);
        chosen.pop();
        go(g, next + 1, s, chosen, edges, best);
    }
    let mut best = usize::MAX;
    go(g, 0, s, &mut Vec::new(), 0, &mut best);
    best
}

/// Minimum edges over runs of `floor(n/2)` consecutive vertices in circular order.
pub fn arc_half_min(arr: &CircularArrangement) -> usize {
    let n = arr.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| arr.position(a).cmp(arr.position(b)));
    (0..n)
        .map(|s| {
            let run: Vec<usize> = (0..n / 2).map(|i| order[(s + i) % n]).collect();
            edges_within(arr.graph(), &run)
        })
        .min()
        .unwrap()
}

/// `floor(n/2)`-th vertex clockwise from `xi`, counting one at `xi`.
pub fn z_of(arr: &CircularArrangement, xi: &CirclePoint) -> usize {
    let mut order: Vec<usize> = (0..arr.n()).collect();
    order.sort_by_key(|&v| xi.forward_to(arr.position(v)));
    order[arr.n() / 2 - 1]
}

/// Odd girth via odd closed walks: the shortest odd closed walk is a cycle.
pub fn odd_girth_by_walks(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = None;
    for start in 0..n {
        // vertices reachable from start by walks of exactly `len` steps
        let mut cur = vec![false; n];
        cur[start] = true;
        for len in 1..=n {
            cur = (0..n).map(|w| (0..n).any(|u| cur[u] && g.has_edge(u, w))).collect();
            if len % 2 == 1 && cur[start] {
                best = Some(best.map_or(len, |b: usize| b.min(len)));
                break;
            }
        }
    }
    best
}

/// Angle criterion recomputed from positions.
pub fn angle_ok(arr: &CircularArrangement) -> bool {
    let k = arr.k() as i64;
    let c = r(k - 1, 2 * k - 1);
    for x in 0..arr.n() {
        for y in x + 1..arr.n() {
            let d = arr.position(x).forward_to(arr.position(y));
            let other = Rational::one() - &d;
            let angle = if d < other { d } else { other };
            if (angle > c) != arr.graph().has_edge(x, y) {
                return false;
            }
        }
    }
    true
}

/// Random multiplicities in `0..=max_t` with at least one nonzero entry.
pub fn random_mults<R: Rng>(rng: &mut R, m: usize, max_t: usize) -> Vec<usize> {
    loop {
        let v: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=max_t)).collect();
        if v.iter().sum::<usize>() >= 2 {
            return v;
        }
    }
}

/// Random composition of `n` into `m` nonnegative parts.
pub fn random_composition<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<usize> {
    let mut v = vec![0; m];
    for _ in 0..n {
        v[rng.gen_range(0..m)] += 1;
    }
    v
}

pub fn arrangement(k: usize, d: usize, mults: &[usize]) -> (BlowUp, CircularArrangement) {
    let b = blow_up(&generalized_andrasfai(k, d).unwrap(), mults).unwrap();
    let arr = represent_blow_up(&b, k).unwrap();
    (b, arr)
}

/// Homomorphism search by plain backtracking in vertex order.
pub fn naive_hom_exists(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, v: usize, map: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for a in 0..h.n() {
            if (0..v).all(|u| !g.has_edge(u, v) || h.has_edge(map[u], a)) {
                map.push(a);
                if go(g, h, v + 1, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g, h, 0, &mut Vec::new())
}
