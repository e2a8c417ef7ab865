//! Exact minimum number of edges spanned by half of the vertices, for the
//! balanced blow-ups that make the arc-half bound tight.
//!
//! cargo run --release --example sparse_halves_oracle

use std::time::Instant;

use sparse_halves::{balanced_blow_up, generalized_andrasfai, min_edges_over_subsets, Graph, Rational, SubsetBudget};

fn report(name: &str, g: &Graph, k: usize) -> sparse_halves::Result<()> {
    let n = g.n();
    let started = Instant::now();
    let best = min_edges_over_subsets(g, n / 2, SubsetBudget::default())?;
    let bound = sparse_halves::density::sparse_half_bound(k, n);
    println!(
        "{name:<14} n={n:<3} min={:<3} bound={bound:<6} ratio={:<6} witness={:?} ({} nodes, {:.2?})",
        best.min_edges,
        Rational::from(best.min_edges) / Rational::from(n * n),
        best.witness.members(),
        best.nodes,
        started.elapsed()
    );
    Ok(())
}

fn main() -> sparse_halves::Result<()> {
    let c5 = generalized_andrasfai(2, 2)?;
    let c7 = generalized_andrasfai(3, 2)?;
    for t in [2, 4, 6] {
        report(&format!("C5 x {t}"), &balanced_blow_up(&c5, t)?.result, 2)?;
    }
    for t in [2, 4] {
        report(&format!("C7 x {t}"), &balanced_blow_up(&c7, t)?.result, 3)?;
    }
    let petersen = sparse_halves::graph::petersen();
    report("Petersen x 2", &balanced_blow_up(&petersen, 2)?.result, 2)?;
    Ok(())
}
