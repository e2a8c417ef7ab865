//! Odd girth and the exact colouring invariants of the standard constructions.
//!
//! cargo run --example invariants

use sparse_halves::graph::{complete_bipartite, petersen};
use sparse_halves::{balanced_blow_up, chromatic_number, generalized_andrasfai, independence_number, odd_girth, Graph};

fn show(name: &str, g: &Graph) -> sparse_halves::Result<()> {
    let (alpha, witness) = independence_number(g)?;
    println!(
        "{name:<12} n={:<3} odd_girth={:<10} alpha={alpha:<3} chi={} witness={:?}",
        g.n(),
        format!("{:?}", odd_girth(g)),
        chromatic_number(g)?,
        witness.members()
    );
    Ok(())
}

fn main() -> sparse_halves::Result<()> {
    for (k, d) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3)] {
        show(&format!("F({k},{d})"), &generalized_andrasfai(k, d)?)?;
    }
    show("F(2,3) x 3", &balanced_blow_up(&generalized_andrasfai(2, 3)?, 3)?.result)?;
    show("Petersen", &petersen())?;
    show("K(4,6)", &complete_bipartite(4, 6)?)?;
    Ok(())
}
