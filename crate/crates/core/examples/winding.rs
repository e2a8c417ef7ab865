//! Iterates `x -> z_x - (k-1)/(2k-1)` until it cycles and reports the period
//! and how often one period wraps around the circle.
//!
//! cargo run --example winding

use sparse_halves::circle::threshold;
use sparse_halves::proof_lab::winding_trace;
use sparse_halves::{blow_up, generalized_andrasfai, represent_blow_up};

fn main() -> sparse_halves::Result<()> {
    for (k, d, mult) in
        [(2, 2, vec![2, 2, 2, 2, 2]), (2, 3, vec![1, 3, 2, 1, 2, 3, 1, 1]), (3, 2, vec![2, 3, 2, 2, 2, 3, 2])]
    {
        let arr = represent_blow_up(&blow_up(&generalized_andrasfai(k, d)?, &mult)?, k)?;
        let x0 = arr.position(0).shift(&-threshold(k));
        let w = winding_trace(&arr, &x0)?;
        let cycle: Vec<String> = w.cycle.iter().map(ToString::to_string).collect();
        println!(
            "F({k},{d}) x {mult:?}: prefix {} then period {} winding {} uniform cover {}\n  cycle {}",
            w.prefix.len(),
            w.period,
            w.winding,
            w.coverage_uniform,
            cycle.join(" -> ")
        );
    }
    Ok(())
}
