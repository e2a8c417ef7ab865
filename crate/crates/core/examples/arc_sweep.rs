//! Compares the sparsest arc half with the exact minimum over all halves on
//! random blow-ups, and with the bound `n^2 / (2(2k+1)^2)`.
//!
//! cargo run --release --example arc_sweep

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_halves::{
    arc_sweep, blow_up, generalized_andrasfai, min_edges_over_subsets, represent_blow_up, SubsetBudget,
};

fn main() -> sparse_halves::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!("{:<8} {:<28} {:>3} {:>6} {:>6} {:>7}", "graph", "multiplicities", "n", "sweep", "exact", "bound");
    for (k, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let base = generalized_andrasfai(k, d)?;
        let step = 2 * (2 * k + 1);
        for _ in 0..3 {
            // random composition of a multiple of 2(2k+1) into |V(base)| parts
            let n = step * rng.gen_range(1..=(24 / step).max(1));
            let mut mult = vec![0usize; base.n()];
            for _ in 0..n {
                mult[rng.gen_range(0..base.n())] += 1;
            }
            let arr = represent_blow_up(&blow_up(&base, &mult)?, k)?;
            let sweep = arc_sweep(&arr)?;
            let exact = min_edges_over_subsets(arr.graph(), n / 2, SubsetBudget::default())?;
            println!(
                "F({k},{d})   {:<28} {:>3} {:>6} {:>6} {:>7}",
                format!("{mult:?}"),
                n,
                sweep.min_edges,
                exact.min_edges,
                sweep.bound.to_string()
            );
            assert!(exact.min_edges <= sweep.min_edges && sweep.within_bound());
        }
    }
    Ok(())
}
