//! Rotates a maximum independent set to `[0, (k-1)/(2k-1)]` and lays out the
//! regular (2k-1)-gon `b_0, ..., b_{2k-2}` anchored at `z_0`.
//!
//! cargo run --example gon_geometry

use sparse_halves::proof_lab::gon_geometry;
use sparse_halves::{blow_up, generalized_andrasfai, represent_blow_up};

fn main() -> sparse_halves::Result<()> {
    for (k, d, mult) in
        [(2, 2, vec![2, 2, 2, 2, 2]), (3, 3, vec![2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]), (4, 2, vec![2; 9])]
    {
        let arr = represent_blow_up(&blow_up(&generalized_andrasfai(k, d)?, &mult)?, k)?;
        let r = gon_geometry(&arr)?;
        let b: Vec<String> = r.b.iter().map(ToString::to_string).collect();
        println!("F({k},{d}) x {mult:?}  n={} alpha={}", r.n, r.alpha);
        println!(
            "  rotated by {} (vertex {}); z0 at {}, z' at {}",
            r.rotation, r.mis_start, r.z0_position, r.z_prime_position
        );
        println!("  lambda((z0, z')) = {} (identity {})", r.lambda_z0_zprime, r.identity_held);
        println!("  b = [{}]", b.join(", "));
        for c in r.to_checks() {
            println!(
                "  {:<13} hypotheses {:<5} conclusion {:<5} implication {}",
                c.check_id, c.hypotheses_held, c.conclusion_held, c.implication_held
            );
        }
    }
    Ok(())
}
