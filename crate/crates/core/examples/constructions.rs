//! Builds generalised Andrásfai graphs and blow-ups and prints them in the
//! JSON and DOT formats the command line understands.
//!
//! cargo run --example constructions

use sparse_halves::andrasfai::andrasfai_order;
use sparse_halves::{blow_up, generalized_andrasfai};

fn main() -> sparse_halves::Result<()> {
    for k in 2..=4 {
        for d in 1..=4 {
            let g = generalized_andrasfai(k, d)?;
            assert_eq!(g.n(), andrasfai_order(k, d));
            println!("F({k},{d}): n={:<2} edges={:<3} degree={}", g.n(), g.edge_count(), g.max_degree());
        }
    }

    // F^3_3 as drawn in most references: 12 vertices, cubic.
    let f33 = generalized_andrasfai(3, 3)?;
    println!("\n{}", f33.to_dot("F33"));

    // Unbalanced blow-up of C5 = F(2,2); an empty class is allowed.
    let b = blow_up(&generalized_andrasfai(2, 2)?, &[2, 0, 1, 3, 1])?;
    println!("blow-up classes: {:?}", b.class_of);
    println!("{}", serde_json::to_string(&b.result)?);
    Ok(())
}
