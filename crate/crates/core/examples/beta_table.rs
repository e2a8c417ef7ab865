//! Exact `beta(alpha)` values for the classical constructions, printed as CSV
//! next to the complete-bipartite and five-cycle predictions.
//!
//! cargo run --release --example beta_table

use sparse_halves::density::{beta_table, beta_table_csv};
use sparse_halves::graph::{complete_bipartite, petersen};
use sparse_halves::{balanced_blow_up, generalized_andrasfai, Rational, SubsetBudget};

fn main() -> sparse_halves::Result<()> {
    let constructions = vec![
        ("K(10,10)".to_string(), complete_bipartite(10, 10)?),
        ("C5x4".to_string(), balanced_blow_up(&generalized_andrasfai(2, 2)?, 4)?.result),
        ("Petersenx2".to_string(), balanced_blow_up(&petersen(), 2)?.result),
        ("F(2,3)x2".to_string(), balanced_blow_up(&generalized_andrasfai(2, 3)?, 2)?.result),
    ];
    let alphas: Vec<Rational> = ["1/2", "11/20", "3/5", "7/10", "4/5"].iter().map(|a| a.parse().unwrap()).collect();
    print!("{}", beta_table_csv(&beta_table(&constructions, &alphas, SubsetBudget::default())));
    Ok(())
}
