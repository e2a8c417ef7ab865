//! `F_d -> F_{d'}` exists exactly when `d' >= d`; also finds the least
//! Andrásfai graph a few small graphs map into.
//!
//! cargo run --release --example homomorphisms

use sparse_halves::graph::{complete_bipartite, cycle, petersen};
use sparse_halves::{andrasfai, find_homomorphism, min_andrasfai_index, verify_homomorphism, HomCaps};

fn main() -> sparse_halves::Result<()> {
    let caps = HomCaps::default();
    println!("rows d, columns d': 'x' marks a homomorphism F_d -> F_d'");
    for d in 1..=5 {
        let row: Vec<&str> = (1..=5)
            .map(|e| {
                let h = find_homomorphism(&andrasfai(d).unwrap(), &andrasfai(e).unwrap(), caps).unwrap();
                if let Some(h) = &h {
                    assert!(verify_homomorphism(h).unwrap());
                }
                if h.is_some() {
                    "x"
                } else {
                    "."
                }
            })
            .collect();
        println!("d={d}: {}", row.join(" "));
    }

    let h = find_homomorphism(&cycle(9)?, &andrasfai(2)?, caps)?.expect("C9 -> C5");
    println!("\nC9 -> C5 map: {:?}", h.map);

    for (name, g) in [("C7", cycle(7)?), ("K(3,3)", complete_bipartite(3, 3)?), ("Petersen", petersen())] {
        println!("{name:<9} least d with G -> F_d (d <= 5): {:?}", min_andrasfai_index(&g, 2, 5, caps)?);
    }
    Ok(())
}
