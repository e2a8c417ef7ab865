//! Places a blow-up of `F^k_d` on the circle, checks that adjacency is
//! exactly "angle above (k-1)/(2k-1)", and evaluates a few λ and z_ξ values.
//!
//! cargo run --example circle_representation

use sparse_halves::arith::{CirclePoint, CircularInterval, EndMode};
use sparse_halves::circle::{lambda, recognize_blow_up, z_xi_backward};
use sparse_halves::{blow_up, generalized_andrasfai, represent_blow_up, verify_angle_property, z_xi};

fn main() -> sparse_halves::Result<()> {
    let base = generalized_andrasfai(3, 3)?;
    let b = blow_up(&base, &[2, 1, 1, 3, 1, 1, 2, 1, 1, 2, 1, 1])?;
    let arr = represent_blow_up(&b, 3)?;
    println!("n = {}, threshold = {}", arr.n(), arr.threshold());
    for v in arr.sorted_order().iter().take(6) {
        println!("  vertex {v:<2} at {}", arr.position(*v));
    }
    let check = verify_angle_property(&arr);
    println!("angle property holds: {}", check.holds);
    println!("recognised as F(3,d) blow-up: {:?}", recognize_blow_up(&arr));

    let xi = CirclePoint::from_ratio(1, 4);
    let z = z_xi(&arr, &xi)?;
    let zb = z_xi_backward(&arr, &xi)?;
    println!("xi = {xi}: z_xi = vertex {z} at {}, z'_xi = vertex {zb} at {}", arr.position(z), arr.position(zb));

    let c5 = represent_blow_up(&sparse_halves::balanced_blow_up(&generalized_andrasfai(2, 2)?, 2)?, 2)?;
    let from = CirclePoint::zero();
    let to = CirclePoint::from_ratio(2, 5);
    for (sm, em) in [(EndMode::Closed, EndMode::Closed), (EndMode::Half, EndMode::Half), (EndMode::Open, EndMode::Open)]
    {
        let i = CircularInterval::new(from.clone(), to.clone(), sm, em);
        println!("C5 x 2: lambda({i:?}) = {}", lambda(&c5, &i));
    }
    println!("{}", serde_json::to_string(&c5)?);
    Ok(())
}
