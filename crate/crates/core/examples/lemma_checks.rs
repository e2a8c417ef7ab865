//! Evaluates the interval-counting lemma on random inputs. Parts i to iii
//! always apply. The other parts are implications whose hypothesis needs
//! dense arc halves, so on blow-ups most samples are vacuous and the report
//! names the sparse arc.
//!
//! cargo run --example lemma_checks

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_halves::proof_lab::{partition_identity_check, sampling, LemmaInput, LemmaPart, ProofLab};
use sparse_halves::{balanced_blow_up, generalized_andrasfai, represent_blow_up};

fn main() -> sparse_halves::Result<()> {
    let arr = represent_blow_up(&balanced_blow_up(&generalized_andrasfai(2, 2)?, 4)?, 2)?;
    let lab = ProofLab::new(&arr)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("C5 x 4: n = {}, alpha = {}", arr.n(), lab.alpha());

    for part in [LemmaPart::I, LemmaPart::Ii, LemmaPart::Iii, LemmaPart::Iv, LemmaPart::Vi, LemmaPart::U4] {
        let (mut held, mut vacuous) = (0, 0);
        let samples = 200;
        for _ in 0..samples {
            let input = if part.takes_interval() {
                LemmaInput::Interval(sampling::random_interval(&mut rng, &arr, part))
            } else {
                LemmaInput::Point(sampling::random_point(&mut rng, &arr))
            };
            let r = lab.check(part, &input)?;
            held += r.implication_held as usize;
            vacuous += !r.hypotheses_held as usize;
        }
        println!("part {:<3} {held}/{samples} held, {vacuous} vacuous", part.id());
    }

    let sample = lab.check(LemmaPart::U4, &LemmaInput::Point(arr.position(0).clone()))?;
    println!("\nu4 at vertex 0: {}", serde_json::to_string_pretty(&sample)?);

    let id = partition_identity_check(&arr);
    println!("counting identity: lhs = {}, rhs = {}, holds = {}", id.lhs, id.rhs, id.holds);
    Ok(())
}
