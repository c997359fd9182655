// The octagon chain, computed over two primes that must agree.

use unexpected_curves::certifier::certify_with;
use unexpected_curves::generators::{octagon_chain, FieldChoice, OctStage};
use unexpected_curves::interpolation::SamplingOptions;
use unexpected_curves::splitting::empirical_splitting;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SamplingOptions::default();
    for stage in OctStage::all() {
        let mut seen = Vec::new();
        for seed in [1, 2] {
            let a = octagon_chain(stage, FieldChoice::prime(seed))?;
            let v = certify_with(&a.dual_configuration(), &opts, false)?;
            seen.push((empirical_splitting(&a, &opts)?, v.admits, a.backend()));
        }
        let agree = seen[0].0 == seen[1].0 && seen[0].1 == seen[1].1;
        println!(
            "{:<6} {:<8} admits={:<5} ({} and {} agree: {agree})",
            stage.to_string(),
            seen[0].0.to_string(),
            seen[0].1,
            seen[0].2,
            seen[1].2
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
