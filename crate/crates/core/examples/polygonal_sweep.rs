// P_N and its completion for N = 3..10 over a prime field with 2N-th roots of unity.

use unexpected_curves::arrangement::is_supersolvable;
use unexpected_curves::certifier::certify_with;
use unexpected_curves::generators::{polygonal, FieldChoice};
use unexpected_curves::interpolation::SamplingOptions;
use unexpected_curves::splitting::empirical_splitting;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SamplingOptions::default();
    for n in 3..=10 {
        for complete in [false, true] {
            let a = polygonal(n, complete, FieldChoice::prime(n as u64))?;
            let v = certify_with(&a.dual_configuration(), &opts, false)?;
            println!(
                "{:<7} lines={:<3} supersolvable={:<5} splitting={:<8} admits={}{}",
                a.label().unwrap_or("?"),
                a.len(),
                is_supersolvable(&a).0,
                empirical_splitting(&a, &opts)?.to_string(),
                v.admits,
                v.interval.map(|i| format!(" degrees {i}")).unwrap_or_default()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
