// The hexagon chain over the rationals, certified by Addition-Deletion.

use unexpected_curves::arrangement::{combinatorially_equivalent, dual_arrangement, LineArrangement};
use unexpected_curves::certifier::certify_with;
use unexpected_curves::generators::{hexagon_chain, hexagon_lines, HexStage};
use unexpected_curves::interpolation::SamplingOptions;
use unexpected_curves::splitting::chain_from_supersolvable;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = hexagon_lines();
    let base = LineArrangement::new(h.base.clone())?;
    let cert = chain_from_supersolvable(&base, &h.added())?;
    let skip = cert.steps.len() - 24;
    let opts = SamplingOptions::default();
    for (stage, step) in HexStage::all()[1..].iter().zip(&cert.steps[skip..]) {
        let v = certify_with(&hexagon_chain(*stage)?.dual_configuration(), &opts, false)?;
        println!(
            "{:<6} count {:>2} -> {:<8} {}",
            stage.to_string(),
            step.restriction_count,
            step.after.to_string(),
            v.interval.map(|i| format!("unexpected in degrees {i}")).unwrap_or_default()
        );
    }
    let b6p = hexagon_chain(HexStage::BPrime(6))?;
    let dual = dual_arrangement(&hexagon_chain(HexStage::Base)?)?;
    println!("B'6 matches the dual of Sing(P6bar): {}", combinatorially_equivalent(&b6p, &dual));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
