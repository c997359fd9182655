// Unexpected curves with respect to a fat point plus generic simple points.

use unexpected_curves::certifier::{certify_problem_b, dual_splitting, further_scheme};
use unexpected_curves::generators::{hexagon_chain, HexStage};
use unexpected_curves::interpolation::SamplingOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = hexagon_chain(HexStage::B(6))?.dual_configuration();
    let opts = SamplingOptions::default();
    let t = dual_splitting(&z, &opts)?;
    println!("{} points, splitting {t}", z.len());
    for j in 0..=t.b() - t.a() - 1 {
        let x = further_scheme(t.a(), j, 17)?;
        let v = certify_problem_b(&z, &x, t.a() + 1 + j, &opts)?;
        println!(
            "j={j}: degree {} with {} fat plus {j} simple: actual {} expected {} admits={}",
            v.degree,
            t.a() + j,
            v.actual.dimension,
            v.expected,
            v.admits
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
