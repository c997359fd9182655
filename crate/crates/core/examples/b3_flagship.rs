// Nine points dual to the B3 arrangement: the unexpected quartic.

use unexpected_curves::certifier::certify;
use unexpected_curves::generators::b3_configuration;
use unexpected_curves::interpolation::{ideal_dimension, FatPointScheme, SamplingOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = b3_configuration();
    let opts = SamplingOptions::default();
    let v = certify(&z, &opts)?;
    println!("admits = {}", v.admits);
    println!("splitting = {}", v.splitting.expect("at least three points"));
    if let Some(i) = v.interval {
        println!("curve degrees {i}");
    }
    let quartics = ideal_dimension(&z, &FatPointScheme::empty(), 4, &opts)?;
    println!("quartics through Z: {}", quartics.dimension);
    if let Some(c) = &v.curve {
        println!("through Z: {}", c.verify(&z)?);
        println!("{}", c.polynomial());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
