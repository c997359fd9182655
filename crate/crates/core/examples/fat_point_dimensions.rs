// Dimension tables of [I(Z + jQ)]_d for the dual points of the complete tic-tac-toe arrangement.

use unexpected_curves::generators::tictactoe;
use unexpected_curves::interpolation::{expected_dimension, ideal_dimension, FatPointScheme, SamplingOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = tictactoe(1, 1, true)?.dual_configuration();
    let opts = SamplingOptions::default();
    println!("|Z| = {}; entries are actual/expected, * marks excess", z.len());
    print!("{:>4}", "d\\j");
    for j in 0..=7 {
        print!("{j:>8}");
    }
    println!();
    for d in 1..=8 {
        print!("{d:>4}");
        for j in 0..=7 {
            let x = if j == 0 { FatPointScheme::empty() } else { FatPointScheme::generic(j, 1) };
            let actual = ideal_dimension(&z, &x, d, &opts)?.dimension;
            let expected = expected_dimension(&z, &x, d, &opts)?;
            let mark = if actual > expected { "*" } else { " " };
            print!("{:>7}{mark}", format!("{actual}/{expected}"));
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
