// Complete tic-tac-toe arrangements grown four diagonals at a time.

use unexpected_curves::generators::{tictactoe, TicTacToe};
use unexpected_curves::interpolation::SamplingOptions;
use unexpected_curves::splitting::{chain_from_supersolvable, empirical_splitting};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = 3;
    let base = tictactoe(k, 0, true)?;
    let extra: Vec<_> = (0..k).flat_map(TicTacToe::next_diagonals).collect();
    let chain = chain_from_supersolvable(&base, &extra)?;
    let skip = chain.steps.len() - extra.len();
    println!("Tbar({k},0) = {}", chain.sequence()[skip]);
    for (i, step) in chain.steps[skip..].iter().enumerate() {
        println!("  add line {:>2}: count {:>2} -> {}", i + 1, step.restriction_count, step.after);
    }
    let opts = SamplingOptions::default();
    for j in 0..=k {
        let a = tictactoe(k, j, true)?;
        println!("Tbar({k},{j}) empirical {}", empirical_splitting(&a, &opts)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
