// SVG drawings of a few arrangements, written to a directory (default: the system temp dir).

use std::path::PathBuf;

use unexpected_curves::generators::{hexagon_chain, polygonal, tictactoe, FieldChoice, HexStage};
use unexpected_curves::render::{render_svg, RenderOptions, Viewport};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("unexpected-figures"));
    std::fs::create_dir_all(&dir)?;
    let disk = RenderOptions::default();
    let box3 = RenderOptions {
        viewport: Viewport::Affine { xmin: -3.0, xmax: 3.0, ymin: -3.0, ymax: 3.0 },
        ..disk
    };
    let figures = [
        ("p4bar.svg", polygonal(4, true, FieldChoice::prime(1))?, disk),
        ("p6bar.svg", polygonal(6, true, FieldChoice::prime(1))?, disk),
        ("tictactoe_2_1.svg", tictactoe(2, 1, false)?, box3),
        ("hexagon_b6.svg", hexagon_chain(HexStage::B(6))?, disk),
    ];
    for (name, a, opts) in figures {
        let path = dir.join(name);
        std::fs::write(&path, render_svg(&a, &opts)?)?;
        println!("{}", path.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
