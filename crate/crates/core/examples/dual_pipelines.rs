// The dual arrangement A^d and the configurations Sing_{>=k}(A^d).

use unexpected_curves::arrangement::{dual_arrangement, sing_at_least};
use unexpected_curves::certifier::certify_with;
use unexpected_curves::generators::{polygonal, FieldChoice};
use unexpected_curves::interpolation::SamplingOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SamplingOptions::default();
    for n in [4, 6] {
        let a = polygonal(n, true, FieldChoice::prime(1))?;
        let ad = dual_arrangement(&a)?;
        println!("P{n}bar^d: {} lines, {:?}", ad.len(), ad.singular_locus().multiplicity_counts());
        for k in 3..=4 {
            let z = sing_at_least(&ad, k);
            if z.len() < 3 {
                continue;
            }
            let v = certify_with(&z, &opts, false)?;
            println!(
                "  Sing>={k}: {} points, splitting {}, admits={}",
                z.len(),
                v.splitting.expect("at least three points"),
                v.admits
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
