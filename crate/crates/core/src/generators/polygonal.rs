use std::f64::consts::PI;

use num_integer::Integer;

use super::FieldChoice;
use crate::arith::{Backend, CyclotomicEmbedding, Scalar};
use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};
use crate::geometry::{line_through, ProjLine, ProjPoint};

/// Root order used for the regular `N`-gon: vertices need `N`-th roots, axes need
/// `2N`-th roots and sines need a fourth root of unity.
pub fn polygonal_order(n: usize) -> u64 {
    (2 * n as u64).lcm(&4)
}

fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// Edges `V_k V_{k+1}` of the regular `N`-gon with vertices on the unit circle,
/// then the `N` symmetry axes at angles `pi k / N`, then (if `complete`) the line at
/// infinity.
pub fn polygonal(n: usize, complete: bool, field: FieldChoice) -> Result<LineArrangement> {
    if n < 3 {
        return Err(Error::InvalidFamily("polygonal needs N >= 3".into()));
    }
    let (bits, seed) = match field {
        FieldChoice::Prime { bits, seed } => (bits, seed),
        FieldChoice::Rational => {
            return Err(Error::Field(format!(
                "the regular {n}-gon needs roots of unity; use a prime field"
            )))
        }
    };
    let order = polygonal_order(n);
    let emb = CyclotomicEmbedding::sample(order, bits, seed);
    let b = Backend::Prime(emb.prime());
    let step = (order / n as u64) as i64;
    let half = (order / (2 * n as u64)) as i64;

    let mut lines = Vec::with_capacity(2 * n + 1);
    let mut hints = Vec::with_capacity(2 * n + 1);

    let vertex = |k: i64| -> Result<ProjPoint> {
        ProjPoint::new([emb.cos(k * step), emb.sin(k * step)?, Scalar::one(b)])
    };
    let fvertex = |k: i64| {
        let t = 2.0 * PI * k as f64 / n as f64;
        [t.cos(), t.sin(), 1.0]
    };
    for k in 0..n as i64 {
        lines.push(line_through(&vertex(k)?, &vertex(k + 1)?)?);
        hints.push(cross(fvertex(k), fvertex(k + 1)));
    }
    for k in 0..n as i64 {
        let s = emb.sin(k * half)?;
        let c = emb.cos(k * half);
        lines.push(ProjLine::new([s, -&c, Scalar::zero(b)])?);
        let t = PI * k as f64 / n as f64;
        hints.push([t.sin(), -t.cos(), 0.0]);
    }
    if complete {
        lines.push(ProjLine::from_i64([0, 0, 1], b)?);
        hints.push([0.0, 0.0, 1.0]);
    }
    let label = if complete { format!("P{n}bar") } else { format!("P{n}") };
    Ok(LineArrangement::new(lines)?.with_hints(hints)?.with_label(label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{is_full_rank, is_supersolvable, max_multiplicity};

    #[test]
    fn square() {
        let a = polygonal(4, false, FieldChoice::prime(1)).unwrap();
        assert_eq!(a.len(), 8);
        assert_eq!(max_multiplicity(&a), 4);
        assert!(is_supersolvable(&a).0);
        assert!(is_full_rank(&a));
    }

    #[test]
    fn supersolvability_pattern() {
        for n in 3..=10 {
            let p = polygonal(n, false, FieldChoice::prime(n as u64)).unwrap();
            let pb = polygonal(n, true, FieldChoice::prime(n as u64)).unwrap();
            assert_eq!(p.len(), 2 * n);
            assert_eq!(pb.len(), 2 * n + 1);
            assert!(is_supersolvable(&p).0, "P{n}");
            assert_eq!(is_supersolvable(&pb).0, n % 2 == 0, "P{n}bar");
            assert_eq!(max_multiplicity(&pb), n);
        }
    }

    #[test]
    fn rational_field_rejected() {
        assert!(matches!(polygonal(5, true, FieldChoice::Rational), Err(Error::Field(_))));
    }
}
