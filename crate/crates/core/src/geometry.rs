//! Points and lines of the projective plane and the duality between them.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::scalar::primitive_integer_triple;
use crate::arith::{Backend, Rational, Scalar};
use crate::error::{Error, Result};

/// A nonzero triple up to scale, stored with its first nonzero entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Triple([Scalar; 3]);

impl Triple {
    fn new(coords: [Scalar; 3]) -> Result<Self> {
        let b = coords[0].backend();
        for c in &coords[1..] {
            if c.backend() != b {
                return Err(Error::BackendMismatch(b, c.backend()));
            }
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroTriple)?;
        let inv = lead.inv().expect("nonzero");
        Ok(Triple(coords.map(|c| &c * &inv)))
    }

    fn backend(&self) -> Backend {
        self.0[0].backend()
    }

    fn dot(&self, other: &Triple) -> Result<Scalar> {
        if self.backend() != other.backend() {
            return Err(Error::BackendMismatch(self.backend(), other.backend()));
        }
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        Ok(&(&(a0 * b0) + &(a1 * b1)) + &(a2 * b2))
    }

    fn cross(&self, other: &Triple) -> Result<Triple> {
        if self.backend() != other.backend() {
            return Err(Error::BackendMismatch(self.backend(), other.backend()));
        }
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        let c = [
            &(a1 * b2) - &(a2 * b1),
            &(a2 * b0) - &(a0 * b2),
            &(a0 * b1) - &(a1 * b0),
        ];
        Triple::new(c).map_err(|e| match e {
            Error::ZeroTriple => Error::DegeneratePair,
            other => other,
        })
    }

    fn reduce(&self, p: u64) -> Option<Triple> {
        let coords = match self.backend() {
            Backend::Rational => {
                let ints = self.integer_coords()?;
                ints.map(|v| Scalar::Rational(Rational::from_integer(v)))
            }
            Backend::Prime(q) if q == p => return Some(self.clone()),
            Backend::Prime(_) => return None,
        };
        let r: Option<Vec<Scalar>> = coords
            .iter()
            .map(|c| c.reduce(p).map(|v| Scalar::Mod(crate::arith::Fp::new(v, p))))
            .collect();
        let r = r?;
        Triple::new([r[0].clone(), r[1].clone(), r[2].clone()]).ok()
    }

    fn integer_coords(&self) -> Option<[BigInt; 3]> {
        let rats: Vec<Rational> = self
            .0
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect::<Option<_>>()?;
        Some(primitive_integer_triple(&[
            rats[0].clone(),
            rats[1].clone(),
            rats[2].clone(),
        ]))
    }

    fn fmt_coords(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.backend() {
            Backend::Rational => write!(f, "{}:{}:{}", self.0[0], self.0[1], self.0[2]),
            Backend::Prime(p) => {
                let r: Vec<u64> = self.0.iter().map(|c| c.as_fp().unwrap().residue()).collect();
                write!(f, "{}:{}:{} mod {p}", r[0], r[1], r[2])
            }
        }
    }
}

/// A point `(x0:x1:x2)` of the projective plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint(Triple);

/// A line `l0*y0 + l1*y1 + l2*y2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine(Triple);

macro_rules! triple_api {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coords: [Scalar; 3]) -> Result<Self> {
                Triple::new(coords).map($ty)
            }

            /// Integer triple over the rationals.
            pub fn rational(a: i64, b: i64, c: i64) -> Result<Self> {
                Self::from_i64([a, b, c], Backend::Rational)
            }

            pub fn from_i64(v: [i64; 3], backend: Backend) -> Result<Self> {
                Self::new(v.map(|x| Scalar::from_i64(x, backend)))
            }

            /// Rational triple from `(numerator, denominator)` pairs.
            pub fn ratios(v: [(i64, i64); 3]) -> Result<Self> {
                Self::new(v.map(|(n, d)| Scalar::ratio(n, d)))
            }

            /// Canonical coordinates (first nonzero entry is 1).
            pub fn coords(&self) -> &[Scalar; 3] {
                &self.0 .0
            }

            pub fn backend(&self) -> Backend {
                self.0.backend()
            }

            /// Reduce a rational triple (or re-tag a residue triple) into `F_p`.
            /// `None` when `p` is a bad prime for this triple.
            pub fn reduce(&self, p: u64) -> Option<Self> {
                self.0.reduce(p).map($ty)
            }

            /// Primitive integer representative of a rational triple.
            pub fn integer_coords(&self) -> Option<[BigInt; 3]> {
                self.0.integer_coords()
            }

            /// Float approximation of a rational triple.
            pub fn to_f64(&self) -> Option<[f64; 3]> {
                let c = self.coords();
                Some([c[0].to_f64()?, c[1].to_f64()?, c[2].to_f64()?])
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                self.0.fmt_coords(f)?;
                write!(f, ")")
            }
        }
    };
}

triple_api!(ProjPoint);
triple_api!(ProjLine);

pub fn dualize_point(p: &ProjPoint) -> ProjLine {
    ProjLine(p.0.clone())
}

pub fn dualize_line(l: &ProjLine) -> ProjPoint {
    ProjPoint(l.0.clone())
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> Result<bool> {
    Ok(p.0.dot(&l.0)?.is_zero())
}

/// The line through two distinct points.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    p.0.cross(&q.0).map(ProjLine)
}

/// The intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    l.0.cross(&m.0).map(ProjPoint)
}

/// Size of the largest collinear subset, found by grouping points on the line
/// spanned by each pair.
pub fn max_collinear(points: &[ProjPoint]) -> Result<usize> {
    if points.len() < 3 {
        return Ok(points.len());
    }
    let mut best = 2;
    for i in 0..points.len() {
        let mut by_line: HashMap<ProjLine, usize> = HashMap::new();
        for j in i + 1..points.len() {
            let l = line_through(&points[i], &points[j])?;
            *by_line.entry(l).or_insert(1) += 1;
        }
        if let Some(&m) = by_line.values().max() {
            best = best.max(m);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::rational(a, b, c).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::rational(a, b, c).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(pt(2, 4, 6), pt(1, 2, 3));
        assert_eq!(pt(0, -3, 6), pt(0, 1, -2));
        assert!(matches!(ProjPoint::rational(0, 0, 0), Err(Error::ZeroTriple)));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(dualize_point(&pt(1, 0, 0)), ln(1, 0, 0));
        assert_eq!(dualize_point(&pt(1, 1, 1)), ln(1, 1, 1));
        assert_eq!(dualize_line(&dualize_point(&pt(3, -1, 2))), pt(3, -1, 2));
    }

    #[test]
    fn incidence_examples() {
        assert!(!incident(&pt(0, 0, 1), &ln(0, 0, 1)).unwrap());
        assert!(incident(&pt(1, 1, 0), &dualize_point(&pt(1, -1, 0))).unwrap());
        assert!(incident(&pt(1, 2, 3), &ln(3, -3, 1)).unwrap());
    }

    #[test]
    fn joins_and_meets() {
        assert_eq!(line_through(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ln(0, 0, 1));
        assert_eq!(meet(&ln(1, 0, 0), &ln(0, 1, 0)).unwrap(), pt(0, 0, 1));
        // the side x = z of the square
        assert_eq!(line_through(&pt(1, 1, 1), &pt(1, -1, 1)).unwrap(), ln(1, 0, -1));
        assert!(matches!(
            line_through(&pt(1, 2, 3), &pt(2, 4, 6)),
            Err(Error::DegeneratePair)
        ));
    }

    #[test]
    fn collinear_counts() {
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1)];
        assert_eq!(max_collinear(&pts).unwrap(), 3);
        let generic = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 5)];
        assert_eq!(max_collinear(&generic).unwrap(), 2);
        assert_eq!(max_collinear(&generic[..1]).unwrap(), 1);
    }

    #[test]
    fn reduction() {
        let p = pt(1, 2, 3).reduce(7).unwrap();
        assert_eq!(p.backend(), Backend::Prime(7));
        let half = ProjPoint::ratios([(1, 2), (1, 1), (1, 1)]).unwrap();
        // (1:2:2) mod 2 is (1:0:0)
        assert_eq!(half.reduce(2).unwrap(), ProjPoint::from_i64([1, 0, 0], Backend::Prime(2)).unwrap());
    }

    fn arb_point() -> impl Strategy<Value = ProjPoint> {
        (-50i64..50, -50i64..50, -50i64..50)
            .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
            .prop_map(|(a, b, c)| pt(a, b, c))
    }

    proptest! {
        #[test]
        fn duality_is_an_involution(p in arb_point()) {
            prop_assert_eq!(dualize_line(&dualize_point(&p)), p);
        }

        #[test]
        fn pairing_is_symmetric(p in arb_point(), q in arb_point()) {
            prop_assert_eq!(
                incident(&p, &dualize_point(&q)).unwrap(),
                incident(&q, &dualize_point(&p)).unwrap()
            );
        }

        #[test]
        fn join_and_meet_are_incident(p in arb_point(), q in arb_point()) {
            prop_assume!(p != q);
            let l = line_through(&p, &q).unwrap();
            prop_assert!(incident(&p, &l).unwrap() && incident(&q, &l).unwrap());
            let a = dualize_point(&p);
            let b = dualize_point(&q);
            let x = meet(&a, &b).unwrap();
            prop_assert!(incident(&x, &a).unwrap() && incident(&x, &b).unwrap());
        }
    }
}
