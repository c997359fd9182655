use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::Modulus;
use crate::error::{Error, Result};

/// Arbitrary-precision rational; always normalized with a positive denominator.
pub type Rational = BigRational;

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backend {
    Rational,
    Prime(u64),
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "Q"),
            Backend::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    res: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp {
            res: value % modulus,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.res
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn m(&self) -> Modulus {
        Modulus::new(self.modulus)
    }
}

/// An exact field element: rational or prime-field residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Mod(Fp),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Mod(x) => Backend::Prime(x.modulus),
        }
    }

    pub fn from_i64(v: i64, backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rational(Rational::from_integer(BigInt::from(v))),
            Backend::Prime(p) => Scalar::Mod(Fp::new(Modulus::new(p).from_i64(v), p)),
        }
    }

    pub fn zero(backend: Backend) -> Scalar {
        Scalar::from_i64(0, backend)
    }

    pub fn one(backend: Backend) -> Scalar {
        Scalar::from_i64(1, backend)
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(Rational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod(x) => x.res == 0,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }

    pub fn as_fp(&self) -> Option<Fp> {
        match self {
            Scalar::Mod(x) => Some(*x),
            Scalar::Rational(_) => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.backend() == other.backend() {
            Ok(())
        } else {
            Err(Error::BackendMismatch(self.backend(), other.backend()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod(x) => Scalar::Mod(Fp::new(x.m().inv(x.res), x.modulus)),
        })
    }

    /// Reduce into `F_p`. `None` when `p` divides the denominator.
    pub fn reduce(&self, p: u64) -> Option<u64> {
        match self {
            Scalar::Rational(r) => {
                let pb = BigInt::from(p);
                let den = r.denom().mod_floor(&pb).to_u64()?;
                if den == 0 {
                    return None;
                }
                let num = r.numer().mod_floor(&pb).to_u64()?;
                let m = Modulus::new(p);
                Some(m.mul(num, m.inv(den)))
            }
            Scalar::Mod(x) => (x.modulus == p).then_some(x.res),
        }
    }

    /// Float approximation; only meaningful for rationals.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Scalar::Rational(r) => {
                let n = r.numer().to_f64()?;
                let d = r.denom().to_f64()?;
                Some(n / d)
            }
            Scalar::Mod(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(x) => write!(f, "{} mod {}", x.res, x.modulus),
        }
    }
}

// Operator impls panic on mixed backends. Geometric types validate backends at
// construction, so internal arithmetic never mixes them; public entry points use
// the `try_*` variants.
macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modop:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => {
                        Scalar::Mod(Fp {
                            res: a.m().$modop(a.res, b.res),
                            modulus: a.modulus,
                        })
                    }
                    _ => panic!(
                        "scalar backend mismatch: {} vs {}",
                        self.backend(),
                        rhs.backend()
                    ),
                }
            }
        }
    };
}

binop!(Add, add, |a: &Rational, b: &Rational| a + b, add);
binop!(Sub, sub, |a: &Rational, b: &Rational| a - b, sub);
binop!(Mul, mul, |a: &Rational, b: &Rational| a * b, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Mod(x) => Scalar::Mod(Fp {
                res: x.m().neg(x.res),
                modulus: x.modulus,
            }),
        }
    }
}

/// Scale a rational triple to a primitive integer triple (same projective point).
pub fn primitive_integer_triple(coords: &[Rational; 3]) -> [BigInt; 3] {
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let g = if g.is_zero() { BigInt::one() } else { g.abs() };
    [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let s = Scalar::ratio(6, -4);
        let r = s.as_rational().unwrap();
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
        let z = Scalar::ratio(0, 7);
        assert_eq!(*z.as_rational().unwrap().denom(), BigInt::one());
    }

    #[test]
    fn mixed_backend_is_an_error() {
        let a = Scalar::from_i64(1, Backend::Rational);
        let b = Scalar::from_i64(1, Backend::Prime(7));
        assert!(matches!(a.try_add(&b), Err(Error::BackendMismatch(..))));
        let c = Scalar::from_i64(1, Backend::Prime(11));
        assert!(b.try_mul(&c).is_err());
    }

    #[test]
    fn reduction_mod_p() {
        let half = Scalar::ratio(1, 2);
        let r = half.reduce(7).unwrap();
        assert_eq!((r * 2) % 7, 1);
        assert_eq!(Scalar::ratio(1, 7).reduce(7), None);
        assert_eq!(Scalar::ratio(-1, 1).reduce(7), Some(6));
    }

    #[test]
    fn primitive_triples() {
        let t = [
            Rational::new(1.into(), 2.into()),
            Rational::new((-1).into(), 4.into()),
            Rational::from_integer(1.into()),
        ];
        let p = primitive_integer_triple(&t);
        assert_eq!(p, [BigInt::from(2), BigInt::from(-1), BigInt::from(4)]);
    }
}
