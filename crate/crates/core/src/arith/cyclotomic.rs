//! Prime-field surrogates for cyclotomic coordinates.
//!
//! A prime `p = 1 (mod order)` contains a primitive `order`-th root of unity
//! `w`. The values `(w^k + w^-k)/2` and `(w^k - w^-k)/(2i)` with `i = w^(order/4)`
//! satisfy the same polynomial identities as `cos(2 pi k / order)` and
//! `sin(2 pi k / order)`, so ranks and incidences computed with them agree with the
//! complex computation outside finitely many primes.

use super::modp::{primitive_root_of_unity, sample_prime, Modulus};
use super::scalar::{Fp, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicEmbedding {
    order: u64,
    modulus: Modulus,
    root: u64,
}

impl CyclotomicEmbedding {
    /// Embedding for a given prime; fails when `order` does not divide `p - 1`.
    pub fn new(order: u64, p: u64) -> Result<Self> {
        let root = primitive_root_of_unity(order, p).ok_or_else(|| {
            Error::Field(format!("F_{p} has no primitive root of unity of order {order}"))
        })?;
        Ok(CyclotomicEmbedding {
            order,
            modulus: Modulus::new(p),
            root,
        })
    }

    /// Sample a suitable prime deterministically from `seed`.
    pub fn sample(order: u64, bits: u32, seed: u64) -> Self {
        let p = sample_prime(order, bits, seed);
        Self::new(order, p).expect("sampled prime is 1 mod order")
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prime(&self) -> u64 {
        self.modulus.value()
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    fn scalar(&self, r: u64) -> Scalar {
        Scalar::Mod(Fp::new(r, self.prime()))
    }

    fn root_pow_raw(&self, k: i64) -> u64 {
        let e = k.rem_euclid(self.order as i64) as u64;
        self.modulus.pow(self.root, e)
    }

    /// `w^k` as a field scalar.
    pub fn root_pow(&self, k: i64) -> Scalar {
        self.scalar(self.root_pow_raw(k))
    }

    /// The element standing in for the imaginary unit. Needs `4 | order`.
    pub fn imaginary_unit(&self) -> Result<u64> {
        if self.order % 4 != 0 {
            return Err(Error::Field(format!(
                "order {} is not divisible by 4; no square root of -1 is fixed",
                self.order
            )));
        }
        Ok(self.root_pow_raw((self.order / 4) as i64))
    }

    /// Surrogate of `cos(2 pi k / order)`.
    pub fn cos(&self, k: i64) -> Scalar {
        let m = &self.modulus;
        let s = m.add(self.root_pow_raw(k), self.root_pow_raw(-k));
        self.scalar(m.mul(s, m.inv(2)))
    }

    /// Surrogate of `sin(2 pi k / order)`.
    pub fn sin(&self, k: i64) -> Result<Scalar> {
        let m = &self.modulus;
        let i = self.imaginary_unit()?;
        let d = m.sub(self.root_pow_raw(k), self.root_pow_raw(-k));
        Ok(self.scalar(m.mul(d, m.inv(m.mul(2, i)))))
    }
}
