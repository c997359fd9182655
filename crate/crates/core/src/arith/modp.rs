//! Word-sized prime field arithmetic, deterministic primality and prime sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest supported modulus bit size. Products are formed in `u128`.
pub const MAX_PRIME_BITS: u32 = 62;

/// A prime modulus with a precomputed Barrett constant for moduli below 2^32.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    // floor(2^64 / p); only used when p < 2^32
    mu: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let mu = if p < (1 << 32) {
            ((1u128 << 64) / p as u128) as u64
        } else {
            0
        };
        Modulus { p, mu }
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.mu != 0 {
            let x = a * b;
            let q = ((x as u128 * self.mu as u128) >> 64) as u64;
            let r = x - q * self.p;
            if r >= self.p {
                r - self.p
            } else {
                r
            }
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduce a signed integer.
    pub fn from_i64(&self, v: i64) -> u64 {
        let r = (v as i128).rem_euclid(self.p as i128);
        r as u64
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministically pick a prime `p` with exactly `bits` bits and `p = 1 (mod order)`.
///
/// `bits` is clamped to `[31, MAX_PRIME_BITS]`.
pub fn sample_prime(order: u64, bits: u32, seed: u64) -> u64 {
    let order = order.max(1);
    let bits = bits.clamp(31, MAX_PRIME_BITS);
    let lo = 1u64 << (bits - 1);
    let hi = 1u64 << bits;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let start = rng.gen_range(lo..hi);
    // smallest candidate >= start with candidate = 1 mod order
    let mut c = start - (start % order) + 1;
    if c < start {
        c += order;
    }
    loop {
        if c >= hi {
            c = lo - (lo % order) + 1;
            if c < lo {
                c += order;
            }
        }
        if is_prime(c) {
            return c;
        }
        c += order;
    }
}

/// Distinct prime factors of `n`, by trial division (`n` is a small root order).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The canonical primitive `order`-th root of unity mod `p`: `g^((p-1)/order)` for the
/// smallest `g >= 2` that makes it primitive. Returns `None` when `order` does not divide `p-1`.
pub fn primitive_root_of_unity(order: u64, p: u64) -> Option<u64> {
    if order == 0 || (p - 1) % order != 0 {
        return None;
    }
    let m = Modulus::new(p);
    let factors = prime_factors(order);
    let e = (p - 1) / order;
    for g in 2..p {
        let r = m.pow(g, e);
        if factors.iter().all(|&q| m.pow(r, order / q) != 1) {
            return Some(r);
        }
    }
    None
}
