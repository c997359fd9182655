//! Dense exact linear algebra: fraction-free (Bareiss) elimination over the integers
//! for rational matrices and ordinary Gaussian elimination over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::Modulus;
use super::scalar::{Backend, Fp, Rational, Scalar};
use crate::error::{Error, Result};

/// Row-major matrix of scalars sharing one backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let m = Matrix {
            rows,
            cols,
            entries,
        };
        m.backend()?;
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], backend: Backend) -> Self {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&v| Scalar::from_i64(v, backend)).collect())
            .collect();
        Matrix::from_rows(rows).expect("uniform backend")
    }

    pub fn identity(n: usize, backend: Backend) -> Self {
        let mut e = vec![Scalar::zero(backend); n * n];
        for i in 0..n {
            e[i * n + i] = Scalar::one(backend);
        }
        Matrix {
            rows: n,
            cols: n,
            entries: e,
        }
    }

    pub fn zeros(rows: usize, cols: usize, backend: Backend) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(backend); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// The common backend, or `None` for an empty matrix.
    pub fn backend(&self) -> Result<Option<Backend>> {
        let mut it = self.entries.iter();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let b = first.backend();
        for e in it {
            if e.backend() != b {
                return Err(Error::BackendMismatch(b, e.backend()));
            }
        }
        Ok(Some(b))
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Precondition("vector length mismatch".into()));
        }
        (0..self.rows)
            .map(|r| {
                let mut acc: Option<Scalar> = None;
                for (a, x) in self.row(r).iter().zip(v) {
                    let t = a.try_mul(x)?;
                    acc = Some(match acc {
                        None => t,
                        Some(s) => s.try_add(&t)?,
                    });
                }
                Ok(acc.unwrap_or_else(|| Scalar::zero(Backend::Rational)))
            })
            .collect()
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row: Vec<&Rational> = self
                    .row(r)
                    .iter()
                    .map(|s| s.as_rational().expect("rational backend"))
                    .collect();
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| (*x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<u64> {
        self.entries
            .iter()
            .map(|s| s.as_fp().expect("prime backend").residue())
            .collect()
    }
}

/// Exact rank.
pub fn rank(m: &Matrix) -> Result<usize> {
    match m.backend()? {
        None => Ok(0),
        Some(Backend::Rational) => Ok(bareiss_echelon(m.integer_rows(), m.cols).rank()),
        Some(Backend::Prime(p)) => {
            let mut data = m.residue_rows();
            Ok(rank_mod(&mut data, m.rows, m.cols, Modulus::new(p)))
        }
    }
}

/// Basis of the right null space. Rational kernels are returned as primitive
/// integer vectors.
pub fn kernel_basis(m: &Matrix) -> Result<Vec<Vec<Scalar>>> {
    match m.backend()? {
        None => Ok((0..m.cols)
            .map(|i| {
                (0..m.cols)
                    .map(|j| Scalar::from_i64((i == j) as i64, Backend::Rational))
                    .collect()
            })
            .collect()),
        Some(Backend::Rational) => {
            let ech = bareiss_echelon(m.integer_rows(), m.cols);
            Ok(ech
                .kernel()
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|x| Scalar::Rational(Rational::from_integer(x)))
                        .collect()
                })
                .collect())
        }
        Some(Backend::Prime(p)) => {
            let mut data = m.residue_rows();
            Ok(kernel_mod(&mut data, m.rows, m.cols, Modulus::new(p))
                .into_iter()
                .map(|v| v.into_iter().map(|x| Scalar::Mod(Fp::new(x, p))).collect())
                .collect())
        }
    }
}

/// Fraction-free row echelon form of an integer matrix.
pub struct IntegerEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl IntegerEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Kernel basis by back substitution, scaled to primitive integer vectors.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (i, &pc) in self.pivots.iter().enumerate().rev() {
                let row = &self.rows[i];
                let mut s = Rational::zero();
                for c in pc + 1..self.cols {
                    if !row[c].is_zero() && !x[c].is_zero() {
                        s += Rational::from_integer(row[c].clone()) * &x[c];
                    }
                }
                x[pc] = -s / Rational::from_integer(row[pc].clone());
            }
            basis.push(primitive(&x));
        }
        basis
    }
}

fn primitive(x: &[Rational]) -> Vec<BigInt> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    // first nonzero entry positive
    let sign = ints
        .iter()
        .find(|v| !v.is_zero())
        .map_or(BigInt::one(), |v| v.signum());
    let g = g * sign;
    ints.into_iter().map(|v| v / &g).collect()
}

/// Bareiss elimination with column skipping. Every intermediate entry is a minor
/// of the input, so each division is exact.
pub fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> IntegerEchelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let pval = prow[c].clone();
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            if f.is_zero() {
                for k in c + 1..cols {
                    if !row[k].is_zero() {
                        row[k] = (&row[k] * &pval) / &prev;
                    }
                }
                continue;
            }
            for k in c + 1..cols {
                let v = &row[k] * &pval - &f * &prow[k];
                row[k] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pval;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    IntegerEchelon {
        rows: a,
        pivots,
        cols,
    }
}

/// In-place forward elimination over `F_p`; returns (rank, pivot columns).
/// Pivot rows are left normalized to a leading 1.
pub fn echelon_mod(a: &mut [u64], rows: usize, cols: usize, m: Modulus) -> Vec<usize> {
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for k in 0..cols {
                a.swap(r * cols + k, piv * cols + k);
            }
        }
        let inv = m.inv(a[r * cols + c]);
        for k in c..cols {
            a[r * cols + k] = m.mul(a[r * cols + k], inv);
        }
        let (top, rest) = a.split_at_mut((r + 1) * cols);
        let prow = &top[r * cols..];
        for row in rest.chunks_exact_mut(cols) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = m.neg(f);
            for k in c..cols {
                let pk = prow[k];
                if pk != 0 {
                    row[k] = m.add(row[k], m.mul(nf, pk));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(a: &mut [u64], rows: usize, cols: usize, m: Modulus) -> usize {
    echelon_mod(a, rows, cols, m).len()
}

pub fn kernel_mod(a: &mut [u64], rows: usize, cols: usize, m: Modulus) -> Vec<Vec<u64>> {
    let pivots = echelon_mod(a, rows, cols, m);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u64; cols];
        x[free] = 1;
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let row = &a[i * cols..(i + 1) * cols];
            let mut s = 0;
            for c in pc + 1..cols {
                if row[c] != 0 && x[c] != 0 {
                    s = m.add(s, m.mul(row[c], x[c]));
                }
            }
            x[pc] = m.neg(s);
        }
        basis.push(x);
    }
    basis
}
