//! Dimensions of linear systems of plane curves through points and fat points.
//!
//! A fat point of multiplicity `m` at `Q` imposes the vanishing of every partial
//! derivative of order `m - 1` at `Q` (by Euler's formula the lower orders follow).
//! Generic points are handled by sampling: the dimension at a random point is an
//! upper bound for the generic value and equals it outside a proper closed set.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::matrix::{bareiss_echelon, kernel_mod, rank_mod};
use crate::arith::{sample_prime, Backend, Fp, Modulus, Rational, Scalar};
use crate::arrangement::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::ProjPoint;

/// Half-width of the box from which integer coordinates of generic points are drawn.
pub const GENERIC_RANGE: i64 = 1_000_000;

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: usize) -> usize {
    binom2(d + 2)
}

/// Exponent vectors of degree `d` in graded lexicographic order.
pub fn monomials(d: usize) -> Vec<[u32; 3]> {
    let d = d as u32;
    let mut out = Vec::with_capacity(monomial_count(d as usize));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    Point(ProjPoint),
    /// A generic point, resampled independently for every evaluation.
    Generic { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPoint {
    pub support: Support,
    pub multiplicity: usize,
}

/// A zero-dimensional scheme `m_1 Q_1 + ... + m_s Q_s`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FatPointScheme {
    parts: Vec<FatPoint>,
}

impl FatPointScheme {
    pub fn new(parts: Vec<FatPoint>) -> Result<Self> {
        for (i, p) in parts.iter().enumerate() {
            if p.multiplicity == 0 {
                return Err(Error::Precondition("fat point multiplicity must be at least 1".into()));
            }
            if let Support::Point(q) = &p.support {
                let clash = parts[..i]
                    .iter()
                    .any(|o| matches!(&o.support, Support::Point(r) if r == q));
                if clash {
                    return Err(Error::Overlap);
                }
            }
        }
        Ok(FatPointScheme { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `m Q` for a generic `Q`.
    pub fn generic(m: usize, seed: u64) -> Self {
        FatPointScheme {
            parts: vec![FatPoint {
                support: Support::Generic { seed },
                multiplicity: m,
            }],
        }
    }

    pub fn point(q: ProjPoint, m: usize) -> Self {
        FatPointScheme {
            parts: vec![FatPoint {
                support: Support::Point(q),
                multiplicity: m,
            }],
        }
    }

    pub fn with(mut self, part: FatPoint) -> Result<Self> {
        self.parts.push(part);
        Self::new(self.parts)
    }

    pub fn parts(&self) -> &[FatPoint] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of conditions imposed in high degree: sum of `C(m+1, 2)`.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|p| binom2(p.multiplicity + 1)).sum()
    }

    fn has_generic(&self) -> bool {
        self.parts
            .iter()
            .any(|p| matches!(p.support, Support::Generic { .. }))
    }
}

/// How generic points are sampled and which arithmetic is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingOptions {
    pub samples: usize,
    pub seed: u64,
    /// Number of primes for rational input on the modular route.
    pub primes: usize,
    pub prime_bits: u32,
    /// Use fraction-free elimination over the integers instead of primes.
    pub exact: bool,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            samples: 3,
            seed: 0,
            primes: 2,
            prime_bits: 31,
            exact: false,
        }
    }
}

impl SamplingOptions {
    pub fn with_seed(self, seed: u64) -> Self {
        SamplingOptions { seed, ..self }
    }

    pub fn with_samples(self, samples: usize) -> Self {
        SamplingOptions { samples, ..self }
    }

    pub fn exact(self) -> Self {
        SamplingOptions { exact: true, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub degree: usize,
    pub dimension: usize,
    /// Generic samples per prime; 0 when the system has no generic support.
    pub samples_used: usize,
    pub primes_used: Vec<u64>,
    pub exact: bool,
    /// All samples and all primes produced the same dimension, over at least two
    /// primes or over the integers.
    pub stable: bool,
}

/// Points and concrete supports in a common arithmetic.
enum Coords {
    Mod(Vec<[u64; 3]>),
    Int(Vec<[BigInt; 3]>),
}

fn common_backend(z: &PointConfiguration, x: &FatPointScheme) -> Result<Backend> {
    let mut backend = None;
    let concrete = x.parts.iter().filter_map(|p| match &p.support {
        Support::Point(q) => Some(q),
        Support::Generic { .. } => None,
    });
    for q in z.points().iter().chain(concrete) {
        match backend {
            None => backend = Some(q.backend()),
            Some(b) if b != q.backend() => return Err(Error::BackendMismatch(b, q.backend())),
            _ => {}
        }
    }
    Ok(backend.unwrap_or(Backend::Rational))
}

fn check_overlap(z: &PointConfiguration, x: &FatPointScheme) -> Result<()> {
    for part in &x.parts {
        if let Support::Point(q) = &part.support {
            if z.points().contains(q) {
                return Err(Error::Overlap);
            }
        }
    }
    Ok(())
}

/// Reduce distinct points into `F_p`; `None` if the prime is bad for them.
fn reduce_points(pts: &[&ProjPoint], p: u64) -> Option<Vec<[u64; 3]>> {
    let mut out: Vec<[u64; 3]> = Vec::with_capacity(pts.len());
    let mut seen = std::collections::HashSet::new();
    for q in pts {
        let r = q.reduce(p)?;
        if !seen.insert(r.clone()) {
            return None;
        }
        let c = r.coords();
        out.push([0, 1, 2].map(|i| c[i].as_fp().expect("prime backend").residue()));
    }
    Some(out)
}

fn concrete_points<'a>(z: &'a PointConfiguration, x: &'a FatPointScheme) -> Vec<&'a ProjPoint> {
    z.points()
        .iter()
        .chain(x.parts.iter().filter_map(|p| match &p.support {
            Support::Point(q) => Some(q),
            Support::Generic { .. } => None,
        }))
        .collect()
}

/// Conditions as (point index into a coordinate list, multiplicity); generic parts
/// are appended at the end by the sampler.
struct System {
    degree: usize,
    mults: Vec<usize>,
    generic: Vec<(u64, usize)>,
}

impl System {
    fn new(z: &PointConfiguration, x: &FatPointScheme, degree: usize) -> Self {
        let mut mults = vec![1; z.len()];
        let mut generic = Vec::new();
        for p in &x.parts {
            match p.support {
                Support::Point(_) => mults.push(p.multiplicity),
                Support::Generic { seed } => generic.push((seed, p.multiplicity)),
            }
        }
        System {
            degree,
            mults,
            generic,
        }
    }
}

/// Derivative multi-indices of order `min(m - 1, degree)`.
fn derivative_orders(m: usize, degree: usize) -> Vec<[u32; 3]> {
    monomials((m - 1).min(degree))
}

fn falling(n: u32, k: u32) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

fn mod_rows(
    out: &mut Vec<u64>,
    q: &[u64; 3],
    m: usize,
    mons: &[[u32; 3]],
    degree: usize,
    md: Modulus,
) {
    let pw: Vec<Vec<u64>> = q
        .iter()
        .map(|&c| {
            let mut v = Vec::with_capacity(degree + 1);
            let mut acc = 1u64;
            for _ in 0..=degree {
                v.push(acc);
                acc = md.mul(acc, c);
            }
            v
        })
        .collect();
    for alpha in derivative_orders(m, degree) {
        for beta in mons {
            if (0..3).any(|i| beta[i] < alpha[i]) {
                out.push(0);
                continue;
            }
            let mut v = 1u64;
            for i in 0..3 {
                let f = falling(beta[i], alpha[i]) % md.value();
                v = md.mul(v, md.mul(f, pw[i][(beta[i] - alpha[i]) as usize]));
            }
            out.push(v);
        }
    }
}

fn int_rows(out: &mut Vec<Vec<BigInt>>, q: &[BigInt; 3], m: usize, mons: &[[u32; 3]], degree: usize) {
    let pw: Vec<Vec<BigInt>> = q
        .iter()
        .map(|c| {
            let mut v = Vec::with_capacity(degree + 1);
            let mut acc = BigInt::one();
            for _ in 0..=degree {
                v.push(acc.clone());
                acc *= c;
            }
            v
        })
        .collect();
    for alpha in derivative_orders(m, degree) {
        let row = mons
            .iter()
            .map(|beta| {
                if (0..3).any(|i| beta[i] < alpha[i]) {
                    return BigInt::zero();
                }
                let mut v = BigInt::one();
                for i in 0..3 {
                    v *= BigInt::from(falling(beta[i], alpha[i]));
                    v *= &pw[i][(beta[i] - alpha[i]) as usize];
                }
                v
            })
            .collect();
        out.push(row);
    }
}

fn sample_rng(opts: &SamplingOptions, marker_seed: u64, marker: usize, sample: usize, lane: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ marker_seed.rotate_left(29));
    rng.set_stream(((marker as u64) << 48) ^ ((sample as u64) << 24) ^ lane);
    rng
}

fn random_mod(rng: &mut ChaCha8Rng, p: u64) -> [u64; 3] {
    loop {
        let q = [0; 3].map(|_: u64| rng.gen_range(0..p));
        if q != [0, 0, 0] {
            return q;
        }
    }
}

fn random_int(rng: &mut ChaCha8Rng) -> [BigInt; 3] {
    loop {
        let q = [0; 3].map(|_: i64| rng.gen_range(-GENERIC_RANGE..=GENERIC_RANGE));
        if q != [0, 0, 0] {
            return q.map(BigInt::from);
        }
    }
}

impl System {
    fn mod_matrix(&self, pts: &[[u64; 3]], generic: &[[u64; 3]], md: Modulus) -> (Vec<u64>, usize) {
        let mons = monomials(self.degree);
        let mut data = Vec::new();
        for (q, &m) in pts.iter().zip(&self.mults) {
            mod_rows(&mut data, q, m, &mons, self.degree, md);
        }
        for (q, &(_, m)) in generic.iter().zip(&self.generic) {
            mod_rows(&mut data, q, m, &mons, self.degree, md);
        }
        (data, mons.len())
    }

    fn int_matrix(&self, pts: &[[BigInt; 3]], generic: &[[BigInt; 3]]) -> (Vec<Vec<BigInt>>, usize) {
        let mons = monomials(self.degree);
        let mut rows = Vec::new();
        for (q, &m) in pts.iter().zip(&self.mults) {
            int_rows(&mut rows, q, m, &mons, self.degree);
        }
        for (q, &(_, m)) in generic.iter().zip(&self.generic) {
            int_rows(&mut rows, q, m, &mons, self.degree);
        }
        (rows, mons.len())
    }

    fn sample_mod(&self, opts: &SamplingOptions, sample: usize, p: u64) -> Vec<[u64; 3]> {
        self.generic
            .iter()
            .enumerate()
            .map(|(i, &(seed, _))| random_mod(&mut sample_rng(opts, seed, i, sample, p), p))
            .collect()
    }

    fn sample_int(&self, opts: &SamplingOptions, sample: usize) -> Vec<[BigInt; 3]> {
        self.generic
            .iter()
            .enumerate()
            .map(|(i, &(seed, _))| random_int(&mut sample_rng(opts, seed, i, sample, 0)))
            .collect()
    }

    fn rank_mod(&self, pts: &[[u64; 3]], generic: &[[u64; 3]], md: Modulus) -> usize {
        let (mut data, cols) = self.mod_matrix(pts, generic, md);
        let rows = data.len() / cols;
        rank_mod(&mut data, rows, cols, md)
    }
}

/// Pick `count` distinct good primes for the given rational points.
fn good_primes(pts: &[&ProjPoint], opts: &SamplingOptions, count: usize) -> Vec<(u64, Vec<[u64; 3]>)> {
    let mut out: Vec<(u64, Vec<[u64; 3]>)> = Vec::new();
    let mut s = opts.seed;
    while out.len() < count {
        let p = sample_prime(2, opts.prime_bits, s);
        s = s.wrapping_add(0x5851_f42d_4c95_7f2d);
        if out.iter().any(|(q, _)| *q == p) {
            continue;
        }
        if let Some(r) = reduce_points(pts, p) {
            out.push((p, r));
        }
    }
    out
}

/// Primes and reduced coordinates used for a computation.
fn prepare(z: &PointConfiguration, x: &FatPointScheme, opts: &SamplingOptions) -> Result<(Backend, Coords, Vec<u64>)> {
    check_overlap(z, x)?;
    let backend = common_backend(z, x)?;
    let pts = concrete_points(z, x);
    match backend {
        Backend::Prime(p) => {
            let r = reduce_points(&pts, p).expect("points already over F_p");
            Ok((backend, Coords::Mod(r), vec![p]))
        }
        Backend::Rational if opts.exact => {
            let ints = pts
                .iter()
                .map(|q| q.integer_coords().expect("rational point"))
                .collect();
            Ok((backend, Coords::Int(ints), Vec::new()))
        }
        Backend::Rational => Ok((backend, Coords::Mod(Vec::new()), Vec::new())),
    }
}

/// `dim [I(Z + X)]_degree`, minimized over generic samples.
pub fn ideal_dimension(
    z: &PointConfiguration,
    x: &FatPointScheme,
    degree: usize,
    opts: &SamplingOptions,
) -> Result<DimensionReport> {
    if opts.samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let (backend, coords, _) = prepare(z, x, opts)?;
    let sys = System::new(z, x, degree);
    let cols = monomial_count(degree);
    let samples = if x.has_generic() { opts.samples } else { 1 };
    let samples_used = if x.has_generic() { opts.samples } else { 0 };

    // per-lane list of dimensions, one entry per sample
    let (lanes, exact): (Vec<(u64, Vec<usize>)>, bool) = match (backend, coords) {
        (_, Coords::Int(pts)) => {
            let dims = (0..samples)
                .into_par_iter()
                .map(|s| {
                    let g = sys.sample_int(opts, s);
                    let (rows, cols) = sys.int_matrix(&pts, &g);
                    cols - bareiss_echelon(rows, cols).rank()
                })
                .collect();
            (vec![(0, dims)], true)
        }
        (Backend::Prime(p), Coords::Mod(pts)) => {
            let md = Modulus::new(p);
            let dims = (0..samples)
                .into_par_iter()
                .map(|s| cols - sys.rank_mod(&pts, &sys.sample_mod(opts, s, p), md))
                .collect();
            (vec![(p, dims)], false)
        }
        (Backend::Rational, Coords::Mod(_)) => {
            let pts = concrete_points(z, x);
            let primes = good_primes(&pts, opts, opts.primes.max(1));
            let lanes = primes
                .into_par_iter()
                .map(|(p, red)| {
                    let md = Modulus::new(p);
                    let dims = (0..samples)
                        .map(|s| cols - sys.rank_mod(&red, &sys.sample_mod(opts, s, p), md))
                        .collect();
                    (p, dims)
                })
                .collect();
            (lanes, false)
        }
    };

    let mins: Vec<usize> = lanes.iter().map(|(_, d)| *d.iter().min().unwrap()).collect();
    if mins.iter().any(|&m| m != mins[0]) {
        let detail = lanes
            .iter()
            .map(|(p, d)| format!("p={p}: {d:?}"))
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::Inconclusive(format!(
            "primes disagree on dim in degree {degree}: {detail}"
        )));
    }
    let all_agree = lanes.iter().all(|(_, d)| d.iter().all(|&v| v == mins[0]));
    let primes_used: Vec<u64> = if exact { Vec::new() } else { lanes.iter().map(|(p, _)| *p).collect() };
    let stable = all_agree && (exact || primes_used.len() >= 2);
    Ok(DimensionReport {
        degree,
        dimension: mins[0],
        samples_used,
        primes_used,
        exact,
        stable,
    })
}

/// Merge reports of one computation carried out over different fields (for inputs
/// that only exist over a prime field). Fails if the dimensions disagree.
pub fn merge_reports(reports: &[DimensionReport]) -> Result<DimensionReport> {
    let first = reports
        .first()
        .ok_or_else(|| Error::Precondition("no reports to merge".into()))?;
    if reports.iter().any(|r| r.dimension != first.dimension || r.degree != first.degree) {
        let dims: Vec<_> = reports.iter().map(|r| (r.primes_used.clone(), r.dimension)).collect();
        return Err(Error::Inconclusive(format!("fields disagree: {dims:?}")));
    }
    let mut primes: Vec<u64> = reports.iter().flat_map(|r| r.primes_used.clone()).collect();
    primes.sort_unstable();
    primes.dedup();
    let exact = reports.iter().any(|r| r.exact);
    Ok(DimensionReport {
        degree: first.degree,
        dimension: first.dimension,
        samples_used: first.samples_used,
        stable: (exact || primes.len() >= 2)
            && reports.iter().all(|r| r.stable || r.primes_used.len() == 1),
        primes_used: primes,
        exact,
    })
}

/// `max(dim [I(Z)]_degree - deg X, 0)`.
pub fn expected_dimension(
    z: &PointConfiguration,
    x: &FatPointScheme,
    degree: usize,
    opts: &SamplingOptions,
) -> Result<usize> {
    let base = ideal_dimension(z, &FatPointScheme::empty(), degree, opts)?.dimension;
    Ok(base.saturating_sub(x.degree()))
}

/// Generic seed used for the fat point `jQ` in searches.
const SEARCH_MARKER: u64 = 0x51;

/// `dim [I(Z + jQ)]_{j+1}` for generic `Q`.
pub fn generic_fat_dimension(z: &PointConfiguration, j: usize, opts: &SamplingOptions) -> Result<DimensionReport> {
    let x = if j == 0 {
        FatPointScheme::empty()
    } else {
        FatPointScheme::generic(j, SEARCH_MARKER)
    };
    ideal_dimension(z, &x, j + 1, opts)
}

/// `m_Z`: least `j` with a curve of degree `j+1` through `Z` having multiplicity `j`
/// at a generic point.
pub fn multiplicity_index(z: &PointConfiguration, opts: &SamplingOptions) -> Result<usize> {
    if z.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    for j in 0..=z.len() {
        if generic_fat_dimension(z, j, opts)?.dimension > 0 {
            return Ok(j);
        }
    }
    Err(Error::SearchCutoff(format!("m_Z search exceeded j = {}", z.len())))
}

/// `t_Z`: least `i` with `dim [I(Z)]_{i+1} > C(i+1, 2)`.
pub fn t_index(z: &PointConfiguration, opts: &SamplingOptions) -> Result<usize> {
    if z.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    for i in 0..=z.len() {
        let dim = ideal_dimension(z, &FatPointScheme::empty(), i + 1, opts)?.dimension;
        if dim > binom2(i + 1) {
            return Ok(i);
        }
    }
    Err(Error::SearchCutoff(format!("t_Z search exceeded i = {}", z.len())))
}

/// Column count up to which curve equations over the rationals are solved exactly.
pub const EXACT_CURVE_COLUMNS: usize = 120;

/// A form of degree `degree` through `Z` with multiplicity `multiplicity` at `point`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveEquation {
    pub degree: usize,
    pub multiplicity: usize,
    pub point: ProjPoint,
    pub monomials: Vec<[u32; 3]>,
    pub coefficients: Vec<Scalar>,
}

impl CurveEquation {
    pub fn backend(&self) -> Backend {
        self.point.backend()
    }

    /// Value at a point of the same backend.
    pub fn evaluate(&self, q: &ProjPoint) -> Result<Scalar> {
        self.partial(q, [0, 0, 0])
    }

    /// Partial derivative with exponent vector `alpha`, evaluated at `q`.
    pub fn partial(&self, q: &ProjPoint, alpha: [u32; 3]) -> Result<Scalar> {
        let b = self.backend();
        if q.backend() != b {
            return Err(Error::BackendMismatch(b, q.backend()));
        }
        let c = q.coords();
        let mut acc = Scalar::zero(b);
        for (beta, coef) in self.monomials.iter().zip(&self.coefficients) {
            if coef.is_zero() || (0..3).any(|i| beta[i] < alpha[i]) {
                continue;
            }
            let mut term = coef.clone();
            for i in 0..3 {
                let f = falling(beta[i], alpha[i]);
                term = &term * &Scalar::from_i64(f as i64, b);
                for _ in 0..beta[i] - alpha[i] {
                    term = &term * &c[i];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Check vanishing on `z` and of all partials of order `multiplicity - 1` at the point.
    pub fn verify(&self, z: &PointConfiguration) -> Result<bool> {
        for q in z.points() {
            if !self.evaluate(q)?.is_zero() {
                return Ok(false);
            }
        }
        if self.multiplicity == 0 {
            return Ok(true);
        }
        for alpha in derivative_orders(self.multiplicity, self.degree) {
            if !self.partial(&self.point, alpha)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Human-readable polynomial in `x, y, z`.
    pub fn polynomial(&self) -> String {
        let mut terms = Vec::new();
        for (m, c) in self.monomials.iter().zip(&self.coefficients) {
            if c.is_zero() {
                continue;
            }
            let vars: Vec<String> = ["x", "y", "z"]
                .iter()
                .zip(m)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let mon = vars.join("*");
            terms.push(if mon.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{mon}")
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// The unique form of degree `j+1` through `Z` with multiplicity `j` at a sampled
/// generic point. Samples are tried in order until the system is one-dimensional.
pub fn unexpected_curve_equation(z: &PointConfiguration, j: usize, opts: &SamplingOptions) -> Result<CurveEquation> {
    if opts.samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let degree = j + 1;
    let x = if j == 0 {
        FatPointScheme::empty()
    } else {
        FatPointScheme::generic(j, SEARCH_MARKER)
    };
    let backend = common_backend(z, &x)?;
    let sys = System::new(z, &x, degree);
    let mons = monomials(degree);
    let cols = mons.len();
    let mut best = usize::MAX;

    let exact = backend == Backend::Rational && cols <= EXACT_CURVE_COLUMNS;
    let (p, red) = match backend {
        Backend::Prime(p) => (p, reduce_points(&concrete_points(z, &x), p).expect("over F_p")),
        Backend::Rational => good_primes(&concrete_points(z, &x), opts, 1).remove(0),
    };
    let ints: Vec<[BigInt; 3]> = if exact {
        z.points().iter().map(|q| q.integer_coords().expect("rational")).collect()
    } else {
        Vec::new()
    };

    for s in 0..opts.samples {
        if exact {
            let g = if j == 0 { Vec::new() } else { sys.sample_int(opts, s) };
            let (rows, cols) = sys.int_matrix(&ints, &g);
            let ker = bareiss_echelon(rows, cols).kernel();
            best = best.min(ker.len());
            if ker.len() == 1 {
                let point = match g.first() {
                    Some(q) => ProjPoint::new(q.clone().map(|v| Scalar::Rational(Rational::from_integer(v))))?,
                    None => ProjPoint::rational(1, 0, 0)?,
                };
                let coefficients = ker[0]
                    .iter()
                    .map(|v| Scalar::Rational(Rational::from_integer(v.clone())))
                    .collect();
                return Ok(CurveEquation {
                    degree,
                    multiplicity: j,
                    point,
                    monomials: mons,
                    coefficients,
                });
            }
        } else {
            let md = Modulus::new(p);
            let g = if j == 0 { Vec::new() } else { sys.sample_mod(opts, s, p) };
            let (mut data, cols) = sys.mod_matrix(&red, &g, md);
            let rows = data.len() / cols;
            let ker = kernel_mod(&mut data, rows, cols, md);
            best = best.min(ker.len());
            if ker.len() == 1 {
                let to_scalar = |v: u64| Scalar::Mod(Fp::new(v, p));
                let point = match g.first() {
                    Some(q) => ProjPoint::new(q.map(to_scalar))?,
                    None => ProjPoint::new([1, 0, 0].map(to_scalar))?,
                };
                return Ok(CurveEquation {
                    degree,
                    multiplicity: j,
                    point,
                    monomials: mons,
                    coefficients: ker[0].iter().map(|&v| to_scalar(v)).collect(),
                });
            }
        }
    }
    Err(Error::NotUnique { dimension: best })
}
