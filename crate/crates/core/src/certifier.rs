//! Verdicts on unexpected curves.
//!
//! All degrees in this module's public results are curve degrees. A curve of degree
//! `c` that is unexpected has multiplicity `c - 1` at the generic point.

use crate::arrangement::{is_full_rank, is_supersolvable, max_multiplicity, LineArrangement, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::max_collinear;
use crate::interpolation::{
    binom2, generic_fat_dimension, ideal_dimension, t_index, unexpected_curve_equation, CurveEquation,
    DimensionReport, FatPointScheme, SamplingOptions,
};
use crate::splitting::{empirical_splitting, SplittingType};

/// Curve degrees `c` with `low < c <= high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeInterval {
    pub low: usize,
    pub high: usize,
}

impl DegreeInterval {
    pub fn contains(&self, c: usize) -> bool {
        self.low < c && c <= self.high
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        self.low + 1..=self.high
    }

    pub fn min_degree(&self) -> usize {
        self.low + 1
    }
}

impl std::fmt::Display for DegreeInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{}]", self.low, self.high)
    }
}

/// Which conditions held.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Reasons {
    pub degenerate: bool,
    pub points: usize,
    /// `2a + 2 < |Z|`
    pub enough_points: bool,
    pub max_collinear: usize,
    /// `max_collinear <= a + 1`
    pub collinearity_ok: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnexpectedVerdict {
    pub admits: bool,
    pub splitting: Option<SplittingType>,
    pub interval: Option<DegreeInterval>,
    pub reasons: Reasons,
    pub t_index: Option<usize>,
    /// `dim [I(Z + aQ)]_{a+1}` when the configuration admits.
    pub minimal_dimension: Option<DimensionReport>,
    pub curve: Option<CurveEquation>,
}

impl UnexpectedVerdict {
    fn degenerate(n: usize) -> Self {
        UnexpectedVerdict {
            admits: false,
            splitting: None,
            interval: None,
            reasons: Reasons {
                degenerate: true,
                points: n,
                notes: vec!["degenerate input".into()],
                ..Reasons::default()
            },
            t_index: None,
            minimal_dimension: None,
            curve: None,
        }
    }
}

/// Splitting type of the dual arrangement of `z`.
pub fn dual_splitting(z: &PointConfiguration, opts: &SamplingOptions) -> Result<SplittingType> {
    empirical_splitting(&z.dual_arrangement()?, opts)
}

/// Verdict from the splitting type and collinearity, with the interval of curve
/// degrees and the unique curve of minimal degree when it exists.
pub fn certify(z: &PointConfiguration, opts: &SamplingOptions) -> Result<UnexpectedVerdict> {
    certify_with(z, opts, true)
}

/// As [`certify`], optionally skipping the curve equation.
pub fn certify_with(z: &PointConfiguration, opts: &SamplingOptions, with_curve: bool) -> Result<UnexpectedVerdict> {
    let n = z.len();
    if n < 3 {
        return Ok(UnexpectedVerdict::degenerate(n));
    }
    let t = dual_splitting(z, opts)?;
    let mc = max_collinear(z.points())?;
    let enough_points = 2 * t.a() + 2 < n;
    let collinearity_ok = mc <= t.a() + 1;
    let admits = enough_points && collinearity_ok;
    let mut reasons = Reasons {
        degenerate: false,
        points: n,
        enough_points,
        max_collinear: mc,
        collinearity_ok,
        notes: Vec::new(),
    };
    let t_z = t_index(z, opts)?;
    let (interval, minimal_dimension, curve) = if admits {
        let interval = DegreeInterval {
            low: t.a(),
            high: n - t.a() - 2,
        };
        let dim = generic_fat_dimension(z, t.a(), opts)?;
        if dim.dimension != 1 {
            reasons
                .notes
                .push(format!("minimal degree system has dimension {}", dim.dimension));
        }
        let curve = if with_curve {
            Some(unexpected_curve_equation(z, t.a(), opts)?)
        } else {
            None
        };
        (Some(interval), Some(dim), curve)
    } else {
        (None, None, None)
    };
    Ok(UnexpectedVerdict {
        admits,
        splitting: Some(t),
        interval,
        reasons,
        t_index: Some(t_z),
        minimal_dimension,
        curve,
    })
}

/// The raw definition at one curve degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionCheck {
    pub curve_degree: usize,
    /// `dim [I(Z + (c-1)Q)]_c`
    pub actual: usize,
    /// `max(dim [I(Z)]_c - C(c, 2), 0)`
    pub expected: usize,
    pub unexpected: bool,
    pub stable: bool,
}

/// `dim [I(Z + (c-1)Q)]_c > max(dim [I(Z)]_c - C(c,2), 0)` at curve degree `c >= 1`.
pub fn definition_check(z: &PointConfiguration, curve_degree: usize, opts: &SamplingOptions) -> Result<DefinitionCheck> {
    if curve_degree == 0 {
        return Err(Error::Precondition("curve degree must be at least 1".into()));
    }
    let j = curve_degree - 1;
    let actual = generic_fat_dimension(z, j, opts)?;
    let base = ideal_dimension(z, &FatPointScheme::empty(), curve_degree, opts)?;
    let expected = base.dimension.saturating_sub(binom2(j + 1));
    Ok(DefinitionCheck {
        curve_degree,
        actual: actual.dimension,
        expected,
        unexpected: actual.dimension > expected,
        stable: actual.stable && base.stable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVerdict {
    pub curve_degree: usize,
    pub admits: bool,
    pub splitting: SplittingType,
    /// `a <= c - 1 <= b - 2`
    pub in_range: bool,
    pub t_index: usize,
    /// `dim [I(Z)]_{t_Z}`
    pub t_dimension: usize,
    /// `dim [I(Z)]_{t_Z} = C(t_Z + 2, 2) - |Z|`: independent conditions in degree `t_Z`.
    pub independent_at_t: bool,
    pub definition: DefinitionCheck,
    /// The theorem route and the definition agree.
    pub consistent: bool,
}

/// Verdict at one curve degree from the splitting type and `t_Z`, cross-checked
/// against the definition.
pub fn certify_degree(z: &PointConfiguration, curve_degree: usize, opts: &SamplingOptions) -> Result<DegreeVerdict> {
    if curve_degree < 2 {
        return Err(Error::Precondition("curve degree must be at least 2".into()));
    }
    if z.is_empty() {
        return Err(Error::Precondition("empty configuration".into()));
    }
    let j = curve_degree - 1;
    let t = dual_splitting(z, opts)?;
    let in_range = t.a() <= j && j + 2 <= t.b();
    let t_z = t_index(z, opts)?;
    let t_dimension = ideal_dimension(z, &FatPointScheme::empty(), t_z, opts)?.dimension;
    let independent_at_t = t_dimension as i64 == binom2(t_z + 2) as i64 - z.len() as i64;
    let admits = in_range && independent_at_t;
    let definition = definition_check(z, curve_degree, opts)?;
    Ok(DegreeVerdict {
        curve_degree,
        admits,
        splitting: t,
        in_range,
        t_index: t_z,
        t_dimension,
        independent_at_t,
        consistent: admits == definition.unexpected,
        definition,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvableVerdict {
    pub admits: bool,
    pub lines: usize,
    pub max_multiplicity: usize,
    pub full_rank: bool,
    /// Set when `d = 2m + 1`: the single unexpected curve has degree `m`.
    pub unique_degree: Option<usize>,
    pub notes: Vec<String>,
}

/// For supersolvable `A` with `d` lines and maximal multiplicity `m`: the dual
/// configuration admits unexpected curves iff `d > 2m`.
pub fn certify_supersolvable(a: &LineArrangement) -> Result<SupersolvableVerdict> {
    if !is_supersolvable(a).0 {
        return Err(Error::Precondition("arrangement is not supersolvable".into()));
    }
    let d = a.len();
    let m = max_multiplicity(a);
    let full_rank = is_full_rank(a);
    let mut notes = Vec::new();
    if !full_rank {
        notes.push("arrangement is not full rank".into());
    }
    let admits = d > 2 * m;
    Ok(SupersolvableVerdict {
        admits,
        lines: d,
        max_multiplicity: m,
        full_rank,
        unique_degree: (d == 2 * m + 1).then_some(m),
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemBVerdict {
    pub degree: usize,
    pub admits: bool,
    pub actual: DimensionReport,
    pub expected: usize,
}

/// `dim [I(Z + X)]_degree > max(dim [I(Z)]_degree - deg X, 0)`.
pub fn certify_problem_b(
    z: &PointConfiguration,
    x: &FatPointScheme,
    degree: usize,
    opts: &SamplingOptions,
) -> Result<ProblemBVerdict> {
    let actual = ideal_dimension(z, x, degree, opts)?;
    let base = ideal_dimension(z, &FatPointScheme::empty(), degree, opts)?.dimension;
    let expected = base.saturating_sub(x.degree());
    Ok(ProblemBVerdict {
        degree,
        admits: actual.dimension > expected,
        actual,
        expected,
    })
}

/// `(a + j) P + j` generic simple points, the scheme of the degree `a + 1 + j` family.
pub fn further_scheme(a: usize, j: usize, seed: u64) -> Result<FatPointScheme> {
    let mut x = FatPointScheme::generic(a + j, seed);
    for i in 0..j {
        x = x.with(crate::interpolation::FatPoint {
            support: crate::interpolation::Support::Generic {
                seed: seed.wrapping_add(1 + i as u64),
            },
            multiplicity: 1,
        })?;
    }
    Ok(x)
}
