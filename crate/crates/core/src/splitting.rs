//! Splitting types of line arrangements: interpolation route, closed forms for
//! (nearly) supersolvable arrangements, and Addition-Deletion certificates.

use std::collections::HashSet;
use std::fmt;

use crate::arrangement::{
    is_nearly_supersolvable, is_supersolvable, max_multiplicity, LineArrangement,
};
use crate::error::{Error, Result};
use crate::geometry::{incident, meet, ProjLine};
use crate::interpolation::{multiplicity_index, SamplingOptions};

/// A splitting type, stored with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    a: usize,
    b: usize,
}

impl SplittingType {
    pub fn new(x: usize, y: usize) -> Self {
        SplittingType {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// `a + b`, which equals `d - 1` for an arrangement of `d` lines.
    pub fn total(&self) -> usize {
        self.a + self.b
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplittingMethod {
    Empirical,
    Supersolvable,
    Nearly,
    Chain,
}

impl SplittingMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SplittingMethod::Empirical => "empirical",
            SplittingMethod::Supersolvable => "supersolvable",
            SplittingMethod::Nearly => "nearly",
            SplittingMethod::Chain => "chain",
        }
    }
}

/// `(m_Z, d - 1 - m_Z)` for the dual configuration `Z` of `A`.
pub fn empirical_splitting(a: &LineArrangement, opts: &SamplingOptions) -> Result<SplittingType> {
    let d = a.len();
    if d < 2 {
        return Err(Error::Precondition("splitting type needs at least 2 lines".into()));
    }
    let m = multiplicity_index(&a.dual_configuration(), opts)?;
    Ok(SplittingType::new(m, d - 1 - m))
}

/// `(m - 1, d - m)` with `m` the maximal multiplicity.
pub fn supersolvable_splitting(a: &LineArrangement) -> Result<SplittingType> {
    if !is_supersolvable(a).0 {
        return Err(Error::Precondition("arrangement is not supersolvable".into()));
    }
    let m = max_multiplicity(a);
    Ok(SplittingType::new(m - 1, a.len() - m))
}

/// `(d - m, m - 1)` if `2m >= d`, otherwise `(d/2, d/2)` rounded down, which is only
/// consistent with `a + b = d - 1` for odd `d`; even `d` is reported as unresolved.
pub fn nearly_supersolvable_splitting(a: &LineArrangement) -> Result<SplittingType> {
    if !is_nearly_supersolvable(a)?.holds {
        return Err(Error::Precondition("arrangement is not nearly supersolvable".into()));
    }
    let d = a.len();
    let m = max_multiplicity(a);
    if 2 * m >= d {
        Ok(SplittingType::new(d - m, m - 1))
    } else if d % 2 == 1 {
        Ok(SplittingType::new(d / 2, d / 2))
    } else {
        Err(Error::UnresolvedEvenCase { d, m })
    }
}

/// Number of distinct points in which `l` meets the lines of `a`.
pub fn restriction_count(a: &LineArrangement, l: &ProjLine) -> Result<usize> {
    if let Some(i) = a.lines().iter().position(|x| x == l) {
        return Err(Error::DuplicateLine {
            first: i,
            second: a.len(),
        });
    }
    let mut pts = HashSet::new();
    for x in a.lines() {
        pts.insert(meet(x, l)?);
    }
    Ok(pts.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Lower,
    Upper,
}

/// One Addition-Deletion step on normalized types: a restriction count of `b+1`
/// raises `a`, a count of `a+1` raises `b`.
fn step_type(t: SplittingType, count: usize) -> Option<(SplittingType, Exponent)> {
    if count == t.b + 1 {
        Some((SplittingType::new(t.a + 1, t.b), Exponent::Lower))
    } else if count == t.a + 1 {
        Some((SplittingType::new(t.a, t.b + 1), Exponent::Upper))
    } else {
        None
    }
}

pub fn addition_step(a: &LineArrangement, t: SplittingType, l: &ProjLine) -> Result<SplittingType> {
    let count = restriction_count(a, l)?;
    step_type(t, count)
        .map(|(next, _)| next)
        .ok_or(Error::AdditionDeletionInapplicable {
            step: 0,
            count,
            a: t.a,
            b: t.b,
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub line: ProjLine,
    pub restriction_count: usize,
    pub incremented: Exponent,
    pub after: SplittingType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionChainCertificate {
    pub base: LineArrangement,
    pub base_splitting: SplittingType,
    /// The base is a pencil, so the chain also certifies freeness.
    pub base_is_pencil: bool,
    pub steps: Vec<ChainStep>,
}

impl AdditionChainCertificate {
    pub fn terminus(&self) -> SplittingType {
        self.steps.last().map_or(self.base_splitting, |s| s.after)
    }

    /// Restriction counts in order.
    pub fn counts(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.restriction_count).collect()
    }

    /// Splitting types from the base to the terminus.
    pub fn sequence(&self) -> Vec<SplittingType> {
        std::iter::once(self.base_splitting)
            .chain(self.steps.iter().map(|s| s.after))
            .collect()
    }

    /// The arrangement after all steps.
    pub fn arrangement(&self) -> Result<LineArrangement> {
        let extra: Vec<ProjLine> = self.steps.iter().map(|s| s.line.clone()).collect();
        self.base.extended(&extra)
    }
}

/// Whether all lines pass through one point.
pub fn is_pencil(a: &LineArrangement) -> bool {
    a.len() <= 2 || a.singular_locus().len() == 1
}

/// Fold Addition-Deletion steps over `lines`; failures carry the 0-based step index.
pub fn addition_chain(
    base: &LineArrangement,
    t: SplittingType,
    lines: &[ProjLine],
) -> Result<AdditionChainCertificate> {
    if t.total() + 1 != base.len() {
        return Err(Error::Precondition(format!(
            "splitting {t} does not fit an arrangement of {} lines",
            base.len()
        )));
    }
    let mut current = base.clone();
    let mut cur_t = t;
    let mut steps = Vec::with_capacity(lines.len());
    for (i, l) in lines.iter().enumerate() {
        let count = restriction_count(&current, l)?;
        let (next, which) = step_type(cur_t, count).ok_or(Error::AdditionDeletionInapplicable {
            step: i,
            count,
            a: cur_t.a,
            b: cur_t.b,
        })?;
        current = current.extended(std::slice::from_ref(l))?;
        steps.push(ChainStep {
            line: l.clone(),
            restriction_count: count,
            incremented: which,
            after: next,
        });
        cur_t = next;
    }
    Ok(AdditionChainCertificate {
        base: base.clone(),
        base_splitting: t,
        base_is_pencil: is_pencil(base),
        steps,
    })
}

/// Chain for a supersolvable arrangement: the pencil through a modular point of
/// maximal multiplicity, then the remaining lines in their original order.
pub fn supersolvable_chain(a: &LineArrangement) -> Result<AdditionChainCertificate> {
    let (ok, witness) = is_supersolvable(a);
    let p = match (ok, witness) {
        (true, Some(p)) => p,
        _ => return Err(Error::Precondition("arrangement is not supersolvable".into())),
    };
    let mut pencil = Vec::new();
    let mut rest = Vec::new();
    for l in a.lines() {
        if incident(&p, l)? {
            pencil.push(l.clone());
        } else {
            rest.push(l.clone());
        }
    }
    let m = pencil.len();
    let base = LineArrangement::new(pencil)?;
    addition_chain(&base, SplittingType::new(0, m - 1), &rest)
}

/// The chain from a pencil certifying `a`, followed by `extra` lines.
pub fn chain_from_supersolvable(a: &LineArrangement, extra: &[ProjLine]) -> Result<AdditionChainCertificate> {
    let mut cert = supersolvable_chain(a)?;
    let tail = addition_chain(&cert.arrangement()?, cert.terminus(), extra)?;
    cert.steps.extend(tail.steps);
    Ok(cert)
}
