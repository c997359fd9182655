//! Combinatorics of line arrangements: singular locus, modular points,
//! supersolvability and the dual arrangement.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::arith::matrix::{rank, Matrix};
use crate::arith::Backend;
use crate::geometry::{dualize_line, dualize_point, line_through, meet, ProjLine, ProjPoint};
use crate::error::{Error, Result};

/// A finite set of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<ProjPoint>,
}

impl PointConfiguration {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        check_backend(points.iter().map(ProjPoint::backend))?;
        let mut seen: HashMap<&ProjPoint, usize> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&j) = seen.get(p) {
                return Err(Error::DuplicatePoint { first: j, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointConfiguration { points })
    }

    pub fn empty() -> Self {
        PointConfiguration { points: Vec::new() }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn backend(&self) -> Option<Backend> {
        self.points.first().map(ProjPoint::backend)
    }

    /// The arrangement of dual lines.
    pub fn dual_arrangement(&self) -> Result<LineArrangement> {
        LineArrangement::new(self.points.iter().map(dualize_point).collect())
    }
}

fn check_backend(mut it: impl Iterator<Item = Backend>) -> Result<()> {
    if let Some(b) = it.next() {
        for c in it {
            if c != b {
                return Err(Error::BackendMismatch(b, c));
            }
        }
    }
    Ok(())
}

/// A point of the singular locus with the indices of the lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: ProjPoint,
    pub lines: Vec<usize>,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocus {
    pub entries: Vec<SingularPoint>,
}

impl SingularLocus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of singular points of each multiplicity, keyed by multiplicity.
    pub fn multiplicity_counts(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut out = std::collections::BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.multiplicity()).or_insert(0) += 1;
        }
        out
    }
}

/// An ordered list of distinct lines. Derived data is computed once on first use.
#[derive(Debug)]
pub struct LineArrangement {
    lines: Vec<ProjLine>,
    label: Option<String>,
    hints: Option<Vec<[f64; 3]>>,
    sing: OnceLock<SingularLocus>,
}

impl Clone for LineArrangement {
    fn clone(&self) -> Self {
        LineArrangement {
            lines: self.lines.clone(),
            label: self.label.clone(),
            hints: self.hints.clone(),
            sing: self.sing.clone(),
        }
    }
}

impl PartialEq for LineArrangement {
    fn eq(&self, other: &Self) -> bool {
        self.lines == other.lines
    }
}

impl Eq for LineArrangement {}

impl LineArrangement {
    pub fn new(lines: Vec<ProjLine>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Empty);
        }
        check_backend(lines.iter().map(ProjLine::backend))?;
        let mut seen: HashMap<&ProjLine, usize> = HashMap::new();
        for (i, l) in lines.iter().enumerate() {
            if let Some(&j) = seen.get(l) {
                return Err(Error::DuplicateLine { first: j, second: i });
            }
            seen.insert(l, i);
        }
        Ok(LineArrangement {
            lines,
            label: None,
            hints: None,
            sing: OnceLock::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Attach float approximations of the intended real line coefficients, used
    /// only for drawing prime-field surrogates.
    pub fn with_hints(mut self, hints: Vec<[f64; 3]>) -> Result<Self> {
        if hints.len() != self.lines.len() {
            return Err(Error::Precondition("one hint per line required".into()));
        }
        self.hints = Some(hints);
        Ok(self)
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn hints(&self) -> Option<&[[f64; 3]]> {
        self.hints.as_deref()
    }

    pub fn backend(&self) -> Backend {
        self.lines[0].backend()
    }

    pub fn contains(&self, l: &ProjLine) -> bool {
        self.lines.contains(l)
    }

    /// A new arrangement with `extra` appended (hints are extended when both sides carry them).
    pub fn extended(&self, extra: &[ProjLine]) -> Result<Self> {
        let mut lines = self.lines.clone();
        lines.extend_from_slice(extra);
        LineArrangement::new(lines)
    }

    pub fn extended_with_hints(&self, extra: &[ProjLine], extra_hints: &[[f64; 3]]) -> Result<Self> {
        let out = self.extended(extra)?;
        match &self.hints {
            Some(h) => {
                let mut h = h.clone();
                h.extend_from_slice(extra_hints);
                out.with_hints(h)
            }
            None => Ok(out),
        }
    }

    /// The points dual to the lines.
    pub fn dual_configuration(&self) -> PointConfiguration {
        PointConfiguration {
            points: self.lines.iter().map(dualize_line).collect(),
        }
    }

    pub fn singular_locus(&self) -> &SingularLocus {
        self.sing.get_or_init(|| compute_singular_locus(&self.lines))
    }
}

fn compute_singular_locus(lines: &[ProjLine]) -> SingularLocus {
    let mut index: HashMap<ProjPoint, usize> = HashMap::new();
    let mut sets: Vec<(ProjPoint, BTreeSet<usize>)> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = meet(&lines[i], &lines[j]).expect("distinct lines of one backend");
            let k = *index.entry(p.clone()).or_insert_with(|| {
                sets.push((p, BTreeSet::new()));
                sets.len() - 1
            });
            sets[k].1.insert(i);
            sets[k].1.insert(j);
        }
    }
    SingularLocus {
        entries: sets
            .into_iter()
            .map(|(point, s)| SingularPoint {
                point,
                lines: s.into_iter().collect(),
            })
            .collect(),
    }
}

pub fn singular_locus(a: &LineArrangement) -> &SingularLocus {
    a.singular_locus()
}

/// Points of multiplicity at least `k`.
pub fn sing_at_least(a: &LineArrangement, k: usize) -> PointConfiguration {
    PointConfiguration {
        points: a
            .singular_locus()
            .entries
            .iter()
            .filter(|e| e.multiplicity() >= k)
            .map(|e| e.point.clone())
            .collect(),
    }
}

pub fn max_multiplicity(a: &LineArrangement) -> usize {
    a.singular_locus()
        .entries
        .iter()
        .map(SingularPoint::multiplicity)
        .max()
        .unwrap_or(1)
}

fn shares_line(p: &SingularPoint, q: &SingularPoint) -> bool {
    // both index lists are sorted
    let (mut i, mut j) = (0, 0);
    while i < p.lines.len() && j < q.lines.len() {
        match p.lines[i].cmp(&q.lines[j]) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    false
}

fn modular_indices(a: &LineArrangement) -> Vec<usize> {
    let sing = &a.singular_locus().entries;
    (0..sing.len())
        .filter(|&i| {
            sing.iter()
                .enumerate()
                .all(|(j, q)| i == j || shares_line(&sing[i], q))
        })
        .collect()
}

/// Singular points `P` such that every other singular point is joined to `P` by a line of `a`.
pub fn modular_points(a: &LineArrangement) -> Vec<ProjPoint> {
    let sing = &a.singular_locus().entries;
    modular_indices(a)
        .into_iter()
        .map(|i| sing[i].point.clone())
        .collect()
}

/// Supersolvability with a modular point of maximal multiplicity as witness.
pub fn is_supersolvable(a: &LineArrangement) -> (bool, Option<ProjPoint>) {
    let sing = &a.singular_locus().entries;
    let best = modular_indices(a)
        .into_iter()
        .max_by_key(|&i| (sing[i].multiplicity(), std::cmp::Reverse(i)));
    match best {
        Some(i) => (true, Some(sing[i].point.clone())),
        None => (false, None),
    }
}

/// Outcome of the nearly-supersolvable test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearlySupersolvable {
    pub holds: bool,
    /// A nearly modular point and its exceptional double point.
    pub witness: Option<(ProjPoint, ProjPoint)>,
    pub note: Option<String>,
}

/// Nearly supersolvable: a singular point `P` joined by arrangement lines to every
/// other singular point except one double point `P'`, with `PP'` meeting the singular
/// locus only in `P` and `P'`. Supersolvable inputs return `false` with a note.
pub fn is_nearly_supersolvable(a: &LineArrangement) -> Result<NearlySupersolvable> {
    if is_supersolvable(a).0 {
        return Ok(NearlySupersolvable {
            holds: false,
            witness: None,
            note: Some("arrangement is supersolvable".into()),
        });
    }
    let sing = &a.singular_locus().entries;
    for (i, p) in sing.iter().enumerate() {
        let missing: Vec<usize> = (0..sing.len())
            .filter(|&j| j != i && !shares_line(p, &sing[j]))
            .collect();
        let [j] = missing[..] else { continue };
        let q = &sing[j];
        if q.multiplicity() != 2 {
            continue;
        }
        let pq = line_through(&p.point, &q.point)?;
        let others_on_pq = sing.iter().enumerate().any(|(k, s)| {
            k != i
                && k != j
                && crate::geometry::incident(&s.point, &pq).expect("same backend")
        });
        if !others_on_pq {
            return Ok(NearlySupersolvable {
                holds: true,
                witness: Some((p.point.clone(), q.point.clone())),
                note: None,
            });
        }
    }
    Ok(NearlySupersolvable {
        holds: false,
        witness: None,
        note: None,
    })
}

/// Whether the defining linear forms span the whole 3-dimensional space.
pub fn is_full_rank(a: &LineArrangement) -> bool {
    let rows = a.lines().iter().map(|l| l.coords().to_vec()).collect();
    rank(&Matrix::from_rows(rows).expect("uniform backend")).expect("uniform backend") == 3
}

/// The arrangement of lines dual to the singular points.
pub fn dual_arrangement(a: &LineArrangement) -> Result<LineArrangement> {
    let mut seen = std::collections::HashSet::new();
    let lines: Vec<ProjLine> = a
        .singular_locus()
        .entries
        .iter()
        .map(|e| dualize_point(&e.point))
        .filter(|l| seen.insert(l.clone()))
        .collect();
    LineArrangement::new(lines)
}

/// Whether some bijection of lines carries the singular points of `a` (as sets of
/// concurrent lines) exactly onto those of `b`.
pub fn combinatorially_equivalent(a: &LineArrangement, b: &LineArrangement) -> bool {
    let n = a.len();
    if n != b.len() || a.singular_locus().multiplicity_counts() != b.singular_locus().multiplicity_counts() {
        return false;
    }
    let table = |x: &LineArrangement| {
        let mut blk = vec![vec![usize::MAX; n]; n];
        for (k, e) in x.singular_locus().entries.iter().enumerate() {
            for &i in &e.lines {
                for &j in &e.lines {
                    blk[i][j] = k;
                }
            }
        }
        let sizes: Vec<usize> = x.singular_locus().entries.iter().map(SingularPoint::multiplicity).collect();
        let sig: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut v: Vec<usize> = (0..n).filter(|&j| j != i).map(|j| sizes[blk[i][j]]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        (blk, sizes, sig)
    };
    let (ba, sa, ga) = table(a);
    let (bb, sb, gb) = table(b);
    let mut fwd = vec![usize::MAX; sa.len()];
    let mut rev = vec![usize::MAX; sb.len()];
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];

    struct Search<'a> {
        ba: &'a [Vec<usize>],
        bb: &'a [Vec<usize>],
        sa: &'a [usize],
        sb: &'a [usize],
        ga: &'a [Vec<usize>],
        gb: &'a [Vec<usize>],
    }

    fn extend(
        s: &Search<'_>,
        i: usize,
        sigma: &mut [usize],
        used: &mut [bool],
        fwd: &mut [usize],
        rev: &mut [usize],
    ) -> bool {
        let n = sigma.len();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || s.ga[i] != s.gb[c] {
                continue;
            }
            let mut set = Vec::new();
            let mut ok = true;
            for j in 0..i {
                let (x, y) = (s.ba[i][j], s.bb[c][sigma[j]]);
                if s.sa[x] != s.sb[y] {
                    ok = false;
                } else if fwd[x] == usize::MAX && rev[y] == usize::MAX {
                    fwd[x] = y;
                    rev[y] = x;
                    set.push(x);
                } else if fwd[x] != y {
                    ok = false;
                }
                if !ok {
                    break;
                }
            }
            if ok {
                sigma[i] = c;
                used[c] = true;
                if extend(s, i + 1, sigma, used, fwd, rev) {
                    return true;
                }
                used[c] = false;
                sigma[i] = usize::MAX;
            }
            for x in set {
                rev[fwd[x]] = usize::MAX;
                fwd[x] = usize::MAX;
            }
        }
        false
    }

    let s = Search {
        ba: &ba,
        bb: &bb,
        sa: &sa,
        sb: &sb,
        ga: &ga,
        gb: &gb,
    };
    extend(&s, 0, &mut sigma, &mut used, &mut fwd, &mut rev)
}
