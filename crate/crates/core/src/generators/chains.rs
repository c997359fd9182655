//! Staged extensions of the complete hexagonal and octagonal arrangements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{polygonal, FieldChoice};
use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};
use crate::geometry::{line_through, meet, ProjLine, ProjPoint};

/// `P6bar`, then `B_i` (lines `l_i`), `B'_i` (`l'_i`), `B''_i` (`m_i`), `B'''_i` (`m'_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HexStage {
    Base,
    B(u8),
    BPrime(u8),
    BDouble(u8),
    BTriple(u8),
}

/// `P8bar`, then `L_i` (lines `l_1..l_i`), then `M_j` (all `l` and `m_1..m_j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OctStage {
    Base,
    L(u8),
    M(u8),
}

impl HexStage {
    /// Number of lines added on top of `P6bar`.
    pub fn added(&self) -> usize {
        match *self {
            HexStage::Base => 0,
            HexStage::B(i) => i as usize,
            HexStage::BPrime(i) => 6 + i as usize,
            HexStage::BDouble(i) => 12 + i as usize,
            HexStage::BTriple(i) => 18 + i as usize,
        }
    }

    pub fn all() -> Vec<HexStage> {
        let mut v = vec![HexStage::Base];
        for f in [HexStage::B, HexStage::BPrime, HexStage::BDouble, HexStage::BTriple] {
            v.extend((1..=6).map(f));
        }
        v
    }

    fn validate(&self) -> Result<()> {
        match *self {
            HexStage::Base => Ok(()),
            HexStage::B(i) | HexStage::BPrime(i) | HexStage::BDouble(i) | HexStage::BTriple(i) => {
                if (1..=6).contains(&i) {
                    Ok(())
                } else {
                    Err(Error::InvalidFamily(format!("hexagon stage index {i} outside 1..=6")))
                }
            }
        }
    }
}

impl OctStage {
    pub fn added(&self) -> usize {
        match *self {
            OctStage::Base => 0,
            OctStage::L(i) => i as usize,
            OctStage::M(j) => 8 + j as usize,
        }
    }

    pub fn all() -> Vec<OctStage> {
        let mut v = vec![OctStage::Base];
        v.extend((1..=8).map(OctStage::L));
        v.extend((1..=8).map(OctStage::M));
        v
    }

    fn validate(&self) -> Result<()> {
        match *self {
            OctStage::Base => Ok(()),
            OctStage::L(i) | OctStage::M(i) if (1..=8).contains(&i) => Ok(()),
            OctStage::L(i) | OctStage::M(i) => {
                Err(Error::InvalidFamily(format!("octagon stage index {i} outside 1..=8")))
            }
        }
    }
}

impl fmt::Display for HexStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HexStage::Base => write!(f, "P6bar"),
            HexStage::B(i) => write!(f, "B{i}"),
            HexStage::BPrime(i) => write!(f, "B'{i}"),
            HexStage::BDouble(i) => write!(f, "B''{i}"),
            HexStage::BTriple(i) => write!(f, "B'''{i}"),
        }
    }
}

impl fmt::Display for OctStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OctStage::Base => write!(f, "P8bar"),
            OctStage::L(i) => write!(f, "L{i}"),
            OctStage::M(j) => write!(f, "M{j}"),
        }
    }
}

fn stage_index(s: &str) -> Result<u8> {
    s.parse()
        .map_err(|_| Error::InvalidFamily(format!("bad stage index {s:?}")))
}

impl FromStr for HexStage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let st = if s.eq_ignore_ascii_case("P6bar") || s == "B0" {
            HexStage::Base
        } else if let Some(r) = s.strip_prefix("B'''") {
            HexStage::BTriple(stage_index(r)?)
        } else if let Some(r) = s.strip_prefix("B''") {
            HexStage::BDouble(stage_index(r)?)
        } else if let Some(r) = s.strip_prefix("B'") {
            HexStage::BPrime(stage_index(r)?)
        } else if let Some(r) = s.strip_prefix('B') {
            HexStage::B(stage_index(r)?)
        } else {
            return Err(Error::InvalidFamily(format!("unknown hexagon stage {s:?}")));
        };
        st.validate()?;
        Ok(st)
    }
}

impl FromStr for OctStage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let st = if s.eq_ignore_ascii_case("P8bar") {
            OctStage::Base
        } else if let Some(r) = s.strip_prefix('L') {
            OctStage::L(stage_index(r)?)
        } else if let Some(r) = s.strip_prefix('M') {
            OctStage::M(stage_index(r)?)
        } else {
            return Err(Error::InvalidFamily(format!("unknown octagon stage {s:?}")));
        };
        st.validate()?;
        Ok(st)
    }
}

macro_rules! string_serde {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(HexStage);
string_serde!(OctStage);

/// Lines of the rational hexagon model.
#[derive(Clone, Debug)]
pub struct HexagonLines {
    /// Edges, symmetry axes, line at infinity.
    pub base: Vec<ProjLine>,
    /// The points `P_1..P_6`.
    pub points: Vec<ProjPoint>,
    /// `l_i = P_i P_{i+1}`
    pub ell: Vec<ProjLine>,
    /// `l'_i` through `P_i`
    pub ell_prime: Vec<ProjLine>,
    pub m: Vec<ProjLine>,
    pub m_prime: Vec<ProjLine>,
}

fn lines(v: &[[i64; 3]]) -> Vec<ProjLine> {
    v.iter()
        .map(|t| ProjLine::rational(t[0], t[1], t[2]).expect("nonzero"))
        .collect()
}

/// Hexagon with edges `y = +-1/4`, `3x +- 2y = +-1`; lines are `(a, b, c)` for `ax + by + cz = 0`.
pub fn hexagon_lines() -> HexagonLines {
    let base = lines(&[
        [0, 4, 1],
        [3, -2, -1],
        [3, 2, -1],
        [0, 4, -1],
        [-3, 2, -1],
        [3, 2, 1],
        [3, -2, 0],
        [1, -2, 0],
        [0, 1, 0],
        [1, 2, 0],
        [3, 2, 0],
        [1, 0, 0],
        [0, 0, 1],
    ]);
    let points: Vec<ProjPoint> = [
        [(-1, 2), (-1, 4), (1, 1)],
        [(-1, 2), (1, 4), (1, 1)],
        [(0, 1), (1, 2), (1, 1)],
        [(1, 2), (1, 4), (1, 1)],
        [(1, 2), (-1, 4), (1, 1)],
        [(0, 1), (-1, 2), (1, 1)],
    ]
    .into_iter()
    .map(|r| ProjPoint::ratios(r).expect("nonzero"))
    .collect();
    let ell = (0..6)
        .map(|i| line_through(&points[i], &points[(i + 1) % 6]).expect("distinct"))
        .collect();
    let ell_prime = lines(&[[3, 2, 2], [3, -2, 2], [0, 2, -1], [3, 2, -2], [3, -2, -2], [0, 2, 1]]);
    let m = lines(&[[1, 0, 1], [1, -2, 2], [1, 2, -2], [1, 0, -1], [1, -2, -2], [1, 2, 2]]);
    let m_prime = lines(&[[0, 1, -1], [3, 2, -4], [3, -2, -4], [0, 1, 1], [3, 2, 4], [3, -2, 4]]);
    HexagonLines {
        base,
        points,
        ell,
        ell_prime,
        m,
        m_prime,
    }
}

impl HexagonLines {
    /// All added lines in chain order.
    pub fn added(&self) -> Vec<ProjLine> {
        [&self.ell, &self.ell_prime, &self.m, &self.m_prime]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }
}

pub fn hexagon_chain(stage: HexStage) -> Result<LineArrangement> {
    stage.validate()?;
    let h = hexagon_lines();
    let mut all = h.base.clone();
    all.extend(h.added().into_iter().take(stage.added()));
    Ok(LineArrangement::new(all)?.with_label(format!("hexagon:{stage}")))
}

/// Lines of the octagon chain over a prime field.
#[derive(Clone, Debug)]
pub struct OctagonLines {
    pub base: LineArrangement,
    /// `P_1..P_8`
    pub points: Vec<ProjPoint>,
    /// `l_i = P_i P_{i+1}`
    pub ell: Vec<ProjLine>,
    /// `m_i = P_i P_{i+2}`
    pub m: Vec<ProjLine>,
    pub ell_hints: Vec<[f64; 3]>,
    pub m_hints: Vec<[f64; 3]>,
}

fn fcross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// `P_i` is the meet of edges `e_{1-i}` and `e_{4-i}` (indices mod 8), where `e_k`
/// joins the vertices at angles `45k` and `45(k+1)` degrees.
pub fn octagon_lines(field: FieldChoice) -> Result<OctagonLines> {
    let base = polygonal(8, true, field)?;
    let edges = &base.lines()[..8];
    let fedges = &base.hints().expect("polygonal carries hints")[..8];
    let idx = |i: i64| (i.rem_euclid(8)) as usize;
    let mut points = Vec::with_capacity(8);
    let mut fpoints = Vec::with_capacity(8);
    for i in 1..=8i64 {
        points.push(meet(&edges[idx(1 - i)], &edges[idx(4 - i)])?);
        fpoints.push(fcross(fedges[idx(1 - i)], fedges[idx(4 - i)]));
    }
    let mut ell = Vec::new();
    let mut m = Vec::new();
    let mut ell_hints = Vec::new();
    let mut m_hints = Vec::new();
    for i in 0..8 {
        ell.push(line_through(&points[i], &points[(i + 1) % 8])?);
        m.push(line_through(&points[i], &points[(i + 2) % 8])?);
        ell_hints.push(fcross(fpoints[i], fpoints[(i + 1) % 8]));
        m_hints.push(fcross(fpoints[i], fpoints[(i + 2) % 8]));
    }
    Ok(OctagonLines {
        base,
        points,
        ell,
        m,
        ell_hints,
        m_hints,
    })
}

impl OctagonLines {
    pub fn added(&self) -> (Vec<ProjLine>, Vec<[f64; 3]>) {
        let lines = self.ell.iter().chain(&self.m).cloned().collect();
        let hints = self.ell_hints.iter().chain(&self.m_hints).copied().collect();
        (lines, hints)
    }
}

pub fn octagon_chain(stage: OctStage, field: FieldChoice) -> Result<LineArrangement> {
    stage.validate()?;
    let o = octagon_lines(field)?;
    let (lines, hints) = o.added();
    let n = stage.added();
    Ok(o
        .base
        .extended_with_hints(&lines[..n], &hints[..n])?
        .with_label(format!("octagon:{stage}")))
}
