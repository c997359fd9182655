//! Constructions of the arrangement families: pencils, polygonal and tic-tac-toe
//! arrangements, the B3 configuration, and the hexagon and octagon chains.

mod chains;
mod polygonal;
mod tictactoe;

use serde::{Deserialize, Serialize};

pub use chains::{hexagon_chain, hexagon_lines, octagon_chain, octagon_lines, HexStage, OctStage};
pub use polygonal::{polygonal, polygonal_order};
pub use tictactoe::{tictactoe, TicTacToe};

use crate::arith::{sample_prime, Backend};
use crate::arrangement::{dual_arrangement, sing_at_least, LineArrangement, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{ProjLine, ProjPoint};

/// Coordinate field for a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FieldChoice {
    Rational,
    /// A prime of `bits` bits chosen from `seed`, congruent to 1 modulo the root
    /// order the family needs.
    Prime { bits: u32, seed: u64 },
}

impl FieldChoice {
    pub fn prime(seed: u64) -> Self {
        FieldChoice::Prime { bits: 31, seed }
    }
}

/// Reduce a rational arrangement into the chosen field, keeping float hints.
pub(crate) fn realize(a: LineArrangement, field: FieldChoice) -> Result<LineArrangement> {
    match field {
        FieldChoice::Rational => Ok(a),
        FieldChoice::Prime { bits, seed } => {
            let hints: Vec<[f64; 3]> = a.lines().iter().map(|l| l.to_f64().expect("rational")).collect();
            let mut s = seed;
            loop {
                let p = sample_prime(2, bits, s);
                let reduced: Option<Vec<ProjLine>> = a.lines().iter().map(|l| l.reduce(p)).collect();
                if let Some(r) = reduced {
                    if let Ok(out) = LineArrangement::new(r) {
                        let out = out.with_hints(hints)?;
                        return Ok(match a.label() {
                            Some(l) => out.with_label(l),
                            None => out,
                        });
                    }
                }
                s = s.wrapping_add(1);
            }
        }
    }
}

/// The pencil of `m` lines `x + i y = 0` through `(0:0:1)`.
pub fn pencil(m: usize, backend: Backend) -> Result<LineArrangement> {
    if m == 0 {
        return Err(Error::Empty);
    }
    let lines = (0..m as i64)
        .map(|i| ProjLine::from_i64([1, i, 0], backend))
        .collect::<Result<Vec<_>>>()?;
    Ok(LineArrangement::new(lines)?.with_label(format!("pencil({m})")))
}

/// The nine points of the B3 configuration.
pub fn b3_configuration() -> PointConfiguration {
    let pts = [
        [1, 1, 1],
        [1, -1, 1],
        [-1, 1, 1],
        [-1, -1, 1],
        [0, 0, 1],
        [1, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [1, -1, 0],
    ]
    .iter()
    .map(|t| ProjPoint::rational(t[0], t[1], t[2]).expect("nonzero"))
    .collect();
    PointConfiguration::new(pts).expect("distinct")
}

/// The lines dual to the B3 points: `xyz(x+y+z)(x-y+z)(-x+y+z)(-x-y+z)(x+y)(x-y)`.
pub fn b3_arrangement() -> LineArrangement {
    b3_configuration()
        .dual_arrangement()
        .expect("distinct points")
        .with_label("B3")
}

/// A family and its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum FamilySpec {
    Pencil { m: usize },
    Polygonal { n: usize },
    CompletePolygonal { n: usize },
    Tictactoe { k: usize, j: usize },
    CompleteTictactoe { k: usize, j: usize },
    B3,
    HexagonChain { stage: HexStage },
    OctagonChain { stage: OctStage },
    /// The arrangement dual to the singular points of the inner family.
    DualOf { of: Box<FamilySpec> },
    /// Singular points of multiplicity at least `k` of the inner family.
    SingGeqOf { of: Box<FamilySpec>, k: usize },
}

/// Output of a construction.
#[derive(Clone, Debug)]
pub enum Generated {
    Lines(LineArrangement),
    Points(PointConfiguration),
}

impl Generated {
    pub fn lines(self) -> Result<LineArrangement> {
        match self {
            Generated::Lines(a) => Ok(a),
            Generated::Points(_) => Err(Error::InvalidFamily("family produces points, not lines".into())),
        }
    }

    pub fn points(self) -> Result<PointConfiguration> {
        match self {
            Generated::Points(z) => Ok(z),
            Generated::Lines(_) => Err(Error::InvalidFamily("family produces lines, not points".into())),
        }
    }

    /// Points, dualizing a line arrangement when needed.
    pub fn as_points(&self) -> PointConfiguration {
        match self {
            Generated::Points(z) => z.clone(),
            Generated::Lines(a) => a.dual_configuration(),
        }
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidFamily(m.into()));
        match self {
            FamilySpec::Pencil { m } if *m == 0 => bad("pencil needs m >= 1"),
            FamilySpec::Polygonal { n } | FamilySpec::CompletePolygonal { n } if *n < 3 => bad("polygonal needs N >= 3"),
            FamilySpec::Tictactoe { k, j } | FamilySpec::CompleteTictactoe { k, j } if j > k => {
                bad("tic-tac-toe needs k >= j")
            }
            FamilySpec::SingGeqOf { k, .. } if *k < 2 => bad("sing-geq-of needs k >= 2"),
            FamilySpec::DualOf { of } | FamilySpec::SingGeqOf { of, .. } => of.validate(),
            _ => Ok(()),
        }
    }

    /// Whether the family is defined over the rationals.
    pub fn is_rational(&self) -> bool {
        match self {
            FamilySpec::Polygonal { .. } | FamilySpec::CompletePolygonal { .. } | FamilySpec::OctagonChain { .. } => {
                false
            }
            FamilySpec::DualOf { of } | FamilySpec::SingGeqOf { of, .. } => of.is_rational(),
            _ => true,
        }
    }

    /// Field to use when the caller has no preference.
    pub fn default_field(&self, seed: u64) -> FieldChoice {
        if self.is_rational() {
            FieldChoice::Rational
        } else {
            FieldChoice::prime(seed)
        }
    }

    pub fn build(&self, field: FieldChoice) -> Result<Generated> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Pencil { m } => {
                Generated::Lines(realize(pencil(*m, Backend::Rational)?, field)?)
            }
            FamilySpec::Polygonal { n } => Generated::Lines(polygonal(*n, false, field)?),
            FamilySpec::CompletePolygonal { n } => Generated::Lines(polygonal(*n, true, field)?),
            FamilySpec::Tictactoe { k, j } => Generated::Lines(realize(tictactoe(*k, *j, false)?, field)?),
            FamilySpec::CompleteTictactoe { k, j } => {
                Generated::Lines(realize(tictactoe(*k, *j, true)?, field)?)
            }
            FamilySpec::B3 => match field {
                FieldChoice::Rational => Generated::Points(b3_configuration()),
                _ => Generated::Points(realize(b3_arrangement(), field)?.dual_configuration()),
            },
            FamilySpec::HexagonChain { stage } => Generated::Lines(realize(hexagon_chain(*stage)?, field)?),
            FamilySpec::OctagonChain { stage } => Generated::Lines(octagon_chain(*stage, field)?),
            FamilySpec::DualOf { of } => {
                let inner = of.build(field)?;
                let a = match inner {
                    Generated::Lines(a) => a,
                    Generated::Points(z) => z.dual_arrangement()?,
                };
                Generated::Lines(dual_arrangement(&a)?)
            }
            FamilySpec::SingGeqOf { of, k } => {
                let inner = of.build(field)?;
                let a = match inner {
                    Generated::Lines(a) => a,
                    Generated::Points(z) => z.dual_arrangement()?,
                };
                Generated::Points(sing_at_least(&a, *k))
            }
        })
    }

    /// Short label such as `P6bar` or `T(2,1)`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Pencil { m } => format!("pencil({m})"),
            FamilySpec::Polygonal { n } => format!("P{n}"),
            FamilySpec::CompletePolygonal { n } => format!("P{n}bar"),
            FamilySpec::Tictactoe { k, j } => format!("T({k},{j})"),
            FamilySpec::CompleteTictactoe { k, j } => format!("Tbar({k},{j})"),
            FamilySpec::B3 => "B3".into(),
            FamilySpec::HexagonChain { stage } => format!("hexagon:{stage}"),
            FamilySpec::OctagonChain { stage } => format!("octagon:{stage}"),
            FamilySpec::DualOf { of } => format!("dual({})", of.label()),
            FamilySpec::SingGeqOf { of, k } => format!("sing>={k}({})", of.label()),
        }
    }
}
