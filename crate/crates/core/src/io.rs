//! JSON documents for arrangements and point sets, and JSON encodings of results.
//!
//! Scalars are written as `"n"` or `"n/d"` over the rationals and as
//! `{"mod": p, "res": r}` over `F_p`. Parsers also accept bare integers and
//! `{"cyc": order, "pow": k, "mod": p}` for a power of the canonical root of unity.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::{Backend, CyclotomicEmbedding, Fp, Rational, Scalar};
use crate::arrangement::{LineArrangement, PointConfiguration};
use crate::certifier::{DefinitionCheck, DegreeVerdict, ProblemBVerdict, SupersolvableVerdict, UnexpectedVerdict};
use crate::error::{Error, Result};
use crate::generators::{FamilySpec, FieldChoice};
use crate::geometry::{ProjLine, ProjPoint};
use crate::interpolation::{CurveEquation, DimensionReport};
use crate::splitting::{AdditionChainCertificate, Exponent, SplittingType};

pub const SCHEMA_VERSION: &str = "1";

/// How a document was produced, enough to rebuild it over another field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldChoice>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Content {
    Lines(LineArrangement),
    Points(PointConfiguration),
}

#[derive(Clone, Debug)]
pub struct ArrangementDocument {
    pub content: Content,
    pub label: Option<String>,
    pub provenance: Option<Provenance>,
}

impl ArrangementDocument {
    pub fn lines(a: LineArrangement) -> Self {
        let label = a.label().map(str::to_owned);
        ArrangementDocument {
            content: Content::Lines(a),
            label,
            provenance: None,
        }
    }

    pub fn points(z: PointConfiguration) -> Self {
        ArrangementDocument {
            content: Content::Points(z),
            label: None,
            provenance: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    /// The point set: given points, or the points dual to given lines.
    pub fn as_points(&self) -> PointConfiguration {
        match &self.content {
            Content::Points(z) => z.clone(),
            Content::Lines(a) => a.dual_configuration(),
        }
    }

    /// The arrangement: given lines, or the lines dual to given points.
    pub fn as_lines(&self) -> Result<LineArrangement> {
        match &self.content {
            Content::Lines(a) => Ok(a.clone()),
            Content::Points(z) => z.dual_arrangement(),
        }
    }

    pub fn backend(&self) -> Option<Backend> {
        match &self.content {
            Content::Lines(a) => Some(a.backend()),
            Content::Points(z) => z.backend(),
        }
    }

    /// The document with lines and points swapped.
    pub fn dual(&self) -> Result<Self> {
        let content = match &self.content {
            Content::Lines(a) => Content::Points(a.dual_configuration()),
            Content::Points(z) => {
                if z.is_empty() {
                    return Err(Error::Empty);
                }
                Content::Lines(z.dual_arrangement()?)
            }
        };
        let mut provenance = self.provenance.clone().unwrap_or_default();
        provenance.notes.push("dualized".into());
        Ok(ArrangementDocument {
            content,
            label: self.label.as_ref().map(|l| format!("dual({l})")),
            provenance: Some(provenance),
        })
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Str(String),
    Mod {
        #[serde(rename = "mod")]
        modulus: u64,
        res: u64,
    },
    Cyc {
        cyc: u64,
        pow: i64,
        #[serde(rename = "mod")]
        modulus: u64,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawField {
    Name(String),
    Prime { prime: u64 },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(rename = "schema-version")]
    schema_version: String,
    field: RawField,
    #[serde(default)]
    lines: Option<Vec<[RawScalar; 3]>>,
    #[serde(default)]
    points: Option<Vec<[RawScalar; 3]>>,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    provenance: Option<Provenance>,
    #[serde(default)]
    hints: Option<Vec<[f64; 3]>>,
}

fn parse_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    }
}

fn convert_scalar(raw: &RawScalar, backend: Backend, path: &str) -> Result<Scalar> {
    match (raw, backend) {
        (RawScalar::Int(v), b) => Ok(Scalar::from_i64(*v, b)),
        (RawScalar::Str(s), Backend::Rational) => parse_rational(s)
            .map(Scalar::Rational)
            .ok_or_else(|| parse_err(path, format!("not a rational number: {s:?}"))),
        (RawScalar::Str(s), Backend::Prime(p)) => {
            let r = parse_rational(s).ok_or_else(|| parse_err(path, format!("not a number: {s:?}")))?;
            Scalar::Rational(r)
                .reduce(p)
                .map(|v| Scalar::Mod(Fp::new(v, p)))
                .ok_or_else(|| parse_err(path, format!("denominator vanishes mod {p}")))
        }
        (RawScalar::Mod { modulus, res }, Backend::Prime(p)) if *modulus == p => {
            Ok(Scalar::Mod(Fp::new(res % p, p)))
        }
        (RawScalar::Cyc { cyc, pow, modulus }, Backend::Prime(p)) if *modulus == p => {
            let e = CyclotomicEmbedding::new(*cyc, p).map_err(|e| parse_err(path, e.to_string()))?;
            Ok(e.root_pow(*pow))
        }
        _ => Err(parse_err(path, "scalar does not match the declared field")),
    }
}

fn convert_triples(raw: &[[RawScalar; 3]], backend: Backend, key: &str) -> Result<Vec<[Scalar; 3]>> {
    raw.iter()
        .enumerate()
        .map(|(i, t)| {
            let mut out = Vec::with_capacity(3);
            for (k, s) in t.iter().enumerate() {
                out.push(convert_scalar(s, backend, &format!("{key}[{i}][{k}]"))?);
            }
            Ok([out[0].clone(), out[1].clone(), out[2].clone()])
        })
        .collect()
}

fn located(e: Error, key: &str) -> Error {
    match e {
        Error::DuplicateLine { first, second } | Error::DuplicatePoint { first, second } => {
            parse_err(format!("{key}[{second}]"), format!("duplicate of {key}[{first}]: {e}"))
        }
        other => other,
    }
}

/// Parse and validate a JSON document.
pub fn parse_document(bytes: &[u8]) -> Result<ArrangementDocument> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        parse_err(path, e.into_inner().to_string())
    })?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(parse_err(
            "schema-version",
            format!("unsupported schema version {:?}", raw.schema_version),
        ));
    }
    let backend = match raw.field {
        RawField::Name(ref s) if s == "Q" => Backend::Rational,
        RawField::Prime { prime } => {
            if !crate::arith::is_prime(prime) {
                return Err(parse_err("field.prime", format!("{prime} is not prime")));
            }
            Backend::Prime(prime)
        }
        RawField::Name(s) => return Err(parse_err("field", format!("unknown field {s:?}"))),
    };
    let content = match (&raw.lines, &raw.points) {
        (Some(lines), None) => {
            let triples = convert_triples(lines, backend, "lines")?;
            let mut out = Vec::with_capacity(triples.len());
            for (i, t) in triples.into_iter().enumerate() {
                out.push(ProjLine::new(t).map_err(|e| parse_err(format!("lines[{i}]"), e.to_string()))?);
            }
            let mut a = LineArrangement::new(out).map_err(|e| located(e, "lines"))?;
            if let Some(h) = raw.hints {
                a = a.with_hints(h).map_err(|e| parse_err("hints", e.to_string()))?;
            }
            if let Some(l) = &raw.label {
                a = a.with_label(l.clone());
            }
            Content::Lines(a)
        }
        (None, Some(points)) => {
            let triples = convert_triples(points, backend, "points")?;
            let mut out = Vec::with_capacity(triples.len());
            for (i, t) in triples.into_iter().enumerate() {
                out.push(ProjPoint::new(t).map_err(|e| parse_err(format!("points[{i}]"), e.to_string()))?);
            }
            Content::Points(PointConfiguration::new(out).map_err(|e| located(e, "points"))?)
        }
        _ => return Err(parse_err("", "exactly one of \"lines\" or \"points\" is required")),
    };
    Ok(ArrangementDocument {
        content,
        label: raw.label,
        provenance: raw.provenance,
    })
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }),
        Scalar::Mod(f) => json!({"mod": f.modulus(), "res": f.residue()}),
    }
}

fn triple_json(c: &[Scalar; 3]) -> Value {
    Value::Array(c.iter().map(scalar_json).collect())
}

pub fn point_json(p: &ProjPoint) -> Value {
    triple_json(p.coords())
}

pub fn line_json(l: &ProjLine) -> Value {
    triple_json(l.coords())
}

fn field_json(b: Option<Backend>) -> Value {
    match b {
        Some(Backend::Prime(p)) => json!({"prime": p}),
        _ => json!("Q"),
    }
}

pub fn document_json(doc: &ArrangementDocument) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("schema-version".into(), json!(SCHEMA_VERSION));
    m.insert("field".into(), field_json(doc.backend()));
    if let Some(l) = &doc.label {
        m.insert("label".into(), json!(l));
    }
    match &doc.content {
        Content::Lines(a) => {
            m.insert("lines".into(), Value::Array(a.lines().iter().map(line_json).collect()));
            if let Some(h) = a.hints() {
                m.insert("hints".into(), json!(h));
            }
        }
        Content::Points(z) => {
            m.insert("points".into(), Value::Array(z.points().iter().map(point_json).collect()));
        }
    }
    if let Some(p) = &doc.provenance {
        m.insert("provenance".into(), serde_json::to_value(p).expect("serializable"));
    }
    Value::Object(m)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn serialize_document(doc: &ArrangementDocument) -> String {
    to_pretty(&document_json(doc))
}

/// Hex SHA-256 of the input bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn splitting_json(t: &SplittingType) -> Value {
    json!([t.a(), t.b()])
}

pub fn dimension_json(r: &DimensionReport) -> Value {
    json!({
        "degree": r.degree,
        "dimension": r.dimension,
        "samples-used": r.samples_used,
        "primes-used": r.primes_used,
        "exact": r.exact,
        "stable": r.stable,
    })
}

pub fn certificate_json(c: &AdditionChainCertificate) -> Value {
    json!({
        "base-lines": c.base.len(),
        "base-splitting": splitting_json(&c.base_splitting),
        "base-is-pencil": c.base_is_pencil,
        "steps": c.steps.iter().map(|s| json!({
            "line": line_json(&s.line),
            "restriction-count": s.restriction_count,
            "incremented": match s.incremented { Exponent::Lower => "a", Exponent::Upper => "b" },
            "splitting": splitting_json(&s.after),
        })).collect::<Vec<_>>(),
        "terminus": splitting_json(&c.terminus()),
    })
}

pub fn curve_json(c: &CurveEquation) -> Value {
    json!({
        "degree": c.degree,
        "multiplicity": c.multiplicity,
        "point": point_json(&c.point),
        "monomials": c.monomials,
        "coefficients": c.coefficients.iter().map(scalar_json).collect::<Vec<_>>(),
        "irreducibility": "unverified",
    })
}

pub fn verdict_json(v: &UnexpectedVerdict) -> Value {
    json!({
        "admits": v.admits,
        "splitting": v.splitting.as_ref().map(splitting_json),
        "interval": v.interval.map(|i| json!({"low": i.low, "high": i.high})),
        "t-index": v.t_index,
        "reasons": {
            "degenerate": v.reasons.degenerate,
            "points": v.reasons.points,
            "enough-points": v.reasons.enough_points,
            "max-collinear": v.reasons.max_collinear,
            "collinearity-ok": v.reasons.collinearity_ok,
            "notes": v.reasons.notes,
        },
        "minimal-dimension": v.minimal_dimension.as_ref().map(dimension_json),
        "curve": v.curve.as_ref().map(curve_json),
    })
}

pub fn definition_json(d: &DefinitionCheck) -> Value {
    json!({
        "curve-degree": d.curve_degree,
        "actual": d.actual,
        "expected": d.expected,
        "unexpected": d.unexpected,
        "stable": d.stable,
    })
}

pub fn degree_verdict_json(v: &DegreeVerdict) -> Value {
    json!({
        "curve-degree": v.curve_degree,
        "admits": v.admits,
        "splitting": splitting_json(&v.splitting),
        "in-range": v.in_range,
        "t-index": v.t_index,
        "t-dimension": v.t_dimension,
        "independent-at-t": v.independent_at_t,
        "definition": definition_json(&v.definition),
        "consistent": v.consistent,
    })
}

pub fn supersolvable_json(v: &SupersolvableVerdict) -> Value {
    json!({
        "admits": v.admits,
        "lines": v.lines,
        "max-multiplicity": v.max_multiplicity,
        "full-rank": v.full_rank,
        "unique-degree": v.unique_degree,
        "notes": v.notes,
    })
}

pub fn problem_b_json(v: &ProblemBVerdict) -> Value {
    json!({
        "degree": v.degree,
        "admits": v.admits,
        "actual": dimension_json(&v.actual),
        "expected": v.expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{FamilySpec, FieldChoice};

    const TRIANGLE: &str = r#"{"schema-version":"1","field":"Q","lines":[["1","0","0"],["0","1","0"],["0","0","1"]],"label":"triangle"}"#;

    #[test]
    fn triangle_document() {
        let d = parse_document(TRIANGLE.as_bytes()).unwrap();
        let a = d.as_lines().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(d.label.as_deref(), Some("triangle"));
    }

    #[test]
    fn duplicate_lines_are_located() {
        let s = r#"{"schema-version":"1","field":"Q","lines":[[1,0,0],[0,1,0],["2","0","0"]]}"#;
        match parse_document(s.as_bytes()).unwrap_err() {
            Error::Parse { path, message } => {
                assert_eq!(path, "lines[2]");
                assert!(message.contains("lines[0]"));
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn schema_errors_carry_a_path() {
        let s = r#"{"schema-version":"1","field":"Q","lines":[[1,0,0],[0,1]]}"#;
        let Error::Parse { path, .. } = parse_document(s.as_bytes()).unwrap_err() else { panic!() };
        assert!(path.starts_with("lines"), "{path}");
        let zero = r#"{"schema-version":"1","field":"Q","points":[[0,0,0]]}"#;
        let Error::Parse { path, .. } = parse_document(zero.as_bytes()).unwrap_err() else { panic!() };
        assert_eq!(path, "points[0]");
        let both = r#"{"schema-version":"1","field":"Q"}"#;
        assert!(parse_document(both.as_bytes()).is_err());
    }

    #[test]
    fn fractions_and_fields() {
        let s = r#"{"schema-version":"1","field":"Q","points":[["-1/2","1/4","1"]]}"#;
        let d = parse_document(s.as_bytes()).unwrap();
        assert_eq!(
            d.as_points().points()[0],
            ProjPoint::ratios([(-1, 2), (1, 4), (1, 1)]).unwrap()
        );
        let m = r#"{"schema-version":"1","field":{"prime":7},"points":[[{"mod":7,"res":3},1,0]]}"#;
        assert_eq!(parse_document(m.as_bytes()).unwrap().backend(), Some(Backend::Prime(7)));
        let wrong = r#"{"schema-version":"1","field":"Q","points":[[{"mod":7,"res":3},1,0]]}"#;
        assert!(parse_document(wrong.as_bytes()).is_err());
    }

    #[test]
    fn roundtrip_p6bar() {
        let spec = FamilySpec::CompletePolygonal { n: 6 };
        let field = FieldChoice::prime(4);
        let a = spec.build(field).unwrap().lines().unwrap();
        let doc = ArrangementDocument::lines(a.clone()).with_provenance(Provenance {
            family: Some(spec),
            field: Some(field),
            notes: vec![],
        });
        let text = serialize_document(&doc);
        let back = parse_document(text.as_bytes()).unwrap();
        let b = back.as_lines().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hints(), b.hints());
        assert_eq!(back.provenance, doc.provenance);
        assert_eq!(serialize_document(&back), text);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
