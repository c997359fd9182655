//! The `unexpected` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::Backend;
use crate::arrangement::{
    is_full_rank, is_nearly_supersolvable, is_supersolvable, max_multiplicity, sing_at_least, LineArrangement,
};
use crate::certifier::{certify_degree, certify_problem_b, certify_with};
use crate::error::{Error, Result};
use crate::generators::{FamilySpec, FieldChoice, Generated, HexStage, OctStage};
use crate::geometry::ProjPoint;
use crate::interpolation::{
    expected_dimension, ideal_dimension, merge_reports, FatPoint, FatPointScheme, SamplingOptions, Support,
};
use crate::io::{self, ArrangementDocument, Provenance};
use crate::render::{render_svg, RenderOptions, Viewport};
use crate::splitting::{
    addition_chain, chain_from_supersolvable, empirical_splitting, nearly_supersolvable_splitting,
    supersolvable_chain, supersolvable_splitting, SplittingType,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Seeds of generic fat points given on the command line start here.
const FAT_MARKER: u64 = 0xfa7;

#[derive(Parser, Debug)]
#[command(name = "unexpected", version, about = "Line arrangements, splitting types and unexpected curves")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Seed for generic points and prime selection.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Generic samples per prime.
    #[arg(long, global = true, default_value_t = 3)]
    samples: usize,
    /// Primes used for rational input.
    #[arg(long, global = true, default_value_t = 2)]
    primes: usize,
    /// Bit size of sampled primes.
    #[arg(long, global = true, env = "UNEXPECTED_PRIME_BITS", default_value_t = 31)]
    prime_bits: u32,
    /// Fraction-free elimination over the integers instead of primes.
    #[arg(long, global = true)]
    exact: bool,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in reports.
    #[arg(long, global = true)]
    timing: bool,
}

impl Global {
    fn sampling(&self) -> SamplingOptions {
        SamplingOptions {
            samples: self.samples,
            seed: self.seed,
            primes: self.primes,
            prime_bits: self.prime_bits,
            exact: self.exact,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family and write its JSON document.
    Generate(GenerateArgs),
    /// Singular locus, supersolvability and splitting type of an arrangement.
    Analyze {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Dimension of a graded piece of the ideal of points plus fat points.
    Dim {
        input: String,
        #[arg(long)]
        degree: usize,
        /// `m@generic` or `m@(x:y:z)`; repeatable.
        #[arg(long)]
        fat: Vec<String>,
    },
    /// Splitting type by one route.
    Splitting {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Empirical)]
        method: Method,
        /// Lines document appended by Addition-Deletion (chain method).
        #[arg(long)]
        chain_file: Option<String>,
    },
    /// Decide whether the configuration admits unexpected curves.
    Certify {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Curve degree to test.
        #[arg(long)]
        degree: Option<usize>,
        /// Fat points for the scheme version; needs --degree.
        #[arg(long)]
        fat: Vec<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<String>,
        /// Skip solving for the curve equation.
        #[arg(long)]
        no_curve: bool,
    },
    /// Swap lines and points.
    Dual {
        input: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Singular points of multiplicity at least k, as a points document.
    Sing {
        input: String,
        #[arg(long, default_value_t = 2)]
        min_mult: usize,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Draw the arrangement as SVG.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = Model::Disk)]
        model: Model,
        /// `xmin,xmax,ymin,ymax` for the affine model.
        #[arg(long, default_value = "-3,3,-3,3")]
        viewport: String,
        /// Do not mark points of multiplicity >= 3.
        #[arg(long)]
        no_marks: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Empirical,
    Supersolvable,
    Nearly,
    Chain,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Disk,
    Affine,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Pencil,
    Polygonal,
    CompletePolygonal,
    Tictactoe,
    CompleteTictactoe,
    B3,
    HexagonChain,
    OctagonChain,
    DualOf,
    SingGeqOf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Q,
    Prime,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Inner family for dual-of and sing-geq-of.
    #[arg(long, value_enum)]
    of: Option<Family>,
    #[arg(long = "N", alias = "n")]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Chain stage, e.g. B3, B'3, L4, M8.
    #[arg(long)]
    stage: Option<String>,
    /// Multiplicity threshold for sing-geq-of.
    #[arg(long, default_value_t = 3)]
    min_mult: usize,
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    #[arg(short, long, default_value = "-")]
    output: String,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        if path == "-" {
            self.stdin
                .read_to_end(&mut buf)
                .map_err(|e| Error::Parse { path: "-".into(), message: e.to_string() })?;
        } else {
            buf = std::fs::read(path).map_err(|e| Error::Parse { path: path.into(), message: e.to_string() })?;
        }
        Ok(buf)
    }

    fn write(&mut self, path: &str, text: &str) -> Result<()> {
        let res = if path == "-" {
            self.stdout.write_all(text.as_bytes())
        } else {
            std::fs::write(path, text)
        };
        res.map_err(|e| Error::Parse { path: path.into(), message: e.to_string() })
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconclusive(_) | Error::SearchCutoff(_) | Error::NotUnique { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_INVALID,
    }
}

/// Run with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Run against the given streams; returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Generate(args) => generate(g, args, io),
        Command::Analyze { inputs } => batch(g, io, inputs, None, |g, doc| analyze(g, doc)),
        Command::Dim { input, degree, fat } => {
            let doc = load(io, input)?;
            let report = envelope(g, "dim", input, &doc.1, &doc.0, || dim(g, &doc.0, *degree, fat))?;
            emit(g, io, &report, dim_text)
        }
        Command::Splitting { input, method, chain_file } => {
            let doc = load(io, input)?;
            let chain = match chain_file {
                Some(p) => Some(io::parse_document(&io.read(p)?)?),
                None => None,
            };
            let report = envelope(g, "splitting", input, &doc.1, &doc.0, || {
                splitting(g, &doc.0, *method, chain.as_ref())
            })?;
            emit(g, io, &report, splitting_text)
        }
        Command::Certify { inputs, degree, fat, report, no_curve } => {
            if !fat.is_empty() && degree.is_none() {
                return Err(Error::Precondition("--fat needs --degree".into()));
            }
            let (degree, fat, with_curve) = (*degree, fat.clone(), !no_curve);
            batch(g, io, inputs, report.as_deref(), move |g, doc| {
                certify_cmd(g, doc, degree, &fat, with_curve)
            })
        }
        Command::Dual { input, output } => {
            let (doc, _) = load(io, input)?;
            io.write(output, &io::serialize_document(&doc.dual()?))?;
            Ok(EXIT_OK)
        }
        Command::Sing { input, min_mult, output } => {
            let (doc, _) = load(io, input)?;
            let a = doc.as_lines()?;
            let z = sing_at_least(&a, *min_mult);
            let mut provenance = doc.provenance.clone().unwrap_or_default();
            provenance.notes.push(format!("singular points of multiplicity >= {min_mult}"));
            let mut out = ArrangementDocument::points(z).with_provenance(provenance);
            if let Some(l) = &doc.label {
                out = out.with_label(format!("sing>={min_mult}({l})"));
            }
            io.write(output, &io::serialize_document(&out))?;
            Ok(EXIT_OK)
        }
        Command::Render { input, model, viewport, no_marks, output } => {
            let (doc, _) = load(io, input)?;
            let vp = match model {
                Model::Disk => Viewport::Disk,
                Model::Affine => parse_viewport(viewport)?,
            };
            let opts = RenderOptions {
                viewport: vp,
                mark_multiplicity: if *no_marks { None } else { Some(3) },
            };
            io.write(output, &render_svg(&doc.as_lines()?, &opts)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn load(io: &mut Io<'_>, path: &str) -> Result<(ArrangementDocument, Vec<u8>)> {
    let bytes = io.read(path)?;
    Ok((io::parse_document(&bytes)?, bytes))
}

/// Common report fields around a command-specific body.
fn envelope(
    g: &Global,
    command: &str,
    path: &str,
    bytes: &[u8],
    doc: &ArrangementDocument,
    body: impl FnOnce() -> Result<Value>,
) -> Result<Value> {
    let start = Instant::now();
    let body = body()?;
    let mut m = serde_json::Map::new();
    m.insert("schema-version".into(), json!(io::SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert(
        "input".into(),
        json!({
            "path": path,
            "digest": io::digest(bytes),
            "label": doc.label,
            "field": doc.backend().map(|b| b.to_string()),
        }),
    );
    m.insert(
        "options".into(),
        json!({
            "seed": g.seed,
            "samples": g.samples,
            "primes": g.primes,
            "prime-bits": g.prime_bits,
            "exact": g.exact,
        }),
    );
    if let Value::Object(b) = body {
        m.extend(b);
    }
    if g.timing {
        m.insert("timing-ms".into(), json!(start.elapsed().as_millis() as u64));
    }
    Ok(Value::Object(m))
}

fn emit(g: &Global, io: &mut Io<'_>, report: &Value, text: fn(&Value) -> String) -> Result<i32> {
    let out = if g.json { io::to_pretty(report) } else { text(report) };
    io.write("-", &out)?;
    Ok(EXIT_OK)
}

/// Run one pipeline per input concurrently; reports keep input order.
fn batch<F>(g: &Global, io: &mut Io<'_>, inputs: &[String], report_path: Option<&str>, f: F) -> Result<i32>
where
    F: Fn(&Global, &ArrangementDocument) -> Result<(&'static str, Value, fn(&Value) -> String)> + Sync,
{
    let loaded = inputs.iter().map(|p| load(io, p)).collect::<Result<Vec<_>>>()?;
    let results: Vec<Result<(Value, fn(&Value) -> String)>> = loaded
        .par_iter()
        .zip(inputs.par_iter())
        .map(|((doc, bytes), path)| {
            let mut text = None;
            let report = envelope(g, "", path, bytes, doc, || {
                let (cmd, v, t) = f(g, doc)?;
                text = Some((cmd, t));
                Ok(v)
            })?;
            let (cmd, t) = text.expect("body ran");
            let mut report = report;
            report["command"] = json!(cmd);
            Ok((report, t))
        })
        .collect();
    let mut reports = Vec::with_capacity(results.len());
    let mut texts = Vec::with_capacity(results.len());
    for r in results {
        let (v, t) = r?;
        texts.push(t(&v));
        reports.push(v);
    }
    let combined = if reports.len() == 1 { reports[0].clone() } else { Value::Array(reports) };
    if let Some(p) = report_path {
        io.write(p, &io::to_pretty(&combined))?;
    }
    let out = if g.json { io::to_pretty(&combined) } else { texts.concat() };
    io.write("-", &out)?;
    Ok(EXIT_OK)
}

fn family_spec(f: Family, args: &GenerateArgs, inner: Option<FamilySpec>) -> Result<FamilySpec> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::InvalidFamily(format!("family needs --{name}")))
    };
    Ok(match f {
        Family::Pencil => FamilySpec::Pencil { m: need(args.m, "m")? },
        Family::Polygonal => FamilySpec::Polygonal { n: need(args.n, "N")? },
        Family::CompletePolygonal => FamilySpec::CompletePolygonal { n: need(args.n, "N")? },
        Family::Tictactoe => FamilySpec::Tictactoe { k: need(args.k, "k")?, j: args.j.unwrap_or(0) },
        Family::CompleteTictactoe => FamilySpec::CompleteTictactoe { k: need(args.k, "k")?, j: args.j.unwrap_or(0) },
        Family::B3 => FamilySpec::B3,
        Family::HexagonChain => {
            let s = args.stage.as_deref().unwrap_or("P6bar");
            FamilySpec::HexagonChain {
                stage: s.parse::<HexStage>().map_err(|e| Error::InvalidFamily(e.to_string()))?,
            }
        }
        Family::OctagonChain => {
            let s = args.stage.as_deref().unwrap_or("P8bar");
            FamilySpec::OctagonChain {
                stage: s.parse::<OctStage>().map_err(|e| Error::InvalidFamily(e.to_string()))?,
            }
        }
        Family::DualOf => FamilySpec::DualOf {
            of: Box::new(inner.ok_or_else(|| Error::InvalidFamily("dual-of needs --of".into()))?),
        },
        Family::SingGeqOf => FamilySpec::SingGeqOf {
            of: Box::new(inner.ok_or_else(|| Error::InvalidFamily("sing-geq-of needs --of".into()))?),
            k: args.min_mult,
        },
    })
}

fn generate(g: &Global, args: &GenerateArgs, io: &mut Io<'_>) -> Result<i32> {
    let inner = match args.of {
        Some(Family::DualOf | Family::SingGeqOf) => {
            return Err(Error::InvalidFamily("--of must name a base family".into()))
        }
        Some(f) => Some(family_spec(f, args, None)?),
        None => None,
    };
    let spec = family_spec(args.family, args, inner)?;
    let field = match args.field {
        None => match spec.default_field(g.seed) {
            FieldChoice::Prime { seed, .. } => FieldChoice::Prime { bits: g.prime_bits, seed },
            f => f,
        },
        Some(FieldArg::Q) => FieldChoice::Rational,
        Some(FieldArg::Prime) => FieldChoice::Prime { bits: g.prime_bits, seed: g.seed },
    };
    let doc = match spec.build(field)? {
        Generated::Lines(a) => ArrangementDocument::lines(a),
        Generated::Points(z) => ArrangementDocument::points(z),
    }
    .with_label(spec.label())
    .with_provenance(Provenance {
        family: Some(spec),
        field: Some(field),
        notes: Vec::new(),
    });
    io.write(&args.output, &io::serialize_document(&doc))?;
    Ok(EXIT_OK)
}

/// The same family rebuilt over a different prime, when the document records how
/// it was built over a prime field.
fn second_field(doc: &ArrangementDocument) -> Option<Result<ArrangementDocument>> {
    let p = doc.provenance.as_ref()?;
    let (family, FieldChoice::Prime { bits, seed }) = (p.family.as_ref()?, p.field?) else {
        return None;
    };
    let original = doc.backend();
    let mut s = seed.wrapping_add(1);
    Some(loop {
        let field = FieldChoice::Prime { bits, seed: s };
        let built = family.build(field).map(|gen| match gen {
            Generated::Lines(a) => ArrangementDocument::lines(a),
            Generated::Points(z) => ArrangementDocument::points(z),
        });
        match built {
            Ok(d) if d.backend() == original => s = s.wrapping_add(1),
            other => break other,
        }
    })
}

fn prime_of(doc: &ArrangementDocument) -> Option<u64> {
    match doc.backend() {
        Some(Backend::Prime(p)) => Some(p),
        _ => None,
    }
}

fn splitting_value(t: &SplittingType, method: &str) -> Value {
    json!({"type": io::splitting_json(t), "method": method})
}

fn analyze_lines(a: &LineArrangement, opts: &SamplingOptions) -> Result<Value> {
    let locus = a.singular_locus();
    let counts = locus.multiplicity_counts();
    let d = a.len();
    let partition: usize = counts.iter().map(|(m, c)| c * m * (m - 1) / 2).sum();
    let (ss, witness) = is_supersolvable(a);
    let nearly = is_nearly_supersolvable(a)?;
    let empirical = empirical_splitting(a, opts)?;
    let mut routes = vec![splitting_value(&empirical, "empirical")];
    let mut certificate = Value::Null;
    if ss {
        let t = supersolvable_splitting(a)?;
        routes.push(splitting_value(&t, "supersolvable"));
        let c = supersolvable_chain(a)?;
        routes.push(splitting_value(&c.terminus(), "chain"));
        certificate = io::certificate_json(&c);
    } else if nearly.holds {
        match nearly_supersolvable_splitting(a) {
            Ok(t) => routes.push(splitting_value(&t, "nearly")),
            Err(e @ Error::UnresolvedEvenCase { .. }) => {
                routes.push(json!({"type": null, "method": "nearly", "note": e.to_string()}))
            }
            Err(e) => return Err(e),
        }
    }
    let agree = routes
        .iter()
        .filter(|r| !r["type"].is_null())
        .all(|r| r["type"] == routes[0]["type"]);
    let splitting = routes
        .iter()
        .find(|r| r["method"] != "empirical" && !r["type"].is_null())
        .unwrap_or(&routes[0])
        .clone();
    Ok(json!({
        "lines": d,
        "singular-points": locus.len(),
        "multiplicity-counts": counts.iter().map(|(m, c)| (m.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        "partition-identity": partition == d * (d - 1) / 2,
        "max-multiplicity": max_multiplicity(a),
        "supersolvable": ss,
        "modular-point": witness.as_ref().map(io::point_json),
        "nearly-supersolvable": nearly.holds,
        "full-rank": is_full_rank(a),
        "splitting": splitting,
        "routes": routes,
        "routes-agree": agree,
        "certificate": certificate,
    }))
}

fn analyze(g: &Global, doc: &ArrangementDocument) -> Result<(&'static str, Value, fn(&Value) -> String)> {
    let opts = g.sampling();
    let mut v = analyze_lines(&doc.as_lines()?, &opts)?;
    if let Some(other) = second_field(doc) {
        let other = other?;
        let w = analyze_lines(&other.as_lines()?, &opts)?;
        let agrees = ["supersolvable", "nearly-supersolvable", "multiplicity-counts", "routes"]
            .iter()
            .all(|k| v[k] == w[k]);
        v["cross-field"] = json!({"prime": prime_of(&other), "agrees": agrees});
        if !agrees {
            return Err(Error::Inconclusive(format!(
                "analysis differs between F_{} and F_{}",
                prime_of(doc).unwrap_or(0),
                prime_of(&other).unwrap_or(0)
            )));
        }
    }
    Ok(("analyze", v, analyze_text))
}

fn label_line(v: &Value) -> String {
    let label = v["input"]["label"].as_str().unwrap_or("-");
    format!("{} [{}]\n", label, v["input"]["field"].as_str().unwrap_or("?"))
}

fn type_text(v: &Value) -> String {
    match v.as_array() {
        Some(t) if t.len() == 2 => format!("({},{})", t[0], t[1]),
        _ => "-".into(),
    }
}

fn analyze_text(v: &Value) -> String {
    let mut s = label_line(v);
    s += &format!("lines = {}\n", v["lines"]);
    s += &format!("singular points = {} {}\n", v["singular-points"], v["multiplicity-counts"]);
    s += &format!("max multiplicity = {}\n", v["max-multiplicity"]);
    s += &format!("supersolvable = {}\n", v["supersolvable"]);
    s += &format!("nearly supersolvable = {}\n", v["nearly-supersolvable"]);
    s += &format!("full rank = {}\n", v["full-rank"]);
    s += &format!(
        "splitting {} via {}\n",
        type_text(&v["splitting"]["type"]),
        v["splitting"]["method"].as_str().unwrap_or("?")
    );
    s += &format!("routes agree = {}\n", v["routes-agree"]);
    if let Some(c) = v.get("cross-field") {
        s += &format!("cross-field F_{} agrees = {}\n", c["prime"], c["agrees"]);
    }
    s
}

/// Parse `m@generic` or `m@(x:y:z)`; generic supports get consecutive seeds.
fn parse_fat(specs: &[String], backend: Option<Backend>, seed: u64) -> Result<FatPointScheme> {
    let mut x = FatPointScheme::empty();
    for (i, s) in specs.iter().enumerate() {
        let bad = |m: &str| Error::Parse { path: format!("--fat {s}"), message: m.into() };
        let (m, at) = s.split_once('@').ok_or_else(|| bad("expected m@generic or m@(x:y:z)"))?;
        let m: usize = m.trim().parse().map_err(|_| bad("multiplicity is not a number"))?;
        if m == 0 {
            return Err(bad("multiplicity must be positive"));
        }
        let support = if at.trim() == "generic" {
            Support::Generic { seed: seed ^ FAT_MARKER.wrapping_add(i as u64) }
        } else {
            let inner = at
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad("point must be written (x:y:z)"))?;
            let parts: Vec<&str> = inner.split(':').collect();
            if parts.len() != 3 {
                return Err(bad("point needs three coordinates"));
            }
            let doc = format!(
                r#"{{"schema-version":"1","field":{},"points":[["{}","{}","{}"]]}}"#,
                match backend {
                    Some(Backend::Prime(p)) => format!(r#"{{"prime":{p}}}"#),
                    _ => r#""Q""#.into(),
                },
                parts[0].trim(),
                parts[1].trim(),
                parts[2].trim()
            );
            let q: ProjPoint = io::parse_document(doc.as_bytes())
                .map_err(|e| bad(&e.to_string()))?
                .as_points()
                .points()[0]
                .clone();
            Support::Point(q)
        };
        x = x.with(FatPoint { support, multiplicity: m })?;
    }
    Ok(x)
}

fn dim(g: &Global, doc: &ArrangementDocument, degree: usize, fat: &[String]) -> Result<Value> {
    let opts = g.sampling();
    let z = doc.as_points();
    let x = parse_fat(fat, doc.backend(), g.seed)?;
    let report = ideal_dimension(&z, &x, degree, &opts)?;
    let expected = expected_dimension(&z, &x, degree, &opts)?;
    let mut v = json!({
        "points": z.len(),
        "fat": fat,
        "fat-degree": x.degree(),
        "dimension": io::dimension_json(&report),
        "expected": expected,
        "excess": report.dimension.saturating_sub(expected),
    });
    // point supports are tied to the document's field, so only generic schemes move
    let all_generic = x.parts().iter().all(|p| matches!(p.support, Support::Generic { .. }));
    if let (Some(other), true) = (second_field(doc), all_generic) {
        let other = other?;
        let other_report = ideal_dimension(&other.as_points(), &x, degree, &opts)?;
        let e2 = expected_dimension(&other.as_points(), &x, degree, &opts)?;
        let d2 = other_report.dimension;
        let merged = merge_reports(&[report.clone(), other_report])?;
        if e2 != expected {
            return Err(Error::Inconclusive(format!("expected dimension differs across fields: {expected} vs {e2}")));
        }
        v["dimension"] = io::dimension_json(&merged);
        v["cross-field"] = json!({"prime": prime_of(&other), "dimension": d2});
    }
    Ok(v)
}

fn dim_text(v: &Value) -> String {
    let mut s = label_line(v);
    let d = &v["dimension"];
    s += &format!(
        "dim = {} in degree {} (expected {}, stable = {})\n",
        d["dimension"], d["degree"], v["expected"], d["stable"]
    );
    s
}

fn splitting(g: &Global, doc: &ArrangementDocument, method: Method, chain: Option<&ArrangementDocument>) -> Result<Value> {
    let opts = g.sampling();
    let a = doc.as_lines()?;
    let (t, cert) = match method {
        Method::Empirical => (empirical_splitting(&a, &opts)?, None),
        Method::Supersolvable => (supersolvable_splitting(&a)?, None),
        Method::Nearly => (nearly_supersolvable_splitting(&a)?, None),
        Method::Chain => {
            let extra = match chain {
                Some(c) => c.as_lines()?.lines().to_vec(),
                None => Vec::new(),
            };
            let c = if is_supersolvable(&a).0 {
                chain_from_supersolvable(&a, &extra)?
            } else if !extra.is_empty() {
                let base = empirical_splitting(&a, &opts)?;
                addition_chain(&a, base, &extra)?
            } else {
                return Err(Error::Precondition(
                    "chain route needs a supersolvable input or a --chain-file".into(),
                ));
            };
            (c.terminus(), Some(c))
        }
    };
    let name = match method {
        Method::Empirical => "empirical",
        Method::Supersolvable => "supersolvable",
        Method::Nearly => "nearly",
        Method::Chain => "chain",
    };
    let mut v = json!({
        "lines": a.len(),
        "splitting": splitting_value(&t, name),
        "certificate": cert.as_ref().map(io::certificate_json),
    });
    if method == Method::Empirical {
        if let Some(other) = second_field(doc) {
            let t2 = empirical_splitting(&other?.as_lines()?, &opts)?;
            if t2 != t {
                return Err(Error::Inconclusive(format!("empirical splitting differs across fields: {t} vs {t2}")));
            }
            v["cross-field"] = json!({"splitting": io::splitting_json(&t2), "agrees": true});
        }
    }
    Ok(v)
}

fn splitting_text(v: &Value) -> String {
    let mut s = label_line(v);
    s += &format!(
        "splitting {} via {}\n",
        type_text(&v["splitting"]["type"]),
        v["splitting"]["method"].as_str().unwrap_or("?")
    );
    if let Some(steps) = v["certificate"]["steps"].as_array() {
        for (i, st) in steps.iter().enumerate() {
            s += &format!(
                "  step {i}: count {} -> {}\n",
                st["restriction-count"],
                type_text(&st["splitting"])
            );
        }
    }
    s
}

fn certify_body(
    g: &Global,
    doc: &ArrangementDocument,
    degree: Option<usize>,
    fat: &[String],
    with_curve: bool,
) -> Result<Value> {
    let opts = g.sampling();
    let z = doc.as_points();
    Ok(match degree {
        Some(c) if !fat.is_empty() => {
            let x = parse_fat(fat, doc.backend(), g.seed)?;
            json!({"mode": "scheme", "fat": fat, "verdict": io::problem_b_json(&certify_problem_b(&z, &x, c, &opts)?)})
        }
        Some(c) => json!({"mode": "degree", "verdict": io::degree_verdict_json(&certify_degree(&z, c, &opts)?)}),
        None => json!({"mode": "theorem", "verdict": io::verdict_json(&certify_with(&z, &opts, with_curve)?)}),
    })
}

fn certify_cmd(
    g: &Global,
    doc: &ArrangementDocument,
    degree: Option<usize>,
    fat: &[String],
    with_curve: bool,
) -> Result<(&'static str, Value, fn(&Value) -> String)> {
    let mut v = certify_body(g, doc, degree, fat, with_curve)?;
    let all_generic = fat.iter().all(|f| f.trim_end().ends_with("@generic"));
    if let (Some(other), true) = (second_field(doc), all_generic) {
        let other = other?;
        let w = certify_body(g, &other, degree, fat, false)?;
        let keys = ["admits", "splitting", "interval", "t-index", "in-range", "expected"];
        let agrees = keys.iter().all(|k| v["verdict"].get(k) == w["verdict"].get(k));
        if !agrees {
            return Err(Error::Inconclusive("verdicts differ across prime fields".into()));
        }
        v["cross-field"] = json!({"prime": prime_of(&other), "agrees": true});
    }
    Ok(("certify", v, certify_text))
}

fn certify_text(v: &Value) -> String {
    let mut s = label_line(v);
    let r = &v["verdict"];
    match v["mode"].as_str() {
        Some("theorem") => {
            s += &format!("admits = {}\n", r["admits"]);
            s += &format!("splitting {}\n", type_text(&r["splitting"]));
            if let Some(i) = r["interval"].as_object() {
                s += &format!("interval ({},{}]\n", i["low"], i["high"]);
            }
            if let Some(d) = r["minimal-dimension"].as_object() {
                s += &format!("unique curve in degree {}: dim = {}\n", d["degree"], d["dimension"]);
            }
            if let Some(c) = r["curve"].as_object() {
                s += &format!("curve of degree {} with multiplicity {} at the sampled point\n", c["degree"], c["multiplicity"]);
            }
            for n in r["reasons"]["notes"].as_array().into_iter().flatten() {
                s += &format!("note: {}\n", n.as_str().unwrap_or(""));
            }
        }
        Some("degree") => {
            s += &format!(
                "curve degree {}: admits = {}, definition = {}, consistent = {}\n",
                r["curve-degree"], r["admits"], r["definition"]["unexpected"], r["consistent"]
            );
        }
        _ => {
            s += &format!(
                "degree {}: admits = {} (actual {}, expected {})\n",
                r["degree"], r["admits"], r["actual"]["dimension"], r["expected"]
            );
        }
    }
    if let Some(c) = v.get("cross-field") {
        s += &format!("cross-field F_{} agrees = {}\n", c["prime"], c["agrees"]);
    }
    s
}

fn parse_viewport(s: &str) -> Result<Viewport> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse { path: "--viewport".into(), message: e.to_string() })?;
    match v[..] {
        [xmin, xmax, ymin, ymax] => Ok(Viewport::Affine { xmin, xmax, ymin, ymax }),
        _ => Err(Error::Parse {
            path: "--viewport".into(),
            message: "expected xmin,xmax,ymin,ymax".into(),
        }),
    }
}
