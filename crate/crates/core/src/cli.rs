//! The `fvlab` command line: every operation with JSON in and JSON out.
//!
//! Vector and document arguments take inline JSON, `@path` for a file, or
//! `-` for standard input. Integers are written as decimal strings. Exit
//! codes: 0 success or positive verdict, 1 negative verdict, 2 input error,
//! 3 size cap exceeded.

use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::cd::{self, AbPolynomial, CdError, CdPolynomial};
use crate::decimal;
use crate::experiment;
use crate::macaulay::{self, OrthantPoint};
use crate::poset::gorenstein::{decide_flag_gorenstein_with, is_gorenstein_star_with, FlagSearchOptions};
use crate::poset::{FlagDecision, FlagVector, GorensteinCheck, GradedPoset, HomologyField, PosetError};
use crate::rank5::{self, Rank5Error, Rank5Instance, Rank5Verdict};
use crate::simplicial;
use crate::vectors::{self, FVector, GVector, HVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fvlab", version, about = "Exact face-vector computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between f-, h- and g-vectors.
    #[command(subcommand)]
    Transform(Transform),
    /// Membership deciders.
    #[command(subcommand)]
    Decide(Decide),
    /// Macaulay representations and M-sequences.
    #[command(subcommand)]
    Msequence(Msequence),
    /// Graded posets, flag vectors and the Gorenstein* property.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// The cd-index.
    #[command(subcommand)]
    Cd(CdCmd),
    /// Rank-5 realizability with [c^4] = [cdc] = 1.
    #[command(subcommand)]
    Rank5(Rank5Cmd),
    /// Tables for plotting.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
    /// Derived statistics.
    #[command(subcommand)]
    Stats(StatsCmd),
}

#[derive(Subcommand, Debug)]
enum Transform {
    /// f-vector to h-vector.
    F2h {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        f: String,
    },
    /// h-vector (h_0..h_d) to f-vector.
    H2f {
        #[arg(long)]
        h: String,
    },
    /// h-vector to g-vector.
    H2g {
        #[arg(long)]
        h: String,
    },
    /// g-vector to the symmetric h-vector of length d + 1.
    G2h {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: String,
    },
}

#[derive(Subcommand, Debug)]
enum Decide {
    /// Is f the f-vector of a simplicial d-polytope?
    Simplicial {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        f: String,
    },
}

#[derive(Subcommand, Debug)]
enum Msequence {
    /// Check the Macaulay inequalities for (1, g_1, ..., g_k).
    Check {
        #[arg(long)]
        g: String,
    },
    /// The i-th Macaulay representation of a and its pseudo-power.
    Rep {
        #[arg(long)]
        a: String,
        #[arg(long)]
        i: usize,
    },
    /// Componentwise-least M-sequence approximation of an orthant point.
    Approx {
        #[arg(long)]
        x: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PosetKind {
    Boolean,
    Polygon,
    Dihedral,
    Path,
    Stanley,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    Rational,
    Modular,
}

#[derive(Subcommand, Debug)]
enum PosetCmd {
    /// Emit a standard poset.
    Build {
        #[arg(long, value_enum)]
        kind: PosetKind,
        /// Atoms of a boolean lattice, polygon vertices, sphere degree or
        /// path edges.
        #[arg(long)]
        n: Option<usize>,
        /// cd-word for `stanley`.
        #[arg(long)]
        word: Option<String>,
        /// Polygon size for `stanley`.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Flag vector of a poset.
    Flag {
        #[arg(long)]
        poset: String,
    },
    /// Eulerian test.
    Eulerian {
        #[arg(long)]
        poset: String,
    },
    /// Gorenstein* test.
    Gorenstein {
        #[arg(long)]
        poset: String,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldArg,
    },
    /// Search for a Gorenstein* poset with the given flag vector.
    DecideFlag {
        #[arg(long)]
        flag: String,
        /// Disable diamond pruning.
        #[arg(long)]
        no_prune: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CdCmd {
    /// cd-index of a flag vector.
    FromFlag {
        #[arg(long)]
        flag: String,
    },
    /// Expand a cd-polynomial into a and b.
    Expand {
        #[arg(long)]
        cd: String,
    },
    /// cd-index of the Stanley sphere P_{w,m}.
    Stanley {
        #[arg(long)]
        word: String,
        #[arg(long)]
        m: u64,
        /// Also emit the poset.
        #[arg(long)]
        with_poset: bool,
    },
    /// All cd-words of a degree in canonical order.
    Words {
        #[arg(long)]
        degree: usize,
    },
    /// Cone coordinates of a cd-index with [c^d] = 1.
    Coords {
        #[arg(long)]
        cd: String,
    },
}

#[derive(Subcommand, Debug)]
enum Rank5Cmd {
    /// Decide the diophantine system for A = [c^2 d], B = [dc^2], D2 = [d^2].
    Decide {
        #[arg(long)]
        c2d: String,
        #[arg(long)]
        dc2: String,
        #[arg(long)]
        d2: String,
    },
    /// Time the decider on seeded random instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,16,24,32")]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum ExperimentCmd {
    /// Distance from (0, ..., 0, a) to the nearest M-sequence.
    Density {
        #[arg(long)]
        k: usize,
        /// JSON array of a values; default 10^3..10^9 in quarter decades.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cone coordinates of Stanley spheres against their rays.
    Convergence {
        #[arg(long, value_delimiter = ',', default_value = "ccd,cdc,dcc,dd")]
        words: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
        ms: Vec<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum StatsCmd {
    /// (f_2 + f_3) / (f_1 + f_4) of a 4-dimensional f-vector.
    Fatness {
        #[arg(long)]
        f: String,
    },
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<PosetError> for Failure {
    fn from(e: PosetError) -> Self {
        match e {
            PosetError::CapExceeded(_) => Failure::Cap(e.to_string()),
            other => Failure::input(other),
        }
    }
}

impl From<CdError> for Failure {
    fn from(e: CdError) -> Self {
        match e {
            CdError::Poset(p) => p.into(),
            other => Failure::input(other),
        }
    }
}

impl From<Rank5Error> for Failure {
    fn from(e: Rank5Error) -> Self {
        match e {
            Rank5Error::CapExceeded { .. } | Rank5Error::TooLarge { .. } => Failure::Cap(e.to_string()),
            other => Failure::input(other),
        }
    }
}

/// A successful run: the document, the exit code and any diagnostics.
struct Done {
    body: Body,
    code: i32,
    note: Option<String>,
}

enum Body {
    Json(Value),
    Text(String),
}

fn ok(v: Value) -> Result<Done, Failure> {
    Ok(Done {
        body: Body::Json(v),
        code: EXIT_OK,
        note: None,
    })
}

fn verdict(v: Value, positive: bool) -> Result<Done, Failure> {
    Ok(Done {
        body: Body::Json(v),
        code: if positive { EXIT_OK } else { EXIT_NEGATIVE },
        note: None,
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => return failure(Failure::input(e)),
    };
    match dispatch(cli.command, &caps) {
        Ok(done) => {
            let stdout = match done.body {
                Body::Json(v) => format!("{v}\n"),
                Body::Text(t) => t,
            };
            Output {
                stdout,
                stderr: done.note.map(|n| n + "\n").unwrap_or_default(),
                code: done.code,
            }
        }
        Err(f) => failure(f),
    }
}

fn failure(f: Failure) -> Output {
    let (msg, code) = match f {
        Failure::Input(m) => (m, EXIT_INPUT),
        Failure::Cap(m) => (m, EXIT_CAP),
    };
    Output {
        stdout: format!("{}\n", json!({ "error": msg })),
        stderr: format!("error: {msg}\n"),
        code,
    }
}

/// Inline JSON, `@path`, or `-` for standard input.
fn read_json(arg: &str) -> Result<Value, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {path}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))
}

fn read_doc<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    serde_json::from_value(read_json(arg)?).map_err(Failure::input)
}

fn read_bigs(arg: &str) -> Result<Vec<BigInt>, Failure> {
    decimal::bigs_from_value(&read_json(arg)?).map_err(Failure::input)
}

/// A bare decimal integer, or any of the JSON forms.
fn read_big(arg: &str) -> Result<BigInt, Failure> {
    match decimal::parse_big(arg) {
        Ok(v) => Ok(v),
        Err(_) => decimal::big_from_value(&read_json(arg)?).map_err(Failure::input),
    }
}

fn strings(v: &[BigInt]) -> Value {
    json!(decimal::to_strings(v))
}

fn dispatch(cmd: Command, caps: &Caps) -> Result<Done, Failure> {
    match cmd {
        Command::Transform(t) => transform(t),
        Command::Decide(Decide::Simplicial { d, f }) => decide_simplicial(d, &f),
        Command::Msequence(m) => msequence(m),
        Command::Poset(p) => poset(p, caps),
        Command::Cd(c) => cd_cmd(c),
        Command::Rank5(r) => rank5_cmd(r),
        Command::Experiment(e) => experiment_cmd(e),
        Command::Stats(StatsCmd::Fatness { f }) => {
            let v = FVector::new(read_bigs(&f)?).map_err(Failure::input)?;
            let q = vectors::fatness(&v).map_err(Failure::input)?;
            ok(json!({
                "fatness": q.to_string(),
                "approx": q.to_f64(),
            }))
        }
    }
}

fn fvector(d: usize, f: &str) -> Result<FVector, Failure> {
    let entries = read_bigs(f)?;
    if entries.len() != d {
        return Err(Failure::Input(format!("--d {d} but {} entries given", entries.len())));
    }
    FVector::new(entries).map_err(Failure::input)
}

fn transform(t: Transform) -> Result<Done, Failure> {
    let to_value = |v: Result<Value, serde_json::Error>| v.map_err(Failure::input);
    match t {
        Transform::F2h { d, f } => ok(to_value(serde_json::to_value(vectors::f_to_h(&fvector(d, &f)?)))?),
        Transform::H2f { h } => {
            let h = HVector::new(read_bigs(&h)?).map_err(Failure::input)?;
            let f = vectors::h_to_f(&h).map_err(Failure::input)?;
            ok(to_value(serde_json::to_value(f))?)
        }
        Transform::H2g { h } => {
            let h = HVector::new(read_bigs(&h)?).map_err(Failure::input)?;
            ok(to_value(serde_json::to_value(vectors::h_to_g(&h)))?)
        }
        Transform::G2h { d, g } => {
            let g = GVector::new(read_bigs(&g)?).map_err(Failure::input)?;
            let h = vectors::g_to_h(&g, d).map_err(Failure::input)?;
            ok(to_value(serde_json::to_value(h))?)
        }
    }
}

fn decide_simplicial(d: usize, f: &str) -> Result<Done, Failure> {
    let entries = match read_json(f)? {
        Value::Array(items) => items,
        other => return Err(Failure::Input(format!("expected a JSON array, found {other}"))),
    };
    if entries.len() != d {
        return Err(Failure::Input(format!("--d {d} but {} entries given", entries.len())));
    }
    let decision = simplicial::decide_simplicial_json(&entries).map_err(Failure::input)?;
    verdict(decision.to_json(), decision.is_accepted())
}

fn msequence(m: Msequence) -> Result<Done, Failure> {
    match m {
        Msequence::Check { g } => {
            let g = GVector::new(read_bigs(&g)?).map_err(Failure::input)?;
            match macaulay::is_m_sequence(&g) {
                Ok(()) => verdict(json!({ "m_sequence": true }), true),
                Err(v) => verdict(
                    json!({
                        "m_sequence": false,
                        "violation": serde_json::to_value(&v).map_err(Failure::input)?,
                        "message": v.to_string(),
                    }),
                    false,
                ),
            }
        }
        Msequence::Rep { a, i } => {
            let a = read_big(&a)?;
            let rep = macaulay::macaulay_rep(&a, i).map_err(Failure::input)?;
            ok(json!({
                "a": a.to_string(),
                "i": i,
                "terms": serde_json::to_value(&rep.terms).map_err(Failure::input)?,
                "text": rep.to_string(),
                "pseudo_power": rep.pseudo_power().to_string(),
            }))
        }
        Msequence::Approx { x } => {
            let x: OrthantPoint = OrthantPoint::new(read_bigs(&x)?).map_err(Failure::input)?;
            let m = macaulay::approximate_point(&x);
            let distance = m.l1_distance(&x.as_gvector());
            ok(json!({
                "x": strings(x.coords()),
                "m": strings(m.entries()),
                "distance": distance.to_string(),
            }))
        }
    }
}

fn need<T>(v: Option<T>, name: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Input(format!("--{name} is required for this kind")))
}

fn poset(p: PosetCmd, caps: &Caps) -> Result<Done, Failure> {
    match p {
        PosetCmd::Build { kind, n, word, m } => {
            let poset = match kind {
                PosetKind::Boolean => GradedPoset::boolean_lattice(need(n, "n")?)?,
                PosetKind::Polygon => GradedPoset::polygon(need(n, "n")?)?,
                PosetKind::Dihedral => GradedPoset::dihedral_sphere(need(n, "n")?)?,
                PosetKind::Path => GradedPoset::path(need(n, "n")?)?,
                PosetKind::Stanley => cd::stanley_poset(&need(word, "word")?, need(m, "m")?)?,
            };
            ok(serde_json::to_value(&poset).map_err(Failure::input)?)
        }
        PosetCmd::Flag { poset } => {
            let p: GradedPoset = read_doc(&poset)?;
            ok(serde_json::to_value(p.flag_vector()).map_err(Failure::input)?)
        }
        PosetCmd::Eulerian { poset } => {
            let p: GradedPoset = read_doc(&poset)?;
            match p.eulerian_violation() {
                None => verdict(json!({ "eulerian": true }), true),
                Some((x, y)) => verdict(json!({ "eulerian": false, "interval": [x, y] }), false),
            }
        }
        PosetCmd::Gorenstein { poset, field } => {
            let p: GradedPoset = read_doc(&poset)?;
            let field = match field {
                FieldArg::Rational => HomologyField::Rational,
                FieldArg::Modular => HomologyField::Modular,
            };
            match is_gorenstein_star_with(&p, caps, field)? {
                GorensteinCheck::Passed => verdict(json!({ "gorenstein": true }), true),
                GorensteinCheck::Failed {
                    face,
                    expected_dim,
                    link_dim,
                    betti,
                } => verdict(
                    json!({
                        "gorenstein": false,
                        "face": face,
                        "expected_dim": expected_dim,
                        "link_dim": link_dim,
                        "betti": betti,
                    }),
                    false,
                ),
            }
        }
        PosetCmd::DecideFlag { flag, no_prune } => {
            let v: FlagVector = read_doc(&flag)?;
            let opts = FlagSearchOptions {
                prune_eulerian: !no_prune,
            };
            match decide_flag_gorenstein_with(&v, caps, opts)? {
                FlagDecision::Realizable { witness, candidates } => verdict(
                    json!({
                        "verdict": "realizable",
                        "witness": serde_json::to_value(&witness).map_err(Failure::input)?,
                        "candidates": candidates.to_string(),
                    }),
                    true,
                ),
                FlagDecision::NotRealizable { candidates } => verdict(
                    json!({
                        "verdict": "not-realizable",
                        "candidates": candidates.to_string(),
                    }),
                    false,
                ),
            }
        }
    }
}

fn cd_cmd(c: CdCmd) -> Result<Done, Failure> {
    match c {
        CdCmd::FromFlag { flag } => {
            let v: FlagVector = read_doc(&flag)?;
            match cd::flag_to_cd(&v) {
                Ok(phi) => ok(json!({ "cd": phi })),
                Err(CdError::Inexpressible { residual }) => verdict(
                    json!({ "verdict": "inexpressible", "residual": residual }),
                    false,
                ),
                Err(e) => Err(e.into()),
            }
        }
        CdCmd::Expand { cd } => {
            let q: CdPolynomial = read_doc(&cd)?;
            let p: AbPolynomial = cd::cd_expand(&q);
            ok(json!({ "ab": p }))
        }
        CdCmd::Stanley { word, m, with_poset } => {
            if with_poset {
                let (phi, poset) = cd::stanley_sphere(&word, m)?;
                ok(json!({ "cd": phi, "poset": poset }))
            } else {
                ok(json!({ "cd": cd::stanley_product(&word, m)? }))
            }
        }
        CdCmd::Words { degree } => ok(json!({ "degree": degree, "words": cd::cd_words(degree) })),
        CdCmd::Coords { cd } => {
            let q: CdPolynomial = read_doc(&cd)?;
            let x = cd::cone_coordinates(&q)?;
            ok(json!({
                "words": cd::cone_words(q.degree()),
                "coordinates": strings(x.coords()),
            }))
        }
    }
}

fn rank5_cmd(r: Rank5Cmd) -> Result<Done, Failure> {
    match r {
        Rank5Cmd::Decide { c2d, dc2, d2 } => {
            let inst = Rank5Instance::new(read_big(&c2d)?, read_big(&dc2)?, read_big(&d2)?)?;
            let start = Instant::now();
            let out = rank5::decide_rank5(&inst)?;
            let elapsed = start.elapsed();
            let feasible = matches!(out.verdict, Rank5Verdict::Feasible(_));
            Ok(Done {
                body: Body::Json(out.to_json()),
                code: if feasible { EXIT_OK } else { EXIT_NEGATIVE },
                note: Some(format!("elapsed: {:.6} s", elapsed.as_secs_f64())),
            })
        }
        Rank5Cmd::Bench { sizes, count, seed } => {
            let rows = rank5::bench_rank5(&sizes, count, seed);
            ok(serde_json::to_value(rows).map_err(Failure::input)?)
        }
    }
}

fn experiment_cmd(e: ExperimentCmd) -> Result<Done, Failure> {
    match e {
        ExperimentCmd::Density { k, grid, format } => {
            let grid = match grid {
                Some(g) => read_bigs(&g)?,
                None => experiment::default_density_grid(),
            };
            if k == 0 {
                return Err(Failure::Input("k must be at least 1".into()));
            }
            let table = experiment::experiment_density(k, &grid);
            if format == Format::Csv {
                let mut s = String::from("a,distance,local_slope\n");
                for r in &table.rows {
                    let slope = r.local_slope.map(|x| x.to_string()).unwrap_or_default();
                    let _ = writeln!(s, "{},{},{}", r.a, r.distance, slope);
                }
                return Ok(Done {
                    body: Body::Text(s),
                    code: EXIT_OK,
                    note: table
                        .fitted_slope
                        .map(|x| format!("fitted slope: {x}"))
                        .or(table.note),
                });
            }
            ok(serde_json::to_value(&table).map_err(Failure::input)?)
        }
        ExperimentCmd::Convergence { words, ms, format } => {
            let rows = experiment::experiment_convergence(&words, &ms)?;
            if format == Format::Csv {
                let mut s = String::from("word,m,coordinates,cone_distance,full_distance\n");
                for r in &rows {
                    let coords = decimal::to_strings(&r.coordinates).join(" ");
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        r.word, r.m, coords, r.cone_distance, r.full_distance
                    );
                }
                return Ok(Done {
                    body: Body::Text(s),
                    code: EXIT_OK,
                    note: None,
                });
            }
            ok(serde_json::to_value(&rows).map_err(Failure::input)?)
        }
    }
}

/// Entry point for the binary: runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = run(args);
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    eprint!("{}", out.stderr);
    out.code
}
