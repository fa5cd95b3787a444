//! Command-line front end for `braidkit`: subcommand dispatch, corpus
//! files, a checksummed HOMFLY cache and replayable result records.
//!
//! Every subcommand prints one JSON document on standard output. Keys are
//! emitted in sorted order so results diff cleanly. Exit codes: 0 success,
//! 1 property violation, 2 parse or usage error, 3 budget exhausted.

pub mod cache;
pub mod corpus;
pub mod error;
pub mod record;
pub mod verify;

use std::path::PathBuf;

use braidkit::bounds::{bennequin_check, geography_check, mfw_braid_index_lower_bound, mfw_check, qp_certificate};
use braidkit::contact::{
    det_curves_decide, is_torsion_only_dividing_set, primitive_slopes, torsion_summary, torus_intersection,
    DividingSetOrbitModel, TorusMulticurve,
};
use braidkit::invariants::{closure_stats, self_linking, HomflyEngine, CONVENTION};
use braidkit::markov::{replay, transverse_connect, Connection};
use braidkit::quasipositivity::{search_qp_factorization, sqp_recognize, CertificateData, QpSearch, SqpSearch};
use braidkit::BraidWord;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cache::HomflyCache;
use error::{CliError, CliResult, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, EXIT_VIOLATION};
use record::ResultRecord;

#[derive(Debug, Parser)]
#[command(name = "braidkit", version, about = "Braid, link-invariant and transverse-link computations")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Indented JSON, or a text table for corpus-verify.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Maximal conjugator length for quasi-positive searches.
    #[arg(long, global = true, default_value_t = 2)]
    pub conj_budget: usize,
    /// Node budget for searches and the skein tree.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub node_budget: usize,
    /// Search depth for Markov-move connection.
    #[arg(long, global = true, default_value_t = 6)]
    pub depth: usize,
    /// HOMFLY results cache file.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Append a replayable result record to this file.
    #[arg(long, global = true)]
    pub record: Option<PathBuf>,
    /// Entry id stored in the result record.
    #[arg(long, global = true)]
    pub id: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Self-linking number a - n of the closure.
    Sl { braid: String },
    /// Writhe, Seifert circles, components and Seifert-surface Euler characteristic.
    Stats { braid: String },
    /// HOMFLY-PT polynomial of the closure.
    Homfly { braid: String },
    /// Morton-Franks-Williams inequality.
    Mfw { braid: String },
    /// Bennequin inequality a <= n - chi.
    Bennequin {
        braid: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
    },
    /// Braid geography b + |a - w| <= n.
    Geography {
        braid: String,
        #[arg(long)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
    },
    /// Search for a quasi-positive factorization.
    QpSearch {
        braid: String,
        #[arg(long, allow_hyphen_values = true, requires = "fibered_sqp")]
        chi: Option<i64>,
        #[arg(long)]
        fibered_sqp: bool,
    },
    /// Search for a strongly quasi-positive band factorization.
    SqpSearch { braid: String },
    /// Quasi-positivity from a = n - chi for fibered SQP link types.
    QpCert {
        braid: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        fibered_sqp: bool,
    },
    /// Connect two braids by positive Markov moves and conjugation.
    Connect { first: String, second: String },
    /// Half-twists and torsion for a dividing-set orbit model (JSON or @file).
    Torsion {
        model: String,
        /// Class 1 is the boundary-parallel copy.
        #[arg(long)]
        boundary_class: bool,
    },
    /// Decide containment of torus multicurves given as [[p, q, mult], ...].
    DetCurves {
        gamma: String,
        gamma_prime: String,
        /// Test slopes have |p|, |q| at most this.
        #[arg(long, default_value_t = 5)]
        test_bound: i64,
    },
    /// Run the invariant suite over a corpus file (default: the shipped corpus).
    CorpusVerify { path: Option<PathBuf> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sl { .. } => "sl",
            Command::Stats { .. } => "stats",
            Command::Homfly { .. } => "homfly",
            Command::Mfw { .. } => "mfw",
            Command::Bennequin { .. } => "bennequin",
            Command::Geography { .. } => "geography",
            Command::QpSearch { .. } => "qp-search",
            Command::SqpSearch { .. } => "sqp-search",
            Command::QpCert { .. } => "qp-cert",
            Command::Connect { .. } => "connect",
            Command::Torsion { .. } => "torsion",
            Command::DetCurves { .. } => "det-curves",
            Command::CorpusVerify { .. } => "corpus-verify",
        }
    }

    fn primary_arg(&self) -> String {
        match self {
            Command::Sl { braid }
            | Command::Stats { braid }
            | Command::Homfly { braid }
            | Command::Mfw { braid }
            | Command::Bennequin { braid, .. }
            | Command::Geography { braid, .. }
            | Command::QpSearch { braid, .. }
            | Command::SqpSearch { braid }
            | Command::QpCert { braid, .. } => braid.clone(),
            Command::Connect { first, .. } => first.clone(),
            Command::Torsion { model, .. } => model.clone(),
            Command::DetCurves { gamma, .. } => gamma.clone(),
            Command::CorpusVerify { path } => {
                path.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "default-corpus".into())
            }
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    /// Human rendering used by `--pretty` when present.
    pub text: Option<String>,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Self { code: EXIT_OK, json, text: None }
    }

    fn with_code(code: i32, json: Value) -> Self {
        Self { code, json, text: None }
    }

    fn error(code: i32, msg: String) -> Self {
        Self { code, json: json!({ "error": msg }), text: None }
    }

    pub fn render(&self, pretty: bool) -> String {
        match (&self.text, pretty) {
            (Some(t), true) => t.clone(),
            (None, true) => serde_json::to_string_pretty(&self.json).expect("json renders"),
            _ => self.json.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
/// Help and version requests come back with exit code 0 and the text.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let mut o = Outcome::error(code, e.to_string());
            if code == EXIT_OK {
                o.json = json!({ "help": e.to_string() });
                o.text = Some(e.to_string());
            }
            return o;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(e.exit_code(), e.to_string()),
    };
    if let Some(path) = &cli.opts.record {
        let id = cli.opts.id.clone().unwrap_or_else(|| cli.command.primary_arg());
        let rec = ResultRecord::new(id, cli.command.name().into(), strip_record_flag(&args[1..]), outcome.json.clone());
        if let Err(e) = rec.append_to(path) {
            return Outcome::error(EXIT_USAGE, e.to_string());
        }
    }
    outcome
}

fn strip_record_flag(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--record" {
            skip = true;
        } else if !a.starts_with("--record=") {
            out.push(a.clone());
        }
    }
    out
}

fn parse_braid(s: &str) -> CliResult<BraidWord> {
    Ok(s.parse()?)
}

fn read_json_arg(s: &str) -> CliResult<Value> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?,
        None => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad JSON argument: {e}")))
}

fn open_cache(opts: &GlobalOpts) -> CliResult<Option<HomflyCache>> {
    opts.cache.as_ref().map(HomflyCache::open).transpose()
}

fn compute_homfly(b: &BraidWord, opts: &GlobalOpts) -> CliResult<braidkit::HomflyPolynomial> {
    let mut engine = HomflyEngine::with_node_cap(opts.node_budget);
    match open_cache(opts)? {
        Some(mut c) => {
            let p = c.get_or_compute(&mut engine, b)?;
            c.save()?;
            Ok(p)
        }
        None => Ok(engine.compute(b)?),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("value serializes")
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let opts = &cli.opts;
    Ok(match &cli.command {
        Command::Sl { braid } => Outcome::ok(json!({ "sl": self_linking(&parse_braid(braid)?) })),
        Command::Stats { braid } => {
            let b = parse_braid(braid)?;
            let s = closure_stats(&b);
            Outcome::ok(json!({
                "strands": b.strands(),
                "algebraic_length": b.algebraic_length(),
                "writhe": s.writhe,
                "seifert_circles": s.seifert_circles,
                "components": s.components,
                "euler_char_seifert": s.euler_char_seifert,
                "self_linking": self_linking(&b),
                "permutation_cycles": b.underlying_permutation().cycles(),
            }))
        }
        Command::Homfly { braid } => {
            let b = parse_braid(braid)?;
            let p = compute_homfly(&b, opts)?;
            let (lo, hi) = p.v_degrees()?;
            Outcome::ok(json!({
                "convention": CONVENTION,
                "homfly": p.to_json(),
                "text": p.to_string(),
                "v_degrees": [lo, hi],
            }))
        }
        Command::Mfw { braid } => {
            let b = parse_braid(braid)?;
            let p = compute_homfly(&b, opts)?;
            let r = mfw_check(&b, &p)?;
            let mut j = to_value(&r);
            j["holds"] = json!(r.holds());
            j["v_degrees"] = json!(p.v_degrees()?);
            j["braid_index_lower_bound"] = json!(mfw_braid_index_lower_bound(&p)?);
            Outcome::with_code(if r.holds() { EXIT_OK } else { EXIT_VIOLATION }, j)
        }
        Command::Bennequin { braid, chi } => {
            let r = bennequin_check(&parse_braid(braid)?, *chi);
            Outcome::with_code(if r.holds { EXIT_OK } else { EXIT_VIOLATION }, to_value(&r))
        }
        Command::Geography { braid, b, w } => {
            let r = geography_check(&parse_braid(braid)?, *b, *w);
            Outcome::with_code(if r.holds { EXIT_OK } else { EXIT_VIOLATION }, to_value(&r))
        }
        Command::QpSearch { braid, chi, fibered_sqp } => {
            let b = parse_braid(braid)?;
            let cert = chi.map(|chi_l| CertificateData { chi_l, fibered_sqp: *fibered_sqp });
            match search_qp_factorization(&b, opts.conj_budget, opts.node_budget, cert) {
                QpSearch::Found(f) => Outcome::ok(json!({
                    "result": "found",
                    "factors": f.to_json(),
                    "product": f.product()?.to_string(),
                })),
                QpSearch::NotQp(o) => Outcome::ok(json!({ "result": "not-qp", "obstruction": to_value(&o) })),
                QpSearch::Unknown => Outcome::with_code(EXIT_UNKNOWN, json!({ "result": "unknown" })),
            }
        }
        Command::SqpSearch { braid } => {
            let b = parse_braid(braid)?;
            match sqp_recognize(&b, opts.node_budget) {
                SqpSearch::Found(s) => Outcome::ok(json!({
                    "result": "found",
                    "bands": s.bands.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "word": s.to_string(),
                })),
                SqpSearch::NotSqp(o) => Outcome::ok(json!({ "result": "not-sqp", "obstruction": to_value(&o) })),
                SqpSearch::Unknown => Outcome::with_code(EXIT_UNKNOWN, json!({ "result": "unknown" })),
            }
        }
        Command::QpCert { braid, chi, fibered_sqp } => {
            let v = qp_certificate(&parse_braid(braid)?, *chi, *fibered_sqp)?;
            Outcome::ok(json!({ "verdict": to_value(&v) }))
        }
        Command::Connect { first, second } => {
            let (b1, b2) = (parse_braid(first)?, parse_braid(second)?);
            match transverse_connect(&b1, &b2, opts.depth, opts.node_budget) {
                Connection::Path(path) => {
                    let verified = replay(&path)?;
                    let script = path.script();
                    Outcome {
                        code: if verified { EXIT_OK } else { EXIT_VIOLATION },
                        json: json!({
                            "result": "path",
                            "start": path.start.to_string(),
                            "end": path.end.to_string(),
                            "moves": to_value(&path.moves),
                            "script": script.lines().collect::<Vec<_>>(),
                            "verified": verified,
                        }),
                        text: Some(script),
                    }
                }
                Connection::Obstructed(ob) => Outcome::ok(json!({ "result": "obstructed", "reason": to_value(&ob) })),
                Connection::Unknown => Outcome::with_code(EXIT_UNKNOWN, json!({ "result": "unknown" })),
            }
        }
        Command::Torsion { model, boundary_class } => {
            let m = DividingSetOrbitModel::from_json(&read_json_arg(model)?)?;
            let s = torsion_summary(&m)?;
            Outcome::ok(json!({
                "orbits": to_value(&s.orbits),
                "total_half_twists": s.total_half_twists(),
                "warnings": s.warnings(),
                "torsion_only": is_torsion_only_dividing_set(&m, *boundary_class),
            }))
        }
        Command::DetCurves { gamma, gamma_prime, test_bound } => {
            let g = TorusMulticurve::from_json(&read_json_arg(gamma)?)?;
            let gp = TorusMulticurve::from_json(&read_json_arg(gamma_prime)?)?;
            let tests = primitive_slopes(*test_bound);
            let decision = det_curves_decide(&g, &gp, &tests);
            Outcome::ok(json!({
                "containment": to_value(&decision),
                "embedded": [g.is_embedded(), gp.is_embedded()],
                "intersection": torus_intersection(&g, &gp),
            }))
        }
        Command::CorpusVerify { path } => {
            let entries = match path {
                Some(p) => corpus::load_corpus(p)?,
                None => corpus::default_corpus(),
            };
            let budgets = verify::Budgets { conj: opts.conj_budget, nodes: opts.node_budget, depth: opts.depth };
            let mut cache = open_cache(opts)?;
            let report = verify::verify_corpus(&entries, budgets, cache.as_mut());
            if let Some(c) = cache.as_mut() {
                c.save()?;
            }
            let code = if report.failed > 0 { EXIT_VIOLATION } else { EXIT_OK };
            Outcome { code, json: to_value(&report), text: Some(render_table(&report)) }
        }
    })
}

fn render_table(r: &verify::Report) -> String {
    let w = r.rows.iter().map(|x| x.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!("{:<w$}  {:<18}  {:<7}  detail\n", "id", "check", "status");
    for row in &r.rows {
        let status = to_value(&row.status);
        out += &format!("{:<w$}  {:<18}  {:<7}  {}\n", row.id, row.check, status.as_str().unwrap_or("?"), row.detail);
    }
    out += &format!("passed {}, failed {}, unknown {}\n", r.passed, r.failed, r.unknown);
    out
}
