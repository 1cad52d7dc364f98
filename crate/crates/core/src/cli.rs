//! The `extset` command line.
//!
//! Results go to stdout (or `--out`); one manifest record per run goes to
//! stderr as a single JSON line (or to `--manifest`). Exit codes: 0 ok,
//! 2 bad parameters, 3 unparsable input, 4 budget exceeded, 5 claim failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::constructions::ConstructionId;
use crate::error::Error;
use crate::exact::{evaluate, find_threshold, AffineRule, ClaimId, ClaimKind, ParamPoint};
use crate::invariants::{
    covering_number, degree_profile, diversity, is_intersecting, is_trivial, matching_number,
    min_t_degree,
};
use crate::io::{parse_family, to_json, to_text};
use crate::search::{self, SearchProblem, SearchResult, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_CLAIM: i32 = 5;
const EXIT_INTERNAL: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "extset", version, about = "Extremal set theory workbench")]
struct Cli {
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Build a named family.
    Construct(ConstructArgs),
    /// Invariants of a family file.
    CheckFamily(CheckArgs),
    /// Evaluate claims on a parameter grid.
    Verify(VerifyArgs),
    /// Smallest k from which a claim holds along n = a*k + b.
    Thresholds(ThresholdArgs),
    /// Exhaustive search.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Construction {
    Star,
    Hm,
    A0,
    Ak,
    Layer,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum FamilyFormat {
    Text,
    Json,
}

#[derive(Debug, Args, Serialize)]
struct ConstructArgs {
    #[arg(value_enum)]
    name: Construction,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    center: usize,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, value_enum, default_value_t = FamilyFormat::Text)]
    format: FamilyFormat,
}

#[derive(Debug, Args, Serialize)]
struct CheckArgs {
    /// Family file (text or JSON); `-` reads stdin.
    path: PathBuf,
    #[arg(long, default_value_t = 1)]
    t: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum RecordFormat {
    Json,
    Csv,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    /// Claim ids; repeat or separate with commas. Default: all.
    #[arg(long = "claim", value_delimiter = ',')]
    claims: Vec<String>,
    /// Ranges like `3..6`; bounds of n, t, s, u may be affine in k.
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// `n` as a function of `k`, e.g. `2k+5`.
    #[arg(long = "n-rule")]
    n_rule: Option<String>,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    u: Option<String>,
    #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
    format: RecordFormat,
}

#[derive(Debug, Args, Serialize)]
struct ThresholdArgs {
    #[arg(long)]
    claim: String,
    #[arg(long = "n-rule")]
    n_rule: String,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    u: Option<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Preset {
    EkrDegree,
    HmDegree,
    EmcDegree,
    Problem1,
    Problem2,
    MaximalIntersecting,
}

#[derive(Debug, Args, Serialize)]
struct SearchArgs {
    #[arg(long, value_enum, conflicts_with = "problem")]
    preset: Option<Preset>,
    /// JSON problem file.
    #[arg(long)]
    problem: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

/// What a subcommand produced: output text and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub params: Value,
    pub version: String,
    pub wall_time_ms: f64,
    pub output_sha256: String,
    pub exit_code: i32,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let outcome = dispatch(&cli.cmd, stderr).unwrap_or_else(|e| {
        let _ = writeln!(stderr, "error: {e}");
        Outcome {
            text: String::new(),
            code: exit_code(&e),
        }
    });

    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_PARAMS;
        }
    } else if stdout.write_all(outcome.text.as_bytes()).is_err() {
        return EXIT_INTERNAL;
    }

    let params = serde_json::to_value(&cli.cmd).unwrap_or(Value::Null);
    let (subcommand, params) = match params {
        Value::Object(mut m) if m.len() == 1 => {
            let key = m.keys().next().cloned().unwrap_or_default();
            let inner = m.remove(&key).unwrap_or(Value::Null);
            (key, inner)
        }
        other => (String::new(), other),
    };
    let manifest = RunManifest {
        subcommand,
        params,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        output_sha256: sha256_hex(outcome.text.as_bytes()),
        exit_code: outcome.code,
    };
    let line = serde_json::to_string(&manifest).expect("manifest serializes");
    match &cli.manifest {
        Some(path) => {
            if let Err(e) = std::fs::write(path, line + "\n") {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_PARAMS;
            }
        }
        None => {
            let _ = writeln!(stderr, "{line}");
        }
    }
    outcome.code
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::NeverHolds(_) => EXIT_CLAIM,
        Error::Unsound(_) => EXIT_INTERNAL,
        _ => EXIT_PARAMS,
    }
}

fn dispatch(cmd: &Command, stderr: &mut dyn Write) -> Result<Outcome, Error> {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::CheckFamily(a) => check_family(a, stderr),
        Command::Verify(a) => verify(a),
        Command::Thresholds(a) => thresholds(a),
        Command::Search(a) => run_search(a, stderr),
    }
}

fn construct(a: &ConstructArgs) -> Result<Outcome, Error> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::Precondition(format!("--{name} is required for {:?}", a.name)))
    };
    let (n, k) = (a.n, a.k);
    let id = match a.name {
        Construction::Star => ConstructionId::Star { n, k, center: a.center },
        Construction::Hm => ConstructionId::HiltonMilner { n, k, u: a.u.unwrap_or(k) },
        Construction::A0 => ConstructionId::A0 { n, k, s: need(a.s, "s")? },
        Construction::Ak => ConstructionId::Ak { n, k, s: need(a.s, "s")? },
        Construction::Layer => ConstructionId::FullLayer { n, k },
    };
    let fam = id.build()?;
    let text = match a.format {
        FamilyFormat::Text => format!("# {id}: {} sets\n{}", fam.len(), to_text(&fam)),
        FamilyFormat::Json => to_json(&fam) + "\n",
    };
    Ok(Outcome::ok(text))
}

fn check_family(a: &CheckArgs, stderr: &mut dyn Write) -> Result<Outcome, Error> {
    let raw = if a.path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&a.path)
    }
    .map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", a.path.display()),
    })?;
    let parsed = parse_family(&raw)?;
    if parsed.duplicates > 0 {
        let _ = writeln!(
            stderr,
            "warning: {} duplicate set(s) dropped",
            parsed.duplicates
        );
    }
    let fam = parsed.family;
    let profile = degree_profile(&fam);
    let nonempty = !fam.is_empty();
    let delta_t = if a.t >= 1 && a.t <= fam.k() {
        Some(min_t_degree(&fam, a.t)?.min)
    } else {
        return Err(Error::Precondition(format!(
            "t = {} must satisfy 1 <= t <= k = {}",
            a.t,
            fam.k()
        )));
    };
    let report = json!({
        "n": fam.n(),
        "k": fam.k(),
        "size": fam.len(),
        "duplicates": parsed.duplicates,
        "intersecting": is_intersecting(&fam),
        "trivial": if nonempty { Some(is_trivial(&fam)?) } else { None },
        "gamma": diversity(&fam).0,
        "Delta": profile.max,
        "delta": profile.min,
        "t": a.t,
        "delta_t": delta_t,
        "nu": matching_number(&fam),
        "tau": if nonempty && fam.k() > 0 { Some(covering_number(&fam)?) } else { None },
    });
    Ok(Outcome::ok(pretty(&report)))
}

/// `lo..hi` (inclusive) or a single value; bounds affine in k.
#[derive(Debug, Clone, Copy)]
struct Span {
    lo: AffineRule,
    hi: AffineRule,
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once("..") {
            Some((lo, hi)) => Ok(Span {
                lo: lo.parse()?,
                hi: hi.trim_start_matches('=').parse()?,
            }),
            None => {
                let v: AffineRule = s.parse()?;
                Ok(Span { lo: v, hi: v })
            }
        }
    }
}

impl Span {
    fn values(self, k: i64) -> std::ops::RangeInclusive<i64> {
        self.lo.at(k)..=self.hi.at(k)
    }
}

/// Guard against grids that would take forever.
const MAX_GRID_POINTS: usize = 1_000_000;

fn grid(a: &VerifyArgs) -> Result<Vec<ParamPoint>, Error> {
    let parse = |v: &Option<String>| v.as_deref().map(Span::from_str).transpose();
    let k_span = parse(&a.k)?
        .ok_or_else(|| Error::Precondition("--k is required".into()))?;
    if k_span.lo.a != 0 || k_span.hi.a != 0 {
        return Err(Error::Precondition("--k bounds must be constants".into()));
    }
    if a.n.is_some() && a.n_rule.is_some() {
        return Err(Error::Precondition("use either --n or --n-rule".into()));
    }
    let n_span = match &a.n_rule {
        Some(r) => {
            let rule: AffineRule = r.parse()?;
            Some(Span { lo: rule, hi: rule })
        }
        None => parse(&a.n)?,
    };
    let (t_span, s_span, u_span) = (parse(&a.t)?, parse(&a.s)?, parse(&a.u)?);
    let axis = |span: Option<Span>, k: i64| -> Vec<Option<i64>> {
        match span {
            Some(sp) => sp.values(k).map(Some).collect(),
            None => vec![None],
        }
    };
    let mut points = Vec::new();
    for k in k_span.values(0) {
        for n in axis(n_span, k) {
            for t in axis(t_span, k) {
                for s in axis(s_span, k) {
                    for u in axis(u_span, k) {
                        points.push(ParamPoint { n, k: Some(k), s, t, u });
                        if points.len() > MAX_GRID_POINTS {
                            return Err(Error::Precondition(format!(
                                "grid exceeds {MAX_GRID_POINTS} points"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(points)
}

#[derive(Debug, Serialize)]
struct VerifyRecord {
    claim: &'static str,
    kind: ClaimKind,
    params: ParamPoint,
    holds: Option<bool>,
    lhs: Option<String>,
    relation: Option<&'static str>,
    rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Error> {
    let claims: Vec<ClaimId> = if a.claims.is_empty() {
        ClaimId::ALL.to_vec()
    } else {
        a.claims.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
    };
    let points = grid(a)?;
    let mut records = Vec::new();
    let mut identity_failed = false;
    for &claim in &claims {
        for p in &points {
            let rec = match evaluate(claim, p) {
                Ok(o) => {
                    if !o.holds && claim.kind() == ClaimKind::Identity {
                        identity_failed = true;
                    }
                    VerifyRecord {
                        claim: claim.name(),
                        kind: claim.kind(),
                        params: o.params,
                        holds: Some(o.holds),
                        lhs: Some(o.lhs.to_string()),
                        relation: Some(o.relation.symbol()),
                        rhs: Some(o.rhs.to_string()),
                        note: o.note,
                        skipped: None,
                    }
                }
                Err(e @ Error::Precondition(_)) => VerifyRecord {
                    claim: claim.name(),
                    kind: claim.kind(),
                    params: *p,
                    holds: None,
                    lhs: None,
                    relation: None,
                    rhs: None,
                    note: None,
                    skipped: Some(e.to_string()),
                },
                Err(e) => return Err(e),
            };
            records.push(rec);
        }
    }
    let text = match a.format {
        RecordFormat::Json => records.iter().fold(String::new(), |mut s, r| {
            s.push_str(&serde_json::to_string(r).expect("record serializes"));
            s.push('\n');
            s
        }),
        RecordFormat::Csv => csv_records(&records)?,
    };
    Ok(Outcome {
        text,
        code: if identity_failed { EXIT_CLAIM } else { EXIT_OK },
    })
}

fn csv_records(records: &[VerifyRecord]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Precondition(format!("csv: {e}"));
    w.write_record(["claim", "kind", "n", "k", "s", "t", "u", "holds", "lhs", "relation", "rhs", "note"])
        .map_err(io)?;
    let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        let kind = match r.kind {
            ClaimKind::Identity => "identity",
            ClaimKind::Regime => "regime",
        };
        w.write_record([
            r.claim.to_string(),
            kind.to_string(),
            opt(r.params.n),
            opt(r.params.k),
            opt(r.params.s),
            opt(r.params.t),
            opt(r.params.u),
            r.holds.map(|h| h.to_string()).unwrap_or_default(),
            r.lhs.clone().unwrap_or_default(),
            r.relation.unwrap_or_default().to_string(),
            r.rhs.clone().unwrap_or_default(),
            r.note.clone().or_else(|| r.skipped.clone()).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Precondition(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn thresholds(a: &ThresholdArgs) -> Result<Outcome, Error> {
    let claim: ClaimId = a.claim.parse()?;
    let rule: AffineRule = a.n_rule.parse()?;
    let extra = ParamPoint {
        s: a.s,
        u: a.u,
        ..Default::default()
    };
    let report = find_threshold(claim, rule, a.t, extra)?;
    Ok(Outcome::ok(pretty(&report)))
}

fn run_search(a: &SearchArgs, stderr: &mut dyn Write) -> Result<Outcome, Error> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::Precondition(format!("--{name} is required for this preset")))
    };
    let problem = match (a.preset, &a.problem) {
        (Some(Preset::MaximalIntersecting), _) => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let e = search::enumerate_maximal_intersecting(n, k, a.threads)?;
            let report = json!({
                "n": n,
                "k": k,
                "classes": e.classes.len(),
                "nodes_expanded": e.nodes_expanded,
                "isomorph_rejections": e.isomorph_rejections,
                "families": e.classes,
            });
            return Ok(Outcome::ok(pretty(&report)));
        }
        (Some(Preset::EkrDegree), _) => SearchProblem::ekr_degree(need(a.n, "n")?, need(a.k, "k")?, a.t),
        (Some(Preset::HmDegree), _) => SearchProblem::hm_degree(need(a.n, "n")?, need(a.k, "k")?, a.t),
        (Some(Preset::EmcDegree), _) => {
            SearchProblem::emc_degree(need(a.n, "n")?, need(a.k, "k")?, need(a.s, "s")?, a.t)
        }
        (Some(Preset::Problem1), _) => {
            let k = need(a.k, "k")?;
            if a.n.is_some_and(|n| n != 2 * k + 1) {
                return Err(Error::Precondition("problem1 fixes n = 2k + 1".into()));
            }
            SearchProblem::problem1(k)
        }
        (Some(Preset::Problem2), _) => SearchProblem::problem2(need(a.n, "n")?, need(a.k, "k")?),
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            serde_json::from_str(&raw).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            })?
        }
        (None, None) => {
            return Err(Error::Precondition("give --preset or --problem".into()));
        }
    };
    if matches!(a.preset, Some(Preset::Problem1)) {
        let k = problem.constraints.k;
        if !(2..=4).contains(&k) {
            return Err(Error::Precondition(format!("problem 1 probes need 2 <= k <= 4 (k = {k})")));
        }
    }
    let result = search::solve(&problem, a.threads)?;
    let code = search_exit(&result, stderr);
    Ok(Outcome {
        text: pretty(&result),
        code,
    })
}

fn search_exit(r: &SearchResult, stderr: &mut dyn Write) -> i32 {
    if r.is_counterexample() {
        let _ = writeln!(
            stderr,
            "COUNTEREXAMPLE: optimum exceeds the theorem bound; certificate:\n{}",
            pretty(r)
        );
        return EXIT_CLAIM;
    }
    match r.status {
        Status::Exact => EXIT_OK,
        Status::Timeout => {
            let _ = writeln!(stderr, "warning: node budget exhausted; result is not exact");
            EXIT_BUDGET
        }
    }
}

fn pretty<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
