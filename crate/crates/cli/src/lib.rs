//! Command-line front end for `superbgg`: argument parsing, dispatch, and report rendering.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use superbgg::bruhat_order::{leq_gl, leq_super, pairwise_incomparable};
use superbgg::characters::{dim_l0, euler_verify, hook_schur, kac_character};
use superbgg::replab::{build_kac, cohomology, irreducible_quotient, singular_vectors, verma_gl12_report};
use superbgg::weyl_cosets::{enumerate_w0k, resolution_layers};
use superbgg::{Partition, Rank, SuperWeight};

/// Realizations above this dimension skip the quadratic bracket check.
const BRACKET_CHECK_LIMIT: usize = 400;

#[derive(Debug, Error)]
pub enum CliError {
    /// Help or version text; not a failure.
    #[error("{0}")]
    Help(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("resource guard `{name}` exceeded: {detail}")]
    Guard { name: String, detail: String },
    #[error("check failed: {0}")]
    Math(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Math(_) => 3,
            CliError::Guard { .. } => 4,
        }
    }
}

impl From<superbgg::Error> for CliError {
    fn from(e: superbgg::Error) -> Self {
        use superbgg::Error as E;
        match e {
            E::Parse(s) | E::Precondition(s) | E::Shape(s) => CliError::Usage(s),
            E::Guard { name, detail } => CliError::Guard { name: name.to_string(), detail },
            E::NotACharacter(s) | E::CheckFailed(s) => CliError::Math(s),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Resolve,
    VerifyEuler,
    VerifyIncomparable,
    Hs,
    Casimir,
    Bruhat,
    ReplabKac,
    ReplabCohomology,
    ReplabVermaGl12,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::Resolve => "resolve",
            Verb::VerifyEuler => "verify-euler",
            Verb::VerifyIncomparable => "verify-incomparable",
            Verb::Hs => "hs",
            Verb::Casimir => "casimir",
            Verb::Bruhat => "bruhat",
            Verb::ReplabKac => "replab-kac",
            Verb::ReplabCohomology => "replab-cohomology",
            Verb::ReplabVermaGl12 => "replab-verma-gl12",
        }
    }

    /// (required, optional) flags besides `--format` and `--out`.
    fn flags(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Verb::Resolve => (&["-m", "-n", "--lambda", "--kmax"], &[]),
            Verb::VerifyEuler => (&["-m", "-n", "--lambda", "--depth"], &[]),
            Verb::VerifyIncomparable => (&["-m", "--lambda", "--kmax"], &["-n"]),
            Verb::Hs => (&["-m", "-n", "--lambda"], &[]),
            Verb::Casimir => (&["--weights"], &["-m", "-n"]),
            Verb::Bruhat => (&["--weights"], &["-m", "-n"]),
            Verb::ReplabKac => (&["-m", "-n"], &["--lambda", "--weights"]),
            Verb::ReplabCohomology => (&["-m", "-n", "--lambda", "--kmax"], &[]),
            Verb::ReplabVermaGl12 => (&["--depth"], &[]),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "superbgg", version, about = "Kac-module resolutions of gl(m|n) tensor modules")]
struct Cli {
    #[command(subcommand)]
    verb: VerbArgs,
}

#[derive(Subcommand, Debug)]
enum VerbArgs {
    /// List the resolution layers with their labels
    Resolve(Flags),
    /// Check the alternating sum of Kac characters against the hook Schur function
    VerifyEuler(Flags),
    /// Check that each resolution layer is an antichain in both Bruhat orders
    VerifyIncomparable(Flags),
    /// Print a hook Schur function
    Hs(Flags),
    /// Compare the two Casimir scalars on weights
    Casimir(Flags),
    /// Compare two weights in the Bruhat orders
    Bruhat(Flags),
    /// Build a Kac module and its irreducible quotient
    ReplabKac(Flags),
    /// Cohomology of the odd raising part with tensor-module coefficients
    ReplabCohomology(Flags),
    /// The gl(1|2) Verma module example
    ReplabVermaGl12(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(short = 'm')]
    m: Option<usize>,
    /// A positive integer or `inf`
    #[arg(short = 'n', value_parser = parse_rank)]
    n: Option<Rank>,
    /// Partition as comma-separated parts, e.g. `2,1`; empty for the zero partition
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    /// Semicolon-separated weights `a,b|c,d`
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_rank(s: &str) -> Result<Rank, String> {
    s.parse::<Rank>().map_err(|e| e.to_string())
}

/// Validated parameters; only the flags the verb uses are set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub m: Option<usize>,
    pub n: Option<Rank>,
    pub lambda: Option<Partition>,
    pub kmax: Option<usize>,
    pub depth: Option<usize>,
    pub weights: Option<Vec<SuperWeight>>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub params: Params,
}

pub fn parse_command<S: AsRef<str>>(argv: &[S]) -> Result<Command, CliError> {
    let args = std::iter::once("superbgg").chain(argv.iter().map(AsRef::as_ref));
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp
        | clap::error::ErrorKind::DisplayVersion
        | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => CliError::Help(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    let (verb, flags) = match cli.verb {
        VerbArgs::Resolve(f) => (Verb::Resolve, f),
        VerbArgs::VerifyEuler(f) => (Verb::VerifyEuler, f),
        VerbArgs::VerifyIncomparable(f) => (Verb::VerifyIncomparable, f),
        VerbArgs::Hs(f) => (Verb::Hs, f),
        VerbArgs::Casimir(f) => (Verb::Casimir, f),
        VerbArgs::Bruhat(f) => (Verb::Bruhat, f),
        VerbArgs::ReplabKac(f) => (Verb::ReplabKac, f),
        VerbArgs::ReplabCohomology(f) => (Verb::ReplabCohomology, f),
        VerbArgs::ReplabVermaGl12(f) => (Verb::ReplabVermaGl12, f),
    };
    validate(verb, flags)
}

fn validate(verb: Verb, f: Flags) -> Result<Command, CliError> {
    let present = [
        ("-m", f.m.is_some()),
        ("-n", f.n.is_some()),
        ("--lambda", f.lambda.is_some()),
        ("--kmax", f.kmax.is_some()),
        ("--depth", f.depth.is_some()),
        ("--weights", f.weights.is_some()),
    ];
    let (required, optional) = verb.flags();
    for (flag, set) in present {
        if !set && required.contains(&flag) {
            return Err(CliError::Usage(format!("{} requires {flag}", verb.name())));
        }
        if set && !required.contains(&flag) && !optional.contains(&flag) {
            return Err(CliError::Usage(format!("{} does not take {flag}", verb.name())));
        }
    }
    if f.m == Some(0) {
        return Err(CliError::Usage("-m must be positive".into()));
    }
    let lambda = f
        .lambda
        .as_deref()
        .map(|s| s.parse::<Partition>())
        .transpose()
        .map_err(|e| CliError::Usage(format!("--lambda: {e}")))?;
    let rank = f.n.unwrap_or(Rank::Inf);
    let weights = f
        .weights
        .as_deref()
        .map(|s| {
            s.split(';')
                .map(|w| SuperWeight::parse(w.trim(), rank))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()
        .map_err(|e| CliError::Usage(format!("--weights: {e}")))?;
    if let (Some(ws), Some(m)) = (&weights, f.m) {
        if let Some(w) = ws.iter().find(|w| w.m() != m) {
            return Err(CliError::Usage(format!("--weights: {w} does not have m = {m} entries")));
        }
    }
    match verb {
        Verb::Bruhat if weights.as_ref().map_or(0, Vec::len) != 2 => {
            return Err(CliError::Usage("bruhat takes exactly two --weights".into()));
        }
        Verb::ReplabKac => {
            if lambda.is_some() == weights.is_some() {
                return Err(CliError::Usage("replab-kac takes exactly one of --lambda and --weights".into()));
            }
            if weights.as_ref().is_some_and(|w| w.len() != 1) {
                return Err(CliError::Usage("replab-kac takes a single highest weight".into()));
            }
        }
        _ => {}
    }
    if matches!(verb, Verb::ReplabKac | Verb::ReplabCohomology) && rank == Rank::Inf {
        return Err(CliError::Usage(format!("{} needs a finite -n", verb.name())));
    }
    Ok(Command {
        verb,
        params: Params {
            m: f.m,
            n: f.n,
            lambda,
            kmax: f.kmax,
            depth: f.depth,
            weights,
            format: f.format,
            out: f.out,
        },
    })
}

/// A finished computation: the JSON document and, for verification verbs, the verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub pass: Option<bool>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.pass == Some(false) {
            3
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Table => render_table(&self.json),
        }
    }
}

fn params_json(p: &Params) -> Value {
    let mut map = Map::new();
    let mut put = |k: &str, v: Option<Value>| {
        if let Some(v) = v {
            map.insert(k.into(), v);
        }
    };
    put("m", p.m.map(|v| json!(v)));
    put("n", p.n.map(|v| json!(v.to_string())));
    put("lambda", p.lambda.as_ref().map(|v| json!(v.to_string())));
    put("kmax", p.kmax.map(|v| json!(v)));
    put("depth", p.depth.map(|v| json!(v)));
    put("weights", p.weights.as_ref().map(|ws| json!(ws.iter().map(|w| w.to_string()).collect::<Vec<_>>())));
    Value::Object(map)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn num(v: u128) -> Value {
    u64::try_from(v).map_or_else(|_| json!(v.to_string()), |x| json!(x))
}

pub fn execute(c: &Command) -> Result<Report, CliError> {
    let p = &c.params;
    let rank = p.n.unwrap_or(Rank::Inf);
    let need = |flag: &str| CliError::Usage(format!("{} requires {flag}", c.verb.name()));
    let m = || p.m.ok_or_else(|| need("-m"));
    let lambda = || p.lambda.clone().ok_or_else(|| need("--lambda"));
    let kmax = || p.kmax.ok_or_else(|| need("--kmax"));
    let depth = || p.depth.ok_or_else(|| need("--depth"));
    let weights = || p.weights.clone().ok_or_else(|| need("--weights"));

    let (results, pass, residual) = match c.verb {
        Verb::Resolve => (resolve(&lambda()?, m()?, rank, kmax()?)?, None, None),
        Verb::VerifyEuler => {
            let r = euler_verify(&lambda()?, m()?, rank, depth()?)?;
            let residual = to_value(&r.residual.to_records());
            let results = json!({ "terms_used": r.terms_used, "tvars": r.tvars });
            (results, Some(r.pass), Some(residual))
        }
        Verb::VerifyIncomparable => {
            let (results, pass) = incomparable(&lambda()?, m()?, rank, kmax()?)?;
            (results, Some(pass), None)
        }
        Verb::Hs => {
            let lam = lambda()?;
            let tvars = rank.finite().unwrap_or(lam.size() as usize);
            let ch = hook_schur(&lam, m()?, tvars)?;
            let results = json!({
                "tvars": tvars,
                "dim": num(ch.eval_at_ones() as u128),
                "terms": to_value(&ch.to_records()),
            });
            (results, None, None)
        }
        Verb::Casimir => {
            let mut rows = Vec::new();
            let mut all = true;
            for w in weights()? {
                let natural = w.in_x().then(|| w.natural()).transpose()?;
                let holds = natural.as_ref().map(|x| x.casimir_s() == w.casimir_c());
                all &= holds.unwrap_or(true);
                rows.push(json!({
                    "weight": w.to_string(),
                    "casimir_c": w.casimir_c(),
                    "natural": natural.as_ref().map(|x| x.to_string()),
                    "casimir_s_natural": natural.as_ref().map(|x| x.casimir_s()),
                    "identity_holds": holds,
                }));
            }
            (Value::Array(rows), Some(all), None)
        }
        Verb::Bruhat => {
            let ws = weights()?;
            let (u, v) = (&ws[0], &ws[1]);
            let both_x = u.in_x() && v.in_x();
            let results = json!({
                "u": u.to_string(),
                "v": v.to_string(),
                "u_leq_v": leq_gl(u, v),
                "v_leq_u": leq_gl(v, u),
                "u_leq_v_super": if both_x { Some(leq_super(u, v)?) } else { None },
                "v_leq_u_super": if both_x { Some(leq_super(v, u)?) } else { None },
            });
            (results, None, None)
        }
        Verb::ReplabKac => {
            let (results, pass) = replab_kac(m()?, rank, p.lambda.as_ref(), p.weights.as_deref())?;
            (results, Some(pass), None)
        }
        Verb::ReplabCohomology => {
            let n = rank.finite().ok_or_else(|| need("a finite -n"))?;
            let r = cohomology(m()?, n, &lambda()?, kmax()?)?;
            (to_value(&r), Some(r.pass), None)
        }
        Verb::ReplabVermaGl12 => {
            let r = verma_gl12_report(depth()?)?;
            (to_value(&r), Some(r.pass), None)
        }
    };

    let mut top = Map::new();
    top.insert("command".into(), json!(c.verb.name()));
    top.insert("params".into(), params_json(p));
    top.insert("results".into(), results);
    if let Some(pass) = pass {
        top.insert("pass".into(), json!(pass));
    }
    if let Some(r) = residual {
        top.insert("residual".into(), r);
    }
    Ok(Report { json: Value::Object(top), pass })
}

fn resolve(lam: &Partition, m: usize, n: Rank, kmax: usize) -> Result<Value, CliError> {
    let mut rows = Vec::new();
    for layer in resolution_layers(lam, m, n, kmax)? {
        for t in layer {
            let nat = t.eta.natural()?;
            rows.push(json!({
                "k": t.k,
                "eta": t.eta.to_string(),
                "eta_natural": t.eta_natural.as_ref().map(|w| w.to_string()),
                "casimir_s": nat.casimir_s(),
                "z_degree": nat.z_degree().to_string(),
                "dim_l0": t.eta_natural.as_ref().map(|w| num(dim_l0(w))),
                "truncated": t.truncated,
            }));
        }
    }
    Ok(Value::Array(rows))
}

fn incomparable(lam: &Partition, m: usize, n: Rank, kmax: usize) -> Result<(Value, bool), CliError> {
    let base = SuperWeight::split_hook(lam, m, n)?;
    let mut rows = Vec::new();
    let mut all = true;
    for (k, layer) in enumerate_w0k(&base, kmax)? {
        let kept: Vec<SuperWeight> = match n.finite() {
            Some(n) => layer.into_iter().filter(|w| w.pos_at(1) <= n as i64).collect(),
            None => layer,
        };
        let naturals = kept.iter().map(|w| w.natural()).collect::<Result<Vec<_>, _>>()?;
        let gl = pairwise_incomparable(&kept, false)?;
        let sup = pairwise_incomparable(&naturals, true)?;
        all &= gl && sup;
        rows.push(json!({
            "k": k,
            "size": kept.len(),
            "weights": kept.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "gl_incomparable": gl,
            "super_incomparable": sup,
        }));
    }
    Ok((Value::Array(rows), all))
}

fn replab_kac(
    m: usize,
    n: Rank,
    lam: Option<&Partition>,
    weights: Option<&[SuperWeight]>,
) -> Result<(Value, bool), CliError> {
    let nu = match (lam, weights) {
        (Some(lam), _) => SuperWeight::split_hook(lam, m, n)?.natural()?.with_rank(n)?,
        (None, Some(ws)) => ws[0].clone(),
        (None, None) => return Err(CliError::Usage("replab-kac requires --lambda or --weights".into())),
    };
    let tvars = n.finite().ok_or_else(|| CliError::Usage("replab-kac needs a finite -n".into()))?;
    let kac = build_kac(&nu)?;
    let character_ok = kac.character()? == kac_character(&nu, tvars)?;
    let brackets_ok = (kac.dim() <= BRACKET_CHECK_LIMIT).then(|| kac.check_superbrackets().is_ok());
    let singular = singular_vectors(&kac)?;
    let quotient = irreducible_quotient(&kac)?;
    let hook_ok = lam
        .map(|lam| -> Result<bool, CliError> { Ok(quotient.quotient.character()? == hook_schur(lam, m, tvars)?) })
        .transpose()?;
    let lines: Vec<Value> = singular
        .lines
        .iter()
        .map(|l| json!({ "weight": l.weight.to_string(), "expression": l.expression, "proper": l.proper }))
        .collect();
    let pass = character_ok
        && brackets_ok.unwrap_or(true)
        && quotient.generated_by_singulars
        && hook_ok.unwrap_or(true);
    let results = json!({
        "highest_weight": nu.to_string(),
        "dim": kac.dim(),
        "singular_lines": lines,
        "proper_singular_lines": quotient.proper_singular_lines,
        "maximal_dim": quotient.maximal_dim,
        "quotient_dim": quotient.quotient.dim(),
        "generated_by_singulars": quotient.generated_by_singulars,
        "character_matches_kac": character_ok,
        "superbrackets_hold": brackets_ok,
        "quotient_matches_hook_schur": hook_ok,
    });
    Ok((results, pass))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(rows: &[Value], indent: &str, out: &mut String) {
    let mut cols: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    for r in rows {
        if let Value::Object(map) = r {
            for k in map.keys() {
                if seen.insert(k.clone()) {
                    cols.push(k.clone());
                }
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c).map_or_else(|| "-".into(), cell)).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: &[String], out: &mut String| {
        let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, &w)| format!("{v:<w$}")).collect();
        let _ = writeln!(out, "{indent}{}", padded.join("  ").trim_end());
    };
    line(&cols, out);
    for r in &cells {
        line(r, out);
    }
}

fn is_object_array(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object))
}

fn section(key: &str, v: &Value, indent: &str, out: &mut String) {
    match v {
        _ if is_object_array(v) => {
            let _ = writeln!(out, "{indent}{key}:");
            table(v.as_array().expect("checked"), &format!("{indent}  "), out);
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{indent}{key}:");
            for (k, x) in map {
                section(k, x, &format!("{indent}  "), out);
            }
        }
        other => {
            let _ = writeln!(out, "{indent}{key}: {}", cell(other));
        }
    }
}

/// The JSON document laid out as aligned text, key for key.
pub fn render_table(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = doc {
        for key in ["command", "params", "results", "pass", "residual"] {
            if let Some(v) = map.get(key) {
                section(key, v, "", &mut out);
            }
        }
    }
    out
}
