//! Argument parsing and the subcommands.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsring_core::filtration::ord_of_ideal;
use nsring_core::{
    classify, colength_ideals, scan_record, semigroups_by_genus, FamilyTemplate,
    NumericalSemigroup, ScanRecord, ZIdeal,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::expr::Expr;
use crate::facts::named_ideal;
use crate::output::{self, Format};
use crate::paper_check::{self, Manifest, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const MONOMIAL_SCOPE: &str =
    "monomial ideals only: value sets E ⊆ H with E + H ⊆ E; other ideals are not enumerated";

#[derive(Debug, Parser)]
#[command(
    name = "nsring",
    version,
    about = "Exact invariants of numerical semigroup rings k[[H]]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification report for one semigroup.
    Info(InfoArgs),
    /// Apply an operation to a monomial ideal.
    Ideal(IdealArgs),
    /// Classify a one-parameter family or every semigroup up to a genus.
    Scan(ScanArgs),
    /// List the monomial ideals of a given colength.
    Ideals(IdealsArgs),
    /// Recompute the bundled golden facts.
    PaperCheck(PaperCheckArgs),
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    /// Generators, comma separated.
    #[arg(long, value_parser = parse_gens)]
    pub gens: Gens,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealOp {
    Dual,
    Bidual,
    Trace,
    Colon,
    Ord,
    Colength,
    Reflexive,
    Selfdual,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true))]
pub struct IdealArgs {
    #[arg(long, value_parser = parse_gens)]
    pub gens: Gens,
    /// Ideal generated by these exponents (may be negative).
    #[arg(long, group = "which", value_parser = parse_ints, allow_hyphen_values = true)]
    pub ideal: Option<Ints>,
    #[arg(long, group = "which")]
    pub conductor: bool,
    #[arg(long, group = "which")]
    pub canonical: bool,
    #[arg(long, group = "which")]
    pub maximal: bool,
    #[arg(long, value_enum)]
    pub op: IdealOp,
    /// Second ideal for `colon`: ring, maximal, conductor, canonical,
    /// normalization, or a generator list.
    #[arg(long, allow_hyphen_values = true)]
    pub by: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
pub struct ScanArgs {
    /// Generator template with one symbolic slot, e.g. `4,5,a`, or `e-run`.
    #[arg(long, group = "source", requires = "range")]
    pub family: Option<String>,
    /// Inclusive parameter range `A..B`.
    #[arg(long, value_parser = parse_range)]
    pub range: Option<RangeInclusive<i64>>,
    /// Every semigroup of genus at most N.
    #[arg(long, group = "source", conflicts_with = "range")]
    pub genus_max: Option<usize>,
    /// Keep only classified rows satisfying this condition.
    #[arg(long = "where")]
    pub filter: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads; output order does not depend on it.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdealsArgs {
    #[arg(long, value_parser = parse_gens)]
    pub gens: Gens,
    #[arg(long)]
    pub colength: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PaperCheckArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Run one case, or every instance of a case family.
    #[arg(long)]
    pub only: Option<String>,
    /// Use this manifest instead of the bundled one.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

// Aliases keep clap from reading a list flag as a repeated flag.
type Gens = Vec<u64>;
type Ints = Vec<i64>;

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    let out: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match out {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(format!("expected comma-separated integers, got {s:?}")),
    }
}

fn parse_gens(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("expected comma-separated nonnegative integers, got {s:?}"))
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// A user-facing failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // A closed pipe (`nsring ... | head`) ends the run quietly.
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure::usage(format!("i/o error: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = if output::color_enabled() {
                e.render().ansi().to_string()
            } else {
                e.render().to_string()
            };
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return e.exit_code();
        }
    };
    let outcome = match cli.command {
        Command::Info(a) => info(&a, stdout),
        Command::Ideal(a) => ideal(&a, stdout),
        Command::Scan(a) => scan(&a, stdout),
        Command::Ideals(a) => ideals(&a, stdout),
        Command::PaperCheck(a) => paper_check_cmd(&a, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(stderr, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup, Failure> {
    NumericalSemigroup::new(gens).map_err(|e| Failure::usage(e.to_string()))
}

fn info(args: &InfoArgs, out: &mut dyn Write) -> Outcome {
    let h = semigroup(&args.gens)?;
    let map = output::report_map(&classify(&h));
    match args.format {
        Format::Json => writeln!(out, "{}", output::to_json(&Value::Object(map)))?,
        Format::Csv => {
            let cols: Vec<String> = map.keys().cloned().collect();
            output::write_csv(out, &cols, &[map])?
        }
        Format::Table => output::write_key_values(out, &map)?,
    }
    Ok(EXIT_OK)
}

fn ideal_from_arg(h: &NumericalSemigroup, arg: &str) -> Result<(String, ZIdeal), Failure> {
    if let Some(e) = named_ideal(h, arg) {
        return Ok((symbol(arg).to_string(), e));
    }
    let gens = parse_ints(arg).map_err(Failure::usage)?;
    let e = ZIdeal::from_generators(h, &gens).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(("F".to_string(), e))
}

fn symbol(name: &str) -> &'static str {
    match name {
        "ring" => "R",
        "maximal" => "m",
        "conductor" => "𝔠",
        "canonical" => "K",
        "normalization" => "R̄",
        _ => "E",
    }
}

fn ideal(args: &IdealArgs, out: &mut dyn Write) -> Outcome {
    let h = semigroup(&args.gens)?;
    let (name, e) = if args.conductor {
        ("conductor", ZIdeal::conductor(&h))
    } else if args.canonical {
        ("canonical", ZIdeal::canonical(&h))
    } else if args.maximal {
        ("maximal", ZIdeal::maximal(&h))
    } else {
        let gens = args
            .ideal
            .as_deref()
            .expect("clap requires one ideal source");
        (
            "ideal",
            ZIdeal::from_generators(&h, gens).map_err(|e| Failure::usage(e.to_string()))?,
        )
    };
    let s = symbol(name);
    if args.by.is_some() && args.op != IdealOp::Colon {
        return Err(Failure::usage("--by is only used with --op colon"));
    }
    let not_contained = || Failure::usage(format!("{s} = {e} is not contained in the ring"));

    let mut map = Map::new();
    map.insert("generators".into(), json!(h.minimal_generators()));
    map.insert("ideal".into(), json!(e.to_string()));
    map.insert("op".into(), json!(format!("{:?}", args.op).to_lowercase()));
    let line = match args.op {
        IdealOp::Dual => {
            let d = e.dual();
            map.insert("result".into(), json!(d.to_string()));
            format!("{s}* = {d}")
        }
        IdealOp::Bidual => {
            let b = e.bidual();
            let reflexive = b == e;
            map.insert("result".into(), json!(b.to_string()));
            map.insert("reflexive".into(), json!(reflexive));
            if reflexive {
                format!("{s}** = {s} (reflexive)")
            } else {
                format!("{s}** = {b} (not reflexive)")
            }
        }
        IdealOp::Trace => {
            let t = e.trace();
            map.insert("result".into(), json!(t.to_string()));
            format!("tr({s}) = {t}")
        }
        IdealOp::Colon => {
            let arg = args
                .by
                .as_deref()
                .ok_or_else(|| Failure::usage("--op colon needs --by"))?;
            let (by_sym, f) = ideal_from_arg(&h, arg)?;
            let c = e.colon(&f).expect("same parent");
            map.insert("by".into(), json!(f.to_string()));
            map.insert("result".into(), json!(c.to_string()));
            format!("({s} : {by_sym}) = {c}")
        }
        IdealOp::Ord => {
            let n = ord_of_ideal(&e).map_err(|_| not_contained())?;
            map.insert("result".into(), json!(n));
            format!("ord({s}) = {n}")
        }
        IdealOp::Colength => {
            let n = e.colength().map_err(|_| not_contained())?;
            map.insert("result".into(), json!(n));
            format!("ℓ(R/{s}) = {n}")
        }
        IdealOp::Reflexive => {
            let r = e.is_reflexive();
            map.insert("result".into(), json!(r));
            format!("reflexive({s}) = {r}")
        }
        IdealOp::Selfdual => {
            let z = e.self_dual_shift();
            map.insert("result".into(), json!(z.is_some()));
            map.insert("shift".into(), z.map_or(Value::Null, Value::from));
            match z {
                Some(z) => format!("selfdual({s}) = true ({s}* = {s} + {z})"),
                None => format!("selfdual({s}) = false"),
            }
        }
    };
    match args.format {
        Format::Json => writeln!(out, "{}", output::to_json(&Value::Object(map)))?,
        Format::Csv => {
            let cols: Vec<String> = map.keys().cloned().collect();
            output::write_csv(out, &cols, &[map])?
        }
        Format::Table => {
            writeln!(out, "{s} = {e}")?;
            writeln!(out, "{line}")?;
        }
    }
    Ok(EXIT_OK)
}

/// Fields that a `--where` condition may name.
fn filterable(params: &[String]) -> Vec<String> {
    output::scan_columns(params)
        .into_iter()
        .filter(|c| c != "input" && c != "status" && c != "generators")
        .collect()
}

pub struct ScanOutput {
    pub params: Vec<String>,
    pub rows: Vec<ScanRecord>,
    /// Rows dropped by the filter.
    pub unmatched: usize,
    pub family: bool,
}

/// Runs a scan; the records come back in parameter order.
pub fn run_scan(args: &ScanArgs) -> Result<ScanOutput, Failure> {
    let (params, template) = match &args.family {
        Some(t) => {
            let template: FamilyTemplate = t.parse().map_err(|e| Failure::usage(format!("{e}")))?;
            (vec![template.symbol().to_string()], Some(template))
        }
        None => (Vec::new(), None),
    };
    let filter = match &args.filter {
        Some(src) => {
            let expr = Expr::parse(src).map_err(|e| Failure::usage(format!("--where: {e}")))?;
            let known = filterable(&params);
            if let Some(bad) = expr
                .fields()
                .into_iter()
                .find(|f| !known.iter().any(|k| k == f))
            {
                return Err(Failure::usage(format!("--where: unknown field {bad:?}")));
            }
            Some(expr)
        }
        None => None,
    };
    let predicate = |record: &ScanRecord| -> Result<bool, Failure> {
        match &filter {
            Some(expr) => expr
                .matches(&output::scan_row(record))
                .map_err(|e| Failure::usage(format!("--where: {e}"))),
            None => Ok(true),
        }
    };
    let always = |_: &nsring_core::ClassificationReport, _: &[(String, i64)]| true;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::usage(format!("--jobs: {e}")))?;
    let mut rows: Vec<ScanRecord> = pool.install(|| match &template {
        Some(t) => {
            let range = args
                .range
                .clone()
                .expect("clap requires --range with --family");
            range
                .into_par_iter()
                .map(|v| scan_record(t, v, &always))
                .collect()
        }
        None => {
            let all: Vec<NumericalSemigroup> =
                semigroups_by_genus(args.genus_max.expect("clap requires a source")).collect();
            all.par_iter()
                .map(|h| {
                    let gens: Vec<u64> = h.minimal_generators().iter().map(|&g| g as u64).collect();
                    ScanRecord::classified(Vec::new(), gens, h, &always)
                })
                .collect()
        }
    });
    if template.is_none() {
        let genus = |r: &ScanRecord| r.report.as_ref().map(|rep| rep.genus);
        rows.sort_by(|a, b| (genus(a), &a.input).cmp(&(genus(b), &b.input)));
    }
    let mut kept = Vec::with_capacity(rows.len());
    let mut unmatched = 0;
    for mut r in rows {
        if r.skipped.is_some() {
            kept.push(r);
            continue;
        }
        let m = predicate(&r)?;
        r.matched = Some(m);
        if m {
            kept.push(r);
        } else {
            unmatched += 1;
        }
    }
    Ok(ScanOutput {
        params,
        rows: kept,
        unmatched,
        family: template.is_some(),
    })
}

pub fn scan_summary(scan: &ScanOutput, filtered: bool) -> Map<String, Value> {
    let mut skipped: BTreeMap<&str, usize> = BTreeMap::new();
    let mut ords: BTreeMap<i64, usize> = BTreeMap::new();
    let mut classified = 0;
    for r in &scan.rows {
        match (&r.skipped, &r.report) {
            (Some(reason), _) => *skipped.entry(reason.as_str()).or_default() += 1,
            (None, Some(report)) => {
                classified += 1;
                *ords.entry(report.ord_conductor).or_default() += 1;
            }
            (None, None) => unreachable!("classified rows carry a report"),
        }
    }
    let mut m = Map::new();
    m.insert("rows".into(), json!(scan.rows.len()));
    m.insert("classified".into(), json!(classified));
    m.insert("skipped".into(), json!(skipped));
    if filtered {
        m.insert("matched".into(), json!(classified));
        m.insert("unmatched".into(), json!(scan.unmatched));
    }
    m.insert(
        "ord_histogram".into(),
        Value::Object(
            ords.iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect(),
        ),
    );
    if scan.family && filtered {
        let members: Vec<i64> = scan
            .rows
            .iter()
            .filter(|r| r.report.is_some())
            .map(|r| r.params[0].1)
            .collect();
        m.insert("members".into(), json!(members));
    }
    m
}

fn scan(args: &ScanArgs, stdout: &mut dyn Write) -> Outcome {
    let result = run_scan(args)?;
    let columns = output::scan_columns(&result.params);
    let rows: Vec<Map<String, Value>> = result.rows.iter().map(output::scan_row).collect();
    let summary = scan_summary(&result, args.filter.is_some());

    let mut file;
    let out: &mut dyn Write = match &args.out {
        Some(path) => {
            file =
                BufWriter::new(File::create(path).map_err(|e| {
                    Failure::usage(format!("cannot create {}: {e}", path.display()))
                })?);
            &mut file
        }
        None => stdout,
    };
    match args.format {
        Format::Json => {
            for row in rows {
                writeln!(out, "{}", Value::Object(row))?;
            }
            writeln!(out, "{}", json!({ "summary": summary }))?;
        }
        Format::Csv => {
            output::write_csv(out, &columns, &rows)?;
            for line in summary_lines(&summary) {
                writeln!(out, "# {line}")?;
            }
        }
        Format::Table => {
            output::write_table(out, &columns, &rows)?;
            writeln!(out)?;
            for line in summary_lines(&summary) {
                writeln!(out, "{line}")?;
            }
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn summary_lines(summary: &Map<String, Value>) -> Vec<String> {
    summary
        .iter()
        .map(|(k, v)| match v {
            Value::Object(o) if o.is_empty() => format!("{k}: none"),
            Value::Object(o) => format!(
                "{k}: {}",
                o.iter()
                    .map(|(a, b)| format!("{a}={b}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            other => format!("{k}: {}", output::plain_cell(other)),
        })
        .collect()
}

fn ideals(args: &IdealsArgs, out: &mut dyn Write) -> Outcome {
    let h = semigroup(&args.gens)?;
    let rows: Vec<Map<String, Value>> = colength_ideals(&h, args.colength)
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("ideal".into(), json!(e.to_string()));
            m.insert("generators".into(), json!(e.minimal_generators()));
            m.insert("principal".into(), json!(e.is_principal()));
            m.insert("reflexive".into(), json!(e.is_reflexive()));
            m.insert("trace_ideal".into(), json!(e.is_trace_ideal()));
            m.insert("self_dual".into(), json!(e.is_self_dual()));
            m.insert(
                "integrally_closed".into(),
                json!(e.is_integrally_closed().expect("ideal inside the ring")),
            );
            m
        })
        .collect();
    let columns: Vec<String> = [
        "ideal",
        "generators",
        "principal",
        "reflexive",
        "trace_ideal",
        "self_dual",
        "integrally_closed",
    ]
    .map(String::from)
    .to_vec();
    match args.format {
        Format::Json => {
            let doc = json!({
                "scope": MONOMIAL_SCOPE,
                "semigroup": h.minimal_generators(),
                "colength": args.colength,
                "ideals": rows,
            });
            writeln!(out, "{}", output::to_json(&doc))?;
        }
        Format::Csv => {
            writeln!(out, "# {MONOMIAL_SCOPE}")?;
            output::write_csv(out, &columns, &rows)?;
        }
        Format::Table => {
            writeln!(out, "# {MONOMIAL_SCOPE}")?;
            writeln!(
                out,
                "# colength {} ideals of {h}: {}",
                args.colength,
                rows.len()
            )?;
            output::write_table(out, &columns, &rows)?;
        }
    }
    Ok(EXIT_OK)
}

fn paper_check_cmd(args: &PaperCheckArgs, out: &mut dyn Write) -> Outcome {
    let manifest: Manifest = match &args.manifest {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::usage(format!("bad manifest {}: {e}", path.display())))?
        }
        None => paper_check::bundled_manifest(),
    };
    let result = paper_check::run(&manifest, args.only.as_deref());
    if result.cases.is_empty() {
        return Err(Failure::usage(format!(
            "no case matches {:?}",
            args.only.as_deref().unwrap_or("")
        )));
    }
    match args.format {
        Format::Json => {
            let value = serde_json::to_value(&result).expect("suite result serializes");
            writeln!(out, "{}", output::to_json(&value))?;
        }
        Format::Csv => {
            let columns: Vec<String> = [
                "case",
                "field",
                "expected",
                "computed",
                "provenance",
                "status",
            ]
            .map(String::from)
            .to_vec();
            let rows: Vec<Map<String, Value>> = result
                .cases
                .iter()
                .flat_map(|c| {
                    c.facts.iter().map(move |f| {
                        let mut m = Map::new();
                        m.insert("case".into(), json!(c.id));
                        m.insert("field".into(), json!(f.field));
                        m.insert("expected".into(), json!(f.expected.to_string()));
                        m.insert("computed".into(), json!(f.computed.to_string()));
                        m.insert(
                            "provenance".into(),
                            serde_json::to_value(f.provenance).unwrap(),
                        );
                        m.insert("status".into(), json!(f.status.as_str()));
                        m
                    })
                })
                .collect();
            output::write_csv(out, &columns, &rows)?;
        }
        Format::Table => write_check_table(out, &result)?,
    }
    Ok(if result.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn status_label(status: Status, color: bool) -> String {
    match status {
        Status::Pass => output::paint("PASS", "32", color),
        Status::InformationalDiscrepancy => output::paint("INFO", "33;1", color),
        Status::Fail => output::paint("FAIL", "31;1", color),
    }
}

fn write_check_table(out: &mut dyn Write, result: &paper_check::SuiteResult) -> io::Result<()> {
    let color = output::color_enabled();
    for case in &result.cases {
        let gens: Vec<String> = case.generators.iter().map(|g| g.to_string()).collect();
        writeln!(
            out,
            "{} {} <{}>",
            status_label(case.status, color),
            case.id,
            gens.join(",")
        )?;
        for f in &case.facts {
            let provenance = serde_json::to_value(f.provenance).unwrap();
            let provenance = provenance.as_str().unwrap();
            if f.status == Status::Pass {
                writeln!(out, "    ok   {} = {} [{provenance}]", f.field, f.computed)?;
            } else {
                writeln!(
                    out,
                    "    {} {}: expected {}, computed {} [{provenance}]",
                    status_label(f.status, color),
                    f.field,
                    f.expected,
                    f.computed
                )?;
                if let Some(note) = &f.note {
                    writeln!(out, "         {note}")?;
                }
            }
        }
    }
    let s = &result.summary;
    writeln!(
        out,
        "\n{} cases: {} pass, {} informational-discrepancy, {} fail",
        s.cases, s.pass, s.informational_discrepancy, s.fail
    )
}
