//! Command line front end. Every command prints JSON by default (object keys
//! sorted, so identical invocations give byte-identical output) or an aligned
//! text table with --format table. Exit codes: 0 success, 1 domain error
//! (bad semigroup, guard exceeded, failed verification), 2 usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sgtrace::{report, Limits, NumericalSemigroup, RelativeIdeal};

const LONG_ABOUT: &str = "\
Exact arithmetic for numerical semigroups and their ideals: traces, subtraces,
duals, star products, enumeration, duality pairing, and classification.

Conventions:
  * a semigroup is given by --gens, a comma separated list of generators with
    gcd 1; the whole line <1> has conductor 0 and frobenius -1
  * ideal generators are comma separated integers; negative entries require
    --relative (the default accepts only ideals inside the semigroup)
  * the semigroup itself counts among its own trace ideals (generator list
    [0]) and among its own oversemigroups; --proper drops it
  * enumeration guards: at most 24 small elements, 24 gaps, and tree genus 20
    by default, raiseable with --max-small / --max-gaps up to the hard
    ceiling of 64
  * verify sweeps every semigroup up to --genus-max (default 6, capped at
    20), checking each ideal between the conductor ideal and the semigroup,
    exhaustively up to 12 small elements and --random seeded samples beyond
  * exit codes: 0 success, 1 domain error or failed verification, 2 usage";

#[derive(Parser)]
#[command(name = "sgtrace", version, about = "Trace ideal calculator for numerical semigroup rings", long_about = LONG_ABOUT)]
struct JobSpec {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct SemigroupArgs {
    /// Semigroup generators, e.g. --gens 3,4
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<i64>,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    sg: SemigroupArgs,
    /// Ideal generators, e.g. --ideal 3,8
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    ideal: Vec<i64>,
    /// Allow negative ideal generators (fractionary ideals)
    #[arg(long)]
    relative: bool,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    lhs: IdealArgs,
    /// Second ideal of the binary operation
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    other: Vec<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Semigroup invariants, or the full trace report of one ideal
    Analyze {
        #[command(flatten)]
        sg: SemigroupArgs,
        /// Ideal to analyze (omit for the semigroup report)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        ideal: Option<Vec<i64>>,
        /// Allow negative ideal generators
        #[arg(long)]
        relative: bool,
    },
    /// One ideal operation
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// List all trace ideals and oversemigroups with the duality pairing
    Enumerate {
        #[command(flatten)]
        sg: SemigroupArgs,
        /// Drop the semigroup itself from the trace ideal list
        #[arg(long)]
        proper: bool,
        /// Only the trace ideal side
        #[arg(long)]
        trace_ideals: bool,
        /// Only the oversemigroup side
        #[arg(long)]
        oversemigroups: bool,
        /// Raise the small element guard (hard ceiling 64)
        #[arg(long)]
        max_small: Option<usize>,
        /// Raise the gap guard (hard ceiling 64)
        #[arg(long)]
        max_gaps: Option<usize>,
    },
    /// Finite overring family and Gorenstein smallness verdict
    Classify {
        #[command(flatten)]
        sg: SemigroupArgs,
    },
    /// Run the self-check battery over all semigroups up to a genus bound
    Verify {
        #[arg(long, default_value_t = 6)]
        genus_max: u32,
        /// Random ideals per semigroup beyond 12 small elements
        #[arg(long, default_value_t = 500)]
        random: u32,
        #[arg(long, default_value_t = sgtrace::DEFAULT_SEED)]
        seed: u64,
    },
    /// Run one command per input line, print JSON Lines
    Batch {
        /// Input file; - or omitted reads standard input
        file: Option<String>,
    },
}

#[derive(Subcommand)]
enum IdealOp {
    /// Trace: the ideal times its dual
    Trace(IdealArgs),
    /// Largest trace ideal inside (requires the conductor ideal inside)
    Subtrace(IdealArgs),
    /// Dual H - E
    Dual(IdealArgs),
    /// Double dual
    ReflexiveHull(IdealArgs),
    /// Members of H from the least element on
    IntegralClosure(IdealArgs),
    /// Endomorphism semigroup E - E
    End(IdealArgs),
    /// Does trace(E) = E hold
    IsTrace(IdealArgs),
    /// Canonical ideal of the semigroup
    Canonical(SemigroupArgs),
    Sum(PairArgs),
    /// Sumset product
    Product(PairArgs),
    /// Colon E - F
    Colon(PairArgs),
    Intersect(PairArgs),
    /// Star product (both operands between conductor ideal and semigroup)
    Star(PairArgs),
    /// Translate by --by
    Shift {
        #[command(flatten)]
        lhs: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<sgtrace::Error> for Failure {
    fn from(e: sgtrace::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

struct Outcome {
    value: Value,
    code: u8,
}

fn ok(value: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { value, code: 0 })
}

fn semigroup(args: &SemigroupArgs) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::from_generators(&args.gens)?)
}

fn check_signs(gens: &[i64], relative: bool) -> Result<(), Failure> {
    if !relative && gens.iter().any(|&g| g < 0) {
        return Err(Failure::Usage(
            "negative ideal generators require --relative".into(),
        ));
    }
    Ok(())
}

fn ideal_of<'h>(
    h: &'h NumericalSemigroup,
    gens: &[i64],
    relative: bool,
) -> Result<RelativeIdeal<'h>, Failure> {
    check_signs(gens, relative)?;
    Ok(RelativeIdeal::new(h, gens)?)
}

fn unary_payload(h: &NumericalSemigroup, e: &RelativeIdeal<'_>, key: &str, result: Value) -> Value {
    json!({
        "semigroup": report::semigroup_json(h),
        "ideal": {"gens": e.min_gens()},
        key: result,
    })
}

fn run(spec: &JobSpec) -> Result<Outcome, Failure> {
    match &spec.command {
        Command::Analyze { sg, ideal, relative } => {
            let h = semigroup(sg)?;
            match ideal {
                None => ok(report::analyze_semigroup_json(&h)),
                Some(gens) => {
                    let e = ideal_of(&h, gens, *relative)?;
                    let r = e.analyze()?;
                    ok(report::trace_report_json(&h, &r))
                }
            }
        }
        Command::Ideal { op } => run_ideal_op(op),
        Command::Enumerate {
            sg,
            proper,
            trace_ideals,
            oversemigroups,
            max_small,
            max_gaps,
        } => {
            let h = semigroup(sg)?;
            let mut limits = Limits::default();
            if let Some(n) = max_small {
                limits.max_small = *n;
            }
            if let Some(g) = max_gaps {
                limits.max_gaps = *g;
            }
            let with_traces = *trace_ideals || !*oversemigroups;
            let with_overs = *oversemigroups || !*trace_ideals;
            let r = sgtrace::enumerate::check_duality_with(&h, limits)?;
            ok(report::enumeration_json(&h, &r, *proper, with_traces, with_overs))
        }
        Command::Classify { sg } => {
            let h = semigroup(sg)?;
            let v = sgtrace::classify(&h);
            ok(report::classification_json(&h, &v))
        }
        Command::Verify {
            genus_max,
            random,
            seed,
        } => {
            let r = sgtrace::run_battery(*genus_max, *random, *seed)?;
            Ok(Outcome {
                code: if r.passed() { 0 } else { 1 },
                value: report::verify_json(&r),
            })
        }
        Command::Batch { .. } => Err(Failure::Usage(
            "batch lines cannot contain the batch command".into(),
        )),
    }
}

fn run_ideal_op(op: &IdealOp) -> Result<Outcome, Failure> {
    use IdealOp::*;
    match op {
        Canonical(sg) => {
            let h = semigroup(sg)?;
            let k = h.canonical_ideal();
            ok(json!({
                "semigroup": report::semigroup_json(&h),
                "canonical_ideal": k.min_gens(),
            }))
        }
        Trace(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            let t = e.trace();
            let mut v = unary_payload(&h, &e, "trace", json!(t.min_gens()));
            v["is_trace"] = json!(t == e);
            ok(v)
        }
        Subtrace(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            let s = e.subtrace()?;
            ok(unary_payload(&h, &e, "subtrace", json!(s.min_gens())))
        }
        Dual(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            ok(unary_payload(&h, &e, "dual", json!(e.dual().min_gens())))
        }
        ReflexiveHull(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            let d = e.reflexive_hull();
            let mut v = unary_payload(&h, &e, "reflexive_hull", json!(d.min_gens()));
            v["is_reflexive"] = json!(d == e);
            ok(v)
        }
        IntegralClosure(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            let c = e.integral_closure()?;
            let mut v = unary_payload(&h, &e, "integral_closure", json!(c.min_gens()));
            v["is_integrally_closed"] = json!(c == e);
            ok(v)
        }
        End(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            ok(unary_payload(&h, &e, "end", json!(e.end_semigroup().min_gens())))
        }
        IsTrace(a) => {
            let h = semigroup(&a.sg)?;
            let e = ideal_of(&h, &a.ideal, a.relative)?;
            ok(unary_payload(&h, &e, "is_trace", json!(e.is_trace())))
        }
        Sum(p) => binary(p, "sum", |a, b| Ok(a.sum(b)?)),
        Product(p) => binary(p, "product", |a, b| Ok(a.product(b)?)),
        Colon(p) => binary(p, "colon", |a, b| Ok(a.colon(b)?)),
        Intersect(p) => binary(p, "intersect", |a, b| Ok(a.intersect(b)?)),
        Star(p) => binary(p, "star", |a, b| Ok(a.star(b)?)),
        Shift { lhs, by } => {
            let h = semigroup(&lhs.sg)?;
            let e = ideal_of(&h, &lhs.ideal, lhs.relative)?;
            if *by < 0 && !lhs.relative {
                return Err(Failure::Usage(
                    "a negative --by requires --relative".into(),
                ));
            }
            if by.unsigned_abs() > 1_000_000_000_000 {
                return Err(Failure::Domain("--by exceeds the supported magnitude".into()));
            }
            let mut v = unary_payload(&h, &e, "shift", json!(e.shift(*by).min_gens()));
            v["by"] = json!(by);
            ok(v)
        }
    }
}

fn binary(
    p: &PairArgs,
    key: &str,
    f: impl for<'h> Fn(
        &RelativeIdeal<'h>,
        &RelativeIdeal<'h>,
    ) -> Result<RelativeIdeal<'h>, Failure>,
) -> Result<Outcome, Failure> {
    let h = semigroup(&p.lhs.sg)?;
    let a = ideal_of(&h, &p.lhs.ideal, p.lhs.relative)?;
    let b = ideal_of(&h, &p.other, p.lhs.relative)?;
    let r = f(&a, &b)?;
    let mut v = unary_payload(&h, &a, key, json!(r.min_gens()));
    v["other"] = json!({"gens": b.min_gens()});
    ok(v)
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut out = String::new();
            table(value, 0, &mut out);
            out
        }
    }
}

fn table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map
                .iter()
                .filter(|(_, v)| !v.is_object() && !has_nested(v))
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        table(v, indent + 1, out);
                    }
                    Value::Array(_) if has_nested(v) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        let Value::Array(items) = v else { unreachable!() };
                        for item in items {
                            if item.is_object() {
                                out.push_str(&format!("{pad}  -\n"));
                                table(item, indent + 2, out);
                            } else {
                                out.push_str(&format!("{pad}  {item}\n"));
                            }
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k:<width$} = {v}\n")),
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

fn has_nested(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().any(|i| i.is_array() || i.is_object()))
}

fn run_batch(file: &Option<String>) -> u8 {
    let text = match file.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            if std::io::stdin().read_to_string(&mut s).is_err() {
                eprintln!("error: cannot read standard input");
                return 1;
            }
            s
        }
        Some(path) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                return 1;
            }
        },
    };
    let mut worst = 0u8;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("sgtrace").chain(line.split_whitespace());
        let (value, code) = match JobSpec::try_parse_from(argv) {
            Err(e) => (json!({"error": e.to_string().lines().next().unwrap_or("parse error")}), 2),
            Ok(spec) => match run(&spec) {
                Ok(outcome) => (outcome.value, outcome.code),
                Err(Failure::Domain(msg)) => (json!({"error": msg}), 1),
                Err(Failure::Usage(msg)) => (json!({"error": msg}), 2),
            },
        };
        use std::io::Write;
        let _ = writeln!(lock, "{value}");
        worst = worst.max(code);
    }
    worst
}

fn main() -> ExitCode {
    let spec = JobSpec::parse();
    if let Command::Batch { file } = &spec.command {
        return ExitCode::from(run_batch(file));
    }
    match run(&spec) {
        Ok(outcome) => {
            print!("{}", render(&outcome.value, spec.format));
            ExitCode::from(outcome.code)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
