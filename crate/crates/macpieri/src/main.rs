use clap::{Parser, Subcommand, ValueEnum};
use macpieri::inverse_pieri::{expand_full, expand_sequence, invert_step, resum, FullExpansion, Side};
use macpieri::partitions::{enumerate_partitions, IntSeq};
use macpieri::symfunc::SymFunc;
use macpieri::verify::{self, Report};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const USAGE: u8 = 2;
const FAILED: u8 = 1;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "macpieri", version, about = "Exact inverse Pieri expansions of Macdonald polynomials")]
struct Cli {
    /// Largest weight any command may touch.
    #[arg(long, global = true, env = "MACPIERI_MAX_WEIGHT", default_value_t = 10)]
    budget: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand one polynomial.
    Expand {
        /// Comma-separated parts, e.g. 3,1,1.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = BasisArg::G)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = FamilyArg::Macdonald)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Accept any integer sequence and keep non-partition intermediates.
        #[arg(long)]
        raw: bool,
        /// Weight budget for this call (overrides --budget).
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Run verification suites; exit 1 on any violation.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Write one JSON file of expansions per weight.
    Table {
        #[arg(long)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Macdonald)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = BasisArg::G)]
        basis: BasisArg,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    G,
    E,
    M,
    #[value(name = "QQ")]
    Qq,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Macdonald,
    Schur,
    Hl,
    Jack,
    Mono,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Suite {
    Inversions,
    Pieri,
    Main,
    Specializations,
    Hook,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Inversions => "inversions",
            Suite::Pieri => "pieri",
            Suite::Main => "main",
            Suite::Specializations => "specializations",
            Suite::Hook => "hook",
            Suite::All => "all",
        }
    }
}

struct Fail(u8, String);

impl From<macpieri::Error> for Fail {
    fn from(e: macpieri::Error) -> Self {
        Fail(USAGE, e.to_string())
    }
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Macdonald => "macdonald",
            FamilyArg::Schur => "schur",
            FamilyArg::Hl => "hl",
            FamilyArg::Jack => "jack",
            FamilyArg::Mono => "mono",
        }
    }
}

impl BasisArg {
    fn name(self) -> &'static str {
        match self {
            BasisArg::G => "g",
            BasisArg::E => "e",
            BasisArg::M => "m",
            BasisArg::Qq => "QQ",
        }
    }
}

/// The side a (family, basis) pair expands on. `m` and `QQ` reuse the
/// `e`-side and the natural side respectively.
fn side_for(family: FamilyArg, basis: BasisArg) -> Result<Side, Fail> {
    use BasisArg::*;
    use FamilyArg::*;
    Ok(match (family, basis) {
        (Macdonald, G | Qq) => Side::QG,
        (Macdonald, E | M) => Side::PE,
        (Schur, G | Qq) => Side::SchurH,
        (Schur, E | M) => Side::SchurE,
        (Jack, G | Qq) => Side::JackQ,
        (Jack, E | M) => Side::JackP,
        (Hl, E | M | Qq) => Side::Hl,
        (Mono, E | M | Qq) => Side::Mono,
        (f, b) => return Err(Fail(USAGE, format!("family {} has no {} expansion", f.name(), b.name()))),
    })
}

fn parse_seq(s: &str) -> Result<Vec<i64>, Fail> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Fail(USAGE, format!("cannot parse {x:?} in --lambda"))))
        .collect()
}

fn over_budget(weight: usize, budget: usize) -> Result<(), Fail> {
    if weight > budget {
        return Err(Fail(BUDGET, format!("weight {weight} exceeds the budget {budget} (raise --max-weight or MACPIERI_MAX_WEIGHT)")));
    }
    Ok(())
}

enum Rendered {
    Full(FullExpansion),
    Step(macpieri::inverse_pieri::StepExpansion),
    Sym(String, SymFunc),
}

fn seq_label(s: &[i64]) -> String {
    format!("({})", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn render(r: &Rendered, format: Format) -> String {
    match (r, format) {
        (Rendered::Full(e), Format::Json) => pretty(&e.to_json()),
        (Rendered::Full(e), Format::Latex) => e.to_latex(),
        (Rendered::Full(e), Format::Plain) => match e.to_symfunc() {
            Ok(s) => format!("{}{} = {s}", lhs(e.side), e.lambda),
            Err(err) => format!("error: {err}"),
        },
        (Rendered::Step(e), Format::Json) => pretty(&serde_json::to_value(e).expect("step serializes")),
        (Rendered::Step(e), Format::Latex) => e.to_latex(),
        (Rendered::Step(e), Format::Plain) => {
            let mut out = format!("{}{}", lhs(e.side), seq_label(&e.lambda.0));
            for t in &e.terms {
                out.push_str(&format!("\n  ({}) · {}_{} · {}", t.coeff, e.side.factor_basis().tag(), t.factor, seq_label(&t.rest.0)));
            }
            out
        }
        (Rendered::Sym(_, s), Format::Json) => pretty(&serde_json::to_value(s).expect("symfunc serializes")),
        (Rendered::Sym(l, s), Format::Latex) => {
            let terms: Vec<String> = s.terms().map(|(k, c)| format!("\\left({}\\right) {}_{{{}}}", c.to_latex(), s.basis().tag(), k)).collect();
            format!("{l} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
        }
        (Rendered::Sym(l, s), Format::Plain) => format!("{l} = {s}"),
    }
}

fn lhs(side: Side) -> &'static str {
    match side {
        Side::QG | Side::JackQ => "Q",
        Side::SchurH | Side::SchurE => "s",
        Side::Mono => "m",
        _ => "P",
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

fn expand(lambda: &str, basis: BasisArg, family: FamilyArg, raw: bool, budget: usize) -> Result<Rendered, Fail> {
    let side = side_for(family, basis)?;
    let seq = parse_seq(lambda)?;
    let weight: i64 = seq.iter().filter(|&&x| x > 0).sum();
    over_budget(weight as usize, budget)?;
    let s = IntSeq(seq.clone());
    let part = s.to_partition();
    if matches!(basis, BasisArg::Qq) {
        if part.is_none() && !raw {
            return Err(Fail(USAGE, format!("{lambda} is not a partition (use --raw for sequences)")));
        }
        return Ok(Rendered::Step(invert_step(&s, side)?));
    }
    let Some(p) = part else {
        if !raw {
            return Err(Fail(USAGE, format!("{lambda} is not a partition (use --raw for sequences)")));
        }
        if !side.removes_last_part() {
            return Err(Fail(USAGE, format!("side {} takes partitions only", side.name())));
        }
        let terms = expand_sequence(&s, side)?;
        let sum = resum(&terms, side, weight.max(0) as usize)?;
        return Ok(Rendered::Sym(format!("{}{}", lhs(side), seq_label(&seq)), sum));
    };
    if p.is_empty() {
        return Err(Fail(USAGE, "the empty partition has no expansion".into()));
    }
    let e = expand_full(&p, side, raw)?;
    if matches!(basis, BasisArg::M) {
        return Ok(Rendered::Sym(format!("{}{p}", lhs(side)), e.to_symfunc()?.to_monomial()));
    }
    if raw {
        return Ok(Rendered::Sym(format!("{}{p}", lhs(side)), e.to_symfunc()?));
    }
    Ok(Rendered::Full(e))
}

fn run_verify(suite: Suite, max_weight: usize, seed: u64, budget: usize) -> Result<(String, bool), Fail> {
    over_budget(max_weight, budget)?;
    let names: Vec<&str> = if suite == Suite::All { verify::SUITES.to_vec() } else { vec![suite.name()] };
    let mut total = Report::new(suite.name());
    let mut parts = Vec::new();
    for n in names {
        let r = verify::by_name(n, max_weight, seed).expect("known suite");
        eprintln!("{n}: {} checks, {} violations", r.checks, r.violations.len());
        parts.push(json!({ "suite": n, "checks": r.checks, "violations": r.violations }));
        total.merge(r);
    }
    let out = json!({
        "suite": suite.name(),
        "max_weight": max_weight,
        "seed": seed,
        "checks": total.checks,
        "violations": total.violations,
        "suites": parts,
    });
    Ok((pretty(&out), total.passed()))
}

fn run_table(max_weight: usize, family: FamilyArg, basis: BasisArg, out: &PathBuf, budget: usize) -> Result<Vec<PathBuf>, Fail> {
    over_budget(max_weight, budget)?;
    let side = side_for(family, basis)?;
    std::fs::create_dir_all(out).map_err(|e| Fail(USAGE, format!("{}: {e}", out.display())))?;
    let mut written = Vec::new();
    for w in 1..=max_weight {
        let mut rows = Vec::new();
        for p in enumerate_partitions(w, None, None) {
            let v = match basis {
                BasisArg::Qq => serde_json::to_value(invert_step(&IntSeq::from_partition(&p, p.len()), side)?).expect("json"),
                BasisArg::M => {
                    json!({ "lambda": p, "side": side, "expansion": expand_full(&p, side, false)?.to_symfunc()?.to_monomial() })
                }
                _ => expand_full(&p, side, false)?.to_json(),
            };
            rows.push(v);
        }
        let doc = json!({ "family": family.name(), "basis": basis.name(), "weight": w, "expansions": rows });
        let path = out.join(format!("{}-{}-{w}.json", family.name(), basis.name()));
        std::fs::write(&path, pretty(&doc) + "\n").map_err(|e| Fail(USAGE, format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}


fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Expand { lambda, basis, family, format, raw, max_weight } => {
            expand(&lambda, basis, family, raw, max_weight.unwrap_or(cli.budget)).map(|r| {
                println!("{}", render(&r, format));
                true
            })
        }
        Cmd::Verify { suite, max_weight, seed } => run_verify(suite, max_weight, seed, cli.budget).map(|(s, ok)| {
            println!("{s}");
            ok
        }),
        Cmd::Table { max_weight, family, basis, out } => run_table(max_weight, family, basis, &out, cli.budget).map(|files| {
            for f in files {
                println!("{}", f.display());
            }
            true
        }),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(FAILED),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
