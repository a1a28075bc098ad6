//! Command-line driver. Every command prints a versioned report (JSON, or the
//! rows alone as CSV) and exits 0 when all checks pass, 1 when a check fails
//! and 2 on usage or configuration errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bentcomp::{
    self, divisor_cases, max_bent_components, sweep_monomials, verify_structure, AlphaScan,
    BentComponentReport, Family, SweepMode, Vectorial,
};
use crate::boolfun::{dual, monomial, walsh, BoolFun};
use crate::charsums::{gauss_table, trace_from_gauss, walsh_via_gauss};
use crate::error::{Error, Result};
use crate::gf2n::{Elem, FieldCtx};
use crate::kloosterman::{dillon_cross_check, scan_field, DEFAULT_SCAN_DEGREE, MAX_SCAN_DEGREE};
use crate::weights::{coset_of, cyclotomic_cosets, exponent_profile, wt_mod, CarryTrace};

pub const SCHEMA: &str = "monobent.report/1";
pub const THREADS_ENV: &str = "MONOBENT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "monobent", version, about = "Checks on monomial bent functions over GF(2^n)")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; defaults to the hardware parallelism.
    #[arg(long, global = true, env = THREADS_ENV, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Defining polynomial as hex, e.g. 0x13 for x^4 + x + 1.
    #[arg(long, global = true, value_parser = parse_hex_u64)]
    pub modulus: Option<u64>,
    /// Seed for randomized checks; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modulus, generator and cyclotomic cosets of GF(2^n).
    FieldInfo {
        #[arg(long)]
        n: u32,
    },
    /// Bentness, Walsh extremum and dual of Tr(alpha x^d) or of a hex truth table.
    BentCheck {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_hex_u64, requires = "d", conflicts_with = "table")]
        alpha: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, required_unless_present = "alpha")]
        table: Option<String>,
    },
    /// Minimum of V_d, its minimisers and the weight condition for one exponent.
    ExponentProfile {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
    /// Counts bent components of every monomial and checks that only the
    /// coset of 2^k + 1 reaches the maximum.
    ScanOpenProblem {
        #[arg(long)]
        n: u32,
        /// Analyse one exponent per cyclotomic coset.
        #[arg(long)]
        coset_reduce: bool,
        /// Also report the binomials x^(2^i)(x + x^(2^k)) for these i.
        #[arg(long, value_delimiter = ',')]
        pott: Vec<u32>,
    },
    /// Kloosterman sums over GF(2^k) and the trace-zero check.
    KloostermanScan {
        #[arg(long)]
        k: u32,
        /// Treat a nonempty violation set as the expected outcome (k = 2).
        #[arg(long)]
        expect_counterexample: bool,
        /// Permit k above the default limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Walsh-checks every member of the known monomial bent families.
    FamiliesVerify {
        #[arg(long)]
        n: u32,
        /// Restrict to these families.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Numerical checks of the Gauss sums and the Walsh expansion.
    GaussVerify {
        #[arg(long)]
        n: u32,
        /// Random (alpha, d, lambda) triples for the Walsh comparison.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Random trials of modular add-with-carry.
    CarryCheck {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
    },
}

fn parse_hex_u64(s: &str) -> std::result::Result<u64, String> {
    let t = s.trim();
    let t = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(t, 16).map_err(|e| format!("`{s}` is not hex: {e}"))
}

fn hex(a: impl Into<u64>) -> String {
    format!("{:#x}", a.into())
}

/// Rendered report and verdict of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub failures: Vec<String>,
    pub rendered: String,
}

#[derive(Serialize)]
struct Header {
    schema: &'static str,
    version: &'static str,
    command: &'static str,
    n: u32,
    modulus_hex: String,
    generator_hex: String,
    seed: u64,
}

#[derive(Serialize)]
struct Document<'a, S, R> {
    #[serde(flatten)]
    header: Header,
    passed: bool,
    failures: &'a [String],
    summary: S,
    rows: &'a [R],
}

struct Run<'a> {
    global: &'a Global,
    command: &'static str,
}

impl Run<'_> {
    fn field(&self, n: u32) -> Result<FieldCtx> {
        FieldCtx::build_field(n, self.global.modulus)
    }

    fn finish<S: Serialize, R: Serialize>(
        &self,
        ctx: &FieldCtx,
        failures: Vec<String>,
        summary: S,
        rows: &[R],
    ) -> Result<Outcome> {
        let rendered = match self.global.format {
            Format::Json => {
                let doc = Document {
                    header: Header {
                        schema: SCHEMA,
                        version: env!("CARGO_PKG_VERSION"),
                        command: self.command,
                        n: ctx.n(),
                        modulus_hex: ctx.modulus_hex(),
                        generator_hex: ctx.generator_hex(),
                        seed: self.global.seed,
                    },
                    passed: failures.is_empty(),
                    failures: &failures,
                    summary,
                    rows,
                };
                let mut s = serde_json::to_string_pretty(&doc)
                    .map_err(|e| Error::Output(e.to_string()))?;
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in rows {
                    w.serialize(r).map_err(|e| Error::Output(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))?
            }
        };
        Ok(Outcome {
            passed: failures.is_empty(),
            failures,
            rendered,
        })
    }
}

fn require_even(n: u32) -> Result<()> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "bent commands need an even n, got {n}"
        )));
    }
    Ok(())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs a parsed command inside a pool of the requested size.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.global.threads {
        builder = builder.num_threads(t as usize);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::FieldInfo { n } => field_info(g, *n),
        Command::BentCheck { n, alpha, d, table } => bent_check(g, *n, *alpha, *d, table.as_deref()),
        Command::ExponentProfile { n, d } => profile(g, *n, *d),
        Command::ScanOpenProblem {
            n,
            coset_reduce,
            pott,
        } => scan_open_problem(g, *n, *coset_reduce, pott),
        Command::KloostermanScan {
            k,
            expect_counterexample,
            allow_large,
        } => kloosterman_scan(g, *k, *expect_counterexample, *allow_large),
        Command::FamiliesVerify { n, family } => families_verify(g, *n, family),
        Command::GaussVerify { n, samples } => gauss_verify(g, *n, *samples),
        Command::CarryCheck { n, trials } => carry_check(g, *n, *trials),
    }
}

/// Parses `args`, runs the command, writes the report and maps the verdict
/// to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.global.output {
        Some(path) => fs::write(path, &outcome.rendered),
        None => {
            print!("{}", outcome.rendered);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: could not write the report: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        for f in &outcome.failures {
            eprintln!("FAIL: {f}");
        }
        ExitCode::from(1)
    }
}

pub fn main() -> ExitCode {
    run(std::env::args_os())
}

#[derive(Serialize)]
struct CosetRow {
    leader: u64,
    size: u32,
    members: String,
}

fn field_info(g: &Global, n: u32) -> Result<Outcome> {
    let run = Run { global: g, command: "field-info" };
    let ctx = run.field(n)?;
    let rows: Vec<CosetRow> = cyclotomic_cosets(n)
        .into_iter()
        .map(|c| CosetRow {
            leader: c.leader,
            size: c.size(),
            members: join(&c.members),
        })
        .collect();
    #[derive(Serialize)]
    struct Summary {
        primitive_modulus: bool,
        coset_count: usize,
    }
    let summary = Summary {
        primitive_modulus: x_is_primitive(&ctx),
        coset_count: rows.len(),
    };
    run.finish(&ctx, Vec::new(), summary, &rows)
}

/// Whether the class of x generates the multiplicative group, i.e. the
/// modulus is a primitive polynomial.
fn x_is_primitive(ctx: &FieldCtx) -> bool {
    let x = if ctx.n() == 1 { 1 } else { 2 };
    ctx.log(x)
        .is_some_and(|l| crate::gf2n::gcd(u64::from(l), ctx.group_order()) == 1)
}

#[derive(Serialize)]
struct BentRow {
    n: u32,
    source: &'static str,
    alpha_hex: Option<String>,
    d: Option<u64>,
    weight: u64,
    is_bent: bool,
    max_abs_walsh: i64,
    table_hex: String,
    dual_hex: Option<String>,
}

fn bent_check(
    g: &Global,
    n: u32,
    alpha: Option<u64>,
    d: Option<u64>,
    table: Option<&str>,
) -> Result<Outcome> {
    let run = Run { global: g, command: "bent-check" };
    require_even(n)?;
    let ctx = run.field(n)?;
    let (f, source, alpha) = match (alpha, table) {
        (Some(a), _) => {
            if a >= ctx.size() as u64 {
                return Err(Error::InvalidParameter(format!(
                    "alpha {a:#x} is not an element of GF(2^{n})"
                )));
            }
            let d = d.expect("clap requires d with alpha");
            (monomial(&ctx, a as Elem, d)?, "monomial", Some(hex(a)))
        }
        (None, Some(t)) => (BoolFun::from_hex(n, t)?, "table", None),
        (None, None) => {
            return Err(Error::InvalidParameter("give --alpha and --d, or --table".into()))
        }
    };
    let spectrum = walsh(&f, &ctx);
    let bent = spectrum.is_bent();
    let row = BentRow {
        n,
        source,
        alpha_hex: alpha,
        d: if source == "monomial" { d } else { None },
        weight: f.weight(),
        is_bent: bent,
        max_abs_walsh: spectrum.max_abs(),
        table_hex: f.to_hex(),
        dual_hex: if bent { Some(dual(&f, &ctx)?.to_hex()) } else { None },
    };
    let mut failures = Vec::new();
    if !bent {
        failures.push(format!(
            "not bent: max |W| = {} but bentness needs {}",
            row.max_abs_walsh,
            1u64 << (n / 2)
        ));
    }
    if !spectrum.parseval_holds() {
        failures.push("Parseval identity fails".into());
    }
    run.finish(&ctx, failures, serde_json::Value::Null, &[row])
}

#[derive(Serialize)]
struct ProfileRow {
    n: u32,
    d: u64,
    min_v: u32,
    j_set: String,
    all_jd_zero: bool,
    divisible_2k1: bool,
    s_value: Option<u64>,
    s_coprime: Option<bool>,
    meets_weight_condition: bool,
    bent_alphas: Option<usize>,
}

fn profile(g: &Global, n: u32, d: u64) -> Result<Outcome> {
    let run = Run { global: g, command: "exponent-profile" };
    require_even(n)?;
    let ctx = run.field(n)?;
    let p = exponent_profile(d, n)?;
    let k = n / 2;
    let bent_alphas = if n <= bentcomp::MAX_SWEEP_DEGREE {
        Some(bentcomp::bent_alphas(&ctx, d)?.len())
    } else {
        None
    };
    let mut failures = Vec::new();
    if bent_alphas.is_some_and(|b| b > 0) {
        if p.min_v > k {
            failures.push(format!(
                "bent exponent has min V_d = {} above k = {k}",
                p.min_v
            ));
        }
        if p.min_v == k && !p.all_jd_zero {
            failures.push("condition collapse: min V_d = k but some minimiser j has jd != 0".into());
        }
    }
    let row = ProfileRow {
        n,
        d,
        min_v: p.min_v,
        j_set: join(&p.j_set),
        all_jd_zero: p.all_jd_zero,
        divisible_2k1: p.divisible_2k1,
        s_value: p.s_value,
        s_coprime: p.s_coprime,
        meets_weight_condition: p.meets_weight_condition(),
        bent_alphas,
    };
    run.finish(&ctx, failures, serde_json::Value::Null, &[row])
}

#[derive(Serialize)]
struct ComponentRow {
    n: u32,
    modulus_hex: String,
    d: Option<u64>,
    binomial_i: Option<u32>,
    s_f_size: usize,
    bent_count: u64,
    is_maximal: bool,
    is_linear: bool,
    is_subfield_k: bool,
}

impl ComponentRow {
    fn new(ctx: &FieldCtx, r: &BentComponentReport) -> Self {
        let (d, binomial_i) = match r.function {
            Vectorial::Monomial { d } => (Some(d), None),
            Vectorial::PottBinomial { i } => (None, Some(i)),
        };
        ComponentRow {
            n: r.n,
            modulus_hex: ctx.modulus_hex(),
            d,
            binomial_i,
            s_f_size: r.s_f_size(),
            bent_count: r.bent_count,
            is_maximal: r.is_maximal,
            is_linear: r.is_linear,
            is_subfield_k: r.is_subfield_k,
        }
    }
}

fn scan_open_problem(g: &Global, n: u32, coset_reduce: bool, pott: &[u32]) -> Result<Outcome> {
    let run = Run { global: g, command: "scan-open-problem" };
    require_even(n)?;
    let ctx = run.field(n)?;
    let k = n / 2;
    let mode = if coset_reduce {
        SweepMode::CosetReduced
    } else {
        SweepMode::default_for(n)
    };
    let scan = if n <= bentcomp::FULL_SWEEP_DEGREE {
        AlphaScan::Exhaustive
    } else {
        AlphaScan::ClassReduced
    };
    let mut reports = sweep_monomials(&ctx, mode, scan)?;
    for &i in pott {
        reports.push(bentcomp::bent_components(&ctx, Vectorial::PottBinomial { i })?);
    }

    let mut failures = Vec::new();
    for r in &reports {
        for v in verify_structure(&ctx, r) {
            failures.push(format!("{}: {v}", r.function));
        }
    }
    let maximal: Vec<u64> = reports
        .iter()
        .filter(|r| r.is_maximal)
        .filter_map(|r| match r.function {
            Vectorial::Monomial { d } => Some(d),
            Vectorial::PottBinomial { .. } => None,
        })
        .collect();
    let mut expected = coset_of((1u64 << k) + 1, n);
    expected.sort_unstable();
    if maximal != expected {
        failures.push(format!(
            "maximal monomials are {maximal:?}, expected the coset {expected:?}"
        ));
    }
    for r in reports.iter().filter(|r| matches!(r.function, Vectorial::PottBinomial { .. })) {
        if !r.is_maximal {
            failures.push(format!(
                "{} has {} bent components, below the maximum {}",
                r.function,
                r.bent_count,
                max_bent_components(n)
            ));
        }
    }
    let cases = divisor_cases(&ctx)?;
    for c in cases.iter().filter(|c| !c.holds) {
        failures.push(format!(
            "d = {} = (2^k + 1) * {} has {} bent components, against the divisor rule",
            c.d, c.s, c.bent_count
        ));
    }

    #[derive(Serialize)]
    struct Summary {
        mode: SweepMode,
        maximal: Vec<u64>,
        expected: Vec<u64>,
        divisor_cases: Vec<bentcomp::DivisorCase>,
    }
    let rows: Vec<ComponentRow> = reports.iter().map(|r| ComponentRow::new(&ctx, r)).collect();
    let summary = Summary {
        mode,
        maximal,
        expected,
        divisor_cases: cases,
    };
    run.finish(&ctx, failures, summary, &rows)
}

#[derive(Serialize)]
struct KloostermanCsvRow {
    k: u32,
    alpha_hex: String,
    sum: i64,
    trace_bit: u8,
}

fn kloosterman_scan(g: &Global, k: u32, expect_counterexample: bool, allow_large: bool) -> Result<Outcome> {
    let run = Run { global: g, command: "kloosterman-scan" };
    let limit = if allow_large { MAX_SCAN_DEGREE } else { DEFAULT_SCAN_DEGREE };
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if k > limit {
        return Err(Error::SweepTooLarge { n: k, limit });
    }
    let ctx = run.field(k)?;
    let scan = scan_field(&ctx);
    let mut failures = Vec::new();
    if expect_counterexample {
        if scan.violations.is_empty() {
            failures.push(format!("expected a trace-one zero at k = {k}, found none"));
        }
    } else {
        for &a in &scan.violations {
            failures.push(format!(
                "K({}) = -1 but Tr({}) = 1",
                hex(a),
                hex(a)
            ));
        }
    }
    let dillon = if (2..=6).contains(&k) {
        let ok = dillon_cross_check(k)?;
        if !ok {
            failures.push("Dillon cross-check: bentness and K = -1 disagree".into());
        }
        Some(ok)
    } else {
        None
    };
    #[derive(Serialize)]
    struct Summary {
        zero_set: Vec<String>,
        violations: Vec<String>,
        dillon_cross_check: Option<bool>,
    }
    let summary = Summary {
        zero_set: scan.zero_set.iter().map(|&a| hex(a)).collect(),
        violations: scan.violations.iter().map(|&a| hex(a)).collect(),
        dillon_cross_check: dillon,
    };
    let rows: Vec<KloostermanCsvRow> = scan
        .rows
        .iter()
        .map(|r| KloostermanCsvRow {
            k: r.k,
            alpha_hex: hex(r.alpha),
            sum: r.sum,
            trace_bit: r.trace_bit,
        })
        .collect();
    run.finish(&ctx, failures, summary, &rows)
}

#[derive(Serialize)]
struct FamilyRow {
    family: Family,
    param: u64,
    d: u64,
    alpha_hex: String,
    bent: bool,
}

fn families_verify(g: &Global, n: u32, names: &[String]) -> Result<Outcome> {
    let run = Run { global: g, command: "families-verify" };
    require_even(n)?;
    if n > bentcomp::MAX_SWEEP_DEGREE {
        return Err(Error::SweepTooLarge {
            n,
            limit: bentcomp::MAX_SWEEP_DEGREE,
        });
    }
    let ctx = run.field(n)?;
    let families: Vec<Family> = if names.is_empty() {
        Family::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let checks = bentcomp::verify_families(&ctx, &families)?;
    let failures = checks
        .iter()
        .filter(|c| !c.bent)
        .map(|c| {
            format!(
                "{} member d = {}, alpha = {} is not bent",
                c.member.family,
                c.member.d,
                hex(c.member.alpha)
            )
        })
        .collect();
    #[derive(Serialize)]
    struct Count {
        family: Family,
        members: usize,
    }
    let summary: Vec<Count> = families
        .iter()
        .map(|&f| Count {
            family: f,
            members: checks.iter().filter(|c| c.member.family == f).count(),
        })
        .collect();
    let rows: Vec<FamilyRow> = checks
        .iter()
        .map(|c| FamilyRow {
            family: c.member.family,
            param: c.member.param,
            d: c.member.d,
            alpha_hex: hex(c.member.alpha),
            bent: c.bent,
        })
        .collect();
    run.finish(&ctx, failures, summary, &rows)
}

/// Pass/fail line of a numeric or randomized check.
#[derive(Debug, Clone, Serialize)]
struct CheckRow {
    check: &'static str,
    count: usize,
    failures: usize,
    max_error: f64,
    tolerance: f64,
    passed: bool,
}

impl CheckRow {
    fn new(check: &'static str, errors: &[f64], tolerance: f64) -> Self {
        let failures = errors.iter().filter(|&&e| !(e <= tolerance)).count();
        CheckRow {
            check,
            count: errors.len(),
            failures,
            max_error: errors.iter().copied().fold(0.0, f64::max),
            tolerance,
            passed: failures == 0,
        }
    }
}

fn gauss_verify(g: &Global, n: u32, samples: usize) -> Result<Outcome> {
    let run = Run { global: g, command: "gauss-verify" };
    let ctx = run.field(n)?;
    let table = gauss_table(&ctx)?;
    let order = ctx.group_order();
    let q = ctx.size() as f64;
    let nonzero: Vec<i64> = (1..order as i64).collect();

    let trivial = [(table.values[0].re + 1.0).abs() + table.values[0].im.abs()];
    let magnitude: Vec<f64> = nonzero
        .iter()
        .map(|&j| (table.get(j).norm_sqr() - q).abs() / q)
        .collect();
    let frobenius: Vec<f64> = nonzero
        .iter()
        .map(|&j| (table.get(2 * j) - table.get(j)).norm())
        .collect();
    let conjugate: Vec<f64> = nonzero
        .iter()
        .map(|&j| (table.get(-j) - table.get(j).conj()).norm())
        .collect();
    let trace: Vec<f64> = (1..ctx.size() as Elem)
        .into_par_iter()
        .map(|x| {
            let want = 1.0 - 2.0 * f64::from(ctx.trace(x));
            trace_from_gauss(&ctx, &table, x).map(|v| (v - want).abs())
        })
        .collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let size = ctx.size() as Elem;
    let triples: Vec<(Elem, u64, Elem)> = if order > 1 {
        (0..samples)
            .map(|_| {
                (
                    rng.random_range(1..size),
                    rng.random_range(1..order),
                    rng.random_range(1..size),
                )
            })
            .collect()
    } else {
        Vec::new()
    };
    let walsh_err: Vec<f64> = triples
        .par_iter()
        .map(|&(a, d, l)| {
            let exact = walsh(&monomial(&ctx, a, d)?, &ctx).values[l as usize] as f64;
            Ok((walsh_via_gauss(&ctx, &table, a, d, l)? - exact).abs())
        })
        .collect::<Result<_>>()?;

    let rows = vec![
        CheckRow::new("trivial_character", &trivial, 0.0),
        CheckRow::new("magnitude", &magnitude, 1e-6),
        CheckRow::new("frobenius", &frobenius, 1e-9),
        CheckRow::new("conjugate", &conjugate, 1e-9),
        CheckRow::new("trace_from_gauss", &trace, 1e-6),
        CheckRow::new("walsh_via_gauss", &walsh_err, 1e-4),
    ];
    let failures = rows
        .iter()
        .filter(|r| !r.passed)
        .map(|r| {
            format!(
                "{}: {} of {} exceed {:e} (max error {:e})",
                r.check, r.failures, r.count, r.tolerance, r.max_error
            )
        })
        .collect();
    run.finish(&ctx, failures, serde_json::Value::Null, &rows)
}

/// Outcome of one add-with-carry trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarryTrial {
    pub recurrence: bool,
    pub unique_seed: bool,
    pub weight_identity: bool,
    pub subadditive: bool,
}

/// Checks one pair: exactly one carry seed closes the cycle with h in range,
/// the recurrence and the weight identity hold, and wt(f) + wt(g) ≥ wt(f + g).
pub fn carry_trial(f: u64, g: u64, n: u32) -> Result<CarryTrial> {
    let t = crate::weights::add_with_carry(f, g, n)?;
    let m = (1u64 << n) - 1;
    let consistent: Vec<CarryTrace> = [0u8, 1]
        .into_iter()
        .filter_map(|s| CarryTrace::from_seed(f, g, n, s))
        .filter(|c| c.h < m)
        .collect();
    let sum = (f + g) % m;
    Ok(CarryTrial {
        recurrence: t.recurrence_holds(),
        unique_seed: consistent.len() == 1,
        weight_identity: t.weight_identity_holds() && t.h == sum,
        subadditive: f.count_ones() + g.count_ones() >= wt_mod(sum as i64, n),
    })
}

fn carry_check(g: &Global, n: u32, trials: usize) -> Result<Outcome> {
    let run = Run { global: g, command: "carry-check" };
    if !(2..=63).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "carry-check needs 2 <= n <= 63, got {n}"
        )));
    }
    let header_ctx = run.field(n.min(crate::gf2n::MAX_DEGREE))?;
    let m = (1u64 << n) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let pairs: Vec<(u64, u64)> = (0..trials)
        .map(|_| (rng.random_range(0..m), rng.random_range(0..m)))
        .collect();
    let results: Vec<CarryTrial> = pairs
        .par_iter()
        .map(|&(f, gg)| carry_trial(f, gg, n))
        .collect::<Result<_>>()?;
    let row = |check: &'static str, pick: fn(&CarryTrial) -> bool| {
        let errors: Vec<f64> = results
            .iter()
            .map(|r| if pick(r) { 0.0 } else { 1.0 })
            .collect();
        CheckRow::new(check, &errors, 0.0)
    };
    let rows = vec![
        row("recurrence", |r| r.recurrence),
        row("unique_seed", |r| r.unique_seed),
        row("weight_identity", |r| r.weight_identity),
        row("subadditive", |r| r.subadditive),
    ];
    let failures = rows
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}: {} of {} trials fail", r.check, r.failures, r.count))
        .collect();
    run.finish(&header_ctx, failures, serde_json::Value::Null, &rows)
}
