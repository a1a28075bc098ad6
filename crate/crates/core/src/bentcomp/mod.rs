//! Bent components of vectorial functions F: GF(2^(2k)) → GF(2^(2k)).
//!
//! For each α the component Tr(α F(x)) is tested for bentness; the set of α
//! whose component is *not* bent is S_F. It always contains 0, since the zero
//! component is constant, and at most 2^(2k) − 2^k components can be bent.

mod collapse;
mod families;

pub use collapse::{condition_collapse, CollapseRow};
pub use families::{
    family_enumerate, family_predicate, verify_families, Family, FamilyCheck, FamilyContext,
    FamilyMember,
};

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfun::{fwht, pott_binomial, power_table};
use crate::error::{Error, Result};
use crate::gf2n::{gcd, Elem, FieldCtx};
use crate::weights::{coset_leader, coset_of};

/// Largest degree accepted by exponent sweeps.
pub const MAX_SWEEP_DEGREE: u32 = 14;
/// Largest degree swept over every exponent by default.
pub const FULL_SWEEP_DEGREE: u32 = 10;

/// The vectorial functions whose components are analysed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Vectorial {
    /// x^d
    Monomial { d: u64 },
    /// x^(2^i) (x + x^(2^k))
    PottBinomial { i: u32 },
}

impl Vectorial {
    pub fn table(&self, ctx: &FieldCtx) -> Result<Vec<Elem>> {
        match *self {
            Vectorial::Monomial { d } => {
                check_exponent(ctx, d)?;
                Ok(power_table(ctx, d))
            }
            Vectorial::PottBinomial { i } => pott_binomial(ctx, i),
        }
    }
}

impl fmt::Display for Vectorial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vectorial::Monomial { d } => write!(f, "x^{d}"),
            Vectorial::PottBinomial { i } => write!(f, "x^(2^{i})(x + x^(2^k))"),
        }
    }
}

/// How the α range is covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaScan {
    /// One Walsh transform per α.
    #[default]
    Exhaustive,
    /// For x^d, Tr(α (βx)^d) = Tr(α β^d x^d) and x ↦ βx preserves bentness,
    /// so bentness is constant on cosets of the d-th powers. One Walsh
    /// transform per coset, gcd(d, 2^n − 1) in total. Other functions fall
    /// back to the exhaustive scan.
    ClassReduced,
}

/// How the exponent range of a sweep is covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// Every 0 < d < 2^n − 1.
    Full,
    /// One exponent per cyclotomic coset; the others reuse its report since
    /// Tr(α x^(2d)) = Tr(√α x^d)^2 and S_F is closed under squaring.
    CosetReduced,
}

impl SweepMode {
    pub fn default_for(n: u32) -> Self {
        if n <= FULL_SWEEP_DEGREE {
            SweepMode::Full
        } else {
            SweepMode::CosetReduced
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BentComponentReport {
    pub n: u32,
    pub k: u32,
    pub function: Vectorial,
    /// α with a non-bent component, ascending; includes 0.
    pub s_f: Vec<Elem>,
    pub bent_count: u64,
    /// S_F is closed under addition.
    pub is_linear: bool,
    /// S_F is exactly GF(2^k).
    pub is_subfield_k: bool,
    /// bent_count = 2^(2k) − 2^k.
    pub is_maximal: bool,
}

impl BentComponentReport {
    fn from_non_bent(ctx: &FieldCtx, function: Vectorial, s_f: Vec<Elem>) -> Self {
        let n = ctx.n();
        let k = n / 2;
        let size = ctx.size() as u64;
        let bent_count = size - s_f.len() as u64;
        let is_linear = is_subspace(&s_f);
        let is_subfield_k =
            s_f.len() == 1 << k && s_f.iter().all(|&a| ctx.in_subfield(k, a));
        BentComponentReport {
            n,
            k,
            function,
            bent_count,
            is_linear,
            is_subfield_k,
            is_maximal: bent_count == max_bent_components(n),
            s_f,
        }
    }

    pub fn s_f_size(&self) -> usize {
        self.s_f.len()
    }
}

/// 2^(2k) − 2^k for n = 2k.
pub fn max_bent_components(n: u32) -> u64 {
    let k = n / 2;
    (1u64 << n) - (1u64 << k)
}

fn check_even(n: u32) -> Result<()> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "bent components need an even degree, got {n}"
        )));
    }
    Ok(())
}

fn check_exponent(ctx: &FieldCtx, d: u64) -> Result<()> {
    let g = ctx.group_order();
    if d == 0 || d >= g {
        return Err(Error::InvalidParameter(format!(
            "exponent {d} outside 0 < d < {g}"
        )));
    }
    Ok(())
}

/// Whether a set containing 0 is closed under XOR: it is iff its size equals
/// the size of its span.
fn is_subspace(set: &[Elem]) -> bool {
    if !set.contains(&0) {
        return false;
    }
    let mut basis: Vec<Elem> = Vec::new();
    for &v in set {
        let r = basis.iter().fold(v, |acc, &b| acc.min(acc ^ b));
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    set.len() == 1 << basis.len()
}

/// Reusable buffer for repeated component bentness checks.
struct ComponentTester<'a> {
    ctx: &'a FieldCtx,
    table: &'a [Elem],
    buf: Vec<i32>,
    half: i32,
}

impl<'a> ComponentTester<'a> {
    fn new(ctx: &'a FieldCtx, table: &'a [Elem]) -> Self {
        ComponentTester {
            ctx,
            table,
            buf: vec![0; ctx.size()],
            half: 1 << (ctx.n() / 2),
        }
    }

    fn is_bent(&mut self, alpha: Elem) -> bool {
        if alpha == 0 {
            return false;
        }
        for (slot, &y) in self.buf.iter_mut().zip(self.table) {
            *slot = 1 - 2 * i32::from(self.ctx.trace(self.ctx.mul(alpha, y)));
        }
        fwht(&mut self.buf);
        self.buf.iter().all(|v| v.abs() == self.half)
    }
}

/// Exhaustive bent-component analysis: one Walsh transform per α.
pub fn bent_components(ctx: &FieldCtx, function: Vectorial) -> Result<BentComponentReport> {
    bent_components_with(ctx, function, AlphaScan::Exhaustive)
}

pub fn bent_components_with(
    ctx: &FieldCtx,
    function: Vectorial,
    scan: AlphaScan,
) -> Result<BentComponentReport> {
    check_even(ctx.n())?;
    let table = function.table(ctx)?;
    let s_f = match (scan, function) {
        (AlphaScan::ClassReduced, Vectorial::Monomial { d }) => {
            let bent = bent_classes(ctx, d, &table);
            let e = bent.len() as u32;
            (0..ctx.size() as Elem)
                .filter(|&a| match ctx.log(a) {
                    None => true,
                    Some(l) => !bent[(l % e) as usize],
                })
                .collect()
        }
        _ => {
            let mut tester = ComponentTester::new(ctx, &table);
            (0..ctx.size() as Elem).filter(|&a| !tester.is_bent(a)).collect()
        }
    };
    Ok(BentComponentReport::from_non_bent(ctx, function, s_f))
}

/// Bentness of Tr(g^c x^d) for each class c of log α modulo gcd(d, 2^n − 1).
pub(crate) fn bent_classes(ctx: &FieldCtx, d: u64, table: &[Elem]) -> Vec<bool> {
    let e = gcd(d, ctx.group_order());
    let mut tester = ComponentTester::new(ctx, table);
    (0..e).map(|c| tester.is_bent(ctx.exp(c))).collect()
}

/// Every nonzero α giving a bent Tr(α x^d), ascending.
pub fn bent_alphas(ctx: &FieldCtx, d: u64) -> Result<Vec<Elem>> {
    check_even(ctx.n())?;
    check_exponent(ctx, d)?;
    let table = power_table(ctx, d);
    let bent = bent_classes(ctx, d, &table);
    let e = bent.len() as u32;
    Ok((1..ctx.size() as Elem)
        .filter(|&a| bent[(ctx.log(a).expect("nonzero") % e) as usize])
        .collect())
}

/// A structural property of S_F that a report fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Violation {
    /// 0 must always be in S_F.
    MissingZero,
    /// |S_F| ≥ 2^k.
    BelowLowerBound { size: usize, bound: usize },
    /// α ∈ S_F implies α² ∈ S_F.
    NotClosedUnderSquaring { alpha: Elem },
    /// |S_F| = 2^k forces S_F to be a k-dimensional subspace.
    NotLinearAtBound,
    /// |S_F| = 2^k forces S_F = GF(2^k).
    NotSubfieldAtBound,
    /// A maximal monomial x^d needs (2^k + 1) | d.
    MaximalWithoutDivisor { d: u64 },
    /// A stored flag disagrees with the stored set.
    InconsistentFlag { flag: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingZero => write!(f, "non-bent set lacks 0"),
            Violation::BelowLowerBound { size, bound } => write!(
                f,
                "lower bound: non-bent set has {size} elements, fewer than 2^k = {bound}"
            ),
            Violation::NotClosedUnderSquaring { alpha } => write!(
                f,
                "squaring closure: {alpha:#x} is non-bent but its square is bent"
            ),
            Violation::NotLinearAtBound => {
                write!(f, "linearity at the bound: non-bent set of size 2^k is not a subspace")
            }
            Violation::NotSubfieldAtBound => {
                write!(f, "subfield at the bound: non-bent set of size 2^k is not GF(2^k)")
            }
            Violation::MaximalWithoutDivisor { d } => {
                write!(f, "divisibility: x^{d} is maximal but 2^k + 1 does not divide {d}")
            }
            Violation::InconsistentFlag { flag } => {
                write!(f, "flag `{flag}` disagrees with the non-bent set")
            }
        }
    }
}

/// Checks a report against the known structure of S_F. Empty means
/// every clause holds.
pub fn verify_structure(ctx: &FieldCtx, report: &BentComponentReport) -> Vec<Violation> {
    let mut out = Vec::new();
    let k = report.k;
    let bound = 1usize << k;
    let s = &report.s_f;
    let member = |a: Elem| s.binary_search(&a).is_ok();

    if !member(0) {
        out.push(Violation::MissingZero);
    }
    if s.len() < bound {
        out.push(Violation::BelowLowerBound {
            size: s.len(),
            bound,
        });
    }
    if let Some(&alpha) = s.iter().find(|&&a| !member(ctx.square(a))) {
        out.push(Violation::NotClosedUnderSquaring { alpha });
    }
    let linear = is_subspace(s);
    let subfield = s.len() == bound && s.iter().all(|&a| ctx.in_subfield(k, a));
    if s.len() == bound {
        if !linear {
            out.push(Violation::NotLinearAtBound);
        }
        if !subfield {
            out.push(Violation::NotSubfieldAtBound);
        }
    }
    let bent_count = ctx.size() as u64 - s.len() as u64;
    let maximal = bent_count == max_bent_components(report.n);
    if let Vectorial::Monomial { d } = report.function {
        if maximal && d % ((1u64 << k) + 1) != 0 {
            out.push(Violation::MaximalWithoutDivisor { d });
        }
    }
    for (flag, stored, actual) in [
        ("bent_count", report.bent_count == bent_count, true),
        ("is_linear", report.is_linear, linear),
        ("is_subfield_k", report.is_subfield_k, subfield),
        ("is_maximal", report.is_maximal, maximal),
    ] {
        if stored != actual {
            out.push(Violation::InconsistentFlag {
                flag: flag.to_string(),
            });
        }
    }
    out
}

fn check_sweep(ctx: &FieldCtx) -> Result<()> {
    check_even(ctx.n())?;
    if ctx.n() > MAX_SWEEP_DEGREE {
        return Err(Error::SweepTooLarge {
            n: ctx.n(),
            limit: MAX_SWEEP_DEGREE,
        });
    }
    Ok(())
}

/// Reports for every monomial x^d, 0 < d < 2^n − 1, ordered by d.
pub fn sweep_monomials(
    ctx: &FieldCtx,
    mode: SweepMode,
    scan: AlphaScan,
) -> Result<Vec<BentComponentReport>> {
    check_sweep(ctx)?;
    let g = ctx.group_order();
    let exponents: Vec<u64> = match mode {
        SweepMode::Full => (1..g).collect(),
        SweepMode::CosetReduced => (1..g).filter(|&d| coset_leader(d, ctx.n()) == d).collect(),
    };
    let reports: Vec<BentComponentReport> = exponents
        .into_par_iter()
        .map(|d| bent_components_with(ctx, Vectorial::Monomial { d }, scan))
        .collect::<Result<_>>()?;
    if mode == SweepMode::Full {
        return Ok(reports);
    }
    let mut expanded: Vec<BentComponentReport> = reports
        .into_iter()
        .flat_map(|r| {
            let Vectorial::Monomial { d } = r.function else {
                unreachable!("sweeps only build monomials")
            };
            coset_of(d, ctx.n())
                .into_iter()
                .map(move |m| BentComponentReport {
                    function: Vectorial::Monomial { d: m },
                    ..r.clone()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    expanded.sort_by_key(|r| match r.function {
        Vectorial::Monomial { d } => d,
        Vectorial::PottBinomial { .. } => unreachable!(),
    });
    Ok(expanded)
}

/// Exponents d whose monomial x^d has the maximal number of bent components,
/// ascending. The expected answer is the cyclotomic coset of 2^k + 1.
pub fn open_problem_scan(ctx: &FieldCtx) -> Result<Vec<u64>> {
    open_problem_scan_with(ctx, SweepMode::default_for(ctx.n()))
}

pub fn open_problem_scan_with(ctx: &FieldCtx, mode: SweepMode) -> Result<Vec<u64>> {
    let scan = if ctx.n() <= FULL_SWEEP_DEGREE {
        AlphaScan::Exhaustive
    } else {
        AlphaScan::ClassReduced
    };
    Ok(sweep_monomials(ctx, mode, scan)?
        .into_iter()
        .filter(|r| r.is_maximal)
        .filter_map(|r| match r.function {
            Vectorial::Monomial { d } => Some(d),
            Vectorial::PottBinomial { .. } => None,
        })
        .collect())
}

/// One exponent d = (2^k + 1) s, 0 < s < 2^k − 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorCase {
    pub n: u32,
    pub d: u64,
    pub s: u64,
    /// gcd(s, 2^k − 1) = 1.
    pub coprime: bool,
    /// s is a power of 2.
    pub s_power_of_two: bool,
    pub bent_count: u64,
    /// Whether the case meets its expected outcome: no bent component at all
    /// for coprime s that is not a power of 2, fewer than the maximum when
    /// gcd(s, 2^k − 1) > 1, and the maximum for s a power of 2.
    pub holds: bool,
}

/// Walks all multiples d = (2^k + 1) s and records their bent-component
/// counts against the expected outcome for each kind of s.
pub fn divisor_cases(ctx: &FieldCtx) -> Result<Vec<DivisorCase>> {
    check_sweep(ctx)?;
    let n = ctx.n();
    let k = n / 2;
    let q = (1u64 << k) + 1;
    let m = (1u64 << k) - 1;
    (1..m)
        .into_par_iter()
        .map(|s| {
            let d = q * s;
            let report = bent_components_with(ctx, Vectorial::Monomial { d }, AlphaScan::ClassReduced)?;
            let coprime = gcd(s, m) == 1;
            let s_power_of_two = s.is_power_of_two();
            let holds = match (coprime, s_power_of_two) {
                (true, true) => report.is_maximal,
                (true, false) => report.bent_count == 0,
                (false, _) => report.bent_count < max_bent_components(n),
            };
            Ok(DivisorCase {
                n,
                d,
                s,
                coprime,
                s_power_of_two,
                bent_count: report.bent_count,
                holds,
            })
        })
        .collect()
}
