//! Degree sweeps, factorization reports, gcd scans and Fermat-quotient
//! distributions.

pub mod persist;
pub mod reproduce;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carlitz::{CarlitzCache, Perturbation, FMOD_BOUND};
use crate::congruence::{self, FRoute, Multiplicity};
use crate::deriv;
use crate::error::{Error, Result};
use crate::factor::{self, Factorization, FactorizationDoc, PartialOptions};
use crate::gf::{Field, FieldElement};
use crate::irr::{self, PrimeContext};
use crate::poly::Poly;

/// How Wilson verdicts in a sweep were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WilsonMethod {
    /// All fifteen conditions, unanimity enforced.
    Suite,
    /// `F_d ≡ -1 mod ℘^2` alone.
    Definition,
    /// `℘'' = 0`, with the definition skipped for cost.
    SecondDerivative,
}

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    pub route: FRoute,
    /// Run the full Wilson suite when `p > 2`.
    pub suites: bool,
    pub multiplicities: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            route: FRoute::Quotient,
            suites: true,
            multiplicities: true,
        }
    }
}

/// Multiplicities of a special prime in `L_{d-1} - c` and
/// `D_{d-1} + (-1)^d c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationRow {
    pub prime: String,
    pub c: u64,
    pub l: Multiplicity,
    pub d: Multiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeMultiplicity {
    pub prime: String,
    pub multiplicity: Multiplicity,
}

/// Everything a sweep learns about the primes of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub field: String,
    pub q: u64,
    pub p: u64,
    pub d: usize,
    pub prime_count: u64,
    pub wilson_method: WilsonMethod,
    pub wilson_primes: Vec<String>,
    /// Keyed by the code of `c`; every `c ∈ F_q^*` is present.
    pub special_primes: BTreeMap<u64, Vec<String>>,
    pub perturbation_multiplicities: Vec<PerturbationRow>,
    /// Multiplicity of each Wilson prime in `-L'_{d-1}`.
    pub wilson_sum_multiplicities: Vec<PrimeMultiplicity>,
    pub suite_agreement: bool,
}

impl SurveyRecord {
    pub fn special_count(&self) -> usize {
        self.special_primes.values().map(Vec::len).sum()
    }
}

struct PrimeOutcome {
    wilson: bool,
    agreement: bool,
    special: Option<u64>,
}

fn sign(field: &Field, d: usize) -> u64 {
    if d.is_multiple_of(2) {
        field.one().code()
    } else {
        field.neg(1)
    }
}

/// `℘' = (-1)^(d-1) c`, solved for `c`.
fn special_constant(ctx: &PrimeContext) -> Option<u64> {
    let der = ctx.prime().derivative(1);
    if der.is_zero() || !der.is_constant() {
        return None;
    }
    let field = ctx.base_field();
    Some(field.mul(sign(field, ctx.degree() - 1), der.coeff(0)))
}

fn examine(ctx: &PrimeContext, method: WilsonMethod, route: FRoute) -> Result<PrimeOutcome> {
    let wp = ctx.prime();
    let (wilson, mut agreement) = match method {
        WilsonMethod::Suite => {
            let suite = congruence::wilson_suite(ctx, route)?;
            let by_base = congruence::wieferich_suite(ctx, &wp.derivative(1))?.holds();
            (
                suite.holds(),
                suite.is_unanimous() && by_base == suite.holds(),
            )
        }
        WilsonMethod::Definition => (congruence::is_wilson(ctx, route)?, true),
        WilsonMethod::SecondDerivative => (wp.derivative(2).is_zero(), true),
    };
    if ctx.base_field().characteristic() > 2 {
        agreement &= congruence::coefficient_characterization(wp) == wilson;
    }
    let special = special_constant(ctx);
    if let Some(c) = special {
        let c_el = ctx.base_field().element(c)?;
        if !congruence::is_special_wilson(ctx, &c_el)? {
            return Err(Error::EquivalenceViolation {
                prime: wp.to_string(),
                detail: "constant derivative not recognized as special".into(),
            });
        }
    }
    Ok(PrimeOutcome {
        wilson,
        agreement,
        special,
    })
}

fn power_cap(field: &Field) -> (u32, u32) {
    let cap = field.characteristic() as u32 + 2;
    (cap, cap + 1)
}

fn perturbation_multiplicity(
    cache: &CarlitzCache,
    kind: Perturbation,
    ctx: &PrimeContext,
    c: &FieldElement,
) -> Result<Multiplicity> {
    let (cap, known) = power_cap(ctx.base_field());
    let m = ctx.prime().pow(known as u64);
    let r = cache.perturbation_mod(kind, ctx.degree(), c, &m)?;
    Ok(congruence::valuation_of_residue(
        &r,
        ctx.prime(),
        known,
        cap,
    ))
}

/// `ord_℘(-L'_{d-1})`, from `L_{d-1}` modulo one extra power of `℘`.
fn wilson_sum_multiplicity(cache: &CarlitzCache, ctx: &PrimeContext) -> Result<Multiplicity> {
    let (cap, known) = power_cap(ctx.base_field());
    let wp = ctx.prime();
    let m = wp.pow(known as u64);
    let r = cache
        .l_mod(ctx.degree() - 1, &wp.pow(known as u64 + 1))?
        .derivative(1)
        .neg()
        .rem(&m);
    Ok(congruence::valuation_of_residue(&r, wp, known, cap))
}

fn violation(msg: String) -> Error {
    Error::TheoremViolation(msg)
}

/// Sweeps every monic prime of degree `d`: Wilson verdicts, special primes
/// per `c`, and multiplicities in the Carlitz perturbations.
pub fn survey_degree(field: &Field, d: usize, opts: &SurveyOptions) -> Result<SurveyRecord> {
    let p = field.characteristic();
    let q = field.order();
    let primes = irr::monic_irreducibles(field, d)?;
    let expected = irr::count_irreducibles(field, d)?;
    if primes.len() as u128 != expected {
        return Err(violation(format!(
            "enumerated {} primes of degree {d}, expected {expected}",
            primes.len()
        )));
    }
    let literal_too_big = opts.route == FRoute::Literal
        && (q as u128)
            .checked_pow(d as u32)
            .is_none_or(|n| n > FMOD_BOUND);
    let method = if literal_too_big && p > 2 {
        WilsonMethod::SecondDerivative
    } else if opts.suites && p > 2 {
        WilsonMethod::Suite
    } else {
        WilsonMethod::Definition
    };
    let outcomes: Vec<PrimeOutcome> = primes
        .par_iter()
        .map(|ctx| examine(ctx, method, opts.route))
        .collect::<Result<_>>()?;

    let mut wilson = Vec::new();
    let mut special: BTreeMap<u64, Vec<&PrimeContext>> = (1..q).map(|c| (c, Vec::new())).collect();
    for (ctx, o) in primes.iter().zip(&outcomes) {
        if o.wilson {
            wilson.push(ctx);
        }
        if let Some(c) = o.special {
            special.get_mut(&c).expect("nonzero code").push(ctx);
        }
    }
    let any_special = special.values().any(|v| !v.is_empty());
    if any_special && !d.is_multiple_of(p as usize) && d != 1 {
        return Err(violation(format!(
            "special primes of degree {d} with p = {p} not dividing d"
        )));
    }
    if p > 2
        && !wilson.is_empty()
        && !d.is_multiple_of(p as usize)
        && !(d - 1).is_multiple_of(p as usize)
    {
        return Err(violation(format!(
            "Wilson primes of degree {d} although p = {p} divides neither d nor d-1"
        )));
    }

    let cache = CarlitzCache::new(field);
    let mut rows = Vec::new();
    let mut sums = Vec::new();
    if opts.multiplicities && d >= 2 {
        let jobs: Vec<(u64, &PrimeContext)> = special
            .iter()
            .flat_map(|(&c, v)| v.iter().map(move |ctx| (c, *ctx)))
            .collect();
        rows = jobs
            .par_iter()
            .map(|&(c, ctx)| {
                let c_el = field.element(c)?;
                let l = perturbation_multiplicity(&cache, Perturbation::LMinusC, ctx, &c_el)?;
                let dm = perturbation_multiplicity(&cache, Perturbation::DPlusSignC, ctx, &c_el)?;
                if !l.capped && (l.value as u64) < p - 1 {
                    return Err(violation(format!(
                        "{} divides L_{} - c only to power {}",
                        ctx.prime(),
                        d - 1,
                        l.value
                    )));
                }
                if dm.capped || dm.value != 1 {
                    return Err(violation(format!(
                        "{} divides D_{} + (-1)^d c to power {dm}",
                        ctx.prime(),
                        d - 1
                    )));
                }
                Ok(PerturbationRow {
                    prime: ctx.prime().to_string(),
                    c,
                    l,
                    d: dm,
                })
            })
            .collect::<Result<_>>()?;
        if p > 2 {
            sums = wilson
                .par_iter()
                .map(|ctx| {
                    let m = wilson_sum_multiplicity(&cache, ctx)?;
                    if !m.capped && (m.value as u64) < p - 2 {
                        return Err(violation(format!(
                            "Wilson prime {} divides -L'_{} only to power {}",
                            ctx.prime(),
                            d - 1,
                            m.value
                        )));
                    }
                    Ok(PrimeMultiplicity {
                        prime: ctx.prime().to_string(),
                        multiplicity: m,
                    })
                })
                .collect::<Result<_>>()?;
        }
    }

    Ok(SurveyRecord {
        field: field.descriptor(),
        q,
        p,
        d,
        prime_count: primes.len() as u64,
        wilson_method: method,
        wilson_primes: wilson.iter().map(|c| c.prime().to_string()).collect(),
        special_primes: special
            .into_iter()
            .map(|(c, v)| (c, v.iter().map(|c| c.prime().to_string()).collect()))
            .collect(),
        perturbation_multiplicities: rows,
        wilson_sum_multiplicities: sums,
        suite_agreement: outcomes.iter().all(|o| o.agreement),
    })
}

/// Monic primes of degree `d` with `℘' = (-1)^(d-1) c`, built directly as
/// `a^p + (-1)^(d-1) c t`, in enumeration order.
pub fn special_primes(field: &Field, d: usize, c: &FieldElement) -> Result<Vec<Poly>> {
    if c.field() != field {
        return Err(Error::FieldMismatch);
    }
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let s = field.mul(sign(field, d - 1), c.code());
    let p = field.characteristic() as usize;
    if d == 1 {
        if s != field.one().code() {
            return Ok(Vec::new());
        }
        return Ok((0..field.order())
            .map(|b| irr::candidate(field, 1, b))
            .collect());
    }
    if !d.is_multiple_of(p) {
        return Ok(Vec::new());
    }
    let e = d / p;
    let st = Poly::monomial(field, s, 1);
    let n = irr::candidate_count(field, e)?;
    let mut out: Vec<Poly> = (0..n)
        .into_par_iter()
        .filter_map(|idx| {
            let f = irr::candidate(field, e, idx).pow(p as u64).add(&st);
            irr::is_irreducible(&f).then_some(f)
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// `(degree, multiplicity, count)` rows of a factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProfileRow {
    pub degree: usize,
    pub multiplicity: u32,
    pub count: usize,
}

pub fn profile_rows(f: &Factorization) -> Vec<ProfileRow> {
    f.degree_profile()
        .into_iter()
        .map(|((degree, multiplicity), count)| ProfileRow {
            degree,
            multiplicity,
            count,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorMultiplicity {
    pub prime: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem5Report {
    pub field: String,
    pub d: usize,
    pub degree: usize,
    pub wilson_primes: Vec<String>,
    pub degree_d_factors: Vec<FactorMultiplicity>,
    pub profile: Vec<ProfileRow>,
    pub factorization: FactorizationDoc,
}

/// Factors `-L'_{d-1}` and checks that its degree-`d` prime factors are
/// exactly the Wilson primes of degree `d`, each to power at least `p - 2`.
pub fn theorem5_report(field: &Field, d: usize, seed: u64) -> Result<Theorem5Report> {
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::InvalidArgument(
            "the Wilson sum criterion needs p > 2".into(),
        ));
    }
    let cache = CarlitzCache::new(field);
    let poly = cache.wilson_sum_poly(d)?;
    let fact = factor::factorize(&poly, seed)?;
    let primes = irr::monic_irreducibles(field, d)?;
    let wilson: Vec<Poly> = primes
        .par_iter()
        .map(|ctx| {
            congruence::is_wilson(ctx, FRoute::Quotient).map(|w| w.then(|| ctx.prime().clone()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let in_fact: Vec<&(Poly, u32)> = fact.of_degree(d);
    let found: BTreeSet<String> = in_fact.iter().map(|(f, _)| f.to_string()).collect();
    let expected: BTreeSet<String> = wilson.iter().map(Poly::to_string).collect();
    if found != expected {
        return Err(Error::EquivalenceViolation {
            prime: format!("degree {d}"),
            detail: format!(
                "degree-{d} factors of -L'_{} differ from the Wilson primes: {} vs {}",
                d - 1,
                found.len(),
                expected.len()
            ),
        });
    }
    if let Some((f, m)) = in_fact.iter().find(|(_, m)| (*m as u64) < p - 2) {
        return Err(violation(format!(
            "Wilson prime {f} divides -L'_{} only to power {m}",
            d - 1
        )));
    }
    Ok(Theorem5Report {
        field: field.descriptor(),
        d,
        degree: poly.deg().unwrap_or(0),
        wilson_primes: wilson.iter().map(Poly::to_string).collect(),
        degree_d_factors: in_fact
            .iter()
            .map(|(f, m)| FactorMultiplicity {
                prime: f.to_string(),
                multiplicity: *m,
            })
            .collect(),
        profile: profile_rows(&fact),
        factorization: fact.to_doc(),
    })
}

/// How much of `L_{d-1} - c` [`theorem7_report`] factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem7Mode {
    /// Only the degree-`d` factors, through `gcd` with `[d]`.
    Divisors,
    Full,
    /// Trial division up to the given degree.
    Partial(usize),
}

impl std::fmt::Display for Theorem7Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Theorem7Mode::Divisors => write!(f, "divisors"),
            Theorem7Mode::Full => write!(f, "full"),
            Theorem7Mode::Partial(k) => write!(f, "partial:{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFactor {
    pub prime: String,
    pub l: Multiplicity,
    pub d: Multiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem7Report {
    pub field: String,
    pub d: usize,
    pub c: u64,
    pub mode: String,
    pub l_degree: u128,
    pub special_primes: Vec<String>,
    pub factors: Vec<SpecialFactor>,
    /// Whether every `L` multiplicity equals `p - 1` exactly.
    pub l_multiplicity_exact: bool,
    pub profile: Option<Vec<ProfileRow>>,
    pub factorization: Option<FactorizationDoc>,
    pub cofactor_degree: Option<usize>,
    pub degree_sum_matches: Option<bool>,
}

fn degree_d_divisors(
    cache: &CarlitzCache,
    kind: Perturbation,
    d: usize,
    c: &FieldElement,
    seed: u64,
) -> Result<Vec<Poly>> {
    let b = cache.bracket(d)?;
    let g = cache.perturbation_mod_bracket(kind, d, c)?.gcd(&b);
    if g.is_one() {
        return Ok(Vec::new());
    }
    let fact = factor::factorize(&g, seed)?;
    Ok(fact
        .of_degree(d)
        .into_iter()
        .map(|(f, _)| f.clone())
        .collect())
}

/// Checks that the degree-`d` primes dividing `L_{d-1} - c` and
/// `D_{d-1} + (-1)^d c` are exactly those with `℘' = (-1)^(d-1) c`, with
/// `L`-multiplicity at least `p - 1` and `D`-multiplicity one.
pub fn theorem7_report(
    field: &Field,
    d: usize,
    c: &FieldElement,
    mode: Theorem7Mode,
    seed: u64,
) -> Result<Theorem7Report> {
    let p = field.characteristic();
    let cache = CarlitzCache::new(field);
    let special = special_primes(field, d, c)?;
    let l_set = degree_d_divisors(&cache, Perturbation::LMinusC, d, c, seed)?;
    let d_set = degree_d_divisors(&cache, Perturbation::DPlusSignC, d, c, seed)?;
    for (name, set) in [("L", &l_set), ("D", &d_set)] {
        if *set != special {
            return Err(Error::EquivalenceViolation {
                prime: format!("degree {d}"),
                detail: format!(
                    "{name} perturbation has {} degree-{d} prime factors, {} special primes",
                    set.len(),
                    special.len()
                ),
            });
        }
    }
    let mut factors = Vec::new();
    for wp in &special {
        let ctx = PrimeContext::new(wp.clone())?;
        let l = perturbation_multiplicity(&cache, Perturbation::LMinusC, &ctx, c)?;
        let dm = perturbation_multiplicity(&cache, Perturbation::DPlusSignC, &ctx, c)?;
        if !l.capped && (l.value as u64) < p - 1 {
            return Err(violation(format!(
                "{wp} divides L_{} - c only to power {}",
                d - 1,
                l.value
            )));
        }
        if dm.capped || dm.value != 1 {
            return Err(violation(format!(
                "{wp} divides D_{} + (-1)^d c to power {dm}",
                d - 1
            )));
        }
        factors.push(SpecialFactor {
            prime: wp.to_string(),
            l,
            d: dm,
        });
    }
    let l_degree = cache.l_degree(d - 1);
    let mut report = Theorem7Report {
        field: field.descriptor(),
        d,
        c: c.code(),
        mode: mode.to_string(),
        l_degree,
        special_primes: special.iter().map(Poly::to_string).collect(),
        l_multiplicity_exact: factors
            .iter()
            .all(|f| !f.l.capped && f.l.value as u64 == p - 1),
        factors,
        profile: None,
        factorization: None,
        cofactor_degree: None,
        degree_sum_matches: None,
    };
    let fact = match mode {
        Theorem7Mode::Divisors => return Ok(report),
        Theorem7Mode::Full => {
            factor::factorize(&cache.perturbation(Perturbation::LMinusC, d, c)?, seed)?
        }
        Theorem7Mode::Partial(k) => {
            let opts = PartialOptions {
                seed,
                ..PartialOptions::default()
            };
            factor::trial_division(&cache.perturbation(Perturbation::LMinusC, d, c)?, k, &opts)?
        }
    };
    let covers_d = match mode {
        Theorem7Mode::Partial(k) => k >= d,
        _ => true,
    };
    if covers_d {
        let from_fact: Vec<(String, u32)> = fact
            .of_degree(d)
            .iter()
            .map(|(f, m)| (f.to_string(), *m))
            .collect();
        let from_mods: Vec<(String, Option<u32>)> = report
            .factors
            .iter()
            .map(|f| (f.prime.clone(), (!f.l.capped).then_some(f.l.value)))
            .collect();
        let agree = from_fact.len() == from_mods.len()
            && from_fact
                .iter()
                .zip(&from_mods)
                .all(|((a, m), (b, n))| a == b && n.is_none_or(|n| n == *m));
        if !agree {
            return Err(Error::EquivalenceViolation {
                prime: format!("degree {d}"),
                detail: "factorization disagrees with modular multiplicities".into(),
            });
        }
    }
    let total: u128 = fact
        .factors()
        .iter()
        .map(|(f, m)| f.deg().unwrap_or(0) as u128 * *m as u128)
        .sum::<u128>()
        + fact.cofactor().and_then(Poly::deg).unwrap_or(0) as u128;
    report.degree_sum_matches = Some(total == l_degree);
    report.cofactor_degree = fact.cofactor().and_then(Poly::deg);
    report.profile = Some(profile_rows(&fact));
    report.factorization = Some(fact.to_doc());
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    BorisovGcd,
    AltGcdConjecture,
}

/// A nontrivial gcd met by a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanFinding {
    pub kind: ScanKind,
    pub q: u64,
    pub d: usize,
    /// The constant for the `L_{d-1} + c` scan.
    pub c: Option<u64>,
    pub gcd: Poly,
    pub violates_expectation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFindingDoc {
    pub kind: ScanKind,
    pub field: String,
    pub q: u64,
    pub d: usize,
    pub c: Option<u64>,
    pub gcd: String,
    pub gcd_degree: usize,
    pub violates_expectation: bool,
}

impl ScanFinding {
    pub fn to_doc(&self) -> ScanFindingDoc {
        ScanFindingDoc {
            kind: self.kind,
            field: self.gcd.field().descriptor(),
            q: self.q,
            d: self.d,
            c: self.c,
            gcd: self.gcd.to_string(),
            gcd_degree: self.gcd.deg().unwrap_or(0),
            violates_expectation: self.violates_expectation,
        }
    }
}

fn checked_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    let g = a.gcd(b);
    if !a.rem(&g).is_zero() || !b.rem(&g).is_zero() {
        return Err(violation(format!("gcd {g} does not divide its operands")));
    }
    Ok(g)
}

/// `gcd(L_{d-1} + c, [d])` for `2 <= d <= d_max` and every `c ≠ 0`; a
/// nontrivial gcd with `p ∤ d` raises `TheoremViolation`.
pub fn borisov_scan(field: &Field, d_max: usize) -> Result<Vec<ScanFinding>> {
    if d_max < 2 {
        return Err(Error::InvalidArgument("d_max must be at least 2".into()));
    }
    let p = field.characteristic() as usize;
    let q = field.order();
    let cache = CarlitzCache::new(field);
    let mut out = Vec::new();
    for d in 2..=d_max {
        let b = cache.bracket(d)?;
        let l = cache.l_mod_bracket(d - 1, d)?;
        let found: Vec<Option<ScanFinding>> = (1..q)
            .into_par_iter()
            .map(|c| {
                let g = checked_gcd(&l.add(&Poly::constant(field, c)), &b)?;
                if g.is_one() {
                    return Ok(None);
                }
                let violates = d % p != 0;
                if violates {
                    return Err(violation(format!(
                        "gcd(L_{} + {c}, [{d}]) = {g} with p not dividing d",
                        d - 1
                    )));
                }
                Ok(Some(ScanFinding {
                    kind: ScanKind::BorisovGcd,
                    q,
                    d,
                    c: Some(c),
                    gcd: g,
                    violates_expectation: violates,
                }))
            })
            .collect::<Result<_>>()?;
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

/// `S_d = Σ_{j=0}^{d-1} (-1)^j [d-1][d-2]...[d-j]` reduced modulo `[d]`.
pub fn alternating_sum_mod_bracket(cache: &CarlitzCache, d: usize) -> Result<Poly> {
    let b = cache.bracket(d)?;
    let field = cache.field();
    let mut term = Poly::one(field);
    let mut sum = term.clone();
    for j in 1..d {
        // [d-j] already has degree below [d]
        term = term.mul(&cache.bracket(d - j)?).rem(&b);
        sum = if j % 2 == 0 {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
    }
    Ok(sum.rem(&b))
}

/// Nontrivial `gcd(S_d, [d])` for `2 <= d <= d_max`. Findings with
/// `p ∤ d` would be counterexamples to an open conjecture; they are
/// flagged, never raised.
pub fn alt_gcd_conjecture_scan(field: &Field, d_max: usize) -> Result<Vec<ScanFinding>> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidArgument(
            "the alternating-sum scan needs p > 2".into(),
        ));
    }
    if d_max < 2 {
        return Err(Error::InvalidArgument("d_max must be at least 2".into()));
    }
    let p = field.characteristic() as usize;
    let cache = CarlitzCache::new(field);
    let found: Vec<Option<ScanFinding>> = (2..=d_max)
        .into_par_iter()
        .map(|d| {
            let g = checked_gcd(&alternating_sum_mod_bracket(&cache, d)?, &cache.bracket(d)?)?;
            Ok((!g.is_one()).then(|| ScanFinding {
                kind: ScanKind::AltGcdConjecture,
                q: field.order(),
                d,
                c: None,
                gcd: g,
                violates_expectation: d % p != 0,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Histogram of `Q_℘(a)(θ)` over `F_{q^d}`, indexed by element code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distribution {
    pub field: String,
    pub prime: String,
    pub degree_bound: usize,
    pub total: u64,
    pub counts: Vec<u64>,
}

/// Tallies `Q_℘(a)(θ)` over every monic `a` with `deg a < degree_bound`.
pub fn fq_distribution(
    ctx: &PrimeContext,
    degree_bound: usize,
    budget: u128,
) -> Result<Distribution> {
    let field = ctx.base_field();
    let q = field.order() as u128;
    let bases: u128 = (0..degree_bound as u32)
        .map(|k| q.checked_pow(k).unwrap_or(u128::MAX))
        .fold(0u128, u128::saturating_add);
    let needed = bases.saturating_mul(ctx.norm() as u128);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let counts = (0..degree_bound)
        .flat_map(|k| (0..q.pow(k as u32) as u64).map(move |idx| (k, idx)))
        .par_bridge()
        .try_fold(
            || vec![0u64; ctx.norm() as usize],
            |mut acc, (k, idx)| {
                let a = irr::candidate(field, k, idx);
                let v = deriv::fermat_quotient_mod(&a, ctx, 1)?.eval(ctx.theta())?;
                acc[v.code() as usize] += 1;
                Ok::<_, Error>(acc)
            },
        )
        .try_reduce(
            || vec![0u64; ctx.norm() as usize],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(Distribution {
        field: field.descriptor(),
        prime: ctx.prime().to_string(),
        degree_bound,
        total: counts.iter().sum(),
        counts,
    })
}
