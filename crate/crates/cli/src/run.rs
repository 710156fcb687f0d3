use std::fmt::Write as _;
use std::fs::File;
use std::io::Write;

use anyhow::{bail, Context, Result};
use fqt_core::carlitz::CarlitzCache;
use fqt_core::congruence::{self, BaseClass, FRoute};
use fqt_core::deriv::DerivReport;
use fqt_core::factor::{self, PartialOptions};
use fqt_core::irr::{self, MonicIrreducibles};
use fqt_core::survey::persist;
use fqt_core::survey::reproduce::{self, profile_text, Case, CaseReport, ReproOptions};
use fqt_core::survey::{self, ScanFinding, SurveyOptions, Theorem7Mode};
use fqt_core::{Factorization, Field, Poly, PrimeContext};
use serde_json::{json, Value};

use crate::args::*;
use crate::Mismatch;

fn poly(field: &Field, text: &str) -> Result<Poly> {
    Poly::parse(field, text).with_context(|| format!("cannot parse polynomial {text:?}"))
}

fn prime(field: &Field, text: &str) -> Result<PrimeContext> {
    Ok(PrimeContext::new(poly(field, text)?)?)
}

fn emit(g: &Global, text: String, value: Value) -> Result<()> {
    let mut body = if g.json {
        serde_json::to_string_pretty(&value)?
    } else {
        text
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &g.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(body.as_bytes()))
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

/// `6`, `2..8` (inclusive) or `2,4,6`.
fn parse_degrees(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let out: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse()?;
        let b: usize = b.trim().trim_start_matches('=').parse()?;
        (a..=b).collect()
    } else {
        s.split(',')
            .map(|x| x.trim().parse())
            .collect::<std::result::Result<_, _>>()?
    };
    if out.is_empty() || out.contains(&0) {
        return Err(fqt_core::Error::InvalidArgument(format!("bad degree list {s:?}")).into());
    }
    Ok(out)
}

fn factorization_text(f: &Factorization) -> String {
    let mut s = String::new();
    if !f.unit().is_one() {
        let _ = writeln!(s, "unit {}", f.unit().code());
    }
    for (p, m) in f.factors() {
        let _ = writeln!(s, "({p})^{m}    deg {}", p.deg().unwrap_or(0));
    }
    if let (Some(c), Some(st)) = (f.cofactor(), f.cofactor_status()) {
        let _ = writeln!(s, "cofactor of degree {} ({st:?})", c.deg().unwrap_or(0));
    }
    s
}

fn findings(g: &Global, found: Vec<ScanFinding>, what: &str) -> Result<()> {
    let docs: Vec<_> = found.iter().map(ScanFinding::to_doc).collect();
    let mut text = format!("{} nontrivial gcd(s) in the {what} scan\n", docs.len());
    for f in &docs {
        let c = f.c.map(|c| format!(", c = {c}")).unwrap_or_default();
        let flag = if f.violates_expectation {
            "  <-- p does not divide d"
        } else {
            ""
        };
        let _ = writeln!(text, "d = {}{c}: gcd of degree {}{flag}", f.d, f.gcd_degree);
    }
    emit(g, text, serde_json::to_value(docs)?)
}

fn case_text(r: &CaseReport) -> String {
    let mut s = format!("case {}\n", r.case);
    for c in &r.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "  {mark} {}: {}", c.name, c.observed);
        if !c.pass {
            let _ = writeln!(s, "       expected {}", c.expected);
        }
    }
    for n in &r.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

pub fn run(cli: &Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Primes {
            action:
                PrimesCmd::List {
                    field,
                    degree,
                    start,
                    limit,
                },
        } => {
            let f = &field.field;
            let it = MonicIrreducibles::starting_at(f, *degree, *start)?;
            let primes: Vec<String> = match limit {
                Some(n) => it.take(*n).map(|c| c.prime().to_string()).collect(),
                None => it.map(|c| c.prime().to_string()).collect(),
            };
            let total = irr::count_irreducibles(f, *degree)?;
            let text = format!(
                "{} of {total} monic primes of degree {degree}\n{}",
                primes.len(),
                primes.join("\n")
            );
            emit(
                g,
                text,
                json!({"field": f.descriptor(), "degree": degree, "total": total.to_string(), "primes": primes}),
            )
        }
        Command::Check {
            action:
                CheckCmd::Wieferich {
                    field,
                    prime: p,
                    base,
                },
        } => {
            let ctx = prime(&field.field, p)?;
            let suite = congruence::wieferich_suite(&ctx, &poly(&field.field, base)?)?;
            let doc = suite.to_doc();
            let mut text = format!(
                "{} is {}{base}-Wieferich\n",
                doc.prime,
                if suite.holds() { "" } else { "not " }
            );
            for (l, v) in &suite.verdicts {
                let _ = writeln!(text, "  {l:<4} {v}");
            }
            emit(g, text, serde_json::to_value(doc)?)
        }
        Command::Check {
            action:
                CheckCmd::Wilson {
                    field,
                    prime: p,
                    all_conditions,
                    literal,
                },
        } => {
            let ctx = prime(&field.field, p)?;
            let route = if *literal {
                FRoute::Literal
            } else {
                FRoute::Quotient
            };
            let mult = congruence::wilson_multiplicity(&ctx, route)?;
            if *all_conditions {
                let suite = congruence::wilson_suite(&ctx, route)?;
                let mut doc = serde_json::to_value(suite.to_doc())?;
                doc["multiplicity"] = serde_json::to_value(mult)?;
                let mut text = format!(
                    "{} is {}a Wilson prime (F_d + 1 has valuation {mult})\n",
                    ctx.prime(),
                    if suite.holds() { "" } else { "not " }
                );
                for (l, v) in &suite.verdicts {
                    let _ = writeln!(text, "  {l:<6} {v}");
                }
                for l in &suite.skipped {
                    let _ = writeln!(text, "  {l:<6} skipped");
                }
                emit(g, text, doc)
            } else {
                let w = congruence::is_wilson(&ctx, route)?;
                let text = format!(
                    "{} is {}a Wilson prime (F_d + 1 has valuation {mult})",
                    ctx.prime(),
                    if w { "" } else { "not " }
                );
                emit(
                    g,
                    text,
                    json!({"prime": ctx.prime().to_string(), "wilson": w, "multiplicity": mult}),
                )
            }
        }
        Command::ClassifyBase { field, base } => {
            let cls = congruence::classify_base(&poly(&field.field, base)?);
            let (witness, text) = match &cls {
                BaseClass::AllPrimesWieferich { b } => {
                    (json!({"b": b.to_string()}), format!("{base} = ({b})^p"))
                }
                BaseClass::NoWieferichPrimes { b, c } => (
                    json!({"b": b.to_string(), "c": c.code()}),
                    format!("{base} = ({b})^p + {}*t", c.code()),
                ),
                BaseClass::Generic => (Value::Null, format!("{base} has neither shape")),
            };
            emit(
                g,
                format!("{}: {text}", cls.tag()),
                json!({"base": base, "tag": cls.tag(), "witness": witness}),
            )
        }
        Command::Carlitz {
            action:
                CarlitzCmd::Compute {
                    field,
                    what,
                    n,
                    modulo,
                    degree_guard,
                },
        } => {
            let f = &field.field;
            let cache = CarlitzCache::with_guard(f, *degree_guard);
            let value = match modulo {
                None => match what {
                    Quantity::Bracket => cache.bracket(*n)?,
                    Quantity::L => cache.l(*n)?,
                    Quantity::D => cache.d(*n)?,
                    Quantity::F => cache.f(*n)?,
                    Quantity::WilsonSum => cache.wilson_sum_poly(*n)?,
                },
                Some(m) => {
                    let m = poly(f, m)?;
                    match what {
                        Quantity::Bracket => cache.bracket_mod(*n, &m)?,
                        Quantity::L => cache.l_mod(*n, &m)?,
                        Quantity::D => cache.d_mod(*n, &m)?,
                        Quantity::F => cache.f_mod(*n, &m)?,
                        Quantity::WilsonSum => {
                            if *n < 2 {
                                bail!(fqt_core::Error::InvalidArgument("needs n >= 2".into()));
                            }
                            let big = m.mul(&m);
                            cache.l_mod(*n - 1, &big)?.derivative(1).neg().rem(&m)
                        }
                    }
                }
            };
            let text = value.to_string();
            emit(
                g,
                text.clone(),
                json!({"field": f.descriptor(), "quantity": format!("{what:?}"), "n": n,
                       "modulo": modulo, "degree": value.deg(), "value": text}),
            )
        }
        Command::Deriv {
            action:
                DerivCmd::Eval {
                    field,
                    prime: p,
                    input,
                    order,
                },
        } => {
            let ctx = prime(&field.field, p)?;
            let rep = DerivReport::compute(&ctx, &poly(&field.field, input)?, *order)?;
            let doc = rep.to_doc();
            let mut text = String::new();
            for (k, v) in &doc.values {
                let _ = writeln!(text, "{k:<12} {v}");
            }
            emit(g, text, serde_json::to_value(doc)?)
        }
        Command::Factor {
            field,
            poly: text,
            max_trial_degree,
        } => {
            let f = poly(&field.field, text)?;
            let fact = match max_trial_degree {
                Some(k) => factor::trial_division(
                    &f,
                    *k,
                    &PartialOptions {
                        seed: g.seed,
                        ..PartialOptions::default()
                    },
                )?,
                None => factor::factorize(&f, g.seed)?,
            };
            emit(g, factorization_text(&fact), fact.to_json())
        }
        Command::Survey {
            field,
            degrees,
            csv,
            no_suites,
        } => {
            let f = &field.field;
            let degrees = parse_degrees(degrees)?;
            let opts = SurveyOptions {
                suites: !no_suites,
                ..SurveyOptions::default()
            };
            let (records, computed) = match &g.out {
                Some(path) => {
                    let o = persist::resume(path, f, &degrees, &opts, g.seed)?;
                    (o.records, o.computed.len())
                }
                None => {
                    let r = degrees
                        .iter()
                        .map(|&d| survey::survey_degree(f, d, &opts))
                        .collect::<fqt_core::Result<Vec<_>>>()?;
                    let n = r.len();
                    (r, n)
                }
            };
            if let Some(path) = csv {
                persist::write_csv(&records, File::create(path)?)?;
            }
            let mut text = format!("field {}, {computed} degree(s) computed\n", f.descriptor());
            let _ = writeln!(
                text,
                "{:>4} {:>10} {:>8} {:>8}",
                "d", "primes", "wilson", "special"
            );
            for r in &records {
                let _ = writeln!(
                    text,
                    "{:>4} {:>10} {:>8} {:>8}",
                    r.d,
                    r.prime_count,
                    r.wilson_primes.len(),
                    r.special_count()
                );
            }
            if g.json {
                let body = serde_json::to_string_pretty(&records)?;
                println!("{body}");
                Ok(())
            } else {
                print!("{text}");
                Ok(())
            }
        }
        Command::Theorem5 { field, degree } => {
            let rep = survey::theorem5_report(&field.field, *degree, g.seed)?;
            let text = format!(
                "-L'_{} has degree {}\nfactor degrees: {}\n{} Wilson primes of degree {degree}, all found among the factors",
                degree - 1,
                rep.degree,
                profile_text(&rep.profile),
                rep.wilson_primes.len()
            );
            emit(g, text, serde_json::to_value(rep)?)
        }
        Command::Theorem7 {
            field,
            degree,
            c,
            mode,
            max_trial_degree,
        } => {
            let f = &field.field;
            let mode = match mode {
                Mode::Divisors => Theorem7Mode::Divisors,
                Mode::Full => Theorem7Mode::Full,
                Mode::Partial => Theorem7Mode::Partial(*max_trial_degree),
            };
            let rep = survey::theorem7_report(f, *degree, &f.element(*c)?, mode, g.seed)?;
            let mut text = format!(
                "L_{} - {c}: degree {}, {} special prime(s) of degree {degree}\n",
                degree - 1,
                rep.l_degree,
                rep.special_primes.len()
            );
            for s in &rep.factors {
                let _ = writeln!(text, "  {}   L-mult {}   D-mult {}", s.prime, s.l, s.d);
            }
            if let Some(p) = &rep.profile {
                let _ = writeln!(text, "factor degrees: {}", profile_text(p));
            }
            if let Some(k) = rep.cofactor_degree {
                let _ = writeln!(text, "cofactor degree: {k}");
            }
            emit(g, text, serde_json::to_value(rep)?)
        }
        Command::Scan { action } => match action {
            ScanCmd::Borisov { field, d_max } => findings(
                g,
                survey::borisov_scan(&field.field, *d_max)?,
                "L_{d-1} + c",
            ),
            ScanCmd::AltConjecture { field, d_max } => findings(
                g,
                survey::alt_gcd_conjecture_scan(&field.field, *d_max)?,
                "alternating-sum",
            ),
        },
        Command::Distribution {
            field,
            prime: p,
            degree_bound,
            budget,
        } => {
            let ctx = prime(&field.field, p)?;
            let h = survey::fq_distribution(&ctx, *degree_bound, *budget)?;
            let mut text = format!("{} bases; nonzero buckets (element code: count)\n", h.total);
            for (code, n) in h.counts.iter().enumerate().filter(|(_, n)| **n > 0) {
                let _ = writeln!(text, "{code:>8}: {n}");
            }
            emit(g, text, serde_json::to_value(h)?)
        }
        Command::Verify {
            action: VerifyCmd::Paper { case, extended },
        } => {
            let cases: Vec<Case> = if case == "all" {
                Case::ALL.to_vec()
            } else {
                vec![Case::from_name(case).expect("validated by clap")]
            };
            let opts = ReproOptions {
                seed: g.seed,
                extended: *extended,
            };
            let reports = cases
                .into_iter()
                .map(|c| reproduce::run_case(c, &opts))
                .collect::<fqt_core::Result<Vec<_>>>()?;
            let text: String = reports.iter().map(case_text).collect();
            emit(g, text, serde_json::to_value(&reports)?)?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.case.as_str())
                .collect();
            if !failed.is_empty() {
                return Err(Mismatch(format!("reproduction failed: {}", failed.join(", "))).into());
            }
            Ok(())
        }
    }
}
