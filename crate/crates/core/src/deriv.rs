//! The three arithmetic derivatives at a prime `℘`: the usual derivative,
//! the Fermat quotient `Q_℘(a) = (a^(q^d) - a)/℘` and the Teichmüller
//! difference quotient `a^[i]` at the root `θ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::carlitz::EXACT_DEGREE_GUARD;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::irr::PrimeContext;
use crate::poly::Poly;

fn check_base(a: &Poly, ctx: &PrimeContext) -> Result<()> {
    if a.field() != ctx.base_field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

fn guard(what: &'static str, degree: u128) -> Result<()> {
    if degree > EXACT_DEGREE_GUARD as u128 {
        return Err(Error::BoundExceeded {
            what,
            value: degree,
            bound: EXACT_DEGREE_GUARD as u128,
        });
    }
    Ok(())
}

/// `Q_℘(a)` exactly.
pub fn fermat_quotient(a: &Poly, ctx: &PrimeContext) -> Result<Poly> {
    check_base(a, ctx)?;
    let n = ctx.norm();
    guard(
        "degree of a^(q^d)",
        (a.deg().unwrap_or(0) as u128).saturating_mul(n as u128),
    )?;
    let q = ctx.base_field().order();
    let pow = a.q_power_expand(q, ctx.degree() as u32)?;
    pow.sub(a).exact_div(ctx.prime())
}

/// `a^(q^d) mod m` by `d` Frobenius steps; `a` must lie over `F_q`.
fn norm_power_mod(a: &Poly, ctx: &PrimeContext, m: &Poly) -> Poly {
    let mut x = a.rem(m);
    for _ in 0..ctx.degree() {
        x = x.frobenius_mod(m);
    }
    x
}

/// `Q_℘(a) mod ℘^k`, working modulo `℘^(k+1)` throughout.
pub fn fermat_quotient_mod(a: &Poly, ctx: &PrimeContext, k: usize) -> Result<Poly> {
    check_base(a, ctx)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let m = ctx.prime().pow(k as u64 + 1);
    let diff = norm_power_mod(a, ctx, &m).sub(&a.rem(&m));
    diff.exact_div(ctx.prime())
}

/// How [`fermat_quotient_iter`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterMode {
    Exact,
    /// Result correct modulo `℘^k`.
    Modulo(usize),
}

/// `Q_℘^i(a)`.
pub fn fermat_quotient_iter(
    a: &Poly,
    ctx: &PrimeContext,
    i: usize,
    mode: IterMode,
) -> Result<Poly> {
    check_base(a, ctx)?;
    match mode {
        IterMode::Exact => {
            let mut x = a.clone();
            for _ in 0..i {
                x = fermat_quotient(&x, ctx)?;
            }
            Ok(x)
        }
        IterMode::Modulo(k) => {
            if k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1".into()));
            }
            // a value known modulo ℘^(j+1) determines Q of it modulo ℘^j
            let mut x = a.rem(&ctx.prime().pow((k + i) as u64));
            for s in 1..=i {
                x = fermat_quotient_mod(&x, ctx, k + i - s)?;
            }
            Ok(x)
        }
    }
}

/// `a^[i]` over the residue field, by `i` synthetic divisions at `θ`.
pub fn delta(a: &Poly, ctx: &PrimeContext, i: usize) -> Result<Poly> {
    let mut x = a.embed(ctx.residue_field())?;
    for _ in 0..i {
        x = x.synth_div(ctx.theta())?.0;
    }
    Ok(x)
}

/// `a^[i](θ)`, the `i`-th Taylor coefficient of `a` at `θ`.
pub fn delta_at_theta(a: &Poly, ctx: &PrimeContext, i: usize) -> Result<FieldElement> {
    delta(a, ctx, i)?.eval(ctx.theta())
}

/// `Q_℘(x)(θ)` for `x` over the residue field, using that coefficients of
/// `F_{q^d}` are fixed by the `q^d`-power map, so `x^(q^d) = x(t^(q^d))`.
fn q_of_extension_at_theta(x: &Poly, ctx: &PrimeContext, exact: bool) -> Result<FieldElement> {
    let e = ctx.residue_field();
    let wp = ctx.prime().embed(e)?;
    let q = if exact {
        let n = ctx.norm() as u128;
        guard(
            "degree of x^(q^d)",
            (x.deg().unwrap_or(0) as u128).saturating_mul(n),
        )?;
        x.scale_exponents(n)?.sub(x).exact_div(&wp)?
    } else {
        let m2 = ctx.prime().pow(2);
        let tn = norm_power_mod(&Poly::t(ctx.base_field()), ctx, &m2).embed(e)?;
        let m2e = m2.embed(e)?;
        let mut acc = Poly::zero(e);
        for &c in x.codes().iter().rev() {
            acc = acc.mul(&tn).add(&Poly::constant(e, c)).rem(&m2e);
        }
        acc.sub(&x.rem(&m2e)).exact_div(&wp)?
    };
    q.eval(ctx.theta())
}

/// The eight mixed second-order conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mixed {
    /// `d/dt Q_℘(t) mod ℘`
    DerivOfQ,
    /// `(d/dt Q_℘(t))(θ)`
    DerivOfQAtTheta,
    /// `Q_℘(℘') mod ℘`
    QOfDeriv,
    /// `Q_℘(℘')(θ)`
    QOfDerivAtTheta,
    /// `(d/dt ℘^[1])(θ)`
    DerivOfDeltaAtTheta,
    /// `(℘')^[1](θ)`
    DeltaOfDerivAtTheta,
    /// `Q_℘(℘^[1])(θ)`
    QOfDeltaAtTheta,
    /// `(Q_℘(t))^[1](θ)`
    DeltaOfQAtTheta,
}

impl Mixed {
    pub const ALL: [Mixed; 8] = [
        Mixed::DerivOfQ,
        Mixed::DerivOfQAtTheta,
        Mixed::QOfDeriv,
        Mixed::QOfDerivAtTheta,
        Mixed::DerivOfDeltaAtTheta,
        Mixed::DeltaOfDerivAtTheta,
        Mixed::QOfDeltaAtTheta,
        Mixed::DeltaOfQAtTheta,
    ];

    /// Condition label in the Wilson suite.
    pub fn label(self) -> &'static str {
        match self {
            Mixed::DerivOfQ => "i-ii",
            Mixed::DerivOfQAtTheta => "i-ii'",
            Mixed::QOfDeriv => "ii-i",
            Mixed::QOfDerivAtTheta => "ii-i'",
            Mixed::DerivOfDeltaAtTheta => "i-iii",
            Mixed::DeltaOfDerivAtTheta => "iii-i",
            Mixed::QOfDeltaAtTheta => "ii-iii",
            Mixed::DeltaOfQAtTheta => "iii-ii",
        }
    }

    pub fn from_label(label: &str) -> Option<Mixed> {
        Mixed::ALL.into_iter().find(|m| m.label() == label)
    }
}

/// A derivative value: a polynomial or a residue-field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(Poly),
    Element(FieldElement),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Poly(p) => p.is_zero(),
            Value::Element(e) => e.is_zero(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Value::Poly(p) => p.to_string(),
            Value::Element(e) => e.code().to_string(),
        }
    }
}

/// `Q_℘(t)` modulo `℘²`, or exactly.
fn q_of_t(ctx: &PrimeContext, exact: bool) -> Result<Poly> {
    let t = Poly::t(ctx.base_field());
    if exact {
        fermat_quotient(&t, ctx)
    } else {
        fermat_quotient_mod(&t, ctx, 2)
    }
}

/// Evaluates a mixed condition at the prime of `ctx`. The modular route
/// (`exact = false`) works at any degree; the exact route materializes
/// the full Fermat quotients and is subject to the degree guard.
pub fn mixed(kind: Mixed, ctx: &PrimeContext, exact: bool) -> Result<Value> {
    let wp = ctx.prime();
    let theta = ctx.theta();
    Ok(match kind {
        Mixed::DerivOfQ => Value::Poly(q_of_t(ctx, exact)?.derivative(1).rem(wp)),
        Mixed::DerivOfQAtTheta => Value::Element(q_of_t(ctx, exact)?.derivative(1).eval(theta)?),
        Mixed::QOfDeriv | Mixed::QOfDerivAtTheta => {
            let d1 = wp.derivative(1);
            let qd = if exact {
                fermat_quotient(&d1, ctx)?
            } else {
                fermat_quotient_mod(&d1, ctx, 1)?
            };
            if kind == Mixed::QOfDeriv {
                Value::Poly(qd.rem(wp))
            } else {
                Value::Element(qd.eval(theta)?)
            }
        }
        Mixed::DerivOfDeltaAtTheta => Value::Element(delta(wp, ctx, 1)?.derivative(1).eval(theta)?),
        Mixed::DeltaOfDerivAtTheta => Value::Element(delta_at_theta(&wp.derivative(1), ctx, 1)?),
        Mixed::QOfDeltaAtTheta => {
            Value::Element(q_of_extension_at_theta(&delta(wp, ctx, 1)?, ctx, exact)?)
        }
        Mixed::DeltaOfQAtTheta => Value::Element(delta_at_theta(&q_of_t(ctx, exact)?, ctx, 1)?),
    })
}

/// Derivatives of one input at one prime, keyed by descriptor.
#[derive(Clone, Debug)]
pub struct DerivReport {
    pub context: PrimeContext,
    pub input: Poly,
    pub values: BTreeMap<String, Value>,
}

impl DerivReport {
    /// `D^i`, `Q^i mod ℘` and `Δ^i at θ` for `1 <= i <= max_order`.
    pub fn compute(ctx: &PrimeContext, a: &Poly, max_order: usize) -> Result<DerivReport> {
        check_base(a, ctx)?;
        let mut values = BTreeMap::new();
        for i in 1..=max_order {
            values.insert(format!("D^{i}"), Value::Poly(a.derivative(i)));
            values.insert(
                format!("Q^{i} mod ℘"),
                Value::Poly(fermat_quotient_iter(a, ctx, i, IterMode::Modulo(1))?),
            );
            values.insert(
                format!("Δ^{i} at θ"),
                Value::Element(delta_at_theta(a, ctx, i)?),
            );
        }
        Ok(DerivReport {
            context: ctx.clone(),
            input: a.clone(),
            values,
        })
    }

    pub fn to_doc(&self) -> DerivReportDoc {
        DerivReportDoc {
            field: self.context.base_field().descriptor(),
            prime: self.context.prime().to_string(),
            input: self.input.to_string(),
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v.to_text()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivReportDoc {
    pub field: String,
    pub prime: String,
    pub input: String,
    pub values: BTreeMap<String, String>,
}
