//! Wieferich and Wilson primes: every equivalent condition as an
//! independent check, base classification, special Wilson primes and
//! `℘`-adic valuations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::carlitz::CarlitzCache;
use crate::deriv::{self, IterMode, Mixed};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::irr::PrimeContext;
use crate::poly::Poly;

/// Wieferich condition labels, in the order they are evaluated.
pub const WIEFERICH_LABELS: [&str; 6] = ["def", "i", "i'", "ii", "ii'", "iii"];

/// Wilson condition labels, in the order they are evaluated.
pub const WILSON_LABELS: [&str; 15] = [
    "def", "i", "i'", "i''", "ii", "ii'", "iii", "i-ii", "i-ii'", "ii-i", "ii-i'", "i-iii",
    "iii-i", "ii-iii", "iii-ii",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Wieferich { base: Poly },
    Wilson,
}

/// Verdicts of a family of equivalent conditions at one prime.
#[derive(Clone, Debug)]
pub struct ConditionSuite {
    pub context: PrimeContext,
    pub kind: SuiteKind,
    /// `(label, verdict)` in evaluation order; skipped labels are absent.
    pub verdicts: Vec<(&'static str, bool)>,
    pub skipped: Vec<&'static str>,
}

impl ConditionSuite {
    pub fn verdict(&self, label: &str) -> Option<bool> {
        self.verdicts
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, v)| *v)
    }

    /// The `def` verdict.
    pub fn holds(&self) -> bool {
        self.verdict("def").expect("def is always evaluated")
    }

    pub fn is_unanimous(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v == self.holds())
    }

    fn assert_unanimous(&self) -> Result<()> {
        if self.is_unanimous() {
            return Ok(());
        }
        let detail = self
            .verdicts
            .iter()
            .map(|(l, v)| format!("{l}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        Err(Error::EquivalenceViolation {
            prime: self.context.prime().to_string(),
            detail,
        })
    }

    pub fn to_doc(&self) -> ConditionSuiteDoc {
        let (kind, base) = match &self.kind {
            SuiteKind::Wieferich { base } => ("wieferich", Some(base.to_string())),
            SuiteKind::Wilson => ("wilson", None),
        };
        ConditionSuiteDoc {
            field: self.context.base_field().descriptor(),
            prime: self.context.prime().to_string(),
            kind: kind.into(),
            base,
            verdicts: self
                .verdicts
                .iter()
                .map(|(l, v)| (l.to_string(), *v))
                .collect(),
            unanimous: self.is_unanimous(),
            skipped: self.skipped.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSuiteDoc {
    pub field: String,
    pub prime: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub base: Option<String>,
    pub verdicts: BTreeMap<String, bool>,
    pub unanimous: bool,
    pub skipped: Vec<String>,
}

/// All six conditions for `℘` being `a`-Wieferich, each computed on its
/// own; fails with `EquivalenceViolation` if they disagree.
pub fn wieferich_suite(ctx: &PrimeContext, a: &Poly) -> Result<ConditionSuite> {
    if a.field() != ctx.base_field() {
        return Err(Error::FieldMismatch);
    }
    let wp = ctx.prime();
    let theta = ctx.theta();
    let m2 = wp.pow(2);
    let norm = num_bigint::BigUint::from(ctx.norm());
    let def = a.powmod(&norm, &m2)? == a.rem(&m2);
    let da = a.derivative(1);
    let q1 = deriv::fermat_quotient_mod(a, ctx, 1)?;
    let verdicts = vec![
        ("def", def),
        ("i", da.rem(wp).is_zero()),
        ("i'", da.eval(theta)?.is_zero()),
        ("ii", q1.is_zero()),
        ("ii'", q1.eval(theta)?.is_zero()),
        ("iii", deriv::delta_at_theta(a, ctx, 1)?.is_zero()),
    ];
    let suite = ConditionSuite {
        context: ctx.clone(),
        kind: SuiteKind::Wieferich { base: a.clone() },
        verdicts,
        skipped: Vec::new(),
    };
    suite.assert_unanimous()?;
    Ok(suite)
}

/// Shape of a base `a` with respect to Wieferich primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseClass {
    /// `a = b^p`: every prime is `a`-Wieferich.
    AllPrimesWieferich {
        b: Poly,
    },
    /// `a = b^p + c t` with `c ≠ 0`: no prime is `a`-Wieferich.
    NoWieferichPrimes {
        b: Poly,
        c: FieldElement,
    },
    Generic,
}

impl BaseClass {
    pub fn tag(&self) -> &'static str {
        match self {
            BaseClass::AllPrimesWieferich { .. } => "AllPrimesWieferich",
            BaseClass::NoWieferichPrimes { .. } => "NoWieferichPrimes",
            BaseClass::Generic => "Generic",
        }
    }

    /// Rebuilds `a` from the witness (`None` for `Generic`).
    pub fn reconstruct(&self) -> Option<Poly> {
        let p = |b: &Poly| b.pow(b.field().characteristic());
        match self {
            BaseClass::AllPrimesWieferich { b } => Some(p(b)),
            BaseClass::NoWieferichPrimes { b, c } => {
                Some(p(b).add(&Poly::monomial(b.field(), c.code(), 1)))
            }
            BaseClass::Generic => None,
        }
    }
}

pub fn classify_base(a: &Poly) -> BaseClass {
    if let Some(b) = a.pth_root() {
        return BaseClass::AllPrimesWieferich { b };
    }
    let c = a.coeff(1);
    if c != 0 {
        let rest = a.sub(&Poly::monomial(a.field(), c, 1));
        if let Some(b) = rest.pth_root() {
            let c = a.field().element(c).expect("stored code");
            return BaseClass::NoWieferichPrimes { b, c };
        }
    }
    BaseClass::Generic
}

/// How the Wilson `def` condition `F_d ≡ -1 mod ℘^2` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FRoute {
    /// `F_d = (-1)^d D_{d-1}^q / L_{d-1}` modulo `℘^k`; cost `O(d)` modular
    /// products.
    #[default]
    Quotient,
    /// The literal product of all nonzero polynomials of degree `< d`,
    /// reduced as it goes; bounded by `FMOD_BOUND`.
    Literal,
}

fn f_mod(ctx: &PrimeContext, m: &Poly, route: FRoute) -> Result<Poly> {
    let cache = CarlitzCache::new(ctx.base_field());
    match route {
        FRoute::Quotient => cache.f_mod_fast(ctx.degree(), m),
        FRoute::Literal => cache.f_mod(ctx.degree(), m),
    }
}

/// Whether `℘` is a Wilson prime (`F_d ≡ -1 mod ℘^2`).
pub fn is_wilson(ctx: &PrimeContext, route: FRoute) -> Result<bool> {
    let m2 = ctx.prime().pow(2);
    let f = f_mod(ctx, &m2, route)?;
    Ok(f.add(&Poly::one(ctx.base_field())).rem(&m2).is_zero())
}

/// The fifteen Wilson conditions. For `p = 2` only `def` is evaluated and
/// the rest are listed as skipped; otherwise unanimity is enforced.
pub fn wilson_suite(ctx: &PrimeContext, route: FRoute) -> Result<ConditionSuite> {
    let def = is_wilson(ctx, route)?;
    if ctx.base_field().characteristic() == 2 {
        return Ok(ConditionSuite {
            context: ctx.clone(),
            kind: SuiteKind::Wilson,
            verdicts: vec![("def", def)],
            skipped: WILSON_LABELS[1..].to_vec(),
        });
    }
    let wp = ctx.prime();
    let theta = ctx.theta();
    let d2 = wp.derivative(2);
    let q2 = deriv::fermat_quotient_iter(&Poly::t(ctx.base_field()), ctx, 2, IterMode::Modulo(1))?;
    let mut verdicts = vec![
        ("def", def),
        ("i", d2.is_zero()),
        ("i'", d2.rem(wp).is_zero()),
        ("i''", d2.eval(theta)?.is_zero()),
        ("ii", q2.is_zero()),
        ("ii'", q2.eval(theta)?.is_zero()),
        ("iii", deriv::delta_at_theta(wp, ctx, 2)?.is_zero()),
    ];
    for kind in Mixed::ALL {
        verdicts.push((kind.label(), deriv::mixed(kind, ctx, false)?.is_zero()));
    }
    verdicts.sort_by_key(|(l, _)| WILSON_LABELS.iter().position(|x| x == l));
    let suite = ConditionSuite {
        context: ctx.clone(),
        kind: SuiteKind::Wilson,
        verdicts,
        skipped: Vec::new(),
    };
    suite.assert_unanimous()?;
    Ok(suite)
}

/// A `℘`-adic multiplicity that may have hit its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub value: u32,
    /// `true` means "at least `value`".
    pub capped: bool,
}

impl std::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.capped {
            write!(f, ">={}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Largest `k <= p + 2` with `F_d ≡ -1 mod ℘^k`.
pub fn wilson_multiplicity(ctx: &PrimeContext, route: FRoute) -> Result<Multiplicity> {
    let cap = ctx.base_field().characteristic() as u32 + 2;
    let m = ctx.prime().pow(cap as u64 + 1);
    let f1 = f_mod(ctx, &m, route)?
        .add(&Poly::one(ctx.base_field()))
        .rem(&m);
    Ok(valuation_of_residue(&f1, ctx.prime(), cap + 1, cap))
}

/// `ord_℘` of a value known only modulo `℘^known`, capped at `cap`.
pub fn valuation_of_residue(r: &Poly, wp: &Poly, known: u32, cap: u32) -> Multiplicity {
    let limit = known.min(cap);
    let mut x = r.clone();
    let mut v = 0;
    while v < limit {
        if x.is_zero() {
            return Multiplicity {
                value: limit,
                capped: true,
            };
        }
        match x.exact_div(wp) {
            Ok(y) => {
                x = y;
                v += 1;
            }
            Err(_) => {
                return Multiplicity {
                    value: v,
                    capped: false,
                }
            }
        }
    }
    Multiplicity {
        value: v,
        capped: true,
    }
}

/// Nonzero coefficients only at indices `i` with `p | i` or `p | i - 1`.
pub fn coefficient_characterization(wp: &Poly) -> bool {
    let p = wp.field().characteristic() as usize;
    wp.terms().iter().all(|&(i, _)| i % p == 0 || i % p == 1)
}

/// Whether `℘' = (-1)^(d-1) c`, cross-checked against the shape
/// `℘ = a^p + (-1)^(d-1) c t`.
pub fn is_special_wilson(ctx: &PrimeContext, c: &FieldElement) -> Result<bool> {
    let field = ctx.base_field();
    if c.field() != field {
        return Err(Error::FieldMismatch);
    }
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    let d = ctx.degree();
    let target = if d % 2 == 1 {
        c.code()
    } else {
        field.neg(c.code())
    };
    let wp = ctx.prime();
    let by_derivative = wp.derivative(1) == Poly::constant(field, target);
    let by_shape = wp
        .sub(&Poly::monomial(field, target, 1))
        .pth_root()
        .is_some();
    if by_derivative != by_shape {
        return Err(Error::EquivalenceViolation {
            prime: wp.to_string(),
            detail: format!("derivative test {by_derivative}, shape test {by_shape}"),
        });
    }
    Ok(by_derivative)
}

/// Largest `k` with `℘^k | f`.
pub fn valuation(f: &Poly, wp: &Poly) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "valuation of the zero polynomial".into(),
        ));
    }
    if wp.is_constant() {
        return Err(Error::InvalidArgument("valuation at a constant".into()));
    }
    let mut x = f.clone();
    let mut v = 0;
    while let Ok(y) = x.exact_div(wp) {
        x = y;
        v += 1;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::irr::MonicIrreducibles;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn p(field: &Field, s: &str) -> Poly {
        Poly::parse(field, s).unwrap()
    }

    fn ctx(field: &Field, s: &str) -> PrimeContext {
        PrimeContext::new(p(field, s)).unwrap()
    }

    #[test]
    fn wieferich_examples() {
        let f3 = fp(3);
        for d in 1..=3 {
            for c in MonicIrreducibles::new(&f3, d).unwrap() {
                assert!(wieferich_suite(&c, &p(&f3, "t^3")).unwrap().holds());
                assert!(!wieferich_suite(&c, &Poly::t(&f3)).unwrap().holds());
                assert!(wieferich_suite(&c, &Poly::constant(&f3, 2))
                    .unwrap()
                    .holds());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let f3 = fp(3);
        assert_eq!(
            classify_base(&p(&f3, "t^3")),
            BaseClass::AllPrimesWieferich { b: Poly::t(&f3) }
        );
        let cls = classify_base(&p(&f3, "t^3+2*t"));
        assert_eq!(
            cls,
            BaseClass::NoWieferichPrimes {
                b: Poly::t(&f3),
                c: f3.element(2).unwrap()
            }
        );
        assert_eq!(cls.reconstruct().unwrap(), p(&f3, "t^3+2*t"));
        assert_eq!(classify_base(&p(&f3, "t^2")), BaseClass::Generic);
    }

    #[test]
    fn wilson_examples() {
        let f3 = fp(3);
        let w = wilson_suite(&ctx(&f3, "t^3+2*t+2"), FRoute::Literal).unwrap();
        assert_eq!(w.verdicts.len(), 15);
        assert!(w.verdicts.iter().all(|(_, v)| *v));
        let n = wilson_suite(&ctx(&f3, "t^3+t^2+2"), FRoute::Literal).unwrap();
        assert!(n.verdicts.iter().all(|(_, v)| !*v));
        let f2 = fp(2);
        let two = wilson_suite(&ctx(&f2, "t^2+t+1"), FRoute::Quotient).unwrap();
        assert_eq!(two.verdicts.len(), 1);
        assert_eq!(two.skipped.len(), 14);
    }

    #[test]
    fn routes_agree() {
        for q in [2u64, 3, 5] {
            let f = fp(q);
            for d in 1..=3 {
                for c in MonicIrreducibles::new(&f, d).unwrap() {
                    assert_eq!(
                        is_wilson(&c, FRoute::Quotient).unwrap(),
                        is_wilson(&c, FRoute::Literal).unwrap()
                    );
                    assert_eq!(
                        wilson_multiplicity(&c, FRoute::Quotient).unwrap(),
                        wilson_multiplicity(&c, FRoute::Literal).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let f3 = fp(3);
        let as3 = ctx(&f3, "t^3+2*t+2");
        assert!(wilson_multiplicity(&as3, FRoute::Literal).unwrap().value >= 2);
        let non = ctx(&f3, "t^3+t^2+2");
        assert_eq!(
            wilson_multiplicity(&non, FRoute::Literal).unwrap(),
            Multiplicity {
                value: 1,
                capped: false
            }
        );
        let lin = ctx(&f3, "t+1");
        let m = wilson_multiplicity(&lin, FRoute::Literal).unwrap();
        assert_eq!(
            m,
            Multiplicity {
                value: 5,
                capped: true
            }
        );
        assert_eq!(m.to_string(), ">=5");
    }

    #[test]
    fn characterization() {
        let f3 = fp(3);
        assert!(coefficient_characterization(&p(&f3, "t^3+2*t+2")));
        assert!(!coefficient_characterization(&p(&f3, "t^3+t^2+2")));
        assert!(coefficient_characterization(&p(&fp(2), "t^2+t+1")));
    }

    #[test]
    fn special_wilson() {
        let f3 = fp(3);
        let c = ctx(&f3, "t^3+2*t+2");
        // d = 3: ℘' = c, and here ℘' = 2
        assert!(is_special_wilson(&c, &f3.element(2).unwrap()).unwrap());
        assert!(!is_special_wilson(&c, &f3.one()).unwrap());
        assert!(matches!(
            is_special_wilson(&c, &f3.zero()),
            Err(Error::ZeroC)
        ));
    }

    #[test]
    fn valuations() {
        let f3 = fp(3);
        let wp = p(&f3, "t^2+1");
        let g = p(&f3, "t^4+t+2");
        assert_eq!(valuation(&wp.pow(3).mul(&g), &wp).unwrap(), 3);
        assert_eq!(valuation(&g, &wp).unwrap(), 0);
        let r = wp.pow(2).mul(&g).rem(&wp.pow(5));
        assert_eq!(
            valuation_of_residue(&r, &wp, 5, 10),
            Multiplicity {
                value: 2,
                capped: false
            }
        );
        assert_eq!(
            valuation_of_residue(&Poly::zero(&f3), &wp, 5, 10),
            Multiplicity {
                value: 5,
                capped: true
            }
        );
    }

    #[test]
    fn json_shape() {
        let f3 = fp(3);
        let doc = wilson_suite(&ctx(&f3, "t^3+2*t+2"), FRoute::Quotient)
            .unwrap()
            .to_doc();
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["kind"], "wilson");
        assert_eq!(v["unanimous"], true);
        assert_eq!(v["verdicts"].as_object().unwrap().len(), 15);
        assert!(v.get("base").is_none());
    }
}
