//! Factorization over `F_q` into monic irreducibles: squarefree
//! decomposition, distinct-degree and equal-degree splitting, and a partial
//! mode that only extracts factors up to a given degree.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::irr::is_irreducible;
use crate::poly::Poly;

/// Cofactors above this degree are not tested for irreducibility.
pub const COFACTOR_CHECK_BOUND: usize = 4096;

/// Irreducibility status of an unresolved cofactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CofactorStatus {
    Irreducible,
    Reducible,
    Unchecked,
}

/// `unit · Π base^mult · cofactor`, bases monic irreducible and sorted by
/// degree, then coefficients from the top down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    unit: FieldElement,
    factors: Vec<(Poly, u32)>,
    cofactor: Option<(Poly, CofactorStatus)>,
}

impl Factorization {
    fn new(
        unit: FieldElement,
        mut factors: Vec<(Poly, u32)>,
        cofactor: Option<(Poly, CofactorStatus)>,
    ) -> Factorization {
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
        for (p, m) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += m,
                _ => merged.push((p, m)),
            }
        }
        Factorization {
            unit,
            factors: merged,
            cofactor,
        }
    }

    pub fn unit(&self) -> &FieldElement {
        &self.unit
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn cofactor(&self) -> Option<&Poly> {
        self.cofactor.as_ref().map(|(p, _)| p)
    }

    pub fn cofactor_status(&self) -> Option<CofactorStatus> {
        self.cofactor.as_ref().map(|(_, s)| *s)
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Multiplicity of `p` among the bases (0 if absent).
    pub fn multiplicity(&self, p: &Poly) -> u32 {
        self.factors
            .iter()
            .find(|(b, _)| b == p)
            .map_or(0, |(_, m)| *m)
    }

    /// `(degree, multiplicity) -> number of bases` over all factors.
    pub fn degree_profile(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for (p, m) in &self.factors {
            *out.entry((p.deg().unwrap_or(0), *m)).or_insert(0) += 1;
        }
        out
    }

    /// Bases of the given degree.
    pub fn of_degree(&self, d: usize) -> Vec<&(Poly, u32)> {
        self.factors
            .iter()
            .filter(|(p, _)| p.deg() == Some(d))
            .collect()
    }

    /// Multiplies everything back out.
    pub fn product(&self) -> Poly {
        let field = self.unit.field();
        let mut acc = Poly::constant(field, self.unit.code());
        for (p, m) in &self.factors {
            acc = acc.mul(&p.pow(*m as u64));
        }
        if let Some((c, _)) = &self.cofactor {
            acc = acc.mul(c);
        }
        acc
    }

    pub fn to_doc(&self) -> FactorizationDoc {
        FactorizationDoc {
            unit: self.unit.code(),
            factors: self
                .factors
                .iter()
                .map(|(p, m)| FactorDoc {
                    poly: p.to_string(),
                    mult: *m,
                })
                .collect(),
            cofactor: self.cofactor.as_ref().map(|(p, _)| p.to_string()),
            cofactor_irreducible: self.cofactor.as_ref().map(|(_, s)| match s {
                CofactorStatus::Irreducible => Flag::Bool(true),
                CofactorStatus::Reducible => Flag::Bool(false),
                CofactorStatus::Unchecked => Flag::Text("unchecked".into()),
            }),
        }
    }

    pub fn from_doc(field: &Field, doc: &FactorizationDoc) -> Result<Factorization> {
        let unit = field.element(doc.unit)?;
        let factors = doc
            .factors
            .iter()
            .map(|f| Ok((Poly::parse(field, &f.poly)?, f.mult)))
            .collect::<Result<Vec<_>>>()?;
        let cofactor = match (&doc.cofactor, &doc.cofactor_irreducible) {
            (None, None) => None,
            (Some(text), Some(flag)) => {
                let status = match flag {
                    Flag::Bool(true) => CofactorStatus::Irreducible,
                    Flag::Bool(false) => CofactorStatus::Reducible,
                    Flag::Text(s) if s == "unchecked" => CofactorStatus::Unchecked,
                    Flag::Text(s) => return Err(Error::Parse(format!("bad cofactor flag {s:?}"))),
                };
                Some((Poly::parse(field, text)?, status))
            }
            _ => {
                return Err(Error::Parse(
                    "cofactor and cofactor_irreducible must both be present or both null".into(),
                ))
            }
        };
        Ok(Factorization::new(unit, factors, cofactor))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("plain data")
    }
}

/// Serialized form of a [`Factorization`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDoc {
    pub unit: u64,
    pub factors: Vec<FactorDoc>,
    pub cofactor: Option<String>,
    pub cofactor_irreducible: Option<Flag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub poly: String,
    pub mult: u32,
}

/// `true`, `false` or `"unchecked"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Flag {
    Bool(bool),
    Text(String),
}

/// Pairwise coprime monic squarefree parts with their exponents, ascending
/// by exponent.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot decompose the zero polynomial".into(),
        ));
    }
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out.sort_by_key(|(_, e)| *e);
    Ok(out)
}

fn sqf_rec(f: &Poly, scale: u32, out: &mut Vec<(Poly, u32)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().characteristic() as u32;
    let df = f.derivative(1);
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root().expect("remaining part is a p-th power");
        sqf_rec(&root, scale * p, out);
    }
}

/// Distinct-degree splitting of a monic squarefree `f`: pairs (product of
/// all irreducible factors of degree `i`, `i`), ascending in `i`.
pub fn ddf(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let t = Poly::t(field);
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut h = rem_or_zero(&t, &rest);
    let mut i = 0;
    while rest.deg().is_some_and(|n| n >= 2 * (i + 1)) {
        i += 1;
        h = h.frobenius_mod(&rest);
        let g = h.sub(&t).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = rem_or_zero(&h, &rest);
            out.push((g, i));
        }
    }
    if let Some(n) = rest.deg().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

/// Remainder that tolerates a unit modulus.
fn rem_or_zero(a: &Poly, m: &Poly) -> Poly {
    if m.is_constant() {
        Poly::zero(a.field())
    } else {
        a.rem(m)
    }
}

fn edf_rng(seed: u64, i: usize, f: &Poly) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update((i as u64).to_le_bytes());
    h.update(f.canonical_bytes());
    let digest: [u8; 32] = h.finalize().into();
    ChaCha8Rng::from_seed(digest)
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree `f`
/// whose irreducible factors all have degree `i`. Deterministic in `seed`;
/// the result is sorted.
pub fn edf(f: &Poly, i: usize, seed: u64) -> Vec<Poly> {
    let f = f.monic();
    let n = f.deg().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    assert!(
        i >= 1 && n.is_multiple_of(i),
        "degree {n} is not a multiple of {i}"
    );
    let mut rng = edf_rng(seed, i, &f);
    let mut out = Vec::with_capacity(n / i);
    let mut stack = vec![f];
    while let Some(g) = stack.pop() {
        if g.deg() == Some(i) {
            out.push(g);
            continue;
        }
        let d = loop {
            let s = splitter(&g, i, &mut rng);
            if s.deg().is_some_and(|k| k > 0) && s.deg() < g.deg() {
                break s;
            }
        };
        let other = g.exact_div(&d).expect("gcd divides");
        stack.push(d);
        stack.push(other);
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// `gcd(s(r), g)` for a random `r`, where `s` is `r^((q^i-1)/2) - 1` for odd
/// `q` and the absolute trace for even `q`.
fn splitter(g: &Poly, i: usize, rng: &mut ChaCha8Rng) -> Poly {
    let field = g.field();
    let q = field.order();
    let n = g.deg().expect("nonzero");
    let codes: Vec<u64> = (0..n).map(|_| rng.random_range(0..q)).collect();
    let r = Poly::from_codes_unchecked(field, codes);
    if r.is_constant() {
        return Poly::one(field);
    }
    let s = if q % 2 == 1 {
        // r^((q^i-1)/2) = (r · r^q ⋯ r^(q^(i-1)))^((q-1)/2)
        let mut cur = r.clone();
        let mut norm = r.clone();
        for _ in 1..i {
            cur = cur.frobenius_mod(g);
            norm = norm.mul(&cur).rem(g);
        }
        norm.powmod_u64((q - 1) / 2, g)
            .expect("nonconstant modulus")
            .sub(&Poly::one(field))
    } else {
        let k = field.absolute_degree() as usize;
        let mut cur = r.clone();
        let mut trace = r;
        for _ in 1..k * i {
            cur = cur.square().rem(g);
            trace = trace.add(&cur);
        }
        trace
    };
    s.gcd(g)
}

/// Complete factorization; every base is verified irreducible and the
/// product is checked against `f`.
pub fn factorize(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let field = f.field();
    let unit = field.element(f.leading())?;
    let mut jobs: Vec<(Poly, usize, u32)> = Vec::new();
    for (part, e) in squarefree_decomposition(f)? {
        for (g, i) in ddf(&part) {
            jobs.push((g, i, e));
        }
    }
    let factors: Vec<(Poly, u32)> = jobs
        .par_iter()
        .flat_map_iter(|(g, i, e)| edf(g, *i, seed).into_iter().map(move |p| (p, *e)))
        .collect();
    let bad = factors.par_iter().find_any(|(p, _)| !is_irreducible(p));
    if let Some((p, _)) = bad {
        return Err(Error::TheoremViolation(format!("factor {p} is reducible")));
    }
    let out = Factorization::new(unit, factors, None);
    check_product(&out, f)?;
    Ok(out)
}

fn check_product(fac: &Factorization, f: &Poly) -> Result<()> {
    if &fac.product() != f {
        return Err(Error::TheoremViolation(
            "factorization does not reconstruct its input".into(),
        ));
    }
    Ok(())
}

/// Options for [`trial_division`].
#[derive(Clone, Copy, Debug)]
pub struct PartialOptions {
    pub seed: u64,
    /// Cofactors up to this degree get an irreducibility verdict.
    pub cofactor_check_bound: usize,
}

impl Default for PartialOptions {
    fn default() -> Self {
        PartialOptions {
            seed: 0,
            cofactor_check_bound: COFACTOR_CHECK_BOUND,
        }
    }
}

/// Extracts every irreducible factor of degree at most `max_degree` with
/// exact multiplicity; what remains is reported as the cofactor.
pub fn trial_division(f: &Poly, max_degree: usize, opts: &PartialOptions) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let field = f.field();
    let unit = field.element(f.leading())?;
    let t = Poly::t(field);
    let mut rest = f.monic();
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    let mut h = rem_or_zero(&t, &rest);
    for k in 1..=max_degree {
        let Some(n) = rest.deg().filter(|&n| n > 0) else {
            break;
        };
        if n < 2 * k {
            // no factor of degree < k is left, so rest is irreducible
            if n <= max_degree {
                factors.push((rest.clone(), 1));
                rest = Poly::one(field);
            }
            break;
        }
        h = h.frobenius_mod(&rest);
        let g = h.sub(&t).gcd(&rest);
        if g.is_one() {
            continue;
        }
        for p in edf(&g, k, opts.seed) {
            let mut m = 0;
            while let Ok(q) = rest.exact_div(&p) {
                rest = q;
                m += 1;
            }
            factors.push((p, m));
        }
        h = rem_or_zero(&h, &rest);
    }
    let cofactor = match rest.deg() {
        Some(0) | None => None,
        Some(n) => {
            let status = if n < 2 * (max_degree + 1) {
                CofactorStatus::Irreducible
            } else if n <= opts.cofactor_check_bound {
                if is_irreducible(&rest) {
                    CofactorStatus::Irreducible
                } else {
                    CofactorStatus::Reducible
                }
            } else {
                CofactorStatus::Unchecked
            };
            Some((rest, status))
        }
    };
    let out = Factorization::new(unit, factors, cofactor);
    check_product(&out, f)?;
    Ok(out)
}
