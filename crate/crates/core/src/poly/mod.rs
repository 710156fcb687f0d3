//! Dense univariate polynomials over a [`Field`].
//!
//! Polynomials over `F_2` are bit-packed; every other field stores one
//! element code per `u64` lane. All operations are pure.

pub(crate) mod dense;
pub(crate) mod gf2;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Rem, Sub};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use dense::with_arith;
use gf2::Bits;

pub use dense::KARATSUBA_THRESHOLD;
pub use gf2::GF2_KARATSUBA_WORDS;

/// Degree of a polynomial. The zero polynomial has degree `NegInf`, which
/// orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Bits(Bits),
    /// Normalized: empty or last code nonzero.
    Dense(Vec<u64>),
}

#[derive(Clone)]
pub struct Poly {
    field: Field,
    repr: Repr,
}

impl Poly {
    fn wrap(field: &Field, repr: Repr) -> Poly {
        Poly {
            field: field.clone(),
            repr,
        }
    }

    fn dense(field: &Field, mut codes: Vec<u64>) -> Poly {
        if field.is_gf2() {
            return Poly::wrap(field, Repr::Bits(Bits::from_codes(&codes)));
        }
        dense::normalize(&mut codes);
        Poly::wrap(field, Repr::Dense(codes))
    }

    fn bits(field: &Field, b: Bits) -> Poly {
        Poly::wrap(field, Repr::Bits(b))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::dense(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::dense(field, vec![1])
    }

    /// The indeterminate `t`.
    pub fn t(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    pub fn constant(field: &Field, code: u64) -> Poly {
        Poly::dense(field, vec![code])
    }

    /// `code · t^k`.
    pub fn monomial(field: &Field, code: u64, k: usize) -> Poly {
        if code == 0 {
            return Poly::zero(field);
        }
        if field.is_gf2() {
            return Poly::bits(field, Bits::monomial(k));
        }
        let mut v = vec![0u64; k + 1];
        v[k] = code;
        Poly::wrap(field, Repr::Dense(v))
    }

    /// Coefficient codes, index `i` = coefficient of `t^i`.
    pub fn from_codes(field: &Field, codes: Vec<u64>) -> Result<Poly> {
        if let Some(&bad) = codes.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::CodeOutOfRange {
                code: bad,
                order: field.order(),
            });
        }
        Ok(Poly::dense(field, codes))
    }

    pub(crate) fn from_codes_unchecked(field: &Field, codes: Vec<u64>) -> Poly {
        Poly::dense(field, codes)
    }

    /// Sum of `code · t^exp` terms; repeated exponents accumulate.
    pub fn from_terms(field: &Field, terms: &[(usize, u64)]) -> Result<Poly> {
        let top = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
        let mut v = vec![0u64; top + 1];
        for &(e, c) in terms {
            if !field.contains(c) {
                return Err(Error::CodeOutOfRange {
                    code: c,
                    order: field.order(),
                });
            }
            v[e] = field.add(v[e], c);
        }
        Ok(Poly::dense(field, v))
    }

    pub fn from_elements(coeffs: &[FieldElement]) -> Result<Poly> {
        let field = coeffs
            .first()
            .map(|c| c.field().clone())
            .ok_or_else(|| Error::InvalidArgument("empty coefficient list".into()))?;
        if coeffs.iter().any(|c| c.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::dense(
            &field,
            coeffs.iter().map(|c| c.code()).collect(),
        ))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> Degree {
        match self.deg() {
            None => Degree::NegInf,
            Some(d) => Degree::Finite(d),
        }
    }

    /// Degree as an option, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        match &self.repr {
            Repr::Bits(b) => b.degree(),
            Repr::Dense(v) => v.len().checked_sub(1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.deg().is_none()
    }

    pub fn is_one(&self) -> bool {
        self.deg() == Some(0) && self.coeff(0) == 1
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.deg().is_none_or(|d| d == 0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Leading coefficient code; 0 for the zero polynomial.
    pub fn leading(&self) -> u64 {
        self.deg().map_or(0, |d| self.coeff(d))
    }

    pub fn coeff(&self, i: usize) -> u64 {
        match &self.repr {
            Repr::Bits(b) => b.bit(i) as u64,
            Repr::Dense(v) => v.get(i).copied().unwrap_or(0),
        }
    }

    pub fn coeff_element(&self, i: usize) -> FieldElement {
        self.field
            .element(self.coeff(i))
            .expect("stored codes are valid")
    }

    /// Coefficient codes low to high, without trailing zeros.
    pub fn codes(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Bits(b) => b.to_codes(),
            Repr::Dense(v) => v.clone(),
        }
    }

    /// Nonzero terms `(exponent, code)`, ascending.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        match &self.repr {
            Repr::Bits(b) => b.support().into_iter().map(|e| (e, 1)).collect(),
            Repr::Dense(v) => v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e, c))
                .collect(),
        }
    }

    pub fn term_count(&self) -> usize {
        match &self.repr {
            Repr::Bits(b) => b.count_ones(),
            Repr::Dense(v) => v.iter().filter(|&&c| c != 0).count(),
        }
    }

    fn same_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over different fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn neg(&self) -> Poly {
        match &self.repr {
            Repr::Bits(_) => self.clone(),
            Repr::Dense(v) => {
                let f = &self.field;
                Poly::wrap(f, Repr::Dense(v.iter().map(|&c| f.neg(c)).collect()))
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => Poly::bits(&self.field, a.add(b)),
            (Repr::Dense(a), Repr::Dense(b)) => {
                let v = with_arith!(&self.field, |ar| dense::add(&ar, a, b));
                Poly::wrap(&self.field, Repr::Dense(v))
            }
            _ => unreachable!("representation follows the field"),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => Poly::bits(&self.field, a.add(b)),
            (Repr::Dense(a), Repr::Dense(b)) => {
                let v = with_arith!(&self.field, |ar| dense::sub(&ar, a, b));
                Poly::wrap(&self.field, Repr::Dense(v))
            }
            _ => unreachable!("representation follows the field"),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => Poly::bits(&self.field, a.mul(b)),
            (Repr::Dense(a), Repr::Dense(b)) => {
                let v = with_arith!(&self.field, |ar| dense::mul(&ar, a, b));
                Poly::wrap(&self.field, Repr::Dense(v))
            }
            _ => unreachable!("representation follows the field"),
        }
    }

    pub fn square(&self) -> Poly {
        match &self.repr {
            Repr::Bits(b) => Poly::bits(&self.field, b.square()),
            Repr::Dense(_) => self.mul(self),
        }
    }

    /// Multiplies by the constant with the given code.
    pub fn scale(&self, code: u64) -> Poly {
        match &self.repr {
            Repr::Bits(_) => {
                if code & 1 == 1 {
                    self.clone()
                } else {
                    Poly::bits(&self.field, Bits::zero())
                }
            }
            Repr::Dense(v) => {
                let out = with_arith!(&self.field, |ar| dense::scale(&ar, v, code));
                Poly::dense(&self.field, out)
            }
        }
    }

    /// Multiplies by `t^k`.
    pub fn shl(&self, k: usize) -> Poly {
        match &self.repr {
            Repr::Bits(b) => Poly::bits(&self.field, b.shl(k)),
            Repr::Dense(v) => {
                if v.is_empty() {
                    return self.clone();
                }
                let mut out = vec![0u64; k];
                out.extend_from_slice(v);
                Poly::wrap(&self.field, Repr::Dense(out))
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(g);
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.repr, &g.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                let (q, r) = a.divrem(b);
                (Poly::bits(&self.field, q), Poly::bits(&self.field, r))
            }
            (Repr::Dense(a), Repr::Dense(b)) => {
                let (q, r) = with_arith!(&self.field, |ar| dense::divrem(&ar, a, b));
                (
                    Poly::wrap(&self.field, Repr::Dense(q)),
                    Poly::wrap(&self.field, Repr::Dense(r)),
                )
            }
            _ => unreachable!("representation follows the field"),
        })
    }

    /// Remainder modulo `g`; panics if `g` is zero (like integer `%`).
    pub fn rem(&self, g: &Poly) -> Poly {
        self.same_field(g);
        assert!(!g.is_zero(), "remainder by the zero polynomial");
        if self.deg() < g.deg() {
            return self.clone();
        }
        match (&self.repr, &g.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => Poly::bits(&self.field, a.rem(b)),
            (Repr::Dense(a), Repr::Dense(b)) => {
                let r = with_arith!(&self.field, |ar| dense::rem(&ar, a, b));
                Poly::wrap(&self.field, Repr::Dense(r))
            }
            _ => unreachable!("representation follows the field"),
        }
    }

    /// `self / g`, failing with `NotDivisible` if the remainder is nonzero.
    pub fn exact_div(&self, g: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(g)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible {
                dividend: abbreviate(self),
                divisor: abbreviate(g),
            });
        }
        Ok(q)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        let lc = self.leading();
        if lc <= 1 {
            return self.clone();
        }
        self.scale(self.field.inv(lc).expect("nonzero leading coefficient"))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.same_field(other);
        if let (Repr::Bits(a), Repr::Bits(b)) = (&self.repr, &other.repr) {
            return Poly::bits(&self.field, a.gcd(b));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s)` with `g = gcd(self, m)` monic and `s·self ≡ g (mod m)`.
    pub fn gcdinv(&self, m: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(m);
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let zero = Poly::zero(&self.field);
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (zero, Poly::one(&self.field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1)).rem(m);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let lc = r0.leading();
        if lc == 0 {
            return Ok((r0, Poly::zero(&self.field)));
        }
        let inv = self.field.inv(lc)?;
        Ok((r0.scale(inv), s0.scale(inv)))
    }

    /// Inverse modulo `m`; `DivisionByZero` if not coprime.
    pub fn inv_mod(&self, m: &Poly) -> Result<Poly> {
        let (g, s) = self.gcdinv(m)?;
        if !g.is_one() {
            return Err(Error::DivisionByZero);
        }
        Ok(s.rem(m))
    }

    /// The `i`-fold formal derivative.
    pub fn derivative(&self, i: usize) -> Poly {
        if i == 0 {
            return self.clone();
        }
        if let Repr::Bits(b) = &self.repr {
            // i(i-1) is even, so every higher derivative vanishes over F_2
            return if i == 1 {
                Poly::bits(&self.field, b.derivative())
            } else {
                Poly::bits(&self.field, Bits::zero())
            };
        }
        let p = self.field.characteristic();
        let v = self.codes();
        if v.len() <= i {
            return Poly::zero(&self.field);
        }
        let out = (i..v.len())
            .map(|j| {
                // falling factorial j(j-1)...(j-i+1) mod p
                let ff = (0..i as u64).fold(1u64, |acc, k| acc * ((j as u64 - k) % p) % p);
                self.field.mul(v[j], ff)
            })
            .collect();
        Poly::dense(&self.field, out)
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn powmod(&self, e: &BigUint, m: &Poly) -> Result<Poly> {
        self.same_field(m);
        if m.deg().is_none_or(|d| d == 0) {
            return Err(Error::InvalidArgument(
                "modulus must have degree >= 1".into(),
            ));
        }
        let mut acc = Poly::one(&self.field);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.square().rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        Ok(acc.rem(m))
    }

    pub fn powmod_u64(&self, e: u64, m: &Poly) -> Result<Poly> {
        self.powmod(&BigUint::from(e), m)
    }

    /// `self^(q^d)` where every coefficient is fixed by `x -> x^q`,
    /// computed by substituting `t -> t^(q^d)` without any multiplication.
    pub fn q_power_expand(&self, q: u64, d: u32) -> Result<Poly> {
        if q != self.field.order() {
            let fixed = self.terms().iter().all(|&(_, c)| self.field.pow(c, q) == c);
            if !fixed {
                return Err(Error::CoefficientsNotInFixedField(q));
            }
        }
        let factor = (q as u128).checked_pow(d).ok_or(Error::BoundExceeded {
            what: "exponent q^d",
            value: u128::MAX,
            bound: usize::MAX as u128,
        })?;
        self.scale_exponents(factor)
    }

    /// Substitutes `t -> t^factor`.
    pub fn scale_exponents(&self, factor: u128) -> Result<Poly> {
        let Some(d) = self.deg() else {
            return Ok(self.clone());
        };
        let top = (d as u128).checked_mul(factor);
        let limit = (isize::MAX as u128) / 64;
        let factor = match top {
            Some(t) if t <= limit => factor as usize,
            _ => {
                return Err(Error::BoundExceeded {
                    what: "degree after exponent scaling",
                    value: top.unwrap_or(u128::MAX),
                    bound: limit,
                })
            }
        };
        Ok(match &self.repr {
            Repr::Bits(b) => Poly::bits(&self.field, b.scale_exponents(factor)),
            Repr::Dense(v) => {
                let mut out = vec![0u64; d * factor + 1];
                for (i, &c) in v.iter().enumerate() {
                    out[i * factor] = c;
                }
                Poly::wrap(&self.field, Repr::Dense(out))
            }
        })
    }

    /// `self^q mod m` for `q` the field order (coefficients are fixed by
    /// the q-power map, so this is exponent scaling followed by reduction).
    pub fn frobenius_mod(&self, m: &Poly) -> Poly {
        let q = self.field.order() as u128;
        match &self.repr {
            Repr::Bits(b) => Poly::bits(&self.field, b.square()).rem(m),
            Repr::Dense(_) => self
                .scale_exponents(q)
                .expect("reduced operand is small")
                .rem(m),
        }
    }

    /// If every exponent is a multiple of `p`, the unique `g` with
    /// `g^p = self`.
    pub fn pth_root(&self) -> Option<Poly> {
        let p = self.field.characteristic() as usize;
        let terms = self.terms();
        if terms.iter().any(|&(e, _)| e % p != 0) {
            return None;
        }
        // c^(1/p) = c^(order/p) in a field of order p^k
        let root_exp = self.field.order() / p as u64;
        let roots: Vec<(usize, u64)> = terms
            .iter()
            .map(|&(e, c)| (e / p, self.field.pow(c, root_exp)))
            .collect();
        Some(Poly::from_terms(&self.field, &roots).expect("codes in range"))
    }

    /// Applies `x -> x^(base_order^i)` to every coefficient.
    pub fn map_frobenius(&self, i: u32, base_order: u64) -> Poly {
        let f = &self.field;
        let v = self
            .codes()
            .into_iter()
            .map(|c| f.frobenius(c, i, base_order))
            .collect();
        Poly::dense(f, v)
    }

    pub(crate) fn eval_code(&self, x: u64) -> u64 {
        let f = &self.field;
        self.codes()
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Horner evaluation at `x`, which may lie in an extension of the
    /// coefficient field (or in a subfield of it).
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        let field = Field::join(&self.field, x.field()).ok_or(Error::FieldMismatch)?;
        let code = self
            .codes()
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x.code()), c));
        field.element(code)
    }

    /// Synthetic division by `t - x`: `self = q·(t - x) + r` with
    /// `r = self(x)`. The quotient lives over the joined field.
    pub fn synth_div(&self, x: &FieldElement) -> Result<(Poly, FieldElement)> {
        let field = Field::join(&self.field, x.field()).ok_or(Error::FieldMismatch)?;
        let v = self.codes();
        if v.is_empty() {
            return Ok((Poly::zero(&field), field.zero()));
        }
        let mut q = vec![0u64; v.len() - 1];
        let mut acc = 0u64;
        for k in (0..v.len()).rev() {
            acc = field.add(field.mul(acc, x.code()), v[k]);
            if k > 0 {
                q[k - 1] = acc;
            }
        }
        Ok((Poly::dense(&field, q), field.element(acc)?))
    }

    /// `self(t + c)`.
    pub fn shift(&self, c: &FieldElement) -> Result<Poly> {
        let field = Field::join(&self.field, c.field()).ok_or(Error::FieldMismatch)?;
        let lin = Poly::from_codes_unchecked(&field, vec![c.code(), 1]);
        let mut acc = Poly::zero(&field);
        for &coef in self.codes().iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(&field, coef));
        }
        Ok(acc)
    }

    /// The same polynomial over a larger field of the tower.
    pub fn embed(&self, target: &Field) -> Result<Poly> {
        if !self.field.is_subfield_of(target) {
            return Err(Error::FieldMismatch);
        }
        if target == &self.field {
            return Ok(self.clone());
        }
        Ok(Poly::dense(target, self.codes()))
    }

    /// The same polynomial over a subfield, if its coefficients lie there.
    pub fn restrict(&self, sub: &Field) -> Result<Poly> {
        if !sub.is_subfield_of(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let v = self.codes();
        if v.iter().any(|&c| !sub.contains(c)) {
            return Err(Error::CoefficientsNotInFixedField(sub.order()));
        }
        Ok(Poly::dense(sub, v))
    }

    /// Reduces modulo `t^n - t` (`n >= 2`) by folding exponents:
    /// `t^e ≡ t^(((e-1) mod (n-1)) + 1)` for `e >= 1`.
    pub fn rem_t_power_minus_t(&self, n: usize) -> Poly {
        assert!(n >= 2);
        let Some(d) = self.deg() else {
            return self.clone();
        };
        if d < n {
            return self.clone();
        }
        let fold = |e: usize| if e == 0 { 0 } else { (e - 1) % (n - 1) + 1 };
        match &self.repr {
            Repr::Bits(b) => {
                let mut w = vec![0u64; n / 64 + 1];
                for e in b.support() {
                    let f = fold(e);
                    w[f / 64] ^= 1 << (f % 64);
                }
                Poly::bits(&self.field, Bits::from_words(w))
            }
            Repr::Dense(v) => {
                let f = &self.field;
                let mut out = vec![0u64; n];
                for (e, &c) in v.iter().enumerate() {
                    if c != 0 {
                        let k = fold(e);
                        out[k] = f.add(out[k], c);
                    }
                }
                Poly::dense(f, out)
            }
        }
    }

    /// Ordering used for canonical factor lists: degree first, then
    /// coefficient codes from the top down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (self.codes(), other.codes());
            a.iter().rev().cmp(b.iter().rev())
        })
    }

    /// Stable byte encoding (field descriptor plus coefficient codes).
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = self.field.descriptor().into_bytes();
        out.push(0);
        match &self.repr {
            Repr::Bits(b) => {
                for w in b.words() {
                    out.extend_from_slice(&w.to_le_bytes());
                }
            }
            Repr::Dense(v) => {
                for c in v {
                    out.extend_from_slice(&c.to_le_bytes());
                }
            }
        }
        out
    }

    /// List form `[c0,c1,...,cn]`.
    pub fn to_list_string(&self) -> String {
        text::format_list(self)
    }

    /// Parses the human form (`t^6+2*t+1`) or the list form (`[1,2,0,1]`).
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        text::parse(field, s)
    }
}

fn abbreviate(p: &Poly) -> String {
    match p.deg() {
        Some(d) if d > 40 => format!("<poly of degree {d}>"),
        _ => p.to_string(),
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.repr == other.repr && self.field == other.field
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.repr.hash(state);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::format_human(self, f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} over {})", self, self.field)
    }
}

macro_rules! impl_binop {
    ($tr:ident $m:ident) => {
        impl $tr for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                Poly::$m(self, rhs)
            }
        }
    };
}
impl_binop!(Add add);
impl_binop!(Sub sub);
impl_binop!(Mul mul);
impl_binop!(Rem rem);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Multiplication kernels exposed for the threshold benchmark.
pub mod kernels {
    use super::dense::{self, PrimeArith};
    use super::gf2;

    pub fn mod_p_mul(p: u64, a: &[u64], b: &[u64], threshold: usize) -> Vec<u64> {
        dense::mul_with_threshold(&PrimeArith::new(p), a, b, threshold)
    }

    pub fn gf2_mul_schoolbook(a: &[u64], b: &[u64]) -> Vec<u64> {
        gf2::mul_words_schoolbook(a, b)
    }

    pub fn gf2_mul_karatsuba(a: &[u64], b: &[u64], threshold_words: usize) -> Vec<u64> {
        gf2::mul_words_karatsuba(a, b, threshold_words)
    }
}

#[cfg(test)]
mod tests;
