//! Finite fields `F_p` and towers `F_p ⊆ F_q ⊆ F_{q^d}`.
//!
//! Every element is identified with an integer code in `[0, order)`. For an
//! extension `E = B[x]/(m)` of degree `n`, the element `c_0 + c_1 x + ... +
//! c_{n-1} x^{n-1}` has code `Σ code(c_i) · |B|^i`, applied recursively down
//! to residues mod `p`. Base-field elements therefore keep their code when
//! viewed inside an extension, so embedding up the tower is free.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::irr;
use crate::poly::Poly;

/// Extension fields up to this order get exp/log tables at construction.
const TABLE_LIMIT: u64 = 1024;
const MAX_CHARACTERISTIC: u64 = 1 << 31;
const MAX_ORDER: u64 = 1 << 62;
/// Number of extensions allowed above the prime field.
const MAX_HEIGHT: usize = 2;

type Coords = SmallVec<[u64; 32]>;

/// A finite field, cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u64,
    order: u64,
    abs_degree: u32,
    height: usize,
    ext: Option<Extension>,
    tables: Option<Tables>,
}

struct Extension {
    base: Field,
    /// Monic, low to high, length `degree + 1`; entries are base codes.
    modulus: Vec<u64>,
    degree: usize,
}

struct Tables {
    /// `exp[i] = g^i` for `i < 2(order - 1)`.
    exp: Vec<u64>,
    log: Vec<u32>,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::OrderTooLarge(format!("characteristic {p} >= 2^31")));
        }
        Ok(Field(Arc::new(Inner {
            p,
            order: p,
            abs_degree: 1,
            height: 0,
            ext: None,
            tables: None,
        })))
    }

    /// `base[x]/(modulus)`. The modulus must be monic and irreducible over
    /// `base`; irreducibility is always verified.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        Self::check_modulus(base, modulus)?;
        if !irr::is_irreducible(modulus) {
            return Err(Error::Reducible(modulus.to_string()));
        }
        Self::build_extension(base, modulus)
    }

    /// Like [`Field::extension`] for a modulus the caller already proved
    /// irreducible (enumerated primes).
    pub(crate) fn extension_trusted(base: &Field, modulus: &Poly) -> Result<Field> {
        Self::check_modulus(base, modulus)?;
        Self::build_extension(base, modulus)
    }

    fn check_modulus(base: &Field, modulus: &Poly) -> Result<()> {
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        match modulus.deg() {
            None | Some(0) => return Err(Error::ConstantModulus),
            Some(_) => {}
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if base.height() >= MAX_HEIGHT {
            return Err(Error::TowerTooTall);
        }
        Ok(())
    }

    fn build_extension(base: &Field, modulus: &Poly) -> Result<Field> {
        let degree = modulus.deg().expect("checked nonconstant");
        let order = (base.order() as u128)
            .checked_pow(degree as u32)
            .filter(|&o| o <= MAX_ORDER as u128)
            .ok_or_else(|| {
                Error::OrderTooLarge(format!("{}^{degree} exceeds 2^62", base.order()))
            })? as u64;
        let mut field = Inner {
            p: base.characteristic(),
            order,
            abs_degree: base.absolute_degree() * degree as u32,
            height: base.height() + 1,
            ext: Some(Extension {
                base: base.clone(),
                modulus: modulus.codes(),
                degree,
            }),
            tables: None,
        };
        if order <= TABLE_LIMIT {
            field.tables = Some(Tables::build(&Field(Arc::new(field.clone_untabled()))));
        }
        Ok(Field(Arc::new(field)))
    }

    /// The field with `q = p^k` elements, modelled by [`default_modulus`].
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, k) = split_prime_power(q)?;
        let fp = Field::prime(p)?;
        if k == 1 {
            return Ok(fp);
        }
        let m = default_modulus(&fp, k as usize)?;
        Field::extension_trusted(&fp, &m)
    }

    /// Parses descriptors such as `5`, `3^2`, `9:t^2+1` (modulus over the
    /// prime field, coefficients as codes) or `16:t^2+t+2@4` (modulus over
    /// the field described after `@`).
    pub fn parse(descriptor: &str) -> Result<Field> {
        let descriptor = descriptor.trim();
        let (head, base) = match descriptor.split_once('@') {
            Some((head, rest)) => (head, Some(Field::parse(rest)?)),
            None => (descriptor, None),
        };
        let (order_text, modulus_text) = match head.split_once(':') {
            Some((o, m)) => (o.trim(), Some(m.trim())),
            None => (head.trim(), None),
        };
        let order = parse_order(order_text)?;
        match (base, modulus_text) {
            (None, None) => Field::with_order(order),
            (base, Some(m)) => {
                let base = match base {
                    Some(b) => b,
                    None => Field::prime(split_prime_power(order)?.0)?,
                };
                let modulus = Poly::parse(&base, m)?;
                let field = Field::extension(&base, &modulus)?;
                if field.order() != order {
                    return Err(Error::Parse(format!(
                        "descriptor order {order} does not match modulus (field of order {})",
                        field.order()
                    )));
                }
                Ok(field)
            }
            (Some(_), None) => Err(Error::Parse(format!(
                "descriptor {descriptor:?}: '@' requires an explicit modulus"
            ))),
        }
    }

    /// Canonical descriptor; round-trips through [`Field::parse`].
    pub fn descriptor(&self) -> String {
        match &self.0.ext {
            None => self.0.p.to_string(),
            Some(e) => {
                let m = Poly::from_codes_unchecked(&e.base, e.modulus.clone());
                if e.base.is_prime_field() {
                    format!("{}:{}", self.order(), m)
                } else {
                    format!("{}:{}@{}", self.order(), m, e.base.descriptor())
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> u32 {
        self.0.abs_degree
    }

    /// Number of extensions above the prime field (0, 1 or 2).
    pub fn height(&self) -> usize {
        self.0.height
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.ext.as_ref().map(|e| &e.base)
    }

    pub fn degree_over_base(&self) -> usize {
        self.0.ext.as_ref().map_or(1, |e| e.degree)
    }

    /// Defining polynomial over the base field, if this is an extension.
    pub fn modulus(&self) -> Option<Poly> {
        self.0
            .ext
            .as_ref()
            .map(|e| Poly::from_codes_unchecked(&e.base, e.modulus.clone()))
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.ext.is_none()
    }

    pub(crate) fn prime_modulus(&self) -> Option<u64> {
        self.is_prime_field().then_some(self.0.p)
    }

    pub(crate) fn is_gf2(&self) -> bool {
        self.0.p == 2 && self.is_prime_field()
    }

    /// True if `self` equals `other` or lies below it in `other`'s tower.
    pub fn is_subfield_of(&self, other: &Field) -> bool {
        let mut cur = Some(other);
        while let Some(f) = cur {
            if f == self {
                return true;
            }
            cur = f.base();
        }
        false
    }

    /// The smaller of two fields in one tower is embedded in the larger.
    pub fn join(a: &Field, b: &Field) -> Option<Field> {
        if a.is_subfield_of(b) {
            Some(b.clone())
        } else if b.is_subfield_of(a) {
            Some(a.clone())
        } else {
            None
        }
    }

    pub fn contains(&self, code: u64) -> bool {
        code < self.order()
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if !self.contains(code) {
            return Err(Error::CodeOutOfRange {
                code,
                order: self.order(),
            });
        }
        Ok(FieldElement {
            field: self.clone(),
            code,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            code: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            code: 1,
        }
    }

    /// The class of the indeterminate (for a prime field: 1).
    pub fn generator(&self) -> FieldElement {
        let code = match &self.0.ext {
            None => 1,
            Some(e) if e.degree == 1 => e.base.neg(e.modulus[0]),
            Some(e) => e.base.order(),
        };
        FieldElement {
            field: self.clone(),
            code,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |code| FieldElement {
            field: self.clone(),
            code,
        })
    }

    /// Base-`p` digits of a code, least significant first, padded to the
    /// absolute degree.
    pub fn digits(&self, mut code: u64) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.abs_degree)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.0.p + d)
    }

    /// Coordinates over the base field (a single code for a prime field).
    pub fn base_coords(&self, code: u64) -> Vec<u64> {
        match &self.0.ext {
            None => vec![code],
            Some(e) => coords(code, e.base.order(), e.degree).to_vec(),
        }
    }

    pub fn from_base_coords(&self, coords: &[u64]) -> u64 {
        match &self.0.ext {
            None => coords.first().copied().unwrap_or(0),
            Some(e) => encode(coords, e.base.order()),
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.ext.is_none() {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u64, 1u64);
        while a != 0 || b != 0 {
            let s = (a % p + b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let p = self.0.p;
        if self.0.ext.is_none() {
            return if a == 0 { 0 } else { p - a };
        }
        if p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut place) = (0u64, 1u64);
        while a != 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * place;
            }
            place *= p;
            a /= p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.0.ext.is_none() {
            let p = self.0.p;
            return if a >= b { a - b } else { a + p - b };
        }
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.ext {
            None => a * b % self.0.p,
            Some(e) => match &self.0.tables {
                Some(t) => t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize],
                None => e.mul(a, b),
            },
        }
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let n = self.order() - 1;
            let l = t.log[a as usize] as u64;
            return Ok(t.exp[((n - l) % n) as usize]);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        // the multiplicative group has order `order - 1`
        let n = self.order() - 1;
        let mut e = e % n;
        if e == 0 {
            e = n;
        }
        let (mut base, mut acc) = (a, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: u64, e: &BigUint) -> u64 {
        let n = BigUint::from(self.order() - 1);
        let reduced = e % &n;
        if reduced == BigUint::ZERO && *e != BigUint::ZERO {
            return self.pow(a, self.order() - 1);
        }
        self.pow(a, u64::try_from(reduced).expect("reduced below order"))
    }

    /// `x^(base_order^i)`.
    pub fn frobenius(&self, a: u64, i: u32, base_order: u64) -> u64 {
        if a == 0 || i == 0 {
            return a;
        }
        let n = (self.order() - 1) as u128;
        let mut e: u128 = 1;
        for _ in 0..i {
            e = e * base_order as u128 % n;
        }
        self.pow(a, e as u64)
    }
}

impl Inner {
    fn clone_untabled(&self) -> Inner {
        Inner {
            p: self.p,
            order: self.order,
            abs_degree: self.abs_degree,
            height: self.height,
            ext: self.ext.as_ref().map(|e| Extension {
                base: e.base.clone(),
                modulus: e.modulus.clone(),
                degree: e.degree,
            }),
            tables: None,
        }
    }
}

impl Extension {
    fn mul(&self, a: u64, b: u64) -> u64 {
        let base = &self.base;
        let n = self.degree;
        let bo = base.order();
        let av = coords(a, bo, n);
        let bv = coords(b, bo, n);
        let mut prod: Coords = SmallVec::from_elem(0, 2 * n - 1);
        for (i, &x) in av.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in bv.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(x, y));
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for j in 0..n {
                prod[k - n + j] = base.sub(prod[k - n + j], base.mul(c, self.modulus[j]));
            }
        }
        encode(&prod[..n], bo)
    }
}

impl Tables {
    fn build(field: &Field) -> Tables {
        let n = field.order() - 1;
        let factors = prime_factors(n);
        let g = (2..field.order())
            .find(|&g| factors.iter().all(|&r| field.pow(g, n / r) != 1))
            .unwrap_or(1);
        let mut exp = Vec::with_capacity(2 * n as usize);
        let mut log = vec![0u32; field.order() as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp.push(x);
            log[x as usize] = i as u32;
            x = field.mul(x, g);
        }
        for i in 0..n as usize {
            exp.push(exp[i]);
        }
        Tables { exp, log }
    }
}

fn coords(mut code: u64, base_order: u64, n: usize) -> Coords {
    (0..n)
        .map(|_| {
            let c = code % base_order;
            code /= base_order;
            c
        })
        .collect()
}

fn encode(coords: &[u64], base_order: u64) -> u64 {
    coords.iter().rev().fold(0, |acc, &c| acc * base_order + c)
}

fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrime(q));
    }
    let p = prime_factors(q)[0];
    let (mut r, mut k) = (q, 0u32);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(Error::NotPrime(q));
    }
    Ok((p, k))
}

fn parse_order(text: &str) -> Result<u64> {
    let bad = || Error::Parse(format!("bad field order {text:?}"));
    match text.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            p.checked_pow(k).ok_or_else(bad)
        }
        None => text.parse().map_err(|_| bad()),
    }
}

/// The lexicographically smallest monic irreducible of degree `k` over
/// `base`, comparing `(c_{k-1}, ..., c_0)` by element code.
pub fn default_modulus(base: &Field, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    irr::first_irreducible(base, k)?
        .ok_or_else(|| Error::InvalidArgument(format!("no irreducible of degree {k}")))
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.p != other.0.p || self.0.order != other.0.order {
            return false;
        }
        match (&self.0.ext, &other.0.ext) {
            (None, None) => true,
            (Some(a), Some(b)) => a.modulus == b.modulus && a.base == b.base,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.order.hash(state);
        if let Some(e) = &self.0.ext {
            e.modulus.hash(state);
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

/// An element of a [`Field`], carried as its integer code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    code: u64,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with_code(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with_code(self.field.pow(self.code, e))
    }

    pub fn frobenius(&self, i: u32, base_order: u64) -> FieldElement {
        self.with_code(self.field.frobenius(self.code, i, base_order))
    }

    /// The same element viewed in a larger field of the tower.
    pub fn embed(&self, target: &Field) -> Result<FieldElement> {
        if !self.field.is_subfield_of(target) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement {
            field: target.clone(),
            code: self.code,
        })
    }

    fn with_code(&self, code: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            code,
        }
    }

    fn binary(&self, rhs: &FieldElement, op: impl Fn(&Field, u64, u64) -> u64) -> FieldElement {
        let field =
            Field::join(&self.field, &rhs.field).expect("field elements from unrelated fields");
        let code = op(&field, self.code, rhs.code);
        FieldElement { field, code }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.code, self.field)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, Field::add)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, Field::sub)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, Field::mul)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with_code(self.field.neg(self.code))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn prime_fields() {
        assert_eq!(Field::prime(2).unwrap().order(), 2);
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(9))));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.order(), 5);
        for c in 0..5 {
            assert_eq!(f5.digits(c), vec![c]);
            assert_eq!(f5.from_digits(&[c]), c);
        }
        assert_eq!(f5.pow(2, 4), 1);
    }

    #[test]
    fn f4_from_t2_t_1() {
        let m = Poly::parse(&f2(), "t^2+t+1").unwrap();
        let f4 = Field::extension(&f2(), &m).unwrap();
        assert_eq!(f4.order(), 4);
        let g = f4.generator();
        // g^2 = g + 1
        assert_eq!((&g * &g).code(), f4.add(g.code(), 1));
        assert_eq!(f4.inv(1).unwrap(), 1);
        // frobenius with q = 2 squares
        assert_eq!(g.frobenius(1, 2).code(), f4.add(g.code(), 1));
        assert_eq!(g.frobenius(0, 2), g);
    }

    #[test]
    fn reducible_modulus_rejected() {
        let m = Poly::parse(&f2(), "t^2+1").unwrap();
        assert!(matches!(
            Field::extension(&f2(), &m),
            Err(Error::Reducible(_))
        ));
        let f3 = Field::prime(3).unwrap();
        let m = Poly::parse(&f3, "2*t^2+1").unwrap();
        assert!(matches!(Field::extension(&f3, &m), Err(Error::NotMonic)));
    }

    #[test]
    fn f27_generator_relation() {
        let f3 = Field::prime(3).unwrap();
        let m = Poly::parse(&f3, "t^3+2*t+2").unwrap();
        let f27 = Field::extension(&f3, &m).unwrap();
        let th = f27.generator();
        // θ^3 = θ + 1
        assert_eq!(th.pow(3), &th + &f27.one());
    }

    #[test]
    fn default_moduli() {
        let f2 = f2();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(default_modulus(&f2, 2).unwrap().to_string(), "t^2+t+1");
        assert_eq!(default_modulus(&f2, 1).unwrap().to_string(), "t");
        assert_eq!(default_modulus(&f3, 2).unwrap().to_string(), "t^2+1");
    }

    #[test]
    fn descriptors_round_trip() {
        for d in ["2", "5", "4:t^2+t+1", "9:t^2+1", "25:t^2+t+2", "8:t^3+t+1"] {
            let f = Field::parse(d).unwrap();
            assert_eq!(f.descriptor(), d);
            assert_eq!(Field::parse(&f.descriptor()).unwrap(), f);
        }
        assert_eq!(Field::parse("3^2").unwrap().descriptor(), "9:t^2+1");
        assert_eq!(Field::parse("9").unwrap().descriptor(), "9:t^2+1");
        assert!(Field::parse("6").is_err());
        assert!(Field::parse("9:t^3+2*t+2").is_err());
    }

    #[test]
    fn tower_height_is_capped() {
        let f4 = Field::with_order(4).unwrap();
        let m = default_modulus(&f4, 2).unwrap();
        let f16 = Field::extension(&f4, &m).unwrap();
        assert_eq!(f16.height(), 2);
        assert_eq!(f16.order(), 16);
        let m2 = default_modulus(&f16, 2);
        assert!(matches!(
            m2.and_then(|m| Field::extension(&f16, &m)),
            Err(Error::TowerTooTall)
        ));
        let parsed = Field::parse(&f16.descriptor()).unwrap();
        assert_eq!(parsed, f16);
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f9 = Field::with_order(9).unwrap();
        assert!(matches!(f9.inv(0), Err(Error::DivisionByZero)));
    }
}
