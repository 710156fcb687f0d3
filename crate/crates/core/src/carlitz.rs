//! The Carlitz quantities `[n] = t^(q^n) - t`, `L_n = [n] L_{n-1}`,
//! `D_n = [n] D_{n-1}^q` and `F_d = (-1)^d D_d / L_d`, exactly and modulo a
//! supplied polynomial.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::irr::candidate;
use crate::poly::Poly;

/// Largest degree materialized by the exact computations.
pub const EXACT_DEGREE_GUARD: usize = 1 << 18;
/// Largest `q^d` accepted by [`CarlitzCache::f_brute`].
pub const BRUTE_BOUND: u128 = 1 << 20;
/// Largest `q^d` accepted by [`CarlitzCache::f_mod`].
pub const FMOD_BOUND: u128 = 1 << 22;

/// Which constant shift of `L_{d-1}` or `D_{d-1}` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Perturbation {
    /// `L_{d-1} - c`
    LMinusC,
    /// `D_{d-1} + (-1)^d c`
    DPlusSignC,
}

/// Memoized `[n]`, `L_n`, `D_n` over one field; safe to share between
/// threads.
pub struct CarlitzCache {
    field: Field,
    guard: usize,
    brackets: Mutex<HashMap<usize, Poly>>,
    l: Mutex<HashMap<usize, Poly>>,
    d: Mutex<HashMap<usize, Poly>>,
}

impl CarlitzCache {
    pub fn new(field: &Field) -> CarlitzCache {
        CarlitzCache::with_guard(field, EXACT_DEGREE_GUARD)
    }

    pub fn with_guard(field: &Field, guard: usize) -> CarlitzCache {
        CarlitzCache {
            field: field.clone(),
            guard,
            brackets: Mutex::new(HashMap::new()),
            l: Mutex::new(HashMap::new()),
            d: Mutex::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    fn check_degree(&self, what: &'static str, degree: u128) -> Result<()> {
        if degree > self.guard as u128 {
            return Err(Error::BoundExceeded {
                what,
                value: degree,
                bound: self.guard as u128,
            });
        }
        Ok(())
    }

    /// `q^n` as a degree, subject to the guard.
    fn q_pow(&self, what: &'static str, n: usize) -> Result<usize> {
        let v = (self.q() as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        self.check_degree(what, v)?;
        Ok(v as usize)
    }

    /// `deg L_n = Σ_{i=1}^n q^i`.
    pub fn l_degree(&self, n: usize) -> u128 {
        (1..=n as u32).fold(0u128, |acc, i| {
            acc.saturating_add((self.q() as u128).saturating_pow(i))
        })
    }

    /// `deg D_n = n q^n`.
    pub fn d_degree(&self, n: usize) -> u128 {
        (self.q() as u128)
            .saturating_pow(n as u32)
            .saturating_mul(n as u128)
    }

    /// `[n] = t^(q^n) - t`, `n >= 1`.
    pub fn bracket(&self, n: usize) -> Result<Poly> {
        if n == 0 {
            return Err(Error::InvalidArgument("[n] needs n >= 1".into()));
        }
        if let Some(b) = self.brackets.lock().unwrap().get(&n) {
            return Ok(b.clone());
        }
        let e = self.q_pow("degree of [n]", n)?;
        let b = Poly::monomial(&self.field, 1, e).sub(&Poly::t(&self.field));
        self.brackets.lock().unwrap().insert(n, b.clone());
        Ok(b)
    }

    /// `L_n`, the lcm of all monic polynomials of degree `n`.
    pub fn l(&self, n: usize) -> Result<Poly> {
        if n == 0 {
            return Ok(Poly::one(&self.field));
        }
        if let Some(v) = self.l.lock().unwrap().get(&n) {
            return Ok(v.clone());
        }
        self.check_degree("degree of L_n", self.l_degree(n))?;
        let prev = self.l(n - 1)?;
        let e = self.q_pow("degree of [n]", n)?;
        // [n]·L = t^(q^n)·L - t·L
        let v = prev.shl(e).sub(&prev.shl(1));
        self.l.lock().unwrap().insert(n, v.clone());
        Ok(v)
    }

    /// `D_n`, the product of all monic polynomials of degree `n`.
    pub fn d(&self, n: usize) -> Result<Poly> {
        if n == 0 {
            return Ok(Poly::one(&self.field));
        }
        if let Some(v) = self.d.lock().unwrap().get(&n) {
            return Ok(v.clone());
        }
        self.check_degree("degree of D_n", self.d_degree(n))?;
        let prev = self.d(n - 1)?.q_power_expand(self.q(), 1)?;
        let e = self.q_pow("degree of [n]", n)?;
        let v = prev.shl(e).sub(&prev.shl(1));
        self.d.lock().unwrap().insert(n, v.clone());
        Ok(v)
    }

    fn sign(&self, d: usize) -> u64 {
        if d.is_multiple_of(2) {
            1
        } else {
            self.field.neg(1)
        }
    }

    /// `F_d = (-1)^d D_d / L_d`, the product of all nonzero polynomials of
    /// degree `< d`.
    pub fn f(&self, d: usize) -> Result<Poly> {
        if d == 0 {
            return Err(Error::InvalidArgument("F_d needs d >= 1".into()));
        }
        let q = self.d(d)?.exact_div(&self.l(d)?)?;
        Ok(q.scale(self.sign(d)))
    }

    fn candidates(&self, d: usize, bound: u128) -> Result<u64> {
        let n = (self.q() as u128)
            .checked_pow(d as u32)
            .unwrap_or(u128::MAX);
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "q^d candidates",
                value: n,
                bound,
            });
        }
        Ok(n as u64)
    }

    /// Nonzero polynomials of degree `< d`, by index `1..q^d`.
    fn small_poly(&self, d: usize, idx: u64) -> Poly {
        // candidate() builds t^d + ...; drop the top term
        let c = candidate(&self.field, d, idx);
        c.sub(&Poly::monomial(&self.field, 1, d))
    }

    /// The literal product defining `F_d`.
    pub fn f_brute(&self, d: usize) -> Result<Poly> {
        let n = self.candidates(d, BRUTE_BOUND)?;
        let mut layer: Vec<Poly> = (1..n).map(|i| self.small_poly(d, i)).collect();
        while layer.len() > 1 {
            layer = layer
                .chunks(2)
                .map(|c| {
                    if c.len() == 2 {
                        c[0].mul(&c[1])
                    } else {
                        c[0].clone()
                    }
                })
                .collect();
        }
        Ok(layer.pop().unwrap_or_else(|| Poly::one(&self.field)))
    }

    /// The product defining `F_d`, reduced modulo `m` after every factor.
    pub fn f_mod(&self, d: usize, m: &Poly) -> Result<Poly> {
        check_modulus(m)?;
        let n = self.candidates(d, FMOD_BOUND)?;
        let mut acc = Poly::one(&self.field).rem(m);
        for i in 1..n {
            acc = acc.mul(&self.small_poly(d, i)).rem(m);
        }
        Ok(acc)
    }

    /// `[n] mod m`, by `n` Frobenius steps applied to `t`.
    pub fn bracket_mod(&self, n: usize, m: &Poly) -> Result<Poly> {
        check_modulus(m)?;
        let t = Poly::t(&self.field).rem(m);
        let mut h = t.clone();
        for _ in 0..n {
            h = h.frobenius_mod(m);
        }
        Ok(h.sub(&t))
    }

    /// `L_n mod m`.
    pub fn l_mod(&self, n: usize, m: &Poly) -> Result<Poly> {
        check_modulus(m)?;
        let t = Poly::t(&self.field).rem(m);
        let mut h = t.clone();
        let mut acc = Poly::one(&self.field).rem(m);
        for _ in 0..n {
            h = h.frobenius_mod(m);
            acc = acc.mul(&h.sub(&t)).rem(m);
        }
        Ok(acc)
    }

    /// `D_n mod m`.
    pub fn d_mod(&self, n: usize, m: &Poly) -> Result<Poly> {
        check_modulus(m)?;
        let t = Poly::t(&self.field).rem(m);
        let mut h = t.clone();
        let mut acc = Poly::one(&self.field).rem(m);
        for _ in 0..n {
            h = h.frobenius_mod(m);
            acc = acc.frobenius_mod(m).mul(&h.sub(&t)).rem(m);
        }
        Ok(acc)
    }

    /// `F_d mod m` through `F_d = (-1)^d D_{d-1}^q / L_{d-1}`; needs
    /// `L_{d-1}` invertible modulo `m` (true for powers of a prime of
    /// degree `>= d`).
    pub fn f_mod_fast(&self, d: usize, m: &Poly) -> Result<Poly> {
        if d == 0 {
            return Err(Error::InvalidArgument("F_d needs d >= 1".into()));
        }
        let dq = self.d_mod(d - 1, m)?.frobenius_mod(m);
        let linv = self.l_mod(d - 1, m)?.inv_mod(m)?;
        Ok(dq.mul(&linv).rem(m).scale(self.sign(d)))
    }

    /// `L_n mod [d]`, folding exponents instead of dividing.
    pub fn l_mod_bracket(&self, n: usize, d: usize) -> Result<Poly> {
        let big = self.q_pow("degree of [d]", d)?;
        let mut acc = Poly::one(&self.field);
        let mut qi = 1usize;
        for _ in 0..n {
            qi = fold_exponent(qi * self.q() as usize, big);
            acc = acc.shl(qi).sub(&acc.shl(1)).rem_t_power_minus_t(big);
        }
        Ok(acc)
    }

    /// `D_n mod [d]`.
    pub fn d_mod_bracket(&self, n: usize, d: usize) -> Result<Poly> {
        let big = self.q_pow("degree of [d]", d)?;
        let mut acc = Poly::one(&self.field);
        let mut qi = 1usize;
        for _ in 0..n {
            qi = fold_exponent(qi * self.q() as usize, big);
            let pw = acc.q_power_expand(self.q(), 1)?.rem_t_power_minus_t(big);
            acc = pw.shl(qi).sub(&pw.shl(1)).rem_t_power_minus_t(big);
        }
        Ok(acc)
    }

    /// `-L'_{d-1}`, whose degree-`d` prime factors are the Wilson primes.
    pub fn wilson_sum_poly(&self, d: usize) -> Result<Poly> {
        if d < 2 {
            return Err(Error::InvalidArgument("needs d >= 2".into()));
        }
        Ok(self.l(d - 1)?.derivative(1).neg())
    }

    /// `Σ_{i=1}^{d-1} L_{d-1}/[i]`, equal to [`Self::wilson_sum_poly`].
    pub fn wilson_sum_form(&self, d: usize) -> Result<Poly> {
        if d < 2 {
            return Err(Error::InvalidArgument("needs d >= 2".into()));
        }
        let l = self.l(d - 1)?;
        let mut acc = Poly::zero(&self.field);
        for i in 1..d {
            acc = acc.add(&l.exact_div(&self.bracket(i)?)?);
        }
        Ok(acc)
    }

    fn perturbation_constant(&self, kind: Perturbation, d: usize, c: &FieldElement) -> Result<u64> {
        if d < 2 {
            return Err(Error::InvalidArgument("perturbations need d >= 2".into()));
        }
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Err(Error::ZeroC);
        }
        Ok(match kind {
            Perturbation::LMinusC => self.field.neg(c.code()),
            Perturbation::DPlusSignC => self.field.mul(self.sign(d), c.code()),
        })
    }

    /// `L_{d-1} - c` or `D_{d-1} + (-1)^d c`.
    pub fn perturbation(&self, kind: Perturbation, d: usize, c: &FieldElement) -> Result<Poly> {
        let k = self.perturbation_constant(kind, d, c)?;
        let base = match kind {
            Perturbation::LMinusC => self.l(d - 1)?,
            Perturbation::DPlusSignC => self.d(d - 1)?,
        };
        Ok(base.add(&Poly::constant(&self.field, k)))
    }

    /// The perturbation reduced modulo `m`.
    pub fn perturbation_mod(
        &self,
        kind: Perturbation,
        d: usize,
        c: &FieldElement,
        m: &Poly,
    ) -> Result<Poly> {
        let k = self.perturbation_constant(kind, d, c)?;
        let base = match kind {
            Perturbation::LMinusC => self.l_mod(d - 1, m)?,
            Perturbation::DPlusSignC => self.d_mod(d - 1, m)?,
        };
        Ok(base.add(&Poly::constant(&self.field, k)).rem(m))
    }

    /// The perturbation reduced modulo `[d]`.
    pub fn perturbation_mod_bracket(
        &self,
        kind: Perturbation,
        d: usize,
        c: &FieldElement,
    ) -> Result<Poly> {
        let k = self.perturbation_constant(kind, d, c)?;
        let base = match kind {
            Perturbation::LMinusC => self.l_mod_bracket(d - 1, d)?,
            Perturbation::DPlusSignC => self.d_mod_bracket(d - 1, d)?,
        };
        Ok(base.add(&Poly::constant(&self.field, k)))
    }
}

fn fold_exponent(e: usize, n: usize) -> usize {
    if e < n {
        e
    } else {
        (e - 1) % (n - 1) + 1
    }
}

fn check_modulus(m: &Poly) -> Result<()> {
    if m.deg().is_none_or(|d| d == 0) {
        return Err(Error::InvalidArgument(
            "modulus must have degree >= 1".into(),
        ));
    }
    Ok(())
}
