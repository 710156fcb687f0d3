//! Irreducibility testing and enumeration of monic irreducibles.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{prime_factors, Field, FieldElement};
use crate::poly::Poly;

/// Largest candidate space (`q^d`) the enumerator accepts.
const MAX_CANDIDATES: u128 = 1 << 62;

/// A monic prime `℘` of degree `d` over `F_q`, its residue field
/// `F_{q^d} = F_q[x]/(℘)` and the class `θ` of `x`.
#[derive(Clone, Debug)]
pub struct PrimeContext {
    prime: Poly,
    residue_field: Field,
    theta: FieldElement,
}

impl PrimeContext {
    /// Verifies that `prime` is monic and irreducible.
    pub fn new(prime: Poly) -> Result<PrimeContext> {
        if prime.deg().is_none_or(|d| d == 0) {
            return Err(Error::ConstantModulus);
        }
        if !prime.is_monic() {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(&prime) {
            return Err(Error::Reducible(prime.to_string()));
        }
        PrimeContext::trusted(prime)
    }

    pub(crate) fn trusted(prime: Poly) -> Result<PrimeContext> {
        let residue_field = Field::extension_trusted(prime.field(), &prime)?;
        let theta = residue_field.generator();
        Ok(PrimeContext {
            prime,
            residue_field,
            theta,
        })
    }

    pub fn prime(&self) -> &Poly {
        &self.prime
    }

    pub fn base_field(&self) -> &Field {
        self.prime.field()
    }

    pub fn residue_field(&self) -> &Field {
        &self.residue_field
    }

    pub fn theta(&self) -> &FieldElement {
        &self.theta
    }

    pub fn degree(&self) -> usize {
        self.prime.deg().expect("nonconstant prime")
    }

    /// `Norm ℘ = q^d`, the order of the residue field.
    pub fn norm(&self) -> u64 {
        self.residue_field.order()
    }
}

/// Rabin's test: `f | t^(q^n) - t` and `gcd(t^(q^(n/r)) - t, f) = 1` for
/// every prime `r | n`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.deg() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let field = f.field();
    let t = Poly::t(field);
    let divisors: Vec<usize> = prime_factors(n as u64)
        .into_iter()
        .map(|r| n / r as usize)
        .collect();
    let mut h = t.clone();
    for k in 1..=n {
        h = h.frobenius_mod(&f);
        if divisors.contains(&k) && !h.sub(&t).gcd(&f).is_one() {
            return false;
        }
    }
    h == t.rem(&f)
}

/// Monic candidate of degree `d` with index `idx = Σ code(c_i)·q^i`.
pub fn candidate(field: &Field, d: usize, mut idx: u64) -> Poly {
    let q = field.order();
    let mut codes = Vec::with_capacity(d + 1);
    for _ in 0..d {
        codes.push(idx % q);
        idx /= q;
    }
    codes.push(1);
    Poly::from_codes_unchecked(field, codes)
}

/// `q^d`, the number of monic candidates of degree `d`.
pub fn candidate_count(field: &Field, d: usize) -> Result<u64> {
    let n = (field.order() as u128)
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_CANDIDATES)
        .ok_or(Error::BoundExceeded {
            what: "candidate count q^d",
            value: u128::MAX,
            bound: MAX_CANDIDATES,
        })?;
    Ok(n as u64)
}

/// Cheap necessary conditions: nonzero constant term (unless `f = t`) and,
/// for `d >= 2`, no root in the coefficient field.
fn passes_filters(f: &Poly, d: usize) -> bool {
    if f.coeff(0) == 0 {
        return d == 1;
    }
    if d >= 2 {
        let field = f.field();
        if field.order() <= 64 {
            if (0..field.order()).any(|x| f.eval_code(x) == 0) {
                return false;
            }
        } else {
            let t = Poly::t(field);
            if !t.frobenius_mod(f).sub(&t).gcd(f).is_one() {
                return false;
            }
        }
    }
    true
}

fn test_candidate(field: &Field, d: usize, idx: u64) -> Option<Poly> {
    let f = candidate(field, d, idx);
    (passes_filters(&f, d) && (d == 1 || is_irreducible(&f))).then_some(f)
}

/// Every monic irreducible of degree `d` exactly once, in increasing
/// candidate index (lexicographic on `(c_{d-1}, ..., c_0)`).
pub struct MonicIrreducibles {
    field: Field,
    d: usize,
    next: u64,
    end: u64,
}

impl MonicIrreducibles {
    pub fn new(field: &Field, d: usize) -> Result<MonicIrreducibles> {
        MonicIrreducibles::starting_at(field, d, 0)
    }

    /// Resumes the stream at candidate index `start`.
    pub fn starting_at(field: &Field, d: usize, start: u64) -> Result<MonicIrreducibles> {
        if d == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if field.height() >= 2 {
            return Err(Error::TowerTooTall);
        }
        let end = candidate_count(field, d)?;
        Ok(MonicIrreducibles {
            field: field.clone(),
            d,
            next: start.min(end),
            end,
        })
    }

    /// Index of the next candidate to be examined.
    pub fn next_index(&self) -> u64 {
        self.next
    }
}

impl Iterator for MonicIrreducibles {
    type Item = PrimeContext;

    fn next(&mut self) -> Option<PrimeContext> {
        while self.next < self.end {
            let idx = self.next;
            self.next += 1;
            if let Some(f) = test_candidate(&self.field, self.d, idx) {
                return Some(PrimeContext::trusted(f).expect("degree within field limits"));
            }
        }
        None
    }
}

/// The first monic irreducible of degree `d` in enumeration order.
pub(crate) fn first_irreducible(field: &Field, d: usize) -> Result<Option<Poly>> {
    let end = candidate_count(field, d)?;
    Ok((0..end).find_map(|idx| test_candidate(field, d, idx)))
}

/// All monic irreducibles of degree `d` in enumeration order, testing
/// candidates in parallel.
pub fn monic_irreducibles(field: &Field, d: usize) -> Result<Vec<PrimeContext>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if field.height() >= 2 {
        return Err(Error::TowerTooTall);
    }
    let end = candidate_count(field, d)?;
    let primes: Vec<Poly> = (0..end)
        .into_par_iter()
        .filter_map(|idx| test_candidate(field, d, idx))
        .collect();
    primes.into_iter().map(PrimeContext::trusted).collect()
}

/// Number of monic irreducibles of degree `d`: `(1/d) Σ_{e|d} μ(e) q^(d/e)`.
pub fn count_irreducibles(field: &Field, d: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let q = field.order() as i128;
    let overflow = || Error::BoundExceeded {
        what: "irreducible count",
        value: u128::MAX,
        bound: i128::MAX as u128,
    };
    let mut total: i128 = 0;
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        let mu = mobius(e as u64);
        if mu == 0 {
            continue;
        }
        let term = q.checked_pow((d / e) as u32).ok_or_else(overflow)?;
        total = total.checked_add(mu * term).ok_or_else(overflow)?;
    }
    Ok((total / d as i128) as u128)
}

fn mobius(n: u64) -> i128 {
    let factors = prime_factors(n);
    if factors.iter().any(|&r| n.is_multiple_of(r * r)) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Field, s: &str) -> Poly {
        Poly::parse(field, s).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert!(is_irreducible(&p(&f2, "t^2+t+1")));
        assert!(!is_irreducible(&p(&f2, "t^2+1")));
        assert!(is_irreducible(&p(&f3, "t^3+2*t+2")));
        assert!(!is_irreducible(&p(&f3, "t^4+1+2*t^2")));
    }

    #[test]
    fn counts() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(count_irreducibles(&f3, 6).unwrap(), 116);
        assert_eq!(count_irreducibles(&f2, 14).unwrap(), 1161);
        assert_eq!(count_irreducibles(&Field::prime(7).unwrap(), 1).unwrap(), 7);
    }

    #[test]
    fn degree_two_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let all: Vec<String> = MonicIrreducibles::new(&f2, 2)
            .unwrap()
            .map(|c| c.prime().to_string())
            .collect();
        assert_eq!(all, ["t^2+t+1"]);
    }

    #[test]
    fn stream_matches_count_and_parallel() {
        for (q, d) in [(2u64, 8usize), (3, 5), (4, 3), (5, 3), (9, 2)] {
            let field = Field::with_order(q).unwrap();
            let seq: Vec<Poly> = MonicIrreducibles::new(&field, d)
                .unwrap()
                .map(|c| c.prime().clone())
                .collect();
            assert_eq!(seq.len() as u128, count_irreducibles(&field, d).unwrap());
            let par: Vec<Poly> = monic_irreducibles(&field, d)
                .unwrap()
                .into_iter()
                .map(|c| c.prime().clone())
                .collect();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn restart_from_index() {
        let f3 = Field::prime(3).unwrap();
        let all: Vec<Poly> = MonicIrreducibles::new(&f3, 4)
            .unwrap()
            .map(|c| c.prime().clone())
            .collect();
        let mut it = MonicIrreducibles::new(&f3, 4).unwrap();
        let head: Vec<Poly> = it.by_ref().take(5).map(|c| c.prime().clone()).collect();
        let resume = it.next_index();
        let tail: Vec<Poly> = MonicIrreducibles::starting_at(&f3, 4, resume)
            .unwrap()
            .map(|c| c.prime().clone())
            .collect();
        assert_eq!([head, tail].concat(), all);
    }

    #[test]
    fn theta_is_a_root() {
        let f3 = Field::prime(3).unwrap();
        for ctx in MonicIrreducibles::new(&f3, 3).unwrap() {
            assert!(ctx.prime().eval(ctx.theta()).unwrap().is_zero());
            assert_eq!(ctx.norm(), 27);
        }
    }
}
