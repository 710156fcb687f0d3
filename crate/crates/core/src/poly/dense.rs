//! Dense coefficient kernels over an arbitrary field, one element code per
//! `u64` lane. Prime fields get a monomorphized fast path.

use crate::gf::Field;

/// Operand length (coefficients) at which multiplication switches from
/// schoolbook to Karatsuba. See `benches/mul.rs`.
pub const KARATSUBA_THRESHOLD: usize = 64;

pub(crate) trait Arith {
    fn add(&self, a: u64, b: u64) -> u64;
    fn sub(&self, a: u64, b: u64) -> u64;
    fn neg(&self, a: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    /// Panics on zero; callers check.
    fn inv(&self, a: u64) -> u64;
    /// How many raw products may be summed before reducing, 0 if the
    /// arithmetic does not support lazy reduction.
    fn lazy_terms(&self) -> usize {
        0
    }
    fn reduce(&self, a: u64) -> u64 {
        a
    }
}

pub(crate) struct PrimeArith {
    p: u64,
    lazy: usize,
}

impl PrimeArith {
    pub fn new(p: u64) -> PrimeArith {
        let sq = (p - 1) * (p - 1);
        let lazy = (u64::MAX >> 1)
            .checked_div(sq)
            .map_or(usize::MAX, |n| n as usize);
        PrimeArith { p, lazy }
    }
}

impl Arith for PrimeArith {
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // extended Euclid on integers
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(self.p as i64) as u64
    }
    fn lazy_terms(&self) -> usize {
        self.lazy
    }
    #[inline]
    fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }
}

pub(crate) struct FieldArith<'a>(pub &'a Field);

impl Arith for FieldArith<'_> {
    fn add(&self, a: u64, b: u64) -> u64 {
        self.0.add(a, b)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        self.0.sub(a, b)
    }
    fn neg(&self, a: u64) -> u64 {
        self.0.neg(a)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.0.mul(a, b)
    }
    fn inv(&self, a: u64) -> u64 {
        self.0.inv(a).expect("inverse of zero")
    }
}

/// Runs `$body` with `$ar` bound to the best arithmetic for `$field`.
macro_rules! with_arith {
    ($field:expr, |$ar:ident| $body:expr) => {
        match $field.prime_modulus() {
            Some(p) => {
                let $ar = $crate::poly::dense::PrimeArith::new(p);
                $body
            }
            None => {
                let $ar = $crate::poly::dense::FieldArith($field);
                $body
            }
        }
    };
}
pub(crate) use with_arith;

pub(crate) fn normalize(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn add<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ar.add(x, y)
        })
        .collect();
    normalize(&mut out);
    out
}

pub(crate) fn sub<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ar.sub(x, y)
        })
        .collect();
    normalize(&mut out);
    out
}

pub(crate) fn scale<A: Arith>(ar: &A, a: &[u64], c: u64) -> Vec<u64> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| ar.mul(x, c)).collect()
}

pub(crate) fn mul<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    mul_with_threshold(ar, a, b, KARATSUBA_THRESHOLD)
}

pub(crate) fn mul_with_threshold<A: Arith>(
    ar: &A,
    a: &[u64],
    b: &[u64],
    threshold: usize,
) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = karatsuba(ar, a, b, threshold.max(2));
    normalize(&mut out);
    out
}

pub(crate) fn schoolbook<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    if ar.lazy_terms() >= a.len().min(b.len()) {
        // each output lane receives at most min(len) raw products
        let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out[i..].iter_mut().zip(b) {
                *o += x * y;
            }
        }
        for o in &mut out {
            *o = ar.reduce(*o);
        }
    } else {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ar.add(out[i + j], ar.mul(x, y));
            }
        }
    }
    out
}

fn karatsuba<A: Arith>(ar: &A, a: &[u64], b: &[u64], threshold: usize) -> Vec<u64> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() < threshold {
        return schoolbook(ar, a, b);
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    if a.len() >= 2 * b.len() {
        for (k, chunk) in a.chunks(b.len()).enumerate() {
            let part = karatsuba(ar, chunk, b, threshold);
            let off = k * b.len();
            for (o, &x) in out[off..].iter_mut().zip(&part) {
                *o = ar.add(*o, x);
            }
        }
        return out;
    }
    let h = a.len() / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let z0 = karatsuba(ar, a0, b0, threshold);
    let z2 = karatsuba(ar, a1, b1, threshold);
    let sa = add_raw(ar, a0, a1);
    let sb = add_raw(ar, b0, b1);
    let mut z1 = karatsuba(ar, &sa, &sb, threshold);
    for (i, &x) in z0.iter().enumerate() {
        z1[i] = ar.sub(z1[i], x);
        out[i] = ar.add(out[i], x);
    }
    for (i, &x) in z2.iter().enumerate() {
        z1[i] = ar.sub(z1[i], x);
        out[2 * h + i] = ar.add(out[2 * h + i], x);
    }
    for (i, &x) in z1.iter().enumerate() {
        if x != 0 {
            out[h + i] = ar.add(out[h + i], x);
        }
    }
    out
}

fn add_raw<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    (0..a.len().max(b.len()))
        .map(|i| {
            ar.add(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect()
}

/// Long division; `b` must be nonzero and normalized.
pub(crate) fn divrem<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let n = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lc_inv = ar.inv(b[n]);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - n];
    for i in (n..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let c = ar.mul(c, lc_inv);
        q[i - n] = c;
        let nc = ar.neg(c);
        for (o, &y) in r[i - n..=i].iter_mut().zip(b) {
            *o = ar.add(*o, ar.mul(nc, y));
        }
    }
    r.truncate(n);
    normalize(&mut r);
    normalize(&mut q);
    (q, r)
}

pub(crate) fn rem<A: Arith>(ar: &A, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = b.len() - 1;
    if a.len() < b.len() {
        return a.to_vec();
    }
    let lc_inv = ar.inv(b[n]);
    let mut r = a.to_vec();
    for i in (n..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let nc = ar.neg(ar.mul(c, lc_inv));
        for (o, &y) in r[i - n..=i].iter_mut().zip(b) {
            *o = ar.add(*o, ar.mul(nc, y));
        }
    }
    r.truncate(n);
    normalize(&mut r);
    r
}
