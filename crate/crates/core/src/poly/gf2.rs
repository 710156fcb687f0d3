//! Bit-packed polynomials over F_2: bit `i` of the word vector is the
//! coefficient of `t^i`.

/// Operand size (in 64-bit words) at which multiplication switches from
/// word schoolbook to Karatsuba. See `benches/mul.rs`.
pub const GF2_KARATSUBA_WORDS: usize = 16;

#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    /// Normalized: empty or last word nonzero.
    w: Vec<u64>,
}

impl Bits {
    pub fn zero() -> Bits {
        Bits { w: Vec::new() }
    }

    pub fn monomial(k: usize) -> Bits {
        let mut w = vec![0u64; k / 64 + 1];
        w[k / 64] = 1 << (k % 64);
        Bits { w }
    }

    pub fn from_words(w: Vec<u64>) -> Bits {
        let mut b = Bits { w };
        b.normalize();
        b
    }

    /// From 0/1 codes, low to high.
    pub fn from_codes(codes: &[u64]) -> Bits {
        let mut w = vec![0u64; codes.len().div_ceil(64)];
        for (i, &c) in codes.iter().enumerate() {
            if c & 1 == 1 {
                w[i / 64] |= 1 << (i % 64);
            }
        }
        Bits::from_words(w)
    }

    pub fn to_codes(&self) -> Vec<u64> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.bit(i) as u64).collect(),
        }
    }

    fn normalize(&mut self) {
        while self.w.last() == Some(&0) {
            self.w.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.w.last()?;
        Some(64 * (self.w.len() - 1) + 63 - last.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.w
            .get(i / 64)
            .is_some_and(|&word| (word >> (i % 64)) & 1 == 1)
    }

    pub fn count_ones(&self) -> usize {
        self.w.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count_ones());
        for (k, &word) in self.w.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                out.push(64 * k + x.trailing_zeros() as usize);
                x &= x - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Bits) -> Bits {
        let (long, short) = if self.w.len() >= other.w.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut w = long.w.clone();
        for (a, b) in w.iter_mut().zip(&short.w) {
            *a ^= b;
        }
        Bits::from_words(w)
    }

    pub fn shl(&self, k: usize) -> Bits {
        if self.is_zero() {
            return Bits::zero();
        }
        let mut w = vec![0u64; self.w.len() + k / 64 + 1];
        xor_shifted(&mut w, &self.w, k);
        Bits::from_words(w)
    }

    pub fn mul(&self, other: &Bits) -> Bits {
        Bits::from_words(mul_words(&self.w, &other.w))
    }

    pub fn square(&self) -> Bits {
        let mut w = Vec::with_capacity(2 * self.w.len());
        for &x in &self.w {
            w.push(spread32(x as u32));
            w.push(spread32((x >> 32) as u32));
        }
        Bits::from_words(w)
    }

    /// Substitutes `t -> t^m`.
    pub fn scale_exponents(&self, m: usize) -> Bits {
        if m == 2 {
            return self.square();
        }
        let Some(d) = self.degree() else {
            return Bits::zero();
        };
        let mut w = vec![0u64; (d * m) / 64 + 1];
        for i in self.support() {
            let e = i * m;
            w[e / 64] |= 1 << (e % 64);
        }
        Bits::from_words(w)
    }

    pub fn derivative(&self) -> Bits {
        // d/dt t^i = i t^(i-1): odd exponents move down one place, and
        // exponent 64k lands on an even power so nothing crosses words
        let w = self
            .w
            .iter()
            .map(|&x| (x & 0xAAAA_AAAA_AAAA_AAAA) >> 1)
            .collect();
        Bits::from_words(w)
    }

    pub fn divrem(&self, m: &Bits) -> (Bits, Bits) {
        let n = m.degree().expect("division by zero polynomial");
        let mut r = self.w.clone();
        let mut q = vec![0u64; r.len().saturating_sub(n / 64) + 1];
        reduce_in_place(&mut r, &m.w, n, Some(&mut q));
        (Bits::from_words(q), Bits::from_words(r))
    }

    pub fn rem(&self, m: &Bits) -> Bits {
        let n = m.degree().expect("division by zero polynomial");
        if self.degree().is_none_or(|d| d < n) {
            return self.clone();
        }
        let mut r = self.w.clone();
        reduce_in_place(&mut r, &m.w, n, None);
        Bits::from_words(r)
    }

    pub fn gcd(&self, other: &Bits) -> Bits {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn words(&self) -> &[u64] {
        &self.w
    }
}

/// `r := r mod m` where `deg m = n`; optionally records the quotient.
fn reduce_in_place(r: &mut Vec<u64>, m: &[u64], n: usize, mut q: Option<&mut Vec<u64>>) {
    loop {
        while r.last() == Some(&0) {
            r.pop();
        }
        let Some(&top) = r.last() else { return };
        let dr = 64 * (r.len() - 1) + 63 - top.leading_zeros() as usize;
        if dr < n {
            return;
        }
        let s = dr - n;
        if let Some(q) = q.as_deref_mut() {
            q[s / 64] |= 1 << (s % 64);
        }
        xor_shifted(r, m, s);
    }
}

/// `dst ^= src << shift`; `dst` must be long enough for the nonzero words.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if bs == 0 {
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= s;
        }
        return;
    }
    let mut carry = 0u64;
    for (i, &s) in src.iter().enumerate() {
        dst[ws + i] ^= (s << bs) | carry;
        carry = s >> (64 - bs);
    }
    if carry != 0 {
        dst[ws + src.len()] ^= carry;
    }
}

fn spread32(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// Carry-less 64x64 -> 128 product.
#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the feature was detected at runtime.
            return unsafe { clmul_pclmul(a, b) };
        }
    }
    clmul_soft(a, b)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq")]
unsafe fn clmul_pclmul(a: u64, b: u64) -> u128 {
    use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_set_epi64x};
    let r = _mm_clmulepi64_si128(_mm_set_epi64x(0, a as i64), _mm_set_epi64x(0, b as i64), 0);
    std::mem::transmute::<_, u128>(r)
}

/// Portable 4-bit windowed comb.
pub(crate) fn clmul_soft(a: u64, b: u64) -> u128 {
    let mut table = [0u128; 16];
    let a = a as u128;
    for i in 1..16usize {
        table[i] = if i & 1 == 1 {
            table[i - 1] ^ a
        } else {
            table[i / 2] << 1
        };
    }
    let mut r = 0u128;
    for k in (0..16).rev() {
        r = (r << 4) ^ table[((b >> (4 * k)) & 15) as usize];
    }
    r
}

fn schoolbook(a: &[u64], b: &[u64], out: &mut [u64]) {
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let p = clmul(x, y);
            out[i + j] ^= p as u64;
            out[i + j + 1] ^= (p >> 64) as u64;
        }
    }
}

pub(crate) fn mul_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len()];
    mul_into(a, b, &mut out, GF2_KARATSUBA_WORDS);
    out
}

/// Schoolbook only; used by the threshold benchmark.
pub fn mul_words_schoolbook(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    schoolbook(a, b, &mut out);
    out
}

/// Karatsuba with an explicit threshold; used by the threshold benchmark.
pub fn mul_words_karatsuba(a: &[u64], b: &[u64], threshold: usize) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    mul_into(a, b, &mut out, threshold.max(2));
    out
}

/// `out ^= a * b`, `out.len() >= a.len() + b.len()`.
fn mul_into(a: &[u64], b: &[u64], out: &mut [u64], threshold: usize) {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return;
    }
    if b.len() < threshold {
        schoolbook(a, b, out);
        return;
    }
    if a.len() >= 2 * b.len() {
        for (k, chunk) in a.chunks(b.len()).enumerate() {
            let off = k * b.len();
            mul_into(chunk, b, &mut out[off..], threshold);
        }
        return;
    }
    let h = a.len() / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h.min(b.len()));
    let mut z0 = vec![0u64; a0.len() + b0.len()];
    mul_into(a0, b0, &mut z0, threshold);
    let mut z2 = vec![0u64; a1.len() + b1.len()];
    mul_into(a1, b1, &mut z2, threshold);
    let sa = xor_words(a0, a1);
    let sb = xor_words(b0, b1);
    let mut z1 = vec![0u64; sa.len() + sb.len()];
    mul_into(&sa, &sb, &mut z1, threshold);
    for (i, &x) in z0.iter().enumerate() {
        z1[i] ^= x;
        out[i] ^= x;
    }
    for (i, &x) in z2.iter().enumerate() {
        z1[i] ^= x;
        out[2 * h + i] ^= x;
    }
    for (i, &x) in z1.iter().enumerate() {
        if x != 0 {
            out[h + i] ^= x;
        }
    }
}

fn xor_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (o, &x) in out.iter_mut().zip(a) {
        *o = x;
    }
    for (o, &x) in out.iter_mut().zip(b) {
        *o ^= x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_mul(a: &Bits, b: &Bits) -> Bits {
        let mut acc = Bits::zero();
        for i in a.support() {
            acc = acc.add(&b.shl(i));
        }
        acc
    }

    #[test]
    fn clmul_small() {
        // (t+1)^2 = t^2+1
        assert_eq!(clmul_soft(3, 3), 5);
        assert_eq!(clmul_soft(u64::MAX, 1), u64::MAX as u128);
        assert_eq!(clmul_soft(1 << 63, 1 << 63), 1u128 << 126);
    }

    #[test]
    fn derivative_keeps_odd_terms() {
        // t^5 + t^4 + t^2 + t -> t^4 + 1
        let f = Bits::from_codes(&[0, 1, 1, 0, 1, 1]);
        assert_eq!(f.derivative(), Bits::from_codes(&[1, 0, 0, 0, 1]));
        // across a word boundary: t^65 -> t^64
        assert_eq!(Bits::monomial(65).derivative(), Bits::monomial(64));
        assert!(Bits::monomial(64).derivative().is_zero());
    }

    #[test]
    fn t4_plus_t_over_t2_t_1() {
        let f = Bits::from_codes(&[0, 1, 0, 0, 1]);
        let g = Bits::from_codes(&[1, 1, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(q, Bits::from_codes(&[0, 1, 1]));
        assert!(r.is_zero());
    }

    fn arb_bits(max_words: usize) -> impl Strategy<Value = Bits> {
        prop::collection::vec(any::<u64>(), 0..max_words).prop_map(Bits::from_words)
    }

    proptest! {
        #[test]
        fn clmul_hw_matches_soft(a in any::<u64>(), b in any::<u64>()) {
            prop_assert_eq!(clmul(a, b), clmul_soft(a, b));
        }

        #[test]
        fn karatsuba_matches_naive(a in arb_bits(40), b in arb_bits(40), th in 1usize..6) {
            let expect = naive_mul(&a, &b);
            let got = Bits::from_words(mul_words_karatsuba(a.words(), b.words(), th));
            prop_assert_eq!(got, expect);
        }

        #[test]
        fn square_is_self_product(a in arb_bits(8)) {
            prop_assert_eq!(a.square(), naive_mul(&a, &a));
        }

        #[test]
        fn divrem_reconstructs(a in arb_bits(10), m in arb_bits(4)) {
            prop_assume!(!m.is_zero());
            let (q, r) = a.divrem(&m);
            prop_assert!(r.degree() < m.degree() || r.is_zero());
            prop_assert_eq!(q.mul(&m).add(&r), a);
        }
    }
}
