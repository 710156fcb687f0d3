use super::*;
use proptest::prelude::*;

fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn p(field: &Field, s: &str) -> Poly {
    Poly::parse(field, s).unwrap()
}

#[test]
fn ring_examples() {
    let f2 = fp(2);
    let a = p(&f2, "t^2+t+1");
    let b = p(&f2, "t^2+t");
    assert_eq!(&a * &b, p(&f2, "t^4+t"));
    assert_eq!(&a * &Poly::one(&f2), a);
    let (q, r) = p(&f2, "t^4+t").divrem(&a).unwrap();
    assert_eq!(q, b);
    assert!(r.is_zero());
    assert!(matches!(
        a.divrem(&Poly::zero(&f2)),
        Err(Error::DivisionByZero)
    ));
}

#[test]
fn exact_division() {
    let f2 = fp(2);
    let f3 = fp(3);
    let a = p(&f2, "t^2+t+1");
    assert_eq!(p(&f2, "t^4+t").exact_div(&a).unwrap(), p(&f2, "t^2+t"));
    assert!(a.exact_div(&a).unwrap().is_one());
    assert!(matches!(
        p(&f3, "t^2+1").exact_div(&p(&f3, "t")),
        Err(Error::NotDivisible { .. })
    ));
}

#[test]
fn gcd_examples() {
    let f2 = fp(2);
    let f5 = fp(5);
    let f = p(&f5, "3*t^2+1");
    assert_eq!(f.gcd(&Poly::zero(&f5)), f.monic());
    assert!(p(&f2, "t^2+t").gcd(&p(&f2, "t^2+t+1")).is_one());
    assert_eq!(p(&f2, "t^4+t").gcd(&p(&f2, "t^2+t")), p(&f2, "t^2+t"));
}

#[test]
fn derivative_examples() {
    let f3 = fp(3);
    let f5 = fp(5);
    assert!(p(&f5, "t^5").derivative(1).is_zero());
    let wp = p(&f3, "t^3+2*t+2");
    assert_eq!(wp.derivative(1), Poly::constant(&f3, 2));
    assert!(wp.derivative(2).is_zero());
    assert_eq!(wp.derivative(0), wp);
    // falling factorial: (t^5)'' = 20 t^3 = 0 mod 5; over F_7 = 6 t^3
    assert_eq!(p(&fp(7), "t^5").derivative(2), p(&fp(7), "6*t^3"));
}

#[test]
fn powmod_examples() {
    let f2 = fp(2);
    let m = p(&f2, "t^2+t+1");
    let t = Poly::t(&f2);
    assert_eq!(t.powmod_u64(2, &m).unwrap(), p(&f2, "t+1"));
    let f = p(&f2, "t^3+1");
    assert_eq!(f.powmod_u64(1, &m).unwrap(), f.rem(&m));
    assert_eq!(t.powmod_u64(16, &m).unwrap(), t);
}

#[test]
fn q_power_expand_examples() {
    let f2 = fp(2);
    let f3 = fp(3);
    assert_eq!(Poly::t(&f2).q_power_expand(2, 3).unwrap(), p(&f2, "t^8"));
    assert_eq!(p(&f2, "t+1").q_power_expand(2, 2).unwrap(), p(&f2, "t^4+1"));
    let f = p(&f3, "t^2+2*t");
    assert_eq!(f.q_power_expand(3, 1).unwrap(), p(&f3, "t^6+2*t^3"));
    assert_eq!(f.q_power_expand(3, 1).unwrap(), f.pow(3));
    let f4 = Field::with_order(4).unwrap();
    let g = f4.generator().code();
    assert!(matches!(
        Poly::constant(&f4, g).q_power_expand(2, 1),
        Err(Error::CoefficientsNotInFixedField(2))
    ));
}

#[test]
fn eval_examples() {
    let f2 = fp(2);
    let f3 = fp(3);
    assert!(p(&f2, "t^2+t+1").eval(&f2.one()).unwrap().is_one());
    let wp = p(&f3, "t^3+2*t+2");
    let f27 = Field::extension(&f3, &wp).unwrap();
    assert!(wp.eval(&f27.generator()).unwrap().is_zero());
    let other = fp(5);
    assert!(matches!(wp.eval(&other.one()), Err(Error::FieldMismatch)));
}

#[test]
fn synth_div_examples() {
    let f2 = fp(2);
    let wp = p(&f2, "t^2+t+1");
    let f4 = Field::extension(&f2, &wp).unwrap();
    let theta = f4.generator();
    let (q, r) = wp.synth_div(&theta).unwrap();
    assert!(r.is_zero());
    let expected = Poly::from_codes(&f4, vec![f4.add(theta.code(), 1), 1]).unwrap();
    assert_eq!(q, expected);
    let (q, r) = Poly::constant(&f4, 3).synth_div(&theta).unwrap();
    assert!(q.is_zero());
    assert_eq!(r.code(), 3);
    let lin = Poly::from_codes(&f4, vec![f4.neg(theta.code()), 1]).unwrap();
    let (q, r) = lin.synth_div(&theta).unwrap();
    assert!(q.is_one() && r.is_zero());
}

#[test]
fn shift_examples() {
    let f3 = fp(3);
    assert_eq!(p(&f3, "t^2").shift(&f3.one()).unwrap(), p(&f3, "t^2+2*t+1"));
    let f = p(&f3, "t^4+2*t+1");
    assert_eq!(f.shift(&f3.zero()).unwrap(), f);
    let b1 = p(&f3, "t^3+2*t");
    for c in f3.elements() {
        assert_eq!(b1.shift(&c).unwrap(), b1);
    }
}

#[test]
fn text_formats() {
    let f3 = fp(3);
    let f = p(&f3, "t^6+2*t+1");
    assert_eq!(f.to_string(), "t^6+2*t+1");
    assert_eq!(f.to_list_string(), "[1,2,0,0,0,0,1]");
    assert_eq!(p(&f3, "[1,2,0,0,0,0,1]"), f);
    assert_eq!(p(&f3, "t^3 - t - 1"), p(&f3, "t^3+2*t+2"));
    assert_eq!(p(&f3, "2t^2 + x"), p(&f3, "2*t^2+t"));
    assert_eq!(Poly::zero(&f3).to_string(), "0");
    assert!(Poly::parse(&f3, "t^2+5").is_err());
    assert!(Poly::parse(&f3, "t^^2").is_err());
    assert!(Poly::parse(&f3, "").is_err());
}

#[test]
fn degree_sentinel() {
    let f2 = fp(2);
    assert_eq!(Poly::zero(&f2).degree(), Degree::NegInf);
    assert!(Degree::NegInf < Degree::Finite(0));
    assert_eq!(Poly::one(&f2).degree(), Degree::Finite(0));
}

#[test]
fn inverse_mod() {
    let f5 = fp(5);
    let m = p(&f5, "t^3+t+1");
    let a = p(&f5, "2*t^2+3");
    let inv = a.inv_mod(&m).unwrap();
    assert!(a.mul(&inv).rem(&m).is_one());
    assert!(p(&f5, "t").inv_mod(&p(&f5, "t^2")).is_err());
}

#[test]
fn rem_t_power_minus_t_folds() {
    for q in [2u64, 3] {
        let f = fp(q);
        let n = (q * q) as usize;
        let m = Poly::monomial(&f, 1, n).sub(&Poly::t(&f));
        let a = p(&f, "t^40+t^17+t^9+t^4+1");
        assert_eq!(a.rem_t_power_minus_t(n), a.rem(&m));
    }
}

#[test]
fn pth_root() {
    let f3 = fp(3);
    let b = p(&f3, "2*t^2+t+1");
    assert_eq!(b.pow(3).pth_root().unwrap(), b);
    assert!(p(&f3, "t^2").pth_root().is_none());
    let f9 = Field::with_order(9).unwrap();
    let g = Poly::from_codes(&f9, vec![5, 7, 1]).unwrap();
    assert_eq!(g.pow(3).pth_root().unwrap(), g);
}

fn arb_poly(q: u64, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..q, 0..max_len)
}

proptest! {
    #[test]
    fn divrem_reconstructs(q in prop::sample::select(vec![2u64, 3, 4, 5, 9]), a in arb_poly(9, 40), b in arb_poly(9, 12)) {
        let f = Field::with_order(q).unwrap();
        let a = Poly::from_codes(&f, a.into_iter().map(|c| c % q).collect()).unwrap();
        let b = Poly::from_codes(&f, b.into_iter().map(|c| c % q).collect()).unwrap();
        prop_assume!(!b.is_zero());
        let (qq, r) = a.divrem(&b).unwrap();
        prop_assert!(r.deg() < b.deg());
        prop_assert_eq!(qq.mul(&b).add(&r), a.clone());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn powmod_matches_expand(q in prop::sample::select(vec![2u64, 3, 4, 5]), d in 1u32..4, a in arb_poly(5, 8), m in arb_poly(5, 6)) {
        let f = Field::with_order(q).unwrap();
        let a = Poly::from_codes(&f, a.into_iter().map(|c| c % q).collect()).unwrap();
        let m = Poly::from_codes(&f, m.into_iter().map(|c| c % q).collect()).unwrap();
        prop_assume!(m.deg().is_some_and(|d| d >= 1));
        let e = BigUint::from(q).pow(d);
        prop_assert_eq!(a.powmod(&e, &m).unwrap(), a.q_power_expand(q, d).unwrap().rem(&m));
    }

    #[test]
    fn text_round_trip(a in arb_poly(5, 20)) {
        let f = fp(5);
        let a = Poly::from_codes(&f, a).unwrap();
        prop_assert_eq!(Poly::parse(&f, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(Poly::parse(&f, &a.to_list_string()).unwrap(), a);
    }
}

#[test]
fn derivative_degree_law() {
    for q in [2u64, 3, 5] {
        let f = fp(q);
        for d in 1..=5usize {
            let count = (q as usize).pow(d as u32);
            for idx in 0..count as u64 {
                let a = crate::irr::candidate(&f, d, idx);
                let da = a.derivative(1);
                if (d as u64).is_multiple_of(q) {
                    assert!(da.deg().is_none_or(|e| e < d - 1));
                } else {
                    assert_eq!(da.deg(), Some(d - 1));
                }
            }
        }
    }
}

#[test]
fn taylor_reconstruction() {
    let f3 = fp(3);
    let wp = p(&f3, "t^3+2*t+2");
    let e = Field::extension(&f3, &wp).unwrap();
    let theta = e.generator();
    let lin = Poly::from_codes(&e, vec![e.neg(theta.code()), 1]).unwrap();
    for idx in 0..3u64.pow(6) {
        let a = crate::irr::candidate(&f3, 6, idx).embed(&e).unwrap();
        let mut cur = a.clone();
        let mut coeffs = Vec::new();
        while !cur.is_zero() {
            let (q, r) = cur.synth_div(&theta).unwrap();
            assert_eq!(r, cur.eval(&theta).unwrap());
            coeffs.push(r);
            cur = q;
        }
        let mut rebuilt = Poly::zero(&e);
        for c in coeffs.iter().rev() {
            rebuilt = rebuilt.mul(&lin).add(&Poly::constant(&e, c.code()));
        }
        assert_eq!(rebuilt, a);
    }
}
