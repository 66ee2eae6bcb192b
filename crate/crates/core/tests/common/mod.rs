#![allow(dead_code)]

use krull_core::{Elem, Poly, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub fn rings() -> Vec<Ring> {
    vec![
        Ring::Integers,
        Ring::Gaussian,
        Ring::FiniteFieldPoly(2),
        Ring::FiniteFieldPoly(3),
        Ring::Localized(3),
        Ring::Rationals,
    ]
}

pub fn arb_ring() -> impl Strategy<Value = Ring> {
    proptest::sample::select(rings())
}

/// Element built from two small integers, in a ring-specific way.
pub fn elem_from(ring: Ring, a: i64, b: i64) -> Elem {
    match ring {
        Ring::Integers => Elem::from_i64(ring, a),
        Ring::Gaussian => Elem::gaussian(a, b),
        Ring::FiniteFieldPoly(p) => {
            let mut n = a.unsigned_abs() % p.pow(4);
            let digits: Vec<u64> = (0..4)
                .map(|_| {
                    let d = n % p;
                    n /= p;
                    d
                })
                .collect();
            Elem::fp_poly(p, &digits)
        }
        Ring::Localized(p) => {
            let mut d = b.unsigned_abs() % 20 + 1;
            if d % p == 0 {
                d += 1;
            }
            Elem::fraction(ring, BigRational::new(BigInt::from(a), BigInt::from(d))).unwrap()
        }
        Ring::Rationals => {
            let d = b.unsigned_abs() % 20 + 1;
            Elem::fraction(ring, BigRational::new(BigInt::from(a), BigInt::from(d))).unwrap()
        }
    }
}

pub fn arb_elem(ring: Ring) -> impl Strategy<Value = Elem> {
    (-60i64..60, -60i64..60).prop_map(move |(a, b)| elem_from(ring, a, b))
}

pub fn arb_poly(ring: Ring, max_len: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-30i64..30, -30i64..30), 0..=max_len).prop_map(move |pairs| {
        let coeffs = pairs.into_iter().map(|(a, b)| elem_from(ring, a, b)).collect();
        Poly::from_coeffs(ring, coeffs).unwrap()
    })
}

pub fn ring_and_elems(n: usize) -> impl Strategy<Value = (Ring, Vec<Elem>)> {
    arb_ring().prop_flat_map(move |ring| (Just(ring), proptest::collection::vec(arb_elem(ring), n)))
}

pub fn ring_and_polys(n: usize, max_len: usize) -> impl Strategy<Value = (Ring, Vec<Poly>)> {
    arb_ring().prop_flat_map(move |ring| (Just(ring), proptest::collection::vec(arb_poly(ring, max_len), n)))
}
