//! Empirical checks of the Jacobson-radical lemma and of the height
//! dichotomy for maximal ideals, driven by a seeded generator.

mod report;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::domain::{Elem, IrreducibleStream, Ring};
use crate::error::{Error, Result};
use crate::ideal::IdealAx;
use crate::poly::{Poly, ResidueField};
use crate::rng::SeededRng;

pub use report::{
    verify_theorem, CensusReport, ChainReport, JacobsonReport, JacobsonWitness, RefutationReport, VerificationReport, VerifyConfig,
};

/// Size of the irreducible pool `sample_maximal_ideals` cycles through.
const SAMPLE_POOL: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusKind {
    Finite(usize),
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub ring: Ring,
    pub kind: CensusKind,
    pub samples: Vec<Elem>,
}

/// Pulls up to `budget` irreducibles from a fresh stream.
pub fn irreducible_census(ring: Ring, budget: usize) -> Census {
    let samples: Vec<Elem> = IrreducibleStream::new(ring).take(budget).collect();
    let kind = if samples.len() < budget {
        CensusKind::Finite(samples.len())
    } else {
        CensusKind::AtLeast(budget)
    };
    Census { ring, kind, samples }
}

/// `n` ideals `(p, g)` with `p` cycled from the start of the stream and `g`
/// a random residue polynomial of degree 1 to 3 that is irreducible mod `p`.
pub fn sample_maximal_ideals(ring: Ring, n: usize, seed: u64) -> Result<Vec<IdealAx>> {
    let pool: Vec<Elem> = IrreducibleStream::new(ring).take(SAMPLE_POOL).collect();
    if pool.is_empty() {
        return Err(Error::NoIrreducibles(ring.to_string()));
    }
    let fields = pool.iter().map(ResidueField::new).collect::<Result<Vec<_>>>()?;
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::with_capacity(n);
    let mut draws = 0usize;
    let limit = 1000 * n;
    for i in 0..n {
        let field = &fields[(seed as usize).wrapping_add(i) % fields.len()];
        let q = field.size();
        loop {
            draws += 1;
            if draws > limit {
                return Err(Error::Capacity(format!("more than {limit} draws for {n} maximal ideals")));
            }
            let degree = 1 + rng.below(3) as usize;
            let mut coeffs: Vec<u64> = (0..degree).map(|_| rng.below(q)).collect();
            coeffs.push(1 + rng.below(q - 1));
            if field.poly_irreducible(&coeffs)? {
                out.push(IdealAx::pair(field.modulus(), &field.lift_poly(&coeffs))?);
                break;
            }
        }
    }
    Ok(out)
}

/// A maximal ideal that does not contain `f`.
pub fn jacobson_witness(ring: Ring, f: &Poly) -> Result<IdealAx> {
    ring.expect(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut stream = IrreducibleStream::new(ring);
    while let Some(p) = stream.next_irreducible() {
        let field = ResidueField::new(&p)?;
        let reduced = field.encode_poly(f);
        if reduced.is_empty() {
            continue;
        }
        let q = field.size();
        for degree in 1.. {
            let count = q.checked_pow(degree as u32).ok_or_else(|| Error::Capacity("residue search overflow".into()))?;
            for index in 0..count {
                let candidate = field.monic_from_index(degree, index);
                if field.poly_irreducible(&candidate)? && !field.poly_divides(&candidate, &reduced) {
                    return IdealAx::pair(&p, &field.lift_poly(&candidate));
                }
            }
        }
    }
    match ring {
        Ring::Localized(p) => {
            let p = Elem::from_i64(ring, p as i64);
            let one = Poly::one(ring);
            for k in 1.. {
                let m = IdealAx::principal(&Poly::monomial(p.clone(), k) - &one);
                if !m.member(f)? {
                    return Ok(m);
                }
            }
            unreachable!()
        }
        _ => {
            for c in (0i64..).flat_map(|n| if n == 0 { vec![0] } else { vec![n, -n] }) {
                let c = Elem::from_i64(ring, c);
                if !f.eval(&c).is_zero() {
                    return Ok(IdealAx::principal(&Poly::x(ring) - &Poly::constant(c)));
                }
            }
            unreachable!()
        }
    }
}

/// Whether `x·f + 1` is a unit of `A[x]`.
pub fn unit_gadget(f: &Poly) -> bool {
    (&(&Poly::x(f.ring()) * f) + &Poly::one(f.ring())).is_unit()
}

/// A random element of size at most about `magnitude`.
pub fn random_elem(ring: Ring, rng: &mut SeededRng, magnitude: u64) -> Elem {
    match ring {
        Ring::Integers => Elem::from_i64(ring, rng.signed(magnitude)),
        Ring::Gaussian => Elem::gaussian(rng.signed(magnitude), rng.signed(magnitude)),
        Ring::FiniteFieldPoly(p) => {
            let max_degree = magnitude.max(1).ilog(p).min(4) as u64;
            let degree = rng.below(max_degree + 1);
            let coeffs: Vec<u64> = (0..=degree).map(|_| rng.below(p)).collect();
            Elem::fp_poly(p, &coeffs)
        }
        Ring::Localized(_) | Ring::Rationals => {
            let numer = rng.signed(magnitude);
            let denom = loop {
                let d = 1 + rng.below(magnitude.max(1));
                if ring.prime().is_none_or(|p| d % p != 0) {
                    break d;
                }
            };
            Elem::fraction(ring, BigRational::new(BigInt::from(numer), BigInt::from(denom))).unwrap()
        }
    }
}

/// A random polynomial of degree at most `max_degree`.
pub fn random_poly(ring: Ring, rng: &mut SeededRng, max_degree: usize, magnitude: u64) -> Poly {
    let coeffs = (0..=max_degree).map(|_| random_elem(ring, rng, magnitude)).collect();
    Poly::from_coeffs(ring, coeffs).unwrap()
}

/// A random primitive polynomial of degree 1 to `max_degree`.
pub fn random_primitive(ring: Ring, rng: &mut SeededRng, max_degree: usize, magnitude: u64) -> Poly {
    loop {
        let degree = 1 + rng.below(max_degree as u64) as usize;
        let f = random_poly(ring, rng, degree, magnitude);
        if f.degree().finite() == Some(degree) {
            return f.content_primitive().unwrap().1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{parse_ideal, Status};
    use crate::poly::parse_poly;

    #[test]
    fn census_examples() {
        let zz = irreducible_census(Ring::Integers, 5);
        assert_eq!(zz.kind, CensusKind::AtLeast(5));
        let text: Vec<_> = zz.samples.iter().map(|e| e.to_string()).collect();
        assert_eq!(text, ["2", "3", "5", "7", "11"]);
        assert_eq!(irreducible_census(Ring::Localized(3), 5).kind, CensusKind::Finite(1));
        assert_eq!(irreducible_census(Ring::Rationals, 5).kind, CensusKind::Finite(0));
    }

    #[test]
    fn sampled_ideals_are_maximal() {
        for ring in [Ring::Integers, Ring::Gaussian, Ring::FiniteFieldPoly(3), Ring::Localized(2)] {
            let ideals = sample_maximal_ideals(ring, 10, 7).unwrap();
            assert_eq!(ideals, sample_maximal_ideals(ring, 10, 7).unwrap());
            for m in ideals {
                assert_eq!(m.classify().status, Status::Maximal, "{m}");
            }
        }
        assert!(matches!(sample_maximal_ideals(Ring::Rationals, 1, 0), Err(Error::NoIrreducibles(_))));
    }

    #[test]
    fn jacobson_examples() {
        let zz = Ring::Integers;
        let w = jacobson_witness(zz, &parse_poly(zz, "6x+3").unwrap()).unwrap();
        assert_eq!(w, parse_ideal(zz, "(2, x)").unwrap());
        assert_eq!(jacobson_witness(zz, &Poly::one(zz)).unwrap().to_string(), "(2, x)");
        let loc = Ring::Localized(2);
        let w = jacobson_witness(loc, &parse_poly(loc, "4x-2").unwrap()).unwrap();
        assert_eq!(w.to_string(), "(2x^2-1)");
        let q = Ring::Rationals;
        assert_eq!(jacobson_witness(q, &parse_poly(q, "x^2-x").unwrap()).unwrap().to_string(), "(x+1)");
        assert_eq!(jacobson_witness(zz, &Poly::zero(zz)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gadget() {
        let zz = Ring::Integers;
        assert!(unit_gadget(&Poly::zero(zz)));
        assert!(!unit_gadget(&Poly::one(zz)));
        assert!(!unit_gadget(&parse_poly(zz, "3x").unwrap()));
    }

    #[test]
    fn primitive_sampling() {
        let mut rng = SeededRng::new(3);
        for ring in [Ring::Integers, Ring::Gaussian, Ring::FiniteFieldPoly(2), Ring::Rationals] {
            for _ in 0..20 {
                let g = random_primitive(ring, &mut rng, 3, 100);
                assert!(g.is_primitive() && !g.is_constant(), "{g}");
            }
        }
    }
}
