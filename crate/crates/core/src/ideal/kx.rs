//! Irreducibility in `K[x]`, `K` the fraction field of `A`.

use num_integer::Integer;
use num_traits::One;

use crate::capacity::Capacity;
use crate::domain::{units, Elem, IrreducibleStream, Ring};
use crate::error::{Error, Result};
use crate::poly::{Degree, Poly, ResidueField};

/// How many stream irreducibles the Eisenstein and reduction criteria try.
const CRITERION_PRIMES: usize = 16;

/// Whether `g` has a root in `K`. Candidates are `u·a/b` with `a` dividing
/// the constant term and `b` the leading coefficient.
pub fn has_root_in_fraction_field(g: &Poly) -> Result<bool> {
    let g = over_integral_base(g);
    if g.degree() < Degree::Finite(1) {
        return Ok(false);
    }
    if g.coeff(0).is_zero() {
        return Ok(true);
    }
    let nums = g.coeff(0).canonical_divisors()?;
    let dens = g.leading_coeff().unwrap().canonical_divisors()?;
    let units = units(g.ring()).expect("integral base has a finite unit group");
    let work = (nums.len() * dens.len() * units.len()) as u64;
    let cap = Capacity::global();
    if work > cap.search {
        return Err(Error::Capacity(format!("{work} root candidates exceed {}", cap.search)));
    }
    for a in &nums {
        for b in &dens {
            for u in &units {
                if g.evaluate_fraction(&(u * a), b)?.0.is_zero() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// `Some(verdict)` when irreducibility over `K` could be settled: root
/// search up to degree three, Eisenstein at `g` or its reversal, or an
/// irreducible reduction of unchanged degree. `None` otherwise.
pub fn irreducible_over_fraction_field(g: &Poly) -> Result<Option<bool>> {
    let g = over_integral_base(g);
    let deg = match g.degree() {
        Degree::NegInfinity | Degree::Finite(0) => return Ok(Some(false)),
        Degree::Finite(d) => d,
    };
    if deg == 1 {
        return Ok(Some(true));
    }
    if g.coeff(0).is_zero() {
        return Ok(Some(false));
    }
    if deg <= 3 {
        match has_root_in_fraction_field(&g) {
            Ok(root) => return Ok(Some(!root)),
            Err(Error::Capacity(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let reversed = Poly::from_coeffs(g.ring(), g.coeffs().iter().rev().cloned().collect())?;
    let one = Elem::one(g.ring());
    let candidates = [g.clone(), reversed, translate(&g, &one), translate(&g, &-&one)];
    let primes = criterion_primes(g.ring());
    if primes.iter().any(|p| candidates.iter().any(|h| eisenstein(h, p))) {
        return Ok(Some(true));
    }
    for p in &primes {
        let field = ResidueField::new(p)?;
        let reduced = field.encode_poly(&g);
        if reduced.len() == deg + 1 && field.poly_irreducible(&reduced).unwrap_or(false) {
            return Ok(Some(true));
        }
    }
    Ok(None)
}

fn eisenstein(g: &Poly, p: &Elem) -> bool {
    let coeffs = g.coeffs();
    let (lead, rest) = coeffs.split_last().unwrap();
    !p.divides(lead) && rest.iter().all(|c| p.divides(c)) && !(p * p).divides(&coeffs[0])
}

/// `g(x + c)`.
fn translate(g: &Poly, c: &Elem) -> Poly {
    let step = &Poly::x(g.ring()) + &Poly::constant(c.clone());
    g.coeffs()
        .iter()
        .rev()
        .fold(Poly::zero(g.ring()), |acc, a| &(&acc * &step) + &Poly::constant(a.clone()))
}

fn criterion_primes(ring: Ring) -> Vec<Elem> {
    let mut primes: Vec<Elem> = IrreducibleStream::new(ring).take(CRITERION_PRIMES).collect();
    if let Some(p) = ring.prime() {
        let p = Elem::from_i64(ring, p as i64);
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes
}

/// `QQ` and `Zloc(p)` share `Q` as fraction field; their polynomials are
/// moved to a primitive integer multiple, which has the same factorization
/// over `Q`. Other rings pass through.
fn over_integral_base(g: &Poly) -> Poly {
    if !matches!(g.ring(), Ring::Rationals | Ring::Localized(_)) {
        return g.clone();
    }
    let fractions: Vec<_> = g.coeffs().iter().map(|c| c.as_fraction().unwrap().clone()).collect();
    let lcm = fractions.iter().fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints = fractions
        .iter()
        .map(|q| Elem::from_bigint(Ring::Integers, q.numer() * (&lcm / q.denom())))
        .collect();
    let g = Poly::from_coeffs(Ring::Integers, ints).unwrap();
    match g.content_primitive() {
        Ok((_, primitive)) => primitive,
        Err(_) => g,
    }
}
