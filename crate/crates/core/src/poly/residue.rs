//! Residue fields `A/(p)` and polynomials over them.
//!
//! Residue-field elements are encoded as integers `0..q`: the residue
//! itself for prime fields, `a + b*q` for `a + bi` over an inert Gaussian
//! prime `q`, and base-`p` digits of the remainder for `GF(p)[t]` modulo an
//! irreducible of degree `d`. Index `0` is zero and index `1` is one.

use std::fmt;

use num_traits::ToPrimitive;

use super::{Degree, Poly};
use crate::capacity::Capacity;
use crate::domain::{fp, Elem, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Arith {
    Prime(u64),
    GaussInert(u64),
    Extension { p: u64, modulus: Vec<u64>, size: u64 },
}

/// The finite field `A/(p)` for an irreducible `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueField {
    modulus: Elem,
    arith: Arith,
}

/// Field-element polynomial in encoded form, constant term first.
pub(crate) type FieldPoly = Vec<u64>;

impl ResidueField {
    pub fn new(p: &Elem) -> Result<ResidueField> {
        if p.ring() == Ring::Rationals {
            return Err(Error::InfiniteResidueField(p.to_string()));
        }
        if !p.is_irreducible()? {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        let modulus = p.canonical();
        let arith = match p.ring() {
            Ring::Integers => Arith::Prime(modulus.as_integer().unwrap().to_u64().unwrap()),
            Ring::Localized(q) => Arith::Prime(q),
            Ring::Gaussian => {
                let (re, im) = modulus.as_gaussian().unwrap();
                if im.to_u64() == Some(0) {
                    Arith::GaussInert(re.to_u64().unwrap())
                } else {
                    Arith::Prime(modulus.norm().unwrap().to_u64().unwrap())
                }
            }
            Ring::FiniteFieldPoly(q) => {
                let m = modulus.as_fp_poly().unwrap().to_vec();
                let d = m.len() - 1;
                let size = q
                    .checked_pow(d as u32)
                    .ok_or_else(|| Error::Capacity(format!("residue field GF({q}^{d}) is too large")))?;
                Arith::Extension { p: q, modulus: m, size }
            }
            Ring::Rationals => unreachable!(),
        };
        Ok(ResidueField { modulus, arith })
    }

    /// The canonical irreducible this field is a quotient by.
    pub fn modulus(&self) -> &Elem {
        &self.modulus
    }

    pub fn ring(&self) -> Ring {
        self.modulus.ring()
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        match &self.arith {
            Arith::Prime(p) => *p,
            Arith::GaussInert(q) => q * q,
            Arith::Extension { size, .. } => *size,
        }
    }

    /// Residue of an element of `A`, encoded.
    pub fn encode(&self, a: &Elem) -> u64 {
        let r = a.reduce_by_canonical(&self.modulus);
        match &self.arith {
            Arith::Prime(_) => match self.ring() {
                Ring::Integers => r.as_integer().unwrap().to_u64().unwrap(),
                Ring::Gaussian => r.as_gaussian().unwrap().0.to_u64().unwrap(),
                _ => r.as_fraction().unwrap().numer().to_u64().unwrap(),
            },
            Arith::GaussInert(q) => {
                let (re, im) = r.as_gaussian().unwrap();
                re.to_u64().unwrap() + im.to_u64().unwrap() * q
            }
            Arith::Extension { p, .. } => r.as_fp_poly().unwrap().iter().rev().fold(0, |acc, &c| acc * p + c),
        }
    }

    /// The canonical representative in `A` of an encoded residue.
    pub fn decode(&self, mut index: u64) -> Elem {
        let ring = self.ring();
        match &self.arith {
            Arith::Prime(_) => Elem::from_i64(ring, index as i64),
            Arith::GaussInert(q) => Elem::gaussian(index % q, index / q),
            Arith::Extension { p, modulus, .. } => {
                let digits: Vec<u64> = (0..modulus.len() - 1)
                    .map(|_| {
                        let d = index % p;
                        index /= p;
                        d
                    })
                    .collect();
                Elem::fp_poly(*p, &digits)
            }
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Prime(p) => ((a as u128 + b as u128) % *p as u128) as u64,
            Arith::GaussInert(q) => {
                let re = (a % q + b % q) % q;
                let im = (a / q + b / q) % q;
                re + im * q
            }
            Arith::Extension { p, .. } => {
                let (x, y) = (self.digits(a), self.digits(b));
                self.undigits(&fp::add(*p, &x, &y))
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match &self.arith {
            Arith::Prime(p) => (p - a % p) % p,
            Arith::GaussInert(q) => {
                let re = (q - a % q) % q;
                let im = (q - a / q) % q;
                re + im * q
            }
            Arith::Extension { p, .. } => self.undigits(&fp::neg(*p, &self.digits(a))),
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Prime(p) => fp::mulmod(a, b, *p),
            Arith::GaussInert(q) => {
                let (ar, ai, br, bi) = (a % q, a / q, b % q, b / q);
                let re = (fp::mulmod(ar, br, *q) + q - fp::mulmod(ai, bi, *q)) % q;
                let im = (fp::mulmod(ar, bi, *q) + fp::mulmod(ai, br, *q)) % q;
                re + im * q
            }
            Arith::Extension { p, modulus, .. } => {
                let prod = fp::mul(*p, &self.digits(a), &self.digits(b));
                self.undigits(&fp::divrem(*p, &prod, modulus).1)
            }
        }
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        match &self.arith {
            Arith::Prime(p) => fp::inv(a, *p),
            Arith::GaussInert(q) => {
                let (re, im) = (a % q, a / q);
                let norm = (fp::mulmod(re, re, *q) + fp::mulmod(im, im, *q)) % q;
                let n_inv = fp::inv(norm, *q);
                fp::mulmod(re, n_inv, *q) + fp::mulmod((q - im) % q, n_inv, *q) * q
            }
            Arith::Extension { .. } => self.pow(a, self.size() - 2),
        }
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn digits(&self, mut index: u64) -> Vec<u64> {
        let Arith::Extension { p, .. } = &self.arith else { unreachable!() };
        let mut out = Vec::new();
        while index > 0 {
            out.push(index % p);
            index /= p;
        }
        out
    }

    fn undigits(&self, v: &[u64]) -> u64 {
        let Arith::Extension { p, .. } = &self.arith else { unreachable!() };
        v.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    // Polynomials over the field, encoded.

    pub(crate) fn poly_trim(&self, v: &mut FieldPoly) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub(crate) fn poly_mul(&self, a: &[u64], b: &[u64]) -> FieldPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.poly_trim(&mut out);
        out
    }

    pub(crate) fn poly_scale(&self, a: &[u64], c: u64) -> FieldPoly {
        let mut out: FieldPoly = a.iter().map(|&x| self.mul(x, c)).collect();
        self.poly_trim(&mut out);
        out
    }

    pub(crate) fn poly_monic(&self, a: &[u64]) -> FieldPoly {
        match a.last() {
            Some(&lead) => self.poly_scale(a, self.inv(lead)),
            None => Vec::new(),
        }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub(crate) fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (FieldPoly, FieldPoly) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = a.to_vec();
        self.poly_trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), lead_inv);
            q[shift] = c;
            for (j, &y) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, y));
            }
            self.poly_trim(&mut r);
        }
        self.poly_trim(&mut q);
        (q, r)
    }

    pub(crate) fn poly_divides(&self, d: &[u64], a: &[u64]) -> bool {
        if d.is_empty() {
            return a.is_empty();
        }
        self.poly_divrem(a, d).1.is_empty()
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the
    /// base-`q` digits of `index`, least significant first.
    pub(crate) fn monic_from_index(&self, d: usize, mut index: u64) -> FieldPoly {
        let q = self.size();
        let mut out = Vec::with_capacity(d + 1);
        for _ in 0..d {
            out.push(index % q);
            index /= q;
        }
        out.push(1);
        out
    }

    pub(crate) fn encode_poly(&self, f: &Poly) -> FieldPoly {
        let mut out: FieldPoly = f.coeffs().iter().map(|c| self.encode(c)).collect();
        self.poly_trim(&mut out);
        out
    }

    /// Lift of an encoded residue polynomial to `A[x]` via canonical representatives.
    pub(crate) fn lift_poly(&self, v: &[u64]) -> Poly {
        Poly::from_trusted(self.ring(), v.iter().map(|&c| self.decode(c)).collect())
    }

    /// Exhaustive irreducibility test over all monic divisors of degree at
    /// most half the input's. `v` must have degree at least one.
    pub(crate) fn poly_irreducible(&self, v: &[u64]) -> Result<bool> {
        let deg = v.len() - 1;
        let cap = Capacity::global();
        if deg > cap.degree {
            return Err(Error::Capacity(format!("degree {deg} exceeds {}", cap.degree)));
        }
        let q = self.size();
        for d in 1..=deg / 2 {
            let count = q
                .checked_pow(d as u32)
                .filter(|&c| c <= cap.search)
                .ok_or_else(|| Error::Capacity(format!("{q}^{d} candidate divisors exceed {}", cap.search)))?;
            for index in 0..count {
                if self.poly_divides(&self.monic_from_index(d, index), v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A polynomial over `A/(p)`, coefficients held as canonical representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePoly {
    modulus: Elem,
    coeffs: Vec<Elem>,
}

impl ResiduePoly {
    pub fn modulus(&self) -> &Elem {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The representatives as a polynomial over `A`.
    pub fn lift(&self) -> Poly {
        Poly::from_trusted(self.modulus.ring(), self.coeffs.clone())
    }

    pub(crate) fn from_encoded(field: &ResidueField, v: &[u64]) -> ResiduePoly {
        ResiduePoly { modulus: field.modulus().clone(), coeffs: v.iter().map(|&c| field.decode(c)).collect() }
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.lift(), self.modulus)
    }
}

/// Coefficient-wise reduction `A[x] -> (A/(p))[x]`.
pub fn reduce_mod(f: &Poly, p: &Elem) -> Result<ResiduePoly> {
    f.ring().expect(p.ring())?;
    let field = ResidueField::new(p)?;
    Ok(ResiduePoly::from_encoded(&field, &field.encode_poly(f)))
}

/// Whether a residue polynomial of positive degree has no factorization into
/// residue polynomials of lower degree.
pub fn residue_irreducible(fbar: &ResiduePoly) -> Result<bool> {
    if fbar.modulus.ring() == Ring::Rationals {
        return Err(Error::InfiniteResidueField(fbar.modulus.to_string()));
    }
    if fbar.coeffs.len() < 2 {
        return Err(Error::ConstantPolynomial);
    }
    let field = ResidueField::new(&fbar.modulus)?;
    let v: FieldPoly = fbar.coeffs.iter().map(|c| field.encode(c)).collect();
    field.poly_irreducible(&v)
}
