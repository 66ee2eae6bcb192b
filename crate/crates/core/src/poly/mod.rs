//! Dense univariate polynomials `A[x]` over any of the rings.

mod residue;
pub(crate) mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::domain::{gcd, Elem, Ring};
use crate::error::{Error, Result};

pub use residue::{reduce_mod, residue_irreducible, ResidueField, ResiduePoly};
pub use text::parse_poly;

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial with coefficients in one ring; index `k` holds the
/// coefficient of `x^k` and the last stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

/// `multiplier * f = divisor * quotient + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoDivision {
    pub multiplier: Elem,
    pub quotient: Poly,
    pub remainder: Poly,
}

impl Poly {
    pub fn zero(ring: Ring) -> Poly {
        Poly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: Ring) -> Poly {
        Poly::constant(Elem::one(ring))
    }

    pub fn x(ring: Ring) -> Poly {
        Poly::monomial(Elem::one(ring), 1)
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::monomial(c, 0)
    }

    pub fn monomial(c: Elem, k: usize) -> Poly {
        let ring = c.ring();
        if c.is_zero() {
            return Poly::zero(ring);
        }
        let mut coeffs = vec![Elem::zero(ring); k];
        coeffs.push(c);
        Poly { ring, coeffs }
    }

    pub fn from_coeffs(ring: Ring, coeffs: Vec<Elem>) -> Result<Poly> {
        for c in &coeffs {
            ring.expect(c.ring())?;
        }
        Ok(Poly::from_trusted(ring, coeffs))
    }

    pub(crate) fn from_trusted(ring: Ring, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    /// Integer coefficients, constant term first.
    pub fn from_i64s(ring: Ring, coeffs: &[i64]) -> Poly {
        Poly::from_trusted(ring, coeffs.iter().map(|&c| Elem::from_i64(ring, c)).collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Elem::zero(self.ring))
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Constant polynomials, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Units of `A[x]` for a domain `A` are the unit constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_unit()
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly::from_trusted(self.ring, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x^k * self`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::zero(self.ring); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { ring: self.ring, coeffs }
    }

    /// Divides every coefficient by `c`, if `c` divides them all.
    pub fn exact_div_elem(&self, c: &Elem) -> Option<Poly> {
        let coeffs = self.coeffs.iter().map(|a| a.exact_div(c)).collect::<Option<Vec<_>>>()?;
        Some(Poly::from_trusted(self.ring, coeffs))
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.expect(other.ring)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.ring.expect(other.ring)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.expect(other.ring)?;
        Ok(self * other)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(self.ring), |acc, _| &acc * self)
    }

    /// Classical pseudo-division by `g`: returns `(a, q, r)` with
    /// `a*f = g*q + r`, `a = lc(g)^max(deg f - deg g + 1, 0)` and
    /// `r = 0` or `deg r < deg g`. When `lc(g)` is a unit the multiplier is
    /// normalized to `1`.
    pub fn pseudo_divide(&self, g: &Poly) -> Result<PseudoDivision> {
        self.ring.expect(g.ring)?;
        let dg = g.degree().finite().ok_or(Error::DivisionByZero)?;
        let lead = g.leading_coeff().unwrap().clone();
        let mut steps = match self.degree() {
            Degree::Finite(df) if df >= dg => df - dg + 1,
            _ => 0,
        };
        let multiplier = lead.pow(steps as u32);
        let mut q = Poly::zero(self.ring);
        let mut r = self.clone();
        while let Degree::Finite(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let term = Poly::monomial(r.leading_coeff().unwrap().clone(), dr - dg);
            q = &q.scale(&lead) + &term;
            r = &r.scale(&lead) - &(&term * g);
            steps -= 1;
        }
        let tail = lead.pow(steps as u32);
        let (mut q, mut r) = (q.scale(&tail), r.scale(&tail));
        let multiplier = match multiplier.unit_inverse() {
            Some(inv) => {
                q = q.scale(&inv);
                r = r.scale(&inv);
                Elem::one(self.ring)
            }
            None => multiplier,
        };
        Ok(PseudoDivision { multiplier, quotient: q, remainder: r })
    }

    /// Content (canonical gcd of the coefficients) and primitive part.
    pub fn content_primitive(&self) -> Result<(Elem, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut c = Elem::zero(self.ring);
        for a in self.coeffs.iter().filter(|a| !a.is_zero()) {
            c = gcd(&c, a)?;
            if c.is_one() {
                break;
            }
        }
        let primitive = self.exact_div_elem(&c).expect("content divides every coefficient");
        Ok((c, primitive))
    }

    pub fn is_primitive(&self) -> bool {
        self.content_primitive().is_ok_and(|(c, _)| c.is_unit())
    }

    /// `f(num/den)` as a reduced fraction `(value_num, value_den)` over `A`,
    /// with the denominator in canonical-associate form.
    pub fn evaluate_fraction(&self, num: &Elem, den: &Elem) -> Result<(Elem, Elem)> {
        self.ring.expect(num.ring())?;
        self.ring.expect(den.ring())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = match self.degree() {
            Degree::NegInfinity => return Ok((Elem::zero(self.ring), Elem::one(self.ring))),
            Degree::Finite(n) => n,
        };
        // Horner on the homogenized form sum c_k num^k den^(n-k).
        let mut value = self.coeffs[n].clone();
        let mut den_pow = Elem::one(self.ring);
        for k in (0..n).rev() {
            den_pow = &den_pow * den;
            value = &(&value * num) + &(&self.coeffs[k] * &den_pow);
        }
        let g = gcd(&value, &den_pow)?;
        let value = value.exact_div(&g).unwrap();
        let den_pow = den_pow.exact_div(&g).unwrap();
        let (u, den_canon) = den_pow.canonical_associate()?;
        Ok((&value * &u.unit_inverse().unwrap(), den_canon))
    }

    /// Value at an element of `A`.
    pub fn eval(&self, at: &Elem) -> Elem {
        self.coeffs.iter().rev().fold(Elem::zero(self.ring), |acc, c| &(&acc * at) + c)
    }

    /// Applies `op` to every coefficient.
    pub fn map_coeffs(&self, op: impl Fn(&Elem) -> Elem) -> Poly {
        Poly::from_trusted(self.ring, self.coeffs.iter().map(op).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in polynomial arithmetic");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_trusted(self.ring, (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in polynomial arithmetic");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ring);
        }
        let mut out = vec![Elem::zero(self.ring); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_trusted(self.ring, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}
