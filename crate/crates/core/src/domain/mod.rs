//! The five principal ideal domains: `ZZ`, `ZZ[i]`, `GF(p)[t]`, `Zloc(p)`
//! (the integers localized at a prime) and `QQ`.
//!
//! Elements are always stored in canonical form, so structural equality is
//! ring equality. Arithmetic through the operator traits panics when the
//! operands live in different rings; use the `checked_*` variants at API
//! boundaries.

mod euclid;
pub(crate) mod fp;
mod irreducible;
mod residue;
pub(crate) mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::capacity::Capacity;
use crate::error::{Error, Result};

pub use euclid::{ext_gcd, gcd, units};
pub use irreducible::IrreducibleStream;
pub use text::parse_elem;

/// Which concrete PID is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Gaussian,
    /// `F_p[t]`, polynomials in `t` over the prime field of order `p`.
    FiniteFieldPoly(u64),
    /// `Z_(p)`: fractions whose reduced denominator is prime to `p`.
    Localized(u64),
    Rationals,
}

impl Ring {
    pub fn finite_field_poly(p: u64) -> Result<Ring> {
        check_prime(p)?;
        Ok(Ring::FiniteFieldPoly(p))
    }

    pub fn localized(p: u64) -> Result<Ring> {
        check_prime(p)?;
        Ok(Ring::Localized(p))
    }

    /// Parses `ZZ`, `QQ`, `ZZ[i]`, `GF(p)[t]` or `Zloc(p)`.
    pub fn parse(text: &str) -> Result<Ring> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let prime_arg = |inner: &str| -> Result<u64> {
            inner
                .parse::<u64>()
                .map_err(|_| Error::syntax("ring descriptor", format!("bad prime {inner:?}")))
        };
        match compact.as_str() {
            "ZZ" => Ok(Ring::Integers),
            "QQ" => Ok(Ring::Rationals),
            "ZZ[i]" => Ok(Ring::Gaussian),
            s => {
                if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(")[t]")) {
                    Ring::finite_field_poly(prime_arg(inner)?)
                } else if let Some(inner) = s.strip_prefix("Zloc(").and_then(|r| r.strip_suffix(')')) {
                    Ring::localized(prime_arg(inner)?)
                } else {
                    Err(Error::syntax(
                        "ring descriptor",
                        format!("expected ZZ, QQ, ZZ[i], GF(p)[t] or Zloc(p), got {text:?}"),
                    ))
                }
            }
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Rationals)
    }

    /// The prime parameter of `GF(p)[t]` and `Zloc(p)`.
    pub fn prime(self) -> Option<u64> {
        match self {
            Ring::FiniteFieldPoly(p) | Ring::Localized(p) => Some(p),
            _ => None,
        }
    }

    pub(crate) fn expect(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "ZZ"),
            Ring::Gaussian => write!(f, "ZZ[i]"),
            Ring::FiniteFieldPoly(p) => write!(f, "GF({p})[t]"),
            Ring::Localized(p) => write!(f, "Zloc({p})"),
            Ring::Rationals => write!(f, "QQ"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p > Capacity::global().size {
        return Err(Error::Capacity(format!("prime parameter {p} exceeds the trial-division bound")));
    }
    if !fp::is_prime_u64(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Int(BigInt),
    Gauss(BigInt, BigInt),
    Poly(Vec<u64>),
    Frac(BigRational),
}

/// An element of one of the rings, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Elem {
    ring: Ring,
    repr: Repr,
}

impl Elem {
    pub(crate) fn from_parts(ring: Ring, repr: Repr) -> Elem {
        Elem { ring, repr }
    }

    pub fn zero(ring: Ring) -> Elem {
        Elem::from_i64(ring, 0)
    }

    pub fn one(ring: Ring) -> Elem {
        Elem::from_i64(ring, 1)
    }

    /// The image of an ordinary integer.
    pub fn from_i64(ring: Ring, n: i64) -> Elem {
        Elem::from_bigint(ring, BigInt::from(n))
    }

    pub fn from_bigint(ring: Ring, n: BigInt) -> Elem {
        let repr = match ring {
            Ring::Integers => Repr::Int(n),
            Ring::Gaussian => Repr::Gauss(n, BigInt::zero()),
            Ring::FiniteFieldPoly(p) => {
                let c = n.mod_floor(&BigInt::from(p)).to_u64().unwrap();
                Repr::Poly(if c == 0 { Vec::new() } else { vec![c] })
            }
            Ring::Localized(_) | Ring::Rationals => Repr::Frac(BigRational::from_integer(n)),
        };
        Elem { ring, repr }
    }

    pub fn gaussian(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Elem {
        Elem { ring: Ring::Gaussian, repr: Repr::Gauss(re.into(), im.into()) }
    }

    /// An element of `GF(p)[t]` from little-endian coefficients (reduced mod `p`).
    pub fn fp_poly(p: u64, coeffs: &[u64]) -> Elem {
        let mut v: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
        fp::trim(&mut v);
        Elem { ring: Ring::FiniteFieldPoly(p), repr: Repr::Poly(v) }
    }

    /// A fraction in `QQ` or `Zloc(p)`; fails when the reduced denominator is
    /// divisible by `p`.
    pub fn fraction(ring: Ring, value: BigRational) -> Result<Elem> {
        match ring {
            Ring::Rationals => Ok(Elem { ring, repr: Repr::Frac(value) }),
            Ring::Localized(p) => {
                if value.denom().is_multiple_of(&BigInt::from(p)) {
                    Err(Error::Domain(format!("denominator of {value} is divisible by {p}")))
                } else {
                    Ok(Elem { ring, repr: Repr::Frac(value) })
                }
            }
            _ => Err(Error::UnsupportedRing(ring.to_string())),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_gaussian(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.repr {
            Repr::Gauss(re, im) => Some((re, im)),
            _ => None,
        }
    }

    pub fn as_fp_poly(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Poly(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_fraction(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Frac(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(n) => n.is_zero(),
            Repr::Gauss(re, im) => re.is_zero() && im.is_zero(),
            Repr::Poly(v) => v.is_empty(),
            Repr::Frac(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Int(n) => n.is_one(),
            Repr::Gauss(re, im) => re.is_one() && im.is_zero(),
            Repr::Poly(v) => v.as_slice() == [1],
            Repr::Frac(q) => q.is_one(),
        }
    }

    /// Gaussian norm `re^2 + im^2`.
    pub fn norm(&self) -> Option<BigInt> {
        self.as_gaussian().map(|(re, im)| re * re + im * im)
    }

    pub fn checked_add(&self, other: &Elem) -> Result<Elem> {
        self.ring.expect(other.ring)?;
        Ok(self.combine(other, Op::Add))
    }

    pub fn checked_sub(&self, other: &Elem) -> Result<Elem> {
        self.ring.expect(other.ring)?;
        Ok(self.combine(other, Op::Sub))
    }

    pub fn checked_mul(&self, other: &Elem) -> Result<Elem> {
        self.ring.expect(other.ring)?;
        Ok(self.combine(other, Op::Mul))
    }

    pub fn pow(&self, exp: u32) -> Elem {
        let mut acc = Elem::one(self.ring);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn combine(&self, other: &Elem, op: Op) -> Elem {
        assert_eq!(self.ring, other.ring, "ring mismatch in element arithmetic");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
            }),
            (Repr::Gauss(a, b), Repr::Gauss(c, d)) => match op {
                Op::Add => Repr::Gauss(a + c, b + d),
                Op::Sub => Repr::Gauss(a - c, b - d),
                Op::Mul => Repr::Gauss(a * c - b * d, a * d + b * c),
            },
            (Repr::Poly(a), Repr::Poly(b)) => {
                let p = self.ring.prime().unwrap();
                Repr::Poly(match op {
                    Op::Add => fp::add(p, a, b),
                    Op::Sub => fp::sub(p, a, b),
                    Op::Mul => fp::mul(p, a, b),
                })
            }
            (Repr::Frac(a), Repr::Frac(b)) => Repr::Frac(match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
            }),
            _ => unreachable!("representation does not match ring"),
        };
        Elem { ring: self.ring, repr }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

impl Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        self.combine(rhs, Op::Add)
    }
}

impl Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        self.combine(rhs, Op::Sub)
    }
}

impl Mul for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        self.combine(rhs, Op::Mul)
    }
}

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        let repr = match &self.repr {
            Repr::Int(n) => Repr::Int(-n),
            Repr::Gauss(a, b) => Repr::Gauss(-a, -b),
            Repr::Poly(v) => Repr::Poly(fp::neg(self.ring.prime().unwrap(), v)),
            Repr::Frac(q) => Repr::Frac(-q),
        };
        Elem { ring: self.ring, repr }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_elem(self))
    }
}
