//! Brute-force irreducibility and the ordered irreducible streams.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{fp, Elem, Repr, Ring};
use crate::capacity::Capacity;
use crate::error::{Error, Result};

fn size_guard(n: &BigInt, what: &str) -> Result<u64> {
    let cap = Capacity::global().size;
    match n.to_u64() {
        Some(v) if v <= cap => Ok(v),
        _ => Err(Error::Capacity(format!("{what} {n} exceeds the brute-force bound {cap}"))),
    }
}

fn gaussian_irreducible(re: &BigInt, im: &BigInt, norm: u64) -> bool {
    if fp::is_prime_u64(norm) {
        return true;
    }
    // Rational primes p = 3 mod 4 stay prime in ZZ[i].
    let axis = if re.is_zero() {
        im.abs()
    } else if im.is_zero() {
        re.abs()
    } else {
        return false;
    };
    let m = axis.to_u64().unwrap();
    m % 4 == 3 && fp::is_prime_u64(m)
}

impl Elem {
    /// Nonzero nonunit with no factorization into two nonunits.
    ///
    /// Inputs whose Euclidean size exceeds the configured capacity are
    /// rejected rather than searched.
    pub fn is_irreducible(&self) -> Result<bool> {
        match self.repr() {
            Repr::Int(n) => {
                let n = size_guard(&n.abs(), "|a| =")?;
                Ok(fp::is_prime_u64(n))
            }
            Repr::Gauss(re, im) => {
                let norm = size_guard(&self.norm().unwrap(), "norm")?;
                Ok(gaussian_irreducible(re, im, norm))
            }
            Repr::Poly(v) => {
                let p = self.ring().prime().unwrap();
                let cap = Capacity::global();
                let deg = v.len().saturating_sub(1);
                if deg > cap.degree {
                    return Err(Error::Capacity(format!("degree {deg} exceeds {}", cap.degree)));
                }
                let work: u64 = (1..=deg / 2).map(|d| p.saturating_pow(d as u32)).fold(0, u64::saturating_add);
                if work > cap.search {
                    return Err(Error::Capacity(format!("{work} trial divisors exceed {}", cap.search)));
                }
                Ok(fp::is_irreducible_brute(p, v))
            }
            Repr::Frac(_) => Ok(self.ring() != Ring::Rationals && self.valuation() == Some(1)),
        }
    }

    /// Canonical divisors of a nonzero element of `ZZ`, `ZZ[i]` or
    /// `GF(p)[t]`, found by exhaustive search.
    pub fn canonical_divisors(&self) -> Result<Vec<Elem>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ring = self.ring();
        let search = Capacity::global().search;
        match self.repr() {
            Repr::Int(n) => {
                let n = size_guard(&n.abs(), "|a| =")?;
                let mut small = Vec::new();
                let mut large = Vec::new();
                let mut d = 1u64;
                while d * d <= n {
                    if n % d == 0 {
                        small.push(d);
                        if d * d != n {
                            large.push(n / d);
                        }
                    }
                    d += 1;
                }
                small.extend(large.into_iter().rev());
                Ok(small.into_iter().map(|d| Elem::from_bigint(ring, d.into())).collect())
            }
            Repr::Gauss(..) => {
                let norm = size_guard(&self.norm().unwrap(), "norm")?;
                if norm > search {
                    return Err(Error::Capacity(format!("norm {norm} exceeds the divisor search bound {search}")));
                }
                let mut out = Vec::new();
                for re in 1..=norm.sqrt() {
                    for im in 0..=(norm - re * re).sqrt() {
                        let n = re * re + im * im;
                        if norm % n != 0 {
                            continue;
                        }
                        let d = Elem::gaussian(re, im);
                        if d.divides(self) {
                            out.push(d);
                        }
                    }
                }
                Ok(out)
            }
            Repr::Poly(v) => {
                let p = ring.prime().unwrap();
                let deg = v.len() - 1;
                let mut out = vec![Elem::one(ring)];
                for d in 1..=deg {
                    let count = p.checked_pow(d as u32).filter(|&c| c <= search).ok_or_else(|| {
                        Error::Capacity(format!("divisor search of degree {d} over GF({p}) exceeds {search}"))
                    })?;
                    for index in 0..count {
                        let candidate = fp::monic_from_index(p, d, index);
                        if fp::divrem(p, v, &candidate).1.is_empty() {
                            out.push(Elem::fp_poly(p, &candidate));
                        }
                    }
                }
                Ok(out)
            }
            Repr::Frac(_) => Err(Error::UnsupportedRing(ring.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
enum Cursor {
    Integers { next: u64 },
    Gaussian { norm: u64, pending: VecDeque<Elem> },
    FiniteFieldPoly { degree: usize, index: u64 },
    Single { emitted: bool },
    Empty,
}

/// Pairwise nonassociate canonical irreducibles in a fixed order:
/// increasing magnitude in `ZZ`; increasing norm then increasing real part
/// in `ZZ[i]`; increasing degree then base-`p` coefficient order in
/// `GF(p)[t]`; the single prime of `Zloc(p)`; nothing in `QQ`.
///
/// The stream holds mutable cursor state and is meant for a single owner.
#[derive(Debug, Clone)]
pub struct IrreducibleStream {
    ring: Ring,
    cursor: Cursor,
}

impl IrreducibleStream {
    pub fn new(ring: Ring) -> Self {
        let cursor = match ring {
            Ring::Integers => Cursor::Integers { next: 2 },
            Ring::Gaussian => Cursor::Gaussian { norm: 1, pending: VecDeque::new() },
            Ring::FiniteFieldPoly(_) => Cursor::FiniteFieldPoly { degree: 1, index: 0 },
            Ring::Localized(_) => Cursor::Single { emitted: false },
            Ring::Rationals => Cursor::Empty,
        };
        IrreducibleStream { ring, cursor }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The next irreducible, or `None` once the stream is exhausted.
    pub fn next_irreducible(&mut self) -> Option<Elem> {
        let ring = self.ring;
        match &mut self.cursor {
            Cursor::Integers { next } => loop {
                let n = *next;
                *next += 1;
                if fp::is_prime_u64(n) {
                    return Some(Elem::from_i64(ring, n as i64));
                }
            },
            Cursor::Gaussian { norm, pending } => loop {
                if let Some(e) = pending.pop_front() {
                    return Some(e);
                }
                *norm += 1;
                let n = *norm;
                for re in 1..=n.sqrt() {
                    let rest = n - re * re;
                    let im = rest.sqrt();
                    if im * im == rest && gaussian_irreducible(&re.into(), &im.into(), n) {
                        pending.push_back(Elem::gaussian(re, im));
                    }
                }
            },
            Cursor::FiniteFieldPoly { degree, index } => {
                let p = ring.prime().unwrap();
                loop {
                    if *index >= p.saturating_pow(*degree as u32) {
                        *degree += 1;
                        *index = 0;
                    }
                    let candidate = fp::monic_from_index(p, *degree, *index);
                    *index += 1;
                    if fp::is_irreducible_brute(p, &candidate) {
                        return Some(Elem::fp_poly(p, &candidate));
                    }
                }
            }
            Cursor::Single { emitted } => {
                if *emitted {
                    None
                } else {
                    *emitted = true;
                    Some(Elem::from_i64(ring, ring.prime().unwrap() as i64))
                }
            }
            Cursor::Empty => None,
        }
    }
}

impl Iterator for IrreducibleStream {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        self.next_irreducible()
    }
}
