//! Euclidean structure: division with remainder, gcd, units and canonical
//! associates.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Euclid, One, Signed, Zero};

use super::{fp, Elem, Repr, Ring};
use crate::error::{Error, Result};

/// `round(x / n)` for `n > 0`, rounding halves up. Translation-equivariant
/// under integer shifts, so Gaussian remainders are well defined.
fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (x * &two + n).div_floor(&(n * &two))
}

/// `v_p(n)` for nonzero `n`.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

impl Elem {
    /// p-adic valuation of a nonzero element of `Zloc(p)`.
    pub fn valuation(&self) -> Option<u32> {
        match (self.ring(), self.repr()) {
            (Ring::Localized(p), Repr::Frac(q)) if !q.is_zero() => Some(int_valuation(q.numer(), p)),
            _ => None,
        }
    }

    /// The Euclidean function: `|a|`, the Gaussian norm, the `t`-degree,
    /// the valuation in `Zloc(p)`, and `0` in `QQ`. `None` for zero.
    pub fn euclidean_size(&self) -> Option<BigUint> {
        if self.is_zero() {
            return None;
        }
        Some(match self.repr() {
            Repr::Int(n) => n.magnitude().clone(),
            Repr::Gauss(..) => self.norm().unwrap().to_biguint().unwrap(),
            Repr::Poly(v) => BigUint::from(v.len() - 1),
            Repr::Frac(_) => match self.ring() {
                Ring::Localized(_) => BigUint::from(self.valuation().unwrap()),
                _ => BigUint::zero(),
            },
        })
    }

    pub fn is_unit(&self) -> bool {
        match self.repr() {
            Repr::Int(n) => n.magnitude().is_one(),
            Repr::Gauss(..) => self.norm().unwrap().is_one(),
            Repr::Poly(v) => v.len() == 1,
            Repr::Frac(q) => !q.is_zero() && (self.ring() == Ring::Rationals || self.valuation() == Some(0)),
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Elem> {
        if !self.is_unit() {
            return None;
        }
        let repr = match self.repr() {
            Repr::Int(n) => Repr::Int(n.clone()),
            Repr::Gauss(re, im) => Repr::Gauss(re.clone(), -im),
            Repr::Poly(v) => Repr::Poly(vec![fp::inv(v[0], self.ring().prime().unwrap())]),
            Repr::Frac(q) => Repr::Frac(q.recip()),
        };
        Some(Elem::from_parts(self.ring(), repr))
    }

    /// Writes `self = u * c` with `u` a unit and `c` the canonical associate:
    /// positive in `ZZ`, `re > 0, im >= 0` in `ZZ[i]`, monic in `GF(p)[t]`,
    /// `p^k` in `Zloc(p)`, `1` in `QQ`.
    pub fn canonical_associate(&self) -> Result<(Elem, Elem)> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ring = self.ring();
        Ok(match self.repr() {
            Repr::Int(n) => {
                let u = Elem::from_i64(ring, if n.is_negative() { -1 } else { 1 });
                (u, Elem::from_parts(ring, Repr::Int(n.abs())))
            }
            Repr::Gauss(..) => units(ring)
                .unwrap()
                .into_iter()
                .find_map(|u| {
                    let c = self * &u.unit_inverse().unwrap();
                    let (re, im) = c.as_gaussian().unwrap();
                    (re.is_positive() && !im.is_negative()).then_some((u, c))
                })
                .expect("some rotation lands in the canonical quadrant"),
            Repr::Poly(v) => {
                let p = ring.prime().unwrap();
                let lead = *v.last().unwrap();
                let c = Elem::fp_poly(p, &fp::scale(p, v, fp::inv(lead, p)));
                (Elem::fp_poly(p, &[lead]), c)
            }
            Repr::Frac(q) => match ring {
                Ring::Localized(p) => {
                    let k = self.valuation().unwrap();
                    let pk = BigRational::from_integer(BigInt::from(p).pow(k));
                    let u = Elem::from_parts(ring, Repr::Frac(q / &pk));
                    (u, Elem::from_parts(ring, Repr::Frac(pk)))
                }
                _ => (self.clone(), Elem::one(ring)),
            },
        })
    }

    /// Canonical associate, with zero mapped to itself.
    pub fn canonical(&self) -> Elem {
        if self.is_zero() {
            self.clone()
        } else {
            self.canonical_associate().unwrap().1
        }
    }

    pub fn is_associate(&self, other: &Elem) -> bool {
        self.ring() == other.ring() && self.canonical() == other.canonical()
    }

    /// Division with remainder: `self = b*q + r` with `r = 0` or
    /// `size(r) < size(b)`.
    pub fn divmod(&self, b: &Elem) -> Result<(Elem, Elem)> {
        self.ring().expect(b.ring())?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.ring();
        Ok(match (self.repr(), b.repr()) {
            (Repr::Int(x), Repr::Int(y)) => (
                Elem::from_parts(ring, Repr::Int(x.div_euclid(y))),
                Elem::from_parts(ring, Repr::Int(x.rem_euclid(y))),
            ),
            (Repr::Gauss(..), Repr::Gauss(c, d)) => {
                let conj = Elem::gaussian(c.clone(), -d);
                let num = self * &conj;
                let (nr, ni) = num.as_gaussian().unwrap();
                let n = b.norm().unwrap();
                let q = Elem::gaussian(round_div(nr, &n), round_div(ni, &n));
                let r = self - &(b * &q);
                (q, r)
            }
            (Repr::Poly(x), Repr::Poly(y)) => {
                let p = ring.prime().unwrap();
                let (q, r) = fp::divrem(p, x, y);
                (Elem::from_parts(ring, Repr::Poly(q)), Elem::from_parts(ring, Repr::Poly(r)))
            }
            (Repr::Frac(x), Repr::Frac(y)) => {
                let exact = Elem::from_parts(ring, Repr::Frac(x / y));
                match ring {
                    Ring::Localized(_) if !self.is_zero() && self.valuation() < b.valuation() => {
                        (Elem::zero(ring), self.clone())
                    }
                    _ => (exact, Elem::zero(ring)),
                }
            }
            _ => unreachable!("representation does not match ring"),
        })
    }

    /// `self / b` when `b` divides `self`.
    pub fn exact_div(&self, b: &Elem) -> Option<Elem> {
        match self.divmod(b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Whether `self` divides `a`. Zero divides only zero.
    pub fn divides(&self, a: &Elem) -> bool {
        if self.is_zero() {
            return a.is_zero();
        }
        a.exact_div(self).is_some()
    }
}

/// The unit group when it is finite.
pub fn units(ring: Ring) -> Option<Vec<Elem>> {
    match ring {
        Ring::Integers => Some(vec![Elem::from_i64(ring, 1), Elem::from_i64(ring, -1)]),
        Ring::Gaussian => Some(vec![
            Elem::gaussian(1, 0),
            Elem::gaussian(0, 1),
            Elem::gaussian(-1, 0),
            Elem::gaussian(0, -1),
        ]),
        Ring::FiniteFieldPoly(p) => Some((1..p).map(|c| Elem::fp_poly(p, &[c])).collect()),
        Ring::Localized(_) | Ring::Rationals => None,
    }
}

/// Canonical generator of `(a, b)`.
pub fn gcd(a: &Elem, b: &Elem) -> Result<Elem> {
    a.ring().expect(b.ring())?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.divmod(&y)?.1;
        x = y;
        y = r;
    }
    Ok(x.canonical())
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the canonical gcd.
pub fn ext_gcd(a: &Elem, b: &Elem) -> Result<(Elem, Elem, Elem)> {
    a.ring().expect(b.ring())?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let ring = a.ring();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Elem::one(ring), Elem::zero(ring));
    let (mut t0, mut t1) = (Elem::zero(ring), Elem::one(ring));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &(&q * &s1);
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &(&q * &t1);
        t0 = std::mem::replace(&mut t1, t);
    }
    let (u, g) = r0.canonical_associate()?;
    let u_inv = u.unit_inverse().unwrap();
    Ok((g, &s0 * &u_inv, &t0 * &u_inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Elem {
        Elem::from_i64(Ring::Integers, n)
    }

    fn loc(p: u64, n: i64, d: i64) -> Elem {
        Elem::fraction(Ring::Localized(p), BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn integer_divmod() {
        assert_eq!(int(7).divmod(&int(3)).unwrap(), (int(2), int(1)));
        let (q, r) = int(-7).divmod(&int(3)).unwrap();
        assert_eq!((q, r), (int(-3), int(2)));
        assert_eq!(int(1).divmod(&int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gaussian_exact_division() {
        let (q, r) = Elem::gaussian(1, 3).divmod(&Elem::gaussian(1, 1)).unwrap();
        assert_eq!(q, Elem::gaussian(2, 1));
        assert!(r.is_zero());
    }

    #[test]
    fn localized_divmod_by_valuation() {
        let (q, r) = loc(2, 4, 3).divmod(&loc(2, 2, 1)).unwrap();
        assert_eq!(q, loc(2, 2, 3));
        assert!(r.is_zero());
        let (q, r) = loc(2, 3, 1).divmod(&loc(2, 2, 1)).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, loc(2, 3, 1));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(12), &int(18)).unwrap(), int(6));
        let a = Elem::fp_poly(2, &[0, 1, 1]);
        let b = Elem::fp_poly(2, &[1, 0, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), Elem::fp_poly(2, &[1, 1]));
        assert_eq!(gcd(&loc(5, 4, 1), &loc(5, 6, 1)).unwrap(), loc(5, 1, 1));
        assert_eq!(gcd(&int(-4), &int(0)).unwrap(), int(4));
        assert_eq!(gcd(&int(0), &int(0)), Err(Error::BothZero));
    }

    #[test]
    fn ext_gcd_is_bezout() {
        let (g, s, t) = ext_gcd(&int(240), &int(46)).unwrap();
        assert_eq!(g, int(2));
        assert_eq!(&(&s * &int(240)) + &(&t * &int(46)), g);
        let a = Elem::gaussian(7, 3);
        let b = Elem::gaussian(2, -5);
        let (g, s, t) = ext_gcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn unit_examples() {
        assert!(int(-1).is_unit());
        assert!(Elem::gaussian(0, 1).is_unit());
        assert!(loc(2, 3, 7).is_unit());
        assert!(!loc(2, 6, 7).is_unit());
        assert!(!int(0).is_unit());
        assert!(Elem::from_i64(Ring::Rationals, -3).is_unit());
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(int(-5).canonical_associate().unwrap(), (int(-1), int(5)));
        assert_eq!(
            Elem::gaussian(-1, 1).canonical_associate().unwrap(),
            (Elem::gaussian(0, 1), Elem::gaussian(1, 1))
        );
        assert_eq!(
            Elem::fp_poly(3, &[2, 2]).canonical_associate().unwrap(),
            (Elem::fp_poly(3, &[2]), Elem::fp_poly(3, &[1, 1]))
        );
        assert_eq!(loc(3, -18, 5).canonical_associate().unwrap().1, loc(3, 9, 1));
        assert_eq!(int(0).canonical_associate(), Err(Error::ZeroElement));
    }
}
