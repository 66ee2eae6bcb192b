//! Reduction modulo an irreducible element onto a canonical transversal of
//! `A/(p)`.
//!
//! Transversals: `0..p` in `ZZ` and `Zloc(p)`; remainders of degree below
//! `deg p` in `GF(q)[t]`; in `ZZ[i]`, the integers `0..N(p)` when the norm is
//! prime, and the box `a + bi` with `0 <= a, b < q` for an inert prime `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{fp, Elem, Repr};
use crate::error::{Error, Result};

fn residue_u64(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

impl Elem {
    /// Canonical representative of `self` in `A/(p)`; zero iff `p | self`.
    pub fn mod_reduce(&self, p: &Elem) -> Result<Elem> {
        self.ring().expect(p.ring())?;
        if !p.is_irreducible()? {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        Ok(self.reduce_by_canonical(&p.canonical()))
    }

    /// Reduction by an irreducible already known to be canonical.
    pub(crate) fn reduce_by_canonical(&self, p: &Elem) -> Elem {
        let ring = self.ring();
        match (self.repr(), p.repr()) {
            (Repr::Int(a), Repr::Int(m)) => Elem::from_parts(ring, Repr::Int(a.mod_floor(m))),
            (Repr::Gauss(x, y), Repr::Gauss(a, b)) => {
                if b.is_zero() {
                    let q = a.to_u64().unwrap();
                    Elem::gaussian(residue_u64(x, q), residue_u64(y, q))
                } else {
                    let n = p.norm().unwrap().to_u64().unwrap();
                    let i_image = gaussian_i_image(a, b, n);
                    let xr = residue_u64(x, n);
                    let yr = residue_u64(y, n);
                    Elem::gaussian((xr + fp::mulmod(yr, i_image, n)) % n, 0)
                }
            }
            (Repr::Poly(v), Repr::Poly(m)) => {
                let q = ring.prime().unwrap();
                Elem::fp_poly(q, &fp::divrem(q, v, m).1)
            }
            (Repr::Frac(value), Repr::Frac(_)) => {
                let q = ring.prime().unwrap();
                let num = residue_u64(value.numer(), q);
                let den = residue_u64(value.denom(), q);
                Elem::from_i64(ring, fp::mulmod(num, fp::inv(den, q), q) as i64)
            }
            _ => unreachable!("representation does not match ring"),
        }
    }
}

/// The residue `c` with `i = c` modulo `a + bi`, for a prime norm `n`.
fn gaussian_i_image(a: &BigInt, b: &BigInt, n: u64) -> u64 {
    let a = residue_u64(a, n);
    let b = residue_u64(b, n);
    let c = fp::mulmod(a, fp::inv(b, n), n);
    (n - c) % n
}
