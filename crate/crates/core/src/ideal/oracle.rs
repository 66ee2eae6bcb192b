//! Brute-force check that `A[x]/(p, g)` is a field.

use crate::capacity::Capacity;
use crate::domain::Elem;
use crate::error::{Error, Result};
use crate::poly::{Poly, ResidueField};

/// Materializes `A[x]/(p, g)` as residue polynomials of degree below
/// `deg(g mod p)` and searches every nonzero element for an inverse.
pub fn field_quotient_oracle(p: &Elem, g: &Poly) -> Result<bool> {
    p.ring().expect(g.ring())?;
    let field = ResidueField::new(p)?;
    let modulus = field.encode_poly(g);
    let d = match modulus.len() {
        0 => return Err(Error::Capacity(format!("({p}, {g}) has an infinite quotient"))),
        1 => return Ok(false),
        n => n - 1,
    };
    let q = field.size();
    let cap = Capacity::global().quotient;
    let order = q
        .checked_pow(d as u32)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::Capacity(format!("quotient of size {q}^{d} exceeds {cap}")))?;
    let elements: Vec<Vec<u64>> = (0..order)
        .map(|mut index| {
            let mut v: Vec<u64> = (0..d)
                .map(|_| {
                    let digit = index % q;
                    index /= q;
                    digit
                })
                .collect();
            field.poly_trim(&mut v);
            v
        })
        .collect();
    let one = vec![1u64];
    let mul = |a: &[u64], b: &[u64]| field.poly_divrem(&field.poly_mul(a, b), &modulus).1;
    Ok(elements[1..]
        .iter()
        .all(|a| elements[1..].iter().any(|b| mul(a, b) == one)))
}
