//! Polynomial grammar:
//!
//! ```text
//! poly := term (('+'|'-') term)*
//! term := coeff ('*'? 'x' ('^' nat)?)? | 'x' ('^' nat)?
//! ```
//!
//! A leading sign is allowed. Printing uses descending powers, omits zero
//! terms and unit coefficients, and writes no spaces.

use super::Poly;
use crate::domain::text::{coefficient, coefficient_parts, Scanner};
use crate::domain::{Elem, Ring};
use crate::error::{Error, Result};

const MAX_EXPONENT: u64 = 4096;

pub fn parse_poly(ring: Ring, text: &str) -> Result<Poly> {
    let mut s = Scanner::new(text, "polynomial");
    let f = parse_poly_in(ring, &mut s)?;
    s.finish()?;
    Ok(f)
}

pub(crate) fn parse_poly_in(ring: Ring, s: &mut Scanner) -> Result<Poly> {
    let mut acc = Poly::zero(ring);
    let mut first = true;
    loop {
        let neg = if s.eat('-') {
            true
        } else if s.eat('+') {
            false
        } else if first {
            false
        } else {
            break;
        };
        first = false;
        let coeff = coefficient(ring, s)?;
        let has_x = match coeff {
            Some(_) => {
                let star = s.eat('*');
                let x = s.eat('x');
                if star && !x {
                    return Err(s.error("expected 'x' after '*'"));
                }
                x
            }
            None => {
                if !s.eat('x') {
                    return Err(s.error("expected a coefficient or 'x'"));
                }
                true
            }
        };
        let exp = if has_x && s.eat('^') { s.natural()? } else { u64::from(has_x) };
        if exp > MAX_EXPONENT {
            return Err(Error::Capacity(format!("exponent {exp} exceeds {MAX_EXPONENT}")));
        }
        let c = coeff.unwrap_or_else(|| Elem::one(ring));
        let c = if neg { -&c } else { c };
        acc = &acc + &Poly::monomial(c, exp as usize);
    }
    Ok(acc)
}

pub(crate) fn format_poly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, body, unit) = coefficient_parts(c);
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 || !unit {
            out.push_str(&body);
        }
        match k {
            0 => {}
            1 => out.push('x'),
            k => out.push_str(&format!("x^{k}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_poly(Ring::Integers, "x^2 + 1").unwrap(), Poly::from_i64s(Ring::Integers, &[1, 0, 1]));
        assert_eq!(parse_poly(Ring::Integers, "6*x + 3").unwrap(), Poly::from_i64s(Ring::Integers, &[3, 6]));
        let gf2 = Ring::FiniteFieldPoly(2);
        let f = parse_poly(gf2, "[t]*x + [1]").unwrap();
        assert_eq!(f.coeffs(), &[Elem::fp_poly(2, &[1]), Elem::fp_poly(2, &[0, 1])]);
        assert_eq!(parse_poly(Ring::Integers, "-x^2-x+x").unwrap(), Poly::from_i64s(Ring::Integers, &[0, 0, -1]));
        assert!(parse_poly(Ring::Integers, "x - x").unwrap().is_zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x^", "2*", "x +", "3 x y", "x^-1"] {
            assert!(matches!(parse_poly(Ring::Integers, bad), Err(Error::Syntax { .. })), "{bad}");
        }
        assert!(matches!(parse_poly(Ring::Localized(3), "x + 1/3"), Err(Error::Domain(_))));
        assert!(matches!(parse_poly(Ring::Integers, "x^100000"), Err(Error::Capacity(_))));
    }

    #[test]
    fn printing() {
        let zz = |c: &[i64]| Poly::from_i64s(Ring::Integers, c).to_string();
        assert_eq!(zz(&[-1, 2]), "2x-1");
        assert_eq!(zz(&[2, 0, 1]), "x^2+2");
        assert_eq!(zz(&[-1, 0, -1]), "-x^2-1");
        assert_eq!(zz(&[]), "0");
        let g = parse_poly(Ring::Gaussian, "(1+2i)x^2 - (i)x + (-3)").unwrap();
        assert_eq!(g.to_string(), "(1+2i)x^2-(i)x-3");
        let q = parse_poly(Ring::Rationals, "1/2x - 3/4").unwrap();
        assert_eq!(q.to_string(), "1/2x-3/4");
        let t = parse_poly(Ring::FiniteFieldPoly(3), "[2t+1]x^2 + x + 2").unwrap();
        assert_eq!(t.to_string(), "[2t+1]x^2+x+[2]");
    }
}
