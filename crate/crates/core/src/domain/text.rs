//! Element grammar and canonical printing.
//!
//! ```text
//! ZZ          -?[0-9]+
//! QQ, Zloc(p) -?[0-9]+(/[0-9]+)?
//! ZZ[i]       (a+bi) (a-bi) (a) (bi); parentheses optional at top level, `i` = `1i`
//! GF(p)[t]    [t^2+t+1] [1] [t]; a bare integer is read as a constant
//! ```
//! Whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{fp, Elem, Repr, Ring};
use crate::error::{Error, Result};

pub(crate) struct Scanner {
    chars: Vec<char>,
    pos: usize,
    grammar: &'static str,
}

impl Scanner {
    pub(crate) fn new(text: &str, grammar: &'static str) -> Self {
        Scanner { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, grammar }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn error(&self, message: impl AsRef<str>) -> Error {
        let found = match self.peek() {
            Some(c) => format!("{c:?} at offset {}", self.pos),
            None => "end of input".to_string(),
        };
        Error::syntax(self.grammar, format!("{}, found {found}", message.as_ref()))
    }

    pub(crate) fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Some(s.parse().unwrap())
    }

    pub(crate) fn natural(&mut self) -> Result<u64> {
        self.digits()
            .and_then(|n| n.to_u64())
            .ok_or_else(|| self.error("expected a natural number"))
    }
}

/// Parses a standalone element.
pub fn parse_elem(ring: Ring, text: &str) -> Result<Elem> {
    let mut s = Scanner::new(text, "element");
    let e = match ring {
        Ring::Gaussian => {
            if s.eat('(') {
                let e = gaussian_body(&mut s)?;
                s.expect(')')?;
                e
            } else {
                gaussian_body(&mut s)?
            }
        }
        Ring::FiniteFieldPoly(_) => {
            let neg = s.eat('-');
            let e = coefficient(ring, &mut s)?.ok_or_else(|| s.error("expected [t-polynomial] or integer"))?;
            if neg {
                -&e
            } else {
                e
            }
        }
        _ => signed_number(ring, &mut s)?,
    };
    s.finish()?;
    Ok(e)
}

fn signed_number(ring: Ring, s: &mut Scanner) -> Result<Elem> {
    let neg = s.eat('-');
    let e = coefficient(ring, s)?.ok_or_else(|| s.error("expected a number"))?;
    Ok(if neg { -&e } else { e })
}

/// An unsigned coefficient as it may appear in front of `x`, or `None` when
/// the next token does not start one.
pub(crate) fn coefficient(ring: Ring, s: &mut Scanner) -> Result<Option<Elem>> {
    match ring {
        Ring::Integers => Ok(s.digits().map(|n| Elem::from_bigint(ring, n))),
        Ring::Rationals | Ring::Localized(_) => {
            let Some(num) = s.digits() else { return Ok(None) };
            let den = if s.eat('/') { s.digits().ok_or_else(|| s.error("expected a denominator"))? } else { BigInt::one() };
            if den.is_zero() {
                return Err(Error::Domain("zero denominator".into()));
            }
            Elem::fraction(ring, BigRational::new(num, den)).map(Some)
        }
        Ring::Gaussian => {
            if s.eat('(') {
                let e = gaussian_body(s)?;
                s.expect(')')?;
                return Ok(Some(e));
            }
            match s.digits() {
                Some(n) if s.eat('i') => Ok(Some(Elem::gaussian(0, n))),
                Some(n) => Ok(Some(Elem::gaussian(n, 0))),
                None if s.eat('i') => Ok(Some(Elem::gaussian(0, 1))),
                None => Ok(None),
            }
        }
        Ring::FiniteFieldPoly(p) => {
            if s.eat('[') {
                let e = t_poly(p, s)?;
                s.expect(']')?;
                Ok(Some(e))
            } else {
                Ok(s.digits().map(|n| Elem::from_bigint(ring, n)))
            }
        }
    }
}

fn gaussian_body(s: &mut Scanner) -> Result<Elem> {
    let mut re: Option<BigInt> = None;
    let mut im: Option<BigInt> = None;
    let mut first = true;
    loop {
        let neg = if s.eat('-') {
            true
        } else if !first && s.eat('+') {
            false
        } else if first {
            false
        } else {
            break;
        };
        let magnitude = s.digits();
        let (slot, value) = if s.eat('i') {
            (&mut im, magnitude.unwrap_or_else(BigInt::one))
        } else {
            (&mut re, magnitude.ok_or_else(|| s.error("expected a Gaussian integer"))?)
        };
        if slot.is_some() {
            return Err(s.error("repeated real or imaginary part"));
        }
        *slot = Some(if neg { -value } else { value });
        first = false;
    }
    Ok(Elem::gaussian(re.unwrap_or_default(), im.unwrap_or_default()))
}

fn t_poly(p: u64, s: &mut Scanner) -> Result<Elem> {
    let mut acc: Vec<u64> = Vec::new();
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
        let coeff = s.digits();
        let has_t = if coeff.is_some() {
            let star = s.eat('*');
            let t = s.eat('t');
            if star && !t {
                return Err(s.error("expected 't' after '*'"));
            }
            t
        } else {
            if !s.eat('t') {
                return Err(s.error("expected a t-term"));
            }
            true
        };
        let exp = if has_t && s.eat('^') { s.natural()? as usize } else { usize::from(has_t) };
        if exp > 4096 {
            return Err(Error::Capacity(format!("exponent {exp} is too large")));
        }
        let c = coeff.map_or(1, |n| (n % BigInt::from(p)).to_u64().unwrap());
        let c = if neg { (p - c) % p } else { c };
        let mut term = vec![0u64; exp + 1];
        term[exp] = c;
        acc = fp::add(p, &acc, &term);
    }
    Ok(Elem::fp_poly(p, &acc))
}

fn gaussian_str(re: &BigInt, im: &BigInt) -> String {
    if im.is_zero() {
        return re.to_string();
    }
    let imag = if im.abs().is_one() { "i".to_string() } else { format!("{}i", im.abs()) };
    let sign = if im.is_negative() { "-" } else { "+" };
    if re.is_zero() {
        format!("{}{imag}", if im.is_negative() { "-" } else { "" })
    } else {
        format!("{re}{sign}{imag}")
    }
}

fn t_poly_str(v: &[u64]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (c, k) {
            (c, 0) => out.push_str(&c.to_string()),
            (1, 1) => out.push('t'),
            (1, k) => out.push_str(&format!("t^{k}")),
            (c, 1) => out.push_str(&format!("{c}t")),
            (c, k) => out.push_str(&format!("{c}t^{k}")),
        }
    }
    out
}

pub(crate) fn format_elem(e: &Elem) -> String {
    match e.repr() {
        Repr::Int(n) => n.to_string(),
        Repr::Gauss(re, im) => gaussian_str(re, im),
        Repr::Poly(v) => format!("[{}]", t_poly_str(v)),
        Repr::Frac(q) => q.to_string(),
    }
}

/// How a nonzero element prints as a polynomial coefficient: its sign, the
/// magnitude text, and whether that magnitude is one (and may be elided).
pub(crate) fn coefficient_parts(e: &Elem) -> (bool, String, bool) {
    match e.repr() {
        Repr::Int(n) => (n.is_negative(), n.abs().to_string(), n.abs().is_one()),
        Repr::Frac(q) => (q.is_negative(), q.abs().to_string(), q.abs().is_one()),
        Repr::Gauss(re, im) if im.is_zero() => (re.is_negative(), re.abs().to_string(), re.abs().is_one()),
        Repr::Gauss(re, im) => {
            let neg = re.is_negative() || (re.is_zero() && im.is_negative());
            let (r, i) = if neg { (-re, -im) } else { (re.clone(), im.clone()) };
            (neg, format!("({})", gaussian_str(&r, &i)), false)
        }
        Repr::Poly(v) => (false, format!("[{}]", t_poly_str(v)), v.as_slice() == [1]),
    }
}
