//! Ideals of `A[x]` in the shapes a maximal ideal can take: `(g)` with
//! `M ∩ A = (0)`, or `(p, g)` containing an irreducible constant. The zero
//! and unit ideals complete the picture.

mod kx;
mod oracle;

use std::fmt;

use crate::domain::{parse_elem, Elem, IrreducibleStream, Ring};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Degree, Poly, ResidueField};

pub use kx::{has_root_in_fraction_field, irreducible_over_fraction_field};
pub use oracle::field_quotient_oracle;

/// Stream steps `refute_principal_maximality` takes before giving up.
pub const REFUTATION_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Zero,
    Unit,
    /// `(g)`; `g` is not a unit and its leading coefficient is a canonical associate.
    Principal(Poly),
    /// `(p, g)`; `p` canonical irreducible, `g` monic mod `p` of positive degree
    /// with canonical residue coefficients.
    Pair(Elem, Poly),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealAx {
    ring: Ring,
    shape: Shape,
}

/// `M ∩ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contraction {
    ZeroIdeal,
    Prime(Elem),
    /// `(c)` for a constant `c` that is neither zero, a unit nor irreducible.
    NonPrime(Elem),
    UnitIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    NotProper,
    PrimeNotMaximal,
    Maximal,
    NotPrime,
    Undecided(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::NotProper => write!(f, "NOT_PROPER"),
            Status::PrimeNotMaximal => write!(f, "PRIME_NOT_MAXIMAL"),
            Status::Maximal => write!(f, "MAXIMAL"),
            Status::NotPrime => write!(f, "NOT_PRIME"),
            Status::Undecided(_) => write!(f, "UNDECIDED"),
        }
    }
}

/// Decided status of an ideal. For prime ideals `chain` is a strictly
/// increasing chain of primes from `(0)` to the ideal, of length `height + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub status: Status,
    pub height: Option<u8>,
    pub chain: Vec<IdealAx>,
}

impl Classification {
    fn without_height(status: Status) -> Self {
        Classification { status, height: None, chain: Vec::new() }
    }

    fn prime(status: Status, chain: Vec<IdealAx>) -> Self {
        let height = Some((chain.len() - 1) as u8);
        Classification { status, height, chain }
    }

    pub fn chain_text(&self) -> String {
        self.chain.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("⊂")
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(h) = self.height {
            write!(f, " height={h} chain={}", self.chain_text())?;
        }
        if let Status::Undecided(reason) = &self.status {
            write!(f, " reason={reason}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoWitness {
    BudgetExhausted,
    RingHasFewIrreducibles,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// `g mod p` has positive degree, so `(g) ⊊ (g, p) ⊊ (1)`; `steps` counts
    /// stream elements examined, the witness included.
    Witness { p: Elem, steps: usize },
    NoWitness(NoWitness),
}

impl IdealAx {
    pub fn zero(ring: Ring) -> IdealAx {
        IdealAx { ring, shape: Shape::Zero }
    }

    pub fn unit(ring: Ring) -> IdealAx {
        IdealAx { ring, shape: Shape::Unit }
    }

    /// `(g)`, normalized so the leading coefficient is a canonical associate.
    pub fn principal(g: Poly) -> IdealAx {
        let ring = g.ring();
        if g.is_zero() {
            return IdealAx::zero(ring);
        }
        if g.is_unit() {
            return IdealAx::unit(ring);
        }
        let (u, _) = g.leading_coeff().unwrap().canonical_associate().unwrap();
        let g = g.scale(&u.unit_inverse().unwrap());
        IdealAx { ring, shape: Shape::Principal(g) }
    }

    /// `(p, g)` for an irreducible `p`. Collapses to `(p)` when `p | g` and
    /// to the unit ideal when `g` is a unit mod `p`.
    pub fn pair(p: &Elem, g: &Poly) -> Result<IdealAx> {
        let ring = g.ring();
        ring.expect(p.ring())?;
        let field = ResidueField::new(p).map_err(|e| match e {
            Error::InfiniteResidueField(_) => Error::NotIrreducible(p.to_string()),
            other => other,
        })?;
        let gbar = field.encode_poly(g);
        Ok(match gbar.len() {
            0 => IdealAx::principal(Poly::constant(field.modulus().clone())),
            1 => IdealAx::unit(ring),
            _ => IdealAx {
                ring,
                shape: Shape::Pair(field.modulus().clone(), field.lift_poly(&field.poly_monic(&gbar))),
            },
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn member(&self, f: &Poly) -> Result<bool> {
        self.ring.expect(f.ring())?;
        Ok(match &self.shape {
            Shape::Zero => f.is_zero(),
            Shape::Unit => true,
            Shape::Principal(g) => principal_member(g, f),
            Shape::Pair(p, g) => {
                let field = ResidueField::new(p)?;
                field.poly_divides(&field.encode_poly(g), &field.encode_poly(f))
            }
        })
    }

    /// `M ∩ A`.
    pub fn contract(&self) -> Result<Contraction> {
        Ok(match &self.shape {
            Shape::Unit => return Err(Error::NotProper),
            Shape::Zero => Contraction::ZeroIdeal,
            Shape::Principal(g) if !g.is_constant() => Contraction::ZeroIdeal,
            Shape::Principal(g) => {
                let c = g.coeff(0);
                if c.is_irreducible()? {
                    Contraction::Prime(c)
                } else {
                    Contraction::NonPrime(c)
                }
            }
            Shape::Pair(p, _) => Contraction::Prime(p.clone()),
        })
    }

    pub fn classify(&self) -> Classification {
        let zero = IdealAx::zero(self.ring);
        match &self.shape {
            Shape::Unit => Classification::without_height(Status::NotProper),
            Shape::Zero => Classification::prime(Status::PrimeNotMaximal, vec![zero]),
            Shape::Principal(g) if g.is_constant() => match g.coeff(0).is_irreducible() {
                // A[x]/(p) = (A/(p))[x] is a domain but not a field.
                Ok(true) => Classification::prime(Status::PrimeNotMaximal, vec![zero, self.clone()]),
                Ok(false) => Classification::without_height(Status::NotPrime),
                Err(e) => Classification::without_height(Status::Undecided(e.to_string())),
            },
            Shape::Principal(g) => self.classify_principal(g),
            Shape::Pair(p, g) => {
                let field = match ResidueField::new(p) {
                    Ok(field) => field,
                    Err(e) => return Classification::without_height(Status::Undecided(e.to_string())),
                };
                match field.poly_irreducible(&field.encode_poly(g)) {
                    Ok(true) => {
                        let middle = IdealAx::principal(Poly::constant(p.clone()));
                        Classification::prime(Status::Maximal, vec![zero, middle, self.clone()])
                    }
                    Ok(false) => Classification::without_height(Status::NotPrime),
                    Err(e) => Classification::without_height(Status::Undecided(e.to_string())),
                }
            }
        }
    }

    fn classify_principal(&self, g: &Poly) -> Classification {
        let undecided = |reason: String| Classification::without_height(Status::Undecided(reason));
        let (content, primitive) = g.content_primitive().expect("principal generator is nonzero");
        if !content.is_unit() {
            return Classification::without_height(Status::NotPrime);
        }
        let irreducible = match irreducible_over_fraction_field(&primitive) {
            Ok(Some(false)) => return Classification::without_height(Status::NotPrime),
            Ok(verdict) => verdict,
            Err(e) => return undecided(e.to_string()),
        };
        let height_one = || vec![IdealAx::zero(self.ring), self.clone()];
        if self.ring.is_field() {
            return match irreducible {
                Some(true) => Classification::prime(Status::Maximal, height_one()),
                _ => undecided(format!("irreducibility of {g} over the fraction field is undecided")),
            };
        }
        match refute_principal_maximality(&primitive) {
            Ok(Refutation::Witness { p, .. }) => match irreducible {
                Some(true) => Classification::prime(Status::PrimeNotMaximal, height_one()),
                _ => undecided(format!(
                    "not maximal ({g} is non-constant mod {p}), but irreducibility over the fraction field is undecided"
                )),
            },
            // Every irreducible constant becomes invertible modulo g, so
            // A[x]/(g) = K[x]/(g).
            Ok(Refutation::NoWitness(NoWitness::RingHasFewIrreducibles)) => match irreducible {
                Some(true) => Classification::prime(Status::Maximal, height_one()),
                _ => undecided(format!("irreducibility of {g} over the fraction field is undecided")),
            },
            Ok(Refutation::NoWitness(NoWitness::BudgetExhausted)) => {
                undecided(format!("no irreducible p within {REFUTATION_BUDGET} stream steps leaves {g} non-constant"))
            }
            Err(e) => undecided(e.to_string()),
        }
    }

    /// Height of a prime ideal.
    pub fn height(&self) -> Result<u8> {
        let c = self.classify();
        match c.status {
            Status::PrimeNotMaximal | Status::Maximal => Ok(c.height.unwrap()),
            _ => Err(Error::NotPrimeIdeal(self.to_string())),
        }
    }
}

/// `f ∈ (g)`: strip the content `c` of `g`, require `c | f`, then test
/// divisibility by the primitive part in `K[x]`, which descends to `A[x]`
/// by Gauss's lemma.
fn principal_member(g: &Poly, f: &Poly) -> bool {
    if f.is_zero() {
        return true;
    }
    let (content, primitive) = g.content_primitive().expect("principal generator is nonzero");
    let Some(reduced) = f.exact_div_elem(&content) else { return false };
    if primitive.is_constant() {
        return true;
    }
    reduced.pseudo_divide(&primitive).expect("divisor is nonzero").remainder.is_zero()
}

/// Searches the irreducible stream for a `p` with `g mod p` of positive
/// degree, which proves `(g)` is not maximal.
pub fn refute_principal_maximality(g: &Poly) -> Result<Refutation> {
    refute_principal_maximality_within(g, REFUTATION_BUDGET)
}

pub fn refute_principal_maximality_within(g: &Poly, budget: usize) -> Result<Refutation> {
    if g.degree() < Degree::Finite(1) {
        return Err(Error::ConstantPolynomial);
    }
    if !g.is_primitive() {
        return Err(Error::NotPrimitive(g.to_string()));
    }
    let mut stream = IrreducibleStream::new(g.ring());
    for steps in 1..=budget {
        let Some(p) = stream.next_irreducible() else {
            return Ok(Refutation::NoWitness(NoWitness::RingHasFewIrreducibles));
        };
        let field = ResidueField::new(&p)?;
        if field.encode_poly(g).len() >= 2 {
            return Ok(Refutation::Witness { p, steps });
        }
    }
    Ok(Refutation::NoWitness(NoWitness::BudgetExhausted))
}

/// `dim A[x] = dim A + 1`.
pub fn krull_dim(ring: Ring) -> u8 {
    if ring.is_field() {
        1
    } else {
        2
    }
}

/// Parses `(poly)` or `(elem, poly)`.
pub fn parse_ideal(ring: Ring, text: &str) -> Result<IdealAx> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::syntax("ideal", format!("expected '(' generators ')', got {text:?}")))?;
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::syntax("ideal", "unbalanced brackets"));
        }
    }
    parts.push(&inner[start..]);
    match parts.as_slice() {
        [g] => Ok(IdealAx::principal(parse_poly(ring, g)?)),
        [p, g] => IdealAx::pair(&parse_elem(ring, p)?, &parse_poly(ring, g)?),
        _ => Err(Error::UnsupportedShape(format!("{} generators in {text:?}", parts.len()))),
    }
}

impl fmt::Display for IdealAx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Zero => write!(f, "(0)"),
            Shape::Unit => write!(f, "(1)"),
            Shape::Principal(g) => write!(f, "({g})"),
            Shape::Pair(p, g) => write!(f, "({p}, {g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(text: &str) -> IdealAx {
        parse_ideal(Ring::Integers, text).unwrap()
    }

    fn poly(ring: Ring, text: &str) -> Poly {
        parse_poly(ring, text).unwrap()
    }

    #[test]
    fn parsing_normalizes() {
        assert_eq!(zz("(5, x^2+2)").to_string(), "(5, x^2+2)");
        assert_eq!(zz("(2, 6x+4)").to_string(), "(2)");
        assert_eq!(zz("(3, x+4)").to_string(), "(3, x+1)");
        assert_eq!(zz("(3, 2x+1)").to_string(), "(3, x+2)");
        assert_eq!(zz("(3, 7)").to_string(), "(1)");
        assert_eq!(zz("(-x^2-1)").to_string(), "(x^2+1)");
        assert_eq!(zz("(0)").to_string(), "(0)");
        assert_eq!(zz("(-1)").to_string(), "(1)");
        assert_eq!(parse_ideal(Ring::Gaussian, "((1+i), x^2+1)").unwrap().to_string(), "(1+i, x^2+1)");
        assert_eq!(parse_ideal(Ring::Gaussian, "(1+i, x)").unwrap().to_string(), "(1+i, x)");
    }

    #[test]
    fn parsing_errors() {
        assert!(matches!(parse_ideal(Ring::Integers, "(4, x)"), Err(Error::NotIrreducible(_))));
        assert!(matches!(parse_ideal(Ring::Integers, "(2, x, x+1)"), Err(Error::UnsupportedShape(_))));
        assert!(matches!(parse_ideal(Ring::Integers, "x+1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal(Ring::Integers, "()"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal(Ring::Rationals, "(2, x)"), Err(Error::NotIrreducible(_))));
    }

    #[test]
    fn membership_examples() {
        assert!(!zz("(2, x)").member(&poly(Ring::Integers, "6x+3")).unwrap());
        let loc = Ring::Localized(2);
        let m = parse_ideal(loc, "(2x-1)").unwrap();
        assert!(m.member(&poly(loc, "4x-2")).unwrap());
        assert!(!m.member(&poly(loc, "x")).unwrap());
        assert!(zz("(5, x^2+2)").member(&poly(Ring::Integers, "x^4+4x^2+4")).unwrap());
        assert!(zz("(6x+3)").member(&poly(Ring::Integers, "12x^2+6x")).unwrap());
        assert!(!zz("(6x+3)").member(&poly(Ring::Integers, "2x+1")).unwrap());
        assert!(!zz("(2x+1)").member(&poly(Ring::Integers, "x")).unwrap());
        assert!(zz("(1)").member(&poly(Ring::Integers, "x")).unwrap());
        assert!(matches!(zz("(x)").member(&poly(Ring::Rationals, "x")), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(zz("(x^2+1)").contract().unwrap(), Contraction::ZeroIdeal);
        assert_eq!(zz("(5, x^2+2)").contract().unwrap(), Contraction::Prime(Elem::from_i64(Ring::Integers, 5)));
        assert_eq!(zz("(3)").contract().unwrap(), Contraction::Prime(Elem::from_i64(Ring::Integers, 3)));
        assert_eq!(zz("(6)").contract().unwrap(), Contraction::NonPrime(Elem::from_i64(Ring::Integers, 6)));
        assert_eq!(zz("(1)").contract(), Err(Error::NotProper));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(zz("(5, x^2+2)").classify().to_string(), "MAXIMAL height=2 chain=(0)⊂(5)⊂(5, x^2+2)");
        assert_eq!(zz("(2, x^2+1)").classify().status, Status::NotPrime);
        let loc = parse_ideal(Ring::Localized(2), "(2x-1)").unwrap().classify();
        assert_eq!((loc.status, loc.height), (Status::Maximal, Some(1)));
        let q = parse_ideal(Ring::Rationals, "(x^2+1)").unwrap().classify();
        assert_eq!((q.status, q.height), (Status::Maximal, Some(1)));
        let z = zz("(x^2+1)").classify();
        assert_eq!((z.status, z.height), (Status::PrimeNotMaximal, Some(1)));
        assert_eq!(zz("(x^2-1)").classify().status, Status::NotPrime);
        assert_eq!(zz("(2x+2)").classify().status, Status::NotPrime);
        assert_eq!(zz("(6)").classify().status, Status::NotPrime);
        assert_eq!(zz("(1)").classify().status, Status::NotProper);
        let gauss = parse_ideal(Ring::Gaussian, "(x^2+1)").unwrap().classify();
        assert_eq!(gauss.status, Status::NotPrime);
        let loc_prime = parse_ideal(Ring::Localized(2), "(x^2+x+1)").unwrap().classify();
        assert_eq!((loc_prime.status, loc_prime.height), (Status::PrimeNotMaximal, Some(1)));
    }

    #[test]
    fn heights() {
        assert_eq!(zz("(5, x^2+2)").height().unwrap(), 2);
        assert_eq!(parse_ideal(Ring::Localized(2), "(2x-1)").unwrap().height().unwrap(), 1);
        assert_eq!(zz("(0)").height().unwrap(), 0);
        assert_eq!(zz("(3)").height().unwrap(), 1);
        assert!(matches!(zz("(2, x^2+1)").height(), Err(Error::NotPrimeIdeal(_))));
    }

    #[test]
    fn refutation_examples() {
        let int = |n| Elem::from_i64(Ring::Integers, n);
        assert_eq!(
            refute_principal_maximality(&poly(Ring::Integers, "x^2+1")).unwrap(),
            Refutation::Witness { p: int(2), steps: 1 }
        );
        assert_eq!(
            refute_principal_maximality(&poly(Ring::Integers, "6x+1")).unwrap(),
            Refutation::Witness { p: int(5), steps: 3 }
        );
        assert_eq!(
            refute_principal_maximality(&poly(Ring::Localized(2), "2x-1")).unwrap(),
            Refutation::NoWitness(NoWitness::RingHasFewIrreducibles)
        );
        assert_eq!(
            refute_principal_maximality(&poly(Ring::Rationals, "x")).unwrap(),
            Refutation::NoWitness(NoWitness::RingHasFewIrreducibles)
        );
        assert!(matches!(
            refute_principal_maximality(&poly(Ring::Integers, "2x+2")),
            Err(Error::NotPrimitive(_))
        ));
        assert_eq!(refute_principal_maximality(&poly(Ring::Integers, "5")), Err(Error::ConstantPolynomial));
        assert_eq!(
            refute_principal_maximality_within(&poly(Ring::Integers, "30x+1"), 2).unwrap(),
            Refutation::NoWitness(NoWitness::BudgetExhausted)
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(krull_dim(Ring::Integers), 2);
        assert_eq!(krull_dim(Ring::Rationals), 1);
        assert_eq!(krull_dim(Ring::Localized(2)), 2);
    }
}
