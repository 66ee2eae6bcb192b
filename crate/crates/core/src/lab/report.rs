use serde::Serialize;

use super::{irreducible_census, jacobson_witness, random_poly, random_primitive, sample_maximal_ideals, CensusKind};
use crate::domain::{Elem, Ring};
use crate::error::Result;
use crate::ideal::{refute_principal_maximality, Classification, Contraction, IdealAx, Refutation, Status};
use crate::poly::Poly;
use crate::rng::SeededRng;

/// Coefficient bound for the polynomials drawn by `verify_theorem`.
const MAGNITUDE: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub ring: Ring,
    pub budget: usize,
    pub samples: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub kind: String,
    pub count: usize,
    pub samples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub ideal: String,
    pub status: String,
    pub height: Option<u8>,
    pub chain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobsonWitness {
    pub poly: String,
    pub ideal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobsonReport {
    pub trials: usize,
    pub all_witnessed: bool,
    pub witnesses: Vec<JacobsonWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefutationReport {
    pub trials: usize,
    pub all_witnessed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ring: String,
    pub seed: u64,
    pub budget: usize,
    pub census: CensusReport,
    pub maximal_samples: Vec<ChainReport>,
    pub height1_witness: Option<ChainReport>,
    pub refutation: RefutationReport,
    pub lemma1: JacobsonReport,
    pub theorem_consistent: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "ring={} seed={} budget={}\ncensus={}({}) samples=[{}]\n",
            self.ring,
            self.seed,
            self.budget,
            self.census.kind,
            self.census.count,
            self.census.samples.join(", ")
        );
        for s in &self.maximal_samples {
            out += &format!("maximal {} {}{}\n", s.ideal, s.status, chain_suffix(s));
        }
        match &self.height1_witness {
            Some(w) => out += &format!("height1_witness {} {}{}\n", w.ideal, w.status, chain_suffix(w)),
            None => out += "height1_witness NONE\n",
        }
        out += &format!(
            "refutation trials={} all_witnessed={}\nlemma1 trials={} all_witnessed={}\n",
            self.refutation.trials, self.refutation.all_witnessed, self.lemma1.trials, self.lemma1.all_witnessed
        );
        for w in &self.lemma1.witnesses {
            out += &format!("jacobson {} ∉ {}\n", w.poly, w.ideal);
        }
        out += &format!("theorem_consistent={}\n", self.theorem_consistent);
        out
    }
}

fn chain_suffix(s: &ChainReport) -> String {
    match s.height {
        Some(h) => format!(" height={h} chain={}", s.chain.join("⊂")),
        None => String::new(),
    }
}

fn status_text(c: &Classification) -> String {
    match &c.status {
        Status::Undecided(reason) => format!("UNDECIDED({reason})"),
        other => other.to_string(),
    }
}

fn chain_report(m: &IdealAx, c: &Classification) -> ChainReport {
    ChainReport {
        ideal: m.to_string(),
        status: status_text(c),
        height: c.height,
        chain: c.chain.iter().map(|i| i.to_string()).collect(),
    }
}

/// Explicit maximal ideal of height one when the ring has only finitely
/// many irreducibles.
fn height_one_witness(ring: Ring) -> IdealAx {
    let x = Poly::x(ring);
    match ring.prime() {
        Some(p) if matches!(ring, Ring::Localized(_)) => {
            IdealAx::principal(&x.scale(&Elem::from_i64(ring, p as i64)) - &Poly::one(ring))
        }
        _ => IdealAx::principal(x),
    }
}

/// Runs the census, classifies sampled maximal ideals, searches for
/// refutation witnesses or a height-one maximal ideal, and checks the
/// Jacobson lemma on random polynomials.
pub fn verify_theorem(config: VerifyConfig) -> Result<VerificationReport> {
    let VerifyConfig { ring, budget, samples, trials, seed } = config;
    let census = irreducible_census(ring, budget);
    let mut master = SeededRng::new(seed);
    let refutation_seed = master.next_u64();
    let lemma_seed = master.next_u64();

    let maximal = if census.samples.is_empty() { Vec::new() } else { sample_maximal_ideals(ring, samples, seed)? };
    let maximal_samples: Vec<ChainReport> = maximal.iter().map(|m| chain_report(m, &m.classify())).collect();

    let (forward, height1_witness, refutation) = match census.kind {
        CensusKind::AtLeast(_) => {
            let mut rng = SeededRng::new(refutation_seed);
            let mut all_witnessed = true;
            for _ in 0..samples {
                let g = random_primitive(ring, &mut rng, 3, MAGNITUDE);
                all_witnessed &= matches!(refute_principal_maximality(&g)?, Refutation::Witness { .. });
            }
            let heights_two = maximal
                .iter()
                .zip(&maximal_samples)
                .all(|(_, s)| s.status == "MAXIMAL" && s.height == Some(2));
            (heights_two && all_witnessed, None, RefutationReport { trials: samples, all_witnessed })
        }
        CensusKind::Finite(_) => {
            let m = height_one_witness(ring);
            let c = m.classify();
            let product = census.samples.iter().fold(Elem::one(ring), |acc, p| &acc * p);
            let converse = c.status == Status::Maximal
                && c.height == Some(1)
                && m.contract()? == Contraction::ZeroIdeal
                && !m.member(&Poly::constant(product))?;
            (converse, Some(chain_report(&m, &c)), RefutationReport { trials: 0, all_witnessed: true })
        }
    };

    let mut rng = SeededRng::new(lemma_seed);
    let mut witnesses = Vec::with_capacity(trials);
    let mut all_witnessed = true;
    for _ in 0..trials {
        let f = loop {
            let f = random_poly(ring, &mut rng, 3, MAGNITUDE);
            if !f.is_zero() {
                break f;
            }
        };
        let m = jacobson_witness(ring, &f)?;
        all_witnessed &= m.classify().status == Status::Maximal && !m.member(&f)?;
        witnesses.push(JacobsonWitness { poly: f.to_string(), ideal: m.to_string() });
    }

    let (kind, count) = match census.kind {
        CensusKind::Finite(n) => ("FINITE", n),
        CensusKind::AtLeast(n) => ("AT_LEAST", n),
    };
    Ok(VerificationReport {
        ring: ring.to_string(),
        seed,
        budget,
        census: CensusReport {
            kind: kind.into(),
            count,
            samples: census.samples.iter().map(|e| e.to_string()).collect(),
        },
        maximal_samples,
        height1_witness,
        refutation,
        lemma1: JacobsonReport { trials, all_witnessed, witnesses },
        theorem_consistent: forward && all_witnessed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ring: Ring) -> VerifyConfig {
        VerifyConfig { ring, budget: 10, samples: 5, trials: 5, seed: 42 }
    }

    #[test]
    fn small_reports() {
        let zz = verify_theorem(config(Ring::Integers)).unwrap();
        assert!(zz.theorem_consistent);
        assert_eq!((zz.census.kind.as_str(), zz.census.count), ("AT_LEAST", 10));
        assert!(zz.height1_witness.is_none());
        let loc = verify_theorem(config(Ring::Localized(2))).unwrap();
        assert!(loc.theorem_consistent);
        assert_eq!(loc.height1_witness.unwrap().ideal, "(2x-1)");
        let q = verify_theorem(config(Ring::Rationals)).unwrap();
        assert!(q.theorem_consistent);
        assert_eq!((q.census.kind.as_str(), q.census.count), ("FINITE", 0));
        assert_eq!(q.height1_witness.unwrap().ideal, "(x)");
        assert!(q.maximal_samples.is_empty());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_theorem(config(Ring::Gaussian)).unwrap().to_json();
        assert_eq!(a, verify_theorem(config(Ring::Gaussian)).unwrap().to_json());
    }
}
