//! Size guards for the brute-force procedures.
//!
//! Defaults can be overridden through the `KRULL_CAPACITY` environment
//! variable, a comma-separated list of `key=value` pairs, e.g.
//! `KRULL_CAPACITY="quotient=8192,size=1000000000000000,degree=20"`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "KRULL_CAPACITY";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capacity {
    /// Largest finite quotient ring `A[x]/(p, g)` the field oracle materializes.
    pub quotient: u64,
    /// Largest Euclidean size (absolute value, norm) accepted by irreducibility tests.
    pub size: u64,
    /// Largest degree accepted by exhaustive polynomial searches.
    pub degree: usize,
    /// Largest number of candidates an exhaustive divisor search may visit.
    pub search: u64,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity { quotient: 4096, size: 1_000_000_000_000, degree: 16, search: 1_000_000 }
    }
}

impl Capacity {
    pub fn parse(text: &str) -> Result<Capacity> {
        let mut cap = Capacity::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::syntax("capacity", format!("expected key=value, got {item:?}")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::syntax("capacity", format!("bad number in {item:?}")))?;
            match key.trim() {
                "quotient" => cap.quotient = value,
                "size" => cap.size = value,
                "degree" => cap.degree = value as usize,
                "search" => cap.search = value,
                other => return Err(Error::syntax("capacity", format!("unknown key {other:?}"))),
            }
        }
        Ok(cap)
    }

    /// Process-wide limits, read once from the environment.
    pub fn global() -> Capacity {
        static CAP: OnceLock<Capacity> = OnceLock::new();
        *CAP.get_or_init(|| match std::env::var(ENV_VAR) {
            Ok(text) => Capacity::parse(&text).unwrap_or_default(),
            Err(_) => Capacity::default(),
        })
    }
}
