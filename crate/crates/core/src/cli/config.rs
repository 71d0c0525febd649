//! Suite configuration and its validation.

use std::path::PathBuf;

use serde::Serialize;

use crate::algebra::is_prime;
use crate::error::{Error, Result};

pub const MAX_RMAX: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Gamma,
    Bar,
    Groups,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Main, Suite::Gamma, Suite::Bar, Suite::Groups, Suite::Appendix];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Gamma => "gamma",
            Suite::Bar => "bar",
            Suite::Groups => "groups",
            Suite::Appendix => "appendix",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub primes: Vec<u32>,
    pub r_max: u32,
    /// Truncation order T for power-series pairings.
    pub trunc: usize,
    /// Field extension degrees 1..=ext are swept.
    pub ext: u32,
    /// Torsion level M of the ambient (ℤ/p^M)^2; None uses M = r per case.
    pub torsion: Option<u32>,
    pub m_max: u64,
    pub jobs: usize,
    pub seed: u64,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Record wall-clock milliseconds; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            primes: vec![2, 3],
            r_max: 4,
            trunc: 16,
            ext: 2,
            torsion: None,
            m_max: 6,
            jobs: 1,
            seed: 0x150c,
            out: None,
            format: Format::Json,
            timings: false,
        }
    }
}

impl SuiteConfig {
    /// Rejects bad parameters before any computation.
    pub fn validate(&self) -> Result<()> {
        if self.primes.is_empty() {
            return Err(Error::Config("at least one prime is required".into()));
        }
        for &p in &self.primes {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p as u64));
            }
            if self.trunc < p as usize + 2 {
                return Err(Error::Config(format!("truncation {} must be at least p + 2 = {}", self.trunc, p + 2)));
            }
        }
        if self.r_max > MAX_RMAX {
            return Err(Error::Config(format!("rmax {} exceeds {MAX_RMAX}", self.r_max)));
        }
        if !(1..=2).contains(&self.ext) {
            return Err(Error::UnsupportedDegree(self.ext));
        }
        if let Some(m) = self.torsion {
            if m < self.r_max {
                return Err(Error::Config(format!("torsion level {m} is below rmax {}", self.r_max)));
            }
        }
        if self.m_max == 0 {
            return Err(Error::Config("mmax must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be positive".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suite selected".into()));
        }
        Ok(())
    }

    /// Sorted, deduplicated primes.
    pub fn prime_list(&self) -> Vec<u32> {
        let mut v = self.primes.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        assert!(SuiteConfig::default().validate().is_ok());
    }

    #[test]
    fn rejects_bad_parameters() {
        let base = SuiteConfig::default();
        let bad = [
            SuiteConfig { primes: vec![2, 9], ..base.clone() },
            SuiteConfig { primes: vec![], ..base.clone() },
            SuiteConfig { primes: vec![5], trunc: 6, ..base.clone() },
            SuiteConfig { r_max: 6, ..base.clone() },
            SuiteConfig { ext: 0, ..base.clone() },
            SuiteConfig { torsion: Some(3), ..base.clone() },
            SuiteConfig { m_max: 0, ..base.clone() },
            SuiteConfig { jobs: 0, ..base.clone() },
            SuiteConfig { suites: vec![], ..base.clone() },
        ];
        for c in bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
        assert!(SuiteConfig { primes: vec![5], trunc: 7, torsion: Some(4), ..base }.validate().is_ok());
    }

    #[test]
    fn prime_list_sorted_unique() {
        let c = SuiteConfig { primes: vec![5, 2, 5, 3], ..SuiteConfig::default() };
        assert_eq!(c.prime_list(), vec![2, 3, 5]);
    }
}
