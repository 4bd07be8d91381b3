use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource bounds shared by all bounded operations. Exceeding a bound is an
/// error, never a silent truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order for subgroup-lattice backed operations.
    pub max_order: u128,
    /// Largest degree for coset actions and product constructions.
    pub max_degree: usize,
    /// Largest group that may be enumerated element by element.
    pub max_elements: u128,
    /// Largest number of generation tests for exhaustive counts.
    pub max_tests: u128,
    /// Largest `|G|^d` for the brute-force exchange-property oracle.
    pub max_bruteforce_tuples: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 2000,
            max_degree: 100_000,
            max_elements: 200_000,
            max_tests: 100_000_000,
            max_bruteforce_tuples: 40_000,
        }
    }
}

impl Limits {
    pub fn with_max_order(mut self, max_order: u128) -> Self {
        self.max_order = max_order;
        self
    }

    pub(crate) fn check(what: &'static str, limit: u128, actual: u128) -> Result<()> {
        if actual > limit {
            Err(Error::BoundExceeded { what, limit, actual })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_order(&self, order: u128) -> Result<()> {
        Self::check("lattice order", self.max_order, order)
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<()> {
        Self::check("degree", self.max_degree as u128, degree as u128)
    }

    pub(crate) fn check_elements(&self, order: u128) -> Result<()> {
        Self::check("element enumeration", self.max_elements, order)
    }
}
