//! One verification report per claim: a computed value next to its closed form.

pub mod classical;
pub mod counting;
pub mod structure;

pub use classical::{blowup_intersection, conic_linear_system, BlowupClass};
pub use counting::{apparent_double_points, component_degrees, degree_secant_fourfold, degree_veronese};
pub use structure::{
    lemma_sec_check, smoothness_sample, span_dimension, tangent_cone_invariants, verify_chart, SmoothnessKind,
};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{AlgebraError, Field};
use crate::geometry::GeometryError;
use crate::groebner::GroebnerError;

/// Number of derived seeds tried before a randomized count gives up.
pub const MAX_ATTEMPTS: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("{0}")]
    Precondition(String),
    #[error("non-generic slice after {attempts} attempts: {reason}")]
    NonGeneric { attempts: u32, reason: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl InvariantsError {
    /// True when the failure is a Gröbner resource cap.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            InvariantsError::Groebner(GroebnerError::BudgetExceeded { .. })
                | InvariantsError::Geometry(GeometryError::Groebner(GroebnerError::BudgetExceeded { .. }))
        )
    }
}

/// Coefficient field recorded in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeTag {
    Rational,
    Prime(u64),
}

impl PrimeTag {
    pub fn of<F: Field>(domain: &F::Domain) -> Self {
        match F::characteristic(domain) {
            0 => PrimeTag::Rational,
            p => PrimeTag::Prime(p),
        }
    }
}

impl Serialize for PrimeTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PrimeTag::Rational => s.serialize_str("Q"),
            PrimeTag::Prime(p) => s.serialize_u64(*p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub computed: Vec<i64>,
    pub expected: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub seed: u64,
    pub prime: PrimeTag,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(claim: &str, computed: Vec<i64>, expected: Vec<i64>, seed: u64, prime: PrimeTag) -> Self {
        let matches = computed == expected;
        VerificationReport {
            claim: claim.to_string(),
            params: BTreeMap::new(),
            computed,
            expected,
            matches,
            seed,
            prime,
            elapsed_ms: 0,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// Force `computed == expected` as the match flag and also require `extra`.
    pub(crate) fn require(mut self, extra: bool) -> Self {
        self.matches = self.computed == self.expected && extra;
        self
    }
}

/// Seed for attempt `k` derived from the user seed (splitmix64 step).
pub(crate) fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    if attempt == 0 {
        return seed;
    }
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(attempt as u64));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
