//! Serializable result records for identity checks and congruence claims.
//!
//! Every record carries `schema: 1` so downstream consumers can detect
//! format changes.  Coefficients are reported as decimal strings: they
//! routinely exceed every machine integer width.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::congruence::CongruenceClaim;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

/// First place two series disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Result of verifying one named identity at one parameter choice.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub schema: u32,
    pub identity_id: String,
    /// Parameter values, sorted by name.
    pub params: BTreeMap<String, i64>,
    /// Largest exponent compared.
    pub precision: i64,
    /// Present when the comparison was coefficientwise mod m.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn new(
        identity: &str,
        params: BTreeMap<String, i64>,
        precision: i64,
        modulus: Option<u64>,
        mismatch: Option<Mismatch>,
    ) -> Self {
        IdentityReport {
            schema: 1,
            identity_id: identity.to_string(),
            params,
            precision,
            modulus,
            status: if mismatch.is_none() { Status::Verified } else { Status::Failed },
            mismatch,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// A coefficient that should have vanished mod m but did not.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    /// Index in the arithmetic progression.
    pub n: u64,
    /// The exponent d*n + a it names.
    pub exponent: u64,
    /// The offending coefficient (exact, as a decimal string).
    pub coefficient: String,
}

/// Result of checking one congruence claim for all progression indices up
/// to n_max.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub schema: u32,
    #[serde(flatten)]
    pub claim: CongruenceClaim,
    pub n_max: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl ClaimReport {
    pub fn new(claim: CongruenceClaim, n_max: u64, counterexample: Option<Counterexample>) -> Self {
        ClaimReport {
            schema: 1,
            claim,
            n_max,
            status: if counterexample.is_none() { Status::Verified } else { Status::Failed },
            counterexample,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}
