//! Nonarithmeticity verdicts for glued pieces.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::polygon::InterfaceCheck;
use crate::arithmetics::{ArithmeticityReport, FieldFingerprint, Verdict};

/// SHA-256 of the compact JSON serialization of `value`, hex encoded.
pub fn digest<T: Serialize>(value: &T) -> String {
    let json = serde_json::to_vec(value).expect("reports serialize");
    hex::encode(Sha256::digest(json))
}

/// A named input together with its digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceLink {
    pub role: String,
    pub sha256: String,
}

impl EvidenceLink {
    pub fn new<T: Serialize>(role: &str, value: &T) -> Self {
        EvidenceLink {
            role: role.to_string(),
            sha256: digest(value),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// One piece is arithmetic and the other is not, so their groups are
    /// incommensurable.
    VerdictMismatch,
    /// Both fingerprints are complete and differ.
    DistinctFingerprints,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HybridVerdict {
    Nonarithmetic,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HybridReport {
    pub interface: InterfaceCheck,
    pub evidence: Evidence,
    pub verdict: HybridVerdict,
    pub reason: String,
    /// Digests of the four input reports and the interface check.
    pub chain: Vec<EvidenceLink>,
}

const ROLES: [&str; 5] = [
    "interface",
    "first arithmeticity report",
    "second arithmeticity report",
    "first fingerprint",
    "second fingerprint",
];

/// Combine the reports of two pieces glued along an even-angle interface.
///
/// Incommensurable pieces make the glued group nonarithmetic. Evidence of
/// incommensurability is a verdict mismatch, or failing that a pair of
/// complete, differing fingerprints. The result is never "arithmetic".
pub fn hybrid_verdict(
    a: &ArithmeticityReport,
    b: &ArithmeticityReport,
    fa: &FieldFingerprint,
    fb: &FieldFingerprint,
    interface: &InterfaceCheck,
) -> HybridReport {
    let chain = vec![
        EvidenceLink::new(ROLES[0], interface),
        EvidenceLink::new(ROLES[1], a),
        EvidenceLink::new(ROLES[2], b),
        EvidenceLink::new(ROLES[3], fa),
        EvidenceLink::new(ROLES[4], fb),
    ];
    let decided = |v: Verdict| v != Verdict::Inconclusive;
    let (evidence, mut reason) =
        if decided(a.verdict) && decided(b.verdict) && a.verdict != b.verdict {
            (
                Evidence::VerdictMismatch,
                format!("pieces are {:?} and {:?}", a.verdict, b.verdict).to_lowercase(),
            )
        } else if fa.separates(fb) {
            (
                Evidence::DistinctFingerprints,
                "complete fingerprints differ (separating evidence)".to_string(),
            )
        } else if !fa.complete || !fb.complete {
            (
                Evidence::None,
                "a fingerprint is partial and the verdicts agree".to_string(),
            )
        } else {
            (
                Evidence::None,
                "verdicts agree and fingerprints coincide".to_string(),
            )
        };
    let verdict = if interface.ok && evidence != Evidence::None {
        HybridVerdict::Nonarithmetic
    } else {
        HybridVerdict::Inconclusive
    };
    if !interface.ok {
        reason = format!("interface check failed; {reason}");
    }
    HybridReport {
        interface: interface.clone(),
        evidence,
        verdict,
        reason,
        chain,
    }
}

impl HybridReport {
    /// Whether the chain matches the given inputs.
    pub fn verify_chain(
        &self,
        a: &ArithmeticityReport,
        b: &ArithmeticityReport,
        fa: &FieldFingerprint,
        fb: &FieldFingerprint,
    ) -> bool {
        let expected = [
            digest(&self.interface),
            digest(a),
            digest(b),
            digest(fa),
            digest(fb),
        ];
        self.chain.len() == expected.len()
            && self
                .chain
                .iter()
                .zip(ROLES.iter().zip(&expected))
                .all(|(link, (role, sha))| link.role == *role && &link.sha256 == sha)
    }
}
