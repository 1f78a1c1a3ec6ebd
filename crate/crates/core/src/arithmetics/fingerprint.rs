//! Minimal polynomials of short cyclic products, as a commensurability
//! fingerprint.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::poly::{minimal_polynomial, Poly};
use super::{cycles, support, ArithmeticConfig, CycleProduct};
use crate::invariants::GramMatrix;

/// Attached to every fingerprint: differing fingerprints separate groups,
/// equal ones prove nothing.
pub const FINGERPRINT_NOTE: &str =
    "separating evidence only: distinct fingerprints show non-commensurability, equal ones are not a proof of commensurability";

/// Relative accuracy a polynomial must reach at its value.
const VANISH_TOL: f64 = 1e-20;
/// Values closer than this are treated as one.
const DEDUP_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFingerprint {
    /// Distinct minimal polynomials, sorted, leading coefficient first.
    pub polynomials: Vec<Poly>,
    /// Values for which no polynomial of degree up to `max_degree` was found.
    pub unresolved: usize,
    /// Every value was resolved and every cycle was enumerated.
    pub complete: bool,
    pub max_len: usize,
    pub max_degree: usize,
    pub note: String,
}

/// Minimal polynomials of the cyclic products of `2G` of length at most
/// `cfg.fingerprint_max_len`, counting `(2 G_ij)^2` as length 2.
pub fn field_fingerprint(g: &GramMatrix, cfg: &ArithmeticConfig) -> FieldFingerprint {
    let n = g.size();
    let adj = support(g);
    let mut values = Vec::new();
    if cfg.fingerprint_max_len >= 2 {
        for i in 0..n {
            for &j in adj[i].iter().filter(|&&j| j > i) {
                values.push(CycleProduct::product(g, &[i, j]));
            }
        }
    }
    let cov = cycles::for_each_cycle(&adj, cfg.fingerprint_max_len, cfg.budget, |c| {
        values.push(CycleProduct::product(g, c));
        ControlFlow::Continue(())
    });
    values.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
    values.dedup_by(|a, b| (a.to_f64() - b.to_f64()).abs() <= DEDUP_TOL * (1.0 + b.to_f64().abs()));

    let mut polynomials = Vec::new();
    let mut unresolved = 0;
    for v in values {
        match minimal_polynomial(v, cfg.fingerprint_degree, VANISH_TOL) {
            Some(p) => polynomials.push(p),
            None => unresolved += 1,
        }
    }
    polynomials.sort();
    polynomials.dedup();
    FieldFingerprint {
        polynomials,
        unresolved,
        complete: unresolved == 0 && !cov.exhausted,
        max_len: cfg.fingerprint_max_len,
        max_degree: cfg.fingerprint_degree,
        note: FINGERPRINT_NOTE.to_string(),
    }
}

impl FieldFingerprint {
    /// Whether the two fingerprints are complete and differ.
    pub fn separates(&self, other: &FieldFingerprint) -> bool {
        self.complete && other.complete && self.polynomials != other.polynomials
    }
}
