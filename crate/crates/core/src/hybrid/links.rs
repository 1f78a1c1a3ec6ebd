//! Link complements that decompose into ideal right-angled antiprisms.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::verdict::EvidenceLink;
use crate::arithmetics::{
    field_fingerprint, test_arithmetic_rightangled, ArithmeticConfig, ArithmeticityReport,
    FieldFingerprint, Verdict,
};
use crate::combinatorics::{antiprism, twisted_antiprism, CombinatorialPolytope};
use crate::error::{Error, Result};
use crate::invariants::{gram, volume_ideal, GramMatrix};
use crate::realization::{realize_ideal_right_angled, Realization, SolverConfig};

/// Largest family parameter accepted.
pub const MAX_LINK_PARAMETER: usize = 6;

/// Recorded in every link report: the arithmeticity of the link group is
/// read off the reflection group of its polyhedral pieces.
pub const COMMENSURABILITY_AXIOM: &str =
    "assumed: the link group is commensurable with the reflection group of its polyhedral pieces";

/// Realization and invariants of one right-angled piece.
#[derive(Clone, Debug)]
pub struct PieceAnalysis {
    pub polytope: CombinatorialPolytope,
    pub realization: Realization,
    pub gram: GramMatrix,
    pub volume: f64,
    pub arithmeticity: ArithmeticityReport,
    pub fingerprint: FieldFingerprint,
}

impl PieceAnalysis {
    pub fn compute(
        p: &CombinatorialPolytope,
        solver: &SolverConfig,
        arith: &ArithmeticConfig,
    ) -> Result<Self> {
        let realization = realize_ideal_right_angled(p, solver)?;
        let gram = gram(p, &realization)?;
        let volume = volume_ideal(p, &realization)?.total;
        Ok(PieceAnalysis {
            arithmeticity: test_arithmetic_rightangled(&gram, arith),
            fingerprint: field_fingerprint(&gram, arith),
            polytope: p.clone(),
            realization,
            gram,
            volume,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkFamily {
    /// The chain link `D_2n`, whose complement is two copies of `A_n`.
    #[serde(rename = "D")]
    Chain,
    /// `C_4n+1`: `D_4n` with one extra diagonal ring; two copies of
    /// `A_{2n,n+1}`.
    #[serde(rename = "C")]
    Augmented,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDescriptor {
    pub family: LinkFamily,
    pub n: usize,
}

impl LinkDescriptor {
    pub fn chain(n: usize) -> Self {
        LinkDescriptor {
            family: LinkFamily::Chain,
            n,
        }
    }

    pub fn augmented(n: usize) -> Self {
        LinkDescriptor {
            family: LinkFamily::Augmented,
            n,
        }
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        match self.family {
            LinkFamily::Chain => 2 * self.n,
            LinkFamily::Augmented => 4 * self.n + 1,
        }
    }

    fn check(&self) -> Result<()> {
        let lo = match self.family {
            LinkFamily::Chain => 3,
            LinkFamily::Augmented => 2,
        };
        if !(lo..=MAX_LINK_PARAMETER).contains(&self.n) {
            return Err(Error::domain(format!(
                "{self}: parameter n = {} outside the supported range {lo}..={MAX_LINK_PARAMETER}",
                self.n
            )));
        }
        Ok(())
    }

    /// The polyhedron two copies of which make up the complement.
    pub fn piece(&self) -> Result<CombinatorialPolytope> {
        self.check()?;
        match self.family {
            LinkFamily::Chain => antiprism(self.n),
            LinkFamily::Augmented => twisted_antiprism(2 * self.n, self.n + 1),
        }
    }

    pub fn piece_name(&self) -> String {
        match self.family {
            LinkFamily::Chain => format!("A_{}", self.n),
            LinkFamily::Augmented => format!("A_{{{},{}}}", 2 * self.n, self.n + 1),
        }
    }
}

impl fmt::Display for LinkDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            LinkFamily::Chain => write!(f, "D_{}", self.components()),
            LinkFamily::Augmented => write!(f, "C_{}", self.components()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinkReport {
    pub link: String,
    pub descriptor: LinkDescriptor,
    pub piece: String,
    pub copies: usize,
    pub volume: f64,
    /// For `C_4n+1`, `2 (vol A_{n+1} + vol A_{n+1})` from the decomposition
    /// of each piece.
    pub volume_from_antiprisms: Option<f64>,
    pub verdict: Verdict,
    pub arithmeticity: ArithmeticityReport,
    /// Fingerprint of `A_{n+1}` for `C_4n+1` and of `A_n` for `D_2n`.
    pub class_label: FieldFingerprint,
    pub assumption: String,
    pub chain: Vec<EvidenceLink>,
}

/// Volume, arithmeticity and commensurability label of a link complement.
pub fn classify_link(
    d: &LinkDescriptor,
    solver: &SolverConfig,
    arith: &ArithmeticConfig,
) -> Result<LinkReport> {
    let piece = PieceAnalysis::compute(&d.piece()?, solver, arith)?;
    let (label, volume_from_antiprisms) = match d.family {
        LinkFamily::Chain => (piece.fingerprint.clone(), None),
        LinkFamily::Augmented => {
            let a = PieceAnalysis::compute(&antiprism(d.n + 1)?, solver, arith)?;
            (a.fingerprint, Some(2.0 * (a.volume + a.volume)))
        }
    };
    let chain = vec![
        EvidenceLink::new("piece polytope", &piece.polytope),
        EvidenceLink::new("piece gram matrix", &piece.gram),
        EvidenceLink::new("piece arithmeticity report", &piece.arithmeticity),
        EvidenceLink::new("class label fingerprint", &label),
        EvidenceLink::new("assumption", &COMMENSURABILITY_AXIOM),
    ];
    Ok(LinkReport {
        link: d.to_string(),
        descriptor: *d,
        piece: d.piece_name(),
        copies: 2,
        volume: 2.0 * piece.volume,
        volume_from_antiprisms,
        verdict: piece.arithmeticity.verdict,
        arithmeticity: piece.arithmeticity,
        class_label: label,
        assumption: COMMENSURABILITY_AXIOM.to_string(),
        chain,
    })
}
