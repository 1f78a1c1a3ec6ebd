//! Gluing of Coxeter pieces along even-angle interfaces, nonarithmeticity
//! verdicts for the result, and link complements built from antiprisms.

mod links;
mod polygon;
mod verdict;

pub use links::{
    classify_link, LinkDescriptor, LinkFamily, LinkReport, PieceAnalysis, COMMENSURABILITY_AXIOM,
    MAX_LINK_PARAMETER,
};
pub use polygon::{
    check_even_angle_interface, format_angle, glue_polygons, is_even, parse_angle, pi_over, Angle,
    CoxeterPolygon, GluingSpec, InterfaceCheck, InterfaceViolation, Piece,
};
pub use verdict::{digest, hybrid_verdict, Evidence, EvidenceLink, HybridReport, HybridVerdict};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetics::{ArithmeticConfig, Verdict};
    use crate::combinatorics::antiprism;
    use crate::realization::SolverConfig;

    fn piece(n: usize) -> PieceAnalysis {
        PieceAnalysis::compute(
            &antiprism(n).unwrap(),
            &SolverConfig::default(),
            &ArithmeticConfig::default(),
        )
        .unwrap()
    }

    fn right_angled_interface(a: &PieceAnalysis, b: &PieceAnalysis) -> InterfaceCheck {
        let spec = GluingSpec {
            first: Piece::Polytope {
                polytope: a.polytope.clone(),
                face: 2,
            },
            second: Piece::Polytope {
                polytope: b.polytope.clone(),
                face: 2,
            },
        };
        check_even_angle_interface(&spec).unwrap()
    }

    fn verdict(a: &PieceAnalysis, b: &PieceAnalysis) -> HybridReport {
        hybrid_verdict(
            &a.arithmeticity,
            &b.arithmeticity,
            &a.fingerprint,
            &b.fingerprint,
            &right_angled_interface(a, b),
        )
    }

    #[test]
    fn mismatch_fingerprint_and_identical_pieces() {
        let (a3, a5, a6) = (piece(3), piece(5), piece(6));
        let r = verdict(&a3, &a5);
        assert_eq!(r.evidence, Evidence::VerdictMismatch);
        assert_eq!(r.verdict, HybridVerdict::Nonarithmetic);
        assert!(r.verify_chain(
            &a3.arithmeticity,
            &a5.arithmeticity,
            &a3.fingerprint,
            &a5.fingerprint
        ));
        assert!(!r.verify_chain(
            &a5.arithmeticity,
            &a3.arithmeticity,
            &a3.fingerprint,
            &a5.fingerprint
        ));

        let r = verdict(&a5, &a6);
        assert_eq!(r.evidence, Evidence::DistinctFingerprints);
        assert_eq!(r.verdict, HybridVerdict::Nonarithmetic);

        let r = verdict(&a3, &a3);
        assert_eq!(r.evidence, Evidence::None);
        assert_eq!(r.verdict, HybridVerdict::Inconclusive);
    }

    #[test]
    fn failed_interface_blocks_the_verdict() {
        let (a3, a5) = (piece(3), piece(5));
        let bad = InterfaceCheck {
            ok: false,
            violations: Vec::new(),
        };
        let r = hybrid_verdict(
            &a3.arithmeticity,
            &a5.arithmeticity,
            &a3.fingerprint,
            &a5.fingerprint,
            &bad,
        );
        assert_eq!(r.evidence, Evidence::VerdictMismatch);
        assert_eq!(r.verdict, HybridVerdict::Inconclusive);
    }

    #[test]
    fn partial_fingerprints_carry_no_evidence() {
        let (a5, a6) = (piece(5), piece(6));
        let mut fa = a5.fingerprint.clone();
        fa.complete = false;
        let r = hybrid_verdict(
            &a5.arithmeticity,
            &a6.arithmeticity,
            &fa,
            &a6.fingerprint,
            &right_angled_interface(&a5, &a6),
        );
        assert_eq!(r.verdict, HybridVerdict::Inconclusive);
    }

    #[test]
    fn augmented_links() {
        let solver = SolverConfig::default();
        let arith = ArithmeticConfig::default();
        let c13 = classify_link(&LinkDescriptor::augmented(3), &solver, &arith).unwrap();
        assert_eq!(c13.link, "C_13");
        assert_eq!(c13.piece, "A_{6,4}");
        assert_eq!(c13.verdict, Verdict::Arithmetic);
        assert!((c13.volume - c13.volume_from_antiprisms.unwrap()).abs() < 1e-6);
        let c9 = classify_link(&LinkDescriptor::augmented(2), &solver, &arith).unwrap();
        assert_eq!(c9.verdict, Verdict::Arithmetic);
        assert_ne!(c9.class_label.polynomials, c13.class_label.polynomials);
        assert!(classify_link(&LinkDescriptor::augmented(1), &solver, &arith).is_err());
        assert!(classify_link(&LinkDescriptor::augmented(7), &solver, &arith).is_err());
    }

    #[test]
    fn chain_links() {
        let d6 = classify_link(
            &LinkDescriptor::chain(3),
            &SolverConfig::default(),
            &ArithmeticConfig::default(),
        )
        .unwrap();
        assert_eq!(d6.link, "D_6");
        assert_eq!(d6.verdict, Verdict::Arithmetic);
        assert!((d6.volume - 2.0 * 3.663862376708876).abs() < 1e-9);
    }
}
