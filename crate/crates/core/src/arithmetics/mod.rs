//! Arithmeticity of right-angled reflection groups from Gram data.
//!
//! With `M = 2G`, the reflection group of an ideal right-angled polyhedron
//! is arithmetic exactly when every cyclic product `M_{i1 i2} M_{i2 i3} ...
//! M_{ik i1}` is a rational integer. Cyclic products include the squares
//! `M_ij^2` (the walk `i, j, i`), which the test checks first; once all of
//! those are integers, a cycle's product is an integer iff the product of
//! its squared entries is a perfect square, which is decided exactly from
//! the squarefree parts.

mod cycles;
mod fingerprint;
mod lll;
mod poly;
mod rational;

use std::collections::{BTreeMap, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::invariants::{GramMatrix, PairKind};

pub use fingerprint::{field_fingerprint, FieldFingerprint, FINGERPRINT_NOTE};
pub use poly::{eval_dd, is_irreducible, minimal_polynomial, Poly};
pub use rational::{integer_distance, rational_detect, MAX_DENOMINATOR};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArithmeticConfig {
    /// Longest simple cycle to enumerate; `None` means the number of faces.
    pub max_len: Option<usize>,
    /// Path extensions allowed during cycle enumeration.
    pub budget: u64,
    /// Below this distance to the nearest integer a value counts as integral.
    pub integer_tol: f64,
    /// Above this distance a value is a non-integer; in between the test
    /// abstains.
    pub witness_tol: f64,
    /// Highest degree tried for fingerprint polynomials.
    pub fingerprint_degree: usize,
    /// Longest cyclic product used for fingerprints; 2 means the squared
    /// doubled Gram entries.
    pub fingerprint_max_len: usize,
}

impl Default for ArithmeticConfig {
    fn default() -> Self {
        ArithmeticConfig {
            max_len: None,
            budget: 10_000_000,
            integer_tol: 1e-9,
            witness_tol: 1e-6,
            fingerprint_degree: 8,
            fingerprint_max_len: 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleClass {
    Integer,
    RationalNonInteger,
    /// No rational with denominator up to `10^6` matches.
    IrrationalSuspect,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleProduct {
    pub cycle: Vec<usize>,
    pub value: f64,
    pub class: CycleClass,
}

impl CycleProduct {
    /// `prod 2 G` around the cycle, in double-double.
    pub fn product(g: &GramMatrix, cycle: &[usize]) -> Dd {
        let n = cycle.len();
        (0..n).fold(Dd::ONE, |acc, t| {
            acc * g.precise(cycle[t], cycle[(t + 1) % n]) * 2.0
        })
    }

    fn classify(value: f64, tol: f64) -> CycleClass {
        match rational_detect(value, tol) {
            Some(r) if r.is_integer() => CycleClass::Integer,
            Some(_) => CycleClass::RationalNonInteger,
            None => CycleClass::IrrationalSuspect,
        }
    }

    fn new(g: &GramMatrix, cycle: Vec<usize>, tol: f64) -> Self {
        let value = Self::product(g, &cycle).to_f64();
        CycleProduct {
            class: Self::classify(value, tol),
            cycle,
            value,
        }
    }
}

/// Graph of the nonzero off-diagonal Gram entries.
fn support(g: &GramMatrix) -> Vec<Vec<usize>> {
    let n = g.size();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && g.kind(i, j) != PairKind::Adjacent)
                .collect()
        })
        .collect()
}

/// Every simple cycle of length `3..=max_len` with its product.
///
/// Orthogonal pairs contribute zero and are never used. Running past
/// `budget` path extensions is an error that reports how far the
/// enumeration got.
pub fn cycle_products(g: &GramMatrix, max_len: usize, budget: u64) -> Result<Vec<CycleProduct>> {
    let mut out = Vec::new();
    let cov = cycles::for_each_cycle(&support(g), max_len, budget, |c| {
        out.push(CycleProduct::new(g, c.to_vec(), 1e-9));
        ControlFlow::Continue(())
    });
    if cov.exhausted {
        return Err(Error::Budget {
            budget,
            cycles_checked: cov.cycles,
            complete_len: cov.complete_len,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Arithmetic,
    Nonarithmetic,
    Inconclusive,
}

/// How the verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    /// Every simple cycle up to `max_len` was enumerated.
    Exhaustive,
    /// Enumeration hit the budget; the squarefree labels of the squared
    /// entries were shown to be a coboundary over a spanning forest, so
    /// every cycle of every length has an integral product.
    CycleSpace,
    /// The test stopped at a witness or abstained.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArithmeticityReport {
    pub verdict: Verdict,
    pub witness_cycle: Vec<usize>,
    pub witness_value: Option<f64>,
    pub witness_class: Option<CycleClass>,
    pub max_len: usize,
    /// Every cycle of length up to this was examined.
    pub complete_len: usize,
    pub cycles_checked: u64,
    pub budget: u64,
    pub budget_exhausted: bool,
    pub coverage: Coverage,
    pub tolerance: f64,
    pub integer_tolerance: f64,
    pub note: String,
}

impl ArithmeticityReport {
    pub fn witness(&self) -> Option<CycleProduct> {
        Some(CycleProduct {
            cycle: self.witness_cycle.clone(),
            value: self.witness_value?,
            class: self.witness_class?,
        })
    }

    /// Recompute the witness product from `g` and confirm that it is at
    /// least `tolerance` away from every integer.
    pub fn recheck_witness(&self, g: &GramMatrix) -> bool {
        let c = &self.witness_cycle;
        let n = g.size();
        let valid = c.len() >= 2
            && c.iter().all(|&i| i < n)
            && (0..c.len()).all(|t| g.kind(c[t], c[(t + 1) % c.len()]) != PairKind::Adjacent)
            && {
                let mut s = c.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == c.len()
            };
        valid && integer_distance(CycleProduct::product(g, c).to_f64()) >= self.tolerance
    }
}

/// Squarefree part of an integer as a set of prime indices.
#[derive(Clone, Default, PartialEq, Eq)]
struct Parity(Vec<u64>);

impl Parity {
    fn toggle(&mut self, other: &Parity) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn is_square(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

#[derive(Default)]
struct PrimeIndex(BTreeMap<u128, usize>);

impl PrimeIndex {
    fn parity(&mut self, q: u128) -> Parity {
        let mut bits = Parity::default();
        for p in rational::odd_primes(q) {
            let next = self.0.len();
            let i = *self.0.entry(p).or_insert(next);
            if bits.0.len() <= i / 64 {
                bits.0.resize(i / 64 + 1, 0);
            }
            bits.0[i / 64] ^= 1 << (i % 64);
        }
        bits
    }
}

/// Decide arithmeticity of the reflection group with Gram matrix `g`.
///
/// 1. Each squared entry `(2 G_ij)^2` must be an integer; one that is
///    farther than `witness_tol` from every integer is a witness.
/// 2. Simple cycles of length 3 up to `max_len` are enumerated, shortest
///    first; a cycle whose squared entries multiply to a non-square is a
///    witness.
/// 3. If the budget runs out first, the cycle space is settled at once by
///    checking that the squarefree parts form a coboundary; a failing
///    fundamental cycle is a witness.
///
/// Values between `integer_tol` and `witness_tol` from an integer make the
/// test abstain rather than guess.
pub fn test_arithmetic_rightangled(g: &GramMatrix, cfg: &ArithmeticConfig) -> ArithmeticityReport {
    let n = g.size();
    let max_len = cfg.max_len.unwrap_or(n);
    let adj = support(g);
    let mut report = ArithmeticityReport {
        verdict: Verdict::Inconclusive,
        witness_cycle: Vec::new(),
        witness_value: None,
        witness_class: None,
        max_len,
        complete_len: 2,
        cycles_checked: 0,
        budget: cfg.budget,
        budget_exhausted: false,
        coverage: Coverage::Partial,
        tolerance: cfg.witness_tol,
        integer_tolerance: cfg.integer_tol,
        note: String::new(),
    };
    let witness = |report: &mut ArithmeticityReport, cycle: Vec<usize>| {
        let w = CycleProduct::new(g, cycle, cfg.integer_tol);
        report.verdict = Verdict::Nonarithmetic;
        report.witness_cycle = w.cycle;
        report.witness_value = Some(w.value);
        report.witness_class = Some(w.class);
    };

    // Squared entries.
    let mut primes = PrimeIndex::default();
    let mut labels = vec![vec![Parity::default(); n]; n];
    let mut ties = Vec::new();
    for i in 0..n {
        for &j in adj[i].iter().filter(|&&j| j > i) {
            let q = CycleProduct::product(g, &[i, j]);
            let d = integer_distance(q.to_f64());
            report.cycles_checked += 1;
            if d > cfg.witness_tol {
                witness(&mut report, vec![i, j]);
                report.note = format!("squared entry ({i}, {j}) is not an integer");
                return report;
            }
            if d >= cfg.integer_tol {
                ties.push((i, j));
                continue;
            }
            let rounded = q.to_f64().round();
            if !(1.0..9.0e15).contains(&rounded) {
                ties.push((i, j));
                continue;
            }
            let l = primes.parity(rounded as u128);
            labels[j][i] = l.clone();
            labels[i][j] = l;
        }
    }
    if !ties.is_empty() {
        report.note = format!(
            "{} squared entries lie between {:e} and {:e} from an integer, e.g. {:?}",
            ties.len(),
            cfg.integer_tol,
            cfg.witness_tol,
            ties[0]
        );
        return report;
    }
    let label = |a: usize, b: usize| &labels[a][b];

    // Cycles, shortest first.
    let mut found: Option<Vec<usize>> = None;
    let mut acc = Parity::default();
    let mut near_miss = None;
    let cov = cycles::for_each_cycle(&adj, max_len, cfg.budget, |c| {
        acc.0.iter_mut().for_each(|w| *w = 0);
        for t in 0..c.len() {
            acc.toggle(label(c[t], c[(t + 1) % c.len()]));
        }
        if acc.is_square() {
            return ControlFlow::Continue(());
        }
        let v = CycleProduct::product(g, c).to_f64();
        if integer_distance(v) >= cfg.witness_tol {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            near_miss.get_or_insert_with(|| c.to_vec());
            ControlFlow::Continue(())
        }
    });
    report.cycles_checked += cov.cycles;
    report.complete_len = cov.complete_len;
    report.budget_exhausted = cov.exhausted;
    if let Some(c) = found {
        let len = c.len();
        witness(&mut report, c);
        report.note = format!("cycle of length {len} has a non-integral product");
        return report;
    }
    if let Some(c) = near_miss {
        report.note = format!(
            "cycle {c:?} has an irrational product within {:e} of an integer",
            cfg.witness_tol
        );
        return report;
    }
    if !cov.exhausted {
        report.verdict = Verdict::Arithmetic;
        report.coverage = Coverage::Exhaustive;
        report.note = format!("all cycles up to length {max_len} have integral products");
        return report;
    }

    // Budget exhausted: settle the whole cycle space.
    match coboundary_failure(&adj, label) {
        None => {
            report.verdict = Verdict::Arithmetic;
            report.coverage = Coverage::CycleSpace;
            report.note = format!(
                "enumeration complete up to length {}; squarefree parts form a coboundary, so every cycle is integral",
                cov.complete_len
            );
        }
        Some(c) => {
            let v = CycleProduct::product(g, &c).to_f64();
            if integer_distance(v) >= cfg.witness_tol {
                let len = c.len();
                witness(&mut report, c);
                report.note =
                    format!("fundamental cycle of length {len} has a non-integral product");
            } else {
                report.note = format!(
                    "cycle {c:?} has an irrational product within {:e} of an integer",
                    cfg.witness_tol
                );
            }
        }
    }
    report
}

/// Label a spanning forest so that every tree edge's squarefree part is the
/// sum of its endpoint labels; return the fundamental cycle of the first
/// non-tree edge breaking that rule.
fn coboundary_failure<'a>(
    adj: &[Vec<usize>],
    label: impl Fn(usize, usize) -> &'a Parity,
) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut node: Vec<Option<Parity>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if node[root].is_some() {
            continue;
        }
        node[root] = Some(Parity::default());
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if node[w].is_none() {
                    let mut l = node[u].clone().expect("labelled");
                    l.toggle(label(u, w));
                    node[w] = Some(l);
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    for u in 0..n {
        for &w in adj[u].iter().filter(|&&w| w > u) {
            let mut acc = node[u].clone().expect("labelled");
            acc.toggle(node[w].as_ref().expect("labelled"));
            acc.toggle(label(u, w));
            if !acc.is_square() {
                // Walk both ends up to their common ancestor.
                let (mut a, mut b) = (u, w);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return Some(left);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Gram matrix of the regular ideal octahedron: faces indexed by sign
    /// vectors `s` in `{+-1}^3`, product `(s.t - 1)/2`.
    fn octahedron() -> GramMatrix {
        let signs: Vec<[f64; 3]> = (0..8)
            .map(|m| std::array::from_fn(|k| if m & (1 << k) != 0 { -1.0 } else { 1.0 }))
            .collect();
        let entries = signs
            .iter()
            .map(|s| {
                signs
                    .iter()
                    .map(|t| (s[0] * t[0] + s[1] * t[1] + s[2] * t[2] - 1.0) / 2.0)
                    .collect()
            })
            .collect();
        GramMatrix::from_entries(entries).unwrap()
    }

    #[test]
    fn octahedron_triangles() {
        let g = octahedron();
        let cycles = cycle_products(&g, 3, u64::MAX).unwrap();
        assert!(!cycles.is_empty());
        for c in &cycles {
            assert_eq!(c.class, CycleClass::Integer);
            for t in 0..3 {
                assert_ne!(g.kind(c.cycle[t], c.cycle[(t + 1) % 3]), PairKind::Adjacent);
            }
        }
        // three tangent pairs: (-2)^3
        assert!(cycles.iter().all(|c| c.value == -8.0));
        assert!(cycle_products(&g, 2, u64::MAX).unwrap().is_empty());
    }

    #[test]
    fn octahedron_is_arithmetic() {
        let r = test_arithmetic_rightangled(&octahedron(), &ArithmeticConfig::default());
        assert_eq!(r.verdict, Verdict::Arithmetic);
        assert_eq!(r.coverage, Coverage::Exhaustive);
        assert_eq!(r.complete_len, 8);
    }

    #[test]
    fn budget_error_reports_progress() {
        let err = cycle_products(&octahedron(), 8, 50).unwrap_err();
        assert!(matches!(err, Error::Budget { budget: 50, .. }));
    }

    #[test]
    fn certificate_takes_over_when_budget_runs_out() {
        let cfg = ArithmeticConfig {
            budget: 20,
            ..ArithmeticConfig::default()
        };
        let r = test_arithmetic_rightangled(&octahedron(), &cfg);
        assert_eq!(r.verdict, Verdict::Arithmetic);
        assert_eq!(r.coverage, Coverage::CycleSpace);
        assert!(r.budget_exhausted);
    }

    fn triangle(a: f64, b: f64, c: f64) -> GramMatrix {
        // Four walls; wall 3 is orthogonal to the rest so the support is a triangle.
        GramMatrix::from_entries(vec![
            vec![1.0, a, b, 0.0],
            vec![a, 1.0, c, 0.0],
            vec![b, c, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn squared_entry_witness() {
        // (2 * 2/sqrt 3)^2 = 16/3
        let x = -2.0 / 3f64.sqrt();
        let g = triangle(x, -1.0, -1.0);
        let r = test_arithmetic_rightangled(&g, &ArithmeticConfig::default());
        assert_eq!(r.verdict, Verdict::Nonarithmetic);
        assert_eq!(r.witness_cycle, vec![0, 1]);
        assert_eq!(r.witness_class, Some(CycleClass::RationalNonInteger));
        assert!(r.recheck_witness(&g));
    }

    #[test]
    fn cycle_witness_with_integral_squares() {
        // squares 8, 4, 4: the triangle product is -sqrt(128), not an integer
        let s = 2f64.sqrt();
        let g = triangle(-s, -1.0, -1.0);
        let r = test_arithmetic_rightangled(&g, &ArithmeticConfig::default());
        assert_eq!(r.verdict, Verdict::Nonarithmetic);
        assert_eq!(r.witness_cycle, vec![0, 1, 2]);
        assert_eq!(r.witness_class, Some(CycleClass::IrrationalSuspect));
        assert!(r.recheck_witness(&g));
        let cfg = ArithmeticConfig {
            budget: 0,
            ..ArithmeticConfig::default()
        };
        let r = test_arithmetic_rightangled(&g, &cfg);
        assert_eq!(r.verdict, Verdict::Nonarithmetic);
        assert!(r.recheck_witness(&g));
    }

    #[test]
    fn tie_zone_abstains() {
        let g = triangle(-1.0 - 1e-8, -1.0, -1.0);
        let r = test_arithmetic_rightangled(&g, &ArithmeticConfig::default());
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(r.witness_cycle.is_empty());
    }
}
