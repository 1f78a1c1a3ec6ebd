use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::CombinatorialPolytope;
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::realization::Realization;

/// Agreement required between a Gram entry and the value its combinatorial
/// relation prescribes.
pub const CLASSIFY_TOL: f64 = 1e-8;

/// How two walls sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    Diagonal,
    /// Orthogonal, entry 0.
    Adjacent,
    /// Meeting at an ideal point, entry -1.
    Tangent,
    /// Ultraparallel, entry below -1.
    Diverging,
}

impl PairKind {
    fn of_value(x: f64) -> Option<PairKind> {
        if x.abs() <= CLASSIFY_TOL {
            Some(PairKind::Adjacent)
        } else if (x + 1.0).abs() <= CLASSIFY_TOL {
            Some(PairKind::Tangent)
        } else if x < -1.0 {
            Some(PairKind::Diverging)
        } else {
            None
        }
    }
}

/// Pairwise Lorentzian products of the unit face normals.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramMatrix {
    entries: Vec<Vec<f64>>,
    kinds: Vec<Vec<PairKind>>,
    #[serde(skip)]
    precise: Vec<Vec<Dd>>,
}

impl GramMatrix {
    fn assemble(precise: Vec<Vec<Dd>>, kinds: Vec<Vec<PairKind>>) -> Self {
        let entries = precise
            .iter()
            .map(|row| row.iter().map(|x| x.to_f64()).collect())
            .collect();
        GramMatrix {
            entries,
            kinds,
            precise,
        }
    }

    /// A Gram matrix given by its entries, classified by value alone.
    pub fn from_entries(entries: Vec<Vec<f64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::domain("Gram matrix must be square"));
        }
        let mut kinds = vec![vec![PairKind::Diagonal; n]; n];
        for i in 0..n {
            if entries[i][i] != 1.0 {
                return Err(Error::domain(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Inconsistent(i, j, "matrix is not symmetric".into()));
                }
                if i != j {
                    kinds[i][j] = PairKind::of_value(entries[i][j]).ok_or_else(|| {
                        Error::Inconsistent(
                            i,
                            j,
                            format!(
                                "entry {} is not a right-angled wall relation",
                                entries[i][j]
                            ),
                        )
                    })?;
                }
            }
        }
        let precise = entries
            .iter()
            .map(|row| row.iter().map(|&x| Dd::from_f64(x)).collect())
            .collect();
        Ok(GramMatrix::assemble(precise, kinds))
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    /// The entry to about 30 digits (when the realization carried them).
    pub fn precise(&self, i: usize, j: usize) -> Dd {
        self.precise[i][j]
    }

    pub fn kind(&self, i: usize, j: usize) -> PairKind {
        self.kinds[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }

    /// Row-major CSV with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Apply a face permutation: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> GramMatrix {
        let pick = |i: usize, j: usize| (perm[i], perm[j]);
        let n = perm.len();
        let precise = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (a, b) = pick(i, j);
                        self.precise[a][b]
                    })
                    .collect()
            })
            .collect();
        let kinds = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (a, b) = pick(i, j);
                        self.kinds[a][b]
                    })
                    .collect()
            })
            .collect();
        GramMatrix::assemble(precise, kinds)
    }
}

/// The Gram matrix of a realization, checked against the combinatorics:
/// adjacent faces must give 0, faces opposite at a vertex -1 and all other
/// pairs less than -1.
pub fn gram(p: &CombinatorialPolytope, r: &Realization) -> Result<GramMatrix> {
    let n = p.face_count();
    if r.normals.len() != n {
        return Err(Error::domain(format!(
            "realization has {} normals for {n} faces",
            r.normals.len()
        )));
    }
    let unit: Vec<[Dd; 4]> = r
        .precise_normals()
        .into_iter()
        .map(|e| {
            let q = -(e[0] * e[0]) + e[1] * e[1] + e[2] * e[2] + e[3] * e[3];
            let s = q.sqrt();
            e.map(|x| x / s)
        })
        .collect();
    let dot = |a: &[Dd; 4], b: &[Dd; 4]| -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];

    let mut tangent = vec![vec![false; n]; n];
    for (_, f, g) in p.opposite_pairs() {
        tangent[f][g] = true;
        tangent[g][f] = true;
    }
    let mut precise = vec![vec![Dd::ONE; n]; n];
    let mut kinds = vec![vec![PairKind::Diagonal; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = dot(&unit[i], &unit[j]);
            let expected = if p.adjacent(i, j) {
                PairKind::Adjacent
            } else if tangent[i][j] {
                PairKind::Tangent
            } else {
                PairKind::Diverging
            };
            let got = PairKind::of_value(x.to_f64());
            if got != Some(expected)
                || (expected == PairKind::Diverging && x.to_f64() > -1.0 - CLASSIFY_TOL)
            {
                return Err(Error::Inconsistent(
                    i,
                    j,
                    format!(
                        "product {:.12} does not match {expected:?} faces",
                        x.to_f64()
                    ),
                ));
            }
            precise[i][j] = x;
            precise[j][i] = x;
            kinds[i][j] = expected;
            kinds[j][i] = expected;
        }
    }
    Ok(GramMatrix::assemble(precise, kinds))
}
