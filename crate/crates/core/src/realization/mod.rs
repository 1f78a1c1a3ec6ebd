//! Ideal right-angled realizations in the hyperboloid model.
//!
//! A realization assigns to each face `f` a unit spacelike outward normal
//! `e_f`; the polyhedron is `{x : (x, e_f) <= 0 for all f}`. Adjacent faces
//! are orthogonal and the two pairs of faces opposite at an ideal vertex are
//! tangent, `(e_f, e_g) = -1`. The ray of an ideal vertex with faces
//! `f1, f2, f3, f4` in cyclic order is the lightlike vector `e_f1 + e_f3`.

mod pattern;
mod solve;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{check_andreev, CombinatorialPolytope};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::lorentz::{LorentzTransform, LorentzVector};

pub const HEADER: &str = "realization v1";

const MAX_RESTARTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tolerance: 1e-10,
            max_iterations: 200,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::domain("solver tolerance must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::domain("solver needs at least one iteration"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Realization {
    pub normals: Vec<LorentzVector>,
    /// Indexed by vertex id, normalized to `x0 = 1`.
    pub vertex_rays: Vec<LorentzVector>,
    /// Largest violation of the norm, angle, tangency and ray constraints.
    pub residual: f64,
    /// Normals to about 30 digits, when the solver produced them.
    #[serde(skip)]
    precise: Option<Vec<[Dd; 4]>>,
}

fn rays_from(p: &CombinatorialPolytope, normals: &[LorentzVector]) -> Vec<LorentzVector> {
    (0..p.vertex_count())
        .map(|v| {
            let star = p.faces_at_vertex(v);
            (normals[star[0]] + normals[star[2]]).projectivized()
        })
        .collect()
}

impl Realization {
    /// Wrap given normals of an all-ideal polytope, deriving the vertex rays.
    pub fn from_normals(p: &CombinatorialPolytope, normals: Vec<LorentzVector>) -> Result<Self> {
        if normals.len() != p.face_count() {
            return Err(Error::domain(format!(
                "expected {} normals, got {}",
                p.face_count(),
                normals.len()
            )));
        }
        if !p.is_all_ideal() {
            return Err(Error::domain(
                "realizations are only defined for all-ideal polytopes",
            ));
        }
        let vertex_rays = rays_from(p, &normals);
        let mut r = Realization {
            normals,
            vertex_rays,
            residual: 0.0,
            precise: None,
        };
        r.residual = validate_realization(p, &r)?.max();
        Ok(r)
    }

    /// Normals in double-double; falls back to the stored `f64` values.
    pub fn precise_normals(&self) -> Vec<[Dd; 4]> {
        match &self.precise {
            Some(p) => p.clone(),
            None => self.normals.iter().map(|e| e.0.map(Dd::from_f64)).collect(),
        }
    }

    /// Image under an isometry, computed in double-double arithmetic from
    /// the precise normals when present.
    pub fn transformed(&self, t: &LorentzTransform) -> Realization {
        let precise = self
            .precise
            .as_ref()
            .map(|p| p.iter().map(|e| t.apply_dd(e)).collect::<Vec<_>>());
        Realization {
            normals: match &precise {
                Some(p) => p
                    .iter()
                    .map(|e| LorentzVector(e.map(|x| x.to_f64())))
                    .collect(),
                None => self.normals.iter().map(|e| t.apply(e)).collect(),
            },
            vertex_rays: self
                .vertex_rays
                .iter()
                .map(|v| {
                    let w = t.apply_dd(&v.0.map(Dd::from));
                    LorentzVector(w.map(|x| (x / w[0]).to_f64()))
                })
                .collect(),
            residual: self.residual,
            precise,
        }
    }

    /// The `realization v1` text dump.
    pub fn to_text(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        let mut line = |tag: char, i: usize, v: &LorentzVector| {
            let _ = writeln!(
                out,
                "{tag} {i} {:.16e} {:.16e} {:.16e} {:.16e}",
                v[0], v[1], v[2], v[3]
            );
        };
        for (i, e) in self.normals.iter().enumerate() {
            line('f', i, e);
        }
        for (i, v) in self.vertex_rays.iter().enumerate() {
            line('v', i, v);
        }
        out
    }

    /// Read a `realization v1` dump for `p`, re-deriving the residual.
    pub fn parse(p: &CombinatorialPolytope, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        match lines.next() {
            Some((_, l)) if l.trim() == HEADER => {}
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected header {HEADER:?}"),
                })
            }
        }
        let mut normals = vec![None; p.face_count()];
        let mut rays = vec![None; p.vertex_count()];
        for (i, l) in lines {
            let bad = |m: &str| Error::Parse {
                line: i + 1,
                message: m.to_string(),
            };
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 6 {
                return Err(bad("expected `f|v id x0 x1 x2 x3`"));
            }
            let id: usize = toks[1].parse().map_err(|_| bad("bad id"))?;
            let mut x = [0.0; 4];
            for (k, t) in toks[2..].iter().enumerate() {
                x[k] = t.parse().map_err(|_| bad("bad coordinate"))?;
            }
            let slot = match toks[0] {
                "f" => normals.get_mut(id),
                "v" => rays.get_mut(id),
                _ => return Err(bad("line tag must be `f` or `v`")),
            }
            .ok_or_else(|| bad("id out of range"))?;
            *slot = Some(LorentzVector(x));
        }
        let normals: Option<Vec<_>> = normals.into_iter().collect();
        let rays: Option<Vec<_>> = rays.into_iter().collect();
        let (Some(normals), Some(vertex_rays)) = (normals, rays) else {
            return Err(Error::domain(
                "realization dump does not cover every face and vertex",
            ));
        };
        let mut r = Realization {
            normals,
            vertex_rays,
            residual: 0.0,
            precise: None,
        };
        r.residual = validate_realization(p, &r)?.max();
        Ok(r)
    }
}

/// Per-constraint maxima, recomputed from scratch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// `max |(e_f, e_f) - 1|`.
    pub norm: f64,
    /// `max |(e_f, e_g)|` over adjacent faces.
    pub adjacency: f64,
    /// `max |(e_f, e_g) + 1|` over faces opposite at an ideal vertex.
    pub tangency: f64,
    /// `max |(v, v)|` over vertex rays.
    pub ray_lightlike: f64,
    /// `max |(v, e_f)|` over faces through `v`.
    pub ray_incidence: f64,
    /// Whether every ray has `x0 > 0`.
    pub rays_future: bool,
    /// `max (v, e_f)` over faces not through `v`; negative for a convex
    /// polyhedron with the normals pointing outward.
    pub convexity: f64,
}

impl ValidationReport {
    /// The largest equality-constraint violation.
    pub fn max(&self) -> f64 {
        [
            self.norm,
            self.adjacency,
            self.tangency,
            self.ray_lightlike,
            self.ray_incidence,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Check `r` against the combinatorics of `p`, independently of the solver.
pub fn validate_realization(
    p: &CombinatorialPolytope,
    r: &Realization,
) -> Result<ValidationReport> {
    if r.normals.len() != p.face_count() || r.vertex_rays.len() != p.vertex_count() {
        return Err(Error::domain(format!(
            "realization has {} normals and {} rays, polytope has {} faces and {} vertices",
            r.normals.len(),
            r.vertex_rays.len(),
            p.face_count(),
            p.vertex_count()
        )));
    }
    let e = &r.normals;
    let mut rep = ValidationReport {
        norm: 0.0,
        adjacency: 0.0,
        tangency: 0.0,
        ray_lightlike: 0.0,
        ray_incidence: 0.0,
        rays_future: true,
        convexity: f64::NEG_INFINITY,
    };
    for x in e {
        rep.norm = rep.norm.max((x.norm_sq() - 1.0).abs());
    }
    for f in 0..p.face_count() {
        for g in f + 1..p.face_count() {
            let d = e[f].dot(&e[g]);
            if p.adjacent(f, g) {
                rep.adjacency = rep.adjacency.max(d.abs());
            }
        }
    }
    for v in 0..p.vertex_count() {
        let star = p.faces_at_vertex(v);
        if star.len() == 4 {
            rep.tangency = rep.tangency.max((e[star[0]].dot(&e[star[2]]) + 1.0).abs());
            rep.tangency = rep.tangency.max((e[star[1]].dot(&e[star[3]]) + 1.0).abs());
        }
        let ray = &r.vertex_rays[v];
        rep.rays_future &= ray[0] > 0.0;
        rep.ray_lightlike = rep.ray_lightlike.max(ray.norm_sq().abs());
        for f in 0..p.face_count() {
            let d = ray.dot(&e[f]);
            if star.contains(&f) {
                rep.ray_incidence = rep.ray_incidence.max(d.abs());
            } else {
                rep.convexity = rep.convexity.max(d);
            }
        }
    }
    Ok(rep)
}

/// Solve for the normals of an ideal right-angled realization of `p`.
///
/// The starting point is the orthogonal circle pattern of `p`; it is then
/// gauge fixed (one face normal at `(0, 0, 0, 1)`, an adjacent one at
/// `(0, 0, 1, 0)`, a chosen vertex ray with `x1 > 0`) and polished by
/// Gauss-Newton with minimum-norm steps, then by residual correction in
/// double-double. A non-convex outcome triggers a restart from another
/// ideal vertex with seeded jitter, up to five times.
pub fn realize_ideal_right_angled(
    p: &CombinatorialPolytope,
    cfg: &SolverConfig,
) -> Result<Realization> {
    cfg.validate()?;
    if !p.is_all_ideal() {
        return Err(Error::domain("every vertex must lie in exactly four faces"));
    }
    let verdict = check_andreev(p);
    if !verdict.ok {
        let conds: Vec<String> = verdict
            .violated_conditions()
            .iter()
            .map(|c| c.to_string())
            .collect();
        return Err(Error::domain(format!(
            "not realizable as a right-angled polyhedron: condition(s) {} fail",
            conds.join(", ")
        )));
    }

    let f0 = 0;
    let f1 = p.face_neighbors(f0)[0];
    let mut best_residual = f64::INFINITY;
    let mut iterations = 0;
    for attempt in 0..=MAX_RESTARTS {
        let apex = attempt % p.vertex_count();
        let mut start = match pattern::circle_pattern(p, apex) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let rays = rays_from(p, &start);
        if solve::convexity_margin(p, &start, &rays) >= 0.0
            && solve::inverted_margin(p, &start, &rays) > 0.0
        {
            for e in &mut start {
                *e = -*e;
            }
        }
        let gauged = solve::gauge(&start, &rays, f0, f1);
        let jitter =
            (attempt > 0).then(|| (cfg.seed.wrapping_add(attempt as u64), 1e-3 * attempt as f64));
        let solved = solve::newton(p, &gauged, f0, f1, cfg.max_iterations, jitter);
        iterations += solved.iterations;
        let normals: Vec<LorentzVector> =
            solved.normals.iter().map(|x| LorentzVector(*x)).collect();
        let vertex_rays = rays_from(p, &normals);
        let mut r = Realization {
            normals,
            vertex_rays,
            residual: solved.residual,
            precise: Some(solved.precise),
        };
        let report = validate_realization(p, &r)?;
        r.residual = report.max().max(solved.residual);
        best_residual = best_residual.min(r.residual);
        if r.residual <= cfg.tolerance && report.rays_future && report.convexity < 0.0 {
            return Ok(r);
        }
    }
    Err(Error::Solver {
        iterations,
        best_residual,
    })
}
