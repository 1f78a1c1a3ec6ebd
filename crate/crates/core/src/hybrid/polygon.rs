//! Coxeter polygons with exact angles and their gluing along a side.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::CombinatorialPolytope;
use crate::error::{Error, Result};

/// An angle as an exact rational multiple of `pi`.
pub type Angle = Ratio<i64>;

/// `pi / m`.
pub fn pi_over(m: i64) -> Angle {
    Ratio::new(1, m)
}

/// Parse `0`, `pi`, `pi/m` or a bare fraction `p/q` meaning `p/q * pi`.
pub fn parse_angle(s: &str) -> Result<Angle> {
    let t = s.trim();
    let bad = || Error::domain(format!("cannot parse angle {s:?}; expected 0, pi/m or p/q"));
    if let Some(rest) = t.strip_prefix("pi").or_else(|| t.strip_prefix('π')) {
        if rest.is_empty() {
            return Ok(Angle::one());
        }
        let m: i64 = rest
            .strip_prefix('/')
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if m <= 0 {
            return Err(bad());
        }
        return Ok(pi_over(m));
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p, q))
        }
        None => Ok(Ratio::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Render as `0`, `pi` or `p*pi/q`.
pub fn format_angle(a: &Angle) -> String {
    match (*a.numer(), *a.denom()) {
        (0, _) => "0".into(),
        (1, 1) => "pi".into(),
        (1, q) => format!("pi/{q}"),
        (p, 1) => format!("{p}pi"),
        (p, q) => format!("{p}pi/{q}"),
    }
}

/// `pi/m` with `m >= 2`, or `0` at an ideal vertex.
fn is_coxeter(a: &Angle) -> bool {
    a.is_zero() || (*a.numer() == 1 && *a.denom() >= 2)
}

/// `pi/(2m)` with `m >= 1`.
pub fn is_even(a: &Angle) -> bool {
    *a.numer() == 1 && *a.denom() % 2 == 0
}

/// A hyperbolic polygon whose angles are `pi/m` or `0`, in cyclic order.
/// Side `i` joins vertex `i` to vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Angle>", into = "Vec<Angle>")]
pub struct CoxeterPolygon {
    angles: Vec<Angle>,
}

impl CoxeterPolygon {
    pub fn new(angles: Vec<Angle>) -> Result<Self> {
        let n = angles.len();
        if n < 3 {
            return Err(Error::domain(format!(
                "a polygon needs at least 3 vertices, got {n}"
            )));
        }
        if let Some((i, a)) = angles.iter().enumerate().find(|(_, a)| !is_coxeter(a)) {
            return Err(Error::domain(format!(
                "angle {} at vertex {i} is not of the form pi/m or 0",
                format_angle(a)
            )));
        }
        let p = CoxeterPolygon { angles };
        if p.area() <= Angle::zero() {
            return Err(Error::domain(format!(
                "angle sum {} is not below {}, so the polygon is not hyperbolic",
                format_angle(&p.angle_sum()),
                format_angle(&Ratio::from_integer(n as i64 - 2))
            )));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn angle_sum(&self) -> Angle {
        self.angles.iter().sum()
    }

    /// Area by Gauss-Bonnet, `(n - 2) pi - sum of angles`, as a multiple of `pi`.
    pub fn area(&self) -> Angle {
        Ratio::from_integer(self.len() as i64 - 2) - self.angle_sum()
    }
}

impl TryFrom<Vec<Angle>> for CoxeterPolygon {
    type Error = Error;
    fn try_from(angles: Vec<Angle>) -> Result<Self> {
        CoxeterPolygon::new(angles)
    }
}

impl From<CoxeterPolygon> for Vec<Angle> {
    fn from(p: CoxeterPolygon) -> Self {
        p.angles
    }
}

impl fmt::Display for CoxeterPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.angles.iter().map(format_angle).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma- or whitespace-separated angles, e.g. `pi/4,pi/8,pi/2,pi/2`.
impl FromStr for CoxeterPolygon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let angles = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_angle)
            .collect::<Result<Vec<_>>>()?;
        CoxeterPolygon::new(angles)
    }
}

/// One side of a gluing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Piece {
    /// A polygon glued along side `side`.
    Polygon {
        polygon: CoxeterPolygon,
        side: usize,
    },
    /// A right-angled polyhedron glued along face `face`.
    Polytope {
        polytope: CombinatorialPolytope,
        face: usize,
    },
}

impl Piece {
    /// Angles met walking along the interface in the piece's own
    /// orientation: the two side endpoints of a polygon, or the dihedral
    /// angles along the boundary of a face.
    fn interface_angles(&self) -> Result<Vec<Angle>> {
        match self {
            Piece::Polygon { polygon, side } => {
                let n = polygon.len();
                if *side >= n {
                    return Err(Error::domain(format!(
                        "side {side} out of range for a {n}-gon"
                    )));
                }
                Ok(vec![polygon.angles[*side], polygon.angles[(side + 1) % n]])
            }
            Piece::Polytope { polytope, face } => {
                if *face >= polytope.face_count() {
                    return Err(Error::domain(format!("face {face} out of range")));
                }
                Ok(vec![pi_over(2); polytope.face(*face).len()])
            }
        }
    }
}

/// Two pieces and the interface they share. The second piece is traversed
/// backwards along the interface, so that both angle lists are read in the
/// first piece's order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GluingSpec {
    pub first: Piece,
    pub second: Piece,
}

impl GluingSpec {
    pub fn polygons(p1: CoxeterPolygon, side1: usize, p2: CoxeterPolygon, side2: usize) -> Self {
        GluingSpec {
            first: Piece::Polygon {
                polygon: p1,
                side: side1,
            },
            second: Piece::Polygon {
                polygon: p2,
                side: side2,
            },
        }
    }

    /// Interface angle pairs in matched order.
    pub fn interface_angles(&self) -> Result<(Vec<Angle>, Vec<Angle>)> {
        let a = self.first.interface_angles()?;
        let mut b = self.second.interface_angles()?;
        b.reverse();
        if a.len() != b.len() {
            return Err(Error::domain(format!(
                "interfaces differ in length: {} against {}",
                a.len(),
                b.len()
            )));
        }
        Ok((a, b))
    }

    /// The angles the glued piece has at the interface endpoints, in the
    /// first piece's order.
    pub fn merged_angles(&self) -> Result<Vec<Angle>> {
        let (a, b) = self.interface_angles()?;
        Ok(a.iter().zip(&b).map(|(x, y)| x + y).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterfaceViolation {
    pub position: usize,
    pub first: Angle,
    pub second: Angle,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterfaceCheck {
    pub ok: bool,
    pub violations: Vec<InterfaceViolation>,
}

/// Every interface angle must be `pi/(2m)` on both sides, and the two
/// angles meeting at each position must be equal.
pub fn check_even_angle_interface(spec: &GluingSpec) -> Result<InterfaceCheck> {
    let (a, b) = spec.interface_angles()?;
    let mut violations = Vec::new();
    for (position, (x, y)) in a.iter().zip(&b).enumerate() {
        let reason = if !is_even(x) || !is_even(y) {
            Some(format!(
                "angles {} and {} must both be of the form pi/2m",
                format_angle(x),
                format_angle(y)
            ))
        } else if x != y {
            Some(format!(
                "angles {} and {} differ",
                format_angle(x),
                format_angle(y)
            ))
        } else {
            None
        };
        if let Some(reason) = reason {
            violations.push(InterfaceViolation {
                position,
                first: *x,
                second: *y,
                reason,
            });
        }
    }
    Ok(InterfaceCheck {
        ok: violations.is_empty(),
        violations,
    })
}

/// Glue two polygons along the interface of `spec`.
///
/// The result starts at the vertex where the first piece's side begins,
/// continues through the second piece, reaches the other merged vertex at
/// index `m - 1` (for an `m`-gon second piece) and returns through the first.
/// Two right angles merge into a straight angle, which is no vertex at all;
/// such points are dropped, shifting the later indices down.
pub fn glue_polygons(spec: &GluingSpec) -> Result<CoxeterPolygon> {
    let (
        Piece::Polygon {
            polygon: p1,
            side: s1,
        },
        Piece::Polygon {
            polygon: p2,
            side: s2,
        },
    ) = (&spec.first, &spec.second)
    else {
        return Err(Error::domain("polygon gluing needs two polygons"));
    };
    let check = check_even_angle_interface(spec)?;
    if let Some(v) = check.violations.first() {
        return Err(Error::domain(format!(
            "interface position {}: {}",
            v.position, v.reason
        )));
    }
    let (n1, n2) = (p1.len(), p2.len());
    let merged = spec.merged_angles()?;
    let mut angles = vec![merged[0]];
    angles.extend((2..n2).map(|i| p2.angles[(s2 + i) % n2]));
    angles.push(merged[1]);
    angles.extend((2..n1).map(|i| p1.angles[(s1 + i) % n1]));
    angles.retain(|a| !a.is_one());
    let glued = CoxeterPolygon::new(angles).expect("doubled even angles keep the Coxeter property");
    assert_eq!(
        glued.area(),
        p1.area() + p2.area(),
        "Gauss-Bonnet area must be additive"
    );
    Ok(glued)
}
