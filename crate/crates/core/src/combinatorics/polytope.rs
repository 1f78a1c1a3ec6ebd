use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected edge with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn touches(&self, other: &Edge) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Finite,
    Ideal,
}

/// A vertex together with its position in a right-angled realization:
/// valence 3 is finite, valence 4 is ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub vertex: usize,
    pub kind: VertexKind,
}

/// A combinatorial 3-polytope stored as oriented face cycles.
///
/// Faces are listed counter-clockwise as seen from outside, so every edge
/// `{u, v}` appears once as `u -> v` and once as `v -> u`. Everything else
/// (edges, vertex stars, face adjacency) is derived from the face list when
/// the polytope is constructed.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "FaceList", into = "FaceList")]
pub struct CombinatorialPolytope {
    faces: Vec<Vec<usize>>,
    vertex_count: usize,
    dart_face: HashMap<(usize, usize), usize>,
    edges: Vec<Edge>,
    edge_faces: HashMap<Edge, [usize; 2]>,
    vertex_faces: Vec<Vec<usize>>,
    face_neighbors: Vec<Vec<usize>>,
}

/// Serialized form: the vertex count and the oriented face cycles.
#[derive(Serialize, Deserialize)]
struct FaceList {
    vertices: usize,
    faces: Vec<Vec<usize>>,
}

impl TryFrom<FaceList> for CombinatorialPolytope {
    type Error = Error;
    fn try_from(f: FaceList) -> Result<Self> {
        CombinatorialPolytope::new(f.vertices, f.faces)
    }
}

impl From<CombinatorialPolytope> for FaceList {
    fn from(p: CombinatorialPolytope) -> Self {
        FaceList {
            vertices: p.vertex_count,
            faces: p.faces,
        }
    }
}

impl PartialEq for CombinatorialPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.faces == other.faces
    }
}

impl Eq for CombinatorialPolytope {}

impl CombinatorialPolytope {
    /// Build and validate a polytope from oriented face cycles over the
    /// vertex ids `0..vertex_count`.
    pub fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        if faces.len() < 4 {
            return Err(Error::domain(format!(
                "a 3-polytope needs at least 4 faces, got {}",
                faces.len()
            )));
        }
        let mut used = vec![false; vertex_count];
        let mut dart_face = HashMap::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::domain(format!(
                    "face {fi} has fewer than 3 vertices"
                )));
            }
            let distinct: BTreeSet<_> = face.iter().collect();
            if distinct.len() != face.len() {
                return Err(Error::domain(format!("face {fi} repeats a vertex")));
            }
            for (j, &v) in face.iter().enumerate() {
                if v >= vertex_count {
                    return Err(Error::domain(format!(
                        "face {fi} uses vertex {v} outside 0..{vertex_count}"
                    )));
                }
                used[v] = true;
                let w = face[(j + 1) % face.len()];
                if dart_face.insert((v, w), fi).is_some() {
                    return Err(Error::domain(format!(
                        "directed edge {v}->{w} occurs twice; faces are not consistently oriented"
                    )));
                }
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::domain(format!("vertex {v} lies on no face")));
        }

        let mut edge_faces = HashMap::new();
        for (&(u, v), &f) in &dart_face {
            let g = *dart_face
                .get(&(v, u))
                .ok_or_else(|| Error::domain(format!("edge {u}-{v} lies on only one face")))?;
            if f == g {
                return Err(Error::domain(format!(
                    "edge {u}-{v} is traversed twice by face {f}"
                )));
            }
            if u < v {
                edge_faces.insert(Edge::new(u, v), [f, g]);
            }
        }
        let mut edges: Vec<Edge> = edge_faces.keys().copied().collect();
        edges.sort();

        let face_neighbors: Vec<Vec<usize>> = faces
            .iter()
            .map(|face| {
                (0..face.len())
                    .map(|j| dart_face[&(face[(j + 1) % face.len()], face[j])])
                    .collect()
            })
            .collect();
        for (fi, nb) in face_neighbors.iter().enumerate() {
            let distinct: BTreeSet<_> = nb.iter().collect();
            if distinct.len() != nb.len() {
                return Err(Error::domain(format!(
                    "face {fi} shares more than one edge with a neighbor"
                )));
            }
        }

        // Vertex stars: walk around each vertex through the dart structure.
        let mut vertex_faces = vec![Vec::new(); vertex_count];
        let mut out_dart: Vec<Option<usize>> = vec![None; vertex_count];
        for &(u, w) in dart_face.keys() {
            out_dart[u] = Some(out_dart[u].map_or(w, |x: usize| x.min(w)));
        }
        let mut incidence = vec![0usize; vertex_count];
        for face in &faces {
            for &v in face {
                incidence[v] += 1;
            }
        }
        for v in 0..vertex_count {
            let first = out_dart[v].expect("every vertex has an outgoing dart");
            let mut w = first;
            loop {
                let f = dart_face[&(v, w)];
                vertex_faces[v].push(f);
                // In the face containing w -> v, the vertex after v opens the next dart.
                let g = dart_face[&(w, v)];
                let gf = &faces[g];
                let pos = gf
                    .iter()
                    .position(|&x| x == v)
                    .expect("dart endpoint on face");
                w = gf[(pos + 1) % gf.len()];
                if w == first || vertex_faces[v].len() > incidence[v] {
                    break;
                }
            }
            if vertex_faces[v].len() != incidence[v] {
                return Err(Error::domain(format!(
                    "the faces around vertex {v} do not form a single disk"
                )));
            }
            if incidence[v] < 3 {
                return Err(Error::domain(format!(
                    "vertex {v} has valence {}",
                    incidence[v]
                )));
            }
        }

        let p = CombinatorialPolytope {
            faces,
            vertex_count,
            dart_face,
            edges,
            edge_faces,
            vertex_faces,
            face_neighbors,
        };
        let euler = p.vertex_count as i64 - p.edges.len() as i64 + p.faces.len() as i64;
        if euler != 2 {
            return Err(Error::domain(format!(
                "Euler characteristic V - E + F = {euler}, expected 2"
            )));
        }
        if !p.is_three_connected() {
            return Err(Error::domain("edge graph is not 3-connected"));
        }
        Ok(p)
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edge_faces.contains_key(&e)
    }

    /// The two faces on either side of an edge.
    pub fn edge_faces(&self, e: Edge) -> Option<[usize; 2]> {
        self.edge_faces.get(&e).copied()
    }

    /// Face containing the directed edge `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_face.get(&(u, v)).copied()
    }

    /// Faces around `v`, in cyclic order.
    pub fn faces_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.vertex_faces[v].len()
    }

    /// `face_neighbors(f)[j]` is the face across the edge `face[j] -> face[j + 1]`.
    pub fn face_neighbors(&self, f: usize) -> &[usize] {
        &self.face_neighbors[f]
    }

    pub fn adjacent(&self, f: usize, g: usize) -> bool {
        self.face_neighbors[f].contains(&g)
    }

    /// The common edge of two adjacent faces.
    pub fn shared_edge(&self, f: usize, g: usize) -> Option<Edge> {
        let face = &self.faces[f];
        self.face_neighbors[f]
            .iter()
            .position(|&x| x == g)
            .map(|j| Edge::new(face[j], face[(j + 1) % face.len()]))
    }

    pub fn shared_vertices(&self, f: usize, g: usize) -> Vec<usize> {
        let other: BTreeSet<_> = self.faces[g].iter().copied().collect();
        self.faces[f]
            .iter()
            .copied()
            .filter(|v| other.contains(v))
            .collect()
    }

    pub fn faces_meet(&self, f: usize, g: usize) -> bool {
        self.faces[f].iter().any(|v| self.faces[g].contains(v))
    }

    pub fn vertex_classes(&self) -> Vec<VertexClass> {
        (0..self.vertex_count)
            .map(|v| VertexClass {
                vertex: v,
                kind: if self.valence(v) == 4 {
                    VertexKind::Ideal
                } else {
                    VertexKind::Finite
                },
            })
            .collect()
    }

    pub fn is_all_ideal(&self) -> bool {
        (0..self.vertex_count).all(|v| self.valence(v) == 4)
    }

    /// Pairs of faces that meet at a 4-valent vertex without sharing an
    /// edge, as `(vertex, f, g)` with `f < g`.
    pub fn opposite_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count {
            let star = &self.vertex_faces[v];
            if star.len() == 4 {
                for (a, b) in [(star[0], star[2]), (star[1], star[3])] {
                    out.push((v, a.min(b), a.max(b)));
                }
            }
        }
        out
    }

    /// Edge-graph adjacency lists, sorted.
    pub fn vertex_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The same polytope with every face cycle reversed (mirror image).
    pub fn mirrored(&self) -> CombinatorialPolytope {
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().rev().copied().collect())
            .collect();
        CombinatorialPolytope::new(self.vertex_count, faces).expect("mirror of a valid polytope")
    }

    /// Apply a vertex relabeling, a face reordering and a rotation of each
    /// face cycle. `face_order[i]` is the old index of new face `i`.
    pub fn relabeled(
        &self,
        vertex_perm: &[usize],
        face_order: &[usize],
        rotations: &[usize],
    ) -> Result<Self> {
        let faces = face_order
            .iter()
            .enumerate()
            .map(|(i, &old)| {
                let f = &self.faces[old];
                let r = rotations.get(i).copied().unwrap_or(0) % f.len();
                (0..f.len())
                    .map(|j| vertex_perm[f[(j + r) % f.len()]])
                    .collect()
            })
            .collect();
        CombinatorialPolytope::new(self.vertex_count, faces)
    }

    fn is_three_connected(&self) -> bool {
        let n = self.vertex_count;
        if n < 4 {
            return false;
        }
        let adj = self.vertex_neighbors();
        let connected_without = |x: usize, y: usize| {
            let start = (0..n).find(|&v| v != x && v != y).expect("n >= 4");
            let mut seen = vec![false; n];
            seen[x] = true;
            seen[y] = true;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut count = 1;
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            count == n - 2
        };
        (0..n).all(|x| (x + 1..n).all(|y| connected_without(x, y)))
    }
}
