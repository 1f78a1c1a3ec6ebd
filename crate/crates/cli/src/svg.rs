//! Static SVG drawings: a planar diagram of a polytope's edge graph and a
//! schematic of two glued Coxeter polygons.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rapoly_core::hybrid::{format_angle, CoxeterPolygon};
use rapoly_core::CombinatorialPolytope;

const SIZE: f64 = 500.0;

fn open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// Tutte embedding: the largest face is pinned to a circle and every other
/// vertex sits at the average of its neighbours.
pub fn tutte_layout(p: &CombinatorialPolytope) -> (usize, Vec<[f64; 2]>) {
    let outer = (0..p.face_count())
        .max_by_key(|&f| (p.face(f).len(), std::cmp::Reverse(f)))
        .expect("faces");
    let nbrs = p.vertex_neighbors();
    let n = p.vertex_count();
    let mut pos = vec![[0.0; 2]; n];
    let mut pinned = vec![false; n];
    let cycle = p.face(outer);
    let r = 0.42 * SIZE;
    for (i, &v) in cycle.iter().enumerate() {
        let a = PI / 2.0 - 2.0 * PI * i as f64 / cycle.len() as f64;
        pos[v] = [r * a.cos(), r * a.sin()];
        pinned[v] = true;
    }
    for _ in 0..20_000 {
        let mut delta: f64 = 0.0;
        for v in (0..n).filter(|&v| !pinned[v]) {
            let k = nbrs[v].len() as f64;
            let x = nbrs[v].iter().map(|&w| pos[w][0]).sum::<f64>() / k;
            let y = nbrs[v].iter().map(|&w| pos[w][1]).sum::<f64>() / k;
            delta = delta.max((x - pos[v][0]).abs() + (y - pos[v][1]).abs());
            pos[v] = [x, y];
        }
        if delta < 1e-9 {
            break;
        }
    }
    (outer, pos)
}

/// Vertices, edges and face numbers of `p`, with `title` as caption.
pub fn polytope(p: &CombinatorialPolytope, title: &str) -> String {
    let (outer, pos) = tutte_layout(p);
    let c = SIZE / 2.0;
    let at = |q: [f64; 2]| (c + q[0], c - q[1]);
    let mut out = String::new();
    open(&mut out, SIZE, SIZE + 30.0);
    let _ = writeln!(
        out,
        r#"<text x="10" y="{}" font-size="13">{title}</text>"#,
        SIZE + 20.0
    );
    for e in p.edges() {
        let (x1, y1) = at(pos[e.a]);
        let (x2, y2) = at(pos[e.b]);
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black"/>"#
        );
    }
    for f in 0..p.face_count() {
        let (x, y) = if f == outer {
            (12.0, 18.0)
        } else {
            let k = p.face(f).len() as f64;
            let sx = p.face(f).iter().map(|&v| pos[v][0]).sum::<f64>() / k;
            let sy = p.face(f).iter().map(|&v| pos[v][1]).sum::<f64>() / k;
            at([sx, sy])
        };
        let label = if f == outer {
            format!("outer face {f}")
        } else {
            format!("{f}")
        };
        let _ = writeln!(
            out,
            r##"<text x="{x:.2}" y="{y:.2}" fill="#1f5fa8" text-anchor="{}">{label}</text>"##,
            if f == outer { "start" } else { "middle" }
        );
    }
    for (v, q) in pos.iter().enumerate() {
        let (x, y) = at(*q);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" fill="#a82a1f">{v}</text>"##,
            x + 4.0,
            y - 4.0
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Vertices of a regular `n`-gon with unit side, placed so that side
/// `side` lies on the y axis and the polygon lies to the left (`dir = -1`)
/// or right (`dir = 1`) of it.
fn regular(n: usize, side: usize, dir: f64) -> Vec<[f64; 2]> {
    let half = PI / n as f64;
    let radius = 0.5 / half.sin();
    let apothem = radius * half.cos();
    let center = [dir * apothem, 0.0];
    // Counter-clockwise traversal crosses the shared side upwards on the
    // left piece and downwards on the right one.
    let start = [0.0, dir * 0.5];
    let a0 = (start[1] - center[1]).atan2(start[0] - center[0]);
    (0..n)
        .map(|i| {
            let j = (i + n - side) % n;
            let a = a0 + 2.0 * PI * j as f64 / n as f64;
            [center[0] + radius * a.cos(), center[1] + radius * a.sin()]
        })
        .collect()
}

/// Both polygons side by side along the shared side, every vertex marked
/// with its angle, and the glued polygon's angles in the caption.
pub fn gluing(
    p1: &CoxeterPolygon,
    s1: usize,
    p2: &CoxeterPolygon,
    s2: usize,
    glued: &CoxeterPolygon,
) -> String {
    let a = regular(p1.len(), s1, -1.0);
    let b = regular(p2.len(), s2, 1.0);
    let all: Vec<[f64; 2]> = a.iter().chain(&b).copied().collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for q in &all {
        for i in 0..2 {
            lo[i] = lo[i].min(q[i]);
            hi[i] = hi[i].max(q[i]);
        }
    }
    let scale = (SIZE - 80.0) / (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let height = (hi[1] - lo[1]) * scale + 110.0;
    let at = |q: [f64; 2]| (40.0 + (q[0] - lo[0]) * scale, 40.0 + (hi[1] - q[1]) * scale);
    let mut out = String::new();
    open(&mut out, SIZE, height);
    let mut draw = |pts: &[[f64; 2]], poly: &CoxeterPolygon, fill: &str| {
        let path: Vec<String> = pts
            .iter()
            .map(|&q| {
                let (x, y) = at(q);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{fill}" stroke="black"/>"#,
            path.join(" ")
        );
        let n = pts.len() as f64;
        let cx = pts.iter().map(|q| q[0]).sum::<f64>() / n;
        let cy = pts.iter().map(|q| q[1]).sum::<f64>() / n;
        for (i, q) in pts.iter().enumerate() {
            let inward = [q[0] + 0.22 * (cx - q[0]), q[1] + 0.22 * (cy - q[1])];
            let (x, y) = at(inward);
            let _ = writeln!(
                out,
                r#"<text x="{x:.2}" y="{y:.2}" text-anchor="middle">{}</text>"#,
                format_angle(&poly.angles()[i])
            );
        }
    };
    draw(&a, p1, "#e8eef8");
    draw(&b, p2, "#f8ece8");
    let (x1, y1) = at(a[s1]);
    let (x2, y2) = at(a[(s1 + 1) % a.len()]);
    let _ = writeln!(
        out,
        r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#c03030" stroke-width="2" stroke-dasharray="6 4"/>"##
    );
    let _ = writeln!(
        out,
        r#"<text x="10" y="{:.2}" font-size="13">glued: {} (area {} pi)</text>"#,
        height - 30.0,
        glued,
        glued.area()
    );
    let _ = writeln!(
        out,
        r#"<text x="10" y="{:.2}" font-size="13">pieces: area {} pi + {} pi</text>"#,
        height - 12.0,
        p1.area(),
        p2.area()
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tutte_pins_the_largest_face() {
        let p = rapoly_core::antiprism(5).unwrap();
        let (outer, pos) = tutte_layout(&p);
        assert_eq!(p.face(outer).len(), 5);
        let r = 0.42 * SIZE;
        for &v in p.face(outer) {
            assert!(((pos[v][0].hypot(pos[v][1])) - r).abs() < 1e-9);
        }
        for (v, q) in pos.iter().enumerate() {
            if !p.face(outer).contains(&v) {
                assert!(q[0].hypot(q[1]) < r);
            }
        }
    }

    #[test]
    fn shared_side_coincides() {
        let a = regular(4, 0, -1.0);
        let b = regular(3, 0, 1.0);
        let close = |p: [f64; 2], q: [f64; 2]| (p[0] - q[0]).abs() + (p[1] - q[1]).abs() < 1e-12;
        assert!(close(a[0], b[1]));
        assert!(close(a[1], b[0]));
    }
}
