use std::fmt::Write as _;

use num_rational::Ratio;
use serde::Serialize;

use rapoly_core::arithmetics::{field_fingerprint, test_arithmetic_rightangled, ArithmeticConfig};
use rapoly_core::combinatorics::{
    cube, glue_antiprisms, isomorphism, prism, pyramid, tetrahedron, triangular_prism,
};
use rapoly_core::hybrid::{
    check_even_angle_interface, classify_link, digest, format_angle, glue_polygons, hybrid_verdict,
    Angle, CoxeterPolygon, GluingSpec, InterfaceCheck, LinkDescriptor, Piece, PieceAnalysis,
};
use rapoly_core::invariants::volume_with_apex;
use rapoly_core::{
    antiprism, check_andreev, gram, realize_ideal_right_angled, twisted_antiprism, volume_ideal,
    CombinatorialPolytope, SolverConfig,
};

use crate::args::{Cli, Command, Format, HybridArgs, LinkFamilyArg, LinksAction, Shape, Table};
use crate::output::{self, json, polynomial, unsupported};
use crate::{input, svg, Failure, Outcome};

fn solver(cli: &Cli) -> Result<SolverConfig, Failure> {
    let cfg = SolverConfig {
        tolerance: cli.tol,
        seed: cli.seed,
        ..SolverConfig::default()
    };
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(cfg)
}

fn arith(cli: &Cli) -> ArithmeticConfig {
    ArithmeticConfig {
        max_len: cli.max_cycle_len,
        budget: cli.budget,
        ..ArithmeticConfig::default()
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Gen { shape } => {
            let (name, p) = match shape {
                Shape::Antiprism { n } => (format!("A_{n}"), antiprism(*n)?),
                Shape::Tetrahedron => ("tetrahedron".into(), tetrahedron()),
                Shape::Cube => ("cube".into(), cube()),
                Shape::TriangularPrism => ("triangular prism".into(), triangular_prism()),
                Shape::Prism { n } => (format!("{n}-prism"), prism(*n)?),
                Shape::Pyramid { n } => (format!("{n}-pyramid"), pyramid(*n)?),
            };
            emit_polytope(cli, "gen", &name, &p)
        }
        Command::Twist { n, k } => emit_polytope(
            cli,
            "twist",
            &format!("A_{{{n},{k}}}"),
            &twisted_antiprism(*n, *k)?,
        ),
        Command::Glue { k, m, check_iso } => glue(cli, *k, *m, *check_iso),
        Command::Andreev(i) => andreev(cli, &input::polytope(i)?),
        Command::Realize(i) => {
            let p = input::polytope(i)?;
            let r = realize_ideal_right_angled(&p, &solver(cli)?)?;
            match output::format(cli, Format::Text)? {
                Format::Text => Ok(Outcome::ok(r.to_text())),
                Format::Json => Ok(Outcome::ok(json(&r))),
                f => Err(unsupported("realize", f)),
            }
        }
        Command::Gram(i) => {
            let p = input::polytope(i)?;
            let g = gram(&p, &realize_ideal_right_angled(&p, &solver(cli)?)?)?;
            match output::format(cli, Format::Csv)? {
                Format::Csv => Ok(Outcome::ok(g.to_csv())),
                Format::Json => Ok(Outcome::ok(json(&g))),
                f => Err(unsupported("gram", f)),
            }
        }
        Command::Volume { input: i, apex } => {
            let p = input::polytope(i)?;
            let r = realize_ideal_right_angled(&p, &solver(cli)?)?;
            let v = match apex {
                Some(a) => volume_with_apex(&p, &r, *a)?,
                None => volume_ideal(&p, &r)?,
            };
            match output::format(cli, Format::Text)? {
                Format::Text => Ok(Outcome::ok(format!("{:.15}\n", v.total))),
                Format::Json => Ok(Outcome::ok(json(&v))),
                f => Err(unsupported("volume", f)),
            }
        }
        Command::Arith(i) => {
            let p = input::polytope(i)?;
            let g = gram(&p, &realize_ideal_right_angled(&p, &solver(cli)?)?)?;
            let report = test_arithmetic_rightangled(&g, &arith(cli));
            match output::format(cli, Format::Text)? {
                Format::Json => Ok(Outcome::ok(json(&report))),
                Format::Text => {
                    let mut out = format!("verdict: {}\n", word(report.verdict));
                    if let Some(v) = report.witness_value {
                        let _ = writeln!(out, "witness cycle: {:?}", report.witness_cycle);
                        let _ = writeln!(out, "witness value: {v:.12}");
                    }
                    let _ = writeln!(
                        out,
                        "coverage: {} (complete up to length {}, {} products checked{})",
                        word(report.coverage),
                        report.complete_len,
                        report.cycles_checked,
                        if report.budget_exhausted {
                            ", budget exhausted"
                        } else {
                            ""
                        }
                    );
                    let _ = writeln!(out, "note: {}", report.note);
                    Ok(Outcome::ok(out))
                }
                f => Err(unsupported("arith", f)),
            }
        }
        Command::Fingerprint(i) => {
            let p = input::polytope(i)?;
            let g = gram(&p, &realize_ideal_right_angled(&p, &solver(cli)?)?)?;
            let fp = field_fingerprint(&g, &arith(cli));
            match output::format(cli, Format::Text)? {
                Format::Json => Ok(Outcome::ok(json(&fp))),
                Format::Text => {
                    let mut out = String::new();
                    for p in &fp.polynomials {
                        let _ = writeln!(out, "{}", polynomial(p));
                    }
                    if !fp.complete {
                        let _ = writeln!(out, "# partial: {} values unresolved", fp.unresolved);
                    }
                    let _ = writeln!(out, "# {}", fp.note);
                    Ok(Outcome::ok(out))
                }
                f => Err(unsupported("fingerprint", f)),
            }
        }
        Command::Hybrid(h) => hybrid(cli, h),
        Command::Links {
            action: LinksAction::Classify { n, family },
        } => {
            let d = match family {
                LinkFamilyArg::C => LinkDescriptor::augmented(*n),
                LinkFamilyArg::D => LinkDescriptor::chain(*n),
            };
            let r = classify_link(&d, &solver(cli)?, &arith(cli))?;
            match output::format(cli, Format::Text)? {
                Format::Json => Ok(Outcome::ok(json(&r))),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "link: {}", r.link);
                    let _ = writeln!(out, "pieces: {} x {}", r.copies, r.piece);
                    let _ = writeln!(out, "volume: {:.12}", r.volume);
                    let _ = writeln!(out, "verdict: {}", word(r.verdict));
                    let _ = writeln!(out, "class label: {}", label(&r.class_label));
                    let _ = writeln!(out, "assumption: {}", r.assumption);
                    Ok(Outcome::ok(out))
                }
                f => Err(unsupported("links classify", f)),
            }
        }
        Command::Table { which } => table(cli, which),
    }
}

fn emit_polytope(
    cli: &Cli,
    command: &str,
    name: &str,
    p: &CombinatorialPolytope,
) -> Result<Outcome, Failure> {
    match output::format(cli, Format::Text)? {
        Format::Text => Ok(Outcome::ok(p.to_string())),
        Format::Json => Ok(Outcome::ok(json(p))),
        Format::Svg => Ok(Outcome::ok(svg::polytope(p, name))),
        f => Err(unsupported(command, f)),
    }
}

fn glue(cli: &Cli, k: usize, m: usize, check_iso: bool) -> Result<Outcome, Failure> {
    let p = glue_antiprisms(k, m)?;
    if !check_iso {
        return emit_polytope(cli, "glue", &format!("A_{k} + A_{m}"), &p);
    }
    #[derive(Serialize)]
    struct IsoReport {
        twisted: String,
        isomorphic: bool,
        face_map: Option<Vec<usize>>,
        reversing: Option<bool>,
    }
    let n = k + m - 2;
    let twisted = twisted_antiprism(n, k.min(m))?;
    let iso = isomorphism(&p, &twisted);
    let report = IsoReport {
        twisted: format!("A_{{{n},{}}}", k.min(m)),
        isomorphic: iso.is_some(),
        face_map: iso.as_ref().map(|i| i.face_map.clone()),
        reversing: iso.as_ref().map(|i| i.reversing),
    };
    match output::format(cli, Format::Text)? {
        Format::Json => Ok(Outcome::ok(json(&report))),
        Format::Text => Ok(Outcome::ok(format!(
            "glue(A_{k}, A_{m}) isomorphic to {}: {}\n",
            report.twisted, report.isomorphic
        ))),
        f => Err(unsupported("glue --check-iso", f)),
    }
}

fn andreev(cli: &Cli, p: &CombinatorialPolytope) -> Result<Outcome, Failure> {
    let v = check_andreev(p);
    let code = if v.ok { 0 } else { 2 };
    let text = match output::format(cli, Format::Text)? {
        Format::Json => json(&v),
        Format::Text => {
            if v.ok {
                "ok\n".to_string()
            } else {
                let mut out = String::new();
                for w in &v.violations {
                    let detail = serde_json::to_string(w).expect("violation serializes");
                    let _ = writeln!(out, "violation({}) {detail}", w.condition());
                }
                out
            }
        }
        f => return Err(unsupported("andreev", f)),
    };
    Ok(Outcome { text, code })
}

/// Short, stable name for a fingerprint.
fn label(fp: &rapoly_core::FieldFingerprint) -> String {
    let d = digest(&fp.polynomials);
    format!(
        "{}{}",
        &d[..12],
        if fp.complete { "" } else { " (partial)" }
    )
}

fn hybrid(cli: &Cli, h: &HybridArgs) -> Result<Outcome, Failure> {
    let pick = |v: &[usize], i: usize, default: usize| v.get(i).copied().unwrap_or(default);
    if !h.polygon.is_empty() {
        if h.polygon.len() != 2 {
            return Err(Failure::Usage("give exactly two --polygon values".into()));
        }
        let p1: CoxeterPolygon = h.polygon[0].parse()?;
        let p2: CoxeterPolygon = h.polygon[1].parse()?;
        let (s1, s2) = (pick(&h.side, 0, 0), pick(&h.side, 1, 0));
        let spec = GluingSpec::polygons(p1.clone(), s1, p2.clone(), s2);
        let check = check_even_angle_interface(&spec)?;
        #[derive(Serialize)]
        struct PolygonReport {
            interface: InterfaceCheck,
            merged_angles: Vec<String>,
            glued: Option<String>,
            area_first: Angle,
            area_second: Angle,
            area_glued: Option<Angle>,
            additive: Option<bool>,
        }
        let glued = if check.ok {
            Some(glue_polygons(&spec)?)
        } else {
            None
        };
        let report = PolygonReport {
            merged_angles: spec.merged_angles()?.iter().map(format_angle).collect(),
            glued: glued.as_ref().map(|g| g.to_string()),
            area_first: p1.area(),
            area_second: p2.area(),
            area_glued: glued.as_ref().map(|g| g.area()),
            additive: glued.as_ref().map(|g| g.area() == p1.area() + p2.area()),
            interface: check,
        };
        let code = if report.interface.ok { 0 } else { 2 };
        let text = match output::format(cli, Format::Text)? {
            Format::Json => json(&report),
            Format::Svg => match &glued {
                Some(g) => svg::gluing(&p1, s1, &p2, s2, g),
                None => {
                    return Err(Failure::Domain(
                        "interface check failed; nothing to draw".into(),
                    ))
                }
            },
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "interface: {}",
                    if report.interface.ok {
                        "ok"
                    } else {
                        "violation"
                    }
                );
                for v in &report.interface.violations {
                    let _ = writeln!(out, "  position {}: {}", v.position, v.reason);
                }
                let _ = writeln!(out, "merged angles: {}", report.merged_angles.join(", "));
                if let Some(g) = &glued {
                    let area = |a: Ratio<i64>| format!("{a} pi");
                    let _ = writeln!(out, "glued polygon: {g}");
                    let _ = writeln!(
                        out,
                        "area: {} + {} = {}",
                        area(p1.area()),
                        area(p2.area()),
                        area(g.area())
                    );
                }
                out
            }
            f => return Err(unsupported("hybrid", f)),
        };
        return Ok(Outcome { text, code });
    }

    if h.piece.len() != 2 {
        return Err(Failure::Usage(
            "give two --polygon or two --piece values".into(),
        ));
    }
    let (solver, arith) = (solver(cli)?, arith(cli));
    let (n1, p1) = input::piece(&h.piece[0])?;
    let (n2, p2) = input::piece(&h.piece[1])?;
    let a = PieceAnalysis::compute(&p1, &solver, &arith)?;
    let b = PieceAnalysis::compute(&p2, &solver, &arith)?;
    let spec = GluingSpec {
        first: Piece::Polytope {
            polytope: p1,
            face: pick(&h.face, 0, 2),
        },
        second: Piece::Polytope {
            polytope: p2,
            face: pick(&h.face, 1, 2),
        },
    };
    let interface = check_even_angle_interface(&spec)?;
    let report = hybrid_verdict(
        &a.arithmeticity,
        &b.arithmeticity,
        &a.fingerprint,
        &b.fingerprint,
        &interface,
    );
    match output::format(cli, Format::Json)? {
        Format::Json => Ok(Outcome::ok(json(&report))),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{n1}: {}", word(a.arithmeticity.verdict));
            let _ = writeln!(out, "{n2}: {}", word(b.arithmeticity.verdict));
            let _ = writeln!(
                out,
                "interface: {}",
                if interface.ok { "ok" } else { "violation" }
            );
            let _ = writeln!(out, "evidence: {}", word(report.evidence));
            let _ = writeln!(out, "verdict: {}", word(report.verdict));
            Ok(Outcome::ok(out))
        }
        f => Err(unsupported("hybrid", f)),
    }
}

/// The serialized name of a unit enum variant.
fn word<T: Serialize>(v: T) -> String {
    serde_json::to_value(v)
        .expect("enum")
        .as_str()
        .unwrap_or_default()
        .to_string()
}

fn table(cli: &Cli, which: &Table) -> Result<Outcome, Failure> {
    let (solver, arith) = (solver(cli)?, arith(cli));
    let (table, rows_json): (output::Table, serde_json::Value) = match which {
        Table::Theorem3 { max_n } => {
            #[derive(Serialize)]
            struct Row {
                n: usize,
                k: usize,
                isomorphic_to_glue: bool,
                volume: f64,
                volume_of_pieces: f64,
                arithmetic: bool,
                verdict: rapoly_core::Verdict,
                witness_cycle: Vec<usize>,
            }
            let mut volumes = std::collections::HashMap::new();
            let mut volume_of = |n: usize| -> Result<f64, Failure> {
                if let Some(v) = volumes.get(&n) {
                    return Ok(*v);
                }
                let p = antiprism(n)?;
                let v = volume_ideal(&p, &realize_ideal_right_angled(&p, &solver)?)?.total;
                volumes.insert(n, v);
                Ok(v)
            };
            let mut rows = Vec::new();
            for n in 4..=*max_n {
                for k in 3..=n / 2 + 1 {
                    let p = twisted_antiprism(n, k)?;
                    let glued = glue_antiprisms(k, n - k + 2)?;
                    let a = PieceAnalysis::compute(&p, &solver, &arith)?;
                    rows.push(Row {
                        n,
                        k,
                        isomorphic_to_glue: rapoly_core::is_isomorphic(&p, &glued),
                        volume: a.volume,
                        volume_of_pieces: volume_of(k)? + volume_of(n - k + 2)?,
                        arithmetic: a.arithmeticity.verdict == rapoly_core::Verdict::Arithmetic,
                        verdict: a.arithmeticity.verdict,
                        witness_cycle: a.arithmeticity.witness_cycle.clone(),
                    });
                }
            }
            let table = output::Table {
                header: vec![
                    "n",
                    "k",
                    "iso_glue",
                    "volume",
                    "vol_pieces",
                    "arithmetic",
                    "verdict",
                    "witness",
                ],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.k.to_string(),
                            r.isomorphic_to_glue.to_string(),
                            format!("{:.10}", r.volume),
                            format!("{:.10}", r.volume_of_pieces),
                            r.arithmetic.to_string(),
                            word(r.verdict),
                            cycle(&r.witness_cycle),
                        ]
                    })
                    .collect(),
            };
            (table, serde_json::to_value(&rows).expect("rows"))
        }
        Table::Theorem4 { max_n } => {
            let mut reports = Vec::new();
            for n in 2..=*max_n {
                reports.push(classify_link(
                    &LinkDescriptor::augmented(n),
                    &solver,
                    &arith,
                )?);
            }
            let table = output::Table {
                header: vec![
                    "n",
                    "link",
                    "piece",
                    "volume",
                    "arithmetic",
                    "verdict",
                    "class_label",
                ],
                rows: reports
                    .iter()
                    .map(|r| {
                        vec![
                            r.descriptor.n.to_string(),
                            r.link.clone(),
                            r.piece.clone(),
                            format!("{:.10}", r.volume),
                            (r.verdict == rapoly_core::Verdict::Arithmetic).to_string(),
                            word(r.verdict),
                            label(&r.class_label),
                        ]
                    })
                    .collect(),
            };
            (table, serde_json::to_value(&reports).expect("reports"))
        }
    };
    match output::format(cli, Format::Text)? {
        Format::Text => Ok(Outcome::ok(table.text())),
        Format::Csv => Ok(Outcome::ok(table.csv())),
        Format::Json => Ok(Outcome::ok(json(&rows_json))),
        f => Err(unsupported("table", f)),
    }
}

fn cycle(c: &[usize]) -> String {
    if c.is_empty() {
        "-".into()
    } else {
        c.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }
}
