//! The `polytope v1` text format: a header line, a `V F` line, then one
//! line per face listing its vertex cycle.

use std::fmt;
use std::str::FromStr;

use super::polytope::CombinatorialPolytope;
use crate::error::{Error, Result};

pub const HEADER: &str = "polytope v1";

impl fmt::Display for CombinatorialPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "{} {}", self.vertex_count(), self.face_count())?;
        for face in self.faces() {
            let line: Vec<String> = face.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("expected a vertex id, found {tok:?}")))
        })
        .collect()
}

/// Parse a polytope file. Blank lines and trailing whitespace are ignored.
pub fn parse_polytope(text: &str) -> Result<CombinatorialPolytope> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => {
            return Err(parse_err(
                n,
                format!("expected header {HEADER:?}, found {other:?}"),
            ))
        }
        None => return Err(parse_err(1, "empty input")),
    }
    let (n, counts) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing `V F` line"))?;
    let counts = numbers(n, counts)?;
    let [v, f] = counts[..] else {
        return Err(parse_err(n, "expected two counts `V F`"));
    };
    let mut faces = Vec::with_capacity(f);
    let mut last = n;
    for (n, line) in lines {
        if faces.len() == f {
            return Err(parse_err(n, format!("more than the declared {f} faces")));
        }
        faces.push(numbers(n, line)?);
        last = n;
    }
    if faces.len() != f {
        return Err(parse_err(
            last + 1,
            format!("declared {f} faces, found {}", faces.len()),
        ));
    }
    CombinatorialPolytope::new(v, faces)
}

impl FromStr for CombinatorialPolytope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polytope(s)
    }
}
