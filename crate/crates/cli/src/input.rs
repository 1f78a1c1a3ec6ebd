use std::io::Read;

use rapoly_core::{antiprism, twisted_antiprism, CombinatorialPolytope};

use crate::args::{Family, Input};
use crate::Failure;

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn polytope(input: &Input) -> Result<CombinatorialPolytope, Failure> {
    if let Some(family) = input.family {
        let n = input.n.expect("clap requires --n with --family");
        return Ok(match family {
            Family::Antiprism => antiprism(n)?,
            Family::Twist => {
                let k = input
                    .k
                    .ok_or_else(|| Failure::Usage("--family twist needs --k".into()))?;
                twisted_antiprism(n, k)?
            }
        });
    }
    let text = match (&input.path, input.stdin) {
        (Some(path), _) => read_file(path)?,
        (None, true) => read_stdin()?,
        (None, false) => {
            return Err(Failure::Usage(
                "no input: give a FILE, --stdin, or --family with --n".into(),
            ))
        }
    };
    Ok(text.parse()?)
}

/// `antiprism:N`, `twist:N:K`, or a path to a polytope file.
pub fn piece(spec: &str) -> Result<(String, CombinatorialPolytope), Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Failure::Usage(format!("bad number {s:?} in piece {spec:?}")))
    };
    match parts[..] {
        ["antiprism", n] => {
            let n = num(n)?;
            Ok((format!("A_{n}"), antiprism(n)?))
        }
        ["twist", n, k] => {
            let (n, k) = (num(n)?, num(k)?);
            Ok((format!("A_{{{n},{k}}}"), twisted_antiprism(n, k)?))
        }
        _ => {
            let path = std::path::Path::new(spec);
            Ok((spec.to_string(), read_file(path)?.parse()?))
        }
    }
}
