use serde::Serialize;

use crate::args::{Cli, Format};
use crate::Failure;

/// The requested format, or `default` when none was given. More than one
/// format flag is a usage error.
pub fn format(cli: &Cli, default: Format) -> Result<Format, Failure> {
    let flags = [
        (cli.json, Format::Json),
        (cli.csv, Format::Csv),
        (cli.text, Format::Text),
        (cli.svg, Format::Svg),
    ];
    let mut chosen: Vec<Format> = flags
        .iter()
        .filter(|(set, _)| *set)
        .map(|(_, f)| *f)
        .collect();
    chosen.extend(cli.format);
    match chosen[..] {
        [] => Ok(default),
        [f] => Ok(f),
        _ => Err(Failure::Usage("format flags are mutually exclusive".into())),
    }
}

/// Reject formats a command cannot produce.
pub fn unsupported(command: &str, f: Format) -> Failure {
    Failure::Usage(format!("`{command}` cannot produce {f:?} output").to_lowercase())
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

/// Render `p` (leading coefficient first) as `3x^2 - 16x + 1`.
pub fn polynomial(p: &[i64]) -> String {
    let d = p.len().saturating_sub(1);
    let mut out = String::new();
    for (i, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let power = d - i;
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.unsigned_abs();
        if a != 1 || power == 0 {
            out.push_str(&a.to_string());
        }
        match power {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{power}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A plain table: aligned text or CSV.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.header.clone());
        for r in &self.rows {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = self.header.join(",") + "\n";
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}
