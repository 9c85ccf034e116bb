//! The shared configuration text format.
//!
//! ```text
//! beta 1/2          (or: beta ~0.4142 for float-approx mode)
//! 0 0 A
//! 1 0 B
//! ```
//!
//! One point per line as `<x> <y> <A|B>`, whitespace-separated. Blank lines
//! and `#` comments are ignored; duplicate coordinates are a parse error.

use std::fmt;
use std::fmt::Write as _;

use bubblegrid_core::beta::{Beta, BetaError};
use bubblegrid_core::lattice::{Configuration, LatticePoint, Phase};

/// A parsed configuration file: the `beta` header plus the point set.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigFile {
    pub beta: Beta,
    pub config: Configuration,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParseError {
    MissingBetaLine,
    BadBeta { line: usize, reason: String },
    BadPointLine { line: usize },
    BadPhase { line: usize },
    DuplicatePoint { line: usize, x: i64, y: i64 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingBetaLine => {
                write!(f, "first line must be `beta <p>/<q>` or `beta ~<decimal>`")
            }
            ParseError::BadBeta { line, reason } => write!(f, "line {line}: bad beta ({reason})"),
            ParseError::BadPointLine { line } => {
                write!(f, "line {line}: expected `<x> <y> <A|B>`")
            }
            ParseError::BadPhase { line } => write!(f, "line {line}: phase must be A or B"),
            ParseError::DuplicatePoint { line, x, y } => {
                write!(f, "line {line}: duplicate point ({x}, {y})")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// What went wrong with a `beta` specification: unreadable syntax, or a
/// well-formed value violating `0 < beta < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaSpecError {
    Syntax,
    Invalid(BetaError),
}

impl fmt::Display for BetaSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaSpecError::Syntax => write!(f, "expected `<p>/<q>` or `~<decimal>`"),
            BetaSpecError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

/// Parse `1/2` or `~0.4142` (the value part of a `beta` line or flag).
pub fn parse_beta(spec: &str) -> Result<Beta, BetaSpecError> {
    let spec = spec.trim();
    if let Some(v) = spec.strip_prefix('~') {
        let v: f64 = v.trim().parse().map_err(|_| BetaSpecError::Syntax)?;
        return Beta::approx(v).map_err(BetaSpecError::Invalid);
    }
    let (p, q) = spec.split_once('/').ok_or(BetaSpecError::Syntax)?;
    let p: i64 = p.trim().parse().map_err(|_| BetaSpecError::Syntax)?;
    let q: i64 = q.trim().parse().map_err(|_| BetaSpecError::Syntax)?;
    Beta::exact(p, q).map_err(BetaSpecError::Invalid)
}

pub fn parse_config(text: &str) -> Result<ConfigFile, ParseError> {
    let mut beta: Option<Beta> = None;
    let mut points: Vec<(usize, LatticePoint, Phase)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if beta.is_none() {
            let spec = line
                .strip_prefix("beta")
                .map(str::trim)
                .ok_or(ParseError::MissingBetaLine)?;
            let b = parse_beta(spec)
                .map_err(|e| ParseError::BadBeta { line: line_no, reason: e.to_string() })?;
            beta = Some(b);
            continue;
        }
        let mut it = line.split_whitespace();
        let x: i64 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadPointLine { line: line_no })?;
        let y: i64 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadPointLine { line: line_no })?;
        let phase = match it.next() {
            Some("A") => Phase::A,
            Some("B") => Phase::B,
            Some(_) => return Err(ParseError::BadPhase { line: line_no }),
            None => return Err(ParseError::BadPointLine { line: line_no }),
        };
        if it.next().is_some() {
            return Err(ParseError::BadPointLine { line: line_no });
        }
        points.push((line_no, LatticePoint::new(x, y), phase));
    }
    let beta = beta.ok_or(ParseError::MissingBetaLine)?;
    let mut config_points = Vec::with_capacity(points.len());
    for (i, &(line, p, ph)) in points.iter().enumerate() {
        if points[..i].iter().any(|&(_, q, _)| q == p) {
            return Err(ParseError::DuplicatePoint { line, x: p.x, y: p.y });
        }
        config_points.push((p, ph));
    }
    let config = Configuration::from_points(config_points).expect("duplicates checked above");
    Ok(ConfigFile { beta, config })
}

/// Serialize in the shared text format; points come out sorted by `(x, y)`,
/// so output is deterministic and `parse(write(f)) == f`.
pub fn write_config(file: &ConfigFile) -> String {
    let mut out = String::new();
    writeln!(out, "beta {}", file.beta).unwrap();
    for (p, ph) in file.config.iter() {
        writeln!(out, "{} {} {}", p.x, p.y, ph).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let text = "# a comment\n\nbeta 1/2\n0 0 A  # trailing\n1 0 B\n";
        let f = parse_config(text).unwrap();
        assert_eq!(f.beta, Beta::half());
        assert_eq!(f.config.n_a(), 1);
        assert_eq!(f.config.n_b(), 1);
    }

    #[test]
    fn rejects_duplicates_and_garbage() {
        assert!(matches!(
            parse_config("beta 1/2\n0 0 A\n0 0 B\n"),
            Err(ParseError::DuplicatePoint { line: 3, .. })
        ));
        assert!(matches!(parse_config("0 0 A\n"), Err(ParseError::MissingBetaLine)));
        assert!(matches!(
            parse_config("beta 1/2\n0 0 C\n"),
            Err(ParseError::BadPhase { line: 2 })
        ));
        assert!(matches!(
            parse_config("beta 7/2\n"),
            Err(ParseError::BadBeta { line: 1, .. })
        ));
    }

    #[test]
    fn float_mode_round_trips() {
        let f = parse_config("beta ~0.4142135623730951\n2 -3 B\n").unwrap();
        assert!(!f.beta.is_exact());
        let again = parse_config(&write_config(&f)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn round_trip_exact() {
        let f = parse_config("beta 2/5\n0 0 A\n1 0 B\n-3 7 A\n").unwrap();
        assert_eq!(parse_config(&write_config(&f)).unwrap(), f);
    }
}
