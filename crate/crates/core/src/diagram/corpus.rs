use thiserror::Error;

use super::eval::{check_equation, EquationOutcome, Extras};
use super::{parse_term, DiagramError, MorphismTerm};
use crate::algebra::FinAlgebra;

const BUILTIN: &str = include_str!("corpus.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCorpusEntry {
    pub name: String,
    pub lhs: MorphismTerm,
    pub rhs: MorphismTerm,
    pub anchor: String,
    /// True when either side mentions `kappa`, `delta` or `theta_inv`.
    pub requires_separable: bool,
}

impl EquationCorpusEntry {
    pub fn new(
        name: impl Into<String>,
        lhs: MorphismTerm,
        rhs: MorphismTerm,
        anchor: impl Into<String>,
    ) -> Result<Self, DiagramError> {
        if lhs.domain() != rhs.domain() {
            return Err(DiagramError::Type {
                position: 0,
                expected: lhs.domain().to_vec(),
                actual: rhs.domain().to_vec(),
            });
        }
        if lhs.codomain() != rhs.codomain() {
            return Err(DiagramError::Type {
                position: 0,
                expected: lhs.codomain().to_vec(),
                actual: rhs.codomain().to_vec(),
            });
        }
        let requires_separable = lhs.requires_separable() || rhs.requires_separable();
        Ok(EquationCorpusEntry {
            name: name.into(),
            lhs,
            rhs,
            anchor: anchor.into(),
            requires_separable,
        })
    }

    pub fn check(&self, a: &FinAlgebra, extras: &Extras) -> Result<EquationOutcome, DiagramError> {
        check_equation(&self.lhs, &self.rhs, a, extras)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

/// Parses `name : lhs == rhs  # anchor` lines. Blank lines and lines
/// starting with `#` are skipped; the anchor is optional.
pub fn parse_corpus(text: &str) -> Result<Vec<EquationCorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let err = |message: String| CorpusError {
            line: idx + 1,
            message,
        };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (body, anchor) = match trimmed.split_once('#') {
            Some((b, a)) => (b, a.trim()),
            None => (trimmed, ""),
        };
        let (name, equation) = body
            .split_once(':')
            .ok_or_else(|| err("expected `name : lhs == rhs`".into()))?;
        let (lhs, rhs) = equation
            .split_once("==")
            .ok_or_else(|| err("expected `==`".into()))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(err("empty equation name".into()));
        }
        let side = |s: &str, which: &str| {
            parse_term(s.trim()).map_err(|e| err(format!("{name} {which}: {e}")))
        };
        let entry = EquationCorpusEntry::new(name, side(lhs, "lhs")?, side(rhs, "rhs")?, anchor)
            .map_err(|e| err(format!("{name}: sides differ in type: {e}")))?;
        entries.push(entry);
    }
    Ok(entries)
}

/// The sixteen identities shipped with the library.
pub fn builtin_corpus() -> Vec<EquationCorpusEntry> {
    parse_corpus(BUILTIN).expect("builtin corpus parses")
}

/// Checks every entry, reporting `None` for entries skipped because they
/// need `κ`/`Δ` and the algebra is degenerate.
pub fn check_corpus(
    entries: &[EquationCorpusEntry],
    a: &FinAlgebra,
    extras: &Extras,
) -> Vec<(String, Result<Option<EquationOutcome>, DiagramError>)> {
    let separable = extras.kappa.is_some();
    entries
        .iter()
        .map(|e| {
            let outcome = if e.requires_separable && !separable {
                Ok(None)
            } else {
                e.check(a, extras).map(Some)
            };
            (e.name.clone(), outcome)
        })
        .collect()
}
