use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AxiomReport, Degeneracy, SeparabilityReport, Verdict};
use crate::scalars::{Scalar, ScalarSpec};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid report: {0}")]
    Invalid(String),
}

/// JSON form of a [`SeparabilityReport`]. Field order is fixed.
///
/// `frobenius.comultiplication[a][i][j]` is the coefficient of `e_i⊗e_j`
/// in `Δ(e_a)`; `kappa[i][j]` is the coefficient of `e_i⊗e_j` in `κ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub algebra: String,
    pub scalars: ScalarSpec,
    pub dim: usize,
    pub is_commutative: bool,
    pub trace_form: Vec<Vec<String>>,
    pub diagnostic: DiagnosticDocument,
    pub verdict: Verdict,
    pub kappa: Option<Vec<Vec<String>>>,
    pub frobenius: Option<FrobeniusDocument>,
    pub axiom_results: AxiomReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticDocument {
    pub determinant: String,
    pub rank: usize,
    pub kernel_vector: Option<Vec<String>>,
    pub degeneracy: Option<Degeneracy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDocument {
    pub comultiplication: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl From<&SeparabilityReport> for ReportDocument {
    fn from(r: &SeparabilityReport) -> Self {
        let d = r.dim;
        ReportDocument {
            algebra: r.algebra.clone(),
            scalars: r.scalars,
            dim: d,
            is_commutative: r.is_commutative,
            trace_form: r.trace_form.matrix().to_string_rows(),
            diagnostic: DiagnosticDocument {
                determinant: r.diagnostic.determinant.to_string(),
                rank: r.diagnostic.rank,
                kernel_vector: r.diagnostic.kernel_vector.as_deref().map(strings),
                degeneracy: r.diagnostic.degeneracy,
            },
            verdict: r.verdict,
            kappa: r.kappa.as_ref().map(|k| k.coeffs().to_string_rows()),
            frobenius: r.frobenius.as_ref().map(|f| FrobeniusDocument {
                comultiplication: (0..d)
                    .map(|a| {
                        let col = f.comultiplication.column_values(a);
                        col.chunks(d).map(strings).collect()
                    })
                    .collect(),
                counit: strings(f.counit.entries()),
            }),
            axiom_results: r.axiom_results.clone(),
        }
    }
}

impl SeparabilityReport {
    pub fn to_document(&self) -> ReportDocument {
        ReportDocument::from(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("report serializes")
    }
}

impl ReportDocument {
    /// Parses a report and checks it against its schema.
    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let doc: ReportDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Shape, scalar and consistency checks: every scalar parses in the named
    /// ring, and `kappa`/`frobenius` are present exactly when the verdict is
    /// positive, in which case every recorded axiom passed.
    pub fn validate(&self) -> Result<(), ReportError> {
        let invalid = |m: String| Err(ReportError::Invalid(m));
        let d = self.dim;
        let spec = self.scalars;
        let parse_all = |cells: &mut dyn Iterator<Item = &String>| -> Result<(), ReportError> {
            for c in cells {
                spec.parse(c)
                    .map_err(|e| ReportError::Invalid(e.to_string()))?;
            }
            Ok(())
        };
        let square = |m: &Vec<Vec<String>>| m.len() == d && m.iter().all(|r| r.len() == d);

        if d == 0 {
            return invalid("dim must be positive".into());
        }
        if !square(&self.trace_form) {
            return invalid("trace_form must be dim x dim".into());
        }
        parse_all(&mut self.trace_form.iter().flatten())?;
        parse_all(&mut std::iter::once(&self.diagnostic.determinant))?;
        if let Some(v) = &self.diagnostic.kernel_vector {
            if v.len() != d {
                return invalid("kernel_vector must have length dim".into());
            }
            parse_all(&mut v.iter())?;
        }
        let positive = self.verdict == Verdict::StronglySeparable;
        if positive != self.kappa.is_some() || positive != self.frobenius.is_some() {
            return invalid("kappa and frobenius must be present iff strongly separable".into());
        }
        if positive != self.diagnostic.degeneracy.is_none() {
            return invalid("degeneracy must be absent iff strongly separable".into());
        }
        if let Some(k) = &self.kappa {
            if !square(k) {
                return invalid("kappa must be dim x dim".into());
            }
            parse_all(&mut k.iter().flatten())?;
        }
        if let Some(f) = &self.frobenius {
            if f.comultiplication.len() != d || !f.comultiplication.iter().all(square) {
                return invalid("comultiplication must be dim x dim x dim".into());
            }
            if f.counit.len() != d {
                return invalid("counit must have length dim".into());
            }
            parse_all(&mut f.comultiplication.iter().flatten().flatten())?;
            parse_all(&mut f.counit.iter())?;
        }
        if positive && !self.axiom_results.all_passed() {
            return invalid("strongly separable report with failing axioms".into());
        }
        Ok(())
    }
}
