//! Deciding strong separability through the trace form.
//!
//! A finite free algebra is strongly separable exactly when its trace form is
//! invertible over the base ring. In that case the symmetric separability
//! idempotent is `κ = T⁻¹` (read as a tensor), and `Δ(a) = (μ⊗1)(a⊗κ)` with
//! the trace map as counit is the unique special symmetric Frobenius
//! structure. [`decide_strong_separability`] builds all of it and re-checks
//! every axiom exactly.

mod axioms;
mod oracle;
mod report;

pub use axioms::{
    compute_kappa, frobenius_structure, sigma_from_kappa, verify_frobenius, verify_kappa_axioms,
    verify_section, verify_self_duality, AxiomCheck, AxiomReport, FrobeniusStructure,
};
pub use oracle::{kappa_solutions, oracle_sigma_exists, oracle_symmetric_kappa_unique, KappaAxiom};
pub use report::{ReportDocument, ReportError};

use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearFormMatrix, FinAlgebra, TensorSquareElement};
use crate::scalars::{MatrixError, Scalar, ScalarSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    StronglySeparable,
    Degenerate,
}

/// Why a trace form failed to be invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Degeneracy {
    /// `det T = 0`.
    Singular,
    /// Over ℤ: `det T ≠ 0` but not `±1`. Such an algebra becomes strongly
    /// separable once the primes dividing the determinant are inverted.
    NonUnitDeterminant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub determinant: Scalar,
    /// Rank of `T`, computed over the fraction field for ℤ.
    pub rank: usize,
    /// A nonzero vector `v` with `T v = 0` (integral and primitive over ℤ).
    pub kernel_vector: Option<Vec<Scalar>>,
    pub degeneracy: Option<Degeneracy>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityReport {
    pub algebra: String,
    pub scalars: ScalarSpec,
    pub dim: usize,
    pub is_commutative: bool,
    pub trace_form: BilinearFormMatrix,
    pub diagnostic: Diagnostic,
    pub verdict: Verdict,
    pub kappa: Option<TensorSquareElement>,
    pub frobenius: Option<FrobeniusStructure>,
    pub axiom_results: AxiomReport,
}

impl SeparabilityReport {
    pub fn is_strongly_separable(&self) -> bool {
        self.verdict == Verdict::StronglySeparable
    }
}

fn diagnose(form: &BilinearFormMatrix) -> Result<Diagnostic, MatrixError> {
    let t = form.matrix();
    let determinant = t.determinant()?;
    let over_field = if t.spec().is_field() {
        t.clone()
    } else {
        t.change_spec(ScalarSpec::Rationals)
    };
    let kernel = over_field.kernel()?;
    let rank = t.cols() - kernel.len();
    let kernel_vector = kernel.into_iter().next().map(|v| {
        if t.spec().is_field() {
            v
        } else {
            primitive_integer_vector(&v)
        }
    });
    let degeneracy = if determinant.is_zero() {
        Some(Degeneracy::Singular)
    } else if !determinant.is_unit() {
        Some(Degeneracy::NonUnitDeterminant)
    } else {
        None
    };
    Ok(Diagnostic {
        determinant,
        rank,
        kernel_vector,
        degeneracy,
    })
}

fn primitive_integer_vector(v: &[Scalar]) -> Vec<Scalar> {
    use num_integer::Integer;
    use num_traits::{One, Zero};

    let rationals: Vec<_> = v.iter().map(Scalar::to_rational).collect();
    let lcm = rationals
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<_> = rationals
        .iter()
        .map(|q| (q * num_rational::BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, n| acc.gcd(n));
    let z = ScalarSpec::Integers;
    ints.into_iter()
        .map(|n| z.from_bigint(if gcd.is_zero() { n } else { n / &gcd }))
        .collect()
}

/// Computes the trace form, decides invertibility over the base ring, and on
/// success constructs and verifies `κ`, the section `σ`, and the Frobenius
/// structure.
pub fn decide_strong_separability(a: &FinAlgebra) -> SeparabilityReport {
    let trace_form = a.trace_form();
    let diagnostic = diagnose(&trace_form).expect("trace form is square");
    let kappa = compute_kappa(a, &trace_form).ok();

    let mut axiom_results = AxiomReport::default();
    let frobenius = kappa.as_ref().map(|k| {
        let mut checks = || -> Result<FrobeniusStructure, crate::algebra::AlgebraError> {
            axiom_results.extend(verify_kappa_axioms(a, k)?);
            axiom_results.extend(verify_section(a, &sigma_from_kappa(a, k)?)?);
            let frob = frobenius_structure(a, k)?;
            axiom_results.extend(verify_frobenius(a, &frob)?);
            axiom_results.extend(verify_self_duality(a, &trace_form, k)?);
            Ok(frob)
        };
        checks().expect("κ built from this algebra has matching dimensions")
    });

    SeparabilityReport {
        algebra: a.name().to_string(),
        scalars: a.spec(),
        dim: a.dim(),
        is_commutative: a.is_commutative(),
        verdict: if kappa.is_some() {
            Verdict::StronglySeparable
        } else {
            Verdict::Degenerate
        },
        trace_form,
        diagnostic,
        kappa,
        frobenius,
        axiom_results,
    }
}
