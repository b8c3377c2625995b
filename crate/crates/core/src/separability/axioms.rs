use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, BilinearFormMatrix, FinAlgebra, TensorSquareElement};
use crate::scalars::{Matrix, MatrixError};

/// Outcome of one identity check. `witness` holds the first failing index
/// (a basis index, a matrix column, or an `(i, j)` pair).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn new(axiom: &str, witness: Option<Vec<usize>>) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            passed: witness.is_none(),
            witness,
        }
    }
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomReport(pub Vec<AxiomCheck>);

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.0.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.0.iter().find(|c| c.axiom == axiom)
    }

    pub fn passed(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.0.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.0.extend(other.0);
    }
}

/// Comultiplication and counit of the special symmetric Frobenius structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusStructure {
    /// `Δ: A → A⊗A` as a `d² × d` matrix.
    pub comultiplication: Matrix,
    /// `A → 1` as a `1 × d` row.
    pub counit: Matrix,
}

/// Smallest input basis index on which two maps disagree.
fn column_witness(lhs: &Matrix, rhs: &Matrix) -> Option<Vec<usize>> {
    if lhs.shape() != rhs.shape() {
        return Some(vec![0]);
    }
    (0..lhs.cols())
        .find(|&c| lhs.column_values(c) != rhs.column_values(c))
        .map(|c| vec![c])
}

fn row_witness(lhs: &Matrix, rhs: &Matrix) -> Option<Vec<usize>> {
    lhs.first_difference(rhs).map(|(row, _)| vec![row])
}

fn check_kappa_dim(a: &FinAlgebra, kappa: &TensorSquareElement) -> Result<(), AlgebraError> {
    if kappa.dim() != a.dim() || kappa.coeffs().spec() != a.spec() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            actual: kappa.dim(),
        });
    }
    Ok(())
}

/// `κ = Σ (T⁻¹)[i][j] e_i⊗e_j`, the image of the duality unit under `(t*)⁻¹ ⊗ 1`.
pub fn compute_kappa(
    a: &FinAlgebra,
    form: &BilinearFormMatrix,
) -> Result<TensorSquareElement, MatrixError> {
    if form.matrix().rows() != a.dim() {
        return Err(MatrixError::DimensionMismatch {
            op: "compute_kappa",
            left: (a.dim(), a.dim()),
            right: form.matrix().shape(),
        });
    }
    TensorSquareElement::new(form.dual_map().try_invert()?)
}

/// `(1⊗μ)∘(κ⊗1): A → A⊗A`.
fn right_action(a: &FinAlgebra, kappa: &TensorSquareElement) -> Matrix {
    let id = Matrix::identity(a.spec(), a.dim());
    let lift = kappa.as_column().kron(&id).expect("same spec");
    id.kron(&a.mult_matrix())
        .expect("same spec")
        .mul(&lift)
        .expect("d³ inner")
}

/// `(μ⊗1)∘(1⊗κ): A → A⊗A`.
fn left_action(a: &FinAlgebra, kappa: &TensorSquareElement) -> Matrix {
    let id = Matrix::identity(a.spec(), a.dim());
    let lift = id.kron(&kappa.as_column()).expect("same spec");
    a.mult_matrix()
        .kron(&id)
        .expect("same spec")
        .mul(&lift)
        .expect("d³ inner")
}

/// Checks κ1 `μ∘κ = u`, κ2 `(1⊗μ)(κ⊗1) = (μ⊗1)(1⊗κ)`, κ3 `κ = τ∘κ`, κ4 `μ∘τ∘κ = u`.
pub fn verify_kappa_axioms(
    a: &FinAlgebra,
    kappa: &TensorSquareElement,
) -> Result<AxiomReport, AlgebraError> {
    check_kappa_dim(a, kappa)?;
    let d = a.dim();
    let mu = a.mult_matrix();
    let unit = a.unit_matrix();
    let k = kappa.as_column();
    let swapped = Matrix::swap(a.spec(), d, d).mul(&k)?;

    let k1 = row_witness(&mu.mul(&k)?, &unit);
    let k2 = column_witness(&right_action(a, kappa), &left_action(a, kappa));
    let k3 = kappa.coeffs().first_asymmetry().map(|(i, j)| vec![i, j]);
    let k4 = row_witness(&mu.mul(&swapped)?, &unit);
    Ok(AxiomReport(vec![
        AxiomCheck::new("k1", k1),
        AxiomCheck::new("k2", k2),
        AxiomCheck::new("k3", k3),
        AxiomCheck::new("k4", k4),
    ]))
}

/// The section `σ(a) = (1⊗μ)(κ⊗a)` as a `d² × d` matrix.
pub fn sigma_from_kappa(
    a: &FinAlgebra,
    kappa: &TensorSquareElement,
) -> Result<Matrix, AlgebraError> {
    check_kappa_dim(a, kappa)?;
    Ok(right_action(a, kappa))
}

/// Checks σ1 `μ∘σ = id` and σ2 `(1⊗μ)(σ⊗1) = σ∘μ = (μ⊗1)(1⊗σ)`.
pub fn verify_section(a: &FinAlgebra, sigma: &Matrix) -> Result<AxiomReport, AlgebraError> {
    let d = a.dim();
    if sigma.shape() != (d * d, d) {
        return Err(AlgebraError::DimensionMismatch {
            expected: d * d,
            actual: sigma.rows(),
        });
    }
    let spec = a.spec();
    let id = Matrix::identity(spec, d);
    let mu = a.mult_matrix();
    let s1 = column_witness(&mu.mul(sigma)?, &id);
    let middle = sigma.mul(&mu)?;
    let right = id.kron(&mu)?.mul(&sigma.kron(&id)?)?;
    let left = mu.kron(&id)?.mul(&id.kron(sigma)?)?;
    let s2 = column_witness(&right, &middle).or_else(|| column_witness(&middle, &left));
    Ok(AxiomReport(vec![
        AxiomCheck::new("s1", s1),
        AxiomCheck::new("s2", s2),
    ]))
}

/// `Δ(a) = (μ⊗1)(a⊗κ)` with the trace map as counit.
pub fn frobenius_structure(
    a: &FinAlgebra,
    kappa: &TensorSquareElement,
) -> Result<FrobeniusStructure, AlgebraError> {
    check_kappa_dim(a, kappa)?;
    Ok(FrobeniusStructure {
        comultiplication: left_action(a, kappa),
        counit: a.trace_map(),
    })
}

/// Checks coassociativity, counitality, the Frobenius law, specialness
/// `μ∘Δ = id`, and symmetry of the form `counit∘μ`.
pub fn verify_frobenius(
    a: &FinAlgebra,
    frob: &FrobeniusStructure,
) -> Result<AxiomReport, AlgebraError> {
    let d = a.dim();
    let delta = &frob.comultiplication;
    let counit = &frob.counit;
    if delta.shape() != (d * d, d) || counit.shape() != (1, d) {
        return Err(AlgebraError::DimensionMismatch {
            expected: d,
            actual: delta.cols(),
        });
    }
    let spec = a.spec();
    let id = Matrix::identity(spec, d);
    let mu = a.mult_matrix();

    let coassoc = column_witness(&delta.kron(&id)?.mul(delta)?, &id.kron(delta)?.mul(delta)?);
    let counit_left = counit.kron(&id)?.mul(delta)?;
    let counit_right = id.kron(counit)?.mul(delta)?;
    let counital = column_witness(&counit_left, &id).or_else(|| column_witness(&counit_right, &id));
    let frob_left = id.kron(&mu)?.mul(&delta.kron(&id)?)?;
    let middle = delta.mul(&mu)?;
    let frob_right = mu.kron(&id)?.mul(&id.kron(delta)?)?;
    let frobenius_law =
        column_witness(&frob_left, &middle).or_else(|| column_witness(&middle, &frob_right));
    let special = column_witness(&mu.mul(delta)?, &id);
    let form = counit.mul(&mu)?;
    let symmetric_form = column_witness(&form, &form.mul(&Matrix::swap(spec, d, d))?);

    Ok(AxiomReport(vec![
        AxiomCheck::new("coassoc", coassoc),
        AxiomCheck::new("counital", counital),
        AxiomCheck::new("frobenius_law", frobenius_law),
        AxiomCheck::new("special", special),
        AxiomCheck::new("symmetric_form", symmetric_form),
    ]))
}

/// The two zig-zag identities `(1⊗t)(κ⊗1) = id = (t⊗1)(1⊗κ)` exhibiting
/// `t` and `κ` as a self-duality of `A`.
pub fn verify_self_duality(
    a: &FinAlgebra,
    form: &BilinearFormMatrix,
    kappa: &TensorSquareElement,
) -> Result<AxiomReport, AlgebraError> {
    check_kappa_dim(a, kappa)?;
    let id = Matrix::identity(a.spec(), a.dim());
    let t = form.as_row();
    let k = kappa.as_column();
    let first = id.kron(&t)?.mul(&k.kron(&id)?)?;
    let second = t.kron(&id)?.mul(&id.kron(&k)?)?;
    Ok(AxiomReport(vec![
        AxiomCheck::new("self_dual_1", column_witness(&first, &id)),
        AxiomCheck::new("self_dual_2", column_witness(&second, &id)),
    ]))
}
