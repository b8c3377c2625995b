//! Finite-dimensional unital algebras presented by structure constants.
//!
//! Conventions fixed crate-wide:
//! - `c[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`;
//! - the tensor square `A⊗A` uses the row-major basis `e_i⊗e_j ↦ i·d + j`,
//!   and longer tensor powers extend this the same way.

mod catalog;
mod constructors;
mod json;

pub use catalog::{standard_catalog, CatalogEntry};
pub use constructors::{
    cyclic_group_algebra, cyclic_table, dual_numbers, make_group_algebra, make_matrix_algebra,
    polynomial_quotient, product_algebra, upper_triangular_algebra,
};
pub use json::{load_algebra, AlgebraDocument};

use thiserror::Error;

use crate::scalars::{Matrix, MatrixError, Scalar, ScalarSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cannot read: {0}")]
    Io(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("not associative: (e{i} e{j}) e{k} != e{i} (e{j} e{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector is not a two-sided unit (fails on e{j})")]
    NotUnital { j: usize },
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A finite-dimensional unital associative algebra, free on `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    name: String,
    spec: ScalarSpec,
    basis: Vec<String>,
    /// Flat `d³` array indexed `(i·d + j)·d + k`.
    structure: Vec<Scalar>,
    unit: Vec<Scalar>,
}

impl FinAlgebra {
    /// Validates associativity and unitality exhaustively before returning.
    pub fn new(
        name: impl Into<String>,
        spec: ScalarSpec,
        basis: Vec<String>,
        structure: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let d = basis.len();
        if d == 0 {
            return Err(AlgebraError::Schema("dimension must be at least 1".into()));
        }
        if structure.len() != d * d * d {
            return Err(AlgebraError::Schema(format!(
                "structure has {} constants, expected {}",
                structure.len(),
                d * d * d
            )));
        }
        if unit.len() != d {
            return Err(AlgebraError::DimensionMismatch {
                expected: d,
                actual: unit.len(),
            });
        }
        if let Some(bad) = structure.iter().chain(&unit).find(|s| s.spec() != spec) {
            return Err(MatrixError::ScalarSpecMismatch {
                left: spec,
                right: bad.spec(),
            }
            .into());
        }
        let algebra = FinAlgebra {
            name: name.into(),
            spec,
            basis,
            structure,
            unit,
        };
        if let Some((i, j, k)) = algebra.associativity_witness() {
            return Err(AlgebraError::NotAssociative { i, j, k });
        }
        if let Some(j) = algebra.unitality_witness() {
            return Err(AlgebraError::NotUnital { j });
        }
        Ok(algebra)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn spec(&self) -> ScalarSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coefficient of `e_k` in `e_i · e_j`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let d = self.dim();
        &self.structure[(i * d + j) * d + k]
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim())
            .map(|k| {
                if k == i {
                    self.spec.one()
                } else {
                    self.spec.zero()
                }
            })
            .collect()
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut left = self.spec.zero();
                        let mut right = self.spec.zero();
                        for m in 0..d {
                            left = &left + &(self.c(i, j, m) * self.c(m, k, l));
                            right = &right + &(self.c(j, k, m) * self.c(i, m, l));
                        }
                        if left != right {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    fn unitality_witness(&self) -> Option<usize> {
        (0..self.dim()).find(|&j| {
            let e = self.basis_vector(j);
            self.mul_vectors(&self.unit, &e) != e || self.mul_vectors(&e, &self.unit) != e
        })
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                actual: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|s| s.spec() != self.spec) {
            return Err(MatrixError::ScalarSpecMismatch {
                left: self.spec,
                right: bad.spec(),
            }
            .into());
        }
        Ok(())
    }

    fn mul_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.spec.zero(); d];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let ab = ai * bj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// `(a·b)_k = Σ a_i b_j c[i][j][k]`.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul_vectors(a, b))
    }

    /// Matrix of `x ↦ a·x` in the basis: `L[k][j] = Σ_i a_i c[i][j][k]`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Result<Matrix, AlgebraError> {
        self.check_len(a)?;
        let d = self.dim();
        Ok(Matrix::from_fn(self.spec, d, d, |k, j| {
            a.iter().enumerate().fold(self.spec.zero(), |acc, (i, ai)| {
                &acc + &(ai * self.c(i, j, k))
            })
        }))
    }

    /// The trace functional `a ↦ Tr(L_a)` as a `1 × d` row: `tr(e_i) = Σ_j c[i][j][j]`.
    pub fn trace_map(&self) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(self.spec, 1, d, |_, i| {
            (0..d).fold(self.spec.zero(), |acc, j| &acc + self.c(i, j, j))
        })
    }

    /// Gram matrix of `t(a, b) = tr(a·b)`.
    pub fn trace_form(&self) -> BilinearFormMatrix {
        let d = self.dim();
        let tr = self.trace_map();
        let entries = Matrix::from_fn(self.spec, d, d, |i, j| {
            (0..d).fold(self.spec.zero(), |acc, k| {
                &acc + &(self.c(i, j, k) * tr.get(0, k))
            })
        });
        BilinearFormMatrix { entries }
    }

    /// Multiplication `μ: A⊗A → A` as a `d × d²` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(self.spec, d, d * d, |k, ij| {
            self.c(ij / d, ij % d, k).clone()
        })
    }

    /// Unit `u: 1 → A` as a `d × 1` column.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column(self.spec, self.unit.clone()).expect("unit has length d")
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.c(i, j, k) == self.c(j, i, k))))
    }
}

/// An element `Σ coeffs[i][j] e_i⊗e_j` of `A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquareElement {
    coeffs: Matrix,
}

impl TensorSquareElement {
    pub fn new(coeffs: Matrix) -> Result<Self, MatrixError> {
        if !coeffs.is_square() {
            return Err(MatrixError::NonSquare {
                rows: coeffs.rows(),
                cols: coeffs.cols(),
            });
        }
        Ok(TensorSquareElement { coeffs })
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    /// As a morphism `1 → A⊗A`: the `d² × 1` column in row-major order.
    pub fn as_column(&self) -> Matrix {
        let d = self.dim();
        self.coeffs.reshape(d * d, 1).expect("d² entries")
    }

    pub fn from_column(column: &Matrix, d: usize) -> Result<Self, MatrixError> {
        Self::new(column.reshape(d, d)?)
    }
}

/// Gram matrix `T[i][j] = form(e_i, e_j)` of a bilinear form on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormMatrix {
    entries: Matrix,
}

impl BilinearFormMatrix {
    pub fn new(entries: Matrix) -> Result<Self, MatrixError> {
        if !entries.is_square() {
            return Err(MatrixError::NonSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        Ok(BilinearFormMatrix { entries })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.is_symmetric()
    }

    /// The form as a morphism `A⊗A → 1`, a `1 × d²` row.
    pub fn as_row(&self) -> Matrix {
        let d = self.entries.rows();
        self.entries.reshape(1, d * d).expect("d² entries")
    }

    /// The adjoint `A → DA`, `e_j ↦ Σ_i T[i][j] e_i*`. In the dual basis this is `T` itself.
    pub fn dual_map(&self) -> &Matrix {
        &self.entries
    }
}
