use std::fmt;
use std::ops::Index;

use super::linsolve::{LinearSystem, SolutionSet};
use super::{MatrixError, Scalar, ScalarSpec};

/// Dense row-major matrix over a single [`ScalarSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    spec: ScalarSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(
        spec: ScalarSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.spec() != spec) {
            return Err(MatrixError::ScalarSpecMismatch {
                left: spec,
                right: bad.spec(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            spec,
            entries,
        })
    }

    pub fn from_fn(
        spec: ScalarSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.spec(), spec, "entry ({i},{j}) in wrong ring");
                entries.push(v);
            }
        }
        Matrix {
            rows,
            cols,
            spec,
            entries,
        }
    }

    pub fn zeros(spec: ScalarSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            spec,
            entries: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: ScalarSpec, n: usize) -> Self {
        Self::from_fn(
            spec,
            n,
            n,
            |i, j| {
                if i == j {
                    spec.one()
                } else {
                    spec.zero()
                }
            },
        )
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64(spec: ScalarSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(spec, r, c, |i, j| spec.from_i64(rows[i][j]))
    }

    pub fn column(spec: ScalarSpec, values: Vec<Scalar>) -> Result<Self, MatrixError> {
        let n = values.len();
        Self::new(spec, n, 1, values)
    }

    pub fn row(spec: ScalarSpec, values: Vec<Scalar>) -> Result<Self, MatrixError> {
        let n = values.len();
        Self::new(spec, 1, n, values)
    }

    /// The symmetry `X⊗Y → Y⊗X` for free modules of ranks `left` and `right`.
    pub fn swap(spec: ScalarSpec, left: usize, right: usize) -> Self {
        let mut m = Matrix::zeros(spec, right * left, left * right);
        for x in 0..left {
            for y in 0..right {
                m.set(y * left + x, x * right + y, spec.one());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn spec(&self) -> ScalarSpec {
        self.spec
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.spec(), self.spec);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row_values(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_values(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First `(i, j)` with `i < j` and `m[i][j] != m[j][i]`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.spec, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    fn check_spec(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.spec != other.spec {
            return Err(MatrixError::ScalarSpecMismatch {
                left: self.spec,
                right: other.spec,
            });
        }
        Ok(())
    }

    /// Exact product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_spec(rhs)?;
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Matrix::zeros(self.spec, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; row index of the result is `i1 * rhs.rows + i2`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_spec(rhs)?;
        let zero = self.spec.zero();
        Ok(Matrix::from_fn(
            self.spec,
            self.rows * rhs.rows,
            self.cols * rhs.cols,
            |i, j| {
                let a = self.get(i / rhs.rows, j / rhs.cols);
                if a.is_zero() {
                    return zero.clone();
                }
                a * rhs.get(i % rhs.rows, j % rhs.cols)
            },
        ))
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, MatrixError> {
        self.check_spec(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(MatrixError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            spec: self.spec,
            entries,
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            spec: self.spec,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Reinterpret as a `rows × cols` matrix with the same row-major entries.
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<Matrix, MatrixError> {
        Matrix::new(self.spec, rows, cols, self.entries.clone())
    }

    /// First index where the two matrices differ (shape mismatch reports `(0, 0)`).
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() || self.spec != other.spec {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact over every spec.
    pub fn determinant(&self) -> Result<Scalar, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<Scalar>> = (0..n).map(|i| self.row_values(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = self.spec.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(self.spec.zero());
            };
            if p != k {
                m.swap(p, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        let det = if n == 0 { self.spec.one() } else { prev };
        Ok(if sign_flip { -det } else { det })
    }

    /// Exact two-sided inverse. Over ℤ the matrix must have determinant `±1`.
    pub fn try_invert(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.spec == ScalarSpec::Integers {
            let det = self.determinant()?;
            if !det.is_unit() {
                return Err(MatrixError::NotInvertible { det });
            }
            let inv = self.change_spec(ScalarSpec::Rationals).try_invert()?;
            return Ok(inv.change_spec(ScalarSpec::Integers));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row_values(i).to_vec()).collect();
        let mut inv: Vec<Vec<Scalar>> = Matrix::identity(self.spec, n)
            .entries
            .chunks(n.max(1))
            .take(n)
            .map(|c| c.to_vec())
            .collect();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Err(MatrixError::NotInvertible {
                    det: self.spec.zero(),
                });
            };
            a.swap(p, k);
            inv.swap(p, k);
            let pivot_inv = a[k][k].inverse().expect("nonzero field element");
            for j in 0..n {
                a[k][j] = &a[k][j] * &pivot_inv;
                inv[k][j] = &inv[k][j] * &pivot_inv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&factor * &a[k][j]);
                    inv[i][j] = &inv[i][j] - &(&factor * &inv[k][j]);
                }
            }
        }
        Ok(Matrix::from_fn(self.spec, n, n, |i, j| inv[i][j].clone()))
    }

    /// Maps every entry into another ring through its rational value.
    ///
    /// Panics if some entry has no image (a non-integral rational sent to ℤ).
    pub fn change_spec(&self, spec: ScalarSpec) -> Matrix {
        Matrix::from_fn(spec, self.rows, self.cols, |i, j| {
            spec.from_rational(&self.get(i, j).to_rational())
                .expect("entry representable in target ring")
        })
    }

    /// All exact solutions of `self · x = rhs` for a column `rhs`. Fields only.
    pub fn solve_affine(&self, rhs: &Matrix) -> Result<SolutionSet, MatrixError> {
        self.check_spec(rhs)?;
        if rhs.cols != 1 || rhs.rows != self.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "solve_affine",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut system = LinearSystem::new(self.spec, self.cols)?;
        for i in 0..self.rows {
            let terms = self
                .row_values(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()));
            system.push(terms, rhs.get(i, 0).clone());
        }
        Ok(system.solve())
    }

    /// Basis of the right kernel. Fields only.
    pub fn kernel(&self) -> Result<Vec<Vec<Scalar>>, MatrixError> {
        let zero = Matrix::zeros(self.spec, self.rows, 1);
        Ok(match self.solve_affine(&zero)? {
            SolutionSet::Affine { kernel, .. } => kernel,
            _ => Vec::new(),
        })
    }

    pub fn rank(&self) -> Result<usize, MatrixError> {
        Ok(self.cols - self.kernel()?.len())
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row_values(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact matrix product; free-function form of [`Matrix::mul`].
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix, MatrixError> {
    a.mul(b)
}

/// Exact inverse; free-function form of [`Matrix::try_invert`].
pub fn try_invert(m: &Matrix) -> Result<Matrix, MatrixError> {
    m.try_invert()
}

/// All solutions of `system · x = rhs`; free-function form of [`Matrix::solve_affine`].
pub fn solve_affine(system: &Matrix, rhs: &Matrix) -> Result<SolutionSet, MatrixError> {
    system.solve_affine(rhs)
}
