use std::collections::BTreeMap;

use super::{MatrixError, Scalar, ScalarSpec};

/// Every exact solution of a linear system over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    Unique(Vec<Scalar>),
    /// `particular + span(kernel)`, with `kernel` nonempty and linearly independent.
    Affine {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    /// Dimension of the solution space; `None` when there are no solutions.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Unique(_) => Some(0),
            SolutionSet::Affine { kernel, .. } => Some(kernel.len()),
        }
    }

    pub fn particular(&self) -> Option<&[Scalar]> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Unique(x) => Some(x),
            SolutionSet::Affine { particular, .. } => Some(particular),
        }
    }

    pub fn kernel(&self) -> &[Vec<Scalar>] {
        match self {
            SolutionSet::Affine { kernel, .. } => kernel,
            _ => &[],
        }
    }

    /// Enumerates every point of the set over a prime field (`p^dim` vectors).
    /// Returns `None` over infinite rings.
    pub fn points(&self) -> Option<Vec<Vec<Scalar>>> {
        let base = match self.particular() {
            None => return Some(Vec::new()),
            Some(x) => x,
        };
        let spec = base.first().map(Scalar::spec)?;
        let ScalarSpec::PrimeField(p) = spec else {
            return None;
        };
        let kernel = self.kernel();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; kernel.len()];
        loop {
            let mut x = base.to_vec();
            for (c, dir) in coeffs.iter().zip(kernel) {
                if *c == 0 {
                    continue;
                }
                let s = spec.from_i64(*c as i64);
                for (xi, di) in x.iter_mut().zip(dir) {
                    *xi = &*xi + &(&s * di);
                }
            }
            out.push(x);
            // odometer increment
            let mut k = 0;
            loop {
                if k == coeffs.len() {
                    return Some(out);
                }
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    terms: BTreeMap<usize, Scalar>,
    rhs: Scalar,
}

/// Sparse linear system assembled one equation at a time and reduced online.
///
/// Each stored pivot row has leading coefficient 1 at its smallest column, so
/// incoming rows only ever gain entries to the right of the column being
/// eliminated.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    spec: ScalarSpec,
    unknowns: usize,
    pivots: BTreeMap<usize, Row>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(spec: ScalarSpec, unknowns: usize) -> Result<Self, MatrixError> {
        if !spec.is_field() {
            return Err(MatrixError::IntegerSpecUnsupported);
        }
        Ok(LinearSystem {
            spec,
            unknowns,
            pivots: BTreeMap::new(),
            inconsistent: false,
        })
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ coeff·x[var] = rhs`. Repeated variables are summed.
    pub fn push(&mut self, terms: impl IntoIterator<Item = (usize, Scalar)>, rhs: Scalar) {
        let mut row = Row {
            terms: BTreeMap::new(),
            rhs,
        };
        for (var, coeff) in terms {
            assert!(var < self.unknowns, "variable {var} out of range");
            accumulate(&mut row.terms, var, &coeff);
        }
        self.reduce_and_insert(row);
    }

    fn reduce_and_insert(&mut self, mut row: Row) {
        while let Some((&col, lead)) = row.terms.iter().next() {
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (&j, v) in &pivot.terms {
                        accumulate(&mut row.terms, j, &-(&factor * v));
                    }
                    row.rhs = &row.rhs - &(&factor * &pivot.rhs);
                }
                None => {
                    let inv = lead.inverse().expect("nonzero in a field");
                    for v in row.terms.values_mut() {
                        *v = &*v * &inv;
                    }
                    row.rhs = &row.rhs * &inv;
                    self.pivots.insert(col, row);
                    return;
                }
            }
        }
        if !row.rhs.is_zero() {
            self.inconsistent = true;
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    fn back_substitute(&self, mut x: Vec<Scalar>, homogeneous: bool) -> Vec<Scalar> {
        for (&col, row) in self.pivots.iter().rev() {
            let mut value = if homogeneous {
                self.spec.zero()
            } else {
                row.rhs.clone()
            };
            for (&j, coeff) in row.terms.range(col + 1..) {
                if !x[j].is_zero() {
                    value = &value - &(coeff * &x[j]);
                }
            }
            x[col] = value;
        }
        x
    }

    pub fn solve(&self) -> SolutionSet {
        if self.inconsistent {
            return SolutionSet::Empty;
        }
        let zero = vec![self.spec.zero(); self.unknowns];
        let particular = self.back_substitute(zero.clone(), false);
        let kernel: Vec<Vec<Scalar>> = (0..self.unknowns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut x = zero.clone();
                x[free] = self.spec.one();
                self.back_substitute(x, true)
            })
            .collect();
        if kernel.is_empty() {
            SolutionSet::Unique(particular)
        } else {
            SolutionSet::Affine { particular, kernel }
        }
    }
}

fn accumulate(terms: &mut BTreeMap<usize, Scalar>, var: usize, coeff: &Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.get_mut(&var) {
        Some(v) => {
            let sum = &*v + coeff;
            if sum.is_zero() {
                terms.remove(&var);
            } else {
                *v = sum;
            }
        }
        None => {
            terms.insert(var, coeff.clone());
        }
    }
}
