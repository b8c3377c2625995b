use super::{AlgebraError, FinAlgebra};
use crate::scalars::{Scalar, ScalarSpec};

fn structure_from_products(
    spec: ScalarSpec,
    d: usize,
    mut product: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
) -> Vec<Scalar> {
    let mut s = vec![spec.zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            for (k, coeff) in product(i, j) {
                let slot = &mut s[(i * d + j) * d + k];
                *slot = &*slot + &coeff;
            }
        }
    }
    s
}

/// Cayley table of the cyclic group `C_n` on elements `0..n` (addition mod n).
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

fn check_group(cayley: &[Vec<usize>]) -> Result<usize, AlgebraError> {
    let n = cayley.len();
    if n == 0 {
        return Err(AlgebraError::NotAGroup("empty table".into()));
    }
    for (i, row) in cayley.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::NotAGroup(format!(
                "row {i} has length {}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(AlgebraError::NotAGroup(format!(
                "entry {bad} out of range in row {i}"
            )));
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
        .ok_or_else(|| AlgebraError::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(AlgebraError::NotAGroup(format!(
                        "({a}*{b})*{c} != {a}*({b}*{c})"
                    )));
                }
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| cayley[a][b] == identity)) {
        return Err(AlgebraError::NotAGroup(format!(
            "element {a} has no inverse"
        )));
    }
    Ok(identity)
}

/// Group algebra `R[G]` from a Cayley table: `e_i · e_j = e_{cayley[i][j]}`.
pub fn make_group_algebra(
    spec: ScalarSpec,
    cayley: &[Vec<usize>],
) -> Result<FinAlgebra, AlgebraError> {
    let identity = check_group(cayley)?;
    let n = cayley.len();
    let structure = structure_from_products(spec, n, |i, j| vec![(cayley[i][j], spec.one())]);
    let mut unit = vec![spec.zero(); n];
    unit[identity] = spec.one();
    let basis = (0..n).map(|i| format!("g{i}")).collect();
    FinAlgebra::new(format!("{spec}[G{n}]"), spec, basis, structure, unit)
}

/// `R[C_n]` with basis `g^0, …, g^{n-1}`.
pub fn cyclic_group_algebra(spec: ScalarSpec, n: usize) -> FinAlgebra {
    assert!(n >= 1);
    let mut a = make_group_algebra(spec, &cyclic_table(n)).expect("cyclic table is a group");
    a.name = format!("{spec}[C{n}]");
    a.basis = (0..n).map(|i| format!("g^{i}")).collect();
    a
}

/// Full matrix algebra `M_n(R)` on the basis `e_ij` (row-major), `e_ij e_kl = δ_jk e_il`.
pub fn make_matrix_algebra(spec: ScalarSpec, n: usize) -> FinAlgebra {
    assert!(n >= 1);
    let d = n * n;
    let structure = structure_from_products(spec, d, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, spec.one())]
        } else {
            Vec::new()
        }
    });
    let unit = (0..d)
        .map(|a| {
            if a / n == a % n {
                spec.one()
            } else {
                spec.zero()
            }
        })
        .collect();
    let basis = (0..d)
        .map(|a| format!("e{}{}", a / n + 1, a % n + 1))
        .collect();
    FinAlgebra::new(format!("M{n}({spec})"), spec, basis, structure, unit)
        .expect("matrix units form an algebra")
}

/// Upper triangular `n × n` matrices, basis `e_ij` with `i ≤ j` in row-major order.
pub fn upper_triangular_algebra(spec: ScalarSpec, n: usize) -> FinAlgebra {
    assert!(n >= 1);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let d = pairs.len();
    let structure = structure_from_products(spec, d, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        if j == k {
            vec![(index(i, l), spec.one())]
        } else {
            Vec::new()
        }
    });
    let unit = pairs
        .iter()
        .map(|&(i, j)| if i == j { spec.one() } else { spec.zero() })
        .collect();
    let basis = pairs
        .iter()
        .map(|(i, j)| format!("e{}{}", i + 1, j + 1))
        .collect();
    FinAlgebra::new(format!("UT{n}({spec})"), spec, basis, structure, unit)
        .expect("upper triangular matrix units form an algebra")
}

/// `R[x]/(f)` for the monic polynomial `f = x^n + c_{n-1} x^{n-1} + … + c_0`,
/// given as `lower = [c_0, …, c_{n-1}]`. Basis `1, x, …, x^{n-1}`.
pub fn polynomial_quotient(spec: ScalarSpec, lower: &[i64]) -> FinAlgebra {
    let n = lower.len();
    assert!(n >= 1);
    // reduction of x^m for m < 2n - 1, as coefficient vectors
    let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(2 * n);
    for m in 0..2 * n - 1 {
        let v = if m < n {
            let mut v = vec![spec.zero(); n];
            v[m] = spec.one();
            v
        } else {
            // x^m = x · x^{m-1}; shift and fold x^n = -Σ c_i x^i
            let prev = &powers[m - 1];
            let mut v = vec![spec.zero(); n];
            v[1..n].clone_from_slice(&prev[..n - 1]);
            let top = &prev[n - 1];
            for (k, c) in lower.iter().enumerate() {
                v[k] = &v[k] - &(top * &spec.from_i64(*c));
            }
            v
        };
        powers.push(v);
    }
    let structure = structure_from_products(spec, n, |i, j| {
        powers[i + j]
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    });
    let mut unit = vec![spec.zero(); n];
    unit[0] = spec.one();
    let basis = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let poly = std::iter::once(format!("x^{n}"))
        .chain(
            lower
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| **c != 0)
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("{c}x"),
                    _ => format!("{c}x^{k}"),
                }),
        )
        .collect::<Vec<_>>()
        .join(" + ");
    FinAlgebra::new(format!("{spec}[x]/({poly})"), spec, basis, structure, unit)
        .expect("polynomial quotients are algebras")
}

/// `R[x]/(x²)`.
pub fn dual_numbers(spec: ScalarSpec) -> FinAlgebra {
    polynomial_quotient(spec, &[0, 0]).with_name(format!("{spec}[x]/(x^2)"))
}

/// Direct product `A × B` with componentwise operations; basis `A`'s then `B`'s.
pub fn product_algebra(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    if a.spec != b.spec {
        return Err(crate::scalars::MatrixError::ScalarSpecMismatch {
            left: a.spec,
            right: b.spec,
        }
        .into());
    }
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let spec = a.spec;
    let structure = structure_from_products(spec, d, |i, j| {
        if i < da && j < da {
            (0..da).map(|k| (k, a.c(i, j, k).clone())).collect()
        } else if i >= da && j >= da {
            (0..db)
                .map(|k| (da + k, b.c(i - da, j - da, k).clone()))
                .collect()
        } else {
            Vec::new()
        }
    });
    let unit = a.unit.iter().chain(&b.unit).cloned().collect();
    let basis = a
        .basis
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.basis.iter().map(|l| format!("(0,{l})")))
        .collect();
    FinAlgebra::new(
        format!("{} x {}", a.name, b.name),
        spec,
        basis,
        structure,
        unit,
    )
}
