//! Independent checks by linear solving. The equations here are written out
//! from structure constants index by index and never go through the matrix
//! constructions in `axioms`.

use crate::algebra::FinAlgebra;
use crate::scalars::{LinearSystem, MatrixError, SolutionSet};

/// Axioms that can be imposed on an unknown `κ = Σ k_ij e_i⊗e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaAxiom {
    /// `μ∘κ = u`
    K1,
    /// `(1⊗μ)(κ⊗1) = (μ⊗1)(1⊗κ)`
    K2,
    /// `κ = τ∘κ`
    K3,
    /// `μ∘τ∘κ = u`
    K4,
}

/// Solves for every `κ` satisfying the chosen axioms, over the `d²`
/// unknowns `k_ij` (variable `i·d + j`). Fields only.
pub fn kappa_solutions(a: &FinAlgebra, axioms: &[KappaAxiom]) -> Result<SolutionSet, MatrixError> {
    let d = a.dim();
    let spec = a.spec();
    let var = |i: usize, j: usize| i * d + j;
    let mut system = LinearSystem::new(spec, d * d)?;
    for axiom in axioms {
        match axiom {
            KappaAxiom::K1 | KappaAxiom::K4 => {
                let swapped = *axiom == KappaAxiom::K4;
                for l in 0..d {
                    let terms = (0..d)
                        .flat_map(|i| (0..d).map(move |j| (i, j)))
                        .map(|(i, j)| {
                            let c = if swapped { a.c(j, i, l) } else { a.c(i, j, l) };
                            (var(i, j), c.clone())
                        });
                    system.push(terms, a.unit_vector()[l].clone());
                }
            }
            KappaAxiom::K2 => {
                // coefficient of e_p⊗e_q in each side, applied to e_a
                for x in 0..d {
                    for p in 0..d {
                        for q in 0..d {
                            let lhs = (0..d).map(|j| (var(p, j), a.c(j, x, q).clone()));
                            let rhs = (0..d).map(|i| (var(i, q), -a.c(x, i, p)));
                            system.push(lhs.chain(rhs), spec.zero());
                        }
                    }
                }
            }
            KappaAxiom::K3 => {
                for i in 0..d {
                    for j in i + 1..d {
                        system.push(
                            [(var(i, j), spec.one()), (var(j, i), -spec.one())],
                            spec.zero(),
                        );
                    }
                }
            }
        }
    }
    Ok(system.solve())
}

/// Every symmetric separability idempotent (κ1 ∧ κ2 ∧ κ3).
pub fn oracle_symmetric_kappa_unique(a: &FinAlgebra) -> Result<SolutionSet, MatrixError> {
    kappa_solutions(a, &[KappaAxiom::K1, KappaAxiom::K2, KappaAxiom::K3])
}

/// Whether `μ` has an `(A, A)`-bilinear section, decided on the `d³` unknowns
/// `s(p, q, a)` = coefficient of `e_p⊗e_q` in `σ(e_a)`.
pub fn oracle_sigma_exists(a: &FinAlgebra) -> Result<bool, MatrixError> {
    let d = a.dim();
    let spec = a.spec();
    let var = |p: usize, q: usize, x: usize| (p * d + q) * d + x;
    let mut system = LinearSystem::new(spec, d * d * d)?;

    // μ∘σ = id
    for x in 0..d {
        for k in 0..d {
            let terms = (0..d)
                .flat_map(|p| (0..d).map(move |q| (p, q)))
                .map(|(p, q)| (var(p, q, x), a.c(p, q, k).clone()));
            let rhs = if x == k { spec.one() } else { spec.zero() };
            system.push(terms, rhs);
        }
    }
    // σ(e_x)·e_y = σ(e_x e_y) = e_x·σ(e_y), compared on e_p⊗e_r
    for x in 0..d {
        for y in 0..d {
            for p in 0..d {
                for r in 0..d {
                    let right_mult = (0..d).map(|q| (var(p, q, x), a.c(q, y, r).clone()));
                    let of_product: Vec<_> = (0..d)
                        .map(|k| (var(p, r, k), a.c(x, y, k).clone()))
                        .collect();
                    let left_mult = (0..d).map(|q| (var(q, r, y), a.c(x, q, p).clone()));

                    let negated = of_product.iter().map(|(v, c)| (*v, -c));
                    system.push(right_mult.chain(negated), spec.zero());
                    system.push(
                        of_product
                            .iter()
                            .cloned()
                            .chain(left_mult.map(|(v, c)| (v, -&c))),
                        spec.zero(),
                    );
                    if !system.is_consistent() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(system.is_consistent())
}
