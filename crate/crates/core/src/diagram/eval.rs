use std::cell::OnceCell;

use super::{DiagramError, Generator, MorphismTerm, TermKind, WireType};
use crate::algebra::{BilinearFormMatrix, FinAlgebra, TensorSquareElement};
use crate::scalars::{Matrix, MatrixError};
use crate::separability::{compute_kappa, frobenius_structure};

/// Optional structure maps that are not determined by the algebra alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Extras {
    pub kappa: Option<TensorSquareElement>,
    /// `d² × d`.
    pub delta: Option<Matrix>,
}

impl Extras {
    /// `κ = T⁻¹` and the Frobenius comultiplication built from it, when the
    /// trace form is invertible; empty otherwise.
    pub fn computed(a: &FinAlgebra) -> Extras {
        let Ok(kappa) = compute_kappa(a, &a.trace_form()) else {
            return Extras::default();
        };
        let delta = frobenius_structure(a, &kappa)
            .expect("κ has the algebra's dimension")
            .comultiplication;
        Extras {
            kappa: Some(kappa),
            delta: Some(delta),
        }
    }
}

/// Evaluates terms against one algebra, caching the derived matrices.
pub struct Evaluator<'a> {
    algebra: &'a FinAlgebra,
    extras: &'a Extras,
    form: BilinearFormMatrix,
    theta_inv: OnceCell<Option<Matrix>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(algebra: &'a FinAlgebra, extras: &'a Extras) -> Self {
        Evaluator {
            algebra,
            extras,
            form: algebra.trace_form(),
            theta_inv: OnceCell::new(),
        }
    }

    fn generator(&self, g: Generator) -> Result<Matrix, DiagramError> {
        let a = self.algebra;
        let spec = a.spec();
        let d = a.dim();
        Ok(match g {
            Generator::Mu => a.mult_matrix(),
            Generator::Unit => a.unit_matrix(),
            Generator::Tau(_, _) => Matrix::swap(spec, d, d),
            // Σᵢ eᵢ*⊗eᵢ
            Generator::Eta => Matrix::from_fn(spec, d * d, 1, |r, _| {
                if r / d == r % d {
                    spec.one()
                } else {
                    spec.zero()
                }
            }),
            // eₐ⊗e_b* ↦ δ_ab
            Generator::Eps => Matrix::from_fn(spec, 1, d * d, |_, c| {
                if c / d == c % d {
                    spec.one()
                } else {
                    spec.zero()
                }
            }),
            Generator::Tr | Generator::Counit => a.trace_map(),
            Generator::T => self.form.as_row(),
            Generator::Theta => self.form.dual_map().clone(),
            Generator::ThetaInv => self
                .theta_inv
                .get_or_init(|| self.form.dual_map().try_invert().ok())
                .clone()
                .ok_or(DiagramError::NotInvertible)?,
            Generator::Kappa => self
                .extras
                .kappa
                .as_ref()
                .ok_or(DiagramError::MissingExtra("kappa"))?
                .as_column(),
            Generator::Delta => self
                .extras
                .delta
                .clone()
                .ok_or(DiagramError::MissingExtra("delta"))?,
        })
    }

    pub fn evaluate(&self, term: &MorphismTerm) -> Result<Matrix, DiagramError> {
        let m = match term.kind() {
            TermKind::Generator(g) => self.generator(*g)?,
            TermKind::Identity(w) => {
                Matrix::identity(self.algebra.spec(), self.algebra.dim().pow(w.len() as u32))
            }
            TermKind::Compose(outer, inner) => self.evaluate(outer)?.mul(&self.evaluate(inner)?)?,
            TermKind::Tensor(left, right) => self.evaluate(left)?.kron(&self.evaluate(right)?)?,
        };
        let expected = (self.size(term.codomain()), self.size(term.domain()));
        if m.shape() != expected {
            return Err(MatrixError::DimensionMismatch {
                op: "evaluate",
                left: m.shape(),
                right: expected,
            }
            .into());
        }
        Ok(m)
    }

    fn size(&self, wires: &[WireType]) -> usize {
        self.algebra.dim().pow(wires.len() as u32)
    }
}

/// The matrix of `term` for the algebra `a`: size
/// `d^|codomain| × d^|domain|`.
pub fn evaluate(
    term: &MorphismTerm,
    a: &FinAlgebra,
    extras: &Extras,
) -> Result<Matrix, DiagramError> {
    Evaluator::new(a, extras).evaluate(term)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationOutcome {
    pub passed: bool,
    /// First differing entry `(row, col)` of the two evaluated sides.
    pub witness: Option<(usize, usize)>,
}

/// Exact equality of the two sides.
pub fn check_equation(
    lhs: &MorphismTerm,
    rhs: &MorphismTerm,
    a: &FinAlgebra,
    extras: &Extras,
) -> Result<EquationOutcome, DiagramError> {
    let ev = Evaluator::new(a, extras);
    let witness = ev.evaluate(lhs)?.first_difference(&ev.evaluate(rhs)?);
    Ok(EquationOutcome {
        passed: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        cyclic_group_algebra, dual_numbers, make_matrix_algebra, product_algebra,
    };
    use crate::diagram::parse_term;
    use crate::scalars::ScalarSpec;
    use proptest::prelude::*;

    const Q: ScalarSpec = ScalarSpec::Rationals;

    fn eval(s: &str, a: &FinAlgebra) -> Result<Matrix, DiagramError> {
        evaluate(&parse_term(s).unwrap(), a, &Extras::computed(a))
    }

    fn algebras() -> Vec<FinAlgebra> {
        vec![
            cyclic_group_algebra(Q, 3),
            cyclic_group_algebra(ScalarSpec::PrimeField(2), 2),
            make_matrix_algebra(Q, 2),
            dual_numbers(ScalarSpec::PrimeField(3)),
            product_algebra(&cyclic_group_algebra(Q, 2), &dual_numbers(Q)).unwrap(),
        ]
    }

    #[test]
    fn snake_identities() {
        for a in algebras() {
            let id = Matrix::identity(a.spec(), a.dim());
            assert_eq!(eval("(eps * idA) o (idA * eta)", &a).unwrap(), id);
            assert_eq!(eval("(idD * eps) o (eta * idD)", &a).unwrap(), id);
        }
    }

    #[test]
    fn counit_after_mu_is_flattened_trace_form() {
        let a = cyclic_group_algebra(Q, 2);
        assert_eq!(
            eval("counit o mu", &a).unwrap(),
            Matrix::from_i64(Q, &[&[2, 0, 0, 2]])
        );
        for a in algebras() {
            assert_eq!(eval("counit o mu", &a).unwrap(), a.trace_form().as_row());
        }
    }

    #[test]
    fn trace_diagram_equals_trace_map() {
        for a in algebras() {
            let drawn = eval("eps o (mu * idD) o (idA * tau[D,A]) o (idA * eta)", &a).unwrap();
            assert_eq!(drawn, a.trace_map());
            assert_eq!(eval("tr", &a).unwrap(), a.trace_map());
        }
    }

    #[test]
    fn special_on_q_c3() {
        let a = cyclic_group_algebra(Q, 3);
        assert_eq!(eval("mu o delta", &a).unwrap(), Matrix::identity(Q, 3));
    }

    #[test]
    fn theta_is_trace_form_matrix() {
        let a = make_matrix_algebra(Q, 2);
        assert_eq!(&eval("theta", &a).unwrap(), a.trace_form().matrix());
        assert_eq!(
            eval("theta_inv o theta", &a).unwrap(),
            Matrix::identity(Q, 4)
        );
    }

    #[test]
    fn missing_extras_and_degenerate_theta() {
        let a = cyclic_group_algebra(Q, 2);
        let none = Extras::default();
        let kappa = parse_term("kappa").unwrap();
        let delta = parse_term("delta").unwrap();
        assert_eq!(
            evaluate(&kappa, &a, &none),
            Err(DiagramError::MissingExtra("kappa"))
        );
        assert_eq!(
            evaluate(&delta, &a, &none),
            Err(DiagramError::MissingExtra("delta"))
        );
        let dn = dual_numbers(Q);
        assert_eq!(eval("theta_inv", &dn), Err(DiagramError::NotInvertible));
    }

    #[test]
    fn noncommutative_swap_fails_with_witness() {
        let a = make_matrix_algebra(Q, 2);
        let mu = parse_term("mu").unwrap();
        let swapped = parse_term("mu o tau[A,A]").unwrap();
        let out = check_equation(&mu, &swapped, &a, &Extras::default()).unwrap();
        assert!(!out.passed);
        // e12·e21 = e11 but e21·e12 = e22: output e11 is row 0, input e12⊗e21 is column 6.
        assert_eq!(out.witness, Some((0, 6)));
    }

    fn atoms() -> Vec<&'static str> {
        vec![
            "idA",
            "mu o delta",
            "mu o (idA * u)",
            "tau[A,A]",
            "mu",
            "delta",
            "kappa",
            "t",
            "idA * idA",
        ]
    }

    proptest! {
        #[test]
        fn evaluation_is_functorial(i in 0usize..9, j in 0usize..9, alg in 0usize..3) {
            let a = [cyclic_group_algebra(Q, 3), make_matrix_algebra(Q, 2), cyclic_group_algebra(ScalarSpec::PrimeField(5), 2)][alg].clone();
            let extras = Extras::computed(&a);
            let f = parse_term(atoms()[i]).unwrap();
            let g = parse_term(atoms()[j]).unwrap();
            let (mf, mg) = (evaluate(&f, &a, &extras).unwrap(), evaluate(&g, &a, &extras).unwrap());
            let tensor = MorphismTerm::tensor(g.clone(), f.clone());
            prop_assert_eq!(evaluate(&tensor, &a, &extras).unwrap(), mg.kron(&mf).unwrap());
            if let Ok(composite) = MorphismTerm::compose(g, f) {
                prop_assert_eq!(evaluate(&composite, &a, &extras).unwrap(), mg.mul(&mf).unwrap());
            }
        }
    }
}
