//! Typed string-diagram terms and their evaluation to exact matrices.
//!
//! A term is a morphism between lists of wires, each wire being `A` or its
//! dual `D`. Concrete syntax: `g o f` composes (f first), `f * g` tensors,
//! `*` binds tighter than `o`, both associate left. A wire list `[X₁,…,Xₙ]`
//! evaluates to the tensor power with row-major basis ordering, and `D`
//! carries the dual basis of `A`.

mod corpus;
mod eval;
mod parser;

pub use corpus::{builtin_corpus, check_corpus, parse_corpus, CorpusError, EquationCorpusEntry};
pub use eval::{check_equation, evaluate, EquationOutcome, Evaluator, Extras};
pub use parser::parse_term;

use std::fmt;

use thiserror::Error;

use crate::scalars::MatrixError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WireType {
    A,
    D,
}

impl fmt::Display for WireType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WireType::A => "A",
            WireType::D => "D",
        })
    }
}

pub type Wires = Vec<WireType>;

fn wires_to_string(w: &[WireType]) -> String {
    let inner: Vec<String> = w.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Mu,
    Unit,
    Tau(WireType, WireType),
    Eta,
    Eps,
    Kappa,
    Tr,
    T,
    Delta,
    Counit,
    Theta,
    ThetaInv,
}

impl Generator {
    pub fn from_name(name: &str) -> Option<Generator> {
        Some(match name {
            "mu" => Generator::Mu,
            "u" => Generator::Unit,
            "eta" => Generator::Eta,
            "eps" => Generator::Eps,
            "kappa" => Generator::Kappa,
            "tr" => Generator::Tr,
            "t" => Generator::T,
            "delta" => Generator::Delta,
            "counit" => Generator::Counit,
            "theta" => Generator::Theta,
            "theta_inv" => Generator::ThetaInv,
            _ => return None,
        })
    }

    pub fn domain(&self) -> Wires {
        use WireType::{A, D};
        match self {
            Generator::Mu | Generator::T => vec![A, A],
            Generator::Unit | Generator::Eta | Generator::Kappa => vec![],
            Generator::Tau(x, y) => vec![*x, *y],
            Generator::Eps => vec![A, D],
            Generator::Tr | Generator::Delta | Generator::Counit | Generator::Theta => vec![A],
            Generator::ThetaInv => vec![D],
        }
    }

    pub fn codomain(&self) -> Wires {
        use WireType::{A, D};
        match self {
            Generator::Mu | Generator::Unit | Generator::ThetaInv => vec![A],
            Generator::Tau(x, y) => vec![*y, *x],
            Generator::Eta => vec![D, A],
            Generator::Eps | Generator::Tr | Generator::T | Generator::Counit => vec![],
            Generator::Kappa | Generator::Delta => vec![A, A],
            Generator::Theta => vec![D],
        }
    }

    /// Whether evaluating this generator needs a nondegenerate trace form.
    pub fn requires_separable(&self) -> bool {
        matches!(
            self,
            Generator::Kappa | Generator::Delta | Generator::ThetaInv
        )
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Generator::Mu => "mu",
            Generator::Unit => "u",
            Generator::Tau(x, y) => return write!(f, "tau[{x},{y}]"),
            Generator::Eta => "eta",
            Generator::Eps => "eps",
            Generator::Kappa => "kappa",
            Generator::Tr => "tr",
            Generator::T => "t",
            Generator::Delta => "delta",
            Generator::Counit => "counit",
            Generator::Theta => "theta",
            Generator::ThetaInv => "theta_inv",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermKind {
    Generator(Generator),
    Identity(Wires),
    /// `Compose(g, f)` is `g o f`: apply `f` first.
    Compose(Box<MorphismTerm>, Box<MorphismTerm>),
    Tensor(Box<MorphismTerm>, Box<MorphismTerm>),
}

/// A well-typed term. Construction goes through [`MorphismTerm::compose`] and
/// friends, so `domain`/`codomain` are always the inferred wire lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismTerm {
    kind: TermKind,
    domain: Wires,
    codomain: Wires,
}

impl MorphismTerm {
    pub fn generator(g: Generator) -> Self {
        MorphismTerm {
            domain: g.domain(),
            codomain: g.codomain(),
            kind: TermKind::Generator(g),
        }
    }

    pub fn identity(wires: Wires) -> Self {
        MorphismTerm {
            domain: wires.clone(),
            codomain: wires.clone(),
            kind: TermKind::Identity(wires),
        }
    }

    /// `outer o inner`.
    pub fn compose(outer: MorphismTerm, inner: MorphismTerm) -> Result<Self, DiagramError> {
        if inner.codomain != outer.domain {
            return Err(DiagramError::Type {
                position: 0,
                expected: outer.domain.clone(),
                actual: inner.codomain.clone(),
            });
        }
        Ok(MorphismTerm {
            domain: inner.domain.clone(),
            codomain: outer.codomain.clone(),
            kind: TermKind::Compose(Box::new(outer), Box::new(inner)),
        })
    }

    pub fn tensor(left: MorphismTerm, right: MorphismTerm) -> Self {
        let concat = |x: &[WireType], y: &[WireType]| [x, y].concat();
        MorphismTerm {
            domain: concat(&left.domain, &right.domain),
            codomain: concat(&left.codomain, &right.codomain),
            kind: TermKind::Tensor(Box::new(left), Box::new(right)),
        }
    }

    pub fn kind(&self) -> &TermKind {
        &self.kind
    }

    pub fn domain(&self) -> &[WireType] {
        &self.domain
    }

    pub fn codomain(&self) -> &[WireType] {
        &self.codomain
    }

    pub fn generators(&self) -> Vec<Generator> {
        match &self.kind {
            TermKind::Generator(g) => vec![*g],
            TermKind::Identity(_) => vec![],
            TermKind::Compose(x, y) | TermKind::Tensor(x, y) => {
                let mut v = x.generators();
                v.extend(y.generators());
                v
            }
        }
    }

    pub fn requires_separable(&self) -> bool {
        self.generators().iter().any(Generator::requires_separable)
    }

    /// Human-readable type, e.g. `[A,A] -> [A]`.
    pub fn signature(&self) -> String {
        format!(
            "{} -> {}",
            wires_to_string(&self.domain),
            wires_to_string(&self.codomain)
        )
    }
}

/// Prints fully parenthesized concrete syntax that parses back to the same term.
impl fmt::Display for MorphismTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TermKind::Generator(g) => write!(f, "{g}"),
            TermKind::Identity(w) => match w.as_slice() {
                [WireType::A] => f.write_str("idA"),
                [WireType::D] => f.write_str("idD"),
                _ => write!(f, "id{}", wires_to_string(w)),
            },
            TermKind::Compose(g, h) => write!(f, "({g} o {h})"),
            TermKind::Tensor(g, h) => write!(f, "({g} * {h})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("type error at {position}: expected {}, found {}", wires_to_string(.expected), wires_to_string(.actual))]
    Type {
        position: usize,
        expected: Wires,
        actual: Wires,
    },
    #[error("evaluation needs {0}, which was not supplied")]
    MissingExtra(&'static str),
    #[error("theta is not invertible: the trace form is degenerate")]
    NotInvertible,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
