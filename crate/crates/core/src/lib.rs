//! Exact computations around separable algebras: trace forms, separability
//! idempotents, special symmetric Frobenius structures, a string-diagram
//! evaluator, and the fiber arithmetic of the degree-n map on the circle
//! spectrum.

pub mod algebra;
pub mod diagram;
pub mod scalars;
pub mod separability;
pub mod spectrum;
