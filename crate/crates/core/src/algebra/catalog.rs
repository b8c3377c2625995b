use super::{
    cyclic_group_algebra, dual_numbers, make_matrix_algebra, polynomial_quotient, product_algebra,
    upper_triangular_algebra, FinAlgebra,
};
use crate::scalars::ScalarSpec;

/// A named algebra from the shipped fixture set; `file` is the JSON file name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub file: String,
    pub algebra: FinAlgebra,
}

fn spec_slug(spec: ScalarSpec) -> String {
    match spec {
        ScalarSpec::Rationals => "q".into(),
        ScalarSpec::PrimeField(p) => format!("f{p}"),
        ScalarSpec::Integers => "z".into(),
    }
}

/// Cyclic group algebras `C₂…C₈` over ℚ, 𝔽₂, 𝔽₃, 𝔽₅; `M₂` over ℚ and 𝔽₂;
/// dual numbers; `ℤ×ℤ` and `ℤ[C₂]`; a few fields, products and a
/// noncommutative non-semisimple algebra.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let q = ScalarSpec::Rationals;
    let z = ScalarSpec::Integers;
    let f2 = ScalarSpec::PrimeField(2);
    let f3 = ScalarSpec::PrimeField(3);
    let entry = |file: &str, algebra: FinAlgebra| CatalogEntry {
        file: format!("{file}.json"),
        algebra,
    };
    let product = |a: &FinAlgebra, b: &FinAlgebra| product_algebra(a, b).expect("same scalars");

    let mut out = Vec::new();
    for spec in [q, f2, f3, ScalarSpec::PrimeField(5)] {
        for n in 2..=8 {
            out.push(entry(
                &format!("{}_c{n}", spec_slug(spec)),
                cyclic_group_algebra(spec, n),
            ));
        }
    }
    out.push(entry("m2_q", make_matrix_algebra(q, 2)));
    out.push(entry("m2_f2", make_matrix_algebra(f2, 2)));
    out.push(entry("dual_numbers", dual_numbers(q)));
    out.push(entry("dual_numbers_f3", dual_numbers(f3)));
    let z1 = cyclic_group_algebra(z, 1);
    out.push(entry("z_x_z", product(&z1, &z1).with_name("Z x Z")));
    out.push(entry("z_c2", cyclic_group_algebra(z, 2)));
    out.push(entry(
        "f4",
        polynomial_quotient(f2, &[1, 1]).with_name("F4"),
    ));
    out.push(entry(
        "q_i",
        polynomial_quotient(q, &[1, 0]).with_name("Q(i)"),
    ));
    out.push(entry(
        "q_c2_x_m2_q",
        product(&cyclic_group_algebra(q, 2), &make_matrix_algebra(q, 2)),
    ));
    let f3_1 = cyclic_group_algebra(f3, 1);
    out.push(entry("f3_x_f3", product(&f3_1, &f3_1).with_name("F3 x F3")));
    out.push(entry("ut2_q", upper_triangular_algebra(q, 2)));
    out
}
