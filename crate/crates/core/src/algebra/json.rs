use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, FinAlgebra};
use crate::scalars::{Scalar, ScalarSpec};

/// On-disk form of an algebra.
///
/// ```json
/// {"name": "Q[x]/(x^2)", "scalars": {"kind": "Q"}, "dim": 2,
///  "basis": ["1", "x"], "unit": ["1", "0"],
///  "structure": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]}
/// ```
///
/// `structure[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub scalars: ScalarSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<ScalarText>,
    pub structure: Vec<Vec<Vec<ScalarText>>>,
}

/// A scalar written either as a string (`"a"`, `"a/b"`) or a bare JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    fn parse(&self, spec: ScalarSpec) -> Result<Scalar, AlgebraError> {
        match self {
            ScalarText::Text(s) => spec.parse(s).map_err(AlgebraError::from),
            ScalarText::Int(n) => Ok(spec.from_i64(*n)),
        }
    }
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Schema(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn into_algebra(self) -> Result<FinAlgebra, AlgebraError> {
        let d = self.dim;
        let schema = |msg: String| Err(AlgebraError::Schema(msg));
        if self.basis.len() != d {
            return schema(format!("basis has {} labels, dim is {d}", self.basis.len()));
        }
        if self.unit.len() != d {
            return schema(format!("unit has {} entries, dim is {d}", self.unit.len()));
        }
        if self.structure.len() != d
            || self
                .structure
                .iter()
                .any(|plane| plane.len() != d || plane.iter().any(|row| row.len() != d))
        {
            return schema(format!("structure must be a {d}x{d}x{d} array"));
        }
        let spec = self.scalars;
        let structure = self
            .structure
            .iter()
            .flatten()
            .flatten()
            .map(|s| s.parse(spec))
            .collect::<Result<Vec<_>, _>>()?;
        let unit = self
            .unit
            .iter()
            .map(|s| s.parse(spec))
            .collect::<Result<Vec<_>, _>>()?;
        FinAlgebra::new(self.name, spec, self.basis, structure, unit)
    }
}

impl From<&FinAlgebra> for AlgebraDocument {
    fn from(a: &FinAlgebra) -> Self {
        let d = a.dim();
        let text = |s: &Scalar| ScalarText::Text(s.to_string());
        AlgebraDocument {
            name: a.name().to_string(),
            scalars: a.spec(),
            dim: d,
            basis: a.basis_labels().to_vec(),
            unit: a.unit_vector().iter().map(text).collect(),
            structure: (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).map(|k| text(a.c(i, j, k))).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl FinAlgebra {
    /// Parses and validates an algebra document.
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        AlgebraDocument::from_json(text)?.into_algebra()
    }

    pub fn to_json(&self) -> String {
        AlgebraDocument::from(self).to_json_pretty()
    }
}

/// Reads and validates an algebra document from disk.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<FinAlgebra, AlgebraError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| AlgebraError::Io(e.to_string()))?;
    FinAlgebra::from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, make_matrix_algebra};

    const DUAL: &str = r#"{
        "name": "dual numbers", "scalars": {"kind": "Q"}, "dim": 2,
        "basis": ["1", "x"], "unit": ["1", "0"],
        "structure": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]
    }"#;

    #[test]
    fn loads_dual_numbers() {
        let a = FinAlgebra::from_json(DUAL).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(
            a.structure_constants(),
            dual_numbers(ScalarSpec::Rationals).structure_constants()
        );
    }

    #[test]
    fn not_unital_document() {
        let doc = r#"{
            "name": "x^2 = 1, unit x", "scalars": {"kind": "Q"}, "dim": 2,
            "basis": ["1", "x"], "unit": ["0", "1"],
            "structure": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]]
        }"#;
        assert_eq!(
            FinAlgebra::from_json(doc).unwrap_err(),
            AlgebraError::NotUnital { j: 0 }
        );
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            FinAlgebra::from_json("{}"),
            Err(AlgebraError::Schema(_))
        ));
        let wrong_dim = DUAL.replace(r#""dim": 2"#, r#""dim": 3"#);
        assert!(matches!(
            FinAlgebra::from_json(&wrong_dim),
            Err(AlgebraError::Schema(_))
        ));
        let bad_scalar = DUAL.replace(r#"["0","0"]]]"#, r#"["0","zz"]]]"#);
        assert!(matches!(
            FinAlgebra::from_json(&bad_scalar),
            Err(AlgebraError::Matrix(_))
        ));
    }

    #[test]
    fn integer_literals_accepted() {
        let doc = DUAL.replace(r#""unit": ["1", "0"]"#, r#""unit": [1, 0]"#);
        assert!(FinAlgebra::from_json(&doc).is_ok());
    }

    #[test]
    fn document_round_trip() {
        for spec in [
            ScalarSpec::Rationals,
            ScalarSpec::PrimeField(3),
            ScalarSpec::Integers,
        ] {
            let a = make_matrix_algebra(spec, 2);
            assert_eq!(FinAlgebra::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
