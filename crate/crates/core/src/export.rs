//! JSON forms of matrices, codes and search witnesses.
//!
//! Elements are written as their integer codes; a field is written as its
//! [`FieldSpec`], so every file can be read back without extra context.

use serde::{Deserialize, Serialize};

use crate::codes::{CodeParams, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::gfla::{Distance, Matrix};
use crate::theory::{Classification, FamilyKind, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Elem>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &Matrix) -> MatrixJson {
        MatrixJson { field: m.field().spec(), rows: m.rows(), cols: m.cols(), data: m.row_vecs() }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let field = Field::from_spec(&self.field)?;
        if self.data.len() != self.rows {
            return Err(Error::ShapeMismatch(format!("{} rows declared, {} given", self.rows, self.data.len())));
        }
        Matrix::from_rows(&field, self.cols, self.data.clone())
    }
}

/// A code as its canonical generator matrix plus parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_exact: bool,
    pub generator: Vec<Vec<Elem>>,
}

impl CodeJson {
    pub fn new(c: &LinearCode, d: Option<Distance>) -> CodeJson {
        CodeJson {
            field: c.field().spec(),
            n: c.n(),
            k: c.k(),
            d: d.map(|d| d.value),
            d_exact: d.map_or(true, |d| d.exact),
            generator: c.generator().row_vecs(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Field::from_spec(&self.field)?;
        let m = Matrix::from_rows(&field, self.n, self.generator.clone())?;
        let c = LinearCode::from_generator(&m);
        if c.k() != self.k {
            return Err(Error::BadDimension(format!("declared k = {}, generator has rank {}", self.k, c.k())));
        }
        Ok(c)
    }
}

/// One search witness per line of a JSONL stream. Polynomials are
/// coefficient lists, low-to-high.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: FamilyKind,
    pub classification: Classification,
    pub field: FieldSpec,
    pub s1: Vec<Elem>,
    pub s2: Vec<Elem>,
    pub lambda1: Elem,
    pub beta1: Elem,
    pub f1: Vec<Elem>,
    pub g1: Vec<Elem>,
    pub lambda2: Elem,
    pub g2: Vec<Elem>,
    pub p: Vec<Elem>,
    /// Parameters for `m = 0` and `m = 1` copies of the second coordinate.
    pub params: [CodeParams; 2],
}

impl WitnessJson {
    pub fn new(kind: FamilyKind, w: &Witness) -> WitnessJson {
        WitnessJson {
            kind,
            classification: w.classification,
            field: w.one.f1.field().spec(),
            s1: w.one.s1.clone(),
            s2: w.two.s2.clone(),
            lambda1: w.one.lambda,
            beta1: w.one.beta,
            f1: w.one.f1.coeffs().to_vec(),
            g1: w.one.g1.coeffs().to_vec(),
            lambda2: w.two.lambda,
            g2: w.two.g2.coeffs().to_vec(),
            p: w.two.p.coeffs().to_vec(),
            params: w.params,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()))
}
