//! Kind-tagged JSON encoding shared by every array type.
//!
//! Every object serializes as `{"kind": ..., "n": n, "entries": ...}` with
//! nested arrays, outermost index `i`, then `j`, then `k`. Corner-sum arrays
//! include their zero boundary, so each level has `n + 1` entries.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::array::{CornerSumArray, CornerSumHypermatrix, CornerSumMatrix, Hypermatrix, LatinSquare, Matrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tagged {
    Matrix { n: usize, entries: Vec<Vec<i32>> },
    CornerSumMatrix { n: usize, entries: Vec<Vec<i32>> },
    Hypermatrix { n: usize, entries: Vec<Vec<Vec<i32>>> },
    CornerSum { n: usize, entries: Vec<Vec<Vec<i32>>> },
    Latin { n: usize, entries: Vec<Vec<usize>> },
    /// Monotone hypertriangle: `entries[i-1][k-1]` is row `(i, k)`.
    Triangle { n: usize, entries: Vec<Vec<Vec<usize>>> },
}

impl Tagged {
    pub fn kind(&self) -> &'static str {
        match self {
            Tagged::Matrix { .. } => "matrix",
            Tagged::CornerSumMatrix { .. } => "corner_sum_matrix",
            Tagged::Hypermatrix { .. } => "hypermatrix",
            Tagged::CornerSum { .. } => "corner_sum",
            Tagged::Latin { .. } => "latin",
            Tagged::Triangle { .. } => "triangle",
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tagged values always serialize")
    }
}

fn check_n(kind: &str, declared: usize, actual: usize) -> Result<()> {
    if declared == actual {
        Ok(())
    } else {
        Err(Error::Dimension(format!("{kind}: declared n = {declared} but entries imply {actual}")))
    }
}

fn wrong_kind(want: &str, got: &Tagged) -> Error {
    Error::Parse(format!("expected kind \"{want}\", found \"{}\"", got.kind()))
}

impl From<&Matrix> for Tagged {
    fn from(m: &Matrix) -> Self {
        Tagged::Matrix { n: m.rows(), entries: m.to_rows() }
    }
}

impl TryFrom<Tagged> for Matrix {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::Matrix { n, entries } => {
                check_n("matrix", n, entries.len())?;
                Matrix::from_rows(&entries)
            }
            other => Err(wrong_kind("matrix", &other)),
        }
    }
}

impl From<&CornerSumMatrix> for Tagged {
    fn from(c: &CornerSumMatrix) -> Self {
        Tagged::CornerSumMatrix { n: c.rows(), entries: c.to_rows() }
    }
}

impl TryFrom<Tagged> for CornerSumMatrix {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::CornerSumMatrix { n, entries } => {
                check_n("corner_sum_matrix", n + 1, entries.len())?;
                CornerSumMatrix::from_rows(&entries)
            }
            other => Err(wrong_kind("corner_sum_matrix", &other)),
        }
    }
}

impl From<&Hypermatrix> for Tagged {
    fn from(h: &Hypermatrix) -> Self {
        Tagged::Hypermatrix { n: h.order(), entries: h.to_nested() }
    }
}

impl TryFrom<Tagged> for Hypermatrix {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::Hypermatrix { n, entries } => {
                check_n("hypermatrix", n, entries.len())?;
                Hypermatrix::from_nested(&entries)
            }
            Tagged::Latin { .. } => Ok(LatinSquare::try_from(t)?.to_hypermatrix()),
            other => Err(wrong_kind("hypermatrix", &other)),
        }
    }
}

impl From<&CornerSumArray> for Tagged {
    fn from(c: &CornerSumArray) -> Self {
        Tagged::CornerSum { n: c.order(), entries: c.to_nested() }
    }
}

impl TryFrom<Tagged> for CornerSumArray {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::CornerSum { n, entries } => {
                check_n("corner_sum", n + 1, entries.len())?;
                CornerSumArray::from_nested(&entries)
            }
            other => Err(wrong_kind("corner_sum", &other)),
        }
    }
}

impl From<&CornerSumHypermatrix> for Tagged {
    fn from(c: &CornerSumHypermatrix) -> Self {
        Tagged::from(c.as_array())
    }
}

impl TryFrom<Tagged> for CornerSumHypermatrix {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        CornerSumHypermatrix::new(CornerSumArray::try_from(t)?)
    }
}

impl From<&LatinSquare> for Tagged {
    fn from(l: &LatinSquare) -> Self {
        Tagged::Latin { n: l.order(), entries: l.to_rows() }
    }
}

impl TryFrom<Tagged> for LatinSquare {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::Latin { n, entries } => {
                check_n("latin", n, entries.len())?;
                LatinSquare::from_rows(&entries)
            }
            other => Err(wrong_kind("latin", &other)),
        }
    }
}

macro_rules! tagged_serde {
    ($($ty:ty),*) => {$(
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                Tagged::from(self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                <$ty>::try_from(Tagged::deserialize(d)?).map_err(D::Error::custom)
            }
        }
    )*};
}

tagged_serde!(Matrix, CornerSumMatrix, Hypermatrix, CornerSumArray, CornerSumHypermatrix, LatinSquare);
