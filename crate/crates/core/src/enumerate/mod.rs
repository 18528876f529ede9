//! Exhaustive generation of Latin squares, ASMs, ASHMs, PASHMs, corner-sum
//! hypermatrices and monotone hypertriangles, plus Hasse graphs and generic
//! finite posets.
//!
//! Every enumerator returns its elements in a canonical lexicographic order so
//! that node identifiers in serialized graphs are reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod asm;
pub mod ashm;
pub mod corner_sum;
pub mod hasse;
pub mod latin;
pub mod poset;
pub mod triangles;

pub use asm::enumerate_asms;
pub use ashm::{enumerate_ashm, enumerate_pashm, Strategy};
pub use corner_sum::enumerate_corner_sum;
pub use hasse::{build_hasse, build_hasse_lattice, is_lattice, HasseGraph, LatticeCheck};
pub use latin::enumerate_latin;
pub use triangles::enumerate_monotone_hypertriangles;

/// Environment variable that replaces every enumeration cap.
pub const MAX_N_ENV: &str = "HYPERLATTICE_MAX_N";

/// Default cap for corner-sum enumeration; order 5 is far beyond desk scale.
pub const CORNER_SUM_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElementKind {
    Latin,
    Asm,
    Ashm,
    Pashm,
    CornerSum,
    Triangle,
}

impl ElementKind {
    pub const ALL: [ElementKind; 6] = [
        ElementKind::Latin,
        ElementKind::Asm,
        ElementKind::Ashm,
        ElementKind::Pashm,
        ElementKind::CornerSum,
        ElementKind::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ElementKind::Latin => "latin",
            ElementKind::Asm => "asm",
            ElementKind::Ashm => "ashm",
            ElementKind::Pashm => "pashm",
            ElementKind::CornerSum => "corner-sum",
            ElementKind::Triangle => "triangle",
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ElementKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('-', "_") == s)
            .ok_or_else(|| Error::Parse(format!("unknown element kind '{s}'")))
    }
}

/// Largest order each enumerator accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub latin: usize,
    pub asm: usize,
    pub ashm: usize,
    pub pashm: usize,
    pub corner_sum: usize,
    pub triangle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { latin: 6, asm: 8, ashm: 5, pashm: 4, corner_sum: CORNER_SUM_MAX_N, triangle: 4 }
    }
}

impl Limits {
    /// Every cap set to `n`.
    pub fn uniform(n: usize) -> Self {
        Limits { latin: n, asm: n, ashm: n, pashm: n, corner_sum: n, triangle: n }
    }

    /// Defaults, or a uniform cap taken from `HYPERLATTICE_MAX_N` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Limits::uniform)
                .map_err(|_| Error::Parse(format!("{MAX_N_ENV} must be a non-negative integer, got '{v}'"))),
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn cap(&self, kind: ElementKind) -> usize {
        match kind {
            ElementKind::Latin => self.latin,
            ElementKind::Asm => self.asm,
            ElementKind::Ashm => self.ashm,
            ElementKind::Pashm => self.pashm,
            ElementKind::CornerSum => self.corner_sum,
            ElementKind::Triangle => self.triangle,
        }
    }

    pub fn check(&self, kind: ElementKind, n: usize) -> Result<()> {
        let cap = self.cap(kind);
        if n > cap {
            return Err(Error::CapExceeded { kind: kind.to_string(), n, cap });
        }
        if n == 0 {
            return Err(Error::Dimension("order must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub limits: Limits,
    /// Count without materializing elements.
    pub count_only: bool,
}

impl EnumOptions {
    pub fn counting() -> Self {
        EnumOptions { count_only: true, ..Default::default() }
    }

    pub fn with_limits(limits: Limits) -> Self {
        EnumOptions { limits, count_only: false }
    }
}

/// The outcome of an enumeration. When elements are kept, `count == elements.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationResult<T> {
    pub kind: ElementKind,
    pub n: usize,
    pub count: u64,
    pub elements: Option<Vec<T>>,
}

impl<T> EnumerationResult<T> {
    pub(crate) fn collected(kind: ElementKind, n: usize, elements: Vec<T>) -> Self {
        EnumerationResult { kind, n, count: elements.len() as u64, elements: Some(elements) }
    }

    pub(crate) fn counted(kind: ElementKind, n: usize, count: u64) -> Self {
        EnumerationResult { kind, n, count, elements: None }
    }

    /// The elements, or an empty list for a count-only run.
    pub fn into_elements(self) -> Vec<T> {
        self.elements.unwrap_or_default()
    }
}
