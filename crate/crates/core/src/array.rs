//! Dense integer arrays: matrices, hypermatrices, Latin squares and corner-sum arrays.
//!
//! # Index conventions
//!
//! This is the only place where the mapping between mathematical indices and
//! storage offsets is defined.
//!
//! * [`Matrix`] and [`Hypermatrix`] accessors take 1-based indices, `1..=n`.
//! * [`CornerSumMatrix`], [`CornerSumArray`] and [`CornerSumHypermatrix`]
//!   accessors take indices in `0..=n`; index 0 addresses the zero boundary,
//!   which is stored explicitly.
//! * Storage is a flat `Vec` in row-major order: `i` outermost, then `j`,
//!   then `k`. Hypermatrix entry `(i, j, k)` lives at
//!   `((i - 1) * n + (j - 1)) * n + (k - 1)`; corner-sum entry `(i, j, k)`
//!   lives at `(i * (n + 1) + j) * (n + 1) + k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, LatinViolation, Result};

/// Largest supported order. Corner-sum entries are at most `n^2`.
pub const MAX_ORDER: usize = 64;

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Dimension("order must be at least 1".into()))
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn cube_offset(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!((1..=n).contains(&i) && (1..=n).contains(&j) && (1..=n).contains(&k));
    ((i - 1) * n + (j - 1)) * n + (k - 1)
}

#[inline]
pub(crate) fn corner_offset(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i <= n && j <= n && k <= n);
    let m = n + 1;
    (i * m + j) * m + k
}

/// One of the three coordinate directions of a hypermatrix.
///
/// `I` is the row index, `J` the column index and `K` the plane (symbol) index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    /// Builds the `(i, j, k)` triple whose coordinate along `self` is `x`
    /// and whose remaining two coordinates, in increasing axis order, are `a` and `b`.
    #[inline]
    pub fn place(self, x: usize, a: usize, b: usize) -> (usize, usize, usize) {
        match self {
            Axis::I => (x, a, b),
            Axis::J => (a, x, b),
            Axis::K => (a, b, x),
        }
    }
}

/// A rectangular integer matrix with 1-based indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[i32]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Dimension("matrix rows have unequal lengths".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| i32::from(i == j))
    }

    /// The anti-diagonal permutation matrix `J_n`.
    pub fn anti_identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| i32::from(i + j == n + 1))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix. Panics on a rectangular one.
    pub fn order(&self) -> usize {
        assert!(self.is_square(), "order() called on a {}x{} matrix", self.rows, self.cols);
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i32) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn row(&self, i: usize) -> &[i32] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i32> {
        (1..=self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i32>> {
        (1..=self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[i32] {
        &self.data
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let line: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// An `(rows + 1) x (cols + 1)` grid indexed from 0, holding the corner sums of a matrix.
///
/// Construction does not validate; [`CornerSumMatrix::is_valid`] checks the
/// corner-sum matrix axioms for the square case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerSumMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i32>,
}

impl CornerSumMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CornerSumMatrix { rows, cols, data: vec![0; (rows + 1) * (cols + 1)] }
    }

    /// Builds from `(rows + 1)` rows of `(cols + 1)` entries each, boundary included.
    pub fn from_rows<R: AsRef<[i32]>>(grid: &[R]) -> Result<Self> {
        let m = Matrix::from_rows(grid)?;
        if m.rows == 0 || m.cols == 0 {
            return Err(Error::Dimension("corner-sum grid must be at least 1x1".into()));
        }
        Ok(CornerSumMatrix { rows: m.rows - 1, cols: m.cols - 1, data: m.data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        assert!(i <= self.rows && j <= self.cols);
        self.data[i * (self.cols + 1) + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i32) {
        assert!(i <= self.rows && j <= self.cols);
        self.data[i * (self.cols + 1) + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i32>> {
        self.data.chunks(self.cols + 1).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[i32] {
        &self.data
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("corner-sum matrices differ in shape".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(CornerSumMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn entrywise_max(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i32::max)
    }

    pub fn entrywise_min(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i32::min)
    }

    /// `true` when every entry of `self` is at least the matching entry of `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.data.iter().zip(&other.data).all(|(a, b)| a >= b)
    }

    /// Corner-sum matrix axioms of order `n`: zero first row and column,
    /// last row and column equal to `0..=n`, unit-or-zero steps along rows and columns.
    pub fn is_valid(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        for t in 0..=n {
            let t32 = t as i32;
            if self.get(0, t) != 0 || self.get(t, 0) != 0 || self.get(n, t) != t32 || self.get(t, n) != t32 {
                return false;
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let c = self.get(i, j);
                let up = c - self.get(i - 1, j);
                let left = c - self.get(i, j - 1);
                if !(0..=1).contains(&up) || !(0..=1).contains(&left) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for CornerSumMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A dense `n x n x n` integer hypermatrix with 1-based indexing. Unvalidated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypermatrix {
    n: usize,
    data: Vec<i32>,
}

impl Hypermatrix {
    pub fn zeros(n: usize) -> Self {
        check_order(n).expect("invalid hypermatrix order");
        Hypermatrix { n, data: vec![0; n * n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> i32) -> Self {
        let mut h = Hypermatrix::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    h.data[cube_offset(n, i, j, k)] = f(i, j, k);
                }
            }
        }
        h
    }

    /// Builds from a flat row-major vector of length `n^3`.
    pub fn from_flat(n: usize, data: Vec<i32>) -> Result<Self> {
        check_order(n)?;
        if data.len() != n * n * n {
            return Err(Error::Dimension(format!("expected {} entries, got {}", n * n * n, data.len())));
        }
        Ok(Hypermatrix { n, data })
    }

    /// Builds from nested vectors indexed `[i][j][k]`.
    pub fn from_nested(entries: &[Vec<Vec<i32>>]) -> Result<Self> {
        let n = entries.len();
        check_order(n)?;
        let mut data = Vec::with_capacity(n * n * n);
        for plane in entries {
            if plane.len() != n || plane.iter().any(|line| line.len() != n) {
                return Err(Error::Dimension("hypermatrix is not cubical".into()));
            }
            for line in plane {
                data.extend_from_slice(line);
            }
        }
        Ok(Hypermatrix { n, data })
    }

    /// Stacks `n` matrices of order `n` as the horizontal planes `k = 1..=n`.
    pub fn from_planes(planes: &[Matrix]) -> Result<Self> {
        let n = planes.len();
        check_order(n)?;
        if planes.iter().any(|p| p.rows() != n || p.cols() != n) {
            return Err(Error::Dimension("every plane must be n x n".into()));
        }
        Ok(Hypermatrix::from_fn(n, |i, j, k| planes[k - 1].get(i, j)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i32 {
        self.data[cube_offset(self.n, i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: i32) {
        let n = self.n;
        self.data[cube_offset(n, i, j, k)] = v;
    }

    #[inline]
    pub(crate) fn add_at(&mut self, i: usize, j: usize, k: usize, v: i32) {
        let n = self.n;
        self.data[cube_offset(n, i, j, k)] += v;
    }

    pub fn entries(&self) -> &[i32] {
        &self.data
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<i32>>> {
        let n = self.n;
        self.data.chunks(n * n).map(|plane| plane.chunks(n).map(|l| l.to_vec()).collect()).collect()
    }

    /// The plane obtained by fixing coordinate `axis` at `x`, as a matrix over the
    /// two remaining coordinates in increasing axis order. `plane(Axis::K, k)` is the
    /// horizontal plane `A_{**k}` indexed by `(i, j)`.
    pub fn plane(&self, axis: Axis, x: usize) -> Matrix {
        Matrix::from_fn(self.n, self.n, |a, b| {
            let (i, j, k) = axis.place(x, a, b);
            self.get(i, j, k)
        })
    }

    /// The line running along `axis` with the other two coordinates fixed at `a`, `b`
    /// (increasing axis order). `line(Axis::K, i, j)` is the vertical line `A_{ij*}`,
    /// `line(Axis::J, i, k)` the row `A_{i*k}`, `line(Axis::I, j, k)` the column `A_{*jk}`.
    pub fn line(&self, axis: Axis, a: usize, b: usize) -> Vec<i32> {
        (1..=self.n)
            .map(|x| {
                let (i, j, k) = axis.place(x, a, b);
                self.get(i, j, k)
            })
            .collect()
    }

    /// All `3 n^2` lines, each tagged with its axis and fixed coordinates.
    pub fn lines(&self) -> impl Iterator<Item = (Axis, usize, usize, Vec<i32>)> + '_ {
        let n = self.n;
        Axis::ALL.into_iter().flat_map(move |axis| {
            (1..=n).flat_map(move |a| (1..=n).map(move |b| (axis, a, b, self.line(axis, a, b))))
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(Hypermatrix { n: self.n, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }
}

/// A Latin square of order `n` over the symbols `1..=n`. Validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    /// Validates and wraps a row-major symbol vector.
    pub fn new(n: usize, cells: Vec<u8>) -> Result<Self> {
        check_order(n)?;
        if cells.len() != n * n {
            return Err(Error::Dimension(format!("expected {} cells, got {}", n * n, cells.len())));
        }
        let grid = Matrix { rows: n, cols: n, data: cells.iter().map(|&c| i32::from(c)).collect() };
        match crate::predicates::latin_violation(&grid) {
            Some(v) => Err(Error::NotLatin(v)),
            None => Ok(LatinSquare { n, cells }),
        }
    }

    pub(crate) fn new_unchecked(n: usize, cells: Vec<u8>) -> Self {
        debug_assert!(LatinSquare::new(n, cells.clone()).is_ok());
        LatinSquare { n, cells }
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for r in rows {
            if r.as_ref().len() != n {
                return Err(Error::Dimension("Latin square must be square".into()));
            }
            for &s in r.as_ref() {
                if s == 0 || s > n {
                    return Err(Error::NotLatin(LatinViolation::SymbolOutOfRange {
                        row: cells.len() / n + 1,
                        col: cells.len() % n + 1,
                        symbol: s as i64,
                    }));
                }
                cells.push(s as u8);
            }
        }
        LatinSquare::new(n, cells)
    }

    /// Reads a symbol grid from a [`Matrix`], reporting the first violation.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension("Latin square must be square".into()));
        }
        if let Some(v) = crate::predicates::latin_violation(m) {
            return Err(Error::NotLatin(v));
        }
        LatinSquare::new(m.rows, m.data.iter().map(|&v| v as u8).collect())
    }

    /// The Latin square `L(P)` of a permutation hypermatrix.
    pub fn from_hypermatrix(a: &Hypermatrix) -> Result<Self> {
        if !crate::predicates::is_permutation_hypermatrix(a) {
            return Err(Error::NotLatin(LatinViolation::NotPermutationHypermatrix));
        }
        LatinSquare::from_matrix(&crate::transform::latin_like_square(a))
    }

    /// Parses `n` lines of `n` whitespace-separated symbols.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows = parse_symbol_rows(text)?;
        let as_usize: Vec<Vec<usize>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| if v < 0 { 0 } else { v as usize }).collect())
            .collect();
        LatinSquare::from_rows(&as_usize)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.n + (j - 1)] as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(|r| r.iter().map(|&c| c as usize).collect()).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as i32)
    }

    /// The permutation hypermatrix `H(L)`: entry `(i, j, k)` is 1 exactly when `L_{ij} = k`.
    pub fn to_hypermatrix(&self) -> Hypermatrix {
        Hypermatrix::from_fn(self.n, |i, j, k| i32::from(self.get(i, j) == k))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated integer rows; blank lines and `#` comments are skipped.
pub(crate) fn parse_symbol_rows(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {}: '{}' is not an integer", lineno + 1, t)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// An unvalidated `(n + 1)^3` array indexed from 0, as produced by [`crate::transform::xi`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerSumArray {
    n: usize,
    data: Vec<i32>,
}

impl CornerSumArray {
    pub fn zeros(n: usize) -> Self {
        check_order(n).expect("invalid corner-sum order");
        CornerSumArray { n, data: vec![0; (n + 1).pow(3)] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> i32) -> Self {
        let mut c = CornerSumArray::zeros(n);
        for i in 0..=n {
            for j in 0..=n {
                for k in 0..=n {
                    c.data[corner_offset(n, i, j, k)] = f(i, j, k);
                }
            }
        }
        c
    }

    pub fn from_flat(n: usize, data: Vec<i32>) -> Result<Self> {
        check_order(n)?;
        if data.len() != (n + 1).pow(3) {
            return Err(Error::Dimension(format!("expected {} entries, got {}", (n + 1).pow(3), data.len())));
        }
        Ok(CornerSumArray { n, data })
    }

    /// Builds from nested vectors indexed `[i][j][k]`, each of length `n + 1`.
    pub fn from_nested(entries: &[Vec<Vec<i32>>]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("corner-sum array needs at least 2 entries per side".into()));
        }
        let m = entries.len();
        let mut data = Vec::with_capacity(m * m * m);
        for plane in entries {
            if plane.len() != m || plane.iter().any(|l| l.len() != m) {
                return Err(Error::Dimension("corner-sum array is not cubical".into()));
            }
            for line in plane {
                data.extend_from_slice(line);
            }
        }
        CornerSumArray::from_flat(m - 1, data)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i32 {
        self.data[corner_offset(self.n, i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: i32) {
        let n = self.n;
        self.data[corner_offset(n, i, j, k)] = v;
    }

    pub fn entries(&self) -> &[i32] {
        &self.data
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<i32>>> {
        let m = self.n + 1;
        self.data.chunks(m * m).map(|plane| plane.chunks(m).map(|l| l.to_vec()).collect()).collect()
    }

    /// The `(n + 1) x (n + 1)` slice with the plane index `k` fixed.
    pub fn plane_k(&self, k: usize) -> CornerSumMatrix {
        let n = self.n;
        let mut out = CornerSumMatrix::zeros(n, n);
        for i in 0..=n {
            for j in 0..=n {
                out.set(i, j, self.get(i, j, k));
            }
        }
        out
    }

    /// Sum of all entries, the weight `rho`.
    pub fn total(&self) -> i64 {
        self.data.iter().map(|&v| i64::from(v)).sum()
    }

    /// `true` when every entry is at least the corresponding entry of `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.n == other.n && self.data.iter().zip(&other.data).all(|(a, b)| a >= b)
    }

    pub(crate) fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(CornerSumArray { n: self.n, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }
}

/// A validated corner-sum hypermatrix of order `n`: an element of the lattice `C_n`.
///
/// Boundary: `C_{i,j,0} = C_{i,0,j} = C_{0,i,j} = 0` and
/// `C_{i,j,n} = C_{i,n,j} = C_{n,i,j} = i j`. Steps: in every direction the
/// difference between consecutive planes at position `(i, j)` lies in
/// `max(0, i + j - n) ..= min(i, j)`.
///
/// The derived ordering is lexicographic on the flattened entries, which
/// coincides with lexicographic order on the interior because all elements of
/// one order share the same boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerSumHypermatrix {
    inner: CornerSumArray,
}

impl CornerSumHypermatrix {
    pub fn new(c: CornerSumArray) -> Result<Self> {
        match crate::predicates::corner_sum_violation(&c) {
            Some(msg) => Err(Error::NotCornerSum(msg)),
            None => Ok(CornerSumHypermatrix { inner: c }),
        }
    }

    pub(crate) fn new_unchecked(c: CornerSumArray) -> Self {
        debug_assert!(crate::predicates::is_corner_sum_hypermatrix(&c));
        CornerSumHypermatrix { inner: c }
    }

    /// `Xi(a)` for a hypermatrix in the preimage of `C_n`.
    pub fn from_hypermatrix(a: &Hypermatrix) -> Result<Self> {
        CornerSumHypermatrix::new(crate::transform::xi(a)).map_err(|_| Error::NotInPreimage)
    }

    pub fn order(&self) -> usize {
        self.inner.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> i32 {
        self.inner.get(i, j, k)
    }

    pub fn as_array(&self) -> &CornerSumArray {
        &self.inner
    }

    pub fn into_array(self) -> CornerSumArray {
        self.inner
    }

    pub fn entries(&self) -> &[i32] {
        &self.inner.data
    }

    /// `Xi^{-1}` of this element.
    pub fn to_hypermatrix(&self) -> Hypermatrix {
        crate::transform::xi_inverse(&self.inner).expect("valid corner-sum arrays have zero boundary planes")
    }

    /// The interior entries `(i, j, k) in [1, n-1]^3`, in row-major order.
    pub fn interior(&self) -> Vec<i32> {
        let n = self.order();
        let mut out = Vec::with_capacity((n - 1).pow(3));
        for i in 1..n {
            for j in 1..n {
                for k in 1..n {
                    out.push(self.get(i, j, k));
                }
            }
        }
        out
    }
}

impl TryFrom<CornerSumArray> for CornerSumHypermatrix {
    type Error = Error;
    fn try_from(c: CornerSumArray) -> Result<Self> {
        CornerSumHypermatrix::new(c)
    }
}

impl From<CornerSumHypermatrix> for CornerSumArray {
    fn from(c: CornerSumHypermatrix) -> Self {
        c.inner
    }
}
