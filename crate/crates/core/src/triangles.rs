//! Monotone hypertriangles.
//!
//! A hypertriangle of order `n` has one row for every pair `(i, k)`; row
//! `(i, k)` is a weakly increasing list of `i * k` symbols from `1..=n`.
//! Internally each row is stored as a multiplicity vector: `mult(i, j, k)` is
//! the number of times symbol `j` occurs in row `(i, k)`. The sorted list is a
//! view computed on demand.
//!
//! The map `Delta` sends a hypermatrix `A` to the hypertriangle whose
//! multiplicities are `P(A)_{ijk} = sum_{a <= i, b <= k} A_{a,j,b}`. Writing
//! `Q_{ijk}` for the number of entries `<= j` in row `(i, k)`, one has
//! `Q = Xi(A)`, which is why the four validity conditions mirror the step
//! conditions of corner-sum hypermatrices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::array::{check_order, Hypermatrix, Matrix};
use crate::error::{Error, Result};
use crate::json::Tagged;
use crate::predicates::{is_asm, step_bounds};
use crate::transform::partial_sum_hypermatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneHypertriangle {
    n: usize,
    mult: Vec<u8>,
}

/// The first condition a hypertriangle violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleViolation {
    /// 2, 3 or 4; condition 1 is enforced on construction.
    pub condition: u8,
    pub plane: usize,
    pub row: usize,
    pub symbol: usize,
    pub value: i32,
    pub bounds: (i32, i32),
}

impl fmt::Display for TriangleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} fails in plane {}, row {}, symbol {}: {} outside {}..={}",
            self.condition, self.plane, self.row, self.symbol, self.value, self.bounds.0, self.bounds.1
        )
    }
}

impl MonotoneHypertriangle {
    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.n + (j - 1)) * self.n + (k - 1)
    }

    /// Builds from multiplicities `P_{ijk}`; only condition 1 is checked.
    pub fn from_multiplicities(n: usize, f: impl Fn(usize, usize, usize) -> i32) -> Result<Self> {
        check_order(n)?;
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let v = f(i, j, k);
                    if v < 0 {
                        return Err(Error::Triangle(format!("negative multiplicity {v} of symbol {j} in row ({i},{k})")));
                    }
                    mult.push(u8::try_from(v).map_err(|_| Error::Triangle(format!("multiplicity {v} too large")))?);
                }
            }
        }
        let t = MonotoneHypertriangle { n, mult };
        for i in 1..=n {
            for k in 1..=n {
                let len: usize = (1..=n).map(|j| usize::from(t.mult[t.idx(i, j, k)])).sum();
                if len != i * k {
                    return Err(Error::Triangle(format!("row ({i},{k}) has {len} entries instead of {}", i * k)));
                }
            }
        }
        Ok(t)
    }

    /// Builds from rows, `rows[i-1][k-1]` being row `(i, k)`. Checks condition 1:
    /// lengths, symbol range and weak increase.
    pub fn from_rows(rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mut counts = vec![0i32; n * n * n];
        for (i0, plane_rows) in rows.iter().enumerate() {
            if plane_rows.len() != n {
                return Err(Error::Triangle(format!("row index {} lists {} planes instead of {n}", i0 + 1, plane_rows.len())));
            }
            for (k0, row) in plane_rows.iter().enumerate() {
                let (i, k) = (i0 + 1, k0 + 1);
                if row.len() != i * k {
                    return Err(Error::Triangle(format!("row ({i},{k}) has {} entries instead of {}", row.len(), i * k)));
                }
                if row.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::Triangle(format!("row ({i},{k}) is not weakly increasing")));
                }
                for &s in row {
                    if s == 0 || s > n {
                        return Err(Error::Triangle(format!("symbol {s} in row ({i},{k}) outside 1..={n}")));
                    }
                    counts[(i0 * n + (s - 1)) * n + k0] += 1;
                }
            }
        }
        Self::from_multiplicities(n, |i, j, k| counts[((i - 1) * n + (j - 1)) * n + (k - 1)])
    }

    /// Builds from rows `(i, k)` with `i, k < n` only; the remaining rows are
    /// the forced ones: row `(n, k)` has every symbol `k` times and row `(i, n)`
    /// every symbol `i` times.
    pub fn from_inner_rows(n: usize, inner: &[Vec<Vec<usize>>]) -> Result<Self> {
        if n < 2 || inner.len() != n - 1 || inner.iter().any(|r| r.len() != n - 1) {
            return Err(Error::Triangle(format!("expected {0} x {0} inner rows", n.saturating_sub(1))));
        }
        let forced = |reps: usize| (1..=n).flat_map(|s| std::iter::repeat_n(s, reps)).collect::<Vec<_>>();
        let rows: Vec<Vec<Vec<usize>>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|k| {
                        if i == n {
                            forced(k)
                        } else if k == n {
                            forced(i)
                        } else {
                            inner[i - 1][k - 1].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of times symbol `j` occurs in row `(i, k)`.
    pub fn mult(&self, i: usize, j: usize, k: usize) -> i32 {
        i32::from(self.mult[self.idx(i, j, k)])
    }

    /// Number of entries `<= j` in row `(i, k)`; zero when any index is 0.
    pub fn count_le(&self, i: usize, j: usize, k: usize) -> i32 {
        if i == 0 || k == 0 {
            return 0;
        }
        (1..=j).map(|s| self.mult(i, s, k)).sum()
    }

    /// Row `(i, k)` as a sorted list.
    pub fn row(&self, i: usize, k: usize) -> Vec<usize> {
        (1..=self.n).flat_map(|j| std::iter::repeat_n(j, self.mult(i, j, k) as usize)).collect()
    }

    /// `rows()[i-1][k-1]` is row `(i, k)`.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        (1..=self.n).map(|i| (1..=self.n).map(|k| self.row(i, k)).collect()).collect()
    }

    /// First failure among conditions 2, 3 and 4, in that order.
    pub fn violation(&self) -> Option<TriangleViolation> {
        let n = self.n;
        let fail = |condition, plane, row, symbol, value, bounds: (i32, i32)| {
            (value < bounds.0 || value > bounds.1).then_some(TriangleViolation { condition, plane, row, symbol, value, bounds })
        };
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    if let Some(v) = fail(2, k, i, j, self.mult(i, j, k), step_bounds(n, i, k)) {
                        return Some(v);
                    }
                }
            }
        }
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    let growth = self.count_le(i, j, k) - self.count_le(i - 1, j, k);
                    if let Some(v) = fail(3, k, i, j, growth, step_bounds(n, j, k)) {
                        return Some(v);
                    }
                }
            }
        }
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    let growth = self.count_le(i, j, k) - self.count_le(i, j, k - 1);
                    if let Some(v) = fail(4, k, i, j, growth, step_bounds(n, i, j)) {
                        return Some(v);
                    }
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    /// Centered triangular layout, one block per plane.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for k in 1..=self.n {
            out.push_str(&format!("plane {k}\n"));
            let lines: Vec<String> = (1..=self.n)
                .map(|i| self.row(i, k).iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            let width = lines.iter().map(|l| l.len()).max().unwrap_or(0);
            for line in lines {
                let pad = (width - line.len()) / 2;
                out.push_str(&" ".repeat(pad));
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for MonotoneHypertriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<&MonotoneHypertriangle> for Tagged {
    fn from(t: &MonotoneHypertriangle) -> Self {
        Tagged::Triangle { n: t.order(), entries: t.rows() }
    }
}

impl TryFrom<Tagged> for MonotoneHypertriangle {
    type Error = Error;
    fn try_from(t: Tagged) -> Result<Self> {
        match t {
            Tagged::Triangle { n, entries } => {
                if entries.len() != n {
                    return Err(Error::Dimension(format!("triangle: declared n = {n} but entries imply {}", entries.len())));
                }
                MonotoneHypertriangle::from_rows(&entries)
            }
            other => Err(Error::Parse(format!("expected kind \"triangle\", found \"{}\"", other.kind()))),
        }
    }
}

impl Serialize for MonotoneHypertriangle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Tagged::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonotoneHypertriangle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        MonotoneHypertriangle::try_from(Tagged::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// `Delta(a)`: row `(i, k)` lists symbol `j` with multiplicity `P(a)_{ijk}`.
pub fn to_triangle(a: &Hypermatrix) -> Result<MonotoneHypertriangle> {
    let p = partial_sum_hypermatrix(a);
    let t = MonotoneHypertriangle::from_multiplicities(a.order(), |i, j, k| p.get(i, j, k))?;
    if let Some(v) = t.violation() {
        return Err(Error::Triangle(format!("operand is outside the preimage of C_n ({v})")));
    }
    Ok(t)
}

/// Inverse of [`to_triangle`]: difference the multiplicities along `i` and `k`.
pub fn from_triangle(t: &MonotoneHypertriangle) -> Result<Hypermatrix> {
    if let Some(v) = t.violation() {
        return Err(Error::Triangle(format!("not a monotone hypertriangle: {v}")));
    }
    let p = |i: usize, j: usize, k: usize| if i == 0 || k == 0 { 0 } else { t.mult(i, j, k) };
    Ok(Hypermatrix::from_fn(t.order(), |i, j, k| p(i, j, k) - p(i - 1, j, k) - p(i, j, k - 1) + p(i - 1, j, k - 1)))
}

/// Checks both interlacing chains for every entry `m = M_{i,j,k}`:
/// `M_{i+1, j+max(0,m+k-n), k} <= m <= M_{i+1, j+min(m-1,k), k}` and
/// `M_{i, j+max(0,i+m-n), k+1} <= m <= M_{i, j+min(i,m-1), k+1}`.
pub fn check_interlacing(t: &MonotoneHypertriangle) -> bool {
    let n = t.order();
    let rows = t.rows();
    let row = |i: usize, k: usize| &rows[i - 1][k - 1];
    for i in 1..=n {
        for k in 1..=n {
            for (j0, &m) in row(i, k).iter().enumerate() {
                let j = j0 + 1;
                if i < n {
                    let next = row(i + 1, k);
                    let lo = next[j + (m + k).saturating_sub(n) - 1];
                    let hi = next[j + (m - 1).min(k) - 1];
                    if lo > m || m > hi {
                        return false;
                    }
                }
                if k < n {
                    let next = row(i, k + 1);
                    let lo = next[j + (i + m).saturating_sub(n) - 1];
                    let hi = next[j + i.min(m - 1) - 1];
                    if lo > m || m > hi {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Entrywise comparison of the sorted rows. Under `Delta` this is the Bruhat
/// order: `a <= b` here exactly when `from_triangle(a)` precedes `from_triangle(b)`.
pub fn triangle_leq(a: &MonotoneHypertriangle, b: &MonotoneHypertriangle) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let n = a.order();
    // Entrywise on sorted rows is equivalent to count domination per prefix.
    Ok((1..=n).all(|i| (1..=n).all(|k| (1..=n).all(|j| a.count_le(i, j, k) >= b.count_le(i, j, k)))))
}

/// Classical monotone triangle of an ASM: row `i` lists the columns where the
/// column partial sums through row `i` equal 1.
pub fn asm_to_monotone_triangle(m: &Matrix) -> Result<Vec<Vec<usize>>> {
    if !is_asm(m) {
        return Err(Error::NotAsm);
    }
    let n = m.order();
    let mut partial = vec![0; n];
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        for (j, p) in partial.iter_mut().enumerate() {
            *p += m.get(i, j + 1);
        }
        rows.push((1..=n).filter(|&j| partial[j - 1] == 1).collect());
    }
    Ok(rows)
}

/// Inverse of [`asm_to_monotone_triangle`]. Row `i` must be `i` strictly
/// increasing symbols, rows must interlace, and row `n` must be `1..=n`.
pub fn monotone_triangle_to_asm(rows: &[Vec<usize>]) -> Result<Matrix> {
    let n = rows.len();
    check_order(n)?;
    for (i0, row) in rows.iter().enumerate() {
        if row.len() != i0 + 1 || row.windows(2).any(|w| w[0] >= w[1]) || row.iter().any(|&s| s == 0 || s > n) {
            return Err(Error::Triangle(format!("row {} must hold {} strictly increasing symbols from 1..={n}", i0 + 1, i0 + 1)));
        }
        if i0 > 0 {
            let prev = &rows[i0 - 1];
            let ok = (0..prev.len()).all(|t| row[t] <= prev[t] && prev[t] <= row[t + 1]);
            if !ok {
                return Err(Error::Triangle(format!("rows {} and {} do not interlace", i0, i0 + 1)));
            }
        }
    }
    if rows[n - 1] != (1..=n).collect::<Vec<_>>() {
        return Err(Error::Triangle("last row must be 1..=n".into()));
    }
    let indicator = |i: usize, j: usize| if i == 0 { 0 } else { i32::from(rows[i - 1].contains(&j)) };
    Ok(Matrix::from_fn(n, n, |i, j| indicator(i, j) - indicator(i - 1, j)))
}

/// An order-5 array of rows that satisfies both interlacing chains yet is not a
/// monotone hypertriangle. In plane 2, row 3 has two more entries equal to 1
/// than row 2, while condition 3 allows growth of at most `min(1, 2) = 1`.
pub fn interlacing_near_miss() -> MonotoneHypertriangle {
    // planes[k-1][i-1] is row (i, k) for i, k <= 4.
    let planes: [[&[usize]; 4]; 4] = [
        [&[4], &[3, 5], &[1, 3, 5], &[1, 2, 4, 5]],
        [&[3, 5], &[3, 3, 5, 5], &[1, 1, 3, 3, 5, 5], &[1, 1, 2, 3, 4, 4, 5, 5]],
        [&[2, 3, 5], &[1, 2, 3, 3, 5, 5], &[1, 1, 2, 3, 3, 4, 4, 5, 5], &[1, 1, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5]],
        [
            &[1, 2, 4, 5],
            &[1, 1, 2, 3, 4, 4, 5, 5],
            &[1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 5],
            &[1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5],
        ],
    ];
    let inner: Vec<Vec<Vec<usize>>> = (0..4).map(|i| (0..4).map(|k| planes[k][i].to_vec()).collect()).collect();
    MonotoneHypertriangle::from_inner_rows(5, &inner).expect("fixture rows are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one() {
        let a = Hypermatrix::from_fn(1, |_, _, _| 1);
        let t = to_triangle(&a).unwrap();
        assert_eq!(t.rows(), vec![vec![vec![1]]]);
        assert_eq!(from_triangle(&t).unwrap(), a);
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(MonotoneHypertriangle::from_rows(&[vec![vec![1], vec![2, 1]], vec![vec![1, 2], vec![1, 1, 2, 2]]]).is_err());
        assert!(MonotoneHypertriangle::from_rows(&[vec![vec![1], vec![1]], vec![vec![1, 2], vec![1, 1, 2, 2]]]).is_err());
    }

    #[test]
    fn classical_triangle_of_center_asm() {
        let m = Matrix::from_rows(&[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        let rows = asm_to_monotone_triangle(&m).unwrap();
        assert_eq!(rows, vec![vec![2], vec![1, 3], vec![1, 2, 3]]);
        assert_eq!(monotone_triangle_to_asm(&rows).unwrap(), m);
    }
}
