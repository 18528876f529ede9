//! Grid notation: each cell `(i, j)` lists the nonzero entries of the vertical
//! line `A_{ij*}` as a signed formal sum of plane indices, e.g. `1-2+3`.
//! A coefficient of absolute value greater than one is written by repeating the
//! plane index, so `-1+2+2+2-3` is the line `(-1, 3, -1)`. An all-zero line is `.`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::{check_order, Hypermatrix};
use crate::error::{Error, Result};

/// One nonzero entry of a vertical line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i32,
    pub plane: usize,
}

/// A hypermatrix written cell by cell, each cell's terms in increasing plane order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellFormalSum {
    n: usize,
    cells: Vec<Vec<Term>>,
}

impl CellFormalSum {
    /// Validates plane ranges, nonzero coefficients and strictly increasing planes.
    pub fn new(n: usize, cells: Vec<Vec<Term>>) -> Result<Self> {
        check_order(n)?;
        if cells.len() != n * n {
            return Err(Error::Notation(format!("expected {} cells, got {}", n * n, cells.len())));
        }
        for (idx, cell) in cells.iter().enumerate() {
            let (i, j) = (idx / n + 1, idx % n + 1);
            let mut prev = 0;
            for t in cell {
                if t.plane == 0 || t.plane > n {
                    return Err(Error::Notation(format!("cell ({i},{j}): plane index {} out of range 1..={n}", t.plane)));
                }
                if t.coeff == 0 {
                    return Err(Error::Notation(format!("cell ({i},{j}): zero coefficient on plane {}", t.plane)));
                }
                if t.plane <= prev {
                    return Err(Error::Notation(format!("cell ({i},{j}): planes must be strictly increasing")));
                }
                prev = t.plane;
            }
        }
        Ok(CellFormalSum { n, cells })
    }

    pub fn from_hypermatrix(a: &Hypermatrix) -> Self {
        let n = a.order();
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                cells.push(
                    (1..=n)
                        .filter_map(|k| {
                            let v = a.get(i, j, k);
                            (v != 0).then_some(Term { coeff: v, plane: k })
                        })
                        .collect(),
                );
            }
        }
        CellFormalSum { n, cells }
    }

    pub fn to_hypermatrix(&self) -> Hypermatrix {
        let n = self.n;
        let mut a = Hypermatrix::zeros(n);
        for (idx, cell) in self.cells.iter().enumerate() {
            for t in cell {
                a.set(idx / n + 1, idx % n + 1, t.plane, t.coeff);
            }
        }
        a
    }

    /// Parses `n` lines of `n` whitespace-separated cells.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().collect())
            .collect();
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Notation("grid must have n rows of n cells".into()));
        }
        check_order(n)?;
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                cells.push(parse_cell(cell).map_err(|e| Error::Notation(format!("cell ({},{}): {e}", i + 1, j + 1)))?);
            }
        }
        CellFormalSum::new(n, cells)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cell(&self, i: usize, j: usize) -> &[Term] {
        &self.cells[(i - 1) * self.n + (j - 1)]
    }

    /// Cell strings in row-major order, as nested rows.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.cells.chunks(self.n).map(|row| row.iter().map(|c| format_cell(c)).collect()).collect()
    }

    /// Single-line rendering with rows separated by `/`, for graph labels.
    pub fn compact(&self) -> String {
        self.to_string_rows().iter().map(|r| r.join(" ")).collect::<Vec<_>>().join(" / ")
    }
}

/// Writes a cell as a formal sum; `.` for an empty cell.
pub fn format_cell(terms: &[Term]) -> String {
    let mut out = String::new();
    for t in terms {
        let sign = if t.coeff < 0 { '-' } else { '+' };
        for _ in 0..t.coeff.unsigned_abs() {
            if !(out.is_empty() && sign == '+') {
                out.push(sign);
            }
            out.push_str(&t.plane.to_string());
        }
    }
    if out.is_empty() {
        out.push('.');
    }
    out
}

fn parse_cell(s: &str) -> std::result::Result<Vec<Term>, String> {
    if s == "." {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let mut terms: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let sign = match bytes[pos] {
            b'+' => {
                pos += 1;
                1
            }
            b'-' => {
                pos += 1;
                -1
            }
            _ if pos == 0 => 1,
            other => return Err(format!("unexpected character '{}'", other as char)),
        };
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(format!("missing plane index in '{s}'"));
        }
        let plane: usize = s[start..pos].parse().map_err(|_| format!("bad plane index in '{s}'"))?;
        match terms.last_mut() {
            Some(last) if last.plane == plane => last.coeff += sign,
            Some(last) if last.plane > plane => return Err(format!("planes out of order in '{s}'")),
            _ => terms.push(Term { coeff: sign, plane }),
        }
    }
    if let Some(t) = terms.iter().find(|t| t.coeff == 0) {
        return Err(format!("terms on plane {} cancel to a zero coefficient", t.plane));
    }
    Ok(terms)
}

/// The grid notation of a hypermatrix.
pub fn grid_notation(a: &Hypermatrix) -> CellFormalSum {
    CellFormalSum::from_hypermatrix(a)
}

impl fmt::Display for CellFormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_string_rows();
        let width = rows.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        for row in rows {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_formatting_expands_multiplicities() {
        let t = |coeff, plane| Term { coeff, plane };
        assert_eq!(format_cell(&[t(1, 1), t(-1, 2), t(1, 3)]), "1-2+3");
        assert_eq!(format_cell(&[t(-1, 1), t(3, 2), t(-1, 3)]), "-1+2+2+2-3");
        assert_eq!(format_cell(&[]), ".");
        assert_eq!(parse_cell("-1+2+2+2-3").unwrap(), vec![t(-1, 1), t(3, 2), t(-1, 3)]);
    }

    #[test]
    fn malformed_cells_are_rejected() {
        assert!(CellFormalSum::parse("0 1\n1 2").is_err());
        assert!(CellFormalSum::parse("3 1\n1 2").is_err());
        assert!(CellFormalSum::parse("1+2-2 2\n2 1").is_err());
        assert!(CellFormalSum::parse("2+1 2\n2 1").is_err());
        assert!(CellFormalSum::parse("1 2\n2").is_err());
        assert!(CellFormalSum::new(2, vec![vec![Term { coeff: 0, plane: 1 }], vec![], vec![], vec![]]).is_err());
    }

    #[test]
    fn display_parses_back() {
        let g = CellFormalSum::parse("3 2 1\n2 1-2+3 2\n1 2 3").unwrap();
        assert_eq!(CellFormalSum::parse(&g.to_string()).unwrap(), g);
        assert_eq!(g.compact(), "3 2 1 / 2 1-2+3 2 / 1 2 3");
    }
}
