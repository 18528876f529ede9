//! Validity predicates for every object class: Latin squares, ASMs,
//! permutation matrices, ASHMs, PASHMs, permutation hypermatrices and
//! corner-sum hypermatrices, plus the advisory partial-sum bounds.

use crate::array::{Axis, CornerSumArray, Hypermatrix, Matrix};
use crate::error::LatinViolation;
use crate::transform::sigma;

/// First reason a symbol grid fails to be a Latin square over `1..=n`, scanning
/// row-major. `None` when it is Latin.
pub fn latin_violation(g: &Matrix) -> Option<LatinViolation> {
    if !g.is_square() {
        return Some(LatinViolation::NotSquare);
    }
    let n = g.rows();
    for i in 1..=n {
        for j in 1..=n {
            let s = g.get(i, j);
            if s < 1 || s as usize > n {
                return Some(LatinViolation::SymbolOutOfRange { row: i, col: j, symbol: i64::from(s) });
            }
        }
    }
    for i in 1..=n {
        let mut seen = vec![0usize; n + 1];
        for j in 1..=n {
            let s = g.get(i, j) as usize;
            if seen[s] != 0 {
                return Some(LatinViolation::RowRepeat { row: i, cols: (seen[s], j), symbol: s });
            }
            seen[s] = j;
        }
    }
    for j in 1..=n {
        let mut seen = vec![0usize; n + 1];
        for i in 1..=n {
            let s = g.get(i, j) as usize;
            if seen[s] != 0 {
                return Some(LatinViolation::ColumnRepeat { col: j, rows: (seen[s], i), symbol: s });
            }
            seen[s] = i;
        }
    }
    None
}

pub fn is_latin(g: &Matrix) -> bool {
    latin_violation(g).is_none()
}

/// Nonzero entries are `+1, -1, +1, ..., +1`: every entry is in `{-1, 0, 1}`
/// and the running sums stay in `{0, 1}`, ending at 1.
pub fn alternates(line: &[i32]) -> bool {
    let mut s = 0;
    for &v in line {
        if !(-1..=1).contains(&v) {
            return false;
        }
        s += v;
        if !(0..=1).contains(&s) {
            return false;
        }
    }
    s == 1
}

pub fn is_asm(m: &Matrix) -> bool {
    m.is_square()
        && (1..=m.rows()).all(|i| alternates(m.row(i)))
        && (1..=m.cols()).all(|j| alternates(&m.column(j)))
}

pub fn is_permutation_matrix(m: &Matrix) -> bool {
    m.entries().iter().all(|&v| v == 0 || v == 1) && is_asm(m)
}

/// Alternation along every row, column and vertical line.
pub fn is_ashm(a: &Hypermatrix) -> bool {
    a.lines().all(|(_, _, _, line)| alternates(&line))
}

/// Every horizontal plane is an ASM and the planes sum to the all-ones matrix.
pub fn is_pashm(a: &Hypermatrix) -> bool {
    let n = a.order();
    (1..=n).all(|k| is_asm(&a.plane(Axis::K, k)))
        && (1..=n).all(|i| (1..=n).all(|j| a.line(Axis::K, i, j).iter().sum::<i32>() == 1))
}

/// 0/1 entries with exactly one 1 on every line.
pub fn is_permutation_hypermatrix(a: &Hypermatrix) -> bool {
    a.entries().iter().all(|&v| v == 0 || v == 1) && all_line_sums_one(a)
}

pub fn all_line_sums_one(a: &Hypermatrix) -> bool {
    a.lines().all(|(_, _, _, line)| line.iter().sum::<i32>() == 1)
}

#[inline]
pub(crate) fn step_bounds(n: usize, i: usize, j: usize) -> (i32, i32) {
    let lo = (i + j).saturating_sub(n) as i32;
    let hi = i.min(j) as i32;
    (lo, hi)
}

/// First violated boundary or step condition of a corner-sum hypermatrix, if any.
pub fn corner_sum_violation(c: &CornerSumArray) -> Option<String> {
    let n = c.order();
    for a in 0..=n {
        for b in 0..=n {
            let ab = (a * b) as i32;
            for (pos, want) in [
                ((a, b, 0), 0),
                ((a, 0, b), 0),
                ((0, a, b), 0),
                ((a, b, n), ab),
                ((a, n, b), ab),
                ((n, a, b), ab),
            ] {
                if c.get(pos.0, pos.1, pos.2) != want {
                    return Some(format!("boundary entry {pos:?} is {} instead of {want}", c.get(pos.0, pos.1, pos.2)));
                }
            }
        }
    }
    for a in 0..=n {
        for b in 0..=n {
            let (lo, hi) = step_bounds(n, a, b);
            for t in 1..=n {
                for (axis, hi_pos, lo_pos) in [
                    ("k", (a, b, t), (a, b, t - 1)),
                    ("j", (a, t, b), (a, t - 1, b)),
                    ("i", (t, a, b), (t - 1, a, b)),
                ] {
                    let d = c.get(hi_pos.0, hi_pos.1, hi_pos.2) - c.get(lo_pos.0, lo_pos.1, lo_pos.2);
                    if d < lo || d > hi {
                        return Some(format!(
                            "step along {axis} into {hi_pos:?} is {d}, outside {lo}..={hi}"
                        ));
                    }
                }
            }
        }
    }
    None
}

pub fn is_corner_sum_hypermatrix(c: &CornerSumArray) -> bool {
    corner_sum_violation(c).is_none()
}

/// Plane-wise test for membership of `a` in the preimage of `C_n`: every plane
/// `P`, in each of the three directions, satisfies `Sigma(J_n) <= Sigma(P) <= Sigma(I_n)`
/// entrywise, where `Sigma(J_n)_{ab} = max(0, a + b - n)` and `Sigma(I_n)_{ab} = min(a, b)`.
pub fn is_in_xi_preimage(a: &Hypermatrix) -> bool {
    let n = a.order();
    Axis::ALL.into_iter().all(|axis| {
        (1..=n).all(|x| {
            let s = sigma(&a.plane(axis, x));
            (1..=n).all(|p| {
                (1..=n).all(|q| {
                    let (lo, hi) = step_bounds(n, p, q);
                    (lo..=hi).contains(&s.get(p, q))
                })
            })
        })
    })
}

/// Advisory necessary condition for membership in the preimage of `C_n`: every
/// prefix sum and every suffix sum along every line with fixed coordinates `(a, b)`
/// lies in `[1 - m, m]` with `m = min(a, b, n - a + 1, n - b + 1)`.
///
/// Passing this check does not imply membership.
pub fn check_partial_sum_bounds(a: &Hypermatrix) -> bool {
    let n = a.order();
    a.lines().all(|(_, p, q, line)| {
        let m = p.min(q).min(n - p + 1).min(n - q + 1) as i32;
        let ok = |s: i32| (1 - m..=m).contains(&s);
        let mut prefix = 0;
        let mut suffix = 0;
        (0..n).all(|x| {
            prefix += line[x];
            suffix += line[n - 1 - x];
            ok(prefix) && ok(suffix)
        })
    })
}

/// The three mixed second differences of a corner-sum array, each required to lie
/// in `{0, 1}` for an ASHM. Index 0 differences in `(i, j)` at fixed `k` (vertical
/// partial sums), index 1 in `(i, k)` at fixed `j` (row partial sums), index 2 in
/// `(j, k)` at fixed `i` (column partial sums).
pub fn ashm_difference_conditions(c: &CornerSumArray) -> [bool; 3] {
    let n = c.order();
    let mut ok = [true; 3];
    let unit = |v: i32| v == 0 || v == 1;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let x = c.get(i, j, k);
                ok[0] &= unit(x - c.get(i - 1, j, k) - c.get(i, j - 1, k) + c.get(i - 1, j - 1, k));
                ok[1] &= unit(x - c.get(i - 1, j, k) - c.get(i, j, k - 1) + c.get(i - 1, j, k - 1));
                ok[2] &= unit(x - c.get(i, j - 1, k) - c.get(i, j, k - 1) + c.get(i, j - 1, k - 1));
            }
        }
    }
    ok
}
