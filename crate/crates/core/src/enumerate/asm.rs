//! Alternating sign matrices, generated row by row from column partial sums.
//!
//! After `i` rows the column partial sums form a 0/1 vector with `i` ones; the
//! next row is the difference of two consecutive such vectors and must alternate.

use super::{ElementKind, EnumOptions, EnumerationResult};
use crate::array::Matrix;
use crate::error::Result;
use crate::predicates::alternates;

fn rec(n: usize, row: usize, partial: &mut Vec<i32>, rows: &mut Vec<Vec<i32>>, visit: &mut dyn FnMut(&[Vec<i32>])) {
    if row == n {
        visit(rows);
        return;
    }
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != row + 1 {
            continue;
        }
        let next: Vec<i32> = (0..n).map(|j| ((mask >> j) & 1) as i32).collect();
        let diff: Vec<i32> = next.iter().zip(partial.iter()).map(|(a, b)| a - b).collect();
        if !alternates(&diff) {
            continue;
        }
        let saved = std::mem::replace(partial, next);
        rows.push(diff);
        rec(n, row + 1, partial, rows, visit);
        rows.pop();
        *partial = saved;
    }
}

fn for_each_asm(n: usize, visit: &mut dyn FnMut(&[Vec<i32>])) {
    rec(n, 0, &mut vec![0; n], &mut Vec::with_capacity(n), visit);
}

/// Every ASM of order `n`, sorted lexicographically by row-major entries.
pub fn enumerate_asms(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<Matrix>> {
    opts.limits.check(ElementKind::Asm, n)?;
    if opts.count_only {
        let mut count = 0u64;
        for_each_asm(n, &mut |_| count += 1);
        return Ok(EnumerationResult::counted(ElementKind::Asm, n, count));
    }
    let mut out = Vec::new();
    for_each_asm(n, &mut |rows| out.push(Matrix::from_rows(rows).expect("rows have equal length")));
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(EnumerationResult::collected(ElementKind::Asm, n, out))
}

/// An ASM of order at most 8 as bitmasks of its `+1` and `-1` cells
/// (bit `(i-1) * n + (j-1)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct AsmMask {
    pub pos: u64,
    pub neg: u64,
}

impl AsmMask {
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut mask = AsmMask { pos: 0, neg: 0 };
        for (bit, &v) in m.entries().iter().enumerate() {
            match v {
                1 => mask.pos |= 1 << bit,
                -1 => mask.neg |= 1 << bit,
                _ => {}
            }
        }
        mask
    }
}

/// The ASMs of order `n` (at most 8) as masks, in lexicographic matrix order.
pub(crate) fn asm_masks(n: usize) -> Vec<AsmMask> {
    assert!(n <= 8, "mask form holds at most 64 cells");
    let mut out = Vec::new();
    for_each_asm(n, &mut |rows| out.push(Matrix::from_rows(rows).expect("rows have equal length")));
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out.iter().map(AsmMask::from_matrix).collect()
}
