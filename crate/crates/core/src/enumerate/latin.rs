//! Latin squares by row-major backtracking with row and column bitmasks.

use rayon::prelude::*;

use super::{ElementKind, EnumOptions, EnumerationResult};
use crate::array::LatinSquare;
use crate::error::Result;

struct Search {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u128>,
    col_used: Vec<u128>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search { n, cells: vec![0; n * n], row_used: vec![0; n], col_used: vec![0; n] }
    }

    fn place(&mut self, pos: usize, s: usize) {
        let (r, c) = (pos / self.n, pos % self.n);
        self.cells[pos] = s as u8;
        self.row_used[r] |= 1u128 << s;
        self.col_used[c] |= 1u128 << s;
    }

    fn unplace(&mut self, pos: usize, s: usize) {
        let (r, c) = (pos / self.n, pos % self.n);
        self.row_used[r] &= !(1u128 << s);
        self.col_used[c] &= !(1u128 << s);
    }

    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[u8])) {
        if pos == self.n * self.n {
            visit(&self.cells);
            return;
        }
        let (r, c) = (pos / self.n, pos % self.n);
        let used = self.row_used[r] | self.col_used[c];
        for s in 1..=self.n {
            if used & (1u128 << s) == 0 {
                self.place(pos, s);
                self.run(pos + 1, visit);
                self.unplace(pos, s);
            }
        }
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, cur: &mut Vec<u8>, used: u128, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for s in 1..=n {
            if used & (1u128 << s) == 0 {
                cur.push(s as u8);
                rec(n, cur, used | (1u128 << s), out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Every Latin square of order `n`, in lexicographic order of the row-major
/// cell sequence. Work is split across threads by first row.
pub fn enumerate_latin(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<LatinSquare>> {
    opts.limits.check(ElementKind::Latin, n)?;
    let first_rows = permutations(n);
    let subtree = |first: &Vec<u8>, visit: &mut dyn FnMut(&[u8])| {
        let mut s = Search::new(n);
        for (c, &sym) in first.iter().enumerate() {
            s.place(c, usize::from(sym));
        }
        s.run(n, visit);
    };
    if opts.count_only {
        let count = first_rows
            .par_iter()
            .map(|first| {
                let mut count = 0u64;
                subtree(first, &mut |_| count += 1);
                count
            })
            .sum();
        return Ok(EnumerationResult::counted(ElementKind::Latin, n, count));
    }
    let parts: Vec<Vec<LatinSquare>> = first_rows
        .par_iter()
        .map(|first| {
            let mut out = Vec::new();
            subtree(first, &mut |cells| out.push(LatinSquare::new_unchecked(n, cells.to_vec())));
            out
        })
        .collect();
    Ok(EnumerationResult::collected(ElementKind::Latin, n, parts.into_iter().flatten().collect()))
}
