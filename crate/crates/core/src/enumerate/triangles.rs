//! Monotone hypertriangles generated directly from the four defining
//! conditions, row by row, with no reference to corner sums.

use super::{ElementKind, EnumOptions, EnumerationResult};
use crate::error::Result;
use crate::triangles::MonotoneHypertriangle;

struct Search {
    n: usize,
    /// `counts[(i * (n + 1) + k) * (n + 1) + j]`: entries `<= j` in row `(i, k)`; zero when `i`, `k` or `j` is 0.
    counts: Vec<i32>,
}

impl Search {
    fn at(&self, i: usize, k: usize, j: usize) -> usize {
        (i * (self.n + 1) + k) * (self.n + 1) + j
    }

    fn bounds(&self, a: usize, b: usize) -> (i32, i32) {
        (((a + b).saturating_sub(self.n)) as i32, a.min(b) as i32)
    }

    /// Fills symbol `j` of row `(i, k)`; rows go plane by plane.
    fn run(&mut self, i: usize, k: usize, j: usize, visit: &mut dyn FnMut(&Search)) {
        let n = self.n;
        if k > n {
            visit(self);
            return;
        }
        if j > n {
            let (ni, nk) = if i == n { (1, k + 1) } else { (i + 1, k) };
            self.run(ni, nk, 1, visit);
            return;
        }
        let before = self.counts[self.at(i, k, j - 1)];
        let row_above = self.counts[self.at(i - 1, k, j)];
        let plane_below = self.counts[self.at(i, k - 1, j)];
        let total = (i * k) as i32;
        let (m_lo, m_hi) = self.bounds(i, k);
        let (r_lo, r_hi) = self.bounds(j, k);
        let (p_lo, p_hi) = self.bounds(i, j);
        for m in m_lo..=m_hi {
            let q = before + m;
            if q > total {
                break;
            }
            // The row must reach `i * k` entries by symbol `n`.
            if total - q > (n - j) as i32 * m_hi || (j == n && q != total) {
                continue;
            }
            let grow_row = q - row_above;
            let grow_plane = q - plane_below;
            if grow_row < r_lo || grow_row > r_hi || grow_plane < p_lo || grow_plane > p_hi {
                continue;
            }
            let idx = self.at(i, k, j);
            self.counts[idx] = q;
            self.run(i, k, j + 1, visit);
        }
        let idx = self.at(i, k, j);
        self.counts[idx] = 0;
    }
}

/// Every monotone hypertriangle of order `n`, sorted by multiplicity table.
pub fn enumerate_monotone_hypertriangles(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<MonotoneHypertriangle>> {
    opts.limits.check(ElementKind::Triangle, n)?;
    let mut search = Search { n, counts: vec![0; (n + 1).pow(3)] };
    let mut count = 0u64;
    let mut out = Vec::new();
    let count_only = opts.count_only;
    search.run(1, 1, 1, &mut |s| {
        count += 1;
        if !count_only {
            let mult = |i: usize, j: usize, k: usize| s.counts[s.at(i, k, j)] - s.counts[s.at(i, k, j - 1)];
            out.push(MonotoneHypertriangle::from_multiplicities(n, mult).expect("search keeps row lengths"));
        }
    });
    if count_only {
        return Ok(EnumerationResult::counted(ElementKind::Triangle, n, count));
    }
    out.sort();
    Ok(EnumerationResult::collected(ElementKind::Triangle, n, out))
}
