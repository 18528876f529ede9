//! Depth-first generation of `C_n`.
//!
//! Entries with an index equal to 0 or `n` are fixed by the boundary
//! conditions, so only the `(n-1)^3` inner entries are free. They are filled in
//! `(k, i, j)` order; each new entry is bounded by its already-placed
//! predecessor along every axis and, next to the far boundary, by its fixed
//! successor.

use rayon::prelude::*;

use super::{ElementKind, EnumOptions, EnumerationResult};
use crate::array::{CornerSumArray, CornerSumHypermatrix};
use crate::error::Result;
use crate::predicates::step_bounds;

struct Filler {
    n: usize,
    c: CornerSumArray,
    positions: Vec<(usize, usize, usize)>,
}

impl Filler {
    fn new(n: usize) -> Self {
        let c = CornerSumArray::from_fn(n, |i, j, k| {
            let v = if i == n {
                j * k
            } else if j == n {
                i * k
            } else if k == n {
                i * j
            } else {
                0
            };
            v as i32
        });
        let inner = 1..n;
        let mut positions = Vec::new();
        for k in inner.clone() {
            for i in inner.clone() {
                for j in inner.clone() {
                    positions.push((i, j, k));
                }
            }
        }
        Filler { n, c, positions }
    }

    /// Admissible range for the entry at position `p`, given all earlier positions.
    fn range(&self, p: usize) -> (i32, i32) {
        let (i, j, k) = self.positions[p];
        let n = self.n;
        let c = &self.c;
        let mut lo = i32::MIN;
        let mut hi = i32::MAX;
        let mut clamp = |base: i32, (a, b): (i32, i32)| {
            lo = lo.max(base + a);
            hi = hi.min(base + b);
        };
        clamp(c.get(i, j, k - 1), step_bounds(n, i, j));
        clamp(c.get(i - 1, j, k), step_bounds(n, j, k));
        clamp(c.get(i, j - 1, k), step_bounds(n, i, k));
        let mut clamp_next = |next: i32, (a, b): (i32, i32)| {
            lo = lo.max(next - b);
            hi = hi.min(next - a);
        };
        if k + 1 == n {
            clamp_next(c.get(i, j, n), step_bounds(n, i, j));
        }
        if i + 1 == n {
            clamp_next(c.get(n, j, k), step_bounds(n, j, k));
        }
        if j + 1 == n {
            clamp_next(c.get(i, n, k), step_bounds(n, i, k));
        }
        (lo, hi)
    }

    fn run(&mut self, p: usize, visit: &mut dyn FnMut(&CornerSumArray)) {
        if p == self.positions.len() {
            visit(&self.c);
            return;
        }
        let (lo, hi) = self.range(p);
        let (i, j, k) = self.positions[p];
        for v in lo..=hi {
            self.c.set(i, j, k, v);
            self.run(p + 1, visit);
        }
        self.c.set(i, j, k, 0);
    }

    /// All consistent assignments of the first `depth` positions.
    fn prefixes(&mut self, depth: usize) -> Vec<Vec<i32>> {
        fn rec(f: &mut Filler, p: usize, depth: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
            if p == depth {
                out.push(cur.clone());
                return;
            }
            let (lo, hi) = f.range(p);
            let (i, j, k) = f.positions[p];
            for v in lo..=hi {
                f.c.set(i, j, k, v);
                cur.push(v);
                rec(f, p + 1, depth, cur, out);
                cur.pop();
            }
            f.c.set(i, j, k, 0);
        }
        let mut out = Vec::new();
        rec(self, 0, depth, &mut Vec::new(), &mut out);
        out
    }
}

/// Every corner-sum hypermatrix of order `n`, sorted lexicographically by entries.
pub fn enumerate_corner_sum(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<CornerSumHypermatrix>> {
    opts.limits.check(ElementKind::CornerSum, n)?;
    let mut root = Filler::new(n);
    let depth = root.positions.len().min(4);
    let prefixes = root.prefixes(depth);
    let subtree = |prefix: &Vec<i32>, visit: &mut dyn FnMut(&CornerSumArray)| {
        let mut f = Filler::new(n);
        for (p, &v) in prefix.iter().enumerate() {
            let (i, j, k) = f.positions[p];
            f.c.set(i, j, k, v);
        }
        f.run(prefix.len(), visit);
    };
    if opts.count_only {
        let count = prefixes
            .par_iter()
            .map(|prefix| {
                let mut count = 0u64;
                subtree(prefix, &mut |_| count += 1);
                count
            })
            .sum();
        return Ok(EnumerationResult::counted(ElementKind::CornerSum, n, count));
    }
    let mut all: Vec<CornerSumHypermatrix> = prefixes
        .par_iter()
        .flat_map_iter(|prefix| {
            let mut out = Vec::new();
            subtree(prefix, &mut |c| out.push(CornerSumHypermatrix::new_unchecked(c.clone())));
            out
        })
        .collect();
    all.par_sort();
    Ok(EnumerationResult::collected(ElementKind::CornerSum, n, all))
}
