//! The Bruhat order: `a` precedes `b` when `a` is obtained from `b` by adding
//! positive T-blocks, equivalently when `Xi(a) >= Xi(b)` entrywise.

use std::borrow::Cow;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::array::{Axis, CornerSumArray, CornerSumHypermatrix, Hypermatrix, LatinSquare, Matrix};
use crate::enumerate::{enumerate_latin, ElementKind, EnumOptions, Limits};
use crate::error::{Error, Result};
use crate::predicates::is_in_xi_preimage;
use crate::transform::{sigma, xi};

/// A signed T-block on the eight corners of the box `i.0..i.1 x j.0..j.1 x k.0..k.1`.
///
/// The entry at corner `(i_a, j_b, k_c)` with `a, b, c in {0, 1}` is
/// `sign * (-1)^(a + b + c)`, so a positive block has `+1` at its low corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TBlock3D {
    pub i: (usize, usize),
    pub j: (usize, usize),
    pub k: (usize, usize),
    pub sign: i32,
}

impl TBlock3D {
    pub fn new(i: (usize, usize), j: (usize, usize), k: (usize, usize), sign: i32) -> Result<Self> {
        for (name, (lo, hi)) in [("i", i), ("j", j), ("k", k)] {
            if lo == 0 || lo >= hi {
                return Err(Error::TBlock(format!("{name} corners must satisfy 1 <= {name}1 < {name}2, got ({lo},{hi})")));
            }
        }
        if sign != 1 && sign != -1 {
            return Err(Error::TBlock(format!("sign must be +1 or -1, got {sign}")));
        }
        Ok(TBlock3D { i, j, k, sign })
    }

    /// The positive contiguous block whose low corner is `(i, j, k)`.
    pub fn contiguous(i: usize, j: usize, k: usize) -> Self {
        assert!(i >= 1 && j >= 1 && k >= 1);
        TBlock3D { i: (i, i + 1), j: (j, j + 1), k: (k, k + 1), sign: 1 }
    }

    pub fn is_contiguous(&self) -> bool {
        self.i.1 == self.i.0 + 1 && self.j.1 == self.j.0 + 1 && self.k.1 == self.k.0 + 1
    }

    pub fn negated(&self) -> Self {
        TBlock3D { sign: -self.sign, ..*self }
    }

    pub fn low_corner(&self) -> (usize, usize, usize) {
        (self.i.0, self.j.0, self.k.0)
    }

    /// Largest corner index, i.e. the minimum order the block fits in.
    pub fn extent(&self) -> usize {
        self.i.1.max(self.j.1).max(self.k.1)
    }

    /// The eight corners with their signed values.
    pub fn corners(&self) -> [((usize, usize, usize), i32); 8] {
        let mut out = [((0, 0, 0), 0); 8];
        let mut idx = 0;
        for (a, i) in [self.i.0, self.i.1].into_iter().enumerate() {
            for (b, j) in [self.j.0, self.j.1].into_iter().enumerate() {
                for (c, k) in [self.k.0, self.k.1].into_iter().enumerate() {
                    let parity = if (a + b + c) % 2 == 0 { 1 } else { -1 };
                    out[idx] = ((i, j, k), self.sign * parity);
                    idx += 1;
                }
            }
        }
        out
    }

    /// The block as an order-`n` hypermatrix.
    pub fn pattern(&self, n: usize) -> Result<Hypermatrix> {
        apply_tblock(&Hypermatrix::zeros(n), self)
    }
}

/// `a` plus the pattern of `t`.
pub fn apply_tblock(a: &Hypermatrix, t: &TBlock3D) -> Result<Hypermatrix> {
    if t.extent() > a.order() {
        return Err(Error::IndexOutOfRange(format!("T-block reaches index {} in an order-{} hypermatrix", t.extent(), a.order())));
    }
    let mut out = a.clone();
    for ((i, j, k), v) in t.corners() {
        out.add_at(i, j, k, v);
    }
    Ok(out)
}

/// Splits a T-block into contiguous blocks of the same sign.
///
/// The largest gap (ties resolved in axis order i, j, k) is shortened by one,
/// producing the block with the shortened range and the block spanning the
/// last unit step; both are decomposed recursively. A block with gaps
/// `(g_i, g_j, g_k)` yields `g_i * g_j * g_k` contiguous blocks.
pub fn decompose_tblock(t: &TBlock3D) -> Vec<TBlock3D> {
    let mut out = Vec::new();
    decompose_into(*t, &mut out);
    out
}

fn decompose_into(t: TBlock3D, out: &mut Vec<TBlock3D>) {
    let gaps = [t.i.1 - t.i.0, t.j.1 - t.j.0, t.k.1 - t.k.0];
    let widest = (0..3).max_by_key(|&a| (gaps[a], std::cmp::Reverse(a))).unwrap();
    if gaps[widest] == 1 {
        out.push(t);
        return;
    }
    let split = |(lo, hi): (usize, usize)| ((lo, hi - 1), (hi - 1, hi));
    let (mut shrunk, mut boundary) = (t, t);
    match widest {
        0 => (shrunk.i, boundary.i) = split(t.i),
        1 => (shrunk.j, boundary.j) = split(t.j),
        _ => (shrunk.k, boundary.k) = split(t.k),
    }
    decompose_into(shrunk, out);
    decompose_into(boundary, out);
}

/// Greedily merges blocks of equal sign that agree on two ranges and abut on the third.
/// The pattern sum is unchanged.
pub fn merge_tblocks(blocks: &[TBlock3D]) -> Vec<TBlock3D> {
    let mut blocks = blocks.to_vec();
    'outer: loop {
        for a in 0..blocks.len() {
            for b in 0..blocks.len() {
                if a == b {
                    continue;
                }
                if let Some(m) = merge_pair(&blocks[a], &blocks[b]) {
                    let (lo, hi) = (a.min(b), a.max(b));
                    blocks.remove(hi);
                    blocks[lo] = m;
                    continue 'outer;
                }
            }
        }
        return blocks;
    }
}

fn merge_pair(x: &TBlock3D, y: &TBlock3D) -> Option<TBlock3D> {
    if x.sign != y.sign {
        return None;
    }
    if x.j == y.j && x.k == y.k && x.i.1 == y.i.0 {
        return Some(TBlock3D { i: (x.i.0, y.i.1), ..*x });
    }
    if x.i == y.i && x.k == y.k && x.j.1 == y.j.0 {
        return Some(TBlock3D { j: (x.j.0, y.j.1), ..*x });
    }
    if x.i == y.i && x.j == y.j && x.k.1 == y.k.0 {
        return Some(TBlock3D { k: (x.k.0, y.k.1), ..*x });
    }
    None
}

/// Anything that can be compared in the Bruhat order through its corner sums.
pub trait BruhatOperand {
    fn corner_sum(&self) -> Result<Cow<'_, CornerSumHypermatrix>>;
}

impl BruhatOperand for CornerSumHypermatrix {
    fn corner_sum(&self) -> Result<Cow<'_, CornerSumHypermatrix>> {
        Ok(Cow::Borrowed(self))
    }
}

impl BruhatOperand for Hypermatrix {
    fn corner_sum(&self) -> Result<Cow<'_, CornerSumHypermatrix>> {
        CornerSumHypermatrix::from_hypermatrix(self).map(Cow::Owned)
    }
}

impl BruhatOperand for LatinSquare {
    fn corner_sum(&self) -> Result<Cow<'_, CornerSumHypermatrix>> {
        Ok(Cow::Owned(CornerSumHypermatrix::new_unchecked(xi(&self.to_hypermatrix()))))
    }
}

/// `a` precedes `b` in the Bruhat order: `Xi(a) >= Xi(b)` entrywise.
pub fn bruhat_leq<T: BruhatOperand + ?Sized>(a: &T, b: &T) -> Result<bool> {
    let (ca, cb) = (a.corner_sum()?, b.corner_sum()?);
    if ca.order() != cb.order() {
        return Err(Error::OrderMismatch { left: ca.order(), right: cb.order() });
    }
    Ok(ca.as_array().dominates(cb.as_array()))
}

/// `a` is covered by `b` in `C_n`: the corner sums differ in exactly one entry, by `+1` in `a`.
pub fn covers_in_lattice(a: &CornerSumHypermatrix, b: &CornerSumHypermatrix) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let mut diffs = a.entries().iter().zip(b.entries()).map(|(x, y)| x - y).filter(|&d| d != 0);
    Ok(diffs.next() == Some(1) && diffs.next().is_none())
}

/// Largest order at which [`covers_in_latin_poset`] will enumerate the Latin squares.
pub const LATIN_COVER_MAX_N: usize = 5;

/// `l1` is covered by `l2` among Latin squares: `l1` strictly precedes `l2` and no
/// Latin square lies strictly between them. Decided by scanning every Latin square
/// of the order, so it is limited by `limits` and by [`LATIN_COVER_MAX_N`].
pub fn covers_in_latin_poset(l1: &LatinSquare, l2: &LatinSquare, limits: &Limits) -> Result<bool> {
    let n = l1.order();
    if l2.order() != n {
        return Err(Error::OrderMismatch { left: n, right: l2.order() });
    }
    let cap = limits.cap(ElementKind::Latin).min(LATIN_COVER_MAX_N);
    if n > cap {
        return Err(Error::CapExceeded { kind: ElementKind::Latin.to_string(), n, cap });
    }
    let (c1, c2) = (xi(&l1.to_hypermatrix()), xi(&l2.to_hypermatrix()));
    if c1 == c2 || !c1.dominates(&c2) {
        return Ok(false);
    }
    let squares = enumerate_latin(n, &EnumOptions::with_limits(*limits))?.into_elements();
    Ok(!squares.iter().any(|l| {
        let c = xi(&l.to_hypermatrix());
        c != c1 && c != c2 && c1.dominates(&c) && c.dominates(&c2)
    }))
}

/// A sequence of contiguous positive T-blocks leading from `upper` down to `lower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TBlockWitness {
    /// Whether `lower` was reached.
    pub reachable: bool,
    /// Contiguous blocks in application order.
    pub steps: Vec<TBlock3D>,
    /// Whether every intermediate hypermatrix stayed in the preimage of `C_n`.
    pub intermediates_valid: bool,
}

/// Greedy witness: starting from `upper`, repeatedly add the contiguous positive
/// T-block whose low corner is the lexicographically smallest `(i, j, k)` where
/// `Xi(lower) - Xi(current)` is positive, recomputing `Xi` from the current
/// hypermatrix each step. Fails as soon as a deficit is negative or sits on the
/// boundary. Intermediate validity is recorded but not required.
pub fn greedy_tblock_witness(lower: &Hypermatrix, upper: &Hypermatrix) -> Result<TBlockWitness> {
    let n = lower.order();
    if upper.order() != n {
        return Err(Error::OrderMismatch { left: n, right: upper.order() });
    }
    let target = xi(lower);
    let mut current = upper.clone();
    let mut steps = Vec::new();
    let mut intermediates_valid = true;
    loop {
        let deficit = target.sub(&xi(&current))?;
        if deficit.entries().iter().any(|&d| d < 0) {
            return Ok(TBlockWitness { reachable: false, steps, intermediates_valid });
        }
        let Some(pos) = first_positive(&deficit) else {
            return Ok(TBlockWitness { reachable: current == *lower, steps, intermediates_valid });
        };
        if pos.0 >= n || pos.1 >= n || pos.2 >= n {
            return Ok(TBlockWitness { reachable: false, steps, intermediates_valid });
        }
        let t = TBlock3D::contiguous(pos.0, pos.1, pos.2);
        current = apply_tblock(&current, &t)?;
        steps.push(t);
        if current != *lower && !is_in_xi_preimage(&current) {
            intermediates_valid = false;
        }
    }
}

fn first_positive(c: &CornerSumArray) -> Option<(usize, usize, usize)> {
    let n = c.order();
    for i in 0..=n {
        for j in 0..=n {
            for k in 0..=n {
                if c.get(i, j, k) > 0 {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Cells `(i, j)` of a Latin square, with the symbol counts `X[i, j, k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subarray {
    host: LatinSquare,
    positions: BTreeSet<(usize, usize)>,
}

impl Subarray {
    pub fn new(host: LatinSquare, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = host.order();
        let positions: BTreeSet<_> = positions.into_iter().collect();
        if let Some(p) = positions.iter().find(|&&(i, j)| i == 0 || j == 0 || i > n || j > n) {
            return Err(Error::IndexOutOfRange(format!("cell {p:?} outside an order-{n} square")));
        }
        Ok(Subarray { host, positions })
    }

    /// The cells on which two Latin squares of equal order differ, as subarrays of each.
    pub fn differing(l1: &LatinSquare, l2: &LatinSquare) -> Result<(Subarray, Subarray)> {
        if l1.order() != l2.order() {
            return Err(Error::OrderMismatch { left: l1.order(), right: l2.order() });
        }
        let n = l1.order();
        let cells: Vec<_> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| l1.get(i, j) != l2.get(i, j))
            .collect();
        Ok((Subarray::new(l1.clone(), cells.clone())?, Subarray::new(l2.clone(), cells)?))
    }

    pub fn host(&self) -> &LatinSquare {
        &self.host
    }

    pub fn positions(&self) -> &BTreeSet<(usize, usize)> {
        &self.positions
    }

    /// The multiset of symbols at the positions, sorted.
    pub fn symbols(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.positions.iter().map(|&(i, j)| self.host.get(i, j)).collect();
        s.sort_unstable();
        s
    }

    fn row_symbols(&self, r: usize) -> Vec<usize> {
        let mut s: Vec<usize> =
            self.positions.iter().filter(|p| p.0 == r).map(|&(i, j)| self.host.get(i, j)).collect();
        s.sort_unstable();
        s
    }

    fn column_symbols(&self, c: usize) -> Vec<usize> {
        let mut s: Vec<usize> =
            self.positions.iter().filter(|p| p.1 == c).map(|&(i, j)| self.host.get(i, j)).collect();
        s.sort_unstable();
        s
    }
}

/// `X[i, j, k]`: the number of positions `(a, b)` with `a <= i`, `b <= j` holding a symbol `<= k`.
pub fn subarray_count(x: &Subarray, i: usize, j: usize, k: usize) -> usize {
    x.positions.iter().filter(|&&(a, b)| a <= i && b <= j && x.host.get(a, b) <= k).count()
}

/// `y` is a decreasing replacement for `x`: same positions, the same symbols in
/// every row and column, and `y[i, j, k] >= x[i, j, k]` for every position
/// `(i, j)` and every symbol `k` of `x`.
///
/// Restricting the count comparison to positions of `x` makes this weaker than
/// the order itself. The cyclic square `123/231/312` passes as a decreasing
/// replacement of `213/132/321` on their six differing cells, yet its corner sum
/// is smaller at `(2, 2, 1)`, a cell outside the subarray. Use
/// [`is_decreasing_replacement_everywhere`] for the exact criterion.
pub fn is_decreasing_replacement(x: &Subarray, y: &Subarray) -> bool {
    same_lines(x, y) && {
        let mut syms = x.symbols();
        syms.dedup();
        x.positions
            .iter()
            .all(|&(i, j)| syms.iter().all(|&k| subarray_count(y, i, j, k) >= subarray_count(x, i, j, k)))
    }
}

/// Like [`is_decreasing_replacement`], but compares `X[i, j, k]` at every cell
/// `(i, j)` and every symbol `k` of the square. For the differing subarrays of
/// two Latin squares this holds exactly when the first precedes the second.
pub fn is_decreasing_replacement_everywhere(x: &Subarray, y: &Subarray) -> bool {
    let n = x.host.order();
    same_lines(x, y)
        && (1..=n).all(|i| (1..=n).all(|j| (1..=n).all(|k| subarray_count(y, i, j, k) >= subarray_count(x, i, j, k))))
}

fn same_lines(x: &Subarray, y: &Subarray) -> bool {
    if x.host.order() != y.host.order() || x.positions != y.positions {
        return false;
    }
    let n = x.host.order();
    (1..=n).all(|r| x.row_symbols(r) == y.row_symbols(r)) && (1..=n).all(|c| x.column_symbols(c) == y.column_symbols(c))
}

/// An intercalate: rows `r1 < r2`, columns `c1 < c2`, symbols `a < b` forming a 2x2 Latin subsquare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Intercalate {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub symbols: (usize, usize),
    /// The top-left cell holds the larger symbol, so the switch moves down in the order.
    pub decreasing: bool,
}

pub fn find_intercalates(l: &LatinSquare) -> Vec<Intercalate> {
    let n = l.order();
    let mut out = Vec::new();
    for r1 in 1..=n {
        for r2 in r1 + 1..=n {
            for c1 in 1..=n {
                for c2 in c1 + 1..=n {
                    let (x, y) = (l.get(r1, c1), l.get(r1, c2));
                    if l.get(r2, c1) == y && l.get(r2, c2) == x {
                        out.push(Intercalate {
                            rows: (r1, r2),
                            cols: (c1, c2),
                            symbols: (x.min(y), x.max(y)),
                            decreasing: x > y,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Which kind of line a cycle switch exchanges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Row,
    Col,
    Symbol,
}

impl LineKind {
    pub const ALL: [LineKind; 3] = [LineKind::Row, LineKind::Col, LineKind::Symbol];
}

/// The outcome of a cycle switch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSwitch {
    pub square: LatinSquare,
    /// After the switch, the partial permutation of line `p` on the switched positions
    /// strictly dominates that of line `q` in corner sums, i.e. precedes it in the
    /// two-dimensional order. Such a switch moves down.
    pub decreasing: bool,
}

/// Triples `(line, position, value)` of a Latin square seen along `kind`:
/// rows give `(row, col, sym)`, columns `(col, row, sym)`, symbols `(sym, row, col)`.
fn line_map(l: &LatinSquare, kind: LineKind, line: usize) -> Vec<usize> {
    let n = l.order();
    (1..=n)
        .map(|pos| match kind {
            LineKind::Row => l.get(line, pos),
            LineKind::Col => l.get(pos, line),
            LineKind::Symbol => (1..=n).find(|&c| l.get(pos, c) == line).expect("Latin row holds every symbol"),
        })
        .collect()
}

fn cell_of(kind: LineKind, line: usize, pos: usize, value: usize) -> (usize, usize) {
    match kind {
        LineKind::Row => (line, pos),
        LineKind::Col => (pos, line),
        LineKind::Symbol => (pos, value),
    }
}

fn check_pair(n: usize, (p, q): (usize, usize)) -> Result<()> {
    if p == 0 || q > n || p >= q {
        return Err(Error::CycleSwitch(format!("line pair ({p},{q}) must satisfy 1 <= p < q <= {n}")));
    }
    Ok(())
}

/// The cycles of the pair of lines `(p, q)`: minimal position sets whose value sets
/// agree on the two lines. Each is returned as the list of cells it touches, sorted,
/// and cycles are ordered by their smallest position.
pub fn find_cycles(l: &LatinSquare, kind: LineKind, pair: (usize, usize)) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = l.order();
    check_pair(n, pair)?;
    let (lp, lq) = (line_map(l, kind, pair.0), line_map(l, kind, pair.1));
    let mut pos_of_value_in_p = vec![0; n + 1];
    for (pos, &v) in lp.iter().enumerate() {
        pos_of_value_in_p[v] = pos;
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] || lp[start] == lq[start] {
            continue;
        }
        let mut cells = Vec::new();
        let mut pos = start;
        while !seen[pos] {
            seen[pos] = true;
            cells.push(cell_of(kind, pair.0, pos + 1, lp[pos]));
            cells.push(cell_of(kind, pair.1, pos + 1, lq[pos]));
            pos = pos_of_value_in_p[lq[pos]];
        }
        cells.sort_unstable();
        cycles.push(cells);
    }
    Ok(cycles)
}

/// Exchanges lines `p` and `q` on the given cells. The support must consist of the
/// cells of both lines at some set of positions, and the exchange must yield a Latin square.
pub fn apply_cycle_switch(
    l: &LatinSquare,
    kind: LineKind,
    pair: (usize, usize),
    support: &[(usize, usize)],
) -> Result<CycleSwitch> {
    let n = l.order();
    check_pair(n, pair)?;
    let (lp, lq) = (line_map(l, kind, pair.0), line_map(l, kind, pair.1));
    let mut positions = BTreeSet::new();
    for &(i, j) in support {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::CycleSwitch(format!("cell ({i},{j}) out of range")));
        }
        let (line, pos) = match kind {
            LineKind::Row => (i, j),
            LineKind::Col => (j, i),
            LineKind::Symbol => (l.get(i, j), i),
        };
        if line != pair.0 && line != pair.1 {
            return Err(Error::CycleSwitch(format!("cell ({i},{j}) lies on neither line of the pair")));
        }
        positions.insert(pos);
    }
    let expected: BTreeSet<(usize, usize)> = positions
        .iter()
        .flat_map(|&pos| {
            [cell_of(kind, pair.0, pos, lp[pos - 1]), cell_of(kind, pair.1, pos, lq[pos - 1])]
        })
        .collect();
    let given: BTreeSet<(usize, usize)> = support.iter().copied().collect();
    if given != expected {
        return Err(Error::CycleSwitch("support must cover both lines at each of its positions".into()));
    }
    let mut cells = l.cells().to_vec();
    for &pos in &positions {
        let (vp, vq) = (lp[pos - 1], lq[pos - 1]);
        match kind {
            LineKind::Row => {
                cells[(pair.0 - 1) * n + pos - 1] = vq as u8;
                cells[(pair.1 - 1) * n + pos - 1] = vp as u8;
            }
            LineKind::Col => {
                cells[(pos - 1) * n + pair.0 - 1] = vq as u8;
                cells[(pos - 1) * n + pair.1 - 1] = vp as u8;
            }
            LineKind::Symbol => {
                cells[(pos - 1) * n + vp - 1] = pair.1 as u8;
                cells[(pos - 1) * n + vq - 1] = pair.0 as u8;
            }
        }
    }
    let square = LatinSquare::new(n, cells).map_err(|_| Error::CycleSwitch("support is not a closed cycle".into()))?;
    let line_matrix = |line: usize| {
        let map = line_map(&square, kind, line);
        Matrix::from_fn(n, n, |pos, val| i32::from(positions.contains(&pos) && map[pos - 1] == val))
    };
    let (sp, sq) = (sigma(&line_matrix(pair.0)), sigma(&line_matrix(pair.1)));
    let decreasing = !positions.is_empty() && sp.dominates(&sq) && sp != sq;
    Ok(CycleSwitch { square, decreasing })
}

/// Swaps the two symbols of an intercalate.
pub fn apply_intercalate_switch(l: &LatinSquare, ic: &Intercalate) -> Result<LatinSquare> {
    let support = [(ic.rows.0, ic.cols.0), (ic.rows.0, ic.cols.1), (ic.rows.1, ic.cols.0), (ic.rows.1, ic.cols.1)];
    Ok(apply_cycle_switch(l, LineKind::Row, ic.rows, &support)?.square)
}

/// Permutation matrices of the planes of `H(L)` fixed along `axis`.
pub fn latin_planes(l: &LatinSquare, axis: Axis) -> Vec<Matrix> {
    let h = l.to_hypermatrix();
    (1..=l.order()).map(|x| h.plane(axis, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(rows: &[&[usize]]) -> LatinSquare {
        LatinSquare::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn tblock_validation() {
        assert!(TBlock3D::new((2, 1), (1, 2), (1, 2), 1).is_err());
        assert!(TBlock3D::new((0, 1), (1, 2), (1, 2), 1).is_err());
        assert!(TBlock3D::new((1, 2), (1, 2), (1, 2), 2).is_err());
        let t = TBlock3D::new((1, 3), (1, 2), (2, 3), -1).unwrap();
        assert!(apply_tblock(&Hypermatrix::zeros(2), &t).is_err());
        assert_eq!(t.pattern(3).unwrap().entries().iter().sum::<i32>(), 0);
    }

    #[test]
    fn merging_contiguous_blocks_restores_the_original() {
        let t = TBlock3D::new((1, 3), (2, 4), (1, 2), 1).unwrap();
        let parts = decompose_tblock(&t);
        assert_eq!(parts.len(), 4);
        assert_eq!(merge_tblocks(&parts), vec![t]);
    }

    #[test]
    fn cycles_of_the_cyclic_square() {
        let l = sq(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]]);
        let cycles = find_cycles(&l, LineKind::Row, (1, 2)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 6);
        let sw = apply_cycle_switch(&l, LineKind::Row, (1, 2), &cycles[0]).unwrap();
        assert_eq!(sw.square.to_rows(), vec![vec![2, 3, 1], vec![1, 2, 3], vec![3, 1, 2]]);
        assert!(apply_cycle_switch(&l, LineKind::Row, (1, 2), &[(1, 1), (2, 1)]).is_err());
    }

    #[test]
    fn symbol_axis_switch_swaps_symbols() {
        let l = sq(&[&[1, 2], &[2, 1]]);
        let cycles = find_cycles(&l, LineKind::Symbol, (1, 2)).unwrap();
        assert_eq!(cycles, vec![vec![(1, 1), (1, 2), (2, 1), (2, 2)]]);
        let sw = apply_cycle_switch(&l, LineKind::Symbol, (1, 2), &cycles[0]).unwrap();
        assert_eq!(sw.square.to_rows(), vec![vec![2, 1], vec![1, 2]]);
        assert!(!sw.decreasing);
        let back = apply_cycle_switch(&sw.square, LineKind::Symbol, (1, 2), &cycles[0]).unwrap();
        assert!(back.decreasing);
        assert_eq!(back.square, l);
    }
}
