//! ASHMs and PASHMs, by two independent routes whose results must agree:
//! sequences of ASM planes pruned by vertical partial sums, and filtering of
//! the corner-sum hypermatrices by their mixed second differences.

use std::collections::HashSet;

use rayon::prelude::*;

use super::asm::{asm_masks, AsmMask};
use super::corner_sum::enumerate_corner_sum;
use super::{ElementKind, CORNER_SUM_MAX_N, EnumOptions, EnumerationResult};
use crate::array::{CornerSumHypermatrix, Hypermatrix};
use crate::error::Result;
use crate::predicates::{ashm_difference_conditions, is_ashm, is_pashm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Stack `n` ASM planes and filter by the predicate.
    AsmSequences,
    /// Filter the corner-sum hypermatrices.
    CornerSumFilter,
    /// Run both and assert that they agree.
    Both,
}

impl Strategy {
    /// Both routes when the corner-sum enumeration is within its default cap.
    fn default_for(n: usize, opts: &EnumOptions) -> Self {
        if n <= opts.limits.corner_sum.min(CORNER_SUM_MAX_N) {
            Strategy::Both
        } else {
            Strategy::AsmSequences
        }
    }
}

fn planes_to_hypermatrix(n: usize, planes: &[AsmMask]) -> Hypermatrix {
    Hypermatrix::from_fn(n, |i, j, k| {
        let bit = 1u64 << ((i - 1) * n + (j - 1));
        let p = planes[k - 1];
        i32::from(p.pos & bit != 0) - i32::from(p.neg & bit != 0)
    })
}

/// ASHM planes: the vertical partial sums stay 0/1, so the state is a mask.
fn ashm_sequences(n: usize, count_only: bool) -> (u64, Vec<Hypermatrix>) {
    let masks = asm_masks(n);
    let full: u64 = if n * n == 64 { u64::MAX } else { (1u64 << (n * n)) - 1 };
    let lookup: HashSet<AsmMask> = masks.iter().copied().collect();

    fn rec(
        n: usize,
        masks: &[AsmMask],
        lookup: &HashSet<AsmMask>,
        full: u64,
        state: u64,
        planes: &mut Vec<AsmMask>,
        count_only: bool,
        out: &mut (u64, Vec<Hypermatrix>),
    ) {
        if planes.len() + 1 == n {
            let last = AsmMask { pos: full & !state, neg: 0 };
            if lookup.contains(&last) {
                planes.push(last);
                let a = planes_to_hypermatrix(n, planes);
                planes.pop();
                if is_ashm(&a) {
                    out.0 += 1;
                    if !count_only {
                        out.1.push(a);
                    }
                }
            }
            return;
        }
        for &p in masks {
            if p.pos & state != 0 || p.neg & !state != 0 {
                continue;
            }
            planes.push(p);
            rec(n, masks, lookup, full, (state | p.pos) & !p.neg, planes, count_only, out);
            planes.pop();
        }
    }

    if n == 1 {
        let a = Hypermatrix::from_fn(1, |_, _, _| 1);
        return (1, if count_only { vec![] } else { vec![a] });
    }
    let parts: Vec<(u64, Vec<Hypermatrix>)> = masks
        .par_iter()
        .map(|&first| {
            let mut out = (0, Vec::new());
            if first.neg == 0 {
                rec(n, &masks, &lookup, full, first.pos, &mut vec![first], count_only, &mut out);
            }
            out
        })
        .collect();
    merge(parts)
}

/// PASHM planes: the remaining `n - k` planes can move a cell's partial sum by
/// at most `n - k` upward, and downward only off the outer ring.
fn pashm_sequences(n: usize, count_only: bool) -> (u64, Vec<Hypermatrix>) {
    let masks = asm_masks(n);
    let cells = n * n;
    let interior: Vec<bool> = (0..cells).map(|c| {
        let (i, j) = (c / n, c % n);
        i > 0 && j > 0 && i + 1 < n && j + 1 < n
    }).collect();

    let feasible = |state: &[i32], remaining: i32| {
        state.iter().zip(&interior).all(|(&s, &inner)| {
            let need = 1 - s;
            let lo = if inner { -remaining } else { 0 };
            (lo..=remaining).contains(&need)
        })
    };

    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: usize,
        masks: &[AsmMask],
        feasible: &dyn Fn(&[i32], i32) -> bool,
        state: &mut Vec<i32>,
        planes: &mut Vec<AsmMask>,
        count_only: bool,
        out: &mut (u64, Vec<Hypermatrix>),
    ) {
        if planes.len() == n {
            let a = planes_to_hypermatrix(n, planes);
            if is_pashm(&a) {
                out.0 += 1;
                if !count_only {
                    out.1.push(a);
                }
            }
            return;
        }
        for &p in masks {
            let apply = |state: &mut Vec<i32>, sign: i32| {
                for (c, s) in state.iter_mut().enumerate() {
                    let bit = 1u64 << c;
                    *s += sign * (i32::from(p.pos & bit != 0) - i32::from(p.neg & bit != 0));
                }
            };
            apply(state, 1);
            planes.push(p);
            if feasible(state, (n - planes.len()) as i32) {
                rec(n, masks, feasible, state, planes, count_only, out);
            }
            planes.pop();
            apply(state, -1);
        }
    }

    let parts: Vec<(u64, Vec<Hypermatrix>)> = masks
        .par_iter()
        .map(|&first| {
            let mut out = (0, Vec::new());
            let mut state: Vec<i32> = (0..cells)
                .map(|c| i32::from(first.pos >> c & 1 == 1) - i32::from(first.neg >> c & 1 == 1))
                .collect();
            if feasible(&state, (n - 1) as i32) {
                rec(n, &masks, &feasible, &mut state, &mut vec![first], count_only, &mut out);
            }
            out
        })
        .collect();
    merge(parts)
}

fn merge(parts: Vec<(u64, Vec<Hypermatrix>)>) -> (u64, Vec<Hypermatrix>) {
    let count = parts.iter().map(|p| p.0).sum();
    let mut all: Vec<Hypermatrix> = parts.into_iter().flat_map(|p| p.1).collect();
    all.sort();
    (count, all)
}

fn corner_sum_filter(n: usize, opts: &EnumOptions, keep: fn([bool; 3]) -> bool) -> Result<Vec<Hypermatrix>> {
    let all = enumerate_corner_sum(n, &EnumOptions { count_only: false, ..*opts })?.into_elements();
    let mut out: Vec<Hypermatrix> = all
        .par_iter()
        .filter(|c| keep(ashm_difference_conditions(c.as_array())))
        .map(CornerSumHypermatrix::to_hypermatrix)
        .collect();
    out.sort();
    Ok(out)
}

fn run(
    kind: ElementKind,
    n: usize,
    opts: &EnumOptions,
    strategy: Strategy,
    sequences: fn(usize, bool) -> (u64, Vec<Hypermatrix>),
    keep: fn([bool; 3]) -> bool,
) -> Result<EnumerationResult<Hypermatrix>> {
    opts.limits.check(kind, n)?;
    let finish = |elements: Vec<Hypermatrix>| {
        if opts.count_only {
            EnumerationResult::counted(kind, n, elements.len() as u64)
        } else {
            EnumerationResult::collected(kind, n, elements)
        }
    };
    match strategy {
        Strategy::AsmSequences => {
            let (count, elements) = sequences(n, opts.count_only);
            Ok(if opts.count_only { EnumerationResult::counted(kind, n, count) } else { finish(elements) })
        }
        Strategy::CornerSumFilter => Ok(finish(corner_sum_filter(n, opts, keep)?)),
        Strategy::Both => {
            let (_, a) = sequences(n, false);
            let b = corner_sum_filter(n, opts, keep)?;
            assert_eq!(a, b, "{kind} enumeration strategies disagree at order {n}");
            Ok(finish(a))
        }
    }
}

/// Every ASHM of order `n`, sorted lexicographically.
pub fn enumerate_ashm(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<Hypermatrix>> {
    enumerate_ashm_with(n, opts, Strategy::default_for(n, opts))
}

pub fn enumerate_ashm_with(n: usize, opts: &EnumOptions, strategy: Strategy) -> Result<EnumerationResult<Hypermatrix>> {
    run(ElementKind::Ashm, n, opts, strategy, ashm_sequences, |c| c.iter().all(|&x| x))
}

/// Every PASHM of order `n`, sorted lexicographically.
pub fn enumerate_pashm(n: usize, opts: &EnumOptions) -> Result<EnumerationResult<Hypermatrix>> {
    enumerate_pashm_with(n, opts, Strategy::default_for(n, opts))
}

pub fn enumerate_pashm_with(n: usize, opts: &EnumOptions, strategy: Strategy) -> Result<EnumerationResult<Hypermatrix>> {
    run(ElementKind::Pashm, n, opts, strategy, pashm_sequences, |c| c[1] && c[2])
}
