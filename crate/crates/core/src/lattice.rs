//! Lattice operations on `C_n`.
//!
//! Orientation: `a` precedes `b` exactly when `a` has the larger corner sums, so
//! the **meet** (greatest lower bound) is the entrywise **max** of corner sums and
//! the **join** (least upper bound) is the entrywise **min**. The minimum element
//! `M_n` therefore has the largest corner sums of all.

use std::collections::HashSet;

use serde::Serialize;

use crate::array::{CornerSumArray, CornerSumHypermatrix, LatinSquare, Matrix};
use crate::enumerate::poset::FinitePoset;
use crate::enumerate::{enumerate_corner_sum, enumerate_latin, EnumOptions};
use crate::error::{Error, Result};
use crate::notation::grid_notation;
use crate::predicates::{is_corner_sum_hypermatrix, is_latin, is_permutation_hypermatrix};
use crate::rank;
use crate::transform::{corner_interior, plane_sum, sigma, sigma_inverse};

/// An element of `C_n` with its weight and rank cached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeElement {
    pub c: CornerSumHypermatrix,
    pub rho: i64,
    pub rank: i64,
}

impl LatticeElement {
    pub fn new(c: CornerSumHypermatrix) -> Self {
        let rho = c.as_array().total();
        let rank = rank::m_closed_form(c.order()) - rho;
        LatticeElement { c, rho, rank }
    }
}

fn combine(a: &CornerSumHypermatrix, b: &CornerSumHypermatrix, f: fn(i32, i32) -> i32) -> Result<CornerSumHypermatrix> {
    let c = a.as_array().zip_with(b.as_array(), f)?;
    assert!(is_corner_sum_hypermatrix(&c), "lattice operation left C_n");
    Ok(CornerSumHypermatrix::new_unchecked(c))
}

/// Greatest lower bound: entrywise maximum of the corner sums.
pub fn meet(a: &CornerSumHypermatrix, b: &CornerSumHypermatrix) -> Result<CornerSumHypermatrix> {
    combine(a, b, i32::max)
}

/// Least upper bound: entrywise minimum of the corner sums.
pub fn join(a: &CornerSumHypermatrix, b: &CornerSumHypermatrix) -> Result<CornerSumHypermatrix> {
    combine(a, b, i32::min)
}

fn min_entry(n: i64, i: i64, j: i64, k: i64) -> i32 {
    (k * i.min(j)).min(i * j - (n - k) * (i + j - n).max(0)) as i32
}

/// The minimum `M_n`: `min(k min(i, j), i j - (n - k) max(0, i + j - n))`.
pub fn minimum_element(n: usize) -> CornerSumHypermatrix {
    let c = CornerSumArray::from_fn(n, |i, j, k| min_entry(n as i64, i as i64, j as i64, k as i64));
    let piecewise = minimum_element_piecewise(n);
    assert_eq!(c, piecewise, "closed and piecewise forms of the minimum disagree");
    CornerSumHypermatrix::new(c).expect("the minimum is a corner-sum hypermatrix")
}

/// The four-case description of `M_n`, evaluated independently of [`minimum_element`].
pub fn minimum_element_piecewise(n: usize) -> CornerSumArray {
    let n = n as i64;
    CornerSumArray::from_fn(n as usize, |i, j, k| {
        let (i, j, k) = (i as i64, j as i64, k as i64);
        let v = if i <= k.min(n - j) && j <= k {
            i * j
        } else if i <= j.min(n - k) && j > k {
            i * k
        } else if i > j.max(k) && j + k <= n {
            j * k
        } else if i > (n - j).max(n - k) && j + k > n {
            n * n - n * i - n * j - n * k + i * j + i * k + j * k
        } else {
            panic!("no case of the piecewise minimum covers ({i},{j},{k}) at order {n}")
        };
        v as i32
    })
}

/// The maximum: `max(k max(0, i + j - n), i j - (n - k) min(i, j))`.
pub fn maximum_element(n: usize) -> CornerSumHypermatrix {
    let n64 = n as i64;
    let c = CornerSumArray::from_fn(n, |i, j, k| {
        let (i, j, k) = (i as i64, j as i64, k as i64);
        (k * (i + j - n64).max(0)).max(i * j - (n64 - k) * i.min(j)) as i32
    });
    CornerSumHypermatrix::new(c).expect("the maximum is a corner-sum hypermatrix")
}

/// `x meet (y join z) == (x meet y) join (x meet z)`.
pub fn is_distributive_triple(x: &CornerSumHypermatrix, y: &CornerSumHypermatrix, z: &CornerSumHypermatrix) -> Result<bool> {
    Ok(meet(x, &join(y, z)?)? == join(&meet(x, y)?, &meet(x, z)?)?)
}

fn probe(c: &CornerSumHypermatrix, delta: i32) -> Vec<CornerSumHypermatrix> {
    let n = c.order();
    let mut out = Vec::new();
    let mut work = c.as_array().clone();
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                let v = work.get(i, j, k);
                work.set(i, j, k, v + delta);
                if is_corner_sum_hypermatrix(&work) {
                    out.push(CornerSumHypermatrix::new_unchecked(work.clone()));
                }
                work.set(i, j, k, v);
            }
        }
    }
    out
}

/// Elements covered by `c`: valid arrays obtained by adding 1 to one interior entry.
pub fn lower_covers(c: &CornerSumHypermatrix) -> Vec<CornerSumHypermatrix> {
    probe(c, 1)
}

/// Elements covering `c`: valid arrays obtained by subtracting 1 from one interior entry.
pub fn upper_covers(c: &CornerSumHypermatrix) -> Vec<CornerSumHypermatrix> {
    probe(c, -1)
}

/// Indices of the elements of a fully enumerated `C_n` that cover exactly one
/// member of the list.
pub fn join_irreducibles(elements: &[CornerSumHypermatrix]) -> Vec<usize> {
    let index: HashSet<&[i32]> = elements.iter().map(|e| e.entries()).collect();
    elements
        .iter()
        .enumerate()
        .filter(|(_, e)| lower_covers(e).iter().filter(|c| index.contains(c.entries())).count() == 1)
        .map(|(idx, _)| idx)
        .collect()
}

/// `U_n`: the minimum with entry `(2, 2, 2)` lowered by one. Requires `n >= 4`.
pub fn construct_un(n: usize) -> Result<CornerSumHypermatrix> {
    if n < 4 {
        return Err(Error::OrderTooSmall { what: "U_n", n, min: 4 });
    }
    let mut c = minimum_element(n).into_array();
    let v = c.get(2, 2, 2);
    c.set(2, 2, 2, v - 1);
    CornerSumHypermatrix::new(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct NonLatinEntry {
    pub position: [usize; 3],
    pub value: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatinLikeAnalogue {
    /// Sum of the planes of `M_4`.
    pub plane_sum_minimum: Vec<Vec<i32>>,
    /// Sum of the planes of `U_4`.
    pub plane_sum_witness: Vec<Vec<i32>>,
    pub a: LatinSquare,
    pub b: LatinSquare,
    /// The witness plane sum equals the entrywise max of `Sigma(A)` and `Sigma(B)` on `1..=n`.
    pub witness_is_max_of_sigmas: bool,
    pub sigma_inverse_witness: Vec<Vec<i32>>,
    pub sigma_inverse_witness_is_latin: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub witness: CornerSumHypermatrix,
    pub witness_grid: Vec<Vec<String>>,
    pub lower_covers: Vec<CornerSumHypermatrix>,
    pub covers_only_minimum: bool,
    pub non_latin_entry: NonLatinEntry,
    pub preimage_is_latin: bool,
    pub latin_like_analogue: Option<LatinLikeAnalogue>,
    pub confirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletionReport {
    pub poset_size: usize,
    pub cuts: usize,
    pub lattice_size: usize,
    pub bijective: bool,
    pub order_isomorphic: bool,
    pub completion_hasse_edges: usize,
    pub lattice_hasse_edges: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum DmReport {
    /// `n >= 4`: `C_n` is not the completion; the join-irreducible `U_n` is not a Latin square.
    NotCompletion { n: usize, report: Box<WitnessReport> },
    /// `n = 3`: the completion of the Latin poset is isomorphic to `C_3`.
    CompletionHolds { n: usize, report: CompletionReport },
}

impl DmReport {
    pub fn confirmed(&self) -> bool {
        match self {
            DmReport::NotCompletion { report, .. } => report.confirmed,
            DmReport::CompletionHolds { report, .. } => report.holds,
        }
    }
}

/// The two order-4 Latin squares whose corner sums have the `U_4` plane sum as entrywise max.
pub fn k4_witness_squares() -> (LatinSquare, LatinSquare) {
    let a = LatinSquare::from_rows(&[[4, 3, 2, 1], [3, 1, 4, 2], [2, 4, 1, 3], [1, 2, 3, 4]]).expect("fixture is Latin");
    let b = LatinSquare::from_rows(&[[4, 2, 1, 3], [3, 4, 2, 1], [2, 1, 3, 4], [1, 3, 4, 2]]).expect("fixture is Latin");
    (a, b)
}

fn latin_like_analogue(un: &CornerSumHypermatrix) -> LatinLikeAnalogue {
    let n = un.order();
    let m = plane_sum(minimum_element(n).as_array());
    let x = plane_sum(un.as_array());
    let (a, b) = k4_witness_squares();
    let sa = corner_interior(&sigma(&a.to_matrix()));
    let sb = corner_interior(&sigma(&b.to_matrix()));
    let max_ab = Matrix::from_fn(n, n, |i, j| sa.get(i, j).max(sb.get(i, j)));
    let mut padded = crate::array::CornerSumMatrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            padded.set(i, j, x.get(i, j));
        }
    }
    let sigma_inv_x = sigma_inverse(&padded).expect("padded grid has zero border");
    LatinLikeAnalogue {
        plane_sum_minimum: m.to_rows(),
        plane_sum_witness: x.to_rows(),
        witness_is_max_of_sigmas: max_ab == x,
        sigma_inverse_witness_is_latin: is_latin(&sigma_inv_x),
        sigma_inverse_witness: sigma_inv_x.to_rows(),
        a,
        b,
    }
}

fn witness_report(n: usize) -> Result<WitnessReport> {
    let un = construct_un(n)?;
    let min = minimum_element(n);
    let covers = lower_covers(&un);
    let covers_only_minimum = covers.len() == 1 && covers[0] == min;
    let a = un.to_hypermatrix();
    let entry = a.get(2, 2, 2);
    let preimage_is_latin = is_permutation_hypermatrix(&a);
    let analogue = (n == 4).then(|| latin_like_analogue(&un));
    let analogue_ok = analogue
        .as_ref()
        .is_none_or(|x| x.witness_is_max_of_sigmas && !x.sigma_inverse_witness_is_latin);
    Ok(WitnessReport {
        witness_grid: grid_notation(&a).to_string_rows(),
        witness: un,
        lower_covers: covers,
        covers_only_minimum,
        non_latin_entry: NonLatinEntry { position: [2, 2, 2], value: entry },
        preimage_is_latin,
        latin_like_analogue: analogue,
        confirmed: covers_only_minimum && entry == -1 && !preimage_is_latin && analogue_ok,
    })
}

/// Computes the Dedekind-MacNeille completion of the order-3 Latin poset by
/// closing principal ideals under intersection and matches it to `C_3`: each cut
/// maps to the join (entrywise min of corner sums) of its members, and the empty
/// cut to the minimum.
pub fn completion_report_n3() -> Result<CompletionReport> {
    let opts = EnumOptions::default();
    let squares = enumerate_latin(3, &opts)?.elements.unwrap_or_default();
    let corners: Vec<CornerSumHypermatrix> = squares
        .iter()
        .map(|l| CornerSumHypermatrix::from_hypermatrix(&l.to_hypermatrix()))
        .collect::<Result<_>>()?;
    let poset = FinitePoset::from_leq(corners.len(), |a, b| corners[a].as_array().dominates(corners[b].as_array()));
    let cuts = poset.dedekind_macneille_cuts();
    let lattice = enumerate_corner_sum(3, &opts)?.elements.unwrap_or_default();
    let images: Vec<CornerSumHypermatrix> = cuts
        .iter()
        .map(|cut| {
            cut.iter()
                .map(|idx| corners[idx].clone())
                .reduce(|acc, c| join(&acc, &c).expect("equal orders"))
                .unwrap_or_else(|| minimum_element(3))
        })
        .collect();
    let lattice_set: HashSet<&CornerSumHypermatrix> = lattice.iter().collect();
    let image_set: HashSet<&CornerSumHypermatrix> = images.iter().collect();
    let bijective = image_set.len() == images.len() && image_set == lattice_set;
    let mut order_isomorphic = bijective;
    if bijective {
        for (x, cx) in cuts.iter().enumerate() {
            for (y, cy) in cuts.iter().enumerate() {
                let subset = cx.is_subset(cy);
                let below = images[x].as_array().dominates(images[y].as_array());
                order_isomorphic &= subset == below;
            }
        }
    }
    let cut_poset = FinitePoset::from_leq(cuts.len(), |a, b| cuts[a].is_subset(&cuts[b]));
    let lattice_poset =
        FinitePoset::from_leq(lattice.len(), |a, b| lattice[a].as_array().dominates(lattice[b].as_array()));
    let completion_hasse_edges = cut_poset.cover_pairs().len();
    let lattice_hasse_edges = lattice_poset.cover_pairs().len();
    Ok(CompletionReport {
        poset_size: squares.len(),
        cuts: cuts.len(),
        lattice_size: lattice.len(),
        bijective,
        order_isomorphic,
        completion_hasse_edges,
        lattice_hasse_edges,
        holds: bijective && order_isomorphic && completion_hasse_edges == lattice_hasse_edges,
    })
}

/// Verifies the argument that `C_n` is not the Dedekind-MacNeille completion of
/// the Latin poset for `n >= 4`, or that it is for `n = 3`.
pub fn dm_witness_report(n: usize) -> Result<DmReport> {
    match n {
        0..=2 => Err(Error::OrderTooSmall { what: "the completion witness", n, min: 3 }),
        3 => Ok(DmReport::CompletionHolds { n, report: completion_report_n3()? }),
        _ => Ok(DmReport::NotCompletion { n, report: Box::new(witness_report(n)?) }),
    }
}
