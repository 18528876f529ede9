//! Weights and ranks.
//!
//! `rho` is the total of all corner-sum entries. Rank is measured upward from
//! the minimum `M_n`: `r = m(n) - rho`, where `m(n)` is the weight of `M_n`.
//! Because the minimum has the *largest* corner sums, rank grows as corner sums
//! shrink. Every closed form below is checked against a second computation at
//! call time.

use serde::{Deserialize, Serialize};

use crate::array::{Axis, CornerSumHypermatrix, Hypermatrix, LatinSquare, Matrix};
use crate::error::{Error, Result};
use crate::lattice::{maximum_element, minimum_element};
use crate::predicates::{is_asm, is_in_xi_preimage};
use crate::transform::{latin_like_square, sigma, xi};

/// `4^(1 + (-1)^n)`: 16 for even `n`, 1 for odd `n`.
pub fn parity_coefficient(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        16
    } else {
        1
    }
}

fn exact_div(num: i64, den: i64, what: &str) -> i64 {
    assert_eq!(num % den, 0, "{what}: {num} is not divisible by {den}");
    num / den
}

/// Weight of the minimum element `M_n`.
pub fn m_closed_form(n: usize) -> i64 {
    let x = n as i64;
    let num = 69 * x.pow(5) + 180 * x.pow(4) + 170 * x.pow(3) + 60 * x * x + parity_coefficient(n) * x;
    exact_div(num, 480, "m(n)")
}

/// Weight of `M_n` by summing its entries.
pub fn m_by_summation(n: usize) -> i64 {
    minimum_element(n).as_array().total()
}

/// Rank of `C_n`, i.e. the rank of its maximum.
pub fn lattice_rank(n: usize) -> i64 {
    let x = n as i64;
    exact_div(9 * x.pow(5) - 10 * x.pow(3) + parity_coefficient(n) * x, 240, "rank(C_n)")
}

/// Rank of `C_n` as the entry sum of `M_n` minus the maximum.
pub fn lattice_rank_by_summation(n: usize) -> i64 {
    minimum_element(n).as_array().total() - maximum_element(n).as_array().total()
}

fn require_preimage(l: &Hypermatrix) -> Result<()> {
    if is_in_xi_preimage(l) {
        Ok(())
    } else {
        Err(Error::NotInPreimage)
    }
}

/// `sum_{i,j} (n-i+1)(n-j+1)(n-L_ij+1)` with `L` the Latin-like square of `l`.
fn weighted_cell_sum(l: &Hypermatrix) -> i64 {
    let n = l.order() as i64;
    let sq = latin_like_square(l);
    let mut total = 0;
    for i in 1..=n {
        for j in 1..=n {
            let v = i64::from(sq.get(i as usize, j as usize));
            total += (n - i + 1) * (n - j + 1) * (n - v + 1);
        }
    }
    total
}

/// `sum_{i,j} (i-j)^2 (n - L_ij)`.
fn squared_offset_sum(sq: &Matrix) -> i64 {
    let n = sq.order() as i64;
    let mut total = 0;
    for i in 1..=n {
        for j in 1..=n {
            total += (i - j).pow(2) * (n - i64::from(sq.get(i as usize, j as usize)));
        }
    }
    total
}

/// Total of the corner sums of `l`, computed directly and by the weighted-cell
/// formula; the two are asserted equal.
pub fn rho(l: &Hypermatrix) -> Result<i64> {
    require_preimage(l)?;
    let direct = xi(l).total();
    let weighted = weighted_cell_sum(l);
    assert_eq!(direct, weighted, "weight formulas disagree");
    Ok(direct)
}

/// Rank of `l`, checked against the squared-offset formula.
pub fn rank_of(l: &Hypermatrix) -> Result<i64> {
    let n = l.order();
    let r = m_closed_form(n) - rho(l)?;
    let x = n as i64;
    let base = -11 * x.pow(5) + 20 * x.pow(4) + 10 * x.pow(3) - 20 * x * x + parity_coefficient(n) * x;
    let alt = exact_div(base + 240 * squared_offset_sum(&latin_like_square(l)), 480, "rank");
    assert_eq!(r, alt, "rank formulas disagree");
    Ok(r)
}

/// Rank of an element given by its corner sums.
pub fn rank_of_corner_sum(c: &CornerSumHypermatrix) -> i64 {
    m_closed_form(c.order()) - c.as_array().total()
}

/// Sum of the entries of `Sigma(m)` over `1 <= i, j <= n`.
fn sigma_weight(m: &Matrix) -> i64 {
    let s = sigma(m);
    let n = m.rows();
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| i64::from(s.get(i, j))).sum()
}

/// Rank of an ASM in the two-dimensional lattice, `(1/2) sum (i-j)^2 A_ij`,
/// checked against the weight difference to the identity.
pub fn asm_rank(m: &Matrix) -> Result<i64> {
    if !is_asm(m) {
        return Err(Error::NotAsm);
    }
    let n = m.order() as i64;
    let mut twice = 0;
    for i in 1..=n {
        for j in 1..=n {
            twice += (i - j).pow(2) * i64::from(m.get(i as usize, j as usize));
        }
    }
    let r = exact_div(twice, 2, "ASM rank");
    let identity_weight = n * (n + 1) * (2 * n + 1) / 6;
    assert_eq!(r, identity_weight - sigma_weight(m), "ASM rank formulas disagree");
    Ok(r)
}

/// Sums of ASM ranks over the planes of `l` along each axis, in `[I, J, K]` order.
pub fn plane_rank_sums(l: &LatinSquare) -> [i64; 3] {
    let a = l.to_hypermatrix();
    let n = l.order();
    Axis::ALL.map(|axis| (1..=n).map(|x| asm_rank(&a.plane(axis, x)).expect("planes of a Latin square are permutation matrices")).sum())
}

/// Whether every axis has plane rank sum `n^2 (n^2 - 1) / 12`.
pub fn rank_sum_identity_check(l: &LatinSquare) -> bool {
    let n = l.order() as i64;
    let want = n * n * (n * n - 1) / 12;
    plane_rank_sums(l).iter().all(|&s| s == want)
}

/// Whether `rho(l) + sum_{i,j} Sigma(L(l))_{ij} = n^2 (n+1)^3 / 4`.
pub fn sigma_sum_identity_check(l: &Hypermatrix) -> Result<bool> {
    let n = l.order() as i64;
    let lhs = rho(l)? + sigma_weight(&latin_like_square(l));
    Ok(lhs * 4 == n * n * (n + 1).pow(3))
}

/// Whether `3 sum (i-j)^2 (n-L_ij) = n^2 (n+1)(n^2+n+1) - 6 sum (n-i+1)(n-j+1)(n-L_ij+1)`.
pub fn bridging_identity_check(l: &Hypermatrix) -> bool {
    let n = l.order() as i64;
    let lhs = 3 * squared_offset_sum(&latin_like_square(l));
    lhs == n * n * (n + 1) * (n * n + n + 1) - 6 * weighted_cell_sum(l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub n: usize,
    pub rho: i64,
    pub rank: i64,
    pub max_rank: i64,
}

pub fn rank_profile(l: &Hypermatrix) -> Result<RankProfile> {
    let n = l.order();
    Ok(RankProfile { n, rho: rho(l)?, rank: rank_of(l)?, max_rank: lattice_rank(n) })
}
