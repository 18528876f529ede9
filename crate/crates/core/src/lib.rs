//! Combinatorial engine for Latin squares under the Bruhat order, its
//! completion to the lattice of corner-sum hypermatrices, and the attached
//! rank, enumeration and monotone-hypertriangle machinery.
//!
//! Conventions used throughout:
//! - indices are 1-based; corner-sum arrays also carry a zero row/plane at index 0;
//! - `a` precedes `b` in the Bruhat order exactly when the corner sums of `a`
//!   dominate those of `b` entrywise, so meet is the entrywise max and join the min;
//! - rank is measured from the minimum `M_n`, which has the largest corner sums.

pub mod array;
pub mod bruhat;
pub mod enumerate;
pub mod error;
pub mod json;
pub mod lattice;
pub mod notation;
pub mod predicates;
pub mod rank;
pub mod transform;
pub mod triangles;
pub mod verify;

pub use array::{Axis, CornerSumArray, CornerSumHypermatrix, CornerSumMatrix, Hypermatrix, LatinSquare, Matrix, MAX_ORDER};
pub use bruhat::{
    apply_cycle_switch, apply_intercalate_switch, apply_tblock, bruhat_leq, covers_in_latin_poset, covers_in_lattice, decompose_tblock,
    find_cycles, find_intercalates, greedy_tblock_witness, is_decreasing_replacement, is_decreasing_replacement_everywhere, merge_tblocks, subarray_count,
    BruhatOperand, Intercalate, LineKind, Subarray, TBlock3D, TBlockWitness,
};
pub use enumerate::{
    build_hasse, build_hasse_lattice, enumerate_asms, enumerate_ashm, enumerate_corner_sum, enumerate_latin,
    enumerate_monotone_hypertriangles, enumerate_pashm, is_lattice, ElementKind, EnumOptions, EnumerationResult,
    HasseGraph, Limits,
};
pub use error::{Error, LatinViolation, Result};
pub use json::Tagged;
pub use lattice::{
    construct_un, dm_witness_report, is_distributive_triple, join, join_irreducibles, lower_covers, maximum_element, meet,
    minimum_element, upper_covers, DmReport, LatticeElement,
};
pub use notation::{grid_notation, CellFormalSum, Term};
pub use predicates::{
    ashm_difference_conditions, check_partial_sum_bounds, corner_sum_violation, is_ashm, is_asm, is_corner_sum_hypermatrix,
    is_in_xi_preimage, is_latin, is_pashm, is_permutation_hypermatrix, is_permutation_matrix, latin_violation,
};
pub use rank::{asm_rank, lattice_rank, m_closed_form, rank_of, rank_profile, rank_sum_identity_check, rho, sigma_sum_identity_check, RankProfile};
pub use transform::{latin_like_square, partial_sum_hypermatrix, plane_sum, sigma, sigma_inverse, xi, xi_inverse};
pub use triangles::{check_interlacing, from_triangle, to_triangle, triangle_leq, MonotoneHypertriangle};
