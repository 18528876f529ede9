use std::collections::HashSet;

use hyperlattice::enumerate::ashm::{enumerate_ashm_with, enumerate_pashm_with};
use hyperlattice::enumerate::hasse::{build_hasse_by_corner_sums, build_hasse_latin};
use hyperlattice::enumerate::{Strategy, CORNER_SUM_MAX_N, MAX_N_ENV};
use hyperlattice::*;

fn opts() -> EnumOptions {
    EnumOptions::default()
}

/// Every 3x3 grid over {1, 2, 3}, filtered by the Latin predicate and sorted.
fn brute_force_latin_3() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(9) {
        let cells: Vec<u8> = (0..9).map(|p| (code / 3usize.pow(8 - p) % 3 + 1) as u8).collect();
        let m = Matrix::from_fn(3, 3, |i, j| i32::from(cells[(i - 1) * 3 + (j - 1)]));
        if is_latin(&m) {
            out.push(cells);
        }
    }
    out.sort();
    out
}

#[test]
fn latin_counts_and_order() {
    let counts: Vec<u64> = (1..=4).map(|n| enumerate_latin(n, &EnumOptions::counting()).unwrap().count).collect();
    assert_eq!(counts, vec![1, 2, 12, 576]);

    let l3 = enumerate_latin(3, &opts()).unwrap().into_elements();
    let cells: Vec<Vec<u8>> = l3.iter().map(|l| l.cells().to_vec()).collect();
    assert_eq!(cells, brute_force_latin_3());
    assert_eq!(l3[0].to_rows(), vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
    assert_eq!(l3[11].to_rows(), vec![vec![3, 2, 1], vec![2, 1, 3], vec![1, 3, 2]]);

    let l4 = enumerate_latin(4, &opts()).unwrap().into_elements();
    assert!(l4.windows(2).all(|w| w[0].cells() < w[1].cells()));
    assert!(l4.iter().all(|l| is_latin(&l.to_matrix())));
    assert_eq!(l4[0].to_rows(), vec![vec![1, 2, 3, 4], vec![2, 1, 4, 3], vec![3, 4, 1, 2], vec![4, 3, 2, 1]]);
}

#[test]
fn asm_counts() {
    let counts: Vec<u64> = (1..=6).map(|n| enumerate_asms(n, &EnumOptions::counting()).unwrap().count).collect();
    assert_eq!(counts, vec![1, 2, 7, 42, 429, 7436]);
}

#[test]
fn corner_sum_counts_and_validity() {
    let counts: Vec<u64> = (1..=4).map(|n| enumerate_corner_sum(n, &EnumOptions::counting()).unwrap().count).collect();
    assert_eq!(counts, vec![1, 2, 35, 62858]);
    let c3 = enumerate_corner_sum(3, &opts()).unwrap().into_elements();
    assert!(c3.windows(2).all(|w| w[0] < w[1]));
    for c in &c3 {
        assert!(is_corner_sum_hypermatrix(c.as_array()));
        let a = c.to_hypermatrix();
        assert!(a.lines().all(|(_, _, _, line)| line.iter().sum::<i32>() == 1));
    }
    assert_eq!(c3.first(), Some(&maximum_element(3)));
    assert_eq!(c3.last(), Some(&minimum_element(3)));
}

#[test]
fn ashm_and_pashm_counts_under_both_strategies() {
    for (n, ashm, pashm) in [(1, 1, 1), (2, 2, 2), (3, 14, 18), (4, 924, 2424)] {
        for strategy in [Strategy::AsmSequences, Strategy::CornerSumFilter] {
            let a = enumerate_ashm_with(n, &opts(), strategy).unwrap().into_elements();
            let p = enumerate_pashm_with(n, &opts(), strategy).unwrap().into_elements();
            assert_eq!((a.len(), p.len()), (ashm, pashm), "order {n}, {strategy:?}");
            let pset: HashSet<&Hypermatrix> = p.iter().collect();
            assert!(a.iter().all(|x| is_ashm(x) && pset.contains(x)));
        }
        assert_eq!(enumerate_ashm(n, &opts()).unwrap().count, ashm as u64);
        assert_eq!(enumerate_pashm(n, &opts()).unwrap().count, pashm as u64);
    }
    let both = enumerate_ashm_with(3, &opts(), Strategy::Both).unwrap();
    assert_eq!(both.into_elements(), enumerate_ashm_with(3, &opts(), Strategy::AsmSequences).unwrap().into_elements());
}

#[test]
fn triangle_counts() {
    let counts: Vec<u64> = (1..=3).map(|n| enumerate_monotone_hypertriangles(n, &EnumOptions::counting()).unwrap().count).collect();
    assert_eq!(counts, vec![1, 2, 35]);
}

#[test]
fn caps_are_enforced() {
    assert!(matches!(enumerate_corner_sum(CORNER_SUM_MAX_N + 1, &opts()), Err(Error::CapExceeded { .. })));
    assert!(matches!(enumerate_latin(7, &opts()), Err(Error::CapExceeded { cap: 6, .. })));
    assert!(enumerate_latin(0, &opts()).is_err());
    let tight = EnumOptions::with_limits(Limits::uniform(2));
    assert!(enumerate_asms(3, &tight).is_err());
    assert!(enumerate_asms(2, &tight).is_ok());
    assert_eq!(Limits::default().cap(ElementKind::Asm), 8);
}

#[test]
fn cap_from_environment() {
    std::env::set_var(MAX_N_ENV, "2");
    assert_eq!(Limits::from_env().unwrap(), Limits::uniform(2));
    std::env::set_var(MAX_N_ENV, "lots");
    assert!(Limits::from_env().is_err());
    std::env::remove_var(MAX_N_ENV);
    assert_eq!(Limits::from_env().unwrap(), Limits::default());
}

#[test]
fn element_kind_names() {
    for kind in ElementKind::ALL {
        assert_eq!(kind.name().parse::<ElementKind>().unwrap(), kind);
    }
    assert_eq!("corner_sum".parse::<ElementKind>().unwrap(), ElementKind::CornerSum);
    assert!("cube".parse::<ElementKind>().is_err());
}

#[test]
fn hasse_fast_path_matches_transitive_reduction_on_c3() {
    let c3 = enumerate_corner_sum(3, &opts()).unwrap().into_elements();
    let fast = build_hasse_lattice(&c3);
    let generic = build_hasse_by_corner_sums(ElementKind::CornerSum, c3.iter().map(|c| c.to_hypermatrix()).collect());
    assert_eq!(fast.edges, generic.edges);
    assert_eq!((fast.node_count(), fast.edge_count()), (35, 72));
    assert!(fast.is_acyclic() && fast.is_graded_by_rank());
    assert_eq!(fast.height(), 8);
    assert_eq!(fast.bottoms().len(), 1);
    assert_eq!(fast.tops().len(), 1);
    assert_eq!(fast.ranks[fast.tops()[0]], 8);
    let check = is_lattice(&fast);
    assert!(check.is_lattice && check.witness.is_none());
}

#[test]
fn latin_and_ashm_posets_are_not_lattices() {
    let l3 = enumerate_latin(3, &opts()).unwrap().into_elements();
    let h = build_hasse_latin(&l3);
    assert_eq!((h.node_count(), h.edge_count()), (12, 24));
    assert!(!is_lattice(&h).is_lattice);

    let ashm = enumerate_ashm(3, &opts()).unwrap().into_elements();
    let h = build_hasse_by_corner_sums(ElementKind::Ashm, ashm);
    assert_eq!(h.node_count(), 14);
    assert_eq!((h.bottoms().len(), h.tops().len()), (1, 1));
    let check = is_lattice(&h);
    assert!(!check.is_lattice);
    let w = check.witness.unwrap();
    assert!(w.candidates.len() != 1);
}

#[test]
fn permutation_matrices_of_order_3_do_not_form_a_lattice() {
    let perms: Vec<Matrix> = enumerate_asms(3, &opts()).unwrap().into_elements().into_iter().filter(is_permutation_matrix).collect();
    assert_eq!(perms.len(), 6);
    let nodes: Vec<Hypermatrix> = perms.iter().map(|p| Hypermatrix::from_fn(3, |i, j, k| if k == 1 { p.get(i, j) } else { 0 })).collect();
    let h = build_hasse(ElementKind::Asm, nodes, |a, b| sigma(&perms[a]).dominates(&sigma(&perms[b])));
    assert_eq!(h.edge_count(), 8);
    assert!(!is_lattice(&h).is_lattice);
    // Adding the one non-permutation ASM completes it.
    let asms = enumerate_asms(3, &opts()).unwrap().into_elements();
    let nodes: Vec<Hypermatrix> = asms.iter().map(|p| Hypermatrix::from_fn(3, |i, j, k| if k == 1 { p.get(i, j) } else { 0 })).collect();
    let h = build_hasse(ElementKind::Asm, nodes, |a, b| sigma(&asms[a]).dominates(&sigma(&asms[b])));
    assert!(is_lattice(&h).is_lattice);
}

#[test]
fn exports() {
    let c3 = enumerate_corner_sum(3, &opts()).unwrap().into_elements();
    let h = build_hasse_lattice(&c3);
    let dot = h.to_dot();
    assert!(dot.starts_with("digraph hasse {"));
    assert_eq!(dot.matches(" -> ").count(), 72);
    assert!(dot.contains("rank_value=8"));
    let json = h.to_json();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 35);
    assert_eq!(json["edges"].as_array().unwrap().len(), 72);
    assert_eq!(json["kind"], "corner-sum");

    let l3 = enumerate_latin(3, &opts()).unwrap().into_elements();
    assert!(build_hasse_latin(&l3).to_dot().contains("123 / 231 / 312"));
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_corner_sum(3, &opts()).unwrap();
    let b = enumerate_corner_sum(3, &opts()).unwrap();
    assert_eq!(a, b);
    let t1 = enumerate_monotone_hypertriangles(3, &opts()).unwrap();
    let t2 = enumerate_monotone_hypertriangles(3, &opts()).unwrap();
    assert_eq!(t1, t2);
}
