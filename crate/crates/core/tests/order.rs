use std::collections::HashSet;
use std::sync::OnceLock;

use hyperlattice::bruhat::{find_cycles, LineKind, LATIN_COVER_MAX_N};
use hyperlattice::enumerate::poset::FinitePoset;
use hyperlattice::*;
use proptest::prelude::*;

fn sq<const N: usize>(rows: [[usize; N]; N]) -> LatinSquare {
    LatinSquare::from_rows(&rows).unwrap()
}

fn latin(n: usize) -> Vec<LatinSquare> {
    enumerate_latin(n, &EnumOptions::default()).unwrap().into_elements()
}

fn c3() -> &'static [CornerSumHypermatrix] {
    static C3: OnceLock<Vec<CornerSumHypermatrix>> = OnceLock::new();
    C3.get_or_init(|| enumerate_corner_sum(3, &EnumOptions::default()).unwrap().into_elements())
}

fn c4() -> &'static [CornerSumHypermatrix] {
    static C4: OnceLock<Vec<CornerSumHypermatrix>> = OnceLock::new();
    C4.get_or_init(|| enumerate_corner_sum(4, &EnumOptions::default()).unwrap().into_elements())
}

fn sum_patterns(n: usize, blocks: &[TBlock3D]) -> Hypermatrix {
    blocks.iter().fold(Hypermatrix::zeros(n), |acc, t| apply_tblock(&acc, t).unwrap())
}

/// `L2` and `L1` with `L1` two T-blocks below `L2`.
fn two_block_pair() -> (LatinSquare, LatinSquare) {
    (sq([[1, 3, 2], [2, 1, 3], [3, 2, 1]]), sq([[3, 1, 2], [1, 2, 3], [2, 3, 1]]))
}

#[test]
fn two_displayed_tblocks_carry_l2_to_l1() {
    let (l1, l2) = two_block_pair();
    let t1 = TBlock3D::new((1, 2), (1, 2), (1, 3), 1).unwrap();
    let t2 = TBlock3D::new((2, 3), (1, 2), (2, 3), 1).unwrap();
    let got = apply_tblock(&apply_tblock(&l2.to_hypermatrix(), &t1).unwrap(), &t2).unwrap();
    assert_eq!(got, l1.to_hypermatrix());
    assert!(bruhat_leq(&l1, &l2).unwrap());
    assert!(!bruhat_leq(&l2, &l1).unwrap());

    let w = greedy_tblock_witness(&l1.to_hypermatrix(), &l2.to_hypermatrix()).unwrap();
    assert!(w.reachable);
    assert!(w.steps.iter().all(TBlock3D::is_contiguous));
    let merged = merge_tblocks(&w.steps);
    assert_eq!(merged.len(), 2);
    assert_eq!(sum_patterns(3, &merged), l1.to_hypermatrix().sub(&l2.to_hypermatrix()).unwrap());
}

#[test]
fn tblock_arithmetic() {
    let a = sq([[1, 2, 3], [2, 3, 1], [3, 1, 2]]).to_hypermatrix();
    let t = TBlock3D::new((1, 3), (2, 3), (1, 2), 1).unwrap();
    assert_eq!(apply_tblock(&apply_tblock(&a, &t).unwrap(), &t.negated()).unwrap(), a);

    let c = xi(&TBlock3D::contiguous(2, 1, 3).pattern(4).unwrap());
    let nonzero: Vec<i32> = c.entries().iter().copied().filter(|&v| v != 0).collect();
    assert_eq!(nonzero, vec![1]);
    assert_eq!(c.get(2, 1, 3), 1);
}

#[test]
fn decomposition_into_contiguous_blocks() {
    let t = TBlock3D::contiguous(1, 2, 3);
    assert_eq!(decompose_tblock(&t), vec![t]);
    for (t, count) in [
        (TBlock3D::new((1, 3), (2, 3), (1, 2), 1).unwrap(), 2),
        (TBlock3D::new((1, 3), (1, 3), (2, 4), 1).unwrap(), 8),
        (TBlock3D::new((1, 4), (2, 4), (1, 2), 1).unwrap(), 6),
    ] {
        let parts = decompose_tblock(&t);
        assert_eq!(parts.len(), count);
        assert!(parts.iter().all(|p| p.is_contiguous() && p.sign == 1));
        assert_eq!(sum_patterns(4, &parts), t.pattern(4).unwrap());
    }
}

#[test]
fn comparing_with_sigma_domination_of_the_symbol_matrix() {
    let a = sq([[1, 2, 3, 4], [4, 3, 1, 2], [3, 4, 2, 1], [2, 1, 4, 3]]);
    let c = sq([[2, 1, 3, 4], [4, 3, 1, 2], [3, 4, 2, 1], [1, 2, 4, 3]]);
    let d = sq([[2, 1, 3, 4], [3, 4, 1, 2], [4, 3, 2, 1], [1, 2, 4, 3]]);
    assert!(bruhat_leq(&a, &c).unwrap());
    assert!(bruhat_leq(&d, &c).unwrap());
    assert!(!bruhat_leq(&a, &d).unwrap() && !bruhat_leq(&d, &a).unwrap());
    // Domination of Sigma over the symbol values does compare A and D.
    let s = |l: &LatinSquare| sigma(&l.to_matrix());
    assert!(s(&d).dominates(&s(&a)));
    assert!(s(&c).dominates(&s(&d)));

    // At order 3 the two orders coincide.
    let l3 = latin(3);
    for x in &l3 {
        for y in &l3 {
            assert_eq!(bruhat_leq(x, y).unwrap(), s(y).dominates(&s(x)));
        }
    }
}

#[test]
fn one_square_below_three_incomparable_ones() {
    let a = sq([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]);
    let b = sq([[2, 1, 3, 4], [1, 2, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]);
    let c = sq([[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2], [4, 3, 2, 1]]);
    let d = sq([[1, 4, 3, 2], [2, 1, 4, 3], [3, 2, 1, 4], [4, 3, 2, 1]]);
    let all = [&a, &b, &c, &d];
    for (x, p) in all.iter().enumerate() {
        for (y, q) in all.iter().enumerate() {
            let want = x == y || x == 0;
            assert_eq!(bruhat_leq(*p, *q).unwrap(), want, "pair ({x},{y})");
        }
    }
}

#[test]
fn partial_order_axioms_on_c3() {
    let c = c3();
    let p = FinitePoset::from_leq(c.len(), |a, b| bruhat_leq(&c[a], &c[b]).unwrap());
    assert!(p.check_axioms().is_ok());
    assert!((0..c.len()).all(|a| bruhat_leq(&c[a], &c[a]).unwrap()));
}

#[test]
fn cover_relation_on_c3() {
    let c = c3();
    let p = FinitePoset::from_leq(c.len(), |a, b| bruhat_leq(&c[a], &c[b]).unwrap());
    let reduction: HashSet<(usize, usize)> = p.cover_pairs().into_iter().collect();
    let mut covers = HashSet::new();
    for a in 0..c.len() {
        assert!(!covers_in_lattice(&c[a], &c[a]).unwrap());
        for b in 0..c.len() {
            if covers_in_lattice(&c[a], &c[b]).unwrap() {
                covers.insert((a, b));
            }
        }
    }
    assert_eq!(covers, reduction);

    let min = minimum_element(3);
    // The drawn diagram has 72 edges, four of them at the bottom.
    assert_eq!(covers.len(), 72);
    let above: Vec<_> = c.iter().filter(|x| covers_in_lattice(&min, x).unwrap()).collect();
    assert_eq!(above.len(), 4);
    assert!(c.iter().all(|x| bruhat_leq(&min, x).unwrap()));
}

#[test]
fn order_mismatch_is_an_error() {
    let a = sq([[1, 2], [2, 1]]);
    let b = sq([[1, 2, 3], [2, 3, 1], [3, 1, 2]]);
    assert!(matches!(bruhat_leq(&a, &b), Err(Error::OrderMismatch { .. })));
}

#[test]
fn subarray_counts() {
    let l = sq([[1, 2, 3], [2, 3, 1], [3, 1, 2]]);
    let empty = Subarray::new(l.clone(), []).unwrap();
    assert!((1..=3).all(|k| subarray_count(&empty, 3, 3, k) == 0));
    let x2 = Subarray::new(
        sq([[2, 3, 1, 4], [3, 2, 4, 1], [1, 4, 3, 2], [4, 1, 2, 3]]),
        [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)],
    )
    .unwrap();
    assert_eq!(subarray_count(&x2, 1, 1, 1), 0);
    assert!(is_decreasing_replacement(&x2, &x2));
    assert!(Subarray::new(l, [(4, 1)]).is_err());
}

#[test]
fn decreasing_replacements_characterize_the_order_on_l3() {
    let l3 = latin(3);
    let mut loose = 0;
    for l1 in &l3 {
        for l2 in &l3 {
            let (x1, x2) = Subarray::differing(l1, l2).unwrap();
            let leq = bruhat_leq(l1, l2).unwrap();
            assert_eq!(leq, is_decreasing_replacement_everywhere(&x2, &x1), "{l1:?} vs {l2:?}");
            let on_positions = is_decreasing_replacement(&x2, &x1);
            assert!(!leq || on_positions);
            loose += usize::from(on_positions && !leq);
        }
    }
    assert_eq!(loose, 3);
}

#[test]
fn comparing_only_on_positions_is_not_enough() {
    let l1 = sq([[1, 2, 3], [2, 3, 1], [3, 1, 2]]);
    let l2 = sq([[2, 1, 3], [1, 3, 2], [3, 2, 1]]);
    let (x1, x2) = Subarray::differing(&l1, &l2).unwrap();
    assert!(!x1.positions().contains(&(2, 2)));
    assert!(is_decreasing_replacement(&x2, &x1));
    assert!(!is_decreasing_replacement_everywhere(&x2, &x1));
    assert!(!bruhat_leq(&l1, &l2).unwrap());
    let (c1, c2) = (xi(&l1.to_hypermatrix()), xi(&l2.to_hypermatrix()));
    assert_eq!((c1.get(2, 2, 1), c2.get(2, 2, 1)), (1, 2));
}

#[test]
fn decreasing_replacements_on_sampled_l4_pairs() {
    let l4 = latin(4);
    let mut compared = 0;
    for (a, l1) in l4.iter().enumerate().step_by(7) {
        for l2 in l4.iter().skip(a % 5).step_by(11) {
            let (x1, x2) = Subarray::differing(l1, l2).unwrap();
            let leq = bruhat_leq(l1, l2).unwrap();
            assert_eq!(leq, is_decreasing_replacement_everywhere(&x2, &x1));
            assert!(!leq || is_decreasing_replacement(&x2, &x1));
            compared += usize::from(leq);
        }
    }
    assert!(compared > 0);
}

#[test]
fn latin_covers() {
    let l3 = latin(3);
    let limits = Limits::default();
    let mut edges = 0;
    for a in &l3 {
        assert!(!covers_in_latin_poset(a, a, &limits).unwrap());
        for b in &l3 {
            edges += usize::from(covers_in_latin_poset(a, b, &limits).unwrap());
        }
    }
    assert_eq!(edges, 24);

    let (long, short) = verify::nongraded_chains();
    for chain in [&long, &short] {
        for w in chain.windows(2) {
            assert!(covers_in_latin_poset(&w[0], &w[1], &limits).unwrap());
        }
    }
    assert_eq!((long.len() - 1, short.len() - 1), (3, 2));

    let six = sq([[1, 2, 3, 4, 5, 6], [2, 3, 4, 5, 6, 1], [3, 4, 5, 6, 1, 2], [4, 5, 6, 1, 2, 3], [5, 6, 1, 2, 3, 4], [6, 1, 2, 3, 4, 5]]);
    assert!(matches!(
        covers_in_latin_poset(&six, &six, &limits),
        Err(Error::CapExceeded { cap: LATIN_COVER_MAX_N, .. })
    ));
}

/// Every 2x2 subsquare, found by checking all row, column and symbol pairs.
fn brute_force_intercalates(l: &LatinSquare) -> usize {
    let n = l.order();
    let mut count = 0;
    for r1 in 1..=n {
        for r2 in r1 + 1..=n {
            for c1 in 1..=n {
                for c2 in c1 + 1..=n {
                    for a in 1..=n {
                        for b in a + 1..=n {
                            let cells = [l.get(r1, c1), l.get(r1, c2), l.get(r2, c1), l.get(r2, c2)];
                            if cells == [a, b, b, a] || cells == [b, a, a, b] {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

#[test]
fn intercalates() {
    let klein = sq([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]);
    let found = find_intercalates(&klein);
    assert_eq!(found.len(), 12);
    let first = found.iter().find(|ic| ic.rows == (1, 2) && ic.cols == (1, 2)).unwrap();
    assert_eq!(first.symbols, (1, 2));
    assert!(!first.decreasing);
    let switched = apply_intercalate_switch(&klein, first).unwrap();
    assert_eq!(switched.to_rows()[0], vec![2, 1, 3, 4]);
    assert!(bruhat_leq(&klein, &switched).unwrap());

    assert!(find_intercalates(&sq([[1, 2, 3], [2, 3, 1], [3, 1, 2]])).is_empty());
    assert!(find_intercalates(&sq([[1]])).is_empty());
    for l in latin(4) {
        assert_eq!(find_intercalates(&l).len(), brute_force_intercalates(&l));
        for ic in find_intercalates(&l) {
            let after = apply_intercalate_switch(&l, &ic).unwrap();
            assert_eq!(bruhat_leq(&after, &l).unwrap(), ic.decreasing);
        }
    }
}

#[test]
fn full_row_swap_is_a_cycle_switch() {
    let l = sq([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]);
    let support: Vec<(usize, usize)> = (1..=4).flat_map(|c| [(1, c), (3, c)]).collect();
    let sw = apply_cycle_switch(&l, LineKind::Row, (1, 3), &support).unwrap();
    assert_eq!(sw.square.to_rows()[0], vec![3, 4, 1, 2]);
    assert_eq!(sw.square.to_rows()[2], vec![1, 2, 3, 4]);
    assert!(!sw.decreasing);
}

#[test]
fn decreasing_cycle_switches_move_down_in_l4() {
    let mut decreasing = 0;
    for l in latin(4) {
        for kind in LineKind::ALL {
            for p in 1..=4 {
                for q in p + 1..=4 {
                    for cycle in find_cycles(&l, kind, (p, q)).unwrap() {
                        let sw = apply_cycle_switch(&l, kind, (p, q), &cycle).unwrap();
                        assert!(is_latin(&sw.square.to_matrix()));
                        if sw.decreasing {
                            decreasing += 1;
                            assert!(bruhat_leq(&sw.square, &l).unwrap(), "{kind:?} ({p},{q}) on {l:?}");
                        }
                    }
                }
            }
        }
    }
    assert!(decreasing > 0);
}

#[test]
fn greedy_witnesses_agree_with_domination_on_l3() {
    let l3 = latin(3);
    for a in &l3 {
        for b in &l3 {
            let w = greedy_tblock_witness(&a.to_hypermatrix(), &b.to_hypermatrix()).unwrap();
            assert_eq!(w.reachable, bruhat_leq(a, b).unwrap());
            if w.reachable {
                assert_eq!(sum_patterns(3, &w.steps), a.to_hypermatrix().sub(&b.to_hypermatrix()).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_axioms_on_sampled_c4(x in 0usize..62858, y in 0usize..62858, z in 0usize..62858) {
        let c = c4();
        let (a, b, d) = (&c[x], &c[y], &c[z]);
        prop_assert!(bruhat_leq(a, a).unwrap());
        if bruhat_leq(a, b).unwrap() && bruhat_leq(b, a).unwrap() {
            prop_assert_eq!(a, b);
        }
        let m = meet(a, b).unwrap();
        prop_assert!(bruhat_leq(&m, a).unwrap() && bruhat_leq(&m, b).unwrap());
        if bruhat_leq(a, b).unwrap() && bruhat_leq(b, d).unwrap() {
            prop_assert!(bruhat_leq(a, d).unwrap());
        }
    }

    /// A positive contiguous T-block adds exactly one to one corner sum, so it
    /// lowers the rank by one whenever the result stays in the lattice.
    #[test]
    fn contiguous_tblock_lowers_rank_by_one(x in 0usize..62858, i in 1usize..4, j in 1usize..4, k in 1usize..4) {
        let c = &c4()[x];
        let a = c.to_hypermatrix();
        let b = apply_tblock(&a, &TBlock3D::contiguous(i, j, k)).unwrap();
        prop_assert_eq!(xi(&b).total(), xi(&a).total() + 1);
        if is_in_xi_preimage(&b) {
            prop_assert_eq!(rank_of(&b).unwrap(), rank_of(&a).unwrap() - 1);
            let cb = CornerSumHypermatrix::from_hypermatrix(&b).unwrap();
            prop_assert!(covers_in_lattice(&cb, c).unwrap());
        }
    }
}
