use std::sync::OnceLock;

use hyperlattice::enumerate::poset::FinitePoset;
use hyperlattice::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c3() -> &'static [CornerSumHypermatrix] {
    static C3: OnceLock<Vec<CornerSumHypermatrix>> = OnceLock::new();
    C3.get_or_init(|| enumerate_corner_sum(3, &EnumOptions::default()).unwrap().into_elements())
}

fn c4() -> &'static [CornerSumHypermatrix] {
    static C4: OnceLock<Vec<CornerSumHypermatrix>> = OnceLock::new();
    C4.get_or_init(|| enumerate_corner_sum(4, &EnumOptions::default()).unwrap().into_elements())
}

fn poset(elements: &[CornerSumHypermatrix]) -> FinitePoset {
    FinitePoset::from_leq(elements.len(), |a, b| bruhat_leq(&elements[a], &elements[b]).unwrap())
}

#[test]
fn lattice_laws_on_c3() {
    let c = c3();
    for x in c {
        assert_eq!(&meet(x, x).unwrap(), x);
        assert_eq!(&join(x, x).unwrap(), x);
        for y in c {
            let (m, j) = (meet(x, y).unwrap(), join(x, y).unwrap());
            assert_eq!(m, meet(y, x).unwrap());
            assert_eq!(j, join(y, x).unwrap());
            assert_eq!(&meet(x, &join(x, y).unwrap()).unwrap(), x);
            assert_eq!(&join(x, &meet(x, y).unwrap()).unwrap(), x);
            for z in c {
                assert_eq!(meet(&m, z).unwrap(), meet(x, &meet(y, z).unwrap()).unwrap());
                assert_eq!(join(&j, z).unwrap(), join(x, &join(y, z).unwrap()).unwrap());
                assert!(is_distributive_triple(x, y, z).unwrap());
            }
        }
    }
}

#[test]
fn bounds_agree_with_the_abstract_poset() {
    let c = c3();
    let p = poset(c);
    assert!(p.is_lattice());
    for a in 0..c.len() {
        for b in 0..c.len() {
            assert_eq!(c[p.meet(a, b).unwrap()], meet(&c[a], &c[b]).unwrap());
            assert_eq!(c[p.join(a, b).unwrap()], join(&c[a], &c[b]).unwrap());
        }
    }
}

#[test]
fn extremes_bound_every_element() {
    for (n, elements) in [(3, c3()), (4, c4())] {
        let (lo, hi) = (minimum_element(n), maximum_element(n));
        assert!(elements.contains(&lo) && elements.contains(&hi));
        for e in elements {
            assert!(bruhat_leq(&lo, e).unwrap());
            assert!(bruhat_leq(e, &hi).unwrap());
        }
    }
}

#[test]
fn minimum_entries() {
    let m4 = minimum_element(4);
    for k in 1..=4 {
        assert_eq!(m4.get(2, 2, k), (2 * k as i32).min(4));
    }
    for n in 1..=6 {
        let m = minimum_element(n);
        for i in 0..=n {
            for j in 0..=n {
                assert_eq!(m.get(i, j, n), (i * j) as i32);
            }
        }
    }
    // The top of C_3 is the grid with a 3 in the centre of the middle plane.
    assert_eq!(grid_notation(&maximum_element(3).to_hypermatrix()).compact(), "3 2 1 / 2 1-2+3 2 / 1 2 3");
}

#[test]
fn rank_span_equals_the_closed_form() {
    for n in 1..=8 {
        let span = minimum_element(n).as_array().total() - maximum_element(n).as_array().total();
        assert_eq!(span, lattice_rank(n));
    }
}

#[test]
fn un_construction() {
    let u = construct_un(4).unwrap();
    assert_eq!([1, 2, 3].map(|k| u.get(2, 2, k)), [2, 3, 4]);
    assert_eq!(xi_inverse(u.as_array()).unwrap().get(2, 2, 2), -1);
    assert!(!is_permutation_hypermatrix(&u.to_hypermatrix()));

    let x = plane_sum(u.as_array());
    assert_eq!(x.to_rows(), vec![vec![4, 7, 9, 10], vec![7, 13, 17, 20], vec![9, 17, 24, 30], vec![10, 20, 30, 40]]);
    assert_eq!(plane_sum(minimum_element(4).as_array()).get(2, 2), 14);

    assert!(matches!(construct_un(3), Err(Error::OrderTooSmall { .. })));
    assert_eq!(lower_covers(&u), vec![minimum_element(4)]);
}

#[test]
fn join_irreducibles_of_c3_and_c4() {
    let c = c3();
    let p = poset(c);
    let by_poset: Vec<usize> = (0..c.len()).filter(|&a| p.down_set(a).iter().filter(|&b| b != a && p.cover_pairs().contains(&(b, a))).count() == 1).collect();
    let ji = join_irreducibles(c);
    assert_eq!(ji, by_poset);
    // A finite distributive lattice has as many join-irreducibles as its length.
    assert_eq!(ji.len(), 8);
    assert_eq!(ji.len() as i64, lattice_rank(3));
    let bottom = c.iter().position(|x| *x == minimum_element(3)).unwrap();
    assert!(!ji.contains(&bottom));

    let u = construct_un(4).unwrap();
    let idx = c4().iter().position(|x| *x == u).unwrap();
    let ji4 = join_irreducibles(c4());
    assert!(ji4.contains(&idx));
    assert_eq!(ji4.len() as i64, lattice_rank(4));
}

#[test]
fn covers_move_rank_by_one() {
    for x in c3() {
        let r = LatticeElement::new(x.clone()).rank;
        for up in upper_covers(x) {
            assert!(covers_in_lattice(x, &up).unwrap());
            assert_eq!(LatticeElement::new(up).rank, r + 1);
        }
        for down in lower_covers(x) {
            assert_eq!(LatticeElement::new(down).rank, r - 1);
        }
    }
}

#[test]
fn every_maximal_chain_of_c3_has_the_same_length() {
    let c = c3();
    let covers: Vec<(usize, usize)> = poset(c).cover_pairs();
    let top = c.iter().position(|x| *x == maximum_element(3)).unwrap();
    let bottom = c.iter().position(|x| *x == minimum_element(3)).unwrap();
    // Lengths of every maximal chain from the bottom, by dynamic programming over sets.
    let mut lengths: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); c.len()];
    lengths[bottom].insert(0);
    let order = hyperlattice::enumerate::poset::topological_order(c.len(), &covers).unwrap();
    for v in order {
        let here = lengths[v].clone();
        for &(a, b) in &covers {
            if a == v {
                lengths[b].extend(here.iter().map(|l| l + 1));
            }
        }
    }
    assert_eq!(lengths[top].iter().copied().collect::<Vec<_>>(), vec![8]);
}

#[test]
fn random_triples_of_c4_distribute() {
    let c = c4();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let t: Vec<&CornerSumHypermatrix> = c.choose_multiple(&mut rng, 3).collect();
        assert!(is_distributive_triple(t[0], t[1], t[2]).unwrap());
    }
}

#[test]
fn completion_reports() {
    assert!(dm_witness_report(2).is_err());
    let three = dm_witness_report(3).unwrap();
    assert!(matches!(three, DmReport::CompletionHolds { .. }));
    assert!(three.confirmed());
    let four = dm_witness_report(4).unwrap();
    match &four {
        DmReport::NotCompletion { report, .. } => {
            assert!(report.covers_only_minimum);
            assert!(!report.preimage_is_latin);
            assert_eq!(report.non_latin_entry.position, [2, 2, 2]);
            assert_eq!(report.non_latin_entry.value, -1);
        }
        other => panic!("unexpected report {other:?}"),
    }
    assert!(four.confirmed());
    let json = serde_json::to_value(&four).unwrap();
    assert_eq!(json["result"], "not-completion");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn meet_and_join_are_bounds_in_c4(x in 0usize..62858, y in 0usize..62858) {
        let c = c4();
        let (a, b) = (&c[x], &c[y]);
        let (m, j) = (meet(a, b).unwrap(), join(a, b).unwrap());
        prop_assert!(bruhat_leq(&m, a).unwrap() && bruhat_leq(&m, b).unwrap());
        prop_assert!(bruhat_leq(a, &j).unwrap() && bruhat_leq(b, &j).unwrap());
        prop_assert_eq!(
            LatticeElement::new(m).rank + LatticeElement::new(j).rank,
            LatticeElement::new(a.clone()).rank + LatticeElement::new(b.clone()).rank
        );
    }
}
