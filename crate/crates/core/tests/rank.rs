use hyperlattice::enumerate::poset::{bfs_depths, longest_path_lengths, FinitePoset};
use hyperlattice::rank::{bridging_identity_check, lattice_rank_by_summation, m_by_summation, rank_of_corner_sum};
use hyperlattice::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(n: usize) -> Vec<CornerSumHypermatrix> {
    enumerate_corner_sum(n, &EnumOptions::default()).unwrap().into_elements()
}

fn latin(n: usize) -> Vec<LatinSquare> {
    enumerate_latin(n, &EnumOptions::default()).unwrap().into_elements()
}

/// Depth of every element above the bottom along cover edges of an order predicate.
fn depths<T>(items: &[T], leq: impl Fn(&T, &T) -> bool) -> (Vec<usize>, usize) {
    let p = FinitePoset::from_leq(items.len(), |a, b| leq(&items[a], &items[b]));
    let bottom = p.minimal_elements();
    assert_eq!(bottom.len(), 1);
    let d = bfs_depths(items.len(), &p.cover_pairs(), bottom[0]).into_iter().map(Option::unwrap).collect();
    let longest = longest_path_lengths(items.len(), &p.cover_pairs()).unwrap().into_iter().max().unwrap();
    (d, longest)
}

#[test]
fn closed_forms_match_summation() {
    for n in 1..=8 {
        assert_eq!(m_closed_form(n), m_by_summation(n), "m({n})");
        assert_eq!(lattice_rank(n), lattice_rank_by_summation(n), "rank({n})");
    }
    assert_eq!(m_closed_form(1), 1);
    assert_eq!(m_closed_form(3), 76);
    assert_eq!(lattice_rank(3), 8);
}

#[test]
fn ranks_are_depths_in_c3() {
    let c3 = c(3);
    let (d, longest) = depths(&c3, |a, b| bruhat_leq(a, b).unwrap());
    for (x, depth) in c3.iter().zip(d) {
        assert_eq!(rank_of_corner_sum(x), depth as i64);
        assert_eq!(rank_of(&x.to_hypermatrix()).unwrap(), depth as i64);
    }
    assert_eq!(longest as i64, lattice_rank(3));
    assert_eq!(rank_of(&minimum_element(3).to_hypermatrix()).unwrap(), 0);
    assert_eq!(rank_of(&maximum_element(3).to_hypermatrix()).unwrap(), 8);
}

#[test]
fn asm_rank_is_depth_in_the_asm_lattice() {
    for n in 1..=4 {
        let asms = enumerate_asms(n, &EnumOptions::default()).unwrap().into_elements();
        let (d, longest) = depths(&asms, |a, b| sigma(a).dominates(&sigma(b)));
        for (m, depth) in asms.iter().zip(d) {
            assert_eq!(asm_rank(m).unwrap(), depth as i64, "{m:?}");
        }
        let j = Matrix::anti_identity(n);
        assert_eq!(asm_rank(&j).unwrap(), longest as i64);
        assert_eq!(asm_rank(&Matrix::identity(n)).unwrap(), 0);
    }
    assert_eq!(asm_rank(&Matrix::anti_identity(3)).unwrap(), 4);
    assert!(matches!(asm_rank(&Matrix::from_rows(&[[1, 1], [0, 0]]).unwrap()), Err(Error::NotAsm)));
}

#[test]
fn weights_of_small_fixtures() {
    let cyclic = LatinSquare::from_rows(&[[1, 2, 3], [2, 3, 1], [3, 1, 2]]).unwrap().to_hypermatrix();
    assert_eq!(rho(&cyclic).unwrap(), 75);
    let one = LatinSquare::from_rows(&[[1]]).unwrap().to_hypermatrix();
    assert_eq!(rho(&one).unwrap(), 1);
    assert!(sigma_sum_identity_check(&one).unwrap());
    assert_eq!(rank_profile(&one).unwrap(), RankProfile { n: 1, rho: 1, rank: 0, max_rank: 0 });
    assert!(matches!(rho(&Hypermatrix::zeros(3)), Err(Error::NotInPreimage)));
}

#[test]
fn identities_over_the_order_3_preimage() {
    for x in c(3) {
        let a = x.to_hypermatrix();
        assert!(sigma_sum_identity_check(&a).unwrap());
        assert!(bridging_identity_check(&a));
        // Direct evaluation of both sides of the sum identity.
        let lhs = rho(&a).unwrap() + {
            let s = sigma(&latin_like_square(&a));
            (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).map(|(i, j)| i64::from(s.get(i, j))).sum::<i64>()
        };
        assert_eq!(lhs, 144);
    }
}

#[test]
fn plane_rank_sums_on_latin_squares() {
    assert!(rank_sum_identity_check(&LatinSquare::from_rows(&[[1]]).unwrap()));
    for l in latin(3) {
        assert!(rank_sum_identity_check(&l));
        assert_eq!(hyperlattice::rank::plane_rank_sums(&l), [6, 6, 6]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let l4 = latin(4);
    for l in l4.choose_multiple(&mut rng, 64) {
        assert_eq!(hyperlattice::rank::plane_rank_sums(l), [20, 20, 20]);
    }
}

#[test]
fn the_sum_identity_constant_at_order_4() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for x in c(4).choose_multiple(&mut rng, 200) {
        assert!(sigma_sum_identity_check(&x.to_hypermatrix()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn latin_squares_of_order_5_satisfy_the_identities(seed in any::<u64>()) {
        let l5 = latin_sample_5(seed);
        let a = l5.to_hypermatrix();
        prop_assert!(rank_sum_identity_check(&l5));
        prop_assert!(sigma_sum_identity_check(&a).unwrap());
        prop_assert!(bridging_identity_check(&a));
        let r = rank_of(&a).unwrap();
        prop_assert!((0..=lattice_rank(5)).contains(&r));
    }
}

/// A Latin square of order 5 from a cyclic square by shuffling rows, columns and symbols.
fn latin_sample_5(seed: u64) -> LatinSquare {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perms: Vec<Vec<usize>> = (0..3).map(|_| (0..5).collect()).collect();
    for p in &mut perms {
        p.shuffle(&mut rng);
    }
    let rows: Vec<Vec<usize>> =
        (0..5).map(|i| (0..5).map(|j| perms[2][(perms[0][i] + perms[1][j]) % 5] + 1).collect()).collect();
    LatinSquare::from_rows(&rows).unwrap()
}
