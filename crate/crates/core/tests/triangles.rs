use std::collections::HashSet;
use std::sync::OnceLock;

use hyperlattice::triangles::{asm_to_monotone_triangle, interlacing_near_miss, monotone_triangle_to_asm};
use hyperlattice::*;
use proptest::prelude::*;

fn c3() -> &'static [Hypermatrix] {
    static C3: OnceLock<Vec<Hypermatrix>> = OnceLock::new();
    C3.get_or_init(|| enumerate_corner_sum(3, &EnumOptions::default()).unwrap().into_elements().iter().map(|c| c.to_hypermatrix()).collect())
}

fn c4() -> &'static [CornerSumHypermatrix] {
    static C4: OnceLock<Vec<CornerSumHypermatrix>> = OnceLock::new();
    C4.get_or_init(|| enumerate_corner_sum(4, &EnumOptions::default()).unwrap().into_elements())
}

/// The order-3 element with a -1 in the centre of its middle plane.
fn centre_defect() -> Hypermatrix {
    let planes = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [1, -1, 1], [0, 1, 0]], [[0, 0, 1], [0, 1, 0], [1, 0, 0]]];
    let ms: Vec<Matrix> = planes.iter().map(|p| Matrix::from_rows(p).unwrap()).collect();
    Hypermatrix::from_planes(&ms).unwrap()
}

fn example_triangle() -> MonotoneHypertriangle {
    // rows[i - 1][k - 1] is row i of plane k.
    let rows = vec![
        vec![vec![1], vec![1, 2], vec![1, 2, 3]],
        vec![vec![1, 2], vec![1, 1, 2, 3], vec![1, 1, 2, 2, 3, 3]],
        vec![vec![1, 2, 3], vec![1, 1, 2, 2, 3, 3], vec![1, 1, 1, 2, 2, 2, 3, 3, 3]],
    ];
    MonotoneHypertriangle::from_rows(&rows).unwrap()
}

#[test]
fn worked_triangle_round_trip() {
    let t = example_triangle();
    assert!(t.is_valid());
    assert!(check_interlacing(&t));
    assert_eq!(t.row(3, 2), vec![1, 1, 2, 2, 3, 3]);
    assert_eq!(from_triangle(&t).unwrap(), centre_defect());
    assert_eq!(to_triangle(&centre_defect()).unwrap(), t);
    assert!(t.render().contains("1 1 2 2 3 3"));
}

#[test]
fn order_one() {
    let one = LatinSquare::from_rows(&[[1]]).unwrap().to_hypermatrix();
    let t = to_triangle(&one).unwrap();
    assert_eq!(t.rows(), vec![vec![vec![1]]]);
    assert_eq!(from_triangle(&t).unwrap(), one);
}

#[test]
fn bijection_on_order_3() {
    let mut images = HashSet::new();
    for a in c3() {
        let t = to_triangle(a).unwrap();
        assert!(t.is_valid());
        assert!(check_interlacing(&t));
        assert_eq!(&from_triangle(&t).unwrap(), a);
        images.insert(t);
    }
    let all = enumerate_monotone_hypertriangles(3, &EnumOptions::default()).unwrap().into_elements();
    assert_eq!(all.len(), 35);
    assert_eq!(all.into_iter().collect::<HashSet<_>>(), images);
}

#[test]
fn triangle_order_is_the_bruhat_order_on_order_3() {
    let c = c3();
    let ts: Vec<MonotoneHypertriangle> = c.iter().map(|a| to_triangle(a).unwrap()).collect();
    for (a, ta) in c.iter().zip(&ts) {
        assert!(triangle_leq(ta, ta).unwrap());
        for (b, tb) in c.iter().zip(&ts) {
            assert_eq!(triangle_leq(ta, tb).unwrap(), bruhat_leq(a, b).unwrap());
        }
    }
    let lo = to_triangle(&minimum_element(3).to_hypermatrix()).unwrap();
    let hi = to_triangle(&maximum_element(3).to_hypermatrix()).unwrap();
    assert!(triangle_leq(&lo, &hi).unwrap());
    assert!(!triangle_leq(&hi, &lo).unwrap());
    assert!(matches!(triangle_leq(&lo, &example_triangle()), Ok(true)));
    let one = to_triangle(&LatinSquare::from_rows(&[[1]]).unwrap().to_hypermatrix()).unwrap();
    assert!(matches!(triangle_leq(&lo, &one), Err(Error::OrderMismatch { .. })));
}

#[test]
fn near_miss_passes_interlacing_only() {
    let t = interlacing_near_miss();
    assert!(check_interlacing(&t));
    let v = t.violation().unwrap();
    assert_eq!((v.condition, v.plane), (3, 2));
    assert!(from_triangle(&t).is_err());
}

#[test]
fn malformed_rows_are_rejected() {
    let short = vec![vec![vec![1], vec![1, 2]], vec![vec![1, 2], vec![1, 1, 2]]];
    assert!(MonotoneHypertriangle::from_rows(&short).is_err());
    let decreasing = vec![vec![vec![1], vec![2, 1]], vec![vec![1, 2], vec![1, 1, 2, 2]]];
    assert!(MonotoneHypertriangle::from_rows(&decreasing).is_err());
    let out_of_range = vec![vec![vec![3], vec![1, 2]], vec![vec![1, 2], vec![1, 1, 2, 2]]];
    assert!(MonotoneHypertriangle::from_rows(&out_of_range).is_err());
}

#[test]
fn classical_triangles_of_asms() {
    let asms = enumerate_asms(3, &EnumOptions::default()).unwrap().into_elements();
    assert_eq!(asms.len(), 7);
    for m in &asms {
        let rows = asm_to_monotone_triangle(m).unwrap();
        assert_eq!(rows.last().unwrap(), &vec![1, 2, 3]);
        assert_eq!(&monotone_triangle_to_asm(&rows).unwrap(), m);
    }
    let centre = Matrix::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
    assert_eq!(asm_to_monotone_triangle(&centre).unwrap(), vec![vec![2], vec![1, 3], vec![1, 2, 3]]);
    assert!(monotone_triangle_to_asm(&[vec![2], vec![3, 1], vec![1, 2, 3]]).is_err());
}

#[test]
fn json_round_trip() {
    let t = example_triangle();
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["kind"], "triangle");
    let back: MonotoneHypertriangle = serde_json::from_value(v).unwrap();
    assert_eq!(back, t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bijection_on_sampled_order_4(x in 0usize..62858, y in 0usize..62858) {
        let (a, b) = (c4()[x].to_hypermatrix(), c4()[y].to_hypermatrix());
        let (ta, tb) = (to_triangle(&a).unwrap(), to_triangle(&b).unwrap());
        prop_assert!(check_interlacing(&ta));
        prop_assert_eq!(from_triangle(&ta).unwrap(), a.clone());
        prop_assert_eq!(triangle_leq(&ta, &tb).unwrap(), bruhat_leq(&a, &b).unwrap());
    }
}
