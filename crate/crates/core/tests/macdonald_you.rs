//! The generalized Macdonald–You formula on the flagship partition
//! `(5,5,5,3,1,1,1) = (4,3,2|6,2,1)` and exhaustively on small weights.

use num_bigint::BigInt;
use qschur::macdonald_you::{
    g_from_my, my_expansion, my_terms, verify_eq12, verify_prop3, verify_prop4, Variant,
};
use qschur::{g_coeff, partitions_of, strict_partitions_of, Partition, Sign, StrictPartition};

const FLAGSHIP_INDICES: [&[usize]; 29] = [
    &[11, 6, 4],
    &[11, 6, 3, 1],
    &[11, 5, 4, 1],
    &[11, 5, 3, 2],
    &[10, 7, 4],
    &[10, 7, 3, 1],
    &[10, 6, 5],
    &[10, 6, 4, 1],
    &[10, 6, 3, 2],
    &[10, 5, 4, 2],
    &[10, 5, 3, 2, 1],
    &[9, 7, 5],
    &[9, 7, 4, 1],
    &[9, 7, 3, 2],
    &[9, 6, 5, 1],
    &[9, 6, 4, 2],
    &[9, 6, 3, 2, 1],
    &[9, 5, 4, 3],
    &[9, 5, 4, 2, 1],
    &[8, 7, 5, 1],
    &[8, 7, 4, 2],
    &[8, 7, 3, 2, 1],
    &[8, 6, 5, 2],
    &[8, 6, 4, 3],
    &[8, 6, 4, 2, 1],
    &[8, 5, 4, 3, 1],
    &[7, 6, 5, 3],
    &[7, 6, 5, 2, 1],
    &[7, 6, 4, 3, 1],
];

const FLAGSHIP_G: [u64; 29] = [
    1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1, 1, 2, 2, 2, 6, 2, 2, 2, 1, 3, 1, 3, 3, 3, 1, 1, 1, 1,
];

fn flagship() -> Partition {
    "5^3,3,1^3".parse().unwrap()
}

fn sp(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

#[test]
fn flagship_expansion_matches_published_list() {
    let e = my_expansion(&flagship(), Variant::AB).unwrap();
    let listed: Vec<(Vec<usize>, BigInt)> =
        e.terms().rev().map(|(k, c)| (k.parts().to_vec(), c.clone())).collect();
    let expected: Vec<(Vec<usize>, BigInt)> = FLAGSHIP_INDICES
        .iter()
        .zip(FLAGSHIP_G)
        .map(|(idx, g)| (idx.to_vec(), BigInt::from(8 * g)))
        .collect();
    assert_eq!(listed, expected);
    assert_eq!(my_expansion(&flagship(), Variant::CD).unwrap(), e);
}

#[test]
fn flagship_g_values_three_routes() {
    let mu = flagship();
    let from_my = g_from_my(&mu).unwrap();
    for (idx, g) in FLAGSHIP_INDICES.iter().zip(FLAGSHIP_G) {
        let lambda = sp(idx);
        assert_eq!(from_my.coeff(&lambda), BigInt::from(g), "{lambda:?}");
        assert_eq!(g_coeff(&lambda, &mu), g, "{lambda:?}");
    }
    assert_eq!(from_my.len(), 29);
}

#[test]
fn flagship_signed_terms() {
    let shown = |t: &qschur::macdonald_you::MYTerm| {
        t.straightened().map(|(s, a, b)| (s, a.parts().to_vec(), b.parts().to_vec()))
    };
    let ab: Vec<_> = my_terms(&flagship(), Variant::AB).iter().map(shown).collect();
    let expected_ab = vec![
        Some((Sign::Plus, vec![], vec![6, 5, 4, 3, 2, 1])),
        Some((Sign::Minus, vec![5], vec![6, 4, 3, 2, 1])),
        Some((Sign::Plus, vec![4], vec![6, 5, 3, 2, 1])),
        Some((Sign::Minus, vec![3], vec![6, 5, 4, 2, 1])),
        Some((Sign::Minus, vec![5, 4], vec![6, 3, 2, 1])),
        Some((Sign::Plus, vec![5, 3], vec![6, 4, 2, 1])),
        Some((Sign::Minus, vec![4, 3], vec![6, 5, 2, 1])),
        Some((Sign::Plus, vec![5, 4, 3], vec![6, 2, 1])),
    ];
    assert_eq!(ab, expected_ab);

    let cd: Vec<_> = my_terms(&flagship(), Variant::CD).iter().filter_map(shown).collect();
    let expected_cd = vec![
        (Sign::Plus, vec![3, 2], vec![7, 4, 3, 2]),
        (Sign::Plus, vec![7, 3, 2], vec![4, 3, 2]),
    ];
    assert_eq!(cd, expected_cd);
    assert_eq!(my_terms(&flagship(), Variant::CD).len(), 8);
}

#[test]
fn flagship_linear_relations() {
    let mu = flagship();
    for idx in FLAGSHIP_INDICES {
        assert!(verify_prop4(&mu, &sp(idx)), "{idx:?}");
    }
    // A strict partition of 21 with g = 0.
    let absent = sp(&[21]);
    assert_eq!(g_coeff(&absent, &mu), 0);
    assert!(verify_prop4(&mu, &absent));
}

#[test]
fn identities_hold_up_to_weight_ten() {
    for d in 0..=10 {
        for mu in partitions_of(d) {
            assert!(verify_eq12(&mu), "eq12 at {mu:?}");
            assert!(verify_prop3(&mu), "twin identity at {mu:?}");
            let g = g_from_my(&mu).unwrap();
            assert!(g.is_nonnegative(), "{mu:?}");
        }
    }
}

#[test]
fn linear_relations_up_to_weight_seven() {
    for d in 0..=7 {
        for mu in partitions_of(d) {
            for lambda in strict_partitions_of(d) {
                assert!(verify_prop4(&mu, &lambda), "{mu:?} {lambda:?}");
            }
        }
    }
}
