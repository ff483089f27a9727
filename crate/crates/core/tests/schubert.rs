//! Restriction, products, pairing and pushforward on small Lagrangian
//! Grassmannians.

use num_bigint::BigInt;
use num_traits::Zero;
use qschur::partition::{partitions_in_box, strict_partitions_in_staircase};
use qschur::schubert::{
    lg_product, pairing_lg, pairing_lg_via_product, pushforward, restrict, restrict_with,
    staircase_duality_holds, verify_eq24, GRoute, SchubertExpansionLG,
};
use qschur::{g_coeff, Partition, StrictPartition};

#[test]
fn eq24_exhaustive_small_n() {
    for n in 2..=3 {
        let top = n * (n + 1) / 2;
        for w in 0..=top {
            for lambda in strict_partitions_in_staircase(w, n) {
                for mu in partitions_in_box(w + n * (n - 1) / 2, n) {
                    assert!(verify_eq24(&lambda, &mu, n), "n={n} {lambda:?} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn staircase_self_duality() {
    for n in 0..=4 {
        assert!(staircase_duality_holds(n), "n={n}");
    }
}

#[test]
fn pairing_agrees_with_product() {
    for n in 1..=4 {
        let top = n * (n + 1) / 2;
        for w in 0..=top {
            for a in strict_partitions_in_staircase(w, n) {
                for b in strict_partitions_in_staircase(top - w, n) {
                    let x = SchubertExpansionLG::basis_class(n, a.clone()).unwrap();
                    let y = SchubertExpansionLG::basis_class(n, b.clone()).unwrap();
                    let dual = pairing_lg(&x, &y).unwrap();
                    assert_eq!(dual, pairing_lg_via_product(&x, &y).unwrap(), "{a:?} {b:?}");
                    let expected = BigInt::from(u8::from(b == a.complement(n).unwrap()));
                    assert_eq!(dual, expected);
                }
            }
        }
    }
}

#[test]
fn restriction_is_stable_and_nonnegative() {
    for w in 0..=7 {
        for mu in qschur::partitions_of(w) {
            let first = mu.len().max(mu.part(0)).max(1);
            let wide = restrict(&mu, w.max(first)).unwrap();
            assert!(wide.is_nonnegative());
            for n in first..=w {
                let r = restrict(&mu, n).unwrap();
                assert!(r.is_nonnegative());
                for (lambda, c) in r.terms() {
                    assert_eq!(*c, wide.coeff(lambda), "{mu:?} n={n} {lambda:?}");
                }
            }
        }
    }
}

#[test]
fn routes_agree_on_restriction() {
    for mu in ["3,2,1", "4,2,2,1", "3^3"] {
        let mu: Partition = mu.parse().unwrap();
        let n = 9;
        let base = restrict_with(&mu, n, GRoute::Tableau).unwrap();
        for route in GRoute::ALL {
            assert_eq!(restrict_with(&mu, n, route).unwrap(), base, "{mu:?} {route:?}");
        }
    }
}

#[test]
fn pushforward_matches_pairing_definition() {
    for n in 1..=3 {
        for w in 0..=n * (n + 1) / 2 {
            for lambda in strict_partitions_in_staircase(w, n) {
                let push = pushforward(&lambda, n).unwrap();
                assert!(push.is_nonnegative());
                for (mu, c) in push.terms() {
                    // m_{λμ} = ∫ σ'_λ · i^*(σ_{μ^★})
                    let star = mu.complement_box(n).unwrap();
                    let pulled = restrict(&star, n).unwrap();
                    let point = SchubertExpansionLG::basis_class(n, lambda.clone()).unwrap();
                    let via = pairing_lg_via_product(&point, &pulled).unwrap();
                    assert_eq!(*c, via, "n={n} {lambda:?} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn products_truncate() {
    let two = StrictPartition::new(vec![2]).unwrap();
    let one = StrictPartition::new(vec![1]).unwrap();
    let full = lg_product(&two, &one, 3).unwrap();
    let cut = lg_product(&two, &one, 2).unwrap();
    assert_eq!(full.coeff(&StrictPartition::new(vec![3]).unwrap()), BigInt::from(2));
    assert!(cut.coeff(&StrictPartition::new(vec![3]).unwrap()).is_zero());
    assert_eq!(g_coeff(&StrictPartition::new(vec![3]).unwrap(), &"2,1".parse().unwrap()), 1);
}
