//! Hook lengths against the parts formulas, the specializations, and direct
//! standard-tableau counts; the specialized Macdonald–You identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use qschur::hooks::{
    count_shifted_syt, count_syt, factorial, fbar_parts, gbar_parts, gbar_sum, hooks_ordinary,
    hooks_shifted, specialize_q, specialize_q_function, specialize_schur, verify_prop6,
};
use qschur::macdonald_you::Variant;
use qschur::symfunc::qfun_to_m;
use qschur::{partitions_of, strict_partitions_of, Partition, StrictPartition};

#[test]
fn ordinary_hooks_three_ways() {
    for d in 0..=10 {
        for mu in partitions_of(d) {
            let bar = hooks_ordinary(&mu).bar;
            assert_eq!(fbar_parts(&mu, mu.len()).unwrap(), bar, "{mu:?}");
            assert_eq!(fbar_parts(&mu, mu.len() + 3).unwrap(), bar, "{mu:?} padded");
            assert_eq!(specialize_schur(&mu), bar, "{mu:?}");
        }
    }
}

#[test]
fn shifted_hooks_three_ways() {
    for d in 0..=10 {
        for lambda in strict_partitions_of(d) {
            let bar = hooks_shifted(&lambda).bar;
            assert_eq!(gbar_parts(&lambda), bar, "{lambda:?}");
            assert_eq!(specialize_q_function(&lambda), bar, "{lambda:?}");
            let q = qfun_to_m::<BigRational>(&lambda);
            assert_eq!(specialize_q(&q).unwrap(), bar, "{lambda:?}");
        }
    }
}

#[test]
fn degrees_count_standard_tableaux() {
    for d in 0..=8 {
        for mu in partitions_of(d) {
            let h = hooks_ordinary(&mu);
            assert_eq!(count_syt(&mu).unwrap(), h.degree(), "{mu:?}");
            assert_eq!(BigRational::from_integer(factorial(d)) * &h.bar, BigRational::from_integer(h.degree()));
        }
        for lambda in strict_partitions_of(d) {
            let h = hooks_shifted(&lambda);
            assert_eq!(count_shifted_syt(&lambda).unwrap(), h.degree(), "{lambda:?}");
        }
    }
    // Σ (f^μ)^2 = d!
    let total: BigInt = partitions_of(7).iter().map(|mu| count_syt(mu).unwrap().pow(2)).sum();
    assert_eq!(total, factorial(7));
}

#[test]
fn prop6_up_to_weight_twelve() {
    for d in 0..=12 {
        for mu in partitions_of(d) {
            assert!(verify_prop6(&mu), "{mu:?}");
        }
    }
}

#[test]
fn prop6_flagship() {
    let mu: Partition = "5^3,3,1^3".parse().unwrap();
    let lhs = hooks_ordinary(&mu).bar * BigRational::from_integer(BigInt::from(8));
    let g = |v: &[usize]| gbar_parts(&StrictPartition::new(v.to_vec()).unwrap());
    let ab = g(&[6, 5, 4, 3, 2, 1]) - g(&[5]) * g(&[6, 4, 3, 2, 1]) + g(&[4]) * g(&[6, 5, 3, 2, 1])
        - g(&[3]) * g(&[6, 5, 4, 2, 1])
        - g(&[5, 4]) * g(&[6, 3, 2, 1])
        + g(&[5, 3]) * g(&[6, 4, 2, 1])
        - g(&[4, 3]) * g(&[6, 5, 2, 1])
        + g(&[5, 4, 3]) * g(&[6, 2, 1]);
    let cd = g(&[3, 2]) * g(&[7, 4, 3, 2]) + g(&[7, 3, 2]) * g(&[4, 3, 2]);
    assert_eq!(ab, lhs);
    assert_eq!(cd, lhs);
    assert_eq!(gbar_sum(&mu, Variant::AB), lhs);
    assert_eq!(gbar_sum(&mu, Variant::CD), lhs);
    assert!(verify_prop6(&mu));
}
