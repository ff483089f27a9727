//! Arithmetic in Γ ⊗ ℚ through odd power sums.
//!
//! `Γ ⊗ ℚ = ℚ[p_1, p_3, p_5, …]`, so a homogeneous element of degree `d` is a
//! rational combination of `p_ν` over partitions `ν ⊢ d` with odd parts, and
//! multiplication is concatenation of indices. This is the product engine for
//! Q-functions; results are brought to the monomial basis with [`to_m`].
//!
//! [`to_m`]: OddPowerSum::to_m

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{m_mul_counts, SymFunc};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddPowerSum {
    degree: usize,
    terms: BTreeMap<Partition, BigRational>,
}

impl OddPowerSum {
    pub fn zero(degree: usize) -> Self {
        OddPowerSum {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigRational::one());
        OddPowerSum { degree: 0, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, nu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(nu.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&nu);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// The one-row Q-function `q_r = Σ_{ν ⊢ r, ν odd} 2^{l(ν)} z_ν^{-1} p_ν`,
    /// from `Σ q_r t^r = exp(Σ_{k odd} 2 p_k t^k / k)`.
    pub fn q(r: usize) -> Arc<OddPowerSum> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OddPowerSum>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().unwrap().get(&r) {
            return hit.clone();
        }
        let mut out = OddPowerSum::zero(r);
        for nu in odd_partitions_of(r) {
            let c = BigRational::new(BigInt::one() << nu.len(), z_factor(&nu));
            out.add_term(nu, c);
        }
        let out = Arc::new(out);
        cache.lock().unwrap().entry(r).or_insert(out).clone()
    }

    /// Converts to the monomial basis.
    pub fn to_m(&self) -> SymFunc<BigRational> {
        let denom = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (nu, c) in &self.terms {
            let scaled = c.numer() * (&denom / c.denom());
            for (lambda, count) in power_sum_in_m(nu).iter() {
                let slot = acc.entry(lambda.clone()).or_insert_with(BigInt::zero);
                *slot += &scaled * count;
            }
        }
        SymFunc::from_terms(
            self.degree,
            acc.into_iter()
                .map(|(k, v)| (k, BigRational::new(v, denom.clone()))),
        )
    }

    pub fn pow(&self, k: usize) -> OddPowerSum {
        (0..k).fold(OddPowerSum::one(), |acc, _| &acc * self)
    }
}

impl Add for &OddPowerSum {
    type Output = OddPowerSum;

    fn add(self, rhs: &OddPowerSum) -> OddPowerSum {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &OddPowerSum {
    type Output = OddPowerSum;

    fn sub(self, rhs: &OddPowerSum) -> OddPowerSum {
        self + &rhs.scale(&-BigRational::one())
    }
}

impl Mul for &OddPowerSum {
    type Output = OddPowerSum;

    fn mul(self, rhs: &OddPowerSum) -> OddPowerSum {
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                let key = Partition::from_unsorted(parts);
                let slot = acc.entry(key).or_insert_with(BigRational::zero);
                *slot += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        OddPowerSum {
            degree: self.degree + rhs.degree,
            terms: acc,
        }
    }
}

/// Partitions of `n` into odd parts.
pub fn odd_partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        let mut p = rest.min(max);
        if p.is_multiple_of(2) {
            p = p.saturating_sub(1);
        }
        while p >= 1 {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_ν = Π_k k^{m_k} m_k!`.
pub fn z_factor(nu: &Partition) -> BigInt {
    nu.multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (k, m)| {
            let fact: BigInt = (1..=m).fold(BigInt::one(), |f, i| f * i);
            acc * BigInt::from(k).pow(m as u32) * fact
        })
}

type PowerSumRow = Arc<Vec<(Partition, BigInt)>>;

/// `p_ν` in the monomial basis, memoized on suffixes of `ν`:
/// `p_ν = m_(ν_1) · p_(ν_2, ν_3, …)`.
pub fn power_sum_in_m(nu: &Partition) -> Arc<Vec<(Partition, BigInt)>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, PowerSumRow>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(nu) {
        return hit.clone();
    }
    let out = if nu.is_empty() {
        vec![(Partition::empty(), BigInt::one())]
    } else {
        let head = Partition::from_sorted_unchecked(vec![nu.parts()[0]]);
        let tail = Partition::from_sorted_unchecked(nu.parts()[1..].to_vec());
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (gamma, c) in power_sum_in_m(&tail).iter() {
            for (delta, k) in m_mul_counts(&head, gamma) {
                *acc.entry(delta).or_insert_with(BigInt::zero) += c * BigInt::from(k);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        debug_assert!(acc.values().all(|v| v.is_positive()));
        acc.into_iter().collect()
    };
    let out = Arc::new(out);
    cache.lock().unwrap().entry(nu.clone()).or_insert(out).clone()
}
