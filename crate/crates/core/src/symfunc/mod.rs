//! Homogeneous symmetric functions with exact coefficients.
//!
//! [`SymFunc`] stores a homogeneous element in the monomial basis `{m_λ}`.
//! All basis changes (Schur, Q, P) are triangular solves against it. Products
//! of elements of the subring Γ spanned by the Q-functions are formed in odd
//! power-sum coordinates by [`gamma::OddPowerSum`] and converted back.

pub mod bases;
pub mod gamma;
mod json;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::partition::{Partition, StrictPartition};
use crate::scalar::{format_exact, Scalar};

pub use bases::{
    eta_schur, expand_in_p, expand_in_q, expand_in_schur, kostka_number, pfun_to_m, qfun_to_m,
    schur_to_m,
};
pub use json::{BasisTag, JsonExpansion, JsonTerm};

/// A homogeneous symmetric function `Σ c_λ m_λ` of fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc<T> {
    degree: usize,
    terms: BTreeMap<Partition, T>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(degree: usize) -> Self {
        SymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    /// `m_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.weight());
        f.terms.insert(lambda, T::one());
        f
    }

    /// Builds `Σ c m_λ`; every index must have weight `degree`.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, T)>) -> Self {
        let mut f = Self::zero(degree);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> T {
        self.terms.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in increasing lexicographic order of the index.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: T) {
        assert_eq!(
            lambda.weight(),
            self.degree,
            "index {lambda:?} does not have degree {}",
            self.degree
        );
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SymFunc<T>, c: &T) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        if c.is_zero() {
            return;
        }
        for (lambda, v) in &other.terms {
            let slot = self.terms.entry(lambda.clone()).or_insert_with(T::zero);
            *slot = slot.clone() + v.clone() * c.clone();
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    /// Converts every coefficient; `None` if any is not representable.
    pub fn try_cast<U: Scalar>(&self) -> Option<SymFunc<U>> {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| Some((k.clone(), U::from_rational(&v.to_rational())?)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(SymFunc {
            degree: self.degree,
            terms,
        })
    }

    pub fn cast<U: Scalar>(&self) -> SymFunc<U> {
        self.try_cast()
            .expect("coefficient not representable in the target scalar type")
    }
}

impl<T: Scalar> fmt::Debug for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}](", self.degree)?;
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·m{:?}", format_exact(v), k)?;
        }
        f.write_str(")")
    }
}

impl<T: Scalar> Add for &SymFunc<T> {
    type Output = SymFunc<T>;

    fn add(self, rhs: &SymFunc<T>) -> SymFunc<T> {
        let mut out = self.clone();
        out.add_scaled(rhs, &T::one());
        out
    }
}

impl<T: Scalar> Sub for &SymFunc<T> {
    type Output = SymFunc<T>;

    fn sub(self, rhs: &SymFunc<T>) -> SymFunc<T> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-T::one());
        out
    }
}

impl<T: Scalar> Neg for &SymFunc<T> {
    type Output = SymFunc<T>;

    fn neg(self) -> SymFunc<T> {
        self.scale(&-T::one())
    }
}

/// Ring product, computed term by term with [`m_mul`].
impl<T: Scalar> Mul for &SymFunc<T> {
    type Output = SymFunc<T>;

    fn mul(self, rhs: &SymFunc<T>) -> SymFunc<T> {
        let mut out = SymFunc::zero(self.degree + rhs.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_scaled(&m_mul(a, b), &(ca.clone() * cb.clone()));
            }
        }
        out
    }
}

/// `m_α · m_β` in the monomial basis.
///
/// The coefficient of `m_γ` counts pairs of exponent vectors `(a, b)` with
/// `a ~ α`, `b ~ β` and `a + b = γ`. Grouping equal pairs `(a_i, b_i)` gives
/// the closed form `Π_v m_γ(v)! / Π_{(x,y)} N(x,y)!` summed over the
/// contingency tables `N` pairing values of `α` with values of `β` (or with
/// zero).
pub fn m_mul<T: Scalar>(alpha: &Partition, beta: &Partition) -> SymFunc<T> {
    let mut out = SymFunc::zero(alpha.weight() + beta.weight());
    for (gamma, count) in m_mul_counts(alpha, beta) {
        out.add_term(gamma, T::from_count(count));
    }
    out
}

pub(crate) fn m_mul_counts(alpha: &Partition, beta: &Partition) -> Vec<(Partition, u64)> {
    let a_vals = alpha.multiplicities();
    let b_vals = beta.multiplicities();
    let mut b_left: Vec<usize> = b_vals.iter().map(|&(_, m)| m).collect();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();

    #[allow(clippy::too_many_arguments)]
    fn distribute(
        ai: usize,
        a_vals: &[(usize, usize)],
        b_vals: &[(usize, usize)],
        b_left: &mut [usize],
        pairs: &mut Vec<(usize, usize, usize)>,
        acc: &mut BTreeMap<Partition, u64>,
    ) {
        if ai == a_vals.len() {
            finish(b_vals, b_left, pairs, acc);
            return;
        }
        let (x, m) = a_vals[ai];
        spread(ai, x, m, 0, a_vals, b_vals, b_left, pairs, acc);
    }

    // Places the remaining `m` copies of value `x` against β-values `bj..`,
    // leftovers pair with zero.
    #[allow(clippy::too_many_arguments)]
    fn spread(
        ai: usize,
        x: usize,
        m: usize,
        bj: usize,
        a_vals: &[(usize, usize)],
        b_vals: &[(usize, usize)],
        b_left: &mut [usize],
        pairs: &mut Vec<(usize, usize, usize)>,
        acc: &mut BTreeMap<Partition, u64>,
    ) {
        if bj == b_vals.len() {
            if m > 0 {
                pairs.push((x, 0, m));
            }
            distribute(ai + 1, a_vals, b_vals, b_left, pairs, acc);
            if m > 0 {
                pairs.pop();
            }
            return;
        }
        let cap = m.min(b_left[bj]);
        for k in 0..=cap {
            if k > 0 {
                pairs.push((x, b_vals[bj].0, k));
            }
            b_left[bj] -= k;
            spread(ai, x, m - k, bj + 1, a_vals, b_vals, b_left, pairs, acc);
            b_left[bj] += k;
            if k > 0 {
                pairs.pop();
            }
        }
    }

    fn finish(
        b_vals: &[(usize, usize)],
        b_left: &[usize],
        pairs: &[(usize, usize, usize)],
        acc: &mut BTreeMap<Partition, u64>,
    ) {
        let mut all: Vec<(usize, usize, usize)> = pairs.to_vec();
        for (j, &left) in b_left.iter().enumerate() {
            if left > 0 {
                all.push((0, b_vals[j].0, left));
            }
        }
        let mut sums: BTreeMap<usize, usize> = BTreeMap::new();
        let mut parts = Vec::new();
        for &(x, y, k) in &all {
            *sums.entry(x + y).or_default() += k;
            parts.extend(std::iter::repeat_n(x + y, k));
        }
        let weight = multinomial_weight(&sums, &all).expect("m_mul coefficient overflows u64");
        *acc.entry(Partition::from_unsorted(parts)).or_default() += weight;
    }

    distribute(0, &a_vals, &b_vals, &mut b_left, &mut pairs, &mut acc);
    acc.into_iter().collect()
}

/// `Π_v m(v)! / Π N(x,y)!` as a product of multinomial coefficients, one per
/// target value `v`.
fn multinomial_weight(
    sums: &BTreeMap<usize, usize>,
    pairs: &[(usize, usize, usize)],
) -> Option<u64> {
    let mut weight: u64 = 1;
    for (&v, &total) in sums {
        let mut rest = total;
        for &(_, _, k) in pairs.iter().filter(|&&(x, y, _)| x + y == v) {
            weight = weight.checked_mul(binomial_u64(rest, k)?)?;
            rest -= k;
        }
    }
    Some(weight)
}

pub(crate) fn binomial_u64(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).ok()
}

/// A finite linear combination over a basis indexed by `K`, homogeneous of
/// one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<K: Ord, T> {
    degree: usize,
    terms: BTreeMap<K, T>,
}

/// Coefficients on `{Q_λ}` (or `{P_λ}`), `λ` strict.
pub type QExpansion<T> = Expansion<StrictPartition, T>;
/// Coefficients on `{s_μ}`.
pub type SchurExpansion<T> = Expansion<Partition, T>;

pub trait Indexed: Ord + Clone + fmt::Debug {
    fn index_weight(&self) -> usize;
    fn index_parts(&self) -> &[usize];
}

impl Indexed for Partition {
    fn index_weight(&self) -> usize {
        self.weight()
    }

    fn index_parts(&self) -> &[usize] {
        self.parts()
    }
}

impl Indexed for StrictPartition {
    fn index_weight(&self) -> usize {
        self.weight()
    }

    fn index_parts(&self) -> &[usize] {
        self.parts()
    }
}

impl<K: Indexed, T: Scalar> Expansion<K, T> {
    pub fn zero(degree: usize) -> Self {
        Expansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (K, T)>) -> Self {
        let mut e = Self::zero(degree);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &K) -> T {
        self.terms.get(index).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in increasing lexicographic order; `.rev()` gives the
    /// conventional display order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&K, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, index: K, c: T) {
        assert_eq!(index.index_weight(), self.degree, "index {index:?} has the wrong weight");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index.clone()).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&K, &T) -> U) -> Expansion<K, U> {
        Expansion::from_terms(
            self.degree,
            self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|v| !v.is_negative())
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }
}

impl<K: Indexed, T: Scalar> fmt::Debug for Expansion<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k:?}: {}", format_exact(v))?;
        }
        f.write_str("}")
    }
}
