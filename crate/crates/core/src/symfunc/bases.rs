//! Schur, Q- and P-functions in the monomial basis, the triangular solves
//! that invert them, and the image `S_μ = η(s_μ)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::gamma::OddPowerSum;
use super::{QExpansion, SchurExpansion, SymFunc};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, strict_partitions_of, Partition, StrictPartition};
use crate::scalar::{format_exact, Scalar};

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &Partition) -> u64 {
    if shape.weight() != content.weight() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(shape.parts(), content.parts(), &mut memo)
}

// Peels off the largest entry as a horizontal strip of size `content.last()`.
fn kostka_rec(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
) -> u64 {
    let Some((&k, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), content.to_vec());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut total = 0u64;
    let mut inner = shape.to_vec();
    strips(shape, 0, k, &mut inner, &mut |rho: &[usize]| {
        let len = rho.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        total += kostka_rec(&rho[..len], rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `visit` with every `ρ ⊂ shape` such that `shape/ρ` is a horizontal
/// strip of `left` boxes.
fn strips(
    shape: &[usize],
    row: usize,
    left: usize,
    rho: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if left == 0 {
            visit(rho);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - below).min(left);
    for take in 0..=max_take {
        rho[row] = shape[row] - take;
        strips(shape, row + 1, left - take, rho, visit);
    }
    rho[row] = shape[row];
}

/// `s_μ = Σ_ν K_{μν} m_ν`.
pub fn schur_to_m<T: Scalar>(mu: &Partition) -> SymFunc<T> {
    let mut memo = HashMap::new();
    let mut out = SymFunc::zero(mu.weight());
    for nu in partitions_of(mu.weight()) {
        if mu.dominates(&nu) {
            let k = kostka_rec(mu.parts(), nu.parts(), &mut memo);
            out.add_term(nu, T::from_count(k));
        }
    }
    out
}

/// `Q_(a,b) = q_a q_b + 2 Σ_{i=1}^{b} (−1)^i q_{a+i} q_{b−i}` for `a > b ≥ 0`.
fn two_row_q(a: usize, b: usize) -> OddPowerSum {
    let mut out = &*OddPowerSum::q(a) * &*OddPowerSum::q(b);
    let two = BigRational::from_integer(BigInt::from(2));
    for i in 1..=b {
        let term = (&*OddPowerSum::q(a + i) * &*OddPowerSum::q(b - i)).scale(&two);
        out = if i % 2 == 1 { &out - &term } else { &out + &term };
    }
    out
}

/// `Q_λ` in odd power sums, by Pfaffian expansion along the first row:
/// `Q_λ = Σ_{j ≥ 2} (−1)^j Q_(λ_1, λ_j) Q_{λ ∖ {λ_1, λ_j}}`, with `λ` padded
/// by a zero part to even length.
pub fn q_function(lambda: &StrictPartition) -> Arc<OddPowerSum> {
    static CACHE: OnceLock<Mutex<HashMap<StrictPartition, Arc<OddPowerSum>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let mut idx = lambda.parts().to_vec();
    if idx.len() % 2 == 1 {
        idx.push(0);
    }
    let out = match idx.len() {
        0 => OddPowerSum::one(),
        2 => two_row_q(idx[0], idx[1]),
        _ => {
            let mut acc = OddPowerSum::zero(lambda.weight());
            for j in 1..idx.len() {
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != 0 && i != j)
                    .map(|(_, &v)| v)
                    .collect();
                let rest = StrictPartition::new(rest).expect("sub-index of a strict partition");
                let term = &two_row_q(idx[0], idx[j]) * &*q_function(&rest);
                acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    };
    let out = Arc::new(out);
    cache.lock().unwrap().entry(lambda.clone()).or_insert(out).clone()
}

/// `Q_λ` in the monomial basis with integer coefficients, memoized.
pub(crate) fn q_in_m(lambda: &StrictPartition) -> Arc<SymFunc<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<StrictPartition, Arc<SymFunc<BigInt>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let rational = q_function(lambda).to_m();
    let integral = rational
        .try_cast::<BigInt>()
        .unwrap_or_else(|| panic!("Q{lambda:?} has a non-integral monomial coefficient"));
    let out = Arc::new(integral);
    cache.lock().unwrap().entry(lambda.clone()).or_insert(out).clone()
}

/// The Schur Q-function `Q_λ` in the monomial basis.
pub fn qfun_to_m<T: Scalar>(lambda: &StrictPartition) -> SymFunc<T> {
    q_in_m(lambda).cast()
}

/// `P_λ = 2^{−l(λ)} Q_λ`; every coefficient must be an integer.
pub fn pfun_to_m<T: Scalar>(lambda: &StrictPartition) -> Result<SymFunc<T>> {
    let q = q_in_m(lambda);
    let divisor = BigInt::one() << lambda.len();
    let mut out = SymFunc::zero(lambda.weight());
    for (nu, c) in q.terms() {
        let v = c.exact_div(&divisor).ok_or_else(|| {
            Error::Consistency(format!(
                "P{lambda:?} has non-integral coefficient {c}/{divisor} on m{nu:?}"
            ))
        })?;
        out.add_term(nu.clone(), T::from_bigint(&v).expect("coefficient overflow"));
    }
    Ok(out)
}

/// Writes `f = Σ x_λ Q_λ` by eliminating leading monomials `2^{l(λ)} m_λ` in
/// decreasing lexicographic order of `λ`. Fails if some `x_λ` is not
/// representable in `T` or the residual is nonzero.
pub fn expand_in_q<T: Scalar>(f: &SymFunc<T>) -> Result<QExpansion<T>> {
    let degree = f.degree();
    let mut residual = f.clone();
    let mut out = QExpansion::zero(degree);
    for lambda in strict_partitions_of(degree) {
        let lead = residual.coeff(lambda.as_partition());
        if lead.is_zero() {
            continue;
        }
        let divisor = T::pow2(lambda.len());
        let x = lead.exact_div(&divisor).ok_or_else(|| Error::NotDivisible {
            index: format!("Q{lambda:?}"),
            value: format_exact(&lead),
            divisor: format_exact(&divisor),
        })?;
        residual.add_scaled(&qfun_to_m::<T>(&lambda), &-x.clone());
        out.add_term(lambda, x);
    }
    if let Some((nu, c)) = residual.terms().next_back() {
        return Err(Error::NotInQSpan {
            degree,
            residual: format!("{}·m{nu:?}", format_exact(c)),
        });
    }
    Ok(out)
}

/// Coefficients on `{P_λ}`: the Q-coefficients scaled by `2^{l(λ)}`.
pub fn expand_in_p<T: Scalar>(f: &SymFunc<T>) -> Result<QExpansion<T>> {
    let q = expand_in_q(f)?;
    Ok(q.map_coeffs(|lambda, c| c.clone() * T::pow2(lambda.len())))
}

/// Writes `f = Σ r_μ s_μ` by unitriangular elimination against the Kostka
/// matrix.
pub fn expand_in_schur<T: Scalar>(f: &SymFunc<T>) -> SchurExpansion<T> {
    let degree = f.degree();
    let mut residual = f.clone();
    let mut out = SchurExpansion::zero(degree);
    for mu in partitions_of(degree) {
        let lead = residual.coeff(&mu);
        if lead.is_zero() {
            continue;
        }
        residual.add_scaled(&schur_to_m::<T>(&mu), &-lead.clone());
        out.add_term(mu, lead);
    }
    assert!(residual.is_zero(), "Kostka elimination left a residual");
    out
}

/// `η(s_μ)` in odd power sums: the Jacobi–Trudi determinant
/// `det(q_{μ_i − i + j})` with `η(h_r) = q_r`.
pub fn eta_gamma(mu: &Partition) -> OddPowerSum {
    let l = mu.len();
    let entry = |i: usize, j: usize| -> Option<Arc<OddPowerSum>> {
        let idx = (mu.part(i) + j) as isize - i as isize;
        (idx >= 0).then(|| OddPowerSum::q(idx as usize))
    };
    let mut memo: HashMap<u32, OddPowerSum> = HashMap::new();
    fn minor(
        mask: u32,
        l: usize,
        entry: &dyn Fn(usize, usize) -> Option<Arc<OddPowerSum>>,
        memo: &mut HashMap<u32, OddPowerSum>,
    ) -> OddPowerSum {
        let row = mask.count_ones() as usize;
        if row == l {
            return OddPowerSum::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = OddPowerSum::zero(0);
        let mut position = 0usize;
        for col in 0..l {
            if mask & (1 << col) != 0 {
                continue;
            }
            if let Some(a) = entry(row, col) {
                let sub = minor(mask | (1 << col), l, entry, memo);
                if !sub.is_zero() {
                    let term = &*a * &sub;
                    acc = if position.is_multiple_of(2) { &acc + &term } else { &acc - &term };
                }
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let det = minor(0, l, &entry, &mut memo);
    if det.is_zero() {
        OddPowerSum::zero(mu.weight())
    } else {
        det
    }
}

/// `S_μ = η(s_μ)` in the monomial basis.
pub fn eta_schur<T: Scalar>(mu: &Partition) -> SymFunc<T> {
    eta_gamma(mu).to_m().cast()
}
