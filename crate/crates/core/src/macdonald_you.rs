//! The generalized Macdonald–You formula
//!
//! ```text
//! 2^n η(s_μ) = Σ Q_{(a_{i_1},…,a_{i_k})} · Q_{A#B ∖ (a_{i_1},…,a_{i_k})}
//! ```
//!
//! for `μ = (α|β)` of Frobenius rank `n`, `A = α + 1`, `B = β`, its twin
//! with `C = β + 1`, `D = α`, and the linear relations both impose on the
//! Stembridge coefficients.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{straighten, IntSequence, Partition, Sign, StrictPartition};
use crate::scalar::Scalar;
use crate::symfunc::bases::q_function;
use crate::symfunc::gamma::OddPowerSum;
use crate::symfunc::{eta_schur, expand_in_q, QExpansion};
use crate::tableaux::{e_signed, g_coeff};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Variant {
    AB,
    CD,
}

/// `(x_1, y_1, x_2, y_2, …, x_n, y_n)`.
pub fn interleave(x: &IntSequence, y: &IntSequence) -> Result<IntSequence> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(IntSequence(
        x.0.iter().zip(&y.0).flat_map(|(&a, &b)| [a, b]).collect(),
    ))
}

/// One summand `Q_removed · Q_remaining`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MYTerm {
    pub removed: IntSequence,
    pub remaining: IntSequence,
    pub k: usize,
}

impl MYTerm {
    /// The two factors as signed strict indices; `None` when either vanishes.
    pub fn straightened(&self) -> Option<(Sign, StrictPartition, StrictPartition)> {
        let (s1, left) = straighten(&self.removed)?;
        let (s2, right) = straighten(&self.remaining)?;
        Some((s1 * s2, left, right))
    }
}

fn sequences(mu: &Partition, variant: Variant) -> (IntSequence, IntSequence) {
    let form = mu.frobenius();
    match variant {
        Variant::AB => form.ab_sequences(),
        Variant::CD => form.cd_sequences(),
    }
}

/// All `2^n` summands, ordered by `k` and then lexicographically by the
/// removed positions.
pub fn my_terms(mu: &Partition, variant: Variant) -> Vec<MYTerm> {
    let (x, y) = sequences(mu, variant);
    let n = x.len();
    let merged = interleave(&x, &y).expect("Frobenius coordinates have equal length");
    let mut out = Vec::with_capacity(1 << n);
    for k in 0..=n {
        for chosen in combinations(n, k) {
            let removed = chosen.iter().map(|&i| x.0[i]).collect();
            let remaining = merged
                .0
                .iter()
                .enumerate()
                .filter(|&(pos, _)| !(pos % 2 == 0 && chosen.contains(&(pos / 2))))
                .map(|(_, &v)| v)
                .collect();
            out.push(MYTerm {
                removed: IntSequence(removed),
                remaining: IntSequence(remaining),
                k,
            });
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The right side of the formula in odd power sums.
pub fn my_gamma(mu: &Partition, variant: Variant) -> OddPowerSum {
    let mut acc = OddPowerSum::zero(mu.weight());
    for term in my_terms(mu, variant) {
        if let Some((sign, left, right)) = term.straightened() {
            let product = &*q_function(&left) * &*q_function(&right);
            acc = match sign {
                Sign::Plus => &acc + &product,
                Sign::Minus => &acc - &product,
            };
        }
    }
    acc
}

/// The right side of the formula in the Q basis.
pub fn my_expansion(mu: &Partition, variant: Variant) -> Result<QExpansion<BigInt>> {
    let m = my_gamma(mu, variant).to_m();
    let m = m.try_cast::<BigInt>().ok_or_else(|| {
        Error::Consistency(format!("non-integral monomial coefficient for μ = {mu:?}"))
    })?;
    expand_in_q(&m)
}

/// Both sides of the twin identity agree.
pub fn verify_prop3(mu: &Partition) -> bool {
    match (my_expansion(mu, Variant::AB), my_expansion(mu, Variant::CD)) {
        (Ok(ab), Ok(cd)) => ab == cd,
        _ => false,
    }
}

/// The expansion equals `2^n` times the Q-expansion of `η(s_μ)`.
pub fn verify_eq12(mu: &Partition) -> bool {
    let n = mu.frobenius().rank();
    let (Ok(lhs), Ok(rhs)) = (my_expansion(mu, Variant::AB), expand_in_q(&eta_schur::<BigInt>(mu)))
    else {
        return false;
    };
    lhs == rhs.map_coeffs(|_, c| c * BigInt::pow2(n))
}

/// `g_{λμ}` for all strict `λ`, read off the expansion divided by `2^n`.
pub fn g_from_my(mu: &Partition) -> Result<QExpansion<BigInt>> {
    let n = mu.frobenius().rank();
    let divisor = BigInt::pow2(n);
    let full = my_expansion(mu, Variant::AB)?;
    let mut out = QExpansion::zero(mu.weight());
    for (lambda, c) in full.terms() {
        let g = c.exact_div(&divisor).ok_or_else(|| Error::NotDivisible {
            index: format!("Q{lambda:?}"),
            value: c.to_string(),
            divisor: divisor.to_string(),
        })?;
        out.add_term(lambda.clone(), g);
    }
    Ok(out)
}

/// `Σ e^λ_{removed, remaining}` over the summands whose remaining sequence
/// has distinct entries.
pub fn e_sum(mu: &Partition, lambda: &StrictPartition, variant: Variant) -> Result<i64> {
    let mut total = 0i64;
    for term in my_terms(mu, variant) {
        let Some((s, left)) = straighten(&term.removed) else {
            continue;
        };
        if straighten(&term.remaining).is_none() {
            continue;
        }
        total += s.to_i64() * e_signed(&left, &term.remaining, lambda)?;
    }
    Ok(total)
}

/// `2^n g_{λμ}` equals both signed e-sums.
pub fn verify_prop4(mu: &Partition, lambda: &StrictPartition) -> bool {
    if mu.weight() != lambda.weight() {
        return false;
    }
    let n = mu.frobenius().rank();
    let lhs = (g_coeff(lambda, mu) << n) as i64;
    [Variant::AB, Variant::CD]
        .into_iter()
        .all(|v| e_sum(mu, lambda, v).is_ok_and(|rhs| rhs == lhs))
}

/// Per-partition verification record.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MYReport {
    pub mu: Vec<usize>,
    pub n: usize,
    pub terms_total: usize,
    pub terms_vanished: usize,
    pub identity12: bool,
    pub identity16: bool,
    pub runtime_ms: u64,
}

pub fn my_report(mu: &Partition) -> MYReport {
    let start = Instant::now();
    let terms = my_terms(mu, Variant::AB);
    let vanished = terms.iter().filter(|t| t.straightened().is_none()).count();
    let identity12 = verify_eq12(mu);
    let identity16 = verify_prop3(mu);
    MYReport {
        mu: mu.parts().to_vec(),
        n: mu.frobenius().rank(),
        terms_total: terms.len(),
        terms_vanished: vanished,
        identity12,
        identity16,
        runtime_ms: start.elapsed().as_millis().to_u64().unwrap_or(u64::MAX),
    }
}

/// Nonzero coefficients of an expansion, for callers that want a plain list.
pub fn nonzero_terms(e: &QExpansion<BigInt>) -> Vec<(StrictPartition, BigInt)> {
    e.terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn seq(v: &[usize]) -> IntSequence {
        IntSequence(v.to_vec())
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(interleave(&seq(&[5, 4, 3]), &seq(&[6, 2, 1])).unwrap(), seq(&[5, 6, 4, 2, 3, 1]));
        assert_eq!(interleave(&seq(&[1]), &seq(&[0])).unwrap(), seq(&[1, 0]));
        assert_eq!(interleave(&seq(&[7, 3, 2]), &seq(&[4, 3, 2])).unwrap(), seq(&[7, 4, 3, 3, 2, 2]));
        assert!(interleave(&seq(&[1, 2]), &seq(&[1])).is_err());
    }

    #[test]
    fn terms_for_one_box() {
        let terms = my_terms(&p(&[1]), Variant::AB);
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].remaining, seq(&[1, 0]));
        assert_eq!(terms[1].removed, seq(&[1]));
        assert_eq!(terms[1].remaining, seq(&[0]));
    }

    #[test]
    fn small_expansions() {
        let one = my_expansion(&p(&[1]), Variant::AB).unwrap();
        assert_eq!(nonzero_terms(&one), vec![(sp(&[1]), BigInt::from(2))]);
        let e = my_expansion(&p(&[2, 1]), Variant::AB).unwrap();
        assert_eq!(e.coeff(&sp(&[2, 1])), BigInt::from(2));
        assert_eq!(e.coeff(&sp(&[3])), BigInt::from(2));
        assert_eq!(e.len(), 2);
        let g = g_from_my(&p(&[2, 1])).unwrap();
        assert_eq!(g.coeff(&sp(&[2, 1])), BigInt::from(1));
        assert_eq!(g.coeff(&sp(&[3])), BigInt::from(1));
    }

    #[test]
    fn small_identities() {
        assert!(verify_prop3(&p(&[1])));
        assert!(verify_eq12(&p(&[1])));
        assert!(verify_prop4(&p(&[1]), &sp(&[1])));
        assert!(verify_prop4(&p(&[2, 1]), &sp(&[3])));
        assert_eq!(e_sum(&p(&[1]), &sp(&[1]), Variant::AB).unwrap(), 2);
    }

    #[test]
    fn empty_partition() {
        let e = my_expansion(&Partition::empty(), Variant::AB).unwrap();
        assert_eq!(nonzero_terms(&e), vec![(StrictPartition::empty(), BigInt::from(1))]);
    }
}
