//! Hook lengths of ordinary and shifted diagrams, the degrees `f^μ` and
//! `g^λ`, the specializations `e_i ↦ 1/i!` and `Q_i ↦ 1/i!`, and the hook
//! identity obtained by specializing the Macdonald–You formula.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::macdonald_you::{my_terms, Variant};
use crate::partition::{straighten, IntSequence, Partition, StrictPartition};
use crate::scalar::Scalar;
use crate::symfunc::{expand_in_q, QExpansion, SymFunc};

/// Largest weight the standard-tableau enumerators accept.
pub const ENUMERATION_BUDGET: usize = 40;

/// Hook lengths of a diagram and `Π 1/h(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookData {
    pub shape: Partition,
    pub shifted: bool,
    /// `((row, col), h)` in row-major order; shifted cells use shifted
    /// coordinates, row `r` starting at column `r`.
    pub hooks: Vec<((usize, usize), usize)>,
    pub bar: BigRational,
}

impl HookData {
    fn new(shape: Partition, shifted: bool, hooks: Vec<((usize, usize), usize)>) -> Self {
        let product = hooks.iter().fold(BigInt::one(), |acc, &(_, h)| acc * h);
        HookData {
            shape,
            shifted,
            hooks,
            bar: BigRational::new(BigInt::one(), product),
        }
    }

    /// `|shape|! · Π 1/h(x)`: the number of (shifted) standard tableaux.
    pub fn degree(&self) -> BigInt {
        let value = BigRational::from_integer(factorial(self.shape.weight())) * &self.bar;
        assert!(value.is_integer(), "hook quotient {value} is not an integer");
        value.to_integer()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn ordinary_hook(mu: &Partition, conj: &Partition, r: usize, c: usize) -> usize {
    mu.part(r) + conj.part(c) - r - c - 1
}

/// `h(i, j) = μ_i + μ~_j − i − j + 1`.
pub fn hooks_ordinary(mu: &Partition) -> HookData {
    let conj = mu.conjugate();
    let hooks = mu
        .cells()
        .map(|(r, c)| ((r, c), ordinary_hook(mu, &conj, r, c)))
        .collect();
    HookData::new(mu.clone(), false, hooks)
}

/// Hooks of the shifted diagram `S(λ)`, read in the double diagram
/// `(λ_1, λ_2, … | λ_1 − 1, λ_2 − 1, …)`, where the shifted cell `(r, c)`
/// sits at `(r, c + 1)`.
pub fn hooks_shifted(lambda: &StrictPartition) -> HookData {
    let double = lambda.double_diagram();
    let conj = double.conjugate();
    let hooks = lambda
        .shifted_cells()
        .map(|(r, c)| ((r, c), ordinary_hook(&double, &conj, r, c + 1)))
        .collect();
    HookData::new(lambda.as_partition().clone(), true, hooks)
}

/// `Π_{i<j≤n} (μ_i − μ_j − i + j) / Π_{i≤n} (μ_i + n − i)!`, with `μ`
/// padded by zeros to length `n`.
pub fn fbar_parts(mu: &Partition, n: usize) -> Result<BigRational> {
    if n < mu.len() {
        return Err(Error::Consistency(format!(
            "padding length {n} is shorter than {mu:?}"
        )));
    }
    let part = |i: usize| mu.part(i) as i64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= part(i) - part(j) - i as i64 + j as i64;
        }
        den *= factorial(mu.part(i) + n - 1 - i);
    }
    Ok(BigRational::new(num, den))
}

/// `(1 / Π λ_i!) · Π_{i<j} (λ_i − λ_j) / (λ_i + λ_j)`.
pub fn gbar_parts(lambda: &StrictPartition) -> BigRational {
    let parts = lambda.parts();
    let mut out = BigRational::one();
    for (i, &a) in parts.iter().enumerate() {
        out /= BigRational::from_integer(factorial(a));
        for &b in &parts[i + 1..] {
            out *= BigRational::new(BigInt::from(a - b), BigInt::from(a + b));
        }
    }
    out
}

fn check_budget(weight: usize) -> Result<()> {
    if weight > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            weight,
            limit: ENUMERATION_BUDGET,
        });
    }
    Ok(())
}

/// Standard tableaux of shape `μ`, counted by placing the largest label in
/// each corner in turn.
pub fn count_syt(mu: &Partition) -> Result<BigInt> {
    check_budget(mu.weight())?;
    fn go(shape: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if shape.is_empty() {
            return BigInt::one();
        }
        if let Some(hit) = memo.get(shape.as_slice()) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for r in 0..shape.len() {
            let is_corner = r + 1 == shape.len() || shape[r + 1] < shape[r];
            if !is_corner {
                continue;
            }
            shape[r] -= 1;
            let popped = shape[r] == 0;
            if popped {
                shape.pop();
            }
            total += go(shape, memo);
            if popped {
                shape.push(0);
            }
            shape[r] += 1;
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    Ok(go(&mut mu.parts().to_vec(), &mut HashMap::new()))
}

/// Standard tableaux of shifted shape `S(λ)`.
pub fn count_shifted_syt(lambda: &StrictPartition) -> Result<BigInt> {
    check_budget(lambda.weight())?;
    fn go(shape: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if shape.is_empty() {
            return BigInt::one();
        }
        if let Some(hit) = memo.get(shape.as_slice()) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for r in 0..shape.len() {
            // Removing the last cell of row r keeps the rows strictly
            // decreasing (a trailing 1 may vanish).
            let ok = r + 1 == shape.len() || shape[r + 1] + 1 < shape[r];
            if !ok {
                continue;
            }
            shape[r] -= 1;
            let popped = shape[r] == 0;
            if popped {
                shape.pop();
            }
            total += go(shape, memo);
            if popped {
                shape.push(0);
            }
            shape[r] += 1;
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    Ok(go(&mut lambda.parts().to_vec(), &mut HashMap::new()))
}

fn inverse_factorial(k: isize) -> BigRational {
    if k < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(k as usize))
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let size = m.len();
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let pivot_row = m[col].clone();
            for (x, y) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// `s_μ` under `e_i ↦ 1/i!`, through the dual Jacobi–Trudi determinant
/// `s_μ = det(e_{μ~_i − i + j})`.
pub fn specialize_schur(mu: &Partition) -> BigRational {
    let conj = mu.conjugate();
    let l = conj.len();
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| inverse_factorial(conj.part(i) as isize - i as isize + j as isize))
                .collect()
        })
        .collect();
    determinant(m)
}

/// `Q_λ` under `Q_i ↦ 1/i!`, through the Pfaffian of the two-row functions
/// `Q_(a,b) = q_a q_b + 2 Σ_{i=1}^{b} (−1)^i q_{a+i} q_{b−i}`.
pub fn specialize_q_function(lambda: &StrictPartition) -> BigRational {
    fn two_row(a: usize, b: usize) -> BigRational {
        let q = |k: usize| inverse_factorial(k as isize);
        let mut out = q(a) * q(b);
        let two = BigRational::from_integer(BigInt::from(2));
        for i in 1..=b {
            let term = &two * q(a + i) * q(b - i);
            if i % 2 == 1 {
                out -= term;
            } else {
                out += term;
            }
        }
        out
    }
    fn pfaffian(idx: &[usize]) -> BigRational {
        match idx.len() {
            0 => BigRational::one(),
            2 => two_row(idx[0], idx[1]),
            _ => {
                let mut acc = BigRational::zero();
                for j in 1..idx.len() {
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != 0 && i != j)
                        .map(|(_, &v)| v)
                        .collect();
                    let term = two_row(idx[0], idx[j]) * pfaffian(&rest);
                    if j % 2 == 1 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
        }
    }
    let mut idx = lambda.parts().to_vec();
    if idx.len() % 2 == 1 {
        idx.push(0);
    }
    pfaffian(&idx)
}

/// Evaluates a Q-expansion under `Q_i ↦ 1/i!`.
pub fn specialize_q_expansion<T: Scalar>(x: &QExpansion<T>) -> BigRational {
    x.terms()
        .map(|(lambda, c)| c.to_rational() * specialize_q_function(lambda))
        .fold(BigRational::zero(), |acc, v| acc + v)
}

/// Evaluates an element of the Q-span under `Q_i ↦ 1/i!`.
pub fn specialize_q<T: Scalar>(f: &SymFunc<T>) -> Result<BigRational> {
    Ok(specialize_q_expansion(&expand_in_q(f)?))
}

/// `sgn(w_K) · ḡ^{⟨K⟩}`, zero when `K` has a repeated entry.
pub fn gbar_signed(k: &IntSequence) -> BigRational {
    match straighten(k) {
        None => BigRational::zero(),
        Some((sign, lambda)) => sign.apply(gbar_parts(&lambda)),
    }
}

/// `Σ ḡ^{removed} · ḡ^{remaining}` over the summands of the given variant.
pub fn gbar_sum(mu: &Partition, variant: Variant) -> BigRational {
    my_terms(mu, variant)
        .iter()
        .map(|t| gbar_signed(&t.removed) * gbar_signed(&t.remaining))
        .fold(BigRational::zero(), |acc, v| acc + v)
}

/// `2^n f̄^μ` equals both specialized Macdonald–You sums.
pub fn verify_prop6(mu: &Partition) -> bool {
    let n = mu.frobenius().rank();
    let lhs = hooks_ordinary(mu).bar * BigRational::pow2(n);
    gbar_sum(mu, Variant::AB) == lhs && gbar_sum(mu, Variant::CD) == lhs
}

/// Whether every hook in the data is positive; a cheap structural check.
pub fn hooks_positive(h: &HookData) -> bool {
    h.hooks.iter().all(|&(_, x)| x > 0) && h.bar.is_positive()
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

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ordinary_examples() {
        let h = hooks_ordinary(&p(&[2, 1]));
        let mut hooks: Vec<usize> = h.hooks.iter().map(|&(_, x)| x).collect();
        hooks.sort();
        assert_eq!(hooks, vec![1, 1, 3]);
        assert_eq!(h.bar, q(1, 3));
        assert_eq!(h.degree(), BigInt::from(2));
        assert_eq!(hooks_ordinary(&p(&[1])).degree(), BigInt::from(1));
        assert_eq!(hooks_ordinary(&p(&[6])).degree(), BigInt::from(1));
    }

    #[test]
    fn shifted_examples() {
        let h = hooks_shifted(&sp(&[2, 1]));
        assert_eq!(h.bar, q(1, 6));
        assert_eq!(h.degree(), BigInt::from(1));
        assert_eq!(hooks_shifted(&sp(&[1])).degree(), BigInt::from(1));
        assert_eq!(hooks_shifted(&sp(&[3, 1])).bar, q(1, 12));
        assert_eq!(hooks_shifted(&sp(&[3, 1])).degree(), BigInt::from(2));
        assert!(hooks_positive(&hooks_shifted(&sp(&[5, 3, 2]))));
    }

    #[test]
    fn parts_formulas() {
        assert_eq!(fbar_parts(&p(&[2, 1]), 2).unwrap(), q(1, 3));
        assert_eq!(fbar_parts(&p(&[1]), 1).unwrap(), q(1, 1));
        assert_eq!(fbar_parts(&p(&[2, 1]), 3).unwrap(), q(1, 3));
        assert!(fbar_parts(&p(&[2, 1]), 1).is_err());
        assert_eq!(gbar_parts(&sp(&[2, 1])), q(1, 6));
        assert_eq!(gbar_parts(&sp(&[4])), q(1, 24));
        assert_eq!(gbar_parts(&sp(&[3, 2, 1])), q(1, 360));
    }

    #[test]
    fn counts() {
        assert_eq!(count_syt(&p(&[2, 1])).unwrap(), BigInt::from(2));
        assert_eq!(count_shifted_syt(&sp(&[2, 1])).unwrap(), BigInt::from(1));
        assert_eq!(count_syt(&p(&[1])).unwrap(), BigInt::from(1));
        assert_eq!(count_shifted_syt(&sp(&[1])).unwrap(), BigInt::from(1));
        assert_eq!(count_syt(&p(&[2, 2])).unwrap(), BigInt::from(2));
        assert_eq!(count_shifted_syt(&sp(&[3, 2, 1])).unwrap(), BigInt::from(2));
        let big = p(&[ENUMERATION_BUDGET + 1]);
        assert!(matches!(count_syt(&big), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn specializations() {
        assert_eq!(specialize_schur(&p(&[2, 1])), q(1, 3));
        assert_eq!(specialize_q_function(&sp(&[1])), q(1, 1));
        assert_eq!(specialize_q_function(&sp(&[2, 1])), q(1, 6));
        let q21 = crate::symfunc::qfun_to_m::<BigInt>(&sp(&[2, 1]));
        assert_eq!(specialize_q(&q21).unwrap(), q(1, 6));
        let m2 = SymFunc::<BigRational>::monomial(p(&[2]));
        assert!(matches!(specialize_q(&m2), Err(Error::NotInQSpan { .. })));
        let half_q1 = SymFunc::<BigRational>::monomial(p(&[1]));
        assert_eq!(specialize_q(&half_q1).unwrap(), q(1, 2));
    }

    #[test]
    fn signed_gbar() {
        assert_eq!(gbar_signed(&IntSequence(vec![1, 0])), q(1, 1));
        assert_eq!(gbar_signed(&IntSequence(vec![2, 3])), -gbar_parts(&sp(&[3, 2])));
        assert_eq!(gbar_signed(&IntSequence(vec![2, 2])), BigRational::zero());
    }

    #[test]
    fn prop6_small() {
        assert!(verify_prop6(&p(&[1])));
        assert_eq!(gbar_sum(&p(&[1]), Variant::AB), q(2, 1));
        assert!(verify_prop6(&Partition::empty()));
    }
}
