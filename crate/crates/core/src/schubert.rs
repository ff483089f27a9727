//! Schubert classes on the Grassmannian `G` of `n`-planes in `ℂ^{2n}` and on
//! the Lagrangian Grassmannian `G' ⊂ G`: restriction `i^*`, products in
//! `H^*(G')`, Poincaré pairing and pushforward `i_*`, all at finite `n`.
//!
//! `H^*(G')` is modeled as the free module on strict partitions inside the
//! staircase `(n, n−1, …, 1)`, with products given by `e`-coefficients
//! truncated to the staircase.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::macdonald_you::g_from_my;
use crate::partition::{
    partitions_in_box, strict_partitions_in_staircase, strict_partitions_of, Partition,
    StrictPartition,
};
use crate::symfunc::{eta_schur, expand_in_q, BasisTag, Expansion, Indexed, JsonExpansion};
use crate::tableaux::{e_coeff, g_coeff};

/// A class `Σ c_K σ_K` at fixed `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertExpansion<K: Indexed> {
    n: usize,
    terms: Expansion<K, BigInt>,
}

/// Classes on `G`, indexed by partitions in `(n^n)`.
pub type SchubertExpansionG = SchubertExpansion<Partition>;
/// Classes on `G'`, indexed by strict partitions in the staircase.
pub type SchubertExpansionLG = SchubertExpansion<StrictPartition>;

impl<K: Indexed> SchubertExpansion<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Codimension, i.e. the common weight of the indices.
    pub fn degree(&self) -> usize {
        self.terms.degree()
    }

    pub fn coeff(&self, index: &K) -> BigInt {
        self.terms.coeff(index)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&K, &BigInt)> {
        self.terms.terms()
    }

    pub fn expansion(&self) -> &Expansion<K, BigInt> {
        &self.terms
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.is_nonnegative()
    }
}

impl SchubertExpansionLG {
    pub fn basis_class(n: usize, lambda: StrictPartition) -> Result<Self> {
        check_staircase(&lambda, n)?;
        let degree = lambda.weight();
        Ok(SchubertExpansion {
            n,
            terms: Expansion::from_terms(degree, [(lambda, BigInt::from(1))]),
        })
    }

    pub fn to_json(&self) -> JsonExpansion {
        JsonExpansion::from_expansion(BasisTag::SchubertLG, &self.terms).with_n(self.n)
    }
}

impl SchubertExpansionG {
    pub fn to_json(&self) -> JsonExpansion {
        JsonExpansion::from_expansion(BasisTag::SchubertG, &self.terms).with_n(self.n)
    }
}

/// How to obtain the coefficients `g_{λμ}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum GRoute {
    /// Count Stembridge tableaux.
    Tableau,
    /// Expand `η(s_μ)` in the Q basis.
    Eta,
    /// The Macdonald–You expansion divided by `2^n`.
    MacdonaldYou,
}

impl GRoute {
    pub const ALL: [GRoute; 3] = [GRoute::Tableau, GRoute::Eta, GRoute::MacdonaldYou];
}

fn check_box(mu: &Partition, n: usize) -> Result<()> {
    if mu.fits_box(n) {
        Ok(())
    } else {
        Err(Error::Containment {
            shape: format!("({mu})"),
            bound: format!("box ({n}^{n})"),
        })
    }
}

fn check_staircase(lambda: &StrictPartition, n: usize) -> Result<()> {
    if lambda.fits_staircase(n) {
        Ok(())
    } else {
        Err(Error::Containment {
            shape: format!("({lambda})"),
            bound: format!("staircase ({})", StrictPartition::staircase(n)),
        })
    }
}

/// All `g_{λμ}` with `|λ| = |μ|`, by the chosen route.
pub fn g_row(mu: &Partition, route: GRoute) -> Result<Expansion<StrictPartition, BigInt>> {
    match route {
        GRoute::Tableau => {
            let mut out = Expansion::zero(mu.weight());
            for lambda in strict_partitions_of(mu.weight()) {
                let g = g_coeff(&lambda, mu);
                out.add_term(lambda, BigInt::from(g));
            }
            Ok(out)
        }
        GRoute::Eta => expand_in_q(&eta_schur::<BigInt>(mu)),
        GRoute::MacdonaldYou => g_from_my(mu),
    }
}

/// `i^*(σ_μ) = Σ_λ g_{λμ} σ'_λ` over strict `λ` in the staircase.
pub fn restrict(mu: &Partition, n: usize) -> Result<SchubertExpansionLG> {
    restrict_with(mu, n, GRoute::Tableau)
}

pub fn restrict_with(mu: &Partition, n: usize, route: GRoute) -> Result<SchubertExpansionLG> {
    check_box(mu, n)?;
    let mut terms = match route {
        GRoute::Tableau => {
            let mut out = Expansion::zero(mu.weight());
            for lambda in strict_partitions_in_staircase(mu.weight(), n) {
                let g = g_coeff(&lambda, mu);
                out.add_term(lambda, BigInt::from(g));
            }
            out
        }
        _ => g_row(mu, route)?,
    };
    terms.retain(|lambda| lambda.fits_staircase(n));
    Ok(SchubertExpansion { n, terms })
}

/// `σ'_μ · σ'_ν = Σ_λ e^λ_{μν} σ'_λ` truncated to the staircase.
pub fn lg_product(mu: &StrictPartition, nu: &StrictPartition, n: usize) -> Result<SchubertExpansionLG> {
    check_staircase(mu, n)?;
    check_staircase(nu, n)?;
    let degree = mu.weight() + nu.weight();
    let mut terms = Expansion::zero(degree);
    for lambda in strict_partitions_in_staircase(degree, n) {
        terms.add_term(lambda.clone(), BigInt::from(e_coeff(mu, nu, &lambda)?));
    }
    Ok(SchubertExpansion { n, terms })
}

/// `∫_{G'} a · b` by duality: `Σ_λ a_λ b_{λ^∨}`. Zero unless the degrees
/// are complementary.
pub fn pairing_lg(a: &SchubertExpansionLG, b: &SchubertExpansionLG) -> Result<BigInt> {
    if a.n != b.n {
        return Err(Error::LengthMismatch(a.n, b.n));
    }
    let n = a.n;
    if a.degree() + b.degree() != n * (n + 1) / 2 {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    for (lambda, c) in a.terms() {
        total += c * b.coeff(&lambda.complement(n)?);
    }
    Ok(total)
}

/// The same pairing read off as the coefficient of the point class in the
/// product `a · b`.
pub fn pairing_lg_via_product(a: &SchubertExpansionLG, b: &SchubertExpansionLG) -> Result<BigInt> {
    if a.n != b.n {
        return Err(Error::LengthMismatch(a.n, b.n));
    }
    let n = a.n;
    if a.degree() + b.degree() != n * (n + 1) / 2 {
        return Ok(BigInt::zero());
    }
    let top = StrictPartition::staircase(n);
    let mut total = BigInt::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            total += cx * cy * BigInt::from(e_coeff(x, y, &top)?);
        }
    }
    Ok(total)
}

/// `i_*(σ'_λ) = Σ_μ g_{λ^∨, μ^★} σ_μ` over `μ ⊂ (n^n)` with
/// `|μ| = |λ| + n(n−1)/2`.
pub fn pushforward(lambda: &StrictPartition, n: usize) -> Result<SchubertExpansionG> {
    check_staircase(lambda, n)?;
    let dual = lambda.complement(n)?;
    let degree = lambda.weight() + n * n.saturating_sub(1) / 2;
    let mut terms = Expansion::zero(degree);
    for mu in partitions_in_box(degree, n) {
        let star = mu.complement_box(n)?;
        terms.add_term(mu, BigInt::from(g_coeff(&dual, &star)));
    }
    Ok(SchubertExpansion { n, terms })
}

/// `Σ_ν e^{ρ_n}_{λν} g_{ν μ^★} = g_{λ^∨ μ^★}`.
pub fn verify_eq24(lambda: &StrictPartition, mu: &Partition, n: usize) -> bool {
    let (Ok(dual), Ok(star)) = (lambda.complement(n), mu.complement_box(n)) else {
        return false;
    };
    let top = StrictPartition::staircase(n);
    let Some(rest) = top.weight().checked_sub(lambda.weight()) else {
        return false;
    };
    let mut lhs = 0u64;
    for nu in strict_partitions_of(rest) {
        match e_coeff(lambda, &nu, &top) {
            Ok(e) => lhs += e * g_coeff(&nu, &star),
            Err(_) => return false,
        }
    }
    lhs == g_coeff(&dual, &star)
}

/// `e^{ρ_n}_{λν} = δ_{ν, λ^∨}` for every `λ` in the staircase and every
/// strict `ν` of complementary weight.
pub fn staircase_duality_holds(n: usize) -> bool {
    let top = StrictPartition::staircase(n);
    for w in 0..=top.weight() {
        for lambda in strict_partitions_in_staircase(w, n) {
            let dual = lambda.complement(n).expect("inside the staircase");
            for nu in strict_partitions_of(top.weight() - w) {
                let expected = u64::from(nu == dual);
                if e_coeff(&lambda, &nu, &top).ok() != Some(expected) {
                    return false;
                }
            }
        }
    }
    true
}
