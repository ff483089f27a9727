//! Partitions, strict partitions, Frobenius coordinates and signed
//! straightening of index sequences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
///
/// The derived ordering is lexicographic on the parts, which is a linear
/// extension of the dominance order on partitions of a fixed weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any other violation of weak decrease is
    /// rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    /// Sorts the nonzero entries of `parts` into a partition.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 0-indexed, with implicit trailing zeros.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_strict(&self) -> Option<StrictPartition> {
        self.is_strict().then(|| StrictPartition(self.clone()))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Cells `(row, col)` of the Young diagram, 0-indexed, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Dominance order; `None` when the weights differ or the partitions are
    /// incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.weight() != other.weight() {
            return None;
        }
        let (mut a, mut b) = (0usize, 0usize);
        let (mut ge, mut le) = (true, true);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_cmp(other),
            Some(Ordering::Greater | Ordering::Equal)
        )
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `μ ⊂ (n^n)`.
    pub fn fits_box(&self, n: usize) -> bool {
        self.len() <= n && self.part(0) <= n
    }

    /// Frobenius coordinates `(α | β)`: `α_i = μ_i − i`, `β_i = μ~_i − i`
    /// over the diagonal boxes.
    pub fn frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let rank = (0..self.len()).take_while(|&i| self.0[i] > i).count();
        FrobeniusForm {
            alpha: (0..rank).map(|i| self.0[i] - i - 1).collect(),
            beta: (0..rank).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    pub fn from_frobenius(form: &FrobeniusForm) -> Result<Partition> {
        form.validate()?;
        let n = form.rank();
        if n == 0 {
            return Ok(Partition::empty());
        }
        // Rows below the Durfee square are read off the legs.
        let rows = form.beta[0] + 1;
        let mut parts = Vec::with_capacity(rows);
        for i in 0..rows {
            if i < n {
                parts.push(form.alpha[i] + i + 1);
            } else {
                parts.push(form.beta.iter().enumerate().filter(|&(j, &b)| b + j >= i).count());
            }
        }
        Partition::new(parts)
    }

    /// `μ^★ = (n − μ_n, …, n − μ_1)`.
    pub fn complement_box(&self, n: usize) -> Result<Partition> {
        if !self.fits_box(n) {
            return Err(Error::Containment {
                shape: format!("({self})"),
                bound: format!("box ({n}^{n})"),
            });
        }
        Partition::new((0..n).rev().map(|i| n - self.part(i)).collect())
    }

    /// Canonical comma form with the same exponent grouping as the input
    /// shorthand, e.g. `5^3,3,1^3`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `5,5,5,3,1,1,1`, the exponent shorthand `5^3,3,1^3`, optional
/// surrounding parentheses, and `""`, `"0"` or `"∅"` for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (value, count) = match token.split_once('^') {
                Some((v, c)) => (v.trim(), c.trim()),
                None => (token, "1"),
            };
            let bad = |why: &str| Error::Parse(text.to_string(), format!("{why} in `{token}`"));
            let value: usize = value.parse().map_err(|_| bad("expected a part"))?;
            let count: usize = count.parse().map_err(|_| bad("expected an exponent"))?;
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts).map_err(|e| Error::Parse(text.to_string(), e.to_string()))
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p.0))
        }
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    /// `ρ_n = (n, n−1, …, 1)`.
    pub fn staircase(n: usize) -> Self {
        StrictPartition(Partition((1..=n).rev().collect()))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ ⊂ (n, n−1, …, 1)`, equivalently every part is at most `n`.
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.len() <= n && self.parts().iter().enumerate().all(|(i, &p)| p + i <= n)
    }

    /// `λ^∨`: the parts of `{1, …, n}` not used by `λ`.
    pub fn complement(&self, n: usize) -> Result<StrictPartition> {
        if !self.fits_staircase(n) {
            return Err(Error::Containment {
                shape: format!("({self})"),
                bound: format!("staircase ({})", StrictPartition::staircase(n)),
            });
        }
        let parts = (1..=n).rev().filter(|k| !self.parts().contains(k)).collect();
        Ok(StrictPartition(Partition(parts)))
    }

    /// The double diagram `(λ_1, λ_2, … | λ_1 − 1, λ_2 − 1, …)`; the shifted
    /// diagram of `λ` sits strictly right of its main diagonal.
    pub fn double_diagram(&self) -> Partition {
        let form = FrobeniusForm {
            alpha: self.parts().to_vec(),
            beta: self.parts().iter().map(|p| p - 1).collect(),
        };
        Partition::from_frobenius(&form).expect("double diagram has valid Frobenius data")
    }

    /// Cells `(row, col)` of the shifted diagram: row `r` starts at column `r`.
    pub fn shifted_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (r..r + len).map(move |c| (r, c)))
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0 .0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p.0))
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let p: Partition = text.parse()?;
        StrictPartition::try_from(p).map_err(|e| Error::Parse(text.to_string(), e.to_string()))
    }
}

/// Frobenius coordinates `(α | β)` of a partition.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct FrobeniusForm {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl FrobeniusForm {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    fn validate(&self) -> Result<()> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if self.alpha.len() != self.beta.len() {
            return Err(Error::LengthMismatch(self.alpha.len(), self.beta.len()));
        }
        if !strict(&self.alpha) || !strict(&self.beta) {
            return Err(Error::Consistency(format!(
                "Frobenius coordinates {self} are not strictly decreasing"
            )));
        }
        Ok(())
    }

    /// `A = (α_1 + 1, …, α_n + 1)`, `B = (β_1, …, β_n)`.
    pub fn ab_sequences(&self) -> (IntSequence, IntSequence) {
        (
            IntSequence(self.alpha.iter().map(|a| a + 1).collect()),
            IntSequence(self.beta.clone()),
        )
    }

    /// `C = (β_1 + 1, …, β_n + 1)`, `D = (α_1, …, α_n)`.
    pub fn cd_sequences(&self) -> (IntSequence, IntSequence) {
        (
            IntSequence(self.beta.iter().map(|b| b + 1).collect()),
            IntSequence(self.alpha.clone()),
        )
    }

    pub fn transpose(&self) -> FrobeniusForm {
        FrobeniusForm {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.alpha), join(&self.beta))
    }
}

/// An ordered sequence of nonnegative integers: the raw index of a composite
/// Q-function before straightening.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct IntSequence(pub Vec<usize>);

impl IntSequence {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for IntSequence {
    fn from(v: Vec<usize>) -> Self {
        IntSequence(v)
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply<T: Neg<Output = T>>(self, value: T) -> T {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Sorts a sequence into a strict partition `⟨K⟩` together with the sign of
/// the sorting permutation. Zero entries are dropped first (`Q_0 = 1`); any
/// repeated positive entry makes the term vanish (`None`).
pub fn straighten(seq: &IntSequence) -> Option<(Sign, StrictPartition)> {
    let entries: Vec<usize> = seq.0.iter().copied().filter(|&k| k > 0).collect();
    let mut inversions = 0usize;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            match entries[i].cmp(&entries[j]) {
                Ordering::Equal => return None,
                Ordering::Less => inversions += 1,
                Ordering::Greater => {}
            }
        }
    }
    let mut sorted = entries;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Some((Sign::from_parity(inversions % 2 == 1), StrictPartition(Partition(sorted))))
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of `n`, in decreasing lexicographic order.
pub fn strict_partitions_of(n: usize) -> Vec<StrictPartition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition(Partition(cur.clone())));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `weight` inside the box `(n^n)`, decreasing lexicographic.
pub fn partitions_in_box(weight: usize, n: usize) -> Vec<Partition> {
    partitions_of(weight).into_iter().filter(|p| p.fits_box(n)).collect()
}

/// Strict partitions of `weight` inside the staircase `ρ_n`.
pub fn strict_partitions_in_staircase(weight: usize, n: usize) -> Vec<StrictPartition> {
    strict_partitions_of(weight)
        .into_iter()
        .filter(|p| p.fits_staircase(n))
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

    #[test]
    fn parses_both_syntaxes() {
        let a: Partition = "5^3,3,1^3".parse().unwrap();
        let b: Partition = "5,5,5,3,1,1,1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "5,5,5,3,1,1,1");
        assert_eq!(a.to_exponent_string(), "5^3,3,1^3");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[5, 5, 5, 3, 1, 1, 1]).frobenius();
        assert_eq!(f.alpha, vec![4, 3, 2]);
        assert_eq!(f.beta, vec![6, 2, 1]);
        assert_eq!(f.to_string(), "(4,3,2|6,2,1)");
        let f = p(&[1]).frobenius();
        assert_eq!((f.alpha, f.beta), (vec![0], vec![0]));
        let f = p(&[2, 1]).frobenius();
        assert_eq!((f.alpha, f.beta), (vec![1], vec![1]));
        assert_eq!(Partition::empty().frobenius().rank(), 0);
    }

    #[test]
    fn ab_and_cd_sequences() {
        let f = p(&[5, 5, 5, 3, 1, 1, 1]).frobenius();
        let (a, b) = f.ab_sequences();
        assert_eq!((a.0, b.0), (vec![5, 4, 3], vec![6, 2, 1]));
        let (c, d) = f.cd_sequences();
        assert_eq!((c.0, d.0), (vec![7, 3, 2], vec![4, 3, 2]));

        let (a, b) = p(&[1]).frobenius().ab_sequences();
        assert_eq!((a.0, b.0), (vec![1], vec![0]));
        let (c, d) = p(&[1]).frobenius().cd_sequences();
        assert_eq!((c.0, d.0), (vec![1], vec![0]));
        let (a, b) = p(&[2, 1]).frobenius().ab_sequences();
        assert_eq!((a.0, b.0), (vec![2], vec![1]));
        let (c, d) = p(&[2, 1]).frobenius().cd_sequences();
        assert_eq!((c.0, d.0), (vec![2], vec![1]));
    }

    #[test]
    fn conjugates() {
        let mu = p(&[5, 5, 5, 3, 1, 1, 1]);
        let conj = mu.conjugate();
        assert_eq!(conj, p(&[7, 4, 4, 3, 3]));
        assert_eq!(conj.frobenius(), mu.frobenius().transpose());
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    }

    #[test]
    fn strict_complements() {
        assert_eq!(sp(&[2]).complement(2).unwrap(), sp(&[1]));
        assert_eq!(StrictPartition::empty().complement(3).unwrap(), sp(&[3, 2, 1]));
        assert_eq!(sp(&[3, 1]).complement(4).unwrap(), sp(&[4, 2]));
        assert!(sp(&[5]).complement(4).is_err());
    }

    #[test]
    fn box_complements() {
        assert_eq!(p(&[3, 3, 3]).complement_box(3).unwrap(), Partition::empty());
        assert_eq!(p(&[1]).complement_box(2).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).complement_box(2).unwrap(), p(&[1]));
        assert!(p(&[3]).complement_box(2).is_err());
        assert!(p(&[1, 1, 1]).complement_box(2).is_err());
    }

    #[test]
    fn straighten_examples() {
        let s = |v: &[usize]| straighten(&IntSequence(v.to_vec()));
        assert_eq!(s(&[7, 4, 3, 2]), Some((Sign::Plus, sp(&[7, 4, 3, 2]))));
        assert_eq!(s(&[4, 3, 3, 2, 2]), None);
        assert_eq!(s(&[6, 4, 2, 3, 1]), Some((Sign::Minus, sp(&[6, 4, 3, 2, 1]))));
        assert_eq!(s(&[1, 0]), Some((Sign::Plus, sp(&[1]))));
        assert_eq!(s(&[0, 0]), Some((Sign::Plus, StrictPartition::empty())));
    }

    #[test]
    fn double_diagram_of_small_shapes() {
        assert_eq!(sp(&[2, 1]).double_diagram(), p(&[3, 3]));
        assert_eq!(sp(&[3, 1]).double_diagram(), p(&[4, 3, 1]));
        assert_eq!(sp(&[1]).double_diagram(), p(&[2]));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let strict: Vec<usize> = (0..=10).map(|n| strict_partitions_of(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
        assert_eq!(partitions_of(21).len(), 792);
        assert_eq!(strict_partitions_of(21).len(), 76);
        let ps = partitions_of(6);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn dominance() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert_eq!(p(&[3, 3]).dominance_cmp(&p(&[4, 1, 1])), None);
        assert_eq!(p(&[2]).dominance_cmp(&p(&[1])), None);
    }
}
