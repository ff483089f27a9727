//! Marked tableaux and the Stembridge coefficients `f^λ_{μν}`, `g_{λμ}`,
//! `e^λ_{μν}`.
//!
//! A marked tableau is a filling by the alphabet `1' < 1 < 2' < 2 < …` with
//! rows and columns weakly increasing, each unprimed `k` at most once per
//! column and each primed `k'` at most once per row. Its word is read row by
//! row from the top, right to left within each row.
//!
//! The word `w = w_1 … w_n` has the lattice property when, with `m_i(j)`
//! counting unprimed `i` among the first `j` letters (`0 ≤ j ≤ n`) and then
//! adding primed `i'` among the last `j − n` letters (`n < j ≤ 2n`), every
//! `j` with `m_i(j) = m_{i−1}(j)` has `w_{j+1} ∉ {i, i'}` for `j < n` and
//! `w_{2n−j} ∉ {i−1, i'}` for `n ≤ j < 2n`. This is Stembridge's condition
//! transported to the reversed reading order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{straighten, IntSequence, Partition, StrictPartition};

/// A letter of `1' < 1 < 2' < 2 < …`, encoded as `2k − 1` for `k'` and `2k`
/// for `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn unprimed(k: usize) -> Letter {
        assert!(k >= 1, "letters start at 1");
        Letter(2 * k as u32)
    }

    pub fn primed(k: usize) -> Letter {
        assert!(k >= 1, "letters start at 1");
        Letter(2 * k as u32 - 1)
    }

    pub fn value(self) -> usize {
        (self.0 as usize).div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&text.join(" "))
    }
}

/// Whitespace-separated letters, e.g. `"2 1' 1"`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|tok| {
                let (digits, primed) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                match digits.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(if primed { Letter::primed(k) } else { Letter::unprimed(k) }),
                    _ => Err(Error::Parse(text.to_string(), format!("bad letter `{tok}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Layout {
    /// Row `r` is indented by `r` columns.
    Shifted,
    Unshifted,
}

/// The skew diagram `outer / inner`, shifted or not.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
    layout: Layout,
}

impl SkewShape {
    pub fn shifted(outer: &StrictPartition, inner: &StrictPartition) -> Option<SkewShape> {
        outer.as_partition().contains(inner.as_partition()).then(|| SkewShape {
            outer: outer.parts().to_vec(),
            inner: inner.parts().to_vec(),
            layout: Layout::Shifted,
        })
    }

    pub fn unshifted(outer: &Partition) -> SkewShape {
        SkewShape {
            outer: outer.parts().to_vec(),
            inner: Vec::new(),
            layout: Layout::Unshifted,
        }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range of row `r`.
    pub fn row_range(&self, r: usize) -> (usize, usize) {
        if r >= self.outer.len() {
            return (0, 0);
        }
        let shift = match self.layout {
            Layout::Shifted => r,
            Layout::Unshifted => 0,
        };
        let inner = self.inner.get(r).copied().unwrap_or(0);
        (shift + inner, shift + self.outer[r])
    }

    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    fn contains_cell(&self, r: usize, c: usize) -> bool {
        let (lo, hi) = self.row_range(r);
        lo <= c && c < hi
    }
}

/// A filling of a [`SkewShape`]; `rows[r]` lists row `r` left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl MarkedTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<MarkedTableau> {
        let fits = rows.len() == shape.rows()
            && rows.iter().enumerate().all(|(r, row)| {
                let (lo, hi) = shape.row_range(r);
                row.len() == hi - lo
            });
        let t = MarkedTableau { shape, rows };
        if !fits || !t.is_valid() {
            return Err(Error::Consistency(format!("not a marked tableau: {:?}", t.rows)));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let (lo, hi) = self.shape.row_range(r);
        (lo <= c && c < hi).then(|| self.rows[r][c - lo])
    }

    fn is_valid(&self) -> bool {
        for r in 0..self.shape.rows() {
            let (lo, hi) = self.shape.row_range(r);
            for c in lo..hi {
                let x = self.rows[r][c - lo];
                if c > lo && !row_ok(self.rows[r][c - lo - 1], x) {
                    return false;
                }
                if let Some(below) = self.get(r + 1, c) {
                    if !column_ok(x, below) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `weight[k−1]` = number of entries equal to `k` or `k'`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &x in self.rows.iter().flatten() {
            if w.len() < x.value() {
                w.resize(x.value(), 0);
            }
            w[x.value() - 1] += 1;
        }
        w
    }
}

/// `left` may sit immediately left of `right` in a row.
fn row_ok(left: Letter, right: Letter) -> bool {
    left < right || (left == right && !right.is_primed())
}

/// `top` may sit immediately above `bottom` in a column.
fn column_ok(top: Letter, bottom: Letter) -> bool {
    top < bottom || (top == bottom && top.is_primed())
}

/// The reading word: rows from the top, each read right to left.
pub fn word_of(t: &MarkedTableau) -> Word {
    Word(t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect())
}

pub fn satisfies_lattice(w: &Word) -> bool {
    let letters = &w.0;
    let n = letters.len();
    let top = letters.iter().map(|x| x.value()).max().unwrap_or(0);
    let mut m = vec![0usize; top + 2];
    for &x in letters {
        let v = x.value();
        if v >= 2 && m[v] == m[v - 1] {
            return false;
        }
        if !x.is_primed() {
            m[v] += 1;
        }
    }
    lattice_second_pass(letters, &mut m, n)
}

fn lattice_second_pass(letters: &[Letter], m: &mut [usize], n: usize) -> bool {
    for &x in letters[..n].iter().rev() {
        let v = x.value();
        if x.is_primed() {
            if v >= 2 && m[v] == m[v - 1] {
                return false;
            }
            m[v] += 1;
        } else if m[v + 1] == m[v] {
            return false;
        }
    }
    true
}

/// For each `k`, the rightmost `k'` (if any) precedes the last `k`.
pub fn satisfies_prime_rule(w: &Word) -> bool {
    prime_rule_holds(&w.0)
}

fn prime_rule_holds(letters: &[Letter]) -> bool {
    let top = letters.iter().map(|x| x.value()).max().unwrap_or(0);
    let mut last_primed = vec![None; top + 1];
    let mut last_unprimed = vec![None; top + 1];
    for (i, &x) in letters.iter().enumerate() {
        if x.is_primed() {
            last_primed[x.value()] = Some(i);
        } else {
            last_unprimed[x.value()] = Some(i);
        }
    }
    (1..=top).all(|k| match (last_primed[k], last_unprimed[k]) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(p), Some(u)) => p < u,
    })
}

/// Depth-first search over fillings of `shape` with the given weight in
/// reading order, so that the first lattice pass prunes partial fillings.
/// Called with the letters in fill order and the finished grid.
type Visitor<'v> = dyn FnMut(&[Letter], &[Vec<Option<Letter>>]) + 'v;

struct Search<'a> {
    shape: &'a SkewShape,
    weight: &'a [usize],
    lattice: bool,
    order: Vec<(usize, usize)>,
    grid: Vec<Vec<Option<Letter>>>,
    used: Vec<usize>,
    m: Vec<usize>,
    fill: Vec<Letter>,
}

impl<'a> Search<'a> {
    fn new(shape: &'a SkewShape, weight: &'a [usize], lattice: bool) -> Self {
        let mut order = Vec::new();
        let mut width = 0;
        for r in 0..shape.rows() {
            let (lo, hi) = shape.row_range(r);
            width = width.max(hi);
            order.extend((lo..hi).rev().map(|c| (r, c)));
        }
        Search {
            shape,
            weight,
            lattice,
            order,
            grid: vec![vec![None; width]; shape.rows()],
            used: vec![0; weight.len() + 2],
            m: vec![0; weight.len() + 2],
            fill: Vec::new(),
        }
    }

    fn run(&mut self, k: usize, visit: &mut Visitor<'_>) {
        if k == self.order.len() {
            visit(&self.fill, &self.grid);
            return;
        }
        let (r, c) = self.order[k];
        let right = if self.shape.contains_cell(r, c + 1) {
            self.grid[r][c + 1]
        } else {
            None
        };
        let above = if r > 0 && self.shape.contains_cell(r - 1, c) {
            self.grid[r - 1][c]
        } else {
            None
        };
        for v in 1..=self.weight.len() {
            if self.used[v] == self.weight[v - 1] {
                continue;
            }
            if self.lattice && v >= 2 && self.m[v] == self.m[v - 1] {
                continue;
            }
            for x in [Letter::primed(v), Letter::unprimed(v)] {
                if right.is_some_and(|y| !row_ok(x, y)) || above.is_some_and(|y| !column_ok(y, x)) {
                    continue;
                }
                self.grid[r][c] = Some(x);
                self.used[v] += 1;
                if !x.is_primed() {
                    self.m[v] += 1;
                }
                self.fill.push(x);
                self.run(k + 1, visit);
                self.fill.pop();
                if !x.is_primed() {
                    self.m[v] -= 1;
                }
                self.used[v] -= 1;
                self.grid[r][c] = None;
            }
        }
    }
}

/// Every marked tableau of `shape` with the given weight, with no lattice or
/// prime condition applied.
pub fn marked_tableaux(shape: &SkewShape, weight: &[usize]) -> Vec<MarkedTableau> {
    if weight.iter().sum::<usize>() != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut search = Search::new(shape, weight, false);
    search.run(0, &mut |_, grid| {
        let rows = (0..shape.rows())
            .map(|r| {
                let (lo, hi) = shape.row_range(r);
                (lo..hi).map(|c| grid[r][c].expect("filled")).collect()
            })
            .collect();
        out.push(MarkedTableau {
            shape: shape.clone(),
            rows,
        });
    });
    out
}

/// Number of marked tableaux of `shape` and weight `weight` whose word has
/// the lattice property and satisfies the prime rule.
pub fn count_stembridge_tableaux(shape: &SkewShape, weight: &[usize]) -> u64 {
    if weight.iter().sum::<usize>() != shape.size() {
        return 0;
    }
    let n = shape.size();
    let mut count = 0u64;
    let mut search = Search::new(shape, weight, true);
    let mut m = vec![0usize; weight.len() + 2];
    search.run(0, &mut |fill, _| {
        // `fill` is the reading word; the first pass already held.
        m.iter_mut().for_each(|x| *x = 0);
        for &x in fill.iter().filter(|x| !x.is_primed()) {
            m[x.value()] += 1;
        }
        if lattice_second_pass(fill, &mut m, n) && prime_rule_holds(fill) {
            count += 1;
        }
    });
    count
}

/// `f^λ_{μν}`: tableaux of shifted shape `λ/μ` and weight `ν`; zero outside
/// the index domain.
pub fn f_coeff(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> u64 {
    if mu.weight() + nu.weight() != lambda.weight() {
        return 0;
    }
    match SkewShape::shifted(lambda, mu) {
        Some(shape) => count_stembridge_tableaux(&shape, nu.parts()),
        None => 0,
    }
}

/// `g_{λμ}`: tableaux of unshifted shape `μ` and weight `λ`.
pub fn g_coeff(lambda: &StrictPartition, mu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    count_stembridge_tableaux(&SkewShape::unshifted(mu), lambda.parts())
}

/// `e^λ_{μν} = 2^{l(μ)+l(ν)−l(λ)} f^λ_{μν}`.
pub fn e_coeff(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> Result<u64> {
    let f = f_coeff(mu, nu, lambda);
    if f == 0 {
        return Ok(0);
    }
    let exponent = (mu.len() + nu.len()).checked_sub(lambda.len()).ok_or_else(|| {
        Error::Consistency(format!(
            "f^{lambda:?}_{{{mu:?},{nu:?}}} = {f} with l(μ)+l(ν) < l(λ)"
        ))
    })?;
    Ok(f << exponent)
}

/// `sgn(w_K) · e^λ_{μ⟨K⟩}`, zero when `K` has a repeated entry.
pub fn e_signed(mu: &StrictPartition, k: &IntSequence, lambda: &StrictPartition) -> Result<i64> {
    match straighten(k) {
        None => Ok(0),
        Some((sign, nu)) => Ok(sign.to_i64() * e_coeff(mu, &nu, lambda)? as i64),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffKind {
    F,
    G,
    E,
}

/// One line of a coefficient table dump:
/// `{"kind":"g","indices":[[9,6,4,2],[5,5,5,3,1,1,1]],"value":"6"}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub kind: CoeffKind,
    pub indices: Vec<Vec<usize>>,
    pub value: String,
}

impl CoeffRecord {
    pub fn f(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> Self {
        CoeffRecord {
            kind: CoeffKind::F,
            indices: vec![mu.parts().to_vec(), nu.parts().to_vec(), lambda.parts().to_vec()],
            value: f_coeff(mu, nu, lambda).to_string(),
        }
    }

    pub fn g(lambda: &StrictPartition, mu: &Partition) -> Self {
        CoeffRecord {
            kind: CoeffKind::G,
            indices: vec![lambda.parts().to_vec(), mu.parts().to_vec()],
            value: g_coeff(lambda, mu).to_string(),
        }
    }

    pub fn e(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> Result<Self> {
        Ok(CoeffRecord {
            kind: CoeffKind::E,
            indices: vec![mu.parts().to_vec(), nu.parts().to_vec(), lambda.parts().to_vec()],
            value: e_coeff(mu, nu, lambda)?.to_string(),
        })
    }
}
