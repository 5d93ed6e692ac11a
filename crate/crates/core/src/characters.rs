//! Exact character ring for gl(m|n)-modules.
//!
//! Characters are Laurent polynomials in `x_{-m}, ..., x_{-1}` (negative block, any integer
//! exponent) and `y_1, ..., y_t` (positive block, nonnegative exponents), stored as a sparse
//! map from exponent vectors `[x_{-m}, ..., x_{-1}, y_1, ..., y_t]` to integer coefficients.
//! The monomial of a weight is its coordinate vector, so highest weights read off directly.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::partitions::Partition;
use crate::weights::{Rank, SuperWeight};
use crate::weyl_cosets::resolution_layers;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseLaurent {
    mvars: usize,
    tvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

/// One serialized monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharRecord {
    pub exponents: Vec<i32>,
    pub coeff: String,
}

impl SparseLaurent {
    pub fn zero(mvars: usize, tvars: usize) -> Self {
        Self { mvars, tvars, terms: BTreeMap::new() }
    }

    pub fn one(mvars: usize, tvars: usize) -> Self {
        Self::monomial(mvars, tvars, vec![0; mvars + tvars], 1)
    }

    pub fn monomial(mvars: usize, tvars: usize, exponents: Vec<i32>, coeff: i64) -> Self {
        assert_eq!(exponents.len(), mvars + tvars, "exponent vector length");
        assert!(exponents[mvars..].iter().all(|&e| e >= 0), "negative y exponent");
        let mut p = Self::zero(mvars, tvars);
        p.add_term(exponents, coeff);
        p
    }

    /// The monomial of a weight with at most `tvars` positive coordinates.
    pub fn of_weight(mu: &SuperWeight, tvars: usize) -> Self {
        let exps = mu.flat(tvars).into_iter().map(|e| e as i32).collect();
        Self::monomial(mu.m(), tvars, exps, 1)
    }

    pub fn mvars(&self) -> usize {
        self.mvars
    }

    pub fn tvars(&self) -> usize {
        self.tvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[i32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exponents: Vec<i32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(coeff).expect("coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!((self.mvars, self.tvars), (other.mvars, other.tvars), "mixing character rings");
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.mvars, self.tvars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    /// Sum of all coefficients: the dimension of the module when `self` is a character.
    pub fn eval_at_ones(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }

    /// Keeps the monomials satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[i32]) -> bool) -> Self {
        Self {
            mvars: self.mvars,
            tvars: self.tvars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, &c)| (e.clone(), c)).collect(),
        }
    }

    /// Twice the Z-degree `(sum of x exponents - sum of y exponents) / 2` of a monomial.
    pub fn doubled_z_degree(&self, exponents: &[i32]) -> i64 {
        let (x, y) = exponents.split_at(self.mvars);
        x.iter().map(|&e| e as i64).sum::<i64>() - y.iter().map(|&e| e as i64).sum::<i64>()
    }

    /// Monomials of doubled Z-degree at least `min_doubled`.
    pub fn mask_z_degree(&self, min_doubled: i64) -> Self {
        let mvars = self.mvars;
        self.filter(|e| {
            let (x, y) = e.split_at(mvars);
            x.iter().map(|&v| v as i64).sum::<i64>() - y.iter().map(|&v| v as i64).sum::<i64>() >= min_doubled
        })
    }

    /// Sets every `y_j` to zero, returning a polynomial in the `x` variables only.
    pub fn specialize_y_zero(&self) -> Self {
        let mut out = Self::zero(self.mvars, 0);
        for (e, &c) in &self.terms {
            if e[self.mvars..].iter().all(|&v| v == 0) {
                out.add_term(e[..self.mvars].to_vec(), c);
            }
        }
        out
    }

    /// Treats all variables of `self` as `x`'s and all variables of `y` as `y`'s and
    /// multiplies. Both inputs must have `tvars == 0`.
    pub fn outer(x: &Self, y: &Self) -> Self {
        assert!(x.tvars == 0 && y.tvars == 0, "outer product takes single-block inputs");
        let mut out = Self::zero(x.mvars, y.mvars);
        for (ex, &cx) in &x.terms {
            for (ey, &cy) in &y.terms {
                assert!(ey.iter().all(|&v| v >= 0), "negative y exponent");
                let mut e = ex.clone();
                e.extend_from_slice(ey);
                out.add_term(e, cx.checked_mul(cy).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Re-reads the variables with a different split point.
    pub fn resplit(&self, mvars: usize) -> Self {
        let total = self.mvars + self.tvars;
        assert!(mvars <= total);
        let out = Self { mvars, tvars: total - mvars, terms: self.terms.clone() };
        assert!(out.terms.keys().all(|e| e[mvars..].iter().all(|&v| v >= 0)), "negative y exponent");
        out
    }

    /// Deterministic serialization, lexicographic in the exponent vector.
    pub fn to_records(&self) -> Vec<CharRecord> {
        self.terms
            .iter()
            .map(|(e, c)| CharRecord { exponents: e.clone(), coeff: c.to_string() })
            .collect()
    }
}

impl Add for &SparseLaurent {
    type Output = SparseLaurent;

    fn add(self, rhs: &SparseLaurent) -> SparseLaurent {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &SparseLaurent {
    type Output = SparseLaurent;

    fn sub(self, rhs: &SparseLaurent) -> SparseLaurent {
        self + &(-rhs)
    }
}

impl Neg for &SparseLaurent {
    type Output = SparseLaurent;

    fn neg(self) -> SparseLaurent {
        self.scale(-1)
    }
}

impl Mul for &SparseLaurent {
    type Output = SparseLaurent;

    fn mul(self, rhs: &SparseLaurent) -> SparseLaurent {
        self.same_ring(rhs);
        let mut acc: HashMap<Vec<i32>, i64> = HashMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let v = acc.entry(e).or_insert(0);
                let prod = ca.checked_mul(cb).expect("coefficient overflow");
                *v = v.checked_add(prod).expect("coefficient overflow");
            }
        }
        SparseLaurent {
            mvars: self.mvars,
            tvars: self.tvars,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }
}

type Memo = HashMap<(Vec<u32>, usize), BTreeMap<Vec<i32>, i64>>;

/// Schur polynomial of a partition in `vars` variables, by peeling off the horizontal strip
/// of the largest letter of a semistandard tableau.
fn schur_terms(parts: &[u32], vars: usize, memo: &mut Memo) -> BTreeMap<Vec<i32>, i64> {
    if parts.len() > vars {
        return BTreeMap::new();
    }
    if vars == 0 {
        return BTreeMap::from([(Vec::new(), 1)]);
    }
    if let Some(hit) = memo.get(&(parts.to_vec(), vars)) {
        return hit.clone();
    }
    let size: u32 = parts.iter().sum();
    let mut out: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    for inner in horizontal_strips(parts) {
        let drop = size - inner.iter().sum::<u32>();
        for (e, c) in schur_terms(&inner, vars - 1, memo) {
            let mut e = e;
            e.push(drop as i32);
            *out.entry(e).or_insert(0) += c;
        }
    }
    memo.insert((parts.to_vec(), vars), out.clone());
    out
}

/// All `mu` with `lambda / mu` a horizontal strip (trailing zeros stripped).
fn horizontal_strips(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 0..parts.len() {
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        out = out
            .into_iter()
            .flat_map(|pre| {
                (lo..=parts[i]).map(move |v| {
                    let mut p = pre.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    for p in &mut out {
        while p.last() == Some(&0) {
            p.pop();
        }
    }
    out
}

/// All `mu` with `lambda / mu` a vertical strip.
fn vertical_strips(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for (i, &row) in parts.iter().enumerate() {
        let mut next = Vec::new();
        for pre in out {
            // parts are positive, so row - 1 cannot underflow
            for v in [row, row - 1] {
                if i == 0 || v <= pre[i - 1] {
                    let mut p = pre.clone();
                    p.push(v);
                    next.push(p);
                }
            }
        }
        out = next;
    }
    for p in &mut out {
        while p.last() == Some(&0) {
            p.pop();
        }
    }
    out
}

/// Character of the irreducible gl(vars)-module with weakly decreasing highest weight `sig`,
/// a polynomial in `vars` variables (returned with `tvars == 0`). Negative entries are handled
/// by twisting with a power of the determinant.
pub fn schur_laurent(sig: &[i64], vars: usize) -> Result<SparseLaurent> {
    if sig.len() > vars {
        return Err(precondition(format!("signature of length {} in {vars} variables", sig.len())));
    }
    if sig.windows(2).any(|w| w[0] < w[1]) {
        return Err(precondition(format!("signature {sig:?} is not weakly decreasing")));
    }
    let mut padded = sig.to_vec();
    padded.resize(vars, 0);
    let shift = -padded.iter().copied().min().unwrap_or(0).min(0);
    let parts: Vec<u32> = padded.iter().map(|&v| (v + shift) as u32).filter(|&v| v > 0).collect();
    let terms = schur_terms(&parts, vars, &mut Memo::new());
    let mut out = SparseLaurent::zero(vars, 0);
    for (e, c) in terms {
        out.add_term(e.into_iter().map(|v| v - shift as i32).collect(), c);
    }
    Ok(out)
}

/// Character of the gl(m) + gl(tvars) irreducible `L0(mu)`.
pub fn l0_character(mu: &SuperWeight, tvars: usize) -> Result<SparseLaurent> {
    if !mu.in_x() {
        return Err(precondition(format!("{mu} is not g0-dominant with partition tail")));
    }
    if mu.pos().len() > tvars {
        return Err(precondition(format!("{mu} needs more than {tvars} y-variables")));
    }
    Ok(SparseLaurent::outer(&schur_laurent(mu.neg(), mu.m())?, &schur_laurent(mu.pos(), tvars)?))
}

fn odd_lowering_monomials(m: usize, tvars: usize) -> Vec<SparseLaurent> {
    let mut out = Vec::with_capacity(m * tvars);
    for i in 0..m {
        for j in 0..tvars {
            let mut e = vec![0; m + tvars];
            e[i] = -1;
            e[m + j] = 1;
            out.push(SparseLaurent::monomial(m, tvars, e, 1));
        }
    }
    out
}

/// Character of the Kac module with highest weight `nu_natural`:
/// `prod_{i,j} (1 + x_i^{-1} y_j) * ch L0`.
pub fn kac_character(nu_natural: &SuperWeight, tvars: usize) -> Result<SparseLaurent> {
    let m = nu_natural.m();
    let mut ch = l0_character(nu_natural, tvars)?;
    let one = SparseLaurent::one(m, tvars);
    for z in odd_lowering_monomials(m, tvars) {
        ch = &ch * &(&one + &z);
    }
    Ok(ch)
}

/// Elementary (`super_power == false`) or complete homogeneous (`true`) symmetric polynomial
/// of degree `k` in the `m * tvars` quantities `x_i^{-1} y_j`: the character of the `k`-th
/// exterior power of g_{-1}, ordinary or super.
pub fn graded_piece_gminus1(k: usize, m: usize, tvars: usize, super_power: bool) -> SparseLaurent {
    let mut dp: Vec<SparseLaurent> = (0..=k).map(|_| SparseLaurent::zero(m, tvars)).collect();
    dp[0] = SparseLaurent::one(m, tvars);
    for z in odd_lowering_monomials(m, tvars) {
        if super_power {
            for j in 1..=k {
                let add = &dp[j - 1] * &z;
                dp[j] = &dp[j] + &add;
            }
        } else {
            for j in (1..=k).rev() {
                let add = &dp[j - 1] * &z;
                dp[j] = &dp[j] + &add;
            }
        }
    }
    dp.swap_remove(k)
}

/// Super-semistandard tableaux generating function in the ordered alphabet
/// `x_{-m} < ... < x_{-1} < y_1 < ... < y_t`: `x`-letters weakly increase along rows and
/// strictly down columns, `y`-letters strictly along rows and weakly down columns.
pub fn hook_schur(lam: &Partition, m: usize, tvars: usize) -> Result<SparseLaurent> {
    if !lam.in_hook(m, Rank::Finite(tvars)) {
        return Err(precondition(format!("{lam} is not in the ({m}|{tvars})-hook")));
    }
    let mut schur_memo = Memo::new();
    let mut memo: Memo = HashMap::new();
    let terms = hook_terms(lam.parts(), m, tvars, &mut memo, &mut schur_memo);
    let mut out = SparseLaurent::zero(m, tvars);
    for (e, c) in terms {
        out.add_term(e, c);
    }
    Ok(out)
}

fn hook_terms(
    parts: &[u32],
    m: usize,
    t: usize,
    memo: &mut Memo,
    schur_memo: &mut Memo,
) -> BTreeMap<Vec<i32>, i64> {
    if t == 0 {
        return schur_terms(parts, m, schur_memo);
    }
    if let Some(hit) = memo.get(&(parts.to_vec(), t)) {
        return hit.clone();
    }
    let size: u32 = parts.iter().sum();
    let mut out: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    for inner in vertical_strips(parts) {
        let drop = size - inner.iter().sum::<u32>();
        for (e, c) in hook_terms(&inner, m, t - 1, memo, schur_memo) {
            let mut e = e;
            e.push(drop as i32);
            *out.entry(e).or_insert(0) += c;
        }
    }
    memo.insert((parts.to_vec(), t), out.clone());
    out
}

/// Character of the gl(m+big_n)-irreducible with flattened highest weight `flat`, split into
/// `m` x-variables and `big_n` y-variables.
pub fn gl_character(flat: &[i64], m: usize, big_n: usize) -> Result<SparseLaurent> {
    Ok(schur_laurent(flat, m + big_n)?.resplit(m))
}

/// Multiplicities of g0-irreducibles in a g0-character.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct G0Decomposition {
    pub entries: BTreeMap<SuperWeight, u64>,
}

impl G0Decomposition {
    pub fn character(&self, m: usize, tvars: usize) -> Result<SparseLaurent> {
        let mut ch = SparseLaurent::zero(m, tvars);
        for (mu, &mult) in &self.entries {
            ch = &ch + &l0_character(mu, tvars)?.scale(mult as i64);
        }
        Ok(ch)
    }

    /// Entries whose highest weight has the given `(u + 2 rho_c | u)_c`.
    pub fn with_casimir_c(&self, value: i64) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(mu, _)| mu.casimir_c() == value)
                .map(|(mu, &c)| (mu.clone(), c))
                .collect(),
        }
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&c| c == 1)
    }

    pub fn weights(&self) -> Vec<SuperWeight> {
        self.entries.keys().cloned().collect()
    }
}

/// Splits a g0-character into irreducibles by repeatedly removing the character of the
/// lexicographically largest monomial.
pub fn decompose_g0(ch: &SparseLaurent, m: usize, tvars: usize) -> Result<G0Decomposition> {
    if ch.mvars != m || ch.tvars != tvars {
        return Err(Error::Shape(format!(
            "character lives in ({}, {}) variables, asked for ({m}, {tvars})",
            ch.mvars, ch.tvars
        )));
    }
    let mut rest = ch.clone();
    let mut out = G0Decomposition::default();
    while let Some((top, &coeff)) = rest.terms.last_key_value() {
        let (x, y) = top.split_at(m);
        let dominant = x.windows(2).all(|w| w[0] >= w[1]) && y.windows(2).all(|w| w[0] >= w[1]);
        if !dominant || coeff < 0 {
            return Err(Error::NotACharacter(format!(
                "extreme monomial {top:?} has coefficient {coeff} and is not a dominant term"
            )));
        }
        let mu = SuperWeight::new(
            x.iter().map(|&v| v as i64).collect(),
            y.iter().map(|&v| v as i64).collect(),
            Rank::Finite(tvars),
        )?;
        let piece = l0_character(&mu, tvars)?.scale(coeff);
        rest = &rest - &piece;
        *out.entries.entry(mu).or_insert(0) += coeff as u64;
    }
    Ok(out)
}

/// Weyl dimension of `L0(mu)`. The positive block is read as a gl(n)-weight, or for rank
/// `Inf` as a weight of gl(support length).
pub fn dim_l0(mu: &SuperWeight) -> u128 {
    let block = |v: &[i64], len: usize| -> Ratio<i128> {
        let mut padded = v.to_vec();
        padded.resize(len.max(v.len()), 0);
        let mut d = Ratio::from_integer(1i128);
        for i in 0..padded.len() {
            for j in i + 1..padded.len() {
                d *= Ratio::new((padded[i] - padded[j]) as i128 + (j - i) as i128, (j - i) as i128);
            }
        }
        d
    };
    let pos_len = mu.n().finite().unwrap_or(mu.pos().len());
    let d = block(mu.neg(), mu.m()) * block(mu.pos(), pos_len);
    assert!(d.is_integer() && *d.numer() > 0, "Weyl dimension of a dominant weight");
    *d.numer() as u128
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub pass: bool,
    pub residual: SparseLaurent,
    /// Number of Kac summands that entered the alternating sum.
    pub terms_used: usize,
    pub tvars: usize,
}

/// Compares the alternating sum of Kac characters over the resolution layers `k <= depth`
/// with the hook Schur function, on the window of Z-degrees the omitted layers cannot reach.
pub fn euler_verify(lam: &Partition, m: usize, n: Rank, depth: usize) -> Result<EulerReport> {
    if !lam.in_hook(m, n) {
        return Err(precondition(format!("{lam} is not in the ({m}|{n})-hook")));
    }
    let tvars = n.finite().unwrap_or(m + lam.size() as usize + depth);
    let rank = Rank::Finite(tvars);
    let top = SuperWeight::split_hook(lam, m, rank)?.natural()?.with_rank(rank)?;
    let mut sum = SparseLaurent::zero(m, tvars);
    let mut terms_used = 0;
    for (k, layer) in resolution_layers(lam, m, rank, depth)?.into_iter().enumerate() {
        for term in layer.into_iter().filter(|t| !t.truncated) {
            let ch = kac_character(term.eta_natural.as_ref().unwrap(), tvars)?;
            sum = if k % 2 == 0 { &sum + &ch } else { &sum - &ch };
            terms_used += 1;
        }
    }
    let window = top.z_degree().doubled() - 2 * depth as i64;
    let target = hook_schur(lam, m, tvars)?;
    let residual = (&sum - &target).mask_z_degree(window);
    Ok(EulerReport { pass: residual.is_zero(), residual, terms_used, tvars })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> SuperWeight {
        SuperWeight::parse(s, Rank::Finite(n)).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(mvars: usize, tvars: usize, terms: &[(&[i32], i64)]) -> SparseLaurent {
        let mut out = SparseLaurent::zero(mvars, tvars);
        for (e, c) in terms {
            out.add_term(e.to_vec(), *c);
        }
        out
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_laurent(&[2, 1], 2).unwrap(), poly(2, 0, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert_eq!(schur_laurent(&[0, -1], 2).unwrap(), poly(2, 0, &[(&[-1, 0], 1), (&[0, -1], 1)]));
        assert_eq!(schur_laurent(&[1, 1], 2).unwrap(), poly(2, 0, &[(&[1, 1], 1)]));
        assert!(schur_laurent(&[1, 1, 1], 2).is_err());
        // Kostka K_{(2,1),(1,1,1)} = 2
        assert_eq!(schur_laurent(&[2, 1], 3).unwrap().coeff(&[1, 1, 1]), 2);
    }

    #[test]
    fn schur_is_symmetric() {
        let s = schur_laurent(&[3, 1, -1], 3).unwrap();
        for (e, &c) in s.terms() {
            let mut r = e.clone();
            r.rotate_left(1);
            assert_eq!(s.coeff(&r), c);
            let mut t = e.clone();
            t.swap(0, 1);
            assert_eq!(s.coeff(&t), c);
        }
        assert_eq!(s.eval_at_ones() as u128, dim_l0(&SuperWeight::parse("3,1,-1|", Rank::Finite(1)).unwrap()));
    }

    #[test]
    fn l0_examples() {
        assert_eq!(l0_character(&w("0|1", 1), 1).unwrap(), poly(1, 1, &[(&[0, 1], 1)]));
        assert_eq!(
            l0_character(&w("1,0|1", 1), 1).unwrap(),
            poly(2, 1, &[(&[1, 0, 1], 1), (&[0, 1, 1], 1)])
        );
        let mu = w("2,-1|2,1", 3);
        assert_eq!(l0_character(&mu, 3).unwrap().eval_at_ones() as u128, dim_l0(&mu));
    }

    #[test]
    fn kac_examples() {
        assert_eq!(kac_character(&w("0|0", 1), 1).unwrap(), poly(1, 1, &[(&[0, 0], 1), (&[-1, 1], 1)]));
        assert_eq!(
            kac_character(&w("-1|1", 1), 1).unwrap(),
            poly(1, 1, &[(&[-1, 1], 1), (&[-2, 2], 1)])
        );
        assert_eq!(kac_character(&w("0,0|0", 1), 1).unwrap().eval_at_ones(), 4);
    }

    #[test]
    fn hook_schur_examples() {
        let nat = hook_schur(&p("1"), 2, 2).unwrap();
        assert_eq!(
            nat,
            poly(2, 2, &[(&[1, 0, 0, 0], 1), (&[0, 1, 0, 0], 1), (&[0, 0, 1, 0], 1), (&[0, 0, 0, 1], 1)])
        );
        assert_eq!(hook_schur(&p("2"), 1, 1).unwrap(), poly(1, 1, &[(&[2, 0], 1), (&[1, 1], 1)]));
        assert_eq!(hook_schur(&p("1,1"), 1, 1).unwrap(), poly(1, 1, &[(&[1, 1], 1), (&[0, 2], 1)]));
        assert!(hook_schur(&p("2,2"), 1, 1).is_err());
    }

    #[test]
    fn hook_schur_drops_to_schur_at_y_zero() {
        for size in 0..=5 {
            for lam in crate::partitions::partitions_of(size) {
                for (m, n) in [(1, 2), (2, 1), (2, 2), (3, 1)] {
                    if !lam.in_hook(m, Rank::Finite(n)) {
                        continue;
                    }
                    let hs = hook_schur(&lam, m, n).unwrap().specialize_y_zero();
                    let expected = if lam.len() <= m {
                        let sig: Vec<i64> = lam.parts().iter().map(|&v| v as i64).collect();
                        schur_laurent(&sig, m).unwrap()
                    } else {
                        SparseLaurent::zero(m, 0)
                    };
                    assert_eq!(hs, expected, "{lam} at ({m}|{n})");
                }
            }
        }
    }

    #[test]
    fn graded_pieces() {
        let e1 = graded_piece_gminus1(1, 2, 1, false);
        assert_eq!(e1, graded_piece_gminus1(1, 2, 1, true));
        assert_eq!(e1, poly(2, 1, &[(&[-1, 0, 1], 1), (&[0, -1, 1], 1)]));
        assert!(graded_piece_gminus1(2, 1, 1, false).is_zero());
        assert_eq!(graded_piece_gminus1(2, 1, 1, true), poly(1, 1, &[(&[-2, 2], 1)]));
        assert_eq!(graded_piece_gminus1(0, 1, 1, true), SparseLaurent::one(1, 1));
    }

    #[test]
    fn decompositions() {
        let kac = kac_character(&w("0|0", 1), 1).unwrap();
        let d = decompose_g0(&kac, 1, 1).unwrap();
        assert_eq!(d.weights(), vec![w("-1|1", 1), w("0|", 1)]);
        assert!(d.is_multiplicity_free());
        assert!(decompose_g0(&SparseLaurent::zero(1, 1), 1, 1).unwrap().entries.is_empty());
        let hs = decompose_g0(&hook_schur(&p("2"), 1, 1).unwrap(), 1, 1).unwrap();
        assert_eq!(hs.weights(), vec![w("1|1", 1), w("2|", 1)]);
        let bad = poly(1, 1, &[(&[0, 1], 1), (&[1, 0], -1)]);
        assert!(matches!(decompose_g0(&bad, 1, 1), Err(Error::NotACharacter(_))));
        let asym = poly(2, 0, &[(&[0, 1], 1)]);
        assert!(decompose_g0(&asym, 2, 0).is_err());
    }

    #[test]
    fn decomposition_round_trip() {
        let ch = &kac_character(&w("1,0|1", 2), 2).unwrap() * &hook_schur(&p("2,1"), 2, 2).unwrap();
        let d = decompose_g0(&ch, 2, 2).unwrap();
        assert_eq!(d.character(2, 2).unwrap(), ch);
    }

    #[test]
    fn dims() {
        assert_eq!(dim_l0(&w("1,0|1", 1)), 2);
        assert_eq!(dim_l0(&w("2,0|0", 1)), 3);
        assert_eq!(dim_l0(&SuperWeight::parse("0|0", Rank::Inf).unwrap()), 1);
        assert_eq!(dim_l0(&w("0|2,1", 3)), 8);
    }

    #[test]
    fn euler_examples() {
        let r = euler_verify(&p(""), 1, Rank::Finite(1), 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.terms_used, 6);
        let r = euler_verify(&p("2"), 1, Rank::Finite(1), 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.terms_used, 1);
        assert!(euler_verify(&p("2,1"), 1, Rank::Finite(2), 6).unwrap().pass);
        assert!(euler_verify(&p("1,1"), 1, Rank::Inf, 3).unwrap().pass);
        assert!(euler_verify(&p("2,2"), 1, Rank::Finite(1), 3).is_err());
    }

    #[test]
    fn records_are_sorted() {
        let r = hook_schur(&p("1,1"), 1, 1).unwrap().to_records();
        assert_eq!(r[0].exponents, vec![0, 2]);
        assert_eq!(r[1].coeff, "1");
    }
}
