//! Partitions and the two half-integer identities used to compare Casimir scalars.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::weights::{HalfInt, Rank};

/// A weakly decreasing list of positive integers. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Self(parts)
    }

    /// Membership in the (m, n)-hook: the (m+1)-th part is at most n.
    pub fn in_hook(&self, m: usize, n: Rank) -> bool {
        match n {
            Rank::Inf => true,
            Rank::Finite(n) => self.part(m) as usize <= n,
        }
    }

    /// Number of standard Young tableaux of this shape, by the hook-length formula.
    pub fn standard_tableaux(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.part(j) as usize - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("partition part `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// The two sets `{p'_i - i + 1/2 > 0}` and `{-p_i + i - 1/2 : p_i - i + 1/2 < 0}` for
/// `1 <= i <= big_n`. Together they partition `{1/2, 3/2, ..., big_n - 1/2}`.
pub fn aux111_sets(p: &Partition, big_n: usize) -> Result<(BTreeSet<HalfInt>, BTreeSet<HalfInt>)> {
    if p.len() > big_n {
        return Err(precondition(format!("length {} exceeds N = {big_n}", p.len())));
    }
    let conj = p.conjugate();
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for i in 1..=big_n as i64 {
        let upper = 2 * conj.part(i as usize - 1) as i64 - 2 * i + 1;
        if upper > 0 {
            a.insert(HalfInt::from_doubled(upper));
        }
        let lower = 2 * p.part(i as usize - 1) as i64 - 2 * i + 1;
        if lower < 0 {
            b.insert(HalfInt::from_doubled(-lower));
        }
    }
    Ok((a, b))
}

/// Checks `sum_j (p_j - (j - 1/2))^2 + (p'_j - (j - 1/2))^2 = 2 sum_j (j - 1/2)^2` for
/// `j = 1..=big_n`, in quadrupled integers.
pub fn comb_identity_check(p: &Partition, big_n: usize) -> Result<bool> {
    let conj = p.conjugate();
    let bound = p.len().max(conj.len());
    if big_n < bound {
        return Err(precondition(format!("N = {big_n} is below max(l(p), l(p')) = {bound}")));
    }
    let sq = |x: i64| x * x;
    let mut lhs = 0i64;
    let mut rhs = 0i64;
    for j in 1..=big_n {
        let shift = 2 * j as i64 - 1;
        lhs += sq(2 * p.part(j - 1) as i64 - shift) + sq(2 * conj.part(j - 1) as i64 - shift);
        rhs += 2 * sq(shift);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn halves(v: &[i64]) -> BTreeSet<HalfInt> {
        v.iter().map(|&d| HalfInt::from_doubled(d)).collect()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("3,3").conjugate(), p("2,2,2"));
    }

    #[test]
    fn hook_membership() {
        assert!(p("3,2,2,1").in_hook(1, Rank::Finite(2)));
        assert!(!p("3,2,2,1").in_hook(1, Rank::Finite(1)));
        assert!(p("2,2,2").in_hook(2, Rank::Finite(2)));
        assert!(p("9,9,9,9").in_hook(1, Rank::Inf));
    }

    #[test]
    fn aux111_examples() {
        assert_eq!(aux111_sets(&p("2,1"), 3).unwrap(), (halves(&[3]), halves(&[1, 5])));
        assert_eq!(aux111_sets(&p(""), 2).unwrap(), (halves(&[]), halves(&[1, 3])));
        assert_eq!(aux111_sets(&p("3,1,1"), 3).unwrap(), (halves(&[5]), halves(&[1, 3])));
        assert!(aux111_sets(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn comb_identity_examples() {
        assert!(comb_identity_check(&p("2,1"), 3).unwrap());
        assert!(comb_identity_check(&p(""), 1).unwrap());
        assert!(comb_identity_check(&p("1"), 1).unwrap());
        assert!(comb_identity_check(&p("3"), 2).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3,1,1,0").parts(), &[3, 1, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,-1".parse::<Partition>().is_err());
        assert_eq!(p("3,1,1").to_string(), "3,1,1");
    }

    #[test]
    fn counts() {
        let sizes: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p("2,1").standard_tableaux(), 2);
        assert_eq!(p("3,2").standard_tableaux(), 5);
        assert_eq!(p("").standard_tableaux(), 1);
    }
}
