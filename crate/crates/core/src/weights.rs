//! Integral weights of gl(m+n) and gl(m|n).
//!
//! A weight has `m` coordinates on the negative block (indices `-m..=-1`) and a finitely
//! supported tail on the positive block (indices `1, 2, ...`). Internally it is often
//! handled as one flat sequence: flat position `p < m` is index `p - m`, flat position
//! `p >= m` is index `p - m + 1`. In flat coordinates the even Weyl vector is simply
//! `rho_c(p) = m - p`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::partitions::Partition;

/// Rank of the positive block: a finite `n` or the stable limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(usize),
    Inf,
}

impl Rank {
    pub fn finite(self) -> Option<usize> {
        match self {
            Rank::Finite(n) => Some(n),
            Rank::Inf => None,
        }
    }

    pub fn admits(self, len: usize) -> bool {
        self.finite().is_none_or(|n| len <= n)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Inf => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Rank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Rank::Inf);
        }
        s.parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Rank::Finite)
            .ok_or_else(|| Error::Parse(format!("rank `{s}` is neither a positive integer nor `inf`")))
    }
}

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_doubled(doubled: i64) -> Self {
        Self(doubled)
    }

    pub fn from_int(v: i64) -> Self {
        Self(2 * v)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperWeight {
    m: usize,
    n: Rank,
    neg: Vec<i64>,
    pos: Vec<i64>,
}

impl SuperWeight {
    pub fn new(neg: Vec<i64>, mut pos: Vec<i64>, n: Rank) -> Result<Self> {
        if neg.is_empty() {
            return Err(Error::Shape("the negative block must be non-empty".into()));
        }
        while pos.last() == Some(&0) {
            pos.pop();
        }
        if !n.admits(pos.len()) {
            return Err(Error::Shape(format!(
                "positive block has support {} but n = {n}",
                pos.len()
            )));
        }
        Ok(Self { m: neg.len(), n, neg, pos })
    }

    pub fn zero(m: usize, n: Rank) -> Self {
        Self { m, n, neg: vec![0; m], pos: Vec::new() }
    }

    /// Splits a flat sequence after the first `m` entries.
    pub fn from_flat(m: usize, n: Rank, flat: &[i64]) -> Result<Self> {
        if flat.len() < m {
            return Err(Error::Shape(format!("flat sequence shorter than m = {m}")));
        }
        Self::new(flat[..m].to_vec(), flat[m..].to_vec(), n)
    }

    /// Parses `a,b,...|c,d,...`; an empty positive block means the zero tail.
    pub fn parse(s: &str, n: Rank) -> Result<Self> {
        let s = s.replace('\u{2212}', "-");
        let (neg, pos) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight `{s}` has no `|` separator")))?;
        let ints = |block: &str, allow_empty: bool| -> Result<Vec<i64>> {
            let block = block.trim();
            if block.is_empty() {
                return if allow_empty {
                    Ok(Vec::new())
                } else {
                    Err(Error::Parse(format!("weight `{s}` has an empty negative block")))
                };
            }
            block
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("weight entry `{t}`: {e}")))
                })
                .collect()
        };
        Self::new(ints(neg, false)?, ints(pos, true)?, n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn neg(&self) -> &[i64] {
        &self.neg
    }

    /// Positive block without trailing zeros.
    pub fn pos(&self) -> &[i64] {
        &self.pos
    }

    /// Coordinate at positive index `j >= 1`.
    pub fn pos_at(&self, j: usize) -> i64 {
        self.pos.get(j - 1).copied().unwrap_or(0)
    }

    /// The flat sequence, zero padded so that the positive block has `len` entries.
    pub fn flat(&self, len: usize) -> Vec<i64> {
        let mut v = self.neg.clone();
        v.extend((0..len.max(self.pos.len())).map(|i| self.pos.get(i).copied().unwrap_or(0)));
        v
    }

    pub fn with_rank(&self, n: Rank) -> Result<Self> {
        Self::new(self.neg.clone(), self.pos.clone(), n)
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.neg.iter().chain(&self.pos).sum()
    }

    /// Both blocks weakly decreasing, the positive block read with its zero tail.
    pub fn in_xtilde(&self) -> bool {
        let tail = self.n.finite().unwrap_or(self.pos.len() + 1).max(self.pos.len());
        let padded = &self.flat(tail)[self.m..];
        self.neg.windows(2).all(|w| w[0] >= w[1]) && padded.windows(2).all(|w| w[0] >= w[1])
    }

    /// Negative block weakly decreasing and positive block a partition.
    pub fn in_x(&self) -> bool {
        self.neg.windows(2).all(|w| w[0] >= w[1]) && self.pos_partition().is_some()
    }

    pub fn pos_partition(&self) -> Option<Partition> {
        if self.pos.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::new(self.pos.iter().map(|&x| x as u32).collect()).ok()
    }

    /// Keeps the negative block and conjugates the positive partition.
    pub fn natural(&self) -> Result<Self> {
        let p = self
            .pos_partition()
            .ok_or_else(|| precondition(format!("positive block of {self} is not a partition")))?;
        let conj = p.conjugate().parts().iter().map(|&x| x as i64).collect();
        Self::new(self.neg.clone(), conj, self.n)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::Shape(format!(
                "gl({}|{}) vs gl({}|{})",
                self.m, self.n, other.m, other.n
            )));
        }
        Ok(())
    }

    fn paired(&self, other: &Self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let len = self.pos.len().max(other.pos.len());
        self.flat(len).into_iter().zip(other.flat(len))
    }

    pub fn bilinear_c(&self, other: &Self) -> Result<i64> {
        self.check_shape(other)?;
        Ok(self.paired(other).map(|(a, b)| a * b).sum())
    }

    pub fn bilinear_s(&self, other: &Self) -> Result<i64> {
        self.check_shape(other)?;
        let m = self.m;
        Ok(self
            .paired(other)
            .enumerate()
            .map(|(p, (a, b))| if p < m { a * b } else { -a * b })
            .sum())
    }

    /// `(u + 2 rho_c | u)_c`.
    pub fn casimir_c(&self) -> i64 {
        let m = self.m as i64;
        self.flat(0)
            .iter()
            .enumerate()
            .map(|(p, &u)| u * u + 2 * (m - p as i64) * u)
            .sum()
    }

    /// `(u + 2 rho_s | u)_s` with `rho_s(j) = -j`.
    pub fn casimir_s(&self) -> i64 {
        let m = self.m as i64;
        let neg: i64 = self
            .neg
            .iter()
            .enumerate()
            .map(|(p, &u)| u * u + 2 * (m - p as i64) * u)
            .sum();
        let pos: i64 = self
            .pos
            .iter()
            .enumerate()
            .map(|(i, &u)| u * u - 2 * (i as i64 + 1) * u)
            .sum();
        neg - pos
    }

    /// Eigenvalue of `(sum_{i<0} E_ii - sum_{j>0} E_jj) / 2`.
    pub fn z_degree(&self) -> HalfInt {
        HalfInt::from_doubled(self.neg.iter().sum::<i64>() - self.pos.iter().sum::<i64>())
    }

    /// A flattened hook partition viewed as a weight of gl(m+inf): the first `m` parts form the
    /// negative block, the remaining parts the positive block. The hook condition is checked
    /// against `n`, but the result always has rank `Inf`; its `natural()` fits rank `n`.
    pub fn split_hook(p: &Partition, m: usize, n: Rank) -> Result<Self> {
        if m == 0 {
            return Err(precondition("m must be positive"));
        }
        if !p.in_hook(m, n) {
            return Err(precondition(format!("{p} is not in the ({m}|{n})-hook")));
        }
        let neg = (0..m).map(|i| p.part(i) as i64).collect();
        let pos = p.parts().iter().skip(m).map(|&x| x as i64).collect();
        Self::new(neg, pos, Rank::Inf)
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.neg), join(&self.pos))
    }
}

// Weights, ranks and half-integers serialize in their textual form, which also makes
// weights usable as JSON map keys.
macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_display!(Rank, HalfInt, SuperWeight);
