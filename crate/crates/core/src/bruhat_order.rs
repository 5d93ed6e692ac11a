//! Bruhat order on a dot orbit of gl(m+n) weights, and the super Bruhat order on `X_{m|n}`
//! obtained from it through the conjugation map.
//!
//! Convention: exchanging two shifted entries `a > b` so that the larger one moves to the
//! later position lowers the weight. The dominant arrangement is the top of its orbit.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{precondition, Result};
use crate::weights::SuperWeight;

/// `u + rho_c` and `v + rho_c` on a common finite window, or `None` when the two weights
/// do not lie in one dot orbit.
fn orbit_pair(u: &SuperWeight, v: &SuperWeight) -> Option<(Vec<i64>, Vec<i64>)> {
    if u.m() != v.m() || u.n() != v.n() {
        return None;
    }
    let tail = u.pos().len().max(v.pos().len());
    let shift = |w: &SuperWeight| -> Vec<i64> {
        w.flat(tail)
            .into_iter()
            .enumerate()
            .map(|(p, x)| x + w.m() as i64 - p as i64)
            .collect()
    };
    let (a, b) = (shift(u), shift(v));
    let (mut sa, mut sb) = (a.clone(), b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    (sa == sb).then_some((a, b))
}

/// Tableau criterion on sequences: `lower <= upper` iff for every prefix length the
/// decreasingly sorted prefix of `lower` is dominated entrywise by that of `upper`.
pub fn prefix_leq(lower: &[i64], upper: &[i64]) -> bool {
    let mut pl: Vec<i64> = Vec::with_capacity(lower.len());
    let mut pu: Vec<i64> = Vec::with_capacity(upper.len());
    for (&x, &y) in lower.iter().zip(upper) {
        let at = pl.partition_point(|&z| z > x);
        pl.insert(at, x);
        let at = pu.partition_point(|&z| z > y);
        pu.insert(at, y);
        if pl.iter().zip(&pu).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// `u <= v` in the Bruhat order of gl(m+n) on dot orbits; `false` across orbits.
pub fn leq_gl(u: &SuperWeight, v: &SuperWeight) -> bool {
    orbit_pair(u, v).is_some_and(|(a, b)| prefix_leq(&a, &b))
}

/// `u` below `v` in the super Bruhat order, for weights in `X_{m|n}`.
pub fn leq_super(u: &SuperWeight, v: &SuperWeight) -> Result<bool> {
    for w in [u, v] {
        if !w.in_x() {
            return Err(precondition(format!(
                "{w} is outside X; the super order is only realized there"
            )));
        }
    }
    Ok(leq_gl(&u.natural()?, &v.natural()?))
}

/// `true` iff no two distinct members are comparable under the selected order.
pub fn pairwise_incomparable(ws: &[SuperWeight], super_order: bool) -> Result<bool> {
    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i + 1..] {
            let comparable = if super_order {
                leq_super(a, b)? || leq_super(b, a)?
            } else {
                leq_gl(a, b) || leq_gl(b, a)
            };
            if comparable {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reachability in the graph of lowering exchanges. Each call explores the down-set of the
/// upper sequence once and keeps it; the cache is owned, so share it by confinement.
#[derive(Default)]
pub struct ClosureOracle {
    down_sets: HashMap<Vec<i64>, HashSet<Vec<i64>>>,
}

impl ClosureOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leq(&mut self, u: &SuperWeight, v: &SuperWeight) -> bool {
        match orbit_pair(u, v) {
            Some((a, b)) => self.leq_sequences(&a, &b),
            None => false,
        }
    }

    pub fn leq_sequences(&mut self, lower: &[i64], upper: &[i64]) -> bool {
        self.down_sets
            .entry(upper.to_vec())
            .or_insert_with(|| down_set(upper))
            .contains(lower)
    }
}

fn down_set(top: &[i64]) -> HashSet<Vec<i64>> {
    let mut seen = HashSet::from([top.to_vec()]);
    let mut queue = VecDeque::from([top.to_vec()]);
    while let Some(s) = queue.pop_front() {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] {
                    let mut t = s.clone();
                    t.swap(i, j);
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Rank;
    use itertools::Itertools;

    fn w(s: &str) -> SuperWeight {
        SuperWeight::parse(s, Rank::Inf).unwrap()
    }

    #[test]
    fn gl_examples() {
        assert!(leq_gl(&w("0|2"), &w("1|1")));
        assert!(!leq_gl(&w("1|1"), &w("0|2")));
        assert!(leq_gl(&w("3|4,5"), &w("3|4,5")));
        assert!(!leq_gl(&w("0,0|3"), &w("1,-2|2,2")));
        assert!(!leq_gl(&w("1,-2|2,2"), &w("0,0|3")));
        assert!(!leq_gl(&w("1|"), &w("0|")));
    }

    #[test]
    fn super_examples() {
        assert!(leq_super(&w("0|1,1"), &w("1|1")).unwrap());
        assert!(leq_super(&w("2|1"), &w("2|1")).unwrap());
        let (a, b) = (w("0,0|1,1,1"), w("1,-2|2,2"));
        assert!(!leq_super(&a, &b).unwrap() && !leq_super(&b, &a).unwrap());
        assert!(leq_super(&w("0|-1"), &w("0|")).is_err());
    }

    #[test]
    fn incomparability_examples() {
        let layer = vec![w("0,0|3"), w("1,-2|2,2")];
        assert!(pairwise_incomparable(&layer, false).unwrap());
        let nat: Vec<_> = layer.iter().map(|x| x.natural().unwrap()).collect();
        assert!(pairwise_incomparable(&nat, true).unwrap());
        assert!(pairwise_incomparable(&[w("1|1")], true).unwrap());
        assert!(!pairwise_incomparable(&[w("1|1"), w("0|2")], false).unwrap());
    }

    #[test]
    fn prefix_matches_closure_with_repeated_values() {
        let mut oracle = ClosureOracle::new();
        for base in [vec![3, 1, 1, 0], vec![2, 2, 0, 0, -1], vec![4, 2, 2, 2, 0]] {
            let orbit: Vec<Vec<i64>> = base.iter().copied().permutations(base.len()).unique().collect();
            for a in &orbit {
                for b in &orbit {
                    assert_eq!(prefix_leq(a, b), oracle.leq_sequences(a, b), "{a:?} {b:?}");
                }
            }
        }
    }
}
