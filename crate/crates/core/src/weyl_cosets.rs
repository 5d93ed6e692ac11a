//! Dot action of the Weyl group of gl(m+inf) and the minimal length representatives of
//! `W_0 \ W` that index the terms of the resolution.
//!
//! A minimal representative is determined by the set of merged positions whose shifted
//! values `lambda + rho_c` are routed into the negative block. Its length is the number of
//! crossings: for each chosen position, the number of unchosen positions before it.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::partitions::Partition;
use crate::weights::{Rank, SuperWeight};

/// Largest `m + N` accepted by [`oracle_w0k`].
pub const ORACLE_MAX_RANK: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetElement {
    positions: Vec<usize>,
    base: SuperWeight,
}

impl CosetElement {
    pub fn new(mut positions: Vec<usize>, base: SuperWeight) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if positions.len() != base.m() || positions.first() == Some(&0) {
            return Err(precondition(format!(
                "need {} distinct positive positions, got {positions:?}",
                base.m()
            )));
        }
        check_dominant_partition(&base)?;
        Ok(Self { positions, base })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn base(&self) -> &SuperWeight {
        &self.base
    }

    pub fn length(&self) -> usize {
        crossing_number(&self.positions)
    }

    /// `w . lambda` for the representative `w`.
    pub fn act(&self) -> SuperWeight {
        let m = self.base.m();
        let last = *self.positions.last().unwrap();
        let len = last.max(m + self.base.pos().len()) + 1;
        let shifted = shifted_sequence(&self.base, len - m);
        let neg = self
            .positions
            .iter()
            .enumerate()
            .map(|(i, &p)| shifted[p - 1] - rho_c(m, i))
            .collect();
        let pos = (1..=len)
            .filter(|p| !self.positions.contains(p))
            .enumerate()
            .map(|(j, p)| shifted[p - 1] - rho_c(m, m + j))
            .collect();
        SuperWeight::new(neg, pos, Rank::Inf).expect("negative block has m entries")
    }
}

fn rho_c(m: usize, flat: usize) -> i64 {
    m as i64 - flat as i64
}

/// `u + rho_c` in flat coordinates with `tail` positive entries.
fn shifted_sequence(u: &SuperWeight, tail: usize) -> Vec<i64> {
    u.flat(tail)
        .into_iter()
        .enumerate()
        .map(|(p, x)| x + rho_c(u.m(), p))
        .collect()
}

/// Number of pairs `(q, p)` with `q < p`, `p` chosen and `q` not chosen.
pub fn crossing_number(sorted_positions: &[usize]) -> usize {
    sorted_positions
        .iter()
        .enumerate()
        .map(|(i, &p)| p - 1 - i)
        .sum()
}

fn check_dominant_partition(lambda: &SuperWeight) -> Result<()> {
    let flat = lambda.flat(0);
    if flat.iter().any(|&x| x < 0) || flat.windows(2).any(|w| w[0] < w[1]) {
        return Err(precondition(format!(
            "{lambda} is not a flattened partition; the shifted sequence must strictly decrease"
        )));
    }
    Ok(())
}

/// Simple dot reflection `sigma_j . u` at signed index `j` (negative or positive, never 0).
pub fn dot_reflect(u: &SuperWeight, j: i64) -> Result<SuperWeight> {
    let m = u.m() as i64;
    let p = match j {
        j if (-m..0).contains(&j) => (j + m) as usize,
        j if j > 0 => (m + j - 1) as usize,
        _ => return Err(precondition(format!("index {j} is not in I({m}|{})", u.n()))),
    };
    if j > 0 && u.n().finite().is_some_and(|n| j as usize + 1 > n) {
        return Err(precondition(format!("index {j} has no successor in I({m}|{})", u.n())));
    }
    let mut flat = u.flat(p + 2 - u.m());
    let (a, b) = (flat[p], flat[p + 1]);
    // adjacent entries of rho_c differ by one
    flat[p] = b - 1;
    flat[p + 1] = a + 1;
    SuperWeight::from_flat(u.m(), u.n(), &flat)
}

/// Minimal coset representatives of length at most `kmax`, grouped by length.
pub fn enumerate_cosets(lambda: &SuperWeight, kmax: usize) -> Result<BTreeMap<usize, Vec<CosetElement>>> {
    check_dominant_partition(lambda)?;
    let m = lambda.m();
    let mut out: BTreeMap<usize, Vec<CosetElement>> = (0..=kmax).map(|k| (k, Vec::new())).collect();
    for subset in (1..=m + kmax).combinations(m) {
        let k = crossing_number(&subset);
        if k <= kmax {
            out.get_mut(&k).unwrap().push(CosetElement { positions: subset, base: lambda.clone() });
        }
    }
    Ok(out)
}

/// `{w . lambda : w in W0_k}` for every `k <= kmax`, each layer sorted.
pub fn enumerate_w0k(lambda: &SuperWeight, kmax: usize) -> Result<BTreeMap<usize, Vec<SuperWeight>>> {
    Ok(enumerate_cosets(lambda, kmax)?
        .into_iter()
        .map(|(k, ws)| {
            let mut layer: Vec<SuperWeight> = ws.iter().map(CosetElement::act).collect();
            layer.sort();
            (k, layer)
        })
        .collect())
}

/// Brute force over the symmetric group on `m + big_n` letters. Returns the dot images of
/// the minimal representatives of length `k`, together with the Coxeter length.
pub fn oracle_w0k_with_lengths(
    lambda: &SuperWeight,
    m: usize,
    big_n: usize,
    k: usize,
) -> Result<Vec<(SuperWeight, usize)>> {
    let rank = m + big_n;
    if rank > ORACLE_MAX_RANK {
        return Err(Error::Guard {
            name: "oracle_rank",
            detail: format!("m + N = {rank} exceeds {ORACLE_MAX_RANK}"),
        });
    }
    if lambda.m() != m || lambda.pos().len() > big_n {
        return Err(precondition(format!("{lambda} does not fit gl({m}+{big_n})")));
    }
    check_dominant_partition(lambda)?;
    let shifted = shifted_sequence(lambda, big_n);
    let mut out = Vec::new();
    for sigma in (0..rank).permutations(rank) {
        // w(eps_i) = eps_{sigma(i)}; a negative root eps_i - eps_j (i > j) may only become
        // positive if it lands in the odd part Delta^+(0).
        let minimal = (0..rank).all(|i| {
            (0..i).all(|j| sigma[i] > sigma[j] || (sigma[i] < m && sigma[j] >= m))
        });
        if !minimal {
            continue;
        }
        let len = (0..rank)
            .flat_map(|i| (i + 1..rank).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        if len != k {
            continue;
        }
        let mut image = vec![0; rank];
        for i in 0..rank {
            image[sigma[i]] = shifted[i] - rho_c(m, sigma[i]);
        }
        out.push((SuperWeight::from_flat(m, Rank::Inf, &image)?, len));
    }
    out.sort();
    Ok(out)
}

pub fn oracle_w0k(lambda: &SuperWeight, m: usize, big_n: usize, k: usize) -> Result<Vec<SuperWeight>> {
    Ok(oracle_w0k_with_lengths(lambda, m, big_n, k)?.into_iter().map(|(w, _)| w).collect())
}

/// Drops every `nu` whose first positive coordinate exceeds `n`.
pub fn truncate_terms(terms: &[SuperWeight], n: usize) -> Vec<SuperWeight> {
    terms.iter().filter(|nu| nu.pos_at(1) <= n as i64).cloned().collect()
}

/// One summand `V((w . lambda)^natural)` of a resolution layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionTerm {
    pub k: usize,
    pub eta: SuperWeight,
    /// `eta^natural` at rank `n`; `None` when the summand is truncated away.
    pub eta_natural: Option<SuperWeight>,
    pub truncated: bool,
}

/// The layers `Z_k`, `k <= kmax`, of the resolution of the tensor module indexed by the hook
/// partition `lambda`.
pub fn resolution_layers(lambda: &Partition, m: usize, n: Rank, kmax: usize) -> Result<Vec<Vec<ResolutionTerm>>> {
    let base = SuperWeight::split_hook(lambda, m, n)?;
    Ok(enumerate_w0k(&base, kmax)?
        .into_iter()
        .map(|(k, layer)| {
            layer
                .into_iter()
                .map(|eta| {
                    let truncated = n.finite().is_some_and(|n| eta.pos_at(1) > n as i64);
                    let eta_natural = if truncated {
                        None
                    } else {
                        Some(eta.natural().and_then(|w| w.with_rank(n)).expect("layer weights lie in X"))
                    };
                    ResolutionTerm { k, eta, eta_natural, truncated }
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SuperWeight {
        SuperWeight::parse(s, Rank::Inf).unwrap()
    }

    fn ws(v: &[&str]) -> Vec<SuperWeight> {
        v.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn dot_reflect_examples() {
        assert_eq!(dot_reflect(&w("1|1"), -1).unwrap(), w("0|2"));
        assert_eq!(dot_reflect(&w("0|2"), 1).unwrap(), w("0|-1,3"));
        let u = w("2,0|1");
        assert_eq!(dot_reflect(&dot_reflect(&u, -2).unwrap(), -2).unwrap(), u);
        assert!(dot_reflect(&u, -3).is_err());
        assert!(dot_reflect(&u, 0).is_err());
        let fin = SuperWeight::parse("1|1,0", Rank::Finite(2)).unwrap();
        assert!(dot_reflect(&fin, 2).is_err());
        assert!(dot_reflect(&fin, 1).is_ok());
    }

    #[test]
    fn layers_of_the_trivial_weight() {
        let layers = enumerate_w0k(&w("0|"), 2).unwrap();
        assert_eq!(layers[&0], ws(&["0|"]));
        assert_eq!(layers[&1], ws(&["-1|1"]));
        assert_eq!(layers[&2], ws(&["-2|1,1"]));
    }

    #[test]
    fn small_layers() {
        assert_eq!(enumerate_w0k(&w("1|1"), 1).unwrap()[&1], ws(&["0|2"]));
        assert_eq!(enumerate_w0k(&w("1,1|1"), 2).unwrap()[&2], ws(&["0,0|3", "1,-2|2,2"]));
        assert!(enumerate_w0k(&w("0|1"), 1).is_err());
        assert!(enumerate_w0k(&w("1|2"), 1).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_w0k(&w("0|"), 1, 2, 1).unwrap(), ws(&["-1|1"]));
        assert_eq!(oracle_w0k(&w("2,1|1"), 2, 3, 0).unwrap(), ws(&["2,1|1"]));
        assert_eq!(oracle_w0k(&w("1,1|1"), 2, 3, 2).unwrap(), ws(&["0,0|3", "1,-2|2,2"]));
        assert!(matches!(oracle_w0k(&w("0|"), 2, 7, 1), Err(Error::Guard { .. })));
    }

    #[test]
    fn crossing_matches_coxeter_length() {
        for (lam, m, big_n) in [("0|", 1, 4), ("1,0|", 2, 3), ("2|1", 1, 4)] {
            let lam = w(lam);
            let layers = enumerate_cosets(&lam, 4).unwrap();
            for k in 0..=4 {
                for (eta, len) in oracle_w0k_with_lengths(&lam, m, big_n, k).unwrap() {
                    let found = layers.values().flatten().find(|c| c.act() == eta).unwrap();
                    assert_eq!(found.length(), len);
                }
            }
        }
    }

    #[test]
    fn truncation() {
        assert!(truncate_terms(&ws(&["0,0|3"]), 2).is_empty());
        assert_eq!(truncate_terms(&ws(&["-1|1"]), 1), ws(&["-1|1"]));
        let k1 = &enumerate_w0k(&w("1|1"), 1).unwrap()[&1];
        assert!(truncate_terms(k1, 1).is_empty());
    }

    #[test]
    fn layer_invariants() {
        for (lam, m) in [("2,1", 1), ("2,1", 2), ("1,1,1", 1), ("3,1", 2), ("", 3)] {
            let lam: Partition = lam.parse().unwrap();
            let base = SuperWeight::split_hook(&lam, m, Rank::Inf).unwrap();
            let nat = base.natural().unwrap();
            let layers = enumerate_w0k(&base, 4).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for (&k, layer) in &layers {
                for eta in layer {
                    assert!(eta.in_x());
                    assert!(seen.insert(eta.clone()), "repeated {eta}");
                    let en = eta.natural().unwrap();
                    assert_eq!(en.casimir_s(), nat.casimir_s());
                    // every crossing lowers the negative block by at least one
                    let drop = nat.z_degree().doubled() - en.z_degree().doubled();
                    assert!(drop >= 2 * k as i64, "{eta}");
                    if lam.is_empty() {
                        assert_eq!(drop, 2 * k as i64);
                    }
                    assert_eq!(eta.coordinate_sum(), base.coordinate_sum());
                }
            }
        }
    }

    #[test]
    fn coset_element_surface() {
        let c = CosetElement::new(vec![3], w("0|")).unwrap();
        assert_eq!(c.length(), 2);
        assert_eq!(c.act(), w("-2|1,1"));
        assert!(CosetElement::new(vec![1, 2], w("0|")).is_err());
    }

    #[test]
    fn resolution_layers_flag_truncation() {
        let lam: Partition = "1".parse().unwrap();
        let layers = resolution_layers(&lam, 1, Rank::Finite(1), 1).unwrap();
        assert_eq!(layers[1].len(), 1);
        assert!(layers[1][0].truncated);
        assert_eq!(layers[0][0].eta_natural.as_ref().unwrap().to_string(), "1|");
    }
}
