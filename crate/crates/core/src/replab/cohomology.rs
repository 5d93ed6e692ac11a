//! Cohomology of the odd raising part with coefficients in an irreducible tensor module.
//!
//! The odd raising part is abelian and purely odd, so its cochains are symmetric powers of
//! the dual tensored with the module, with differential `sum_a xi_a (x) E_a`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::characters::{decompose_g0, G0Decomposition, SparseLaurent};
use crate::error::{precondition, Error, Result};
use crate::linalg::{rank, SparseMatrix, SparseVec};
use crate::partitions::Partition;
use crate::weights::{Rank, SuperWeight};
use crate::weyl_cosets::resolution_layers;

use super::induced::build_kac;
use super::{gen_weight, irreducible_quotient, Gen, ModuleRealization};

/// Largest cochain space any degree may reach.
pub const COCHAIN_GUARD: u128 = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyLayer {
    pub k: usize,
    pub cochain_dim: usize,
    pub cohomology_dim: usize,
    pub decomposition: G0Decomposition,
    /// Naturals of the surviving resolution terms of degree `k`.
    pub expected: Vec<SuperWeight>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub highest_weight: SuperWeight,
    pub module_dim: usize,
    pub layers: Vec<CohomologyLayer>,
    pub d_squared_zero: bool,
    /// Alternating sums of cochain and cohomology dimensions differ by the last rank.
    pub euler_consistent: bool,
    pub pass: bool,
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of total degree `k` in `vars` variables, lexicographically decreasing.
fn monomials(vars: usize, k: u32) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for rest in monomials(vars - 1, k - first) {
            let mut e = Vec::with_capacity(vars);
            e.push(first);
            e.extend(rest);
            out.push(e);
        }
    }
    out
}

struct Cochains {
    monos: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Cochains {
    fn new(vars: usize, k: usize) -> Self {
        let monos = monomials(vars, k as u32);
        let index = monos.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Self { monos, index }
    }
}

/// `H^k` for `k <= kmax`, decomposed into g0-irreducibles and compared with the resolution
/// layers.
pub fn cohomology(m: usize, n: usize, lam: &Partition, kmax: usize) -> Result<CohomologyReport> {
    let rank_n = Rank::Finite(n);
    if !lam.in_hook(m, rank_n) {
        return Err(precondition(format!("{lam} is not in the ({m}|{n})-hook")));
    }
    let top = SuperWeight::split_hook(lam, m, rank_n)?.natural()?.with_rank(rank_n)?;
    let quotient = irreducible_quotient(&build_kac(&top)?)?;
    if !quotient.generated_by_singulars {
        return Err(Error::CheckFailed(format!("quotient of the Kac module of {top} is reducible")));
    }
    let module = quotient.quotient;
    let dim = module.dim();
    let raising: Vec<Gen> = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))).collect();
    let vars = raising.len();
    for k in 0..=kmax + 1 {
        let size = binomial((vars + k) as u128 - 1, k as u128) * dim as u128;
        if vars > 0 && size > COCHAIN_GUARD {
            return Err(Error::Guard {
                name: "cochain_dim",
                detail: format!("C^{k} has dimension {size} > {COCHAIN_GUARD}"),
            });
        }
    }

    let spaces: Vec<Cochains> = (0..=kmax + 1).map(|k| Cochains::new(vars, k)).collect();
    let weight = |k: usize, i: usize| -> Vec<i64> {
        let (mono, v) = (&spaces[k].monos[i / dim], i % dim);
        let mut w = module.flat_weight(v).to_vec();
        for (&e, &g) in mono.iter().zip(&raising) {
            for (x, y) in w.iter_mut().zip(gen_weight(m + n, g)) {
                *x -= e as i64 * y;
            }
        }
        w
    };
    let differentials: Vec<SparseMatrix> = (0..=kmax).map(|k| differential(&module, &raising, &spaces[k], &spaces[k + 1])).collect();
    let d_squared_zero = differentials.windows(2).all(|d| d[1].compose(&d[0]).is_zero());

    // per-weight ranks of d_k, and the weight spaces of C^k
    let mut ranks: Vec<BTreeMap<Vec<i64>, usize>> = Vec::new();
    let mut weight_dims: Vec<BTreeMap<Vec<i64>, usize>> = Vec::new();
    for (k, d) in differentials.iter().enumerate() {
        let mut cols: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for i in 0..d.cols() {
            cols.entry(weight(k, i)).or_default().push(i);
        }
        let mut rows: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for i in 0..d.rows() {
            rows.entry(weight(k + 1, i)).or_default().push(i);
        }
        let mut r = BTreeMap::new();
        for (w, c) in &cols {
            let rk = match rows.get(w) {
                Some(rw) => rank(&d.block(rw, c), c.len()),
                None => 0,
            };
            r.insert(w.clone(), rk);
        }
        weight_dims.push(cols.iter().map(|(w, c)| (w.clone(), c.len())).collect());
        ranks.push(r);
    }

    let layers_expected = resolution_layers(lam, m, rank_n, kmax)?;
    let mut layers = Vec::new();
    let mut euler_consistent = true;
    let mut alternating: i64 = 0;
    for k in 0..=kmax {
        let mut ch = SparseLaurent::zero(m, n);
        let mut cohomology_dim = 0;
        for (w, &d) in &weight_dims[k] {
            let into = ranks[k][w];
            let from = if k == 0 { 0 } else { ranks[k - 1].get(w).copied().unwrap_or(0) };
            let h = d - into - from;
            if h > 0 {
                ch.add_term(w.iter().map(|&e| e as i32).collect(), h as i64);
                cohomology_dim += h;
            }
        }
        let cochain_dim = spaces[k].monos.len() * dim;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        alternating += sign * (cochain_dim as i64 - cohomology_dim as i64);
        let total_rank: usize = ranks[k].values().sum();
        euler_consistent &= alternating == sign * total_rank as i64;

        let decomposition = decompose_g0(&ch, m, n)?;
        let expected: Vec<SuperWeight> = layers_expected
            .get(k)
            .map(|layer| layer.iter().filter_map(|t| t.eta_natural.clone()).collect())
            .unwrap_or_default();
        let matches = decomposition.is_multiplicity_free() && decomposition.weights() == sorted(&expected);
        layers.push(CohomologyLayer { k, cochain_dim, cohomology_dim, decomposition, expected, matches });
    }
    let pass = d_squared_zero && euler_consistent && layers.iter().all(|l| l.matches);
    Ok(CohomologyReport { highest_weight: top, module_dim: dim, layers, d_squared_zero, euler_consistent, pass })
}

fn sorted(ws: &[SuperWeight]) -> Vec<SuperWeight> {
    let mut v = ws.to_vec();
    v.sort();
    v
}

/// `d(xi^M (x) v) = sum_a xi^{M + a} (x) E_a v`.
fn differential(module: &ModuleRealization, raising: &[Gen], from: &Cochains, to: &Cochains) -> SparseMatrix {
    let dim = module.dim();
    let mut columns = Vec::with_capacity(from.monos.len() * dim);
    for mono in &from.monos {
        for v in 0..dim {
            let mut col = SparseVec::new();
            for (a, &g) in raising.iter().enumerate() {
                let mut next = mono.clone();
                next[a] += 1;
                let base = to.index[&next] * dim;
                let image = module.stored(g).expect("off-diagonal generators are stored").column(v);
                for (&i, c) in image {
                    let e = col.entry(base + i).or_insert_with(|| crate::linalg::q(0));
                    *e += c;
                    if num_traits::Zero::is_zero(e) {
                        col.remove(&(base + i));
                    }
                }
            }
            columns.push(col);
        }
    }
    SparseMatrix::from_columns(to.monos.len() * dim, columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(2, 3).len(), 4);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(0, 0).len(), 1);
        assert_eq!(binomial(5, 2), 10);
    }

    #[test]
    fn trivial_gl11() {
        let r = cohomology(1, 1, &p(""), 3).unwrap();
        assert!(r.pass, "{r:?}");
        for layer in &r.layers {
            let k = layer.k as i64;
            let w = SuperWeight::new(vec![-k], vec![k], Rank::Finite(1)).unwrap();
            assert_eq!(layer.decomposition.weights(), vec![w]);
        }
    }

    #[test]
    fn typical_gl11() {
        let r = cohomology(1, 1, &p("2"), 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.layers[0].decomposition.weights(), vec![SuperWeight::parse("2|", Rank::Finite(1)).unwrap()]);
        assert!(r.layers[1..].iter().all(|l| l.cohomology_dim == 0));
    }

    #[test]
    fn gl21_natural() {
        let r = cohomology(2, 1, &p("1"), 2).unwrap();
        assert!(r.d_squared_zero && r.euler_consistent);
        assert!(r.pass, "{r:#?}");
    }
}
