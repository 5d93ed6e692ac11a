//! Explicit finite-dimensional modules over gl(m|n) with exact rational matrices.
//!
//! Generators are the elementary matrices `E_{a,b}`, addressed by linear indices
//! `0..m+n`: linear `i < m` is the signed index `i - m` (so `-m..-1`), linear `i >= m` is
//! `i - m + 1`. Indices `>= m` are the odd block. A generator `E_{a,b}` with `a < b` raises.

mod cohomology;
mod gl_irrep;
mod induced;
mod verma;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::SparseLaurent;
use crate::error::{Error, Result};
use crate::linalg::{kernel, q, render_combination, SparseMatrix, SparseVec, Subspace};
use crate::weights::{Rank, SuperWeight};

pub use cohomology::{cohomology, CohomologyLayer, CohomologyReport, COCHAIN_GUARD};
pub use gl_irrep::{build_gl_irrep, Block, GlIrrep};
pub use induced::{build_kac, MODULE_GUARD};
pub use verma::{verma_gl12_report, VermaReport, VERMA_MAX_DEPTH};

/// An elementary matrix, by linear indices.
pub type Gen = (usize, usize);

/// Signed index of a linear index.
pub fn signed_index(m: usize, i: usize) -> i64 {
    if i < m {
        i as i64 - m as i64
    } else {
        (i - m) as i64 + 1
    }
}

pub fn gen_label(m: usize, (a, b): Gen) -> String {
    format!("E_{{{},{}}}", signed_index(m, a), signed_index(m, b))
}

fn is_odd_index(m: usize, i: usize) -> bool {
    i >= m
}

pub fn gen_parity(m: usize, (a, b): Gen) -> bool {
    is_odd_index(m, a) != is_odd_index(m, b)
}

/// Weight of `E_{a,b}` as a flat vector of length `total`.
pub fn gen_weight(total: usize, (a, b): Gen) -> Vec<i64> {
    let mut w = vec![0; total];
    w[a] += 1;
    w[b] -= 1;
    w
}

/// `[E_{a,b}, E_{c,d}} = d_{bc} E_{a,d} - (-1)^{|ab||cd|} d_{da} E_{c,b}`.
pub fn superbracket(m: usize, x: Gen, y: Gen) -> Vec<(Gen, i64)> {
    let (a, b) = x;
    let (c, d) = y;
    let mut out: Vec<(Gen, i64)> = Vec::new();
    if b == c {
        out.push(((a, d), 1));
    }
    if d == a {
        let s = if gen_parity(m, x) && gen_parity(m, y) { 1 } else { -1 };
        match out.iter_mut().find(|(g, _)| *g == (c, b)) {
            Some(t) => t.1 += s,
            None => out.push(((c, b), s)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

/// A module with a weight basis and the action of every off-diagonal `E_{a,b}`; diagonal
/// generators act through the weights.
#[derive(Clone, Debug)]
pub struct ModuleRealization {
    m: usize,
    n: usize,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    parities: Vec<bool>,
    gens: BTreeMap<Gen, SparseMatrix>,
    /// Basis index of the highest weight vector, for highest weight modules.
    highest: Option<usize>,
}

impl ModuleRealization {
    pub(crate) fn new(
        m: usize,
        n: usize,
        labels: Vec<String>,
        weights: Vec<Vec<i64>>,
        parities: Vec<bool>,
        gens: BTreeMap<Gen, SparseMatrix>,
        highest: Option<usize>,
    ) -> Self {
        debug_assert!(labels.len() == weights.len() && weights.len() == parities.len());
        Self { m, n, labels, weights, parities, gens, highest }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn flat_weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    pub fn weight(&self, i: usize) -> Result<SuperWeight> {
        SuperWeight::from_flat(self.m, Rank::Finite(self.n), &self.weights[i])
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.parities[i]
    }

    pub fn highest(&self) -> Option<usize> {
        self.highest
    }

    /// All generators, off-diagonal ones stored and diagonal ones synthesized.
    pub fn generators(&self) -> Vec<Gen> {
        let t = self.m + self.n;
        (0..t).flat_map(|a| (0..t).map(move |b| (a, b))).collect()
    }

    pub fn matrix(&self, g: Gen) -> SparseMatrix {
        if g.0 == g.1 {
            let d = self.dim();
            let mut out = SparseMatrix::zero(d, d);
            for i in 0..d {
                out.set(i, i, q(self.weights[i][g.0]));
            }
            out
        } else {
            self.gens[&g].clone()
        }
    }

    pub fn stored(&self, g: Gen) -> Option<&SparseMatrix> {
        self.gens.get(&g)
    }

    pub fn apply(&self, g: Gen, v: &SparseVec) -> SparseVec {
        if g.0 == g.1 {
            v.iter()
                .map(|(&i, c)| (i, c * q(self.weights[i][g.0])))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect()
        } else {
            self.gens[&g].apply(v)
        }
    }

    /// Simple raising generators `E_{i,i+1}`.
    pub fn simple_raising(&self) -> Vec<Gen> {
        (0..self.m + self.n - 1).map(|i| (i, i + 1)).collect()
    }

    /// Checks that each generator shifts weights by its own weight.
    pub fn check_weights(&self) -> Result<()> {
        let t = self.m + self.n;
        for (&g, mat) in &self.gens {
            let gw = gen_weight(t, g);
            for j in 0..self.dim() {
                for &i in mat.column(j).keys() {
                    let expect: Vec<i64> = self.weights[j].iter().zip(&gw).map(|(a, b)| a + b).collect();
                    if self.weights[i] != expect {
                        return Err(Error::CheckFailed(format!(
                            "{} sends {} into {}",
                            gen_label(self.m, g),
                            self.labels[j],
                            self.labels[i]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `x(yv) - (-1)^{|x||y|} y(xv) = [x,y}v` for every generator pair.
    pub fn check_superbrackets(&self) -> Result<()> {
        let gens = self.generators();
        let mats: BTreeMap<Gen, SparseMatrix> = gens.iter().map(|&g| (g, self.matrix(g))).collect();
        for &x in &gens {
            for &y in &gens {
                let sign = if gen_parity(self.m, x) && gen_parity(self.m, y) { q(1) } else { q(-1) };
                let lhs = mats[&x].compose(&mats[&y]).add_scaled(&sign, &mats[&y].compose(&mats[&x]));
                let mut rhs = SparseMatrix::zero(self.dim(), self.dim());
                for (g, c) in superbracket(self.m, x, y) {
                    rhs = rhs.add_scaled(&q(c), &mats[&g]);
                }
                if lhs != rhs {
                    return Err(Error::CheckFailed(format!(
                        "bracket of {} and {} is not represented",
                        gen_label(self.m, x),
                        gen_label(self.m, y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The formal character, in `m` x-variables and `n` y-variables.
    pub fn character(&self) -> Result<SparseLaurent> {
        let mut ch = SparseLaurent::zero(self.m, self.n);
        for w in &self.weights {
            if w[self.m..].iter().any(|&e| e < 0) {
                return Err(Error::Shape(format!("weight {w:?} has a negative positive-block entry")));
            }
            ch.add_term(w.iter().map(|&e| e as i32).collect(), 1);
        }
        Ok(ch)
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    pub fn render(&self, v: &SparseVec) -> String {
        render_combination(v.iter().map(|(&i, c)| (c, self.labels[i].as_str())))
    }

    /// Smallest subspace containing `seeds` and stable under every generator.
    pub fn submodule(&self, seeds: &[SparseVec]) -> Subspace {
        let mut span = Subspace::new();
        let mut queue: Vec<SparseVec> = seeds.iter().filter_map(|s| span.insert(s)).collect();
        let gens: Vec<Gen> = self.gens.keys().copied().collect();
        while let Some(v) = queue.pop() {
            for &g in &gens {
                let image = self.gens[&g].apply(&v);
                if let Some(row) = span.insert(&image) {
                    queue.push(row);
                }
            }
        }
        span
    }

    /// The quotient by a submodule, on the basis vectors that are not pivots of `sub`.
    pub fn quotient(&self, sub: &Subspace) -> Self {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| !sub.is_pivot(i)).collect();
        let position: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let gens = self
            .gens
            .iter()
            .map(|(&g, mat)| {
                let columns = keep
                    .iter()
                    .map(|&j| {
                        sub.reduce(mat.column(j))
                            .into_iter()
                            .map(|(i, c)| (position[&i], c))
                            .collect()
                    })
                    .collect();
                (g, SparseMatrix::from_columns(keep.len(), columns))
            })
            .collect();
        Self {
            m: self.m,
            n: self.n,
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            weights: keep.iter().map(|&i| self.weights[i].clone()).collect(),
            parities: keep.iter().map(|&i| self.parities[i]).collect(),
            gens,
            highest: self.highest.and_then(|h| position.get(&h).copied()),
        }
    }
}

/// A singular vector: a weight vector killed by every simple raising generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLine {
    pub weight: SuperWeight,
    #[serde(skip)]
    pub vector: SparseVec,
    /// The vector as a combination of basis labels.
    pub expression: String,
    pub proper: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub lines: Vec<SingularLine>,
}

impl SingularReport {
    pub fn proper(&self) -> impl Iterator<Item = &SingularLine> {
        self.lines.iter().filter(|l| l.proper)
    }
}

/// One line per kernel basis vector of the stacked simple raising generators, weight space
/// by weight space.
pub fn singular_vectors(module: &ModuleRealization) -> Result<SingularReport> {
    let raising: Vec<SparseMatrix> = module.simple_raising().into_iter().map(|g| module.matrix(g)).collect();
    let top = module.highest.map(|h| module.weights[h].clone());
    let mut lines = Vec::new();
    for (w, cols) in module.weight_spaces().into_iter().rev() {
        let mut rows = Vec::new();
        for mat in &raising {
            let targets: std::collections::BTreeSet<usize> =
                cols.iter().flat_map(|&j| mat.column(j).keys().copied()).collect();
            let targets: Vec<usize> = targets.into_iter().collect();
            rows.extend(mat.block(&targets, &cols));
        }
        for v in kernel(&rows, cols.len()) {
            let vector: SparseVec = cols
                .iter()
                .zip(v)
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .map(|(&i, c)| (i, c))
                .collect();
            lines.push(SingularLine {
                weight: SuperWeight::from_flat(module.m, Rank::Finite(module.n), &w)?,
                expression: module.render(&vector),
                vector,
                proper: top.as_ref() != Some(&w),
            });
        }
    }
    Ok(SingularReport { lines })
}

#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub quotient: ModuleRealization,
    /// Dimension of the submodule generated by the proper singular vectors.
    pub maximal_dim: usize,
    pub proper_singular_lines: usize,
    /// Whether the quotient is irreducible, so that the proper singular vectors generate the
    /// maximal submodule.
    pub generated_by_singulars: bool,
}

/// Quotient of a highest weight module by the submodule generated by its proper singular
/// vectors. A finite-dimensional quotient whose only singular line is the highest one is
/// irreducible.
pub fn irreducible_quotient(module: &ModuleRealization) -> Result<QuotientReport> {
    if module.highest.is_none() {
        return Err(Error::Precondition("not a highest weight module".into()));
    }
    let report = singular_vectors(module)?;
    let seeds: Vec<SparseVec> = report.proper().map(|l| l.vector.clone()).collect();
    let sub = module.submodule(&seeds);
    if sub.dim() == module.dim() {
        return Err(Error::CheckFailed("proper singular vectors generate the whole module".into()));
    }
    let quotient = module.quotient(&sub);
    let irreducible = singular_vectors(&quotient)?.proper().next().is_none();
    Ok(QuotientReport {
        quotient,
        maximal_dim: sub.dim(),
        proper_singular_lines: seeds.len(),
        generated_by_singulars: irreducible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{hook_schur, kac_character};
    use crate::partitions::Partition;

    fn w(s: &str, n: usize) -> SuperWeight {
        SuperWeight::parse(s, Rank::Finite(n)).unwrap()
    }

    #[test]
    fn bracket_table() {
        // gl(1|1): E_{-1,1} and E_{1,-1} are odd
        let (x, y) = ((0, 1), (1, 0));
        assert_eq!(superbracket(1, x, y), vec![((0, 0), 1), ((1, 1), 1)]);
        // gl(2): [E_{-2,-1}, E_{-1,-2}] = E_{-2,-2} - E_{-1,-1}
        assert_eq!(superbracket(2, (0, 1), (1, 0)), vec![((0, 0), 1), ((1, 1), -1)]);
        assert!(superbracket(1, (0, 1), (0, 1)).is_empty());
        assert_eq!(gen_label(1, (1, 0)), "E_{1,-1}");
        assert_eq!(gen_label(2, (0, 2)), "E_{-2,1}");
    }

    #[test]
    fn kac_singular_examples() {
        let kac = build_kac(&w("0|0", 1)).unwrap();
        let rep = singular_vectors(&kac).unwrap();
        let weights: Vec<String> = rep.lines.iter().map(|l| l.weight.to_string()).collect();
        assert_eq!(weights, ["0|", "-1|1"]);

        let kac = build_kac(&w("1|0,0", 2)).unwrap();
        let rep = singular_vectors(&kac).unwrap();
        let proper: Vec<_> = rep.proper().collect();
        assert_eq!(proper.len(), 1);
        assert_eq!(proper[0].weight, w("-1|1,1", 2));
        assert_eq!(proper[0].expression, "E_{1,-1}E_{2,-1}v");
        assert!(rep.lines.iter().any(|l| !l.proper));
    }

    #[test]
    fn quotient_examples() {
        let q11 = irreducible_quotient(&build_kac(&w("0|0", 1)).unwrap()).unwrap();
        assert_eq!(q11.quotient.dim(), 1);
        assert!(q11.generated_by_singulars);

        let q12 = irreducible_quotient(&build_kac(&w("1|0,0", 2)).unwrap()).unwrap();
        assert_eq!(q12.quotient.dim(), 3);
        q12.quotient.check_superbrackets().unwrap();

        let typical = irreducible_quotient(&build_kac(&w("2|0", 1)).unwrap()).unwrap();
        assert_eq!(typical.maximal_dim, 0);
        assert_eq!(typical.quotient.dim(), 2);
    }

    #[test]
    fn kac_modules_are_consistent() {
        for (s, n) in [("0|0", 1), ("1|0,0", 2), ("0,0|0", 1), ("1,0|1", 1), ("2,-1|1,0", 2)] {
            let nu = w(s, n);
            let kac = build_kac(&nu).unwrap();
            kac.check_weights().unwrap();
            kac.check_superbrackets().unwrap();
            assert_eq!(kac.character().unwrap(), kac_character(&nu, n).unwrap(), "{s}");
        }
        assert_eq!(build_kac(&w("0,0|0", 1)).unwrap().dim(), 4);
    }

    #[test]
    fn tensor_module_quotients() {
        for (lam, m, n) in [("1", 1, 1), ("2,1", 1, 1), ("1", 2, 1), ("1,1,1", 2, 1), ("1", 1, 2)] {
            let lam: Partition = lam.parse().unwrap();
            let top = SuperWeight::split_hook(&lam, m, Rank::Finite(n))
                .and_then(|x| x.natural())
                .and_then(|x| x.with_rank(Rank::Finite(n)))
                .unwrap();
            let rep = irreducible_quotient(&build_kac(&top).unwrap()).unwrap();
            assert!(rep.generated_by_singulars);
            assert_eq!(rep.quotient.character().unwrap(), hook_schur(&lam, m, n).unwrap(), "{lam}");
        }
    }
}
