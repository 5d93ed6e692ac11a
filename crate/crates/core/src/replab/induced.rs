//! Modules induced from a parabolic subalgebra, computed on a PBW basis
//! `l_1^{e_1} ... l_L^{e_L} (x) b` by straightening.

use std::collections::{BTreeMap, HashMap};

use crate::error::{precondition, Error, Result};
use crate::linalg::{q, SparseMatrix, SparseVec, Q};
use crate::weights::SuperWeight;

use super::gl_irrep::{build_gl_irrep, Block};
use super::{gen_label, gen_parity, gen_weight, superbracket, Gen, ModuleRealization};

/// Largest module dimension any realization may reach.
pub const MODULE_GUARD: usize = 5000;

/// A PBW monomial: exponents of the lowering generators and a base basis index.
pub(crate) type Monomial = (Vec<u32>, usize);
pub(crate) type Element = BTreeMap<Monomial, Q>;

fn add_into(acc: &mut Element, c: &Q, x: &Element) {
    for (k, v) in x {
        let e = acc.entry(k.clone()).or_insert_with(|| q(0));
        *e += c * v;
        if num_traits::Zero::is_zero(e) {
            acc.remove(k);
        }
    }
}

/// The inducing data: an ordered list of lowering generators spanning a complement of the
/// parabolic, and a module for the parabolic on a weight basis.
pub(crate) struct Induced {
    m: usize,
    total: usize,
    lowering: Vec<Gen>,
    position: HashMap<Gen, usize>,
    base_weights: Vec<Vec<i64>>,
    /// Parabolic generators acting on the base; absent ones act by zero.
    base_ops: BTreeMap<Gen, SparseMatrix>,
    memo: HashMap<(Gen, Monomial), Element>,
}

impl Induced {
    pub(crate) fn new(
        m: usize,
        total: usize,
        lowering: Vec<Gen>,
        base_weights: Vec<Vec<i64>>,
        base_ops: BTreeMap<Gen, SparseMatrix>,
    ) -> Self {
        let position = lowering.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        Self { m, total, lowering, position, base_weights, base_ops, memo: HashMap::new() }
    }

    pub(crate) fn weight(&self, (e, b): &Monomial) -> Vec<i64> {
        let mut w = self.base_weights[*b].clone();
        for (&k, &g) in e.iter().zip(&self.lowering) {
            for (x, y) in w.iter_mut().zip(gen_weight(self.total, g)) {
                *x += k as i64 * y;
            }
        }
        w
    }

    pub(crate) fn parity(&self, (e, _): &Monomial) -> bool {
        e.iter().zip(&self.lowering).filter(|(&k, &g)| k % 2 == 1 && gen_parity(self.m, g)).count() % 2 == 1
    }

    pub(crate) fn label(&self, (e, b): &Monomial) -> String {
        let mut s = String::new();
        for (&k, &g) in e.iter().zip(&self.lowering) {
            if k > 0 {
                s.push_str(&gen_label(self.m, g));
                if k > 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
        }
        if *b == 0 {
            s.push('v');
        } else {
            s.push_str(&format!("v{b}"));
        }
        s
    }

    /// `x` applied to a PBW monomial, in normal form.
    pub(crate) fn act(&mut self, x: Gen, mono: &Monomial) -> Element {
        let key = (x, mono.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = self.act_uncached(x, mono);
        self.memo.insert(key, out.clone());
        out
    }

    fn act_uncached(&mut self, x: Gen, mono: &Monomial) -> Element {
        let (e, b) = mono;
        if x.0 == x.1 {
            let c = q(self.weight(mono)[x.0]);
            return if num_traits::Zero::is_zero(&c) { Element::new() } else { Element::from([(mono.clone(), c)]) };
        }
        let first = e.iter().position(|&k| k > 0);
        if let Some(j) = self.position.get(&x).copied() {
            if first.is_none_or(|f| j <= f) {
                if first == Some(j) && gen_parity(self.m, x) {
                    return Element::new();
                }
                let mut next = e.clone();
                next[j] += 1;
                return Element::from([((next, *b), q(1))]);
            }
        }
        let Some(f) = first else {
            // x lies in the parabolic and meets the base directly
            return match self.base_ops.get(&x) {
                Some(mat) => mat.column(*b).iter().map(|(&i, c)| ((vec![0; e.len()], i), c.clone())).collect(),
                None => Element::new(),
            };
        };
        // x y rest = [x, y} rest + (-1)^{|x||y|} y x rest, with y the leading factor
        let y = self.lowering[f];
        let mut rest = e.clone();
        rest[f] -= 1;
        let rest = (rest, *b);
        let mut out = Element::new();
        for (g, c) in superbracket(self.m, x, y) {
            let t = self.act(g, &rest);
            add_into(&mut out, &q(c), &t);
        }
        let sign = if gen_parity(self.m, x) && gen_parity(self.m, y) { q(-1) } else { q(1) };
        let inner = self.act(x, &rest);
        for (mono, c) in inner {
            let t = self.act(y, &mono);
            add_into(&mut out, &(&sign * &c), &t);
        }
        out
    }

    /// Realization on the given monomials; components that leave the list are dropped, which
    /// is exact for modules that need no truncation.
    pub(crate) fn realize(&mut self, n: usize, basis: &[Monomial], highest: Option<usize>) -> ModuleRealization {
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, mono)| (mono, i)).collect();
        let mut gens = BTreeMap::new();
        for a in 0..self.total {
            for c in 0..self.total {
                if a == c {
                    continue;
                }
                let columns = basis
                    .iter()
                    .map(|mono| {
                        self.act((a, c), mono)
                            .into_iter()
                            .filter_map(|(t, v)| index.get(&t).map(|&i| (i, v)))
                            .collect::<SparseVec>()
                    })
                    .collect();
                gens.insert((a, c), SparseMatrix::from_columns(basis.len(), columns));
            }
        }
        ModuleRealization::new(
            self.m,
            n,
            basis.iter().map(|mono| self.label(mono)).collect(),
            basis.iter().map(|mono| self.weight(mono)).collect(),
            basis.iter().map(|mono| self.parity(mono)).collect(),
            gens,
            highest,
        )
    }
}

/// Odd lowering generators `E_{a,b}`, `a` in the positive block and `b` in the negative one,
/// in (row, column) order.
pub(crate) fn odd_lowering(m: usize, n: usize) -> Vec<Gen> {
    (m..m + n).flat_map(|a| (0..m).map(move |b| (a, b))).collect()
}

/// The Kac module induced from `L0(nu_natural)` with the odd raising part acting by zero.
pub fn build_kac(nu_natural: &SuperWeight) -> Result<ModuleRealization> {
    let m = nu_natural.m();
    let n = nu_natural
        .n()
        .finite()
        .ok_or_else(|| precondition("Kac modules need a finite n"))?;
    let pos = nu_natural.flat(n)[m..].to_vec();
    if nu_natural.neg().windows(2).any(|w| w[0] < w[1]) || pos.windows(2).any(|w| w[0] < w[1]) {
        return Err(precondition(format!("{nu_natural} is not dominant for g0")));
    }
    let left = build_gl_irrep(m, nu_natural.neg(), Block::Neg)?;
    let right = build_gl_irrep(n, &pos, Block::Pos)?;
    let base_dim = left.dim() * right.dim();
    let mn = (m * n) as u32;
    let dim = if mn >= 13 { usize::MAX } else { base_dim << mn };
    if dim > MODULE_GUARD {
        return Err(Error::Guard {
            name: "module_dim",
            detail: format!("Kac module of {nu_natural} has dimension 2^{mn} * {base_dim} > {MODULE_GUARD}"),
        });
    }

    let total = m + n;
    let mut base_weights = Vec::with_capacity(base_dim);
    for wl in left.weights() {
        for wr in right.weights() {
            base_weights.push(wl.iter().chain(wr).copied().collect());
        }
    }
    let mut base_ops = BTreeMap::new();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                base_ops.insert((a, b), left.op(a, b).kron(&SparseMatrix::identity(right.dim())));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b {
                base_ops.insert((m + a, m + b), SparseMatrix::identity(left.dim()).kron(right.op(a, b)));
            }
        }
    }

    let lowering = odd_lowering(m, n);
    let mut basis: Vec<Monomial> = Vec::with_capacity(dim);
    // subsets by size, then lexicographically in the generator order
    let mut subsets: Vec<Vec<u32>> = (0u32..1 << mn)
        .map(|s| (0..mn).map(|i| s >> i & 1).collect())
        .collect();
    subsets.sort_by_key(|e: &Vec<u32>| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    for e in subsets {
        for b in 0..base_dim {
            basis.push((e.clone(), b));
        }
    }
    let mut induced = Induced::new(m, total, lowering, base_weights, base_ops);
    Ok(induced.realize(n, &basis, Some(0)))
}
