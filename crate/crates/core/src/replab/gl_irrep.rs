//! Irreducible gl(r)-modules, cut out of tensor products of exterior powers.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{precondition, Error, Result};
use crate::linalg::{axpy, q, unit, SparseMatrix, SparseVec, Subspace};

use super::induced::MODULE_GUARD;

/// Which diagonal block of gl(m|n) the factor lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Neg,
    Pos,
}

#[derive(Clone, Debug)]
pub struct GlIrrep {
    pub r: usize,
    pub block: Block,
    weights: Vec<Vec<i64>>,
    /// Off-diagonal `E_{a,b}`, local indices `0..r`.
    ops: BTreeMap<(usize, usize), SparseMatrix>,
}

impl GlIrrep {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn op(&self, a: usize, b: usize) -> &SparseMatrix {
        &self.ops[&(a, b)]
    }
}

/// Exterior-power tensors: one bitmask of occupied indices per factor.
struct TensorSpace {
    keys: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl TensorSpace {
    fn intern(&mut self, key: Vec<u32>) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        self.keys.push(key.clone());
        self.index.insert(key, self.keys.len() - 1);
        self.keys.len() - 1
    }

    fn act(&mut self, a: usize, b: usize, v: &SparseVec) -> SparseVec {
        let (abit, bbit) = (1u32 << a, 1u32 << b);
        let between = if a < b { (bbit - 1) & !((abit << 1) - 1) } else { (abit - 1) & !((bbit << 1) - 1) };
        let mut out = SparseVec::new();
        for (&i, c) in v {
            let key = self.keys[i].clone();
            for (f, &mask) in key.iter().enumerate() {
                if mask & bbit == 0 || mask & abit != 0 {
                    continue;
                }
                let mut next = key.clone();
                next[f] = mask & !bbit | abit;
                let sign = if (mask & between).count_ones() % 2 == 0 { 1 } else { -1 };
                let j = self.intern(next);
                axpy(&mut out, &q(sign), &SparseVec::from([(j, c.clone())]));
            }
        }
        out
    }

    fn weight(&self, i: usize, r: usize) -> Vec<i64> {
        (0..r)
            .map(|a| self.keys[i].iter().filter(|&&mask| mask >> a & 1 == 1).count() as i64)
            .collect()
    }
}

/// The gl(r)-irreducible of highest weight `sig`. After twisting by a determinant power
/// `sig` becomes a partition whose columns name the exterior powers; the highest weight
/// vector is the tensor of the top wedges, and the module is its span under lowering.
pub fn build_gl_irrep(r: usize, sig: &[i64], block: Block) -> Result<GlIrrep> {
    if r == 0 || r > 31 {
        return Err(precondition(format!("rank {r} out of range")));
    }
    if sig.len() > r {
        return Err(precondition(format!("signature {sig:?} longer than rank {r}")));
    }
    if sig.windows(2).any(|w| w[0] < w[1]) {
        return Err(precondition(format!("signature {sig:?} is not weakly decreasing")));
    }
    let mut padded = sig.to_vec();
    padded.resize(r, 0);
    let twist = -padded.iter().copied().min().unwrap_or(0).min(0);
    let parts: Vec<i64> = padded.iter().map(|v| v + twist).collect();
    let columns: Vec<usize> = (1..=parts[0]).map(|c| parts.iter().filter(|&&p| p >= c).count()).collect();

    let mut space = TensorSpace { keys: Vec::new(), index: HashMap::new() };
    let top = space.intern(columns.iter().map(|&len| (1u32 << len) - 1).collect());
    let mut span = Subspace::new();
    let mut queue = VecDeque::new();
    queue.extend(span.insert(&unit(top)));
    while let Some(v) = queue.pop_front() {
        for i in 0..r - 1 {
            let image = space.act(i + 1, i, &v);
            if let Some(row) = span.insert(&image) {
                if span.dim() > MODULE_GUARD {
                    return Err(Error::Guard {
                        name: "module_dim",
                        detail: format!("gl({r}) irreducible {sig:?} exceeds {MODULE_GUARD}"),
                    });
                }
                queue.push_back(row);
            }
        }
    }

    let basis = span.basis().to_vec();
    let weights = basis
        .iter()
        .map(|row| {
            let pivot = *row.keys().next().expect("rows are nonzero");
            space.weight(pivot, r).into_iter().map(|w| w - twist).collect()
        })
        .collect();
    let mut ops = BTreeMap::new();
    for a in 0..r {
        for b in 0..r {
            if a == b {
                continue;
            }
            let columns = basis
                .iter()
                .map(|row| {
                    let image = space.act(a, b, row);
                    let coords = span.coordinates(&image).expect("the span is a submodule");
                    coords.into_iter().collect()
                })
                .collect();
            ops.insert((a, b), SparseMatrix::from_columns(basis.len(), columns));
        }
    }
    Ok(GlIrrep { r, block, weights, ops })
}
