//! The gl(1|2) Verma module `M(delta_{-1})` on a finite window of its PBW basis.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{unit, SparseVec};
use crate::weights::{Rank, SuperWeight};

use super::induced::{build_kac, Induced, Monomial};
use super::{irreducible_quotient, singular_vectors, ModuleRealization, SingularLine};

pub const VERMA_MAX_DEPTH: usize = 8;

/// Lowering generators `E_{1,-1}, E_{2,-1}, E_{2,1}` by linear index.
const LOWERING: [(usize, usize); 3] = [(1, 0), (2, 0), (2, 1)];

#[derive(Clone, Debug, Serialize)]
pub struct VermaReport {
    pub depth: usize,
    pub highest_weight: SuperWeight,
    /// Dimension of the window `a + 2b + c <= depth`.
    pub window_dim: usize,
    pub singular_lines: Vec<SingularLine>,
    /// `M_1`, generated by `E_{2,1} v`, intersected with the window.
    pub submodule_dim: usize,
    pub quotient_dim: usize,
    pub kac_dim: usize,
    pub irreducible_dim: usize,
    /// Weight multisets of `M / M_1` and of the Kac module agree.
    pub weights_match: bool,
    /// The PBW identification intertwines every generator modulo `M_1`.
    pub action_match: bool,
    pub pass: bool,
}

/// Height of a PBW monomial: the number of simple roots subtracted.
fn height((e, _): &Monomial) -> usize {
    (e[0] + 2 * e[1] + e[2]) as usize
}

pub fn verma_gl12_report(depth: usize) -> Result<VermaReport> {
    if depth > VERMA_MAX_DEPTH {
        return Err(Error::Guard {
            name: "verma_depth",
            detail: format!("depth {depth} exceeds {VERMA_MAX_DEPTH}"),
        });
    }
    let top = vec![1, 0, 0];
    let mut induced = Induced::new(1, 3, LOWERING.to_vec(), vec![top.clone()], BTreeMap::new());
    let mut basis: Vec<Monomial> = Vec::new();
    for a in 0..=1u32 {
        for b in 0..=1u32 {
            for c in 0..=depth as u32 {
                let mono = (vec![a, b, c], 0);
                if height(&mono) <= depth {
                    basis.push(mono);
                }
            }
        }
    }
    basis.sort_by_key(|mono| (height(mono), std::cmp::Reverse(mono.0.clone())));
    let verma = induced.realize(2, &basis, Some(0));

    let singular_lines: Vec<SingularLine> = singular_vectors(&verma)?.proper().cloned().collect();
    let index = |e: [u32; 3]| basis.iter().position(|mono| mono.0 == e);
    let m1 = match index([0, 0, 1]) {
        Some(i) => verma.submodule(&[unit(i)]),
        None => verma.submodule(&[]),
    };
    let quotient_dim = verma.dim() - m1.dim();

    let highest_weight = SuperWeight::from_flat(1, Rank::Finite(2), &top)?;
    let kac = build_kac(&highest_weight)?;
    let irreducible = irreducible_quotient(&kac)?;

    // f_S v in the Kac module goes to the PBW monomial with the same odd part and c = 0
    let image: Vec<Option<usize>> = (0..kac.dim()).map(|u| kac_label_to_index(&kac, u, &verma)).collect();
    let mut quotient_weights: Vec<&[i64]> = (0..verma.dim())
        .filter(|&i| !m1.is_pivot(i))
        .map(|i| verma.flat_weight(i))
        .collect();
    let mut kac_weights: Vec<&[i64]> = (0..kac.dim()).map(|i| kac.flat_weight(i)).collect();
    quotient_weights.sort();
    kac_weights.sort();
    let weights_match = quotient_weights == kac_weights;

    let mut action_match = image.iter().all(Option::is_some) && quotient_dim == kac.dim();
    if action_match {
        let mut span = crate::linalg::Subspace::new();
        for i in image.iter().flatten() {
            action_match &= span.insert(&m1.reduce(&unit(*i))).is_some();
        }
    }
    let phi = |v: &SparseVec| -> SparseVec {
        v.iter().map(|(&u, c)| (image[u].expect("checked above"), c.clone())).collect()
    };
    if action_match {
        'outer: for g in kac.generators() {
            for (u, src) in image.iter().enumerate() {
                let src = src.expect("checked above");
                let rise = g.0.saturating_sub(g.1);
                if height(&basis[src]) + rise > depth {
                    continue;
                }
                let lhs = m1.reduce(&verma.apply(g, &unit(src)));
                let rhs = m1.reduce(&phi(&kac.apply(g, &unit(u))));
                if lhs != rhs {
                    action_match = false;
                    break 'outer;
                }
            }
        }
    }

    let pass = weights_match && action_match && irreducible.generated_by_singulars;
    Ok(VermaReport {
        depth,
        highest_weight,
        window_dim: verma.dim(),
        singular_lines,
        submodule_dim: m1.dim(),
        quotient_dim,
        kac_dim: kac.dim(),
        irreducible_dim: irreducible.quotient.dim(),
        weights_match,
        action_match,
        pass,
    })
}

/// Both modules label monomials by their lowering words, so equal labels mean equal PBW
/// monomials with no `E_{2,1}` factor.
fn kac_label_to_index(kac: &ModuleRealization, u: usize, verma: &ModuleRealization) -> Option<usize> {
    let label = &kac.labels()[u];
    verma.labels().iter().position(|l| l == label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_values() {
        let r = verma_gl12_report(6).unwrap();
        let exprs: Vec<&str> = r.singular_lines.iter().map(|l| l.expression.as_str()).collect();
        assert_eq!(exprs, ["E_{2,1}v", "E_{1,-1}E_{2,1}v"]);
        assert_eq!(r.quotient_dim, 4);
        assert_eq!(r.irreducible_dim, 3);
        assert!(r.weights_match && r.action_match && r.pass);
    }

    #[test]
    fn depth_guard() {
        assert!(matches!(verma_gl12_report(9), Err(Error::Guard { .. })));
        let shallow = verma_gl12_report(2).unwrap();
        assert!(!shallow.pass);
    }
}
