//! Signatures, the involutions `psi_i`, and the canonical basis of a block.
//!
//! The canonical basis vector `G(mu)` is found by peeling normal nodes off
//! `mu` down to the empty partition, applying the matching divided powers to
//! the vacuum, and then subtracting bar-invariant multiples of previously
//! found basis vectors until every coefficient other than the one at `mu`
//! lies in `q Z[q]`. Uniqueness of `G(mu)` makes the result self-certifying.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{violation, Error, Result};
use crate::fock::FockVector;
use crate::matrix::CanonicalBasisMatrix;
use crate::partitions::{enumerate_block, BlockId, HParams, Node, Partition};

/// Default cap on the number of partitions a block may have.
pub const DEFAULT_LIMIT: usize = 20_000;

/// One symbol of an i-signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// An addable i-node.
    Plus(Node),
    /// A removable i-node.
    Minus(Node),
}

impl Sign {
    pub fn node(self) -> Node {
        match self {
            Sign::Plus(x) | Sign::Minus(x) => x,
        }
    }
}

/// Addable and removable i-nodes, read along the rim from left to right.
pub fn i_signature(lam: &Partition, i: u32, p: HParams) -> Vec<Sign> {
    let mut out: Vec<Sign> = lam
        .addable_nodes(i, p)
        .into_iter()
        .map(Sign::Plus)
        .chain(lam.removable_nodes(i, p).into_iter().map(Sign::Minus))
        .collect();
    out.sort_unstable_by_key(|s| s.node());
    out
}

/// The signature with adjacent `+-` pairs cancelled until none remain.
pub fn reduced_i_signature(lam: &Partition, i: u32, p: HParams) -> Vec<Sign> {
    let mut stack: Vec<Sign> = Vec::new();
    for s in i_signature(lam, i, p) {
        if matches!(s, Sign::Minus(_)) && matches!(stack.last(), Some(Sign::Plus(_))) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    stack
}

/// Renders a signature as a string of `+` and `-`.
pub fn signature_string(sig: &[Sign]) -> String {
    sig.iter()
        .map(|s| if matches!(s, Sign::Plus(_)) { '+' } else { '-' })
        .collect()
}

pub fn normal_nodes(lam: &Partition, i: u32, p: HParams) -> Vec<Node> {
    reduced_i_signature(lam, i, p)
        .into_iter()
        .filter_map(|s| match s {
            Sign::Minus(x) => Some(x),
            Sign::Plus(_) => None,
        })
        .collect()
}

pub fn conormal_nodes(lam: &Partition, i: u32, p: HParams) -> Vec<Node> {
    reduced_i_signature(lam, i, p)
        .into_iter()
        .filter_map(|s| match s {
            Sign::Plus(x) => Some(x),
            Sign::Minus(_) => None,
        })
        .collect()
}

/// The involution `psi_i`.
pub fn psi(lam: &Partition, i: u32, p: HParams) -> Result<Partition> {
    p.check_residue(i)?;
    lam.require_h_strict(p)?;
    let normal = normal_nodes(lam, i, p);
    let conormal = conormal_nodes(lam, i, p);
    let (r, s) = (normal.len(), conormal.len());
    let out = if s >= r {
        lam.add_nodes(&conormal[..s - r], p)
    } else {
        lam.remove_nodes(&normal[s..], p)
    };
    out.ok_or_else(|| violation!("psi_{i} of {lam} is not h-strict"))
}

/// Which residue [`string_top`] peels first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PeelPolicy {
    #[default]
    SmallestFirst,
    LargestFirst,
}

/// One peeling step: `mu = f_i^(k) mu'` at the top of the crystal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peel {
    pub rest: Partition,
    pub residue: u32,
    pub count: u32,
}

/// Removes all normal i-nodes of `mu` for the first residue (per `policy`)
/// that has any. Returns `None` on the empty partition.
pub fn string_top(mu: &Partition, p: HParams, policy: PeelPolicy) -> Result<Option<Peel>> {
    if mu.is_empty() {
        return Ok(None);
    }
    let order: Vec<u32> = match policy {
        PeelPolicy::SmallestFirst => (0..=p.n()).collect(),
        PeelPolicy::LargestFirst => (0..=p.n()).rev().collect(),
    };
    for i in order {
        let normal = normal_nodes(mu, i, p);
        if normal.is_empty() {
            continue;
        }
        let rest = mu
            .remove_nodes(&normal, p)
            .ok_or_else(|| violation!("removing normal {i}-nodes from {mu} fails"))?;
        if !rest.is_restricted(p)? {
            return Err(violation!("peeling {mu} at residue {i} gave unrestricted {rest}"));
        }
        return Ok(Some(Peel { rest, residue: i, count: normal.len() as u32 }));
    }
    Err(violation!("restricted {mu} has no normal node of any residue"))
}

/// The divided-power word reaching `mu` from the vacuum, in order of application.
pub fn residue_word(mu: &Partition, p: HParams, policy: PeelPolicy) -> Result<Vec<(u32, u32)>> {
    let mut word = Vec::new();
    let mut cur = mu.clone();
    while let Some(step) = string_top(&cur, p, policy)? {
        word.push((step.residue, step.count));
        cur = step.rest;
    }
    word.reverse();
    Ok(word)
}

/// The canonical basis of a block, peeling smallest residues first.
pub fn canonical_basis(b: &BlockId) -> Result<CanonicalBasisMatrix> {
    canonical_basis_with(b, PeelPolicy::SmallestFirst, DEFAULT_LIMIT)
}

pub fn canonical_basis_with(b: &BlockId, policy: PeelPolicy, limit: usize) -> Result<CanonicalBasisMatrix> {
    let mut oracle = Oracle::new(b.params, policy);
    oracle.block(b, limit)
}

/// Memoised canonical basis vectors, shared across blocks.
///
/// For restricted `mu` with `k` normal i-nodes, `f_i^(k) G(mu')` (where `mu'`
/// is `mu` with those nodes removed) equals `G(mu)` plus bar-invariant
/// multiples of `G(nu)` for restricted `nu` with more than `k` normal
/// i-nodes. The lexicographically smallest coefficient outside `q Z[q]`
/// (other than at `mu`) always sits at such a `nu` and equals its multiplier,
/// so the extra terms are peeled off one at a time, computing each `G(nu)`
/// with the same residue. The count of normal i-nodes strictly increases
/// along that recursion, so it terminates.
#[derive(Debug, Clone)]
pub struct Oracle {
    params: HParams,
    policy: PeelPolicy,
    memo: BTreeMap<Partition, FockVector>,
}

impl Oracle {
    pub fn new(params: HParams, policy: PeelPolicy) -> Self {
        Oracle { params, policy, memo: BTreeMap::new() }
    }

    pub fn params(&self) -> HParams {
        self.params
    }

    /// The full matrix of a block.
    pub fn block(&mut self, b: &BlockId, limit: usize) -> Result<CanonicalBasisMatrix> {
        let p = self.params;
        if b.params != p {
            return Err(Error::Unsupported(alloc::format!("oracle for h={} asked for {b}", p.h())));
        }
        let rows = enumerate_block(b, limit)?;
        let mut cols = Vec::new();
        for lam in &rows {
            if lam.is_restricted(p)? {
                cols.push(lam.clone());
            }
        }
        let mut entries = alloc::vec![Vec::with_capacity(cols.len()); rows.len()];
        for mu in &cols {
            let g = self.vector(mu)?;
            if let Some(stray) = g.support().find(|lam| rows.binary_search(lam).is_err()) {
                return Err(violation!("G({mu}) has {stray} outside the block"));
            }
            for (lam, row) in rows.iter().zip(entries.iter_mut()) {
                row.push(g.coeff(lam));
            }
        }
        let m = CanonicalBasisMatrix::new(b.clone(), rows, cols, entries)?;
        m.check_axioms()?;
        Ok(m)
    }

    /// `G(mu)` for a restricted partition.
    pub fn vector(&mut self, mu: &Partition) -> Result<FockVector> {
        if let Some(g) = self.memo.get(mu) {
            return Ok(g.clone());
        }
        let p = self.params;
        if !mu.is_restricted(p)? {
            return Err(Error::Unsupported(alloc::format!("{mu} is not restricted")));
        }
        let g = match string_top(mu, p, self.policy)? {
            None => FockVector::vacuum(p),
            Some(step) => self.via_residue(mu, step.residue)?,
        };
        self.memo.insert(mu.clone(), g.clone());
        Ok(g)
    }

    fn via_residue(&mut self, mu: &Partition, i: u32) -> Result<FockVector> {
        if let Some(g) = self.memo.get(mu) {
            return Ok(g.clone());
        }
        let p = self.params;
        let normal = normal_nodes(mu, i, p);
        let k = normal.len() as u32;
        if k == 0 {
            return Err(violation!("{mu} has no normal {i}-node"));
        }
        let rest = mu
            .remove_nodes(&normal, p)
            .ok_or_else(|| violation!("removing normal {i}-nodes from {mu} fails"))?;
        let mut v = self.vector(&rest)?.apply_f(i, k)?;
        let budget = 4 * v.len() + 16;
        for _ in 0..budget {
            let pivot = v
                .iter()
                .find(|(lam, c)| *lam != mu && !c.divisible_by_q())
                .map(|(lam, c)| (lam.clone(), c.symmetric_correction()));
            let Some((nu, corr)) = pivot else {
                let top = v.coeff(mu);
                if !top.is_one() {
                    return Err(violation!("coefficient of {mu} in G({mu}) is {top}"));
                }
                self.memo.insert(mu.clone(), v.clone());
                return Ok(v);
            };
            if !nu.is_restricted(p)? || normal_nodes(&nu, i, p).len() as u32 <= k {
                return Err(violation!("reducing G({mu}) hit {nu} with coefficient outside qZ[q]"));
            }
            let g = self.via_residue(&nu, i)?;
            v.add_scaled(&g, &-corr);
        }
        Err(violation!("reduction of G({mu}) did not terminate"))
    }
}

/// `G(mu)` for a single restricted partition, computed with its whole block.
pub fn canonical_vector(mu: &Partition, p: HParams) -> Result<FockVector> {
    if !mu.is_restricted(p)? {
        return Err(Error::Unsupported(alloc::format!("{mu} is not restricted")));
    }
    Oracle::new(p, PeelPolicy::SmallestFirst).vector(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hp(h: u32) -> HParams {
        HParams::new(h).unwrap()
    }

    #[test]
    fn signature_of_worked_example() {
        let p = hp(3);
        let lam = pt("(5,4,2,1)");
        assert_eq!(signature_string(&i_signature(&lam, 0, p)), "-+-++");
        assert_eq!(signature_string(&reduced_i_signature(&lam, 0, p)), "-++");
        assert_eq!(normal_nodes(&lam, 0, p), [Node::new(4, 1)]);
        assert_eq!(conormal_nodes(&lam, 0, p), [Node::new(1, 6), Node::new(1, 7)]);
        assert_eq!(psi(&lam, 0, p).unwrap(), pt("(6,4,2,1)"));
        assert_eq!(psi(&pt("(6,4,2,1)"), 0, p).unwrap(), lam);
    }

    #[test]
    fn empty_partition() {
        let p = hp(5);
        assert_eq!(conormal_nodes(&Partition::empty(), 0, p), [Node::new(1, 1)]);
        assert_eq!(string_top(&Partition::empty(), p, PeelPolicy::SmallestFirst).unwrap(), None);
    }

    #[test]
    fn word_for_64() {
        let p = hp(5);
        let w = residue_word(&pt("(6,4)"), p, PeelPolicy::LargestFirst).unwrap();
        assert_eq!(w, [(0, 1), (1, 1), (2, 1), (1, 1), (0, 3), (1, 1), (2, 1), (1, 1)]);

    }

    #[test]
    fn basis_vectors_from_the_example() {
        let p = hp(5);
        let g = canonical_vector(&pt("(5,3,2)"), p).unwrap();
        assert_eq!(format!("{g}"), "(5,3,2) + (q^2)(5,4,1) + (q^2)(6,4) + (q^4)(7,3)");
        let g = canonical_vector(&pt("(6,4)"), p).unwrap();
        assert_eq!(format!("{g}"), "(6,4) + (q^2)(7,3) + (q^2)(8,2) + (q^4)(9,1)");
    }

    #[test]
    fn weight_zero_block_is_trivial() {
        let p = hp(7);
        let b = BlockId::new(p, pt("(4,2)"), 0).unwrap();
        let m = canonical_basis(&b).unwrap();
        assert_eq!(m.rows(), [pt("(4,2)")]);
        assert!(m.entry(&pt("(4,2)"), &pt("(4,2)")).is_one());
    }

    #[test]
    fn policies_agree_on_a_small_block() {
        let p = hp(3);
        let b = BlockId::new(p, Partition::empty(), 3).unwrap();
        let a = canonical_basis_with(&b, PeelPolicy::SmallestFirst, 1000).unwrap();
        let c = canonical_basis_with(&b, PeelPolicy::LargestFirst, 1000).unwrap();
        assert_eq!(a, c);
    }
}
