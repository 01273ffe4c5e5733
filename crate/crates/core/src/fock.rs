//! Vectors of the q-deformed Fock space and the divided powers `f_i^(k)`, `e_i^(k)`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::laurent::{q_i_exponent, LaurentPoly};
use crate::partitions::{HParams, Node, Partition};

/// A finite combination of h-strict partitions with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    params: HParams,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(params: HParams) -> Self {
        FockVector { params, terms: BTreeMap::new() }
    }

    pub fn basis(lam: Partition, params: HParams) -> Result<Self> {
        lam.require_h_strict(params)?;
        let mut v = FockVector::zero(params);
        v.terms.insert(lam, LaurentPoly::one());
        Ok(v)
    }

    /// The empty partition with coefficient 1.
    pub fn vacuum(params: HParams) -> Self {
        let mut v = FockVector::zero(params);
        v.terms.insert(Partition::empty(), LaurentPoly::one());
        v
    }

    pub fn params(&self) -> HParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> LaurentPoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Adds `c * lam`.
    pub fn add_term(&mut self, lam: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (lam, x) in &other.terms {
            self.add_term(lam.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.params);
        out.add_scaled(self, c);
        out
    }

    /// Coefficient-wise bar. This is not the bar involution of the module.
    pub fn bar_coefficients(&self) -> FockVector {
        FockVector {
            params: self.params,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.bar())).collect(),
        }
    }

    /// `f_i^(k) v`.
    pub fn apply_f(&self, i: u32, k: u32) -> Result<FockVector> {
        self.params.check_residue(i)?;
        let p = self.params;
        let mut out = FockVector::zero(p);
        for (lam, c) in &self.terms {
            let addable = lam.addable_nodes(i, p);
            for pick in addable.iter().copied().combinations(k as usize) {
                if let Some(mu) = lam.add_nodes(&pick, p) {
                    let n = n_coefficient_f(lam, &mu, i, p)?;
                    out.add_term(mu, &(&n * c));
                }
            }
        }
        Ok(out)
    }

    /// `e_i^(k) v`.
    pub fn apply_e(&self, i: u32, k: u32) -> Result<FockVector> {
        self.params.check_residue(i)?;
        let p = self.params;
        let mut out = FockVector::zero(p);
        for (lam, c) in &self.terms {
            let removable = lam.removable_nodes(i, p);
            for pick in removable.iter().copied().combinations(k as usize) {
                if let Some(mu) = lam.remove_nodes(&pick, p) {
                    let n = n_coefficient_e(lam, &mu, i, p)?;
                    out.add_term(mu, &(&n * c));
                }
            }
        }
        Ok(out)
    }

    /// Applies divided powers to the vacuum. `word` lists `(i, k)` in the
    /// order of application, so the first entry acts first.
    pub fn monomial(word: &[(u32, u32)], p: HParams) -> Result<FockVector> {
        word.iter()
            .try_fold(FockVector::vacuum(p), |v, &(i, k)| v.apply_f(i, k))
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (lam, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{lam}")?;
            } else {
                write!(f, "({c}){lam}")?;
            }
        }
        Ok(())
    }
}

/// Nodes of `outer` not in `inner`, or `None` if `inner` does not fit inside.
fn skew(outer: &Partition, inner: &Partition) -> Option<Vec<Node>> {
    if inner.len() > outer.len() {
        return None;
    }
    let mut out = Vec::new();
    for r in 1..=outer.len() {
        let (a, b) = (outer.part(r), inner.part(r));
        if b > a {
            return None;
        }
        out.extend((b + 1..=a).map(|c| Node::new(r as u32, c)));
    }
    Some(out)
}

fn skew_of_residue(outer: &Partition, inner: &Partition, i: u32, p: HParams) -> Result<Vec<Node>> {
    let nodes = skew(outer, inner).ok_or(Error::NotINodeDifference { residue: i })?;
    if nodes.iter().any(|x| p.residue(x.col) != i) {
        return Err(Error::NotINodeDifference { residue: i });
    }
    Ok(nodes)
}

fn count_cols(nodes: &[Node], keep: impl Fn(u32) -> bool) -> i32 {
    nodes.iter().filter(|x| keep(x.col)).count() as i32
}

/// `1 - (-q^2)^b`.
fn fold_factor(b: usize) -> LaurentPoly {
    let sign = if b.is_multiple_of(2) { -1 } else { 1 };
    LaurentPoly::from_terms([(0, 1), (2 * b as i32, sign)])
}

/// The coefficient of `mu` in `f_i^(k) lam`, where `mu` is `lam` plus `k` i-nodes.
pub fn n_coefficient_f(lam: &Partition, mu: &Partition, i: u32, p: HParams) -> Result<LaurentPoly> {
    let added = skew_of_residue(mu, lam, i, p)?;
    let add_mu = mu.addable_nodes(i, p);
    let rem_lam = lam.removable_nodes(i, p);
    let s: i32 = added
        .iter()
        .map(|x| count_cols(&add_mu, |c| c < x.col) - count_cols(&rem_lam, |c| c < x.col))
        .sum();
    let mut out = LaurentPoly::q_pow(s * q_i_exponent(i, p));
    if i == 0 {
        let h = p.h();
        let mut cols: Vec<u32> = added.iter().map(|x| x.col).collect();
        cols.dedup();
        for &c in &cols {
            if c > 1 && (c - 1) % h == 0 && !cols.contains(&(c - 1)) {
                out = &out * &fold_factor(lam.multiplicity(c - 1));
            }
        }
    }
    Ok(out)
}

/// The coefficient of `mu` in `e_i^(k) lam`, where `mu` is `lam` minus `k` i-nodes.
pub fn n_coefficient_e(lam: &Partition, mu: &Partition, i: u32, p: HParams) -> Result<LaurentPoly> {
    let removed = skew_of_residue(lam, mu, i, p)?;
    let rem_mu = mu.removable_nodes(i, p);
    let add_lam = lam.addable_nodes(i, p);
    let s: i32 = removed
        .iter()
        .map(|x| count_cols(&rem_mu, |c| c > x.col) - count_cols(&add_lam, |c| c > x.col))
        .sum();
    let mut out = LaurentPoly::q_pow(s * q_i_exponent(i, p));
    if i == 0 {
        let h = p.h();
        let mut cols: Vec<u32> = removed.iter().map(|x| x.col).collect();
        cols.dedup();
        for &c in &cols {
            if c % h == 0 && !cols.contains(&(c + 1)) {
                out = &out * &fold_factor(lam.multiplicity(c));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn hp(h: u32) -> HParams {
        HParams::new(h).unwrap()
    }

    fn vec_of(p: HParams, terms: &[(&str, &str)]) -> FockVector {
        let mut v = FockVector::zero(p);
        for (lam, c) in terms {
            v.add_term(pt(lam), &lp(c));
        }
        v
    }

    #[test]
    fn divided_powers_of_f0_on_54() {
        let p = hp(5);
        let v = FockVector::basis(pt("(5,4)"), p).unwrap();
        assert_eq!(
            v.apply_f(0, 1).unwrap(),
            vec_of(p, &[("(5,4,1)", "1"), ("(5,5)", "q"), ("(6,4)", "q^4 + q^2")])
        );
        assert_eq!(
            v.apply_f(0, 2).unwrap(),
            vec_of(p, &[("(5,5,1)", "1"), ("(6,4,1)", "q^3 + q"), ("(6,5)", "q^2")])
        );
        assert_eq!(v.apply_f(0, 3).unwrap(), vec_of(p, &[("(6,5,1)", "1")]));
        assert!(v.apply_f(0, 4).unwrap().is_zero());
        assert_eq!(v.apply_f(0, 0).unwrap(), v);
    }

    #[test]
    fn coefficients_named_in_the_example() {
        let p = hp(5);
        assert_eq!(n_coefficient_f(&pt("(5,4)"), &pt("(5,5)"), 0, p).unwrap(), lp("q"));
        assert_eq!(n_coefficient_f(&pt("(5,4)"), &pt("(6,4)"), 0, p).unwrap(), lp("q^2 + q^4"));
        assert!(n_coefficient_f(&pt("(5,4)"), &pt("(5,4)"), 0, p).unwrap().is_one());
        assert!(n_coefficient_f(&pt("(5,4)"), &pt("(5,5)"), 1, p).is_err());
    }

    #[test]
    fn monomials_from_the_example() {
        let p = hp(5);
        let g64 = FockVector::monomial(&[(0, 1), (1, 1), (2, 1), (1, 1), (0, 3), (1, 1), (2, 1), (1, 1)], p).unwrap();
        assert_eq!(
            g64,
            vec_of(p, &[("(6,4)", "1"), ("(7,3)", "q^2"), ("(8,2)", "q^2"), ("(9,1)", "q^4")])
        );
        let a = FockVector::monomial(&[(0, 1), (1, 1), (2, 1), (1, 1), (0, 2), (1, 1), (2, 1), (0, 1), (1, 1)], p).unwrap();
        assert_eq!(
            a,
            vec_of(
                p,
                &[
                    ("(5,3,2)", "1"),
                    ("(5,4,1)", "q^2"),
                    ("(6,4)", "q^2 + 1"),
                    ("(7,3)", "q^4 + q^2"),
                    ("(8,2)", "q^2"),
                    ("(9,1)", "q^4"),
                ]
            )
        );
        assert_eq!(FockVector::monomial(&[], p).unwrap(), FockVector::vacuum(p));
    }

    #[test]
    fn e_kills_vacuum() {
        let p = hp(5);
        for i in 0..=2 {
            assert!(FockVector::vacuum(p).apply_e(i, 1).unwrap().is_zero());
        }
        assert!(FockVector::vacuum(p).apply_e(3, 1).is_err());
    }
}
