//! h-strict partitions and the node combinatorics that goes with them.
//!
//! A [`Partition`] is stored as its positive parts in weakly decreasing order.
//! Rows and columns of Young diagrams are 1-indexed throughout.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::abacus;
use crate::error::{Error, Result};

/// The odd integer `h = 2n + 1` and its half `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HParams {
    h: u32,
    n: u32,
}

impl HParams {
    pub fn new(h: u32) -> Result<Self> {
        if h < 3 || h.is_multiple_of(2) {
            return Err(Error::InvalidH(h));
        }
        Ok(HParams { h, n: (h - 1) / 2 })
    }

    #[inline]
    pub fn h(self) -> u32 {
        self.h
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.n
    }

    /// Residue of column `c`: the smaller of `(c - 1) mod h` and `(-c) mod h`.
    pub fn residue(self, c: u32) -> u32 {
        debug_assert!(c >= 1);
        let a = (c - 1) % self.h;
        let b = (self.h - c % self.h) % self.h;
        a.min(b)
    }

    /// Runner of the abacus holding position `x`, in `-n..=n`.
    pub fn runner(self, x: i64) -> i32 {
        let h = self.h as i64;
        let n = self.n as i64;
        ((x + n).rem_euclid(h) - n) as i32
    }

    pub(crate) fn check_residue(self, i: u32) -> Result<()> {
        if i > self.n {
            Err(Error::InvalidResidue { residue: i, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// A box `(row, col)` of a Young diagram.
///
/// Nodes are ordered by column first and then by row, which is the order in
/// which they are met when walking along the rim from left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        Node { row, col }
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.col, self.row).cmp(&(other.col, other.row))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Verdict of a dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// A partition, stored as its positive parts in weakly decreasing order.
///
/// The derived ordering is the lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!("{parts:?} is not decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts in any order; zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    #[inline]
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The part in 1-indexed row `r`, or 0 below the last row.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return u32::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, a: u32) -> bool {
        a > 0 && self.0.contains(&a)
    }

    pub fn multiplicity(&self, a: u32) -> usize {
        self.0.iter().filter(|&&x| x == a).count()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_h_strict(&self, p: HParams) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1] || w[0] % p.h() == 0)
    }

    pub fn is_restricted(&self, p: HParams) -> Result<bool> {
        if !self.is_h_strict(p) {
            return Err(Error::NotHStrict(self.clone()));
        }
        let h = p.h();
        Ok((1..=self.len()).all(|r| {
            let a = self.part(r);
            let b = self.part(r + 1);
            b + h > a || (b + h == a && !a.is_multiple_of(h))
        }))
    }

    pub(crate) fn require_h_strict(&self, p: HParams) -> Result<()> {
        if self.is_h_strict(p) {
            Ok(())
        } else {
            Err(Error::NotHStrict(self.clone()))
        }
    }

    /// All nodes of the diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (1..=l).map(move |c| Node::new(r as u32 + 1, c)))
    }

    /// The removable `i`-nodes, sorted by column then row.
    pub fn removable_nodes(&self, i: u32, p: HParams) -> Vec<Node> {
        let lam = &self.0;
        let mut mu: Vec<u32> = lam
            .iter()
            .map(|&l| {
                let mut t = 0;
                while t < l && p.residue(l - t) == i {
                    t += 1;
                }
                l - t
            })
            .collect();
        for r in (0..mu.len().saturating_sub(1)).rev() {
            while strict_violation(mu[r], mu[r + 1], p) {
                mu[r] += 1;
            }
            debug_assert!(mu[r] <= lam[r]);
        }
        let mut out: Vec<Node> = (0..lam.len())
            .flat_map(|r| (mu[r] + 1..=lam[r]).map(move |c| Node::new(r as u32 + 1, c)))
            .collect();
        out.sort_unstable();
        out
    }

    /// The addable `i`-nodes, sorted by column then row.
    pub fn addable_nodes(&self, i: u32, p: HParams) -> Vec<Node> {
        let len = self.len();
        let lam: Vec<u32> = (1..=len + 1).map(|r| self.part(r)).collect();
        let mut nu: Vec<u32> = lam
            .iter()
            .map(|&l| {
                let mut t = 0;
                while p.residue(l + t + 1) == i {
                    t += 1;
                }
                l + t
            })
            .collect();
        for r in 1..nu.len() {
            while strict_violation(nu[r - 1], nu[r], p) {
                nu[r] -= 1;
            }
            debug_assert!(nu[r] >= lam[r]);
        }
        let mut out: Vec<Node> = (0..nu.len())
            .flat_map(|r| (lam[r] + 1..=nu[r]).map(move |c| Node::new(r as u32 + 1, c)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Adds a set of nodes. Returns `None` if the result is not a partition
    /// or not h-strict.
    pub fn add_nodes(&self, nodes: &[Node], p: HParams) -> Option<Partition> {
        let rows = nodes.iter().map(|x| x.row as usize).max().unwrap_or(0).max(self.len());
        let mut parts: Vec<u32> = (1..=rows).map(|r| self.part(r)).collect();
        let mut sorted: Vec<Node> = nodes.to_vec();
        sorted.sort_unstable_by_key(|x| (x.row, x.col));
        for x in sorted {
            let r = x.row as usize - 1;
            if parts[r] + 1 != x.col {
                return None;
            }
            parts[r] += 1;
        }
        let out = Partition::new(parts).ok()?;
        out.is_h_strict(p).then_some(out)
    }

    /// Removes a set of nodes. Returns `None` if the result is not an
    /// h-strict partition.
    pub fn remove_nodes(&self, nodes: &[Node], p: HParams) -> Option<Partition> {
        let mut parts = self.0.clone();
        let mut sorted: Vec<Node> = nodes.to_vec();
        sorted.sort_unstable_by_key(|x| (x.row, core::cmp::Reverse(x.col)));
        for x in sorted {
            let r = x.row as usize - 1;
            if r >= parts.len() || parts[r] != x.col {
                return None;
            }
            parts[r] -= 1;
        }
        let out = Partition::new(parts).ok()?;
        out.is_h_strict(p).then_some(out)
    }

    /// Residue counts of all nodes, indexed by residue `0..=n`.
    pub fn h_content(&self, p: HParams) -> Vec<u32> {
        let h = p.h();
        let mut period = alloc::vec![0u32; p.n() as usize + 1];
        for c in 1..=h {
            period[p.residue(c) as usize] += 1;
        }
        let mut out = alloc::vec![0u32; p.n() as usize + 1];
        for &l in &self.0 {
            let full = l / h;
            for (o, &k) in out.iter_mut().zip(&period) {
                *o += full * k;
            }
            for c in full * h + 1..=l {
                out[p.residue(c) as usize] += 1;
            }
        }
        out
    }

    /// Every h-strict partition reachable by removing one h-bar, paired with
    /// the integer recorded for that bar.
    pub fn remove_h_bar_all(&self, p: HParams) -> Vec<(Partition, u32)> {
        let h = p.h();
        let mut out = Vec::new();
        let mut last = None;
        for (idx, &a) in self.0.iter().enumerate() {
            if last == Some(a) {
                continue;
            }
            last = Some(a);
            if a >= h {
                let mut parts = self.0.clone();
                parts[idx] = a - h;
                let q = Partition::from_unsorted(parts);
                if q.is_h_strict(p) {
                    out.push((q, a));
                }
            }
        }
        for a in 1..=p.n() {
            if self.contains(a) && self.contains(h - a) {
                let q = self.subtract_unchecked(&[h - a, a]);
                out.push((q, h - a));
            }
        }
        out
    }

    pub fn bar_core(&self, p: HParams) -> Partition {
        abacus::core_of(self, p)
    }

    pub fn bar_weight(&self, p: HParams) -> u32 {
        (self.size() - self.bar_core(p).size()) / p.h()
    }

    pub fn is_bar_core(&self, p: HParams) -> bool {
        self.is_h_strict(p) && self.remove_h_bar_all(p).is_empty()
    }

    /// Dominance comparison of two partitions of the same size.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::SizeMismatch { left: a, right: b });
        }
        let (mut le, mut ge) = (true, true);
        let (mut s, mut t) = (0u32, 0u32);
        for r in 1..=self.len().max(other.len()) {
            s += self.part(r);
            t += other.part(r);
            le &= s <= t;
            ge &= s >= t;
        }
        Ok(match (le, ge) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ⊴ other`. Partitions of different sizes are never comparable.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Ok(Dominance::Less | Dominance::Equal))
    }

    pub fn cmp_lex(&self, other: &Partition) -> Ordering {
        self.cmp(other)
    }

    pub fn cmp_colex(&self, other: &Partition) -> Ordering {
        let m = self.len().max(other.len());
        for r in (1..=m).rev() {
            match self.part(r).cmp(&other.part(r)) {
                Ordering::Equal => {}
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Adds the given parts, in any order.
    pub fn with_parts(&self, extra: &[u32]) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(extra);
        Partition::from_unsorted(parts)
    }

    pub fn intersect(&self, other: &Partition) -> Partition {
        let mut rest = other.0.clone();
        let mut out = Vec::new();
        for &a in &self.0 {
            if let Some(pos) = rest.iter().position(|&b| b == a) {
                rest.swap_remove(pos);
                out.push(a);
            }
        }
        Partition(out)
    }

    /// Deletes one copy of each part of `other`, which must be strict.
    pub fn subtract(&self, other: &Partition) -> Result<Partition> {
        if !other.is_strict() {
            return Err(Error::MalformedPartition(format!("{other} is not strict")));
        }
        self.without_parts(&other.0)
    }

    /// Deletes one copy of each listed integer.
    pub fn without_parts(&self, parts: &[u32]) -> Result<Partition> {
        let mut out = self.0.clone();
        for &a in parts {
            match out.iter().position(|&b| b == a) {
                Some(pos) => {
                    out.remove(pos);
                }
                None => return Err(Error::MissingPart(a)),
            }
        }
        Ok(Partition(out))
    }

    fn subtract_unchecked(&self, parts: &[u32]) -> Partition {
        self.without_parts(parts).expect("parts present")
    }

    /// Number of parts strictly between `x` and `y`.
    pub fn count_between(&self, x: i64, y: i64) -> u32 {
        self.0
            .iter()
            .filter(|&&a| x < a as i64 && (a as i64) < y)
            .count() as u32
    }

    /// Number of parts strictly between 0 and h.
    pub fn gamma(&self, p: HParams) -> u32 {
        self.count_between(0, p.h() as i64)
    }

    pub fn is_staircase(&self) -> bool {
        let l = self.len() as u32;
        self.0.iter().enumerate().all(|(r, &a)| a == l - r as u32)
    }

    pub fn staircase(l: u32) -> Partition {
        Partition((1..=l).rev().collect())
    }
}

/// True if the rows `a` above `b` cannot sit in an h-strict partition.
fn strict_violation(a: u32, b: u32, p: HParams) -> bool {
    a < b || (a == b && a > 0 && !a.is_multiple_of(p.h()))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(5,4,1)`, `5,4,1`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t).trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {x:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// A combinatorial block: h, an h-bar-core and a bar-weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub params: HParams,
    pub core: Partition,
    pub weight: u32,
}

impl BlockId {
    pub fn new(params: HParams, core: Partition, weight: u32) -> Result<Self> {
        if !core.is_bar_core(params) {
            return Err(Error::NotACore(core));
        }
        Ok(BlockId { params, core, weight })
    }

    /// Size of the partitions in the block.
    pub fn size(&self) -> u32 {
        self.core.size() + self.params.h() * self.weight
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        lam.size() == self.size()
            && lam.is_h_strict(self.params)
            && lam.bar_core(self.params) == self.core
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h={} core={} weight={}", self.params.h(), self.core, self.weight)
    }
}

/// All h-strict partitions of `m`, in increasing lexicographic order.
///
/// Fails once more than `limit` partitions have been produced.
pub fn enumerate_h_strict(m: u32, p: HParams, limit: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(m, m, p, &mut cur, &mut out, limit, &|_| true)?;
    out.reverse();
    Ok(out)
}

/// All partitions of a block, in increasing lexicographic order.
pub fn enumerate_block(b: &BlockId, limit: usize) -> Result<Vec<Partition>> {
    let p = b.params;
    let mut target = b.core.h_content(p);
    for (i, t) in target.iter_mut().enumerate() {
        *t += b.weight * if i as u32 == p.n() { 1 } else { 2 };
    }
    let m = b.size();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let keep = |lam: &Partition| lam.h_content(p) == target;
    gen(m, m, p, &mut cur, &mut out, limit, &keep)?;
    out.reverse();
    debug_assert!(out.iter().all(|l| l.bar_core(p) == b.core));
    Ok(out)
}

/// Depth-first generation in decreasing lexicographic order.
fn gen(
    rest: u32,
    max: u32,
    p: HParams,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    limit: usize,
    keep: &dyn Fn(&Partition) -> bool,
) -> Result<()> {
    if rest == 0 {
        let lam = Partition(cur.clone());
        if keep(&lam) {
            if out.len() >= limit {
                return Err(Error::ResourceLimit(format!("more than {limit} partitions")));
            }
            out.push(lam);
        }
        return Ok(());
    }
    for a in (1..=rest.min(max)).rev() {
        if cur.last() == Some(&a) && a % p.h() != 0 {
            continue;
        }
        cur.push(a);
        gen(rest - a, a, p, cur, out, limit, keep)?;
        cur.pop();
    }
    Ok(())
}

/// All h-bar-cores of size at most `max_size`, sorted by size then lex order.
pub fn all_cores(p: HParams, max_size: u32) -> Vec<Partition> {
    let mut found = BTreeSet::new();
    for m in 0..=max_size {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let keep = |lam: &Partition| lam.is_strict() && lam.is_bar_core(p);
        gen(m, m, p, &mut cur, &mut out, usize::MAX, &keep).expect("no limit");
        for c in out {
            found.insert((c.size(), c));
        }
    }
    found.into_iter().map(|(_, c)| c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hp(h: u32) -> HParams {
        HParams::new(h).unwrap()
    }

    #[test]
    fn rejects_even_or_small_h() {
        assert_eq!(HParams::new(4), Err(Error::InvalidH(4)));
        assert_eq!(HParams::new(1), Err(Error::InvalidH(1)));
        assert_eq!(hp(7).n(), 3);
    }

    #[test]
    fn residue_row_matches_diagram() {
        let p = hp(5);
        let row: String = (1..=11).map(|c| char::from(b'0' + p.residue(c) as u8)).collect();
        assert_eq!(row, "01210012100");
    }

    #[test]
    fn strictness() {
        assert!(pt("(5,3,2)").is_strict());
        assert!(!pt("(3,3,2)").is_strict());
        assert!(Partition::empty().is_strict());
        assert!(pt("(3,3,2)").is_h_strict(hp(3)));
        assert!(!pt("(4,4)").is_h_strict(hp(3)));
    }

    #[test]
    fn three_strict_partitions_of_eight() {
        let all = enumerate_h_strict(8, hp(3), 1000).unwrap();
        let names: Vec<String> = all.iter().map(|x| format!("{x}")).collect();
        assert_eq!(
            names,
            ["(3,3,2)", "(4,3,1)", "(5,2,1)", "(5,3)", "(6,2)", "(7,1)", "(8)"]
        );
        let restricted: Vec<String> = all
            .iter()
            .filter(|x| x.is_restricted(hp(3)).unwrap())
            .map(|x| format!("{x}"))
            .collect();
        assert_eq!(restricted, ["(3,3,2)", "(4,3,1)", "(5,2,1)"]);
    }

    #[test]
    fn restricted_needs_h_strict() {
        assert!(pt("(4,4)").is_restricted(hp(3)).is_err());
        assert!(!pt("(6,5)").is_restricted(hp(5)).unwrap());
    }

    #[test]
    fn removable_and_addable_examples() {
        let p = hp(5);
        let lam = pt("(11,8,6,5,5)");
        let rem: Vec<(u32, u32)> = lam.removable_nodes(0, p).iter().map(|x| (x.row, x.col)).collect();
        assert_eq!(rem, vec![(5, 5), (3, 6), (1, 10), (1, 11)]);
        let add: Vec<(u32, u32)> = lam.addable_nodes(1, p).iter().map(|x| (x.row, x.col)).collect();
        assert_eq!(add, vec![(3, 7), (2, 9), (1, 12)]);
        let add: Vec<(u32, u32)> = pt("(5,4)").addable_nodes(0, p).iter().map(|x| (x.row, x.col)).collect();
        assert_eq!(add, vec![(3, 1), (2, 5), (1, 6)]);
        assert_eq!(Partition::empty().addable_nodes(0, p), vec![Node::new(1, 1)]);
        assert!(Partition::empty().removable_nodes(2, p).is_empty());
    }

    #[test]
    fn content_of_worked_example() {
        assert_eq!(pt("(11,8,6,5,5)").h_content(hp(5)), vec![15, 13, 7]);
        assert_eq!(Partition::empty().h_content(hp(5)), vec![0, 0, 0]);
    }

    #[test]
    fn cores_and_weights() {
        let p = hp(5);
        assert_eq!(pt("(9,6,3,1)").bar_core(p), pt("(3,1)"));
        assert_eq!(pt("(9,6,3,1)").bar_weight(p), 3);
        assert_eq!(pt("(15,11,5,4,2,1)").bar_core(hp(9)), pt("(11,6,2,1)"));
        assert!(pt("(3,1)").remove_h_bar_all(p).is_empty());
        assert!(pt("(4,2)").remove_h_bar_all(hp(7)).is_empty());
    }

    #[test]
    fn bar_removal_records() {
        let p = hp(5);
        assert_eq!(pt("(9,6,3,1)").remove_h_bar_all(p), vec![(pt("(6,4,3,1)"), 9)]);
        let mut got = pt("(8,3,2)").remove_h_bar_all(p);
        got.sort();
        assert_eq!(got, vec![(pt("(3,3,2)"), 8), (pt("(8)"), 3)].into_iter().filter(|(q, _)| q.is_h_strict(p)).collect::<Vec<_>>());
        let got = pt("(5,5,1)").remove_h_bar_all(p);
        assert_eq!(got, vec![(pt("(5,1)"), 5)]);
    }

    #[test]
    fn orders() {
        let a = pt("(6,4,2,1)");
        let b = pt("(7,4,2)");
        assert_eq!(a.dominance(&b).unwrap(), Dominance::Less);
        assert_eq!(a.dominance(&a).unwrap(), Dominance::Equal);
        assert_eq!(
            pt("(3,3,1,1)").dominance(&pt("(4,1,1,1,1,1)")),
            Err(Error::SizeMismatch { left: 8, right: 9 })
        );
        assert_eq!(pt("(3,3,1,1)").dominance(&pt("(4,1,1,1,1)")).unwrap(), Dominance::Incomparable);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert_eq!(a.cmp_colex(&b), Ordering::Less);
        assert_eq!(pt("(5,1)").cmp_colex(&pt("(4,2)")), Ordering::Greater);
    }

    #[test]
    fn set_operations() {
        assert_eq!(pt("(4,2)").union(&pt("(9)")), pt("(9,4,2)"));
        assert_eq!(pt("(5,3)").intersect(&pt("(5,5,2)")), pt("(5)"));
        assert_eq!(pt("(9,4,2)").subtract(&pt("(9)")).unwrap(), pt("(4,2)"));
        assert_eq!(pt("(9,4,2)").subtract(&pt("(3)")), Err(Error::MissingPart(3)));
    }

    #[test]
    fn counting_between() {
        assert_eq!(pt("(4,2)").gamma(hp(7)), 2);
        assert_eq!(Partition::empty().gamma(hp(7)), 0);
        assert_eq!(pt("(11,6,2,1)").count_between(0, 9), 3);
    }

    #[test]
    fn block_of_weight_one() {
        let b = BlockId::new(hp(7), pt("(4,2)"), 1).unwrap();
        let got = enumerate_block(&b, 100).unwrap();
        assert_eq!(got, vec![pt("(6,4,2,1)"), pt("(7,4,2)"), pt("(9,4)"), pt("(11,2)")]);
        let b0 = BlockId::new(hp(7), pt("(4,2)"), 0).unwrap();
        assert_eq!(enumerate_block(&b0, 100).unwrap(), vec![pt("(4,2)")]);
        assert!(BlockId::new(hp(5), pt("(4,1)"), 1).is_err());
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(enumerate_h_strict(20, hp(3), 5), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(pt("()"), Partition::empty());
        assert_eq!(format!("{}", pt(" 5, 4 ,1")), "(5,4,1)");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(a)".parse::<Partition>().is_err());
    }
}
