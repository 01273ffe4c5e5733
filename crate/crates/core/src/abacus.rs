//! The symmetric abacus with runners `-n..=n`.
//!
//! Position `x` sits on runner `x mod h` (taken in `-n..=n`). A partition
//! puts black beads at its parts and at every negative position except the
//! negatives of its parts; position 0 holds a white bead that never moves.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{violation, Error, Result};
use crate::partitions::{BlockId, HParams, Partition};

/// An abacus display, stored as its difference from the vacuum (all
/// negative positions occupied, nothing else).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbacusDisplay {
    params: HParams,
    deviation: BTreeMap<i64, i32>,
}

impl AbacusDisplay {
    pub fn from_partition(lam: &Partition, p: HParams) -> Result<Self> {
        lam.require_h_strict(p)?;
        let mut deviation = BTreeMap::new();
        for &a in lam.parts() {
            *deviation.entry(a as i64).or_insert(0) += 1;
            *deviation.entry(-(a as i64)).or_insert(0) -= 1;
        }
        Ok(AbacusDisplay { params: p, deviation })
    }

    pub fn params(&self) -> HParams {
        self.params
    }

    /// Number of beads at `pos`. At `-ah` a negative value counts the extra
    /// vacancies left by a repeated part `ah`.
    pub fn beads_at(&self, pos: i64) -> i32 {
        let vacuum = i32::from(pos < 0);
        vacuum + self.deviation.get(&pos).copied().unwrap_or(0)
    }

    pub fn is_occupied(&self, pos: i64) -> bool {
        pos != 0 && self.beads_at(pos) > 0
    }

    pub fn to_partition(&self) -> Result<Partition> {
        let mut parts = Vec::new();
        for (&pos, &d) in &self.deviation {
            if pos > 0 {
                if d < 0 {
                    return Err(Error::Parse(alloc::format!("negative bead count at {pos}")));
                }
                if self.deviation.get(&-pos).copied().unwrap_or(0) != -d {
                    return Err(Error::Parse(alloc::format!("asymmetric display at {pos}")));
                }
                parts.extend(core::iter::repeat_n(pos as u32, d as usize));
            } else if pos < 0 && !self.deviation.contains_key(&-pos) && d != 0 {
                return Err(Error::Parse(alloc::format!("asymmetric display at {pos}")));
            }
        }
        let lam = Partition::from_unsorted(parts);
        lam.require_h_strict(self.params)?;
        Ok(lam)
    }

    /// Net bead surplus on each runner, indexed `0..h` for runners `-n..=n`.
    pub fn charges(&self) -> Vec<i32> {
        let p = self.params;
        let mut out = alloc::vec![0i32; p.h() as usize];
        for (&pos, &d) in &self.deviation {
            out[(p.runner(pos) + p.n() as i32) as usize] += d;
        }
        out
    }

    /// The display obtained by pushing every bead up its runner.
    pub fn core(&self) -> Partition {
        let p = self.params;
        let (h, n) = (p.h(), p.n());
        let charges = self.charges();
        let mut parts = Vec::new();
        for r in 1..=n {
            let c = charges[(r + n) as usize];
            let (start, count) = if c >= 0 { (r, c as u32) } else { (h - r, c.unsigned_abs()) };
            parts.extend((0..count).map(|k| start + k * h));
        }
        Partition::from_unsorted(parts)
    }

    /// Every bead has a bead directly above it on its runner.
    pub fn is_flush(&self) -> bool {
        let h = self.params.h() as i64;
        self.deviation
            .keys()
            .flat_map(|&x| [x, x + h])
            .chain(core::iter::once(h))
            .filter(|&x| self.is_occupied(x))
            .all(|x| x != h && self.beads_at(x - h) >= self.beads_at(x))
    }

    /// Renders rows of positions from `-n` at the top-left, `b` for a bead,
    /// `n` for a gap, `x` for the origin and a digit for a repeated bead.
    pub fn render(&self) -> String {
        let p = self.params;
        let (h, n) = (p.h() as i64, p.n() as i64);
        let max = self.deviation.keys().copied().max().unwrap_or(0).max(0);
        let mut rows = Vec::new();
        let mut k = -(max + h) / h;
        while k * h - n <= max {
            let row: String = (k * h - n..=k * h + n)
                .map(|x| match self.beads_at(x) {
                    _ if x == 0 => 'x',
                    b if b > 1 => char::from_digit(b as u32, 10).unwrap_or('*'),
                    1 => 'b',
                    _ => 'n',
                })
                .collect();
            rows.push(row);
            k += 1;
        }
        rows.join("\n")
    }
}

/// The bar-core of an h-strict partition, read off the abacus.
pub fn core_of(lam: &Partition, p: HParams) -> Partition {
    let mut charges = alloc::vec![0i32; p.n() as usize + 1];
    for &a in lam.parts() {
        let r = p.runner(a as i64);
        if r > 0 {
            charges[r as usize] += 1;
        } else if r < 0 {
            charges[r.unsigned_abs() as usize] -= 1;
        }
    }
    let h = p.h();
    let mut parts = Vec::new();
    for (r, &c) in charges.iter().enumerate().skip(1) {
        let r = r as u32;
        let (start, count) = if c >= 0 { (r, c as u32) } else { (h - r, c.unsigned_abs()) };
        parts.extend((0..count).map(|k| start + k * h));
    }
    Partition::from_unsorted(parts)
}

/// The two integers recorded when stripping a weight-2 partition to its core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarPositions {
    pub lo: u32,
    pub hi: u32,
}

/// The abacus notation of a bar-weight-2 partition relative to its core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbacusTag {
    /// `<i,j>` with `i < j`: the bars sit on runners `±i` and `±j`.
    Pair(u32, u32),
    /// `<i>` or `<-i>`.
    Single(i32),
    /// `<0,0>`: the partition is the core with `(h,h)` added.
    DoubleZero,
}

impl fmt::Display for AbacusTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbacusTag::Pair(i, j) => write!(f, "<{i},{j}>"),
            AbacusTag::Single(i) => write!(f, "<{i}>"),
            AbacusTag::DoubleZero => write!(f, "<0,0>"),
        }
    }
}

/// Bar positions of `lam`, checked against every order of removing the two bars.
pub fn bar_positions(lam: &Partition, b: &BlockId) -> Result<BarPositions> {
    if b.weight != 2 {
        return Err(Error::WrongWeight { expected: 2, found: b.weight });
    }
    if !b.contains(lam) {
        return Err(Error::Unsupported(alloc::format!("{lam} is not in block {b}")));
    }
    let p = b.params;
    let mut seen: Option<BarPositions> = None;
    for (mid, x) in lam.remove_h_bar_all(p) {
        for (end, y) in mid.remove_h_bar_all(p) {
            if end != b.core {
                return Err(violation!("{lam} reached {end} instead of core {}", b.core));
            }
            let pos = BarPositions { lo: x.min(y), hi: x.max(y) };
            match seen {
                None => seen = Some(pos),
                Some(s) if s != pos => {
                    return Err(violation!("bar positions of {lam} depend on removal order"));
                }
                Some(_) => {}
            }
        }
    }
    seen.ok_or_else(|| violation!("no way to remove two bars from {lam}"))
}

/// The abacus notation `<..>` of a weight-2 partition.
pub fn abacus_notation(lam: &Partition, b: &BlockId) -> Result<AbacusTag> {
    let BarPositions { lo, hi } = bar_positions(lam, b)?;
    let p = b.params;
    let h = p.h();
    let i = p.runner(lo as i64);
    let j = p.runner(hi as i64);
    if i != j && i != -j {
        let (x, y) = (i.unsigned_abs(), j.unsigned_abs());
        return Ok(AbacusTag::Pair(x.min(y), x.max(y)));
    }
    if hi == lo + h {
        return Ok(AbacusTag::Single(if lam.contains(lo) { -i } else { i }));
    }
    if lo == hi {
        return Ok(AbacusTag::DoubleZero);
    }
    if lo + hi == 2 * h {
        return Ok(AbacusTag::Single(if lam.contains(h - lo) { i } else { -i }));
    }
    Err(violation!("{lam} has bar positions {lo},{hi} fitting no abacus case"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hp(h: u32) -> HParams {
        HParams::new(h).unwrap()
    }

    fn block_of(lam: &Partition, p: HParams) -> BlockId {
        BlockId::new(p, lam.bar_core(p), lam.bar_weight(p)).unwrap()
    }

    #[test]
    fn display_of_worked_example() {
        let p = hp(9);
        let lam = pt("(15,11,5,4,2,1)");
        let d = AbacusDisplay::from_partition(&lam, p).unwrap();
        for x in -30..=30i64 {
            let expect = if x > 0 {
                lam.contains(x as u32)
            } else {
                x < 0 && !lam.contains(x.unsigned_abs() as u32)
            };
            assert_eq!(d.is_occupied(x), expect, "position {x}");
        }
        assert_eq!(d.to_partition().unwrap(), lam);
        assert_eq!(d.core(), pt("(11,6,2,1)"));
        assert_eq!(core_of(&lam, p), pt("(11,6,2,1)"));
        assert!(!d.is_flush());
        assert!(AbacusDisplay::from_partition(&pt("(11,6,2,1)"), p).unwrap().is_flush());
    }

    #[test]
    fn repeated_parts_on_runner_zero() {
        let d = AbacusDisplay::from_partition(&pt("(5,5)"), hp(5)).unwrap();
        assert_eq!(d.beads_at(5), 2);
        assert_eq!(d.beads_at(-5), -1);
        assert_eq!(d.to_partition().unwrap(), pt("(5,5)"));
        let e = AbacusDisplay::from_partition(&Partition::empty(), hp(5)).unwrap();
        assert!(e.is_occupied(-1) && !e.is_occupied(1) && !e.is_occupied(0));
    }

    #[test]
    fn worked_bar_positions_and_tags() {
        let p = hp(7);
        for (s, tag) in [("(15,9,2)", AbacusTag::Single(1)), ("(15,9,8,2)", AbacusTag::Single(-1))] {
            let lam = pt(s);
            let b = block_of(&lam, p);
            assert_eq!(bar_positions(&lam, &b).unwrap(), BarPositions { lo: 8, hi: 15 });
            assert_eq!(abacus_notation(&lam, &b).unwrap(), tag);
        }
        let lam = pt("(10,5,4)");
        let b = block_of(&lam, p);
        assert_eq!(bar_positions(&lam, &b).unwrap(), BarPositions { lo: 4, hi: 10 });
    }

    #[test]
    fn double_zero() {
        let p = hp(5);
        let lam = pt("(5,5,1)");
        let b = block_of(&lam, p);
        assert_eq!(bar_positions(&lam, &b).unwrap(), BarPositions { lo: 5, hi: 5 });
        assert_eq!(abacus_notation(&lam, &b).unwrap(), AbacusTag::DoubleZero);
    }

    #[test]
    fn wrong_weight_is_rejected() {
        let p = hp(5);
        let lam = pt("(6)");
        let b = block_of(&lam, p);
        assert_eq!(bar_positions(&lam, &b), Err(Error::WrongWeight { expected: 2, found: 1 }));
    }

    #[test]
    fn render_marks_origin() {
        let d = AbacusDisplay::from_partition(&pt("(3,1)"), hp(3)).unwrap();
        assert!(d.render().contains('x'));
    }
}
