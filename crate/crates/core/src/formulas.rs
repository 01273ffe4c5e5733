//! Closed forms for q-decomposition numbers of blocks of bar-weight 0, 1 and 2.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::abacus::{bar_positions, BarPositions};
use crate::canonical::DEFAULT_LIMIT;
use crate::error::{violation, Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::matrix::CanonicalBasisMatrix;
use crate::partitions::{enumerate_block, BlockId, Dominance, HParams, Partition};

/// The weight-1 partitions `tau(0) < ... < tau(n)` in dominance order.
pub fn weight1_chain(core: &Partition, p: HParams) -> Result<Vec<Partition>> {
    let b = BlockId::new(p, core.clone(), 1)?;
    let h = p.h();
    let mut out = Vec::new();
    for &a in core.parts() {
        if !core.contains(a + h) {
            out.push(core.without_parts(&[a])?.with_parts(&[a + h]));
        }
    }
    out.push(core.with_parts(&[h]));
    for c in p.n() + 1..h {
        if !core.contains(c) && !core.contains(h - c) {
            out.push(core.with_parts(&[c, h - c]));
        }
    }
    out.sort();
    if out.len() != p.n() as usize + 1 {
        return Err(violation!("weight-1 block of {core} has {} partitions", out.len()));
    }
    for (k, w) in out.windows(2).enumerate() {
        if w[0].dominance(&w[1])? != Dominance::Less {
            return Err(violation!("{} and {} are not in dominance order", w[0], w[1]));
        }
        if !w[0].is_restricted(p)? {
            return Err(violation!("tau({k}) = {} is not restricted", w[0]));
        }
    }
    if let Some(top) = out.last() {
        if top.is_restricted(p)? {
            return Err(violation!("the most dominant partition {top} is restricted"));
        }
    }
    debug_assert!(out.iter().all(|l| b.contains(l)));
    Ok(out)
}

/// The weight-1 matrix: `q` or `q^2` just below the diagonal.
pub fn weight1_matrix(core: &Partition, p: HParams) -> Result<CanonicalBasisMatrix> {
    let rows = weight1_chain(core, p)?;
    let cols: Vec<Partition> = rows[..rows.len() - 1].to_vec();
    let entries = rows
        .iter()
        .enumerate()
        .map(|(r, lam)| {
            (0..cols.len())
                .map(|s| {
                    if r == s {
                        LaurentPoly::one()
                    } else if r == s + 1 {
                        LaurentPoly::q_pow(if lam.contains(p.h()) { 1 } else { 2 })
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    CanonicalBasisMatrix::new(BlockId::new(p, core.clone(), 1)?, rows, cols, entries)
}

/// The 1x1 identity matrix of a core.
pub fn weight0_matrix(b: &BlockId) -> Result<CanonicalBasisMatrix> {
    if b.weight != 0 {
        return Err(Error::WrongWeight { expected: 0, found: b.weight });
    }
    let rows = alloc::vec![b.core.clone()];
    CanonicalBasisMatrix::new(b.clone(), rows.clone(), rows, alloc::vec![alloc::vec![LaurentPoly::one()]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Black,
    White,
    Grey,
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Black => "black",
            Colour::White => "white",
            Colour::Grey => "grey",
        })
    }
}

/// Bar positions, leg lengths, `∂` and colour of a weight-2 partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight2Profile {
    pub lambda: Partition,
    pub barpos: BarPositions,
    /// Leg lengths for `lo` and `hi`, in that order.
    pub legs: (u32, u32),
    pub ddd: u32,
    pub colour: Colour,
}

impl Weight2Profile {
    pub fn new(lam: &Partition, b: &BlockId) -> Result<Self> {
        let barpos = bar_positions(lam, b)?;
        let p = b.params;
        let h = p.h();
        let gamma = b.core.gamma(p);
        let shared = |x: i64, y: i64| -> u32 {
            b.core
                .parts()
                .iter()
                .filter(|&&a| x < a as i64 && (a as i64) < y && lam.contains(a))
                .count() as u32
        };
        let leg = |c: u32| -> u32 {
            let c64 = c as i64;
            if c >= h {
                shared(c64 - h as i64, c64)
            } else {
                h - c + shared(h as i64 - c64, c64)
            }
        };
        let BarPositions { lo, hi } = barpos;
        let legs = (leg(lo), leg(hi));
        let ddd = legs.0.abs_diff(legs.1);
        let colour = match ddd {
            0 if lo != hi && (hi == lo + h || lo + hi == 2 * h) => {
                let l = if hi >= 2 * h {
                    shared(hi as i64 - 2 * h as i64, hi as i64)
                } else {
                    2 * h - hi + shared(2 * h as i64 - hi as i64, hi as i64)
                };
                if matches!((l + 2 * gamma) % 4, 0 | 3) { Colour::Black } else { Colour::White }
            }
            0 => parity_colour(legs.0 + gamma),
            1 if hi > h => Colour::Grey,
            1 => parity_colour(legs.0.min(legs.1) + gamma),
            _ => Colour::Grey,
        };
        Ok(Weight2Profile { lambda: lam.clone(), barpos, legs, ddd, colour })
    }
}

fn parity_colour(x: u32) -> Colour {
    if x % 2 == 1 { Colour::Black } else { Colour::White }
}

pub fn leg_lengths(lam: &Partition, b: &BlockId) -> Result<(u32, u32)> {
    Ok(Weight2Profile::new(lam, b)?.legs)
}

pub fn ddd(lam: &Partition, b: &BlockId) -> Result<u32> {
    Ok(Weight2Profile::new(lam, b)?.ddd)
}

pub fn colour(lam: &Partition, b: &BlockId) -> Result<Colour> {
    Ok(Weight2Profile::new(lam, b)?.colour)
}

/// The six special partitions of a weight-2 block, where defined.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialSet {
    pub xx: Option<Partition>,
    pub shp: Option<Partition>,
    pub nat: Option<Partition>,
    pub flt: Option<Partition>,
    pub ppi: Option<Partition>,
    pub yy: Option<Partition>,
}

impl SpecialSet {
    /// Labelled members in the order xx, shp, nat, flt, ppi, yy.
    pub fn labelled(&self) -> impl Iterator<Item = (&'static str, &Partition)> {
        [
            ("xx", &self.xx),
            ("shp", &self.shp),
            ("nat", &self.nat),
            ("flt", &self.flt),
            ("ppi", &self.ppi),
            ("yy", &self.yy),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
    }

    pub fn label_of(&self, lam: &Partition) -> Option<&'static str> {
        self.labelled().find(|(_, v)| *v == lam).map(|(k, _)| k)
    }
}

pub fn special_partitions(core: &Partition, p: HParams) -> Result<SpecialSet> {
    if !core.is_bar_core(p) {
        return Err(Error::NotACore(core.clone()));
    }
    let (h, n) = (p.h(), p.n());
    let gamma = core.gamma(p);
    let t = |a: u32| core.contains(a);
    let free: Vec<u32> = (1..=n).filter(|&a| !t(a) && !t(h - a)).collect();
    let mut s = SpecialSet { nat: Some(core.with_parts(&[h, h])), ..SpecialSet::default() };
    if gamma + 2 <= n {
        let (a, b) = (free[0], free[1]);
        s.xx = Some(core.with_parts(&[h - a, h - b, b, a]));
    }
    if gamma < n {
        let a = free[0];
        s.shp = Some(core.with_parts(&[h, h - a, a]));
        let a = (h + 1..2 * h)
            .find(|&a| !t(a) && !t(2 * h - a))
            .ok_or_else(|| violation!("no flat partition for {core}"))?;
        s.flt = Some(core.with_parts(&[a, 2 * h - a]));
    }
    let with_h = core.with_parts(&[h]);
    let a = (1..)
        .find(|&a| with_h.contains(a) && !t(a + h))
        .expect("parts are bounded");
    s.ppi = Some(with_h.with_parts(&[a + h]).without_parts(&[a])?);
    if gamma >= 1 {
        let bound = core.parts().first().copied().unwrap_or(0) + 2 * h + 1;
        let a = (h + 1..bound).find(|&a| !t(a) && t(a - h));
        let a = a.ok_or_else(|| violation!("no yy partition for {core}"))?;
        let b = (a + 1..bound)
            .find(|&b| !t(b) && (t(b - h) || b - h == a))
            .ok_or_else(|| violation!("no yy partition for {core}"))?;
        s.yy = Some(core.with_parts(&[b, a]).without_parts(&[b - h, a - h])?);
    }
    for (k, v) in s.labelled() {
        if !v.is_h_strict(p) || v.bar_core(p) != *core || v.size() != core.size() + 2 * h {
            return Err(violation!("special partition {k} = {v} is not in the weight-2 block of {core}"));
        }
    }
    Ok(s)
}

/// Which clause of the weight-0/1/2 formulas produced an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    Diagonal,
    Weight1Below,
    GenericChain,
    GenericPlus,
    NatToPpiChain,
    NatPpi,
    PpiToYyChain,
    NatYy,
    ShpNat,
    ShpToFltChain,
    ShpFlt,
    FltToPpiChain,
    ShpPpi,
    XxToShpChain,
    XxShp,
    XxNat,
    ShpToFltChainFromXx,
    XxFlt,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Diagonal => "diagonal",
            Clause::Weight1Below => "weight1:subdiagonal",
            Clause::GenericChain => "generic:mu<lam<mu+,|ddd|=1",
            Clause::GenericPlus => "generic:lam=mu+",
            Clause::NatToPpiChain => "nat:nat<lam<ppi,ddd=1",
            Clause::NatPpi => "nat:lam=ppi",
            Clause::PpiToYyChain => "nat:ppi<lam<yy,ddd=1",
            Clause::NatYy => "nat:lam=yy",
            Clause::ShpNat => "shp:lam=nat",
            Clause::ShpToFltChain => "shp:shp<lam<flt,ddd=2",
            Clause::ShpFlt => "shp:lam=flt",
            Clause::FltToPpiChain => "shp:flt<lam<ppi,ddd=1",
            Clause::ShpPpi => "shp:lam=ppi",
            Clause::XxToShpChain => "xx:xx<lam<shp,ddd=2",
            Clause::XxShp => "xx:lam=shp",
            Clause::XxNat => "xx:lam=nat",
            Clause::ShpToFltChainFromXx => "xx:shp<lam<flt,ddd=2",
            Clause::XxFlt => "xx:lam=flt",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One predicted entry of a column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub lambda: Partition,
    pub value: LaurentPoly,
    pub clause: Clause,
}

/// Profiles and special partitions of one weight-2 block, computed once.
#[derive(Debug, Clone)]
pub struct Weight2Block {
    block: BlockId,
    profiles: Vec<Weight2Profile>,
    special: SpecialSet,
}

impl Weight2Block {
    pub fn new(b: &BlockId) -> Result<Self> {
        Self::with_limit(b, DEFAULT_LIMIT)
    }

    pub fn with_limit(b: &BlockId, limit: usize) -> Result<Self> {
        if b.weight != 2 {
            return Err(Error::WrongWeight { expected: 2, found: b.weight });
        }
        let profiles = enumerate_block(b, limit)?
            .iter()
            .map(|lam| Weight2Profile::new(lam, b))
            .collect::<Result<Vec<_>>>()?;
        let special = special_partitions(&b.core, b.params)?;
        Ok(Weight2Block { block: b.clone(), profiles, special })
    }

    pub fn block(&self) -> &BlockId {
        &self.block
    }

    /// Profiles of all partitions in increasing lex order.
    pub fn profiles(&self) -> &[Weight2Profile] {
        &self.profiles
    }

    pub fn special(&self) -> &SpecialSet {
        &self.special
    }

    pub fn profile(&self, lam: &Partition) -> Result<&Weight2Profile> {
        self.profiles
            .binary_search_by(|x| x.lambda.cmp(lam))
            .map(|k| &self.profiles[k])
            .map_err(|_| Error::Unsupported(alloc::format!("{lam} is not in block {}", self.block)))
    }

    /// The least dominant `lam` strictly dominating `mu` with the same `∂` and colour.
    pub fn mu_plus(&self, mu: &Partition) -> Result<Partition> {
        let m = self.profile(mu)?;
        let mut best: Option<&Partition> = None;
        for x in &self.profiles {
            if x.ddd != m.ddd || x.colour != m.colour || x.lambda.dominance(mu)? != Dominance::Greater {
                continue;
            }
            best = match best {
                None => Some(&x.lambda),
                Some(y) => match x.lambda.dominance(y)? {
                    Dominance::Less => Some(&x.lambda),
                    Dominance::Greater => Some(y),
                    _ => return Err(violation!("candidates {y} and {} for {mu}+ are incomparable", x.lambda)),
                },
            };
        }
        best.cloned().ok_or_else(|| violation!("{mu} has no partner {mu}+"))
    }

    /// Predicted column `G(mu)`, each entry tagged with its clause.
    pub fn column_with_provenance(&self, mu: &Partition) -> Result<Vec<Entry>> {
        let p = self.block.params;
        if !mu.is_restricted(p)? {
            return Err(Error::Unsupported(alloc::format!("{mu} is not restricted")));
        }
        self.profile(mu)?;
        let sp = &self.special;
        let is = |s: &Option<Partition>| s.as_ref() == Some(mu);
        let mut out = alloc::vec![Entry { lambda: mu.clone(), value: LaurentPoly::one(), clause: Clause::Diagonal }];
        let mut push = |lam: &Partition, v: LaurentPoly, clause| {
            out.push(Entry { lambda: lam.clone(), value: v, clause })
        };
        let lp = |terms: &[(i32, i64)]| LaurentPoly::from_terms(terms.iter().copied());
        if is(&sp.nat) {
            let ppi = sp.ppi.as_ref();
            let yy = sp.yy.as_ref();
            for x in &self.profiles {
                let lam = &x.lambda;
                if Some(lam) == ppi {
                    push(lam, lp(&[(2, 1)]), Clause::NatPpi);
                } else if Some(lam) == yy {
                    push(lam, lp(&[(4, 1)]), Clause::NatYy);
                } else if x.ddd == 1 && between(mu, lam, ppi)? {
                    push(lam, lp(&[(1, 1), (3, 1)]), Clause::NatToPpiChain);
                } else if x.ddd == 1 && ppi.is_some() && between(ppi.unwrap(), lam, yy)? {
                    push(lam, lp(&[(2, 1)]), Clause::PpiToYyChain);
                }
            }
        } else if is(&sp.shp) {
            let (nat, flt, ppi) = (sp.nat.as_ref(), sp.flt.as_ref(), sp.ppi.as_ref());
            for x in &self.profiles {
                let lam = &x.lambda;
                if Some(lam) == nat {
                    push(lam, lp(&[(1, 1)]), Clause::ShpNat);
                } else if Some(lam) == flt {
                    push(lam, lp(&[(2, 1), (4, 1)]), Clause::ShpFlt);
                } else if Some(lam) == ppi {
                    push(lam, lp(&[(3, 1)]), Clause::ShpPpi);
                } else if x.ddd == 2 && between(mu, lam, flt)? {
                    push(lam, lp(&[(2, 1)]), Clause::ShpToFltChain);
                } else if x.ddd == 1 && flt.is_some() && between(flt.unwrap(), lam, ppi)? {
                    push(lam, lp(&[(2, 1)]), Clause::FltToPpiChain);
                }
            }
        } else if is(&sp.xx) {
            let (shp, nat, flt) = (sp.shp.as_ref(), sp.nat.as_ref(), sp.flt.as_ref());
            for x in &self.profiles {
                let lam = &x.lambda;
                if Some(lam) == shp {
                    push(lam, lp(&[(1, 1)]), Clause::XxShp);
                } else if Some(lam) == nat {
                    push(lam, lp(&[(2, 1)]), Clause::XxNat);
                } else if Some(lam) == flt {
                    push(lam, lp(&[(3, 1), (5, 1)]), Clause::XxFlt);
                } else if x.ddd == 2 && between(mu, lam, shp)? {
                    push(lam, lp(&[(1, 1)]), Clause::XxToShpChain);
                } else if x.ddd == 2 && shp.is_some() && between(shp.unwrap(), lam, flt)? {
                    push(lam, lp(&[(1, 1), (3, 1)]), Clause::ShpToFltChainFromXx);
                }
            }
        } else {
            let m = self.profile(mu)?;
            let plus = self.mu_plus(mu)?;
            let hits = |lam: &Partition| lam.contains(p.h()) || lam.contains(2 * p.h());
            let shift = if hits(mu) { 0 } else { 1 };
            for x in &self.profiles {
                let lam = &x.lambda;
                let s = if hits(lam) { shift } else { 0 };
                if *lam == plus {
                    push(lam, LaurentPoly::q_pow(4 - s), Clause::GenericPlus);
                } else if x.ddd.abs_diff(m.ddd) == 1 && between(mu, lam, Some(&plus))? {
                    push(lam, LaurentPoly::q_pow(2 - s), Clause::GenericChain);
                }
            }
        }
        out.sort_by(|a, b| a.lambda.cmp(&b.lambda));
        Ok(out)
    }

    pub fn column(&self, mu: &Partition) -> Result<FockVector> {
        let mut v = FockVector::zero(self.block.params);
        for e in self.column_with_provenance(mu)? {
            v.add_term(e.lambda, &e.value);
        }
        Ok(v)
    }

    pub fn matrix(&self) -> Result<CanonicalBasisMatrix> {
        let p = self.block.params;
        let rows: Vec<Partition> = self.profiles.iter().map(|x| x.lambda.clone()).collect();
        let mut cols = Vec::new();
        for lam in &rows {
            if lam.is_restricted(p)? {
                cols.push(lam.clone());
            }
        }
        let mut entries = alloc::vec![alloc::vec![LaurentPoly::zero(); cols.len()]; rows.len()];
        for (c, mu) in cols.iter().enumerate() {
            for e in self.column_with_provenance(mu)? {
                let r = rows.binary_search(&e.lambda).map_err(|_| violation!("{} left the block", e.lambda))?;
                entries[r][c] = e.value;
            }
        }
        CanonicalBasisMatrix::new(self.block.clone(), rows, cols, entries)
    }
}

/// `lo ◁ lam ◁ hi`, false when `hi` is undefined.
fn between(lo: &Partition, lam: &Partition, hi: Option<&Partition>) -> Result<bool> {
    let Some(hi) = hi else { return Ok(false) };
    Ok(lam.dominance(lo)? == Dominance::Greater && lam.dominance(hi)? == Dominance::Less)
}

pub fn mu_plus(mu: &Partition, b: &BlockId) -> Result<Partition> {
    Weight2Block::new(b)?.mu_plus(mu)
}

/// The weight-2 formula's prediction for `G(mu)`.
pub fn weight2_column(mu: &Partition, b: &BlockId) -> Result<FockVector> {
    Weight2Block::new(b)?.column(mu)
}

pub fn weight2_matrix(b: &BlockId) -> Result<CanonicalBasisMatrix> {
    Weight2Block::new(b)?.matrix()
}

/// The closed-form matrix for weight 0, 1 or 2.
pub fn formula_matrix(b: &BlockId) -> Result<CanonicalBasisMatrix> {
    match b.weight {
        0 => weight0_matrix(b),
        1 => weight1_matrix(&b.core, b.params),
        2 => weight2_matrix(b),
        w => Err(Error::Unsupported(alloc::format!("no closed form at weight {w}"))),
    }
}

/// Entry-by-entry differences between two matrices of the same block.
pub fn matrix_diff(a: &CanonicalBasisMatrix, b: &CanonicalBasisMatrix) -> Vec<String> {
    let mut out = Vec::new();
    if a.rows() != b.rows() || a.cols() != b.cols() {
        out.push(String::from("row or column labels differ"));
        return out;
    }
    for (r, lam) in a.rows().iter().enumerate() {
        for (c, mu) in a.cols().iter().enumerate() {
            let (x, y) = (&a.entries()[r][c], &b.entries()[r][c]);
            if x != y {
                out.push(alloc::format!("d({lam},{mu}): {x} vs {y}"));
            }
        }
    }
    out
}
