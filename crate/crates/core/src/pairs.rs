//! `[w:k]`-pairs of blocks, their exceptional partitions, and checks of the
//! relations between the canonical bases on either side.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::abacus::{abacus_notation, AbacusTag};
use crate::canonical::{psi, Oracle};
use crate::error::{violation, Error, Result};
use crate::fock::FockVector;
use crate::formulas::{special_partitions, Weight2Block};
use crate::laurent::LaurentPoly;
use crate::matrix::CanonicalBasisMatrix;
use crate::partitions::{enumerate_block, BlockId, Dominance, HParams, Partition};

/// Where the single addable i-node of a `[2:1]` source core sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// Column `ah+i+1` with `a >= 1`.
    A,
    /// Column `i+1`.
    B,
    /// Column `ah-i`.
    C,
    /// Residue 0.
    ZeroResidue,
    /// Nonzero residue with `k >= 2`, or residue `n`.
    Generic,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::A => "A",
            PairKind::B => "B",
            PairKind::C => "C",
            PairKind::ZeroResidue => "zero-residue",
            PairKind::Generic => "generic",
        })
    }
}

/// Blocks with cores `sigma` and `tau = psi_i(sigma)`, where `sigma` has `k`
/// addable i-nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDescriptor {
    pub params: HParams,
    pub sigma: Partition,
    pub tau: Partition,
    pub residue: u32,
    pub k: u32,
    pub kind: PairKind,
}

impl fmt::Display for PairDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "h={} {} -> {} residue {} k={} ({})",
            self.params.h(),
            self.sigma,
            self.tau,
            self.residue,
            self.k,
            self.kind
        )
    }
}

/// One descriptor per residue at which `sigma` has an addable node.
pub fn detect_pairs(sigma: &Partition, p: HParams) -> Result<Vec<PairDescriptor>> {
    if !sigma.is_bar_core(p) {
        return Err(Error::NotACore(sigma.clone()));
    }
    let (h, n) = (p.h(), p.n());
    let mut out = Vec::new();
    for i in 0..=n {
        let addable = sigma.addable_nodes(i, p);
        if addable.is_empty() {
            continue;
        }
        if !sigma.removable_nodes(i, p).is_empty() {
            return Err(violation!("core {sigma} has addable and removable {i}-nodes"));
        }
        let tau = psi(sigma, i, p)?;
        if !tau.is_bar_core(p) {
            return Err(violation!("psi_{i}({sigma}) = {tau} is not a core"));
        }
        let k = addable.len() as u32;
        let kind = if i == 0 {
            PairKind::ZeroResidue
        } else if k == 1 && i < n {
            let c = addable[0].col;
            if c == i + 1 {
                PairKind::B
            } else if c % h == i + 1 {
                PairKind::A
            } else if c % h == h - i {
                PairKind::C
            } else {
                return Err(violation!("addable {i}-node of {sigma} in column {c}"));
            }
        } else {
            PairKind::Generic
        };
        out.push(PairDescriptor { params: p, sigma: sigma.clone(), tau, residue: i, k, kind });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Target,
}

/// No removable i-nodes on the source side, no addable i-nodes on the target side.
pub fn is_unexceptional(lam: &Partition, d: &PairDescriptor, side: Side) -> bool {
    let (i, p) = (d.residue, d.params);
    match side {
        Side::Source => lam.removable_nodes(i, p).is_empty(),
        Side::Target => lam.addable_nodes(i, p).is_empty(),
    }
}

/// The exceptional partitions on both sides, each in dominance order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalTriples {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub alpha_hat: Partition,
    pub beta_hat: Partition,
    pub gamma_hat: Partition,
}

fn supported_shape(d: &PairDescriptor) -> bool {
    (d.k == 1 && d.residue >= 1 && d.residue < d.params.n()) || (d.k == 3 && d.residue == 0)
}

fn expected_tags(d: &PairDescriptor) -> Result<[AbacusTag; 6]> {
    use AbacusTag::{Pair, Single};
    let i = d.residue as i32;
    let u = d.residue;
    Ok(match d.kind {
        PairKind::A => [Single(-i), Pair(u, u + 1), Single(i + 1), Single(i), Pair(u, u + 1), Single(-i - 1)],
        PairKind::B => [Pair(u, u + 1), Single(-i), Single(i + 1), Single(i), Single(-i - 1), Pair(u, u + 1)],
        PairKind::C => [Single(i + 1), Pair(u, u + 1), Single(-i), Single(-i - 1), Pair(u, u + 1), Single(i)],
        PairKind::ZeroResidue if d.k == 3 => {
            [Single(1), Pair(0, 1), Single(0), Single(0), Pair(0, 1), Single(-1)]
        }
        _ => return Err(Error::Unsupported(alloc::format!("no exceptional table for {d}"))),
    })
}

fn sorted_chain(mut v: Vec<Partition>) -> Result<Vec<Partition>> {
    v.sort();
    for w in v.windows(2) {
        if w[0].dominance(&w[1])? != Dominance::Less {
            return Err(violation!("exceptional {} and {} are not in dominance order", w[0], w[1]));
        }
    }
    Ok(v)
}

/// Exceptional partitions of both weight-`w` blocks, found by scanning.
pub fn scan_exceptional(d: &PairDescriptor, w: u32, limit: usize) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let p = d.params;
    let src = enumerate_block(&BlockId::new(p, d.sigma.clone(), w)?, limit)?;
    let dst = enumerate_block(&BlockId::new(p, d.tau.clone(), w)?, limit)?;
    let a = src.into_iter().filter(|l| !is_unexceptional(l, d, Side::Source)).collect();
    let b = dst.into_iter().filter(|l| !is_unexceptional(l, d, Side::Target)).collect();
    Ok((a, b))
}

/// The triples of a `[2:1]` pair of nonzero residue or a `[2:3]` pair of
/// residue 0, checked against their abacus notation and against `psi_i`.
pub fn exceptional_triples(d: &PairDescriptor, limit: usize) -> Result<ExceptionalTriples> {
    if !supported_shape(d) {
        return Err(Error::Unsupported(alloc::format!("no exceptional triples for {d}")));
    }
    let p = d.params;
    let (src, dst) = scan_exceptional(d, 2, limit)?;
    let src = sorted_chain(src)?;
    let dst = sorted_chain(dst)?;
    if src.len() != 3 || dst.len() != 3 {
        return Err(violation!("{d} has {} and {} exceptional partitions", src.len(), dst.len()));
    }
    let t = ExceptionalTriples {
        alpha: src[0].clone(),
        beta: src[1].clone(),
        gamma: src[2].clone(),
        alpha_hat: dst[0].clone(),
        beta_hat: dst[1].clone(),
        gamma_hat: dst[2].clone(),
    };
    let bs = BlockId::new(p, d.sigma.clone(), 2)?;
    let bt = BlockId::new(p, d.tau.clone(), 2)?;
    let found = [
        abacus_notation(&t.alpha, &bs)?,
        abacus_notation(&t.beta, &bs)?,
        abacus_notation(&t.gamma, &bs)?,
        abacus_notation(&t.alpha_hat, &bt)?,
        abacus_notation(&t.beta_hat, &bt)?,
        abacus_notation(&t.gamma_hat, &bt)?,
    ];
    let expected = expected_tags(d)?;
    if found != expected {
        return Err(violation!("{d}: exceptional tags {found:?}, expected {expected:?}"));
    }
    let i = d.residue;
    for (x, y) in [(&t.alpha, &t.alpha_hat), (&t.beta, &t.gamma_hat), (&t.gamma, &t.beta_hat)] {
        let got = psi(x, i, p)?;
        if got != *y {
            return Err(violation!("psi_{i}({x}) = {got}, expected {y}"));
        }
    }
    Ok(t)
}

fn poly(exps: &[i32]) -> LaurentPoly {
    LaurentPoly::from_terms(exps.iter().map(|&e| (e, 1)))
}

type Row = [&'static [i32]; 6];

/// Rows of `(d_alpha, d_beta, d_gamma | d_alpha^, d_beta^, d_gamma^)` for `[2:1]` pairs.
const TABLE_21: [Row; 12] = [
    [&[], &[], &[], &[], &[], &[]],
    [&[], &[], &[0], &[], &[0], &[2]],
    [&[], &[0], &[2], &[], &[], &[0]],
    [&[], &[2], &[], &[2], &[], &[2]],
    [&[0], &[2], &[4], &[0], &[2], &[4]],
    [&[2], &[], &[2], &[], &[2], &[]],
    [&[2], &[4], &[], &[4], &[], &[]],
    [&[4], &[], &[], &[2], &[4], &[]],
    [&[], &[1, 3], &[], &[1, 3], &[], &[1, 3]],
    [&[2], &[2, 4], &[], &[2, 4], &[], &[2]],
    [&[1, 3], &[3, 5], &[], &[3, 5], &[], &[]],
    [&[1, 3], &[], &[1, 3], &[], &[1, 3], &[]],
];

/// The same for `[2:3]` pairs of residue 0.
const TABLE_23: [Row; 10] = [
    [&[], &[], &[], &[], &[], &[]],
    [&[], &[], &[0], &[], &[0], &[2]],
    [&[], &[0], &[2], &[], &[], &[0]],
    [&[], &[2], &[], &[2], &[], &[2]],
    [&[0], &[1], &[3], &[0], &[2], &[4]],
    [&[2], &[], &[1], &[], &[1], &[]],
    [&[2], &[3], &[], &[3], &[], &[]],
    [&[4], &[], &[], &[1], &[3], &[]],
    [&[], &[1, 3], &[], &[1, 3], &[], &[1, 3]],
    [&[1, 3], &[2], &[2], &[2], &[2], &[]],
];

const FORBIDDEN_21: [[&[i32]; 3]; 4] = [
    [&[], &[1], &[]],
    [&[1], &[], &[1]],
    [&[2], &[3], &[]],
    [&[1, 3], &[2], &[2]],
];

const FORBIDDEN_23: [[&[i32]; 3]; 3] = [
    [&[2], &[2, 4], &[]],
    [&[1, 3], &[], &[1, 3]],
    [&[1, 3], &[3, 5], &[]],
];

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub descriptor: PairDescriptor,
    pub weight: u32,
    /// No exceptional partitions in the source block.
    pub scopes_kessar: bool,
    pub checks: Vec<CheckResult>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn record(&mut self, name: &'static str, failure: Option<String>) {
        let passed = failure.is_none();
        self.0.push(CheckResult { name, passed, detail: failure.unwrap_or_default() });
    }
}

/// `lam` and `hat` differ only by i-nodes, row by row.
fn linked(lam: &Partition, hat: &Partition, i: u32, p: HParams) -> bool {
    (1..=lam.len().max(hat.len())).all(|r| {
        let (a, b) = (lam.part(r), hat.part(r));
        (a.min(b) + 1..=a.max(b)).all(|c| p.residue(c) == i)
    })
}

/// Whether the residue/k criteria predict a Scopes-Kessar equivalence.
pub fn predicted_scopes_kessar(d: &PairDescriptor, w: u32) -> Option<bool> {
    let (i, k, n) = (d.residue, d.k, d.params.n());
    match w {
        0 => Some(true),
        1 if i != 0 || k >= 3 => Some(true),
        2 if i == n || (i >= 1 && k >= 2) || (i == 0 && k >= 5) => Some(true),
        2 if supported_shape(d) => Some(false),
        _ => None,
    }
}

/// Runs every check that applies to the pair at weight `w`.
///
/// Errors only when a block cannot be computed or the pair has exceptional
/// partitions of a shape with no known relation; check failures are reported.
pub fn verify_pair(d: &PairDescriptor, w: u32, oracle: &mut Oracle, limit: usize) -> Result<PairReport> {
    let p = d.params;
    if oracle.params() != p {
        return Err(Error::Unsupported(alloc::format!("oracle for h={} asked for {d}", oracle.params().h())));
    }
    let (i, k) = (d.residue, d.k);
    let (exc_src, exc_dst) = scan_exceptional(d, w, limit)?;
    let sk = exc_src.is_empty();
    if !sk && !(w == 2 && supported_shape(d)) {
        return Err(Error::Unsupported(alloc::format!(
            "{d} at weight {w} has {} exceptional partitions",
            exc_src.len()
        )));
    }
    let bs = BlockId::new(p, d.sigma.clone(), w)?;
    let bt = BlockId::new(p, d.tau.clone(), w)?;
    let ms = oracle.block(&bs, limit)?;
    let mt = oracle.block(&bt, limit)?;
    let mut c = Checks(Vec::new());

    c.record(
        "exceptional counts agree",
        (exc_src.len() != exc_dst.len())
            .then(|| alloc::format!("{} source vs {} target", exc_src.len(), exc_dst.len())),
    );
    if let Some(pred) = predicted_scopes_kessar(d, w) {
        c.record(
            "equivalence criterion",
            (pred != sk).then(|| alloc::format!("criteria predict {pred}, scan found {sk}")),
        );
    }

    let mut bad = None;
    for lam in ms.rows().iter().filter(|l| is_unexceptional(l, d, Side::Source)) {
        let image = psi(lam, i, p)?;
        let got = FockVector::basis(lam.clone(), p)?.apply_f(i, k)?;
        if got != FockVector::basis(image.clone(), p)? || lam.addable_nodes(i, p).len() as u32 != k {
            bad = Some(alloc::format!("f_{i}^({k}) {lam} = {got}, expected {image}"));
            break;
        }
    }
    c.record("unexceptional f action", bad);

    let mut bad = None;
    'outer: for lam in ms.rows().iter().filter(|l| is_unexceptional(l, d, Side::Source)) {
        let hat = psi(lam, i, p)?;
        for mu in ms.rows() {
            if lam <= mu {
                continue;
            }
            for mu_hat in mt.rows().iter().filter(|x| linked(mu, x, i, p)) {
                if hat <= *mu_hat {
                    bad = Some(alloc::format!("{lam} > {mu} but {hat} <= {mu_hat}"));
                    break 'outer;
                }
            }
        }
    }
    c.record("unexceptional lex order preserved", bad);

    if sk {
        c.record("matrices agree under psi", psi_matrix_mismatch(&ms, &mt, i, p)?);
        if w == 2 {
            check_weight2_lemmas(&mut c, d, &bs, &bt, None, limit)?;
        }
        return Ok(PairReport { descriptor: d.clone(), weight: w, scopes_kessar: sk, checks: c.0 });
    }

    let t = exceptional_triples(d, limit)?;
    check_fock_identities(&mut c, d, &t)?;
    let ga = ms.column(&t.alpha).ok_or_else(|| violation!("alpha {} is not restricted", t.alpha))?;
    let expect = if i == 0 { [0, 1, 3] } else { [0, 2, 4] };
    let mut want = FockVector::zero(p);
    for (x, e) in [&t.alpha, &t.beta, &t.gamma].into_iter().zip(expect) {
        want.add_term(x.clone(), &LaurentPoly::q_pow(e));
    }
    c.record("G(alpha)", (ga != want).then(|| alloc::format!("G(alpha) = {ga}")));
    let gh = mt.column(&t.alpha_hat).ok_or_else(|| violation!("alpha^ {} is not restricted", t.alpha_hat))?;
    let mut want = FockVector::zero(p);
    for (x, e) in [&t.alpha_hat, &t.beta_hat, &t.gamma_hat].into_iter().zip([0, 2, 4]) {
        want.add_term(x.clone(), &LaurentPoly::q_pow(e));
    }
    c.record("G(alpha^)", (gh != want).then(|| alloc::format!("G(alpha^) = {gh}")));

    let (table, forbidden): (&[Row], &[[&[i32]; 3]]) =
        if i == 0 { (&TABLE_23, &FORBIDDEN_23) } else { (&TABLE_21, &FORBIDDEN_21) };
    let (mut row_bad, mut forb_bad, mut unex_bad) = (None, None, None);
    for mu in ms.cols() {
        let mu_hat = psi(mu, i, p)?;
        let left = [ms.entry(&t.alpha, mu), ms.entry(&t.beta, mu), ms.entry(&t.gamma, mu)];
        let right = [mt.entry(&t.alpha_hat, &mu_hat), mt.entry(&t.beta_hat, &mu_hat), mt.entry(&t.gamma_hat, &mu_hat)];
        if forbidden.iter().any(|f| f.iter().zip(&left).all(|(e, x)| poly(e) == *x)) {
            forb_bad.get_or_insert_with(|| alloc::format!("mu = {mu}: forbidden triple {left:?}"));
        }
        let row = table.iter().find(|r| r[..3].iter().zip(&left).all(|(e, x)| poly(e) == *x));
        match row {
            None => {
                row_bad.get_or_insert_with(|| alloc::format!("mu = {mu}: triple {left:?} is not in the table"));
            }
            Some(r) if !r[3..].iter().zip(&right).all(|(e, x)| poly(e) == *x) => {
                row_bad.get_or_insert_with(|| alloc::format!("mu = {mu}: image triple {right:?} does not match"));
            }
            Some(_) => {}
        }
        for lam in ms.rows().iter().filter(|l| is_unexceptional(l, d, Side::Source)) {
            let (x, y) = (ms.entry(lam, mu), mt.entry(&psi(lam, i, p)?, &mu_hat));
            if x != y {
                unex_bad.get_or_insert_with(|| alloc::format!("d({lam},{mu}) = {x} but image is {y}"));
            }
        }
    }
    c.record("table rows", row_bad);
    c.record("forbidden triples absent", forb_bad);
    c.record("unexceptional entries transported", unex_bad);
    check_weight2_lemmas(&mut c, d, &bs, &bt, Some(&t), limit)?;
    Ok(PairReport { descriptor: d.clone(), weight: w, scopes_kessar: sk, checks: c.0 })
}

fn psi_matrix_mismatch(
    ms: &CanonicalBasisMatrix,
    mt: &CanonicalBasisMatrix,
    i: u32,
    p: HParams,
) -> Result<Option<String>> {
    for mu in ms.cols() {
        let mu_hat = psi(mu, i, p)?;
        if mt.column(&mu_hat).is_none() {
            return Ok(Some(alloc::format!("psi({mu}) = {mu_hat} is not a column")));
        }
        for lam in ms.rows() {
            let (x, y) = (ms.entry(lam, mu), mt.entry(&psi(lam, i, p)?, &mu_hat));
            if x != y {
                return Ok(Some(alloc::format!("d({lam},{mu}) = {x} but image entry is {y}")));
            }
        }
    }
    if ms.cols().len() != mt.cols().len() || ms.rows().len() != mt.rows().len() {
        return Ok(Some(String::from("block sizes differ")));
    }
    Ok(None)
}

fn check_fock_identities(c: &mut Checks, d: &PairDescriptor, t: &ExceptionalTriples) -> Result<()> {
    let p = d.params;
    let (i, k) = (d.residue, d.k);
    let (ah, bh, gh) = (&t.alpha_hat, &t.beta_hat, &t.gamma_hat);
    let combo = |terms: &[(&Partition, &[i32])]| {
        let mut v = FockVector::zero(p);
        for (x, e) in terms {
            v.add_term((*x).clone(), &poly(e));
        }
        v
    };
    let expected = if i == 0 {
        [
            combo(&[(ah, &[-3]), (bh, &[-1])]),
            combo(&[(ah, &[-2, 0]), (bh, &[0]), (gh, &[0, 2])]),
            combo(&[(ah, &[0]), (bh, &[0, 2]), (gh, &[2, 4])]),
        ]
    } else {
        [
            combo(&[(ah, &[-2]), (bh, &[0])]),
            combo(&[(ah, &[0]), (gh, &[0])]),
            combo(&[(bh, &[0]), (gh, &[2])]),
        ]
    };
    let mut bad = None;
    for (x, want) in [&t.alpha, &t.beta, &t.gamma].into_iter().zip(&expected) {
        let got = FockVector::basis(x.clone(), p)?.apply_f(i, k)?;
        if got != *want {
            bad.get_or_insert_with(|| alloc::format!("f_{i}^({k}) {x} = {got}, expected {want}"));
        }
    }
    c.record("f on exceptional partitions", bad);

    let scalars: [&[i32]; 3] = if i == 0 { [&[-4], &[-3, -1], &[-1, 1]] } else { [&[-4], &[-2], &[0]] };
    let ea = FockVector::basis(t.alpha.clone(), p)?.apply_e(i, 1)?;
    let delta = match ea.support().collect::<Vec<_>>()[..] {
        [x] => x.clone(),
        _ => return Err(violation!("e_{i} {} = {ea} is not a single term", t.alpha)),
    };
    let mut bad = None;
    for (x, s) in [&t.alpha, &t.beta, &t.gamma].into_iter().zip(scalars) {
        let got = FockVector::basis(x.clone(), p)?.apply_e(i, 1)?;
        let want = combo(&[(&delta, s)]);
        if got != want {
            bad.get_or_insert_with(|| alloc::format!("e_{i} {x} = {got}, expected {want}"));
        }
    }
    c.record("e on exceptional partitions", bad);
    Ok(())
}

fn check_weight2_lemmas(
    c: &mut Checks,
    d: &PairDescriptor,
    bs: &BlockId,
    bt: &BlockId,
    t: Option<&ExceptionalTriples>,
    limit: usize,
) -> Result<()> {
    let (i, p) = (d.residue, d.params);
    let h = p.h();
    let ws = Weight2Block::with_limit(bs, limit)?;
    let wt = Weight2Block::with_limit(bt, limit)?;

    let mut bad = None;
    for x in ws.profiles().iter().filter(|x| is_unexceptional(&x.lambda, d, Side::Source)) {
        let y = psi(&x.lambda, i, p)?;
        let has = |l: &Partition| l.contains(h) || l.contains(2 * h);
        if has(&x.lambda) != has(&y) {
            bad.get_or_insert_with(|| alloc::format!("{} and {y} differ on h, 2h", x.lambda));
        }
    }
    c.record("h and 2h preserved", bad);

    let ss = special_partitions(&d.sigma, p)?;
    let st = special_partitions(&d.tau, p)?;
    let mut bad = None;
    let pairs = [
        ("xx", &ss.xx, &st.xx),
        ("shp", &ss.shp, &st.shp),
        ("nat", &ss.nat, &st.nat),
        ("flt", &ss.flt, &st.flt),
        ("ppi", &ss.ppi, &st.ppi),
        ("yy", &ss.yy, &st.yy),
    ];
    for (k, (name, a, b)) in pairs.into_iter().enumerate() {
        let ok = match (a, b) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                let plain = is_unexceptional(a, d, Side::Source) && psi(a, i, p)? == *b;
                let swapped = k >= 3 && t.is_some_and(|t| *a == t.beta && *b == t.alpha_hat);
                plain || swapped
            }
            _ => false,
        };
        if !ok {
            bad.get_or_insert_with(|| alloc::format!("{name}: {a:?} vs {b:?}"));
        }
    }
    c.record("special partitions correspond", bad);

    if let Some(t) = t {
        let prof = |w: &Weight2Block, l: &Partition| w.profile(l).map(|x| (x.ddd, x.colour));
        let (a, b, g) = (prof(&ws, &t.alpha)?, prof(&ws, &t.beta)?, prof(&ws, &t.gamma)?);
        let (ah, bh, gh) = (prof(&wt, &t.alpha_hat)?, prof(&wt, &t.beta_hat)?, prof(&wt, &t.gamma_hat)?);
        let ok = a.0 >= 1 && a == g && a == bh && b == ah && b == gh && b.0 + 1 == a.0;
        c.record(
            "exceptional ddd and colour",
            (!ok).then(|| alloc::format!("alpha {a:?} beta {b:?} gamma {g:?} | {ah:?} {bh:?} {gh:?}")),
        );
    }
    Ok(())
}
