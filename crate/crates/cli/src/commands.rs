use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use barfock::abacus::AbacusDisplay;
use barfock::canonical::{canonical_basis_with, Oracle, DEFAULT_LIMIT};
use barfock::formulas::{formula_matrix, matrix_diff, Weight2Block};
use barfock::pairs::{detect_pairs, verify_pair};
use barfock::partitions::{all_cores, enumerate_block, enumerate_h_strict};
use barfock::spin::predict_matrix;
use barfock::{BlockId, CanonicalBasisMatrix, Error, HParams, Partition, PeelPolicy};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::{records, Format, MatrixDoc};

pub const LIMIT_VAR: &str = "BARFOCK_MAX_PARTITIONS";

/// What a command printed, and whether it found a disagreement.
pub struct Output {
    pub text: String,
    pub discrepancy: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, discrepancy: false }
    }
}

/// Caps shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub partitions: usize,
    pub max_weight: u32,
}

impl Limits {
    pub fn from_env(max_weight: u32) -> Result<Self> {
        let partitions = match std::env::var(LIMIT_VAR) {
            Ok(v) => v.trim().parse().with_context(|| format!("{LIMIT_VAR}={v} is not a count"))?,
            Err(_) => DEFAULT_LIMIT,
        };
        Ok(Limits { partitions, max_weight })
    }

    fn check_weight(&self, w: u32) -> Result<()> {
        if w > self.max_weight {
            bail!("weight {w} exceeds the cap {} (raise it with --max-weight)", self.max_weight);
        }
        Ok(())
    }
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>().with_context(|| format!("cannot read partition {s:?}"))
}

pub fn block_id(h: u32, core: &str, weight: u32) -> Result<BlockId> {
    Ok(BlockId::new(HParams::new(h)?, parse_partition(core)?, weight)?)
}

#[derive(Debug, Serialize)]
struct BlockRow {
    partition: String,
    restricted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    bar_positions: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    legs: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ddd: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    colour: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    special: Option<&'static str>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(String::new, T::to_string)
}

pub fn block(p: HParams, which: Result<BlockId, u32>, restricted_only: bool, limits: Limits, f: Format) -> Result<Output> {
    let (parts, w2) = match which {
        Ok(b) => {
            let parts = enumerate_block(&b, limits.partitions)?;
            let w2 = if b.weight == 2 { Some(Weight2Block::with_limit(&b, limits.partitions)?) } else { None };
            (parts, w2)
        }
        Err(m) => (enumerate_h_strict(m, p, limits.partitions)?, None),
    };
    let mut rows = Vec::new();
    for lam in parts {
        let restricted = lam.is_restricted(p)?;
        if restricted_only && !restricted {
            continue;
        }
        let mut row = BlockRow {
            partition: lam.to_string(),
            restricted,
            bar_positions: None,
            legs: None,
            ddd: None,
            colour: None,
            special: None,
        };
        if let Some(w) = &w2 {
            let x = w.profile(&lam)?;
            row.bar_positions = Some((x.barpos.lo, x.barpos.hi));
            row.legs = Some(x.legs);
            row.ddd = Some(x.ddd);
            row.colour = Some(x.colour.to_string());
            row.special = w.special().label_of(&lam);
        }
        rows.push(row);
    }
    let mut header = vec!["partition", "restricted"];
    if w2.is_some() {
        header.extend(["bars", "legs", "ddd", "colour", "special"]);
    }
    let text = records(
        &rows,
        &header,
        |r| {
            let mut v = vec![r.partition.clone(), r.restricted.to_string()];
            if w2.is_some() {
                v.push(opt(&r.bar_positions.map(|(a, b)| format!("{a},{b}"))));
                v.push(opt(&r.legs.map(|(a, b)| format!("{a},{b}"))));
                v.push(opt(&r.ddd));
                v.push(opt(&r.colour));
                v.push(r.special.unwrap_or("").to_string());
            }
            v
        },
        f,
    )?;
    Ok(text.into())
}

#[derive(Debug, Serialize)]
struct CoreDoc {
    h: u32,
    partition: String,
    core: String,
    weight: u32,
    content: Vec<u32>,
    restricted: bool,
    abacus: Vec<String>,
}

pub fn core(p: HParams, lam: &Partition, f: Format) -> Result<Output> {
    if !lam.is_h_strict(p) {
        return Err(Error::NotHStrict(lam.clone()).into());
    }
    let doc = CoreDoc {
        h: p.h(),
        partition: lam.to_string(),
        core: lam.bar_core(p).to_string(),
        weight: lam.bar_weight(p),
        content: lam.h_content(p),
        restricted: lam.is_restricted(p)?,
        abacus: AbacusDisplay::from_partition(lam, p)?.render().lines().map(str::to_string).collect(),
    };
    let text = match f {
        Format::Json => serde_json::to_string_pretty(&doc)? + "\n",
        _ => {
            let content = doc.content.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            let fields = [
                ("partition", doc.partition.clone()),
                ("core", doc.core.clone()),
                ("weight", doc.weight.to_string()),
                ("content", content),
                ("restricted", doc.restricted.to_string()),
            ];
            let mut s = records(&fields, &["field", "value"], |(k, v)| vec![k.to_string(), v.clone()], f)?;
            if f == Format::Table {
                s.push('\n');
                for line in &doc.abacus {
                    s.push_str(line);
                    s.push('\n');
                }
            }
            s
        }
    };
    Ok(text.into())
}

pub fn cb(b: &BlockId, policy: PeelPolicy, limits: Limits, f: Format) -> Result<Output> {
    limits.check_weight(b.weight)?;
    let m = canonical_basis_with(b, policy, limits.partitions)?;
    Ok(MatrixDoc::new(&m).render(f)?.into())
}

fn provenance(b: &BlockId, m: &CanonicalBasisMatrix, limits: Limits) -> Result<Vec<Vec<Option<String>>>> {
    let mut tags: BTreeMap<(usize, usize), String> = BTreeMap::new();
    let row_of: BTreeMap<&Partition, usize> = m.rows().iter().enumerate().map(|(r, x)| (x, r)).collect();
    if b.weight == 2 {
        let w = Weight2Block::with_limit(b, limits.partitions)?;
        for (c, mu) in m.cols().iter().enumerate() {
            for e in w.column_with_provenance(mu)? {
                tags.insert((row_of[&e.lambda], c), e.clause.label().to_string());
            }
        }
    } else {
        for (c, mu) in m.cols().iter().enumerate() {
            for (r, lam) in m.rows().iter().enumerate() {
                if !m.entries()[r][c].is_zero() {
                    let tag = if lam == mu { "diagonal" } else { "weight1:subdiagonal" };
                    tags.insert((r, c), tag.to_string());
                }
            }
        }
    }
    Ok((0..m.rows().len()).map(|r| (0..m.cols().len()).map(|c| tags.remove(&(r, c))).collect()).collect())
}

pub fn formula(b: &BlockId, with_provenance: bool, limits: Limits, f: Format) -> Result<Output> {
    let m = formula_matrix(b)?;
    let mut doc = MatrixDoc::new(&m);
    if with_provenance {
        doc.provenance = Some(provenance(b, &m, limits)?);
    }
    Ok(doc.render(f)?.into())
}

#[derive(Debug, Serialize)]
struct BlockDiff {
    block: String,
    columns: usize,
    differences: Vec<String>,
}

#[derive(Debug, Serialize)]
struct DiffDoc {
    weight: u32,
    blocks: usize,
    columns: usize,
    agree: bool,
    per_h: BTreeMap<u32, usize>,
    discrepancies: Vec<BlockDiff>,
}

pub fn diff(hs: &[u32], weight: u32, max_core_size: u32, limits: Limits, f: Format) -> Result<Output> {
    if weight > 2 {
        bail!("closed forms exist for weights 0, 1 and 2 only");
    }
    let mut blocks = Vec::new();
    for &h in hs {
        let p = HParams::new(h)?;
        blocks.extend(all_cores(p, max_core_size).into_iter().map(|c| BlockId::new(p, c, weight)).collect::<Result<Vec<_>, _>>()?);
    }
    let results: Vec<BlockDiff> = blocks
        .par_iter()
        .map(|b| -> Result<BlockDiff> {
            let oracle = canonical_basis_with(b, PeelPolicy::SmallestFirst, limits.partitions)
                .with_context(|| format!("oracle on {b}"))?;
            let formula = formula_matrix(b).with_context(|| format!("formula on {b}"))?;
            Ok(BlockDiff { block: b.to_string(), columns: oracle.cols().len(), differences: matrix_diff(&oracle, &formula) })
        })
        .collect::<Result<_>>()?;
    let mut per_h = BTreeMap::new();
    for b in &blocks {
        *per_h.entry(b.params.h()).or_insert(0) += 1;
    }
    let columns = results.iter().map(|r| r.columns).sum();
    let discrepancies: Vec<_> = results.into_iter().filter(|r| !r.differences.is_empty()).collect();
    let doc = DiffDoc { weight, blocks: blocks.len(), columns, agree: discrepancies.is_empty(), per_h, discrepancies };
    let text = match f {
        Format::Json => serde_json::to_string_pretty(&doc)? + "\n",
        Format::Csv => records(
            &doc.discrepancies,
            &["block", "difference"],
            |d| vec![d.block.clone(), d.differences.join("; ")],
            f,
        )?,
        Format::Table => {
            let mut s = String::new();
            for (h, n) in &doc.per_h {
                s += &format!("h={h}: {n} blocks\n");
            }
            match doc.discrepancies.first() {
                None => s += &format!("all blocks agree ({} blocks, {} columns, weight {weight})\n", doc.blocks, doc.columns),
                Some(d) => {
                    s += &format!("{} of {} blocks disagree; first: {}\n", doc.discrepancies.len(), doc.blocks, d.block);
                    for line in &d.differences {
                        s += &format!("  {line}\n");
                    }
                }
            }
            s
        }
    };
    Ok(Output { text, discrepancy: !doc.agree })
}

#[derive(Debug, Serialize)]
struct CheckDoc {
    name: &'static str,
    passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    detail: String,
}

#[derive(Debug, Serialize)]
struct PairDoc {
    pair: String,
    sigma: String,
    tau: String,
    residue: u32,
    k: u32,
    kind: String,
    weight: u32,
    supported: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    scopes_kessar: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    checks: Vec<CheckDoc>,
}

pub fn verify_pairs(sigma: &Partition, p: HParams, weight: u32, residue: Option<u32>, limits: Limits, f: Format) -> Result<Output> {
    limits.check_weight(weight)?;
    let mut oracle = Oracle::new(p, PeelPolicy::SmallestFirst);
    let mut docs = Vec::new();
    for d in detect_pairs(sigma, p)? {
        if residue.is_some_and(|i| i != d.residue) {
            continue;
        }
        let mut doc = PairDoc {
            pair: d.to_string(),
            sigma: d.sigma.to_string(),
            tau: d.tau.to_string(),
            residue: d.residue,
            k: d.k,
            kind: d.kind.to_string(),
            weight,
            supported: true,
            scopes_kessar: None,
            reason: None,
            checks: Vec::new(),
        };
        match verify_pair(&d, weight, &mut oracle, limits.partitions) {
            Ok(r) => {
                doc.scopes_kessar = Some(r.scopes_kessar);
                doc.checks = r.checks.into_iter().map(|c| CheckDoc { name: c.name, passed: c.passed, detail: c.detail }).collect();
            }
            Err(Error::Unsupported(why)) => {
                doc.supported = false;
                doc.reason = Some(why);
            }
            Err(e) => return Err(e.into()),
        }
        docs.push(doc);
    }
    let failed = docs.iter().any(|d| d.checks.iter().any(|c| !c.passed));
    let text = match f {
        Format::Json => serde_json::to_string_pretty(&docs)? + "\n",
        _ => {
            let mut lines = Vec::new();
            for d in &docs {
                if !d.supported {
                    lines.push((d.pair.clone(), "unsupported".to_string(), d.reason.clone().unwrap_or_default()));
                }
                for c in &d.checks {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    lines.push((d.pair.clone(), format!("{status}: {}", c.name), c.detail.clone()));
                }
            }
            records(&lines, &["pair", "check", "detail"], |(a, b, c)| vec![a.clone(), b.clone(), c.clone()], f)?
        }
    };
    Ok(Output { text, discrepancy: failed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    Oracle,
    Formula,
}

#[derive(Debug, Serialize)]
struct SpinDoc {
    lambda: String,
    mu: String,
    d_at_one: String,
    x_h: i32,
    mantissa: String,
    half_power: i32,
    odd_half_power: bool,
    predicted: String,
}

pub fn predict_spin(b: &BlockId, source: Source, limits: Limits, f: Format) -> Result<Output> {
    let m = match source {
        Source::Oracle => {
            limits.check_weight(b.weight)?;
            canonical_basis_with(b, PeelPolicy::SmallestFirst, limits.partitions)?
        }
        Source::Formula => formula_matrix(b)?,
    };
    let docs: Vec<SpinDoc> = predict_matrix(&m)?
        .into_iter()
        .map(|x| SpinDoc {
            lambda: x.lambda.to_string(),
            mu: x.mu.to_string(),
            d_at_one: x.d_at_one.to_string(),
            x_h: x.x_h,
            mantissa: x.mantissa.to_string(),
            half_power: x.half_power,
            odd_half_power: x.odd_half_power(),
            predicted: x.to_string(),
        })
        .collect();
    let text = records(
        &docs,
        &["lambda", "mu", "d(1)", "x_h", "predicted", "odd"],
        |d| {
            let odd = if d.odd_half_power { "yes" } else { "" };
            vec![d.lambda.clone(), d.mu.clone(), d.d_at_one.clone(), d.x_h.to_string(), d.predicted.clone(), odd.into()]
        },
        f,
    )?;
    Ok(text.into())
}

