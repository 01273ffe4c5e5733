use std::collections::BTreeSet;

use barfock::abacus::{bar_positions, core_of, AbacusDisplay};
use barfock::canonical::{canonical_basis_with, psi, Oracle, DEFAULT_LIMIT};
use barfock::formulas::{Colour, Weight2Block};
use barfock::partitions::{all_cores, enumerate_block, enumerate_h_strict};
use barfock::{BlockId, Dominance, HParams, Node, Partition, PeelPolicy};
use proptest::prelude::*;

fn hp(h: u32) -> HParams {
    HParams::new(h).unwrap()
}

/// Every h-strict partition reachable from `lam` by deleting a run of
/// i-nodes from the end of each row.
fn shrinkings(lam: &Partition, i: u32, p: HParams) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for r in 1..=lam.len() {
        let a = lam.part(r);
        let mut cut = 0;
        let mut options = vec![a];
        while cut < a && p.residue(a - cut) == i {
            cut += 1;
            options.push(a - cut);
        }
        out = out
            .into_iter()
            .flat_map(|pre: Vec<u32>| {
                options.iter().map(move |&b| {
                    let mut v = pre.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .map(|v| Partition::new(v).unwrap())
        .filter(|m| m.is_h_strict(p))
        .collect()
}

fn cells(lam: &Partition) -> BTreeSet<(u32, u32)> {
    lam.nodes().map(|x| (x.row, x.col)).collect()
}

fn brute_removable(lam: &Partition, i: u32, p: HParams) -> BTreeSet<(u32, u32)> {
    let smallest = shrinkings(lam, i, p).into_iter().min_by_key(|m| m.size()).unwrap();
    for m in shrinkings(lam, i, p) {
        assert!(cells(&smallest).is_subset(&cells(&m)), "no unique smallest shrinking of {lam}");
    }
    cells(lam).difference(&cells(&smallest)).copied().collect()
}

fn brute_addable(lam: &Partition, i: u32, p: HParams) -> BTreeSet<(u32, u32)> {
    let mut grown = vec![Vec::new()];
    for r in 1..=lam.len() + 1 {
        let a = lam.part(r);
        let mut options = vec![a];
        let mut b = a;
        while p.residue(b + 1) == i {
            b += 1;
            options.push(b);
        }
        grown = grown
            .into_iter()
            .flat_map(|pre: Vec<u32>| {
                options.iter().map(move |&b| {
                    let mut v = pre.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for v in grown {
        if !v.windows(2).all(|w| w[0] >= w[1]) {
            continue;
        }
        let nu = Partition::new(v).unwrap();
        if nu.is_h_strict(p) {
            out.extend(cells(&nu).difference(&cells(lam)).copied());
        }
    }
    out
}

fn as_set(v: Vec<Node>) -> BTreeSet<(u32, u32)> {
    v.into_iter().map(|x| (x.row, x.col)).collect()
}

fn h_strict() -> impl Strategy<Value = (u32, Partition)> {
    (1u32..=3, proptest::collection::vec(1u32..=22, 0..7)).prop_filter_map("h-strict", |(k, parts)| {
        let h = 2 * k + 1;
        let lam = Partition::from_unsorted(parts);
        lam.is_h_strict(hp(h)).then_some((h, lam))
    })
}

proptest! {
    #[test]
    fn i_nodes_match_brute_force((h, lam) in h_strict()) {
        let p = hp(h);
        for i in 0..=p.n() {
            prop_assert_eq!(as_set(lam.removable_nodes(i, p)), brute_removable(&lam, i, p));
            prop_assert_eq!(as_set(lam.addable_nodes(i, p)), brute_addable(&lam, i, p));
        }
    }

    #[test]
    fn abacus_round_trip_and_core((h, lam) in h_strict()) {
        let p = hp(h);
        let d = AbacusDisplay::from_partition(&lam, p).unwrap();
        prop_assert_eq!(d.to_partition().unwrap(), lam.clone());
        prop_assert_eq!(d.core(), lam.bar_core(p));
        prop_assert_eq!(core_of(&lam, p), lam.bar_core(p));
        prop_assert!(AbacusDisplay::from_partition(&lam.bar_core(p), p).unwrap().is_flush());
    }

    #[test]
    fn psi_is_an_involution_on_cores_and_weights((h, lam) in h_strict()) {
        let p = hp(h);
        for i in 0..=p.n() {
            let image = psi(&lam, i, p).unwrap();
            prop_assert_eq!(psi(&image, i, p).unwrap(), lam.clone());
            prop_assert_eq!(image.is_restricted(p).unwrap(), lam.is_restricted(p).unwrap());
            prop_assert_eq!(image.bar_core(p), psi(&lam.bar_core(p), i, p).unwrap());
            prop_assert_eq!(image.bar_weight(p), lam.bar_weight(p));
        }
    }

    #[test]
    fn lex_and_colex_refine_dominance((h, lam) in h_strict(), (_, mu) in h_strict()) {
        let _ = h;
        if let Ok(d) = lam.dominance(&mu) {
            if d == Dominance::Less {
                prop_assert!(lam < mu);
                prop_assert_eq!(lam.cmp_colex(&mu), std::cmp::Ordering::Less);
            }
        }
    }
}

/// Bar removal in every order reaches one core, and the core agrees with the abacus.
#[test]
fn bar_core_is_order_independent() {
    for h in [3, 5, 7] {
        let p = hp(h);
        for m in 0..=16 {
            for lam in enumerate_h_strict(m, p, DEFAULT_LIMIT).unwrap() {
                let mut frontier = BTreeSet::from([lam.clone()]);
                let mut ends = BTreeSet::new();
                while let Some(x) = frontier.pop_first() {
                    let next = x.remove_h_bar_all(p);
                    if next.is_empty() {
                        ends.insert(x);
                    }
                    frontier.extend(next.into_iter().map(|(y, _)| y));
                }
                assert_eq!(ends.len(), 1, "{lam} at h={h}");
                assert_eq!(ends.first().unwrap(), &core_of(&lam, p));
            }
        }
    }
}

/// Same size: same core exactly when same h-content.
#[test]
fn content_determines_core() {
    for h in [3, 5, 7] {
        let p = hp(h);
        for m in 0..=14 {
            let all = enumerate_h_strict(m, p, DEFAULT_LIMIT).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(a.bar_core(p) == b.bar_core(p), a.h_content(p) == b.h_content(p), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn psi_fixes_cores_to_cores() {
    for h in [3, 5, 7] {
        let p = hp(h);
        for c in all_cores(p, 20) {
            for i in 0..=p.n() {
                let add = c.addable_nodes(i, p);
                let rem = c.removable_nodes(i, p);
                assert!(add.is_empty() || rem.is_empty(), "{c} residue {i}");
                assert!(psi(&c, i, p).unwrap().is_bar_core(p));
            }
        }
    }
}

fn weight2_blocks() -> Vec<BlockId> {
    let mut out = Vec::new();
    for (h, max) in [(3, 10), (5, 10), (7, 8)] {
        let p = hp(h);
        for c in all_cores(p, max) {
            out.push(BlockId::new(p, c, 2).unwrap());
        }
    }
    out
}

#[test]
fn bar_positions_bound_dominance() {
    for b in weight2_blocks() {
        let rows = enumerate_block(&b, DEFAULT_LIMIT).unwrap();
        let pos: Vec<_> = rows.iter().map(|l| bar_positions(l, &b).unwrap()).collect();
        for (x, px) in rows.iter().zip(&pos) {
            for (y, py) in rows.iter().zip(&pos) {
                if px.lo <= py.lo && px.hi <= py.hi {
                    assert!(x.dominated_by(y), "{x} {y} in {b}");
                }
            }
        }
    }
}

#[test]
fn incomparable_partitions_have_distant_ddd() {
    for b in weight2_blocks() {
        let w = Weight2Block::new(&b).unwrap();
        for x in w.profiles() {
            for y in w.profiles() {
                if x.lambda.dominance(&y.lambda).unwrap() == Dominance::Incomparable {
                    assert!(x.ddd.abs_diff(y.ddd) >= 2, "{} {} in {b}", x.lambda, y.lambda);
                }
            }
        }
    }
}

#[test]
fn ddd_zero_with_a_2h_bar_sits_high() {
    for b in weight2_blocks() {
        let h = b.params.h();
        for x in Weight2Block::new(&b).unwrap().profiles() {
            let (lo, hi) = (x.barpos.lo, x.barpos.hi);
            if x.ddd == 0 && lo != hi && (hi == lo + h || lo + hi == 2 * h) {
                assert!(lo >= h, "{} in {b}", x.lambda);
            }
            assert!(x.ddd < 2 || x.colour == Colour::Grey);
        }
    }
}

#[test]
fn peel_policies_agree() {
    for (h, max, w) in [(3, 8, 3), (5, 6, 3), (7, 4, 2)] {
        let p = hp(h);
        for c in all_cores(p, max) {
            let b = BlockId::new(p, c, w).unwrap();
            let a = canonical_basis_with(&b, PeelPolicy::SmallestFirst, DEFAULT_LIMIT).unwrap();
            let z = canonical_basis_with(&b, PeelPolicy::LargestFirst, DEFAULT_LIMIT).unwrap();
            assert_eq!(a, z, "{b}");
        }
    }
}

#[test]
fn oracle_memo_is_consistent_across_blocks() {
    let p = hp(5);
    let mut shared = Oracle::new(p, PeelPolicy::SmallestFirst);
    for c in all_cores(p, 6) {
        let b = BlockId::new(p, c, 2).unwrap();
        let fresh = canonical_basis_with(&b, PeelPolicy::SmallestFirst, DEFAULT_LIMIT).unwrap();
        assert_eq!(shared.block(&b, DEFAULT_LIMIT).unwrap(), fresh);
    }
}
