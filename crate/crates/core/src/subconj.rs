//! Conjugacy of subgroups inside a common overgroup, and deduplication of
//! subgroup lists up to conjugacy.
//!
//! A cheap invariant fingerprint settles most pairs: conjugate subgroups have
//! equal orders, equal orbit-size multisets on the permuted points, and equal
//! multisets of (element order, representative cycle type, class size) over
//! their conjugacy classes, since conjugation inside the symmetric group
//! preserves cycle types. Pairs that survive the fingerprint get a transporter
//! search: random sampling when the overgroup is large, then a deterministic
//! scan of the whole overgroup, which makes a negative answer exact.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::classes::ClassData;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Below this overgroup order the random phase is skipped; scanning the whole
/// group is already cheap.
const SCAN_ONLY_BELOW: u128 = 500_000;
const RANDOM_TRIALS: u32 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    order: u128,
    orbit_sizes: Vec<usize>,
    class_stats: Vec<(u64, Vec<u16>, u64)>,
}

impl Fingerprint {
    pub fn group_order(&self) -> u128 {
        self.order
    }

    pub fn class_count(&self) -> usize {
        self.class_stats.len()
    }
}

pub fn fingerprint(h: &PermGroup, budget: u128) -> Result<Fingerprint> {
    let mut orbit_sizes = Vec::new();
    let mut seen = vec![false; h.degree()];
    for start in 0..h.degree() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut size = 0usize;
        while let Some(p) = stack.pop() {
            size += 1;
            for g in h.generators() {
                let q = g.apply(p as u16) as usize;
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        orbit_sizes.push(size);
    }
    orbit_sizes.sort_unstable();
    let cd = ClassData::new(h, budget)?;
    let mut class_stats: Vec<(u64, Vec<u16>, u64)> = cd
        .classes()
        .iter()
        .map(|c| (c.element_order, c.representative.cycle_type(), c.size))
        .collect();
    class_stats.sort_unstable();
    Ok(Fingerprint {
        order: h.order(),
        orbit_sizes,
        class_stats,
    })
}

/// True when conjugating every generator of `a` by `t` lands in `b`. Combined
/// with equal orders that makes `t` a genuine witness for `a^t = b`.
fn maps_into(a: &PermGroup, t: &Permutation, b: &PermGroup) -> bool {
    a.generators()
        .iter()
        .all(|g| b.contains(&g.conjugate_by(t)))
}

pub(crate) fn transporter_search(
    group: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
) -> Option<Permutation> {
    if group.order() > SCAN_ONLY_BELOW {
        let mut rng =
            ChaCha12Rng::seed_from_u64(0x5abc0_u64 ^ (a.order() as u64).wrapping_mul(0x9e37));
        for _ in 0..RANDOM_TRIALS {
            let t = group.random_element(&mut rng);
            if maps_into(a, &t, b) {
                return Some(t);
            }
        }
    }
    group.elements().find(|t| maps_into(a, t, b))
}

/// A conjugating element of the overgroup with `a^t = b`, or None when the
/// subgroups are not conjugate in it.
pub fn is_conjugate_subgroups(
    group: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    budget: u128,
) -> Result<Option<Permutation>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if fingerprint(a, budget)? != fingerprint(b, budget)? {
        return Ok(None);
    }
    Ok(transporter_search(group, a, b))
}

/// Members of `fresh` that are conjugate in `group` neither to a member of
/// `known` nor to an earlier kept member of `fresh`. Order within `fresh` is
/// preserved, so the result is deterministic.
pub fn dedupe(
    group: &PermGroup,
    known: &[PermGroup],
    fresh: &[PermGroup],
    budget: u128,
) -> Result<Vec<PermGroup>> {
    let mut known_fps: Vec<Fingerprint> = Vec::with_capacity(known.len());
    for k in known {
        known_fps.push(fingerprint(k, budget)?);
    }
    let mut kept: Vec<PermGroup> = Vec::new();
    let mut kept_fps: Vec<Fingerprint> = Vec::new();
    'cand: for cand in fresh {
        let fp = fingerprint(cand, budget)?;
        for (k, kfp) in known
            .iter()
            .zip(&known_fps)
            .chain(kept.iter().zip(&kept_fps))
        {
            if cand.order() == k.order()
                && fp == *kfp
                && transporter_search(group, k, cand).is_some()
            {
                continue 'cand;
            }
        }
        kept.push(cand.clone());
        kept_fps.push(fp);
    }
    Ok(kept)
}
