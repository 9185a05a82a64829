//! Conjugacy classes, centralizers, and conjugating-element searches.
//!
//! Class computation enumerates the whole group through the stabilizer chain
//! and partitions it by a breadth-first sweep of generator conjugation, so the
//! results are exact for any group that fits the element budget. Centralizers
//! avoid enumeration entirely: they come from the orbit-stabilizer relation on
//! the conjugation action, which scales with the class size instead of the
//! group order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// Groups larger than this are refused by element-enumeration routines unless
/// the caller raises the limit explicitly.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

const PACK_MAX_DEGREE: usize = 256;
const PACK_MAX_BASE: usize = 16;

enum Keys {
    /// Base images packed one byte per level, most significant first, so the
    /// numeric order of the words is the lexicographic order of the tuples.
    Packed(Vec<u128>),
    Wide {
        data: Vec<Point>,
        width: usize,
    },
}

/// A sorted index of every element of a group, keyed by base images.
///
/// Base images identify group elements uniquely once the chain is complete,
/// so an element costs `base_len` bytes here instead of a full image vector.
/// Ranks are dense in `0..order` and stable for the lifetime of the index.
pub struct ElementIndex {
    group: PermGroup,
    base: Vec<Point>,
    keys: Keys,
}

impl ElementIndex {
    pub fn new(group: &PermGroup, budget: u128) -> Result<Self> {
        let order = group.order();
        if order > budget {
            return Err(Error::BudgetExceeded {
                order,
                limit: budget,
            });
        }
        if order > u32::MAX as u128 {
            return Err(Error::BudgetExceeded {
                order,
                limit: u32::MAX as u128,
            });
        }
        let base = group.chain().base();
        let n = order as usize;
        let packed = group.degree() <= PACK_MAX_DEGREE && base.len() <= PACK_MAX_BASE;
        let keys = if packed {
            let mut keys: Vec<u128> = Vec::with_capacity(n);
            for g in group.elements() {
                keys.push(pack_key(&base, &g));
            }
            keys.sort_unstable();
            Keys::Packed(keys)
        } else {
            let width = base.len();
            let mut rows: Vec<Vec<Point>> = Vec::with_capacity(n);
            for g in group.elements() {
                rows.push(base.iter().map(|&b| g.apply(b)).collect());
            }
            rows.sort_unstable();
            let mut data = Vec::with_capacity(n * width);
            for row in rows {
                data.extend_from_slice(&row);
            }
            Keys::Wide { data, width }
        };
        Ok(ElementIndex {
            group: group.clone(),
            base,
            keys,
        })
    }

    pub fn len(&self) -> usize {
        match &self.keys {
            Keys::Packed(keys) => keys.len(),
            Keys::Wide { data, width } => {
                if *width == 0 {
                    1
                } else {
                    data.len() / width
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn rank_of(&self, g: &Permutation) -> Option<u32> {
        match &self.keys {
            Keys::Packed(keys) => {
                let key = pack_key(&self.base, g);
                keys.binary_search(&key).ok().map(|i| i as u32)
            }
            Keys::Wide { data, width } => {
                if *width == 0 {
                    return g.is_identity().then_some(0);
                }
                let key: Vec<Point> = self.base.iter().map(|&b| g.apply(b)).collect();
                let n = data.len() / width;
                let mut lo = 0usize;
                let mut hi = n;
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    let row = &data[mid * width..(mid + 1) * width];
                    match row.cmp(&key[..]) {
                        std::cmp::Ordering::Less => lo = mid + 1,
                        std::cmp::Ordering::Greater => hi = mid,
                        std::cmp::Ordering::Equal => return Some(mid as u32),
                    }
                }
                None
            }
        }
    }

    pub fn perm_at(&self, rank: u32) -> Permutation {
        let key: Vec<Point> = match &self.keys {
            Keys::Packed(keys) => {
                let k = keys[rank as usize];
                let m = self.base.len();
                (0..m)
                    .map(|i| ((k >> (8 * (m - 1 - i))) & 0xff) as Point)
                    .collect()
            }
            Keys::Wide { data, width } => data[rank as usize * width..][..*width].to_vec(),
        };
        self.group
            .chain()
            .element_from_base_images(&key)
            .expect("index keys correspond to group elements")
    }
}

fn pack_key(base: &[Point], g: &Permutation) -> u128 {
    let mut k: u128 = 0;
    for &b in base {
        k = (k << 8) | g.apply(b) as u128;
    }
    k
}

#[derive(Clone, Debug)]
pub struct ConjClassInfo {
    /// Element with the lexicographically least image vector in the class.
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
}

/// Conjugacy class partition of a group.
///
/// Classes are sorted by (element order, size, representative images), which
/// puts the identity class at position 0 and makes the ordering reproducible
/// across runs and generating sets.
pub struct ClassData {
    index: ElementIndex,
    class_of: Vec<u32>,
    classes: Vec<ConjClassInfo>,
}

impl ClassData {
    pub fn new(group: &PermGroup, budget: u128) -> Result<Self> {
        let index = ElementIndex::new(group, budget)?;
        let n = index.len();
        let gens = group.generators().to_vec();
        let mut class_of = vec![u32::MAX; n];
        let mut metas: Vec<ConjClassInfo> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let tmp = metas.len() as u32;
            class_of[start as usize] = tmp;
            stack.push(start);
            let mut size = 0u64;
            let mut min_rep: Option<Permutation> = None;
            while let Some(r) = stack.pop() {
                let p = index.perm_at(r);
                size += 1;
                for s in &gens {
                    let c = p.conjugate_by(s);
                    let cr = index
                        .rank_of(&c)
                        .expect("conjugate of a member is a member");
                    if class_of[cr as usize] == u32::MAX {
                        class_of[cr as usize] = tmp;
                        stack.push(cr);
                    }
                }
                match &min_rep {
                    Some(m) if m.images() <= p.images() => {}
                    _ => min_rep = Some(p),
                }
            }
            let representative = min_rep.unwrap();
            metas.push(ConjClassInfo {
                element_order: representative.order(),
                size,
                representative,
            });
        }
        // Canonical order; remap the temporary ids assigned during the sweep.
        let k = metas.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| {
            let x = &metas[a];
            let y = &metas[b];
            (x.element_order, x.size, x.representative.images()).cmp(&(
                y.element_order,
                y.size,
                y.representative.images(),
            ))
        });
        let mut remap = vec![0u32; k];
        for (new_id, &tmp) in order.iter().enumerate() {
            remap[tmp] = new_id as u32;
        }
        for c in class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        let mut classes: Vec<Option<ConjClassInfo>> = vec![None; k];
        for (tmp, meta) in metas.into_iter().enumerate() {
            classes[remap[tmp] as usize] = Some(meta);
        }
        let classes: Vec<ConjClassInfo> = classes.into_iter().map(|c| c.unwrap()).collect();
        debug_assert!(classes[0].representative.is_identity());
        Ok(ClassData {
            index,
            class_of,
            classes,
        })
    }

    pub fn group(&self) -> &PermGroup {
        self.index.group()
    }

    pub fn index(&self) -> &ElementIndex {
        &self.index
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ConjClassInfo] {
        &self.classes
    }

    pub fn class_of_rank(&self, rank: u32) -> usize {
        self.class_of[rank as usize] as usize
    }

    pub fn class_of_perm(&self, g: &Permutation) -> Result<usize> {
        let rank = self.index.rank_of(g).ok_or(Error::NotInGroup)?;
        Ok(self.class_of_rank(rank))
    }

    /// Ranks of all members of a class, by a scan over the partition.
    pub fn members_of(&self, class: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.classes[class].size as usize);
        for (r, &c) in self.class_of.iter().enumerate() {
            if c as usize == class {
                out.push(r as u32);
            }
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

/// Centralizer of an element via orbit-stabilizer on conjugation.
///
/// The full conjugation orbit of `x` is computed first; its length divides the
/// group order and fixes the centralizer order, so Schreier generators are fed
/// into an incremental chain until that exact order is reached. Hitting the
/// target certifies completeness, since the chain's transversal products are
/// that many distinct centralizing elements.
pub fn centralizer_of(group: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    let order = group.order();
    let gens = group.generators();
    let mut orbit: Vec<Permutation> = vec![x.clone()];
    let mut conjugators: Vec<Permutation> = vec![group.identity()];
    let mut pos: HashMap<Permutation, usize> = HashMap::new();
    pos.insert(x.clone(), 0);
    let mut i = 0;
    while i < orbit.len() {
        for s in gens {
            let y = orbit[i].conjugate_by(s);
            if !pos.contains_key(&y) {
                pos.insert(y.clone(), orbit.len());
                conjugators.push(conjugators[i].compose(s));
                orbit.push(y);
            }
        }
        i += 1;
    }
    if order % orbit.len() as u128 != 0 {
        return Err(Error::Internal(format!(
            "conjugation orbit length {} does not divide the group order {}",
            orbit.len(),
            order
        )));
    }
    let target = order / orbit.len() as u128;
    let mut chain = crate::chain::StabilizerChain::new_incremental(group.degree());
    let mut cgens: Vec<Permutation> = Vec::new();
    'outer: for i in 0..orbit.len() {
        for s in gens {
            let y = orbit[i].conjugate_by(s);
            let j = pos[&y];
            let schreier = conjugators[i].compose(s).compose(&conjugators[j].inverse());
            debug_assert_eq!(x.conjugate_by(&schreier), *x);
            if chain.add_generator(&schreier) {
                cgens.push(schreier);
                if chain.order() == target {
                    break 'outer;
                }
            }
        }
    }
    if chain.order() != target {
        chain.finish();
    }
    if chain.order() != target {
        return Err(Error::Internal(format!(
            "centralizer chain reached order {} instead of {}",
            chain.order(),
            target
        )));
    }
    Ok(PermGroup::from_chain(group.degree(), cgens, chain))
}

/// Centralizer of a whole subgroup, by intersecting element centralizers.
pub fn centralizer_of_subgroup(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    let mut c = group.clone();
    for h in sub.generators() {
        c = centralizer_of(&c, h)?;
    }
    Ok(c)
}

pub fn center(group: &PermGroup) -> Result<PermGroup> {
    centralizer_of_subgroup(group, group)
}

/// Searches for `g` in the group with `a^g = b`. Exact: explores the whole
/// conjugation orbit of `a` before giving up. Any witness returned has been
/// checked by direct composition.
pub fn transporter(group: &PermGroup, a: &Permutation, b: &Permutation) -> Option<Permutation> {
    if a.cycle_type() != b.cycle_type() {
        return None;
    }
    if a == b {
        return Some(group.identity());
    }
    let gens = group.generators();
    let mut orbit: Vec<Permutation> = vec![a.clone()];
    let mut conjugators: Vec<Permutation> = vec![group.identity()];
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    seen.insert(a.clone(), 0);
    let mut i = 0;
    while i < orbit.len() {
        for s in gens {
            let y = orbit[i].conjugate_by(s);
            if !seen.contains_key(&y) {
                let g = conjugators[i].compose(s);
                if y == *b {
                    debug_assert_eq!(a.conjugate_by(&g), *b);
                    return Some(g);
                }
                seen.insert(y.clone(), orbit.len());
                conjugators.push(g);
                orbit.push(y);
            }
        }
        i += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[Point]]) -> Permutation {
        let v: Vec<Vec<Point>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &v).unwrap()
    }

    #[test]
    fn sym3_classes() {
        let s3 = PermGroup::symmetric(3);
        let cd = ClassData::new(&s3, DEFAULT_BUDGET).unwrap();
        assert_eq!(cd.n_classes(), 3);
        assert_eq!(cd.class_sizes(), vec![1, 3, 2]);
        assert_eq!(
            cd.classes()
                .iter()
                .map(|c| c.element_order)
                .collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn sym4_classes_canonical_order() {
        let s4 = PermGroup::symmetric(4);
        let cd = ClassData::new(&s4, DEFAULT_BUDGET).unwrap();
        assert_eq!(cd.n_classes(), 5);
        // (order, size): identity, double transpositions, transpositions,
        // 3-cycles, 4-cycles.
        assert_eq!(cd.class_sizes(), vec![1, 3, 6, 8, 6]);
        assert_eq!(
            cd.classes()
                .iter()
                .map(|c| c.element_order)
                .collect::<Vec<_>>(),
            vec![1, 2, 2, 3, 4]
        );
        // Class sums partition the group.
        assert_eq!(cd.class_sizes().iter().sum::<u64>(), 24);
        // Members agree with the partition map.
        let t = cyc(4, &[&[0, 1]]);
        let c = cd.class_of_perm(&t).unwrap();
        assert_eq!(cd.classes()[c].size, 6);
        assert_eq!(cd.members_of(c).len(), 6);
    }

    #[test]
    fn transposition_centralizer_in_sym4() {
        let s4 = PermGroup::symmetric(4);
        let c = centralizer_of(&s4, &cyc(4, &[&[0, 1]])).unwrap();
        assert_eq!(c.order(), 4);
        let expect =
            PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]).unwrap();
        assert!(c.same_element_set(&expect));
    }

    #[test]
    fn double_transposition_centralizer_in_sym4() {
        let s4 = PermGroup::symmetric(4);
        let c = centralizer_of(&s4, &cyc(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(c.order(), 8);
        // Its center is generated by the element itself.
        let z = center(&c).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&cyc(4, &[&[0, 1], &[2, 3]])));
    }

    #[test]
    fn center_of_symmetric_is_trivial() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(center(&s4).unwrap().order(), 1);
    }

    #[test]
    fn transporter_finds_and_refuses() {
        let s4 = PermGroup::symmetric(4);
        let a = cyc(4, &[&[0, 1]]);
        let b = cyc(4, &[&[2, 3]]);
        let g = transporter(&s4, &a, &b).expect("transpositions are conjugate");
        assert_eq!(a.conjugate_by(&g), b);
        assert!(transporter(&s4, &a, &cyc(4, &[&[0, 1], &[2, 3]])).is_none());
        // Same cycle type but in a group too small to fuse them.
        let v4 = PermGroup::from_generators(
            4,
            vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        assert!(transporter(
            &v4,
            &cyc(4, &[&[0, 1], &[2, 3]]),
            &cyc(4, &[&[0, 2], &[1, 3]])
        )
        .is_none());
    }

    #[test]
    fn index_round_trip() {
        let s5 = PermGroup::symmetric(5);
        let idx = ElementIndex::new(&s5, DEFAULT_BUDGET).unwrap();
        assert_eq!(idx.len(), 120);
        for r in [0u32, 1, 17, 59, 119] {
            let p = idx.perm_at(r);
            assert_eq!(idx.rank_of(&p), Some(r));
        }
        assert!(idx.rank_of(&cyc(5, &[&[0, 1]])).is_some());
    }

    #[test]
    fn index_budget_refusal() {
        let s8 = PermGroup::symmetric(8);
        match ElementIndex::new(&s8, 1000) {
            Err(Error::BudgetExceeded { order, limit }) => {
                assert_eq!(order, 40320);
                assert_eq!(limit, 1000);
            }
            _ => panic!("expected budget refusal"),
        }
    }

    #[test]
    fn index_wide_keys() {
        // 17 commuting transpositions force a base longer than the packed
        // representation allows.
        let degree = 34;
        let gens: Vec<Permutation> = (0..17)
            .map(|i| cyc(degree, &[&[2 * i as Point, 2 * i as Point + 1]]))
            .collect();
        let g = PermGroup::from_generators(degree, gens).unwrap();
        assert_eq!(g.order(), 1 << 17);
        assert!(g.chain().base_len() == 17);
        let idx = ElementIndex::new(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(idx.len(), 1 << 17);
        for r in [0u32, 1, 12345, (1 << 17) - 1] {
            let p = idx.perm_at(r);
            assert_eq!(idx.rank_of(&p), Some(r));
        }
    }

    #[test]
    fn trivial_group_index() {
        let t = PermGroup::trivial(3);
        let idx = ElementIndex::new(&t, DEFAULT_BUDGET).unwrap();
        assert_eq!(idx.len(), 1);
        assert_eq!(idx.perm_at(0), Permutation::identity(3));
        let cd = ClassData::new(&t, DEFAULT_BUDGET).unwrap();
        assert_eq!(cd.n_classes(), 1);
    }
}
