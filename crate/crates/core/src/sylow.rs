//! Sylow 2-subgroups.
//!
//! The generic routine grows a 2-subgroup one normalizing 2-element at a time.
//! Whenever the current subgroup is still too small, some 2-element outside it
//! normalizes it (inside a Sylow overgroup the normalizer of a proper subgroup
//! is strictly larger), so the deterministic fallback scan always succeeds and
//! the loop reaches the full 2-part of the group order.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::group::{two_part, PermGroup};
use crate::perm::{Permutation, Point};

const RANDOM_TRIALS_PER_STEP: u32 = 3000;

/// 2-power part of the order of `g`, as the power of `g` killing its odd part.
fn two_element_part(g: &Permutation) -> Permutation {
    let m = g.order();
    let odd = m / two_part(m as u128) as u64;
    g.pow(odd as i64)
}

fn normalizes(y: &Permutation, pgens: &[Permutation], p: &PermGroup) -> bool {
    pgens.iter().all(|pg| p.contains(&pg.conjugate_by(y)))
}

pub fn sylow2(group: &PermGroup) -> Result<PermGroup> {
    let order = group.order();
    let target = two_part(order);
    let mut pgens: Vec<Permutation> = Vec::new();
    let mut p = PermGroup::trivial(group.degree());
    let mut rng = ChaCha12Rng::seed_from_u64(0x2517_0000 ^ order as u64);
    while p.order() < target {
        let y = find_extender(group, &pgens, &p, &mut rng)?;
        pgens.push(y);
        p = PermGroup::from_generators(group.degree(), pgens.clone())?;
    }
    if p.order() != target {
        return Err(Error::Internal(format!(
            "sylow construction overshot: {} vs 2-part {}",
            p.order(),
            target
        )));
    }
    Ok(p)
}

/// A 2-element outside `p` normalizing `p`: random products first, then a
/// deterministic full scan.
fn find_extender(
    group: &PermGroup,
    pgens: &[Permutation],
    p: &PermGroup,
    rng: &mut ChaCha12Rng,
) -> Result<Permutation> {
    for _ in 0..RANDOM_TRIALS_PER_STEP {
        let g = group.random_element(rng);
        let y = two_element_part(&g);
        if !y.is_identity() && !p.contains(&y) && normalizes(&y, pgens, p) {
            return Ok(y);
        }
    }
    for g in group.elements() {
        let y = two_element_part(&g);
        if !y.is_identity() && !p.contains(&y) && normalizes(&y, pgens, p) {
            return Ok(y);
        }
    }
    Err(Error::Internal(
        "no normalizing 2-element found below the full 2-part".into(),
    ))
}

/// Sylow 2-subgroup of the natural symmetric group on `n` points, built
/// directly: one iterated-wreath block per binary digit of `n`.
pub fn sylow2_symmetric(n: usize) -> Result<PermGroup> {
    let degree = n.max(1);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut offset = 0usize;
    let mut rem = n;
    while rem > 0 {
        let k = usize::BITS as usize - 1 - rem.leading_zeros() as usize;
        let block = 1usize << k;
        block_gens(degree, offset, k, &mut gens)?;
        offset += block;
        rem -= block;
    }
    let p = PermGroup::from_generators(degree, gens)?;
    let expect = two_part((1..=n as u128).product());
    if p.order() != expect {
        return Err(Error::Internal(format!(
            "wreath generators give order {} instead of {}",
            p.order(),
            expect
        )));
    }
    Ok(p)
}

/// Generators of the iterated wreath product on `[offset, offset + 2^k)`:
/// the swap of the two halves plus, recursively, the generators on the first
/// half. That is k generators for a group of order 2^(2^k - 1).
fn block_gens(degree: usize, offset: usize, k: usize, out: &mut Vec<Permutation>) -> Result<()> {
    if k == 0 {
        return Ok(());
    }
    let half = 1usize << (k - 1);
    let mut images: Vec<Point> = (0..degree as Point).collect();
    for j in 0..half {
        images[offset + j] = (offset + half + j) as Point;
        images[offset + half + j] = (offset + j) as Point;
    }
    out.push(Permutation::from_images(images)?);
    block_gens(degree, offset, k - 1, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylow2_of_sym4() {
        let s4 = PermGroup::symmetric(4);
        let p = sylow2(&s4).unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.is_subgroup_of(&s4));
        assert!(p.order().is_power_of_two());
    }

    #[test]
    fn sylow2_of_odd_group_is_trivial() {
        let c3 = PermGroup::cyclic(Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap());
        assert_eq!(sylow2(&c3).unwrap().order(), 1);
    }

    #[test]
    fn sylow2_of_two_group_is_itself() {
        let d8 = PermGroup::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d8.order(), 8);
        let p = sylow2(&d8).unwrap();
        assert!(p.same_element_set(&d8));
    }

    #[test]
    fn symmetric_sylow_orders() {
        // |Syl_2(Sym_n)| = 2^(n - s_2(n)).
        for (n, exp) in [(1, 0u32), (2, 1), (3, 1), (4, 3), (6, 4), (7, 4), (14, 11)] {
            let p = sylow2_symmetric(n).unwrap();
            assert_eq!(p.order(), 1u128 << exp, "n = {n}");
        }
    }

    #[test]
    fn symmetric_sylow_agrees_with_generic() {
        for n in [4usize, 5, 6] {
            let sn = PermGroup::symmetric(n);
            let direct = sylow2_symmetric(n).unwrap();
            assert!(direct.is_subgroup_of(&sn));
            let generic = sylow2(&sn).unwrap();
            assert_eq!(direct.order(), generic.order());
        }
    }
}
