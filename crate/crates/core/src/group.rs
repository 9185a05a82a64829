//! Permutation groups backed by a stabilizer chain.

use std::sync::Arc;

use rand::Rng;

use crate::chain::{ChainElements, StabilizerChain};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

/// A finite permutation group on `{0, .., degree-1}`.
///
/// The chain is built once at construction and shared on clone, so clones are
/// cheap and membership tests never rebuild anything.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Arc<StabilizerChain>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "generator of degree {} in a group of degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let chain = StabilizerChain::build(degree, &gens);
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            chain: Arc::new(chain),
        })
    }

    pub fn from_chain(degree: usize, gens: Vec<Permutation>, chain: StabilizerChain) -> Self {
        PermGroup {
            degree,
            gens,
            chain: Arc::new(chain),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            chain: Arc::new(StabilizerChain::build(degree, &[])),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let degree = n.max(1);
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap());
            let full: Vec<Point> = (0..n as Point).collect();
            gens.push(Permutation::from_cycles(degree, &[full]).unwrap());
        }
        PermGroup::from_generators(degree, gens).unwrap()
    }

    pub fn cyclic(gen: Permutation) -> Self {
        let degree = gen.degree();
        PermGroup::from_generators(degree, vec![gen]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Equality as element sets, independent of generating sets.
    pub fn same_element_set(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if !a.commutes_with(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Iterates every element exactly once in a deterministic order.
    pub fn elements(&self) -> ChainElements<'_> {
        self.chain.elements()
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        self.chain.random_element(rng)
    }

    /// The two groups acting on disjoint point ranges; `other`'s points are
    /// shifted up by `self.degree()`.
    pub fn direct_product(&self, other: &PermGroup) -> PermGroup {
        let degree = self.degree + other.degree;
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut images: Vec<Point> = g.images().to_vec();
            images.extend((self.degree..degree).map(|i| i as Point));
            gens.push(Permutation::from_images(images).unwrap());
        }
        for g in &other.gens {
            let mut images: Vec<Point> = (0..self.degree as Point).collect();
            images.extend(g.images().iter().map(|&p| p + self.degree as Point));
            gens.push(Permutation::from_images(images).unwrap());
        }
        PermGroup::from_generators(degree, gens).unwrap()
    }
}

/// Largest power of two dividing `n`.
pub fn two_part(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    1u128 << n.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        assert_eq!(PermGroup::symmetric(1).order(), 1);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::symmetric(7).order(), 5040);
    }

    #[test]
    fn subgroup_and_equality() {
        let s4 = PermGroup::symmetric(4);
        let v4 = PermGroup::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_subgroup_of(&s4));
        assert!(!s4.is_subgroup_of(&v4));
        assert!(v4.is_abelian());
        assert!(!s4.is_abelian());

        let v4_other = PermGroup::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 3], vec![1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(v4.same_element_set(&v4_other));
    }

    #[test]
    fn direct_product_order_and_action() {
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::symmetric(2);
        let p = s3.direct_product(&s2);
        assert_eq!(p.degree(), 5);
        assert_eq!(p.order(), 12);
        assert!(p.contains(&Permutation::from_cycles(5, &[vec![3, 4]]).unwrap()));
        assert!(p.contains(&Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap()));
    }

    #[test]
    fn two_part_values() {
        assert_eq!(two_part(1), 1);
        assert_eq!(two_part(48), 16);
        assert_eq!(two_part(1152), 128);
    }
}
