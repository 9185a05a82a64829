//! Permutations of {0, 1, ..., degree-1} stored as image arrays.
//!
//! Composition is left-to-right: `(a.compose(&b)).apply(x) == b.apply(a.apply(x))`,
//! so conjugation `a.conjugate_by(y)` computes `y^-1 * a * y` and group elements
//! act on points on the right throughout the crate.

use std::fmt;

use crate::error::Error;

pub type Point = u16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Builds from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<Point>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if (p as usize) >= n || seen[p as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "image array of length {n} is not a bijection"
                )));
            }
            seen[p as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles; points absent from every cycle are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Point>]) -> Result<Self, Error> {
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if (p as usize) >= degree || moved[p as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {p} out of range or repeated"
                    )));
                }
                moved[p as usize] = true;
                images[p as usize] = q;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &p)| i == p as usize)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as Point;
        }
        Permutation { images }
    }

    /// `y^-1 * self * y`.
    pub fn conjugate_by(&self, y: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[y.images[i] as usize] = y.images[p as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        (0..self.degree())
            .all(|i| other.images[self.images[i] as usize] == self.images[other.images[i] as usize])
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for len in self.cycle_lengths() {
            ord = num_integer::lcm(ord, len as u64);
        }
        ord
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Sign: true iff the permutation is a product of an even number of
    /// transpositions.
    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// Cycle type as a descending list of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<u16> {
        let mut lengths: Vec<u16> = self.cycle_lengths().iter().map(|&l| l as u16).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Nontrivial cycles in increasing order of least moved point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as Point);
                p = self.images[p] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn min_moved_point(&self) -> Option<Point> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i != p as usize)
            .map(|(i, _)| i as Point)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[Point]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        let ab = a.compose(&b);
        for x in 0..3 {
            assert_eq!(ab.apply(x), b.apply(a.apply(x)));
        }
    }

    #[test]
    fn inverse_cancels() {
        let a = Permutation::from_cycles(5, &[vec![0, 3, 1], vec![2, 4]]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn conjugation_matches_definition() {
        let a = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let y = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let direct = y.inverse().compose(&a).compose(&y);
        assert_eq!(a.conjugate_by(&y), direct);
        assert_eq!(
            a.conjugate_by(&y),
            Permutation::from_cycles(4, &[vec![2, 3]]).unwrap()
        );
    }

    #[test]
    fn order_and_cycle_type() {
        let a = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.order(), 6);
        assert_eq!(a.cycle_type(), vec![3, 2, 1]);
        assert_eq!(a.pow(6), Permutation::identity(6));
        assert_eq!(a.pow(-1), a.inverse());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn display_uses_cycles() {
        let a = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 4, 3]]).unwrap();
        assert_eq!(format!("{a}"), "(0 1)(2 4 3)");
        assert_eq!(format!("{}", Permutation::identity(3)), "()");
    }
}
