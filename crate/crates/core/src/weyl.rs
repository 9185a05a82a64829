//! Finite Coxeter groups as permutation groups acting on their root systems.
//!
//! Crystallographic types (A, B, D, G2, F4, E6, E7, E8) use the standard
//! Euclidean coordinates for their simple roots. H3 and H4 are built over the
//! simple-root basis with the cosine bilinear form, with scalars in Q(√5).
//! The root set is the closure of the simple roots under simple reflections,
//! each of which then acts as a permutation of the sorted root list. Dihedral
//! groups I2(n) skip the root model and act directly on 2n points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// Element a + b·√5 of the real quadratic field Q(√5). The b component stays
/// zero for every crystallographic type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Q5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Q5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Q5 { a, b }
    }

    pub fn from_integer(n: i64) -> Self {
        Q5::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Q5::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn zero() -> Self {
        Q5::from_integer(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Q5) -> Q5 {
        Q5::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Q5) -> Q5 {
        Q5::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn neg(&self) -> Q5 {
        Q5::new(-&self.a, -&self.b)
    }

    pub fn mul(&self, o: &Q5) -> Q5 {
        let five = BigRational::from_integer(BigInt::from(5));
        Q5::new(
            &self.a * &o.a + &(&self.b * &o.b) * &five,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    /// Field inverse; the norm a² − 5b² of a nonzero element is a nonzero
    /// rational because √5 is irrational.
    pub fn inv(&self) -> Q5 {
        let five = BigRational::from_integer(BigInt::from(5));
        let norm = &self.a * &self.a - &(&self.b * &self.b) * &five;
        assert!(!norm.is_zero(), "inverse of zero");
        Q5::new(&self.a / &norm, -&self.b / &norm)
    }
}

/// Labels of the supported finite Coxeter groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
    H3,
    H4,
    I2(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => *n,
            CoxeterType::G2 | CoxeterType::I2(_) => 2,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::H3 => 3,
        }
    }

    /// Order of the reflection group, from the classical formulas.
    pub fn group_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(*n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(*n),
            CoxeterType::G2 => 12,
            CoxeterType::F4 => 1152,
            CoxeterType::E6 => 51840,
            CoxeterType::E7 => 2903040,
            CoxeterType::E8 => 696729600,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14400,
            CoxeterType::I2(n) => 2 * *n as u128,
        }
    }

    pub fn root_count(&self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1),
            CoxeterType::B(n) => 2 * n * n,
            CoxeterType::D(n) => 2 * n * (n - 1),
            CoxeterType::G2 => 12,
            CoxeterType::F4 => 48,
            CoxeterType::E6 => 72,
            CoxeterType::E7 => 126,
            CoxeterType::E8 => 240,
            CoxeterType::H3 => 30,
            CoxeterType::H4 => 120,
            CoxeterType::I2(n) => 2 * n,
        }
    }

    /// The two suites whose top member is out of desk range without an
    /// explicit opt-in.
    pub fn is_large(&self) -> bool {
        matches!(self, CoxeterType::E7 | CoxeterType::E8)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::G2 => write!(f, "G2"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(n) => write!(f, "I2({n})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(format!("{s:?}"));
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let n: usize = inner.trim().parse().map_err(|_| bad())?;
            if n < 3 {
                return Err(Error::InvalidType(format!(
                    "I2({n}) needs n >= 3; I2(2) is A1 x A1"
                )));
            }
            return Ok(CoxeterType::I2(n));
        }
        match upper.as_str() {
            "G2" => return Ok(CoxeterType::G2),
            "F4" => return Ok(CoxeterType::F4),
            "E6" => return Ok(CoxeterType::E6),
            "E7" => return Ok(CoxeterType::E7),
            "E8" => return Ok(CoxeterType::E8),
            "H3" => return Ok(CoxeterType::H3),
            "H4" => return Ok(CoxeterType::H4),
            _ => {}
        }
        if upper.is_empty() {
            return Err(bad());
        }
        let (head, tail) = upper.split_at(1);
        let n: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "A" if n >= 1 => Ok(CoxeterType::A(n)),
            "B" if n >= 1 => Ok(CoxeterType::B(n)),
            "D" if n >= 2 => Ok(CoxeterType::D(n)),
            _ => Err(bad()),
        }
    }
}

/// A root system with exact coordinates and the simple reflections as
/// permutations of the root list.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: CoxeterType,
    pub rank: usize,
    pub simple_roots: Vec<Vec<Q5>>,
    /// All roots, in coordinate-lexicographic order.
    pub roots: Vec<Vec<Q5>>,
    /// reflections[i] is the action of the i-th simple reflection on `roots`.
    pub reflections: Vec<Permutation>,
    /// Bilinear form over the simple-root basis for H3/H4; None means the
    /// coordinates are Euclidean.
    gram: Option<Vec<Vec<Q5>>>,
}

impl RootSystem {
    pub fn inner(&self, u: &[Q5], v: &[Q5]) -> Q5 {
        inner_with(self.gram.as_ref(), u, v)
    }
}

fn inner_with(gram: Option<&Vec<Vec<Q5>>>, u: &[Q5], v: &[Q5]) -> Q5 {
    let mut acc = Q5::zero();
    match gram {
        None => {
            for (x, y) in u.iter().zip(v) {
                acc = acc.add(&x.mul(y));
            }
        }
        Some(g) => {
            for (i, x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in v.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    acc = acc.add(&x.mul(y).mul(&g[i][j]));
                }
            }
        }
    }
    acc
}

/// v − (2(v,α)/(α,α))·α
fn reflect(gram: Option<&Vec<Vec<Q5>>>, alpha: &[Q5], alpha_norm_inv: &Q5, v: &[Q5]) -> Vec<Q5> {
    let two = Q5::from_integer(2);
    let c = inner_with(gram, v, alpha).mul(alpha_norm_inv).mul(&two);
    v.iter().zip(alpha).map(|(x, a)| x.sub(&c.mul(a))).collect()
}

fn basis_vector(dim: usize, entries: &[(usize, Q5)]) -> Vec<Q5> {
    let mut v = vec![Q5::zero(); dim];
    for (i, q) in entries {
        v[*i] = q.clone();
    }
    v
}

/// Simple root coordinates (and bilinear form for the Q(√5) types).
fn simple_root_data(t: &CoxeterType) -> Result<(Vec<Vec<Q5>>, Option<Vec<Vec<Q5>>>)> {
    let one = || Q5::from_integer(1);
    let neg = || Q5::from_integer(-1);
    match t {
        CoxeterType::A(n) => {
            let dim = n + 1;
            let simples = (0..*n)
                .map(|i| basis_vector(dim, &[(i, one()), (i + 1, neg())]))
                .collect();
            Ok((simples, None))
        }
        CoxeterType::B(n) => {
            let dim = *n;
            let mut simples: Vec<Vec<Q5>> = (0..n - 1)
                .map(|i| basis_vector(dim, &[(i, one()), (i + 1, neg())]))
                .collect();
            simples.push(basis_vector(dim, &[(n - 1, one())]));
            Ok((simples, None))
        }
        CoxeterType::D(n) => {
            let dim = *n;
            let mut simples: Vec<Vec<Q5>> = (0..n - 1)
                .map(|i| basis_vector(dim, &[(i, one()), (i + 1, neg())]))
                .collect();
            simples.push(basis_vector(dim, &[(n - 2, one()), (n - 1, one())]));
            Ok((simples, None))
        }
        CoxeterType::G2 => Ok((
            vec![
                basis_vector(3, &[(0, one()), (1, neg())]),
                basis_vector(3, &[(0, Q5::from_integer(-2)), (1, one()), (2, one())]),
            ],
            None,
        )),
        CoxeterType::F4 => Ok((
            vec![
                basis_vector(4, &[(1, one()), (2, neg())]),
                basis_vector(4, &[(2, one()), (3, neg())]),
                basis_vector(4, &[(3, one())]),
                vec![
                    Q5::rational(1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                ],
            ],
            None,
        )),
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
            let mut simples = vec![
                vec![
                    Q5::rational(1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(-1, 2),
                    Q5::rational(1, 2),
                ],
                basis_vector(8, &[(0, one()), (1, one())]),
            ];
            for i in 0..6 {
                simples.push(basis_vector(8, &[(i, neg()), (i + 1, one())]));
            }
            simples.truncate(t.rank());
            Ok((simples, None))
        }
        CoxeterType::H3 | CoxeterType::H4 => {
            let rank = t.rank();
            // cos(pi/5) = (1 + sqrt 5)/4; cos(pi/3) = 1/2; cos(pi/2) = 0.
            let c5 = Q5::new(
                BigRational::new(BigInt::from(1), BigInt::from(4)),
                BigRational::new(BigInt::from(1), BigInt::from(4)),
            );
            let half = Q5::rational(1, 2);
            let mut gram = vec![vec![Q5::zero(); rank]; rank];
            for (i, row) in gram.iter_mut().enumerate() {
                row[i] = one();
            }
            gram[0][1] = c5.neg();
            gram[1][0] = c5.neg();
            for i in 1..rank - 1 {
                gram[i][i + 1] = half.neg();
                gram[i + 1][i] = half.neg();
            }
            let simples = (0..rank)
                .map(|i| basis_vector(rank, &[(i, one())]))
                .collect();
            Ok((simples, Some(gram)))
        }
        CoxeterType::I2(n) => Err(Error::InvalidType(format!(
            "I2({n}) has no exact coordinate model here; coxeter_group builds it directly"
        ))),
    }
}

/// Builds the full root system of a type by closing the simple roots under
/// simple reflections. Rejects I2(n), which has no exact coordinate model in
/// the scalar fields used here.
pub fn root_system(t: &CoxeterType) -> Result<RootSystem> {
    let (simples, gram) = simple_root_data(t)?;
    let expected = t.root_count();
    let norm_invs: Vec<Q5> = simples
        .iter()
        .map(|a| inner_with(gram.as_ref(), a, a).inv())
        .collect();
    let mut roots: std::collections::BTreeSet<Vec<Q5>> = simples.iter().cloned().collect();
    let mut frontier: Vec<Vec<Q5>> = simples.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for (alpha, ninv) in simples.iter().zip(&norm_invs) {
                let image = reflect(gram.as_ref(), alpha, ninv, v);
                if roots.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if roots.len() > expected {
            return Err(Error::Internal(format!(
                "root closure of {t} exceeded the classical count {expected}"
            )));
        }
        frontier = next;
    }
    if roots.len() != expected {
        return Err(Error::Verification(format!(
            "root closure of {t} produced {} roots, expected {expected}",
            roots.len()
        )));
    }
    let roots: Vec<Vec<Q5>> = roots.into_iter().collect();
    let index: BTreeMap<&Vec<Q5>, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut reflections = Vec::with_capacity(simples.len());
    for (alpha, ninv) in simples.iter().zip(&norm_invs) {
        let images: Vec<Point> = roots
            .iter()
            .map(|r| {
                let image = reflect(gram.as_ref(), alpha, ninv, r);
                index[&image] as Point
            })
            .collect();
        reflections.push(Permutation::from_images(images)?);
    }
    Ok(RootSystem {
        label: t.clone(),
        rank: t.rank(),
        simple_roots: simples,
        roots,
        reflections,
        gram,
    })
}

/// The reflection group of a type as a permutation group: on its roots for
/// the coordinate types, on 2n points for I2(n). The stabilizer chain order
/// is checked against the classical order before returning.
pub fn coxeter_group(t: &CoxeterType) -> Result<PermGroup> {
    let group = match t {
        CoxeterType::I2(n) => dihedral_on_points(*n)?,
        _ => {
            let rs = root_system(t)?;
            PermGroup::from_generators(rs.roots.len(), rs.reflections)?
        }
    };
    if group.order() != t.group_order() {
        return Err(Error::Verification(format!(
            "{t} reflection group has order {}, expected {}",
            group.order(),
            t.group_order()
        )));
    }
    Ok(group)
}

/// Dihedral group of order 2n on the points of Z/2n: generated by the
/// reflections x -> -x and x -> 2-x, whose product rotates by 2.
fn dihedral_on_points(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidType(format!("I2({n}) needs n >= 3")));
    }
    let m = 2 * n;
    let s1: Vec<Point> = (0..m).map(|x| ((m - x) % m) as Point).collect();
    let s2: Vec<Point> = (0..m).map(|x| ((m + 2 - x) % m) as Point).collect();
    PermGroup::from_generators(
        m,
        vec![Permutation::from_images(s1)?, Permutation::from_images(s2)?],
    )
}

/// Signed permutations of n coordinates as a group on 2n points, pairing
/// point 2i with 2i+1: the centralizer in Sym(2n) of the involution
/// (0 1)(2 3)...(2n−2 2n−1). Order 2^n n!.
pub fn signed_permutation_group(n: usize) -> PermGroup {
    let m = 2 * n;
    let mut gens = Vec::new();
    if n >= 1 {
        gens.push(Permutation::from_cycles(m, &[vec![0, 1]]).unwrap());
    }
    for i in 0..n.saturating_sub(1) {
        let a = (2 * i) as Point;
        gens.push(Permutation::from_cycles(m, &[vec![a, a + 2], vec![a + 1, a + 3]]).unwrap());
    }
    PermGroup::from_generators(m, gens).unwrap()
}

/// The even elements of `signed_permutation_group(n)`: double sign changes
/// and coordinate permutations. Order 2^(n−1) n! for n >= 1.
pub fn even_signed_permutation_group(n: usize) -> PermGroup {
    let m = 2 * n;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(m, &[vec![0, 1], vec![2, 3]]).unwrap());
    }
    for i in 0..n.saturating_sub(1) {
        let a = (2 * i) as Point;
        gens.push(Permutation::from_cycles(m, &[vec![a, a + 2], vec![a + 1, a + 3]]).unwrap());
    }
    PermGroup::from_generators(m, gens).unwrap()
}
