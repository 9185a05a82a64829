//! Exact arithmetic in cyclotomic fields.
//!
//! A value is a rational linear combination of powers of a primitive e-th
//! root of unity, stored on the power basis 1, z, .., z^(phi(e)-1) modulo the
//! e-th cyclotomic polynomial. Every constructor and operation canonicalizes:
//! the stored conductor is the smallest one whose field contains the value,
//! and is never congruent to 2 mod 4 (those fields coincide with their odd
//! half). Conductor 1 therefore characterizes rational values exactly, and
//! derived equality and ordering on (conductor, coefficients) are semantic.
//!
//! Reduction data per conductor (the cyclotomic polynomial and the expansion
//! of every needed power of the root on the basis) is computed once and kept
//! in a process-wide table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient.
pub fn phi(e: u64) -> u64 {
    let mut n = e;
    let mut result = e;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(e: u32) -> Vec<u32> {
    let mut n = e;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(e: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= e {
        if e % d == 0 {
            out.push(d);
            if d != e / d {
                out.push(e / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact division of polynomials over the integers; the divisor must be monic
/// and divide exactly. Coefficient order is ascending.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            rem[k + j] -= &c * &den[j];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// The e-th cyclotomic polynomial, ascending coefficients, via exact division
/// of x^e - 1 by the cyclotomic polynomials of the proper divisors.
fn cyclotomic_poly(e: u32) -> Vec<BigInt> {
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for d in divisors(e) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for d2 in divisors(d) {
            if d2 < d {
                num = poly_div_exact(&num, &memo[&d2]);
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&e).unwrap()
}

struct ConductorData {
    phi: usize,
    /// rows[k] expands z^k on the power basis; k runs high enough for both
    /// products of basis elements and arbitrary exponents below e.
    rows: Vec<Vec<BigInt>>,
}

fn conductor_data(e: u32) -> Arc<ConductorData> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<ConductorData>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    if let Some(data) = guard.get(&e) {
        return data.clone();
    }
    let poly = cyclotomic_poly(e);
    let phi = poly.len() - 1;
    let max_k = (2 * phi.saturating_sub(1)).max(e as usize - 1);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_k + 1);
    let mut row0 = vec![BigInt::zero(); phi];
    row0[0] = BigInt::one();
    rows.push(row0);
    for _ in 1..=max_k {
        let prev = rows.last().unwrap();
        let mut next = vec![BigInt::zero(); phi];
        for j in 1..phi {
            next[j] = prev[j - 1].clone();
        }
        let carry = prev[phi - 1].clone();
        if !carry.is_zero() {
            for j in 0..phi {
                next[j] -= &carry * &poly[j];
            }
        }
        rows.push(next);
    }
    let data = Arc::new(ConductorData { phi, rows });
    guard.insert(e, data.clone());
    data
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// A primitive e-th root of unity.
    pub fn zeta(e: u32) -> Result<Self> {
        Self::root_combination(e, &[(1, BigRational::one())])
    }

    /// The value sum of c * z^k over the given (k, c) terms, z a primitive
    /// e-th root of unity.
    pub fn root_combination(e: u32, terms: &[(u64, BigRational)]) -> Result<Self> {
        if e == 0 {
            return Err(Error::Precondition(
                "root of unity order must be positive".into(),
            ));
        }
        let reduced = reduce_terms(
            e,
            terms
                .iter()
                .map(|(k, c)| ((k % e as u64) as usize, c.clone())),
        );
        let (conductor, coeffs) = canonicalize(e, reduced);
        Ok(Cyclotomic { conductor, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// True for elements of the ring of integers: on the minimal conductor's
    /// power basis those are exactly the integer-coefficient combinations.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn negate(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        if self.conductor == 1 {
            return other.add_rational(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.add_rational(&other.coeffs[0]);
        }
        if self.conductor == other.conductor {
            let coeffs: Vec<BigRational> = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            let (conductor, coeffs) = canonicalize(self.conductor, coeffs);
            return Cyclotomic { conductor, coeffs };
        }
        let e = lcm_u32(self.conductor, other.conductor);
        let mut acc = self.lift_raw(e);
        for (a, b) in acc.iter_mut().zip(other.lift_raw(e)) {
            *a += b;
        }
        let (conductor, coeffs) = canonicalize(e, acc);
        Cyclotomic { conductor, coeffs }
    }

    fn add_rational(&self, q: &BigRational) -> Self {
        debug_assert!(self.conductor > 1);
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += q;
        // A nonrational value stays nonrational under rational shifts, and its
        // field does not change, so the conductor is untouched.
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let e = lcm_u32(self.conductor, other.conductor);
        let a = self.lift_raw(e);
        let b = other.lift_raw(e);
        let data = conductor_data(e);
        let mut products: Vec<BigRational> = vec![BigRational::zero(); 2 * data.phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                products[i + j] += ai * bj;
            }
        }
        let reduced = reduce_terms(e, products.into_iter().enumerate());
        let (conductor, coeffs) = canonicalize(e, reduced);
        Cyclotomic { conductor, coeffs }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        // Nonzero rational scaling preserves the minimal conductor.
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under the Galois automorphism sending the root to its r-th
    /// power; r must be coprime to the conductor.
    pub fn galois_conjugate(&self, r: u64) -> Result<Self> {
        if self.conductor == 1 {
            return Ok(self.clone());
        }
        let e = self.conductor as u64;
        let r = r % e;
        if num_integer::gcd(r, e) != 1 {
            return Err(Error::NotCoprime(r));
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u64 * r % e) as usize, c.clone()));
        let reduced = reduce_terms(self.conductor, terms);
        let (conductor, coeffs) = canonicalize(self.conductor, reduced);
        Ok(Cyclotomic { conductor, coeffs })
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois_conjugate(self.conductor as u64 - 1)
            .expect("conductor - 1 is a unit")
    }

    fn lift_raw(&self, e: u32) -> Vec<BigRational> {
        debug_assert_eq!(e % self.conductor, 0);
        if e == self.conductor {
            return self.coeffs.clone();
        }
        let step = (e / self.conductor) as usize;
        reduce_terms(
            e,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i * step, c.clone())),
        )
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// Expands a sum of c * z^k terms on the power basis of conductor e.
fn reduce_terms(e: u32, terms: impl IntoIterator<Item = (usize, BigRational)>) -> Vec<BigRational> {
    let data = conductor_data(e);
    let mut acc = vec![BigRational::zero(); data.phi];
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        if k < data.phi {
            acc[k] += c;
            continue;
        }
        for (j, r) in data.rows[k].iter().enumerate() {
            if !r.is_zero() {
                acc[j] += &c * r;
            }
        }
    }
    acc
}

/// Raw Galois remap on a fixed conductor, no canonicalization.
fn raw_galois(e: u32, coeffs: &[BigRational], r: u64) -> Vec<BigRational> {
    reduce_terms(
        e,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u64 * r % e as u64) as usize, c.clone())),
    )
}

/// Minimizes the conductor. For each prime p dividing e, the value descends
/// to conductor e/p exactly when it is fixed by the automorphisms that fix
/// the smaller field pointwise; the descent itself solves the linear system
/// expressing the value on the smaller power basis. A conductor congruent to
/// 2 mod 4 always descends at p = 2 (the fixing subgroup is trivial), so the
/// canonical conductor never has that form and conductor 1 means rational.
fn canonicalize(e: u32, coeffs: Vec<BigRational>) -> (u32, Vec<BigRational>) {
    let mut e = e;
    let mut coeffs = coeffs;
    'outer: while e > 1 {
        for p in prime_factors(e) {
            if let Some((e2, c2)) = try_descend(e, &coeffs, p) {
                e = e2;
                coeffs = c2;
                continue 'outer;
            }
        }
        break;
    }
    (e, coeffs)
}

fn try_descend(e: u32, coeffs: &[BigRational], p: u32) -> Option<(u32, Vec<BigRational>)> {
    let e2 = e / p;
    // Fixedness under every r with r = 1 mod e/p, r coprime to e.
    for k in 1..p as u64 {
        let r = 1 + k * e2 as u64;
        if num_integer::gcd(r, e as u64) != 1 {
            continue;
        }
        if raw_galois(e, coeffs, r) != coeffs {
            return None;
        }
    }
    let data = conductor_data(e);
    let phi2 = conductor_data(e2).phi;
    // Columns: z_{e/p}^j = z_e^(p j) expanded on the conductor-e basis.
    let mut m: Vec<Vec<BigRational>> = (0..data.phi)
        .map(|_| vec![BigRational::zero(); phi2 + 1])
        .collect();
    for j in 0..phi2 {
        for (i, v) in data.rows[p as usize * j].iter().enumerate() {
            m[i][j] = BigRational::from_integer(v.clone());
        }
    }
    for (i, c) in coeffs.iter().enumerate() {
        m[i][phi2] = c.clone();
    }
    solve_overdetermined(m, phi2).map(|b| (e2, b))
}

/// Gaussian elimination for a consistent overdetermined system with unique
/// solution; returns None when inconsistent.
fn solve_overdetermined(mut m: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivot_row_of: Vec<usize> = Vec::with_capacity(cols);
    let mut row = 0;
    for col in 0..cols {
        let pr = (row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, pr);
        let inv = m[row][col].recip();
        for j in col..=cols {
            let v = &m[row][j] * &inv;
            m[row][j] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let v = &m[r][j] - &f * &m[row][j];
                    m[r][j] = v;
                }
            }
        }
        pivot_row_of.push(row);
        row += 1;
    }
    // Remaining rows must be all zero or the system is inconsistent.
    for r in row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    Some(
        (0..cols)
            .map(|c| m[pivot_row_of[c]][cols].clone())
            .collect(),
    )
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn zeta_pow(e: u32, k: u64) -> Cyclotomic {
        Cyclotomic::root_combination(e, &[(k, BigRational::one())]).unwrap()
    }

    fn mobius(e: u32) -> i64 {
        let ps = prime_factors(e);
        let mut n = e;
        for &p in &ps {
            n /= p;
            if n % p == 0 {
                return 0;
            }
        }
        if ps.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn primitive_third_roots_sum_to_minus_one() {
        let z = Cyclotomic::zeta(3).unwrap();
        let sum = z.add(&z.mul(&z));
        assert_eq!(sum, Cyclotomic::from_integer(-1));
        assert!(sum.is_rational());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::zeta(4).unwrap();
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn golden_combination_satisfies_its_quadratic() {
        // z5 + z5^4 is a root of x^2 + x - 1.
        let x = zeta_pow(5, 1).add(&zeta_pow(5, 4));
        let val = x.mul(&x).add(&x).sub(&Cyclotomic::one());
        assert!(val.is_zero());
    }

    #[test]
    fn galois_conjugate_of_sqrt2_combination() {
        // z8 + z8^7 = sqrt 2; the automorphism r = 3 negates it.
        let x = zeta_pow(8, 1).add(&zeta_pow(8, 7));
        let y = x.galois_conjugate(3).unwrap();
        assert_eq!(y, x.negate());
        // And squares to 2.
        assert_eq!(x.mul(&x), Cyclotomic::from_integer(2));
    }

    #[test]
    fn galois_orbit_sums_are_moebius_values() {
        for e in [5u32, 6, 7, 8, 9, 12, 15, 30] {
            let mut sum = Cyclotomic::zero();
            for r in 1..=e as u64 {
                if num_integer::gcd(r, e as u64) == 1 {
                    sum = sum.add(&zeta_pow(e, r));
                }
            }
            assert_eq!(sum, Cyclotomic::from_integer(mobius(e)), "conductor {e}");
        }
    }

    #[test]
    fn conductors_are_minimal() {
        let z8 = Cyclotomic::zeta(8).unwrap();
        assert_eq!(z8.conductor(), 8);
        assert_eq!(z8.mul(&z8).conductor(), 4);
        // z8 * z8^7 = 1.
        assert!(z8.mul(&zeta_pow(8, 7)).is_one());
        // A primitive 6th root lives in the conductor-3 field.
        assert_eq!(Cyclotomic::zeta(6).unwrap().conductor(), 3);
        // And one of conductor 30 in the conductor-15 field.
        assert_eq!(Cyclotomic::zeta(30).unwrap().conductor(), 15);
    }

    #[test]
    fn coprimality_is_enforced() {
        let z6_as_3 = Cyclotomic::zeta(6).unwrap();
        assert!(matches!(
            z6_as_3.galois_conjugate(3),
            Err(Error::NotCoprime(_))
        ));
        assert!(z6_as_3.galois_conjugate(2).is_ok());
    }

    #[test]
    fn conjugation_fixes_real_combinations() {
        let x = zeta_pow(8, 1).add(&zeta_pow(8, 7));
        assert_eq!(x.conj(), x);
        let z5 = Cyclotomic::zeta(5).unwrap();
        assert_eq!(z5.conj(), zeta_pow(5, 4));
        assert!(z5.mul(&z5.conj()).is_one());
    }

    #[test]
    fn ring_laws_on_mixed_conductors() {
        let vals = [
            Cyclotomic::from_integer(2),
            Cyclotomic::zeta(3).unwrap(),
            Cyclotomic::zeta(4).unwrap(),
            zeta_pow(8, 3),
            Cyclotomic::zeta(5).unwrap().scale(&q(-3)),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in &vals {
                    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn integrality_detection() {
        assert!(Cyclotomic::zeta(8).unwrap().is_integral());
        assert!(
            !Cyclotomic::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)))
                .is_integral()
        );
        // (z5 + z5^4) is an algebraic integer.
        assert!(zeta_pow(5, 1).add(&zeta_pow(5, 4)).is_integral());
    }

    #[test]
    fn ordering_groups_by_conductor() {
        let rational = Cyclotomic::from_integer(100);
        let z3 = Cyclotomic::zeta(3).unwrap();
        assert!(rational < z3);
        assert!(Cyclotomic::from_integer(-5) < rational);
    }
}
