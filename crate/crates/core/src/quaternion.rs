//! Hilbert symbols over the completions of Q and local invariants of
//! rational quaternion algebras.
//!
//! Invariants are additive in public output (0 or 1/2 at each place, nonzero
//! at an even set of places) and multiplicative (+1/-1) inside the symbol
//! arithmetic. `construct_quaternion` inverts `quaternion_invariants`: given
//! an admissible set of places it produces a pair ramified exactly there.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{invmod, is_prime, powmod};
use crate::error::{Error, Result};

/// A place of Q: a finite prime or the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::InvalidPlaces(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" || t.eq_ignore_ascii_case("oo") {
            return Ok(Place::Infinity);
        }
        let p: u64 = t
            .parse()
            .map_err(|_| Error::InvalidPlaces(format!("unrecognized place {t:?}")))?;
        Place::prime(p)
    }
}

/// Additive local invariant, 1/2 at every place where the algebra ramifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceInvariant {
    pub place: Place,
    pub value: BigRational,
}

/// The quaternion algebra (a, b) with a, b nonzero rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionPair {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuaternionPair {
    pub fn new(a: BigRational, b: BigRational) -> Result<QuaternionPair> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition(
                "quaternion entries must be nonzero".into(),
            ));
        }
        Ok(QuaternionPair { a, b })
    }

    pub fn from_integers(a: i64, b: i64) -> Result<QuaternionPair> {
        QuaternionPair::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }
}

impl fmt::Display for QuaternionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

fn legendre(x: u64, p: u64) -> i8 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    let x = x % p;
    if x == 0 {
        return 0;
    }
    if powmod(x, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn mod_u64(x: &BigInt, m: u64) -> u64 {
    let r = x % BigInt::from(m);
    let r = if r.is_negative() {
        r + BigInt::from(m)
    } else {
        r
    };
    r.to_u64().unwrap()
}

/// x = p^v * unit with the unit's numerator and denominator coprime to p.
fn val_and_unit(x: &BigRational, p: u64) -> (i64, BigRational) {
    let pb = BigInt::from(p);
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut v = 0i64;
    while (&num % &pb).is_zero() {
        num /= &pb;
        v += 1;
    }
    while (&den % &pb).is_zero() {
        den /= &pb;
        v -= 1;
    }
    (v, BigRational::new(num, den))
}

/// Residue mod 8 of an odd rational, using that odd squares are 1 mod 8.
fn odd_unit_mod8(u: &BigRational) -> u64 {
    (mod_u64(u.numer(), 8) * mod_u64(u.denom(), 8)) % 8
}

fn eps(m8: u64) -> u64 {
    // (u - 1)/2 mod 2 for odd u
    (m8 % 4 == 3) as u64
}

fn omega(m8: u64) -> u64 {
    // (u^2 - 1)/8 mod 2 for odd u
    (m8 == 3 || m8 == 5) as u64
}

/// Legendre symbol of a rational unit at an odd prime.
fn unit_legendre(u: &BigRational, p: u64) -> i8 {
    legendre(mod_u64(u.numer(), p) * mod_u64(u.denom(), p) % p, p)
}

/// The Hilbert symbol (a, b)_v, +1 or -1.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: Place) -> i8 {
    assert!(
        !a.is_zero() && !b.is_zero(),
        "hilbert symbol needs nonzero entries"
    );
    match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = val_and_unit(a, 2);
            let (beta, w) = val_and_unit(b, 2);
            let u8m = odd_unit_mod8(&u);
            let w8m = odd_unit_mod8(&w);
            let exponent = eps(u8m) * eps(w8m)
                + alpha.unsigned_abs() % 2 * omega(w8m)
                + beta.unsigned_abs() % 2 * omega(u8m);
            if exponent % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = val_and_unit(a, p);
            let (beta, w) = val_and_unit(b, p);
            let mut s = 1i8;
            if alpha % 2 != 0 && beta % 2 != 0 && p % 4 == 3 {
                s = -s;
            }
            if beta % 2 != 0 {
                s *= unit_legendre(&u, p);
            }
            if alpha % 2 != 0 {
                s *= unit_legendre(&w, p);
            }
            s
        }
    }
}

fn support_primes(x: &BigRational, out: &mut BTreeSet<u64>) -> Result<()> {
    for part in [x.numer(), x.denom()] {
        let mag: BigUint = part.magnitude().clone();
        let small: u64 = mag
            .to_u64()
            .ok_or_else(|| Error::Precondition(format!("cannot factor {part}, too large")))?;
        for (p, _) in crate::arith::factor(small) {
            if p % 2 == 1 {
                out.insert(p);
            }
        }
    }
    Ok(())
}

/// Places where (a, b) ramifies, each carrying the additive invariant 1/2.
/// Always an even set.
pub fn quaternion_invariants(q: &QuaternionPair) -> Result<Vec<PlaceInvariant>> {
    let mut odd = BTreeSet::new();
    support_primes(&q.a, &mut odd)?;
    support_primes(&q.b, &mut odd)?;
    let mut places = vec![Place::Prime(2)];
    places.extend(odd.into_iter().map(Place::Prime));
    places.push(Place::Infinity);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let ramified: Vec<PlaceInvariant> = places
        .into_iter()
        .filter(|&v| hilbert_symbol(&q.a, &q.b, v) == -1)
        .map(|place| PlaceInvariant {
            place,
            value: half.clone(),
        })
        .collect();
    assert!(ramified.len() % 2 == 0, "odd ramification set for {q}");
    Ok(ramified)
}

pub fn ramified_places(q: &QuaternionPair) -> Result<Vec<Place>> {
    Ok(quaternion_invariants(q)?
        .into_iter()
        .map(|i| i.place)
        .collect())
}

const PRIME_SCAN_CAP: u64 = 10_000_000;

fn smallest_nonsquare(p: u64) -> u64 {
    (2..p)
        .find(|&x| legendre(x, p) == -1)
        .expect("odd prime has a nonsquare")
}

// m2 must be an odd prime not dividing m1.
fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> Result<(u64, u64)> {
    let m = m1
        .checked_mul(m2)
        .ok_or_else(|| Error::Precondition("congruence modulus overflow".into()))?;
    let d = ((r2 + m2 - r1 % m2) % m2) * invmod(m1 % m2, m2) % m2;
    Ok((r1 + m1 * d, m))
}

fn scan_prime(residue: u64, modulus: u64, cap: u64) -> Result<u64> {
    let mut q = residue;
    if q < 2 {
        q += modulus;
    }
    while q <= cap {
        if is_prime(q) {
            return Ok(q);
        }
        q += modulus;
    }
    Err(Error::SearchExhausted(format!(
        "no prime {residue} mod {modulus} below {cap}"
    )))
}

fn ram_set(a: i64, b: i64) -> Result<BTreeSet<Place>> {
    let pair = QuaternionPair::from_integers(a, b)?;
    Ok(ramified_places(&pair)?.into_iter().collect())
}

fn validated(a: i64, b: i64, want: &BTreeSet<Place>) -> Result<QuaternionPair> {
    let got = ram_set(a, b)?;
    if &got == want {
        Ok(QuaternionPair::from_integers(a, b)?)
    } else {
        Err(Error::Internal(format!(
            "constructed ({a}, {b}) ramifies at {got:?}, wanted {want:?}"
        )))
    }
}

/// A pair whose ramification set is exactly S.
///
/// With both 2 and the real place in S this is the Dirichlet construction:
/// t is the product of the odd primes of S, and a prime q is chosen with
/// q = -a_p mod p for a nonsquare a_p at each of them and q = 3 mod 8, making
/// (-2t, -q) ramify at every place of S and, by the product formula, nowhere
/// else. Other shapes first try small divisor pairs of 2t, then rerun the
/// congruence scan with signs and the residue of q mod 8 adjusted to the
/// 2-adic and real conditions. Every candidate is validated by an
/// independent invariant evaluation before it is returned.
pub fn construct_quaternion(s: &[Place]) -> Result<QuaternionPair> {
    construct_quaternion_capped(s, PRIME_SCAN_CAP)
}

pub fn construct_quaternion_capped(s: &[Place], cap: u64) -> Result<QuaternionPair> {
    let set: BTreeSet<Place> = s.iter().copied().collect();
    for &place in &set {
        if let Place::Prime(p) = place {
            if !is_prime(p) {
                return Err(Error::InvalidPlaces(format!("{p} is not prime")));
            }
        }
    }
    if set.len() % 2 != 0 || set.len() < 2 {
        return Err(Error::InvalidPlaces(format!(
            "need an even set of at least two places, got {} of them",
            set.len()
        )));
    }
    let has_two = set.contains(&Place::Prime(2));
    let has_inf = set.contains(&Place::Infinity);
    let odd: Vec<u64> = set
        .iter()
        .filter_map(|&v| match v {
            Place::Prime(p) if p != 2 => Some(p),
            _ => None,
        })
        .collect();
    let wide: i128 = odd.iter().map(|&p| p as i128).product();
    let t = i64::try_from(wide)
        .map_err(|_| Error::Precondition("product of odd places overflows".into()))?;

    if !(has_two && has_inf) {
        if let Some(pair) = divisor_pair_search(t, &set) {
            return Ok(pair);
        }
    }

    // Congruences on the auxiliary prime q. Both entries carry a minus sign
    // exactly when the real place must ramify. The class of q mod 8 pins the
    // symbol at 2 independently of t, and the class mod each odd p in S makes
    // sign*q a nonsquare there, so (sign*2t, sign*q) ramifies at all of S and,
    // by the product formula, nowhere else.
    let sign: i64 = if has_inf { -1 } else { 1 };
    let r8 = match (has_inf, has_two) {
        (true, true) => 3,
        (true, false) => 7,
        (false, true) => 5,
        (false, false) => 1,
    };
    let (mut residue, mut modulus) = (r8, 8u64);
    for &p in &odd {
        let nonsquare = smallest_nonsquare(p);
        let rp = if has_inf { p - nonsquare } else { nonsquare };
        (residue, modulus) = crt_pair(residue, modulus, rp, p)?;
    }
    let q = scan_prime(residue, modulus, cap)?;
    validated(sign * 2 * t, sign * (q as i64), &set)
}

fn divisor_pair_search(t: i64, want: &BTreeSet<Place>) -> Option<QuaternionPair> {
    let m = 2 * t;
    let mut divisors = Vec::new();
    for d in 1..=m {
        if m % d == 0 {
            divisors.push(d);
            divisors.push(-d);
        }
    }
    divisors.sort_by_key(|d| (d.abs(), d.is_negative()));
    for &a in &divisors {
        for &b in &divisors {
            if ram_set(a, b).is_ok_and(|got| &got == want) {
                return QuaternionPair::from_integers(a, b).ok();
            }
        }
    }
    None
}
