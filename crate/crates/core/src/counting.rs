//! Partitions into powers of two, and rigorous verdicts for the logarithmic
//! bounds that compare their growth against centralizer counts.
//!
//! All logarithms are base 2. Verdicts never go through floating point: each
//! log is pinned inside an exact dyadic interval, intervals are refined until
//! the comparison is decided, and equality cases go through exact integer
//! arithmetic (a rational has a rational base-2 log only at powers of two).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Number of partitions of n into parts 1, 2, 4, 8, ...
pub fn binary_partition_count(n: u32) -> BigUint {
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    let mut part = 1usize;
    while part <= n.max(1) {
        for total in part..=n {
            let prev = ways[total - part].clone();
            ways[total] += prev;
        }
        part *= 2;
    }
    ways[n].clone()
}

/// Dyadic enclosure lo <= x <= hi with hi - lo = 2^-prec, or an exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    fn exact(v: BigRational) -> Self {
        Enclosure {
            hi: v.clone(),
            lo: v,
        }
    }

    fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Widest-case product for intervals of non-negative numbers.
    fn square_nonneg(&self) -> Enclosure {
        Enclosure {
            lo: &self.lo * &self.lo,
            hi: &self.hi * &self.hi,
        }
    }

    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Enclose log2 of a positive integer within 2^-prec, exactly at powers of 2.
///
/// Digit extraction: with x = 2^k * m, m in [1,2), squaring m doubles the
/// fractional part of the log, so each squaring yields one bit. The mantissa
/// is kept as a dyadic interval rounded outward to `scale` bits; if rounding
/// ever blurs a bit decision, the scale doubles and extraction restarts.
pub fn log2_enclosure(x: &BigUint, prec: u32) -> Enclosure {
    assert!(!x.is_zero(), "log of zero");
    if x.count_ones() == 1 {
        let k = x.bits() - 1;
        return Enclosure::exact(BigRational::from_integer(BigInt::from(k)));
    }
    let k = (x.bits() - 1) as i64;
    let mut scale = (prec + 32).next_power_of_two();
    'retry: loop {
        // Mantissa interval at denominator 2^scale, numerators in [2^scale, 2^(scale+1)).
        let shift = scale as i64 - k;
        let (mut lo, mut hi) = if shift >= 0 {
            let v = BigInt::from(x.clone()) << shift as u32;
            (v.clone(), v)
        } else {
            let down = BigInt::from(x.clone()) >> (-shift) as u32;
            (down.clone(), down + 1)
        };
        let one = BigInt::one() << scale;
        let two = BigInt::one() << (scale + 1);
        let mut bits = BigInt::zero();
        for _ in 0..prec {
            // Square and round back to `scale` fractional bits, outward.
            lo = (&lo * &lo) >> scale;
            hi = ((&hi * &hi) + (&one - 1)) >> scale;
            bits <<= 1;
            if lo >= two {
                bits += 1;
                lo >>= 1;
                hi = (&hi + 1) >> 1;
            } else if hi <= two {
                // bit 0, nothing to renormalize
            } else {
                scale *= 2;
                continue 'retry;
            }
        }
        let denom = BigInt::one() << prec;
        let lo_log = BigRational::new(BigInt::from(k) * &denom + &bits, denom.clone());
        let hi_log = BigRational::new(BigInt::from(k) * &denom + &bits + 1, denom);
        return Enclosure {
            lo: lo_log,
            hi: hi_log,
        };
    }
}

/// Bound data for one n: the exact count, the two formulas of the growth
/// comparison as enclosures, and rigorously decided verdicts.
#[derive(Clone, Debug)]
pub struct CountBounds {
    pub n: u32,
    pub c_exact: BigUint,
    /// (log2 n)^2, the upper-bound side.
    pub log_c_upper: Enclosure,
    /// (n-3)^2/16 - n/4 - n*log2(n), the lower-bound side.
    pub log_e_lower: Enclosure,
    /// log2 c(n) <= (log2 n)^2, decided exactly.
    pub log_bound_holds: bool,
    /// log_e_lower > log_c_upper, decided exactly.
    pub crossover_holds: bool,
}

fn formulas(n: u32, prec: u32) -> (Enclosure, Enclosure) {
    let log_n = log2_enclosure(&BigUint::from(n), prec);
    let upper = log_n.square_nonneg();
    let nn = rational(n as i64, 1);
    let fixed = rational((n as i64 - 3) * (n as i64 - 3), 16) - rational(n as i64, 4);
    let lower = Enclosure {
        lo: &fixed - &nn * &log_n.hi,
        hi: &fixed - &nn * &log_n.lo,
    };
    (upper, lower)
}

/// Evaluate both bound formulas at n and decide the two verdicts.
pub fn bound_check(n: u32) -> CountBounds {
    assert!(n >= 1);
    let c = binary_partition_count(n);
    let mut prec = 64u32;
    loop {
        let (log_c_upper, log_e_lower) = formulas(n, prec);
        let log_c = log2_enclosure(&c, prec);
        let log_bound = if log_c.is_exact() && log_c_upper.is_exact() {
            Some(log_c.lo <= log_c_upper.lo)
        } else if log_c.hi <= log_c_upper.lo {
            Some(true)
        } else if log_c.lo > log_c_upper.hi {
            Some(false)
        } else {
            None
        };
        let crossover = if log_e_lower.is_exact() && log_c_upper.is_exact() {
            Some(log_e_lower.lo > log_c_upper.lo)
        } else if log_e_lower.lo > log_c_upper.hi {
            Some(true)
        } else if log_e_lower.hi <= log_c_upper.lo {
            Some(false)
        } else {
            None
        };
        if let (Some(log_bound_holds), Some(crossover_holds)) = (log_bound, crossover) {
            return CountBounds {
                n,
                c_exact: c,
                log_c_upper,
                log_e_lower,
                log_bound_holds,
                crossover_holds,
            };
        }
        // Both sides are transcendental unless n is a power of two (handled
        // exactly), so some finite precision always separates them.
        prec *= 2;
        assert!(prec <= 1 << 20, "bound comparison failed to converge");
    }
}
