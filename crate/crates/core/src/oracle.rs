//! Brute-force reference for `x^y` at rational points.
//!
//! Works purely in big-integer arithmetic: `|x|^(p/q)` is bracketed by
//! integer `q`-th root extraction on a scaled numerator. Nothing here touches
//! floating-point `pow` or the interval kernel, so the two can be checked
//! against each other.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exponent::{classify_rational, RationalClass};
use crate::interval::Interval;

/// Bits of relative precision guaranteed for inexact brackets.
pub const ORACLE_PRECISION_BITS: u32 = 80;

// root extraction targets a couple of guard bits past the guarantee
const ROOT_BITS: u64 = ORACLE_PRECISION_BITS as u64 + 2;

/// Why a rational power has no real value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Undefined {
    #[error("negative base with an even-denominator exponent")]
    NegativeBaseEvenDenominator,
    #[error("zero base with a negative exponent")]
    ZeroToNegativePower,
    #[error("exponent numerator too large for the oracle")]
    ExponentTooLarge,
}

/// Certified bracket `lower <= x^y <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleValue {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl OracleValue {
    fn exact(v: BigRational) -> OracleValue {
        OracleValue {
            lower: v.clone(),
            upper: v,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    fn negate(self) -> OracleValue {
        OracleValue {
            lower: -self.upper,
            upper: -self.lower,
        }
    }

    /// Whether the whole bracket lies inside `iv`. Bounds touching an
    /// endpoint count as inside.
    pub fn within(&self, iv: &Interval) -> bool {
        let Some((lo, hi)) = iv.bounds() else {
            return false;
        };
        cmp_float(lo, &self.lower) != Ordering::Greater
            && cmp_float(hi, &self.upper) != Ordering::Less
    }
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// Orders an extended-real float against an exact rational.
pub fn cmp_float(v: f64, r: &BigRational) -> Ordering {
    if v == f64::INFINITY {
        return Ordering::Greater;
    }
    if v == f64::NEG_INFINITY {
        return Ordering::Less;
    }
    let exact = BigRational::from_float(v).expect("finite bound");
    exact.cmp(r)
}

/// Real value of `x^y` for rational `x` and `y`, or why it has none.
pub fn oracle_pow(x: &BigRational, y: &BigRational) -> Result<OracleValue, Undefined> {
    let p = y.numer();
    let q = y.denom();
    if x.is_zero() {
        return match p.sign() {
            Sign::Plus => Ok(OracleValue::exact(BigRational::zero())),
            Sign::NoSign => Ok(OracleValue::exact(BigRational::one())),
            Sign::Minus => Err(Undefined::ZeroToNegativePower),
        };
    }
    let negate = if x.is_negative() {
        match classify_rational(p, q).expect("BigRational is kept reduced") {
            RationalClass::OddOverEven | RationalClass::Irrational => {
                return Err(Undefined::NegativeBaseEvenDenominator)
            }
            RationalClass::EvenOverOdd => false,
            RationalClass::OddOverOdd => true,
        }
    } else {
        false
    };
    let mag = magnitude(&x.abs(), p, q)?;
    Ok(if negate { mag.negate() } else { mag })
}

/// Bracket of `base^(p/q)` for `base > 0`.
fn magnitude(base: &BigRational, p: &BigInt, q: &BigInt) -> Result<OracleValue, Undefined> {
    let n = p.abs().to_u32().ok_or(Undefined::ExponentTooLarge)?;
    let q = q.to_u32().ok_or(Undefined::ExponentTooLarge)?;
    // base^(n/q) = base^whole * base^(rem/q), which keeps the root small
    let whole = n / q;
    let rem = n % q;
    let whole_pow = rational_pow(base, whole);
    let mut bracket = if rem == 0 {
        OracleValue::exact(whole_pow)
    } else {
        let root = root_bracket(&rational_pow(base, rem), q);
        OracleValue {
            lower: &root.lower * &whole_pow,
            upper: &root.upper * &whole_pow,
        }
    };
    if p.is_negative() {
        bracket = OracleValue {
            lower: bracket.upper.recip(),
            upper: bracket.lower.recip(),
        };
    }
    Ok(bracket)
}

fn rational_pow(base: &BigRational, n: u32) -> BigRational {
    BigRational::new_raw(base.numer().pow(n), base.denom().pow(n))
}

/// Bracket of `v^(1/q)` for `v > 0`, `q >= 2`, with relative width at most
/// `2^-ROOT_BITS`.
fn root_bracket(v: &BigRational, q: u32) -> OracleValue {
    let (a, b) = (v.numer(), v.denom());
    // log2(v^(1/q)) >= (bits(a) - 1 - bits(b)) / q
    let log2_lower = (a.bits() as i64 - 1 - b.bits() as i64).div_euclid(q as i64);
    let mut k = (ROOT_BITS as i64 + 1 - log2_lower).max(0) as u64;
    loop {
        let scaled: BigInt = (a << (k * q as u64)) / b;
        let s = scaled.nth_root(q);
        if s.bits() <= ROOT_BITS {
            k += 8;
            continue;
        }
        let scale = BigInt::one() << k;
        let lower = BigRational::new(s.clone(), scale.clone());
        let is_exact = s.pow(q) * b == a << (k * q as u64);
        if is_exact {
            return OracleValue::exact(lower);
        }
        let upper = BigRational::new(s + 1, scale);
        return OracleValue { lower, upper };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn width_ok(v: &OracleValue) -> bool {
        let width = &v.upper - &v.lower;
        let mag = v.lower.abs().max(v.upper.abs()).max(BigRational::one());
        let bound = mag / BigRational::from_integer(BigInt::one() << ORACLE_PRECISION_BITS);
        width <= bound
    }

    #[test]
    fn cube_root_of_negative_eight() {
        let v = oracle_pow(&rat(-8, 1), &rat(1, 3)).unwrap();
        assert!(v.is_exact());
        assert_eq!(v.lower, rat(-2, 1));
    }

    #[test]
    fn even_denominator_negative_base() {
        assert_eq!(
            oracle_pow(&rat(-2, 1), &rat(1, 2)),
            Err(Undefined::NegativeBaseEvenDenominator)
        );
    }

    #[test]
    fn four_to_three_halves() {
        let v = oracle_pow(&rat(4, 1), &rat(3, 2)).unwrap();
        assert!(v.is_exact());
        assert_eq!(v.lower, rat(8, 1));
    }

    #[test]
    fn zero_base() {
        assert_eq!(oracle_pow(&rat(0, 1), &rat(3, 7)).unwrap().lower, rat(0, 1));
        assert_eq!(oracle_pow(&rat(0, 1), &rat(0, 1)).unwrap().lower, rat(1, 1));
        assert_eq!(
            oracle_pow(&rat(0, 1), &rat(-1, 3)),
            Err(Undefined::ZeroToNegativePower)
        );
    }

    #[test]
    fn sqrt_ten_bracket() {
        let v = oracle_pow(&rat(10, 1), &rat(1, 2)).unwrap();
        assert!(!v.is_exact());
        assert!(width_ok(&v));
        // lower^2 <= 10 <= upper^2
        assert!(&v.lower * &v.lower <= rat(10, 1));
        assert!(&v.upper * &v.upper >= rat(10, 1));
    }

    #[test]
    fn negative_exponents_and_signs() {
        let v = oracle_pow(&rat(-27, 8), &rat(-2, 3)).unwrap();
        assert!(v.is_exact());
        assert_eq!(v.lower, rat(4, 9));
        let v = oracle_pow(&rat(-27, 8), &rat(-1, 3)).unwrap();
        assert_eq!(v.lower, rat(-2, 3));
        let v = oracle_pow(&rat(-3, 1), &rat(5, 7)).unwrap();
        assert!(v.upper < rat(0, 1));
        assert!(width_ok(&v));
    }

    #[test]
    fn tiny_and_huge_magnitudes() {
        let v = oracle_pow(&rat(1, 1_000_000), &rat(97, 13)).unwrap();
        assert!(width_ok(&v));
        assert!(v.lower > rat(0, 1));
        let v = oracle_pow(&rat(1_000_000, 3), &rat(-95, 11)).unwrap();
        assert!(width_ok(&v));
        let v = oracle_pow(&rat(7, 5), &rat(1001, 99)).unwrap();
        assert!(width_ok(&v));
    }

    #[test]
    fn within_interval() {
        let v = oracle_pow(&rat(2, 1), &rat(1, 2)).unwrap();
        assert!(v.within(&Interval::new(1.41, 1.42).unwrap()));
        assert!(!v.within(&Interval::new(1.0, 1.414).unwrap()));
        assert!(!v.within(&Interval::EMPTY));
        let e = oracle_pow(&rat(3, 1), &rat(2, 1)).unwrap();
        assert!(e.within(&Interval::new(9.0, 9.0).unwrap()));
        assert!(e.within(&Interval::new(f64::NEG_INFINITY, 9.0).unwrap()));
    }
}
