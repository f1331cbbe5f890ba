//! Exponent classification.
//!
//! A negative base raised to an irreducible fraction `p/q` is real only when
//! `q` is odd, and its sign is then decided by the parity of `p`. Every finite
//! binary64 value is a dyadic rational `m * 2^e`, so a float exponent has an
//! odd denominator exactly when it is an integer. That reduces the float side
//! to integer parity, decided here from the bit pattern.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ClassifyError;
use crate::interval::Interval;

/// Which reduction branch an exponent interval selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentClass {
    NonSingleton,
    SingletonEvenInteger,
    SingletonOddInteger,
    SingletonNonIntegerDyadic,
}

/// Parity class of an irreducible fraction `p/q`, `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RationalClass {
    EvenOverOdd,
    OddOverOdd,
    OddOverEven,
    Irrational,
}

/// Splits a finite `y` into `(m, e)` with `y = m * 2^e` and `m` odd.
/// Zero maps to `(0, 0)`. Returns `None` for infinities and NaN.
pub fn dyadic_parts(y: f64) -> Option<(i64, i32)> {
    if !y.is_finite() {
        return None;
    }
    if y == 0.0 {
        return Some((0, 0));
    }
    let bits = y.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (mut mantissa, mut exp) = if biased == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), biased - 1075)
    };
    let tz = mantissa.trailing_zeros();
    mantissa >>= tz;
    exp += tz as i32;
    let m = mantissa as i64;
    Some((if bits >> 63 == 1 { -m } else { m }, exp))
}

pub fn classify_exponent(y: Interval) -> Result<ExponentClass, ClassifyError> {
    let (lo, hi) = y.bounds().ok_or(ClassifyError::EmptyExponent)?;
    if lo < hi {
        return Ok(ExponentClass::NonSingleton);
    }
    let (m, e) = dyadic_parts(lo).ok_or(ClassifyError::InfiniteSingletonExponent)?;
    Ok(match (m, e) {
        (0, _) => ExponentClass::SingletonEvenInteger,
        (_, e) if e > 0 => ExponentClass::SingletonEvenInteger,
        (_, 0) => ExponentClass::SingletonOddInteger,
        _ => ExponentClass::SingletonNonIntegerDyadic,
    })
}

/// Parity class of `p/q`. The input must already be in lowest terms with a
/// positive denominator.
pub fn classify_rational(p: &BigInt, q: &BigInt) -> Result<RationalClass, ClassifyError> {
    if !q.is_positive() || !p.abs().gcd(q).is_one() {
        return Err(ClassifyError::NotIrreducible);
    }
    let even = |v: &BigInt| v.is_even();
    Ok(match (even(p), even(q)) {
        (true, false) => RationalClass::EvenOverOdd,
        (false, false) => RationalClass::OddOverOdd,
        (false, true) => RationalClass::OddOverEven,
        // gcd would be at least 2
        (true, true) => return Err(ClassifyError::NotIrreducible),
    })
}

/// Exact `p/q` of a finite float in lowest terms.
pub fn dyadic_fraction(y: f64) -> Option<(BigInt, BigInt)> {
    let (m, e) = dyadic_parts(y)?;
    if m == 0 {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let m = BigInt::from(m);
    Some(if e >= 0 {
        (m << e as usize, BigInt::one())
    } else {
        (m, BigInt::one() << (-e) as usize)
    })
}
