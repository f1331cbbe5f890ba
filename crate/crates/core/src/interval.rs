//! Closed intervals over the extended binary64 line.
//!
//! An [`Interval`] is either empty or a pair `lo <= hi` of non-NaN `f64`
//! values with `lo != +inf` and `hi != -inf`. Signed zeros are folded to
//! `+0.0` on construction, so the derived equality is set equality.

use std::fmt;

use crate::error::IntervalError;

/// A closed, connected, possibly empty subset of the extended reals.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    // Empty is encoded as lo = +inf, hi = -inf.
    lo: f64,
    hi: f64,
}

impl Interval {
    /// The canonical empty interval.
    pub const EMPTY: Interval = Interval {
        lo: f64::INFINITY,
        hi: f64::NEG_INFINITY,
    };

    /// The whole extended line `[-inf, +inf]`.
    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    /// `[0, +inf]`.
    pub const NONNEG: Interval = Interval {
        lo: 0.0,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Result<Interval, IntervalError> {
        if lo.is_nan() || hi.is_nan() {
            return Err(IntervalError::NanBound);
        }
        if lo > hi {
            return Err(IntervalError::Inverted { lo, hi });
        }
        if lo == f64::INFINITY || hi == f64::NEG_INFINITY {
            return Err(IntervalError::InfiniteSingleton);
        }
        Ok(Interval::from_ordered(lo, hi))
    }

    /// The singleton `[v, v]`.
    pub fn point(v: f64) -> Result<Interval, IntervalError> {
        Interval::new(v, v)
    }

    /// Builds an interval from bounds the caller has already validated.
    #[inline]
    pub(crate) fn from_ordered(lo: f64, hi: f64) -> Interval {
        debug_assert!(lo <= hi && lo != f64::INFINITY && hi != f64::NEG_INFINITY);
        // `+ 0.0` maps -0.0 to +0.0 and leaves every other value alone.
        Interval {
            lo: lo + 0.0,
            hi: hi + 0.0,
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Lower bound, or `None` for the empty interval.
    #[inline]
    pub fn lo(&self) -> Option<f64> {
        (!self.is_empty()).then_some(self.lo)
    }

    /// Upper bound, or `None` for the empty interval.
    #[inline]
    pub fn hi(&self) -> Option<f64> {
        (!self.is_empty()).then_some(self.hi)
    }

    /// Both bounds, or `None` for the empty interval.
    #[inline]
    pub fn bounds(&self) -> Option<(f64, f64)> {
        (!self.is_empty()).then_some((self.lo, self.hi))
    }

    #[inline]
    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// `self ⊆ other`. The empty interval is a subset of everything.
    pub fn is_subset(&self, other: &Interval) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }

    /// Smallest interval containing both operands.
    pub fn hull(self, other: Interval) -> Interval {
        if self.is_empty() {
            return other;
        }
        if other.is_empty() {
            return self;
        }
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(self, other: Interval) -> Interval {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            Interval::EMPTY
        } else {
            Interval { lo, hi }
        }
    }

    /// `{-t | t ∈ self}`.
    pub fn negate(self) -> Interval {
        if self.is_empty() {
            return Interval::EMPTY;
        }
        Interval::from_ordered(-self.hi, -self.lo)
    }

    /// `self ∩ [0, +inf]`.
    pub fn intersect_nonneg(self) -> Interval {
        self.intersect(Interval::NONNEG)
    }
}

pub fn hull(a: Interval, b: Interval) -> Interval {
    a.hull(b)
}

pub fn negate(a: Interval) -> Interval {
    a.negate()
}

pub fn intersect_nonneg(a: Interval) -> Interval {
    a.intersect_nonneg()
}

/// Smallest representable value strictly greater than `v`; `+inf` is fixed.
#[inline]
pub fn next_up(v: f64) -> f64 {
    v.next_up()
}

/// Largest representable value strictly less than `v`; `-inf` is fixed.
#[inline]
pub fn next_down(v: f64) -> f64 {
    v.next_down()
}

/// Applies [`next_down`] `k` times.
pub fn step_down(mut v: f64, k: u32) -> f64 {
    for _ in 0..k {
        v = v.next_down();
    }
    v
}

/// Applies [`next_up`] `k` times.
pub fn step_up(mut v: f64, k: u32) -> f64 {
    for _ in 0..k {
        v = v.next_up();
    }
    v
}

impl Default for Interval {
    fn default() -> Self {
        Interval::EMPTY
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds() {
            None => f.write_str("Interval(empty)"),
            Some((lo, hi)) => write!(f, "Interval[{lo:?}, {hi:?}]"),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_interval(
            self,
            crate::text::BoundStyle::Decimal,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn hull_examples() {
        assert_eq!(hull(iv(1.0, 2.0), iv(5.0, 6.0)), iv(1.0, 6.0));
        assert_eq!(hull(Interval::EMPTY, iv(0.0, 1.0)), iv(0.0, 1.0));
        assert_eq!(hull(iv(2.0, 4.0), iv(-4.0, -2.0)), iv(-4.0, 4.0));
        assert_eq!(hull(Interval::EMPTY, Interval::EMPTY), Interval::EMPTY);
    }

    #[test]
    fn negate_examples() {
        assert_eq!(negate(iv(2.0, 4.0)), iv(-4.0, -2.0));
        assert_eq!(negate(iv(f64::NEG_INFINITY, 3.0)), iv(-3.0, f64::INFINITY));
        assert_eq!(negate(Interval::EMPTY), Interval::EMPTY);
    }

    #[test]
    fn next_up_down_examples() {
        assert_eq!(next_up(1.0), 1.0 + f64::EPSILON);
        assert_eq!(next_up(f64::INFINITY), f64::INFINITY);
        let d = next_down(0.0);
        assert!(d < 0.0);
        assert_eq!(d.to_bits(), (-f64::from_bits(1)).to_bits());
        assert_eq!(next_down(f64::NEG_INFINITY), f64::NEG_INFINITY);
        assert_eq!(step_up(1.0, 2), 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(step_down(1.0, 0), 1.0);
    }

    #[test]
    fn intersect_nonneg_examples() {
        assert_eq!(intersect_nonneg(iv(-2.0, 3.0)), iv(0.0, 3.0));
        assert_eq!(intersect_nonneg(iv(-5.0, -1.0)), Interval::EMPTY);
        assert_eq!(intersect_nonneg(iv(1.0, 4.0)), iv(1.0, 4.0));
        assert_eq!(intersect_nonneg(iv(-3.0, 0.0)), iv(0.0, 0.0));
    }

    #[test]
    fn constructor_rejects_bad_bounds() {
        assert!(matches!(
            Interval::new(f64::NAN, 1.0),
            Err(IntervalError::NanBound)
        ));
        assert!(matches!(
            Interval::new(2.0, 1.0),
            Err(IntervalError::Inverted { .. })
        ));
        assert!(matches!(
            Interval::point(f64::INFINITY),
            Err(IntervalError::InfiniteSingleton)
        ));
        assert!(matches!(
            Interval::point(f64::NEG_INFINITY),
            Err(IntervalError::InfiniteSingleton)
        ));
    }

    #[test]
    fn signed_zero_is_folded() {
        let a = iv(-0.0, -0.0);
        assert!(a.lo().unwrap().is_sign_positive());
        assert_eq!(a, iv(0.0, 0.0));
        assert!(negate(iv(0.0, 1.0)).hi().unwrap().is_sign_positive());
    }

    #[test]
    fn empty_is_canonical() {
        let e1 = iv(-5.0, -1.0).intersect_nonneg();
        let e2 = iv(1.0, 2.0).intersect(iv(3.0, 4.0));
        assert_eq!(e1, e2);
        assert_eq!(e1, Interval::EMPTY);
        assert!(Interval::EMPTY.is_subset(&iv(0.0, 0.0)));
        assert!(!Interval::EMPTY.contains(0.0));
    }
}
