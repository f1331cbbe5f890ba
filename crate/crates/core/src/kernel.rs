//! The non-negative-base power kernel.
//!
//! For `a >= 0` the real power `a^b` is monotone in `a` for fixed `b` and
//! monotone in `b` for fixed `a`, so its range over a box is spanned by the
//! four corner values. Each corner is bracketed by an outward-rounded scalar
//! evaluation, or returned exactly when a shortcut proves the value.
//!
//! Corner conventions (limits of the graph, all exact):
//!
//! | corner              | value                      |
//! |---------------------|----------------------------|
//! | `a^0`, `1^b`        | `1`                        |
//! | `0^b`               | `0` if `b > 0`, `+inf` if `b < 0` |
//! | `+inf^b`            | `+inf` if `b > 0`, `0` if `b < 0` |
//! | `a^+inf`            | `+inf` if `a > 1`, `0` if `a < 1` |
//! | `a^-inf`            | `0` if `a > 1`, `+inf` if `a < 1` |
//!
//! A base interval that is exactly `[0, 0]` is not a limit of positive bases,
//! so it is evaluated pointwise instead: `0^b` is undefined for `b < 0`.

use crate::config::EvalConfig;
use crate::exponent::dyadic_parts;
use crate::interval::{step_down, step_up, Interval};

/// One side of a scalar bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerValue {
    pub value: f64,
    /// Set only when `value` is provably the real `a^b`.
    pub exact: bool,
}

impl CornerValue {
    fn exact(value: f64) -> CornerValue {
        CornerValue { value, exact: true }
    }

    fn approx(value: f64) -> CornerValue {
        CornerValue {
            value,
            exact: false,
        }
    }
}

/// Scalar `a^b` for `a >= 0`, assumed faithfully rounded (error below one
/// ulp). The kernel widens its output by `slack_ulps`.
pub trait ScalarPow {
    fn pow(&self, a: f64, b: f64) -> f64;
}

/// The platform `pow` through `f64::powf`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LibmPow;

impl ScalarPow for LibmPow {
    #[inline]
    fn pow(&self, a: f64, b: f64) -> f64 {
        a.powf(b)
    }
}

impl<F: Fn(f64, f64) -> f64> ScalarPow for F {
    fn pow(&self, a: f64, b: f64) -> f64 {
        self(a, b)
    }
}

/// Lower and upper bracket of `a^b` for `a` in `[0, +inf]`.
pub fn corner_pow(a: f64, b: f64, cfg: &EvalConfig) -> (CornerValue, CornerValue) {
    corner_pow_with(a, b, cfg, &LibmPow)
}

pub fn corner_pow_with<P: ScalarPow + ?Sized>(
    a: f64,
    b: f64,
    cfg: &EvalConfig,
    backend: &P,
) -> (CornerValue, CornerValue) {
    debug_assert!(a >= 0.0 && !b.is_nan());
    if let Some(v) = limit_value(a, b) {
        let c = CornerValue::exact(v);
        return (c, c);
    }
    if cfg.exact_paths() {
        if let Some(v) = exact_value(a, b) {
            let c = CornerValue::exact(v);
            return (c, c);
        }
    }
    let v = backend.pow(a, b);
    if v.is_nan() {
        return (CornerValue::approx(0.0), CornerValue::approx(f64::INFINITY));
    }
    let k = cfg.slack_ulps();
    let lo = step_down(v, k).max(0.0);
    let hi = step_up(v, k);
    (CornerValue::approx(lo), CornerValue::approx(hi))
}

/// Values fixed by the limit conventions: zero or infinite base, infinite
/// exponent, and `b = 0` at those points.
fn limit_value(a: f64, b: f64) -> Option<f64> {
    let special = a == 0.0 || a == f64::INFINITY || b.is_infinite();
    if !special {
        return None;
    }
    Some(if b == 0.0 || a == 1.0 {
        1.0
    } else if a == 0.0 {
        if b > 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else if a == f64::INFINITY {
        if b > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    } else if (a > 1.0) == (b > 0.0) {
        f64::INFINITY
    } else {
        0.0
    })
}

/// Exactness shortcuts for finite positive `a` and finite `b`.
fn exact_value(a: f64, b: f64) -> Option<f64> {
    if b == 0.0 || a == 1.0 {
        return Some(1.0);
    }
    if b == 1.0 {
        return Some(a);
    }
    let (bm, be) = dyadic_parts(b)?;
    // integer exponents only, small enough for i64 arithmetic below
    if !(0..=12).contains(&be) {
        return None;
    }
    let n = bm.checked_mul(1i64 << be)?;
    let (am, ae) = dyadic_parts(a)?;
    let am = am as u64;
    if am == 1 {
        return ldexp_exact(1, (ae as i64).checked_mul(n)?);
    }
    if n < 0 {
        return None;
    }
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(am).filter(|&v| v < (1u64 << 53))?;
    }
    ldexp_exact(acc, (ae as i64).checked_mul(n)?)
}

/// `m * 2^e` if it is exactly representable as a finite binary64.
pub(crate) fn ldexp_exact(m: u64, e: i64) -> Option<f64> {
    if m == 0 {
        return Some(0.0);
    }
    let tz = m.trailing_zeros();
    let m = m >> tz;
    let e = e.checked_add(tz as i64)?;
    let len = (64 - m.leading_zeros()) as i64;
    if len > 53 {
        return None;
    }
    let top = e + len - 1;
    if top > 1023 {
        return None;
    }
    if top >= -1022 {
        let frac = (m << (53 - len)) & ((1u64 << 52) - 1);
        Some(f64::from_bits((((top + 1023) as u64) << 52) | frac))
    } else {
        let shift = e + 1074;
        if shift < 0 {
            return None;
        }
        Some(f64::from_bits(m << shift))
    }
}

/// Interval power restricted to non-negative bases.
///
/// `x` is first intersected with `[0, +inf]`. The result encloses the
/// convex hull of the closure of `{a^b : a ∈ x, a >= 0, b ∈ y}`; it is
/// empty when that set is.
pub fn pow0(x: Interval, y: Interval, cfg: &EvalConfig) -> Interval {
    pow0_with(x, y, cfg, &LibmPow)
}

pub fn pow0_with<P: ScalarPow + ?Sized>(
    x: Interval,
    y: Interval,
    cfg: &EvalConfig,
    backend: &P,
) -> Interval {
    let (Some((a0, a1)), Some((b0, b1))) = (x.intersect_nonneg().bounds(), y.bounds()) else {
        return Interval::EMPTY;
    };
    if a1 == 0.0 {
        return pow_zero_base(b0, b1);
    }
    let mut lo = f64::INFINITY;
    let mut hi = 0.0_f64;
    let mut visit = |a: f64, b: f64| {
        let (l, h) = corner_pow_with(a, b, cfg, backend);
        lo = lo.min(l.value);
        hi = hi.max(h.value);
    };
    visit(a0, b0);
    if b1 != b0 {
        visit(a0, b1);
    }
    if a1 != a0 {
        visit(a1, b0);
        if b1 != b0 {
            visit(a1, b1);
        }
    }
    Interval::from_ordered(lo.min(f64::MAX), hi)
}

/// `{0^b : b ∈ [b0, b1]}` where `0^0 = 1` and `0^b` is undefined for `b < 0`.
fn pow_zero_base(b0: f64, b1: f64) -> Interval {
    if b1 < 0.0 {
        return Interval::EMPTY;
    }
    let lo = if b1 > 0.0 { 0.0 } else { 1.0 };
    let hi = if b0 <= 0.0 { 1.0 } else { 0.0 };
    Interval::from_ordered(lo, hi)
}
