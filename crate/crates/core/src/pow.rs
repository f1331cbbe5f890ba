//! Interval power for arbitrary base and exponent intervals.
//!
//! Over negative bases the real power is `|x|^y` when `y` is a fraction with
//! even numerator and odd denominator, `-|x|^y` when both are odd, and
//! undefined otherwise. Every piece is therefore a reflection of the
//! non-negative kernel evaluated on `-x`, and the result is the hull of the
//! pieces selected by the exponent class:
//!
//! | exponent class          | result                                   |
//! |-------------------------|------------------------------------------|
//! | non-singleton           | `pow0(x, y) ∪ pow0(-x, y) ∪ -pow0(-x, y)` |
//! | singleton even integer  | `pow0(x, y) ∪ pow0(-x, y)`               |
//! | singleton odd integer   | `pow0(x, y) ∪ -pow0(-x, y)`              |
//! | singleton non-integer   | `pow0(x, y)`                             |
//!
//! For a non-singleton `y` both fraction families are dense in `y`, which is
//! why both reflections appear. The reflected base is the negative part of
//! `x` only; a base interval with no negative values yields exactly
//! `pow0(x, y)`.

use crate::config::EvalConfig;
use crate::error::ClassifyError;
use crate::exponent::{classify_exponent, ExponentClass};
use crate::interval::Interval;
use crate::kernel::{pow0_with, LibmPow, ScalarPow};

pub fn pow_full(x: Interval, y: Interval, cfg: &EvalConfig) -> Result<Interval, ClassifyError> {
    pow_full_traced(x, y, cfg).map(|(r, _)| r)
}

/// [`pow_full`] that also reports the dispatch branch taken. The branch is
/// `None` when an empty operand short-circuits evaluation.
pub fn pow_full_traced(
    x: Interval,
    y: Interval,
    cfg: &EvalConfig,
) -> Result<(Interval, Option<ExponentClass>), ClassifyError> {
    pow_full_with(x, y, cfg, &LibmPow)
}

pub fn pow_full_with<P: ScalarPow + ?Sized>(
    x: Interval,
    y: Interval,
    cfg: &EvalConfig,
    backend: &P,
) -> Result<(Interval, Option<ExponentClass>), ClassifyError> {
    if x.is_empty() || y.is_empty() {
        return Ok((Interval::EMPTY, None));
    }
    let class = classify_exponent(y)?;
    let direct = pow0_with(x, y, cfg, backend);
    let reflected = reflected_base(x);
    if reflected.is_empty() {
        return Ok((direct, Some(class)));
    }
    let mirror = || pow0_with(reflected, y, cfg, backend);
    let r = match class {
        ExponentClass::NonSingleton => {
            let m = mirror();
            direct.hull(m).hull(m.negate())
        }
        ExponentClass::SingletonEvenInteger => direct.hull(mirror()),
        ExponentClass::SingletonOddInteger => direct.hull(mirror().negate()),
        ExponentClass::SingletonNonIntegerDyadic => direct,
    };
    Ok((r, Some(class)))
}

/// `-x ∩ [0, +inf]` when `x` has negative values, empty otherwise.
fn reflected_base(x: Interval) -> Interval {
    match x.lo() {
        Some(lo) if lo < 0.0 => x.negate().intersect_nonneg(),
        _ => Interval::EMPTY,
    }
}
