//! Interval extension of the real power function `x^y` for arbitrary base
//! and exponent intervals.
//!
//! The general case is reduced to a kernel over non-negative bases
//! ([`pow0`]); [`pow_full`] assembles the result from kernel calls on `x` and
//! `-x` according to the class of the exponent interval. An exact
//! big-rational [`oracle`] checks containment independently of the kernel.
//!
//! ```
//! use ipow::{pow_full, EvalConfig, Interval};
//!
//! let x = Interval::new(-2.0, -2.0).unwrap();
//! let y = Interval::new(3.0, 3.0).unwrap();
//! let r = pow_full(x, y, &EvalConfig::default()).unwrap();
//! assert_eq!(r, Interval::new(-8.0, -8.0).unwrap());
//! ```

pub mod bench;
pub mod check;
pub mod cli;
pub mod config;
pub mod error;
pub mod exponent;
pub mod interval;
pub mod kernel;
pub mod oracle;
pub mod pow;
pub mod text;

pub use check::{
    check_containment, check_containment_with, check_random_boxes, ContainmentReport, Violation,
};
pub use config::EvalConfig;
pub use error::{ClassifyError, ConfigError, IntervalError, ParseError};
pub use exponent::{classify_exponent, classify_rational, ExponentClass, RationalClass};
pub use interval::{hull, intersect_nonneg, negate, next_down, next_up, Interval};
pub use kernel::{corner_pow, pow0, CornerValue, ScalarPow};
pub use oracle::{oracle_pow, OracleValue, Undefined};
pub use pow::{pow_full, pow_full_traced};
pub use text::{format_interval, parse_interval, BoundStyle};
