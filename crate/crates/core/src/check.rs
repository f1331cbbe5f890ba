//! Randomized containment checking of [`pow_full`] against the oracle.
//!
//! Samples are drawn from a seeded ChaCha stream, so a `(box, n, seed)`
//! triple always produces the same sample set and the same report.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::EvalConfig;
use crate::interval::Interval;
use crate::oracle::{oracle_pow, Undefined};
use crate::pow::pow_full;
use crate::text::{format_interval, BoundStyle};

/// Largest exponent denominator drawn for non-singleton exponent boxes.
pub const MAX_SAMPLE_DENOMINATOR: i64 = 99;

/// Half-width of the finite window substituted for an unbounded base side.
const BASE_WINDOW: f64 = 1024.0;
/// Exponent samples are restricted to `[-EXPONENT_WINDOW, EXPONENT_WINDOW]`.
const EXPONENT_WINDOW: f64 = 64.0;

/// Parity family requested for a sampled exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    EvenOverOdd,
    OddOverOdd,
    OddOverEven,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// Position of the sample in the drawn sequence.
    pub index: usize,
    pub x: String,
    pub y: String,
    pub oracle_lo: String,
    pub oracle_hi: String,
    /// The offending interval as a hex-float literal.
    pub computed: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ContainmentReport {
    /// Points drawn.
    pub samples: usize,
    /// Points with a real value that were checked.
    pub defined: usize,
    pub violations: Vec<Violation>,
}

impl ContainmentReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, other: ContainmentReport) {
        let offset = self.samples;
        self.samples += other.samples;
        self.defined += other.defined;
        self.violations
            .extend(other.violations.into_iter().map(|mut v| {
                v.index += offset;
                v
            }));
    }

    /// One JSON object per violation, newline separated.
    pub fn to_json_lines(&self) -> String {
        self.violations
            .iter()
            .map(|v| serde_json::to_string(v).expect("plain strings serialize"))
            .map(|line| line + "\n")
            .collect()
    }
}

impl fmt::Display for ContainmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "samples: {}  defined: {}  violations: {}  {}",
            self.samples,
            self.defined,
            self.violations.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for v in &self.violations {
            writeln!(
                f,
                "  #{}: x = {}, y = {}, oracle in [{}, {}], computed {}",
                v.index, v.x, v.y, v.oracle_lo, v.oracle_hi, v.computed
            )?;
        }
        Ok(())
    }
}

/// Checks `pow_full(xbox, ybox)` against `n` oracle samples under the
/// default configuration.
pub fn check_containment(xbox: Interval, ybox: Interval, n: usize, seed: u64) -> ContainmentReport {
    check_containment_with(xbox, ybox, n, seed, &EvalConfig::default())
}

pub fn check_containment_with(
    xbox: Interval,
    ybox: Interval,
    n: usize,
    seed: u64,
    cfg: &EvalConfig,
) -> ContainmentReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check_box(&mut rng, xbox, ybox, n, cfg)
}

/// Runs `n` checks spread over random boxes, `per_box` samples each.
pub fn check_random_boxes(
    n: usize,
    per_box: usize,
    seed: u64,
    cfg: &EvalConfig,
) -> ContainmentReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_box = per_box.max(1);
    let mut report = ContainmentReport::default();
    let mut left = n;
    while left > 0 {
        let take = left.min(per_box);
        let (xbox, ybox) = random_box(&mut rng);
        report.merge(check_box(&mut rng, xbox, ybox, take, cfg));
        left -= take;
    }
    report
}

fn check_box(
    rng: &mut impl Rng,
    xbox: Interval,
    ybox: Interval,
    n: usize,
    cfg: &EvalConfig,
) -> ContainmentReport {
    let mut report = ContainmentReport::default();
    let (Some(xb), Some(yb)) = (xbox.bounds(), ybox.bounds()) else {
        return report;
    };
    let computed = match pow_full(xbox, ybox, cfg) {
        Ok(r) => r,
        Err(_) => return report,
    };
    let Some(yb) = clip(yb, EXPONENT_WINDOW) else {
        return report;
    };
    let xb = finite_window(xb);
    for index in 0..n {
        let x = sample_base(rng, xb);
        let y = sample_exponent(rng, yb);
        report.samples += 1;
        let value = match oracle_pow(&x, &y) {
            Ok(v) => v,
            Err(Undefined::NegativeBaseEvenDenominator | Undefined::ZeroToNegativePower) => {
                continue
            }
            Err(Undefined::ExponentTooLarge) => continue,
        };
        report.defined += 1;
        if !value.within(&computed) {
            report.violations.push(Violation {
                index,
                x: x.to_string(),
                y: y.to_string(),
                oracle_lo: value.lower.to_string(),
                oracle_hi: value.upper.to_string(),
                computed: format_interval(&computed, BoundStyle::Hex),
            });
        }
    }
    report
}

fn finite_window((lo, hi): (f64, f64)) -> (f64, f64) {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (lo, hi),
        (true, false) => (lo, lo.max(0.0) + BASE_WINDOW),
        (false, true) => (hi.min(0.0) - BASE_WINDOW, hi),
        (false, false) => (-BASE_WINDOW, BASE_WINDOW),
    }
}

fn clip((lo, hi): (f64, f64), w: f64) -> Option<(f64, f64)> {
    let (lo, hi) = (lo.max(-w), hi.min(w));
    (lo <= hi).then_some((lo, hi))
}

fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite")
}

/// Endpoint with probability 1/4, otherwise `lo + (hi - lo) * k / d`.
fn sample_base(rng: &mut impl Rng, (lo, hi): (f64, f64)) -> BigRational {
    if lo == hi || rng.random_ratio(1, 4) {
        return rational(if rng.random_bool(0.5) { lo } else { hi });
    }
    let d: i64 = rng.random_range(1..=1000);
    let k: i64 = rng.random_range(0..=d);
    let t = BigRational::new(BigInt::from(k), BigInt::from(d));
    let lo = rational(lo);
    &lo + (rational(hi) - &lo) * t
}

/// A singleton box yields its own value. Otherwise a fraction `p/q` with
/// `q <= 99`, its parity family chosen uniformly; occasionally an endpoint.
fn sample_exponent(rng: &mut impl Rng, (lo, hi): (f64, f64)) -> BigRational {
    if lo == hi || rng.random_ratio(1, 8) {
        return rational(if rng.random_bool(0.5) { lo } else { hi });
    }
    let family = match rng.random_range(0..3) {
        0 => Family::EvenOverOdd,
        1 => Family::OddOverOdd,
        _ => Family::OddOverEven,
    };
    let (rlo, rhi) = (rational(lo), rational(hi));
    for _ in 0..32 {
        if let Some(y) = fraction_in(rng, family, &rlo, &rhi) {
            return y;
        }
    }
    // box too narrow for small denominators
    let t = BigRational::new(BigInt::from(rng.random_range(0..=64)), BigInt::from(64));
    &rlo + (&rhi - &rlo) * t
}

fn fraction_in(
    rng: &mut impl Rng,
    family: Family,
    lo: &BigRational,
    hi: &BigRational,
) -> Option<BigRational> {
    let q: i64 = loop {
        let q = rng.random_range(1..=MAX_SAMPLE_DENOMINATOR);
        if (family == Family::OddOverEven) == q.is_even() {
            break q;
        }
    };
    let qb = BigRational::from_integer(BigInt::from(q));
    let pmin = (lo * &qb).ceil().to_integer().to_i64()?;
    let pmax = (hi * &qb).floor().to_integer().to_i64()?;
    let want_even = family == Family::EvenOverOdd;
    // first and last admissible p of the right parity
    let first = if pmin.is_even() == want_even {
        pmin
    } else {
        pmin + 1
    };
    let last = if pmax.is_even() == want_even {
        pmax
    } else {
        pmax - 1
    };
    if first > last {
        return None;
    }
    let p = first + 2 * rng.random_range(0..=(last - first) / 2);
    if p.gcd(&q) != 1 {
        return None;
    }
    Some(BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// A random `(base, exponent)` box. Base boxes cover every sign pattern,
/// zero-touching and unbounded shapes; exponent boxes cover all four
/// dispatch classes.
pub fn random_box(rng: &mut impl Rng) -> (Interval, Interval) {
    (random_base_box(rng), random_exponent_box(rng))
}

fn nice_or_float<R: Rng + ?Sized>(rng: &mut R, max: f64) -> f64 {
    if rng.random_bool(0.5) {
        // multiples of 1/8
        let k = rng.random_range(0..=(max * 8.0) as i64);
        k as f64 / 8.0
    } else if rng.random_bool(0.5) {
        rng.random_range(0.0..max)
    } else {
        // log-uniform over [1e-3, max]
        let e = rng.random_range(-3.0..max.log10());
        10f64.powf(e)
    }
}

fn ordered(a: f64, b: f64) -> Interval {
    Interval::new(a.min(b), a.max(b)).expect("finite ordered bounds")
}

pub fn random_base_box(rng: &mut impl Rng) -> Interval {
    const M: f64 = 16.0;
    let a = nice_or_float(rng, M);
    let b = nice_or_float(rng, M);
    match rng.random_range(0..10) {
        0 | 1 => ordered(a, b),
        2 | 3 => ordered(-a, -b),
        4 | 5 => ordered(-a, b),
        6 => Interval::point(if rng.random_bool(0.5) { a } else { -a }).unwrap(),
        7 => {
            if rng.random_bool(0.5) {
                ordered(0.0, a)
            } else {
                ordered(-a, 0.0)
            }
        }
        8 => match rng.random_range(0..3) {
            0 => Interval::new(-a, f64::INFINITY).unwrap(),
            1 => Interval::new(f64::NEG_INFINITY, b).unwrap(),
            _ => Interval::new(f64::NEG_INFINITY, -a).unwrap(),
        },
        _ => {
            let c = rng.random_range(-4.0..4.0);
            let w = rng.random_range(0.0..1e-6);
            ordered(c, c + w)
        }
    }
}

pub fn random_exponent_box(rng: &mut impl Rng) -> Interval {
    const M: f64 = 6.0;
    fn signed<R: Rng + ?Sized>(rng: &mut R) -> f64 {
        let v = nice_or_float(rng, M);
        if rng.random_bool(0.5) {
            v
        } else {
            -v
        }
    }
    match rng.random_range(0..8) {
        0..=2 => {
            let a = signed(rng);
            let b = signed(rng);
            ordered(a, b)
        }
        3 => match rng.random_range(0..3) {
            0 => Interval::new(signed(rng), f64::INFINITY).unwrap(),
            1 => Interval::new(f64::NEG_INFINITY, signed(rng)).unwrap(),
            _ => {
                let c = signed(rng);
                ordered(c, c.next_up())
            }
        },
        4 => Interval::point(2.0 * rng.random_range(-4..=4) as f64).unwrap(),
        5 => Interval::point(2.0 * rng.random_range(-4..=3) as f64 + 1.0).unwrap(),
        _ => {
            let v = loop {
                let v = if rng.random_bool(0.5) {
                    rng.random_range(-64..=64) as f64 / 8.0
                } else {
                    signed(rng)
                };
                if v.fract() != 0.0 {
                    break v;
                }
            };
            Interval::point(v).unwrap()
        }
    }
}

/// A rational in `[lo, hi]` drawn the way the checker draws exponents.
pub fn random_fraction(rng: &mut impl Rng, lo: f64, hi: f64) -> BigRational {
    sample_exponent(rng, (lo, hi))
}
