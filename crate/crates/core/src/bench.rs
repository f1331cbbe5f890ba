//! Cost of the full reduction relative to the non-negative kernel.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::EvalConfig;
use crate::interval::Interval;
use crate::kernel::pow0;
use crate::pow::pow_full;

const POOL: usize = 1024;
const ROUNDS: usize = 8;

/// Base boxes fed to `pow_full`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Workload {
    /// Base boxes straddling zero.
    MixedSign,
    /// The same non-negative boxes as the kernel baseline.
    NonNegative,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub iters: usize,
    pub workload: Workload,
    /// Mean ns per `pow0` call on non-negative boxes.
    pub pow0_ns: f64,
    /// Mean ns per `pow_full` call on the chosen workload.
    pub pow_full_ns: f64,
    pub ratio: f64,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "iters:              {}", self.iters)?;
        writeln!(f, "pow0 (x >= 0):      {:.1} ns/op", self.pow0_ns)?;
        let label = match self.workload {
            Workload::MixedSign => "pow_full (mixed):  ",
            Workload::NonNegative => "pow_full (x >= 0): ",
        };
        writeln!(f, "{label} {:.1} ns/op", self.pow_full_ns)?;
        writeln!(f, "ratio:              {:.3}", self.ratio)
    }
}

fn exponent_box(rng: &mut impl Rng) -> Interval {
    let a = rng.random_range(-3.0..3.0);
    let b = rng.random_range(-3.0..3.0);
    Interval::new(f64::min(a, b), f64::max(a, b)).unwrap()
}

fn positive_box(rng: &mut impl Rng) -> Interval {
    let a = rng.random_range(0.125..16.0);
    let b = rng.random_range(0.125..16.0);
    Interval::new(f64::min(a, b), f64::max(a, b)).unwrap()
}

fn mixed_box(rng: &mut impl Rng) -> Interval {
    let a = rng.random_range(0.125..16.0);
    let b = rng.random_range(0.125..16.0);
    Interval::new(-a, b).unwrap()
}

/// Times `iters` calls of each operation over a fixed pool of random boxes
/// with non-singleton exponents.
pub fn run_bench(iters: usize, workload: Workload, seed: u64, cfg: &EvalConfig) -> BenchReport {
    let iters = iters.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base: Vec<(Interval, Interval)> = Vec::with_capacity(POOL);
    let mut full: Vec<(Interval, Interval)> = Vec::with_capacity(POOL);
    for _ in 0..POOL {
        let y = exponent_box(&mut rng);
        let xp = positive_box(&mut rng);
        base.push((xp, y));
        full.push(match workload {
            Workload::MixedSign => (mixed_box(&mut rng), y),
            Workload::NonNegative => (xp, y),
        });
    }

    // warm up both paths once over the pool
    for i in 0..POOL {
        black_box(pow0(base[i].0, base[i].1, cfg));
        black_box(pow_full(full[i].0, full[i].1, cfg).ok());
    }

    // interleaved rounds, best mean per side, to damp frequency and cache drift
    let rounds = iters.min(ROUNDS);
    let mut pow0_ns = f64::INFINITY;
    let mut pow_full_ns = f64::INFINITY;
    let mut done = 0;
    for r in 0..rounds {
        let n = (iters - done) / (rounds - r);
        done += n;
        let t = Instant::now();
        for i in 0..n {
            let (x, y) = base[i % POOL];
            black_box(pow0(black_box(x), black_box(y), cfg));
        }
        pow0_ns = pow0_ns.min(t.elapsed().as_nanos() as f64 / n as f64);

        let t = Instant::now();
        for i in 0..n {
            let (x, y) = full[i % POOL];
            black_box(pow_full(black_box(x), black_box(y), cfg).ok());
        }
        pow_full_ns = pow_full_ns.min(t.elapsed().as_nanos() as f64 / n as f64);
    }

    BenchReport {
        iters,
        workload,
        pow0_ns,
        pow_full_ns,
        ratio: if pow0_ns > 0.0 {
            pow_full_ns / pow0_ns
        } else {
            f64::NAN
        },
    }
}
