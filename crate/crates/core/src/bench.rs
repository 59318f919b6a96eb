//! Operation-count benchmark comparing the two representations.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::RingCtx;
use crate::error::{Error, Result};
use crate::tower::factorial;
use crate::{NestedZ, PolyZ, SimpleZ};

pub const CSV_HEADER: &str = "m,repr,trials,M,max_ops,bound,ratio,wall_ns";

/// Largest rank the harness runs without `--big`.
pub const DEFAULT_M_MAX: usize = 5;
/// Largest rank the harness runs at all.
pub const BIG_M_MAX: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Repr {
    Simple,
    Nested,
}

impl fmt::Display for Repr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Repr::Simple => "simple",
            Repr::Nested => "nested",
        })
    }
}

impl FromStr for Repr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" => Ok(Repr::Simple),
            "nested" => Ok(Repr::Nested),
            _ => Err(Error::Parse(format!("unknown representation {s:?}"))),
        }
    }
}

/// Worst-case bound for a dense product in `H(A_m)` as simple lists:
/// `(m^2 + m + 4)/2 * M^2`.
pub fn simple_bound(m: usize) -> f64 {
    let big_m = factorial(m + 1) as f64;
    (m * m + m + 4) as f64 / 2.0 * big_m * big_m
}

/// Worst-case bound for a dense product in `H(A_m)` as nested lists: `(1 + e) M^2`.
pub fn nested_bound(m: usize) -> f64 {
    let big_m = factorial(m + 1) as f64;
    (1.0 + std::f64::consts::E) * big_m * big_m
}

/// Bound on `h T_{a(j,l)}` for `h` in `H(A_m)`: `3/2 l M`.
pub fn coset_bound(m: usize, l: usize) -> f64 {
    1.5 * l as f64 * factorial(m + 1) as f64
}

/// Bound on `h g` for `h` in `H(A_m)`, `g` in `H(A_l)`: `(1 + e) (l+1)! M`.
pub fn product_bound(m: usize, l: usize) -> f64 {
    (1.0 + std::f64::consts::E) * factorial(l + 1) as f64 * factorial(m + 1) as f64
}

pub fn bound(repr: Repr, m: usize) -> f64 {
    match repr {
        Repr::Simple => simple_bound(m),
        Repr::Nested => nested_bound(m),
    }
}

/// One CSV row: the worst count over `trials` dense products at rank `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub m: usize,
    pub repr: Repr,
    pub trials: usize,
    pub max_ops: u64,
    pub bound: f64,
    pub ratio: f64,
    /// Total wall-clock time over all trials, when timing was requested.
    pub wall_ns: Option<u128>,
}

impl BenchRecord {
    pub fn dim(&self) -> usize {
        factorial(self.m + 1)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{:.6},{}",
            self.m,
            self.repr,
            self.trials,
            self.dim(),
            self.max_ops,
            self.bound,
            self.ratio,
            self.wall_ns.map(|n| n.to_string()).unwrap_or_default()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub m_min: usize,
    pub m_max: usize,
    pub trials: usize,
    pub seed: u64,
    /// Fill the `wall_ns` column; off by default so output is reproducible.
    pub timing: bool,
    pub big: bool,
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            m_min: 2,
            m_max: DEFAULT_M_MAX,
            trials: 10,
            seed: 0,
            timing: false,
            big: false,
            jobs: 1,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let limit = if self.big { BIG_M_MAX } else { DEFAULT_M_MAX };
        if self.m_max > limit {
            let big_m = factorial(self.m_max + 1) as f64;
            let ops = simple_bound(self.m_max);
            // two operands, one result and a handful of temporaries per product
            let bytes = 8.0 * big_m * 64.0;
            let hint = if self.big || self.m_max > BIG_M_MAX {
                String::new()
            } else {
                " (pass --big to allow it)".to_string()
            };
            return Err(Error::Bench(format!(
                "m_max = {} is too large{hint}: M = {big_m}, up to {ops:.2e} counted operations \
                 per simple product and roughly {:.1} MiB of coefficients per element set; \
                 the limit is {DEFAULT_M_MAX} ({BIG_M_MAX} with --big)",
                self.m_max,
                bytes / (1024.0 * 1024.0),
            )));
        }
        if self.m_min == 0 || self.m_min > self.m_max {
            return Err(Error::Bench(format!(
                "rank range {}..={} is empty or starts below 1",
                self.m_min, self.m_max
            )));
        }
        Ok(())
    }
}

/// A dense coefficient: degree <= 2, integer entries uniform in `[-9, 9]`.
pub fn random_poly<G: Rng>(rng: &mut G) -> PolyZ {
    let c: Vec<BigInt> = (0..3)
        .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
        .collect();
    PolyZ::new(c)
}

/// Leaves in tower rank order for a dense element of `H(A_m)`.
pub fn random_leaves<G: Rng>(m: usize, rng: &mut G) -> Vec<PolyZ> {
    (0..factorial(m + 1)).map(|_| random_poly(rng)).collect()
}

pub fn random_nested<G: Rng>(m: usize, rng: &mut G) -> NestedZ {
    NestedZ::from_leaves(m, random_leaves(m, rng)).expect("leaf count matches")
}

pub fn random_simple<G: Rng>(m: usize, rng: &mut G) -> SimpleZ {
    SimpleZ::from_coeffs(m, random_leaves(m, rng)).expect("coefficient count matches")
}

/// The generator for trial `trial` at rank `m`; both representations see
/// the same operands.
pub fn trial_rng(seed: u64, m: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((m as u64) << 32) | trial as u64);
    rng
}

/// Multiplies one random dense pair under a counting context.
pub fn count_dense_product(repr: Repr, m: usize, seed: u64, trial: usize) -> u64 {
    let mut rng = trial_rng(seed, m, trial);
    let h = random_leaves(m, &mut rng);
    let g = random_leaves(m, &mut rng);
    let ctx = RingCtx::counting();
    match repr {
        Repr::Simple => {
            let h = SimpleZ::from_coeffs(m, h).expect("dense");
            let g = SimpleZ::from_coeffs(m, g).expect("dense");
            h.multiply(&g, &ctx).expect("equal ranks");
        }
        Repr::Nested => {
            let h = NestedZ::from_leaves(m, h).expect("dense");
            let g = NestedZ::from_leaves(m, g).expect("dense");
            h.multiply(&g, &ctx).expect("equal ranks");
        }
    }
    ctx.counts().total()
}

fn run_cell(config: &BenchConfig, m: usize, repr: Repr) -> Result<BenchRecord> {
    let start = Instant::now();
    let mut max_ops = 0;
    let mut first = None;
    for trial in 0..config.trials {
        let ops = count_dense_product(repr, m, config.seed, trial);
        // dense accounting makes the count independent of the values
        match first {
            None => first = Some(ops),
            Some(f) if f != ops => {
                return Err(Error::Bench(format!(
                    "count varies across trials at m={m} {repr}: {f} vs {ops}"
                )))
            }
            _ => {}
        }
        max_ops = max_ops.max(ops);
    }
    let wall = start.elapsed().as_nanos();
    let b = bound(repr, m);
    Ok(BenchRecord {
        m,
        repr,
        trials: config.trials,
        max_ops,
        bound: b,
        ratio: max_ops as f64 / b,
        wall_ns: config.timing.then_some(wall),
    })
}

/// Runs every `(m, repr)` cell. With `trials == 0` there are no rows.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    if config.trials == 0 {
        return Ok(Vec::new());
    }
    let cells: Vec<(usize, Repr)> = (config.m_min..=config.m_max)
        .flat_map(|m| [(m, Repr::Simple), (m, Repr::Nested)])
        .collect();
    let jobs = config.jobs.max(1).min(cells.len());
    if jobs == 1 {
        return cells.iter().map(|&(m, r)| run_cell(config, m, r)).collect();
    }
    // Round-robin cells over worker threads, each with its own counters,
    // then restore cell order.
    let mut results: Vec<(usize, Result<BenchRecord>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let cells = &cells;
                s.spawn(move || {
                    cells
                        .iter()
                        .enumerate()
                        .skip(w)
                        .step_by(jobs)
                        .map(|(idx, &(m, r))| (idx, run_cell(config, m, r)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("benchmark worker panicked"))
            .collect()
    });
    results.sort_by_key(|(idx, _)| *idx);
    results.into_iter().map(|(_, r)| r).collect()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
