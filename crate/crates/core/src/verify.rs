//! Self-checks behind `hecke verify` and the acceptance test target.
//!
//! Each criterion is an exact check against an independent oracle
//! (permutation arithmetic, the other representation, the group algebra at
//! `q = 1`) or against a closed-form operation bound.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bench::{self, BenchConfig, BenchRecord, Repr};
use crate::coeff::{HeckeRing, RingCtx};
use crate::error::{Error, Result};
use crate::tower::{factorial, mu, CosetRep, MuBranch, MuResult};
use crate::{NestedZ, Permutation, PolyZ, SimpleZ, Tower};

type Check = std::result::Result<String, String>;

/// A rewriting function with the signature of [`mu`]; swappable for fault injection.
pub type MuFn = fn(usize, usize, usize, usize) -> Result<MuResult>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Towers,
    Hecke,
    Cost,
    Bench,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Towers => "towers",
            Suite::Hecke => "hecke",
            Suite::Cost => "cost",
            Suite::Bench => "bench",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "towers" => Ok(Suite::Towers),
            "hecke" => Ok(Suite::Hecke),
            "cost" => Ok(Suite::Cost),
            "bench" => Ok(Suite::Bench),
            _ => Err(Error::Parse(format!(
                "unknown suite {s:?} (expected towers, hecke, cost or bench)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub suite: Suite,
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        name: "tower-roundtrip",
        suite: Suite::Towers,
    },
    Criterion {
        id: 2,
        name: "worked-example-towers",
        suite: Suite::Towers,
    },
    Criterion {
        id: 3,
        name: "product-homomorphism",
        suite: Suite::Towers,
    },
    Criterion {
        id: 4,
        name: "descent-law",
        suite: Suite::Towers,
    },
    Criterion {
        id: 5,
        name: "mu-soundness",
        suite: Suite::Towers,
    },
    Criterion {
        id: 6,
        name: "hecke-relations",
        suite: Suite::Hecke,
    },
    Criterion {
        id: 7,
        name: "representation-equivalence",
        suite: Suite::Hecke,
    },
    Criterion {
        id: 8,
        name: "q1-specialization",
        suite: Suite::Hecke,
    },
    Criterion {
        id: 9,
        name: "worked-example-cost",
        suite: Suite::Cost,
    },
    Criterion {
        id: 10,
        name: "cost-bounds",
        suite: Suite::Cost,
    },
    Criterion {
        id: 11,
        name: "crossover",
        suite: Suite::Cost,
    },
    Criterion {
        id: 12,
        name: "csv-determinism",
        suite: Suite::Bench,
    },
];

#[derive(Debug, Clone)]
pub struct Outcome {
    pub criterion: Criterion,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {}/{}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.id,
            self.criterion.suite,
            self.criterion.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn first_failure(&self) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }

    pub fn summary(&self) -> String {
        let passed = self.outcomes.iter().filter(|o| o.passed).count();
        match self.first_failure() {
            None => format!("{passed}/{} criteria passed", self.outcomes.len()),
            Some(o) => format!(
                "{passed}/{} criteria passed; first failure: [{}] {}/{}",
                self.outcomes.len(),
                o.criterion.id,
                o.criterion.suite,
                o.criterion.name
            ),
        }
    }
}

#[derive(Clone)]
pub struct Options {
    pub only: Option<Suite>,
    pub mu: MuFn,
    /// Worker threads for the benchmark cells and the dense equivalence pairs.
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            only: None,
            mu,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Runs the selected criteria in order, calling `on_outcome` as each finishes.
pub fn run_with(opts: &Options, mut on_outcome: impl FnMut(&Outcome)) -> Report {
    let mut session = Session {
        opts: opts.clone(),
        bench: None,
    };
    let mut report = Report::default();
    for c in CRITERIA
        .iter()
        .filter(|c| opts.only.is_none_or(|s| s == c.suite))
    {
        let start = Instant::now();
        let result = session.check(c.id);
        let outcome = Outcome {
            criterion: *c,
            passed: result.is_ok(),
            detail: result.unwrap_or_else(|e| e),
            elapsed: start.elapsed(),
        };
        on_outcome(&outcome);
        report.outcomes.push(outcome);
    }
    report
}

pub fn run(opts: &Options) -> Report {
    run_with(opts, |_| {})
}

struct Session {
    opts: Options,
    bench: Option<std::result::Result<Vec<BenchRecord>, String>>,
}

impl Session {
    fn check(&mut self, id: u8) -> Check {
        match id {
            1 => timed(Duration::from_secs(10), tower_roundtrip),
            2 => worked_example_towers(),
            3 => timed(Duration::from_secs(30), product_homomorphism),
            4 => descent_law(),
            5 => mu_soundness_with(self.opts.mu),
            6 => hecke_relations(),
            7 => {
                let jobs = self.opts.jobs;
                timed(Duration::from_secs(60), || representation_equivalence(jobs))
            }
            8 => q1_specialization(),
            9 => worked_example_cost(),
            10 => {
                let records = self.bench_records()?;
                let summary = bound_rows(&records)?;
                let cosets = coset_costs()?;
                let products = product_costs()?;
                Ok(format!("{summary}; {cosets}; {products}"))
            }
            11 => crossover(&self.bench_records()?),
            12 => csv_determinism(),
            _ => Err(format!("no criterion {id}")),
        }
    }

    /// Ranks 2..=5, ten trials each; shared by the bound and crossover checks.
    fn bench_records(&mut self) -> std::result::Result<Vec<BenchRecord>, String> {
        let jobs = self.opts.jobs;
        self.bench
            .get_or_insert_with(|| {
                let start = Instant::now();
                let config = BenchConfig {
                    m_min: 2,
                    m_max: 5,
                    trials: 10,
                    jobs,
                    ..Default::default()
                };
                let records = bench::run(&config).map_err(|e| e.to_string())?;
                let limit = Duration::from_secs(120);
                if start.elapsed() > limit {
                    return Err(format!(
                        "benchmark for m = 2..5 took {:.1}s, limit {}s",
                        start.elapsed().as_secs_f64(),
                        limit.as_secs()
                    ));
                }
                Ok(records)
            })
            .clone()
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!(
            "{detail}, but took {:.1}s (limit {}s)",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ));
    }
    Ok(detail)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm_of(t: &Tower, n: usize) -> std::result::Result<Permutation, String> {
    t.to_permutation(n).map_err(|e| e.to_string())
}

/// Criterion 1: towers and permutations are mutually inverse on `Sym_n`, `n <= 7`.
pub fn tower_roundtrip() -> Check {
    let mut count = 0usize;
    for n in 1..=7 {
        for p in Permutation::all(n) {
            let t = Tower::from_permutation(&p);
            let back = perm_of(&t, n)?;
            ensure(back == p, || format!("{p} -> {t} -> {back}"))?;
            ensure(Tower::from_permutation(&back) == t, || {
                format!("tower {t} does not roundtrip")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} permutations of degree 1..7"))
}

/// Criterion 2: the worked example's tower and inverse tower.
pub fn worked_example_towers() -> Check {
    let w: Permutation = "(1,8,10,3)(2,4,6,7,5)"
        .parse()
        .map_err(|e: Error| e.to_string())?;
    let w = w.extended(10);
    let t = Tower::from_permutation(&w);
    let expected = Tower::new(vec![1, 2, 1, 3, 1, 3, 0, 1, 7]).map_err(|e| e.to_string())?;
    ensure(t == expected, || {
        format!("tower of w is {t}, expected {expected}")
    })?;
    let inv = t.inverse();
    let expected_inv = Tower::new(vec![0, 0, 3, 1, 3, 2, 7, 1, 2]).map_err(|e| e.to_string())?;
    ensure(inv == expected_inv, || {
        format!("inverse tower is {inv}, expected {expected_inv}")
    })?;
    let oracle = Tower::from_permutation(&w.inverse());
    ensure(inv == oracle, || {
        format!("inverse tower {inv} disagrees with permutation inverse {oracle}")
    })?;
    Ok(format!("tau(w) = {t}, tau(w^-1) = {inv}"))
}

/// Criterion 3: `tau(w) * tau(w')` is the tower of the composed permutations.
pub fn product_homomorphism() -> Check {
    let sym4: Vec<Permutation> = Permutation::all(4);
    for p in &sym4 {
        for r in &sym4 {
            check_product(p, r)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let random = 10_000;
    for _ in 0..random {
        let p = random_permutation(8, &mut rng);
        let r = random_permutation(8, &mut rng);
        check_product(&p, &r)?;
    }
    Ok(format!(
        "{} pairs in Sym_4, {random} random pairs in Sym_8",
        sym4.len() * sym4.len()
    ))
}

fn check_product(p: &Permutation, r: &Permutation) -> std::result::Result<(), String> {
    let t = Tower::from_permutation(p).product(&Tower::from_permutation(r));
    let composed = p.then(r);
    ensure(perm_of(&t, p.degree())? == composed, || {
        format!("tau({p}) * tau({r}) = {t}, but the product is {composed}")
    })
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(images).expect("shuffled images form a permutation")
}

/// Criterion 4: `i` is a descent of `w` iff `l(s_i w) < l(w)`, on `Sym_5`.
pub fn descent_law() -> Check {
    let n = 5;
    let mut count = 0;
    for t in Tower::all(n - 1) {
        let w = perm_of(&t, n)?;
        let descents = t.descent_set();
        for i in 1..n {
            let s = Permutation::simple_reflection(i, n).map_err(|e| e.to_string())?;
            let shorter = s.then(&w).inversions() < w.inversions();
            ensure(descents.contains(&i) == shorter, || {
                format!("s_{i} for {t}: descent set {descents:?}, length test says {shorter}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} (w, s_i) pairs in Sym_5"))
}

/// Criterion 5 with the rewriting function supplied by the caller.
///
/// For every admissible `(m, j, k, l)` with `m <= 8`, checks
/// `a(m,k) a(j,l) = a(j',l') a(m,k')` as permutations, that the right-hand
/// side is reduced, and that the length drops by exactly 2 in the cancel
/// branch and is additive otherwise.
pub fn mu_soundness_with(mu_fn: MuFn) -> Check {
    let mut count = 0;
    for m in 1..=8 {
        let n = m + 1;
        for j in 1..=m {
            for k in 0..=m {
                for l in 0..=j {
                    let r = mu_fn(m, j, k, l).map_err(|e| format!("mu_{m}({j},{k},{l}): {e}"))?;
                    let tag = || {
                        format!(
                            "mu_{m}({j},{k},{l}) = ({},{},{}) {:?}",
                            r.j, r.k, r.l, r.branch
                        )
                    };
                    let rep = |a: usize, b: usize| {
                        CosetRep::new(a, b)
                            .and_then(|c| c.to_permutation(n))
                            .map_err(|e| format!("{}: {e}", tag()))
                    };
                    let lhs = rep(m, k)?.then(&rep(j, l)?);
                    let rhs = rep(r.j, r.l)?.then(&rep(m, r.k)?);
                    ensure(lhs == rhs, || format!("{}: {lhs} != {rhs}", tag()))?;
                    ensure(rhs.inversions() == r.l + r.k, || {
                        format!("{}: right side is not reduced", tag())
                    })?;
                    let drop = if r.branch == MuBranch::Cancel { 2 } else { 0 };
                    ensure(lhs.inversions() + drop == k + l, || {
                        format!("{}: length {} from {} + {}", tag(), lhs.inversions(), k, l)
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} tuples with m <= 8"))
}

fn poly(c: &[i64]) -> PolyZ {
    PolyZ::from_i64s(c)
}

fn pick<T: Clone>(gens: &[T], word: &[usize]) -> Vec<T> {
    word.iter().map(|&x| gens[x].clone()).collect()
}

fn simple_product(factors: &[SimpleZ]) -> SimpleZ {
    let ctx = RingCtx::plain();
    factors[1..].iter().fold(factors[0].clone(), |acc, f| {
        acc.multiply(f, &ctx).expect("equal ranks")
    })
}

fn nested_product(factors: &[NestedZ]) -> NestedZ {
    let ctx = RingCtx::plain();
    factors[1..].iter().fold(factors[0].clone(), |acc, f| {
        acc.multiply(f, &ctx).expect("equal ranks")
    })
}

/// Criterion 6: quadratic and braid relations in both representations, `m <= 4`.
pub fn hecke_relations() -> Check {
    let mut relations = 0;
    for m in 1..=4 {
        let s: Vec<SimpleZ> = (1..=m)
            .map(|i| SimpleZ::generator(m, i).expect("i <= m"))
            .collect();
        let t: Vec<NestedZ> = (1..=m)
            .map(|i| NestedZ::generator(m, i).expect("i <= m"))
            .collect();
        let unit = SimpleZ::unit(m);
        let ctx = RingCtx::plain();
        for i in 0..m {
            let square = s[i]
                .scale(&PolyZ::q_minus_one(), &ctx)
                .add(&unit.scale(&PolyZ::q(), &ctx), &ctx);
            let square = square.map_err(|e| e.to_string())?;
            ensure(
                simple_product(&[s[i].clone(), s[i].clone()]) == square,
                || format!("simple: T_s{}^2 in H(A_{m})", i + 1),
            )?;
            ensure(
                nested_product(&[t[i].clone(), t[i].clone()]).to_simple() == square,
                || format!("nested: T_s{}^2 in H(A_{m})", i + 1),
            )?;
            relations += 1;
            for k in i + 1..m {
                let (a, b) = if k == i + 1 {
                    (vec![i, k, i], vec![k, i, k])
                } else {
                    (vec![i, k], vec![k, i])
                };
                let simple_ok = simple_product(&pick(&s, &a)) == simple_product(&pick(&s, &b));
                let nested_ok = nested_product(&pick(&t, &a)) == nested_product(&pick(&t, &b));
                ensure(simple_ok && nested_ok, || {
                    format!(
                        "braid s{} s{} in H(A_{m}): simple {simple_ok}, nested {nested_ok}",
                        i + 1,
                        k + 1
                    )
                })?;
                relations += 1;
            }
        }
    }
    Ok(format!(
        "{relations} relations for m <= 4, both representations"
    ))
}

/// Criterion 7: nested and simple products agree on every basis pair of
/// `H(A_3)` and on 200 dense pairs of `H(A_4)`.
pub fn representation_equivalence(jobs: usize) -> Check {
    let ctx = RingCtx::plain();
    let basis: Vec<(SimpleZ, NestedZ)> = Tower::all(3)
        .map(|t| {
            (
                SimpleZ::basis(3, &t).expect("rank 3"),
                NestedZ::basis(3, &t).expect("rank 3"),
            )
        })
        .collect();
    for (hs, hn) in &basis {
        for (gs, gn) in &basis {
            let s = hs.multiply(gs, &ctx).map_err(|e| e.to_string())?;
            let n = hn.multiply(gn, &ctx).map_err(|e| e.to_string())?;
            ensure(n.to_simple() == s, || {
                "basis pair of H(A_3) disagrees".to_string()
            })?;
        }
    }
    let dense = 200;
    let jobs = jobs.clamp(1, dense);
    let failures: Vec<usize> = std::thread::scope(|sc| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                sc.spawn(move || {
                    let ctx = RingCtx::plain();
                    (w..dense)
                        .step_by(jobs)
                        .filter(|&i| {
                            let mut rng = bench::trial_rng(0x5eed_0007, 4, i);
                            let h = bench::random_leaves(4, &mut rng);
                            let g = bench::random_leaves(4, &mut rng);
                            let s = SimpleZ::from_coeffs(4, h.clone()).and_then(|h| {
                                h.multiply(&SimpleZ::from_coeffs(4, g.clone())?, &ctx)
                            });
                            let n = NestedZ::from_leaves(4, h)
                                .and_then(|h| h.multiply(&NestedZ::from_leaves(4, g)?, &ctx));
                            !matches!((s, n), (Ok(s), Ok(n)) if n.to_simple() == s)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    ensure(failures.is_empty(), || {
        format!("dense H(A_4) pairs disagree: {failures:?}")
    })?;
    Ok(format!(
        "{} basis pairs in H(A_3), {dense} dense pairs in H(A_4)",
        basis.len() * basis.len()
    ))
}

/// Criterion 8: at `q = 1`, `T_u T_v` is the group element `uv`, on `H(A_3)`.
pub fn q1_specialization() -> Check {
    let ctx = RingCtx::plain();
    let m = 3;
    let towers: Vec<Tower> = Tower::all(m).collect();
    let one = BigInt::one();
    for u in &towers {
        for v in &towers {
            let uv = u.product(v);
            let mut expected = vec![BigInt::zero(); factorial(m + 1)];
            expected[uv.rank()] = BigInt::one();
            let n = NestedZ::basis(m, u)
                .and_then(|h| h.multiply(&NestedZ::basis(m, v)?, &ctx))
                .map_err(|e| e.to_string())?;
            ensure(n.specialize(&one) == expected, || {
                format!("nested T_{u} T_{v} at q = 1")
            })?;
            let s = SimpleZ::basis(m, u)
                .and_then(|h| h.multiply(&SimpleZ::basis(m, v)?, &ctx))
                .map_err(|e| e.to_string())?;
            let s1: Vec<BigInt> = s.map(|c| c.eval_at(&one));
            ensure(s1 == expected, || format!("simple T_{u} T_{v} at q = 1"))?;
        }
    }
    Ok(format!(
        "{} basis pairs in H(A_3), both representations",
        towers.len() * towers.len()
    ))
}

/// Criterion 9: dense `h` in `H(A_2)` times dense `g` in `H(A_1)` costs 27
/// ring operations in either representation.
pub fn worked_example_cost() -> Check {
    let h: Vec<PolyZ> = (1..=6).map(|i| poly(&[i, 1])).collect();
    let g = vec![poly(&[2, -1]), poly(&[-3, 0, 1])];
    let ns = RingCtx::counting();
    let n = NestedZ::from_leaves(2, h.clone())
        .and_then(|h| h.multiply(&NestedZ::from_leaves(1, g.clone())?, &ns))
        .map_err(|e| e.to_string())?;
    let ss = RingCtx::counting();
    let s = SimpleZ::from_coeffs(2, h)
        .and_then(|h| h.multiply(&SimpleZ::from_coeffs(1, g)?, &ss))
        .map_err(|e| e.to_string())?;
    let (nc, sc) = (ns.counts().total(), ss.counts().total());
    ensure(nc == 27 && sc == 27, || {
        format!("nested {nc} ops, simple {sc} ops, expected 27 each")
    })?;
    ensure(n.to_simple() == s, || {
        "the two representations give different products".to_string()
    })?;
    Ok("nested 27 ops, simple 27 ops, equal products".to_string())
}

fn bound_rows(records: &[BenchRecord]) -> Check {
    let mut worst: f64 = 0.0;
    for r in records {
        ensure(r.trials >= 10, || {
            format!("m={} {}: only {} trials", r.m, r.repr, r.trials)
        })?;
        ensure(r.max_ops as f64 <= r.bound, || {
            format!(
                "m={} {}: {} ops exceeds bound {:.1} (ratio {:.4})",
                r.m, r.repr, r.max_ops, r.bound, r.ratio
            )
        })?;
        worst = worst.max(r.ratio);
    }
    Ok(format!(
        "{} benchmark rows within bounds (max ratio {worst:.3})",
        records.len()
    ))
}

fn dense_nested(m: usize, seed: u64) -> NestedZ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    bench::random_nested(m, &mut rng)
}

/// `c(m,l)`: the cost of `h T_{a(j,l)}` for dense `h`, within `3/2 l M`.
pub fn coset_costs() -> Check {
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for m in 1..=5 {
        let h = dense_nested(m, 0x5eed_0010 + m as u64);
        for j in 1..=m {
            for l in 0..=j {
                let ctx = RingCtx::counting();
                h.mult_by_coset(j, l, &ctx).map_err(|e| e.to_string())?;
                let ops = ctx.counts().total();
                let b = bench::coset_bound(m, l);
                ensure(ops as f64 <= b, || {
                    format!("c({m},{l}) with j={j}: {ops} ops > {b}")
                })?;
                if l > 0 {
                    worst = worst.max(ops as f64 / b);
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} coset products within 3/2 l M (max ratio {worst:.3})"
    ))
}

/// `C(m,l)`: the cost of dense `h` in `H(A_m)` times dense `g` in `H(A_l)`,
/// within `(1 + e) (l+1)! M`.
pub fn product_costs() -> Check {
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for m in 1..=5 {
        let h = dense_nested(m, 0x5eed_0020 + m as u64);
        for l in 0..=m {
            let g = dense_nested(l, 0x5eed_0030 + (m * 8 + l) as u64);
            let ctx = RingCtx::counting();
            h.multiply(&g, &ctx).map_err(|e| e.to_string())?;
            let ops = ctx.counts().total();
            let b = bench::product_bound(m, l);
            ensure(ops as f64 <= b, || {
                format!("C({m},{l}): {ops} ops > {b:.1}")
            })?;
            worst = worst.max(ops as f64 / b);
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} products within (1+e)(l+1)! M (max ratio {worst:.3})"
    ))
}

/// Criterion 11: nested is strictly cheaper than simple at `m = 4, 5`.
pub fn crossover(records: &[BenchRecord]) -> Check {
    let ops = |m: usize, repr: Repr| {
        records
            .iter()
            .find(|r| r.m == m && r.repr == repr)
            .map(|r| r.max_ops)
            .ok_or_else(|| format!("no benchmark row for m={m} {repr}"))
    };
    let mut parts = Vec::new();
    for m in [4, 5] {
        let (s, n) = (ops(m, Repr::Simple)?, ops(m, Repr::Nested)?);
        ensure(n < s, || format!("m={m}: nested {n} ops, simple {s} ops"))?;
        parts.push(format!("m={m}: nested {n} < simple {s}"));
    }
    Ok(parts.join(", "))
}

/// Criterion 12: the benchmark CSV for seed 42, ranks up to 4, is reproducible.
pub fn csv_determinism() -> Check {
    let config = BenchConfig {
        m_max: 4,
        seed: 42,
        ..Default::default()
    };
    let a = bench::run(&config).map_err(|e| e.to_string())?;
    let b = bench::run(&config).map_err(|e| e.to_string())?;
    let (a, b) = (bench::to_csv(&a), bench::to_csv(&b));
    ensure(a == b, || "two runs produced different CSV".to_string())?;
    Ok(format!("{} identical bytes over two runs", a.len()))
}
