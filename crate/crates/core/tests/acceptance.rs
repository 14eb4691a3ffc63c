//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use upset_prune::ci::{interleaving_distance_bruteforce, Field, DEFAULT_MAX_R};
use upset_prune::distances::{
    bottleneck_bruteforce, bottleneck_distance, default_tolerance, delta_events, pruning_distance,
    refinement_all_delta, refinement_at, Distance, DistanceResult, Mode,
};
use upset_prune::fixtures::tight_pair;
use upset_prune::graph::{graph_distance, reachable_from, Digraph};
use upset_prune::pruning::{prune, prune_iterative_trace};
use upset_prune::{random_module, Module, Rational};

type Criterion = (&'static str, fn() -> Outcome, Duration);

struct Outcome {
    passed: bool,
    detail: String,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn finite(d: &DistanceResult) -> Rational {
    d.finite().expect("finite distance").clone()
}

/// Random modules of the second criterion, reused by the fifth.
fn fixed_point_corpus() -> Vec<Module> {
    (0..200u64)
        .map(|seed| {
            let r = 1 + (seed % 5) as usize;
            let gens = 1 + (seed / 5 % 4) as usize;
            random_module(1000 + seed, r, 2, gens, 16).unwrap()
        })
        .collect()
}

/// Same-count pair number `k` with at most `max_r` summands.
fn pair(k: u64, max_r: usize, gens: usize, bound: u32) -> (Module, Module) {
    let r = 1 + (k % max_r as u64) as usize;
    let m = random_module(2 * k, r, 2, gens, bound).unwrap();
    let n = random_module(2 * k + 1, r, 2, gens, bound).unwrap();
    (m, n)
}

fn sharp_example() -> Outcome {
    let mut failures = Vec::new();
    let tol = default_tolerance();
    for r in 1..=4usize {
        for d in 1..=3usize {
            for alpha in [q(1, 2), q(1, 1), q(3, 1)] {
                let (m, n) = tight_pair(r, d, &alpha);
                let bound = Rational::from(2 * r as i64 - 1) * &alpha;
                let tag = format!("r={r} d={d} alpha={alpha}");
                if !prune(&m, &alpha).unwrap().is_isomorphic(&n).unwrap() {
                    failures.push(format!("{tag}: pruning"));
                }
                let dp = pruning_distance(&m, &n, &tol, Mode::Exact).unwrap();
                if dp != DistanceResult::exact_value(alpha.clone()) {
                    failures.push(format!("{tag}: d_P = {dp}"));
                }
                let db = bottleneck_distance(&m, &n).unwrap();
                if db != DistanceResult::exact_value(bound.clone()) {
                    failures.push(format!("{tag}: d_B = {db}"));
                }
                if r <= 3 {
                    let di =
                        interleaving_distance_bruteforce(&m, &n, Field::F2, DEFAULT_MAX_R).unwrap();
                    if di != DistanceResult::exact_value(bound.clone()) {
                        failures.push(format!("{tag}: d_I = {di}"));
                    }
                }
            }
        }
    }
    Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "36 instances exact".into()
        } else {
            failures.join("; ")
        },
    }
}

fn closed_form_vs_fixed_point() -> Outcome {
    let mut bad = 0;
    let mut slowest = 0;
    let mut checked = 0;
    for (k, m) in fixed_point_corpus().iter().enumerate() {
        for alpha in [q(0, 1), q(1, 2), q(k as i64 % 9 + 1, 1), q(5, 2), q(8, 1)] {
            let closed = prune(m, &alpha).unwrap();
            let trace = prune_iterative_trace(m, &alpha).unwrap();
            checked += 1;
            slowest = slowest.max(trace.stable_after);
            if closed != trace.module || trace.stable_after + 1 > m.supdim().max(1) {
                bad += 1;
            }
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!(
            "{checked} (module, alpha) cases, {bad} violations, max iterations {slowest}"
        ),
    }
}

fn main_inequality() -> Outcome {
    let tol = default_tolerance();
    let mut bad = 0;
    let mut tight = 0;
    for k in 0..500u64 {
        let (m, n) = pair(5000 + k, 4, 1 + (k % 3) as usize, 8);
        let r = m.supdim();
        let dp = pruning_distance(&m, &n, &tol, Mode::Bisect).unwrap();
        let db = bottleneck_distance(&m, &n).unwrap();
        let (p, b) = (finite(&dp), finite(&db));
        let factor = Rational::from(2 * r as i64 - 1);
        if &p - &tol > b || b > &factor * &(&p + &tol) {
            bad += 1;
            eprintln!("  violation at pair {k}: d_P {dp}, d_B {db}");
        }
        if r > 1 && b > p {
            tight += 1;
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("500 pairs, {bad} violations, {tight} with d_B > d_P"),
    }
}

fn graph_bound() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let mut bad = 0;
    for _ in 0..500 {
        let r = rng.gen_range(1..=12usize);
        let density: f64 = rng.gen_range(0.05..0.6);
        let mut g = Digraph::empty(r);
        for i in 0..r {
            for j in 0..r {
                if rng.gen_bool(density) {
                    g.add_edge(i, j);
                }
            }
        }
        let mut seeds: Vec<usize> = (0..r).filter(|_| rng.gen_bool(0.25)).collect();
        if seeds.is_empty() {
            seeds.push(rng.gen_range(0..r));
        }
        let reach = reachable_from(&g, &seeds).unwrap();
        let dist = graph_distance(&g, &seeds, &reach)
            .unwrap()
            .expect("reach set is reachable");
        if dist > reach.len() - seeds.len() {
            bad += 1;
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("500 digraphs, {bad} violations"),
    }
}

fn identity_and_monotonicity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut bad = 0;
    let mut pairs = 0;
    for m in fixed_point_corpus() {
        if !prune(&m, &Rational::zero())
            .unwrap()
            .is_isomorphic(&m)
            .unwrap()
        {
            bad += 1;
        }
        for _ in 0..3 {
            let a = q(rng.gen_range(0..=40), 4);
            let b = &a + q(rng.gen_range(0..=40), 4);
            let small = prune(&m, &a).unwrap();
            let large = prune(&m, &b).unwrap();
            pairs += 1;
            let nested = large
                .summands()
                .iter()
                .zip(small.summands())
                .all(|(u, v)| u.is_subset(v).unwrap());
            if !nested {
                bad += 1;
            }
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("200 modules, {pairs} alpha pairs, {bad} violations"),
    }
}

fn pseudo_metric() -> Outcome {
    let tol = default_tolerance();
    let slack = Rational::from(3) * &tol;
    let mut asym = 0;
    let mut triangle = 0;
    for k in 0..100u64 {
        let r = 1 + (k % 4) as usize;
        let mods: Vec<Module> = (0..3)
            .map(|j| random_module(9000 + 3 * k + j, r, 2, 1 + (k % 3) as usize, 8).unwrap())
            .collect();
        let d = |a: usize, b: usize| {
            finite(&pruning_distance(&mods[a], &mods[b], &tol, Mode::Bisect).unwrap())
        };
        let (ab, ba, bc, ac) = (d(0, 1), d(1, 0), d(1, 2), d(0, 2));
        if ab != ba {
            asym += 1;
        }
        if ac > &(&ab + &bc) + &slack {
            triangle += 1;
        }
    }
    Outcome {
        passed: asym == 0 && triangle == 0,
        detail: format!("100 triples, {asym} asymmetric, {triangle} triangle violations"),
    }
}

fn interleaving_evidence() -> Outcome {
    let tol = default_tolerance();
    let mut di_above_db = 0;
    let mut dp_within = 0;
    let mut field_disagree = 0;
    for k in 0..200u64 {
        let (m, n) = pair(20000 + k, 3, 1 + (k % 3) as usize, 6);
        let di = interleaving_distance_bruteforce(&m, &n, Field::F2, DEFAULT_MAX_R).unwrap();
        let di3 = interleaving_distance_bruteforce(&m, &n, Field::F3, DEFAULT_MAX_R).unwrap();
        let db = bottleneck_distance(&m, &n).unwrap();
        let dp = pruning_distance(&m, &n, &tol, Mode::Bisect).unwrap();
        let (i, b, p) = (finite(&di), finite(&db), finite(&dp));
        if di != di3 {
            field_disagree += 1;
            eprintln!("  pair {k}: d_I over F2 {di}, over F3 {di3}");
        }
        if i > b {
            di_above_db += 1;
            eprintln!("  pair {k}: d_I {di} > d_B {db}");
        }
        if p <= &i + &tol {
            dp_within += 1;
        } else {
            eprintln!("  finding: pair {k} has d_P {dp} > d_I {di}");
        }
    }
    Outcome {
        passed: di_above_db == 0,
        detail: format!(
            "200 pairs, d_I <= d_B violations {di_above_db}; d_P <= d_I + tol in {dp_within}/200; F2/F3 disagreements {field_disagree}"
        ),
    }
}

fn bottleneck_oracle() -> Outcome {
    let mut bad = 0;
    for k in 0..200u64 {
        let (m, n) = pair(30000 + k, 6, 1 + (k % 3) as usize, 8);
        let fast = bottleneck_distance(&m, &n).unwrap().value;
        let slow = bottleneck_bruteforce(&m, &n).unwrap();
        if fast != slow || matches!(fast, Distance::Infinite) {
            bad += 1;
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("200 pairs, {bad} disagreements"),
    }
}

/// Coordinates lie in [-8, 8] and `eps` in (1/4)Z, so every breakpoint in
/// `delta` is a multiple of 1/4 no larger than 8 and the 41-point grid on
/// [0, max + 2] has spacing at most 1/4: each constant piece holds a sample.
fn event_decomposition() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut bad = 0;
    let mut held = 0;
    for k in 0..100u64 {
        let (m, n) = pair(40000 + k, 4, 1 + (k % 3) as usize, 8);
        let eps = q(rng.gen_range(0..=40), 4);
        let fast = refinement_all_delta(&m, &n, &eps).unwrap();
        let top = delta_events(&m, &n, &eps)
            .unwrap()
            .into_iter()
            .max()
            .unwrap()
            + Rational::from(2);
        let naive = (0..=40).all(|i| refinement_at(&m, &n, &eps, &(&top * q(i, 40))).unwrap());
        held += usize::from(fast);
        if fast != naive {
            bad += 1;
            eprintln!("  pair {k} at eps {eps}: events say {fast}, sampling says {naive}");
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("100 pairs, {bad} disagreements, predicate held in {held}"),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 sharp example", sharp_example, Duration::from_secs(10)),
        (
            "2 closed form vs fixed point",
            closed_form_vs_fixed_point,
            Duration::from_secs(30),
        ),
        (
            "3 d_P <= d_B <= (2r-1) d_P",
            main_inequality,
            Duration::from_secs(300),
        ),
        (
            "4 graph distance bound",
            graph_bound,
            Duration::from_secs(5),
        ),
        (
            "5 zero pruning and monotonicity",
            identity_and_monotonicity,
            Duration::from_secs(60),
        ),
        (
            "6 d_P pseudo-metric",
            pseudo_metric,
            Duration::from_secs(60),
        ),
        (
            "7 interleaving comparison",
            interleaving_evidence,
            Duration::from_secs(120),
        ),
        (
            "8 bottleneck oracle",
            bottleneck_oracle,
            Duration::from_secs(30),
        ),
        (
            "9 delta event decomposition",
            event_decomposition,
            Duration::from_secs(120),
        ),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let passed = outcome.passed && in_time;
        failed += usize::from(!passed);
        println!(
            "{} criterion {name}: {} ({:.2}s{})",
            if passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            if in_time {
                String::new()
            } else {
                format!(", over the {}s budget", budget.as_secs())
            }
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
