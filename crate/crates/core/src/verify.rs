//! Built-in verification corpus run by `upset-prune verify`.
//!
//! Covers the tight example (pruning, refinement, all three distances),
//! the zero-pruning identity and seeded spot checks of
//! `d_P <= d_B <= (2r - 1) d_P`.

use crate::ci::{interleaving_distance_bruteforce, Field, DEFAULT_MAX_R};
use crate::distances::{
    bottleneck_bruteforce, bottleneck_distance, default_tolerance, inf_refinement,
    pruning_distance, refinement_all_delta, Distance, DistanceResult, Mode,
};
use crate::error::Result;
use crate::fixtures::tight_pair;
use crate::module::random_module;
use crate::pruning::prune;
use crate::rational::Rational;

/// One line of the verification table.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn record(out: &mut Vec<Check>, name: String, outcome: Result<(bool, String)>) {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    out.push(Check {
        name,
        passed,
        detail,
    });
}

fn show(d: &DistanceResult) -> String {
    d.to_string()
}

pub fn run_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let alpha = Rational::one();
    let tol = default_tolerance();

    for r in 1..=4usize {
        let (m, n) = tight_pair(r, 2, &alpha);
        let bound = Rational::from(2 * r as i64 - 1) * &alpha;

        record(
            &mut out,
            format!("tight r={r}: supdim M = r"),
            Ok((m.supdim() == r, format!("{}", m.supdim()))),
        );
        record(
            &mut out,
            format!("tight r={r}: Pru_0(M) = M"),
            prune(&m, &Rational::zero())
                .and_then(|p| p.is_isomorphic(&m))
                .map(|ok| (ok, String::new())),
        );
        record(
            &mut out,
            format!("tight r={r}: Pru_alpha(M) = N"),
            prune(&m, &alpha)
                .and_then(|p| p.is_isomorphic(&n))
                .map(|ok| (ok, String::new())),
        );
        record(
            &mut out,
            format!("tight r={r}: refinements at alpha and alpha/2"),
            (|| {
                let at_alpha = inf_refinement(&prune(&m, &alpha)?, &n)?;
                let back = inf_refinement(&n, &m)?;
                let at_half = inf_refinement(&prune(&m, &alpha.half())?, &n)?;
                Ok((
                    at_alpha && back && !at_half,
                    format!("{at_alpha} {back} {at_half}"),
                ))
            })(),
        );
        record(
            &mut out,
            format!("tight r={r}: all-delta predicate"),
            (|| {
                let full = refinement_all_delta(&m, &n, &alpha)?;
                let half = refinement_all_delta(&m, &n, &alpha.half())?;
                Ok((full && !half, format!("{full} {half}")))
            })(),
        );
        record(
            &mut out,
            format!("tight r={r}: Pru_(alpha+delta)(M) = Pru_delta(N) = N(-delta)"),
            (|| {
                for delta in [
                    Rational::zero(),
                    Rational::ratio(1, 3),
                    Rational::one(),
                    Rational::ratio(5, 2),
                ] {
                    let target = n.shift(&-&delta);
                    let left = prune(&m, &(&alpha + &delta))?;
                    let right = prune(&n, &delta)?;
                    if !left.is_isomorphic(&target)? || !right.is_isomorphic(&target)? {
                        return Ok((false, format!("fails at delta={delta}")));
                    }
                }
                Ok((true, "delta in {0, 1/3, 1, 5/2}".into()))
            })(),
        );
        record(
            &mut out,
            format!("tight r={r}: d_P = alpha"),
            pruning_distance(&m, &n, &tol, Mode::Exact)
                .map(|d| (d == DistanceResult::exact_value(alpha.clone()), show(&d))),
        );
        record(
            &mut out,
            format!("tight r={r}: d_B = (2r-1) alpha"),
            bottleneck_distance(&m, &n)
                .map(|d| (d == DistanceResult::exact_value(bound.clone()), show(&d))),
        );
        if r <= 3 {
            record(
                &mut out,
                format!("tight r={r}: brute-force d_B"),
                bottleneck_bruteforce(&m, &n)
                    .map(|d| (d == Distance::Finite(bound.clone()), d.to_string())),
            );
            record(
                &mut out,
                format!("tight r={r}: d_I = (2r-1) alpha"),
                interleaving_distance_bruteforce(&m, &n, Field::F2, DEFAULT_MAX_R)
                    .map(|d| (d == DistanceResult::exact_value(bound.clone()), show(&d))),
            );
        }
    }

    record(
        &mut out,
        "different summand counts: d_P = d_B = inf".into(),
        (|| {
            let (m, _) = tight_pair(2, 2, &alpha);
            let (n, _) = tight_pair(3, 2, &alpha);
            let dp = pruning_distance(&m, &n, &tol, Mode::Bisect)?;
            let db = bottleneck_distance(&m, &n)?;
            let inf = DistanceResult::infinite();
            Ok((
                dp == inf && db == inf,
                format!("{} {}", show(&dp), show(&db)),
            ))
        })(),
    );

    for seed in 0..12u64 {
        let r = 1 + (seed % 3) as usize;
        record(
            &mut out,
            format!("random seed={seed}: d_P <= d_B <= (2r-1) d_P"),
            (|| {
                let m = random_module(2 * seed, r, 2, 3, 6)?;
                let n = random_module(2 * seed + 1, r, 2, 3, 6)?;
                let dp = pruning_distance(&m, &n, &tol, Mode::Bisect)?;
                let db = bottleneck_distance(&m, &n)?;
                let (Some(p), Some(b)) = (dp.finite(), db.finite()) else {
                    return Ok((false, "unexpected infinite distance".into()));
                };
                let factor = Rational::from(2 * r as i64 - 1);
                let lower = &(p - &tol) <= b;
                let upper = *b <= &factor * &(p + &tol);
                Ok((
                    lower && upper,
                    format!("d_P {} d_B {}", show(&dp), show(&db)),
                ))
            })(),
        );
    }
    out
}
