use proptest::prelude::*;

use upset_prune::ci::{ci_solvable, interleaving_distance_bruteforce, patterns, Field};
use upset_prune::distances::{
    bottleneck_distance, default_tolerance, pair_interleaving, pruning_distance,
    refinement_all_delta, Mode,
};
use upset_prune::pruning::{build_graph, prune};
use upset_prune::upset::antichain_reduce;
use upset_prune::{random_module, Module, Point, Rational, Upset};

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn upset(seed: u64, dim: usize, gens: usize) -> Upset {
    random_module(seed, 1, dim, gens, 6).unwrap().summands()[0].clone()
}

/// Points on the half-integer grid of [-8, 8]^dim.
fn probes(dim: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(-16i64..=16, dim), 100..=120).prop_map(|pts| {
        pts.into_iter()
            .map(|c| Point::new(c.into_iter().map(|x| q(x, 2)).collect()).unwrap())
            .collect()
    })
}

fn quarter() -> impl Strategy<Value = Rational> {
    (0i64..=40).prop_map(|k| q(k, 4))
}

fn permuted(m: &Module, key: u64) -> Module {
    let mut s = m.summands().to_vec();
    let len = s.len().max(1);
    s.rotate_left(key as usize % len);
    if key % 2 == 1 {
        s.reverse();
    }
    Module::new(m.dim(), s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn antichain_reduction_is_idempotent_and_support_preserving(
        pts in probes(2),
        raw in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 1..8),
    ) {
        let points: Vec<Point> = raw.iter().map(|c| Point::from_ints(c).unwrap()).collect();
        let once = antichain_reduce(&points).unwrap();
        prop_assert_eq!(antichain_reduce(&once).unwrap(), once.clone());
        let u = Upset::new(&once).unwrap();
        for p in &pts {
            let direct = points.iter().any(|g| g.le(p));
            prop_assert_eq!(u.contains(p).unwrap(), direct);
        }
    }

    #[test]
    fn shifts_compose(seed in any::<u64>(), a in -20i64..=20, b in -20i64..=20, d in 1usize..4) {
        let u = upset(seed, d, 3);
        let (a, b) = (q(a, 3), q(b, 5));
        prop_assert_eq!(u.shift(&a).shift(&b), u.shift(&(&a + &b)));
    }

    #[test]
    fn larger_shifts_contain_smaller(seed in any::<u64>(), e in quarter(), extra in quarter(), d in 1usize..4) {
        let u = upset(seed, d, 3);
        let a = &e + &extra;
        prop_assert!(u.shift(&e).is_subset(&u.shift(&a)).unwrap());
    }

    #[test]
    fn min_shift_is_attained_and_sharp(s1 in any::<u64>(), s2 in any::<u64>(), d in 1usize..4) {
        let (u, v) = (upset(s1, d, 3), upset(s2, d, 3));
        let t = u.min_shift(&v).unwrap();
        prop_assert!(u.is_subset(&v.shift(&t)).unwrap());
        prop_assert!(!u.is_subset(&v.shift(&(&t - q(1, 1000)))).unwrap());
    }

    #[test]
    fn min_shift_chains(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), d in 1usize..4) {
        let (u, v, w) = (upset(s1, d, 3), upset(s2, d, 3), upset(s3, d, 3));
        let (uv, vw) = (u.min_shift(&v).unwrap(), v.min_shift(&w).unwrap());
        if !uv.is_negative() && !vw.is_negative() {
            prop_assert!(u.min_shift(&w).unwrap() <= uv + vw);
        }
    }

    #[test]
    fn intersection_is_membership_conjunction(s1 in any::<u64>(), s2 in any::<u64>(), pts in probes(2)) {
        let (u, v) = (upset(s1, 2, 4), upset(s2, 2, 4));
        let both = u.intersect(&v).unwrap();
        for p in &pts {
            prop_assert_eq!(both.contains(p).unwrap(), u.contains(p).unwrap() && v.contains(p).unwrap());
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence_compatible_with_shift(seed in any::<u64>(), key in any::<u64>(), e in quarter()) {
        let m = random_module(seed, 4, 2, 2, 2).unwrap();
        let n = permuted(&m, key);
        let o = permuted(&n, key / 3);
        let other = random_module(seed ^ 1, 4, 2, 2, 2).unwrap();
        prop_assert!(m.is_isomorphic(&m).unwrap());
        prop_assert!(n.is_isomorphic(&m).unwrap() && m.is_isomorphic(&n).unwrap());
        prop_assert!(m.is_isomorphic(&o).unwrap());
        prop_assert_eq!(m.is_isomorphic(&other).unwrap(), other.is_isomorphic(&m).unwrap());
        if m.is_isomorphic(&other).unwrap() {
            prop_assert!(n.is_isomorphic(&other).unwrap());
        }
        prop_assert!(m.shift(&e).is_isomorphic(&n.shift(&e)).unwrap());
    }

    #[test]
    fn shift_graph_invariants(seed in any::<u64>(), r in 1usize..7, a in quarter(), extra in quarter()) {
        let m = random_module(seed, r, 2, 3, 8).unwrap();
        let g = build_graph(&m, &a).unwrap();
        let wider = build_graph(&m, &(&a + &extra)).unwrap();
        for i in 0..r {
            prop_assert!(g.thresholds()[i][i].is_zero());
            prop_assert!(g.has_edge(i, i));
            prop_assert!(g.reach(i).contains(&i));
            for &j in g.reach(i) {
                prop_assert!(g.reach(j).iter().all(|k| g.reach(i).contains(k)));
            }
            for j in 0..r {
                prop_assert!(!g.has_edge(i, j) || wider.has_edge(i, j));
            }
        }
    }

    #[test]
    fn pruning_respects_reachability(seed in any::<u64>(), r in 1usize..6, a in quarter()) {
        let m = random_module(seed, r, 2, 3, 10).unwrap();
        let g = build_graph(&m, &a).unwrap();
        let p = prune(&m, &a).unwrap();
        for i in 0..r {
            for &j in g.reach(i) {
                prop_assert!(p.summands()[i].is_subset(&p.summands()[j]).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn refinement_predicate_is_monotone(k in any::<u64>(), r in 1usize..4, e in quarter()) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(1), r, 2, 2, 6).unwrap();
        if refinement_all_delta(&m, &n, &e).unwrap() {
            prop_assert!(refinement_all_delta(&m, &n, &(&e + q(1, 7))).unwrap());
        }
    }

    #[test]
    fn distances_ignore_summand_order(k in any::<u64>(), key in any::<u64>(), r in 1usize..5) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(7), r, 2, 2, 6).unwrap();
        let tol = default_tolerance();
        let (pm, pn) = (permuted(&m, key), permuted(&n, key / 5));
        prop_assert_eq!(bottleneck_distance(&m, &n).unwrap(), bottleneck_distance(&pm, &pn).unwrap());
        prop_assert_eq!(
            pruning_distance(&m, &n, &tol, Mode::Bisect).unwrap(),
            pruning_distance(&pm, &pn, &tol, Mode::Bisect).unwrap()
        );
    }

    #[test]
    fn pruning_distance_is_symmetric(k in any::<u64>(), r in 1usize..4) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(3), r, 2, 2, 6).unwrap();
        for mode in [Mode::Bisect, Mode::Exact] {
            let tol = q(1, 1000);
            prop_assert_eq!(pruning_distance(&m, &n, &tol, mode).unwrap(), pruning_distance(&n, &m, &tol, mode).unwrap());
        }
    }

    #[test]
    fn exact_mode_lies_in_the_bisection_bracket(k in any::<u64>(), r in 1usize..4) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(5), r, 2, 2, 6).unwrap();
        let tol = q(1, 1000);
        let exact = pruning_distance(&m, &n, &tol, Mode::Exact).unwrap();
        let approx = pruning_distance(&m, &n, &tol, Mode::Bisect).unwrap();
        let v = exact.finite().unwrap();
        match &approx.bracket {
            Some((lo, hi)) => prop_assert!(lo <= v && v <= hi),
            None => prop_assert_eq!(&approx, &exact),
        }
        if exact.exact {
            // closed upsets: the infimum is attained
            prop_assert!(refinement_all_delta(&m, &n, v).unwrap());
            if v.is_positive() {
                prop_assert!(!refinement_all_delta(&m, &n, &(v - q(1, 100000))).unwrap());
            }
        }
    }

    #[test]
    fn interleaving_patterns_only_grow(k in any::<u64>(), r in 1usize..4, e in quarter(), extra in quarter()) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(9), r, 2, 2, 6).unwrap();
        let (a, b) = patterns(&m, &n, &e).unwrap();
        let (a2, b2) = patterns(&m, &n, &(&e + &extra)).unwrap();
        for i in 0..r {
            for j in 0..r {
                prop_assert!(!a.allowed[i][j] || a2.allowed[i][j]);
                prop_assert!(!b.allowed[i][j] || b2.allowed[i][j]);
            }
        }
        for field in [Field::F2, Field::F3] {
            if ci_solvable(&a, &b, field, 4).unwrap() {
                prop_assert!(ci_solvable(&a2, &b2, field, 4).unwrap());
            }
        }
    }

    /// For two summands an invertible 2x2 matrix must use the whole diagonal
    /// or the whole anti-diagonal, and its inverse then uses the same cells,
    /// so the distance is the better of the two pairings.
    #[test]
    fn small_interleaving_distances_by_hand(k in any::<u64>(), r in 1usize..3) {
        let m = random_module(k, r, 2, 3, 6).unwrap();
        let n = random_module(k.wrapping_add(11), r, 2, 3, 6).unwrap();
        let c = |i: usize, j: usize| pair_interleaving(&m.summands()[i], &n.summands()[j]).unwrap();
        let expected = if r == 1 {
            c(0, 0)
        } else {
            c(0, 0).max(c(1, 1)).min(c(0, 1).max(c(1, 0)))
        };
        for field in [Field::F2, Field::F3] {
            let got = interleaving_distance_bruteforce(&m, &n, field, 4).unwrap();
            prop_assert_eq!(got.finite(), Some(&expected));
            prop_assert!(got.exact);
        }
    }

    #[test]
    fn interleaving_is_below_bottleneck(k in any::<u64>(), r in 1usize..4) {
        let m = random_module(k, r, 2, 2, 6).unwrap();
        let n = random_module(k.wrapping_add(13), r, 2, 2, 6).unwrap();
        let di = interleaving_distance_bruteforce(&m, &n, Field::F2, 4).unwrap();
        let db = bottleneck_distance(&m, &n).unwrap();
        prop_assert!(di.finite().unwrap() <= db.finite().unwrap());
    }
}
