//! Pruning, bottleneck and pairwise interleaving distances.
//!
//! # Evaluating the refinement predicate
//!
//! The pruning distance is the infimum of `eps` such that for every
//! `delta >= 0` the `(eps + delta)`-pruning of each module is an
//! ∞-refinement of the `delta`-pruning of the other. For upset-decomposable
//! modules an ∞-refinement is a perfect matching of summands under support
//! containment, so the predicate asks for perfect matchings under
//!
//! ```text
//! (⋂_{J_l} M)(-eps - delta) ⊆ (⋂_{J'_s} N)(-delta)
//! ```
//!
//! where `J_l` is a reach set in `G(M, eps + delta)` and `J'_s` one in
//! `G(N, delta)`. Shifting both sides by `eps + delta` turns this into
//! `A_l ⊆ B_s(eps)` with `A_l = ⋂_{J_l} M` and `B_s = ⋂_{J'_s} N`; `delta`
//! only enters through which graphs are in force. A shift graph changes only
//! when `2 alpha` crosses a threshold, i.e. at the positive half-thresholds,
//! and it is right-continuous there. So the condition is piecewise constant
//! in `delta` with breaks in
//!
//! ```text
//! D = {0} ∪ {h, h - eps : h a positive half-threshold of M or N} ∩ [0, ∞)
//! ```
//!
//! and checking the points of `D`, the midpoints between consecutive points
//! and `max D + 1` covers every `delta`.
//!
//! The same argument in `eps` shows the predicate can only switch at a
//! value `minshift(⋂ M_J, ⋂ N_J')`, `minshift(⋂ N_J', ⋂ M_J)` or a
//! difference of half-thresholds; exact mode snaps to those.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::module::Module;
use crate::pruning::{prune, reach_intersections, threshold_matrix, ShiftGraph};
use crate::rational::Rational;
use crate::upset::Upset;

/// A distance value; infinity is its own variant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(Rational),
    Infinite,
}

impl Distance {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Distance::Finite(r) => Some(r),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Distance::Infinite)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(r) => write!(f, "{r}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// A computed distance, either exact or a bisection bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub value: Distance,
    pub exact: bool,
    /// `(lo, hi)` containing the true value; present iff `!exact`.
    pub bracket: Option<(Rational, Rational)>,
}

impl DistanceResult {
    pub fn exact(value: Distance) -> Self {
        DistanceResult {
            value,
            exact: true,
            bracket: None,
        }
    }

    pub fn exact_value(value: Rational) -> Self {
        Self::exact(Distance::Finite(value))
    }

    pub fn infinite() -> Self {
        Self::exact(Distance::Infinite)
    }

    fn bracketed(lo: Rational, hi: Rational) -> Self {
        DistanceResult {
            value: Distance::Finite(lo.midpoint(&hi)),
            exact: false,
            bracket: Some((lo, hi)),
        }
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<&Rational> {
        self.value.finite()
    }
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.bracket {
            Some((lo, hi)) if !self.exact => write!(f, "≈ {} [{lo}, {hi}]", self.value),
            _ => write!(f, "{}", self.value),
        }
    }
}

/// How [`pruning_distance`] finishes after bracketing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Bisect,
    Exact,
}

/// Default bisection width, `1/10^9`.
pub fn default_tolerance() -> Rational {
    Rational::ratio(1, 1_000_000_000)
}

/// Interleaving distance between two upset modules.
///
/// A morphism between upset modules is a single scalar and is nonzero only
/// under support containment, so `U` and `V` are `eps`-interleaved iff
/// `U ⊆ V(eps)` and `V ⊆ U(eps)`.
pub fn pair_interleaving(u: &Upset, v: &Upset) -> Result<Rational> {
    let forward = u.min_shift(v)?;
    let backward = v.min_shift(u)?;
    Ok(Rational::zero().max(forward).max(backward))
}

/// Whether `p` is an ∞-refinement of `m`: equal summand counts and a
/// bijection sending each summand of `p` into a summand of `m`.
pub fn inf_refinement(p: &Module, m: &Module) -> Result<bool> {
    p.check_same_dim(m)?;
    if p.supdim() != m.supdim() {
        return Ok(false);
    }
    let mut edges = vec![vec![false; m.supdim()]; p.supdim()];
    for (i, a) in p.summands().iter().enumerate() {
        for (l, b) in m.summands().iter().enumerate() {
            edges[i][l] = a.is_subset(b)?;
        }
    }
    Ok(perfect_matching(p.supdim(), |i, l| edges[i][l]).is_some())
}

/// The refinement condition at a single `delta`, computed directly from the
/// two prunings of each module.
pub fn refinement_at(m: &Module, n: &Module, eps: &Rational, delta: &Rational) -> Result<bool> {
    check_nonnegative(eps)?;
    check_nonnegative(delta)?;
    let outer = eps + delta;
    Ok(inf_refinement(&prune(m, &outer)?, &prune(n, delta)?)?
        && inf_refinement(&prune(n, &outer)?, &prune(m, delta)?)?)
}

fn check_nonnegative(x: &Rational) -> Result<()> {
    if x.is_negative() {
        Err(Error::NegativeParameter(x.clone()))
    } else {
        Ok(())
    }
}

/// Every shift graph of a module with its unshifted reach intersections.
#[derive(Clone, Debug)]
struct PruningProfile {
    /// Sorted distinct positive half-thresholds. Structure `k` is in force
    /// for `alpha` in `[breakpoints[k-1], breakpoints[k])`.
    breakpoints: Vec<Rational>,
    /// Every half-threshold, including zero and negative ones.
    half_thresholds: Vec<Rational>,
    blocks: Vec<Upset>,
    /// `layout[k][l]`: index into `blocks` of summand `l` under structure `k`.
    layout: Vec<Vec<usize>>,
}

impl PruningProfile {
    fn new(m: &Module) -> Self {
        let thresholds = threshold_matrix(m);
        let half_thresholds: Vec<Rational> = thresholds
            .iter()
            .flatten()
            .map(Rational::half)
            .sorted()
            .dedup()
            .collect();
        let breakpoints: Vec<Rational> = half_thresholds
            .iter()
            .filter(|h| h.is_positive())
            .cloned()
            .collect();
        let mut blocks = Vec::new();
        let mut index: HashMap<Upset, usize> = HashMap::new();
        let mut layout = Vec::with_capacity(breakpoints.len() + 1);
        for alpha in std::iter::once(Rational::zero()).chain(breakpoints.iter().cloned()) {
            let graph = ShiftGraph::from_thresholds(thresholds.clone(), &alpha)
                .expect("alpha >= 0 and module nonzero");
            let row = reach_intersections(m, &graph)
                .into_iter()
                .map(|u| {
                    *index.entry(u.clone()).or_insert_with(|| {
                        blocks.push(u);
                        blocks.len() - 1
                    })
                })
                .collect();
            layout.push(row);
        }
        PruningProfile {
            breakpoints,
            half_thresholds,
            blocks,
            layout,
        }
    }

    fn structure_at(&self, alpha: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b <= alpha)
    }
}

/// Refinement predicate for a fixed pair of nonzero modules with equal
/// summand counts. Shift thresholds between blocks are cached.
struct RefinementOracle {
    r: usize,
    m: PruningProfile,
    n: PruningProfile,
    m_to_n: RefCell<HashMap<(usize, usize), Rational>>,
    n_to_m: RefCell<HashMap<(usize, usize), Rational>>,
}

#[derive(Clone, Copy)]
enum Direction {
    MIntoN,
    NIntoM,
}

impl RefinementOracle {
    fn new(m: &Module, n: &Module) -> Self {
        debug_assert_eq!(m.supdim(), n.supdim());
        RefinementOracle {
            r: m.supdim(),
            m: PruningProfile::new(m),
            n: PruningProfile::new(n),
            m_to_n: RefCell::new(HashMap::new()),
            n_to_m: RefCell::new(HashMap::new()),
        }
    }

    fn events(&self, eps: &Rational) -> Vec<Rational> {
        let mut d = vec![Rational::zero()];
        for b in self.m.breakpoints.iter().chain(&self.n.breakpoints) {
            d.push(b.clone());
            let shifted = b - eps;
            if !shifted.is_negative() {
                d.push(shifted);
            }
        }
        d.sort();
        d.dedup();
        d
    }

    fn samples(&self, eps: &Rational) -> Vec<Rational> {
        let d = self.events(eps);
        let mut out = Vec::with_capacity(2 * d.len());
        for (a, b) in d.iter().tuple_windows() {
            out.push(a.clone());
            out.push(a.midpoint(b));
        }
        let last = d.last().expect("0 is always an event").clone();
        out.push(last.clone());
        out.push(last + Rational::one());
        out
    }

    fn threshold(&self, dir: Direction, a: usize, b: usize) -> Rational {
        let (cache, src, dst) = match dir {
            Direction::MIntoN => (&self.m_to_n, &self.m, &self.n),
            Direction::NIntoM => (&self.n_to_m, &self.n, &self.m),
        };
        if let Some(t) = cache.borrow().get(&(a, b)) {
            return t.clone();
        }
        let t = src.blocks[a]
            .min_shift(&dst.blocks[b])
            .expect("modules share a dimension");
        cache.borrow_mut().insert((a, b), t.clone());
        t
    }

    /// Perfect matching of the outer structure's blocks into the inner
    /// structure's blocks shifted by `eps`.
    fn matches(&self, dir: Direction, outer: usize, inner: usize, eps: &Rational) -> bool {
        let (src, dst) = match dir {
            Direction::MIntoN => (&self.m, &self.n),
            Direction::NIntoM => (&self.n, &self.m),
        };
        let a = &src.layout[outer];
        let b = &dst.layout[inner];
        perfect_matching(self.r, |l, s| self.threshold(dir, a[l], b[s]) <= *eps).is_some()
    }

    fn holds(&self, eps: &Rational) -> bool {
        let mut checked: HashSet<(bool, usize, usize)> = HashSet::new();
        for delta in self.samples(eps) {
            let outer = eps + &delta;
            let keys = [
                (
                    true,
                    self.m.structure_at(&outer),
                    self.n.structure_at(&delta),
                ),
                (
                    false,
                    self.n.structure_at(&outer),
                    self.m.structure_at(&delta),
                ),
            ];
            for key in keys {
                if !checked.insert(key) {
                    continue;
                }
                let dir = if key.0 {
                    Direction::MIntoN
                } else {
                    Direction::NIntoM
                };
                if !self.matches(dir, key.1, key.2, eps) {
                    return false;
                }
            }
        }
        true
    }

    /// Values at which the predicate can change, sorted, including 0.
    fn critical_values(&self, m: &Module, n: &Module) -> Vec<Rational> {
        let m_blocks = subset_intersections(m);
        let n_blocks = subset_intersections(n);
        let mut out = vec![Rational::zero()];
        for a in &m_blocks {
            for b in &n_blocks {
                for t in [a.min_shift(b), b.min_shift(a)] {
                    let t = t.expect("modules share a dimension");
                    if t.is_positive() {
                        out.push(t);
                    }
                }
            }
        }
        let halves: Vec<&Rational> = self
            .m
            .half_thresholds
            .iter()
            .chain(&self.n.half_thresholds)
            .collect();
        let zero = Rational::zero();
        for (x, y) in halves.iter().chain([&&zero]).tuple_combinations() {
            out.push((*x - *y).abs());
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Intersections over every nonempty subset of summands.
fn subset_intersections(m: &Module) -> Vec<Upset> {
    let r = m.supdim();
    let mut out: Vec<Upset> = (1u64..(1u64 << r))
        .map(|mask| {
            Upset::intersect_all(
                (0..r)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| &m.summands()[i]),
            )
            .expect("mask is nonempty")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether for every `delta >= 0` the `(eps + delta)`-pruning of each module
/// is an ∞-refinement of the `delta`-pruning of the other.
pub fn refinement_all_delta(m: &Module, n: &Module, eps: &Rational) -> Result<bool> {
    check_nonnegative(eps)?;
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    Ok(RefinementOracle::new(m, n).holds(eps))
}

/// The breakpoints in `delta` used by [`refinement_all_delta`] at `eps`.
pub fn delta_events(m: &Module, n: &Module, eps: &Rational) -> Result<Vec<Rational>> {
    check_nonnegative(eps)?;
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Err(Error::CountMismatch(m.supdim(), n.supdim()));
    }
    if m.is_zero() {
        return Ok(vec![Rational::zero()]);
    }
    Ok(RefinementOracle::new(m, n).events(eps))
}

/// Pruning distance.
///
/// Infinite when summand counts differ. Otherwise the predicate is monotone
/// in `eps`: an upper bound is found by doubling from 1 and the bracket is
/// bisected to width `tol`. In [`Mode::Exact`] the bracket is then snapped
/// to the smallest critical value that provably is the infimum; if none
/// verifies, the bisection bracket is returned.
pub fn pruning_distance(
    m: &Module,
    n: &Module,
    tol: &Rational,
    mode: Mode,
) -> Result<DistanceResult> {
    if !tol.is_positive() {
        return Err(Error::InvalidTolerance(tol.clone()));
    }
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Ok(DistanceResult::infinite());
    }
    if m.is_zero() {
        return Ok(DistanceResult::exact_value(Rational::zero()));
    }
    let oracle = RefinementOracle::new(m, n);
    if oracle.holds(&Rational::zero()) {
        return Ok(DistanceResult::exact_value(Rational::zero()));
    }
    let two = Rational::from(2);
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    // terminates: the predicate holds at the bottleneck distance
    while !oracle.holds(&hi) {
        lo = hi.clone();
        hi = &hi * &two;
    }
    while &hi - &lo > *tol {
        let mid = lo.midpoint(&hi);
        if oracle.holds(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if mode == Mode::Exact {
        let critical = oracle.critical_values(m, n);
        for (k, s) in critical.iter().enumerate() {
            if *s < lo || *s > hi {
                continue;
            }
            let fails_below = k == 0 || !oracle.holds(&critical[k - 1].midpoint(s));
            if !fails_below {
                continue;
            }
            let next = critical
                .get(k + 1)
                .cloned()
                .unwrap_or_else(|| s + Rational::one());
            if oracle.holds(s) || oracle.holds(&s.midpoint(&next)) {
                return Ok(DistanceResult::exact_value(s.clone()));
            }
        }
    }
    Ok(DistanceResult::bracketed(lo, hi))
}

/// `cost[i][j] = pair_interleaving(M_i, N_j)`.
fn cost_matrix(m: &Module, n: &Module) -> Result<Vec<Vec<Rational>>> {
    m.summands()
        .iter()
        .map(|a| {
            n.summands()
                .iter()
                .map(|b| pair_interleaving(a, b))
                .collect()
        })
        .collect()
}

/// Bottleneck distance.
///
/// A nonzero upset module is never interleaved with zero, so every summand
/// must be matched: the distance is infinite unless the counts agree, and
/// otherwise is the bottleneck assignment value of the pairwise interleaving
/// costs, found by binary search over the sorted costs.
pub fn bottleneck_distance(m: &Module, n: &Module) -> Result<DistanceResult> {
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Ok(DistanceResult::infinite());
    }
    if m.is_zero() {
        return Ok(DistanceResult::exact_value(Rational::zero()));
    }
    let cost = cost_matrix(m, n)?;
    let levels: Vec<Rational> = cost.iter().flatten().cloned().sorted().dedup().collect();
    let feasible = |t: &Rational| perfect_matching(m.supdim(), |i, j| cost[i][j] <= *t).is_some();
    let (mut lo, mut hi) = (0, levels.len() - 1);
    debug_assert!(feasible(&levels[hi]));
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&levels[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(DistanceResult::exact_value(levels[lo].clone()))
}

/// Largest summand count accepted by [`bottleneck_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 7;

/// Bottleneck distance by trying every permutation.
pub fn bottleneck_bruteforce(m: &Module, n: &Module) -> Result<Distance> {
    m.check_same_dim(n)?;
    let r = m.supdim().max(n.supdim());
    if r > BRUTEFORCE_CAP {
        return Err(Error::SizeCap {
            size: r,
            cap: BRUTEFORCE_CAP,
        });
    }
    if m.supdim() != n.supdim() {
        return Ok(Distance::Infinite);
    }
    if m.is_zero() {
        return Ok(Distance::Finite(Rational::zero()));
    }
    let cost = cost_matrix(m, n)?;
    let best = (0..r)
        .permutations(r)
        .map(|p| (0..r).map(|i| cost[i][p[i]].clone()).max().expect("r >= 1"))
        .min()
        .expect("at least one permutation");
    Ok(Distance::Finite(best))
}
