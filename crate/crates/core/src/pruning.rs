//! Prunings of upset-decomposable modules.
//!
//! For `M = M_1 ⊕ ... ⊕ M_r` and `alpha >= 0`, the shift graph has an edge
//! `i -> j` whenever `M_i ⊆ M_j(2 alpha)`. Writing `J_i` for the set of
//! summands reachable from `i`, the `alpha`-pruning has summands
//!
//! ```text
//! (⋂_{j ∈ J_i} M_j)(-alpha)
//! ```
//!
//! The quotient part of the general pruning construction vanishes here
//! because every shift map of an upset module is injective.
//!
//! [`prune_iterative`] runs the defining fixed-point iteration one edge at a
//! time and serves as an independent check of [`prune`].

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::module::Module;
use crate::rational::Rational;
use crate::upset::Upset;

/// `thresholds[i][j] = min_shift(M_i, M_j)`.
pub fn threshold_matrix(m: &Module) -> Vec<Vec<Rational>> {
    m.summands()
        .iter()
        .map(|a| {
            m.summands()
                .iter()
                .map(|b| a.min_shift(b).expect("summands share a dimension"))
                .collect()
        })
        .collect()
}

/// The shift-containment digraph of a module at scale `alpha`.
#[derive(Clone, Debug)]
pub struct ShiftGraph {
    thresholds: Vec<Vec<Rational>>,
    alpha: Rational,
    graph: Digraph,
    reach: Vec<Vec<usize>>,
}

impl ShiftGraph {
    /// Builds the graph from a precomputed threshold matrix.
    pub fn from_thresholds(thresholds: Vec<Vec<Rational>>, alpha: &Rational) -> Result<Self> {
        if alpha.is_negative() {
            return Err(Error::NegativeParameter(alpha.clone()));
        }
        if thresholds.is_empty() {
            return Err(Error::ZeroModule);
        }
        let twice = alpha + alpha;
        let adj = thresholds
            .iter()
            .map(|row| row.iter().map(|t| *t <= twice).collect())
            .collect();
        let graph = Digraph::from_adjacency(adj);
        let reach = graph.reach_sets();
        if cfg!(debug_assertions) {
            let closure = graph.closure();
            for (v, set) in reach.iter().enumerate() {
                let row: Vec<usize> = (0..graph.len()).filter(|&w| closure[v][w]).collect();
                assert_eq!(&row, set, "search and closure disagree at vertex {v}");
            }
        }
        Ok(ShiftGraph {
            thresholds,
            alpha: alpha.clone(),
            graph,
            reach,
        })
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn thresholds(&self) -> &[Vec<Rational>] {
        &self.thresholds
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.graph.has_edge(from, to)
    }

    /// Sorted set of summands reachable from `v`, including `v`.
    pub fn reach(&self, v: usize) -> &[usize] {
        &self.reach[v]
    }

    pub fn reach_sets(&self) -> &[Vec<usize>] {
        &self.reach
    }
}

/// Shift graph `G(M, alpha)`.
pub fn build_graph(m: &Module, alpha: &Rational) -> Result<ShiftGraph> {
    if alpha.is_negative() {
        return Err(Error::NegativeParameter(alpha.clone()));
    }
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    ShiftGraph::from_thresholds(threshold_matrix(m), alpha)
}

/// Intersections `⋂_{j ∈ J_i} M_j` for every summand `i`, before the final
/// shift. Folded in increasing index order.
pub(crate) fn reach_intersections(m: &Module, graph: &ShiftGraph) -> Vec<Upset> {
    (0..graph.len())
        .map(|i| {
            Upset::intersect_all(graph.reach(i).iter().map(|&j| &m.summands()[j]))
                .expect("reach sets are nonempty")
        })
        .collect()
}

/// The `alpha`-pruning by the reachability closed form. Summand `i` of the
/// result corresponds to summand `i` of `m`.
pub fn prune(m: &Module, alpha: &Rational) -> Result<Module> {
    if alpha.is_negative() {
        return Err(Error::NegativeParameter(alpha.clone()));
    }
    if m.is_zero() {
        return Ok(m.clone());
    }
    let graph = build_graph(m, alpha)?;
    let back = -alpha;
    let summands = reach_intersections(m, &graph)
        .iter()
        .map(|u| u.shift(&back))
        .collect();
    Module::new(m.dim(), summands)
}

/// Output of [`prune_iterative_trace`].
#[derive(Clone, Debug)]
pub struct IterativePruning {
    pub module: Module,
    /// Smallest `i` with `I_i = I_{i+1}`.
    pub stable_after: usize,
}

/// Fixed-point iteration for the pruning: `I_0 = M`, and summand `l` of
/// `I_i` is the intersection of summand `l'` of `I_{i-1}` over the direct
/// successors `l'` of `l` (which include `l` itself). The submodule being
/// quotiented out is zero, so the result is `I(-alpha)`.
pub fn prune_iterative_trace(m: &Module, alpha: &Rational) -> Result<IterativePruning> {
    if alpha.is_negative() {
        return Err(Error::NegativeParameter(alpha.clone()));
    }
    if m.is_zero() {
        return Ok(IterativePruning {
            module: m.clone(),
            stable_after: 0,
        });
    }
    let graph = build_graph(m, alpha)?;
    let g = graph.graph();
    let mut current: Vec<Upset> = m.summands().to_vec();
    let mut steps = 0;
    loop {
        let next: Vec<Upset> = (0..g.len())
            .map(|l| {
                Upset::intersect_all(g.successors(l).map(|s| &current[s]))
                    .expect("every vertex has a self-loop")
            })
            .collect();
        if next == current {
            break;
        }
        current = next;
        steps += 1;
    }
    let back = -alpha;
    let summands = current.iter().map(|u| u.shift(&back)).collect();
    Ok(IterativePruning {
        module: Module::new(m.dim(), summands)?,
        stable_after: steps,
    })
}

pub fn prune_iterative(m: &Module, alpha: &Rational) -> Result<Module> {
    prune_iterative_trace(m, alpha).map(|p| p.module)
}
