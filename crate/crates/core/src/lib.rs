//! Exact computations on upset-decomposable multiparameter persistence
//! modules over `R^d` with the diagonal shift.
//!
//! * [`upset`]: staircases as antichains of exact rational points.
//! * [`module`]: direct sums of upset modules.
//! * [`pruning`]: shift graphs and prunings, in closed form and by
//!   fixed-point iteration.
//! * [`distances`]: ∞-refinement, pruning distance and bottleneck distance.
//! * [`ci`]: brute-force interleaving distance for small modules.
//! * [`io`], [`render`]: JSON module files, DOT and SVG output.

pub mod ci;
pub mod distances;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod matching;
pub mod module;
pub mod pruning;
pub mod rational;
pub mod render;
pub mod upset;
pub mod verify;

pub use ci::{interleaving_distance_bruteforce, Field};
pub use distances::{
    bottleneck_distance, pruning_distance, refinement_all_delta, Distance, DistanceResult, Mode,
};
pub use error::{Error, Result};
pub use module::{random_module, Module};
pub use pruning::{build_graph, prune, prune_iterative, ShiftGraph};
pub use rational::Rational;
pub use upset::{Point, Upset};
