//! Upset-decomposable persistence modules.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::upset::{Point, Upset};

/// A direct sum of upset modules, all in the same dimension.
///
/// Summands keep the order they were given in, so that operations such as
/// pruning can be compared index by index. Equality up to isomorphism is
/// [`Module::is_isomorphic`]; [`Module::canonical`] gives the sorted form used
/// for serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    dim: usize,
    summands: Vec<Upset>,
}

impl Module {
    pub fn new(dim: usize, summands: Vec<Upset>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for s in &summands {
            if s.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: s.dim(),
                });
            }
        }
        Ok(Module { dim, summands })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Module::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn summands(&self) -> &[Upset] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Largest pointwise dimension. Finitely many nonempty upsets of `R^d`
    /// always share a point (the join of one generator from each), so this is
    /// the number of summands.
    pub fn supdim(&self) -> usize {
        self.summands.len()
    }

    /// Dimension of the vector space at `p`.
    pub fn pointwise_dim(&self, p: &Point) -> Result<usize> {
        let mut count = 0;
        for s in &self.summands {
            if s.contains(p)? {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn shift(&self, eps: &Rational) -> Module {
        Module {
            dim: self.dim,
            summands: self.summands.iter().map(|s| s.shift(eps)).collect(),
        }
    }

    /// Same summands in sorted order.
    pub fn canonical(&self) -> Module {
        let mut summands = self.summands.clone();
        summands.sort();
        Module {
            dim: self.dim,
            summands,
        }
    }

    /// Isomorphism of upset-decomposable modules: equality of the summand
    /// multisets.
    pub fn is_isomorphic(&self, other: &Module) -> Result<bool> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() && other.is_zero());
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self.canonical().summands == other.canonical().summands)
    }

    /// Checks that both modules are nonzero-compatible in dimension.
    pub(crate) fn check_same_dim(&self, other: &Module) -> Result<()> {
        if !self.is_zero() && !other.is_zero() && self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }
}

/// Deterministic random module.
///
/// The generator is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`.
/// Summands are drawn in order; each draws `gens_per_summand` points, each
/// point draws its `dim` coordinates in order, and each coordinate is
/// `(next_u64() mod (2 * coord_bound + 1)) - coord_bound`. The generator set
/// of every summand is then reduced to its antichain of minimal points.
pub fn random_module(
    seed: u64,
    summand_count: usize,
    dim: usize,
    gens_per_summand: usize,
    coord_bound: u32,
) -> Result<Module> {
    if dim == 0 {
        return Err(Error::InvalidBounds("dimension must be at least 1".into()));
    }
    if gens_per_summand == 0 {
        return Err(Error::InvalidBounds(
            "need at least one generator per summand".into(),
        ));
    }
    if coord_bound == 0 {
        return Err(Error::InvalidBounds(
            "coordinate bound must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 2 * u64::from(coord_bound) + 1;
    let bound = i64::from(coord_bound);
    let mut summands = Vec::with_capacity(summand_count);
    for _ in 0..summand_count {
        let points = (0..gens_per_summand)
            .map(|_| {
                let coords = (0..dim)
                    .map(|_| Rational::from((rng.next_u64() % span) as i64 - bound))
                    .collect();
                Point::new(coords)
            })
            .collect::<Result<Vec<_>>>()?;
        summands.push(Upset::new(&points)?);
    }
    Module::new(dim, summands)
}
