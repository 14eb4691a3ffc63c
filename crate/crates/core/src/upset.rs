//! Finitely generated closed upsets of `R^d` (staircases).
//!
//! An [`Upset`] is stored as the antichain of its minimal points, sorted
//! lexicographically. Supports are closed: every generator belongs to the
//! upset, so containment tests and shift thresholds are non-strict.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of `R^d` under the componentwise partial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Point { coords })
    }

    /// Point with integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Point::new(coords.iter().copied().map(Rational::from).collect())
    }

    /// The point `(v, ..., v)` of dimension `dim`.
    pub fn diagonal(dim: usize, v: &Rational) -> Result<Self> {
        Point::new(vec![v.clone(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `self <= other` in every coordinate. Dimensions must agree.
    pub fn le(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Point) -> Point {
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        }
    }

    /// Translation by `delta * (1, ..., 1)`.
    pub fn translate(&self, delta: &Rational) -> Point {
        Point {
            coords: self.coords.iter().map(|c| c + delta).collect(),
        }
    }

    /// Smallest `e` with `self <= other + e * (1, ..., 1)`, i.e. the largest
    /// coordinate of `self - other`.
    fn diagonal_gap(&self, other: &Point) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .max()
            .expect("points have dimension >= 1")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Minimal elements of `points`, sorted lexicographically.
///
/// A point can only be dominated by a point that precedes it
/// lexicographically, so one sorted sweep against the kept prefix suffices.
pub fn antichain_reduce(points: &[Point]) -> Result<Vec<Point>> {
    let first = points.first().ok_or(Error::EmptyGenerators)?;
    let dim = first.dim();
    for p in points {
        check_dim(dim, p.dim())?;
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Point> = Vec::with_capacity(sorted.len());
    for p in sorted {
        if !kept.iter().any(|q| q.le(&p)) {
            kept.push(p);
        }
    }
    Ok(kept)
}

/// A nonempty, finitely generated, closed upset of `R^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Upset {
    generators: Vec<Point>,
}

impl Upset {
    /// Upset generated by `points`; dominated points are dropped.
    pub fn new(points: &[Point]) -> Result<Self> {
        Ok(Upset {
            generators: antichain_reduce(points)?,
        })
    }

    /// Upset generated by integer points, e.g. `Upset::from_ints(&[&[0, 2], &[2, 0]])`.
    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| Point::from_ints(p))
            .collect::<Result<Vec<_>>>()?;
        Upset::new(&points)
    }

    /// The principal upset above `(v, ..., v)`.
    pub fn principal_diagonal(dim: usize, v: &Rational) -> Result<Self> {
        Upset::new(&[Point::diagonal(dim, v)?])
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    /// Minimal points in lexicographic order.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        check_dim(self.dim(), p.dim())?;
        Ok(self.generators.iter().any(|g| g.le(p)))
    }

    /// The `eps`-shift: the support moves by `-eps * (1, ..., 1)`.
    pub fn shift(&self, eps: &Rational) -> Upset {
        let delta = -eps;
        // a uniform translation preserves both the antichain and the order
        Upset {
            generators: self
                .generators
                .iter()
                .map(|g| g.translate(&delta))
                .collect(),
        }
    }

    /// Support containment `self ⊆ other`.
    pub fn is_subset(&self, other: &Upset) -> Result<bool> {
        check_dim(other.dim(), self.dim())?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.le(g))))
    }

    /// Exact threshold `inf { e : self ⊆ other.shift(e) }`; it is attained.
    pub fn min_shift(&self, other: &Upset) -> Result<Rational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .generators
            .iter()
            .map(|g| {
                other
                    .generators
                    .iter()
                    .map(|h| h.diagonal_gap(g))
                    .min()
                    .expect("upsets are nonempty")
            })
            .max()
            .expect("upsets are nonempty"))
    }

    /// Support intersection, generated by pairwise joins.
    pub fn intersect(&self, other: &Upset) -> Result<Upset> {
        check_dim(self.dim(), other.dim())?;
        let joins: Vec<Point> = self
            .generators
            .iter()
            .flat_map(|g| other.generators.iter().map(move |h| g.join(h)))
            .collect();
        Upset::new(&joins)
    }

    /// Intersection of a nonempty sequence, folded left to right with
    /// reduction after every step.
    pub fn intersect_all<'a, I>(upsets: I) -> Result<Upset>
    where
        I: IntoIterator<Item = &'a Upset>,
    {
        let mut iter = upsets.into_iter();
        let first = iter.next().ok_or(Error::EmptyGenerators)?.clone();
        iter.try_fold(first, |acc, u| acc.intersect(u))
    }

    /// Equality of supports.
    pub fn same_support(&self, other: &Upset) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self == other)
    }
}

impl fmt::Debug for Upset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ">")
    }
}
