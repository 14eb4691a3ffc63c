//! Brute-force interleaving distance through constrained invertibility.
//!
//! A morphism `M -> N(eps)` between upset-decomposable modules is an `r x r`
//! matrix of scalars whose `(l, s)` entry may be nonzero only when
//! `M_l ⊆ N_s(eps)`. Shift maps act as identity matrices, so an
//! `eps`-interleaving is a matrix `Z` supported on the forward pattern whose
//! inverse is supported on the backward pattern. For square matrices over a
//! field a one-sided inverse is two-sided, so only `Z` is enumerated.

use crate::distances::{Distance, DistanceResult};
use crate::error::{Error, Result};
use crate::module::Module;
use crate::rational::Rational;

/// A small prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    F2,
    F3,
}

impl Field {
    pub fn order(self) -> u8 {
        match self {
            Field::F2 => 2,
            Field::F3 => 3,
        }
    }

    fn inv(self, x: u8) -> u8 {
        // in F2 and F3 every nonzero element is its own inverse
        debug_assert!(x != 0 && x < self.order());
        x
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" => Ok(Field::F2),
            "f3" => Ok(Field::F3),
            _ => Err(Error::Parse(format!(
                "unknown field {s:?}, expected f2 or f3"
            ))),
        }
    }
}

/// Support mask for a morphism matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub rows: usize,
    pub cols: usize,
    pub allowed: Vec<Vec<bool>>,
    pub eps: Rational,
}

impl Pattern {
    pub fn new(allowed: Vec<Vec<bool>>, eps: Rational) -> Self {
        let rows = allowed.len();
        let cols = allowed.first().map_or(0, Vec::len);
        assert!(
            allowed.iter().all(|r| r.len() == cols),
            "pattern must be rectangular"
        );
        Pattern {
            rows,
            cols,
            allowed,
            eps,
        }
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| self.allowed[i][j])
            .collect()
    }
}

/// Forward and backward patterns at `eps`: `A[l][s] = M_l ⊆ N_s(eps)` and
/// `B[s][l] = N_s ⊆ M_l(eps)`.
pub fn patterns(m: &Module, n: &Module, eps: &Rational) -> Result<(Pattern, Pattern)> {
    if eps.is_negative() {
        return Err(Error::NegativeParameter(eps.clone()));
    }
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Err(Error::CountMismatch(m.supdim(), n.supdim()));
    }
    let contained = |a: &Module, b: &Module| -> Result<Vec<Vec<bool>>> {
        a.summands()
            .iter()
            .map(|x| {
                b.summands()
                    .iter()
                    .map(|y| x.is_subset(&y.shift(eps)))
                    .collect()
            })
            .collect()
    };
    Ok((
        Pattern::new(contained(m, n)?, eps.clone()),
        Pattern::new(contained(n, m)?, eps.clone()),
    ))
}

/// Default cap on the matrix size for [`ci_solvable`].
pub const DEFAULT_MAX_R: usize = 4;

/// Inverse of `z` over the field, by Gauss-Jordan elimination.
fn invert(z: &[Vec<u8>], field: Field) -> Option<Vec<Vec<u8>>> {
    let n = z.len();
    let p = field.order();
    let mut a: Vec<Vec<u8>> = z.to_vec();
    let mut inv: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = field.inv(a[col][col]);
        for j in 0..n {
            a[col][j] = a[col][j] * scale % p;
            inv[col][j] = inv[col][j] * scale % p;
        }
        for r in 0..n {
            let f = a[r][col];
            if r == col || f == 0 {
                continue;
            }
            for j in 0..n {
                a[r][j] = (a[r][j] + (p - f) * a[col][j]) % p;
                inv[r][j] = (inv[r][j] + (p - f) * inv[col][j]) % p;
            }
        }
    }
    Some(inv)
}

/// Whether some matrix supported on `a` is invertible over `field` with its
/// inverse supported on `b`. Exhaustive over all `|field|^(#cells)` fillings.
pub fn ci_solvable(a: &Pattern, b: &Pattern, field: Field, max_r: usize) -> Result<bool> {
    let r = a.rows;
    if a.cols != r || b.rows != r || b.cols != r {
        return Err(Error::CountMismatch(a.rows, b.rows));
    }
    if r > max_r {
        return Err(Error::SizeCap {
            size: r,
            cap: max_r,
        });
    }
    if r == 0 {
        return Ok(true);
    }
    let cells = a.cells();
    let p = field.order();
    let mut digits = vec![0u8; cells.len()];
    let mut z = vec![vec![0u8; r]; r];
    loop {
        for (&(i, j), &v) in cells.iter().zip(&digits) {
            z[i][j] = v;
        }
        if let Some(inv) = invert(&z, field) {
            let fits = (0..r).all(|i| (0..r).all(|j| inv[i][j] == 0 || b.allowed[i][j]));
            if fits {
                return Ok(true);
            }
        }
        // next filling in base p
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(false);
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// Interleaving distance of two upset-decomposable modules by scanning the
/// shift values at which the patterns change.
pub fn interleaving_distance_bruteforce(
    m: &Module,
    n: &Module,
    field: Field,
    max_r: usize,
) -> Result<DistanceResult> {
    m.check_same_dim(n)?;
    if m.supdim() != n.supdim() {
        return Ok(DistanceResult::infinite());
    }
    let r = m.supdim();
    if r > max_r {
        return Err(Error::SizeCap {
            size: r,
            cap: max_r,
        });
    }
    if r == 0 {
        return Ok(DistanceResult::exact_value(Rational::zero()));
    }
    let mut candidates = vec![Rational::zero()];
    for a in m.summands() {
        for b in n.summands() {
            candidates.push(Rational::zero().max(a.min_shift(b)?));
            candidates.push(Rational::zero().max(b.min_shift(a)?));
        }
    }
    candidates.sort();
    candidates.dedup();
    for eps in candidates {
        let (fwd, bwd) = patterns(m, n, &eps)?;
        if ci_solvable(&fwd, &bwd, field, max_r)? {
            return Ok(DistanceResult::exact_value(eps));
        }
    }
    Ok(DistanceResult::exact(Distance::Infinite))
}
