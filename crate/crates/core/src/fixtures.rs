//! Named example modules.

use crate::module::Module;
use crate::rational::Rational;
use crate::upset::Upset;

/// The pair showing that `d_B <= (2r - 1) d_P` is tight.
///
/// `M_i` is the principal upset above `2 i alpha (1, ..., 1)` for
/// `i = 1..=r`, and every `N_i` is the principal upset above
/// `(2r + 1) alpha (1, ..., 1)`. For `alpha > 0` the pruning distance is
/// `alpha` while the bottleneck and interleaving distances are
/// `(2r - 1) alpha`.
pub fn tight_pair(r: usize, dim: usize, alpha: &Rational) -> (Module, Module) {
    let corner = |k: usize| {
        let v = Rational::from(k as i64) * alpha;
        Upset::principal_diagonal(dim, &v).expect("dim >= 1")
    };
    let m = (1..=r).map(|i| corner(2 * i)).collect();
    let n = (1..=r).map(|_| corner(2 * r + 1)).collect();
    (
        Module::new(dim, m).expect("dim >= 1"),
        Module::new(dim, n).expect("dim >= 1"),
    )
}
