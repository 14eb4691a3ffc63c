//! Bipartite matching by augmenting paths.

/// Maximum matching in the bipartite graph with `left` vertices on one side
/// and `right` on the other, where `edge(i, j)` tells whether left vertex `i`
/// may be matched to right vertex `j`. Returns `mate[i] = Some(j)`.
pub fn maximum_matching<F>(left: usize, right: usize, edge: F) -> Vec<Option<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let adj: Vec<Vec<usize>> = (0..left)
        .map(|i| (0..right).filter(|&j| edge(i, j)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for i in 0..left {
        let mut seen = vec![false; right];
        augment(i, &adj, &mut owner, &mut seen);
    }
    let mut mate = vec![None; left];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            mate[*i] = Some(j);
        }
    }
    mate
}

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        let free = match owner[j] {
            None => true,
            Some(k) => augment(k, adj, owner, seen),
        };
        if free {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// A perfect matching of an `n x n` bipartite graph, if one exists.
pub fn perfect_matching<F>(n: usize, edge: F) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    maximum_matching(n, n, edge).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    #[test]
    fn identity_and_empty() {
        assert_eq!(perfect_matching(3, |i, j| i == j), Some(vec![0, 1, 2]));
        assert_eq!(perfect_matching(0, |_, _| false), Some(vec![]));
        assert_eq!(perfect_matching(2, |_, j| j == 0), None);
    }

    #[test]
    fn needs_augmentation() {
        // greedy would match 0 -> 0 and strand 1
        let edges = [[true, true], [true, false]];
        let m = perfect_matching(2, |i, j| edges[i][j]).unwrap();
        assert_eq!(m, vec![1, 0]);
    }

    proptest! {
        #[test]
        fn agrees_with_permutation_search(bits in proptest::collection::vec(any::<bool>(), 25), n in 1usize..=5) {
            let edge = |i: usize, j: usize| bits[i * 5 + j];
            let brute = (0..n).permutations(n).any(|p| (0..n).all(|i| edge(i, p[i])));
            let found = perfect_matching(n, edge);
            prop_assert_eq!(found.is_some(), brute);
            if let Some(m) = found {
                prop_assert!((0..n).all(|i| edge(i, m[i])));
                prop_assert_eq!(m.iter().copied().sorted().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
            }
        }
    }
}
