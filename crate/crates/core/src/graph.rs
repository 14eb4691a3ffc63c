//! Small dense digraphs: reachability and hop distances.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Directed graph on vertices `0..n` stored as a boolean adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    adj: Vec<Vec<bool>>,
}

impl Digraph {
    /// Graph without edges.
    pub fn empty(n: usize) -> Self {
        Digraph {
            adj: vec![vec![false; n]; n],
        }
    }

    /// Panics if `adj` is not square.
    pub fn from_adjacency(adj: Vec<Vec<bool>>) -> Self {
        let n = adj.len();
        assert!(
            adj.iter().all(|row| row.len() == n),
            "adjacency must be square"
        );
        Digraph { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.adj[from][to]
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        self.adj[from][to] = true;
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.adj
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(w, _)| w)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                len: self.len(),
            })
        }
    }

    /// Fewest edges from any vertex of `sources` to each vertex, `None` when
    /// unreachable. Sources are at distance 0.
    pub fn hops_from(&self, sources: &[usize]) -> Result<Vec<Option<usize>>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            self.check_vertex(s)?;
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices are labelled");
            for w in self.successors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Reflexive reachability sets by one breadth-first search per vertex.
    /// Each set is sorted.
    pub fn reach_sets(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|v| {
                self.hops_from(&[v])
                    .expect("vertex in range")
                    .iter()
                    .enumerate()
                    .filter_map(|(w, d)| d.map(|_| w))
                    .collect()
            })
            .collect()
    }

    /// Reflexive-transitive closure by Warshall's algorithm.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut reach = self.adj.clone();
        for (v, row) in reach.iter_mut().enumerate() {
            row[v] = true;
        }
        for k in 0..n {
            let through = reach[k].clone();
            for row in reach.iter_mut() {
                if row[k] {
                    for (cell, &via) in row.iter_mut().zip(&through) {
                        if via {
                            *cell = true;
                        }
                    }
                }
            }
        }
        reach
    }
}

/// `max_{b in B} min_{a in A} l(a, b)` where `l` counts edges; `None` when
/// some vertex of `B` is unreachable from `A`.
pub fn graph_distance(graph: &Digraph, from: &[usize], to: &[usize]) -> Result<Option<usize>> {
    if from.is_empty() {
        return Err(Error::EmptySeedSet);
    }
    let hops = graph.hops_from(from)?;
    let mut worst = 0;
    for &b in to {
        graph.check_vertex(b)?;
        match hops[b] {
            Some(d) => worst = worst.max(d),
            None => return Ok(None),
        }
    }
    Ok(Some(worst))
}

/// Vertices reachable from some vertex of `from`, sorted.
pub fn reachable_from(graph: &Digraph, from: &[usize]) -> Result<Vec<usize>> {
    Ok(graph
        .hops_from(from)?
        .iter()
        .enumerate()
        .filter_map(|(v, d)| d.map(|_| v))
        .collect())
}
