//! `Par(a×b)` as a graph: the Hasse diagram of inclusion, where neighbours
//! differ by a single box, and its Wiener index.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::arith::{binomial, exact_quotient};
use crate::partitions::{enumerate_partitions, Partition, RectBound};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct HasseGraph {
    bound: RectBound,
    vertices: Vec<Partition>,
    adjacency: Vec<Vec<usize>>,
}

impl HasseGraph {
    pub fn bound(&self) -> RectBound {
        self.bound
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Undirected edge count.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Shortest-path lengths from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Builds the Hasse diagram of `Par(a×b)` by adding and removing single boxes
/// within the bound. Refuses more than `max_vertices` vertices.
pub fn build_hasse(bound: RectBound, max_vertices: u64) -> Result<HasseGraph> {
    let count = bound.count();
    if count > BigUint::from(max_vertices) {
        return Err(Error::cap("Hasse diagram vertices", count, max_vertices));
    }
    let vertices = enumerate_partitions(bound);
    let index: HashMap<Vec<usize>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.padded(bound.rows), i))
        .collect();

    let adjacency = vertices
        .iter()
        .map(|lambda| {
            let rows = lambda.padded(bound.rows);
            let mut out = Vec::new();
            for i in 0..bound.rows {
                let can_add = rows[i] < bound.cols && (i == 0 || rows[i - 1] > rows[i]);
                if can_add {
                    let mut next = rows.clone();
                    next[i] += 1;
                    out.push(index[&next]);
                }
                let can_remove = rows[i] > 0 && (i + 1 == bound.rows || rows[i + 1] < rows[i]);
                if can_remove {
                    let mut next = rows.clone();
                    next[i] -= 1;
                    out.push(index[&next]);
                }
            }
            out.sort_unstable();
            out
        })
        .collect();

    Ok(HasseGraph {
        bound,
        vertices,
        adjacency,
    })
}

/// Sum of shortest-path distances over all ordered vertex pairs, one BFS per
/// source.
pub fn wiener_bfs(graph: &HasseGraph) -> Result<BigUint> {
    let total = (0..graph.vertex_count())
        .into_par_iter()
        .map(|s| {
            graph
                .bfs(s)
                .into_iter()
                .try_fold(0u128, |acc, d| d.map(|d| acc + d as u128))
                .ok_or(Error::Disconnected)
        })
        .try_reduce(|| 0u128, |a, b| Ok(a + b))?;
    Ok(BigUint::from(total))
}

/// `ab/(4a+4b+2) · C(2a+2b+2, 2a+1)`, the Wiener index of `Par(a×b)`.
///
/// Also valid when `a` or `b` is zero (a single vertex, index 0).
pub fn wiener_formula(a: u64, b: u64) -> Result<BigUint> {
    let numer = BigUint::from(a) * BigUint::from(b) * binomial(2 * a + 2 * b + 2, (2 * a + 1) as i64);
    let denom = BigUint::from(4 * a + 4 * b + 2);
    exact_quotient(&numer, &denom, || format!("Wiener index of Par({a}×{b})"))
}
