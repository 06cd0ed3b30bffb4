//! Wheel and helm graph construction plus the breadth-first-search distance
//! oracle.
//!
//! Vertices are 0-based internally; vertex `i` corresponds to label `i + 1`
//! in error messages and reports. The fixed label order is: hub first, then
//! the rim cycle, then the pendant attached to each rim vertex in the same
//! order. Every block identity downstream depends on this exact order.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Wheel and helm constructions need at least four wheel vertices.
    OrderTooSmall { n: u32 },
    /// No path between the two vertices (1-based labels).
    Disconnected { from: usize, to: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderTooSmall { n } => {
                write!(f, "graph order n = {} is below the minimum of 4", n)
            }
            GraphError::Disconnected { from, to } => {
                write!(f, "graph is disconnected: no path from vertex {} to vertex {}", from, to)
            }
        }
    }
}

/// Simple undirected graph as symmetric neighbor sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count >= 1, "graph must have at least one vertex");
        Graph {
            adj: vec![BTreeSet::new(); vertex_count],
        }
    }

    /// Insert the undirected edge {a, b}. Self-loops are rejected.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loops are not allowed");
        assert!(a < self.vertex_count() && b < self.vertex_count(), "vertex out of range");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }
}

/// Wheel graph on `n` vertices: hub (label 1) joined to every vertex of the
/// rim cycle (labels 2..n in cycle order).
pub fn build_wheel(n: u32) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::OrderTooSmall { n });
    }
    let n = n as usize;
    let mut g = Graph::new(n);
    for rim in 1..n {
        g.add_edge(0, rim);
    }
    for rim in 1..n {
        let next = if rim + 1 < n { rim + 1 } else { 1 };
        g.add_edge(rim, next);
    }
    Ok(g)
}

/// Helm graph on `2n - 1` vertices: the wheel on `n` vertices with a pendant
/// vertex attached to each rim vertex. Rim label `j` gets pendant label
/// `n + j - 1`, so pendants occupy labels `n+1 ..= 2n-1` in rim order.
pub fn build_helm(n: u32) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::OrderTooSmall { n });
    }
    let wheel = build_wheel(n)?;
    let n = n as usize;
    let m = 2 * n - 1;
    let mut g = Graph::new(m);
    for v in 0..n {
        for w in wheel.neighbors(v) {
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    for rim in 1..n {
        g.add_edge(rim, n + rim - 1);
    }
    Ok(g)
}

/// All-pairs shortest-path matrix by one BFS per source. This is the
/// distance oracle: it never consults a closed form.
pub fn bfs_distance_matrix(g: &Graph) -> Result<IntMatrix, GraphError> {
    let m = g.vertex_count();
    let mut dist = vec![vec![0u32; m]; m];
    for source in 0..m {
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        seen[source] = true;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    dist[source][w] = dist[source][v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(unreached) = seen.iter().position(|&s| !s) {
            return Err(GraphError::Disconnected {
                from: source + 1,
                to: unreached + 1,
            });
        }
    }
    Ok(IntMatrix::from_fn(m, m, |r, c| BigInt::from(dist[r][c])))
}
