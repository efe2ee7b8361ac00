//! Simple undirected graphs: construction, Laplacian assembly, metric
//! structure (distance, neighbourhoods) and the named generators used by the
//! examples and tests.
//!
//! Vertices are labeled `1..=n` on every public interface. The graph itself
//! is the sparse form of the combinatorial Laplacian `L = D - A`: the edge
//! list plus the degree vector. [`Graph::laplacian`] materializes the dense
//! matrix for moderate sizes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Vertex = usize;

/// Dense Laplacians are materialized only up to this vertex count.
pub const MAX_DENSE_VERTICES: usize = 2000;

const ER_MAX_ATTEMPTS: usize = 1000;

/// Shortest-path distance between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(usize),
    /// The vertices lie in different connected components.
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from a vertex count and an edge list.
    ///
    /// Edges are deduplicated; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(Vertex, Vertex)> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u - 1].push(v - 1);
            adjacency[v - 1].push(u - 1);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { n, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.adjacency[self.id(v)?].len())
    }

    /// Neighbours of `v` as 1-based labels, ascending.
    pub fn neighbours(&self, v: Vertex) -> Result<Vec<Vertex>> {
        Ok(self.adjacency[self.id(v)?].iter().map(|&i| i + 1).collect())
    }

    pub(crate) fn id(&self, v: Vertex) -> Result<usize> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(v - 1)
    }

    pub(crate) fn adjacency_ids(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Dense combinatorial Laplacian `L = D - A`.
    ///
    /// Symmetric, positive semidefinite, zero row sums.
    pub fn laplacian(&self) -> Result<DMatrix<f64>> {
        if self.n > MAX_DENSE_VERTICES {
            return Err(Error::TooLargeForDense {
                n: self.n,
                limit: MAX_DENSE_VERTICES,
            });
        }
        let mut l = DMatrix::<f64>::zeros(self.n, self.n);
        for i in 0..self.n {
            l[(i, i)] = self.adjacency[i].len() as f64;
        }
        for &(u, v) in &self.edges {
            l[(u - 1, v - 1)] = -1.0;
            l[(v - 1, u - 1)] = -1.0;
        }
        Ok(l)
    }

    fn bfs(&self, start: usize, max_depth: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let d = dist[i].unwrap();
            if let Some(limit) = max_depth {
                if d == limit {
                    continue;
                }
            }
            for &j in &self.adjacency[i] {
                if dist[j].is_none() {
                    dist[j] = Some(d + 1);
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// Shortest-path distance; `Distance::Infinite` when disconnected.
    pub fn distance(&self, v: Vertex, w: Vertex) -> Result<Distance> {
        let a = self.id(v)?;
        let b = self.id(w)?;
        Ok(match self.bfs(a, None)[b] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        })
    }

    /// The k-neighbourhood `N(v, k) = {w : d(w, v) <= k}`, ascending labels.
    pub fn neighbourhood(&self, v: Vertex, k: usize) -> Result<Vec<Vertex>> {
        let start = self.id(v)?;
        let dist = self.bfs(start, Some(k));
        Ok((0..self.n)
            .filter(|&i| matches!(dist[i], Some(d) if d <= k))
            .map(|i| i + 1)
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0, None).iter().all(|d| d.is_some())
    }
}

/// Path graph: edges `{v, v+1}` for `v = 1..n-1`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    Graph::new(n, &edges)
}

/// Circle graph: the path closed by the edge `{n, 1}`.
pub fn circle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::GraphTooSmall { kind: "circle", min: 3, n });
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    edges.push((n, 1));
    Graph::new(n, &edges)
}

/// Umbrella graph: rim vertices `1..=n-2` joined in a path and all adjacent
/// to the hub `n-1`, with the pendant vertex `n` hanging off the hub.
pub fn umbrella(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::GraphTooSmall { kind: "umbrella", min: 3, n });
    }
    let hub = n - 1;
    let mut edges: Vec<_> = (1..n - 2).map(|v| (v, v + 1)).collect();
    edges.extend((1..=n - 2).map(|v| (v, hub)));
    edges.push((hub, n));
    Graph::new(n, &edges)
}

/// Connected Erdős–Rényi graph: every pair drawn independently with
/// probability `p`, resampled (up to a fixed retry budget) until connected.
/// Deterministic for a fixed seed.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ER_MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::ConnectivityRetries(ER_MAX_ATTEMPTS))
}

/// A real-valued signal on the vertices of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSignal {
    values: Vec<f64>,
}

impl GraphSignal {
    pub fn new(graph: &Graph, values: Vec<f64>) -> Result<Self> {
        if values.len() != graph.vertex_count() {
            return Err(Error::SignalLength {
                got: values.len(),
                expected: graph.vertex_count(),
            });
        }
        Ok(Self { values })
    }

    pub(crate) fn from_values(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at a 1-based vertex label. Panics when out of range.
    pub fn value(&self, v: Vertex) -> f64 {
        self.values[v - 1]
    }

    /// The restriction `f_W` as a map from 1-based labels to values.
    pub fn samples_on(&self, vertices: &[Vertex]) -> BTreeMap<Vertex, f64> {
        vertices.iter().map(|&v| (v, self.value(v))).collect()
    }

    /// All samples as a map (full observation).
    pub fn sample_map(&self) -> BTreeMap<Vertex, f64> {
        (1..=self.values.len()).map(|v| (v, self.value(v))).collect()
    }
}
