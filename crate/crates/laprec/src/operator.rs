//! Ring-local application of sparse symmetric operators.
//!
//! Both the graph Laplacian and the Hodge operators touch, in any row, only
//! nodes at distance one in the relevant metric (vertex adjacency for graphs,
//! shared-subface adjacency for k-faces). Every recovery routine exploits
//! this: one operator application shrinks the domain of valid values by one
//! ring, so powers and shifted products evaluated at the center never need
//! samples outside the stated neighbourhood.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::graph::Graph;

/// A symmetric operator whose rows only couple metric-adjacent nodes.
pub(crate) trait LocalOperator {
    fn len(&self) -> usize;
    /// Metric-adjacent node ids, excluding `i` itself.
    fn neighbours(&self, i: usize) -> Vec<usize>;
    /// One row application `(T h)(i)`; `h` must be defined on `i` and all of
    /// its metric neighbours.
    fn apply_row(&self, i: usize, h: &dyn Fn(usize) -> f64) -> f64;
}

/// The graph Laplacian applied without materializing the matrix:
/// `(L h)(v) = sum_{w ~ v} (h(v) - h(w))`.
pub(crate) struct GraphOp<'a> {
    graph: &'a Graph,
}

impl<'a> GraphOp<'a> {
    pub(crate) fn new(graph: &'a Graph) -> Self {
        Self { graph }
    }
}

impl LocalOperator for GraphOp<'_> {
    fn len(&self) -> usize {
        self.graph.vertex_count()
    }

    fn neighbours(&self, i: usize) -> Vec<usize> {
        self.graph.adjacency_ids()[i].clone()
    }

    fn apply_row(&self, i: usize, h: &dyn Fn(usize) -> f64) -> f64 {
        let adj = &self.graph.adjacency_ids()[i];
        adj.len() as f64 * h(i) - adj.iter().map(|&j| h(j)).sum::<f64>()
    }
}

/// A materialized operator together with the metric adjacency of its node
/// set. The row sparsity pattern must be contained in the adjacency; the
/// Hodge module verifies this before constructing one.
pub(crate) struct MatrixOp {
    pub(crate) matrix: DMatrix<f64>,
    pub(crate) adjacency: Vec<Vec<usize>>,
}

impl LocalOperator for MatrixOp {
    fn len(&self) -> usize {
        self.matrix.nrows()
    }

    fn neighbours(&self, i: usize) -> Vec<usize> {
        self.adjacency[i].clone()
    }

    fn apply_row(&self, i: usize, h: &dyn Fn(usize) -> f64) -> f64 {
        let mut acc = self.matrix[(i, i)] * h(i);
        for &j in &self.adjacency[i] {
            let c = self.matrix[(i, j)];
            if c != 0.0 {
                acc += c * h(j);
            }
        }
        acc
    }
}

/// Breadth-first distances from `center`, cut off at `max_d`.
/// Entry `i` is `Some(d)` when `d(i, center) = d <= max_d`.
pub(crate) fn bfs_distances(
    op: &dyn LocalOperator,
    center: usize,
    max_d: usize,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; op.len()];
    dist[center] = Some(0);
    let mut frontier = vec![center];
    for d in 1..=max_d {
        let mut next = Vec::new();
        for &i in &frontier {
            for j in op.neighbours(i) {
                if dist[j].is_none() {
                    dist[j] = Some(d);
                    next.push(j);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    dist
}

/// Node ids within distance `d` of `center`, ascending.
pub(crate) fn ball(op: &dyn LocalOperator, center: usize, d: usize) -> Vec<usize> {
    bfs_distances(op, center, d)
        .iter()
        .enumerate()
        .filter_map(|(i, dd)| dd.map(|_| i))
        .collect()
}

/// Moments `g(k) = (T^k f)(center)` for `k = 0..=kmax`.
///
/// `samples` must cover the ball of radius `kmax`; surplus entries are
/// ignored. On failure returns the sorted ids of the missing nodes.
pub(crate) fn local_moments_op(
    op: &dyn LocalOperator,
    samples: &BTreeMap<usize, f64>,
    center: usize,
    kmax: usize,
) -> Result<Vec<f64>, Vec<usize>> {
    let dist = bfs_distances(op, center, kmax);
    let covered: Vec<usize> = dist
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|_| i))
        .collect();
    let missing: Vec<usize> = covered
        .iter()
        .copied()
        .filter(|i| !samples.contains_key(i))
        .collect();
    if !missing.is_empty() {
        return Err(missing);
    }

    let mut current: BTreeMap<usize, f64> =
        covered.iter().map(|&i| (i, samples[&i])).collect();
    let mut g = vec![current[&center]];
    for k in 1..=kmax {
        let radius = kmax - k;
        let mut next = BTreeMap::new();
        for &i in current.keys() {
            if dist[i].unwrap() <= radius {
                let value = op.apply_row(i, &|j| current[&j]);
                next.insert(i, value);
            }
        }
        g.push(next[&center]);
        current = next;
    }
    Ok(g)
}

/// Values of `(prod_k (T - shifts[k] I) f) / denominator` on the ball of
/// radius `out_radius` around `center`.
///
/// Requires samples of `f` on the ball of radius
/// `out_radius + shifts.len()`; each factor application consumes one ring.
pub(crate) fn shifted_product_op(
    op: &dyn LocalOperator,
    samples: &BTreeMap<usize, f64>,
    center: usize,
    shifts: &[f64],
    denominator: f64,
    out_radius: usize,
) -> Result<BTreeMap<usize, f64>, Vec<usize>> {
    let in_radius = out_radius + shifts.len();
    let dist = bfs_distances(op, center, in_radius);
    let covered: Vec<usize> = dist
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|_| i))
        .collect();
    let missing: Vec<usize> = covered
        .iter()
        .copied()
        .filter(|i| !samples.contains_key(i))
        .collect();
    if !missing.is_empty() {
        return Err(missing);
    }

    let mut current: BTreeMap<usize, f64> =
        covered.iter().map(|&i| (i, samples[&i])).collect();
    for (step, &shift) in shifts.iter().enumerate() {
        let radius = in_radius - step - 1;
        let mut next = BTreeMap::new();
        for (&i, &value) in current.iter() {
            if dist[i].unwrap() <= radius {
                let applied = op.apply_row(i, &|j| current[&j]) - shift * value;
                next.insert(i, applied);
            }
        }
        current = next;
    }
    Ok(current
        .into_iter()
        .filter(|&(i, _)| dist[i].unwrap() <= out_radius)
        .map(|(i, v)| (i, v / denominator))
        .collect())
}
