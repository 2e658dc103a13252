//! Pattern graphs on vertex sets `{1, .., n}`, vertex orders, orientations,
//! and the trail-graph transform used to detect alternating closed trails.

pub mod pebble;
pub mod search;
pub mod union_find;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use pebble::laman_sparse;
pub use search::{search_trail_free_order, SearchOutcome};
pub use union_find::RollbackUnionFind;

/// Simple undirected graph on vertices `1..=n` whose edges index the observed
/// entries of a pattern. Edges are normalized to `(min, max)` and stored in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::EdgeOutOfRange(a, b, n));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbor lists indexed by vertex label; index 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n + 1];
        let mut components = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}

/// Total order on the vertices `1..=n`, stored as a position table:
/// `position(v)` is 1 for the earliest vertex and `n` for the latest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    positions: Vec<usize>,
}

impl VertexOrder {
    pub fn identity(n: usize) -> Self {
        Self {
            positions: (1..=n).collect(),
        }
    }

    /// Builds an order from the list of vertices earliest-first.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        let mut positions = vec![0usize; n];
        for (idx, &v) in seq.iter().enumerate() {
            if v < 1 || v > n || positions[v - 1] != 0 {
                return Err(Error::NotAPermutation(seq.to_vec(), n));
            }
            positions[v - 1] = idx + 1;
        }
        Ok(Self { positions })
    }

    /// Builds an order from a table mapping vertex `v` to `positions[v-1]`.
    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let n = positions.len();
        let mut seen = vec![false; n];
        for &p in &positions {
            if p < 1 || p > n || seen[p - 1] {
                return Err(Error::NotAPermutation(positions.clone(), n));
            }
            seen[p - 1] = true;
        }
        Ok(Self { positions })
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v - 1]
    }

    /// The vertices listed earliest-first.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0usize; self.positions.len()];
        for (v, &p) in self.positions.iter().enumerate() {
            seq[p - 1] = v + 1;
        }
        seq
    }
}

/// Directed graph produced by orienting a pattern graph along a vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs as `(tail, head)` pairs.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// Orients every edge from its earlier endpoint to its later endpoint, which
/// always yields an acyclic orientation.
pub fn orient(g: &PatternGraph, order: &VertexOrder) -> Result<OrientedGraph> {
    if order.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: order.n(),
        });
    }
    let arcs = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if order.position(a) < order.position(b) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    Ok(OrientedGraph { n: g.n(), arcs })
}

/// Bipartite auxiliary graph with an out-copy `u+` and an in-copy `v-` for
/// every vertex, and one undirected edge `{u+, v-}` per arc `u -> v`. A closed
/// alternating trail in the orientation is exactly a cycle here, so the
/// orientation is trail-free iff this graph is a forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TrailGraph {
    /// Edges as `(u, v)` pairs standing for `{u+, v-}`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = RollbackUnionFind::new(2 * self.n + 2);
        self.edges.iter().all(|&(u, v)| uf.union(2 * u, 2 * v + 1))
    }
}

pub fn trail_graph(d: &OrientedGraph) -> TrailGraph {
    TrailGraph {
        n: d.n,
        edges: d.arcs.clone(),
    }
}

/// Whether a multigraph given by an explicit edge list contains a cycle
/// (parallel edges and loops both count).
pub fn has_closed_trail(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut uf = RollbackUnionFind::new(n + 1);
    edges.iter().any(|&(a, b)| !uf.union(a, b))
}

pub fn has_alternating_closed_trail(d: &OrientedGraph) -> bool {
    !trail_graph(d).is_forest()
}

/// Complete graph pattern on `n` vertices.
pub fn complete_pattern(n: usize) -> PatternGraph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    PatternGraph::new(n, edges).expect("complete graph edges are valid")
}

/// K_{3,3} with parts {1,2,3} and {4,5,6}.
pub fn k33_pattern() -> PatternGraph {
    let mut edges = Vec::new();
    for i in 1..=3 {
        for j in 4..=6 {
            edges.push((i, j));
        }
    }
    PatternGraph::new(6, edges).expect("K_{3,3} edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_graph_normalizes_and_validates() {
        let g = PatternGraph::new(4, vec![(3, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);
        assert!(matches!(
            PatternGraph::new(3, vec![(1, 1)]),
            Err(Error::LoopEdge(1))
        ));
        assert!(matches!(
            PatternGraph::new(3, vec![(1, 4)]),
            Err(Error::EdgeOutOfRange(1, 4, 3))
        ));
        assert!(matches!(
            PatternGraph::new(3, vec![(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        ));
    }

    #[test]
    fn components_cover_isolated_vertices() {
        let g = PatternGraph::new(5, vec![(1, 2), (4, 5)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![1, 2], vec![3], vec![4, 5]]
        );
    }

    #[test]
    fn vertex_order_round_trips() {
        let order = VertexOrder::from_sequence(&[2, 3, 1]).unwrap();
        assert_eq!(order.position(2), 1);
        assert_eq!(order.position(3), 2);
        assert_eq!(order.position(1), 3);
        assert_eq!(order.sequence(), vec![2, 3, 1]);
        let same = VertexOrder::from_positions(vec![3, 1, 2]).unwrap();
        assert_eq!(order, same);
        assert!(VertexOrder::from_sequence(&[1, 1, 3]).is_err());
        assert!(VertexOrder::from_positions(vec![0, 1, 2]).is_err());
    }

    #[test]
    fn orient_respects_positions() {
        let g = PatternGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let order = VertexOrder::from_sequence(&[3, 1, 2]).unwrap();
        let d = orient(&g, &order).unwrap();
        assert_eq!(d.arcs(), &[(1, 2), (3, 1), (3, 2)]);
        let bad = VertexOrder::identity(4);
        assert!(orient(&g, &bad).is_err());
    }

    #[test]
    fn triangle_under_identity_has_no_alternating_trail() {
        let g = complete_pattern(3);
        let d = orient(&g, &VertexOrder::identity(3)).unwrap();
        assert!(!has_alternating_closed_trail(&d));
    }

    #[test]
    fn four_cycle_alternating_trail_depends_on_order() {
        let g = PatternGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        // 1 and 3 first: both remaining vertices receive two in-arcs, and the
        // four arcs alternate around the cycle.
        let bad = VertexOrder::from_sequence(&[1, 3, 2, 4]).unwrap();
        let d = orient(&g, &bad).unwrap();
        assert!(has_alternating_closed_trail(&d));
        let good = VertexOrder::identity(4);
        let d = orient(&g, &good).unwrap();
        assert!(!has_alternating_closed_trail(&d));
    }

    #[test]
    fn trail_graph_mirrors_arcs() {
        let g = PatternGraph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let d = orient(&g, &VertexOrder::identity(3)).unwrap();
        let t = trail_graph(&d);
        assert_eq!(t.edges(), &[(1, 2), (2, 3)]);
        assert!(t.is_forest());
    }

    #[test]
    fn closed_trail_detection_counts_parallel_edges() {
        assert!(!has_closed_trail(3, &[(1, 2), (2, 3)]));
        assert!(has_closed_trail(3, &[(1, 2), (1, 2)]));
        assert!(has_closed_trail(3, &[(1, 2), (2, 3), (1, 3)]));
        assert!(has_closed_trail(1, &[(1, 1)]));
    }
}
