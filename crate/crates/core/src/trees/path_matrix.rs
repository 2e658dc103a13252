//! 0/1 incidence matrix between tree edges and leaf-pair paths.

use num_traits::One;

use super::XTree;
use crate::linalg::{Rational, RationalMatrix};

/// All pairs `(i, j)` with `1 <= i < j <= n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Index of `(i, j)` in `all_pairs(n)`; requires `i < j <= n`.
pub fn pair_position(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

/// Rows follow the tree's edge order, columns the lexicographic pair order.
/// Entry (e, p) is 1 exactly when edge e lies on the path between the leaves
/// of pair p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMatrix {
    n_leaves: usize,
    pairs: Vec<(usize, usize)>,
    edges: Vec<(usize, usize)>,
    bits: Vec<u8>,
}

impl PathMatrix {
    pub fn rows(&self) -> usize {
        self.edges.len()
    }

    pub fn cols(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.bits[row * self.pairs.len() + col]
    }

    pub fn as_rational_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zero(self.rows(), self.cols());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if self.entry(r, c) == 1 {
                    *m.at_mut(r, c) = Rational::one();
                }
            }
        }
        m
    }

    /// Rows of the submatrix keeping only the given columns.
    pub fn submatrix_rows_i64(&self, cols: &[usize]) -> Vec<Vec<i64>> {
        (0..self.rows())
            .map(|r| cols.iter().map(|&c| i64::from(self.entry(r, c))).collect())
            .collect()
    }

    /// The full matrix as integer rows.
    pub fn rows_i64(&self) -> Vec<Vec<i64>> {
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.submatrix_rows_i64(&cols)
    }
}

pub fn path_matrix(t: &XTree) -> PathMatrix {
    assert!(t.edge_count() <= 128, "path masks use u128");
    let adj = t.adjacency();
    // Walk the tree from leaf 1 recording, per vertex, the set of edges back
    // to the root. The path between leaves i and j is the symmetric
    // difference of their root paths.
    let mut up = vec![0u128; t.max_vertex() + 1];
    let mut seen = vec![false; t.max_vertex() + 1];
    let mut stack = vec![1usize];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(u, idx) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                up[u] = up[v] | (1u128 << idx);
                stack.push(u);
            }
        }
    }

    let n = t.n_leaves();
    let pairs = all_pairs(n);
    let mut bits = vec![0u8; t.edge_count() * pairs.len()];
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let mask = up[i] ^ up[j];
        for r in 0..t.edge_count() {
            if mask >> r & 1 == 1 {
                bits[r * pairs.len() + c] = 1;
            }
        }
    }
    PathMatrix {
        n_leaves: n,
        pairs,
        edges: t.edges().to_vec(),
        bits,
    }
}
