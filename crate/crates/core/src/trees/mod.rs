//! X-trees, weighted trees, dissimilarity maps, and the linear matroids they
//! induce on the set of leaf pairs.

pub mod enumerate;
pub mod newick;
pub mod path_matrix;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{rank_int_rows, Rational};

pub use enumerate::{double_factorial, enumerate_binary_trees, BinaryTrees};
pub use newick::{to_newick, to_newick_topology};
pub use path_matrix::{all_pairs, pair_position, path_matrix, PathMatrix};

/// Tree whose leaves are bijectively labeled `1..=n` and whose internal
/// vertices, labeled `n+1..`, all have degree at least three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XTree {
    n_leaves: usize,
    max_vertex: usize,
    edges: Vec<(usize, usize)>,
}

impl XTree {
    pub fn new(n_leaves: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n_leaves < 2 {
            return Err(Error::TooFewLeaves(n_leaves, 2));
        }
        // A tree on k vertices has k - 1 edges, so the vertex ids must be
        // exactly 1..=edges.len()+1.
        let vertex_count = edges.len() + 1;
        if vertex_count < n_leaves {
            return Err(Error::Internal(format!(
                "tree on {n_leaves} leaves needs at least {} edges",
                n_leaves - 1
            )));
        }
        let mut degree = vec![0usize; vertex_count + 1];
        let mut uf = crate::graph::RollbackUnionFind::new(vertex_count + 1);
        for &(a, b) in &edges {
            if a < 1 || a > vertex_count || b < 1 || b > vertex_count || a == b {
                return Err(Error::Internal(format!(
                    "edge ({a}, {b}) is not valid in a tree on {vertex_count} vertices"
                )));
            }
            degree[a] += 1;
            degree[b] += 1;
            if !uf.union(a, b) {
                return Err(Error::Internal(format!("edge ({a}, {b}) closes a cycle")));
            }
        }
        for (v, &deg) in degree.iter().enumerate().skip(1) {
            let want_leaf = v <= n_leaves;
            if want_leaf && deg != 1 {
                return Err(Error::Internal(format!("leaf {v} has degree {deg}")));
            }
            if !want_leaf && deg < 3 {
                return Err(Error::Internal(format!(
                    "internal vertex {v} has degree {deg}"
                )));
            }
        }
        Ok(Self {
            n_leaves,
            max_vertex: vertex_count,
            edges,
        })
    }

    pub fn n_leaves(&self) -> usize {
        self.n_leaves
    }

    pub fn max_vertex(&self) -> usize {
        self.max_vertex
    }

    /// Edges in construction order; weights and path-matrix rows follow it.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        v <= self.n_leaves
    }

    /// An edge is internal when neither endpoint is a leaf.
    pub fn is_internal_edge(&self, idx: usize) -> bool {
        let (a, b) = self.edges[idx];
        !self.is_leaf(a) && !self.is_leaf(b)
    }

    pub fn internal_edge_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.is_internal_edge(i))
            .collect()
    }

    /// Neighbor lists of `(neighbor, edge index)` indexed by vertex id.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.max_vertex + 1];
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, idx));
            adj[b].push((a, idx));
        }
        adj
    }

    pub fn is_binary(&self) -> bool {
        let adj = self.adjacency();
        (self.n_leaves + 1..=self.max_vertex).all(|v| adj[v].len() == 3)
    }

    /// The leaf bipartitions induced by the edges, each encoded as the
    /// bitmask of the side avoiding leaf 1 and sorted; two trees have the
    /// same topology iff their split sets agree.
    pub fn splits(&self) -> Vec<u64> {
        assert!(self.n_leaves <= 64, "split masks use u64");
        let adj = self.adjacency();
        // Orient every edge away from leaf 1, then accumulate leaf sets
        // bottom-up.
        let mut parent_edge = vec![usize::MAX; self.max_vertex + 1];
        let mut order = Vec::with_capacity(self.max_vertex);
        let mut stack = vec![(1usize, usize::MAX)];
        let mut seen = vec![false; self.max_vertex + 1];
        seen[1] = true;
        while let Some((v, via)) = stack.pop() {
            parent_edge[v] = via;
            order.push(v);
            for &(u, idx) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push((u, idx));
                }
            }
        }
        let mut below = vec![0u64; self.edges.len()];
        let mut subtree = vec![0u64; self.max_vertex + 1];
        for &v in order.iter().rev() {
            if self.is_leaf(v) {
                subtree[v] |= 1 << (v - 1);
            }
            if parent_edge[v] != usize::MAX {
                below[parent_edge[v]] = subtree[v];
                let p = self
                    .edge_other_endpoint(parent_edge[v], v)
                    .expect("parent edge contains v");
                subtree[p] |= subtree[v];
            }
        }
        below.sort_unstable();
        below
    }

    fn edge_other_endpoint(&self, idx: usize, v: usize) -> Option<usize> {
        let (a, b) = self.edges[idx];
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Same topology with leaf `k` renamed to `map[k-1]`; internal ids stay.
    pub fn relabel_leaves(&self, map: &[usize]) -> Result<XTree> {
        if map.len() != self.n_leaves {
            return Err(Error::DimensionMismatch {
                expected: self.n_leaves,
                got: map.len(),
            });
        }
        let mut seen = vec![false; self.n_leaves + 1];
        for &m in map {
            if m < 1 || m > self.n_leaves || seen[m] {
                return Err(Error::NotAPermutation(map.to_vec(), self.n_leaves));
            }
            seen[m] = true;
        }
        let rename = |v: usize| if v <= self.n_leaves { map[v - 1] } else { v };
        let edges = self.edges.iter().map(|&(a, b)| (rename(a), rename(b))).collect();
        XTree::new(self.n_leaves, edges)
    }
}

/// X-tree together with one rational weight per edge. Internal edges must be
/// strictly positive; leaf edges may carry any sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedXTree {
    tree: XTree,
    weights: Vec<Rational>,
}

impl WeightedXTree {
    pub fn new(tree: XTree, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != tree.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: tree.edge_count(),
                got: weights.len(),
            });
        }
        for (idx, w) in weights.iter().enumerate() {
            if tree.is_internal_edge(idx) && *w <= Rational::zero() {
                let (a, b) = tree.edges()[idx];
                return Err(Error::NonPositiveInternalWeight(a, b));
            }
        }
        Ok(Self { tree, weights })
    }

    pub fn tree(&self) -> &XTree {
        &self.tree
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }
}

/// Partial symmetric map on leaf pairs; keys are normalized to `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissimilarityMap {
    n: usize,
    values: BTreeMap<(usize, usize), Rational>,
}

impl DissimilarityMap {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Rational)>,
    {
        let mut map = Self::new(n);
        for ((i, j), v) in entries {
            if map.get(i, j).is_some() {
                return Err(Error::DuplicateEdge(i.min(j), i.max(j)));
            }
            map.set(i, j, v)?;
        }
        Ok(map)
    }

    fn key(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        if i < 1 || i > self.n || j < 1 || j > self.n {
            return Err(Error::EdgeOutOfRange(i, j, self.n));
        }
        Ok((i.min(j), i.max(j)))
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        let key = self.key(i, j)?;
        self.values.insert(key, value);
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        let key = self.key(i, j).ok()?;
        self.values.get(&key)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.values.len() == self.n * (self.n - 1) / 2
    }

    /// Pairs currently carrying a value, in lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.values.keys().copied().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.values.iter()
    }

    pub fn restrict(&self, pairs: &[(usize, usize)]) -> Result<DissimilarityMap> {
        let mut out = DissimilarityMap::new(self.n);
        for &(i, j) in pairs {
            let v = self
                .get(i, j)
                .ok_or(Error::ValueDomainMismatch(i.min(j), i.max(j)))?;
            out.set(i, j, v.clone())?;
        }
        Ok(out)
    }
}

/// Caterpillar on `n >= 4` leaves: a spine of internal vertices `n+1..=2n-2`
/// with cherries {1,2} and {n-1,n} at the ends and leaf `k+1` hanging from
/// the k-th spine vertex in between.
pub fn cat_tree(n: usize) -> Result<XTree> {
    if n < 4 {
        return Err(Error::TooFewLeaves(n, 4));
    }
    let p = |i: usize| n + i;
    let mut edges = vec![(1, p(1)), (2, p(1))];
    for i in 2..=n - 2 {
        edges.push((p(i - 1), p(i)));
        if i < n - 2 {
            edges.push((i + 1, p(i)));
        } else {
            edges.push((n - 1, p(i)));
            edges.push((n, p(i)));
        }
    }
    XTree::new(n, edges)
}

/// Number of cherries: pairs of leaves attached to a common degree-3 vertex.
pub fn count_cherries(t: &XTree) -> usize {
    let adj = t.adjacency();
    (t.n_leaves() + 1..=t.max_vertex())
        .filter(|&v| adj[v].len() == 3)
        .map(|v| {
            let leaves = adj[v].iter().filter(|&&(u, _)| t.is_leaf(u)).count();
            leaves * leaves.saturating_sub(1) / 2
        })
        .sum()
}

/// Metric induced by a weighted tree: each pair gets the sum of the edge
/// weights along its leaf-to-leaf path.
pub fn tree_metric(wt: &WeightedXTree) -> DissimilarityMap {
    let pm = path_matrix(wt.tree());
    let mut d = DissimilarityMap::new(wt.tree().n_leaves());
    for (c, &(i, j)) in pm.pairs().iter().enumerate() {
        let mut sum = Rational::zero();
        for r in 0..pm.rows() {
            if pm.entry(r, c) == 1 {
                sum += &wt.weights()[r];
            }
        }
        d.set(i, j, sum).expect("pairs are in range");
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourPointOutcome {
    Holds,
    Violated { quadruple: [usize; 4] },
}

/// Checks the four-point condition on a total map: for every quadruple, the
/// two largest of the three pairings `d(i,j)+d(k,l)`, `d(i,k)+d(j,l)`,
/// `d(i,l)+d(j,k)` must coincide. Total maps satisfying it are exactly the
/// metrics of weighted X-trees.
pub fn four_point_check(d: &DissimilarityMap) -> Result<FourPointOutcome> {
    let n = d.n();
    if !d.is_total() {
        for i in 1..=n {
            for j in i + 1..=n {
                if d.get(i, j).is_none() {
                    return Err(Error::PartialMap(i, j));
                }
            }
        }
    }
    let at = |i: usize, j: usize| d.get(i, j).expect("map is total");
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let mut sums = [
                        at(i, j) + at(k, l),
                        at(i, k) + at(j, l),
                        at(i, l) + at(j, k),
                    ];
                    sums.sort();
                    if sums[1] != sums[2] {
                        return Ok(FourPointOutcome::Violated {
                            quadruple: [i, j, k, l],
                        });
                    }
                }
            }
        }
    }
    Ok(FourPointOutcome::Holds)
}

/// Whether the path-matrix columns indexed by `pairs` are linearly
/// independent over the rationals.
pub fn tree_matroid_indep(t: &XTree, pairs: &[(usize, usize)]) -> Result<bool> {
    let n = t.n_leaves();
    let cols: Result<Vec<usize>> = pairs
        .iter()
        .map(|&(i, j)| {
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            if i < 1 || i > n || j < 1 || j > n {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            Ok(pair_position(n, i.min(j), i.max(j)))
        })
        .collect();
    let cols = cols?;
    if pairs.len() > t.edge_count() {
        return Ok(false);
    }
    let pm = path_matrix(t);
    let rows = pm.submatrix_rows_i64(&cols);
    Ok(rank_int_rows(&rows) == pairs.len())
}

/// Ground-truth independence by exhausting every binary tree topology on `n`
/// leaves. `independent(S)` holds iff the pairs are independent in at least
/// one of them. Refuses n above `cap` since the count grows as (2n-5)!!.
pub fn tree_enum_oracle(n: usize, pairs: &[(usize, usize)], cap: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::TooFewLeaves(n, 3));
    }
    if n > cap {
        return Err(Error::CapExceeded(n, cap));
    }
    // Every path matrix has rank 2n - 3, so larger sets are dependent in
    // every topology.
    if pairs.len() > 2 * n - 3 {
        // Still validate the input before deciding.
        crate::graph::PatternGraph::new(n, pairs.iter().copied())?;
        return Ok(false);
    }
    for t in enumerate_binary_trees(n)? {
        if tree_matroid_indep(&t, pairs)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn quartet_tree() -> XTree {
        cat_tree(4).unwrap()
    }

    /// Weighted quartet whose metric is (0, 3, -2, 5, 0, -1) in lexicographic
    /// pair order.
    fn quartet_weights() -> Vec<Rational> {
        vec![rat(-1), rat(1), rat(2), rat(2), rat(-3)]
    }

    #[test]
    fn cat_tree_structure() {
        let t = quartet_tree();
        assert_eq!(t.edges(), &[(1, 5), (2, 5), (5, 6), (3, 6), (4, 6)]);
        assert!(t.is_binary());
        assert_eq!(count_cherries(&t), 2);

        let t6 = cat_tree(6).unwrap();
        assert_eq!(
            t6.edges(),
            &[
                (1, 7),
                (2, 7),
                (7, 8),
                (3, 8),
                (8, 9),
                (4, 9),
                (9, 10),
                (5, 10),
                (6, 10)
            ]
        );
        assert_eq!(count_cherries(&t6), 2);

        let t5 = cat_tree(5).unwrap();
        assert_eq!(t5.edges().len(), 7);
        // V = E + 1 in a tree, so 8 vertices total and 3 internal ones.
        assert_eq!(t5.edges().len() + 1 - 5, 3);
        assert!(cat_tree(3).is_err());
    }

    #[test]
    fn three_cherry_tree_is_not_a_caterpillar() {
        let t = XTree::new(
            6,
            vec![
                (1, 7),
                (2, 7),
                (3, 8),
                (4, 8),
                (5, 9),
                (6, 9),
                (7, 10),
                (8, 10),
                (9, 10),
            ],
        )
        .unwrap();
        assert!(t.is_binary());
        assert_eq!(count_cherries(&t), 3);
    }

    #[test]
    fn star_has_three_cherries() {
        let star = XTree::new(3, vec![(1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(star.is_binary());
        assert_eq!(count_cherries(&star), 3);
    }

    #[test]
    fn xtree_validation_rejects_bad_shapes() {
        // Degree-2 internal vertex.
        assert!(XTree::new(2, vec![(1, 3), (3, 2)]).is_err());
        // Leaf label with degree 2.
        assert!(XTree::new(3, vec![(1, 2), (2, 3)]).is_err());
        // Cycle.
        assert!(XTree::new(3, vec![(1, 2), (2, 3), (1, 3)]).is_err());
        // Valid 2-leaf tree.
        assert!(XTree::new(2, vec![(1, 2)]).is_ok());
    }

    #[test]
    fn weighted_tree_rejects_nonpositive_internal() {
        let t = quartet_tree();
        let mut w = quartet_weights();
        w[2] = rat(0);
        assert!(matches!(
            WeightedXTree::new(t.clone(), w),
            Err(Error::NonPositiveInternalWeight(5, 6))
        ));
        let wt = WeightedXTree::new(t, quartet_weights()).unwrap();
        assert_eq!(wt.weights().len(), 5);
    }

    #[test]
    fn quartet_metric_values() {
        let wt = WeightedXTree::new(quartet_tree(), quartet_weights()).unwrap();
        let d = tree_metric(&wt);
        let expect = [
            ((1, 2), 0),
            ((1, 3), 3),
            ((1, 4), -2),
            ((2, 3), 5),
            ((2, 4), 0),
            ((3, 4), -1),
        ];
        for ((i, j), v) in expect {
            assert_eq!(d.get(i, j), Some(&rat(v)), "pair ({i}, {j})");
        }
        assert!(d.is_total());
        assert_eq!(four_point_check(&d).unwrap(), FourPointOutcome::Holds);
    }

    #[test]
    fn star_metric_sums_leaf_weights() {
        let star = XTree::new(3, vec![(1, 4), (2, 4), (3, 4)]).unwrap();
        let wt = WeightedXTree::new(star, vec![rat(2), rat(-5), rat(11)]).unwrap();
        let d = tree_metric(&wt);
        assert_eq!(d.get(1, 2), Some(&rat(-3)));
        assert_eq!(d.get(1, 3), Some(&rat(13)));
        assert_eq!(d.get(2, 3), Some(&rat(6)));
        // No quadruples on three points, so the condition holds vacuously.
        assert_eq!(four_point_check(&d).unwrap(), FourPointOutcome::Holds);
    }

    #[test]
    fn zero_leaf_weights_isolate_the_internal_edge() {
        let w = vec![rat(0), rat(0), rat(1), rat(0), rat(0)];
        let wt = WeightedXTree::new(quartet_tree(), w).unwrap();
        let d = tree_metric(&wt);
        assert_eq!(d.get(1, 2), Some(&rat(0)));
        assert_eq!(d.get(3, 4), Some(&rat(0)));
        for (i, j) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            assert_eq!(d.get(i, j), Some(&rat(1)), "pair ({i}, {j})");
        }
    }

    #[test]
    fn random_weighted_trees_satisfy_four_point() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(47);
        for n in 3..=7 {
            let trees: Vec<XTree> = enumerate_binary_trees(n).unwrap().collect();
            for _ in 0..100 {
                let t = trees[rng.gen_range(0..trees.len())].clone();
                let w: Vec<Rational> = t
                    .edges()
                    .iter()
                    .map(|&(u, v)| {
                        if u <= n || v <= n {
                            rat(rng.gen_range(-10..=10))
                        } else {
                            rat(rng.gen_range(1..=10))
                        }
                    })
                    .collect();
                let wt = WeightedXTree::new(t, w).unwrap();
                let d = tree_metric(&wt);
                assert_eq!(four_point_check(&d).unwrap(), FourPointOutcome::Holds);
            }
        }
    }

    #[test]
    fn four_point_detects_violation() {
        // Unit metric except one inflated value: sums 2, 11, 2 for the only
        // quadruple, with a unique maximum.
        let mut d = DissimilarityMap::new(4);
        for i in 1..=4 {
            for j in i + 1..=4 {
                d.set(i, j, rat(1)).unwrap();
            }
        }
        d.set(1, 3, rat(10)).unwrap();
        assert_eq!(
            four_point_check(&d).unwrap(),
            FourPointOutcome::Violated {
                quadruple: [1, 2, 3, 4]
            }
        );
        let partial = DissimilarityMap::new(4);
        assert!(four_point_check(&partial).is_err());
    }

    #[test]
    fn unit_metric_on_five_points_is_a_tree_metric() {
        // The star with all leaf weights 1/2 realizes it.
        let mut d = DissimilarityMap::new(5);
        for i in 1..=5 {
            for j in i + 1..=5 {
                d.set(i, j, rat(1)).unwrap();
            }
        }
        assert_eq!(four_point_check(&d).unwrap(), FourPointOutcome::Holds);
    }

    #[test]
    fn dissimilarity_map_normalizes_keys() {
        let mut d = DissimilarityMap::new(3);
        d.set(3, 1, rat(7)).unwrap();
        assert_eq!(d.get(1, 3), Some(&rat(7)));
        assert!(d.set(1, 1, rat(0)).is_err());
        assert!(d.set(0, 2, rat(0)).is_err());
        assert_eq!(d.support(), vec![(1, 3)]);
        assert!(DissimilarityMap::from_entries(
            3,
            vec![((1, 2), rat(1)), ((2, 1), rat(2))]
        )
        .is_err());
    }

    #[test]
    fn matroid_independence_on_quartet() {
        let t = quartet_tree();
        assert!(tree_matroid_indep(&t, &[(1, 2), (3, 4)]).unwrap());
        // A basis of this particular topology.
        assert!(tree_matroid_indep(&t, &[(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap());
        // Dependent in the 12|34 caterpillar even though the pattern is
        // independent in the matroid (a 13|24 topology carries it).
        assert!(!tree_matroid_indep(&t, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap());
        // Six pairs exceed the five edges.
        assert!(!tree_matroid_indep(&t, &all_pairs(4)).unwrap());
        assert!(tree_matroid_indep(&t, &[]).unwrap());
        assert!(tree_matroid_indep(&t, &[(4, 1)]).unwrap());
        assert!(tree_matroid_indep(&t, &[(1, 5)]).is_err());
    }

    #[test]
    fn enum_oracle_small_cases() {
        // A full triangle on three leaves is independent.
        assert!(tree_enum_oracle(3, &[(1, 2), (1, 3), (2, 3)], 8).unwrap());
        assert!(tree_enum_oracle(4, &[(1, 2), (3, 4), (1, 3)], 8).unwrap());
        // K_{3,3} is dependent even though no tree topology is exhausted by
        // the size bound alone.
        let k33: Vec<(usize, usize)> = [1, 2, 3]
            .iter()
            .flat_map(|&i| [4, 5, 6].map(|j| (i, j)))
            .collect();
        assert!(!tree_enum_oracle(6, &k33, 8).unwrap());
        // Eight pairs on five leaves exceed 2n - 3 = 7.
        let mut pairs = all_pairs(5);
        pairs.truncate(8);
        assert!(!tree_enum_oracle(5, &pairs, 8).unwrap());
        assert!(matches!(
            tree_enum_oracle(9, &[(1, 2)], 8),
            Err(Error::CapExceeded(9, 8))
        ));
        assert!(tree_enum_oracle(2, &[(1, 2)], 8).is_err());
    }

    #[test]
    fn relabel_moves_leaves_only() {
        let t = quartet_tree();
        let r = t.relabel_leaves(&[2, 1, 4, 3]).unwrap();
        assert_eq!(r.edges(), &[(2, 5), (1, 5), (5, 6), (4, 6), (3, 6)]);
        assert!(t.relabel_leaves(&[1, 1, 2, 3]).is_err());
        assert!(t.relabel_leaves(&[1, 2, 3]).is_err());
    }

    #[test]
    fn splits_distinguish_topologies() {
        let t12 = quartet_tree();
        let t13 = t12.relabel_leaves(&[1, 3, 2, 4]).unwrap();
        let t12b = t12.relabel_leaves(&[2, 1, 4, 3]).unwrap();
        assert_ne!(t12.splits(), t13.splits());
        assert_eq!(t12.splits(), t12b.splits());
    }
}
