//! Constructive completion: extends values prescribed on an independent
//! pattern to the metric of a weighted X-tree.

use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;

use crate::decide::{decide_tree_metric, DecideOptions, Decision};
use crate::error::{Error, Result};
use crate::linalg::{feasible_nonneg, Rational, RationalMatrix};
use crate::trees::{
    cat_tree, enumerate_binary_trees, pair_position, path_matrix, tree_metric, DissimilarityMap,
    WeightedXTree, XTree,
};

#[derive(Clone, Debug)]
pub struct Completion {
    pub tree: WeightedXTree,
    pub metric: DissimilarityMap,
    /// Number of topologies examined before the feasible one.
    pub topologies_tried: usize,
    /// Whether the first candidate, the caterpillar derived from the
    /// independence certificate, was the one that worked.
    pub used_certificate_caterpillar: bool,
}

#[derive(Clone, Debug)]
pub enum CompleteOutcome {
    Completed(Box<Completion>),
    NotIndependent(Box<Decision>),
}

#[derive(Clone, Copy, Debug)]
pub struct CompleteOptions {
    /// Maximum n for which the fallback enumeration may run.
    pub cap: usize,
    /// Scan candidate topologies with worker threads; the earliest feasible
    /// index still wins, so results do not change.
    pub parallel: bool,
    pub decide: DecideOptions,
}

impl Default for CompleteOptions {
    fn default() -> Self {
        Self {
            cap: 8,
            parallel: false,
            decide: DecideOptions::default(),
        }
    }
}

/// Exact edge weights realizing the prescribed values in the fixed topology,
/// with nonnegative weights on internal edges, or None when the topology's
/// closed cone misses the values.
pub fn feasible_in_topology(
    t: &XTree,
    pairs: &[(usize, usize)],
    values: &DissimilarityMap,
) -> Result<Option<Vec<Rational>>> {
    let n = t.n_leaves();
    let pm = path_matrix(t);
    let mut system = RationalMatrix::zero(pairs.len(), t.edge_count());
    let mut rhs = Vec::with_capacity(pairs.len());
    for (r, &(i, j)) in pairs.iter().enumerate() {
        if i < 1 || i > n || j < 1 || j > n || i == j {
            return Err(Error::EdgeOutOfRange(i, j, n));
        }
        let col = pair_position(n, i.min(j), i.max(j));
        for e in 0..t.edge_count() {
            if pm.entry(e, col) == 1 {
                *system.at_mut(r, e) = Rational::from_integer(1.into());
            }
        }
        let d = values
            .get(i, j)
            .ok_or(Error::ValueDomainMismatch(i.min(j), i.max(j)))?;
        rhs.push(d.clone());
    }
    let nonneg: BTreeSet<usize> = t.internal_edge_indices().into_iter().collect();
    feasible_nonneg(&system, &rhs, &nonneg)
}

/// Merges away internal edges of weight zero so the result is a legal
/// weighted X-tree with strictly positive internal weights. Contraction
/// never creates degree-2 vertices (two internal vertices of degree >= 3
/// merge into one of degree >= 4) and does not change any leaf-to-leaf path
/// sum.
fn contract_zero_internal(t: &XTree, w: &[Rational]) -> Result<WeightedXTree> {
    let contracted: Vec<usize> = t
        .internal_edge_indices()
        .into_iter()
        .filter(|&e| w[e].is_zero())
        .collect();
    if contracted.is_empty() {
        return WeightedXTree::new(t.clone(), w.to_vec());
    }

    let mut uf = crate::graph::RollbackUnionFind::new(t.max_vertex() + 1);
    for &e in &contracted {
        let (a, b) = t.edges()[e];
        uf.union(a, b);
    }
    // Leaves keep their labels; surviving internal classes are renumbered in
    // first-appearance order along the surviving edges.
    let n = t.n_leaves();
    let mut rename = vec![0usize; t.max_vertex() + 1];
    let mut next = n + 1;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let contracted_set: BTreeSet<usize> = contracted.iter().copied().collect();
    for (e, &(a, b)) in t.edges().iter().enumerate() {
        if contracted_set.contains(&e) {
            continue;
        }
        let mut endpoint = |v: usize, rename: &mut Vec<usize>| -> usize {
            if v <= n {
                return v;
            }
            let root = uf.find(v);
            if rename[root] == 0 {
                rename[root] = next;
                next += 1;
            }
            rename[root]
        };
        let na = endpoint(a, &mut rename);
        let nb = endpoint(b, &mut rename);
        edges.push((na, nb));
        weights.push(w[e].clone());
    }
    WeightedXTree::new(XTree::new(n, edges)?, weights)
}

/// Decides independence and, when independent, produces a weighted X-tree
/// whose metric restricts to the prescribed values exactly. The caterpillar
/// obtained by pushing the certificate order onto Cat(n) is tried first;
/// the full topology enumeration backs it up, and exhausting it is an
/// internal error because the closed binary cones cover every tree metric.
pub fn complete(
    n: usize,
    pairs: &[(usize, usize)],
    values: &DissimilarityMap,
    opts: CompleteOptions,
) -> Result<CompleteOutcome> {
    if n < 3 {
        return Err(Error::TooFewLeaves(n, 3));
    }
    if n > opts.cap {
        return Err(Error::CapExceeded(n, opts.cap));
    }
    let decision = decide_tree_metric(n, pairs, opts.decide)?;
    let sorted_pairs = decision.edges.clone();
    if values.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: values.n(),
        });
    }
    if values.support() != sorted_pairs {
        let missing = sorted_pairs
            .iter()
            .find(|&&(i, j)| values.get(i, j).is_none());
        let (i, j) = match missing {
            Some(&(i, j)) => (i, j),
            None => *values
                .support()
                .iter()
                .find(|p| !sorted_pairs.contains(p))
                .expect("support differs from the pair set"),
        };
        return Err(Error::ValueDomainMismatch(i, j));
    }
    if !decision.independent {
        return Ok(CompleteOutcome::NotIndependent(Box::new(decision)));
    }

    let mut candidates: Vec<XTree> = Vec::new();
    let mut have_certificate_caterpillar = false;
    if n >= 4 {
        let seq = decision
            .certificate
            .clone()
            .expect("independent decisions carry a certificate");
        candidates.push(cat_tree(n)?.relabel_leaves(&seq)?);
        have_certificate_caterpillar = true;
    }
    for t in enumerate_binary_trees(n)? {
        candidates.push(t);
    }

    let hit = if opts.parallel {
        candidates
            .par_iter()
            .enumerate()
            .map(|(idx, t)| (idx, feasible_in_topology(t, &sorted_pairs, values)))
            .find_first(|(_, r)| !matches!(r, Ok(None)))
    } else {
        candidates
            .iter()
            .enumerate()
            .map(|(idx, t)| (idx, feasible_in_topology(t, &sorted_pairs, values)))
            .find(|(_, r)| !matches!(r, Ok(None)))
    };

    match hit {
        Some((idx, Ok(Some(w)))) => {
            let wt = contract_zero_internal(&candidates[idx], &w)?;
            let metric = tree_metric(&wt);
            Ok(CompleteOutcome::Completed(Box::new(Completion {
                tree: wt,
                metric,
                topologies_tried: idx + 1,
                used_certificate_caterpillar: have_certificate_caterpillar && idx == 0,
            })))
        }
        Some((_, Err(e))) => Err(e),
        Some((_, Ok(None))) => unreachable!("filtered out above"),
        None => Err(Error::Internal(format!(
            "no binary topology admits the prescribed values on an independent pattern \
             (n = {n}, S = {sorted_pairs:?}); this contradicts cone coverage"
        ))),
    }
}
