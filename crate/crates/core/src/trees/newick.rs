//! Newick rendering for weighted and unweighted X-trees.

use super::{WeightedXTree, XTree};
use crate::error::{Error, Result};

/// Serializes the tree rooted at the internal neighbor of leaf 1. Children
/// are ordered by the smallest leaf in their subtree, which makes the output
/// canonical for a given (tree, weights) pair. Branch lengths are rationals,
/// e.g. `(1:-1,2:1,(3:2,4:-3):2);`.
pub fn to_newick(wt: &WeightedXTree) -> Result<String> {
    render(wt.tree(), Some(wt.weights()))
}

/// Topology-only Newick string with no branch lengths.
pub fn to_newick_topology(t: &XTree) -> Result<String> {
    render(t, None)
}

fn render(t: &XTree, weights: Option<&[crate::linalg::Rational]>) -> Result<String> {
    if t.n_leaves() < 3 {
        return Err(Error::TooFewLeaves(t.n_leaves(), 3));
    }
    let adj = t.adjacency();
    let root = adj[1][0].0;
    let mut out = String::new();
    write_subtree(t, weights, &adj, root, usize::MAX, &mut out);
    out.push(';');
    Ok(out)
}

/// Smallest leaf label in the subtree hanging below `v` when entered along
/// `via`; used to order children deterministically.
fn min_leaf(t: &XTree, adj: &[Vec<(usize, usize)>], v: usize, via: usize) -> usize {
    if t.is_leaf(v) {
        return v;
    }
    adj[v]
        .iter()
        .filter(|&&(_, idx)| idx != via)
        .map(|&(u, idx)| min_leaf(t, adj, u, idx))
        .min()
        .expect("internal vertices have children")
}

fn write_subtree(
    t: &XTree,
    weights: Option<&[crate::linalg::Rational]>,
    adj: &[Vec<(usize, usize)>],
    v: usize,
    via: usize,
    out: &mut String,
) {
    if t.is_leaf(v) {
        out.push_str(&v.to_string());
    } else {
        let mut children: Vec<(usize, usize)> = adj[v]
            .iter()
            .copied()
            .filter(|&(_, idx)| idx != via)
            .collect();
        children.sort_by_key(|&(u, idx)| min_leaf(t, adj, u, idx));
        out.push('(');
        for (pos, &(u, idx)) in children.iter().enumerate() {
            if pos > 0 {
                out.push(',');
            }
            write_subtree(t, weights, adj, u, idx, out);
            if let Some(w) = weights {
                out.push(':');
                out.push_str(&w[idx].to_string());
            }
        }
        out.push(')');
    }
}
