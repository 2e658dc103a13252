//! Streaming enumeration of binary tree topologies by leaf insertion.

use super::XTree;
use crate::error::{Error, Result};

/// (2n-5)!! for n >= 3, the number of binary topologies on n leaves.
pub fn double_factorial(n: usize) -> u128 {
    (4..=n).map(|k| (2 * k - 5) as u128).product()
}

#[derive(Clone, Debug)]
struct Partial {
    leaves: usize,
    edges: Vec<(usize, usize)>,
}

/// Depth-first stream over all binary topologies on `n` leaves. Level k
/// inserts leaf k into each edge of the level-(k-1) tree in edge order, so
/// the output order is deterministic. Internal ids are n+1..=2n-2 in
/// creation order; the tree on {1,2,3} uses n+1.
pub struct BinaryTrees {
    n: usize,
    stack: Vec<(Partial, usize)>,
}

pub fn enumerate_binary_trees(n: usize) -> Result<BinaryTrees> {
    if n < 3 {
        return Err(Error::TooFewLeaves(n, 3));
    }
    let base = Partial {
        leaves: 3,
        edges: vec![(1, n + 1), (2, n + 1), (3, n + 1)],
    };
    Ok(BinaryTrees {
        n,
        stack: vec![(base, 0)],
    })
}

impl BinaryTrees {
    fn insert_leaf(&self, p: &Partial, edge: usize) -> Partial {
        let leaf = p.leaves + 1;
        let mid = self.n + p.leaves - 1;
        let mut edges = p.edges.clone();
        let (a, b) = edges[edge];
        edges[edge] = (a, mid);
        edges.push((mid, b));
        edges.push((leaf, mid));
        Partial {
            leaves: leaf,
            edges,
        }
    }
}

impl Iterator for BinaryTrees {
    type Item = XTree;

    fn next(&mut self) -> Option<XTree> {
        loop {
            let n = self.n;
            let (partial, cursor) = self.stack.last_mut()?;
            if partial.leaves == n {
                let t = XTree::new(n, partial.edges.clone())
                    .expect("leaf insertion preserves the X-tree shape");
                self.stack.pop();
                return Some(t);
            }
            if *cursor >= partial.edges.len() {
                self.stack.pop();
                continue;
            }
            let edge = *cursor;
            *cursor += 1;
            let child = {
                let p = &self.stack.last().expect("stack is non-empty").0;
                self.insert_leaf(p, edge)
            };
            self.stack.push((child, 0));
        }
    }
}
