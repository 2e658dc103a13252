/// Disjoint sets with union by rank and an undo stack. Path compression is
/// deliberately absent so that merges can be rolled back in O(1) during
/// backtracking.
#[derive(Clone, Debug)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u32>,
    history: Vec<(usize, bool)>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `x` and `y`. Returns false when they already share
    /// a set (the new edge would close a cycle).
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return false;
        }
        let (child, parent) = if self.rank[rx] < self.rank[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        let bumped = self.rank[child] == self.rank[parent];
        if bumped {
            self.rank[parent] += 1;
        }
        self.parent[child] = parent;
        self.history.push((child, bumped));
        true
    }

    /// Snapshot for a later rollback.
    pub fn mark(&self) -> usize {
        self.history.len()
    }

    /// Undoes all merges performed after `mark`.
    pub fn rollback_to(&mut self, mark: usize) {
        while self.history.len() > mark {
            let (child, bumped) = self.history.pop().expect("history is non-empty");
            let parent = self.parent[child];
            if bumped {
                self.rank[parent] -= 1;
            }
            self.parent[child] = child;
        }
    }
}
