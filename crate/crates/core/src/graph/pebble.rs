//! (2,3)-sparsity test via the pebble game.

use super::PatternGraph;

/// Whether every subgraph on k >= 2 vertices spans at most 2k - 3 edges.
/// This is a necessary condition for independence: K_{3,3} satisfies it yet
/// is dependent, so it only serves as a fast pre-filter.
pub fn laman_sparse(g: &PatternGraph) -> bool {
    let n = g.n();
    let mut pebbles = vec![2u8; n + 1];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];

    for &(u, v) in g.edges() {
        while pebbles[u] + pebbles[v] < 4 {
            if !pull_pebble(&mut pebbles, &mut out, u, v) && !pull_pebble(&mut pebbles, &mut out, v, u) {
                return false;
            }
        }
        pebbles[u] -= 1;
        out[u].push(v);
    }
    true
}

/// Searches the out-forest from `root` for a spare pebble, avoiding `other`,
/// and moves it to `root` by reversing the path found.
fn pull_pebble(pebbles: &mut [u8], out: &mut [Vec<usize>], root: usize, other: usize) -> bool {
    let n = pebbles.len() - 1;
    let mut prev = vec![usize::MAX; n + 1];
    let mut stack = vec![root];
    prev[root] = root;
    prev[other] = other;
    while let Some(x) = stack.pop() {
        for idx in 0..out[x].len() {
            let y = out[x][idx];
            if prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if pebbles[y] > 0 {
                pebbles[y] -= 1;
                pebbles[root] += 1;
                let mut cur = y;
                while cur != root {
                    let p = prev[cur];
                    let pos = out[p].iter().position(|&z| z == cur).expect("arc exists");
                    out[p].swap_remove(pos);
                    out[cur].push(p);
                    cur = p;
                }
                return true;
            }
            stack.push(y);
        }
    }
    false
}
