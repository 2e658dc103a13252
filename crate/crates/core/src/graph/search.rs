//! Backtracking search for a vertex order whose induced acyclic orientation
//! has no alternating closed trail.

use super::union_find::RollbackUnionFind;
use super::{PatternGraph, VertexOrder};

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub order: Option<VertexOrder>,
    pub nodes_explored: u64,
}

/// Looks for a trail-free order of `g`. Components are solved independently
/// and their sequences concatenated (no arc crosses a component boundary, so
/// trails never do either). Within a component the search places one vertex
/// at a time; each placement adds the arcs from already-placed neighbors and
/// is rejected as soon as the trail graph acquires a cycle, which rolling
/// union-find makes cheap to test and undo.
pub fn search_trail_free_order(g: &PatternGraph) -> SearchOutcome {
    let n = g.n();
    let adj = g.adjacency();
    let mut uf = RollbackUnionFind::new(2 * n + 2);
    let mut placed = vec![false; n + 1];
    let mut nodes = 0u64;
    let mut sequence = Vec::with_capacity(n);

    for component in g.connected_components() {
        let mut seq = Vec::with_capacity(component.len());
        let found = extend(
            &component,
            &adj,
            &mut uf,
            &mut placed,
            &mut seq,
            &mut nodes,
        );
        if !found {
            return SearchOutcome {
                order: None,
                nodes_explored: nodes,
            };
        }
        sequence.extend(seq);
    }

    let order = VertexOrder::from_sequence(&sequence).expect("search emits a permutation");
    SearchOutcome {
        order: Some(order),
        nodes_explored: nodes,
    }
}

fn extend(
    component: &[usize],
    adj: &[Vec<usize>],
    uf: &mut RollbackUnionFind,
    placed: &mut [bool],
    seq: &mut Vec<usize>,
    nodes: &mut u64,
) -> bool {
    if seq.len() == component.len() {
        return true;
    }

    // Highest remaining degree first, ties broken by smallest label.
    let mut candidates: Vec<(usize, usize)> = component
        .iter()
        .filter(|&&v| !placed[v])
        .map(|&v| {
            let deg = adj[v].iter().filter(|&&u| !placed[u]).count();
            (deg, v)
        })
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    for (_, v) in candidates {
        *nodes += 1;
        let mark = uf.mark();
        let mut ok = true;
        for &u in &adj[v] {
            if placed[u] && !uf.union(2 * u, 2 * v + 1) {
                ok = false;
                break;
            }
        }
        if ok {
            placed[v] = true;
            seq.push(v);
            if extend(component, adj, uf, placed, seq, nodes) {
                return true;
            }
            seq.pop();
            placed[v] = false;
        }
        uf.rollback_to(mark);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_pattern, has_alternating_closed_trail, k33_pattern, orient, PatternGraph,
    };

    fn check_order(g: &PatternGraph, order: &VertexOrder) {
        let d = orient(g, order).unwrap();
        assert!(!has_alternating_closed_trail(&d));
    }

    #[test]
    fn triangle_succeeds() {
        let g = complete_pattern(3);
        let out = search_trail_free_order(&g);
        check_order(&g, &out.order.expect("triangle is independent"));
        assert!(out.nodes_explored >= 3);
    }

    #[test]
    fn k33_fails() {
        let out = search_trail_free_order(&k33_pattern());
        assert!(out.order.is_none());
        assert!(out.nodes_explored > 0);
    }

    #[test]
    fn k4_fails() {
        let out = search_trail_free_order(&complete_pattern(4));
        assert!(out.order.is_none());
    }

    #[test]
    fn disconnected_pattern_concatenates_components() {
        let g = PatternGraph::new(7, vec![(1, 2), (2, 3), (1, 3), (5, 6), (6, 7)]).unwrap();
        let out = search_trail_free_order(&g);
        let order = out.order.expect("forest plus triangle is independent");
        check_order(&g, &order);
        assert_eq!(order.sequence().len(), 7);
    }

    #[test]
    fn empty_and_singleton() {
        let g = PatternGraph::new(0, Vec::new()).unwrap();
        let out = search_trail_free_order(&g);
        assert_eq!(out.order.unwrap().sequence(), Vec::<usize>::new());
        let g = PatternGraph::new(1, Vec::new()).unwrap();
        let out = search_trail_free_order(&g);
        assert_eq!(out.order.unwrap().sequence(), vec![1]);
    }

    #[test]
    fn search_agrees_with_exhaustive_orders_small() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        fn brute_force(g: &PatternGraph) -> bool {
            let n = g.n();
            let mut seq: Vec<usize> = (1..=n).collect();
            permute(&mut seq, 0, g)
        }
        fn permute(seq: &mut Vec<usize>, k: usize, g: &PatternGraph) -> bool {
            if k == seq.len() {
                let order = VertexOrder::from_sequence(seq).unwrap();
                let d = orient(g, &order).unwrap();
                return !has_alternating_closed_trail(&d);
            }
            for i in k..seq.len() {
                seq.swap(k, i);
                if permute(seq, k + 1, g) {
                    seq.swap(k, i);
                    return true;
                }
                seq.swap(k, i);
            }
            false
        }

        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if rng.gen_bool(0.45) {
                        edges.push((i, j));
                    }
                }
            }
            let g = PatternGraph::new(n, edges).unwrap();
            let out = search_trail_free_order(&g);
            assert_eq!(out.order.is_some(), brute_force(&g), "graph {g:?}");
            if let Some(order) = out.order {
                check_order(&g, &order);
            }
        }
    }
}
