//! Decision layer: independence verdicts with verifiable certificates for the
//! skew-symmetric, rectangular, and tree-metric models.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    has_alternating_closed_trail, laman_sparse, orient, search_trail_free_order, PatternGraph,
    VertexOrder,
};
use crate::linalg::rank_int_rows;
use crate::trees::{enumerate_binary_trees, pair_position, path_matrix};

/// Vertex numbering used when a rectangular pattern is translated to a graph
/// on [m + n]: cell (i, j) becomes the pair {j, n + i}.
pub const RECT_VERTEX_CONVENTION: &str =
    "cell (i, j) maps to the pair {j, n + i}: column j is vertex j, row i is vertex n + i";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    Skew,
    Rect,
    TreeMetric,
}

/// Problem size: `n` alone for square models, `(m, n)` for rectangular ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambient {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    pub n: usize,
}

impl Ambient {
    pub fn square(n: usize) -> Self {
        Self { m: None, n }
    }

    pub fn rect(m: usize, n: usize) -> Self {
        Self { m: Some(m), n }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionStats {
    pub nodes_explored: u64,
    pub time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub model: Model,
    pub ambient: Ambient,
    /// Pairs on the (possibly translated) vertex set, lexicographically
    /// sorted.
    pub edges: Vec<(usize, usize)>,
    /// Original cells for rectangular inputs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cells: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_convention: Option<String>,
    pub independent: bool,
    /// Vertex order (earliest first) whose orientation is trail-free;
    /// present exactly when independent.
    pub certificate: Option<Vec<usize>>,
    /// Laman sparsity of the pattern, when the pre-filter ran.
    pub prefilter: Option<bool>,
    pub stats: DecisionStats,
}

impl Decision {
    pub fn certificate_order(&self) -> Option<VertexOrder> {
        self.certificate
            .as_ref()
            .map(|seq| VertexOrder::from_sequence(seq).expect("stored certificate is valid"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DecideOptions {
    /// Run the Laman sparsity pre-filter before searching. Sparsity is
    /// necessary for independence, so a negative result short-circuits.
    pub prefilter: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self { prefilter: true }
    }
}

pub fn decide_skew(n: usize, pairs: &[(usize, usize)], opts: DecideOptions) -> Result<Decision> {
    let g = PatternGraph::new(n, pairs.iter().copied())?;
    let start = Instant::now();
    let mut prefilter = None;
    if opts.prefilter {
        let sparse = laman_sparse(&g);
        prefilter = Some(sparse);
        if !sparse {
            return Ok(Decision {
                model: Model::Skew,
                ambient: Ambient::square(n),
                edges: g.edges().to_vec(),
                cells: None,
                vertex_convention: None,
                independent: false,
                certificate: None,
                prefilter,
                stats: DecisionStats {
                    nodes_explored: 0,
                    time_ms: Some(start.elapsed().as_millis() as u64),
                },
            });
        }
    }
    let outcome = search_trail_free_order(&g);
    Ok(Decision {
        model: Model::Skew,
        ambient: Ambient::square(n),
        edges: g.edges().to_vec(),
        cells: None,
        vertex_convention: None,
        independent: outcome.order.is_some(),
        certificate: outcome.order.map(|o| o.sequence()),
        prefilter,
        stats: DecisionStats {
            nodes_explored: outcome.nodes_explored,
            time_ms: Some(start.elapsed().as_millis() as u64),
        },
    })
}

/// The tree-metric matroid coincides with the skew matroid, so this delegates
/// and only retags the model.
pub fn decide_tree_metric(
    n: usize,
    pairs: &[(usize, usize)],
    opts: DecideOptions,
) -> Result<Decision> {
    let mut d = decide_skew(n, pairs, opts)?;
    d.model = Model::TreeMetric;
    Ok(d)
}

/// Maps rectangular cells into pairs on [m + n] per
/// [`RECT_VERTEX_CONVENTION`], rejecting out-of-range and duplicate cells.
pub fn translate_rect(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    for &(i, j) in cells {
        if i < 1 || i > m || j < 1 || j > n {
            return Err(Error::CellOutOfRange(i, j, m, n));
        }
        if !seen.insert((i, j)) {
            return Err(Error::DuplicateCell(i, j));
        }
    }
    let mut pairs: Vec<(usize, usize)> = seen.into_iter().map(|(i, j)| (j, n + i)).collect();
    pairs.sort_unstable();
    Ok(pairs)
}

pub fn decide_rect(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
    opts: DecideOptions,
) -> Result<Decision> {
    let pairs = translate_rect(m, n, cells)?;
    let mut d = decide_skew(m + n, &pairs, opts)?;
    d.model = Model::Rect;
    d.ambient = Ambient::rect(m, n);
    let mut sorted_cells = cells.to_vec();
    sorted_cells.sort_unstable();
    d.cells = Some(sorted_cells);
    d.vertex_convention = Some(RECT_VERTEX_CONVENTION.to_string());
    Ok(d)
}

/// Certificate check: the orientation of G(S) along σ must have no
/// alternating closed trail, i.e. its trail graph must be a forest.
pub fn verify_certificate(n: usize, pairs: &[(usize, usize)], order: &VertexOrder) -> Result<bool> {
    let g = PatternGraph::new(n, pairs.iter().copied())?;
    let d = orient(&g, order)?;
    Ok(!has_alternating_closed_trail(&d))
}

/// Matroid rank as the maximum linear rank of the pattern's path-matrix
/// columns over all binary topologies; capped because the topology count
/// grows as (2n-5)!!.
pub fn matroid_rank(n: usize, pairs: &[(usize, usize)], cap: usize) -> Result<usize> {
    let g = PatternGraph::new(n, pairs.iter().copied())?;
    if n <= 2 {
        return Ok(g.edge_count());
    }
    if n > cap {
        return Err(Error::CapExceeded(n, cap));
    }
    let cols: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(i, j)| pair_position(n, i, j))
        .collect();
    let target = g.edge_count().min(2 * n - 3);
    let mut best = 0;
    if best == target {
        return Ok(best);
    }
    for t in enumerate_binary_trees(n)? {
        let pm = path_matrix(&t);
        let rows = pm.submatrix_rows_i64(&cols);
        best = best.max(rank_int_rows(&rows));
        if best == target {
            break;
        }
    }
    Ok(best)
}

/// Rank of a rectangular pattern via the bipartite translation.
pub fn matroid_rank_rect(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
    cap: usize,
) -> Result<usize> {
    let pairs = translate_rect(m, n, cells)?;
    matroid_rank(m + n, &pairs, cap)
}
