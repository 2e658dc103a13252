//! Independence of observation patterns in the algebraic matroids of rank-2
//! skew-symmetric matrices, rank-2 rectangular matrices, and tree metrics,
//! with verifiable certificates, a randomized algebraic cross-check, and
//! constructive completion of prescribed values to a tree metric.

pub mod complete;
pub mod decide;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod trees;

pub use complete::{complete, feasible_in_topology, CompleteOptions, CompleteOutcome, Completion};
pub use decide::{
    decide_rect, decide_skew, decide_tree_metric, matroid_rank, matroid_rank_rect, translate_rect,
    verify_certificate, Ambient, DecideOptions, Decision, DecisionStats, Model,
    RECT_VERTEX_CONVENTION,
};
pub use error::{Error, Result};
pub use graph::{PatternGraph, VertexOrder};
pub use linalg::{Rational, RationalMatrix};
pub use oracle::{
    jacobian, oracle_decide_rect, oracle_decide_skew, oracle_ranks_rect, oracle_ranks_skew,
    skew_embedding, skew_embedding_of_point, ParamPoint,
};
pub use trees::{
    cat_tree, count_cherries, enumerate_binary_trees, four_point_check, path_matrix, to_newick,
    to_newick_topology, tree_enum_oracle, tree_matroid_indep, tree_metric, DissimilarityMap,
    FourPointOutcome, PathMatrix, WeightedXTree, XTree,
};
