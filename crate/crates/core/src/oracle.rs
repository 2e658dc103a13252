//! Randomized Jacobian-rank oracle. Independence of a pattern is equivalent
//! to the masking projection being dominant, i.e. to its Jacobian having full
//! row rank at a generic parameter point; evaluating at random integer points
//! modulo a random large prime yields a one-sided Monte Carlo test that is
//! entirely independent of the combinatorial machinery.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::linalg::{rank_mod_p, Rational, RationalMatrix, PRIMES_50_TO_62_BITS};

pub const ENTRY_BOUND: i64 = 1 << 20;

/// Integer parameter point for one of the two parametrizations: a generic
/// 2xN factor pair for skew patterns (entries x_ij = u_i v_j - u_j v_i) or an
/// m*2 x 2*n factorization for rectangular ones (x_ij = a_i1 b_1j + a_i2 b_2j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamPoint {
    Skew { u: Vec<i64>, v: Vec<i64> },
    Rect { left: Vec<[i64; 2]>, right: Vec<[i64; 2]> },
}

fn nonzero_entry(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let x = rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND);
        if x != 0 {
            return x;
        }
    }
}

impl ParamPoint {
    pub fn sample_skew(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let u = (0..n).map(|_| nonzero_entry(rng)).collect();
        let v = (0..n).map(|_| nonzero_entry(rng)).collect();
        ParamPoint::Skew { u, v }
    }

    pub fn sample_rect(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Self {
        let left = (0..m)
            .map(|_| [nonzero_entry(rng), nonzero_entry(rng)])
            .collect();
        let right = (0..n)
            .map(|_| [nonzero_entry(rng), nonzero_entry(rng)])
            .collect();
        ParamPoint::Rect { left, right }
    }
}

/// One Jacobian row per support element, evaluated at the point. Columns are
/// `(u_1..u_n, v_1..v_n)` for skew and `(a_11, a_12, .., a_m1, a_m2,
/// b_11, b_21, .., b_1n, b_2n)` for rect.
pub fn jacobian(point: &ParamPoint, support: &[(usize, usize)]) -> Result<Vec<Vec<i64>>> {
    match point {
        ParamPoint::Skew { u, v } => {
            let n = u.len();
            let mut rows = Vec::with_capacity(support.len());
            for &(i, j) in support {
                if i == j {
                    return Err(Error::LoopEdge(i));
                }
                if i < 1 || i > n || j < 1 || j > n {
                    return Err(Error::EdgeOutOfRange(i, j, n));
                }
                let (i, j) = (i.min(j), i.max(j));
                let mut row = vec![0i64; 2 * n];
                row[i - 1] = v[j - 1];
                row[j - 1] = -v[i - 1];
                row[n + i - 1] = -u[j - 1];
                row[n + j - 1] = u[i - 1];
                rows.push(row);
            }
            Ok(rows)
        }
        ParamPoint::Rect { left, right } => {
            let m = left.len();
            let n = right.len();
            let mut rows = Vec::with_capacity(support.len());
            for &(i, j) in support {
                if i < 1 || i > m || j < 1 || j > n {
                    return Err(Error::CellOutOfRange(i, j, m, n));
                }
                let mut row = vec![0i64; 2 * m + 2 * n];
                row[2 * (i - 1)] = right[j - 1][0];
                row[2 * (i - 1) + 1] = right[j - 1][1];
                row[2 * m + 2 * (j - 1)] = left[i - 1][0];
                row[2 * m + 2 * (j - 1) + 1] = left[i - 1][1];
                rows.push(row);
            }
            Ok(rows)
        }
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn skew_trial_rank(n: usize, pairs: &[(usize, usize)], seed: u64, trial: u64) -> Result<usize> {
    let mut rng = trial_rng(seed, trial);
    let point = ParamPoint::sample_skew(n, &mut rng);
    let prime = PRIMES_50_TO_62_BITS[rng.gen_range(0..PRIMES_50_TO_62_BITS.len())];
    Ok(rank_mod_p(&jacobian(&point, pairs)?, prime))
}

fn rect_trial_rank(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
    seed: u64,
    trial: u64,
) -> Result<usize> {
    let mut rng = trial_rng(seed, trial);
    let point = ParamPoint::sample_rect(m, n, &mut rng);
    let prime = PRIMES_50_TO_62_BITS[rng.gen_range(0..PRIMES_50_TO_62_BITS.len())];
    Ok(rank_mod_p(&jacobian(&point, cells)?, prime))
}

/// Jacobian rank observed at each of the seeded trial points.
pub fn oracle_ranks_skew(
    n: usize,
    pairs: &[(usize, usize)],
    trials: u64,
    seed: u64,
) -> Result<Vec<usize>> {
    PatternGraph::new(n, pairs.iter().copied())?;
    (0..trials)
        .map(|t| skew_trial_rank(n, pairs, seed, t))
        .collect()
}

pub fn oracle_ranks_rect(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
    trials: u64,
    seed: u64,
) -> Result<Vec<usize>> {
    crate::decide::translate_rect(m, n, cells)?;
    (0..trials)
        .map(|t| rect_trial_rank(m, n, cells, seed, t))
        .collect()
}

/// True iff some trial reaches full row rank |S|. Full rank at one
/// specialization witnesses generic full rank, so "independent" answers are
/// definitive; "dependent" answers carry one-sided error shrinking with the
/// trial count.
pub fn oracle_decide_skew(
    n: usize,
    pairs: &[(usize, usize)],
    trials: u64,
    seed: u64,
) -> Result<bool> {
    PatternGraph::new(n, pairs.iter().copied())?;
    for t in 0..trials {
        if skew_trial_rank(n, pairs, seed, t)? == pairs.len() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn oracle_decide_rect(
    m: usize,
    n: usize,
    cells: &[(usize, usize)],
    trials: u64,
    seed: u64,
) -> Result<bool> {
    crate::decide::translate_rect(m, n, cells)?;
    for t in 0..trials {
        if rect_trial_rank(m, n, cells, seed, t)? == cells.len() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The (m+n) x (m+n) matrix `B := (u1; v2^T)(u2^T, v1) - (u2; v1^T)(u1^T, v2)`
/// built from a factorization `A = u1 v1 - u2 v2`. B is skew-symmetric of
/// rank at most 2 and its upper-right m x n block is exactly A, which is what
/// lets rectangular patterns ride on the skew decision procedure.
pub fn skew_embedding(u1: &[i64], u2: &[i64], v1: &[i64], v2: &[i64]) -> Result<RationalMatrix> {
    let m = u1.len();
    let n = v1.len();
    if u2.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: u2.len(),
        });
    }
    if v2.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v2.len(),
        });
    }
    let k = m + n;
    // Column c and row d of the two rank-one factors; the second pair swaps
    // the roles, which is what makes B skew.
    let stack1: Vec<i128> = u1
        .iter()
        .map(|&x| x as i128)
        .chain(v2.iter().map(|&x| x as i128))
        .collect();
    let row1: Vec<i128> = u2
        .iter()
        .map(|&x| x as i128)
        .chain(v1.iter().map(|&x| x as i128))
        .collect();
    let mut b = RationalMatrix::zero(k, k);
    for r in 0..k {
        for c in 0..k {
            let val = stack1[r] * row1[c] - row1[r] * stack1[c];
            *b.at_mut(r, c) = Rational::from(BigInt::from(val));
        }
    }
    Ok(b)
}

/// `skew_embedding` applied to a rectangular parameter point, using the
/// factorization u1 = a_col1, u2 = -a_col2, v1 = b_row1, v2 = b_row2 so that
/// u1 v1 - u2 v2 recovers A = left * right.
pub fn skew_embedding_of_point(point: &ParamPoint) -> Result<RationalMatrix> {
    match point {
        ParamPoint::Skew { .. } => Err(Error::Internal(
            "skew_embedding expects a rectangular parameter point".into(),
        )),
        ParamPoint::Rect { left, right } => {
            let u1: Vec<i64> = left.iter().map(|a| a[0]).collect();
            let u2: Vec<i64> = left.iter().map(|a| -a[1]).collect();
            let v1: Vec<i64> = right.iter().map(|b| b[0]).collect();
            let v2: Vec<i64> = right.iter().map(|b| b[1]).collect();
            skew_embedding(&u1, &u2, &v1, &v2)
        }
    }
}
