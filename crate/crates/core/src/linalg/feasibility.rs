//! Exact linear feasibility: find x with A x = b and x_i >= 0 on a chosen
//! index set, by phase-one simplex over the rationals with Bland's rule.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};

/// Returns a witness x with `A x = b` and `x_j >= 0` for every j in
/// `nonneg`, or `None` when no such x exists. Free variables are split into
/// differences of nonnegative parts before the simplex phase.
pub fn feasible_nonneg(
    a: &RationalMatrix,
    b: &[Rational],
    nonneg: &BTreeSet<usize>,
) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    if let Some(&j) = nonneg.iter().find(|&&j| j >= a.cols()) {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            got: j,
        });
    }

    let m = a.rows();
    let n = a.cols();

    // Transformed variable j is (original column, sign).
    let mut var_map: Vec<(usize, bool)> = Vec::new();
    for j in 0..n {
        var_map.push((j, false));
        if !nonneg.contains(&j) {
            var_map.push((j, true));
        }
    }
    let nvars = var_map.len();
    let total = nvars + m; // plus one artificial per row

    // Tableau rows: [vars | artificials | rhs], rhs made nonnegative.
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); total + 1];
        let flip = b[i].is_negative();
        for (k, &(j, negated)) in var_map.iter().enumerate() {
            let mut v = a.at(i, j).clone();
            if negated {
                v = -v;
            }
            if flip {
                v = -v;
            }
            row[k] = v;
        }
        row[nvars + i] = Rational::one();
        row[total] = if flip { -b[i].clone() } else { b[i].clone() };
        tab.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| nvars + i).collect();

    loop {
        // Reduced cost of column j for the phase-one objective (sum of
        // artificials): c_j minus the artificial-basic rows' column sum.
        let reduced = |tab: &[Vec<Rational>], basis: &[usize], j: usize| -> Rational {
            let c_j = if j >= nvars {
                Rational::one()
            } else {
                Rational::zero()
            };
            let mut z = Rational::zero();
            for (i, &bv) in basis.iter().enumerate() {
                if bv >= nvars {
                    z += &tab[i][j];
                }
            }
            c_j - z
        };

        let entering = (0..total).find(|&j| reduced(&tab, &basis, j).is_negative());
        let Some(enter) = entering else {
            break;
        };

        // Bland's leaving rule: minimum ratio, ties by smallest basis index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][total] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        ratio < *cur || (ratio == *cur && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return Err(Error::Internal(
                "phase-one simplex reported an unbounded direction".into(),
            ));
        };

        let pivot = tab[leave][enter].clone();
        for v in tab[leave].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row = tab[leave].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != leave && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    let t = src * &f;
                    *dst -= t;
                }
            }
        }
        basis[leave] = enter;
    }

    let objective: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| bv >= nvars)
        .map(|(i, _)| tab[i][total].clone())
        .sum();
    if !objective.is_zero() {
        return Ok(None);
    }

    let mut transformed = vec![Rational::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            transformed[bv] = tab[i][total].clone();
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (k, &(j, negated)) in var_map.iter().enumerate() {
        if negated {
            x[j] -= &transformed[k];
        } else {
            x[j] += &transformed[k];
        }
    }
    Ok(Some(x))
}
