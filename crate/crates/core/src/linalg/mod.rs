//! Exact arithmetic substrate: arbitrary-precision rationals, fraction-free
//! rank, affine solving, and rational linear feasibility.

mod feasibility;
mod modp;

pub use feasibility::feasible_nonneg;
pub use modp::{rank_mod_p, PrimeFieldScalar, PRIMES_50_TO_62_BITS};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows, which must all have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Matrix restricted to the given columns, in the given order.
    pub fn column_submatrix(&self, cols: &[usize]) -> Self {
        let mut s = Self::zero(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                *s.at_mut(i, k) = self.at(i, j).clone();
            }
        }
        s
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..=i).all(|j| *self.at(i, j) == -self.at(j, i).clone()))
    }

    /// Exact rank via fraction-free (Bareiss) elimination. Each row is scaled
    /// by the lcm of its denominators first; row scaling leaves rank intact.
    pub fn rank(&self) -> usize {
        let int_rows: Vec<Vec<BigInt>> = (0..self.rows).map(|i| clear_row(self.row(i))).collect();
        rank_int(int_rows)
    }
}

fn clear_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Exact rank of an integer matrix by single-step Bareiss elimination.
/// Intermediate entries stay minors of the input, bounding coefficient growth.
pub fn rank_int(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (pivot_slice, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_slice[rank];
        // Every row below gets the full cross-multiplication update, even
        // when its leading entry is already zero: the division by the
        // previous pivot is exact (Sylvester identity) only if all rows are
        // kept at the same scale.
        for below in rest.iter_mut() {
            for j in (col + 1)..ncols {
                let t = &pivot[col] * &below[j] - &below[col] * &pivot[j];
                below[j] = t / &prev;
            }
            below[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a small integer matrix, using machine arithmetic when the Bareiss
/// intermediates fit in i128 and falling back to big integers otherwise.
pub fn rank_int_rows(rows: &[Vec<i64>]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => rank_int(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ),
    }
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for i in (rank + 1)..nrows {
            for j in (col + 1)..ncols {
                let a = m[rank][col].checked_mul(m[i][j])?;
                let b = m[i][col].checked_mul(m[rank][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Inconsistent,
    Solution {
        /// One solution of `A x = b`.
        particular: Vec<Rational>,
        /// Basis of the kernel `{x : A x = 0}`.
        kernel: Vec<Vec<Rational>>,
    },
}

/// Solves `A x = b` over the rationals, returning one solution together with
/// a kernel basis, or reporting inconsistency. Inconsistency is a normal
/// return value, not an error.
pub fn solve_affine(a: &RationalMatrix, b: &[Rational]) -> Result<AffineSolution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let rows = a.rows();
    let cols = a.cols();

    // Reduced row echelon form of the augmented system [A | b].
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rational> = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][col].clone();
        for v in aug[r].iter_mut() {
            *v = &*v / &inv;
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (dst, src) in row.iter_mut().zip(&pivot_row).skip(col) {
                    let t = src * &f;
                    *dst -= t;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }

    if (r..rows).any(|i| !aug[i][cols].is_zero()) {
        return Ok(AffineSolution::Inconsistent);
    }

    let mut particular = vec![Rational::zero(); cols];
    for (k, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = aug[k][cols].clone();
    }

    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (k, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -aug[k][free].clone();
        }
        kernel.push(v);
    }

    Ok(AffineSolution::Solution { particular, kernel })
}
