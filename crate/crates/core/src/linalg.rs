//! Exact rational linear algebra for the recurrence-fitting systems.
//!
//! Only two things are needed: a right-nullspace computation over `Q`
//! (Gauss-Jordan elimination, choosing the nonzero pivot of smallest bit
//! length to keep intermediate entries small) and a helper that scales a
//! rational vector to a primitive integer one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<BigRational>>,
    cols: usize,
}

impl RatMatrix {
    /// Build from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all matrix rows must have equal length"
        );
        RatMatrix { rows, cols }
    }

    /// Build from integer entries (convenient for tests and fitting systems).
    pub fn from_int_rows(rows: Vec<Vec<BigInt>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigRational {
        &self.rows[r][c]
    }

    /// Basis of the right nullspace `{ v : M v = 0 }`, one vector per free
    /// column of the reduced echelon form.  Empty exactly when the matrix has
    /// full column rank.  The basis is deterministic: free columns are taken
    /// in ascending order and each vector has a `1` in its free position.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.rows.clone();
        let nr = m.len();
        let nc = self.cols;
        let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; nc];
        let mut next_row = 0;

        for col in 0..nc {
            if next_row == nr {
                break;
            }
            // Pivot on the nonzero entry of smallest bit length to keep the
            // rationals from blowing up mid-elimination.
            let mut best: Option<(usize, u64)> = None;
            for (r, row) in m.iter().enumerate().skip(next_row) {
                if !row[col].is_zero() {
                    let size = bit_size(&row[col]);
                    if best.is_none_or(|(_, b)| size < b) {
                        best = Some((r, size));
                    }
                }
            }
            let Some((pr, _)) = best else { continue };
            m.swap(next_row, pr);

            let inv = m[next_row][col].clone().recip();
            for x in &mut m[next_row] {
                *x = &*x * &inv;
            }
            let pivot_row = m[next_row].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == next_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for c in col..nc {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
            pivot_row_of_col[col] = Some(next_row);
            next_row += 1;
        }

        let mut basis = Vec::new();
        for f in 0..nc {
            if pivot_row_of_col[f].is_some() {
                continue;
            }
            let mut v = vec![BigRational::zero(); nc];
            v[f] = BigRational::one();
            for c in 0..nc {
                if let Some(r) = pivot_row_of_col[c] {
                    v[c] = -m[r][f].clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Total bit length of a rational (numerator plus denominator magnitude).
pub(crate) fn bit_size(q: &BigRational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// Scale a rational vector to a primitive integer vector: multiply by the
/// least common denominator, then divide out the coefficient gcd.  The sign
/// is left as-is; callers canonicalize it for their own convention.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}
