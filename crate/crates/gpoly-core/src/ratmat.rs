//! Exact rational matrices: rank, kernel dimension and kernel bases.
//!
//! Ranks run through fraction-free (Bareiss) elimination on integer-cleared
//! rows to keep intermediate entries small; kernel bases come from a reduced
//! row echelon form over the rationals. No floating point anywhere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used throughout the geometric layer.
pub type Coord = BigRational;

/// A dense matrix with exact rational entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coord>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Coord::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Coord>>) -> Self {
        let c = rows.first().map_or(0, Vec::len);
        Self::from_rows_cols(rows, c)
    }

    /// Like [`RationalMatrix::from_rows`] but with an explicit column count,
    /// so a matrix with zero rows keeps its width.
    pub fn from_rows_cols(rows: Vec<Vec<Coord>>, cols: usize) -> Self {
        assert!(rows.iter().all(|row| row.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coord {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Coord) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Coord] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Coord]) -> Vec<Coord> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Coord::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rank by fraction-free Gaussian elimination on integer-cleared rows.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| clear_denominators(self.row(r)))
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot = (r..self.rows).find(|&i| !m[i][c].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    m[i][j] = num / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Dimension of the null space, `cols - rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the null space, one vector per free column of the reduced
    /// echelon form. Deterministic given the entries.
    pub fn kernel_basis(&self) -> Vec<Vec<Coord>> {
        let mut rows: Vec<Vec<Coord>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let (_, pivots) = rref(&mut rows);
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for fc in 0..self.cols {
            if is_pivot[fc] {
                continue;
            }
            let mut v = vec![Coord::zero(); self.cols];
            v[fc] = Coord::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][fc].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} x {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scales a rational row into integers by the least common multiple of the
/// denominators.
fn clear_denominators(row: &[Coord]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| {
            let scaled = x * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.denom().is_one());
            scaled.to_integer()
        })
        .collect()
}

/// In-place reduced row echelon form; returns the rank and pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Coord>]) -> (usize, Vec<usize>) {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    let delta = &factor * pv;
                    *x = &*x - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// Whether every entry is zero.
pub fn is_zero_vec(v: &[Coord]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Helper for building exact rational scalars from integers.
pub fn ratio(num: i64, den: i64) -> Coord {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Coord {
        Coord::from_integer(BigInt::from(x))
    }

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_dim_fixtures() {
        // A 0 x n matrix has full kernel.
        assert_eq!(RationalMatrix::zeros(0, 5).kernel_dim(), 5);
        assert_eq!(mat(&[&[1, 0], &[0, 1]]).kernel_dim(), 0);
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).kernel_dim(), 1);
    }

    #[test]
    fn rank_with_rational_entries() {
        let m = RationalMatrix::from_rows(alloc::vec![
            alloc::vec![ratio(1, 2), ratio(1, 3)],
            alloc::vec![ratio(1, 5), ratio(1, 1)],
        ]);
        assert_eq!(m.rank(), 2);
        // Proportional rows collapse the rank: (3/2, 1) = 3 * (1/2, 1/3).
        let singular = RationalMatrix::from_rows(alloc::vec![
            alloc::vec![ratio(1, 2), ratio(1, 3)],
            alloc::vec![ratio(3, 2), ratio(1, 1)],
            alloc::vec![ratio(1, 5), ratio(1, 1)],
        ]);
        assert_eq!(singular.rank(), 2);
    }

    #[test]
    fn kernel_basis_annihilates() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), m.kernel_dim());
        for v in &basis {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn kernel_basis_matches_kernel_dim_on_wide_matrix() {
        let m = mat(&[&[1, -1, 0, 0], &[0, 1, -1, 0]]);
        assert_eq!(m.kernel_dim(), 2);
        assert_eq!(m.kernel_basis().len(), 2);
    }

    #[test]
    fn display_is_exact() {
        let m = RationalMatrix::from_rows(alloc::vec![alloc::vec![ratio(-1, 2), int(3)]]);
        let text = alloc::format!("{}", m);
        assert!(text.contains("-1/2"));
        assert!(text.contains('3'));
    }
}
