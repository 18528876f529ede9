//! Corner-sum transforms and the derived partial-sum maps.

use crate::array::{CornerSumArray, CornerSumMatrix, Hypermatrix, Matrix};
use crate::error::{Error, Result};

/// `Sigma(A)`: entry `(i, j)` is the sum of `A` over the top-left `i x j` block.
pub fn sigma(m: &Matrix) -> CornerSumMatrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut c = CornerSumMatrix::zeros(rows, cols);
    for i in 1..=rows {
        for j in 1..=cols {
            let v = m.get(i, j) + c.get(i - 1, j) + c.get(i, j - 1) - c.get(i - 1, j - 1);
            c.set(i, j, v);
        }
    }
    c
}

/// Inverse of [`sigma`]: `A_{ij} = C_{ij} - C_{i-1,j} - C_{i,j-1} + C_{i-1,j-1}`.
pub fn sigma_inverse(c: &CornerSumMatrix) -> Result<Matrix> {
    let (rows, cols) = (c.rows(), c.cols());
    if (0..=cols).any(|j| c.get(0, j) != 0) || (0..=rows).any(|i| c.get(i, 0) != 0) {
        return Err(Error::Dimension("row 0 and column 0 of a corner-sum grid must be zero".into()));
    }
    Ok(Matrix::from_fn(rows, cols, |i, j| {
        c.get(i, j) - c.get(i - 1, j) - c.get(i, j - 1) + c.get(i - 1, j - 1)
    }))
}

/// `Xi(A)`: entry `(i, j, k)` is the sum of `A` over `[1, i] x [1, j] x [1, k]`.
/// The planes with some index 0 are zero.
pub fn xi(a: &Hypermatrix) -> CornerSumArray {
    let n = a.order();
    let mut c = CornerSumArray::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let v = a.get(i, j, k)
                    + c.get(i - 1, j, k)
                    + c.get(i, j - 1, k)
                    + c.get(i, j, k - 1)
                    - c.get(i - 1, j - 1, k)
                    - c.get(i - 1, j, k - 1)
                    - c.get(i, j - 1, k - 1)
                    + c.get(i - 1, j - 1, k - 1);
                c.set(i, j, k, v);
            }
        }
    }
    c
}

/// Inverse of [`xi`] by the eight-term alternating difference.
pub fn xi_inverse(c: &CornerSumArray) -> Result<Hypermatrix> {
    let n = c.order();
    for a in 0..=n {
        for b in 0..=n {
            if c.get(0, a, b) != 0 || c.get(a, 0, b) != 0 || c.get(a, b, 0) != 0 {
                return Err(Error::Dimension("planes with index 0 must be zero".into()));
            }
        }
    }
    Ok(Hypermatrix::from_fn(n, |i, j, k| xi_inverse_entry(c, i, j, k)))
}

#[inline]
pub(crate) fn xi_inverse_entry(c: &CornerSumArray, i: usize, j: usize, k: usize) -> i32 {
    c.get(i, j, k) - c.get(i - 1, j, k) - c.get(i, j - 1, k) - c.get(i, j, k - 1)
        + c.get(i - 1, j - 1, k)
        + c.get(i - 1, j, k - 1)
        + c.get(i, j - 1, k - 1)
        - c.get(i - 1, j - 1, k - 1)
}

/// `P(A)_{i,j,k} = sum over a <= i, b <= k of A_{a,j,b}`.
pub fn partial_sum_hypermatrix(a: &Hypermatrix) -> Hypermatrix {
    let n = a.order();
    let mut p = Hypermatrix::zeros(n);
    for j in 1..=n {
        for i in 1..=n {
            for k in 1..=n {
                let mut v = a.get(i, j, k);
                if i > 1 {
                    v += p.get(i - 1, j, k);
                }
                if k > 1 {
                    v += p.get(i, j, k - 1);
                }
                if i > 1 && k > 1 {
                    v -= p.get(i - 1, j, k - 1);
                }
                p.set(i, j, k, v);
            }
        }
    }
    p
}

/// The Latin-like square `L(A)`: entry `(i, j)` is `sum_k k * A_{ijk}`.
pub fn latin_like_square(a: &Hypermatrix) -> Matrix {
    let n = a.order();
    Matrix::from_fn(n, n, |i, j| (1..=n).map(|k| k as i32 * a.get(i, j, k)).sum())
}

/// Sum of the horizontal planes `k = 1..=n` of a corner-sum array, restricted to `1 <= i, j <= n`.
pub fn plane_sum(c: &CornerSumArray) -> Matrix {
    let n = c.order();
    Matrix::from_fn(n, n, |i, j| (1..=n).map(|k| c.get(i, j, k)).sum())
}

/// Drops row 0 and column 0 of a corner-sum grid.
pub fn corner_interior(c: &CornerSumMatrix) -> Matrix {
    Matrix::from_fn(c.rows(), c.cols(), |i, j| c.get(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_of_rectangular_matrix() {
        let m = Matrix::from_rows(&[vec![1, 0, 2], vec![0, 3, 0]]).unwrap();
        let c = sigma(&m);
        assert_eq!(c.to_rows(), vec![vec![0, 0, 0, 0], vec![0, 1, 1, 3], vec![0, 1, 4, 6]]);
        assert_eq!(sigma_inverse(&c).unwrap(), m);
    }

    #[test]
    fn sigma_inverse_rejects_nonzero_border() {
        let c = CornerSumMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(sigma_inverse(&c).is_err());
    }

    #[test]
    fn xi_of_single_entry_fills_upper_orthant() {
        let mut a = Hypermatrix::zeros(3);
        a.set(2, 2, 2, 1);
        let c = xi(&a);
        for i in 0..=3 {
            for j in 0..=3 {
                for k in 0..=3 {
                    assert_eq!(c.get(i, j, k), i32::from(i >= 2 && j >= 2 && k >= 2));
                }
            }
        }
        assert_eq!(xi_inverse(&c).unwrap(), a);
    }

    #[test]
    fn latin_like_square_of_permutation_hypermatrix() {
        let a = Hypermatrix::from_fn(2, |i, j, k| i32::from((i + j) % 2 + 1 == k));
        assert_eq!(latin_like_square(&a).to_rows(), vec![vec![1, 2], vec![2, 1]]);
    }
}
