//! Row reduction, rank, full-rank factorization, inverse, Cholesky.
//!
//! Pivot admission is kernel-specific: exact nonzero on rationals, a
//! scale-relative cutoff on binary64 (see [`Scalar::pivot_cutoff`]).

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Rank data plus a full-rank factorization `a = left * right`, where
/// `left` is the pivot columns of `a` (rows x rank) and `right` holds the
/// pivot rows of the reduced echelon form (rank x cols).
#[derive(Debug, Clone)]
pub struct RankProfile<T: Scalar> {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// `None` exactly when the rank is zero.
    pub factors: Option<(Matrix<T>, Matrix<T>)>,
}

/// Reduced row echelon form with partial pivoting.
///
/// Returns the reduced matrix and the pivot column indices. On the float
/// kernel a column is skipped when its best candidate is below the cutoff
/// derived from the working block's largest magnitude.
pub fn reduced_echelon<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let (m, n) = a.shape();
    let mut w: Vec<Vec<T>> = (0..m).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;

    for j in 0..n {
        if r == m {
            break;
        }
        // Cutoff from the largest magnitude in the remaining block.
        let mut block_max = T::zero();
        for row in w.iter().take(m).skip(r) {
            for v in row.iter().take(n).skip(j) {
                let abs = v.abs();
                if abs > block_max {
                    block_max = abs;
                }
            }
        }
        if block_max.is_zero() {
            break;
        }
        let cutoff = T::pivot_cutoff(&block_max);

        let mut best = r;
        for i in (r + 1)..m {
            if w[i][j].abs() > w[best][j].abs() {
                best = i;
            }
        }
        let lead = w[best][j].abs();
        if lead.is_zero() || lead <= cutoff {
            continue;
        }
        w.swap(r, best);

        let inv = T::one() / w[r][j].clone();
        for v in w[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        w[r][j] = T::one();

        for i in 0..m {
            if i == r || w[i][j].is_zero() {
                continue;
            }
            let factor = w[i][j].clone();
            for jj in 0..n {
                let delta = factor.clone() * w[r][jj].clone();
                w[i][jj] = w[i][jj].clone() - delta;
            }
            w[i][j] = T::zero();
        }

        pivots.push(j);
        r += 1;
    }

    let reduced = Matrix::from_rows(w).expect("shape preserved");
    (reduced, pivots)
}

impl<T: Scalar> Matrix<T> {
    /// Rank, pivot columns, and the factorization `self = left * right`.
    pub fn rank_profile(&self) -> RankProfile<T> {
        let (rref, pivot_cols) = reduced_echelon(self);
        let rank = pivot_cols.len();
        let factors = if rank == 0 {
            None
        } else {
            let all_rows: Vec<usize> = (0..self.rows()).collect();
            let left = self
                .select(&all_rows, &pivot_cols)
                .expect("pivot columns in range");
            let kept: Vec<usize> = (0..rank).collect();
            let all_cols: Vec<usize> = (0..self.cols()).collect();
            let right = rref.select(&kept, &all_cols).expect("pivot rows in range");
            Some((left, right))
        };
        RankProfile {
            rank,
            pivot_cols,
            factors,
        }
    }

    pub fn rank(&self) -> usize {
        reduced_echelon(self).1.len()
    }

    /// Classical inverse by Gauss-Jordan elimination on `[self | I]`.
    pub fn inverse(&self) -> Result<Matrix<T>, Error> {
        let (m, n) = self.shape();
        if m != n {
            return Err(Error::NotSquare { rows: m, cols: n });
        }
        let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (rref, pivots) = reduced_echelon(&augmented);
        let leading: Vec<usize> = pivots.iter().copied().filter(|&j| j < n).collect();
        if leading.len() < n {
            return Err(Error::Singular {
                rank: leading.len(),
                size: n,
            });
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        rref.select(&rows, &cols)
    }
}

impl Matrix<f64> {
    /// Lower-triangular Cholesky factor `l` with `l * lᵀ = self`.
    pub fn cholesky(&self) -> Result<Matrix<f64>, Error> {
        let (m, n) = self.shape();
        if m != n {
            return Err(Error::NotSquare { rows: m, cols: n });
        }
        let mut l = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let mut s = *self.at(i, j);
                for k in 0..j {
                    s -= l[i][k] * l[j][k];
                }
                if i == j {
                    if s <= 0.0 {
                        return Err(Error::NotPositiveDefinite { row: i });
                    }
                    l[i][j] = s.sqrt();
                } else {
                    l[i][j] = s / l[j][j];
                }
            }
        }
        Matrix::from_rows(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn rat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_ints(rows)
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z: Matrix<Rational> = Matrix::zeros(3, 3);
        let p = z.rank_profile();
        assert_eq!(p.rank, 0);
        assert!(p.factors.is_none());
    }

    #[test]
    fn full_rank_two_by_two() {
        // determinant -4, so rank 2
        let a = rat(&[&[1, 1], &[3, -1]]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn rank_one_factorization() {
        let a = rat(&[&[1, -1], &[-1, 1]]);
        let p = a.rank_profile();
        assert_eq!(p.rank, 1);
        let (f, g) = p.factors.unwrap();
        assert_eq!(f, rat(&[&[1], &[-1]]));
        assert_eq!(g, rat(&[&[1, -1]]));
        assert_eq!(f.mul(&g).unwrap(), a);
    }

    #[test]
    fn factorization_reproduces_input_exactly() {
        let a = rat(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4]]);
        let p = a.rank_profile();
        let (f, g) = p.factors.unwrap();
        assert_eq!(f.mul(&g).unwrap(), a);
        assert_eq!(p.rank, a.transpose().rank());
    }

    #[test]
    fn inverse_of_gram_two() {
        let k = rat(&[&[2, 1], &[1, 2]]);
        let expected = Matrix::from_rows(vec![
            vec![Rational::from_ratio(2, 3), Rational::from_ratio(-1, 3)],
            vec![Rational::from_ratio(-1, 3), Rational::from_ratio(2, 3)],
        ])
        .unwrap();
        assert_eq!(k.inverse().unwrap(), expected);
    }

    #[test]
    fn inverse_of_identity() {
        let id: Matrix<Rational> = Matrix::identity(4);
        assert_eq!(id.inverse().unwrap(), id);
    }

    /// Adjugate-over-determinant inverse for 2x2, used as an independent
    /// check on the elimination path.
    fn inverse_adjugate_2x2(a: &Matrix<Rational>) -> Matrix<Rational> {
        let det = a.at(0, 0).clone() * a.at(1, 1).clone()
            - a.at(0, 1).clone() * a.at(1, 0).clone();
        assert!(!num_traits::Zero::is_zero(&det));
        Matrix::from_rows(vec![
            vec![a.at(1, 1).clone() / det.clone(), -a.at(0, 1).clone() / det.clone()],
            vec![-a.at(1, 0).clone() / det.clone(), a.at(0, 0).clone() / det],
        ])
        .unwrap()
    }

    #[test]
    fn inverse_matches_adjugate() {
        let a = rat(&[&[1, 1], &[3, -1]]);
        assert_eq!(a.inverse().unwrap(), inverse_adjugate_2x2(&a));
        assert_eq!(
            a.mul(&a.inverse().unwrap()).unwrap(),
            Matrix::identity(2)
        );
    }

    #[test]
    fn singular_inverse_reports_rank() {
        let a = rat(&[&[1, -1], &[-1, 1]]);
        assert_eq!(
            a.inverse(),
            Err(Error::Singular { rank: 1, size: 2 })
        );
    }

    #[test]
    fn float_rank_uses_cutoff() {
        let a = Matrix::from_vec(2, 2, vec![1.0, 1.0, 1.0, 1.0 + 1e-14]).unwrap();
        // The residual after elimination is far below the relative cutoff.
        assert_eq!(a.rank(), 1);
        let b = Matrix::from_vec(2, 2, vec![1.0, 1.0, 1.0, 2.0]).unwrap();
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn cholesky_of_gram_three() {
        let k = Matrix::from_vec(3, 3, vec![2.0, 1.0, 1.0, 1.0, 2.0, 1.0, 1.0, 1.0, 2.0]).unwrap();
        let l = k.cholesky().unwrap();
        let prod = l.mul(&l.transpose()).unwrap();
        assert!(prod.approx_eq(&k, 1e-12));
        // lower triangular
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_eq!(*l.at(i, j), 0.0);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Matrix::from_vec(2, 2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!(matches!(
            a.cholesky(),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn float_inverse_matches_rational() {
        let a = rat(&[&[3, 1, 2], &[1, 4, 1], &[2, 1, 5]]);
        let exact = a.inverse().unwrap().to_float();
        let approx = a.to_float().inverse().unwrap();
        assert!(exact.approx_eq(&approx, 1e-12));
    }
}
