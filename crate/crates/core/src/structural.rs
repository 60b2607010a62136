//! The structural matrices behind the zero-sum representation.
//!
//! `J_m = [I_m | -1]` embeds an m-vector of free coordinates into an
//! (m+1)-vector with zero sum; widening `J_m` with zero columns models
//! members whose rows or columns are identically zero. The Gram matrix
//! `K_m = J_m J_mᵀ` (2 on the diagonal, 1 elsewhere) and its closed-form
//! inverse drive every pseudoinverse formula downstream.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A `J`-type operator: base dimension `m`, optional zero-column
/// insertions, and the realized `m x (m + 1 + |insertions|)` matrix.
///
/// Insertion positions are 1-based in the widened matrix. The `-1` column
/// occupies the last non-inserted position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralOperator<T: Scalar> {
    base: usize,
    insertions: Vec<usize>,
    matrix: Matrix<T>,
}

impl<T: Scalar> StructuralOperator<T> {
    /// Plain `J_m = [I_m | -1]`.
    pub fn plain(base: usize) -> Result<Self, Error> {
        Self::with_insertions(base, &[])
    }

    /// `J_m` widened with zero columns at the given 1-based positions.
    pub fn with_insertions(base: usize, insertions: &[usize]) -> Result<Self, Error> {
        if base == 0 {
            return Err(Error::ZeroBase);
        }
        let width = base + 1 + insertions.len();
        let mut sorted = insertions.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateInsertion(pair[0]));
            }
        }
        if let Some(&bad) = sorted.iter().find(|&&p| p == 0 || p > width) {
            return Err(Error::InsertionOutOfRange {
                position: bad,
                width,
            });
        }

        // Non-inserted positions carry the identity columns, then the -1
        // column in the last free slot.
        let mut column_role = vec![None; width]; // None = zero column
        let mut free: Vec<usize> = (1..=width)
            .filter(|p| !sorted.contains(p))
            .collect();
        let minus_one_pos = free.pop().expect("base >= 1 leaves a free position");
        for (i, p) in free.iter().enumerate() {
            column_role[p - 1] = Some(i);
        }

        let matrix = Matrix::from_fn(base, width, |i, j| {
            if j == minus_one_pos - 1 {
                -T::one()
            } else {
                match column_role[j] {
                    Some(col) if col == i => T::one(),
                    _ => T::zero(),
                }
            }
        });

        Ok(Self {
            base,
            insertions: sorted,
            matrix,
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// 1-based positions of the inserted zero columns, sorted.
    pub fn insertions(&self) -> &[usize] {
        &self.insertions
    }

    /// Width of the realized matrix: base + 1 + number of insertions.
    pub fn width(&self) -> usize {
        self.base + 1 + self.insertions.len()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// The Gram matrix of this operator; always equals `gram(base)`
    /// regardless of insertions.
    pub fn gram(&self) -> Matrix<T> {
        gram(self.base)
    }

    /// Positions (1-based) that survive compression: the non-inserted
    /// columns except the last one, which carries the dependent data.
    pub fn kept_positions(&self) -> Vec<usize> {
        let mut free: Vec<usize> = (1..=self.width())
            .filter(|p| !self.insertions.contains(p))
            .collect();
        free.pop();
        free
    }
}

use num_traits::One;

/// `K_m`: 2 on the diagonal, 1 elsewhere.
pub fn gram<T: Scalar>(m: usize) -> Matrix<T> {
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            T::from_int(2)
        } else {
            T::one()
        }
    })
}

/// `K_m^{-1}` by its closed form: `m/(m+1)` on the diagonal, `-1/(m+1)`
/// elsewhere. Exact on the rational kernel at every size.
pub fn gram_inverse<T: Scalar>(m: usize) -> Matrix<T> {
    let d = (m + 1) as i64;
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            T::from_ratio(m as i64, d)
        } else {
            T::from_ratio(-1, d)
        }
    })
}

/// `K_m` together with its closed-form inverse.
#[derive(Debug, Clone)]
pub struct GramPair<T: Scalar> {
    pub gram: Matrix<T>,
    pub inverse: Matrix<T>,
}

pub fn make_gram<T: Scalar>(m: usize) -> GramPair<T> {
    GramPair {
        gram: gram(m),
        inverse: gram_inverse(m),
    }
}

/// Lower-triangular factor `k` with `k kᵀ = K_m`, binary64 only: the
/// equation has no rational solution (already at m = 1, since 2 is not a
/// rational square).
pub fn gram_cholesky(m: usize) -> Matrix<f64> {
    gram::<f64>(m)
        .cholesky()
        .expect("gram matrices are positive definite")
}

/// The multiplicative identity of the zero-sum ring on (n+1)x(n+1)
/// matrices: `I - 1/(n+1) * ones`. Distinct from the ordinary identity
/// matrix, which is not a member.
pub fn ring_identity<T: Scalar>(n_plus_1: usize) -> Matrix<T> {
    assert!(n_plus_1 >= 2, "ring identity needs size at least 2");
    let d = n_plus_1 as i64;
    Matrix::from_fn(n_plus_1, n_plus_1, |i, j| {
        if i == j {
            T::from_ratio(d - 1, d)
        } else {
            T::from_ratio(-1, d)
        }
    })
}
