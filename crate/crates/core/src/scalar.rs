//! The two scalar kernels: exact arbitrary-precision rationals and binary64.
//!
//! Everything in this crate is generic over [`Scalar`]. The rational kernel
//! is the reference: every algebraic identity can be asserted with `==`.
//! The float kernel trades exactness for speed and is the only kernel on
//! which Cholesky factors exist (`k kᵀ = K` has no rational solution).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::fmt;

use crate::error::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (maintained by `num-rational`).
pub type Rational = BigRational;

/// Scalar kernel shared by both matrix element types.
///
/// `Signed` pulls in the full ring/field operation set plus `abs`;
/// the methods here add what the kernels genuinely differ on.
pub trait Scalar:
    Signed + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// True for kernels where `==` is a mathematical statement.
    const EXACT: bool;

    /// Whether the value may enter a matrix (floats: finite only).
    fn admissible(&self) -> bool;

    fn from_int(v: i64) -> Self;

    /// `num/den`; panics on a zero denominator.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Smallest magnitude accepted as a pivot given the largest magnitude
    /// in the working block. Zero on the exact kernel; scale-relative on
    /// the float kernel.
    fn pivot_cutoff(block_max: &Self) -> Self;

    /// Largest magnitude a row/column sum may have while still counting
    /// as zero for membership, given the matrix max-norm. Zero on the
    /// exact kernel; `1e-12 * scale` on the float kernel.
    fn membership_cutoff(scale: &Self) -> Self;

    /// Lossy view for reports and display; exact for the float kernel.
    fn to_f64(&self) -> f64;

    /// Parses the document form of an entry: `p` or `p/q` on the rational
    /// kernel, any finite decimal on the float kernel.
    fn parse(text: &str) -> Result<Self, Error>;
}

/// Relative pivot threshold for the binary64 kernel.
pub const FLOAT_PIVOT_RELATIVE: f64 = 1e-10;

/// Relative zero-sum tolerance for membership checks on the binary64 kernel.
pub const FLOAT_MEMBERSHIP_RELATIVE: f64 = 1e-12;

impl Scalar for Rational {
    const EXACT: bool = true;

    fn admissible(&self) -> bool {
        true
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn pivot_cutoff(_block_max: &Self) -> Self {
        Rational::from_integer(BigInt::from(0))
    }

    fn membership_cutoff(_scale: &Self) -> Self {
        Rational::from_integer(BigInt::from(0))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse(text: &str) -> Result<Self, Error> {
        parse_rational(text)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn admissible(&self) -> bool {
        self.is_finite()
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn pivot_cutoff(block_max: &Self) -> Self {
        FLOAT_PIVOT_RELATIVE * block_max.abs()
    }

    fn membership_cutoff(scale: &Self) -> Self {
        FLOAT_MEMBERSHIP_RELATIVE * scale.abs()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let v: f64 = text
            .trim()
            .parse()
            .map_err(|_| Error::EntryParse(text.to_string()))?;
        if !v.is_finite() {
            return Err(Error::NotFinite(text.to_string()));
        }
        Ok(v)
    }
}

/// Parses `p` or `p/q` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    match text.split_once('/') {
        None => {
            let n: BigInt = text
                .parse()
                .map_err(|_| Error::EntryParse(text.to_string()))?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::EntryParse(text.to_string()))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::EntryParse(text.to_string()))?;
            if d == BigInt::from(0) {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn rational_entries_stay_reduced() {
        let half = Rational::from_ratio(2, 4);
        assert_eq!(half, Rational::from_ratio(1, 2));
        assert_eq!(half.to_string(), "1/2");
        let neg = Rational::from_ratio(1, -3);
        // lowest terms, positive denominator
        assert_eq!(neg.to_string(), "-1/3");
    }

    #[test]
    fn exact_addition() {
        let sum = Rational::from_ratio(1, 2) + Rational::from_ratio(1, 3);
        assert_eq!(sum, Rational::from_ratio(5, 6));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("7").unwrap(), Rational::from_int(7));
        assert_eq!(parse_rational("-3/9").unwrap(), Rational::from_ratio(-1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parse_float_rejects_non_finite() {
        assert!(<f64 as Scalar>::parse("inf").is_err());
        assert!(<f64 as Scalar>::parse("NaN").is_err());
        assert_eq!(<f64 as Scalar>::parse("0.5").unwrap(), 0.5);
    }

    #[test]
    fn pivot_cutoff_kernels() {
        assert!(Rational::pivot_cutoff(&Rational::from_int(100)).is_zero());
        assert_eq!(f64::pivot_cutoff(&100.0), 1e-8);
    }

    #[test]
    fn one_is_one() {
        assert!(Rational::one().is_one());
    }
}
