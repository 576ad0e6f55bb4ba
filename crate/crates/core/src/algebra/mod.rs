//! Exact coefficient arithmetic and the polynomial / matrix types built on it.
//!
//! Everything here works over the rationals. A small modular layer in
//! [`modp`] backs the randomized probes that only need "nonzero with high
//! probability" answers.

mod matrix;
pub mod modp;
mod multipoly;
mod polymatrix;
mod unipoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

pub use matrix::ScalarMatrix;
pub use multipoly::{Monomial, MultiPoly};
pub use polymatrix::{UniPolyMatrix, UnimodularReduction};
pub use unipoly::{column_primitive_part, gcd as unipoly_gcd, gcd_all, UniPoly};

/// Exact ground-field element. Always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("column is identically zero")]
    ZeroColumn,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// `num / den` as a reduced [`Scalar`]. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Uniform random integer scalar in `[-bound, bound]`.
pub fn random_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    int(rng.random_range(-bound..=bound))
}

/// Integral domains in which exact division can be attempted. This is the
/// surface the fraction-free elimination routines need.
pub trait ExactRing: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` when `rhs` does not divide.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl ExactRing for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Exact determinant of a square row-major matrix of multivariate
/// polynomials, by fraction-free elimination. Panics if `entries.len() != n * n`
/// or `n == 0`.
pub fn det_multipoly_matrix(n: usize, entries: &[MultiPoly]) -> MultiPoly {
    bareiss_det(n, entries)
}

/// Fraction-free (Bareiss) determinant of a square row-major grid.
///
/// Every division performed is exact in the ring; a failed division means the
/// ring arithmetic is broken, so it panics rather than returning garbage.
pub fn bareiss_det<T: ExactRing>(n: usize, entries: &[T]) -> T {
    assert_eq!(entries.len(), n * n, "bareiss_det expects an n x n grid");
    if n == 0 {
        panic!("bareiss_det on an empty matrix");
    }
    let mut a: Vec<T> = entries.to_vec();
    let mut negate = false;
    let mut prev: Option<T> = None;
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return a[0].zero_like();
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.mul(&a[i * n + j]).sub(&a[i * n + k].mul(&a[k * n + j]));
                a[i * n + j] = match &prev {
                    None => num,
                    Some(d) => num
                        .exact_div(d)
                        .expect("Bareiss step must divide exactly"),
                };
            }
            a[i * n + k] = a[0].zero_like();
        }
        prev = Some(pivot);
    }
    let det = a[n * n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
