//! Frobenius' constructive equivalence test for matrices of linear forms.
//!
//! Given square matrices `A`, `B` of linearly independent linear forms whose
//! entries span the same space, decide whether `A = S * B * T` or
//! `A = S * B^t * T` for constant invertible `S`, `T`, and produce the pair.
//!
//! The algorithm works in the coordinates given by the entries of `B`: each
//! `a_ij` is written as a combination of the `b_kl`, treated as independent
//! variables `y_kl`.
//!
//! 1. For each `l`, the matrix `C^l` of coefficients of `y_ll` in the `a_ij`
//!    must have rank one, `C^l = p^l q^l`.
//! 2. `P = (p^l_i)` and `Q = (q^l_j)` must be invertible; then `A` restricted
//!    to the diagonal variables is `P * diag(y) * Q`.
//! 3. `B~ = P^-1 A Q^-1` agrees with `B` on the diagonal, and off the diagonal
//!    is either `K B K^-1` or `K B^t K^-1` for a diagonal `K`. `K` is read off
//!    from the ratios `b~_0i / b_0i` and the identity is then checked exactly.
//! 4. `S = P K`, `T = K^-1 Q`.
//!
//! `S` and `T` are unique up to `(lambda S, T / lambda)`; the returned pair is
//! normalized so the first nonzero entry of `S` is one.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{int, Scalar, ScalarMatrix};
use crate::linform::{LinFormMatrix, LinearForm};

/// Witness `A = S * B * T` (or `S * B^t * T` when `transposed`), with
/// `c = det(S) * det(T)` so that `det A = c * det B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceCertificate {
    pub s: ScalarMatrix,
    pub t: ScalarMatrix,
    pub transposed: bool,
    pub c: Scalar,
}

impl EquivalenceCertificate {
    /// Rescales to `(S / lambda, lambda * T)` where `lambda` is the first
    /// nonzero entry of `S` in row-major order.
    pub fn normalized(&self) -> Self {
        let lambda = self
            .s
            .entries()
            .iter()
            .find(|v| !v.is_zero())
            .cloned()
            .unwrap_or_else(Scalar::one);
        EquivalenceCertificate {
            s: self.s.scale(&lambda.recip()),
            t: self.t.scale(&lambda),
            transposed: self.transposed,
            c: self.c.clone(),
        }
    }

    /// The scalar `lambda` with `other = (lambda S, T / lambda)`, if any.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Scalar> {
        if self.transposed != other.transposed {
            return None;
        }
        let idx = self.s.entries().iter().position(|v| !v.is_zero())?;
        let lambda = &other.s.entries()[idx] / &self.s.entries()[idx];
        if lambda.is_zero() {
            return None;
        }
        (other.s == self.s.scale(&lambda) && other.t == self.t.scale(&lambda.recip())).then_some(lambda)
    }
}

/// Coordinates of each `a_ij` in the basis `{b_kl}`: `get(i, j, k, l)` is the
/// coefficient of `b_kl` in `a_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCoordinates {
    size: usize,
    values: Vec<Scalar>,
}

impl EntryCoordinates {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.size;
        &self.values[((i * n + j) * n + k) * n + l]
    }

    /// `A` rewritten as a matrix of linear forms in the `size^2` variables
    /// `y_kl` standing for the entries of `B`.
    pub fn as_matrix(&self) -> LinFormMatrix {
        let n2 = self.size * self.size;
        LinFormMatrix::new(
            self.size,
            n2,
            self.values.chunks(n2).map(|c| LinearForm::new(c.to_vec())).collect(),
        )
        .expect("consistent shape")
    }
}

/// Coefficients of the diagonal entry `b_ll` in every `a_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSlice {
    pub l: usize,
    pub matrix: ScalarMatrix,
}

/// The diagonal matrix `K = diag(k_0, .., k_r)` relating `B~` to `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalConjugator {
    k: Vec<Scalar>,
}

impl DiagonalConjugator {
    pub fn values(&self) -> &[Scalar] {
        &self.k
    }

    pub fn matrix(&self) -> ScalarMatrix {
        ScalarMatrix::diagonal(&self.k)
    }

    pub fn inverse_matrix(&self) -> ScalarMatrix {
        ScalarMatrix::diagonal(&self.k.iter().map(|v| v.recip()).collect::<Vec<_>>())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    P,
    Q,
}

/// Why no conjugation `B~ = K B K^-1` (or with `B^t`) exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugationFailure {
    /// `b~_ij` is not a nonzero multiple of the expected single entry.
    NotMonomial { i: usize, j: usize },
    /// The recovered `K` does not reproduce `B~`.
    Mismatch,
}

/// Concrete reason two matrices are not equivalent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `a_ij` is not a linear combination of the entries of `B`.
    NotInSpan { i: usize, j: usize },
    /// The coefficient slice of `b_ll` has rank other than one.
    SliceRank { l: usize, rank: usize },
    /// The assembled factor is singular.
    SingularFactor(Factor),
    /// `B~` differs from `B` on the diagonal entry `i`.
    DiagonalMismatch { i: usize },
    /// Neither conjugation branch fits `B~`.
    NoConjugation { plain: ConjugationFailure, transposed: ConjugationFailure },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::NotInSpan { i, j } => write!(f, "entry ({i},{j}) of A is outside the span of the entries of B"),
            Witness::SliceRank { l, rank } => write!(f, "coefficient slice {l} has rank {rank}, expected 1"),
            Witness::SingularFactor(Factor::P) => write!(f, "column factor P is singular"),
            Witness::SingularFactor(Factor::Q) => write!(f, "row factor Q is singular"),
            Witness::DiagonalMismatch { i } => write!(f, "P^-1 A Q^-1 differs from B at diagonal entry {i}"),
            Witness::NoConjugation { plain, transposed } => {
                write!(f, "no diagonal conjugation fits (plain: {plain:?}; transposed: {transposed:?})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("matrices must be square of the same size and ambient dimension")]
    ShapeMismatch,
    #[error("entries of {0:?} are not linearly independent")]
    DependentEntries(Side),
    #[error("not equivalent: {0}")]
    NotEquivalent(Witness),
    /// Both `A = S B T` and `A = S B^t T` verified. Impossible for
    /// independent entries and `r >= 1`; reported as an internal error.
    #[error("internal error: both plain and transposed branches verified")]
    BothBranchesSucceed {
        plain: Box<EquivalenceCertificate>,
        transposed: Box<EquivalenceCertificate>,
    },
    #[error("internal error: constructed certificate failed verification")]
    VerificationFailed,
}

/// Matrix that is not of rank one; `rank` is its actual rank.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix has rank {rank}, expected 1")]
pub struct RankNotOne {
    pub rank: usize,
}

/// Coordinates of the entries of `a` in the basis formed by the entries of `b`.
pub fn express_in_entry_basis(a: &LinFormMatrix, b: &LinFormMatrix) -> Result<EntryCoordinates, FrobeniusError> {
    if a.size() != b.size() || a.ambient() != b.ambient() {
        return Err(FrobeniusError::ShapeMismatch);
    }
    if !b.entry_independence_check() {
        return Err(FrobeniusError::DependentEntries(Side::B));
    }
    let n2 = b.size() * b.size();
    let g = b.ambient();
    // [ B^t | a_00 a_01 ... ] : g x (2 n^2)
    let mut aug = ScalarMatrix::zeros(g, 2 * n2);
    for (col, form) in b.entries().iter().chain(a.entries()).enumerate() {
        for (row, c) in form.coeffs().iter().enumerate() {
            aug[(row, col)] = c.clone();
        }
    }
    let (rref, _) = aug.rref();
    let mut values = Vec::with_capacity(n2 * n2);
    for e in 0..n2 {
        let col = n2 + e;
        if (n2..g).any(|row| !rref[(row, col)].is_zero()) {
            return Err(FrobeniusError::NotEquivalent(Witness::NotInSpan { i: e / b.size(), j: e % b.size() }));
        }
        values.extend((0..n2).map(|row| rref[(row, col)].clone()));
    }
    Ok(EntryCoordinates { size: b.size(), values })
}

/// Slice `l` holds the coefficient of `b_ll` in each `a_ij`.
pub fn coefficient_slices(coords: &EntryCoordinates) -> Vec<CoefficientSlice> {
    let n = coords.size;
    (0..n)
        .map(|l| {
            let mut m = ScalarMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = coords.get(i, j, l, l).clone();
                }
            }
            CoefficientSlice { l, matrix: m }
        })
        .collect()
}

/// Factors a rank-one matrix as `p * q` with the first nonzero entry of `p`
/// equal to one.
pub fn rank1_factor(m: &ScalarMatrix) -> Result<(Vec<Scalar>, Vec<Scalar>), RankNotOne> {
    let Some(first) = m.entries().iter().position(|v| !v.is_zero()) else {
        return Err(RankNotOne { rank: 0 });
    };
    let (i0, j0) = (first / m.cols(), first % m.cols());
    let pivot = m[(i0, j0)].clone();
    let p: Vec<Scalar> = (0..m.rows()).map(|i| &m[(i, j0)] / &pivot).collect();
    let q: Vec<Scalar> = m.row(i0).to_vec();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if &p[i] * &q[j] != m[(i, j)] {
                return Err(RankNotOne { rank: m.rank() });
            }
        }
    }
    Ok((p, q))
}

/// Knobs for [`frobenius_decompose_with`].
#[derive(Clone, Debug, Default)]
pub struct DecomposeOptions {
    /// When set, the free scalings of the rank-one factors and the base of
    /// `K` are drawn at random from this seed. The raw certificate then varies
    /// with the seed by a scalar; the normalized one does not.
    pub gauge_seed: Option<u64>,
    /// Return the certificate as constructed instead of normalized.
    pub skip_normalization: bool,
}

/// Decides equivalence of `a` and `b` and returns the certificate.
pub fn frobenius_decompose(a: &LinFormMatrix, b: &LinFormMatrix) -> Result<EquivalenceCertificate, FrobeniusError> {
    frobenius_decompose_with(a, b, &DecomposeOptions::default())
}

pub fn frobenius_decompose_with(
    a: &LinFormMatrix,
    b: &LinFormMatrix,
    opts: &DecomposeOptions,
) -> Result<EquivalenceCertificate, FrobeniusError> {
    if a.size() != b.size() || a.ambient() != b.ambient() || a.size() == 0 {
        return Err(FrobeniusError::ShapeMismatch);
    }
    if !b.entry_independence_check() {
        return Err(FrobeniusError::DependentEntries(Side::B));
    }
    if !a.entry_independence_check() {
        return Err(FrobeniusError::DependentEntries(Side::A));
    }
    let mut rng = opts.gauge_seed.map(ChaCha8Rng::seed_from_u64);
    let n = a.size();
    let coords = express_in_entry_basis(a, b)?;

    if n == 1 {
        let scale = coords.get(0, 0, 0, 0).clone();
        let cert = EquivalenceCertificate {
            s: ScalarMatrix::identity(1),
            t: ScalarMatrix::from_vec(1, 1, vec![scale.clone()]),
            transposed: false,
            c: scale,
        };
        return finish(a, b, cert, opts);
    }

    // P has p^l as column l, Q has q^l as row l.
    let mut p_mat = ScalarMatrix::zeros(n, n);
    let mut q_mat = ScalarMatrix::zeros(n, n);
    for slice in coefficient_slices(&coords) {
        let (p, q) = rank1_factor(&slice.matrix)
            .map_err(|e| FrobeniusError::NotEquivalent(Witness::SliceRank { l: slice.l, rank: e.rank }))?;
        let gauge = rng.as_mut().map_or_else(Scalar::one, random_unit);
        for i in 0..n {
            p_mat[(i, slice.l)] = &p[i] * &gauge;
            q_mat[(slice.l, i)] = &q[i] / &gauge;
        }
    }
    let p_inv = p_mat
        .inverse()
        .map_err(|_| FrobeniusError::NotEquivalent(Witness::SingularFactor(Factor::P)))?;
    let q_inv = q_mat
        .inverse()
        .map_err(|_| FrobeniusError::NotEquivalent(Witness::SingularFactor(Factor::Q)))?;

    // B~ in the y-coordinates
    let tilde = coords.as_matrix().transform(&p_inv, &q_inv).expect("square factors");
    let generic = LinFormMatrix::coordinate(n, n * n);
    if let Some(i) = (0..n).find(|&i| tilde.entry(i, i) != generic.entry(i, i)) {
        return Err(FrobeniusError::NotEquivalent(Witness::DiagonalMismatch { i }));
    }

    let base = rng.as_mut().map_or(0, |r| r.random_range(0..n));
    let base_value = rng.as_mut().map_or_else(Scalar::one, random_unit);
    let plain = recover_conjugator(&tilde, false, base, &base_value);
    let transposed = recover_conjugator(&tilde, true, base, &base_value);

    let build = |k: &DiagonalConjugator, transposed: bool| {
        let s = &p_mat * &k.matrix();
        let t = &k.inverse_matrix() * &q_mat;
        let c = s.det().expect("square") * t.det().expect("square");
        EquivalenceCertificate { s, t, transposed, c }
    };
    match (plain, transposed) {
        (Ok(kp), Ok(kt)) => Err(FrobeniusError::BothBranchesSucceed {
            plain: Box::new(build(&kp, false)),
            transposed: Box::new(build(&kt, true)),
        }),
        (Ok(k), Err(_)) => finish(a, b, build(&k, false), opts),
        (Err(_), Ok(k)) => finish(a, b, build(&k, true), opts),
        (Err(plain), Err(transposed)) => {
            Err(FrobeniusError::NotEquivalent(Witness::NoConjugation { plain, transposed }))
        }
    }
}

fn finish(
    a: &LinFormMatrix,
    b: &LinFormMatrix,
    cert: EquivalenceCertificate,
    opts: &DecomposeOptions,
) -> Result<EquivalenceCertificate, FrobeniusError> {
    let cert = if opts.skip_normalization { cert } else { cert.normalized() };
    if !verify_certificate(a, b, &cert) {
        return Err(FrobeniusError::VerificationFailed);
    }
    Ok(cert)
}

fn random_unit(rng: &mut ChaCha8Rng) -> Scalar {
    let v = rng.random_range(1..=9);
    if rng.random_bool(0.5) {
        int(v)
    } else {
        int(-v)
    }
}

/// Finds `K` with `B~ = K Y K^-1` (or `K Y^t K^-1`), `Y` the generic matrix
/// of the variables `y_kl`.
///
/// `b~_ij = (k_i / k_j) y_ij` gives `k_j = k_i / ratio_ij` and
/// `k_i = ratio_ij * k_j`; starting from `k_base` the values propagate along
/// nonzero ratios, row `base` first, and the result is checked against all of
/// `B~`.
fn recover_conjugator(
    tilde: &LinFormMatrix,
    transposed: bool,
    base: usize,
    base_value: &Scalar,
) -> Result<DiagonalConjugator, ConjugationFailure> {
    let n = tilde.size();
    let var = |i: usize, j: usize| if transposed { j * n + i } else { i * n + j };
    let mut ratio = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let form = tilde.entry(i, j);
            let v = var(i, j);
            let coeff = form.coeffs()[v].clone();
            let clean = form.coeffs().iter().enumerate().all(|(w, c)| w == v || c.is_zero());
            if coeff.is_zero() || !clean {
                return Err(ConjugationFailure::NotMonomial { i, j });
            }
            ratio[i * n + j] = coeff;
        }
    }
    let mut k: Vec<Option<Scalar>> = vec![None; n];
    k[base] = Some(base_value.clone());
    let mut queue = VecDeque::from([base]);
    while let Some(i) = queue.pop_front() {
        let ki = k[i].clone().expect("queued indices are set");
        for j in 0..n {
            if k[j].is_none() {
                // ratio_ij = k_i / k_j
                k[j] = Some(&ki / &ratio[i * n + j]);
                queue.push_back(j);
            }
        }
    }
    let conj = DiagonalConjugator { k: k.into_iter().map(|v| v.expect("all reached")).collect() };
    let generic = LinFormMatrix::coordinate(n, n * n);
    let generic = if transposed { generic.transpose() } else { generic };
    let rebuilt = generic
        .transform(&conj.matrix(), &conj.inverse_matrix())
        .expect("square");
    if &rebuilt == tilde {
        Ok(conj)
    } else {
        Err(ConjugationFailure::Mismatch)
    }
}

/// Whether `A = S B T` (or `S B^t T`) holds exactly, with `S`, `T` invertible
/// and `c = det S * det T`.
pub fn verify_certificate(a: &LinFormMatrix, b: &LinFormMatrix, cert: &EquivalenceCertificate) -> bool {
    if a.size() != b.size() || a.ambient() != b.ambient() {
        return false;
    }
    let n = a.size();
    for m in [&cert.s, &cert.t] {
        if m.rows() != n || m.cols() != n {
            return false;
        }
    }
    let (Ok(ds), Ok(dt)) = (cert.s.det(), cert.t.det()) else {
        return false;
    };
    if ds.is_zero() || dt.is_zero() || ds * dt != cert.c {
        return false;
    }
    let base = if cert.transposed { b.transpose() } else { b.clone() };
    base.transform(&cert.s, &cert.t).is_ok_and(|m| &m == a)
}

/// The constant `c` with `det A = c * det B`, if the determinants are
/// proportional with `det B != 0`.
pub fn det_proportionality(a: &LinFormMatrix, b: &LinFormMatrix) -> Option<Scalar> {
    let da = a.determinant_hypersurface();
    let db = b.determinant_hypersurface();
    let (lead_m, lead_c) = db.terms().next_back()?;
    let c = da.coeff(lead_m) / lead_c;
    (db.scale(&c) == da && !c.is_zero()).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    fn b3() -> LinFormMatrix {
        LinFormMatrix::coordinate(3, 9)
    }

    #[test]
    fn coordinates_of_identity_and_double() {
        let b = b3();
        let coords = express_in_entry_basis(&b, &b).unwrap();
        for (i, j, k, l) in itertools::iproduct!(0..3, 0..3, 0..3, 0..3) {
            let expected = if (i, j) == (k, l) { int(1) } else { int(0) };
            assert_eq!(coords.get(i, j, k, l), &expected);
        }
        let doubled = b.transform(&ScalarMatrix::identity(3).scale(&int(2)), &ScalarMatrix::identity(3)).unwrap();
        let coords = express_in_entry_basis(&doubled, &b).unwrap();
        assert_eq!(coords.get(1, 2, 1, 2), &int(2));
        assert_eq!(coords.get(1, 2, 2, 1), &int(0));
    }

    #[test]
    fn entry_outside_span() {
        // B uses x1..x4 of g = 5; A has x5 in one entry
        let b = LinFormMatrix::coordinate(2, 5);
        let mut entries = b.entries().to_vec();
        entries[3] = LinearForm::coordinate(5, 4);
        let a = LinFormMatrix::new(2, 5, entries).unwrap();
        assert_eq!(
            express_in_entry_basis(&a, &b),
            Err(FrobeniusError::NotEquivalent(Witness::NotInSpan { i: 1, j: 1 }))
        );
    }

    #[test]
    fn slices_of_identity_are_elementary() {
        let b = b3();
        let slices = coefficient_slices(&express_in_entry_basis(&b, &b).unwrap());
        for s in slices {
            let mut e = ScalarMatrix::zeros(3, 3);
            e[(s.l, s.l)] = int(1);
            assert_eq!(s.matrix, e);
        }
    }

    #[test]
    fn slices_of_equivalent_pair_are_outer_products() {
        let b = b3();
        let s0 = ScalarMatrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let t0 = ScalarMatrix::from_ints(&[&[2, 0, 1], &[1, 1, 0], &[0, -1, 1]]);
        let a = b.transform(&s0, &t0).unwrap();
        for slice in coefficient_slices(&express_in_entry_basis(&a, &b).unwrap()) {
            let l = slice.l;
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(slice.matrix[(i, j)], &s0[(i, l)] * &t0[(l, j)]);
                }
            }
            assert_eq!(slice.matrix.rank(), 1);
        }
    }

    #[test]
    fn rank1_examples() {
        let (p, q) = rank1_factor(&ScalarMatrix::from_ints(&[&[1, 2], &[2, 4]])).unwrap();
        assert_eq!(p, vec![int(1), int(2)]);
        assert_eq!(q, vec![int(1), int(2)]);
        assert_eq!(rank1_factor(&ScalarMatrix::zeros(2, 2)), Err(RankNotOne { rank: 0 }));
        assert_eq!(rank1_factor(&ScalarMatrix::from_ints(&[&[1, 2], &[3, 4]])), Err(RankNotOne { rank: 2 }));
        let (p, q) = rank1_factor(&ScalarMatrix::from_ints(&[&[0, 0], &[3, 6]])).unwrap();
        assert_eq!(p, vec![int(0), int(1)]);
        assert_eq!(q, vec![int(3), int(6)]);
    }

    #[test]
    fn self_and_transpose() {
        let b = b3();
        let cert = frobenius_decompose(&b, &b).unwrap();
        assert_eq!(cert.s, ScalarMatrix::identity(3));
        assert_eq!(cert.t, ScalarMatrix::identity(3));
        assert!(!cert.transposed);
        assert_eq!(cert.c, int(1));

        let cert = frobenius_decompose(&b.transpose(), &b).unwrap();
        assert_eq!(cert.s, ScalarMatrix::identity(3));
        assert_eq!(cert.t, ScalarMatrix::identity(3));
        assert!(cert.transposed);
    }

    #[test]
    fn recovers_planted_pair_up_to_scalar() {
        let b = LinFormMatrix::coordinate(2, 4);
        let s0 = ScalarMatrix::from_ints(&[&[0, 2], &[1, 3]]);
        let t0 = ScalarMatrix::from_ints(&[&[-1, 1], &[4, 0]]);
        for transposed in [false, true] {
            let base = if transposed { b.transpose() } else { b.clone() };
            let a = base.transform(&s0, &t0).unwrap();
            let cert = frobenius_decompose(&a, &b).unwrap();
            assert_eq!(cert.transposed, transposed);
            assert!(verify_certificate(&a, &b, &cert));
            let planted = EquivalenceCertificate {
                s: s0.clone(),
                t: t0.clone(),
                transposed,
                c: s0.det().unwrap() * t0.det().unwrap(),
            };
            let lambda = cert.scalar_ratio(&planted).expect("scalar multiple");
            assert_eq!(lambda, int(2));
            assert_eq!(cert.c, planted.c);
            assert_eq!(det_proportionality(&a, &b), Some(cert.c.clone()));
        }
    }

    #[test]
    fn gauge_changes_raw_but_not_normalized() {
        let b = b3();
        let s0 = ScalarMatrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let t0 = ScalarMatrix::from_ints(&[&[2, 0, 1], &[1, 1, 0], &[0, -1, 1]]);
        let a = b.transform(&s0, &t0).unwrap();
        let raw = |seed| {
            frobenius_decompose_with(&a, &b, &DecomposeOptions { gauge_seed: Some(seed), skip_normalization: true })
                .unwrap()
        };
        let (r1, r2) = (raw(1), raw(2));
        assert!(r1.scalar_ratio(&r2).is_some());
        assert_eq!(r1.normalized(), r2.normalized());
        assert_eq!(r1.normalized(), frobenius_decompose(&a, &b).unwrap());
    }

    #[test]
    fn perturbed_certificate_fails() {
        let b = b3();
        let mut cert = frobenius_decompose(&b, &b).unwrap();
        assert!(verify_certificate(&b, &b, &cert));
        cert.s[(0, 1)] = frac(1, 3);
        cert.c = cert.s.det().unwrap() * cert.t.det().unwrap();
        assert!(!verify_certificate(&b, &b, &cert));
    }

    #[test]
    fn unrelated_pair_is_refuted() {
        let b = LinFormMatrix::coordinate(2, 4);
        // a = [[x1, x2], [x3, x1 + x4]] is not equivalent: slice rank 2
        let a = LinFormMatrix::from_int_rows(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1]]).unwrap();
        match frobenius_decompose(&a, &b) {
            Err(FrobeniusError::NotEquivalent(w)) => assert!(matches!(w, Witness::SliceRank { .. } | Witness::NoConjugation { .. } | Witness::DiagonalMismatch { .. })),
            other => panic!("expected refutation, got {other:?}"),
        }
        assert_eq!(det_proportionality(&a, &b), None);
    }

    #[test]
    fn degenerate_size_one() {
        let b = LinFormMatrix::from_int_rows(1, &[&[2, 0]]).unwrap();
        let a = LinFormMatrix::from_int_rows(1, &[&[6, 0]]).unwrap();
        let cert = frobenius_decompose(&a, &b).unwrap();
        assert_eq!(cert.s, ScalarMatrix::identity(1));
        assert_eq!(cert.t, ScalarMatrix::from_ints(&[&[3]]));
    }

    #[test]
    fn dependent_inputs_are_rejected() {
        let cat = LinFormMatrix::from_int_rows(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
        let b = LinFormMatrix::coordinate(2, 4);
        assert_eq!(frobenius_decompose(&cat, &b), Err(FrobeniusError::DependentEntries(Side::A)));
        assert_eq!(frobenius_decompose(&b, &cat), Err(FrobeniusError::DependentEntries(Side::B)));
    }
}
