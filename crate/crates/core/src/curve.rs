//! Restriction of matrices of linear forms to curves.
//!
//! Curves are rational parametrizations `t -> (f_1(t), .., f_g(t))` or finite
//! exact point lists. Restricting a [`LinFormMatrix`] to a parametrized curve
//! gives a matrix over `Q[t]`; its image and kernel modules, saturated so the
//! fiber rank is constant in `t`, are returned as [`SheafBasis`] values.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{gcd_all, Scalar, ScalarMatrix, UniPoly, UniPolyMatrix};
use crate::frobenius::{frobenius_decompose, EquivalenceCertificate, FrobeniusError};
use crate::linform::{projectively_equal, LinFormMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("curve coordinates are all zero")]
    ZeroCurve,
    #[error("curve coordinates share the factor {0}")]
    CommonFactor(UniPoly),
    #[error("point {index} is the zero vector")]
    ZeroPoint { index: usize },
    #[error("points {first} and {second} are projectively equal")]
    RepeatedPoint { first: usize, second: usize },
    #[error("matrix is identically zero")]
    ZeroMatrix,
    #[error("kernel is trivial over the function field")]
    TrivialKernel,
    #[error("generic rank {rank} is more than one below the row count {rows}")]
    RankTooLow { rank: usize, rows: usize },
    #[error("determinant does not vanish on the curve")]
    NotContained,
    #[error("generic rank along the curve is {got}, expected {expected}")]
    RankUnexpected { expected: usize, got: usize },
    #[error("entries are not linearly independent")]
    DependentEntries,
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

/// Affine parametrization `t -> (f_1(t), .., f_g(t))` of a rational curve in
/// projective `(g-1)`-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCurve {
    coords: Vec<UniPoly>,
}

impl ParamCurve {
    /// Fails if all coordinates vanish or they share a nonconstant factor
    /// (which would make the map undefined at its roots).
    pub fn new(coords: Vec<UniPoly>) -> Result<Self, CurveError> {
        let g = gcd_all(&coords).ok_or(CurveError::ZeroCurve)?;
        if !g.is_one() {
            return Err(CurveError::CommonFactor(g));
        }
        Ok(ParamCurve { coords })
    }

    /// Rational normal curve `(1, t, .., t^d)`.
    pub fn rational_normal(d: usize) -> Self {
        ParamCurve { coords: (0..=d).map(|k| UniPoly::monomial(Scalar::from_integer(1.into()), k)).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.coords.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    pub fn point(&self, t0: &Scalar) -> Vec<Scalar> {
        self.coords.iter().map(|f| f.eval(t0)).collect()
    }
}

/// Finite list of exact points, pairwise projectively distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCloudCurve {
    ambient: usize,
    points: Vec<Vec<Scalar>>,
}

impl PointCloudCurve {
    pub fn new(ambient: usize, points: Vec<Vec<Scalar>>) -> Result<Self, CurveError> {
        for (index, p) in points.iter().enumerate() {
            if p.len() != ambient {
                return Err(CurveError::DimensionMismatch { expected: ambient, got: p.len() });
            }
            if p.iter().all(Zero::is_zero) {
                return Err(CurveError::ZeroPoint { index });
            }
            if let Some(first) = points[..index].iter().position(|q| projectively_equal(q, p)) {
                return Err(CurveError::RepeatedPoint { first, second: index });
            }
        }
        Ok(PointCloudCurve { ambient, points })
    }

    /// Samples a parametrized curve at the given parameter values.
    pub fn sample(curve: &ParamCurve, params: &[Scalar]) -> Result<Self, CurveError> {
        Self::new(curve.ambient(), params.iter().map(|t| curve.point(t)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }
}

/// A factor of the drop locus and the rank at each of its roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DropFactor {
    /// Monic and squarefree.
    pub factor: UniPoly,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub generic_rank: usize,
    /// Ordered by rank, lowest first; empty when the rank never drops.
    pub drop_locus: Vec<DropFactor>,
}

impl RankProfile {
    /// Rank of the fiber at `t0`, read off the drop locus.
    pub fn rank_at(&self, t0: &Scalar) -> usize {
        self.drop_locus
            .iter()
            .find(|d| d.factor.eval(t0).is_zero())
            .map_or(self.generic_rank, |d| d.rank)
    }
}

/// Saturated basis of a submodule of `Q[t]^n`: the columns have full rank
/// at every parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafBasis {
    pub basis: UniPolyMatrix,
    pub saturated: bool,
    /// Total degree removed by saturation.
    pub degree_invariant: usize,
}

impl SheafBasis {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Exact check that the maximal minors have gcd one.
    pub fn check_saturated(&self) -> bool {
        let k = self.basis.cols();
        k == 0 || self.basis.minor_gcd(k).is_some_and(|g| g.is_one())
    }

    /// Column space of the fiber at `t0`, in canonical form.
    pub fn fiber(&self, t0: &Scalar) -> ScalarMatrix {
        self.basis.eval(t0).column_space()
    }
}

/// Substitutes the parametrization into every entry.
pub fn restrict_to_param_curve(m: &LinFormMatrix, c: &ParamCurve) -> Result<UniPolyMatrix, CurveError> {
    if m.ambient() != c.ambient() {
        return Err(CurveError::DimensionMismatch { expected: m.ambient(), got: c.ambient() });
    }
    let entries = m
        .entries()
        .iter()
        .map(|form| {
            form.coeffs()
                .iter()
                .zip(c.coords())
                .filter(|(a, _)| !a.is_zero())
                .fold(UniPoly::zero(), |acc, (a, f)| &acc + &f.scale(a))
        })
        .collect();
    Ok(UniPolyMatrix::from_vec(m.size(), m.size(), entries))
}

/// Generic rank and the parameter values where the rank drops.
///
/// With `D_j` the monic gcd of the `j x j` minors (`D_0 = 1`), the rank at a
/// root `a` is the largest `j` with `D_j(a) != 0`. Since `D_j` divides
/// `D_{j+1}`, the roots of rank exactly `j` are those of
/// `rad(D_{j+1}) / rad(D_j)`. No root finding is involved.
pub fn rank_profile(m: &UniPolyMatrix) -> RankProfile {
    let generic_rank = m.generic_rank();
    let mut radicals = vec![UniPoly::one()];
    for j in 1..=generic_rank {
        let d = m.minor_gcd(j).expect("minors of size <= generic rank are not all zero");
        radicals.push(d.squarefree_part());
    }
    let drop_locus = (0..generic_rank)
        .filter_map(|j| {
            let (factor, rest) = radicals[j + 1].div_rem(&radicals[j]).expect("nonzero");
            debug_assert!(rest.is_zero());
            (!factor.is_constant()).then(|| DropFactor { factor: factor.monic(), rank: j })
        })
        .collect();
    RankProfile { generic_rank, drop_locus }
}

/// Saturated basis of the column module, in column Hermite form.
///
/// Unimodular row reduction gives `m = U * R` with `R` zero below row `k`
/// (`k` the generic rank). The first `k` columns of the unimodular `U` span
/// the same space as `m` over `Q(t)` and have full rank at every `t`, so they
/// span the saturation. `degree_invariant` is `deg gcd` of the `k x k`
/// minors of `m`, the total vanishing removed; it does not change under
/// invertible constant column operations on `m`.
pub fn image_sheaf_basis(m: &UniPolyMatrix) -> Result<SheafBasis, CurveError> {
    if m.is_zero() {
        return Err(CurveError::ZeroMatrix);
    }
    let red = m.row_reduce(false);
    let k = red.rank;
    let span = red.inverse.select_columns(&(0..k).collect::<Vec<_>>());
    let degree_invariant = m.minor_gcd(k).and_then(|d| d.degree()).unwrap_or(0);
    Ok(SheafBasis { basis: span.column_hermite_form(), saturated: true, degree_invariant })
}

/// Saturated basis of the right kernel, in column Hermite form.
///
/// Reducing the rows of `m^t` gives `W * m^t = R`; the rows of the
/// unimodular `W` past the rank are kernel vectors, and together they are a
/// saturated basis. A kernel module is always saturated, so nothing is
/// removed and `degree_invariant` is zero.
pub fn kernel_sheaf_basis(m: &UniPolyMatrix) -> Result<SheafBasis, CurveError> {
    let red = m.transpose().row_reduce(false);
    if red.rank == m.cols() {
        return Err(CurveError::TrivialKernel);
    }
    let rows: Vec<usize> = (red.rank..m.cols()).collect();
    let kernel = red.transform.select_rows(&rows).transpose();
    Ok(SheafBasis { basis: kernel.column_hermite_form(), saturated: true, degree_invariant: 0 })
}

/// Total vanishing degree of `m` onto its saturated image: `deg gcd` of the
/// maximal nonvanishing minors. Defined when the rank deficit is at most one.
pub fn cokernel_degree(m: &UniPolyMatrix) -> Result<usize, CurveError> {
    let rank = m.generic_rank();
    if rank + 1 < m.rows() {
        return Err(CurveError::RankTooLow { rank, rows: m.rows() });
    }
    if rank == 0 {
        return Ok(0);
    }
    Ok(m.minor_gcd(rank).and_then(|d| d.degree()).unwrap_or(0))
}

/// Image and kernel of the evaluated matrix at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData {
    pub point: Vec<Scalar>,
    pub image: ScalarMatrix,
    pub kernel_dim: usize,
}

pub fn fiber_image_at_points(m: &LinFormMatrix, pc: &PointCloudCurve) -> Result<Vec<FiberData>, CurveError> {
    if m.ambient() != pc.ambient() {
        return Err(CurveError::DimensionMismatch { expected: m.ambient(), got: pc.ambient() });
    }
    Ok(pc
        .points()
        .iter()
        .map(|p| {
            let fiber = m.evaluate_at_point(p).expect("ambient checked");
            let image = fiber.column_space();
            FiberData { point: p.clone(), kernel_dim: m.size() - image.cols(), image }
        })
        .collect())
}

/// Whether `det m` vanishes identically on the curve.
pub fn containment_check(m: &LinFormMatrix, c: &ParamCurve) -> Result<bool, CurveError> {
    Ok(restrict_to_param_curve(m, c)?.det().is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Disambiguation {
    Plain,
    Transpose,
    Undecided,
}

/// The two candidate bundles carried by a determinantal representation
/// restricted to a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub candidate_plain: SheafBasis,
    pub candidate_transpose: SheafBasis,
    pub rank_profile: RankProfile,
    pub kernel_line: SheafBasis,
    pub containment_ok: bool,
    pub disambiguation: Disambiguation,
    /// Present when a reference was supplied.
    pub certificate: Option<EquivalenceCertificate>,
}

impl ReconstructionReport {
    /// The candidate picked out by the disambiguation, if decided.
    pub fn selected(&self) -> Option<&SheafBasis> {
        match self.disambiguation {
            Disambiguation::Plain => Some(&self.candidate_plain),
            Disambiguation::Transpose => Some(&self.candidate_transpose),
            Disambiguation::Undecided => None,
        }
    }
}

/// Image sheaves of `alpha|_C` and `alpha^t|_C`, the kernel line, and which
/// of the two images is the bundle when a reference representation is given.
///
/// Without a reference the choice needs determinant bookkeeping that a
/// rational curve cannot provide, so the report is `Undecided`.
pub fn reconstruct_bundle_pair(
    alpha: &LinFormMatrix,
    c: &ParamCurve,
    reference: Option<&LinFormMatrix>,
) -> Result<ReconstructionReport, CurveError> {
    let restricted = restrict_to_param_curve(alpha, c)?;
    if !alpha.entry_independence_check() {
        return Err(CurveError::DependentEntries);
    }
    if !restricted.det().is_zero() {
        return Err(CurveError::NotContained);
    }
    let profile = rank_profile(&restricted);
    let r = alpha.r();
    if profile.generic_rank != r {
        return Err(CurveError::RankUnexpected { expected: r, got: profile.generic_rank });
    }
    let candidate_plain = image_sheaf_basis(&restricted)?;
    let candidate_transpose = image_sheaf_basis(&restricted.transpose())?;
    let kernel_line = kernel_sheaf_basis(&restricted)?;
    let (disambiguation, certificate) = match reference {
        None => (Disambiguation::Undecided, None),
        Some(lambda) => {
            let cert = frobenius_decompose(alpha, lambda)?;
            let d = if cert.transposed { Disambiguation::Transpose } else { Disambiguation::Plain };
            (d, Some(cert))
        }
    };
    Ok(ReconstructionReport {
        candidate_plain,
        candidate_transpose,
        rank_profile: profile,
        kernel_line,
        containment_ok: true,
        disambiguation,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn catalecticant() -> LinFormMatrix {
        LinFormMatrix::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn hankel() -> UniPolyMatrix {
        UniPolyMatrix::from_rows(vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[0, 0, 1])]])
    }

    #[test]
    fn curve_validation() {
        assert_eq!(ParamCurve::new(vec![UniPoly::zero(), UniPoly::zero()]), Err(CurveError::ZeroCurve));
        assert_eq!(ParamCurve::new(vec![p(&[0, 1]), p(&[0, 0, 1])]), Err(CurveError::CommonFactor(p(&[0, 1]))));
        let c = ParamCurve::new(vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(c, ParamCurve::rational_normal(2));
        assert_eq!(c.degree(), 2);
        assert_eq!(c.point(&int(3)), vec![int(1), int(3), int(9)]);
    }

    #[test]
    fn point_cloud_validation() {
        assert_eq!(
            PointCloudCurve::new(2, vec![vec![int(1), int(2)], vec![int(0), int(0)]]),
            Err(CurveError::ZeroPoint { index: 1 })
        );
        assert_eq!(
            PointCloudCurve::new(2, vec![vec![int(1), int(2)], vec![int(-2), int(-4)]]),
            Err(CurveError::RepeatedPoint { first: 0, second: 1 })
        );
        assert!(PointCloudCurve::new(2, vec![vec![int(1), int(2)], vec![int(1), int(3)]]).is_ok());
    }

    #[test]
    fn restrict_catalecticant() {
        let m = restrict_to_param_curve(&catalecticant(), &ParamCurve::rational_normal(2)).unwrap();
        assert_eq!(m, hankel());
        let z = restrict_to_param_curve(&LinFormMatrix::zero(2, 3), &ParamCurve::rational_normal(2)).unwrap();
        assert!(z.is_zero());
        assert!(matches!(
            restrict_to_param_curve(&catalecticant(), &ParamCurve::rational_normal(3)),
            Err(CurveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rank_profiles() {
        let prof = rank_profile(&hankel());
        assert_eq!(prof, RankProfile { generic_rank: 1, drop_locus: vec![] });

        let d = UniPolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[0])], vec![p(&[0]), p(&[1])]]);
        let prof = rank_profile(&d);
        assert_eq!(prof.generic_rank, 2);
        assert_eq!(prof.drop_locus, vec![DropFactor { factor: p(&[0, 1]), rank: 1 }]);
        assert_eq!(prof.rank_at(&int(0)), 1);
        assert_eq!(prof.rank_at(&int(5)), 2);
    }

    #[test]
    fn planted_quadratic_drop() {
        // m = A * diag(t^2 - 2, 1, 1) * B with unimodular constant A, B
        let a = UniPolyMatrix::from_scalar(&ScalarMatrix::from_ints(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]));
        let b = UniPolyMatrix::from_scalar(&ScalarMatrix::from_ints(&[&[1, 0, 3], &[2, 1, 0], &[0, 1, 1]]));
        let mut d = UniPolyMatrix::identity(3);
        d[(0, 0)] = p(&[-2, 0, 1]);
        let m = &(&a * &d) * &b;
        let prof = rank_profile(&m);
        assert_eq!(prof.generic_rank, 3);
        assert_eq!(prof.drop_locus, vec![DropFactor { factor: p(&[-2, 0, 1]), rank: 2 }]);
        assert_eq!(cokernel_degree(&m), Ok(2));
    }

    #[test]
    fn nested_drops() {
        // diag(t(t-1), t, 1): rank 1 at t = 0, rank 2 at t = 1
        let mut m = UniPolyMatrix::identity(3);
        m[(0, 0)] = p(&[0, -1, 1]);
        m[(1, 1)] = p(&[0, 1]);
        let prof = rank_profile(&m);
        assert_eq!(
            prof.drop_locus,
            vec![DropFactor { factor: p(&[0, 1]), rank: 1 }, DropFactor { factor: p(&[-1, 1]), rank: 2 }]
        );
    }

    #[test]
    fn image_examples() {
        let img = image_sheaf_basis(&hankel()).unwrap();
        assert_eq!(img.basis, UniPolyMatrix::from_rows(vec![vec![p(&[1])], vec![p(&[0, 1])]]));
        assert_eq!(img.degree_invariant, 0);
        assert!(img.check_saturated());

        let tt = UniPolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[0])], vec![p(&[0]), p(&[0, 1])]]);
        let img = image_sheaf_basis(&tt).unwrap();
        assert_eq!(img.basis, UniPolyMatrix::identity(2));
        assert_eq!(img.degree_invariant, 2);

        assert_eq!(image_sheaf_basis(&UniPolyMatrix::zeros(2, 2)), Err(CurveError::ZeroMatrix));
    }

    #[test]
    fn image_degree_ignores_column_operations() {
        let swapped = UniPolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[0, 0, 1]), p(&[0, 1])]]);
        let a = image_sheaf_basis(&hankel()).unwrap();
        let b = image_sheaf_basis(&swapped).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_examples() {
        let ker = kernel_sheaf_basis(&hankel()).unwrap();
        assert_eq!(ker.basis, UniPolyMatrix::from_rows(vec![vec![p(&[0, 1])], vec![p(&[-1])]]));
        assert_eq!(kernel_sheaf_basis(&UniPolyMatrix::identity(2)), Err(CurveError::TrivialKernel));
    }

    #[test]
    fn planted_kernel() {
        // rows orthogonal to v = (t, 1 - t, t^2 + 1)
        let m = UniPolyMatrix::from_rows(vec![
            vec![p(&[1, -1]), p(&[0, -1]), p(&[0])],
            vec![p(&[1, 0, 1]), p(&[0]), p(&[0, -1])],
        ]);
        let ker = kernel_sheaf_basis(&m).unwrap();
        assert!(ker.check_saturated());
        let v = UniPolyMatrix::from_rows(vec![vec![p(&[0, 1])], vec![p(&[1, -1])], vec![p(&[1, 0, 1])]]);
        assert_eq!(ker.basis, v);
        assert!((&m * &ker.basis).is_zero());
    }

    #[test]
    fn cokernel_examples() {
        let d = UniPolyMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[0])], vec![p(&[0]), p(&[1])]]);
        assert_eq!(cokernel_degree(&d), Ok(1));
        assert_eq!(cokernel_degree(&hankel()), Ok(0));
        // t (t - 1)^2
        let mut m = UniPolyMatrix::identity(2);
        m[(0, 0)] = &p(&[0, 1]) * &p(&[1, -2, 1]);
        assert_eq!(cokernel_degree(&m), Ok(3));
        assert_eq!(
            cokernel_degree(&UniPolyMatrix::zeros(3, 3)),
            Err(CurveError::RankTooLow { rank: 0, rows: 3 })
        );
    }

    #[test]
    fn fibers_of_catalecticant() {
        let c = ParamCurve::rational_normal(2);
        let pc = PointCloudCurve::sample(&c, &[int(0), int(1), int(2)]).unwrap();
        for f in fiber_image_at_points(&catalecticant(), &pc).unwrap() {
            assert_eq!(f.kernel_dim, 1);
        }
        for f in fiber_image_at_points(&LinFormMatrix::zero(2, 3), &pc).unwrap() {
            assert_eq!(f.kernel_dim, 2);
        }
        let pc = PointCloudCurve::new(4, vec![vec![int(1), int(2), int(3), int(5)]]).unwrap();
        let f = fiber_image_at_points(&LinFormMatrix::coordinate(2, 4), &pc).unwrap();
        assert_eq!(f[0].kernel_dim, 0);
    }

    #[test]
    fn containment() {
        assert_eq!(containment_check(&catalecticant(), &ParamCurve::rational_normal(2)), Ok(true));
        let diag = LinFormMatrix::from_int_rows(2, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]).unwrap();
        assert_eq!(containment_check(&diag, &ParamCurve::rational_normal(1)), Ok(false));
    }

    #[test]
    fn reconstruct_independent_conic() {
        // [[x1, x2], [x3, x4]] on (1, t, t, t^2) restricts to the Hankel matrix
        let lambda = LinFormMatrix::coordinate(2, 4);
        let c = ParamCurve::new(vec![p(&[1]), p(&[0, 1]), p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        let rep = reconstruct_bundle_pair(&lambda, &c, Some(&lambda)).unwrap();
        assert_eq!(rep.disambiguation, Disambiguation::Plain);
        let line = UniPolyMatrix::from_rows(vec![vec![p(&[1])], vec![p(&[0, 1])]]);
        assert_eq!(rep.candidate_plain.basis, line);
        assert_eq!(rep.candidate_transpose.basis, line);
        assert_eq!(rep.kernel_line.basis, UniPolyMatrix::from_rows(vec![vec![p(&[0, 1])], vec![p(&[-1])]]));
        assert_eq!(rep.selected(), Some(&rep.candidate_plain));

        let rep = reconstruct_bundle_pair(&lambda.transpose(), &c, Some(&lambda)).unwrap();
        assert_eq!(rep.disambiguation, Disambiguation::Transpose);
        let rep = reconstruct_bundle_pair(&lambda, &c, None).unwrap();
        assert_eq!(rep.disambiguation, Disambiguation::Undecided);
        assert_eq!(rep.selected(), None);
    }

    #[test]
    fn reconstruct_rejects_bad_input() {
        let lambda = LinFormMatrix::coordinate(2, 4);
        let c = ParamCurve::new(vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1]), p(&[0, 0, 0, 0, 1])]).unwrap();
        assert_eq!(reconstruct_bundle_pair(&lambda, &c, None), Err(CurveError::NotContained));
        assert_eq!(
            reconstruct_bundle_pair(&catalecticant(), &ParamCurve::rational_normal(2), None),
            Err(CurveError::DependentEntries)
        );
        // the curve sits inside the locus where every entry vanishes
        let lambda5 = LinFormMatrix::coordinate(2, 5);
        let point = ParamCurve::new(vec![p(&[0]), p(&[0]), p(&[0]), p(&[0]), p(&[1])]).unwrap();
        assert_eq!(
            reconstruct_bundle_pair(&lambda5, &point, None),
            Err(CurveError::RankUnexpected { expected: 1, got: 0 })
        );
    }
}
