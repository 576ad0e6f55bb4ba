//! Square matrices of linear forms and the hypersurfaces they cut out.
//!
//! A [`LinFormMatrix`] is an `(r+1) x (r+1)` grid of homogeneous linear forms
//! in `g` ambient variables. Its determinant is a degree-`r+1` hypersurface;
//! the matrix is a determinantal representation of that hypersurface.

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::algebra::{self, det_multipoly_matrix, modp, MultiPoly, Scalar, ScalarMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetrepError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrices have different shapes")]
    ShapeMismatch,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("coefficient {value} has no image modulo {prime}")]
    NotReducible { value: Scalar, prime: u64 },
}

/// Coefficient vector of a homogeneous linear form `sum_k c_k x_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(ambient: usize) -> Self {
        LinearForm { coeffs: vec![Scalar::zero(); ambient] }
    }

    /// The coordinate form `x_{i+1}`.
    pub fn coordinate(ambient: usize, i: usize) -> Self {
        let mut f = Self::zero(ambient);
        f.coeffs[i] = Scalar::one();
        f
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| algebra::int(c)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.coeffs.iter().zip(point).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        LinearForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LinearForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `self += c * other`
    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += c * b;
        }
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::linear(&self.coeffs)
    }
}

/// Square matrix of linear forms sharing one ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinFormMatrix {
    size: usize,
    ambient: usize,
    entries: Vec<LinearForm>,
}

impl LinFormMatrix {
    /// Row-major entries. Fails if the count is not `size^2` or an entry has
    /// the wrong ambient dimension.
    pub fn new(size: usize, ambient: usize, entries: Vec<LinearForm>) -> Result<Self, DetrepError> {
        if entries.len() != size * size {
            return Err(DetrepError::DimensionMismatch { expected: size * size, got: entries.len() });
        }
        if let Some(bad) = entries.iter().find(|e| e.ambient() != ambient) {
            return Err(DetrepError::DimensionMismatch { expected: ambient, got: bad.ambient() });
        }
        Ok(LinFormMatrix { size, ambient, entries })
    }

    pub fn zero(size: usize, ambient: usize) -> Self {
        LinFormMatrix { size, ambient, entries: vec![LinearForm::zero(ambient); size * size] }
    }

    /// `size x size` matrix whose entries are the coordinate forms
    /// `x1, x2, ...` in row-major order, with `ambient >= size^2`.
    pub fn coordinate(size: usize, ambient: usize) -> Self {
        assert!(ambient >= size * size, "not enough variables for distinct coordinate entries");
        LinFormMatrix {
            size,
            ambient,
            entries: (0..size * size).map(|k| LinearForm::coordinate(ambient, k)).collect(),
        }
    }

    /// Builds from row-major integer coefficient vectors.
    pub fn from_int_rows(size: usize, rows: &[&[i64]]) -> Result<Self, DetrepError> {
        let ambient = rows.first().map_or(0, |r| r.len());
        Self::new(size, ambient, rows.iter().map(|r| LinearForm::from_ints(r)).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `r` for an `(r+1) x (r+1)` matrix.
    pub fn r(&self) -> usize {
        self.size.saturating_sub(1)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn entries(&self) -> &[LinearForm] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &LinearForm {
        &self.entries[i * self.size + j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        LinFormMatrix {
            size: n,
            ambient: self.ambient,
            entries: (0..n * n).map(|k| self.entry(k % n, k / n).clone()).collect(),
        }
    }

    /// `S * self * T` for constant square matrices of matching size.
    pub fn transform(&self, s: &ScalarMatrix, t: &ScalarMatrix) -> Result<Self, DetrepError> {
        let n = self.size;
        for m in [s, t] {
            if m.rows() != n || m.cols() != n {
                return Err(DetrepError::ShapeMismatch);
            }
        }
        // (S M)_{ik} = sum_j S_ij M_jk, then (S M T)_{il} = sum_k (S M)_{ik} T_kl
        let mut sm = vec![LinearForm::zero(self.ambient); n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sm[i * n + k].add_scaled(&s[(i, j)], self.entry(j, k));
                }
            }
        }
        let mut out = vec![LinearForm::zero(self.ambient); n * n];
        for i in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out[i * n + l].add_scaled(&t[(k, l)], &sm[i * n + k]);
                }
            }
        }
        Ok(LinFormMatrix { size: n, ambient: self.ambient, entries: out })
    }

    /// `(size^2) x ambient` matrix whose row `i * size + j` is the coefficient
    /// vector of entry `(i, j)`.
    pub fn coefficient_matrix(&self) -> ScalarMatrix {
        ScalarMatrix::from_rows(self.entries.iter().map(|e| e.coeffs.clone()).collect())
    }

    pub fn to_multipoly_entries(&self) -> Vec<MultiPoly> {
        self.entries.iter().map(LinearForm::to_multipoly).collect()
    }

    /// Entrywise evaluation at a point of the ambient space.
    pub fn evaluate_at_point(&self, point: &[Scalar]) -> Result<ScalarMatrix, DetrepError> {
        if point.len() != self.ambient {
            return Err(DetrepError::DimensionMismatch { expected: self.ambient, got: point.len() });
        }
        Ok(ScalarMatrix::from_vec(
            self.size,
            self.size,
            self.entries.iter().map(|e| e.eval(point)).collect(),
        ))
    }

    /// Determinant as a homogeneous polynomial of degree `size` (or zero).
    pub fn determinant_hypersurface(&self) -> MultiPoly {
        if self.size == 0 {
            return MultiPoly::one(self.ambient);
        }
        det_multipoly_matrix(self.size, &self.to_multipoly_entries())
    }

    /// Whether the `size^2` entries are linearly independent forms. Needs
    /// `ambient >= size^2` to have any chance of holding.
    pub fn entry_independence_check(&self) -> bool {
        let n2 = self.size * self.size;
        n2 <= self.ambient && self.coefficient_matrix().rank() == n2
    }

    /// Randomized search for relations among the minors of size `1..=r`.
    ///
    /// Returns `true` iff every such minor was observed nonzero at one of
    /// `trials` random points with integer coordinates in
    /// `[-PROBE_BOUND, PROBE_BOUND]`. A `k x k` minor that is not identically
    /// zero vanishes at a single random point with probability at most
    /// `k / (2 * PROBE_BOUND + 1)`, so a spurious `false` has probability at
    /// most `(r / 2001)^trials` per minor.
    pub fn genericity_probe<R: Rng + ?Sized>(&self, trials: usize, rng: &mut R) -> bool {
        self.genericity_probe_in(SampleField::Rationals, trials, rng)
            .expect("rational sampling cannot fail")
    }

    /// [`Self::genericity_probe`] with the arithmetic done in `field`. In a
    /// prime field the sample points are uniform in `F_p` and the failure
    /// bound becomes `(r / p)^trials`.
    pub fn genericity_probe_in<R: Rng + ?Sized>(
        &self,
        field: SampleField,
        trials: usize,
        rng: &mut R,
    ) -> Result<bool, DetrepError> {
        let n = self.size;
        let minors: Vec<(Vec<usize>, Vec<usize>)> = (1..n)
            .flat_map(|k| {
                (0..n)
                    .combinations(k)
                    .cartesian_product((0..n).combinations(k).collect::<Vec<_>>())
            })
            .collect();
        let mut witnessed = vec![false; minors.len()];
        let reduced = match field {
            SampleField::Rationals => None,
            SampleField::Prime(p) => Some(self.reduce_mod(p)?),
        };
        for _ in 0..trials {
            match (&reduced, field) {
                (Some(red), SampleField::Prime(p)) => {
                    let point: Vec<u64> = (0..self.ambient).map(|_| rng.random_range(0..p)).collect();
                    let vals: Vec<u64> = red
                        .iter()
                        .map(|c| {
                            c.iter().zip(&point).fold(0u64, |acc, (&a, &x)| {
                                ((acc as u128 + a as u128 * x as u128) % p as u128) as u64
                            })
                        })
                        .collect();
                    for (w, (rows, cols)) in witnessed.iter_mut().zip(&minors) {
                        if *w {
                            continue;
                        }
                        let sub: Vec<u64> = rows
                            .iter()
                            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
                            .map(|(i, j)| vals[i * n + j])
                            .collect();
                        *w = modp::det_mod(rows.len(), &sub, p) != 0;
                    }
                }
                _ => {
                    let point: Vec<Scalar> =
                        (0..self.ambient).map(|_| algebra::random_int(rng, PROBE_BOUND)).collect();
                    let value = self.evaluate_at_point(&point)?;
                    for (w, (rows, cols)) in witnessed.iter_mut().zip(&minors) {
                        if !*w {
                            *w = !value.submatrix(rows, cols).det().expect("square").is_zero();
                        }
                    }
                }
            }
            if witnessed.iter().all(|&w| w) {
                return Ok(true);
            }
        }
        Ok(witnessed.iter().all(|&w| w))
    }

    fn reduce_mod(&self, p: u64) -> Result<Vec<Vec<u64>>, DetrepError> {
        self.entries
            .iter()
            .map(|e| {
                e.coeffs
                    .iter()
                    .map(|c| modp::reduce(c, p).ok_or(DetrepError::NotReducible { value: c.clone(), prime: p }))
                    .collect()
            })
            .collect()
    }
}

/// Half-width of the integer box random probe points are drawn from.
pub const PROBE_BOUND: i64 = 1000;

/// Field in which randomized probes evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleField {
    Rationals,
    Prime(u64),
}

/// Coordinates of a trace pairing: `values[(i, j, k)]` is the `k`-th
/// coordinate of the image of the `i`-th section of the first space paired
/// with the `j`-th section of the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PetriTensor {
    r: usize,
    g: usize,
    values: Vec<Scalar>,
}

impl PetriTensor {
    pub fn new(r: usize, g: usize, values: Vec<Scalar>) -> Result<Self, DetrepError> {
        let expected = (r + 1) * (r + 1) * g;
        if values.len() != expected {
            return Err(DetrepError::DimensionMismatch { expected, got: values.len() });
        }
        Ok(PetriTensor { r, g, values })
    }

    pub fn zero(r: usize, g: usize) -> Self {
        PetriTensor { r, g, values: vec![Scalar::zero(); (r + 1) * (r + 1) * g] }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.values[(i * (self.r + 1) + j) * self.g + k]
    }

    /// Reads the tensor back from a matrix of linear forms.
    pub fn from_matrix(m: &LinFormMatrix) -> Self {
        PetriTensor {
            r: m.r(),
            g: m.ambient,
            values: m.entries.iter().flat_map(|e| e.coeffs.iter().cloned()).collect(),
        }
    }
}

/// The matrix of linear forms whose `(i, j)` entry has coefficient vector
/// `tensor[i][j][..]`.
pub fn build_from_petri_tensor(tensor: &PetriTensor) -> LinFormMatrix {
    let n = tensor.r + 1;
    LinFormMatrix {
        size: n,
        ambient: tensor.g,
        entries: tensor.values.chunks(tensor.g.max(1)).take(n * n).map(|c| LinearForm::new(c.to_vec())).collect(),
    }
}

/// Lowest-degree part of a local equation at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingForm {
    /// Multiplicity of the point on the hypersurface; 0 when the point is off it.
    pub multiplicity: u32,
    /// Homogeneous of degree `multiplicity`, in coordinates centred at the point.
    pub form: MultiPoly,
}

/// Recentres `f` at `point` and returns its first nonzero homogeneous
/// component, whose zero set is the tangent cone at the point.
pub fn tangent_cone_leading_form(f: &MultiPoly, point: &[Scalar]) -> Result<LeadingForm, DetrepError> {
    if f.is_zero() {
        return Err(DetrepError::ZeroPolynomial);
    }
    if point.len() != f.nvars() {
        return Err(DetrepError::DimensionMismatch { expected: f.nvars(), got: point.len() });
    }
    let centred = f.translate(point);
    let n = centred.min_degree().expect("translation preserves nonzero");
    Ok(LeadingForm { multiplicity: n, form: centred.homogeneous_component(n) })
}

/// Projective equality of two nonzero vectors: `u_i v_j == u_j v_i` for all `i, j`.
pub fn projectively_equal(u: &[Scalar], v: &[Scalar]) -> bool {
    u.len() == v.len()
        && (0..u.len()).all(|i| (i + 1..u.len()).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Monomial};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn coord2() -> LinFormMatrix {
        LinFormMatrix::coordinate(2, 4)
    }

    fn catalecticant() -> LinFormMatrix {
        LinFormMatrix::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    #[test]
    fn petri_tensor_slices() {
        let mut values = vec![int(0); 16];
        for k in 0..4 {
            values[k * 4 + k] = int(1);
        }
        let t = PetriTensor::new(1, 4, values).unwrap();
        assert_eq!(build_from_petri_tensor(&t), coord2());
        assert_eq!(build_from_petri_tensor(&PetriTensor::zero(1, 4)), LinFormMatrix::zero(2, 4));
        assert_eq!(PetriTensor::from_matrix(&coord2()), t);
        assert!(PetriTensor::new(1, 4, vec![int(0); 15]).is_err());
    }

    #[test]
    fn independence_examples() {
        assert!(coord2().entry_independence_check());
        let repeated = LinFormMatrix::from_int_rows(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
        assert!(!repeated.entry_independence_check());
        assert!(!catalecticant().entry_independence_check());
        // g < (r+1)^2 can never be independent
        let narrow = LinFormMatrix::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert!(!narrow.entry_independence_check());
    }

    #[test]
    fn genericity_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(coord2().genericity_probe(5, &mut rng));
        assert!(LinFormMatrix::coordinate(3, 9).genericity_probe(5, &mut rng));
        // 3x3 whose top-left 2x2 minor is x1*x2 - x2*x1 = 0
        let x = |k: usize| LinearForm::coordinate(6, k);
        let degenerate = LinFormMatrix::new(
            3,
            6,
            vec![x(0), x(1), x(2), x(0), x(1), x(3), x(4), x(5), x(2)],
        )
        .unwrap();
        assert!(!degenerate.genericity_probe(10, &mut rng));
        assert!(!degenerate.genericity_probe_in(SampleField::Prime(1_000_003), 10, &mut rng).unwrap());
        assert!(LinFormMatrix::coordinate(3, 9)
            .genericity_probe_in(SampleField::Prime(1_000_003), 5, &mut rng)
            .unwrap());
    }

    #[test]
    fn evaluation_examples() {
        let e0 = [int(1), int(0), int(0), int(0)];
        assert_eq!(coord2().evaluate_at_point(&e0).unwrap(), ScalarMatrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert!(coord2().evaluate_at_point(&vec![int(0); 4]).unwrap().is_zero());
        let fiber = catalecticant().evaluate_at_point(&[int(1), int(3), int(9)]).unwrap();
        assert_eq!(fiber, ScalarMatrix::from_ints(&[&[1, 3], &[3, 9]]));
        assert_eq!(fiber.rank(), 1);
        assert_eq!(
            coord2().evaluate_at_point(&[int(1)]),
            Err(DetrepError::DimensionMismatch { expected: 4, got: 1 })
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(coord2().determinant_hypersurface().to_string(), "x1*x4 - x2*x3");
        let upper = LinFormMatrix::from_int_rows(2, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]).unwrap();
        assert_eq!(upper.determinant_hypersurface().to_string(), "x1*x2");
        let d = LinFormMatrix::coordinate(3, 9).determinant_hypersurface();
        assert_eq!(d.degree(), Some(3));
        assert!(d.is_homogeneous());
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn tangent_cone_examples() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let f = &(&x * &x) + &(&(&y * &y) * &y);
        let lf = tangent_cone_leading_form(&f, &[int(0), int(0)]).unwrap();
        assert_eq!(lf.multiplicity, 2);
        assert_eq!(lf.form, &x * &x);

        // (x-1)^2 (y-2) + (x-1)^4 at (1, 2) -> x^2 y
        let xm = &x - &MultiPoly::constant(2, int(1));
        let ym = &y - &MultiPoly::constant(2, int(2));
        let xm2 = &xm * &xm;
        let g = &(&xm2 * &ym) + &(&xm2 * &xm2);
        let lf = tangent_cone_leading_form(&g, &[int(1), int(2)]).unwrap();
        assert_eq!(lf.multiplicity, 3);
        assert_eq!(lf.form, MultiPoly::from_terms(2, [(Monomial::new(vec![2, 1]), int(1))]));

        // off the hypersurface: multiplicity zero, form is the value
        let lf = tangent_cone_leading_form(&g, &[int(0), int(0)]).unwrap();
        assert_eq!(lf.multiplicity, 0);
        assert_eq!(lf.form, MultiPoly::constant(2, g.eval(&[int(0), int(0)])));

        assert_eq!(tangent_cone_leading_form(&MultiPoly::zero(2), &[int(0), int(0)]), Err(DetrepError::ZeroPolynomial));
    }

    #[test]
    fn quadric_plus_cubic_leading_form() {
        let v = |i| MultiPoly::var(4, i);
        let quad = &(&v(0) * &v(3)) - &(&v(1) * &v(2));
        let f = &quad + &(&(&v(0) * &v(0)) * &v(0));
        let lf = tangent_cone_leading_form(&f, &vec![int(0); 4]).unwrap();
        assert_eq!((lf.multiplicity, lf.form), (2, quad));
    }

    #[test]
    fn projective_equality() {
        assert!(projectively_equal(&[int(1), int(2)], &[int(-3), int(-6)]));
        assert!(!projectively_equal(&[int(1), int(2)], &[int(2), int(1)]));
    }
}
