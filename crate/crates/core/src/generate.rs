//! Seeded instance generators for the property suites and the CLI.
//!
//! Every generator takes a `u64` seed and draws from a single
//! `ChaCha8Rng`, so identical arguments give identical instances. Integer
//! entries are drawn from `[-bound, bound]`, [`DEFAULT_ENTRY_BOUND`] unless
//! stated otherwise, which keeps intermediate rationals small.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{int, random_int, Scalar, ScalarMatrix, UniPoly, UniPolyMatrix};
use crate::curve::{containment_check, rank_profile, restrict_to_param_curve, ParamCurve};
use crate::linform::{LinFormMatrix, LinearForm};

pub const DEFAULT_ENTRY_BOUND: i64 = 5;

const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("need g >= (r+1)^2 = {needed}, got g = {g}")]
    BadDimensions { needed: usize, g: usize },
    #[error("no linear-form lift: {0}")]
    LiftFailed(String),
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `rows x cols` integer matrix.
pub fn random_int_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> ScalarMatrix {
    ScalarMatrix::from_vec(rows, cols, (0..rows * cols).map(|_| random_int(rng, bound)).collect())
}

/// Random invertible `n x n` integer matrix, by rejection.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> ScalarMatrix {
    loop {
        let m = random_int_matrix(rng, n, n, bound);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random `(r+1) x (r+1)` matrix of linear forms in `g` variables with
/// integer coefficients. Entries are independent with high probability, not
/// certainly.
pub fn random_linform_matrix<R: Rng + ?Sized>(rng: &mut R, r: usize, g: usize, bound: i64) -> LinFormMatrix {
    let n = r + 1;
    let entries = (0..n * n)
        .map(|_| LinearForm::new((0..g).map(|_| random_int(rng, bound)).collect()))
        .collect();
    LinFormMatrix::new(n, g, entries).expect("consistent shape")
}

/// `A = S0 * B * T0` (or `S0 * B^t * T0`) with known factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusInstance {
    pub a: LinFormMatrix,
    pub b: LinFormMatrix,
    pub s0: ScalarMatrix,
    pub t0: ScalarMatrix,
    pub transposed: bool,
}

/// `B` has as entries the first `(r+1)^2` rows of a random invertible
/// `g x g` mixing of the coordinate forms, so its entries are independent.
pub fn gen_frobenius_instance(r: usize, g: usize, transposed: bool, seed: u64) -> Result<FrobeniusInstance, GenError> {
    let n = r + 1;
    if g < n * n {
        return Err(GenError::BadDimensions { needed: n * n, g });
    }
    let mut rng = rng_for(seed);
    let mixing = random_invertible(&mut rng, g, DEFAULT_ENTRY_BOUND);
    let b = LinFormMatrix::new(n, g, (0..n * n).map(|k| LinearForm::new(mixing.row(k).to_vec())).collect())
        .expect("consistent shape");
    let s0 = random_invertible(&mut rng, n, DEFAULT_ENTRY_BOUND);
    let t0 = random_invertible(&mut rng, n, DEFAULT_ENTRY_BOUND);
    let base = if transposed { b.transpose() } else { b.clone() };
    let a = base.transform(&s0, &t0).expect("square factors");
    Ok(FrobeniusInstance { a, b, s0, t0, transposed })
}

/// `Lambda` together with a curve on its determinantal hypersurface.
///
/// `Lambda|_C = M * D * N` where `M` is `(r+1) x r` and `N` is `r x (r+1)`,
/// both of full rank at every `t`, and `D = diag(h, 1, .., 1)`. The image
/// sheaf of `Lambda|_C` is spanned by `M`, that of its transpose by `N^t`,
/// and the rank drops exactly at the roots of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInstance {
    pub lambda: LinFormMatrix,
    pub curve: ParamCurve,
    pub planted_image: UniPolyMatrix,
    pub planted_coimage: UniPolyMatrix,
    /// `h`, absent when the rank is constant.
    pub drop_factor: Option<UniPoly>,
}

#[derive(Clone, Debug)]
pub struct CurveGenOptions {
    /// Number of distinct rational roots planted in `h`.
    pub drop_roots: usize,
    pub entry_bound: i64,
}

impl Default for CurveGenOptions {
    fn default() -> Self {
        CurveGenOptions { drop_roots: 0, entry_bound: DEFAULT_ENTRY_BOUND }
    }
}

/// Well-posed instance: generic rank `r` along the curve and no drop locus.
///
/// `(r, g, curve_degree) = (1, 3, 2)` is answered with the classical
/// catalecticant on the conic; every other request needs `g >= (r+1)^2`.
pub fn gen_curve_instance(r: usize, g: usize, curve_degree: usize, seed: u64) -> Result<CurveInstance, GenError> {
    if (r, g, curve_degree) == (1, 3, 2) {
        return Ok(catalecticant_conic());
    }
    gen_curve_instance_with(r, g, curve_degree, seed, &CurveGenOptions::default())
}

pub fn gen_curve_instance_with(
    r: usize,
    g: usize,
    curve_degree: usize,
    seed: u64,
    opts: &CurveGenOptions,
) -> Result<CurveInstance, GenError> {
    let n = r + 1;
    if g < n * n {
        return Err(GenError::BadDimensions { needed: n * n, g });
    }
    if r == 0 {
        return Err(GenError::LiftFailed("rank 0 leaves nothing to plant".into()));
    }
    if g < curve_degree + 1 {
        return Err(GenError::LiftFailed(format!(
            "{g} coordinates cannot span the {} monomials of degree <= {curve_degree}",
            curve_degree + 1
        )));
    }
    if opts.drop_roots + 1 > curve_degree {
        return Err(GenError::LiftFailed(format!(
            "degree {curve_degree} leaves no room for {} planted roots and a nonconstant factor",
            opts.drop_roots
        )));
    }
    let mut rng = rng_for(seed);
    let bound = opts.entry_bound;
    let budget = curve_degree - opts.drop_roots;
    let (deg_m, deg_n) = (budget.div_ceil(2), budget / 2);

    // curve: f = Q^-1 (1, t, .., t^d, 0, .., 0), so sum_k c_k f_k = w . (1, .., t^d, 0..)
    // for c = Q^t w
    let q = random_invertible(&mut rng, g, bound);
    let q_inv = q.inverse().expect("invertible");
    let coords: Vec<UniPoly> = (0..g)
        .map(|k| UniPoly::new((0..=curve_degree).map(|e| q_inv[(k, e)].clone()).collect()))
        .collect();
    let curve = ParamCurve::new(coords).expect("coordinates span the constants");

    let h = (opts.drop_roots > 0).then(|| {
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < opts.drop_roots {
            let a = rng.random_range(-bound..=bound);
            if !roots.contains(&a) {
                roots.push(a);
            }
        }
        roots.iter().fold(UniPoly::one(), |acc, &a| &acc * &UniPoly::linear_root(int(a)))
    });

    let mut d = UniPolyMatrix::identity(r);
    if let Some(h) = &h {
        d[(0, 0)] = h.clone();
    }

    // The n^2 lifted forms are (coefficients of the entry, free part) pushed
    // through Q^t; with `free` random coordinates they can only be
    // independent if the entry polynomials span at least n^2 - free dims.
    let free = g - curve_degree - 1;
    let mut best_span = 0;
    for _ in 0..MAX_ATTEMPTS {
        let m = planted_factor(&mut rng, n, deg_m, bound);
        let nt = planted_factor(&mut rng, n, deg_n, bound);
        let restricted = &(&m * &d) * &nt.transpose();
        let coeffs = ScalarMatrix::from_rows(
            restricted
                .entries()
                .iter()
                .map(|p| (0..=curve_degree).map(|e| p.coeff(e)).collect())
                .collect(),
        );
        let span = coeffs.rank();
        best_span = best_span.max(span);
        if span + free < n * n {
            continue;
        }
        let entries = (0..n * n)
            .map(|k| {
                let mut w = coeffs.row(k).to_vec();
                w.extend((0..free).map(|_| random_int(&mut rng, bound)));
                LinearForm::new(q.transpose().mul_vec(&w))
            })
            .collect();
        let lambda = LinFormMatrix::new(n, g, entries).expect("consistent shape");
        if !lambda.entry_independence_check() {
            continue;
        }
        let inst = CurveInstance {
            lambda,
            curve,
            planted_image: m,
            planted_coimage: nt,
            drop_factor: h,
        };
        check_curve_instance(&inst, r)?;
        return Ok(inst);
    }
    Err(GenError::LiftFailed(format!(
        "restricted entries span at most {best_span} dimensions and {free} coordinates are free, \
         short of the {} needed for independent entries",
        n * n
    )))
}

/// `P * [I_r; m(t)] * Q`: constant invertible `P`, `Q` and a random row
/// `m(t)` of degree `deg`. Full column rank at every `t`.
fn planted_factor<R: Rng + ?Sized>(rng: &mut R, n: usize, deg: usize, bound: i64) -> UniPolyMatrix {
    let r = n - 1;
    let mut core = UniPolyMatrix::zeros(n, r);
    for j in 0..r {
        core[(j, j)] = UniPoly::one();
        let mut coeffs: Vec<Scalar> = (0..=deg).map(|_| random_int(rng, bound)).collect();
        if deg > 0 && coeffs[deg].is_zero() {
            coeffs[deg] = int(1);
        }
        core[(r, j)] = UniPoly::new(coeffs);
    }
    let p = UniPolyMatrix::from_scalar(&random_invertible(rng, n, bound));
    let q = UniPolyMatrix::from_scalar(&random_invertible(rng, r, bound));
    &(&p * &core) * &q
}

fn check_curve_instance(inst: &CurveInstance, r: usize) -> Result<(), GenError> {
    let contained = containment_check(&inst.lambda, &inst.curve).expect("ambient matches");
    let restricted = restrict_to_param_curve(&inst.lambda, &inst.curve).expect("ambient matches");
    let profile = rank_profile(&restricted);
    let drops_ok = profile.drop_locus.is_empty() == inst.drop_factor.is_none();
    if contained && profile.generic_rank == r && drops_ok {
        Ok(())
    } else {
        Err(GenError::LiftFailed(format!(
            "generated instance violates its construction (contained {contained}, rank {})",
            profile.generic_rank
        )))
    }
}

/// `[[x1, x2], [x2, x3]]` on the conic `(1, t, t^2)`. Its entries are not
/// independent; it is the classical `r = 1` picture.
pub fn catalecticant_conic() -> CurveInstance {
    let lambda = LinFormMatrix::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]])
        .expect("consistent shape");
    let line = UniPolyMatrix::from_rows(vec![vec![UniPoly::one()], vec![UniPoly::from_ints(&[0, 1])]]);
    CurveInstance {
        lambda,
        curve: ParamCurve::rational_normal(2),
        planted_image: line.clone(),
        planted_coimage: line,
        drop_factor: None,
    }
}

/// `[[x1, x2], [x3, x4]]` on `(1, t, t, t^2)`: the same restriction as the
/// catalecticant but with independent entries.
pub fn independent_conic() -> CurveInstance {
    let t = UniPoly::from_ints(&[0, 1]);
    let curve = ParamCurve::new(vec![UniPoly::one(), t.clone(), t.clone(), UniPoly::from_ints(&[0, 0, 1])])
        .expect("coprime coordinates");
    let line = UniPolyMatrix::from_rows(vec![vec![UniPoly::one()], vec![t]]);
    CurveInstance {
        lambda: LinFormMatrix::coordinate(2, 4),
        curve,
        planted_image: line.clone(),
        planted_coimage: line,
        drop_factor: None,
    }
}
