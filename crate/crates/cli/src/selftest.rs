//! Property suite behind `detrep selftest`.
//!
//! Each check runs `trials` seeded instances and prints one line. The suite
//! is a quick version of the library's acceptance tests; the field flag
//! selects where the randomized genericity probes sample.

use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use detrep::algebra::{det_multipoly_matrix, random_int, MultiPoly, Scalar};
use detrep::curve::{
    containment_check, image_sheaf_basis, kernel_sheaf_basis, rank_profile, reconstruct_bundle_pair,
    restrict_to_param_curve, Disambiguation,
};
use detrep::frobenius::{frobenius_decompose, frobenius_decompose_with, verify_certificate, DecomposeOptions};
use detrep::generate::{
    gen_curve_instance, gen_curve_instance_with, gen_frobenius_instance, random_invertible, random_linform_matrix,
    CurveGenOptions,
};
use detrep::linform::{tangent_cone_leading_form, LinFormMatrix, LinearForm, SampleField};
use detrep::{EquivalenceCertificate, FrobeniusError};

use crate::format::{Body, FieldTag, InstanceFile};
use crate::RunConfig;

type Check = fn(&RunConfig) -> Result<(), String>;

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> std::io::Result<bool> {
    let checks: [(&str, Check); 10] = [
        ("frobenius round trip", round_trip),
        ("certificate uniqueness", uniqueness),
        ("refutation", refutation),
        ("determinant multiplicativity", determinant),
        ("tangent cone", tangent_cone),
        ("rank along the curve", curve_rank),
        ("sheaf saturation", saturation),
        ("reconstruction", reconstruction),
        ("text format round trip", text_format),
        ("genericity probe", genericity),
    ];
    let mut all = true;
    for (name, check) in checks {
        match check(cfg) {
            Ok(()) => writeln!(out, "PASS  {name}")?,
            Err(e) => {
                all = false;
                writeln!(out, "FAIL  {name}: {e}")?;
            }
        }
    }
    Ok(all)
}

fn seeds(cfg: &RunConfig) -> impl Iterator<Item = (usize, u64)> + '_ {
    (0..cfg.trials).map(move |k| (k, cfg.seed.wrapping_add(k as u64)))
}

fn round_trip(cfg: &RunConfig) -> Result<(), String> {
    for (k, seed) in seeds(cfg) {
        let r = 1 + k % 3;
        let transposed = k % 2 == 1;
        let inst = gen_frobenius_instance(r, (r + 1) * (r + 1), transposed, seed).map_err(|e| e.to_string())?;
        let cert = frobenius_decompose(&inst.a, &inst.b).map_err(|e| format!("seed {seed}: {e}"))?;
        let planted = EquivalenceCertificate {
            s: inst.s0.clone(),
            t: inst.t0.clone(),
            transposed,
            c: cert.c.clone(),
        };
        if !verify_certificate(&inst.a, &inst.b, &cert) || cert.scalar_ratio(&planted).is_none() {
            return Err(format!("seed {seed}: certificate mismatch"));
        }
    }
    Ok(())
}

fn uniqueness(cfg: &RunConfig) -> Result<(), String> {
    for (k, seed) in seeds(cfg) {
        let r = 1 + k % 3;
        let inst = gen_frobenius_instance(r, (r + 1) * (r + 1), k % 2 == 0, seed).map_err(|e| e.to_string())?;
        let run = |gauge, skip| {
            frobenius_decompose_with(
                &inst.a,
                &inst.b,
                &DecomposeOptions { gauge_seed: Some(gauge), skip_normalization: skip },
            )
            .map_err(|e| e.to_string())
        };
        let (a, b) = (run(seed, true)?, run(seed ^ 0x9e37, true)?);
        if a.scalar_ratio(&b).is_none() {
            return Err(format!("seed {seed}: raw certificates not proportional"));
        }
        if run(seed, false)? != run(seed ^ 0x9e37, false)? {
            return Err(format!("seed {seed}: normalized certificates differ"));
        }
    }
    Ok(())
}

fn refutation(cfg: &RunConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in 0..cfg.trials {
        let r = 1 + k % 2;
        let g = (r + 1) * (r + 1);
        let a = random_linform_matrix(&mut rng, r, g, 5);
        let b = random_linform_matrix(&mut rng, r, g, 5);
        match frobenius_decompose(&a, &b) {
            Err(FrobeniusError::NotEquivalent(_)) | Err(FrobeniusError::DependentEntries(_)) => {}
            Ok(cert) if verify_certificate(&a, &b, &cert) => {}
            other => return Err(format!("pair {k}: {other:?}")),
        }
    }
    Ok(())
}

fn determinant(cfg: &RunConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in 0..cfg.trials {
        let r = k % 3;
        let b = random_linform_matrix(&mut rng, r, 3, 3);
        let s = random_invertible(&mut rng, r + 1, 3);
        let t = random_invertible(&mut rng, r + 1, 3);
        let lhs = b.transform(&s, &t).map_err(|e| e.to_string())?.determinant_hypersurface();
        let c = s.det().map_err(|e| e.to_string())? * t.det().map_err(|e| e.to_string())?;
        let rhs = det_multipoly_matrix(r + 1, &b.to_multipoly_entries()).scale(&c);
        if lhs != rhs {
            return Err(format!("instance {k}"));
        }
    }
    Ok(())
}

fn tangent_cone(cfg: &RunConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in 0..cfg.trials {
        let g = 3;
        let n = (k % 3) as u32 + 1;
        // h = x1^n + (random linear form) * x2^n, recentred at a random point
        let lin: Vec<Scalar> = (0..g).map(|_| random_int(&mut rng, 3)).collect();
        let mut h = MultiPoly::var(g, 0);
        let mut x2n = MultiPoly::one(g);
        for _ in 1..n {
            h = &h * &MultiPoly::var(g, 0);
        }
        for _ in 0..n {
            x2n = &x2n * &MultiPoly::var(g, 1);
        }
        let h = &h + &(&MultiPoly::linear(&lin) * &x2n);
        let point: Vec<Scalar> = (0..g).map(|_| random_int(&mut rng, 3)).collect();
        let neg: Vec<Scalar> = point.iter().map(|v| -v).collect();
        let f = h.translate(&neg);
        let lf = tangent_cone_leading_form(&f, &point).map_err(|e| e.to_string())?;
        if lf.multiplicity != n || !lf.form.is_homogeneous() || lf.form != h.homogeneous_component(n) {
            return Err(format!("polynomial {k}"));
        }
    }
    Ok(())
}

fn curve_rank(cfg: &RunConfig) -> Result<(), String> {
    for (k, seed) in seeds(cfg) {
        let (r, g, d) = [(1, 4, 2), (1, 5, 3), (2, 9, 2), (2, 10, 4)][k % 4];
        let inst = gen_curve_instance(r, g, d, seed).map_err(|e| e.to_string())?;
        let prof = rank_profile(&restrict_to_param_curve(&inst.lambda, &inst.curve).map_err(|e| e.to_string())?);
        let contained = containment_check(&inst.lambda, &inst.curve).map_err(|e| e.to_string())?;
        if !contained || prof.generic_rank != r || !prof.drop_locus.is_empty() {
            return Err(format!("seed {seed}"));
        }
    }
    Ok(())
}

fn saturation(cfg: &RunConfig) -> Result<(), String> {
    for (k, seed) in seeds(cfg) {
        let (r, g, d) = [(1, 5, 3), (2, 10, 4)][k % 2];
        let opts = CurveGenOptions { drop_roots: 1, ..Default::default() };
        let inst = gen_curve_instance_with(r, g, d, seed, &opts).map_err(|e| e.to_string())?;
        let m = restrict_to_param_curve(&inst.lambda, &inst.curve).map_err(|e| e.to_string())?;
        let image = image_sheaf_basis(&m).map_err(|e| e.to_string())?;
        let kernel = kernel_sheaf_basis(&m).map_err(|e| e.to_string())?;
        let h = inst.drop_factor.ok_or("no planted drop")?;
        let root = -h.coeff(0) / h.coeff(1);
        if !image.check_saturated() || !kernel.check_saturated() || image.basis.eval(&root).rank() != r {
            return Err(format!("seed {seed}"));
        }
    }
    Ok(())
}

fn reconstruction(cfg: &RunConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (k, seed) in seeds(cfg) {
        let (r, g, d) = [(1, 4, 2), (2, 9, 2)][k % 2];
        let inst = gen_curve_instance(r, g, d, seed).map_err(|e| e.to_string())?;
        let transposed = k % 4 >= 2;
        let s = random_invertible(&mut rng, r + 1, 5);
        let t = random_invertible(&mut rng, r + 1, 5);
        let base = if transposed { inst.lambda.transpose() } else { inst.lambda.clone() };
        let alpha = base.transform(&s, &t).map_err(|e| e.to_string())?;
        let rep = reconstruct_bundle_pair(&alpha, &inst.curve, Some(&inst.lambda)).map_err(|e| e.to_string())?;
        let want = if transposed { Disambiguation::Transpose } else { Disambiguation::Plain };
        if rep.disambiguation != want {
            return Err(format!("seed {seed}: {:?}", rep.disambiguation));
        }
    }
    Ok(())
}

fn text_format(cfg: &RunConfig) -> Result<(), String> {
    for (k, seed) in seeds(cfg) {
        let r = 1 + k % 2;
        let inst = gen_frobenius_instance(r, (r + 1) * (r + 1), k % 2 == 0, seed).map_err(|e| e.to_string())?;
        let cert = frobenius_decompose(&inst.a, &inst.b).map_err(|e| e.to_string())?;
        let curve = gen_curve_instance(1, 4, 2, seed).map_err(|e| e.to_string())?;
        let report = reconstruct_bundle_pair(&curve.lambda, &curve.curve, None).map_err(|e| e.to_string())?;
        for body in [
            Body::LinFormMatrix(inst.a),
            Body::Certificate(cert),
            Body::Curve(curve.curve),
            Body::MultiPoly(curve.lambda.determinant_hypersurface()),
            Body::Report(Box::new(report)),
        ] {
            let text = InstanceFile::new(cfg.field, body).serialize();
            let back = InstanceFile::parse(&text).map_err(|e| e.to_string())?;
            if back.serialize() != text {
                return Err(format!("seed {seed}: {} not stable", back.body.kind()));
            }
        }
    }
    Ok(())
}

fn genericity(cfg: &RunConfig) -> Result<(), String> {
    let field = match cfg.field {
        FieldTag::Rationals => SampleField::Rationals,
        FieldTag::Prime(p) if p > 3 => SampleField::Prime(p),
        FieldTag::Prime(p) => return Err(format!("prime {p} must exceed r+1 = 3")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (_, seed) in seeds(cfg) {
        let inst = gen_frobenius_instance(2, 9, false, seed).map_err(|e| e.to_string())?;
        if !inst.b.genericity_probe_in(field, 8, &mut rng).map_err(|e| e.to_string())? {
            return Err(format!("seed {seed}: generic matrix flagged"));
        }
    }
    // a zero entry is a vanishing 1x1 minor
    let mut entries = LinFormMatrix::coordinate(3, 9).entries().to_vec();
    entries[4] = LinearForm::zero(9);
    let degenerate = LinFormMatrix::new(3, 9, entries).map_err(|e| e.to_string())?;
    if degenerate.genericity_probe_in(field, cfg.trials.max(1), &mut rng).map_err(|e| e.to_string())? {
        return Err("zero entry not detected".into());
    }
    Ok(())
}
