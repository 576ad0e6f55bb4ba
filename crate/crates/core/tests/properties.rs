use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use detrep::algebra::{column_primitive_part, gcd_all, int, Scalar, ScalarMatrix, UniPoly, UniPolyMatrix};
use detrep::curve::{image_sheaf_basis, restrict_to_param_curve};
use detrep::frobenius::{frobenius_decompose, verify_certificate};
use detrep::generate::{gen_curve_instance, random_invertible, random_linform_matrix};

fn small_matrix(max: usize) -> impl Strategy<Value = ScalarMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-4i64..=4, r * c)
            .prop_map(move |v| ScalarMatrix::from_vec(r, c, v.into_iter().map(int).collect()))
    })
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-3i64..=3, 0..4).prop_map(|c| UniPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_and_kernel(m in small_matrix(5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel();
        prop_assert_eq!(k.cols() + m.rank(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn inverse_is_exact(m in small_matrix(4)) {
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(&inv * &m, ScalarMatrix::identity(m.rows()));
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn primitive_part(col in prop::collection::vec(small_poly(), 1..4), f in small_poly()) {
        let scaled: Vec<UniPoly> = col.iter().map(|p| p * &f).collect();
        match column_primitive_part(&scaled) {
            Ok((prim, content)) => {
                prop_assert!(gcd_all(&prim).unwrap().is_one());
                for (p, q) in prim.iter().zip(&scaled) {
                    prop_assert_eq!(&(p * &content), q);
                }
            }
            Err(_) => prop_assert!(scaled.iter().all(UniPoly::is_zero)),
        }
    }

    #[test]
    fn restriction_commutes_with_evaluation(seed in 0u64..500, t in -20i64..20) {
        let inst = gen_curve_instance(1 + (seed % 2) as usize, 9 + (seed % 2) as usize, 2, seed).unwrap();
        let t0 = int(t);
        let restricted = restrict_to_param_curve(&inst.lambda, &inst.curve).unwrap();
        let direct = inst.lambda.evaluate_at_point(&inst.curve.point(&t0)).unwrap();
        prop_assert_eq!(restricted.eval(&t0), direct.clone());
        prop_assert_eq!(direct.rank(), direct.transpose().rank());
        prop_assert_eq!(direct.kernel().cols() + direct.rank(), inst.lambda.size());
    }

    #[test]
    fn image_is_covariant(seed in 0u64..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = gen_curve_instance(2, 9, 2, seed).unwrap();
        let s = random_invertible(&mut rng, 3, 4);
        let t = random_invertible(&mut rng, 3, 4);
        let moved = inst.lambda.transform(&s, &t).unwrap();
        let before = image_sheaf_basis(&restrict_to_param_curve(&inst.lambda, &inst.curve).unwrap()).unwrap();
        let after = image_sheaf_basis(&restrict_to_param_curve(&moved, &inst.curve).unwrap()).unwrap();
        prop_assert_eq!(before.degree_invariant, after.degree_invariant);
        for k in -3i64..=3 {
            let t0 = Scalar::new(k.into(), 2.into());
            prop_assert_eq!(after.fiber(&t0), (&s * &before.basis.eval(&t0)).column_space());
        }
    }

    #[test]
    fn degree_invariant_ignores_column_operations(
        entries in prop::collection::vec(small_poly(), 6),
        mix in prop::collection::vec(-3i64..=3, 4),
    ) {
        let m = UniPolyMatrix::from_vec(3, 2, entries);
        let c = ScalarMatrix::from_vec(2, 2, mix.into_iter().map(int).collect());
        prop_assume!(!m.is_zero() && c.rank() == 2);
        let mixed = &m * &UniPolyMatrix::from_scalar(&c);
        let a = image_sheaf_basis(&m).unwrap();
        let b = image_sheaf_basis(&mixed).unwrap();
        prop_assert_eq!(a.degree_invariant, b.degree_invariant);
        prop_assert_eq!(a.basis, b.basis);
    }

    #[test]
    fn random_transform_round_trip(seed in 0u64..300, transposed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_linform_matrix(&mut rng, 2, 9, 5);
        prop_assume!(b.entry_independence_check());
        let s = random_invertible(&mut rng, 3, 5);
        let t = random_invertible(&mut rng, 3, 5);
        let base = if transposed { b.transpose() } else { b.clone() };
        let a = base.transform(&s, &t).unwrap();
        let cert = frobenius_decompose(&a, &b).unwrap();
        prop_assert_eq!(cert.transposed, transposed);
        prop_assert!(verify_certificate(&a, &b, &cert));
        prop_assert!(!cert.c.is_zero());
        prop_assert!(cert.s.entries().iter().find(|v| !v.is_zero()).unwrap().is_one());
    }
}
