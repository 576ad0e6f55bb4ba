//! Exact determinantal representations of hypersurfaces.
//!
//! * [`algebra`]: rationals, polynomials and matrices over them.
//! * [`linform`]: matrices of linear forms, determinants, tangent cones.
//! * [`frobenius`]: deciding `A = S B T` or `A = S B^t T` constructively.
//! * [`curve`]: restriction to curves, rank profiles, image and kernel
//!   sheaves, and the two-candidate reconstruction report.
//! * [`generate`]: seeded instance generators.

pub mod algebra;
pub mod curve;
pub mod frobenius;
pub mod generate;
pub mod linform;

pub use algebra::{AlgebraError, Monomial, MultiPoly, Scalar, ScalarMatrix, UniPoly, UniPolyMatrix};
pub use curve::{
    containment_check, cokernel_degree, fiber_image_at_points, image_sheaf_basis, kernel_sheaf_basis, rank_profile,
    reconstruct_bundle_pair, restrict_to_param_curve, CurveError, Disambiguation, DropFactor, FiberData,
    ParamCurve, PointCloudCurve, RankProfile, ReconstructionReport, SheafBasis,
};
pub use frobenius::{
    frobenius_decompose, frobenius_decompose_with, verify_certificate, DecomposeOptions, EquivalenceCertificate,
    FrobeniusError, Witness,
};
pub use generate::{gen_curve_instance, gen_frobenius_instance, CurveInstance, FrobeniusInstance, GenError};
pub use linform::{
    build_from_petri_tensor, tangent_cone_leading_form, DetrepError, LeadingForm, LinFormMatrix, LinearForm,
    PetriTensor, SampleField,
};
