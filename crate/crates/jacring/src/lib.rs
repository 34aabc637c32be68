//! Exact computations in the Jacobian ring of a smooth hypersurface.
//!
//! Everything reduces to dense exact linear algebra over `Q` or a prime
//! field: graded pieces of the Jacobian ideal, Hilbert functions, smoothness
//! certificates, multiplication maps `xL` between graded pieces (the weak
//! Lefschetz property), and the tangent-space analysis that decides whether
//! the hyperplane-section map of a smooth cubic threefold is etale at a
//! given hyperplane.
//!
//! Start with the runnable examples (`cargo run --example hilbert`) or the
//! `jacring` binary (`jacring hilbert --poly "x0^3 + x1^3 + x2^3 + x3^3 +
//! x4^3" --field Q --max-degree 6`).

pub mod error;
pub mod field;
pub mod jacobian;
pub mod lefschetz;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod probe;
pub mod random;
pub mod report;
pub mod section;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use jacobian::{
    random_smooth_form, smoothness_check, socle_degree, JacobianRing, SmoothnessStatus,
    SmoothnessVerdict,
};
pub use lefschetz::{
    char2_fermat_demo, multiplication_map, wlp_exhaustive, wlp_injective, wlp_search,
    ExhaustiveOutcome, MultiplicationMap, WlpOutcome, WlpWitness,
};
pub use matrix::{Matrix, RowBasis};
pub use monomial::{graded_dimension, monomials_of_degree, Monomial};
pub use parse::{infer_num_vars, parse_polynomial};
pub use poly::{LinearForm, Polynomial};
pub use probe::{run_probe, write_csv, ProbeConfig, ProbeRecord};
pub use random::{
    derive_seed, random_homogeneous, random_invertible_matrix as random_invertible,
    random_linear_form, CoeffPolicy,
};
pub use section::{
    contracted_lines_demo, crosscheck_etale_routes, dual_membership, etale_check,
    fermat_kernel_demo, koszul_linear_relations, koszul_uniqueness_demo, tangent_kernel,
    unramified_check, CrosscheckReport, EtaleStatus, EtaleVerdict, KoszulBasis, KoszulRelation,
    TangentKernelReport, UnramifiedVerdict, VectorField,
};
