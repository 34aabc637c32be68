//! Seeded random generation of homogeneous forms.
//!
//! "General" elements are realized by sampling with an explicit seed and
//! re-verifying the open condition at the call site; there is no global
//! generator, so identical seeds give identical draws everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Scalar};
use crate::monomial::monomials_of_degree;
use crate::poly::{LinearForm, Polynomial};

/// Coefficient distribution for random forms.
///
/// Over the rationals coefficients are uniform integers in
/// `[-int_bound, int_bound]`; over a prime field they are uniform residues
/// and the bound is ignored. Small integers keep exact elimination cheap
/// while staying generic with overwhelming probability.
#[derive(Clone, Copy, Debug)]
pub struct CoeffPolicy {
    pub int_bound: i64,
}

impl Default for CoeffPolicy {
    fn default() -> Self {
        CoeffPolicy { int_bound: 9 }
    }
}

fn sample_scalar<R: Rng>(rng: &mut R, field: Field, policy: CoeffPolicy) -> Scalar {
    match field {
        Field::Rationals => field.integer(rng.random_range(-policy.int_bound..=policy.int_bound)),
        Field::Prime(p) => field.integer(rng.random_range(0..p as i64)),
    }
}

/// A nonzero homogeneous form of degree `d`, deterministic in `seed`. Every
/// degree-`d` monomial receives a sampled coefficient; an all-zero draw is
/// redrawn (only ever likely over tiny fields).
pub fn random_homogeneous(
    num_vars: usize,
    d: u32,
    field: Field,
    seed: u64,
    policy: CoeffPolicy,
) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = monomials_of_degree(num_vars, d);
    loop {
        let poly = Polynomial::from_terms(
            field,
            num_vars,
            basis
                .iter()
                .map(|m| (m.clone(), sample_scalar(&mut rng, field, policy))),
        );
        if !poly.is_zero() {
            return poly;
        }
    }
}

/// A random nonzero linear form.
pub fn random_linear_form(
    num_vars: usize,
    field: Field,
    seed: u64,
    policy: CoeffPolicy,
) -> LinearForm {
    LinearForm::new(random_homogeneous(num_vars, 1, field, seed, policy))
        .expect("draw is nonzero of degree 1")
}

/// A random invertible square matrix (redrawn until nonsingular).
pub fn random_invertible_matrix(
    field: Field,
    n: usize,
    seed: u64,
    policy: CoeffPolicy,
) -> crate::matrix::Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = crate::matrix::Matrix::zero(field, n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, sample_scalar(&mut rng, field, policy));
            }
        }
        if m.rank() == n {
            return m;
        }
    }
}

/// Mixes a master seed with a stream index into an independent per-item
/// seed (splitmix64 finalizer), so parallel and serial schedules agree.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
