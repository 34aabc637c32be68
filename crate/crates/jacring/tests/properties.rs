//! Cross-module property tests on randomized input: exact identities that
//! must hold structurally, not just on the worked examples.

mod common;

use proptest::prelude::*;

use jacring::{
    monomials_of_degree, parse_polynomial, Field, JacobianRing, LinearForm, Matrix, Monomial,
    Polynomial, Scalar,
};

fn scalar_strategy(field: Field) -> BoxedStrategy<Scalar> {
    match field {
        Field::Rationals => (-9i64..=9, 1i64..=9)
            .prop_map(|(n, d)| {
                Field::Rationals
                    .fraction(&n.into(), &d.into())
                    .expect("nonzero denominator")
            })
            .boxed(),
        Field::Prime(p) => (0..p as i64).prop_map(move |r| field.integer(r)).boxed(),
    }
}

fn homogeneous_strategy(
    field: Field,
    num_vars: usize,
    degree: u32,
) -> impl Strategy<Value = Polynomial> {
    let basis = monomials_of_degree(num_vars, degree);
    let len = basis.len();
    proptest::collection::vec(scalar_strategy(field), len).prop_map(move |coeffs| {
        Polynomial::from_terms(field, num_vars, basis.iter().cloned().zip(coeffs))
    })
}

fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(10007)),
    ]
}

fn invertible_strategy(field: Field, n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(field), n * n).prop_filter_map(
        "matrix must be invertible",
        move |entries| {
            let mut m = Matrix::zero(field, n, n);
            for (i, e) in entries.into_iter().enumerate() {
                m.set(i / n, i % n, e);
            }
            (m.rank() == n).then_some(m)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parse_format_round_trip(
        (field, poly) in any_field().prop_flat_map(|f| {
            (Just(f), (2usize..=4, 0u32..=3).prop_flat_map(move |(nv, d)| homogeneous_strategy(f, nv, d)))
        })
    ) {
        let text = poly.to_string();
        let reparsed = parse_polynomial(&text, field, poly.num_vars().max(1))?;
        prop_assert_eq!(reparsed, poly);
    }

    #[test]
    fn euler_identity_is_formal(
        (field, poly) in any_field().prop_flat_map(|f| {
            (Just(f), (2usize..=4, 1u32..=4).prop_flat_map(move |(nv, d)| homogeneous_strategy(f, nv, d)))
        })
    ) {
        let _ = field;
        prop_assert!(poly.euler_check()?);
    }

    #[test]
    fn derivatives_obey_the_chain_rule(
        (poly, substitution) in (2usize..=3).prop_flat_map(|nv| {
            (
                homogeneous_strategy(Field::Rationals, nv, 3),
                invertible_strategy(Field::Rationals, nv),
            )
        })
    ) {
        // d(F o A)/dx_i = sum_j A[j][i] * (dF/dx_j) o A
        let nv = poly.num_vars();
        let composed = poly.change_of_coordinates(&substitution)?;
        for i in 0..nv {
            let lhs = composed.partial_derivative(i);
            let mut rhs = Polynomial::zero(Field::Rationals, nv);
            for j in 0..nv {
                let term = poly
                    .partial_derivative(j)
                    .change_of_coordinates(&substitution)?
                    .scale(substitution.get(j, i));
                rhs = rhs.add(&term);
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn restriction_agrees_with_adapted_coordinates(
        (poly, l) in (3usize..=4).prop_flat_map(|nv| {
            (
                homogeneous_strategy(Field::Rationals, nv, 2),
                proptest::collection::vec(-5i64..=5, nv).prop_filter_map(
                    "nonzero linear form",
                    move |coeffs| {
                        let scalars: Vec<Scalar> =
                            coeffs.iter().map(|&c| Field::Rationals.integer(c)).collect();
                        LinearForm::from_coefficients(Field::Rationals, &scalars).ok()
                    },
                ),
            )
        })
    ) {
        // Restricting along L equals adapting coordinates so L = x0 and
        // restricting along x0, with the variable relabeling both paths
        // share by construction.
        let a = l.coordinates_sending_to_x0();
        let adapted = poly.change_of_coordinates(&a)?;
        let x0 = LinearForm::new(Polynomial::variable(Field::Rationals, poly.num_vars(), 0))
            .expect("x0 is a linear form");
        prop_assert_eq!(l.restrict(&poly), x0.restrict(&adapted));
    }

    #[test]
    fn rref_is_idempotent_and_kernel_annihilates(
        (rows, cols, entries) in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            (
                Just(r),
                Just(c),
                proptest::collection::vec(scalar_strategy(Field::Rationals), r * c),
            )
        })
    ) {
        let mut m = Matrix::zero(Field::Rationals, rows, cols);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i / cols, i % cols, e);
        }
        let reduced = m.rref();
        let again = reduced.matrix.rref();
        prop_assert_eq!(&reduced.matrix, &again.matrix);
        prop_assert_eq!(reduced.rank, again.rank);
        prop_assert!(reduced.pivots.windows(2).all(|w| w[0] < w[1]));

        let kernel = m.kernel_basis();
        prop_assert_eq!(reduced.rank + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mat_vec(v)?.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn span_membership_reconstructs_coefficients(
        (basis_rows, coeffs) in (2usize..=4, 3usize..=5).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(
                    proptest::collection::vec(scalar_strategy(Field::Rationals), c),
                    r,
                ),
                proptest::collection::vec(-4i64..=4, r),
            )
        })
    ) {
        let field = Field::Rationals;
        let cols = basis_rows[0].len();
        let m = Matrix::from_rows(field, basis_rows)?;
        let reduced = m.rref().matrix;
        // Build a vector guaranteed to lie in the row span.
        let mut v = vec![field.zero(); cols];
        for (row_idx, &c) in coeffs.iter().enumerate().take(reduced.rows()) {
            let c = field.integer(c);
            for j in 0..cols {
                v[j] = v[j].clone() + c.clone() * reduced.get(row_idx, j).clone();
            }
        }
        let found = reduced.in_span(&v)?;
        prop_assert!(found.is_some());
        // The returned coordinates reconstruct v exactly.
        let coords = found.unwrap();
        let mut rebuilt = vec![field.zero(); cols];
        for (row_idx, c) in coords.iter().enumerate() {
            for j in 0..cols {
                rebuilt[j] = rebuilt[j].clone() + c.clone() * reduced.get(row_idx, j).clone();
            }
        }
        prop_assert_eq!(rebuilt, v);
    }

    #[test]
    fn jacobian_rank_nullity_on_random_cubics(
        (field, poly) in prop_oneof![Just(Field::Rationals), Just(Field::Prime(10007))]
            .prop_flat_map(|f| (Just(f), homogeneous_strategy(f, 4, 3)))
    ) {
        prop_assume!(!poly.is_zero());
        let _ = field;
        let jr = JacobianRing::new(poly)?;
        for k in 0..=4u32 {
            prop_assert_eq!(
                jr.ideal_dimension(k) + jr.hilbert_value(k),
                jacring::graded_dimension(4, k)
            );
        }
    }
}

// Statistical openness check: injectivity holds for one explicit form, so
// the seeded search must succeed in at least 95 of 100 fresh-seed runs
// (documented seed). On the Fermat cubic single draws fail noticeably often
// (any form with a vanishing coordinate is non-injective), which is exactly
// why the search takes several trials.
#[test]
fn witness_search_is_generically_successful_on_the_fermat_cubic() {
    let jr = JacobianRing::new(common::fermat(Field::Rationals)).unwrap();
    let witness = common::linear_form("x0+x1+x2+x3+x4", Field::Rationals);
    assert!(jacring::multiplication_map(&jr, &witness, 2)
        .unwrap()
        .is_injective());

    let mut hits = 0;
    for i in 0..100u64 {
        let search = jacring::wlp_search(&jr, 2, 20, jacring::derive_seed(0x0B5E55, i)).unwrap();
        if matches!(search.outcome, jacring::WlpOutcome::WitnessFound { .. }) {
            hits += 1;
        }
    }
    assert!(hits >= 95, "only {hits}/100 searches found a witness");
}

// Kernel elements certify themselves: reduce(L * k) is exactly zero.
#[test]
fn reported_kernels_multiply_to_zero() {
    let jr = JacobianRing::new(common::fermat(Field::Rationals)).unwrap();
    for text in ["x0", "x1", "x0-x1", "x0-2*x1"] {
        let l = common::linear_form(text, Field::Rationals);
        let map = jacring::multiplication_map(&jr, &l, 2).unwrap();
        for kernel_poly in map.kernel() {
            let product = l.poly().mul(kernel_poly);
            let class = jr.reduce_mod_ideal(&product, 3).unwrap();
            assert!(class.iter().all(Scalar::is_zero), "L = {text}");
        }
    }
}

// Etale verdicts are coordinate-free.
#[test]
fn etale_check_is_equivariant() {
    let field = Field::Prime(10007);
    let f = common::fermat(field);
    for seed in [1u64, 2, 3] {
        let a = jacring::random_invertible(field, 5, seed, jacring::CoeffPolicy::default());
        let g = f.change_of_coordinates(&a).unwrap();
        for text in ["x0", "x0+x1+x2+x3+x4", "x0+x1"] {
            let l = LinearForm::new(parse_polynomial(text, field, 5).unwrap()).unwrap();
            let la = LinearForm::new(l.poly().change_of_coordinates(&a).unwrap()).unwrap();
            let original = jacring::etale_check(&f, &l).unwrap();
            let moved = jacring::etale_check(&g, &la).unwrap();
            assert_eq!(original.status, moved.status, "seed {seed}, L = {text}");
            assert_eq!(
                original.wlp_kernel_dimension, moved.wlp_kernel_dimension,
                "seed {seed}, L = {text}"
            );
        }
    }
}

// The only monomial basis fact the whole coordinate system rests on.
#[test]
fn graded_pieces_are_coordinatized_by_descending_monomials() {
    let ms = monomials_of_degree(5, 2);
    assert_eq!(ms.len(), 15);
    assert_eq!(ms[0], Monomial::new(vec![2, 0, 0, 0, 0]));
    assert!(ms.windows(2).all(|w| w[0] > w[1]));
}
