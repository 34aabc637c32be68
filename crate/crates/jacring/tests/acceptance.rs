//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them) and
//! enforcing its wall-clock budget.

mod common;

use std::time::Instant;

use common::{complete_intersection_hilbert, fermat, linear_form, matrix_rows, naive_rank};
use jacring::probe::{run_probe, write_csv, ProbeConfig, CSV_HEADER};
use jacring::{
    char2_fermat_demo, contracted_lines_demo, crosscheck_etale_routes, derive_seed,
    dual_membership, etale_check, graded_dimension, koszul_linear_relations, multiplication_map,
    parse_polynomial, random_homogeneous, random_invertible, random_linear_form,
    random_smooth_form, tangent_kernel, wlp_exhaustive, wlp_search, CoeffPolicy, EtaleStatus,
    ExhaustiveOutcome, Field, JacobianRing, LinearForm, Matrix, Polynomial, Scalar,
    SmoothnessStatus, VectorField, WlpOutcome,
};

// Criteria run one at a time so the wall-clock budgets measure the
// computation, not scheduling contention from sibling tests.
static SERIAL: std::sync::Mutex<()> = std::sync::Mutex::new(());

fn criterion<F>(name: &str, budget_ms: u128, run: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let _guard = SERIAL
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner());
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(run);
    let ms = start.elapsed().as_millis();
    match outcome {
        Ok(()) => {
            println!("[acceptance] {name}: PASS ({ms} ms, budget {budget_ms} ms)");
            assert!(
                ms <= budget_ms,
                "{name} exceeded its budget: {ms} ms > {budget_ms} ms"
            );
        }
        Err(cause) => {
            println!("[acceptance] {name}: FAIL ({ms} ms)");
            std::panic::resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_01_fermat_hilbert_function() {
    criterion("01 hilbert-function", 1_000, || {
        let jr = JacobianRing::new(fermat(Field::Rationals)).unwrap();
        let oracle = complete_intersection_hilbert(5, 3);
        assert_eq!(oracle, [1, 5, 10, 10, 5, 1]);
        let expected = [1usize, 5, 10, 10, 5, 1, 0];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(jr.hilbert_value(k as u32), *want, "degree {k}");
            assert_eq!(
                oracle.get(k).copied().unwrap_or(0),
                *want,
                "oracle agrees at degree {k}"
            );
        }
    });
}

#[test]
fn criterion_02_etale_negative_instance() {
    criterion("02 etale-negative-instance", 1_000, || {
        let f = fermat(Field::Rationals);
        let l = linear_form("x0", Field::Rationals);

        let jr = JacobianRing::new(f.clone()).unwrap();
        let map = multiplication_map(&jr, &l, 2).unwrap();
        assert_eq!(map.kernel_dimension(), 4);
        let classes: Vec<String> = map.kernel().iter().map(Polynomial::to_string).collect();
        assert_eq!(classes, ["x0*x1", "x0*x2", "x0*x3", "x0*x4"]);

        let tangent = tangent_kernel(&f, &l).unwrap();
        assert_eq!(tangent.kernel_dimension, 4);
        // The four derivations x_i d/dx0 lie in the computed kernel.
        let rows: Vec<Vec<Scalar>> = tangent
            .elements
            .iter()
            .map(|e| e.vector_field.slot_coordinates())
            .collect();
        let span = Matrix::from_rows(Field::Rationals, rows)
            .unwrap()
            .rref()
            .matrix;
        for i in 1..5 {
            let mut components = vec![Polynomial::zero(Field::Rationals, 5); 5];
            components[0] = Polynomial::variable(Field::Rationals, 5, i);
            let candidate = VectorField::from_components(components).unwrap();
            assert!(
                span.in_span(&candidate.slot_coordinates())
                    .unwrap()
                    .is_some(),
                "x{i} d/dx0 must lie in the tangent kernel"
            );
        }

        let verdict = etale_check(&f, &l).unwrap();
        assert_eq!(verdict.status, EtaleStatus::NotEtale);
        assert_eq!(verdict.wlp_kernel_dimension, Some(4));
        assert_eq!(verdict.tangent_kernel_dimension, Some(4));
        assert_eq!(verdict.crosscheck_passed, Some(true));
    });
}

#[test]
fn criterion_03_etale_positive_instance() {
    criterion("03 etale-positive-instance", 1_000, || {
        let f = fermat(Field::Rationals);
        let l = linear_form("x0+x1+x2+x3+x4", Field::Rationals);

        let jr = JacobianRing::new(f.clone()).unwrap();
        let map = multiplication_map(&jr, &l, 2).unwrap();
        // Pre-verify the rank with the independent elimination oracle on
        // the same 10x10 matrix.
        assert_eq!(naive_rank(matrix_rows(map.matrix())), 10);
        assert_eq!(map.rank(), 10);
        assert!(map.is_injective());

        let tangent = tangent_kernel(&f, &l).unwrap();
        assert_eq!(tangent.kernel_dimension, 0);

        let verdict = etale_check(&f, &l).unwrap();
        assert_eq!(verdict.status, EtaleStatus::Etale);
        assert_eq!(verdict.crosscheck_passed, Some(true));
    });
}

#[test]
fn criterion_04_witness_search_at_desk_scale() {
    criterion("04 wlp-search", 30_000, || {
        let jr = JacobianRing::new(fermat(Field::Rationals)).unwrap();
        let witness = wlp_search(&jr, 2, 20, 0xFE57).unwrap();
        assert!(
            matches!(witness.outcome, WlpOutcome::WitnessFound { .. }),
            "Fermat search failed"
        );

        for i in 0..10u64 {
            let f = random_smooth_form(
                5,
                3,
                Field::Rationals,
                derive_seed(0x5EED_CAFE, i),
                CoeffPolicy::default(),
                16,
            )
            .unwrap();
            let jr = JacobianRing::new(f).unwrap();
            let witness = wlp_search(&jr, 2, 20, derive_seed(0xD1CE, i)).unwrap();
            assert!(
                matches!(witness.outcome, WlpOutcome::WitnessFound { .. }),
                "sample {i} found no witness in 20 trials"
            );
        }
    });
}

#[test]
fn criterion_05_characteristic_two_counterexample() {
    criterion("05 char2-fermat", 5_000, || {
        let jr = JacobianRing::new(fermat(Field::Prime(2))).unwrap();
        match wlp_exhaustive(&jr, 2, None).unwrap() {
            ExhaustiveOutcome::NoneInjective { failures } => {
                assert_eq!(failures.len(), 31, "all 31 projective classes enumerated");
                assert!(failures.iter().all(|(_, dim)| *dim >= 1));
            }
            ExhaustiveOutcome::Witness { form, .. } => {
                panic!("unexpected injective form {form} over F2")
            }
        }
        let demo = char2_fermat_demo().unwrap();
        assert!(demo.product_class_nonzero);
        assert!(demo.repeated_product_class_zero);
        assert_eq!(demo.squares_span_dimension, 5);
        assert!(demo.squares_span_equals_ideal_piece);
    });
}

#[test]
fn criterion_06_crosscheck_battery() {
    criterion("06 crosscheck-battery", 120_000, || {
        let field = Field::Prime(10007);
        let mut agreements = 0;
        for i in 0..50u64 {
            let f = random_smooth_form(
                5,
                3,
                field,
                derive_seed(0xBA77E51, i),
                CoeffPolicy::default(),
                32,
            )
            .unwrap();
            let mut chosen = None;
            for j in 0..32u64 {
                let l = random_linear_form(
                    5,
                    field,
                    derive_seed(derive_seed(0x11AE, i), j),
                    CoeffPolicy::default(),
                );
                if !dual_membership(&f, &l).unwrap() {
                    chosen = Some(l);
                    break;
                }
            }
            let l = chosen.expect("a hyperplane with smooth section");
            let report = crosscheck_etale_routes(&f, &l).unwrap();
            assert!(report.equivalence_holds, "sample {i}: {report:?}");
            assert_eq!(
                report.field_to_class_certificates, report.tangent_kernel_dimension,
                "sample {i}: tangent certificates"
            );
            assert_eq!(
                report.class_to_field_certificates, report.wlp_kernel_dimension,
                "sample {i}: multiplication certificates"
            );
            if report.passed {
                agreements += 1;
            }
        }
        assert_eq!(agreements, 50, "equivalence agreement must be 50/50");
    });
}

#[test]
fn criterion_07_koszul_uniqueness() {
    criterion("07 koszul-uniqueness", 30_000, || {
        for i in 0..10u64 {
            let f = random_smooth_form(
                5,
                3,
                Field::Rationals,
                derive_seed(0x4B5A, i),
                CoeffPolicy::default(),
                16,
            )
            .unwrap();
            let basis = koszul_linear_relations(&f).unwrap();
            assert_eq!(basis.dimension(), 1, "sample {i}");
            assert!(basis.relations[0].verify(&f), "sample {i}: identity");
            assert!(
                basis.relations[0].is_euler_multiple(),
                "sample {i}: euler span"
            );
        }
        let cone = parse_polynomial("x0^3+x1^3+x2^3+x3^3", Field::Rationals, 5).unwrap();
        let cone_basis = koszul_linear_relations(&cone).unwrap();
        assert!(cone_basis.dimension() > 1, "cone kernel strictly exceeds 1");
    });
}

#[test]
fn criterion_08_contracted_lines() {
    criterion("08 contracted-lines", 5_000, || {
        let report = contracted_lines_demo(&[0, 1, 2, 3]).unwrap();
        assert_eq!(report.rows.len(), 4);
        for row in &report.rows {
            assert!(row.kernel_dimension >= 3, "t = {}", row.t);
            assert!(row.exhibited_in_kernel, "t = {}", row.t);
            assert!(row.exhibited_independent, "t = {}", row.t);
        }
        assert_eq!(report.rows[0].kernel_dimension, 4);
    });
}

#[test]
fn criterion_09_remark_one_probe() {
    criterion("09 wlp-probe", 300_000, || {
        let field = Field::Prime(10007);

        // (3, 5): inside the proved d >= n+2 regime; every smooth sample
        // must come back injective.
        let proved = ProbeConfig {
            n: 3,
            d: 5,
            field,
            samples: 20,
            master_seed: 0xA5,
        };
        let records = run_probe(&proved).unwrap();
        assert_eq!(records.len(), 20);
        for r in &records {
            assert_eq!(r.smooth, SmoothnessStatus::Smooth, "sample {}", r.sample);
            assert_eq!(r.wlp_injective, Some(true), "sample {}", r.sample);
        }

        // (5, 3): open case; the stream is recorded without assertions on
        // the outcomes, but must be deterministic and well-formed.
        let open = ProbeConfig {
            n: 5,
            d: 3,
            field,
            samples: 20,
            master_seed: 0xA5,
        };
        let first = run_probe(&open).unwrap();
        let second = run_probe(&open).unwrap();
        assert_eq!(first.len(), 20);
        for (a, b) in first.iter().zip(&second) {
            assert_eq!(a.sample, b.sample);
            assert_eq!(a.seed, b.seed);
            assert_eq!(a.smooth, b.smooth);
            assert_eq!(a.wlp_injective, b.wlp_injective);
            assert_eq!(a.kernel_dimension, b.kernel_dimension);
        }
        let mut csv = Vec::new();
        write_csv(&first, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(text.lines().count(), 21);
    });
}

#[test]
fn criterion_10_property_suites() {
    criterion("10 property-suites", 120_000, || {
        let fields = [
            Field::Rationals,
            Field::Prime(2),
            Field::Prime(3),
            Field::Prime(10007),
        ];

        // Rank-nullity bookkeeping across fields and degrees.
        for (fi, field) in fields.iter().enumerate() {
            let f = random_homogeneous(4, 3, *field, 1000 + fi as u64, CoeffPolicy::default());
            let jr = JacobianRing::new(f).unwrap();
            for k in 0..=5u32 {
                assert_eq!(
                    jr.ideal_dimension(k) + jr.hilbert_value(k),
                    graded_dimension(4, k),
                    "{field:?} degree {k}"
                );
            }
        }

        // Gorenstein symmetry and the generating series for smooth forms.
        let oracle = complete_intersection_hilbert(5, 3);
        for seed in [7u64, 8, 9] {
            let f = random_smooth_form(5, 3, Field::Prime(10007), seed, CoeffPolicy::default(), 16)
                .unwrap();
            let jr = JacobianRing::new(f).unwrap();
            for k in 0..=6u32 {
                assert_eq!(
                    jr.hilbert_value(k),
                    oracle.get(k as usize).copied().unwrap_or(0)
                );
            }
            for k in 0..=5u32 {
                assert_eq!(
                    jr.hilbert_value(k),
                    jr.hilbert_value(5 - k),
                    "symmetry at {k}"
                );
            }
        }
        let fq =
            random_smooth_form(5, 3, Field::Rationals, 21, CoeffPolicy::default(), 16).unwrap();
        let jq = JacobianRing::new(fq).unwrap();
        for k in 0..=5u32 {
            assert_eq!(jq.hilbert_value(k), jq.hilbert_value(5 - k));
        }

        // Coordinate-change equivariance of multiplication kernels.
        for seed in [31u64, 32, 33] {
            let field = Field::Prime(10007);
            let f = random_homogeneous(5, 3, field, seed, CoeffPolicy::default());
            let a = random_invertible(field, 5, seed + 100, CoeffPolicy::default());
            let g = f.change_of_coordinates(&a).unwrap();
            let l = random_linear_form(5, field, seed + 200, CoeffPolicy::default());
            let la = LinearForm::new(l.poly().change_of_coordinates(&a).unwrap()).unwrap();
            let jf = JacobianRing::new(f).unwrap();
            let jg = JacobianRing::new(g).unwrap();
            let kf = multiplication_map(&jf, &l, 2).unwrap().kernel_dimension();
            let kg = multiplication_map(&jg, &la, 2).unwrap().kernel_dimension();
            assert_eq!(kf, kg, "seed {seed}");
        }

        // The Euler identity for 100 random homogeneous forms.
        let mut checked = 0;
        for field in fields {
            for i in 0..25u64 {
                let nv = 2 + (i % 4) as usize; // 2..5 variables
                let d = 1 + (i % 5) as u32; // degrees 1..5
                let f = random_homogeneous(nv, d, field, 5000 + i, CoeffPolicy::default());
                assert!(f.euler_check().unwrap(), "{field:?} sample {i}");
                checked += 1;
            }
        }
        assert_eq!(checked, 100);
    });
}
