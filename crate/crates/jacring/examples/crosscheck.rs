//! Batch cross-validation of the two etale routes on random input.
//!
//! For seeded random pairs (smooth cubic threefold, hyperplane with smooth
//! section) over a large prime field, the multiplication kernel and the
//! tangent kernel must vanish together, and every nontrivial kernel element
//! must carry an exact certificate identity.
//!
//! Run with: cargo run --release --example crosscheck

use jacring::{
    crosscheck_etale_routes, derive_seed, dual_membership, random_linear_form, random_smooth_form,
    CoeffPolicy, Field, Result,
};

fn main() -> Result<()> {
    let field = Field::Prime(10007);
    let samples = 10;
    let master = 0xC0DE;

    let mut agreements = 0;
    for i in 0..samples {
        let f = random_smooth_form(
            5,
            3,
            field,
            derive_seed(master, i),
            CoeffPolicy::default(),
            32,
        )?;
        // Resample the hyperplane until the section is smooth.
        let mut l = None;
        for j in 0..32 {
            let candidate = random_linear_form(
                5,
                field,
                derive_seed(derive_seed(master, i), 100 + j),
                CoeffPolicy::default(),
            );
            if !dual_membership(&f, &candidate)? {
                l = Some(candidate);
                break;
            }
        }
        let l = l.expect("a non-tangent hyperplane within the budget");
        let report = crosscheck_etale_routes(&f, &l)?;
        println!(
            "sample {i}: xL kernel {}, tangent kernel {}, equivalence {}, certificates {}/{} + {}/{}",
            report.wlp_kernel_dimension,
            report.tangent_kernel_dimension,
            report.equivalence_holds,
            report.field_to_class_certificates,
            report.tangent_kernel_dimension,
            report.class_to_field_certificates,
            report.wlp_kernel_dimension,
        );
        if report.passed {
            agreements += 1;
        }
    }
    println!("\n{agreements}/{samples} samples agree on both routes");
    assert_eq!(agreements, samples);
    Ok(())
}
