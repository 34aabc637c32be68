//! The unramifiedness criterion for general (n, d), beyond cubic threefolds.
//!
//! For a smooth degree-d hypersurface and a hyperplane with smooth section,
//! the section map is unramified exactly when xL is injective in degree
//! d - 1. For d >= n + 2 this holds for general L; for (5, 3) the question
//! is open and the outcome is only recorded.
//!
//! Run with: cargo run --release --example unramified

use jacring::{
    derive_seed, dual_membership, random_linear_form, random_smooth_form, unramified_check,
    CoeffPolicy, Field, Result,
};

fn main() -> Result<()> {
    let field = Field::Prime(10007);
    for (n, d, label) in [(3usize, 5u32, "proved range d >= n+2"), (5, 3, "open case")] {
        let num_vars = n + 1;
        println!("(n, d) = ({n}, {d})  [{label}]");
        for i in 0..4u64 {
            let f = random_smooth_form(
                num_vars,
                d,
                field,
                derive_seed(17 + d as u64, i),
                CoeffPolicy::default(),
                32,
            )?;
            let mut l =
                random_linear_form(num_vars, field, derive_seed(91, i), CoeffPolicy::default());
            let mut tries = 0;
            while dual_membership(&f, &l)? && tries < 32 {
                tries += 1;
                l = random_linear_form(
                    num_vars,
                    field,
                    derive_seed(91 + tries, i),
                    CoeffPolicy::default(),
                );
            }
            let verdict = unramified_check(&f, &l)?;
            println!(
                "  sample {i}: unramified = {} (kernel dimension {} in degree {})",
                verdict.unramified, verdict.kernel_dimension, verdict.source_degree
            );
        }
    }
    Ok(())
}
