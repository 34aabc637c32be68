//! The contracted pencils on the Fermat cubic threefold.
//!
//! For every t, the hyperplanes x0 = t x1 form a line in the dual space
//! along which the section map collapses: multiplication by x0 - t x1 has
//! kernel of dimension at least 3, exhibited by the classes
//! [(x0 + t x1) x_j] for j = 2, 3, 4.
//!
//! Run with: cargo run --example contracted_lines

use jacring::{contracted_lines_demo, Result};

fn main() -> Result<()> {
    let report = contracted_lines_demo(&[0, 1, 2, 3, 5, 10])?;
    for row in &report.rows {
        println!(
            "t = {:>2}: kernel dimension {}, exhibited classes in kernel = {}, independent = {}",
            row.t, row.kernel_dimension, row.exhibited_in_kernel, row.exhibited_independent
        );
    }
    assert!(report.passed());
    Ok(())
}
