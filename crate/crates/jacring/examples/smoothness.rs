//! Exact smoothness testing of projective hypersurfaces.
//!
//! Away from characteristic dividing the degree, a single rank computation
//! at the socle degree certifies whether the partials have a common
//! projective zero. When the characteristic divides the degree the Euler
//! shortcut fails and a bounded sweep over the extended ideal decides, or
//! honestly reports Unknown.
//!
//! Run with: cargo run --example smoothness

use jacring::{parse_polynomial, smoothness_check, Field, Result};

fn main() -> Result<()> {
    let cases = [
        ("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", "Q", 5),
        // A cone in P^4: the vertex (0:0:0:0:1) kills every partial.
        ("x0^3 + x1^3 + x2^3 + x3^3", "Q", 5),
        // Characteristic 3 divides the degree; the Fermat cubic becomes the
        // triple hyperplane (x0+x1+x2+x3+x4)^3.
        ("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", "F3", 5),
        // Characteristic 2 does not divide 3: still the fast path.
        ("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", "F2", 5),
        ("x0^2 + x1^2 + x2^2", "Q", 3),
    ];

    for (text, field_name, num_vars) in cases {
        let field: Field = field_name.parse()?;
        let form = parse_polynomial(text, field, num_vars)?;
        let verdict = smoothness_check(&form, None)?;
        println!(
            "{text} (in {num_vars} variables) over {field_name}: {:?} ({:?}, degree {})",
            verdict.status, verdict.method, verdict.detail
        );
    }
    Ok(())
}
