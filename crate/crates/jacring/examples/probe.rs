//! Monte-Carlo probe of the weak Lefschetz property in regimes where no
//! general theorem is available, emitting the reproducible CSV stream.
//!
//! (3, 5) sits in the proven d >= n+2 range, so every smooth sample should
//! come back injective; (5, 3) is an open case and the rows are simply
//! recorded.
//!
//! Run with: cargo run --release --example probe

use jacring::probe::{run_probe, write_csv, ProbeConfig};
use jacring::{Field, Result};

fn main() -> Result<()> {
    for (n, d) in [(3u32, 5u32), (5, 3)] {
        let cfg = ProbeConfig {
            n,
            d,
            field: Field::Prime(10007),
            samples: 8,
            master_seed: 7,
        };
        eprintln!("probing (n, d) = ({n}, {d}) over F10007:");
        let records = run_probe(&cfg)?;
        write_csv(&records, std::io::stdout()).expect("stdout");
        eprintln!();
    }
    Ok(())
}
