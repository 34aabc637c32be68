//! Command-line front end. Parsing, dispatch and rendering only — all
//! mathematics lives in the library.
//!
//! Exit codes: 0 success, 1 failed demo assertion, 2 input error,
//! 3 resource refusal.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use jacring::error::Error;
use jacring::probe::{run_probe, write_csv, ProbeConfig};
use jacring::report::{
    exhaustive_payload, hilbert_payload, run_demo, wlp_given_payload, DemoReport, ReportEnvelope,
    WlpPayload,
};
use jacring::{
    etale_check, infer_num_vars, multiplication_map, parse_polynomial, smoothness_check,
    wlp_exhaustive, wlp_search, EtaleStatus, Field, JacobianRing, LinearForm, Polynomial,
};

#[derive(Parser)]
#[command(
    name = "jacring",
    version,
    about = "Exact Jacobian-ring computations: Hilbert functions, weak Lefschetz tests, \
             and the etale criterion for hyperplane sections of cubic threefolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial, e.g. "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"
    #[arg(long)]
    poly: Option<String>,

    /// Read the polynomial from a file instead
    #[arg(long, conflicts_with = "poly")]
    poly_file: Option<PathBuf>,

    /// Coefficient field: Q or F<p>
    #[arg(long, default_value = "Q")]
    field: String,

    /// Number of variables (defaults to the highest index mentioned + 1;
    /// raise it to place the form in a larger ambient space)
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the graded pieces of the Jacobian ideal and ring
    Hilbert {
        #[command(flatten)]
        input: PolyInput,
        /// Highest degree to report
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Exact smoothness test of the projective hypersurface
    Smooth {
        #[command(flatten)]
        input: PolyInput,
        /// Degree budget for the characteristic-divides-degree sweep
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Weak Lefschetz injectivity of xL on a graded piece
    Wlp {
        #[command(flatten)]
        input: PolyInput,
        /// Source degree (defaults to deg F - 1)
        #[arg(long)]
        degree: Option<u32>,
        /// Test this specific linear form
        #[arg(long, conflicts_with_all = ["search", "exhaustive"])]
        linear_form: Option<String>,
        /// Search for a random witness
        #[arg(long, conflicts_with = "exhaustive")]
        search: bool,
        /// Enumerate every projective class (small prime fields only)
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Etale criterion for a cubic threefold at a hyperplane
    Etale {
        #[command(flatten)]
        input: PolyInput,
        /// The hyperplane, as a linear form
        #[arg(long)]
        hyperplane: String,
        #[arg(long)]
        json: bool,
    },
    /// Scripted verifications: fermat-kernel, char2, contracted-lines, koszul
    Demo {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded Monte-Carlo probe of WLP for an (n, d) family, as CSV
    Probe {
        /// Projective dimension n (forms use n + 1 variables)
        #[arg(long)]
        n: u32,
        /// Degree of the sampled forms
        #[arg(long)]
        d: u32,
        /// Coefficient field: Q or F<p>
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 20)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ResourceGuard(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn load_input(input: &PolyInput) -> Result<(Polynomial, Field), Error> {
    let text = match (&input.poly, &input.poly_file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => fs::read_to_string(path).map_err(|e| Error::Parse {
            position: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?,
        _ => {
            return Err(Error::Parse {
                position: 0,
                message: "exactly one of --poly and --poly-file is required".into(),
            })
        }
    };
    let field: Field = input.field.parse()?;
    let inferred = infer_num_vars(&text)?;
    let num_vars = input.vars.unwrap_or(inferred).max(inferred);
    Ok((parse_polynomial(&text, field, num_vars)?, field))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Hilbert {
            input,
            max_degree,
            json,
        } => {
            let (form, field) = load_input(&input)?;
            let start = Instant::now();
            let payload = hilbert_payload(&form, max_degree)?;
            let envelope = ReportEnvelope::new(
                command_echo(),
                field.to_string(),
                Some(form.to_string()),
                payload,
                start.elapsed().as_millis(),
            );
            if json {
                println!("{}", envelope.to_json());
            } else {
                println!("Jacobian ring of {form} over {field}");
                println!("{:>6} {:>8} {:>12}", "degree", "dim J_k", "dim (R/J)_k");
                for row in &envelope.result.rows {
                    println!(
                        "{:>6} {:>8} {:>12}",
                        row.degree, row.ideal_dimension, row.quotient_dimension
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Smooth {
            input,
            max_degree,
            json,
        } => {
            let (form, field) = load_input(&input)?;
            let start = Instant::now();
            let verdict = smoothness_check(&form, max_degree)?;
            let envelope = ReportEnvelope::new(
                command_echo(),
                field.to_string(),
                Some(form.to_string()),
                verdict,
                start.elapsed().as_millis(),
            );
            if json {
                println!("{}", envelope.to_json());
            } else {
                println!(
                    "{form} over {field}: {:?} ({:?} at degree {})",
                    verdict.status, verdict.method, verdict.detail
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Wlp {
            input,
            degree,
            linear_form,
            search,
            exhaustive,
            trials,
            seed,
            json,
        } => {
            let (form, field) = load_input(&input)?;
            let start = Instant::now();
            let jr = JacobianRing::new(form.clone())?;
            let a = degree.unwrap_or(jr.degree() - 1);
            let payload = if let Some(l_text) = linear_form {
                let l = LinearForm::new(parse_polynomial(&l_text, field, jr.num_vars())?)?;
                WlpPayload::Given(wlp_given_payload(&multiplication_map(&jr, &l, a)?))
            } else if exhaustive {
                WlpPayload::Exhaustive(exhaustive_payload(&wlp_exhaustive(&jr, a, None)?))
            } else if search {
                WlpPayload::Search(wlp_search(&jr, a, trials, seed)?)
            } else {
                return Err(Error::Parse {
                    position: 0,
                    message: "choose one of --linear-form, --search, --exhaustive".into(),
                });
            };
            let envelope = ReportEnvelope::new(
                command_echo(),
                field.to_string(),
                Some(form.to_string()),
                payload,
                start.elapsed().as_millis(),
            );
            if json {
                println!("{}", envelope.to_json());
            } else {
                match &envelope.result {
                    WlpPayload::Given(p) => {
                        println!(
                            "xL with L = {} on degree {}: rank {}, kernel dimension {} ({})",
                            p.linear_form,
                            p.degree,
                            p.rank,
                            p.kernel_dimension,
                            if p.injective {
                                "injective"
                            } else {
                                "not injective"
                            }
                        );
                        for class in &p.kernel_classes {
                            println!("  kernel class: [{class}]");
                        }
                    }
                    WlpPayload::Search(w) => {
                        println!("search over {} trials: {:?}", w.trials, w.outcome);
                    }
                    WlpPayload::Exhaustive(e) => match &e.witness {
                        Some(w) => {
                            println!("witness found after {} classes: {w}", e.classes_checked)
                        }
                        None => println!(
                            "no injective form among all {} projective classes",
                            e.classes_checked
                        ),
                    },
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Etale {
            input,
            hyperplane,
            json,
        } => {
            let (form, field) = load_input(&input)?;
            let start = Instant::now();
            let l = LinearForm::new(parse_polynomial(&hyperplane, field, form.num_vars())?)?;
            let verdict = etale_check(&form, &l)?;
            let envelope = ReportEnvelope::new(
                command_echo(),
                field.to_string(),
                Some(form.to_string()),
                verdict,
                start.elapsed().as_millis(),
            );
            if json {
                println!("{}", envelope.to_json());
            } else {
                let v = &envelope.result;
                match v.status {
                    EtaleStatus::SectionSingular => {
                        println!(
                            "section by {l} is singular: the hyperplane lies on the dual hypersurface"
                        );
                    }
                    _ => {
                        println!(
                            "{:?} at {l}: xL kernel {}, tangent kernel {}, crosscheck {}",
                            v.status,
                            v.wlp_kernel_dimension.unwrap_or(0),
                            v.tangent_kernel_dimension.unwrap_or(0),
                            if v.crosscheck_passed.unwrap_or(false) {
                                "passed"
                            } else {
                                "FAILED"
                            }
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Demo { name, json } => {
            let start = Instant::now();
            let report = run_demo(&name)?;
            let passed = report.passed();
            let envelope = ReportEnvelope::new(
                command_echo(),
                String::new(),
                None,
                &report,
                start.elapsed().as_millis(),
            );
            if json {
                println!("{}", envelope.to_json());
            } else {
                render_demo(&report);
                println!("demo {name}: {}", if passed { "PASS" } else { "FAIL" });
            }
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Probe {
            n,
            d,
            field,
            samples,
            seed,
            out,
        } => {
            let field: Field = field.parse()?;
            let cfg = ProbeConfig {
                n,
                d,
                field,
                samples,
                master_seed: seed,
            };
            let records = run_probe(&cfg)?;
            let io_err = |e: std::io::Error| Error::Parse {
                position: 0,
                message: e.to_string(),
            };
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).map_err(io_err)?;
                    write_csv(&records, file).map_err(io_err)?;
                    eprintln!("wrote {} records to {}", records.len(), path.display());
                }
                None => write_csv(&records, std::io::stdout()).map_err(io_err)?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_demo(report: &DemoReport) {
    match report {
        DemoReport::FermatKernel(r) => {
            println!("Fermat cubic, hyperplane x0 = 0:");
            println!("  verdict: {:?}", r.status);
            println!(
                "  xL kernel ({}): {}",
                r.wlp_kernel_dimension,
                r.wlp_kernel_classes.join(", ")
            );
            println!("  tangent kernel dimension: {}", r.tangent_kernel_dimension);
            println!(
                "  derivations x_i d/dx0 in kernel: {}",
                r.derivations_along_x0_in_kernel
            );
            println!("  crosscheck: {}", r.crosscheck_passed);
        }
        DemoReport::Char2(r) => {
            println!("Fermat cubic over F_2 (l = x0, m = x1):");
            println!("  [l m] nonzero in degree 2: {}", r.product_class_nonzero);
            println!(
                "  [l^2 m] zero in degree 3: {}",
                r.repeated_product_class_zero
            );
            println!(
                "  span of {} squares has dimension {} and equals J_2: {}",
                r.forms_enumerated, r.squares_span_dimension, r.squares_span_equals_ideal_piece
            );
        }
        DemoReport::ContractedLines(r) => {
            println!("Fermat cubic, pencil x0 = t x1:");
            for row in &r.rows {
                println!(
                    "  t = {}: kernel dimension {}, exhibited classes in kernel: {}, independent: {}",
                    row.t, row.kernel_dimension, row.exhibited_in_kernel, row.exhibited_independent
                );
            }
        }
        DemoReport::Koszul(r) => {
            println!("linear relation kernels into R_3 / span F:");
            println!("  sample dimensions: {:?}", r.sample_dimensions);
            println!(
                "  all spanned by the Euler tuple: {}",
                r.all_spanned_by_euler
            );
            println!("  cone kernel dimension: {}", r.cone_dimension);
        }
    }
}
