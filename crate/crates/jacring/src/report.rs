//! Report payloads and the envelope wrapped around every command's JSON
//! output. Everything here is a thin serialization layer over the library;
//! payloads are deterministic for fixed inputs and seeds, with timing
//! isolated in a single envelope field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobian::JacobianRing;
use crate::lefschetz::{
    char2_fermat_demo, Char2FermatReport, ExhaustiveOutcome, MultiplicationMap, WlpWitness,
};
use crate::poly::Polynomial;
use crate::section::{
    contracted_lines_demo, fermat_kernel_demo, koszul_uniqueness_demo, ContractedLinesReport,
    FermatKernelReport, KoszulDemoReport,
};

/// Stable wrapper for machine-readable output: tool identity, the echoed
/// command line, the canonical input, the payload and the elapsed time
/// (the one field excluded from byte-for-byte comparisons).
#[derive(Debug, Serialize)]
pub struct ReportEnvelope<P: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub field: String,
    pub input: Option<String>,
    pub result: P,
    pub elapsed_ms: u128,
}

impl<P: Serialize> ReportEnvelope<P> {
    pub fn new(
        command: String,
        field: String,
        input: Option<String>,
        result: P,
        elapsed_ms: u128,
    ) -> Self {
        ReportEnvelope {
            tool: "jacring",
            version: env!("CARGO_PKG_VERSION"),
            command,
            field,
            input,
            result,
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("payloads serialize")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertRow {
    pub degree: u32,
    pub ideal_dimension: usize,
    pub quotient_dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertPayload {
    pub rows: Vec<HilbertRow>,
}

/// Hilbert data of the Jacobian ring of `f` for all degrees up to
/// `max_degree` inclusive.
pub fn hilbert_payload(f: &Polynomial, max_degree: u32) -> Result<HilbertPayload> {
    let jr = JacobianRing::new(f.clone())?;
    let rows = (0..=max_degree)
        .map(|k| HilbertRow {
            degree: k,
            ideal_dimension: jr.ideal_dimension(k),
            quotient_dimension: jr.hilbert_value(k),
        })
        .collect();
    Ok(HilbertPayload { rows })
}

#[derive(Debug, Clone, Serialize)]
pub struct WlpGivenPayload {
    pub linear_form: String,
    pub degree: u32,
    pub injective: bool,
    pub rank: usize,
    pub kernel_dimension: usize,
    pub kernel_classes: Vec<String>,
}

pub fn wlp_given_payload(map: &MultiplicationMap) -> WlpGivenPayload {
    WlpGivenPayload {
        linear_form: map.linear_form().to_string(),
        degree: map.source_degree(),
        injective: map.is_injective(),
        rank: map.rank(),
        kernel_dimension: map.kernel_dimension(),
        kernel_classes: map.kernel().iter().map(Polynomial::to_string).collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExhaustiveFailure {
    pub linear_form: String,
    pub kernel_dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExhaustivePayload {
    pub witness: Option<String>,
    pub classes_checked: u64,
    pub failures: Vec<ExhaustiveFailure>,
}

pub fn exhaustive_payload(outcome: &ExhaustiveOutcome) -> ExhaustivePayload {
    match outcome {
        ExhaustiveOutcome::Witness { form, checked } => ExhaustivePayload {
            witness: Some(form.to_string()),
            classes_checked: *checked,
            failures: Vec::new(),
        },
        ExhaustiveOutcome::NoneInjective { failures } => ExhaustivePayload {
            witness: None,
            classes_checked: failures.len() as u64,
            failures: failures
                .iter()
                .map(|(form, kernel_dimension)| ExhaustiveFailure {
                    linear_form: form.to_string(),
                    kernel_dimension: *kernel_dimension,
                })
                .collect(),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum WlpPayload {
    Given(WlpGivenPayload),
    Search(WlpWitness),
    Exhaustive(ExhaustivePayload),
}

pub const KOSZUL_DEMO_SAMPLES: u32 = 10;
pub const KOSZUL_DEMO_SEED: u64 = 0x4B5A;
pub const CONTRACTED_LINES_PARAMETERS: [i64; 4] = [0, 1, 2, 3];

/// The scripted verifications exposed by the `demo` subcommand.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "demo", rename_all = "kebab-case")]
pub enum DemoReport {
    FermatKernel(FermatKernelReport),
    Char2(Char2FermatReport),
    ContractedLines(ContractedLinesReport),
    Koszul(KoszulDemoReport),
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        match self {
            DemoReport::FermatKernel(r) => r.passed(),
            DemoReport::Char2(r) => r.passed(),
            DemoReport::ContractedLines(r) => r.passed(),
            DemoReport::Koszul(r) => r.passed(),
        }
    }
}

pub const DEMO_NAMES: [&str; 4] = ["fermat-kernel", "char2", "contracted-lines", "koszul"];

pub fn run_demo(name: &str) -> Result<DemoReport> {
    match name {
        "fermat-kernel" => Ok(DemoReport::FermatKernel(fermat_kernel_demo()?)),
        "char2" => Ok(DemoReport::Char2(char2_fermat_demo()?)),
        "contracted-lines" => Ok(DemoReport::ContractedLines(contracted_lines_demo(
            &CONTRACTED_LINES_PARAMETERS,
        )?)),
        "koszul" => Ok(DemoReport::Koszul(koszul_uniqueness_demo(
            KOSZUL_DEMO_SAMPLES,
            KOSZUL_DEMO_SEED,
        )?)),
        other => Err(Error::UnknownDemo(other.to_string())),
    }
}
