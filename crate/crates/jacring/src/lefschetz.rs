//! Multiplication maps `xL : (R/J)_a -> (R/J)_{a+1}` and weak Lefschetz
//! injectivity tests: for a given linear form, for a seeded random search
//! over "general" forms, and exhaustively over all projective classes of a
//! small prime field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jacobian::JacobianRing;
use crate::matrix::{Matrix, RowBasis};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::parse::parse_polynomial;
use crate::poly::{LinearForm, Polynomial};
use crate::random::{derive_seed, random_linear_form, CoeffPolicy};

/// The matrix of `[G] -> [L G]` between coset bases of consecutive graded
/// pieces of the Jacobian ring, with its rank and exact kernel.
#[derive(Clone, Debug)]
pub struct MultiplicationMap {
    linear_form: LinearForm,
    source_degree: u32,
    source_basis: Vec<Monomial>,
    target_basis: Vec<Monomial>,
    matrix: Matrix,
    rank: usize,
    kernel: Vec<Polynomial>,
}

impl MultiplicationMap {
    pub fn linear_form(&self) -> &LinearForm {
        &self.linear_form
    }

    pub fn source_degree(&self) -> u32 {
        self.source_degree
    }

    pub fn target_degree(&self) -> u32 {
        self.source_degree + 1
    }

    /// Standard monomials indexing the columns.
    pub fn source_basis(&self) -> &[Monomial] {
        &self.source_basis
    }

    /// Standard monomials indexing the rows.
    pub fn target_basis(&self) -> &[Monomial] {
        &self.target_basis
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Kernel basis as degree-`a` polynomials supported on standard
    /// monomials; empty exactly when the map is injective.
    pub fn kernel(&self) -> &[Polynomial] {
        &self.kernel
    }

    pub fn kernel_dimension(&self) -> usize {
        self.kernel.len()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Builds the multiplication map `xL : (R/J)_a -> (R/J)_{a+1}`: column by
/// column, each standard monomial `m` of degree `a` is sent to the normal
/// form of `L m`.
pub fn multiplication_map(jr: &JacobianRing, l: &LinearForm, a: u32) -> Result<MultiplicationMap> {
    if l.num_vars() != jr.num_vars() {
        return Err(Error::WrongVariableCount {
            expected: jr.num_vars(),
            found: l.num_vars(),
        });
    }
    if l.field() != jr.field() {
        return Err(Error::FieldMismatch(
            jr.field().to_string(),
            l.field().to_string(),
        ));
    }
    let source = jr.graded_piece(a);
    let target = jr.graded_piece(a + 1);
    let source_basis = source.standard_monomials().to_vec();
    let target_basis = target.standard_monomials().to_vec();

    let mut columns = Vec::with_capacity(source_basis.len());
    for m in &source_basis {
        let shifted = l.poly().mul(&Polynomial::from_terms(
            jr.field(),
            jr.num_vars(),
            [(m.clone(), jr.field().one())],
        ));
        columns.push(target.class_coordinates(&shifted)?);
    }
    let mut matrix = Matrix::zero(jr.field(), target_basis.len(), source_basis.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            matrix.set(r, c, v.clone());
        }
    }
    let rank = matrix.rank();
    let kernel = matrix
        .kernel_basis()
        .into_iter()
        .map(|coords| {
            Polynomial::from_coefficient_vector(jr.field(), jr.num_vars(), &source_basis, &coords)
        })
        .collect();
    Ok(MultiplicationMap {
        linear_form: l.clone(),
        source_degree: a,
        source_basis,
        target_basis,
        matrix,
        rank,
        kernel,
    })
}

/// The weak Lefschetz test for one linear form: the map together with its
/// kernel, injective iff the kernel is trivial.
pub fn wlp_injective(jr: &JacobianRing, l: &LinearForm, a: u32) -> Result<MultiplicationMap> {
    multiplication_map(jr, l, a)
}

/// Outcome of a witness search.
#[derive(Clone, Debug, Serialize)]
pub enum WlpOutcome {
    /// A verified injective linear form.
    WitnessFound {
        witness: String,
    },
    AllTrialsFailed,
    ExhaustedAllForms,
}

#[derive(Clone, Debug, Serialize)]
pub struct WlpWitness {
    pub degree: u32,
    pub trials: u32,
    pub outcome: WlpOutcome,
    #[serde(skip)]
    pub witness: Option<LinearForm>,
}

/// Samples linear forms on a deterministic per-trial seed schedule and
/// returns the first one acting injectively on `(R/J)_a`; the witness is
/// re-verified against a freshly built model before being reported.
pub fn wlp_search(jr: &JacobianRing, a: u32, trials: u32, seed: u64) -> Result<WlpWitness> {
    for t in 0..trials {
        let l = random_linear_form(
            jr.num_vars(),
            jr.field(),
            derive_seed(seed, t as u64),
            CoeffPolicy::default(),
        );
        let map = multiplication_map(jr, &l, a)?;
        if map.is_injective() {
            let fresh = JacobianRing::new(jr.form().clone())?;
            let recheck = multiplication_map(&fresh, &l, a)?;
            assert!(
                recheck.is_injective(),
                "witness failed re-verification on a fresh model"
            );
            return Ok(WlpWitness {
                degree: a,
                trials: t + 1,
                outcome: WlpOutcome::WitnessFound {
                    witness: l.to_string(),
                },
                witness: Some(l),
            });
        }
    }
    Ok(WlpWitness {
        degree: a,
        trials,
        outcome: WlpOutcome::AllTrialsFailed,
        witness: None,
    })
}

/// Result of enumerating every projective class of linear forms.
#[derive(Clone, Debug)]
pub enum ExhaustiveOutcome {
    Witness {
        form: LinearForm,
        checked: u64,
    },
    /// No class acts injectively; every class is listed with its kernel
    /// dimension as the certificate.
    NoneInjective {
        failures: Vec<(LinearForm, usize)>,
    },
}

pub const DEFAULT_CLASS_LIMIT: u64 = 1 << 16;

/// Tests `xL` for one representative of every projective class of nonzero
/// linear forms (first nonzero coefficient normalized to 1). Only available
/// over a prime field with at most `class_limit` classes.
pub fn wlp_exhaustive(
    jr: &JacobianRing,
    a: u32,
    class_limit: Option<u64>,
) -> Result<ExhaustiveOutcome> {
    let Field::Prime(p) = jr.field() else {
        return Err(Error::NeedsFiniteField);
    };
    let limit = class_limit.unwrap_or(DEFAULT_CLASS_LIMIT);
    let n = jr.num_vars();
    let classes = projective_class_count(p as u128, n as u32);
    if classes > limit as u128 {
        return Err(Error::ResourceGuard(format!(
            "{classes} projective classes exceed the limit {limit}"
        )));
    }

    let mut checked = 0u64;
    let mut failures = Vec::new();
    for lead in 0..n {
        // coefficients: 0 ... 0 1 c_{lead+1} ... c_{n-1}
        let tail = n - lead - 1;
        let mut odometer = vec![0u32; tail];
        loop {
            let mut coeffs = vec![jr.field().zero(); n];
            coeffs[lead] = jr.field().one();
            for (i, &c) in odometer.iter().enumerate() {
                coeffs[lead + 1 + i] = jr.field().integer(c as i64);
            }
            let l = LinearForm::from_coefficients(jr.field(), &coeffs)?;
            checked += 1;
            let map = multiplication_map(jr, &l, a)?;
            if map.is_injective() {
                return Ok(ExhaustiveOutcome::Witness { form: l, checked });
            }
            failures.push((l, map.kernel_dimension()));

            // advance the odometer
            let mut pos = tail;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                odometer[pos] += 1;
                if odometer[pos] < p {
                    break;
                }
                odometer[pos] = 0;
            }
            if odometer.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    debug_assert_eq!(checked as u128, classes);
    Ok(ExhaustiveOutcome::NoneInjective { failures })
}

fn projective_class_count(p: u128, n: u32) -> u128 {
    // (p^n - 1) / (p - 1)
    let mut acc = 0u128;
    for k in 0..n {
        acc += p.pow(k);
    }
    acc
}

/// The characteristic-2 counterexample on the Fermat cubic threefold: with
/// `l = x0`, `m = x1` the class of `l m` is nonzero in degree 2 while
/// `l (l m)` dies in degree 3, so no `xl` is injective; moreover the span
/// of the squares of all 31 nonzero linear forms is exactly `J_2` (of
/// dimension 5, since squaring is semilinear in characteristic 2).
#[derive(Clone, Debug, Serialize)]
pub struct Char2FermatReport {
    pub product_class_nonzero: bool,
    pub repeated_product_class_zero: bool,
    pub squares_span_dimension: usize,
    pub squares_span_equals_ideal_piece: bool,
    pub forms_enumerated: usize,
}

impl Char2FermatReport {
    pub fn passed(&self) -> bool {
        self.product_class_nonzero
            && self.repeated_product_class_zero
            && self.squares_span_dimension == 5
            && self.squares_span_equals_ideal_piece
    }
}

pub fn char2_fermat_demo() -> Result<Char2FermatReport> {
    let field = Field::Prime(2);
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let jr = JacobianRing::new(fermat)?;

    let l = Polynomial::variable(field, 5, 0);
    let m = Polynomial::variable(field, 5, 1);
    let lm = l.mul(&m);
    let product_class_nonzero = jr.reduce_mod_ideal(&lm, 2)?.iter().any(|c| !c.is_zero());
    let llm = l.mul(&lm);
    let repeated_product_class_zero = jr.reduce_mod_ideal(&llm, 3)?.iter().all(|c| c.is_zero());

    // Span of the squares of all 31 nonzero linear forms inside R_2.
    let quadric_basis = monomials_of_degree(5, 2);
    let mut squares = RowBasis::new(field, quadric_basis.len());
    let mut forms_enumerated = 0;
    for mask in 1u32..32 {
        let coeffs: Vec<_> = (0..5)
            .map(|i| field.integer(((mask >> i) & 1) as i64))
            .collect();
        let form = LinearForm::from_coefficients(field, &coeffs)?;
        forms_enumerated += 1;
        let square = form.poly().mul(form.poly());
        squares.insert(square.coefficient_vector(&quadric_basis)?);
    }
    let ideal2 = jr.graded_piece(2);
    let squares_span_equals_ideal_piece = squares.rows() == ideal2.ideal_basis().rows();

    Ok(Char2FermatReport {
        product_class_nonzero,
        repeated_product_class_zero,
        squares_span_dimension: squares.rank(),
        squares_span_equals_ideal_piece,
        forms_enumerated,
    })
}
