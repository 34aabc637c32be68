//! Monomials in `x0, ..., x{n-1}` under the graded lexicographic order with
//! `x0` largest. This order fixes every basis in the toolkit, so reports and
//! coordinate vectors are reproducible across runs.

use std::cmp::Ordering;
use std::fmt;

/// A monomial, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    /// The constant monomial 1.
    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    /// The single variable `x_i`.
    pub fn variable(i: usize, num_vars: usize) -> Monomial {
        assert!(i < num_vars, "variable index out of range");
        let mut exponents = vec![0; num_vars];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

// Graded lexicographic: higher degree wins, then the exponent vectors are
// compared position by position with x0 weighted heaviest.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given degree, largest first in graded lex order.
/// The list has `C(num_vars + d - 1, d)` entries and coordinatizes the
/// degree-`d` graded piece of the polynomial ring.
pub fn monomials_of_degree(num_vars: usize, d: u32) -> Vec<Monomial> {
    assert!(num_vars >= 1);
    let mut out = Vec::with_capacity(graded_dimension(num_vars, d));
    let mut exps = vec![0u32; num_vars];
    fill(&mut out, &mut exps, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}

/// `dim R_d` for the polynomial ring in `num_vars` variables.
pub fn graded_dimension(num_vars: usize, d: u32) -> usize {
    binomial(num_vars as u64 + d as u64 - 1, d as u64) as usize
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Index of `m` in the descending list produced by `monomials_of_degree`.
pub fn monomial_index(basis: &[Monomial], m: &Monomial) -> Option<usize> {
    basis.binary_search_by(|probe| m.cmp(probe)).ok()
}
