//! Homogeneous multivariate polynomials with exact coefficients.
//!
//! Terms live in a map keyed by monomials under graded lex order; zero
//! coefficients are never stored, so the representation is canonical and
//! structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::monomial::{monomial_index, Monomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    field: Field,
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field, num_vars: usize) -> Polynomial {
        Polynomial {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, num_vars: usize, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(field, num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    /// The single variable `x_i`.
    pub fn variable(field: Field, num_vars: usize, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(field, num_vars);
        p.add_term(Monomial::variable(i, num_vars), field.one());
        p
    }

    pub fn from_terms<I>(field: Field, num_vars: usize, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Polynomial::zero(field, num_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Accumulates `c * m`, merging like terms and dropping zeros.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.num_vars(), self.num_vars);
        debug_assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.degree().expect("nonzero"))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.num_vars);
        }
        Polynomial {
            field: self.field,
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, coeff)| (m.clone(), coeff.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = Polynomial::zero(self.field, self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.field, self.num_vars, self.field.one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars, "variable index out of range");
        let mut out = Polynomial::zero(self.field, self.num_vars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::new(exps),
                c.clone() * self.field.integer(e as i64),
            );
        }
        out
    }

    /// Checks the Euler identity `sum_i x_i * dF/dx_i = d * F` for a
    /// homogeneous `F` of degree `d`, with `d` reduced into the field.
    /// The identity is formal and holds in every characteristic.
    pub fn euler_check(&self) -> Result<bool> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = self.degree().unwrap_or(0);
        let mut lhs = Polynomial::zero(self.field, self.num_vars);
        for i in 0..self.num_vars {
            lhs = lhs.add(
                &Polynomial::variable(self.field, self.num_vars, i)
                    .mul(&self.partial_derivative(i)),
            );
        }
        let rhs = self.scale(&self.field.integer(d as i64));
        Ok(lhs == rhs)
    }

    /// Substitutes `x_i -> images[i]`; all images must share a variable
    /// count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.num_vars);
        let out_vars = images.first().map_or(self.num_vars, Polynomial::num_vars);
        let mut out = Polynomial::zero(self.field, out_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(self.field, out_vars, c.clone());
            for (i, image) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    term = term.mul(&image.pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// The composition `F(A x)` for an invertible square matrix `A`: each
    /// variable `x_i` is replaced by the linear form given by row `i` of `A`.
    /// Degree and homogeneity are preserved.
    pub fn change_of_coordinates(&self, a: &Matrix) -> Result<Polynomial> {
        if a.rows() != self.num_vars || a.cols() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} substitution matrix for {} variables",
                a.rows(),
                a.cols(),
                self.num_vars
            )));
        }
        if a.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                a.field().to_string(),
            ));
        }
        if a.rank() < self.num_vars {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..self.num_vars)
            .map(|i| {
                Polynomial::from_terms(
                    self.field,
                    self.num_vars,
                    (0..self.num_vars)
                        .map(|j| (Monomial::variable(j, self.num_vars), a.get(i, j).clone())),
                )
            })
            .collect();
        Ok(self.substitute(&images))
    }

    /// Coefficient vector in the coordinates of the given monomial list.
    /// Every term of `self` must appear in the list.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Result<Vec<Scalar>> {
        let mut v = vec![self.field.zero(); basis.len()];
        for (m, c) in &self.terms {
            let idx = monomial_index(basis, m).ok_or_else(|| {
                Error::DimensionMismatch(format!("monomial {m} outside the basis"))
            })?;
            v[idx] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coefficient_vector(
        field: Field,
        num_vars: usize,
        basis: &[Monomial],
        coords: &[Scalar],
    ) -> Polynomial {
        assert_eq!(basis.len(), coords.len());
        Polynomial::from_terms(
            field,
            num_vars,
            basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A nonzero homogeneous polynomial of degree one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm(Polynomial);

impl LinearForm {
    pub fn new(p: Polynomial) -> Result<LinearForm> {
        if p.is_zero() || p.homogeneous_degree()? != 1 {
            return Err(Error::NotLinearForm);
        }
        Ok(LinearForm(p))
    }

    /// The form `sum coeffs[i] * x_i`.
    pub fn from_coefficients(field: Field, coeffs: &[Scalar]) -> Result<LinearForm> {
        let n = coeffs.len();
        LinearForm::new(Polynomial::from_terms(
            field,
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::variable(i, n), c.clone())),
        ))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.num_vars()
    }

    pub fn field(&self) -> Field {
        self.0.field()
    }

    pub fn coefficient_of(&self, i: usize) -> Scalar {
        self.0
            .coefficient(&Monomial::variable(i, self.0.num_vars()))
    }

    /// Index of the first variable with a nonzero coefficient.
    pub fn pivot_variable(&self) -> usize {
        (0..self.0.num_vars())
            .find(|&i| !self.coefficient_of(i).is_zero())
            .expect("linear form is nonzero")
    }

    /// An invertible matrix `A` with `L(A x) = x0`.
    ///
    /// Column 0 of `A` is `e_j / c_j` for the pivot variable `j`, and the
    /// remaining columns run through a basis of the hyperplane `L = 0`.
    pub fn coordinates_sending_to_x0(&self) -> Matrix {
        let n = self.0.num_vars();
        let field = self.0.field();
        let j = self.pivot_variable();
        let cj_inv = self.coefficient_of(j).inverse().expect("pivot is nonzero");
        let mut a = Matrix::zero(field, n, n);
        a.set(j, 0, cj_inv.clone());
        let mut col = 1;
        for m in (0..n).filter(|&m| m != j) {
            a.set(m, col, field.one());
            let cm = self.coefficient_of(m);
            if !cm.is_zero() {
                a.set(j, col, -(cm * cj_inv.clone()));
            }
            col += 1;
        }
        debug_assert_eq!(
            self.0.change_of_coordinates(&a).unwrap(),
            Polynomial::variable(field, n, 0)
        );
        a
    }

    /// Restricts `f` to the hyperplane `L = 0` by eliminating the pivot
    /// variable of `L` exactly, returning a polynomial in one fewer variable.
    pub fn restrict(&self, f: &Polynomial) -> Polynomial {
        let n = f.num_vars();
        assert_eq!(n, self.0.num_vars());
        let field = f.field();
        let j = self.pivot_variable();
        let cj_inv = self.coefficient_of(j).inverse().expect("pivot is nonzero");
        // x_j = -(1/c_j) * sum_{m != j} c_m x_m, remaining variables relabeled
        // in ascending order.
        let mut images = Vec::with_capacity(n);
        let mut pivot_image = Polynomial::zero(field, n - 1);
        let mut fresh = 0;
        let mut relabel = vec![0usize; n];
        for m in (0..n).filter(|&m| m != j) {
            relabel[m] = fresh;
            fresh += 1;
        }
        for m in (0..n).filter(|&m| m != j) {
            let cm = self.coefficient_of(m);
            if !cm.is_zero() {
                pivot_image.add_term(
                    Monomial::variable(relabel[m], n - 1),
                    -(cm * cj_inv.clone()),
                );
            }
        }
        for m in 0..n {
            if m == j {
                images.push(pivot_image.clone());
            } else {
                images.push(Polynomial::variable(field, n - 1, relabel[m]));
            }
        }
        f.substitute(&images)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
