//! Analysis of the hyperplane-section map of a smooth hypersurface.
//!
//! For a smooth form `F` and a hyperplane `H = {L = 0}` avoiding the dual
//! hypersurface, two finite-dimensional kernels decide the local behaviour
//! of the section map at `H`:
//!
//! * the kernel of the multiplication map `xL : (R/J)_{d-1} -> (R/J)_d`, and
//! * the kernel of `phi`, the map sending a tangent vector field
//!   `V = sum L_i d/dx_i` (coefficients linear in `x1..xn` after adapting
//!   coordinates so that `L = x0`) to `sum L_i dF/dx_i` in
//!   `R_d / (x0 R_{d-1} + span F)`.
//!
//! The two vanish together; each nontrivial kernel element on either side
//! carries an explicit certificate identity `sum L_i F'_i = x0 Q + d a F`
//! relating it to a class on the other side, and `crosscheck_etale_routes`
//! verifies both directions as exact polynomial identities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::jacobian::{random_smooth_form, smoothness_check, JacobianRing, SmoothnessStatus};
use crate::lefschetz::multiplication_map;
use crate::matrix::{Matrix, RowBasis};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::parse::parse_polynomial;
use crate::poly::{LinearForm, Polynomial};
use crate::random::{derive_seed, CoeffPolicy};

/// Quotient of the degree-`k` graded piece by an explicit subspace, with
/// canonical coordinates on the non-pivot monomials.
struct QuotientSpace {
    monomials: Vec<Monomial>,
    subspace: RowBasis,
}

impl QuotientSpace {
    fn new(
        field: Field,
        num_vars: usize,
        k: u32,
        spanning: &[Polynomial],
    ) -> Result<QuotientSpace> {
        let monomials = monomials_of_degree(num_vars, k);
        let mut subspace = RowBasis::new(field, monomials.len());
        for g in spanning {
            subspace.insert(g.coefficient_vector(&monomials)?);
        }
        Ok(QuotientSpace {
            monomials,
            subspace,
        })
    }

    fn dimension(&self) -> usize {
        self.subspace.width() - self.subspace.rank()
    }

    fn reduce(&self, g: &Polynomial) -> Result<Vec<Scalar>> {
        let v = g.coefficient_vector(&self.monomials)?;
        let reduced = self.subspace.reduce(v);
        Ok(self
            .subspace
            .free_columns()
            .into_iter()
            .map(|c| reduced[c].clone())
            .collect())
    }
}

fn ensure_smooth(f: &Polynomial) -> Result<()> {
    let verdict = smoothness_check(f, None)?;
    match verdict.status {
        SmoothnessStatus::Smooth => Ok(()),
        SmoothnessStatus::Singular => Err(Error::NotSmooth(format!(
            "singular, certified at degree {}",
            verdict.detail
        ))),
        SmoothnessStatus::Unknown => Err(Error::SmoothnessUnknown(verdict.detail)),
    }
}

fn section_is_singular(f: &Polynomial, l: &LinearForm) -> Result<bool> {
    let section = l.restrict(f);
    // A smooth form is irreducible, so the restriction never vanishes.
    let verdict = smoothness_check(&section, None)?;
    match verdict.status {
        SmoothnessStatus::Smooth => Ok(false),
        SmoothnessStatus::Singular => Ok(true),
        SmoothnessStatus::Unknown => Err(Error::SmoothnessUnknown(verdict.detail)),
    }
}

/// Is the hyperplane `L = 0` tangent to the smooth hypersurface `F = 0`,
/// i.e. does it lie on the dual hypersurface? Decided by an exact
/// smoothness test of the restricted form.
pub fn dual_membership(f: &Polynomial, l: &LinearForm) -> Result<bool> {
    if f.num_vars() < 3 {
        return Err(Error::WrongVariableCount {
            expected: 3,
            found: f.num_vars(),
        });
    }
    ensure_smooth(f)?;
    section_is_singular(f, l)
}

/// A vector field `sum_i L_i d/dx_i` on the section, in coordinates adapted
/// so the hyperplane is `x0 = 0`; every coefficient `L_i` is a linear form
/// in `x1..xn` only.
#[derive(Clone, Debug)]
pub struct VectorField {
    components: Vec<Polynomial>,
}

impl VectorField {
    fn new(components: Vec<Polynomial>) -> VectorField {
        debug_assert!(components
            .iter()
            .all(|c| c.is_zero() || c.homogeneous_degree() == Ok(1)));
        debug_assert!(components.iter().all(|c| {
            c.coefficient(&Monomial::variable(0, c.num_vars()))
                .is_zero()
        }));
        VectorField { components }
    }

    /// Builds a field from explicit components: one linear form (or zero)
    /// per variable, none of them involving `x0`.
    pub fn from_components(components: Vec<Polynomial>) -> Result<VectorField> {
        for c in &components {
            if c.num_vars() != components.len() {
                return Err(Error::WrongVariableCount {
                    expected: components.len(),
                    found: c.num_vars(),
                });
            }
            if !c.is_zero() && c.homogeneous_degree()? != 1 {
                return Err(Error::NotLinearForm);
            }
            if !c
                .coefficient(&Monomial::variable(0, c.num_vars()))
                .is_zero()
            {
                return Err(Error::NotLinearForm);
            }
        }
        Ok(VectorField { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn num_vars(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Coefficient slots in scan order: component index `j`, then variable
    /// index `i = 1..n`; the full `n(n+1)` coordinates.
    pub fn slot_coordinates(&self) -> Vec<Scalar> {
        let n = self.num_vars();
        let mut out = Vec::with_capacity(n * (n - 1));
        for component in &self.components {
            for i in 1..n {
                out.push(component.coefficient(&Monomial::variable(i, n)));
            }
        }
        out
    }

    /// The restricted Euler field `sum_{i>=1} x_i d/dx_i`, which is the one
    /// relation among the generators of the tangent model.
    pub fn euler_relation(field: Field, num_vars: usize) -> VectorField {
        let mut components = vec![Polynomial::zero(field, num_vars)];
        for i in 1..num_vars {
            components.push(Polynomial::variable(field, num_vars, i));
        }
        VectorField { components }
    }

    /// True when the field is a multiple of the Euler relation, i.e. zero as
    /// an element of the 19-dimensional tangent model.
    pub fn is_zero_mod_relation(&self) -> bool {
        let n = self.num_vars();
        let field = self.components[0].field();
        // The relation has coefficient 1 in slot (1, 1); cancel it there.
        let lambda = self
            .components
            .get(1)
            .map_or(field.zero(), |c| c.coefficient(&Monomial::variable(1, n)));
        let relation = VectorField::euler_relation(field, n);
        self.components
            .iter()
            .zip(&relation.components)
            .all(|(c, r)| c.sub(&r.scale(&lambda)).is_zero())
    }
}

impl std::fmt::Display for VectorField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*d/dx{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Certificate for a tangent-kernel element `V`: the exact identity
/// `sum L_i F'_i = x0 Q + d a F` in the adapted coordinates.
#[derive(Clone, Debug)]
pub struct TangentCertificate {
    /// The degree-`(d-1)` form `Q`; its class is a nonzero element of the
    /// multiplication-map kernel.
    pub witness_form: Polynomial,
    /// The scalar `a`.
    pub scale: Scalar,
}

impl TangentCertificate {
    /// Replays the identity exactly.
    pub fn verify(&self, adapted_form: &Polynomial, field_element: &VectorField) -> bool {
        let nv = adapted_form.num_vars();
        let d = adapted_form.degree().unwrap_or(0);
        let base = adapted_form.field();
        let mut lhs = Polynomial::zero(base, nv);
        for (j, l) in field_element.components().iter().enumerate() {
            lhs = lhs.add(&l.mul(&adapted_form.partial_derivative(j)));
        }
        let x0 = Polynomial::variable(base, nv, 0);
        let rhs = x0
            .mul(&self.witness_form)
            .add(&adapted_form.scale(&(self.scale.clone() * base.integer(d as i64))));
        lhs == rhs
    }
}

#[derive(Clone, Debug)]
pub struct TangentKernelElement {
    pub vector_field: VectorField,
    pub certificate: TangentCertificate,
}

/// Exact kernel of the tangent map `phi`, with certified basis elements.
/// All data lives in the adapted coordinates where the hyperplane is
/// `x0 = 0`; `coordinate_change` maps them back.
#[derive(Clone, Debug)]
pub struct TangentKernelReport {
    pub kernel_dimension: usize,
    pub elements: Vec<TangentKernelElement>,
    pub adapted_form: Polynomial,
    pub coordinate_change: Matrix,
}

struct Adapted {
    form: Polynomial,
    change: Matrix,
}

fn adapt(f: &Polynomial, l: &LinearForm) -> Result<Adapted> {
    let change = l.coordinates_sending_to_x0();
    let form = f.change_of_coordinates(&change)?;
    Ok(Adapted { form, change })
}

/// Kernel of `phi` for a smooth form with smooth section: the vector fields
/// tangent to the hypersurface along the section.
pub fn tangent_kernel(f: &Polynomial, l: &LinearForm) -> Result<TangentKernelReport> {
    ensure_smooth(f)?;
    if section_is_singular(f, l)? {
        return Err(Error::SectionSingular);
    }
    tangent_kernel_adapted(adapt(f, l)?)
}

fn tangent_kernel_adapted(adapted: Adapted) -> Result<TangentKernelReport> {
    let g = &adapted.form;
    let nv = g.num_vars();
    let d = g.homogeneous_degree()?;
    let field = g.field();
    let p = field.characteristic();
    if p != 0 && d % p == 0 {
        return Err(Error::CharacteristicDividesDegree(p, d));
    }

    let partials: Vec<Polynomial> = (0..nv).map(|i| g.partial_derivative(i)).collect();
    let x0 = Polynomial::variable(field, nv, 0);

    // The codomain of phi: R_d / (x0 R_{d-1} + span g).
    let mut spanning: Vec<Polynomial> = monomials_of_degree(nv, d - 1)
        .into_iter()
        .map(|m| x0.mul(&Polynomial::from_terms(field, nv, [(m, field.one())])))
        .collect();
    spanning.push(g.clone());
    let quotient = QuotientSpace::new(field, nv, d, &spanning)?;

    // phi kills the restricted Euler field: sum_{j>=1} x_j g'_j = d g - x0 g'_0.
    let relation = VectorField::euler_relation(field, nv);
    let relation_image = apply_phi(&relation, &partials);
    assert!(
        quotient
            .reduce(&relation_image)?
            .iter()
            .all(Scalar::is_zero),
        "the Euler relation must map to zero"
    );

    // Coefficient slots (component j, variable i >= 1); the relation is
    // quotiented out by dropping the slot (1, 1), where it has entry 1.
    let slots: Vec<(usize, usize)> = (0..nv).flat_map(|j| (1..nv).map(move |i| (j, i))).collect();
    let kept: Vec<usize> = (0..slots.len()).filter(|&s| slots[s] != (1, 1)).collect();

    let mut matrix = Matrix::zero(field, quotient.dimension(), kept.len());
    for (col, &s) in kept.iter().enumerate() {
        let (j, i) = slots[s];
        let image = Polynomial::variable(field, nv, i).mul(&partials[j]);
        for (row, v) in quotient.reduce(&image)?.into_iter().enumerate() {
            matrix.set(row, col, v);
        }
    }

    let mut elements = Vec::new();
    for coords in matrix.kernel_basis() {
        let mut components = vec![Polynomial::zero(field, nv); nv];
        for (col, &s) in kept.iter().enumerate() {
            let (j, i) = slots[s];
            if !coords[col].is_zero() {
                components[j].add_term(Monomial::variable(i, nv), coords[col].clone());
            }
        }
        let vector_field = VectorField::new(components);
        let certificate = solve_field_certificate(g, &partials, &vector_field)?;
        debug_assert!(certificate.verify(g, &vector_field));
        elements.push(TangentKernelElement {
            vector_field,
            certificate,
        });
    }

    Ok(TangentKernelReport {
        kernel_dimension: elements.len(),
        elements,
        adapted_form: adapted.form,
        coordinate_change: adapted.change,
    })
}

fn apply_phi(v: &VectorField, partials: &[Polynomial]) -> Polynomial {
    let field = partials
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.field())
        .unwrap_or_else(|| v.components()[0].field());
    let nv = v.num_vars();
    let mut out = Polynomial::zero(field, nv);
    for (l, partial) in v.components().iter().zip(partials) {
        out = out.add(&l.mul(partial));
    }
    out
}

/// Solves `sum L_j g'_j = x0 Q + c g` for `(Q, c)` — the solution is unique
/// since `g` is irreducible — and returns `(Q, a = c/d)`.
fn solve_field_certificate(
    g: &Polynomial,
    partials: &[Polynomial],
    v: &VectorField,
) -> Result<TangentCertificate> {
    let field = g.field();
    let nv = g.num_vars();
    let d = g.homogeneous_degree()?;
    let target_basis = monomials_of_degree(nv, d);
    let q_basis = monomials_of_degree(nv, d - 1);
    let x0 = Polynomial::variable(field, nv, 0);

    let mut sys = Matrix::zero(field, target_basis.len(), q_basis.len() + 1);
    for (c_idx, qm) in q_basis.iter().enumerate() {
        let col = x0
            .mul(&Polynomial::from_terms(
                field,
                nv,
                [(qm.clone(), field.one())],
            ))
            .coefficient_vector(&target_basis)?;
        for (r, val) in col.into_iter().enumerate() {
            sys.set(r, c_idx, val);
        }
    }
    for (r, val) in g.coefficient_vector(&target_basis)?.into_iter().enumerate() {
        sys.set(r, q_basis.len(), val);
    }

    let rhs = apply_phi(v, partials).coefficient_vector(&target_basis)?;
    let sol = sys
        .solve(&rhs)?
        .expect("a tangent-kernel field satisfies the certificate identity");
    let witness_form =
        Polynomial::from_coefficient_vector(field, nv, &q_basis, &sol[..q_basis.len()]);
    let c = sol[q_basis.len()].clone();
    let scale = c.checked_div(&field.integer(d as i64))?;
    Ok(TangentCertificate {
        witness_form,
        scale,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum EtaleStatus {
    Etale,
    NotEtale,
    SectionSingular,
}

/// Verdict of the etale criterion at a hyperplane, with both kernel
/// dimensions and the agreement flag between the two routes.
#[derive(Clone, Debug, Serialize)]
pub struct EtaleVerdict {
    pub status: EtaleStatus,
    pub wlp_kernel_dimension: Option<usize>,
    pub tangent_kernel_dimension: Option<usize>,
    pub crosscheck_passed: Option<bool>,
}

/// Both routes of the equivalence on one `(F, L)` pair: kernel dimensions,
/// their simultaneous (non)vanishing, and the certificate counts verified
/// in each direction as exact identities.
#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub wlp_kernel_dimension: usize,
    pub tangent_kernel_dimension: usize,
    pub equivalence_holds: bool,
    pub field_to_class_certificates: usize,
    pub class_to_field_certificates: usize,
    pub passed: bool,
}

fn crosscheck_core(f: &Polynomial, l: &LinearForm) -> Result<CrosscheckReport> {
    let adapted = adapt(f, l)?;
    let g = adapted.form.clone();
    let d = g.homogeneous_degree()?;
    let field = g.field();
    let jr = JacobianRing::new(g.clone())?;
    let x0_form = LinearForm::new(Polynomial::variable(field, g.num_vars(), 0))?;

    let wlp = multiplication_map(&jr, &x0_form, d - 1)?;
    let tangent = tangent_kernel_adapted(adapted)?;

    let equivalence_holds = wlp.is_injective() == (tangent.kernel_dimension == 0);

    // Forward direction: each tangent-kernel field yields a class Q with
    // [Q] != 0 killed by x0.
    let x0 = Polynomial::variable(field, g.num_vars(), 0);
    let mut field_to_class = 0;
    for element in &tangent.elements {
        let cert = &element.certificate;
        let identity = cert.verify(&g, &element.vector_field);
        let class_nonzero = jr
            .reduce_mod_ideal(&cert.witness_form, d - 1)?
            .iter()
            .any(|c| !c.is_zero());
        let image_zero = jr
            .reduce_mod_ideal(&x0.mul(&cert.witness_form), d)?
            .iter()
            .all(Scalar::is_zero);
        if identity && class_nonzero && image_zero {
            field_to_class += 1;
        }
    }

    // Reverse direction: each multiplication-map kernel class yields a
    // nonzero vector field killed by phi.
    let mut class_to_field = 0;
    for q0 in wlp.kernel() {
        if verify_class_certificate(&g, q0)? {
            class_to_field += 1;
        }
    }

    let passed = equivalence_holds
        && field_to_class == tangent.kernel_dimension
        && class_to_field == wlp.kernel_dimension();
    Ok(CrosscheckReport {
        wlp_kernel_dimension: wlp.kernel_dimension(),
        tangent_kernel_dimension: tangent.kernel_dimension,
        equivalence_holds,
        field_to_class_certificates: field_to_class,
        class_to_field_certificates: class_to_field,
        passed,
    })
}

/// From a kernel class `[Q]` of `x x0`, constructs linear forms `L_i` free
/// of `x0` and a representative `Q'` of the same class with
/// `x0 Q' - sum L_i g'_i` in `span g` exactly, and checks that the induced
/// vector field is nonzero modulo the Euler relation.
fn verify_class_certificate(g: &Polynomial, q0: &Polynomial) -> Result<bool> {
    let field = g.field();
    let nv = g.num_vars();
    let d = g.homogeneous_degree()?;
    let partials: Vec<Polynomial> = (0..nv).map(|i| g.partial_derivative(i)).collect();
    let target_basis = monomials_of_degree(nv, d);
    let x0 = Polynomial::variable(field, nv, 0);

    // Solve x0 Q0 = sum A_i g'_i + c g over all linear A_i.
    let mut sys = Matrix::zero(field, target_basis.len(), nv * nv + 1);
    for slot in 0..nv {
        for var in 0..nv {
            let col = Polynomial::variable(field, nv, var)
                .mul(&partials[slot])
                .coefficient_vector(&target_basis)?;
            for (r, val) in col.into_iter().enumerate() {
                sys.set(r, slot * nv + var, val);
            }
        }
    }
    for (r, val) in g.coefficient_vector(&target_basis)?.into_iter().enumerate() {
        sys.set(r, nv * nv, val);
    }
    let rhs = x0.mul(q0).coefficient_vector(&target_basis)?;
    let Some(sol) = sys.solve(&rhs)? else {
        return Ok(false);
    };

    // Split off the x0 parts: A_i = a_i x0 + L_i with L_i free of x0.
    let mut fields = Vec::with_capacity(nv);
    let mut q_prime = q0.clone();
    let c = sol[nv * nv].clone();
    for slot in 0..nv {
        let mut l = Polynomial::zero(field, nv);
        for var in 1..nv {
            let coeff = sol[slot * nv + var].clone();
            if !coeff.is_zero() {
                l.add_term(Monomial::variable(var, nv), coeff);
            }
        }
        let a_i = sol[slot * nv].clone();
        if !a_i.is_zero() {
            q_prime = q_prime.sub(&partials[slot].scale(&a_i));
        }
        fields.push(l);
    }
    let v = VectorField::new(fields);

    // The certificate identity: x0 Q' - sum L_i g'_i - c g = 0.
    let identity = x0
        .mul(&q_prime)
        .sub(&apply_phi(&v, &partials))
        .sub(&g.scale(&c))
        .is_zero();

    Ok(identity && !v.is_zero_mod_relation())
}

fn gate_cubic_threefold(f: &Polynomial) -> Result<u32> {
    if f.num_vars() != 5 {
        return Err(Error::WrongVariableCount {
            expected: 5,
            found: f.num_vars(),
        });
    }
    let d = f.homogeneous_degree()?;
    if d != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            found: d,
        });
    }
    let p = f.field().characteristic();
    if p != 0 && d % p == 0 {
        return Err(Error::CharacteristicDividesDegree(p, d));
    }
    Ok(d)
}

/// The etale criterion for a smooth cubic threefold at the hyperplane
/// `L = 0`: `SectionSingular` when the hyperplane is tangent, otherwise
/// etale exactly when `xL : (R/J)_2 -> (R/J)_3` is injective. Both kernel
/// dimensions and the two-route agreement flag are recorded.
pub fn etale_check(f: &Polynomial, l: &LinearForm) -> Result<EtaleVerdict> {
    gate_cubic_threefold(f)?;
    ensure_smooth(f)?;
    if section_is_singular(f, l)? {
        return Ok(EtaleVerdict {
            status: EtaleStatus::SectionSingular,
            wlp_kernel_dimension: None,
            tangent_kernel_dimension: None,
            crosscheck_passed: None,
        });
    }
    let report = crosscheck_core(f, l)?;
    let status = if report.wlp_kernel_dimension == 0 {
        EtaleStatus::Etale
    } else {
        EtaleStatus::NotEtale
    };
    Ok(EtaleVerdict {
        status,
        wlp_kernel_dimension: Some(report.wlp_kernel_dimension),
        tangent_kernel_dimension: Some(report.tangent_kernel_dimension),
        crosscheck_passed: Some(report.passed),
    })
}

/// Runs both routes of the equivalence on a smooth cubic threefold with a
/// smooth section and verifies every certificate.
pub fn crosscheck_etale_routes(f: &Polynomial, l: &LinearForm) -> Result<CrosscheckReport> {
    gate_cubic_threefold(f)?;
    ensure_smooth(f)?;
    if section_is_singular(f, l)? {
        return Err(Error::SectionSingular);
    }
    crosscheck_core(f, l)
}

/// The unramifiedness criterion for a general smooth hypersurface of degree
/// `d >= 3` in at least four variables: the section map is unramified at a
/// non-tangent hyperplane exactly when `xL` is injective in degree `d-1`.
#[derive(Clone, Debug, Serialize)]
pub struct UnramifiedVerdict {
    pub unramified: bool,
    pub kernel_dimension: usize,
    pub source_degree: u32,
}

pub fn unramified_check(f: &Polynomial, l: &LinearForm) -> Result<UnramifiedVerdict> {
    if f.num_vars() < 4 {
        return Err(Error::WrongVariableCount {
            expected: 4,
            found: f.num_vars(),
        });
    }
    let d = f.homogeneous_degree()?;
    if d < 3 {
        return Err(Error::DegreeTooSmall(3));
    }
    ensure_smooth(f)?;
    if section_is_singular(f, l)? {
        return Err(Error::SectionSingular);
    }
    let jr = JacobianRing::new(f.clone())?;
    let map = multiplication_map(&jr, l, d - 1)?;
    Ok(UnramifiedVerdict {
        unramified: map.is_injective(),
        kernel_dimension: map.kernel_dimension(),
        source_degree: d - 1,
    })
}

/// One linear-form syzygy `sum M_i F'_i = c F` (exactly), the kernel object
/// of the relation map into `R_d / span F`.
#[derive(Clone, Debug)]
pub struct KoszulRelation {
    components: Vec<Polynomial>,
    form_multiple: Scalar,
}

impl KoszulRelation {
    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn form_multiple(&self) -> &Scalar {
        &self.form_multiple
    }

    /// Replays `sum M_i F'_i - c F = 0` exactly.
    pub fn verify(&self, f: &Polynomial) -> bool {
        let mut acc = Polynomial::zero(f.field(), f.num_vars());
        for (i, m) in self.components.iter().enumerate() {
            acc = acc.add(&m.mul(&f.partial_derivative(i)));
        }
        acc == f.scale(&self.form_multiple)
    }

    /// Is this a scalar multiple of the Euler tuple `(x0, ..., xn)`?
    pub fn is_euler_multiple(&self) -> bool {
        let nv = self.components.len();
        let field = self.components[0].field();
        let scale = self.components[0].coefficient(&Monomial::variable(0, nv));
        if scale.is_zero() {
            return false;
        }
        (0..nv).all(|i| self.components[i] == Polynomial::variable(field, nv, i).scale(&scale))
    }
}

/// Basis of the kernel of `(M_0, ..., M_n) -> sum M_i F'_i` from linear
/// tuples into `R_d / span F`. For a smooth form away from characteristic
/// dividing `d` this kernel is exactly the Euler line.
pub struct KoszulBasis {
    pub relations: Vec<KoszulRelation>,
}

impl KoszulBasis {
    pub fn dimension(&self) -> usize {
        self.relations.len()
    }
}

pub fn koszul_linear_relations(f: &Polynomial) -> Result<KoszulBasis> {
    let field = f.field();
    let nv = f.num_vars();
    let d = f.homogeneous_degree()?;
    let partials: Vec<Polynomial> = (0..nv).map(|i| f.partial_derivative(i)).collect();
    let target_basis = monomials_of_degree(nv, d);

    // Kernel of [A | F] where column (i, j) is x_j F'_i: a kernel vector
    // (m, t) means sum M_i F'_i = -t F.
    let mut sys = Matrix::zero(field, target_basis.len(), nv * nv + 1);
    for slot in 0..nv {
        for var in 0..nv {
            let col = Polynomial::variable(field, nv, var)
                .mul(&partials[slot])
                .coefficient_vector(&target_basis)?;
            for (r, val) in col.into_iter().enumerate() {
                sys.set(r, slot * nv + var, val);
            }
        }
    }
    for (r, val) in f.coefficient_vector(&target_basis)?.into_iter().enumerate() {
        sys.set(r, nv * nv, val);
    }

    let mut relations = Vec::new();
    for vec in sys.kernel_basis() {
        let mut components = Vec::with_capacity(nv);
        for slot in 0..nv {
            let mut m = Polynomial::zero(field, nv);
            for var in 0..nv {
                let coeff = vec[slot * nv + var].clone();
                if !coeff.is_zero() {
                    m.add_term(Monomial::variable(var, nv), coeff);
                }
            }
            components.push(m);
        }
        let relation = KoszulRelation {
            components,
            form_multiple: -vec[nv * nv].clone(),
        };
        debug_assert!(relation.verify(f));
        relations.push(relation);
    }
    Ok(KoszulBasis { relations })
}

/// Per-parameter row of the contracted-lines demonstration.
#[derive(Clone, Debug, Serialize)]
pub struct ContractedLineRow {
    pub t: i64,
    pub kernel_dimension: usize,
    pub exhibited_in_kernel: bool,
    pub exhibited_independent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractedLinesReport {
    pub rows: Vec<ContractedLineRow>,
}

impl ContractedLinesReport {
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.kernel_dimension >= 3 && r.exhibited_in_kernel && r.exhibited_independent)
    }
}

/// On the Fermat cubic threefold the section map contracts the pencil of
/// hyperplanes `x0 = t x1`: for each `t`, multiplication by `x0 - t x1` has
/// kernel of dimension at least 3, exhibited by the classes
/// `[(x0 + t x1) x_j]`, `j = 2, 3, 4`, since
/// `(x0 - t x1)(x0 + t x1) x_j = (x0^2 - t^2 x1^2) x_j` lies in the ideal.
pub fn contracted_lines_demo(t_values: &[i64]) -> Result<ContractedLinesReport> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let jr = JacobianRing::new(fermat)?;
    let piece2 = jr.graded_piece(2);

    let mut rows = Vec::new();
    for &t in t_values {
        let l_poly = Polynomial::variable(field, 5, 0)
            .sub(&Polynomial::variable(field, 5, 1).scale(&field.integer(t)));
        let l = LinearForm::new(l_poly)?;
        let map = multiplication_map(&jr, &l, 2)?;

        let conjugate = Polynomial::variable(field, 5, 0)
            .add(&Polynomial::variable(field, 5, 1).scale(&field.integer(t)));
        let mut in_kernel = true;
        let mut class_vectors = Vec::new();
        for j in 2..5 {
            let class_rep = conjugate.mul(&Polynomial::variable(field, 5, j));
            let image = l.poly().mul(&class_rep);
            if !jr.reduce_mod_ideal(&image, 3)?.iter().all(Scalar::is_zero) {
                in_kernel = false;
            }
            class_vectors.push(piece2.class_coordinates(&class_rep)?);
        }
        let stacked = Matrix::from_rows(field, class_vectors)?;
        rows.push(ContractedLineRow {
            t,
            kernel_dimension: map.kernel_dimension(),
            exhibited_in_kernel: in_kernel,
            exhibited_independent: stacked.rank() == 3,
        });
    }
    Ok(ContractedLinesReport { rows })
}

/// The Fermat negative instance at `L = x0`: both kernels have dimension 4,
/// the multiplication kernel is spanned by the classes `[x0 x_j]`, the
/// tangent kernel contains the four derivations `x_i d/dx0`, and the
/// verdict is not etale with a passing crosscheck.
#[derive(Clone, Debug, Serialize)]
pub struct FermatKernelReport {
    pub status: EtaleStatus,
    pub wlp_kernel_dimension: usize,
    pub wlp_kernel_classes: Vec<String>,
    pub tangent_kernel_dimension: usize,
    pub derivations_along_x0_in_kernel: bool,
    pub crosscheck_passed: bool,
}

impl FermatKernelReport {
    pub fn passed(&self) -> bool {
        self.status == EtaleStatus::NotEtale
            && self.wlp_kernel_dimension == 4
            && self.tangent_kernel_dimension == 4
            && self.derivations_along_x0_in_kernel
            && self.crosscheck_passed
    }
}

pub fn fermat_kernel_demo() -> Result<FermatKernelReport> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let l = LinearForm::new(Polynomial::variable(field, 5, 0))?;

    let verdict = etale_check(&fermat, &l)?;
    let jr = JacobianRing::new(fermat.clone())?;
    let map = multiplication_map(&jr, &l, 2)?;
    let classes: Vec<String> = map.kernel().iter().map(Polynomial::to_string).collect();

    let tangent = tangent_kernel(&fermat, &l)?;
    // Stack the kernel fields in slot coordinates and test membership of
    // the four derivations x_i d/dx0.
    let slot_rows: Vec<Vec<Scalar>> = tangent
        .elements
        .iter()
        .map(|e| e.vector_field.slot_coordinates())
        .collect();
    let kernel_span = Matrix::from_rows(field, slot_rows)?.rref().matrix;
    let mut contained = true;
    for i in 1..5 {
        let mut components = vec![Polynomial::zero(field, 5); 5];
        components[0] = Polynomial::variable(field, 5, i);
        let candidate = VectorField::new(components);
        if kernel_span
            .in_span(&candidate.slot_coordinates())?
            .is_none()
        {
            contained = false;
        }
    }

    Ok(FermatKernelReport {
        status: verdict.status,
        wlp_kernel_dimension: verdict.wlp_kernel_dimension.unwrap_or(0),
        wlp_kernel_classes: classes,
        tangent_kernel_dimension: tangent.kernel_dimension,
        derivations_along_x0_in_kernel: contained,
        crosscheck_passed: verdict.crosscheck_passed.unwrap_or(false),
    })
}

/// Koszul uniqueness at desk scale: on seeded random smooth cubic
/// threefolds over `Q` the relation kernel is exactly the Euler line, while
/// the cone `x0^3 + x1^3 + x2^3 + x3^3` (in five variables) has extra
/// relations through its vanishing partial.
#[derive(Clone, Debug, Serialize)]
pub struct KoszulDemoReport {
    pub sample_dimensions: Vec<usize>,
    pub all_spanned_by_euler: bool,
    pub cone_dimension: usize,
}

impl KoszulDemoReport {
    pub fn passed(&self) -> bool {
        self.sample_dimensions.iter().all(|&d| d == 1)
            && self.all_spanned_by_euler
            && self.cone_dimension > 1
    }
}

pub fn koszul_uniqueness_demo(samples: u32, seed: u64) -> Result<KoszulDemoReport> {
    let mut sample_dimensions = Vec::new();
    let mut all_euler = true;
    for s in 0..samples {
        let f = random_smooth_form(
            5,
            3,
            Field::Rationals,
            derive_seed(seed, s as u64),
            CoeffPolicy::default(),
            16,
        )?;
        let basis = koszul_linear_relations(&f)?;
        sample_dimensions.push(basis.dimension());
        if basis.dimension() != 1
            || !basis.relations[0].verify(&f)
            || !basis.relations[0].is_euler_multiple()
        {
            all_euler = false;
        }
    }
    let cone = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", Field::Rationals, 5)?;
    let cone_dimension = koszul_linear_relations(&cone)?.dimension();
    Ok(KoszulDemoReport {
        sample_dimensions,
        all_spanned_by_euler: all_euler,
        cone_dimension,
    })
}
