//! Integral bases of K_m: the template table, instantiation at a concrete m,
//! and certification.

pub mod certify;
pub mod templates;

use std::array;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::int::as_integer;
use crate::arith::matrix::{RatMatrix6, N};
use crate::arith::resultant::discriminant;
use crate::error::{Error, Result};
use crate::field::{FieldElement, SexticField};

pub use certify::{
    certify_integral_basis, certify_with_bound, dedekind_test, enumerate_p_maximality, find_p_divisible,
    verify_ell_identity, verify_qm_congruence, CertificationReport, MaximalityEvidence, MaximalityMethod,
};
pub use templates::{residue_of, template_for, BasisTemplate, TEMPLATES};

pub struct IntegralBasis {
    field: Arc<SexticField>,
    template: &'static BasisTemplate,
    residue: u32,
    elements: [FieldElement; N],
    /// Row i is the power-basis coordinate vector of b_(i+1).
    matrix: RatMatrix6,
    inverse: RatMatrix6,
}

impl IntegralBasis {
    /// Instantiates the template for m ≡ r (mod 36) at x = α_m.
    pub fn new(m: &BigInt) -> Result<Self> {
        let template = template_for(m)?;
        let field = SexticField::new(m)?;
        Self::from_template(field, template)
    }

    pub fn from_template(field: Arc<SexticField>, template: &'static BasisTemplate) -> Result<Self> {
        let residue = templates::residue_of(field.m());
        let elements: [FieldElement; N] = array::from_fn(|i| {
            let d = BigRational::new(BigInt::one(), BigInt::from(template.denominator(i)));
            field.from_int_poly(&template.numerator(i)).scale(&d)
        });
        let matrix = RatMatrix6::from_fn(|i, j| elements[i].coords()[j].clone());
        let inverse = matrix
            .inverse()
            .ok_or_else(|| Error::Inconsistency("basis matrix is singular".into()))?;
        Ok(Self { field, template, residue, elements, matrix, inverse })
    }

    pub fn field(&self) -> &Arc<SexticField> {
        &self.field
    }

    pub fn template(&self) -> &'static BasisTemplate {
        self.template
    }

    /// m mod 36 in 1..=36.
    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn elements(&self) -> &[FieldElement; N] {
        &self.elements
    }

    pub fn matrix(&self) -> &RatMatrix6 {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &RatMatrix6 {
        &self.inverse
    }

    pub fn ell(&self) -> u32 {
        self.template.ell
    }

    /// Coordinates of `x` with respect to this basis.
    pub fn coords_of(&self, x: &FieldElement) -> [BigRational; N] {
        self.inverse.vec_mul(x.coords())
    }

    /// Integer coordinates of `x`, or `None` if `x` is outside the lattice.
    pub fn int_coords_of(&self, x: &FieldElement) -> Option<[BigInt; N]> {
        let c = self.coords_of(x);
        let v: Vec<BigInt> = c.iter().map(as_integer).collect::<Option<_>>()?;
        v.try_into().ok()
    }

    /// `Σ c_i·b_i`
    pub fn element_from_coords(&self, c: &[BigInt; N]) -> FieldElement {
        let v: [BigRational; N] = array::from_fn(|i| BigRational::from_integer(c[i].clone()));
        self.field.element(self.matrix.vec_mul(&v))
    }

    /// `2^(2ℓ)·q_m⁵` as promised by the template.
    pub fn claimed_discriminant(&self) -> BigInt {
        BigInt::from(1u32 << (2 * self.template.ell)) * num_traits::pow(self.field.q().clone(), 5)
    }

    /// Discriminant of the spanned lattice by change of basis,
    /// `det(B)²·disc(f_m)`, cross-checked against the trace-form Gram
    /// determinant `det(Tr(b_i·b_j))`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.matrix.det();
        let by_change = &d * &d * BigRational::from_integer(discriminant(self.field.polynomial())?);
        let by_trace = self.trace_form().det();
        if by_change != by_trace {
            return Err(Error::Inconsistency(format!(
                "discriminant routes disagree: {by_change} vs {by_trace}"
            )));
        }
        as_integer(&by_change)
            .ok_or_else(|| Error::Inconsistency(format!("non-integral discriminant {by_change}")))
    }

    /// Gram matrix of the trace form.
    pub fn trace_form(&self) -> RatMatrix6 {
        let mut g = RatMatrix6::zero();
        for i in 0..N {
            for j in i..N {
                let t = (&self.elements[i] * &self.elements[j]).trace();
                g.0[i][j] = t.clone();
                g.0[j][i] = t;
            }
        }
        g
    }

    /// `[Z_K : Z[α]]` as implied by the basis matrix, `1/|det B|`.
    pub fn index_of_equation_order(&self) -> BigRational {
        self.matrix.det().abs().recip()
    }

    pub fn integrality(&self) -> [bool; N] {
        array::from_fn(|i| self.elements[i].is_algebraic_integer())
    }
}

impl std::fmt::Debug for IntegralBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IntegralBasis")
            .field("m", self.field.m())
            .field("residue", &self.residue)
            .field("elements", &self.elements)
            .finish()
    }
}

/// Shorthand used in tests and the CLI.
pub fn instantiate_basis(m: &BigInt) -> Result<IntegralBasis> {
    IntegralBasis::new(m)
}

/// Diagonal of a triangular basis matrix, for display.
pub fn diagonal(b: &IntegralBasis) -> [BigRational; N] {
    array::from_fn(|i| b.matrix.0[i][i].clone())
}
