//! Arithmetic in the simplest sextic field K_m = Q(α), where α is a root of
//!
//! ```text
//! f_m(x) = x^6 − 2m·x^5 − (5m+15)·x^4 − 20·x^3 + 5m·x^2 + (2m+6)·x + 1.
//! ```
//!
//! Elements are stored by their coordinates in the power basis 1, α, …, α^5.
//! The cyclic Galois group is generated by σ: α ↦ (α − 1)/(α + 2), and every
//! conjugate-dependent quantity (norms, index-form factors) is computed from
//! σ algebraically rather than from numerical embeddings.

use std::array;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::int::{as_integer, rat_int};
use crate::arith::matrix::{RatMatrix6, N};
use crate::arith::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Parameters for which f_m is reducible.
pub const EXCLUDED_M: [i64; 4] = [-8, -3, 0, 5];

pub fn is_excluded(m: &BigInt) -> bool {
    EXCLUDED_M.iter().any(|&e| *m == BigInt::from(e))
}

/// `m² + 3m + 9`
pub fn qm_of(m: &BigInt) -> BigInt {
    m * m + BigInt::from(3) * m + BigInt::from(9)
}

/// The defining polynomial f_m.
pub fn defining_polynomial(m: &BigInt) -> IntPoly {
    let c = |a: i64, b: i64| BigInt::from(a) * m + BigInt::from(b);
    IntPoly::new(vec![
        BigInt::one(),
        c(2, 6),
        c(5, 0),
        BigInt::from(-20),
        c(-5, -15),
        c(-2, 0),
        BigInt::one(),
    ])
}

pub struct SexticField {
    m: BigInt,
    q: BigInt,
    f: IntPoly,
    /// Power-basis coordinates of α^6 … α^10.
    high_powers: [[BigRational; N]; 5],
    /// Row i holds the coordinates of σ(α)^i.
    sigma: RatMatrix6,
}

impl SexticField {
    pub fn new(m: &BigInt) -> Result<Arc<Self>> {
        if is_excluded(m) {
            return Err(Error::Domain(format!("excluded parameter m = {m}: f_m is reducible")));
        }
        let f = defining_polynomial(m);
        if f.eval(&BigInt::from(-2)).is_zero() {
            return Err(Error::Inconsistency(format!("f_m(-2) = 0 for m = {m}")));
        }
        let q = qm_of(m);
        let fr = f.to_rat();

        let reduce = |p: &RatPoly| -> [BigRational; N] {
            let (_, r) = p.div_rem(&fr);
            array::from_fn(|i| r.coeff(i))
        };
        let high_powers = array::from_fn(|k| reduce(&RatPoly::monomial(BigRational::one(), N + k)));

        // σ(α) = (α − 1)·(α + 2)^(-1)
        let (g, s, _) = RatPoly::ext_gcd(&RatPoly::from_i64(&[2, 1]), &fr);
        if g.degree() != Some(0) {
            return Err(Error::Inconsistency(format!("α + 2 is not invertible for m = {m}")));
        }
        let sigma_alpha = {
            let (_, r) = (&RatPoly::from_i64(&[-1, 1]) * &s).div_rem(&fr);
            r
        };
        let mut rows: [[BigRational; N]; N] = array::from_fn(|_| array::from_fn(|_| BigRational::zero()));
        let mut pw = RatPoly::one();
        for row in rows.iter_mut() {
            *row = array::from_fn(|i| pw.coeff(i));
            pw = (&pw * &sigma_alpha).div_rem(&fr).1;
        }

        Ok(Arc::new(Self {
            m: m.clone(),
            q,
            f,
            high_powers,
            sigma: RatMatrix6::from_rows(rows),
        }))
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// `q_m = m² + 3m + 9`
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.f
    }

    /// Matrix of σ acting on power-basis row vectors.
    pub fn sigma_matrix(&self) -> &RatMatrix6 {
        &self.sigma
    }

    pub fn element(self: &Arc<Self>, coords: [BigRational; N]) -> FieldElement {
        FieldElement { field: Arc::clone(self), coords }
    }

    /// Image of a polynomial in α.
    pub fn from_poly(self: &Arc<Self>, p: &RatPoly) -> FieldElement {
        if p.degree().is_some_and(|d| d >= 2 * N - 1) {
            let (_, r) = p.div_rem(&self.f.to_rat());
            return self.element(array::from_fn(|i| r.coeff(i)));
        }
        let mut coords: [BigRational; N] = array::from_fn(|i| p.coeff(i));
        for (k, c) in p.coeffs().iter().enumerate().skip(N) {
            self.add_power(&mut coords, k, c);
        }
        self.element(coords)
    }

    pub fn from_int_poly(self: &Arc<Self>, p: &IntPoly) -> FieldElement {
        self.from_poly(&p.to_rat())
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> FieldElement {
        let mut coords: [BigRational; N] = array::from_fn(|_| BigRational::zero());
        coords[0] = c;
        self.element(coords)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.from_rational(BigRational::zero())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn alpha(self: &Arc<Self>) -> FieldElement {
        self.from_poly(&RatPoly::x())
    }

    /// `coords += c · α^k` for `k < 11`.
    fn add_power(&self, coords: &mut [BigRational; N], k: usize, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        if k < N {
            coords[k] += c;
        } else {
            for (dst, src) in coords.iter_mut().zip(&self.high_powers[k - N]) {
                if !src.is_zero() {
                    *dst += c * src;
                }
            }
        }
    }

    fn same(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.m == other.m
    }
}

impl fmt::Debug for SexticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SexticField(m = {}, f = {})", self.m, self.f)
    }
}

#[derive(Clone)]
pub struct FieldElement {
    field: Arc<SexticField>,
    coords: [BigRational; N],
}

impl FieldElement {
    pub fn field(&self) -> &Arc<SexticField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational; N] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "elements of different fields (m = {} and m = {})",
                self.field.m, other.field.m
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.field.element(array::from_fn(|i| &self.coords[i] + &other.coords[i])))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.field.element(array::from_fn(|i| &self.coords[i] - &other.coords[i])))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut prod: [BigRational; 2 * N - 1] = array::from_fn(|_| BigRational::zero());
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coords: [BigRational; N] = array::from_fn(|i| prod[i].clone());
        for (k, c) in prod.iter().enumerate().skip(N) {
            self.field.add_power(&mut coords, k, c);
        }
        Ok(self.field.element(coords))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.field.element(array::from_fn(|i| &self.coords[i] * c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse by extended Euclid against f_m.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let fr = self.field.f.to_rat();
        let (g, s, _) = RatPoly::ext_gcd(&self.to_poly(), &fr);
        if g.degree() != Some(0) {
            return Err(Error::Inconsistency(format!(
                "element shares a factor {g} with f_m (m = {})",
                self.field.m
            )));
        }
        Ok(self.field.from_poly(&s))
    }

    /// Image under σ: α ↦ (α − 1)/(α + 2).
    pub fn sigma(&self) -> Self {
        self.field.element(self.field.sigma.vec_mul(&self.coords))
    }

    /// σ^k, with k taken mod 6.
    pub fn sigma_pow(&self, k: usize) -> Self {
        (0..k % N).fold(self.clone(), |acc, _| acc.sigma())
    }

    /// Row i holds the coordinates of `self · α^i`.
    pub fn mult_matrix(&self) -> RatMatrix6 {
        let mut rows: [[BigRational; N]; N] = array::from_fn(|_| array::from_fn(|_| BigRational::zero()));
        let alpha = self.field.alpha();
        let mut cur = self.clone();
        for row in rows.iter_mut() {
            *row = cur.coords.clone();
            cur = &cur * &alpha;
        }
        RatMatrix6::from_rows(rows)
    }

    pub fn norm(&self) -> BigRational {
        self.mult_matrix().det()
    }

    pub fn trace(&self) -> BigRational {
        self.mult_matrix().trace()
    }

    pub fn charpoly(&self) -> RatPoly {
        self.mult_matrix().charpoly()
    }

    /// Integral over Z iff the characteristic polynomial has integer
    /// coefficients (it is a power of the minimal polynomial, and Gauss's
    /// lemma applies to the monic minimal polynomial).
    pub fn is_algebraic_integer(&self) -> bool {
        // the trace is necessary and far cheaper than the full charpoly
        if as_integer(&self.trace()).is_none() {
            return false;
        }
        self.charpoly().is_integral()
    }

    pub fn from_integers(field: &Arc<SexticField>, coords: &[BigInt; N]) -> Self {
        field.element(array::from_fn(|i| rat_int(&coords[i])))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement[m={}]({})", self.field.m, self.to_poly())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

// Operators panic on mixed fields; use the `try_*` methods to get an error.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(array::from_fn(|i| -self.coords[i].clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int::rat;
    use proptest::prelude::*;

    fn field(m: i64) -> Arc<SexticField> {
        SexticField::new(&BigInt::from(m)).unwrap()
    }

    fn elem(k: &Arc<SexticField>, c: &[i64]) -> FieldElement {
        k.from_poly(&RatPoly::from_i64(c))
    }

    #[test]
    fn excluded_parameters_are_rejected() {
        for m in EXCLUDED_M {
            assert!(matches!(SexticField::new(&BigInt::from(m)), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn polynomial_coefficients() {
        let f = defining_polynomial(&BigInt::from(1));
        assert_eq!(f, IntPoly::from_i64(&[1, 8, 5, -20, -20, -2, 1]));
        assert_eq!(qm_of(&BigInt::from(1)), BigInt::from(13));
    }

    #[test]
    fn reduction_of_alpha_to_the_sixth() {
        let k = field(1);
        let a = k.alpha();
        let a5 = a.pow(5);
        // α^6 = 2mα^5 + (5m+15)α^4 + 20α^3 − 5mα^2 − (2m+6)α − 1
        assert_eq!(&a * &a5, elem(&k, &[-1, -8, -5, 20, 20, 2]));
        assert_eq!(&k.one() * &a, a);
    }

    #[test]
    fn inverses() {
        let k = field(1);
        assert_eq!(k.one().inv().unwrap(), k.one());
        let a = k.alpha();
        assert_eq!(&a.inv().unwrap() * &a, k.one());
        let b = elem(&k, &[2, 1]);
        assert_eq!(&b * &b.inv().unwrap(), k.one());
        assert!(k.zero().inv().is_err());
    }

    #[test]
    fn mixed_fields_are_a_domain_error() {
        let a = field(1).alpha();
        let b = field(2).alpha();
        assert!(matches!(a.try_mul(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn sigma_has_order_six() {
        for m in [1i64, -1, 2, 7, -40, 123] {
            let k = field(m);
            let a = k.alpha();
            for j in 1..6 {
                assert_ne!(a.sigma_pow(j), a, "m = {m}, k = {j}");
            }
            assert_eq!(a.sigma_pow(6), a);
            let s3 = a.sigma_pow(3);
            assert_eq!(s3.sigma_pow(3), a);
            let c = k.from_rational(rat(7));
            assert_eq!(c.sigma(), c);
        }
    }

    #[test]
    fn sigma_alpha_is_the_moebius_image() {
        let k = field(4);
        let a = k.alpha();
        let expected = &(&a - &k.one()) * &(&a + &k.from_rational(rat(2))).inv().unwrap();
        assert_eq!(a.sigma(), expected);
    }

    #[test]
    fn norm_and_trace_of_alpha() {
        for m in [1i64, -1, 2, 10] {
            let k = field(m);
            assert_eq!(k.alpha().norm(), rat(1));
            assert_eq!(k.alpha().trace(), rat(2 * m));
        }
    }

    #[test]
    fn charpoly_of_alpha_is_f() {
        let k = field(1);
        assert_eq!(k.alpha().charpoly(), k.polynomial().to_rat());
    }

    #[test]
    fn integrality_examples() {
        let k = field(1);
        let half = BigRational::new(1.into(), 2.into());
        assert!(elem(&k, &[1, 1, 0, 1]).scale(&half).is_algebraic_integer());
        assert!(!k.alpha().scale(&half).is_algebraic_integer());
        assert!(!k.alpha().scale(&half).charpoly().is_integral());
    }

    fn small_elem() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-6i64..7, 6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn sigma_is_a_ring_homomorphism(m in prop::sample::select(vec![1i64, -1, 2, 4, 11, -20]), a in small_elem(), b in small_elem()) {
            let k = field(m);
            let (x, y) = (elem(&k, &a), elem(&k, &b));
            prop_assert_eq!((&x + &y).sigma(), &x.sigma() + &y.sigma());
            prop_assert_eq!((&x * &y).sigma(), &x.sigma() * &y.sigma());
        }

        #[test]
        fn norm_is_multiplicative_and_a_galois_product(m in prop::sample::select(vec![1i64, -1, 2, 13]), a in small_elem(), b in small_elem()) {
            let k = field(m);
            let (x, y) = (elem(&k, &a), elem(&k, &b));
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            let prod = (0..6).fold(k.one(), |acc, j| &acc * &x.sigma_pow(j));
            prop_assert_eq!(prod.as_rational(), Some(&x.norm()));
        }

        #[test]
        fn integral_elements_have_integral_norm_and_trace(a in small_elem()) {
            let k = field(1);
            let x = elem(&k, &a);
            prop_assert!(x.is_algebraic_integer());
            prop_assert!(x.norm().is_integer());
            prop_assert!(x.trace().is_integer());
        }
    }
}
