//! Per-m certification that the template basis is an integral basis.
//!
//! Evidence collected for one m:
//!
//! 1. q_m is squarefree (complete trial division);
//! 2. every basis element is an algebraic integer;
//! 3. the lattice discriminant equals `2^(2ℓ)·q_m⁵`, by two routes;
//! 4. 2- and 3-maximality by exhausting `(Σ a_i·b_i)/p`, `a ∈ {0..p-1}⁶`;
//! 5. p-maximality of Z[α] for every p | q_m by the Dedekind criterion, which
//!    carries over to the larger lattice because its index over Z[α] is a
//!    power-of-6 divisor, prime to p;
//! 6. no other prime divides disc(f_m) at all.

use std::array;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::int::{as_integer, mod_inverse, rat_int, trial_factor, Squarefreeness, DEFAULT_TRIAL_BOUND};
use crate::arith::matrix::N;
use crate::arith::modpoly::ModPoly;
use crate::arith::poly::{IntPoly, RatPoly};
use crate::arith::resultant::discriminant;
use crate::basis::IntegralBasis;
use crate::decimal;
use crate::error::{Error, Result};
use crate::field::{defining_polynomial, is_excluded, qm_of, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MaximalityMethod {
    #[serde(rename = "dedekind-on-Z[α]")]
    DedekindOnEquationOrder,
    #[serde(rename = "enumeration")]
    Enumeration,
    /// Primes outside {2, 3} ∪ {p | q_m} do not divide disc(f_m).
    #[serde(rename = "disc-squarefree")]
    DiscSquarefree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityEvidence {
    /// `None` stands for "every prime not listed separately".
    #[serde(with = "decimal::option")]
    pub prime: Option<BigInt>,
    pub method: MaximalityMethod,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    #[serde(with = "decimal")]
    pub m: BigInt,
    #[serde(with = "decimal")]
    pub q: BigInt,
    pub q_squarefree: Squarefreeness,
    pub residue: Option<u32>,
    pub ell: Option<u32>,
    pub integrality_ok: bool,
    #[serde(with = "decimal::option")]
    pub disc_computed: Option<BigInt>,
    #[serde(with = "decimal::option")]
    pub disc_claimed: Option<BigInt>,
    pub maximality_evidence: Vec<MaximalityEvidence>,
    pub certified: bool,
    pub reason: Option<String>,
}

impl CertificationReport {
    fn rejected(m: &BigInt, q: BigInt, sq: Squarefreeness, reason: &str) -> Self {
        Self {
            m: m.clone(),
            q,
            q_squarefree: sq,
            residue: None,
            ell: None,
            integrality_ok: false,
            disc_computed: None,
            disc_claimed: None,
            maximality_evidence: Vec::new(),
            certified: false,
            reason: Some(reason.to_string()),
        }
    }
}

/// Dedekind criterion: is Z[α_m] p-maximal?
///
/// With ḡ the radical of f̄_m mod p and h̄ = f̄_m/ḡ, lift both to monic g, h
/// over Z and put t = (g·h − f_m)/p. Then Z[α] is p-maximal iff
/// gcd(t̄, ḡ, h̄) = 1 in F_p[x].
pub fn dedekind_test(m: &BigInt, p: &BigInt) -> bool {
    dedekind_test_poly(&defining_polynomial(m), p)
}

pub fn dedekind_test_poly(f: &IntPoly, p: &BigInt) -> bool {
    let fbar = ModPoly::from_int_poly(f, p);
    let gbar = fbar.radical();
    let hbar = fbar.div_exact(&gbar);
    let gh = &gbar.lift() * &hbar.lift();
    let t = (&gh - f).div_exact(p);
    let tbar = ModPoly::from_int_poly(&t, p);
    tbar.gcd(&gbar).gcd(&hbar).is_one()
}

/// Checks f_m(x) ≡ (x − m·3⁻¹)⁶ in (Z/q_m)[x].
pub fn verify_qm_congruence(m: &BigInt) -> Result<bool> {
    let q = qm_of(m);
    let inv3 = mod_inverse(&BigInt::from(3), &q)
        .ok_or_else(|| Error::Domain(format!("3 divides q_m = {q}")))?;
    let c = (m * inv3).mod_floor(&q);
    let lhs = defining_polynomial(m);
    let rhs = IntPoly::linear_root(c).pow(6);
    Ok((0..=6).all(|i| (lhs.coeff(i) - rhs.coeff(i)).mod_floor(&q).is_zero()))
}

/// The quartic ℓ(x) with (x − m/3)⁶ − f_m(x) = (q_m/3⁶)·ℓ(x).
pub fn ell_polynomial(m: &BigInt) -> IntPoly {
    let m2 = m * m;
    let m3 = &m2 * m;
    let m4 = &m3 * m;
    let i = |n: i64| BigInt::from(n);
    IntPoly::new(vec![
        -i(3) * &m3 + &m4 + i(27) * m - i(81),
        i(54) * &m2 - i(18) * &m3 - i(486),
        i(135) * &m2 - i(405) * m,
        i(-540) * m + i(1620),
        i(1215),
    ])
}

/// Cubic cofactor in the division of ℓ(x) by (x − m/3).
pub fn ell_cofactor(m: &BigInt) -> IntPoly {
    let m2 = m * m;
    let i = |n: i64| BigInt::from(n);
    IntPoly::new(vec![
        i(4) * &m2 * m + i(33) * &m2 - i(162),
        i(45) * m + i(30) * &m2,
        i(-45) * m + i(540),
        i(405),
    ])
}

/// `ell_identity_with_sign(m, 1)` checks both exact identities at this m:
///
/// ```text
/// (x − m/3)⁶ − f_m(x) = (q_m/3⁶)·ℓ(x)
/// ℓ(x) = sign·3·(x − m/3)·c(x) + (5(m+6)(m−3)·q_m + 3⁶)
/// ```
pub fn ell_identity_with_sign(m: &BigInt, sign: i64) -> bool {
    let third = BigRational::new(m.clone(), BigInt::from(3));
    let lin = RatPoly::linear_root(third);
    let q = qm_of(m);
    let ell = ell_polynomial(m).to_rat();

    let lhs = &lin.pow(6) - &defining_polynomial(m).to_rat();
    let rhs = ell.scale(&BigRational::new(q.clone(), BigInt::from(729)));
    if lhs != rhs {
        return false;
    }

    let remainder = BigInt::from(5) * (m + 6) * (m - 3) * &q + 729;
    let split = &(&lin * &ell_cofactor(m).to_rat()).scale(&rat_int(&BigInt::from(3 * sign)))
        + &RatPoly::constant(rat_int(&remainder));
    ell == split
}

pub fn verify_ell_identity(m: &BigInt) -> bool {
    ell_identity_with_sign(m, 1)
}

/// Some nonzero `(Σ a_i·e_i)/p`, `a ∈ {0..p-1}⁶`, that is an algebraic
/// integer, if any. `elements` must be algebraic integers; the lattice they
/// span then has index prime to p in Z_K iff this returns `None`.
pub fn find_p_divisible(elements: &[FieldElement; N], p: u32) -> Option<FieldElement> {
    let field = elements[0].field();
    let inv_p = BigRational::new(BigInt::one(), BigInt::from(p));
    let pb = BigInt::from(p);
    // the trace of a candidate must be divisible by p
    let traces: Option<Vec<BigInt>> = elements.iter().map(|e| as_integer(&e.trace())).collect();

    let total = (p as usize).pow(N as u32);
    let mut digits = [0u32; N];
    for _ in 1..total {
        // odometer increment, skipping the zero vector
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
        if let Some(tr) = &traces {
            let t: BigInt = digits.iter().zip(tr).map(|(&a, t)| t * a).sum();
            if !t.mod_floor(&pb).is_zero() {
                continue;
            }
        }
        let coords: [BigRational; N] = array::from_fn(|j| {
            let s: BigRational = digits
                .iter()
                .zip(elements)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, e)| &e.coords()[j] * BigRational::from_integer(a.into()))
                .sum();
            s * &inv_p
        });
        let cand = field.element(coords);
        if cand.is_algebraic_integer() {
            return Some(cand);
        }
    }
    None
}

pub fn enumerate_p_maximality(basis: &IntegralBasis, p: u32) -> bool {
    find_p_divisible(basis.elements(), p).is_none()
}

pub fn certify_integral_basis(m: &BigInt) -> Result<CertificationReport> {
    certify_with_bound(m, DEFAULT_TRIAL_BOUND).map(|(r, _)| r)
}

/// Full certification; also returns the basis when it was instantiated.
pub fn certify_with_bound(m: &BigInt, bound: u64) -> Result<(CertificationReport, Option<IntegralBasis>)> {
    if is_excluded(m) {
        return Err(Error::Domain(format!("excluded parameter m = {m}: f_m is reducible")));
    }
    let q = qm_of(m);
    let q_fac = trial_factor(&q, bound);
    let sq = if q_fac.factors.iter().any(|(_, e)| *e > 1) {
        Squarefreeness::NotSquarefree
    } else if q_fac.is_complete() {
        Squarefreeness::Squarefree
    } else {
        Squarefreeness::Undecided
    };
    match sq {
        Squarefreeness::Undecided => {
            return Err(Error::Undecided(format!(
                "cannot decide whether q_m = {q} is squarefree with trial division up to {bound}"
            )))
        }
        Squarefreeness::NotSquarefree => {
            return Ok((CertificationReport::rejected(m, q, sq, "q not squarefree"), None))
        }
        Squarefreeness::Squarefree => {}
    }

    let basis = IntegralBasis::new(m)?;
    let mut report = CertificationReport {
        m: m.clone(),
        q: q.clone(),
        q_squarefree: sq,
        residue: Some(basis.residue()),
        ell: Some(basis.ell()),
        integrality_ok: false,
        disc_computed: None,
        disc_claimed: Some(basis.claimed_discriminant()),
        maximality_evidence: Vec::new(),
        certified: false,
        reason: None,
    };

    report.integrality_ok = basis.integrality().iter().all(|&b| b);
    if !report.integrality_ok {
        report.reason = Some("a basis element is not an algebraic integer".into());
        return Ok((report, Some(basis)));
    }

    let disc = basis.discriminant()?;
    report.disc_computed = Some(disc.clone());
    let disc_ok = report.disc_claimed.as_ref() == Some(&disc);

    let mut evidence = Vec::new();
    for p in [2u32, 3] {
        evidence.push(MaximalityEvidence {
            prime: Some(BigInt::from(p)),
            method: MaximalityMethod::Enumeration,
            verdict: enumerate_p_maximality(&basis, p),
        });
    }
    let q_primes: Vec<BigInt> = q_fac.primes().cloned().collect();
    for p in &q_primes {
        let small = p.to_u32().is_some_and(|p| p == 2 || p == 3);
        evidence.push(MaximalityEvidence {
            prime: Some(p.clone()),
            method: MaximalityMethod::DedekindOnEquationOrder,
            verdict: !small && dedekind_test_poly(basis.field().polynomial(), p),
        });
    }
    let mut rest = discriminant(basis.field().polynomial())?.abs();
    for p in [BigInt::from(2), BigInt::from(3)].iter().chain(&q_primes) {
        while (&rest % p).is_zero() {
            rest /= p;
        }
    }
    evidence.push(MaximalityEvidence {
        prime: None,
        method: MaximalityMethod::DiscSquarefree,
        verdict: rest.is_one(),
    });

    let max_ok = evidence.iter().all(|e| e.verdict);
    report.maximality_evidence = evidence;
    report.certified = disc_ok && max_ok;
    if !disc_ok {
        report.reason = Some(format!(
            "discriminant {disc} differs from the claimed {}",
            report.disc_claimed.as_ref().unwrap()
        ));
    } else if !max_ok {
        report.reason = Some("a maximality check failed".into());
    }
    Ok((report, Some(basis)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SexticField;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn dedekind_examples() {
        assert!(dedekind_test(&big(1), &big(13)));
        assert!(!dedekind_test(&big(1), &big(2)));
        assert!(dedekind_test(&big(2), &big(2)));
        // index 216 for m = 1 is divisible by 3 as well; 27 for m = 2
        assert!(!dedekind_test(&big(1), &big(3)));
        assert!(!dedekind_test(&big(2), &big(3)));
        // a prime not dividing disc(f) is always fine
        assert!(dedekind_test(&big(1), &big(5)));
    }

    #[test]
    fn dedekind_on_textbook_polynomials() {
        // x^2 + 3: Z[√-3] is not 2-maximal
        assert!(!dedekind_test_poly(&IntPoly::from_i64(&[3, 0, 1]), &big(2)));
        // x^2 + 1: Z[i] is maximal
        assert!(dedekind_test_poly(&IntPoly::from_i64(&[1, 0, 1]), &big(2)));
        // x^2 - 5 at 2: (1+√5)/2 is missing
        assert!(!dedekind_test_poly(&IntPoly::from_i64(&[-5, 0, 1]), &big(2)));
    }

    #[test]
    fn qm_congruence_examples() {
        for m in [1, 2, 4, -1, 100] {
            assert!(verify_qm_congruence(&big(m)).unwrap(), "m = {m}");
        }
        // m = 1: 3⁻¹ = 9 mod 13 and f_1 ≡ (x − 9)^6
        let f = defining_polynomial(&big(1));
        let r = IntPoly::linear_root(big(9)).pow(6);
        for i in 0..=6 {
            assert!((f.coeff(i) - r.coeff(i)).mod_floor(&big(13)).is_zero());
        }
        assert!(matches!(verify_qm_congruence(&big(6)), Err(Error::Domain(_))));
    }

    #[test]
    fn ell_identities() {
        for m in [1, -1, 10, 2, -200, 12345] {
            assert!(verify_ell_identity(&big(m)), "m = {m}");
        }
    }

    #[test]
    fn ell_quotient_enters_with_positive_sign() {
        // the split only holds with +3·(x − m/3)·c(x)
        for m in [1, -1, 10] {
            assert!(!ell_identity_with_sign(&big(m), -1));
            assert!(ell_identity_with_sign(&big(m), 1));
        }
    }

    #[test]
    fn enumeration_for_m_equal_one() {
        let b = IntegralBasis::new(&big(1)).unwrap();
        assert!(enumerate_p_maximality(&b, 2));
        assert!(enumerate_p_maximality(&b, 3));
    }

    #[test]
    fn enumeration_agrees_with_brute_force_oracle() {
        // oracle: no trace prefilter, every candidate tested directly
        let b = IntegralBasis::new(&big(1)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let mut integral = 0;
        for mask in 1u32..64 {
            let mut acc = b.field().zero();
            for (i, e) in b.elements().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = &acc + e;
                }
            }
            if acc.scale(&half).is_algebraic_integer() {
                integral += 1;
            }
        }
        assert_eq!(integral, 0);
    }

    #[test]
    fn power_basis_is_not_two_maximal() {
        let k = SexticField::new(&big(1)).unwrap();
        let powers: [FieldElement; N] = array::from_fn(|i| k.alpha().pow(i as u32));
        let w = find_p_divisible(&powers, 2).expect("Z[α] is not 2-maximal");
        assert!(w.is_algebraic_integer());
        // the first witness in odometer order is (1 + α + α³)/2
        let expected = k
            .from_poly(&RatPoly::from_i64(&[1, 1, 0, 1]))
            .scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(w, expected);
    }

    #[test]
    fn certify_small_cases() {
        let r = certify_integral_basis(&big(1)).unwrap();
        assert!(r.certified, "{r:?}");
        assert_eq!(r.disc_computed, Some(big(371_293)));
        assert_eq!(r.residue, Some(1));
        let primes: Vec<_> = r.maximality_evidence.iter().map(|e| e.prime.clone()).collect();
        assert_eq!(primes, vec![Some(big(2)), Some(big(3)), Some(big(13)), None]);

        assert!(matches!(certify_integral_basis(&big(5)), Err(Error::Domain(_))));

        let r = certify_integral_basis(&big(6)).unwrap();
        assert!(!r.certified);
        assert_eq!(r.q, big(63));
        assert_eq!(r.q_squarefree, Squarefreeness::NotSquarefree);
        assert_eq!(r.reason.as_deref(), Some("q not squarefree"));
    }

    #[test]
    fn undecided_squarefreeness_is_an_error() {
        // q_1000 = 7 · 143287 and 143287 > 100², so bound 100 cannot finish
        let e = certify_with_bound(&big(1000), 100).unwrap_err();
        assert!(matches!(e, Error::Undecided(_)));
    }
}
