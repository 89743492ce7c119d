//! Resultants and discriminants over Z by the subresultant PRS.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::poly::IntPoly;
use crate::error::{Error, Result};

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// `Res(a, b)`, the determinant of the Sylvester matrix.
///
/// All intermediate divisions are exact, so coefficients stay bounded by
/// subresultant determinants.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign_flip = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        sign_flip = (a.degree().unwrap() * b.degree().unwrap()) % 2 == 1;
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        let r = pow(b.leading().unwrap(), da);
        return Ok(if sign_flip { -r } else { r });
    }

    let ca = a.content();
    let cb = b.content();
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    let t = pow(&ca, db) * pow(&cb, da);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = if sign_flip { -BigInt::one() } else { BigInt::one() };

    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        b = r.div_exact(&(&g * pow(&h, delta)));
        g = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta-1)
        if delta > 0 {
            h = pow(&g, delta) / pow(&h, delta - 1);
        }
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lb = b.leading().unwrap();
    let h = pow(lb, da) / pow(&h, da - 1);
    Ok(s * t * h)
}

/// `(-1)^(n(n-1)/2) · Res(a, a')` for a monic `a` of degree `n >= 2`.
pub fn discriminant(a: &IntPoly) -> Result<BigInt> {
    let n = a.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::Domain("discriminant needs degree at least 2".into()));
    }
    if !a.is_monic() {
        return Err(Error::Domain("discriminant is only defined here for monic input".into()));
    }
    let r = resultant(a, &a.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::matrix::int_det;
    use proptest::prelude::*;

    /// Sylvester-matrix determinant, the independent oracle.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                rows[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                rows[n + i][i + j] = c.clone();
            }
        }
        int_det(rows)
    }

    fn f_m(m: i64) -> IntPoly {
        IntPoly::from_i64(&[1, 2 * m + 6, 5 * m, -20, -(5 * m + 15), -2 * m, 1])
    }

    #[test]
    fn small_resultants() {
        let r = resultant(&IntPoly::from_i64(&[-2, 1]), &IntPoly::from_i64(&[-3, 1])).unwrap();
        assert_eq!(r, BigInt::from(-1));
        let r = resultant(&IntPoly::from_i64(&[1, 0, 1]), &IntPoly::from_i64(&[0, 1])).unwrap();
        assert_eq!(r, BigInt::one());
        assert!(resultant(&IntPoly::zero(), &IntPoly::from_i64(&[1, 1])).is_err());
    }

    #[test]
    fn common_root_gives_zero() {
        let a = IntPoly::from_i64(&[-1, 0, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), BigInt::zero());
    }

    #[test]
    fn quadratic_discriminant() {
        assert_eq!(discriminant(&IntPoly::from_i64(&[-2, 0, 1])).unwrap(), BigInt::from(8));
        assert!(discriminant(&IntPoly::from_i64(&[1, 2])).is_err());
        assert!(discriminant(&IntPoly::from_i64(&[1, 0, 2])).is_err());
    }

    #[test]
    fn sextic_discriminants() {
        let six6 = BigInt::from(46656);
        assert_eq!(discriminant(&f_m(1)).unwrap(), &six6 * BigInt::from(13).pow(5));
        // oracle: Sylvester determinant of (f_2, f_2'), with the sign for n = 6
        let f2 = f_m(2);
        let oracle = -sylvester_resultant(&f2, &f2.derivative());
        assert_eq!(oracle, &six6 * BigInt::from(19).pow(5));
        assert_eq!(discriminant(&f2).unwrap(), oracle);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..10, 1..6).prop_map(|c| IntPoly::from_i64(&c)).prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn agrees_with_sylvester(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b));
        }

        #[test]
        fn antisymmetry(a in small_poly(), b in small_poly()) {
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            let ab = resultant(&a, &b).unwrap();
            let ba = resultant(&b, &a).unwrap();
            prop_assert_eq!(ab, if (da * db) % 2 == 1 { -ba } else { ba });
        }
    }
}
