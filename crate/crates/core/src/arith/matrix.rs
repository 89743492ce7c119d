//! Exact 6×6 matrices over Q and Z.
//!
//! Vectors are rows and a matrix acts on the right (`v ↦ v·M`), so row `i`
//! of a multiplication matrix holds the coordinates of `a·e_i`.

use std::array;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::int::{as_integer, rat};
use crate::arith::poly::RatPoly;

pub const N: usize = 6;

/// Fraction-free Gaussian elimination (Bareiss) on a square integer matrix.
pub fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Bareiss in `i128` with overflow detection. `None` on overflow.
pub fn det_i128(mut a: [[i128; N]; N]) -> Option<i128> {
    let mut sign = false;
    let mut prev: i128 = 1;
    for k in 0..N - 1 {
        if a[k][k] == 0 {
            match (k + 1..N).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..N {
            for j in k + 1..N {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Some(if sign { -a[N - 1][N - 1] } else { a[N - 1][N - 1] })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix6(pub [[BigInt; N]; N]);

impl IntMatrix6 {
    pub fn zero() -> Self {
        Self(array::from_fn(|_| array::from_fn(|_| BigInt::zero())))
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        Self(array::from_fn(|i| array::from_fn(|j| f(i, j))))
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &BigInt, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (row, orow) in self.0.iter_mut().zip(&other.0) {
            for (x, y) in row.iter_mut().zip(orow) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
    }

    pub fn det(&self) -> BigInt {
        let small: Option<[[i128; N]; N]> = (|| {
            let mut out = [[0i128; N]; N];
            for (i, row) in self.0.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    out[i][j] = x.to_i128()?;
                }
            }
            Some(out)
        })();
        if let Some(d) = small.and_then(det_i128) {
            return BigInt::from(d);
        }
        int_det(self.0.iter().map(|r| r.to_vec()).collect())
    }

    pub fn to_rat(&self) -> RatMatrix6 {
        RatMatrix6::from_fn(|i, j| BigRational::from_integer(self.0[i][j].clone()))
    }

    pub fn mul_vec(&self, v: &[BigInt; N]) -> [BigInt; N] {
        array::from_fn(|j| {
            (0..N).fold(BigInt::zero(), |acc, i| acc + &v[i] * &self.0[i][j])
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix6(pub [[BigRational; N]; N]);

impl RatMatrix6 {
    pub fn zero() -> Self {
        Self::from_fn(|_, _| BigRational::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        Self(array::from_fn(|i| array::from_fn(|j| f(i, j))))
    }

    pub fn from_rows(rows: [[BigRational; N]; N]) -> Self {
        Self(rows)
    }

    pub fn row(&self, i: usize) -> &[BigRational; N] {
        &self.0[i]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] * c)
    }

    pub fn trace(&self) -> BigRational {
        (0..N).fold(BigRational::zero(), |acc, i| acc + &self.0[i][i])
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[BigRational; N]) -> [BigRational; N] {
        array::from_fn(|j| {
            (0..N).fold(BigRational::zero(), |acc, i| {
                if v[i].is_zero() {
                    acc
                } else {
                    acc + &v[i] * &self.0[i][j]
                }
            })
        })
    }

    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix6> {
        let mut out = IntMatrix6::zero();
        for i in 0..N {
            for j in 0..N {
                out.0[i][j] = as_integer(&self.0[i][j])?;
            }
        }
        Some(out)
    }

    /// Determinant by clearing each row's denominators and running Bareiss.
    pub fn det(&self) -> BigRational {
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = self
            .0
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                scale *= &l;
                row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        BigRational::new(int_det(rows), scale)
    }

    /// Gauss–Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.0.clone();
        let mut inv = Self::identity().0;
        for col in 0..N {
            let piv = (col..N).find(|&r| !a[r][col].is_zero())?;
            a.swap(piv, col);
            inv.swap(piv, col);
            let p = a[col][col].recip();
            for j in 0..N {
                a[col][j] *= &p;
                inv[col][j] *= &p;
            }
            for r in 0..N {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..N {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
        Some(Self(inv))
    }

    /// `det(t·I − M)`: exact determinants at `t = 0..=6`, then interpolation.
    pub fn charpoly(&self) -> RatPoly {
        let points: Vec<_> = (0..=N as i64)
            .map(|t| {
                let tr = rat(t);
                let shifted = Self::from_fn(|i, j| {
                    let neg = -self.0[i][j].clone();
                    if i == j {
                        neg + &tr
                    } else {
                        neg
                    }
                });
                (tr, shifted.det())
            })
            .collect();
        RatPoly::interpolate(&points)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..N).all(|i| (i + 1..N).all(|j| self.0[i][j].is_zero()))
    }

    pub fn max_abs_entry(&self) -> BigRational {
        self.0
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl Mul for &RatMatrix6 {
    type Output = RatMatrix6;
    fn mul(self, rhs: &RatMatrix6) -> RatMatrix6 {
        RatMatrix6::from_fn(|i, j| {
            (0..N).fold(BigRational::zero(), |acc, k| {
                if self.0[i][k].is_zero() {
                    acc
                } else {
                    acc + &self.0[i][k] * &rhs.0[k][j]
                }
            })
        })
    }
}

impl Add for &RatMatrix6 {
    type Output = RatMatrix6;
    fn add(self, rhs: &RatMatrix6) -> RatMatrix6 {
        RatMatrix6::from_fn(|i, j| &self.0[i][j] + &rhs.0[i][j])
    }
}

impl Sub for &RatMatrix6 {
    type Output = RatMatrix6;
    fn sub(self, rhs: &RatMatrix6) -> RatMatrix6 {
        RatMatrix6::from_fn(|i, j| &self.0[i][j] - &rhs.0[i][j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion over Q, the oracle for the elimination paths.
    fn laplace(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<_>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * laplace(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn rat_matrix() -> impl Strategy<Value = RatMatrix6> {
        prop::collection::vec((-20i64..20, 1i64..5), 36).prop_map(|v| {
            RatMatrix6::from_fn(|i, j| {
                let (n, d) = v[i * N + j];
                BigRational::new(BigInt::from(n), BigInt::from(d))
            })
        })
    }

    #[test]
    fn charpoly_of_trivial_matrices() {
        assert_eq!(RatMatrix6::zero().charpoly(), RatPoly::from_i64(&[0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(
            RatMatrix6::identity().charpoly(),
            RatPoly::from_i64(&[-1, 1]).pow(6)
        );
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let mut m = RatMatrix6::identity();
        m.0[3][3] = BigRational::zero();
        assert!(m.inverse().is_none());
        assert!(m.det().is_zero());
    }

    #[test]
    fn i128_overflow_falls_back() {
        let big = BigInt::from(10).pow(30);
        let m = IntMatrix6::from_fn(|i, j| if i == j { big.clone() } else { BigInt::zero() });
        assert_eq!(m.det(), big.pow(6));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn det_matches_cofactor_expansion(m in rat_matrix()) {
            let rows: Vec<Vec<_>> = m.0.iter().map(|r| r.to_vec()).collect();
            prop_assert_eq!(m.det(), laplace(&rows));
        }

        #[test]
        fn charpoly_at_zero_is_det(m in rat_matrix()) {
            let cp = m.charpoly();
            prop_assert!(cp.is_monic());
            prop_assert_eq!(cp.degree(), Some(6));
            prop_assert_eq!(cp.coeff(0), m.det());
            prop_assert_eq!(-cp.coeff(5), m.trace());
        }

        #[test]
        fn inverse_roundtrip(m in rat_matrix()) {
            if let Some(inv) = m.inverse() {
                prop_assert_eq!(&m * &inv, RatMatrix6::identity());
            } else {
                prop_assert!(m.det().is_zero());
            }
        }

        #[test]
        fn int_det_fast_and_slow_agree(v in prop::collection::vec(-1000i64..1000, 36)) {
            let m = IntMatrix6::from_fn(|i, j| BigInt::from(v[i * N + j]));
            let slow = int_det(m.0.iter().map(|r| r.to_vec()).collect());
            prop_assert_eq!(m.det(), slow);
        }
    }
}
