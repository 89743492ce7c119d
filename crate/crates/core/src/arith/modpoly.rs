//! Polynomials over the prime field F_p.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::int::mod_inverse;
use crate::arith::poly::IntPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct ModPoly {
    p: BigInt,
    coeffs: Vec<BigInt>,
}

impl ModPoly {
    /// Reduces every coefficient into `[0, p)`. `p` is assumed prime.
    pub fn new(p: &BigInt, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs: Vec<_> = coeffs.into_iter().map(|c| c.mod_floor(p)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { p: p.clone(), coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: &BigInt) -> Self {
        Self::new(p, f.coeffs().to_vec())
    }

    pub fn from_u64(p: u64, coeffs: &[u64]) -> Self {
        Self::new(&BigInt::from(p), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(p: &BigInt) -> Self {
        Self { p: p.clone(), coeffs: Vec::new() }
    }

    pub fn one(p: &BigInt) -> Self {
        Self::new(p, vec![BigInt::one()])
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Lift to Z with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.p, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.p, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.p);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(&self.p, out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = mod_inverse(l, &self.p).expect("modulus must be prime");
                Self::new(&self.p, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let inv = mod_inverse(b.coeffs.last().unwrap(), &self.p).expect("modulus must be prime");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(db)];
        while r.len() > db {
            let k = r.len() - 1;
            let t = (&r[k] * &inv).mod_floor(&self.p);
            if !t.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[k - db + j] = (&r[k - db + j] - &t * bc).mod_floor(&self.p);
                }
                q[k - db] = t;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) && r.len() > db {
                r.pop();
            }
        }
        (Self::new(&self.p, q), Self::new(&self.p, r))
    }

    /// Exact quotient; panics in debug builds if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem(b);
        debug_assert!(r.is_zero(), "inexact polynomial division mod p");
        q
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    ///
    /// `rad(f) = lcm(f / gcd(f, f'), rad(gcd(f, f')))`; a vanishing derivative
    /// means `f = g(x^p) = g(x)^p` over F_p, so `rad(f) = rad(g)`.
    pub fn radical(&self) -> Self {
        assert!(!self.is_zero(), "radical of the zero polynomial");
        let f = self.monic();
        if f.degree() == Some(0) {
            return f;
        }
        let df = f.derivative();
        if df.is_zero() {
            return f.pth_root().radical();
        }
        let g = f.gcd(&df);
        let w = f.div_exact(&g);
        if g.is_one() {
            return w;
        }
        let rg = g.radical();
        let common = w.gcd(&rg);
        w.mul(&rg).div_exact(&common).monic()
    }

    /// For `f = g(x^p)`, returns `g` (coefficients are fixed by Frobenius).
    fn pth_root(&self) -> Self {
        let p = self.p.to_usize().expect("p-th root needs a machine-size prime");
        Self::new(&self.p, self.coeffs.iter().step_by(p).cloned().collect())
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod {}", self.lift(), self.p)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
