//! The three factors of the index form.
//!
//! For β with integral-basis coordinates y, `β − σᵏβ = Σ yᵢ·(bᵢ − σᵏbᵢ)`, so
//! the matrix of multiplication by it in the integral basis is the integer
//! combination `Σ yᵢ·Tₖ,ᵢ`. The norms `N(β − σᵏβ)` are then plain integer
//! determinants, which is what makes the box search affordable.

use std::array;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{to_basis_map, CertifiedField, CoordVector};
use crate::arith::int::{as_integer, exact_sqrt};
use crate::arith::matrix::{det_i128, IntMatrix6, N};
use crate::basis::IntegralBasis;
use crate::decimal;
use crate::error::{Error, Result};

type SmallMaps = Box<[[[[i64; N]; N]; 5]; 3]>;

/// Multiplication maps of `bᵢ − σᵏbᵢ` for k = 1, 2, 3 and i = 2..6.
pub struct FactorEvaluator {
    q: BigInt,
    ell: u32,
    maps: [[IntMatrix6; 5]; 3],
    small: Option<SmallMaps>,
}

impl FactorEvaluator {
    pub fn new(basis: &IntegralBasis) -> Result<Self> {
        let mut maps: [[IntMatrix6; 5]; 3] = array::from_fn(|_| array::from_fn(|_| IntMatrix6::zero()));
        for (k, row) in maps.iter_mut().enumerate() {
            for (i, t) in row.iter_mut().enumerate() {
                let b = &basis.elements()[i + 1];
                let d = b - &b.sigma_pow(k + 1);
                *t = to_basis_map(basis, &d.mult_matrix())?;
            }
        }
        let small = small_copy(&maps);
        Ok(Self { q: basis.field().q().clone(), ell: basis.ell(), maps, small })
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `N(β − σᵏβ)` for k ∈ {1, 2, 3}.
    pub fn norm(&self, k: usize, y: &CoordVector) -> BigInt {
        assert!((1..=3).contains(&k), "k must be 1, 2 or 3");
        if let Some(v) = small_coords(y) {
            if let Some(d) = self.norm_small(k, &v) {
                return BigInt::from(d);
            }
        }
        let mut a = IntMatrix6::zero();
        for (c, t) in y.0.iter().zip(&self.maps[k - 1]) {
            a.add_scaled(c, t);
        }
        a.det()
    }

    /// Machine-integer version of [`Self::norm`]; `None` on overflow.
    pub fn norm_small(&self, k: usize, y: &[i64; 5]) -> Option<i128> {
        let maps = &self.small.as_ref()?[k - 1];
        let mut a = [[0i128; N]; N];
        for (c, t) in y.iter().zip(maps) {
            if *c == 0 {
                continue;
            }
            let c = *c as i128;
            for (row, trow) in a.iter_mut().zip(t) {
                for (x, &v) in row.iter_mut().zip(trow) {
                    *x = x.checked_add(c.checked_mul(v as i128)?)?;
                }
            }
        }
        det_i128(a)
    }

    pub fn factorize(&self, y: &CoordVector) -> Result<IndexFactorization> {
        let [f1, f2, n3] = [1, 2, 3].map(|k| self.norm(k, y));
        IndexFactorization::from_norms(f1, f2, n3, self.q.clone(), self.ell)
    }
}

fn small_copy(maps: &[[IntMatrix6; 5]; 3]) -> Option<SmallMaps> {
    let mut out = Box::new([[[[0i64; N]; N]; 5]; 3]);
    for k in 0..3 {
        for i in 0..5 {
            for r in 0..N {
                for c in 0..N {
                    out[k][i][r][c] = maps[k][i].0[r][c].to_i64()?;
                }
            }
        }
    }
    Some(out)
}

fn small_coords(y: &CoordVector) -> Option<[i64; 5]> {
    let v: Vec<i64> = y.0.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    v.try_into().ok()
}

/// `F₁ = q·G₁`, `F₂ = q·G₂`, `N(β − σ³β) = −2^(2ℓ)·q·G₃²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexFactorization {
    #[serde(with = "decimal")]
    pub f1: BigInt,
    #[serde(with = "decimal")]
    pub f2: BigInt,
    #[serde(with = "decimal")]
    pub n3: BigInt,
    #[serde(rename = "G1", with = "decimal")]
    pub g1: BigInt,
    #[serde(rename = "G2", with = "decimal")]
    pub g2: BigInt,
    #[serde(rename = "absG3", with = "decimal")]
    pub abs_g3: BigInt,
    #[serde(with = "decimal")]
    pub qm: BigInt,
    pub ell: u32,
}

impl IndexFactorization {
    /// Splits the three norms, failing if any of the expected divisibilities
    /// does not hold.
    pub fn from_norms(f1: BigInt, f2: BigInt, n3: BigInt, qm: BigInt, ell: u32) -> Result<Self> {
        let divide = |f: &BigInt, name: &str| -> Result<BigInt> {
            let (g, r) = f.div_rem(&qm);
            if r.is_zero() {
                Ok(g)
            } else {
                Err(Error::Inconsistency(format!("{name} = {f} is not divisible by q = {qm}")))
            }
        };
        let g1 = divide(&f1, "F1")?;
        let g2 = divide(&f2, "F2")?;
        let c3 = BigInt::from(1u32 << (2 * ell)) * &qm;
        let (s, r) = (-&n3).div_rem(&c3);
        if !r.is_zero() || s.is_negative() {
            return Err(Error::Inconsistency(format!("N3 = {n3} is not -{c3} times a square")));
        }
        let abs_g3 = exact_sqrt(&s)
            .ok_or_else(|| Error::Inconsistency(format!("-N3/{c3} = {s} is not a perfect square")))?;
        Ok(Self { f1, f2, n3, g1, g2, abs_g3, qm, ell })
    }

    /// `|G₁·G₂·G₃|`
    pub fn index(&self) -> BigInt {
        (&self.g1 * &self.g2 * &self.abs_g3).abs()
    }

    /// `(27·G₁ + G₂) mod q`, in `0..q`.
    pub fn congruence_residue(&self) -> BigInt {
        (BigInt::from(27) * &self.g1 + &self.g2).mod_floor(&self.qm)
    }

    pub fn congruence_holds(&self) -> bool {
        self.congruence_residue().is_zero()
    }

    pub fn all_unit(&self) -> bool {
        self.g1.abs() == 1.into() && self.g2.abs() == 1.into() && self.abs_g3 == 1.into()
    }
}

impl CertifiedField {
    pub fn index_form_factors(&self, y: &CoordVector) -> Result<IndexFactorization> {
        if y.is_zero() {
            return Err(Error::Domain("index form factors need a nonzero coordinate vector".into()));
        }
        self.evaluator().factorize(y)
    }

    /// The three norms computed directly in the field, without the
    /// precomputed integer maps. Slow; used to cross-check the evaluator.
    pub fn norms_in_field(&self, y: &CoordVector) -> Result<[BigInt; 3]> {
        let beta = self.element(y);
        let mut out: [BigInt; 3] = array::from_fn(|_| BigInt::zero());
        for (k, slot) in out.iter_mut().enumerate() {
            let n = (&beta - &beta.sigma_pow(k + 1)).norm();
            *slot = as_integer(&n)
                .ok_or_else(|| Error::Inconsistency(format!("non-integral norm {n}")))?;
        }
        Ok(out)
    }
}
