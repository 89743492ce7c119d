//! Element indices and power integral bases of K_m.
//!
//! All queries go through a [`CertifiedField`], which only exists for
//! parameters whose template basis passed certification. An element is given
//! by its coordinates `(y₂, …, y₆)` in that basis; the coordinate of `b₁ = 1`
//! never affects the index and is not part of the interface.

pub mod factors;
pub mod obstruction;
pub mod scan;
pub mod search;
pub mod tables;

use std::array;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::int::{as_integer, DEFAULT_TRIAL_BOUND};
use crate::arith::matrix::{IntMatrix6, RatMatrix6, N};
use crate::basis::{certify_with_bound, CertificationReport, IntegralBasis};
use crate::decimal;
use crate::error::{Error, Result};
use crate::field::FieldElement;

pub use factors::{FactorEvaluator, IndexFactorization};
pub use obstruction::{obstruction_check, verdict_for_q, ObstructionReport, Verdict, DEFAULT_SAMPLES, DEFAULT_SEED};
pub use scan::{scan_one, scan_range, ScanConfig, ScanRecord};
pub use search::{box_size, search_generators, DEFAULT_WORK_LIMIT};
pub use tables::{
    table_for, verify_generator_table, verify_vectors, TableEntry, TableReport, GENERATORS_M1, GENERATORS_M_MINUS_1,
};

/// Coordinates `(y₂, …, y₆)` in the integral basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoordVector(#[serde(with = "decimal::vec5")] pub [BigInt; 5]);

impl CoordVector {
    pub fn from_i64(v: [i64; 5]) -> Self {
        Self(v.map(BigInt::from))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn negate(&self) -> Self {
        Self(array::from_fn(|i| -self.0[i].clone()))
    }

    /// Representative up to sign with the first nonzero coordinate positive.
    pub fn canonical(&self) -> Self {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.negate(),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        !self.0.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative())
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap()
    }

    /// Full six-coordinate vector with `y₁ = 0`.
    pub fn with_y1(&self, y1: BigInt) -> [BigInt; N] {
        let mut out: [BigInt; N] = array::from_fn(|_| BigInt::zero());
        out[0] = y1;
        out[1..].clone_from_slice(&self.0);
        out
    }

    pub fn to_csv(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for CoordVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<BigInt> = s
            .split(',')
            .map(|p| p.trim().parse::<BigInt>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Domain(format!("bad coordinate in {s:?}: {e}")))?;
        let arr: [BigInt; 5] = parts
            .try_into()
            .map_err(|v: Vec<BigInt>| Error::Domain(format!("expected 5 coordinates (y2..y6), got {}", v.len())))?;
        Ok(Self(arr))
    }
}

impl fmt::Display for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Debug for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A parameter m together with its certified integral basis.
pub struct CertifiedField {
    report: CertificationReport,
    basis: IntegralBasis,
    factors: FactorEvaluator,
    /// σ acting on integral-basis row vectors.
    sigma: IntMatrix6,
}

impl CertifiedField {
    pub fn new(m: &BigInt) -> Result<Self> {
        Self::with_bound(m, DEFAULT_TRIAL_BOUND)
    }

    /// Certifies m; refuses with [`Error::Refused`] when certification fails.
    pub fn with_bound(m: &BigInt, trial_bound: u64) -> Result<Self> {
        let (report, basis) = certify_with_bound(m, trial_bound)?;
        if !report.certified {
            return Err(Error::Refused(format!(
                "m = {m} is not certified: {}",
                report.reason.as_deref().unwrap_or("unknown reason")
            )));
        }
        let basis = basis.expect("certified report carries a basis");
        let factors = FactorEvaluator::new(&basis)?;
        let sigma = to_basis_map(&basis, basis.field().sigma_matrix())?;
        Ok(Self { report, basis, factors, sigma })
    }

    pub fn m(&self) -> &BigInt {
        self.basis.field().m()
    }

    pub fn q(&self) -> &BigInt {
        self.basis.field().q()
    }

    pub fn ell(&self) -> u32 {
        self.basis.ell()
    }

    pub fn report(&self) -> &CertificationReport {
        &self.report
    }

    pub fn basis(&self) -> &IntegralBasis {
        &self.basis
    }

    pub fn evaluator(&self) -> &FactorEvaluator {
        &self.factors
    }

    /// `β = y₂·b₂ + … + y₆·b₆`
    pub fn element(&self, y: &CoordVector) -> FieldElement {
        self.basis.element_from_coords(&y.with_y1(BigInt::zero()))
    }

    /// Index `(Z_K : Z[β])`, 0 when β does not generate K.
    pub fn index_of(&self, y: &CoordVector) -> Result<BigInt> {
        self.index_of_element(&self.element(y))
    }

    /// `|det|` of the integral-basis coordinates of `1, β, …, β⁵`.
    pub fn index_of_element(&self, beta: &FieldElement) -> Result<BigInt> {
        let mut rows: [[BigRational; N]; N] = array::from_fn(|_| array::from_fn(|_| BigRational::zero()));
        let mut pw = beta.field().one();
        for row in rows.iter_mut() {
            *row = self.basis.coords_of(&pw);
            pw = &pw * beta;
        }
        let d = RatMatrix6::from_rows(rows).det();
        as_integer(&d.abs()).ok_or_else(|| {
            Error::Inconsistency(format!("non-integral index {d} for m = {}", self.m()))
        })
    }

    /// Coordinates of σ(β), with the `b₁` component dropped.
    pub fn sigma_coords(&self, y: &CoordVector) -> CoordVector {
        let full = self.sigma.mul_vec(&y.with_y1(BigInt::zero()));
        CoordVector(array::from_fn(|i| full[i + 1].clone()))
    }
}

/// Conjugates a power-basis linear map into the integral basis; the result
/// must be integral for maps that preserve Z_K.
pub(crate) fn to_basis_map(basis: &IntegralBasis, map: &RatMatrix6) -> Result<IntMatrix6> {
    let conj = &(basis.matrix() * map) * basis.inverse_matrix();
    conj.to_int().ok_or_else(|| {
        Error::Inconsistency(format!(
            "map does not preserve the lattice of m = {}",
            basis.field().m()
        ))
    })
}
