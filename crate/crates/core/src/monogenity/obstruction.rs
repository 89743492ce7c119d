//! The congruence obstruction to monogenity.
//!
//! A generator of a power integral basis has `G₁, G₂, G₃ = ±1`. Since
//! `27·G₁ + G₂ ≡ 0 (mod q)` identically, such a generator forces
//! `q | ±27 ± 1`, i.e. q divides 26 or 28. The congruence is checked here at
//! sample points; it is not proved symbolically.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CertifiedField, CoordVector};
use crate::decimal;
use crate::error::{Error, Result};

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 0x5e71c;
pub const SAMPLE_RANGE: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// q divides neither 26 nor 28, so no element has index 1.
    NonMonogenic,
    /// The obstruction does not apply; only q ∈ {7, 13}.
    MonogenicPossible,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NonMonogenic => "non-monogenic",
            Verdict::MonogenicPossible => "monogenic-possible",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NonMonogenic => "NON-MONOGENIC",
            Verdict::MonogenicPossible => "OBSTRUCTION-INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    #[serde(with = "decimal")]
    pub m: BigInt,
    #[serde(with = "decimal")]
    pub q: BigInt,
    pub random_points: usize,
    pub cube_points: usize,
    pub seed: u64,
    pub verdict: Verdict,
}

/// Verdict from q alone, assuming the congruence.
pub fn verdict_for_q(q: &BigInt) -> Verdict {
    if BigInt::from(26).is_multiple_of(q) || BigInt::from(28).is_multiple_of(q) {
        Verdict::MonogenicPossible
    } else {
        Verdict::NonMonogenic
    }
}

/// Checks `27·G₁ + G₂ ≡ 0 (mod q)` at `samples` random vectors with
/// coordinates in `[−10⁶, 10⁶]` and at every nonzero vector of `{−1,0,1}⁵`,
/// then reads the verdict off q. A failing point is an inconsistency.
pub fn obstruction_check(k: &CertifiedField, samples: usize, seed: u64) -> Result<ObstructionReport> {
    let check = |y: &CoordVector| -> Result<()> {
        let f = k.index_form_factors(y)?;
        if f.congruence_holds() {
            Ok(())
        } else {
            Err(Error::Inconsistency(format!(
                "27*G1 + G2 = {} mod {} at y = {y} for m = {}",
                f.congruence_residue(),
                k.q(),
                k.m()
            )))
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_points = 0;
    while random_points < samples {
        let y = CoordVector::from_i64(std::array::from_fn(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)));
        if y.is_zero() {
            continue;
        }
        check(&y)?;
        random_points += 1;
    }

    let mut cube_points = 0;
    for code in 0..243u32 {
        let mut c = code;
        let y = CoordVector::from_i64(std::array::from_fn(|_| {
            let d = (c % 3) as i64 - 1;
            c /= 3;
            d
        }));
        if y.0.iter().all(Zero::is_zero) {
            continue;
        }
        check(&y)?;
        cube_points += 1;
    }

    Ok(ObstructionReport {
        m: k.m().clone(),
        q: k.q().clone(),
        random_points,
        cube_points,
        seed,
        verdict: verdict_for_q(k.q()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: i64, samples: usize) -> ObstructionReport {
        let k = CertifiedField::new(&BigInt::from(m)).unwrap();
        obstruction_check(&k, samples, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn verdicts() {
        assert_eq!(check(2, 10).verdict, Verdict::NonMonogenic);
        assert_eq!(check(1, 10).verdict, Verdict::MonogenicPossible);
        assert_eq!(check(-1, 10).verdict, Verdict::MonogenicPossible);
        assert_eq!(check(-4, 10).verdict, Verdict::MonogenicPossible);
    }

    #[test]
    fn cube_is_complete() {
        let r = check(7, 0);
        assert_eq!(r.cube_points, 242);
        assert_eq!(r.random_points, 0);
    }

    #[test]
    fn verdict_from_q() {
        assert_eq!(verdict_for_q(&7.into()), Verdict::MonogenicPossible);
        assert_eq!(verdict_for_q(&13.into()), Verdict::MonogenicPossible);
        assert_eq!(verdict_for_q(&19.into()), Verdict::NonMonogenic);
        assert_eq!(verdict_for_q(&31.into()), Verdict::NonMonogenic);
    }

    #[test]
    fn verdict_serialization() {
        assert_eq!(serde_json::to_string(&Verdict::NonMonogenic).unwrap(), "\"non-monogenic\"");
        assert_eq!(serde_json::to_string(&Verdict::MonogenicPossible).unwrap(), "\"monogenic-possible\"");
        assert_eq!(Verdict::MonogenicPossible.to_string(), "OBSTRUCTION-INCONCLUSIVE");
    }
}
