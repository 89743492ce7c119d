//! Exhaustive search for index-1 elements in a coordinate box.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::{CertifiedField, CoordVector};
use crate::error::{Error, Result};

/// Largest box, in candidate vectors, searched without an explicit override.
pub const DEFAULT_WORK_LIMIT: u128 = 50_000_000;

/// `(2·bound + 1)⁵`
pub fn box_size(bound: u64) -> u128 {
    (2 * bound as u128 + 1).pow(5)
}

/// All y with `max |yᵢ| ≤ bound` and index 1, one per ± pair (first nonzero
/// coordinate positive), sorted.
///
/// Candidates are rejected on `|F₁| = q`, then `|F₂| = q`, then
/// `N(β − σ³β) = −2^(2ℓ)·q`; survivors are confirmed with the determinant.
pub fn search_generators(k: &CertifiedField, bound: u64, work_limit: u128) -> Result<Vec<CoordVector>> {
    let size = box_size(bound);
    if size > work_limit || bound > i64::MAX as u64 / 2 {
        return Err(Error::WorkLimit { requested: size, limit: work_limit });
    }
    let b = bound as i64;
    let ev = k.evaluator();
    let q = k.q().clone();
    let n3_target = -(BigInt::from(1u32 << (2 * k.ell())) * &q);
    let q_small = q.to_i128();
    let n3_small = n3_target.to_i128();

    let matches = |idx: usize, y: &[i64; 5]| -> bool {
        let (target, exact) = if idx == 3 { (n3_small, false) } else { (q_small, true) };
        match (ev.norm_small(idx, y), target) {
            (Some(n), Some(t)) => {
                if exact {
                    n.abs() == t
                } else {
                    n == t
                }
            }
            _ => {
                let n = ev.norm(idx, &CoordVector::from_i64(*y));
                if exact {
                    n.magnitude() == q.magnitude()
                } else {
                    n == n3_target
                }
            }
        }
    };

    let prefixes: Vec<(i64, i64)> = (0..=b)
        .flat_map(|y2| {
            let lo = if y2 == 0 { 0 } else { -b };
            (lo..=b).map(move |y3| (y2, y3))
        })
        .collect();

    let mut found: Vec<CoordVector> = prefixes
        .into_par_iter()
        .map(|(y2, y3)| -> Result<Vec<CoordVector>> {
            let mut out = Vec::new();
            for y4 in -b..=b {
                for y5 in -b..=b {
                    for y6 in -b..=b {
                        let y = [y2, y3, y4, y5, y6];
                        let cv = CoordVector::from_i64(y);
                        if cv.is_zero() || !cv.is_canonical() {
                            continue;
                        }
                        if !(matches(1, &y) && matches(2, &y) && matches(3, &y)) {
                            continue;
                        }
                        let index = k.index_of(&cv)?;
                        if !index.is_one() {
                            return Err(Error::Inconsistency(format!(
                                "unit index-form factors but index {index} at y = {cv}"
                            )));
                        }
                        out.push(cv);
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    found.sort();
    Ok(found)
}
