//! Per-parameter sweeps: certify, then apply the obstruction.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::obstruction::{obstruction_check, Verdict, DEFAULT_SAMPLES, DEFAULT_SEED};
use super::CertifiedField;
use crate::arith::int::DEFAULT_TRIAL_BOUND;
use crate::basis::residue_of;
use crate::decimal;
use crate::error::{Error, Result};
use crate::field::{is_excluded, qm_of};

pub const SKIP_EXCLUDED: &str = "excluded parameter";
pub const SKIP_NOT_SQUAREFREE: &str = "q not squarefree";
pub const SKIP_UNDECIDED: &str = "undecided";

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub trial_bound: u64,
    pub samples: usize,
    pub seed: u64,
    /// Maximum number of parameters in one scan.
    pub max_span: u128,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { trial_bound: DEFAULT_TRIAL_BOUND, samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED, max_span: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(with = "decimal")]
    pub m: BigInt,
    #[serde(with = "decimal")]
    pub q: BigInt,
    pub r: u32,
    #[serde(with = "decimal::option")]
    pub disc: Option<BigInt>,
    pub certified: bool,
    pub verdict: Option<Verdict>,
    pub skipped_reason: Option<String>,
}

impl ScanRecord {
    fn skipped(m: &BigInt, reason: impl Into<String>) -> Self {
        Self {
            m: m.clone(),
            q: qm_of(m),
            r: residue_of(m),
            disc: None,
            certified: false,
            verdict: None,
            skipped_reason: Some(reason.into()),
        }
    }
}

/// Never fails: every outcome, including internal inconsistencies, lands in
/// the record.
pub fn scan_one(m: &BigInt, cfg: &ScanConfig) -> ScanRecord {
    if is_excluded(m) {
        return ScanRecord::skipped(m, SKIP_EXCLUDED);
    }
    let k = match CertifiedField::with_bound(m, cfg.trial_bound) {
        Ok(k) => k,
        Err(Error::Undecided(_)) => return ScanRecord::skipped(m, SKIP_UNDECIDED),
        Err(Error::Refused(reason)) => {
            let reason = if reason.contains(SKIP_NOT_SQUAREFREE) { SKIP_NOT_SQUAREFREE.to_string() } else { reason };
            return ScanRecord::skipped(m, reason);
        }
        Err(e) => return ScanRecord::skipped(m, e.to_string()),
    };
    let mut rec = ScanRecord {
        m: m.clone(),
        q: k.q().clone(),
        r: residue_of(m),
        disc: k.report().disc_computed.clone(),
        certified: true,
        verdict: None,
        skipped_reason: None,
    };
    match obstruction_check(&k, cfg.samples, cfg.seed) {
        Ok(o) => rec.verdict = Some(o.verdict),
        Err(e) => rec.skipped_reason = Some(e.to_string()),
    }
    rec
}

/// Scans `from..=to` in parallel; records come back in ascending m.
pub fn scan_range(from: &BigInt, to: &BigInt, cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    if from > to {
        return Err(Error::Domain(format!("empty range: {from} > {to}")));
    }
    let span = (to - from + 1u32).to_u128().unwrap_or(u128::MAX);
    if span > cfg.max_span {
        return Err(Error::WorkLimit { requested: span, limit: cfg.max_span });
    }
    let records = (0..span as u64)
        .into_par_iter()
        .map(|i| scan_one(&(from + i), cfg))
        .collect();
    Ok(records)
}
