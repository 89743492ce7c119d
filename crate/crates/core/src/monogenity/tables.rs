//! Known generators of power integral bases for m = 1 and m = −1, in
//! coordinates `(y₂, …, y₆)` of the template basis, up to sign.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{CertifiedField, CoordVector};
use crate::decimal;
use crate::error::{Error, Result};

pub const GENERATORS_M1: [[i64; 5]; 36] = [
    [0, 6, 4, 0, -1],
    [1, 1, -2, -2, 1],
    [2, -3, -3, -1, 1],
    [4, -2, -6, -3, 2],
    [6, -21, -30, -11, 10],
    [7, -10, -20, -9, 7],
    [7, -8, -15, -6, 5],
    [8, 1, -10, -7, 4],
    [8, 4, -10, -16, 7],
    [8, -3, -9, -4, 3],
    [8, -2, -11, -6, 4],
    [9, -5, -14, -7, 5],
    [9, -1, -15, -10, 6],
    [9, 3, -16, -13, 7],
    [9, 1, -10, -7, 4],
    [9, 5, -11, -10, 5],
    [13, -1, -17, -12, 7],
    [15, -5, -20, -10, 7],
    [16, -7, -25, -13, 9],
    [17, -4, -24, -14, 9],
    [24, -6, -35, -20, 13],
    [24, -12, -39, -20, 14],
    [24, -10, -34, -17, 12],
    [28, -102, -147, -54, 49],
    [32, -15, -48, -24, 17],
    [33, -5, -45, -27, 17],
    [41, -8, -54, -31, 20],
    [41, -14, -58, -31, 21],
    [49, -23, -71, -35, 25],
    [57, -9, -75, -44, 28],
    [59, -2, -86, -57, 34],
    [105, -54, -157, -76, 55],
    [146, -33, -198, -112, 73],
    [246, 13, -359, -250, 145],
    [517, -268, -774, -374, 271],
    [723, -155, -970, -551, 358],
];

pub const GENERATORS_M_MINUS_1: [[i64; 5]; 14] = [
    [0, 0, 2, 0, -1],
    [1, 13, 18, -4, -8],
    [1, 9, 22, -3, -10],
    [2, 6, 11, -2, -5],
    [2, 73, 119, -23, -53],
    [2, 9, 11, -3, -5],
    [3, 35, 56, -11, -25],
    [3, 3, 2, -1, -1],
    [3, 4, 4, -1, -2],
    [3, 11, 37, -4, -17],
    [5, 10, 11, -3, -5],
    [13, 23, 22, -7, -10],
    [27, 96, 112, -29, -50],
    [27, 39, 37, -12, -17],
];

pub const TABLE_M1_DATA: &str = include_str!("../../data/generators_m1.txt");
pub const TABLE_M_MINUS_1_DATA: &str = include_str!("../../data/generators_m-1.txt");

/// Parses one vector per line; blank lines and `#` comments are skipped.
pub fn parse_table(data: &str) -> Result<Vec<CoordVector>> {
    data.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// The shipped table for m, if there is one.
pub fn table_for(m: &BigInt) -> Result<Vec<CoordVector>> {
    let rows: &[[i64; 5]] = if *m == BigInt::from(1) {
        &GENERATORS_M1
    } else if *m == BigInt::from(-1) {
        &GENERATORS_M_MINUS_1
    } else {
        return Err(Error::Domain(format!("no generator table for m = {m}; tables exist for m = 1 and m = -1")));
    };
    Ok(rows.iter().map(|r| CoordVector::from_i64(*r)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub y: CoordVector,
    #[serde(with = "decimal")]
    pub index: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    #[serde(with = "decimal")]
    pub m: BigInt,
    pub checked: usize,
    pub passed: usize,
    /// Vectors whose index is not 1.
    pub failures: Vec<TableEntry>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty() && self.passed == self.checked
    }
}

pub fn verify_vectors(k: &CertifiedField, vectors: &[CoordVector]) -> Result<TableReport> {
    let mut failures = Vec::new();
    for y in vectors {
        let index = k.index_of(y)?;
        if index != BigInt::from(1) {
            failures.push(TableEntry { y: y.clone(), index });
        }
    }
    Ok(TableReport {
        m: k.m().clone(),
        checked: vectors.len(),
        passed: vectors.len() - failures.len(),
        failures,
    })
}

/// Checks that every shipped generator for m ∈ {1, −1} has index 1.
pub fn verify_generator_table(k: &CertifiedField) -> Result<TableReport> {
    let table = table_for(k.m())?;
    verify_vectors(k, &table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn static_tables_match_data_files() {
        assert_eq!(parse_table(TABLE_M1_DATA).unwrap(), table_for(&1.into()).unwrap());
        assert_eq!(parse_table(TABLE_M_MINUS_1_DATA).unwrap(), table_for(&(-1).into()).unwrap());
    }

    #[test]
    fn tables_are_canonical_and_distinct() {
        for m in [1, -1] {
            let t = table_for(&m.into()).unwrap();
            let mut seen = std::collections::HashSet::new();
            for y in &t {
                assert!(y.is_canonical(), "{y}");
                assert!(seen.insert(y.clone()), "duplicate {y}");
            }
        }
    }

    #[test]
    fn other_m_has_no_table() {
        assert!(matches!(table_for(&2.into()), Err(Error::Domain(_))));
    }

    #[test]
    fn perturbation_is_reported() {
        let k = CertifiedField::new(&1.into()).unwrap();
        let r = verify_vectors(&k, &[CoordVector::from_i64([0, 6, 4, 0, 1])]).unwrap();
        assert!(!r.all_pass());
        assert_eq!(r.failures.len(), 1);
        assert_ne!(r.failures[0].index, BigInt::from(1));
    }
}
