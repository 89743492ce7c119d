//! The periodic integral-basis templates.
//!
//! For m ≡ r (mod 36) with q_m squarefree the ring of integers of K_m has the
//! basis `1, x, x², b₄, b₅, b₆` evaluated at x = α_m, where b₄..b₆ depend only
//! on r. Residues divisible by 3 never occur (9 | q_m there). The discriminant
//! is `2^(2ℓ)·q_m⁵` with ℓ = 0 for the {2, 6, 18} denominator shape and ℓ = 3
//! for the {3, 9} shape.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::poly::IntPoly;
use crate::error::{Error, Result};
use crate::field::is_excluded;

#[derive(Debug, PartialEq, Eq)]
pub struct BasisTemplate {
    /// Residues r in 1..=36 using this template.
    pub residues: &'static [u32],
    /// Numerators of b₄, b₅, b₆ as ascending coefficient lists.
    pub tail: [&'static [i64]; 3],
    /// Denominators of b₄, b₅, b₆.
    pub tail_denominators: [u32; 3],
    /// D_K = 2^(2ℓ)·q_m⁵
    pub ell: u32,
}

impl BasisTemplate {
    /// Ascending numerator coefficients of all six basis elements.
    pub fn numerator(&self, i: usize) -> IntPoly {
        match i {
            0..=2 => IntPoly::monomial(BigInt::from(1), i),
            3..=5 => IntPoly::from_i64(self.tail[i - 3]),
            _ => panic!("basis index {i} out of range"),
        }
    }

    pub fn denominator(&self, i: usize) -> u32 {
        match i {
            0..=2 => 1,
            3..=5 => self.tail_denominators[i - 3],
            _ => panic!("basis index {i} out of range"),
        }
    }

    pub fn denominators(&self) -> [u32; 6] {
        std::array::from_fn(|i| self.denominator(i))
    }

    /// `[Z_K : Z[α]] = d₄·d₅·d₆`
    pub fn index_over_equation_order(&self) -> u32 {
        self.tail_denominators.iter().product()
    }

    /// The representative residue (smallest r of the class).
    pub fn label(&self) -> u32 {
        self.residues[0]
    }
}

const X3: &[i64] = &[0, 0, 0, 1];

pub static TEMPLATES: [BasisTemplate; 19] = [
    BasisTemplate { residues: &[1], tail: [&[1, 1, 0, 1], &[4, 1, 3, 0, 1], &[11, 3, 13, 6, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[2], tail: [X3, &[1, 0, 0, 1, 1], &[2, 7, 6, 2, 0, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[4], tail: [&[1, 0, 1, 1], &[1, 1, 3, 0, 1], &[8, 3, 1, 3, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[5], tail: [&[1, 1, 0, 1], &[1, 0, 3, 1, 1], &[8, 10, 3, 5, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[7, 34], tail: [X3, &[1, 1, 0, 0, 1], &[5, 3, 7, 0, 2, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[8], tail: [&[1, 0, 1, 1], &[4, 3, 0, 1, 1], &[5, 13, 0, 8, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[10, 19], tail: [X3, &[1, 1, 0, 0, 1], &[2, 3, 4, 6, 2, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[11], tail: [X3, &[1, 0, 0, 1, 1], &[2, 7, 6, 2, 0, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[13], tail: [&[1, 1, 0, 1], &[4, 1, 3, 0, 1], &[8, 12, 1, 3, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[14, 23], tail: [X3, &[1, 0, 0, 1, 1], &[8, 1, 3, 5, 0, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[16], tail: [&[1, 0, 1, 1], &[1, 1, 3, 0, 1], &[5, 3, 16, 0, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[17], tail: [&[1, 1, 0, 1], &[1, 0, 3, 1, 1], &[5, 13, 9, 8, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[20], tail: [&[1, 0, 1, 1], &[4, 3, 0, 1, 1], &[11, 7, 6, 2, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[22, 31], tail: [X3, &[1, 1, 0, 0, 1], &[8, 3, 1, 3, 2, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[25], tail: [&[1, 1, 0, 1], &[4, 1, 3, 0, 1], &[5, 3, 7, 0, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[26, 35], tail: [X3, &[1, 0, 0, 1, 1], &[5, 4, 0, 8, 0, 1]], tail_denominators: [1, 3, 9], ell: 3 },
    BasisTemplate { residues: &[28], tail: [&[1, 0, 1, 1], &[1, 1, 3, 0, 1], &[11, 3, 4, 6, 2, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[29], tail: [&[1, 1, 0, 1], &[1, 0, 3, 1, 1], &[11, 7, 15, 2, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
    BasisTemplate { residues: &[32], tail: [&[1, 0, 1, 1], &[4, 3, 0, 1, 1], &[8, 1, 3, 5, 0, 1]], tail_denominators: [2, 6, 18], ell: 0 },
];

/// Representative of m mod 36 in 1..=36 (so m = −1 maps to 35).
pub fn residue_of(m: &BigInt) -> u32 {
    let r: BigInt = (m - BigInt::from(1)).mod_floor(&BigInt::from(36)) + 1;
    u32::try_from(r).expect("residue fits")
}

pub fn template_for_residue(r: u32) -> Option<&'static BasisTemplate> {
    TEMPLATES.iter().find(|t| t.residues.contains(&r))
}

pub fn template_for(m: &BigInt) -> Result<&'static BasisTemplate> {
    if is_excluded(m) {
        return Err(Error::Domain(format!("excluded parameter m = {m}")));
    }
    let r = residue_of(m);
    if r.is_multiple_of(3) {
        return Err(Error::Domain(format!(
            "m = {m} ≡ {r} (mod 36) is divisible by 3, so q_m is not squarefree"
        )));
    }
    template_for_residue(r).ok_or_else(|| Error::Inconsistency(format!("no template for residue {r}")))
}

/// One template as read from the line-oriented data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateRecord {
    pub residues: Vec<u32>,
    pub ell: u32,
    /// Six numerators, each padded to six ascending coefficients.
    pub numerators: Vec<[i64; 6]>,
    pub denominators: Vec<u32>,
}

impl From<&BasisTemplate> for TemplateRecord {
    fn from(t: &BasisTemplate) -> Self {
        let numerators = (0..6)
            .map(|i| {
                let p = t.numerator(i);
                std::array::from_fn(|k| i64::try_from(p.coeff(k)).expect("small coefficient"))
            })
            .collect();
        Self {
            residues: t.residues.to_vec(),
            ell: t.ell,
            numerators,
            denominators: t.denominators().to_vec(),
        }
    }
}

/// The template table shipped with the crate.
pub const TEMPLATE_DATA: &str = include_str!("../../data/templates.txt");

/// Parses the template data format:
///
/// ```text
/// <residues, comma separated> | <ell> | <c0 c1 c2 c3 c4 c5> / <d> | ... (six elements)
/// ```
///
/// Blank lines and `#` comments are ignored.
pub fn parse_template_data(text: &str) -> Result<Vec<TemplateRecord>> {
    let bad = |line: usize, what: &str| Error::Domain(format!("template data line {line}: {what}"));
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(bad(no + 1, "expected 8 '|'-separated fields"));
        }
        let residues = fields[0]
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad(no + 1, "bad residue list"))?;
        let ell = fields[1].parse().map_err(|_| bad(no + 1, "bad ell"))?;
        let mut numerators = Vec::with_capacity(6);
        let mut denominators = Vec::with_capacity(6);
        for elem in &fields[2..] {
            let (num, den) = elem.split_once('/').ok_or_else(|| bad(no + 1, "missing '/'"))?;
            let coeffs = num
                .split_whitespace()
                .map(str::parse::<i64>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad(no + 1, "bad coefficient"))?;
            let coeffs: [i64; 6] = coeffs.try_into().map_err(|_| bad(no + 1, "need six coefficients"))?;
            numerators.push(coeffs);
            denominators.push(den.trim().parse().map_err(|_| bad(no + 1, "bad denominator"))?);
        }
        out.push(TemplateRecord { residues, ell, numerators, denominators });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn table_matches_shipped_data_file() {
        let parsed = parse_template_data(TEMPLATE_DATA).unwrap();
        let embedded: Vec<TemplateRecord> = TEMPLATES.iter().map(TemplateRecord::from).collect();
        assert_eq!(parsed.len(), embedded.len());
        for (a, b) in parsed.iter().zip(&embedded) {
            assert_eq!(a, b, "mismatch for residues {:?}", b.residues);
        }
    }

    #[test]
    fn residues_cover_exactly_the_non_multiples_of_three() {
        let covered: Vec<u32> = TEMPLATES.iter().flat_map(|t| t.residues.iter().copied()).collect();
        let set: BTreeSet<u32> = covered.iter().copied().collect();
        assert_eq!(covered.len(), 24);
        assert_eq!(set, (1..=36).filter(|r| r % 3 != 0).collect());
    }

    #[test]
    fn shape_invariants() {
        for t in &TEMPLATES {
            assert_eq!(t.numerator(0), IntPoly::from_i64(&[1]));
            assert_eq!(t.numerator(1), IntPoly::from_i64(&[0, 1]));
            assert_eq!(t.numerator(2), IntPoly::from_i64(&[0, 0, 1]));
            // triangular with monic top term
            for i in 0..6 {
                assert_eq!(t.numerator(i).degree(), Some(i));
                assert!(t.numerator(i).is_monic());
            }
            match t.tail_denominators {
                [2, 6, 18] => assert_eq!(t.ell, 0),
                [1, 3, 9] => assert_eq!(t.ell, 3),
                other => panic!("unexpected denominators {other:?}"),
            }
        }
    }

    #[test]
    fn residue_convention() {
        assert_eq!(residue_of(&BigInt::from(1)), 1);
        assert_eq!(residue_of(&BigInt::from(36)), 36);
        assert_eq!(residue_of(&BigInt::from(37)), 1);
        assert_eq!(residue_of(&BigInt::from(-1)), 35);
        assert_eq!(residue_of(&BigInt::from(-36)), 36);
    }

    #[test]
    fn template_lookup() {
        let t = template_for(&BigInt::from(1)).unwrap();
        assert_eq!(t.numerator(5), IntPoly::from_i64(&[11, 3, 13, 6, 2, 1]));
        assert_eq!(t.denominator(5), 18);
        let t = template_for(&BigInt::from(-1)).unwrap();
        assert_eq!(t.residues, &[26, 35]);
        assert_eq!(t.numerator(4), IntPoly::from_i64(&[1, 0, 0, 1, 1]));
        assert_eq!(t.denominator(4), 3);
        assert!(std::ptr::eq(template_for(&BigInt::from(37)).unwrap(), template_for(&BigInt::from(1)).unwrap()));
        assert!(matches!(template_for(&BigInt::from(6)), Err(Error::Domain(_))));
        assert!(matches!(template_for(&BigInt::from(5)), Err(Error::Domain(_))));
    }

    #[test]
    fn parser_rejects_malformed_lines() {
        assert!(parse_template_data("1 | 0 | 1 0 0 0 0 0 / 1").is_err());
        assert!(parse_template_data("x | 0 | a | b | c | d | e | f").is_err());
    }
}
