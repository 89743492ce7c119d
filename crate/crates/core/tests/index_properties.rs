use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use simplest_sextic::monogenity::{CertifiedField, CoordVector};

const PARAMS: [i64; 6] = [1, -1, 2, 4, -5, 13];

fn fields() -> &'static Vec<CertifiedField> {
    static F: OnceLock<Vec<CertifiedField>> = OnceLock::new();
    F.get_or_init(|| PARAMS.iter().map(|&m| CertifiedField::new(&BigInt::from(m)).unwrap()).collect())
}

fn coords() -> impl Strategy<Value = CoordVector> {
    prop::array::uniform5(-25i64..=25)
        .prop_filter("nonzero", |y| y.iter().any(|&c| c != 0))
        .prop_map(CoordVector::from_i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn index_is_galois_invariant(f in 0..PARAMS.len(), y in coords()) {
        let k = &fields()[f];
        let i = k.index_of(&y).unwrap();
        let mut z = y.clone();
        for _ in 0..5 {
            z = k.sigma_coords(&z);
            prop_assert_eq!(&k.index_of(&z).unwrap(), &i);
        }
        // σ⁶ = id
        prop_assert_eq!(k.sigma_coords(&z), y);
    }

    #[test]
    fn index_ignores_the_constant_coordinate(f in 0..PARAMS.len(), y in coords(), c in -1000i64..=1000) {
        let k = &fields()[f];
        let beta = k.element(&y);
        let shifted = &beta + &beta.field().from_rational(BigRational::from_integer(c.into()));
        prop_assert_eq!(k.index_of_element(&shifted).unwrap(), k.index_of(&y).unwrap());
    }

    #[test]
    fn index_is_sign_invariant(f in 0..PARAMS.len(), y in coords()) {
        let k = &fields()[f];
        prop_assert_eq!(k.index_of(&y.negate()).unwrap(), k.index_of(&y).unwrap());
    }

    #[test]
    fn factors_multiply_to_index(f in 0..PARAMS.len(), y in coords()) {
        let k = &fields()[f];
        let g = k.index_form_factors(&y).unwrap();
        prop_assert_eq!(g.index(), k.index_of(&y).unwrap());
        prop_assert!(g.congruence_holds());
        prop_assert_eq!(&g.qm, k.q());
    }

    #[test]
    fn coordinate_vectors_round_trip(y in prop::array::uniform5(any::<i64>())) {
        let y = CoordVector::from_i64(y);
        prop_assert_eq!(y.to_csv().parse::<CoordVector>().unwrap(), y.clone());
        prop_assert_eq!(y.to_string().parse::<CoordVector>().unwrap(), y.clone());
        prop_assert!(y.canonical().is_canonical());
        prop_assert!(y.canonical() == y || y.canonical() == y.negate());
    }
}

#[test]
fn index_of_alpha_for_m_minus_one() {
    // β = α for m = −1: index² = disc(f) / D_K = 6⁶·7⁵ / (2⁶·7⁵) = 3⁶
    let k = &fields()[1];
    assert_eq!(k.index_of(&CoordVector::from_i64([1, 0, 0, 0, 0])).unwrap(), BigInt::from(27));
}
