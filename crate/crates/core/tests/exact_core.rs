mod common;

use charform::exact::{dual_gram, signature, smith_normal_form};
use charform::lattices::{a2, d4, e8};
use charform::{RatMatrix, SymGram};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn signature_oracle_on_named_forms() {
    for g in [a2(), d4(), e8(), a2().neg(), SymGram::diagonal(&[1, -3, 5]), SymGram::from_i64(&[&[0, 1], &[1, 0]]).unwrap()] {
        let s = signature(&g).unwrap();
        assert_eq!((s.positive, s.negative), signature_oracle(&g));
    }
    // the glued form that once tripped the elimination
    let g = SymGram::from_i64(&[&[1, 1, 1, 1], &[1, 2, 2, 1], &[1, 2, 3, 0], &[1, 1, 0, 3]]).unwrap();
    assert_eq!(signature_oracle(&g), (4, 0));
    assert!(signature(&g).unwrap().is_positive_definite());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_inverse(g in nondegenerate_gram(3, 6)) {
        let inv = dual_gram(&g).unwrap();
        prop_assert_eq!(g.matrix().to_rational().mul(&inv), RatMatrix::identity(3));
    }

    #[test]
    fn smith_diagonal_multiplies_to_det(g in nondegenerate_gram(4, 5)) {
        let snf = smith_normal_form(g.matrix());
        let prod: BigInt = snf.diagonal.iter().product();
        prop_assert_eq!(prod, g.determinant().abs());
        for w in snf.diagonal.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        prop_assert_eq!(snf.u.mul(g.matrix()).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.u.determinant().abs().is_one() && snf.v.determinant().abs().is_one());
    }

    #[test]
    fn signature_matches_oracle(g in nondegenerate_gram(4, 6)) {
        let s = signature(&g).unwrap();
        prop_assert_eq!((s.positive, s.negative), signature_oracle(&g));
    }

    #[test]
    fn signature_is_basis_invariant(g in nondegenerate_gram(3, 6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(&mut rng, 3, 8);
        prop_assert_eq!(signature(&g.transform(&u)).unwrap(), signature(&g).unwrap());
    }
}
