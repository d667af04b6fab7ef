mod common;

use std::collections::BTreeMap;

use charform::exact::{hermite_row_lattice, rat_mod, Rational};
use charform::lattices::{a2, d4, e8};
use charform::linking::*;
use charform::SymGram;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use common::*;

/// Gauss sum by direct enumeration of `Zⁿ/QZⁿ`, with coset representatives
/// read off the Hermite form of `Q`; independent of the Smith-form path.
fn gauss_direct(g: &SymGram) -> Complex64 {
    let n = g.rank();
    let inv = charform::exact::dual_gram(g).unwrap();
    let h = hermite_row_lattice(g.matrix()).unwrap();
    let diag: Vec<i64> = (0..n).map(|i| h[(i, i)].to_i64().unwrap()).collect();
    let det: i64 = diag.iter().product();
    assert_eq!(BigInt::from(det), g.determinant().abs());
    let two = Rational::from_integer(BigInt::from(2));
    let mut idx = vec![0i64; n];
    let mut sum = Complex64::new(0.0, 0.0);
    loop {
        let y: Vec<BigInt> = idx.iter().map(|&x| BigInt::from(x)).collect();
        let sq = rat_mod(&inv.bilinear_int(&y, &y), &two);
        sum += Complex64::from_polar(1.0, std::f64::consts::PI * sq.to_f64().unwrap());
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < diag[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    sum / (det as f64).sqrt()
}

#[test]
fn named_gauss_sums() {
    for g in [a2(), d4(), e8(), SymGram::diagonal(&[2, 2]), a2().neg(), SymGram::from_i64(&[&[2, 1], &[1, -4]]).unwrap()] {
        let s = gauss_sum_milgram(&g, DEFAULT_GAUSS_CAP).unwrap();
        assert!(s.milgram_ok);
        assert!((s.value - gauss_direct(&g)).norm() < MILGRAM_TOLERANCE);
    }
}

#[test]
fn named_decompositions() {
    let labels = |g: &SymGram| block_signature(&decompose(g).unwrap());
    assert_eq!(labels(&d4()), vec![(2, 1, BlockKind::F)]);
    assert_eq!(labels(&SymGram::from_i64(&[&[0, 2], &[2, 0]]).unwrap()), vec![(2, 1, BlockKind::E)]);
    assert!(labels(&e8()).is_empty());
    assert_eq!(normalise_signature(labels(&SymGram::direct_sum(&[&a2(), &a2()]))), vec![(3, 1, BlockKind::A), (3, 1, BlockKind::A)]);
}

fn check_blocks(g: &SymGram) -> Result<(), TestCaseError> {
    let blocks = decompose(g).unwrap();
    let group = discriminant_group(g).unwrap();
    // orders multiply back to |det|
    let total: BigInt = blocks.iter().map(PairingBlock::order).product();
    prop_assert_eq!(total, g.determinant().abs());
    prop_assert_eq!(group.order(), g.determinant().abs());
    let mut per_prime: BTreeMap<u64, BigInt> = BTreeMap::new();
    for b in &blocks {
        *per_prime.entry(b.prime).or_insert_with(BigInt::one) *= b.order();
    }
    for (p, order) in per_prime {
        let mut rest = g.determinant().abs();
        let mut pp = BigInt::one();
        while (&rest % p).is_zero() {
            rest /= p;
            pp *= p;
        }
        prop_assert_eq!(order, pp);
    }
    // generators of different blocks are orthogonal; squares match the labels
    let gens: Vec<(usize, &Vec<BigInt>)> = blocks.iter().enumerate().flat_map(|(i, b)| b.generators.iter().map(move |x| (i, x))).collect();
    for (i, x) in &gens {
        for (j, y) in &gens {
            if i != j {
                prop_assert!(linking_value(g, x, y).unwrap().is_zero());
            }
        }
    }
    for b in &blocks {
        for (x, sq) in b.generators.iter().zip(&b.squares) {
            let modulus = Rational::from_integer(BigInt::from(if g.is_even() { 2 } else { 1 }));
            let direct = if g.is_even() { quadratic_value_even(g, x).unwrap() } else { linking_value(g, x, x).unwrap() };
            prop_assert_eq!(rat_mod(&direct, &modulus), rat_mod(sq, &modulus));
        }
        if let Some(c) = &b.cross {
            prop_assert_eq!(&linking_value(g, &b.generators[0], &b.generators[1]).unwrap(), c);
        }
        if b.prime != 2 && b.generators.len() == 1 {
            prop_assert_eq!(classify_odd_cyclic(b.prime, b.exponent, b.generator_square()).unwrap(), b.kind);
        }
    }
    Ok(())
}

/// Exponents of the cyclic factors of the 2-part, sorted.
fn two_part_exponents(v: &[(u64, u32, BlockKind)]) -> Vec<u32> {
    let mut out: Vec<u32> = v
        .iter()
        .filter(|b| b.0 == 2)
        .flat_map(|&(_, k, kind)| std::iter::repeat(k).take(if kind == BlockKind::Cyc2 { 1 } else { 2 }))
        .collect();
    out.sort_unstable();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn blocks_reconstruct_the_pairing(g in nondegenerate_gram(3, 6)) {
        check_blocks(&g)?;
    }

    #[test]
    fn even_blocks(g in nondegenerate_gram(3, 4).prop_map(|g| {
        let rows: Vec<Vec<i64>> = g.to_i64_rows().unwrap().iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        // 2Q is even
        SymGram::from_i64(&refs).unwrap()
    })) {
        check_blocks(&g)?;
    }

    #[test]
    fn decomposition_is_additive(g in nondegenerate_gram(2, 6), h in nondegenerate_gram(2, 6)) {
        let sum = SymGram::direct_sum(&[&g, &h]);
        let mut parts = block_signature(&decompose(&g).unwrap());
        parts.extend(block_signature(&decompose(&h).unwrap()));
        let whole = block_signature(&decompose(&sum).unwrap());
        let odd = |v: &[(u64, u32, BlockKind)]| normalise_signature(v.iter().filter(|b| b.0 != 2).copied().collect());
        prop_assert_eq!(odd(&whole), odd(&parts));
        // 2-adic decompositions are not unique; compare the group structure
        prop_assert_eq!(two_part_exponents(&whole), two_part_exponents(&parts));
    }

    #[test]
    fn milgram_on_even_lattices(g in nondegenerate_gram(3, 3).prop_map(|g| {
        let rows: Vec<Vec<i64>> = g.to_i64_rows().unwrap().iter().enumerate()
            .map(|(i, r)| r.iter().enumerate().map(|(j, &x)| if i == j { 2 * x } else { x }).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        SymGram::from_i64(&refs).unwrap()
    })) {
        prop_assume!(!g.determinant().is_zero() && g.determinant().abs() <= BigInt::from(200));
        let s = gauss_sum_milgram(&g, DEFAULT_GAUSS_CAP).unwrap();
        prop_assert!(s.milgram_ok, "deviation {}", s.deviation);
        prop_assert!((s.value - gauss_direct(&g)).norm() < 1e-9);
    }
}

#[test]
fn gauss_cap() {
    let g = SymGram::diagonal(&[2, 2, 2, 2]).power(4);
    assert!(matches!(gauss_sum_milgram(&g, 1000), Err(charform::Error::CapExceeded { .. })));
    assert!(matches!(gauss_sum_milgram(&SymGram::identity(2), 1000), Err(charform::Error::NotEven)));
    assert!(gauss_sum_milgram(&g.neg(), DEFAULT_GAUSS_CAP).unwrap().milgram_ok);
}
