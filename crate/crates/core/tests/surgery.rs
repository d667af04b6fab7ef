use charform::exact::Rational;
use charform::surgery::*;
use num_integer::Integer;
use proptest::prelude::*;

fn coprime_pairs(max: u64) -> impl Iterator<Item = (u64, u64)> {
    (3..=max).flat_map(move |q| (2..q).filter(move |&p| p.gcd(&q) == 1).map(move |p| (p, q)))
}

/// Strictly increasing positive exponents with Δ(1) = 1 automatically.
fn exponents() -> impl Strategy<Value = LSpaceExponents> {
    prop::collection::btree_set(1u64..25, 0..7).prop_map(|s| LSpaceExponents::new(s.into_iter().collect()).unwrap())
}

#[test]
fn three_way_torsion_agreement() {
    for (p, q) in coprime_pairs(12) {
        let poly = torus_alexander(p, q).unwrap();
        let n = torus_degree(p, q);
        // exponents of the torus polynomial read off its nonzero coefficients
        let exps: Vec<u64> = (1..=n as usize).filter(|&j| poly.coeff(j) != 0).map(|j| j as u64).collect();
        let e = LSpaceExponents::new(exps).unwrap();
        assert_eq!(alexander_from_exponents(&e).unwrap(), poly, "T({p},{q})");
        for i in 0..=n as i64 + 2 {
            let a = torsion_from_poly(&poly, i);
            assert_eq!(a, torsion_from_exponents(&e, i), "T({p},{q}) i={i}");
            if i as u64 <= n {
                assert_eq!(a as u64, torus_torsion_count(p, q, i as u64).unwrap(), "T({p},{q}) i={i}");
                let x = Rational::from_integer(((n as i64) - i).into());
                assert!(Rational::from_integer(a.into()) >= torus_g(p, q, &x), "T({p},{q}) i={i}");
            } else {
                assert_eq!(a, 0);
            }
        }
    }
}

#[test]
fn range_bounds_are_ordered() {
    for (p, q) in coprime_pairs(12) {
        let r = torus_obstruction_range(p, q).unwrap();
        assert!(r.ordered(), "{r:?}");
    }
}

#[test]
fn torus_monotone_and_routes_agree() {
    for (p, q) in coprime_pairs(9) {
        let k = Knot::torus(p, q).unwrap();
        let verdicts: Vec<bool> =
            (1..p * q).map(|n| obstruct_integer_surgery(&k, n).unwrap().verdict.is_obstructed()).collect();
        let first_free = verdicts.iter().position(|v| !v).unwrap_or(verdicts.len());
        assert!(verdicts[first_free..].iter().all(|v| !v), "T({p},{q}) {verdicts:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exponent_formulas_agree(e in exponents()) {
        let poly = alexander_from_exponents(&e).unwrap();
        let top = e.as_slice().last().copied().unwrap_or(0) as i64;
        let mut prev = i64::MAX;
        for i in 0..=top + 2 {
            let t = torsion_from_exponents(&e, i);
            prop_assert_eq!(t, torsion_from_poly(&poly, i));
            prop_assert_eq!(t, torsion_from_exponents(&e, -i));
            prop_assert!(t >= 0 && t <= prev);
            prev = t;
        }
    }

    #[test]
    fn obstruction_is_monotone(e in exponents()) {
        let k = Knot::Exponents(e);
        // the two routes are compared inside every call
        let verdicts: Vec<bool> = (1..60).map(|n| obstruct_integer_surgery(&k, n).unwrap().verdict.is_obstructed()).collect();
        let first_free = verdicts.iter().position(|v| !v).unwrap_or(verdicts.len());
        prop_assert!(verdicts[first_free..].iter().all(|v| !v));
    }

    #[test]
    fn squarefree_is_weaker(e in exponents(), n in 1u64..80) {
        let k = Knot::Exponents(e);
        let sf = obstruct_squarefree(&k, n).unwrap();
        if sf.verdict.is_obstructed() {
            prop_assert!(obstruct_integer_surgery(&k, n).unwrap().verdict.is_obstructed());
        }
    }

    #[test]
    fn conjugation_symmetry(e in exponents(), n in 1i64..40, neg in any::<bool>()) {
        let k = Knot::Exponents(e);
        let c = if neg { -n } else { n };
        for i in 0..=n / 2 {
            prop_assert_eq!(d_surgery(&k, c, i).unwrap(), d_surgery(&k, c, -i).unwrap());
        }
        if neg {
            for i in 0..=n / 2 {
                prop_assert_eq!(d_surgery(&k, c, i).unwrap(), -d_lens(n as u64, i).unwrap());
            }
        }
    }
}
