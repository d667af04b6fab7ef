#![allow(dead_code)]

use charform::exact::{is_positive_definite, IntMatrix, Rational};
use charform::SymGram;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

pub fn sym(n: usize, upper: &[i64]) -> SymGram {
    let mut rows = vec![vec![0i64; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            rows[i][j] = upper[k];
            rows[j][i] = upper[k];
            k += 1;
        }
    }
    SymGram::new(IntMatrix::from_rows(&rows).unwrap()).unwrap()
}

/// Symmetric matrices of rank `n` with entries in `[-b, b]`.
pub fn any_gram(n: usize, b: i64) -> impl Strategy<Value = SymGram> {
    prop::collection::vec(-b..=b, n * (n + 1) / 2).prop_map(move |v| sym(n, &v))
}

pub fn nondegenerate_gram(n: usize, b: i64) -> impl Strategy<Value = SymGram> {
    any_gram(n, b).prop_filter("degenerate", |g| !g.determinant().is_zero())
}

/// Positive-definite forms: diagonal in `[1, b]`, off-diagonal in `[-b/2, b/2]`.
pub fn pd_gram(n: usize, b: i64) -> impl Strategy<Value = SymGram> {
    let h = (b / 2).max(1);
    (prop::collection::vec(1..=b, n), prop::collection::vec(-h..=h, n * (n - 1) / 2))
        .prop_map(move |(d, o)| {
            let mut upper = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    if i == j {
                        upper.push(d[i]);
                    } else {
                        upper.push(o[k]);
                        k += 1;
                    }
                }
            }
            sym(n, &upper)
        })
        .prop_filter("not positive-definite", is_positive_definite)
}

pub fn random_pd<R: Rng>(rng: &mut R, n: usize, b: i64, max_det: Option<i64>) -> SymGram {
    loop {
        let upper: Vec<i64> = (0..n * (n + 1) / 2).map(|_| rng.gen_range(-b..=b)).collect();
        let g = sym(n, &upper);
        if is_positive_definite(&g) && max_det.is_none_or(|m| g.determinant() <= BigInt::from(m)) {
            return g;
        }
    }
}

pub fn random_nondegenerate<R: Rng>(rng: &mut R, n: usize, b: i64, max_det: i64) -> SymGram {
    loop {
        let upper: Vec<i64> = (0..n * (n + 1) / 2).map(|_| rng.gen_range(-b..=b)).collect();
        let g = sym(n, &upper);
        let d = g.determinant().abs();
        if !d.is_zero() && d <= BigInt::from(max_det) {
            return g;
        }
    }
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, leading
/// coefficient first.
pub fn char_poly(g: &SymGram) -> Vec<Rational> {
    let n = g.rank();
    let a = g.matrix().to_rational();
    let mut coeffs = vec![Rational::from_integer(1.into())];
    let mut m = charform::RatMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I
        let mut next = a.mul(&m);
        for i in 0..n {
            next[(i, i)] += coeffs[k - 1].clone();
        }
        let am = a.mul(&next);
        let tr: Rational = (0..n).map(|i| am[(i, i)].clone()).sum();
        coeffs.push(-tr / Rational::from_integer(BigInt::from(k as i64)));
        m = next;
    }
    coeffs
}

fn sign_changes(c: &[Rational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(n₊, n₋)` from Descartes' rule, exact for real-rooted polynomials.
pub fn signature_oracle(g: &SymGram) -> (usize, usize) {
    let p = char_poly(g);
    let n = p.len() - 1;
    let neg: Vec<Rational> =
        p.iter().enumerate().map(|(k, c)| if (n - k) % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    (sign_changes(&p), sign_changes(&neg))
}

/// Random unimodular matrix as a product of elementary row operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            u[(0, 0)] = BigInt::from(-1);
        }
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let add = &c * &u[(j, k)];
            u[(i, k)] += add;
        }
    }
    u
}
