//! Exact Fincke–Pohst enumeration of integer points in an ellipsoid.
//!
//! The quadratic form `xᵀAx` (with `A` positive-definite and rational) is
//! written as `Σᵢ dᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²` and coordinates are fixed from the
//! last one down. Every point with `xᵀAx ≤ radius` is visited; the visitor may
//! shrink the radius as it goes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{RatMatrix, Rational};

#[derive(Clone, Debug)]
pub(crate) struct Ldl {
    d: Vec<Rational>,
    /// `mu[i][j]` for `j > i`.
    mu: Vec<Vec<Rational>>,
}

impl Ldl {
    /// `None` unless `a` is positive-definite.
    pub(crate) fn new(a: &RatMatrix) -> Option<Self> {
        let n = a.rows();
        let mut w = a.clone();
        let mut d = Vec::with_capacity(n);
        let mut mu = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let piv = w[(i, i)].clone();
            if !piv.is_positive() {
                return None;
            }
            for j in i + 1..n {
                mu[i][j] = &w[(i, j)] / &piv;
            }
            for r in i + 1..n {
                if w[(i, r)].is_zero() {
                    continue;
                }
                for c in i + 1..n {
                    let delta = &mu[i][r] * &w[(i, c)];
                    w[(r, c)] -= delta;
                }
            }
            d.push(piv);
        }
        Some(Ldl { d, mu })
    }

    pub(crate) fn dim(&self) -> usize {
        self.d.len()
    }
}

/// Per-coordinate congruence constraint `xᵢ ≡ parityᵢ (mod 2)`.
pub(crate) type Parity = Option<Vec<bool>>;

/// Visit all integer points `x` (respecting `parity`) with `xᵀAx ≤ radius`.
/// The visitor receives the point and its exact value and may return a new
/// (smaller) radius.
pub(crate) fn enumerate<F>(ldl: &Ldl, parity: &Parity, radius: Rational, mut visit: F)
where
    F: FnMut(&[BigInt], &Rational) -> Option<Rational>,
{
    let n = ldl.dim();
    let mut x = vec![BigInt::zero(); n];
    let mut radius = radius;
    if n == 0 {
        return;
    }
    descend(ldl, parity, n - 1, &Rational::zero(), &mut x, &mut radius, &mut visit);
}

fn descend<F>(
    ldl: &Ldl,
    parity: &Parity,
    level: usize,
    partial: &Rational,
    x: &mut Vec<BigInt>,
    radius: &mut Rational,
    visit: &mut F,
) where
    F: FnMut(&[BigInt], &Rational) -> Option<Rational>,
{
    let n = ldl.dim();
    let mut center = Rational::zero();
    for j in level + 1..n {
        if !x[j].is_zero() {
            center -= &ldl.mu[level][j] * &x[j];
        }
    }
    let want = parity.as_ref().map(|p| p[level]);
    let step = if want.is_some() { BigInt::from(2) } else { BigInt::one() };
    let start = nearest(&center, want);

    // Walk away from the center on both sides; each side is monotone.
    let mut up = Some(start.clone());
    let mut down = Some(&start - &step);
    while up.is_some() || down.is_some() {
        for (side, dir) in [(&mut up, 1i8), (&mut down, -1i8)] {
            let Some(val) = side.take() else { continue };
            let diff = Rational::from_integer(val.clone()) - &center;
            let total = partial + &ldl.d[level] * &diff * &diff;
            if total > *radius {
                continue;
            }
            x[level] = val.clone();
            if level == 0 {
                if let Some(r) = visit(x, &total) {
                    *radius = r;
                }
            } else {
                descend(ldl, parity, level - 1, &total, x, radius, visit);
            }
            *side = Some(if dir > 0 { val + &step } else { val - &step });
        }
    }
    x[level] = BigInt::zero();
}

/// Integer closest to `c`, restricted to the given parity when requested.
fn nearest(c: &Rational, parity: Option<bool>) -> BigInt {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let r = (c + &half).floor().to_integer();
    match parity {
        None => r,
        Some(odd) => {
            if r.is_odd() == odd {
                r
            } else {
                let below: BigInt = &r - 1;
                let above: BigInt = &r + 1;
                let db = (c - Rational::from_integer(below.clone())).abs();
                let da = (Rational::from_integer(above.clone()) - c).abs();
                if db <= da {
                    below
                } else {
                    above
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, IntMatrix};

    fn count_points(a: &RatMatrix, parity: &Parity, radius: Rational) -> usize {
        let ldl = Ldl::new(a).unwrap();
        let mut count = 0;
        enumerate(&ldl, parity, radius, |_, _| {
            count += 1;
            None
        });
        count
    }

    #[test]
    fn counts_in_z2() {
        let id = IntMatrix::identity(2).to_rational();
        // x² + y² ≤ 2: (0,0), 4 axis points, 4 diagonal points
        assert_eq!(count_points(&id, &None, rat(2, 1)), 9);
        // both odd: only the four diagonal points
        assert_eq!(count_points(&id, &Some(vec![true, true]), rat(2, 1)), 4);
        assert_eq!(count_points(&id, &Some(vec![true, true]), rat(19, 10)), 0);
    }

    #[test]
    fn matches_box_scan() {
        let a = IntMatrix::from_i64(&[&[3, 1, -1], &[1, 2, 0], &[-1, 0, 4]]).to_rational();
        let radius = rat(15, 1);
        let par = Some(vec![true, false, true]);
        let mut brute = 0;
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                for z in -6i64..=6 {
                    if (x.rem_euclid(2) == 1, y.rem_euclid(2) == 1, z.rem_euclid(2) == 1)
                        != (true, false, true)
                    {
                        continue;
                    }
                    let v = [BigInt::from(x), BigInt::from(y), BigInt::from(z)];
                    if a.bilinear_int(&v, &v) <= radius {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(count_points(&a, &par, radius), brute);
        assert!(brute > 0);
    }

    #[test]
    fn indefinite_rejected() {
        let a = IntMatrix::from_i64(&[&[1, 0], &[0, -1]]).to_rational();
        assert!(Ldl::new(&a).is_none());
    }
}
