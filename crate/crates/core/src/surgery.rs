//! Torsion coefficients of L-space knots, d-invariants of integral surgeries,
//! and the negative-definite bounding obstruction, with torus knots as the
//! main family.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::numtheory::squarefree_part;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Symmetric Alexander polynomial `a₀ + Σ_{j>0} aⱼ(Tʲ + T⁻ʲ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderPoly {
    coeffs: Vec<i64>,
}

impl AlexanderPoly {
    /// From `a₀, a₁, …, a_N`; requires `Δ(1) = 1` and `a_N ≠ 0`.
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::pre("empty coefficient list"));
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        let at_one = coeffs[0] + 2 * coeffs[1..].iter().sum::<i64>();
        if at_one != 1 {
            return Err(Error::pre(format!("Δ(1) = {at_one}, expected 1")));
        }
        Ok(AlexanderPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs[0])?;
        for (j, &a) in self.coeffs.iter().enumerate().skip(1) {
            match a {
                0 => {}
                1 => write!(f, " + (T^{j} + T^-{j})")?,
                -1 => write!(f, " - (T^{j} + T^-{j})")?,
                a if a > 0 => write!(f, " + {a}(T^{j} + T^-{j})")?,
                a => write!(f, " - {}(T^{j} + T^-{j})", -a)?,
            }
        }
        Ok(())
    }
}

/// Exponents `0 < n₁ < … < n_k` of an L-space knot's Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LSpaceExponents(Vec<u64>);

impl LSpaceExponents {
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.first() == Some(&0) || exps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::pre("exponents must satisfy 0 < n₁ < … < n_k"));
        }
        Ok(LSpaceExponents(exps))
    }

    pub fn unknot() -> Self {
        LSpaceExponents(Vec::new())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// `(−1)^k + Σⱼ (−1)^{k−j}(T^{nⱼ} + T^{−nⱼ})`.
pub fn alexander_from_exponents(e: &LSpaceExponents) -> Result<AlexanderPoly> {
    let k = e.0.len();
    let deg = e.0.last().copied().unwrap_or(0) as usize;
    let mut coeffs = vec![0i64; deg + 1];
    coeffs[0] = if k % 2 == 0 { 1 } else { -1 };
    for (j, &nj) in e.0.iter().enumerate() {
        coeffs[nj as usize] = if (k - (j + 1)) % 2 == 0 { 1 } else { -1 };
    }
    AlexanderPoly::new(coeffs)
}

fn check_torus(p: u64, q: u64) -> Result<()> {
    if p < 2 || p >= q {
        return Err(Error::pre(format!("torus parameters need 2 ≤ p < q, got ({p},{q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::pre(format!("torus parameters ({p},{q}) are not coprime")));
    }
    Ok(())
}

pub fn torus_degree(p: u64, q: u64) -> u64 {
    (p - 1) * (q - 1) / 2
}

/// `(1 − T^{pq})(1 − T) / ((1 − T^p)(1 − T^q))`, symmetrised.
pub fn torus_alexander(p: u64, q: u64) -> Result<AlexanderPoly> {
    check_torus(p, q)?;
    let (pu, qu) = (p as usize, q as usize);
    let top = pu * qu + 1;
    let mut num = vec![0i64; top + 1];
    // (1 − T)(1 − T^{pq}) = 1 − T − T^{pq} + T^{pq+1}
    num[0] = 1;
    num[1] -= 1;
    num[pu * qu] -= 1;
    num[top] += 1;
    // divide by (1 − T^p), then by (1 − T^q), as power series
    for d in [pu, qu] {
        for k in d..=top {
            num[k] += num[k - d];
        }
    }
    let n = torus_degree(p, q) as usize;
    if num[2 * n + 1..].iter().any(|&c| c != 0) {
        return Err(Error::Inconsistent("torus quotient is not a polynomial of degree 2N".into()));
    }
    AlexanderPoly::new(num[n..=2 * n].to_vec())
}

/// `t_i = Σ_{j>0} j·a_{|i|+j}`.
pub fn torsion_from_poly(delta: &AlexanderPoly, i: i64) -> i64 {
    let base = i.unsigned_abs() as usize;
    (1..=delta.degree()).map(|j| j as i64 * delta.coeff(base + j)).sum()
}

/// Piecewise alternating-sum formula for `t_i` of an L-space knot.
pub fn torsion_from_exponents(e: &LSpaceExponents, i: i64) -> i64 {
    let i = i.abs();
    let ns = &e.0;
    let Some(&nk) = ns.last() else { return 0 };
    if i >= nk as i64 {
        return 0;
    }
    // n_k, n_{k−1}, …, n₁, n₀ = 0
    let seq: Vec<i64> = ns.iter().rev().map(|&x| x as i64).chain(std::iter::once(0)).collect();
    let m = (0..seq.len() - 1).find(|&m| seq[m + 1] <= i && i <= seq[m]).expect("intervals cover [0, n_k]");
    let alt: i64 = seq[..=m].iter().enumerate().map(|(l, &x)| if l % 2 == 0 { x } else { -x }).sum();
    if m % 2 == 0 {
        alt - i
    } else {
        alt
    }
}

/// `#{(a, b) ∈ Z²_{≥0} | ap + bq < N − i}`.
pub fn torus_torsion_count(p: u64, q: u64, i: u64) -> Result<u64> {
    check_torus(p, q)?;
    let n = torus_degree(p, q);
    if i > n {
        return Err(Error::pre(format!("index {i} exceeds the degree {n}")));
    }
    let limit = n - i;
    let mut count = 0;
    let mut b = 0;
    while b * q < limit {
        // a·p < limit − b·q
        count += (limit - b * q).div_ceil(p);
        b += 1;
    }
    Ok(count)
}

/// Piecewise-linear lower bound `g(x) = Σ_{b≥0} max(x − bq, 0)/p`.
pub fn torus_g(p: u64, q: u64, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut b = 0i64;
    loop {
        let rest = x - ri(b * q as i64);
        if !rest.is_positive() {
            break;
        }
        acc += rest / ri(p as i64);
        b += 1;
    }
    acc
}

/// `d(U_n, i) = (n − 2|i|)²/(4n) − 1/4`.
pub fn d_lens(n: u64, i: i64) -> Result<Rational> {
    if n == 0 || i.unsigned_abs() >= n {
        return Err(Error::pre(format!("lens space d-invariant needs n > 0 and |i| < n, got n={n}, i={i}")));
    }
    let n = n as i64;
    let a = n - 2 * i.abs();
    Ok(r(a * a, 4 * n) - r(1, 4))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Knot {
    Torus { p: u64, q: u64 },
    Exponents(LSpaceExponents),
}

impl Knot {
    pub fn torus(p: u64, q: u64) -> Result<Self> {
        check_torus(p, q)?;
        Ok(Knot::Torus { p, q })
    }

    pub fn unknot() -> Self {
        Knot::Exponents(LSpaceExponents::unknot())
    }

    pub fn alexander(&self) -> Result<AlexanderPoly> {
        match self {
            Knot::Torus { p, q } => torus_alexander(*p, *q),
            Knot::Exponents(e) => alexander_from_exponents(e),
        }
    }

    pub fn torsion(&self, i: i64) -> i64 {
        match self {
            Knot::Torus { p, q } => {
                let n = torus_degree(*p, *q);
                let a = i.unsigned_abs();
                if a >= n {
                    0
                } else {
                    torus_torsion_count(*p, *q, a).expect("validated") as i64
                }
            }
            Knot::Exponents(e) => torsion_from_exponents(e, i),
        }
    }
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::Torus { p, q } => write!(f, "torus:{p},{q}"),
            Knot::Exponents(e) if e.0.is_empty() => write!(f, "unknot"),
            Knot::Exponents(e) => {
                let s: Vec<String> = e.0.iter().map(u64::to_string).collect();
                write!(f, "exponents:{}", s.join(","))
            }
        }
    }
}

impl FromStr for Knot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { location: "--knot".into(), message: format!("{msg}: {s:?}") };
        let nums = |body: &str| -> Result<Vec<u64>> {
            if body.trim().is_empty() {
                return Ok(Vec::new());
            }
            body.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad("expected nonnegative integers"))).collect()
        };
        if s == "unknot" {
            return Ok(Knot::unknot());
        }
        if let Some(body) = s.strip_prefix("torus:") {
            let v = nums(body)?;
            if v.len() != 2 {
                return Err(bad("torus knots take two parameters"));
            }
            return Knot::torus(v[0], v[1]);
        }
        if let Some(body) = s.strip_prefix("exponents:") {
            return Ok(Knot::Exponents(LSpaceExponents::new(nums(body)?)?));
        }
        Err(bad("expected torus:p,q, exponents:n1,n2,… or unknot"))
    }
}

/// `d(K_{±n}, i)`: `d(U_n, i) − 2tᵢ` for positive and `−d(U_n, i)` for negative coefficients.
pub fn d_surgery(k: &Knot, coeff: i64, i: i64) -> Result<Rational> {
    if coeff == 0 {
        return Err(Error::pre("surgery coefficient must be nonzero"));
    }
    let n = coeff.unsigned_abs();
    if 2 * i.unsigned_abs() > n {
        return Err(Error::pre(format!("index {i} outside |i| ≤ {n}/2")));
    }
    let lens = d_lens(n, i)?;
    Ok(if coeff > 0 { lens - ri(2 * k.torsion(i)) } else { -lens })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

impl Verdict {
    pub fn is_obstructed(self) -> bool {
        self == Verdict::Obstructed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Obstructed => "obstructed",
            Verdict::NotObstructed => "not_obstructed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRow {
    pub i: i64,
    pub t: i64,
    pub d: Rational,
    pub four_d: Rational,
    /// Right-hand side of the torsion inequality at this index.
    pub threshold: Rational,
}

pub const HYPOTHESIS: &str = "bounding four-manifold assumed to have no torsion in H_1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub knot: String,
    pub n: u64,
    /// Order of `H₁` entering the bound (`n`, or its square-free part).
    pub delta: u64,
    pub rows: Vec<IndexRow>,
    pub bound: Rational,
    pub max4d: Rational,
    pub verdict: Verdict,
    /// Indices where `tᵢ` fails its inequality.
    pub witnesses: Vec<i64>,
    pub hypothesis: &'static str,
    /// Set when `max 4d` equals 1 with even `δ` (attained at a spin structure).
    pub note: Option<String>,
}

/// Threshold on `tᵢ` for `+n` surgery.
pub fn torsion_threshold(n: u64, i: i64) -> Rational {
    let n = n as i64;
    let a = n - 2 * i;
    if n % 2 == 1 {
        r(a * a + 1, 8 * n) - r(1, 4)
    } else {
        r(a * a, 8 * n) - r(1, 4)
    }
}

/// `1 − 1/δ` for odd `δ`, `1` for even `δ`.
pub fn four_d_bound(delta: u64) -> Rational {
    if delta % 2 == 1 {
        Rational::one() - r(1, delta as i64)
    } else {
        Rational::one()
    }
}

fn rows_for(k: &Knot, n: u64) -> Result<Vec<IndexRow>> {
    (0..=(n / 2) as i64)
        .map(|i| {
            let d = d_surgery(k, n as i64, i)?;
            Ok(IndexRow { i, t: k.torsion(i), four_d: &d * ri(4), d, threshold: torsion_threshold(n, i) })
        })
        .collect()
}

fn report(k: &Knot, n: u64, delta: u64, rows: Vec<IndexRow>, verdict: Verdict, witnesses: Vec<i64>) -> ObstructionReport {
    let bound = four_d_bound(delta);
    let max4d = rows.iter().map(|r| r.four_d.clone()).max().unwrap_or_else(Rational::zero);
    let note = (delta % 2 == 0 && max4d.is_one())
        .then(|| "max 4d equals 1; any bounding manifold realises it at a spin structure".to_string());
    ObstructionReport { knot: k.to_string(), n, delta, rows, bound, max4d, verdict, witnesses, hypothesis: HYPOTHESIS, note }
}

/// Obstruction to `+n` surgery bounding a negative-definite manifold with
/// torsion-free `H₁`; the torsion inequalities and the `max 4d` bound must agree.
pub fn obstruct_integer_surgery(k: &Knot, n: u64) -> Result<ObstructionReport> {
    if n == 0 {
        return Err(Error::pre("surgery coefficient must be positive"));
    }
    let rows = rows_for(k, n)?;
    let witnesses: Vec<i64> = rows.iter().filter(|r| ri(r.t) <= r.threshold).map(|r| r.i).collect();
    let t_route = witnesses.is_empty();
    let rep = report(
        k,
        n,
        n,
        rows,
        if t_route { Verdict::Obstructed } else { Verdict::NotObstructed },
        witnesses,
    );
    let d_route = rep.max4d < rep.bound;
    if d_route != t_route {
        return Err(Error::Inconsistent(format!("torsion and max-4d routes disagree for {k}, n = {n}")));
    }
    Ok(rep)
}

/// The `max 4d` test against the bound for the square-free part of `n`.
pub fn obstruct_squarefree(k: &Knot, n: u64) -> Result<ObstructionReport> {
    if n == 0 {
        return Err(Error::pre("surgery coefficient must be positive"));
    }
    let rows = rows_for(k, n)?;
    let r_part = squarefree_part(n);
    let bound = four_d_bound(r_part);
    let witnesses: Vec<i64> = rows.iter().filter(|row| row.four_d >= bound).map(|row| row.i).collect();
    let verdict = if witnesses.is_empty() { Verdict::Obstructed } else { Verdict::NotObstructed };
    Ok(report(k, n, r_part, rows, verdict, witnesses))
}

/// `a + b·√c` with `b, c ≥ 0`.
#[derive(Clone, Debug)]
struct Surd {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Surd {
    fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero(), c: Rational::zero() }
    }

    /// `m < a + b√c`, decided exactly.
    fn exceeds(&self, m: &BigInt) -> bool {
        let lhs = Rational::from_integer(m.clone()) - &self.a;
        if lhs.is_negative() {
            return true;
        }
        &lhs * &lhs < &self.b * &self.b * &self.c
    }

    fn approx(&self) -> f64 {
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * self.c.to_f64().unwrap().sqrt()
    }
}

/// The three upper limits on `m` in the closed-form range `n ≤ 2N + m`.
fn closed_form_terms(p: u64, q: u64) -> [Surd; 3] {
    let (pi, qi) = (p as i64, q as i64);
    let n = torus_degree(p, q) as i64;
    let half = r(1, 2);
    let first = Surd { a: Rational::one(), b: Rational::one(), c: ri(4 * n) };
    if p % 2 == 0 {
        let alpha = ri(qi * (pi - 2) + 2);
        let beta = ri(qi - pi + 1);
        let second = Surd {
            a: ri(2) - &half * &alpha,
            b: half.clone(),
            c: &alpha * (&alpha + ri(4) * &beta) - ri(4),
        };
        [first, second, Surd::rational(ri(qi - pi + 3))]
    } else {
        let alpha = ri(qi * (pi - 4) + 2) + r(3 * qi, pi);
        let beta = ri(2 * qi - pi + 1);
        let second = Surd {
            a: ri(2) - &half * &alpha - r(qi * (pi - 3), pi),
            b: half.clone(),
            c: &alpha * (&alpha + ri(4) * &beta) - ri(4),
        };
        [first, second, Surd::rational(ri(qi - pi + 5) - r(qi + 2, pi))]
    }
}

/// Largest integer strictly below every term.
fn closed_form_m_max(p: u64, q: u64) -> i64 {
    let terms = closed_form_terms(p, q);
    let est = terms.iter().map(Surd::approx).fold(f64::INFINITY, f64::min);
    let mut m = est.floor() as i64 + 2;
    while !terms.iter().all(|t| t.exceeds(&BigInt::from(m))) {
        m -= 1;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusRange {
    pub p: u64,
    pub q: u64,
    /// Largest `n` such that every `1 ≤ m ≤ n` is obstructed.
    pub exact_max_n: u64,
    pub closed_form_max_n: i64,
    pub headline_max_n: u64,
}

impl TorusRange {
    pub fn ordered(&self) -> bool {
        (self.headline_max_n as i64) <= self.closed_form_max_n && self.closed_form_max_n <= self.exact_max_n as i64
    }
}

pub fn torus_obstruction_range(p: u64, q: u64) -> Result<TorusRange> {
    let knot = Knot::torus(p, q)?;
    let mut n = 1;
    while obstruct_integer_surgery(&knot, n)?.verdict.is_obstructed() {
        n += 1;
    }
    let big_n = torus_degree(p, q) as i64;
    Ok(TorusRange {
        p,
        q,
        exact_max_n: n - 1,
        closed_form_max_n: 2 * big_n + closed_form_m_max(p, q),
        headline_max_n: (p - 1) * (q - 1) + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(v: &[u64]) -> LSpaceExponents {
        LSpaceExponents::new(v.to_vec()).unwrap()
    }

    #[test]
    fn alexander_polynomials() {
        assert_eq!(alexander_from_exponents(&LSpaceExponents::unknot()).unwrap().coeffs(), &[1]);
        assert_eq!(alexander_from_exponents(&exps(&[1])).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(alexander_from_exponents(&exps(&[1, 3, 4])).unwrap().coeffs(), &[-1, 1, 0, -1, 1]);
        assert_eq!(torus_alexander(2, 3).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(torus_alexander(3, 5).unwrap().coeffs(), &[-1, 1, 0, -1, 1]);
        assert_eq!(torus_alexander(2, 5).unwrap().coeffs(), &[1, -1, 1]);
        assert!(torus_alexander(2, 4).is_err());
        assert!(torus_alexander(3, 2).is_err());
        assert!(LSpaceExponents::new(vec![2, 2]).is_err());
        assert!(AlexanderPoly::new(vec![1, 1]).is_err());
    }

    #[test]
    fn torsion() {
        let t35 = torus_alexander(3, 5).unwrap();
        let t: Vec<i64> = (0..5).map(|i| torsion_from_poly(&t35, i)).collect();
        assert_eq!(t, vec![2, 1, 1, 1, 0]);
        let t: Vec<i64> = (0..5).map(|i| torsion_from_exponents(&exps(&[1, 3, 4]), i)).collect();
        assert_eq!(t, vec![2, 1, 1, 1, 0]);
        let t23 = torus_alexander(2, 3).unwrap();
        assert_eq!((torsion_from_poly(&t23, 0), torsion_from_poly(&t23, 1)), (1, 0));
        assert_eq!(torsion_from_exponents(&exps(&[1]), -0), 1);
        assert_eq!(torsion_from_exponents(&LSpaceExponents::unknot(), 3), 0);
        assert_eq!(torus_torsion_count(3, 5, 0).unwrap(), 2);
        assert_eq!(torus_torsion_count(2, 3, 0).unwrap(), 1);
        assert_eq!(torus_torsion_count(3, 5, 4).unwrap(), 0);
        assert_eq!(torsion_from_poly(&t35, -1), 1);
    }

    #[test]
    fn g_function() {
        assert_eq!(torus_g(3, 5, &ri(0)), ri(0));
        assert_eq!(torus_g(3, 5, &ri(-4)), ri(0));
        assert_eq!(torus_g(3, 5, &ri(5)), r(5, 3));
        assert_eq!(torus_g(3, 5, &ri(8)), r(11, 3));
    }

    #[test]
    fn d_invariants() {
        assert_eq!(d_lens(1, 0).unwrap(), ri(0));
        assert_eq!(d_lens(2, 1).unwrap(), r(-1, 4));
        assert_eq!(d_lens(7, 0).unwrap(), r(3, 2));
        assert!(d_lens(3, 3).is_err());
        let trefoil = Knot::torus(2, 3).unwrap();
        assert_eq!(d_surgery(&trefoil, 1, 0).unwrap(), ri(-2));
        assert_eq!(d_surgery(&trefoil, -2, 0).unwrap(), r(-1, 4));
        assert_eq!(d_surgery(&Knot::unknot(), 5, 2).unwrap(), d_lens(5, 2).unwrap());
        assert!(d_surgery(&trefoil, 4, 3).is_err());
        assert!(d_surgery(&trefoil, 0, 0).is_err());
    }

    #[test]
    fn obstructions() {
        let trefoil = Knot::torus(2, 3).unwrap();
        assert!(obstruct_integer_surgery(&trefoil, 4).unwrap().verdict.is_obstructed());
        let rep = obstruct_integer_surgery(&trefoil, 5).unwrap();
        assert!(!rep.verdict.is_obstructed());
        assert_eq!(rep.witnesses, vec![1]);
        for n in 1..10 {
            assert!(!obstruct_integer_surgery(&Knot::unknot(), n).unwrap().verdict.is_obstructed());
        }
        let rep = obstruct_squarefree(&trefoil, 4).unwrap();
        assert_eq!((rep.delta, rep.max4d.clone(), rep.verdict), (1, ri(0), Verdict::NotObstructed));
        let rep = obstruct_squarefree(&trefoil, 2).unwrap();
        assert_eq!(rep.rows[0].d, r(-7, 4));
        assert_eq!(rep.rows[1].d, r(-1, 4));
        assert_eq!((rep.max4d.clone(), rep.verdict), (ri(-1), Verdict::Obstructed));
        assert!(!obstruct_squarefree(&Knot::unknot(), 4).unwrap().verdict.is_obstructed());
    }

    #[test]
    fn torus_ranges() {
        let t = torus_obstruction_range(2, 3).unwrap();
        assert_eq!((t.exact_max_n, t.closed_form_max_n, t.headline_max_n), (4, 4, 4));
        let t = torus_obstruction_range(2, 5).unwrap();
        assert_eq!((t.exact_max_n, t.closed_form_max_n, t.headline_max_n), (7, 7, 6));
        let t = torus_obstruction_range(3, 5).unwrap();
        assert_eq!(t.headline_max_n, 10);
        assert!(t.exact_max_n >= 10);
        assert!(t.ordered());
    }

    #[test]
    fn knot_parsing() {
        assert_eq!("torus:2,3".parse::<Knot>().unwrap(), Knot::Torus { p: 2, q: 3 });
        assert_eq!("exponents:1,3,4".parse::<Knot>().unwrap(), Knot::Exponents(exps(&[1, 3, 4])));
        assert_eq!("unknot".parse::<Knot>().unwrap(), Knot::unknot());
        assert!("torus:2,4".parse::<Knot>().is_err());
        assert!("torus:2".parse::<Knot>().is_err());
        assert!("figure8".parse::<Knot>().is_err());
        assert_eq!(Knot::torus(3, 5).unwrap().to_string(), "torus:3,5");
    }

    #[test]
    fn surds() {
        let s = Surd { a: ri(1), b: ri(1), c: ri(4) };
        assert!(s.exceeds(&BigInt::from(2)));
        assert!(!s.exceeds(&BigInt::from(3)));
        assert_eq!(closed_form_m_max(2, 3), 2);
    }
}
