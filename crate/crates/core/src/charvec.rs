//! Characteristic covectors: minimization over the characteristic coset,
//! the sharp upper bound on the minimum, congruence classes of squares, and
//! explicit witness searches for the three small quadratic problems that
//! drive the gluing argument.
//!
//! Covectors are written in the dual basis: a vector `c ∈ Zⁿ` stands for the
//! dual-lattice element with pairing `cⱼ` against the `j`-th basis vector, and
//! its square is `cᵀQ⁻¹c`. It is characteristic exactly when `cᵢ ≡ Qᵢᵢ (mod 2)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::enumerate::{enumerate, Ldl};
use crate::error::{Error, Result};
use crate::exact::{dual_gram, rat_int, rat_mod, rat_to_string, signature, IntMatrix, Rational, SymGram};
use crate::linking::{decompose, BlockKind};
use crate::numtheory::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Covector {
    pub coords: Vec<BigInt>,
    pub square: Rational,
}

impl Covector {
    pub fn new(g: &SymGram, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != g.rank() {
            return Err(Error::Dimension(format!(
                "covector has {} coordinates, lattice has rank {}",
                coords.len(),
                g.rank()
            )));
        }
        let inv = dual_gram(g)?;
        let square = inv.bilinear_int(&coords, &coords);
        Ok(Covector { coords, square })
    }

    pub fn is_characteristic(&self, g: &SymGram) -> bool {
        self.coords.len() == g.rank()
            && self.coords.iter().enumerate().all(|(i, c)| c.is_odd() == g.entry(i, i).is_odd())
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) square {}", c.join(","), rat_to_string(&self.square))
    }
}

/// `diag(Q) mod 2`; the characteristic coset is this vector plus `2Zⁿ`.
pub fn characteristic_parity(g: &SymGram) -> Vec<bool> {
    (0..g.rank()).map(|i| g.entry(i, i).is_odd()).collect()
}

fn parity_vector(g: &SymGram) -> Vec<BigInt> {
    characteristic_parity(g).into_iter().map(|b| if b { BigInt::one() } else { BigInt::zero() }).collect()
}

fn require_positive_definite(g: &SymGram) -> Result<()> {
    if g.determinant().is_zero() {
        return Err(Error::Degenerate);
    }
    if !signature(g)?.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(())
}

/// Sign-normalise (first nonzero entry positive).
fn sign_normalised(v: &[BigInt]) -> Vec<BigInt> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

/// Tracks the running minimum and the canonical representative among ties.
struct MinTracker {
    best: Option<(Rational, Vec<BigInt>)>,
}

impl MinTracker {
    fn new() -> Self {
        MinTracker { best: None }
    }

    /// Returns true when `value` is a new strict minimum.
    fn offer(&mut self, coords: &[BigInt], value: &Rational) -> bool {
        let cand = sign_normalised(coords);
        match &mut self.best {
            None => {
                self.best = Some((value.clone(), cand));
                true
            }
            Some((v, c)) => {
                if value < v {
                    *v = value.clone();
                    *c = cand;
                    true
                } else {
                    if value == v && cand < *c {
                        *c = cand;
                    }
                    false
                }
            }
        }
    }
}

/// Characteristic covector of globally minimal square, by exact branch and
/// bound on `Q⁻¹`. Ties resolve to the lexicographically smallest coordinate
/// vector whose first nonzero entry is positive.
pub fn min_characteristic(g: &SymGram) -> Result<Covector> {
    require_positive_definite(g)?;
    let inv = dual_gram(g)?;
    let ldl = Ldl::new(&inv).ok_or(Error::NotPositiveDefinite)?;
    let p = parity_vector(g);
    let radius = inv.bilinear_int(&p, &p);
    let parity = Some(characteristic_parity(g));
    let mut tracker = MinTracker::new();
    enumerate(&ldl, &parity, radius, |x, value| {
        if tracker.offer(x, value) {
            Some(value.clone())
        } else {
            None
        }
    });
    let (square, coords) = tracker.best.ok_or_else(|| {
        Error::Inconsistent("characteristic enumeration visited no points".into())
    })?;
    Ok(Covector { coords, square })
}

/// Adjugate by cofactor expansion (`adj·Q = det·I`), independent of the
/// rational inverse used by the branch and bound.
fn adjugate(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    if n == 1 {
        return IntMatrix::identity(1);
    }
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut minor = IntMatrix::zeros(n - 1, n - 1);
            for (r, rr) in (0..n).filter(|&r| r != j).enumerate() {
                for (c, cc) in (0..n).filter(|&c| c != i).enumerate() {
                    minor[(r, c)] = m[(rr, cc)].clone();
                }
            }
            let d = minor.determinant();
            adj[(i, j)] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

/// Exhaustive minimum over characteristic coordinates with `|cᵢ| ≤ bound`.
pub fn brute_force_min(g: &SymGram, bound: u64) -> Result<Covector> {
    require_positive_definite(g)?;
    let n = g.rank();
    let det = g.determinant();
    let adj = adjugate(g.matrix());
    let parity = characteristic_parity(g);
    let b = bound as i64;
    let axis: Vec<Vec<i64>> = parity
        .iter()
        .map(|&odd| (-b..=b).filter(|v| (v.rem_euclid(2) == 1) == odd).collect())
        .collect();
    if axis.iter().any(|a| a.is_empty()) {
        return Err(Error::pre("box too small to contain a characteristic covector"));
    }

    // i128 fast path when every product fits comfortably.
    let adj_small: Option<Vec<i128>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| adj[(i, j)].to_i128().filter(|x| x.abs() < (1i128 << 80)))
        .collect();
    let fits = adj_small.is_some() && (bound as u128) < (1u128 << 16) && n <= 16;

    let mut idx = vec![0usize; n];
    let mut best: Option<(Rational, Vec<BigInt>)> = None;
    let mut best_num_small: Option<i128> = None;
    loop {
        let c: Vec<i64> = (0..n).map(|i| axis[i][idx[i]]).collect();
        let num: BigInt = if fits {
            let a = adj_small.as_ref().unwrap();
            let mut acc = 0i128;
            for i in 0..n {
                let mut row = 0i128;
                for j in 0..n {
                    row += a[i * n + j] * c[j] as i128;
                }
                acc += row * c[i] as i128;
            }
            if let Some(bn) = best_num_small {
                // value = acc / det with det > 0 (positive-definite)
                if acc > bn {
                    advance(&mut idx, &axis);
                    if idx.iter().all(|&x| x == 0) {
                        break;
                    }
                    continue;
                }
            }
            BigInt::from(acc)
        } else {
            let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
            let mut acc = BigInt::zero();
            for i in 0..n {
                let mut row = BigInt::zero();
                for j in 0..n {
                    row += &adj[(i, j)] * &cb[j];
                }
                acc += row * &cb[i];
            }
            acc
        };
        let value = Rational::new(num.clone(), det.clone());
        let cand = sign_normalised(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let replace = match &best {
            None => true,
            Some((v, cc)) => value < *v || (value == *v && cand < *cc),
        };
        if replace {
            if fits {
                best_num_small = num.to_i128();
            }
            best = Some((value, cand));
        }
        advance(&mut idx, &axis);
        if idx.iter().all(|&x| x == 0) {
            break;
        }
    }
    let (square, coords) = best.expect("nonempty box");
    Ok(Covector { coords, square })
}

fn advance(idx: &mut [usize], axis: &[Vec<i64>]) {
    for i in 0..idx.len() {
        idx[i] += 1;
        if idx[i] < axis[i].len() {
            return;
        }
        idx[i] = 0;
    }
}

/// Box half-width guaranteeing that every characteristic covector of square at
/// most `radius` lies inside: `cᵢ² ≤ radius·Qᵢᵢ` on the ellipsoid.
pub fn covering_box(g: &SymGram, radius: &Rational) -> u64 {
    let mut best = 0u64;
    for i in 0..g.rank() {
        let r = radius * rat_int(g.entry(i, i));
        let c = r.ceil().to_integer();
        let mut s = c.sqrt();
        while Rational::from_integer(&s * &s) < r {
            s += 1;
        }
        best = best.max(s.to_u64().unwrap_or(u64::MAX));
    }
    best.max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Outcome of checking the sharp upper bound on the minimal characteristic square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub rank: usize,
    pub min_square: Rational,
    /// `n−1+1/δ` for odd `δ`, `n−1` for even `δ`.
    pub bound: Rational,
    pub delta: BigInt,
    pub delta_parity: Parity,
    pub is_extremal: bool,
    pub minimizer: Covector,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.min_square <= self.bound && (self.min_square != self.bound || self.is_extremal)
    }

    pub fn is_equality(&self) -> bool {
        self.min_square == self.bound
    }
}

pub fn main_bound(rank: usize, delta: &BigInt) -> Rational {
    let base = Rational::from_integer(BigInt::from(rank as i64 - 1));
    if delta.is_odd() {
        base + Rational::new(BigInt::one(), delta.clone())
    } else {
        base
    }
}

/// Minimal characteristic square against the bound, with the extremal-form
/// test. Returns an error if the bound or its equality clause fails.
pub fn check_main_bound(g: &SymGram) -> Result<BoundReport> {
    let minimizer = min_characteristic(g)?;
    let delta = g.delta();
    let bound = main_bound(g.rank(), &delta);
    let is_extremal = is_extremal_form(g)?;
    let report = BoundReport {
        rank: g.rank(),
        min_square: minimizer.square.clone(),
        bound,
        delta_parity: if delta.is_odd() { Parity::Odd } else { Parity::Even },
        delta,
        is_extremal,
        minimizer,
    };
    if !report.holds() {
        return Err(Error::BoundViolated(format!(
            "minimal characteristic square {} against bound {} (extremal: {})",
            rat_to_string(&report.min_square),
            rat_to_string(&report.bound),
            report.is_extremal
        )));
    }
    if report.is_extremal && !report.is_equality() {
        return Err(Error::Inconsistent(format!(
            "extremal form with minimal square {} below bound {}",
            rat_to_string(&report.min_square),
            rat_to_string(&report.bound)
        )));
    }
    Ok(report)
}

/// Lattice vectors of norm one, up to sign.
pub fn unit_vectors(g: &SymGram) -> Result<Vec<Vec<BigInt>>> {
    require_positive_definite(g)?;
    let ldl = Ldl::new(&g.matrix().to_rational()).ok_or(Error::NotPositiveDefinite)?;
    let mut found = Vec::new();
    enumerate(&ldl, &None, Rational::one(), |x, value| {
        if value.is_one() {
            let v = sign_normalised(x);
            if v == x {
                found.push(v);
            }
        }
        None
    });
    found.sort();
    Ok(found)
}

/// True iff `g ≅ (n−1)⟨1⟩ ⊕ ⟨δ⟩`. Norm-one vectors of a positive-definite
/// integral lattice are pairwise orthogonal up to sign and span a unimodular
/// summand, so the form is extremal iff that summand has rank at least `n−1`.
pub fn is_extremal_form(g: &SymGram) -> Result<bool> {
    let units = unit_vectors(g)?;
    Ok(units.len() + 1 >= g.rank())
}

/// Residue class `residue + modulus·Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    pub residue: Rational,
    pub modulus: Rational,
}

impl CongruenceClass {
    fn new(value: Rational, modulus: Rational) -> Self {
        CongruenceClass { residue: rat_mod(&value, &modulus), modulus }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        rat_mod(x, &self.modulus) == self.residue
    }
}

/// Class of every characteristic square modulo `4/δ`: `σ−1+1/δ` (δ odd) or
/// `σ−1` (δ even). Definiteness is not required.
pub fn congruence_mod4(g: &SymGram) -> Result<CongruenceClass> {
    let sig = signature(g)?;
    let delta = g.delta();
    let mut value = Rational::from_integer(BigInt::from(sig.sigma() - 1));
    if delta.is_odd() {
        value += Rational::new(BigInt::one(), delta.clone());
    }
    Ok(CongruenceClass::new(value, Rational::new(BigInt::from(4), delta)))
}

/// Class of every characteristic square modulo `8/δ` for odd `δ`, computed
/// from the signature and the odd cyclic blocks of the linking pairing:
/// `σ − Σ_{A, k odd}(1−p) − Σ_{B, k odd}(5−p)`.
pub fn congruence_mod8(g: &SymGram) -> Result<CongruenceClass> {
    let delta = g.delta();
    if delta.is_even() {
        return Err(Error::pre("mod 8 congruence needs odd determinant"));
    }
    let sig = signature(g)?;
    let mut value = BigInt::from(sig.sigma());
    for block in decompose(g)? {
        if block.exponent % 2 == 0 {
            continue;
        }
        let p = BigInt::from(block.prime);
        match block.kind {
            BlockKind::A => value -= BigInt::one() - p,
            BlockKind::B => value -= BigInt::from(5) - p,
            other => {
                return Err(Error::Inconsistent(format!("unexpected {other:?} block at odd determinant")))
            }
        }
    }
    Ok(CongruenceClass::new(Rational::from_integer(value), Rational::new(BigInt::from(8), delta)))
}

/// For a negative-definite form: the largest characteristic square, obtained
/// by negating the form and minimizing.
pub fn max_characteristic(g: &SymGram) -> Result<Covector> {
    let pos = g.neg();
    let c = min_characteristic(&pos)?;
    Ok(Covector { coords: c.coords, square: -c.square })
}

/// The three quadratic problems behind the gluing lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SublemmaVariant {
    /// `F = k² + Σ₁³ (k sᵢ − lᵢ p)²`, `p ≡ 1 (4)`, target `F < 2p²`.
    Three,
    /// `F = k₁² + k₂² + Σ₁⁶ (k₁sᵢ + k₂tᵢ − lᵢq)²` with all `sᵢ` odd, `tᵢ` even,
    /// `q ≡ 3 (4)`, target `F < 4q²`.
    SixOdd,
    /// As [`SublemmaVariant::SixOdd`] but with `s₆ = 0`, `t₆` odd.
    SixWithZero,
}

impl SublemmaVariant {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(SublemmaVariant::Three),
            2 => Ok(SublemmaVariant::SixOdd),
            3 => Ok(SublemmaVariant::SixWithZero),
            _ => Err(Error::pre(format!("sublemma variant must be 1, 2 or 3, got {i}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublemmaWitness {
    /// `(k)` for the three-term problem, `(k₁, k₂)` otherwise.
    pub k: Vec<i64>,
    pub l: Vec<i64>,
    pub value: i128,
    pub target: i128,
}

/// Even multiple `l·m` of `m` closest to `r`, returning `(l, (r − l·m)²)`.
fn nearest_even_multiple(r: i128, m: i128) -> (i128, i128) {
    let two_m = 2 * m;
    let base = r.div_euclid(two_m) * 2;
    let mut best = (base, (r - base * m).pow(2));
    let alt = base + 2;
    let d = (r - alt * m).pow(2);
    if d < best.1 {
        best = (alt, d);
    }
    best
}

/// Odd values `2−p, 4−p, …, p−2`, ordered by absolute value, positive first.
fn odd_range(p: i64) -> Vec<i64> {
    let mut ks: Vec<i64> = (2 - p..=p - 2).step_by(2).collect();
    ks.sort_by_key(|&k| (k.abs(), k < 0));
    ks
}

/// Direct search for a witness to the sublemma inequality. Returns the witness
/// of minimal `F` (first in search order among ties).
pub fn sublemma_witness(variant: SublemmaVariant, prime: i64, s: &[i64], t: &[i64]) -> Result<SublemmaWitness> {
    if prime < 3 || !is_prime(prime as u64) {
        return Err(Error::pre(format!("{prime} is not an odd prime")));
    }
    let p = prime as i128;
    match variant {
        SublemmaVariant::Three => {
            if prime % 4 != 1 {
                return Err(Error::pre("three-term sublemma needs p ≡ 1 mod 4"));
            }
            if s.len() != 3 || s.iter().any(|&x| x % 2 == 0 || x.abs() > prime - 2) {
                return Err(Error::pre("s must be three odd entries with |sᵢ| ≤ p−2"));
            }
            if !t.is_empty() {
                return Err(Error::pre("three-term sublemma takes no t vector"));
            }
            let target = 2 * p * p;
            let mut best: Option<SublemmaWitness> = None;
            for k in odd_range(prime) {
                let kk = k as i128;
                let mut value = kk * kk;
                let mut l = Vec::with_capacity(3);
                for &si in s {
                    let (li, d) = nearest_even_multiple(kk * si as i128, p);
                    value += d;
                    l.push(li as i64);
                }
                if best.as_ref().is_none_or(|b| value < b.value) {
                    best = Some(SublemmaWitness { k: vec![k], l, value, target });
                }
            }
            finish(best, target)
        }
        SublemmaVariant::SixOdd | SublemmaVariant::SixWithZero => {
            if prime % 4 != 3 {
                return Err(Error::pre("six-term sublemmas need q ≡ 3 mod 4"));
            }
            if s.len() != 6 || t.len() != 6 {
                return Err(Error::pre("s and t must have six entries"));
            }
            if s.iter().chain(t).any(|&x| x.abs() > prime - 1) {
                return Err(Error::pre("entries must lie in [1−q, q−1]"));
            }
            let parity_ok = match variant {
                SublemmaVariant::SixOdd => s.iter().all(|x| x % 2 != 0) && t.iter().all(|x| x % 2 == 0),
                _ => {
                    s[..5].iter().all(|x| x % 2 != 0)
                        && s[5] == 0
                        && t[..5].iter().all(|x| x % 2 == 0)
                        && t[5] % 2 != 0
                }
            };
            if !parity_ok {
                return Err(Error::pre("s and t do not match the variant's parity pattern"));
            }
            let target = 4 * p * p;
            let ks = odd_range(prime);
            let mut best: Option<SublemmaWitness> = None;
            for &k1 in &ks {
                for &k2 in &ks {
                    let (a, b) = (k1 as i128, k2 as i128);
                    let mut value = a * a + b * b;
                    let mut l = Vec::with_capacity(6);
                    for i in 0..6 {
                        let (li, d) = nearest_even_multiple(a * s[i] as i128 + b * t[i] as i128, p);
                        value += d;
                        l.push(li as i64);
                    }
                    if best.as_ref().is_none_or(|w| value < w.value) {
                        best = Some(SublemmaWitness { k: vec![k1, k2], l, value, target });
                    }
                }
            }
            finish(best, target)
        }
    }
}

fn finish(best: Option<SublemmaWitness>, target: i128) -> Result<SublemmaWitness> {
    match best {
        Some(w) if w.value < target => Ok(w),
        Some(w) => Err(Error::SearchFailed(format!("smallest F found is {} ≥ {}", w.value, target))),
        None => Err(Error::SearchFailed("empty search range".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::lattices::{a2, e8};

    fn g(rows: &[&[i64]]) -> SymGram {
        SymGram::from_i64(rows).unwrap()
    }

    fn coords(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn parity() {
        assert_eq!(characteristic_parity(&a2()), vec![false, false]);
        assert_eq!(characteristic_parity(&SymGram::identity(3)), vec![true; 3]);
        assert_eq!(characteristic_parity(&SymGram::diagonal(&[1, 3])), vec![true, true]);
    }

    #[test]
    fn minimizers() {
        for d in [1i64, 3, 5, 7, 9, 15] {
            let c = min_characteristic(&SymGram::rank_one(d)).unwrap();
            assert_eq!(c.coords, coords(&[1]));
            assert_eq!(c.square, rat(1, d));
        }
        let c = min_characteristic(&a2()).unwrap();
        assert_eq!((c.coords, c.square), (coords(&[0, 0]), rat(0, 1)));
        let c = min_characteristic(&g(&[&[2, 1], &[1, 3]])).unwrap();
        assert_eq!((c.coords, c.square), (coords(&[0, 1]), rat(2, 5)));
        // ties at (1,1) and (1,-1): lexicographically smallest wins
        let c = min_characteristic(&SymGram::diagonal(&[1, 3])).unwrap();
        assert_eq!((c.coords, c.square), (coords(&[1, -1]), rat(4, 3)));
    }

    #[test]
    fn brute_force_examples() {
        let c = brute_force_min(&SymGram::diagonal(&[1, 3]), 5).unwrap();
        assert_eq!(c.square, rat(4, 3));
        assert_eq!(c.coords, coords(&[1, -1]));
        let c = brute_force_min(&SymGram::identity(2), 3).unwrap();
        assert_eq!(c.square, rat(2, 1));
        let c = brute_force_min(&e8(), 2).unwrap();
        assert_eq!(c.square, rat(0, 1));
        // scanned by hand: |cᵢ| ≤ 5 for [[2,1],[1,3]]
        let c = brute_force_min(&g(&[&[2, 1], &[1, 3]]), 5).unwrap();
        assert_eq!((c.coords, c.square), (coords(&[0, 1]), rat(2, 5)));
    }

    #[test]
    fn rejects_bad_forms() {
        assert_eq!(min_characteristic(&SymGram::diagonal(&[1, -1])), Err(Error::NotPositiveDefinite));
        assert_eq!(min_characteristic(&g(&[&[1, 1], &[1, 1]])), Err(Error::Degenerate));
        assert_eq!(min_characteristic(&SymGram::diagonal(&[-2, -3])), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn main_bound_examples() {
        let r = check_main_bound(&SymGram::diagonal(&[1, 1, 5])).unwrap();
        assert_eq!(r.min_square, rat(11, 5));
        assert_eq!(r.bound, rat(11, 5));
        assert!(r.is_extremal);
        let r = check_main_bound(&a2()).unwrap();
        assert_eq!((r.min_square.clone(), r.bound.clone()), (rat(0, 1), rat(4, 3)));
        assert!(!r.is_extremal);
        let r = check_main_bound(&e8()).unwrap();
        assert_eq!((r.min_square.clone(), r.bound.clone()), (rat(0, 1), rat(8, 1)));
        assert!(!r.is_extremal);
        // even determinant: bound n−1, attained by the extremal form
        let r = check_main_bound(&SymGram::diagonal(&[1, 1, 4])).unwrap();
        assert_eq!((r.min_square, r.bound), (rat(2, 1), rat(2, 1)));
        assert_eq!(r.delta_parity, Parity::Even);
    }

    #[test]
    fn extremality() {
        assert!(is_extremal_form(&SymGram::diagonal(&[1, 5])).unwrap());
        assert!(!is_extremal_form(&a2()).unwrap());
        assert!(!is_extremal_form(&g(&[&[2, 1], &[1, 3]])).unwrap());
        // Z² in a skew basis is still extremal
        assert!(is_extremal_form(&g(&[&[1, 1], &[1, 2]])).unwrap());
        assert!(is_extremal_form(&SymGram::rank_one(6)).unwrap());
        assert!(!is_extremal_form(&SymGram::diagonal(&[1, 2, 2])).unwrap());
    }

    #[test]
    fn congruences() {
        let c = congruence_mod4(&SymGram::rank_one(3)).unwrap();
        assert_eq!((c.residue.clone(), c.modulus.clone()), (rat(1, 3), rat(4, 3)));
        let c = congruence_mod4(&a2()).unwrap();
        assert_eq!(c.residue, rat(0, 1));
        let c = congruence_mod4(&SymGram::identity(2)).unwrap();
        assert_eq!((c.residue.clone(), c.modulus.clone()), (rat(2, 1), rat(4, 1)));
        // indefinite and negative forms are fine here
        let c = congruence_mod4(&SymGram::rank_one(-3)).unwrap();
        assert!(c.contains(&rat(-1, 3)));

        let c = congruence_mod8(&SymGram::rank_one(3)).unwrap();
        assert_eq!((c.residue.clone(), c.modulus.clone()), (rat(1, 3), rat(8, 3)));
        let c = congruence_mod8(&SymGram::rank_one(5)).unwrap();
        assert_eq!(c.residue, rat(1, 5));
        let c = congruence_mod8(&a2()).unwrap();
        assert_eq!(c.residue, rat(0, 1));
        assert!(congruence_mod8(&SymGram::rank_one(4)).is_err());
    }

    #[test]
    fn negated_form() {
        let q = g(&[&[2, 1], &[1, 3]]);
        let m = max_characteristic(&q.neg()).unwrap();
        assert_eq!(m.square, rat(-2, 5));
    }

    #[test]
    fn sublemma_examples() {
        let w = sublemma_witness(SublemmaVariant::Three, 5, &[1, 1, 1], &[]).unwrap();
        assert_eq!((w.k.clone(), w.l.clone(), w.value), (vec![1], vec![0, 0, 0], 4));
        let w = sublemma_witness(SublemmaVariant::Three, 13, &[11, -11, 3], &[]).unwrap();
        assert!(w.value < 338);
        let w = sublemma_witness(SublemmaVariant::SixOdd, 3, &[1; 6], &[0; 6]).unwrap();
        assert_eq!((w.k.clone(), w.l.clone(), w.value), (vec![1, 1], vec![0; 6], 8));
        assert!(sublemma_witness(SublemmaVariant::Three, 7, &[1, 1, 1], &[]).is_err());
        assert!(sublemma_witness(SublemmaVariant::SixOdd, 5, &[1; 6], &[0; 6]).is_err());
        assert!(sublemma_witness(SublemmaVariant::SixWithZero, 7, &[1, 1, 1, 1, 1, 0], &[0, 0, 0, 0, 0, 1]).is_ok());
    }

    #[test]
    fn covering_box_covers() {
        let q = g(&[&[2, 1], &[1, 3]]);
        assert_eq!(covering_box(&q, &rat(2, 5)), 2);
        assert_eq!(covering_box(&SymGram::identity(3), &rat(3, 1)), 2);
    }
}
