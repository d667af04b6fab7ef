//! The discriminant group `L'/L`, its linking pairing, orthogonal splitting
//! into A/B/E/F-type blocks, and Gauss sums.
//!
//! Elements of `L'` are written in dual coordinates (pairings with the basis),
//! so `L'/L = Zⁿ/QZⁿ` and `λ(x, y) = xᵀQ⁻¹y mod 1`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{dual_gram, rat_mod, signature, smith_normal_form, RatMatrix, Rational, SymGram};
use crate::numtheory::legendre;

pub const DEFAULT_GAUSS_CAP: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    /// Invariant factors `d₁ | d₂ | …`, all greater than one.
    pub orders: Vec<BigInt>,
    /// Dual coordinates of one generator per cyclic factor.
    pub generators: Vec<Vec<BigInt>>,
    coord_rows: Vec<Vec<BigInt>>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// Coordinates of `y` in `⊕ Z/dᵢ`.
    pub fn coordinates(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.coord_rows
            .iter()
            .zip(&self.orders)
            .map(|(row, d)| row.iter().zip(y).map(|(a, b)| a * b).sum::<BigInt>().mod_floor(d))
            .collect()
    }

    pub fn element(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let n = self.coord_rows.first().map_or(0, Vec::len);
        let mut out = vec![BigInt::zero(); n];
        for (c, g) in coords.iter().zip(&self.generators) {
            if c.is_zero() {
                continue;
            }
            for (o, gi) in out.iter_mut().zip(g) {
                *o += c * gi;
            }
        }
        out
    }

    /// Canonical representative of the class of `y`.
    pub fn reduce(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.element(&self.coordinates(y))
    }

    pub fn is_zero(&self, y: &[BigInt]) -> bool {
        self.coordinates(y).iter().all(Zero::is_zero)
    }

    pub fn order_of(&self, y: &[BigInt]) -> BigInt {
        self.coordinates(y)
            .iter()
            .zip(&self.orders)
            .fold(BigInt::one(), |acc, (c, d)| acc.lcm(&(d / c.gcd(d))))
    }
}

pub fn discriminant_group(g: &SymGram) -> Result<DiscriminantGroup> {
    if g.determinant().is_zero() {
        return Err(Error::Degenerate);
    }
    let snf = smith_normal_form(g.matrix());
    let u_inv = snf
        .u
        .to_rational()
        .inverse()
        .and_then(|m| m.to_integer())
        .ok_or_else(|| Error::Inconsistent("Smith transform is not unimodular".into()))?;
    let mut orders = Vec::new();
    let mut generators = Vec::new();
    let mut coord_rows = Vec::new();
    for (i, d) in snf.diagonal.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        orders.push(d.clone());
        generators.push((0..g.rank()).map(|r| u_inv[(r, i)].clone()).collect());
        coord_rows.push(snf.u.row(i).to_vec());
    }
    Ok(DiscriminantGroup { orders, generators, coord_rows })
}

fn one() -> Rational {
    Rational::one()
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

/// `xᵀQ⁻¹y mod 1`.
pub fn linking_value(g: &SymGram, x: &[BigInt], y: &[BigInt]) -> Result<Rational> {
    let inv = dual_gram(g)?;
    check_len(g, x)?;
    check_len(g, y)?;
    Ok(rat_mod(&inv.bilinear_int(x, y), &one()))
}

/// `xᵀQ⁻¹x mod 2`, well defined on `L'/L` when the lattice is even.
pub fn quadratic_value_even(g: &SymGram, x: &[BigInt]) -> Result<Rational> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    let inv = dual_gram(g)?;
    check_len(g, x)?;
    Ok(rat_mod(&inv.bilinear_int(x, x), &two()))
}

fn check_len(g: &SymGram, x: &[BigInt]) -> Result<()> {
    if x.len() != g.rank() {
        return Err(Error::Dimension(format!("vector of length {} for rank {}", x.len(), g.rank())));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BlockKind {
    A,
    B,
    Cyc2,
    E,
    F,
    Cyc2Pair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingBlock {
    pub kind: BlockKind,
    pub prime: u64,
    pub exponent: u32,
    /// Generator squares, mod 2 for even lattices and mod 1 otherwise.
    pub squares: Vec<Rational>,
    /// Cross pairing of the two generators of a rank-two block, mod 1.
    pub cross: Option<Rational>,
    pub generators: Vec<Vec<BigInt>>,
}

impl PairingBlock {
    pub fn generator_square(&self) -> &Rational {
        &self.squares[0]
    }

    pub fn order(&self) -> BigInt {
        BigInt::from(self.prime).pow(self.exponent * self.generators.len() as u32)
    }

    pub fn label(&self) -> String {
        let q = BigInt::from(self.prime).pow(self.exponent);
        match self.kind {
            BlockKind::A => format!("A{q}"),
            BlockKind::B => format!("B{q}"),
            BlockKind::E => format!("E{q}"),
            BlockKind::F => format!("F{q}"),
            BlockKind::Cyc2 => format!("Z/{q}[{}]", crate::exact::rat_to_string(&self.squares[0])),
            BlockKind::Cyc2Pair => format!("(Z/{q})^2"),
        }
    }

    fn sort_key(&self) -> (u64, u32, BlockKind) {
        (self.prime, self.exponent, self.kind)
    }
}

/// A or B by the residue class of `p^k·gsq` modulo `p`.
pub fn classify_odd_cyclic(p: u64, k: u32, gsq: &Rational) -> Result<BlockKind> {
    if p % 2 == 0 {
        return Err(Error::pre("classification needs an odd prime"));
    }
    let q = BigInt::from(p).pow(k);
    let r = rat_mod(gsq, &one());
    if r.denom() != &q {
        return Err(Error::pre(format!(
            "generator square {} does not have denominator {q}",
            crate::exact::rat_to_string(gsq)
        )));
    }
    let num = r.numer().mod_floor(&BigInt::from(p)).to_i128().unwrap_or(0);
    Ok(if legendre(num, p) == 1 { BlockKind::A } else { BlockKind::B })
}

struct Ctx<'a> {
    inv: RatMatrix,
    group: &'a DiscriminantGroup,
    modulus: Rational,
}

impl Ctx<'_> {
    fn pair(&self, x: &[BigInt], y: &[BigInt]) -> Rational {
        self.inv.bilinear_int(x, y)
    }

    /// `p^k · xᵀQ⁻¹y`, integral whenever one argument has order dividing `p^k`.
    fn scaled(&self, pk: &BigInt, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let v = self.pair(x, y) * Rational::from_integer(pk.clone());
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    fn square(&self, x: &[BigInt]) -> Rational {
        rat_mod(&self.pair(x, x), &self.modulus)
    }

    fn exponent(&self, p: u64, y: &[BigInt]) -> u32 {
        let mut o = self.group.order_of(y);
        let mut k = 0;
        let pb = BigInt::from(p);
        while o > BigInt::one() {
            o /= &pb;
            k += 1;
        }
        k
    }
}

fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(xi, yi)| a * xi + b * yi).collect()
}

fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Orthogonal block decomposition of the linking pairing, in canonical
/// `(prime, exponent, kind)` order.
pub fn decompose(g: &SymGram) -> Result<Vec<PairingBlock>> {
    let group = discriminant_group(g)?;
    let ctx = Ctx {
        inv: dual_gram(g)?,
        group: &group,
        modulus: if g.is_even() { two() } else { one() },
    };
    let delta = g.delta();
    let mut primes: Vec<u64> = Vec::new();
    for d in &group.orders {
        let fs = crate::numtheory::factorize(d)?;
        for (p, _) in fs {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    primes.sort_unstable();

    let mut blocks = Vec::new();
    for &p in &primes {
        let pb = BigInt::from(p);
        let mut elems: Vec<(Vec<BigInt>, u32)> = Vec::new();
        for (gen, d) in group.generators.iter().zip(&group.orders) {
            let mut rest = d.clone();
            let mut k = 0u32;
            while rest.is_multiple_of(&pb) {
                rest /= &pb;
                k += 1;
            }
            if k > 0 {
                let x: Vec<BigInt> = gen.iter().map(|c| c * &rest).collect();
                elems.push((group.reduce(&x), k));
            }
        }
        if p == 2 {
            split_two(&ctx, elems, &mut blocks)?;
        } else {
            split_odd(&ctx, p, elems, &mut blocks)?;
        }
    }

    // internal consistency: total order and pairwise orthogonality
    let total: BigInt = blocks.iter().map(PairingBlock::order).product();
    if total != delta {
        return Err(Error::Inconsistent(format!("blocks have total order {total}, expected {delta}")));
    }
    let gens: Vec<(usize, &Vec<BigInt>)> =
        blocks.iter().enumerate().flat_map(|(i, b)| b.generators.iter().map(move |x| (i, x))).collect();
    for (a, (ia, x)) in gens.iter().enumerate() {
        for (ib, y) in gens.iter().skip(a + 1) {
            if ia != ib && !ctx.pair(x, y).is_integer() {
                return Err(Error::Inconsistent("decomposition blocks are not orthogonal".into()));
            }
        }
    }

    blocks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(blocks)
}

/// Subtract from every remaining element its projection onto the span of
/// `basis`, given the inverse of the (scaled) pairing matrix mod `p^K`.
fn project_out(ctx: &Ctx, p: u64, pk: &BigInt, basis: &[Vec<BigInt>], minv: &[Vec<BigInt>], elems: &mut Vec<(Vec<BigInt>, u32)>) {
    for (y, k) in elems.iter_mut() {
        let r: Vec<BigInt> = basis.iter().map(|x| ctx.scaled(pk, y, x)).collect();
        let mut out = y.clone();
        for (j, x) in basis.iter().enumerate() {
            let c: BigInt = (0..basis.len()).map(|i| &r[i] * &minv[i][j]).sum::<BigInt>().mod_floor(pk);
            if c.is_zero() {
                continue;
            }
            for (o, xi) in out.iter_mut().zip(x) {
                *o -= &c * xi;
            }
        }
        *y = ctx.group.reduce(&out);
        *k = ctx.exponent(p, y);
    }
    elems.retain(|(_, k)| *k > 0);
}

fn top_exponent(elems: &[(Vec<BigInt>, u32)]) -> u32 {
    elems.iter().map(|e| e.1).max().unwrap_or(0)
}

fn split_odd(ctx: &Ctx, p: u64, mut elems: Vec<(Vec<BigInt>, u32)>, out: &mut Vec<PairingBlock>) -> Result<()> {
    let pb = BigInt::from(p);
    let mut mine: Vec<PairingBlock> = Vec::new();
    while !elems.is_empty() {
        let k = top_exponent(&elems);
        let pk = pb.pow(k);
        let unit = |v: &BigInt| !v.is_multiple_of(&pb);
        let top: Vec<usize> = (0..elems.len()).filter(|&i| elems[i].1 == k).collect();
        let idx = match top.iter().copied().find(|&i| unit(&ctx.scaled(&pk, &elems[i].0, &elems[i].0))) {
            Some(i) => i,
            None => {
                let (i, j) = top
                    .iter()
                    .flat_map(|&i| top.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i < j && unit(&ctx.scaled(&pk, &elems[i].0, &elems[j].0)))
                    .ok_or_else(|| Error::Inconsistent(format!("degenerate {p}-primary pairing")))?;
                let sum = combine(&BigInt::one(), &elems[i].0, &BigInt::one(), &elems[j].0);
                elems[i].0 = ctx.group.reduce(&sum);
                i
            }
        };
        let (x, _) = elems.remove(idx);
        let u = ctx.scaled(&pk, &x, &x);
        let uinv = mod_inv(&u, &pk).expect("unit");
        project_out(ctx, p, &pk, std::slice::from_ref(&x), &[vec![uinv]], &mut elems);
        let sq = ctx.square(&x);
        let kind = classify_odd_cyclic(p, k, &rat_mod(&sq, &one()))?;
        mine.push(PairingBlock { kind, prime: p, exponent: k, squares: vec![sq], cross: None, generators: vec![x] });
    }
    normalise_nonresidue_pairs(ctx, p, &mut mine)?;
    out.extend(mine);
    Ok(())
}

/// Rewrite `B ⊕ B` at equal exponent as `A ⊕ A` so that each `(p, k)` carries
/// at most one B block.
fn normalise_nonresidue_pairs(ctx: &Ctx, p: u64, blocks: &mut [PairingBlock]) -> Result<()> {
    let pb = BigInt::from(p);
    loop {
        let mut found = None;
        'search: for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks[i].kind == BlockKind::B && blocks[j].kind == BlockKind::B && blocks[i].exponent == blocks[j].exponent {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = found else { return Ok(()) };
        let k = blocks[i].exponent;
        let pk = pb.pow(k);
        let (x, y) = (blocks[i].generators[0].clone(), blocks[j].generators[0].clone());
        let u1 = ctx.scaled(&pk, &x, &x).mod_floor(&pb);
        let u2 = ctx.scaled(&pk, &y, &y).mod_floor(&pb);
        // α²u₁ + β²u₂ ≡ 1 (mod p)
        let (alpha, beta) = (0..p)
            .flat_map(|a| (0..p).map(move |b| (BigInt::from(a), BigInt::from(b))))
            .find(|(a, b)| (a * a * &u1 + b * b * &u2).mod_floor(&pb).is_one())
            .ok_or_else(|| Error::Inconsistent("binary form misses 1".into()))?;
        let nx = ctx.group.reduce(&combine(&alpha, &x, &beta, &y));
        let ny = ctx.group.reduce(&combine(&(-&beta * &u2), &x, &(&alpha * &u1), &y));
        for (slot, v) in [(i, nx), (j, ny)] {
            let sq = ctx.square(&v);
            blocks[slot].kind = classify_odd_cyclic(p, k, &rat_mod(&sq, &one()))?;
            blocks[slot].squares = vec![sq];
            blocks[slot].generators = vec![v];
        }
        if blocks[i].kind != BlockKind::A || blocks[j].kind != BlockKind::A {
            return Err(Error::Inconsistent("nonresidue pair did not normalise".into()));
        }
    }
}

fn split_two(ctx: &Ctx, mut elems: Vec<(Vec<BigInt>, u32)>, out: &mut Vec<PairingBlock>) -> Result<()> {
    let two_b = BigInt::from(2);
    while !elems.is_empty() {
        let k = top_exponent(&elems);
        let pk = two_b.pow(k);
        let top: Vec<usize> = (0..elems.len()).filter(|&i| elems[i].1 == k).collect();
        if let Some(i) = top.iter().copied().find(|&i| ctx.scaled(&pk, &elems[i].0, &elems[i].0).is_odd()) {
            let (x, _) = elems.remove(i);
            let uinv = mod_inv(&ctx.scaled(&pk, &x, &x), &pk).expect("odd");
            project_out(ctx, 2, &pk, std::slice::from_ref(&x), &[vec![uinv]], &mut elems);
            out.push(PairingBlock {
                kind: BlockKind::Cyc2,
                prime: 2,
                exponent: k,
                squares: vec![ctx.square(&x)],
                cross: None,
                generators: vec![x],
            });
            continue;
        }
        let (i, j) = top
            .iter()
            .flat_map(|&i| top.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && ctx.scaled(&pk, &elems[i].0, &elems[j].0).is_odd())
            .ok_or_else(|| Error::Inconsistent("degenerate 2-primary pairing".into()))?;
        let y = elems.remove(j).0;
        let x = elems.remove(i).0;
        let m = [
            [ctx.scaled(&pk, &x, &x), ctx.scaled(&pk, &x, &y)],
            [ctx.scaled(&pk, &y, &x), ctx.scaled(&pk, &y, &y)],
        ];
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let dinv = mod_inv(&det, &pk).expect("odd determinant");
        let minv = vec![
            vec![(&m[1][1] * &dinv).mod_floor(&pk), (-&m[0][1] * &dinv).mod_floor(&pk)],
            vec![(-&m[1][0] * &dinv).mod_floor(&pk), (&m[0][0] * &dinv).mod_floor(&pk)],
        ];
        project_out(ctx, 2, &pk, &[x.clone(), y.clone()], &minv, &mut elems);
        out.push(label_pair(ctx, k, x, y));
    }
    Ok(())
}

const PAIR_SEARCH_MAX_EXPONENT: u32 = 6;

/// Look for generators realising the E or F normal form; fall back to the raw pair.
fn label_pair(ctx: &Ctx, k: u32, x: Vec<BigInt>, y: Vec<BigInt>) -> PairingBlock {
    let pk = BigInt::from(2).pow(k);
    let raw = |kind, x: Vec<BigInt>, y: Vec<BigInt>| PairingBlock {
        kind,
        prime: 2,
        exponent: k,
        squares: vec![ctx.square(&x), ctx.square(&y)],
        cross: Some(rat_mod(&ctx.pair(&x, &y), &one())),
        generators: vec![x, y],
    };
    if k > PAIR_SEARCH_MAX_EXPONENT {
        return raw(BlockKind::Cyc2Pair, x, y);
    }
    let size = 1i64 << k;
    // values scaled by 2^k: squares mod 2^k·modulus, pairings mod 2^k
    let sq_mod = &pk * ctx.modulus.to_integer();
    let xx = ctx.scaled(&pk, &x, &x);
    let xy = ctx.scaled(&pk, &x, &y);
    let yy = ctx.scaled(&pk, &y, &y);
    let sq = |a: i64, b: i64| -> BigInt {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        (&a * &a * &xx + BigInt::from(2) * &a * &b * &xy + &b * &b * &yy).mod_floor(&sq_mod)
    };
    let cross = |a: i64, b: i64, c: i64, d: i64| -> BigInt {
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        (&a * &c * &xx + (&a * &d + &b * &c) * &xy + &b * &d * &yy).mod_floor(&pk)
    };
    let coeffs: Vec<(i64, i64)> = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).filter(|&(a, b)| a % 2 == 1 || b % 2 == 1).collect();
    for (kind, target) in [(BlockKind::E, BigInt::zero()), (BlockKind::F, BigInt::from(2).mod_floor(&sq_mod))] {
        let hits: Vec<(i64, i64)> = coeffs.iter().copied().filter(|&(a, b)| sq(a, b) == target).collect();
        for &(a, b) in &hits {
            if let Some(&(c, d)) = hits.iter().find(|&&(c, d)| cross(a, b, c, d).is_one()) {
                let nx = ctx.group.reduce(&combine(&BigInt::from(a), &x, &BigInt::from(b), &y));
                let ny = ctx.group.reduce(&combine(&BigInt::from(c), &x, &BigInt::from(d), &y));
                return raw(kind, nx, ny);
            }
        }
    }
    raw(BlockKind::Cyc2Pair, x, y)
}

/// Multiset comparison key, ignoring generator choices.
pub fn block_signature(blocks: &[PairingBlock]) -> Vec<(u64, u32, BlockKind)> {
    let mut v: Vec<_> = blocks.iter().map(PairingBlock::sort_key).collect();
    v.sort();
    v
}

/// Canonical form of a block-label multiset at odd primes: `B ⊕ B` pairs at
/// the same `(p, k)` are rewritten as `A ⊕ A`.
pub fn normalise_signature(mut labels: Vec<(u64, u32, BlockKind)>) -> Vec<(u64, u32, BlockKind)> {
    labels.sort();
    let mut out: Vec<(u64, u32, BlockKind)> = Vec::new();
    let mut i = 0;
    while i < labels.len() {
        let (p, k, _) = labels[i];
        let mut j = i;
        while j < labels.len() && labels[j].0 == p && labels[j].1 == k {
            j += 1;
        }
        let group = &labels[i..j];
        if p == 2 {
            out.extend_from_slice(group);
        } else {
            let bs = group.iter().filter(|l| l.2 == BlockKind::B).count();
            let n = group.len();
            let b_left = bs % 2;
            out.extend(std::iter::repeat((p, k, BlockKind::A)).take(n - b_left));
            out.extend(std::iter::repeat((p, k, BlockKind::B)).take(b_left));
        }
        i = j;
    }
    out
}

#[derive(Clone, Debug)]
pub struct GaussSum {
    pub value: Complex64,
    pub expected: Complex64,
    pub deviation: f64,
    pub milgram_ok: bool,
    pub group_order: BigInt,
    pub sigma: i64,
}

pub const MILGRAM_TOLERANCE: f64 = 1e-9;

/// `(1/√δ) Σ_{u ∈ L'/L} e^{iπu²}` against `e^{2πiσ/8}`.
pub fn gauss_sum_milgram(g: &SymGram, cap: u64) -> Result<GaussSum> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    let group = discriminant_group(g)?;
    let order = group.order();
    if order > BigInt::from(cap) {
        return Err(Error::CapExceeded { size: order.to_string(), cap });
    }
    let inv = dual_gram(g)?;
    let delta = order.to_i128().expect("bounded by cap");
    let r = group.generators.len();
    let scale = Rational::from_integer(BigInt::from(delta));
    // numerators over δ: squares mod 2δ, cross terms mod δ
    let mut num = vec![vec![0i128; r]; r];
    for i in 0..r {
        for j in 0..r {
            let v = inv.bilinear_int(&group.generators[i], &group.generators[j]) * &scale;
            let m = if i == j { 2 * delta } else { delta };
            num[i][j] = v.to_integer().mod_floor(&BigInt::from(m)).to_i128().unwrap();
        }
    }
    let dims: Vec<i128> = group.orders.iter().map(|d| d.to_i128().unwrap()).collect();
    let period = 2 * delta;
    let table: Vec<Complex64> = (0..period).map(|k| Complex64::from_polar(1.0, PI * k as f64 / delta as f64)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    let mut c = vec![0i128; r];
    loop {
        let mut n = 0i128;
        for i in 0..r {
            if c[i] == 0 {
                continue;
            }
            n += c[i] * c[i] % period * num[i][i];
            for j in i + 1..r {
                n += 2 * (c[i] * c[j] % period) * num[i][j];
            }
            n %= period;
        }
        total += table[n.rem_euclid(period) as usize];
        let mut idx = 0;
        loop {
            if idx == r {
                break;
            }
            c[idx] += 1;
            if c[idx] < dims[idx] {
                break;
            }
            c[idx] = 0;
            idx += 1;
        }
        if idx == r {
            break;
        }
    }
    let value = total / (delta as f64).sqrt();
    let sigma = signature(g)?.sigma();
    let expected = Complex64::from_polar(1.0, 2.0 * PI * sigma as f64 / 8.0);
    let deviation = (value - expected).norm();
    Ok(GaussSum { value, expected, deviation, milgram_ok: deviation < MILGRAM_TOLERANCE, group_order: order, sigma })
}
