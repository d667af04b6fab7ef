//! Overlattices by adjoining glue vectors, and the three-stage chain that
//! embeds `L⁴` in a unimodular quaternionic lattice.
//!
//! Every lattice here is stored by a basis in the rational span of a fixed
//! ambient lattice (`L`, `L²` or `L⁴` in its original coordinates), kept in
//! Hermite normal form after each enlargement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{hermite_row_lattice, IntMatrix, RatMatrix, Rational, SymGram};
use crate::linking::{decompose, PairingBlock};
use crate::numtheory::{factorize, legendre, smallest_nonresidue, sqrt_mod_prime};

#[derive(Clone, Debug)]
pub struct Overlattice {
    pub gram: SymGram,
    /// Basis rows in ambient coordinates.
    pub basis: RatMatrix,
    /// Index of the ambient lattice in this one.
    pub index: BigInt,
    ambient: SymGram,
}

fn rint(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

impl Overlattice {
    pub fn trivial(g: &SymGram) -> Self {
        Overlattice {
            gram: g.clone(),
            basis: RatMatrix::identity(g.rank()),
            index: BigInt::one(),
            ambient: g.clone(),
        }
    }

    fn from_basis(ambient: &SymGram, basis: RatMatrix) -> Result<Self> {
        let gram = ambient.transform_rational(&basis)?;
        let det = basis.determinant();
        if det.is_zero() {
            return Err(Error::RankDeficient);
        }
        let inv = (Rational::one() / det).abs();
        if !inv.is_integer() {
            return Err(Error::Inconsistent("overlattice does not contain the ambient lattice".into()));
        }
        Ok(Overlattice { gram, basis, index: inv.to_integer(), ambient: ambient.clone() })
    }

    pub fn ambient(&self) -> &SymGram {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    /// Ambient vector of the dual element with pairings `c` against the basis.
    pub fn ambient_from_dual(&self, c: &[BigInt]) -> Result<Vec<Rational>> {
        let inv = crate::exact::dual_gram(&self.gram)?;
        let a = inv.vec_mul(&c.iter().map(rint).collect::<Vec<_>>());
        Ok(self.basis.vec_mul(&a))
    }

    /// Basis coordinates of an ambient vector.
    pub fn coordinates(&self, w: &[Rational]) -> Vec<Rational> {
        let inv = self.basis.inverse().expect("basis is invertible");
        inv.vec_mul(w)
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        self.coordinates(w).iter().all(Rational::is_integer)
    }

    /// Pairings of `w` with the basis.
    pub fn pairings(&self, w: &[Rational]) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.ambient.pair_rational(self.basis.row(i), w)).collect()
    }

    /// Adjoin `w` (ambient coordinates), which must have integral square and
    /// pairings, satisfy `p·w ∈ M` and lie outside `M`.
    pub fn adjoin_ambient(&self, w: &[Rational], p: u64) -> Result<Overlattice> {
        if w.len() != self.ambient.rank() {
            return Err(Error::Dimension(format!("glue vector of length {} in rank {}", w.len(), self.ambient.rank())));
        }
        let sq = self.ambient.norm_rational(w);
        if !sq.is_integer() {
            return Err(Error::NotIntegral(format!("glue vector square {}", crate::exact::rat_to_string(&sq))));
        }
        if !self.pairings(w).iter().all(Rational::is_integer) {
            return Err(Error::NotIntegral("glue vector is not in the dual lattice".into()));
        }
        let pw: Vec<Rational> = w.iter().map(|x| x * rint(&BigInt::from(p))).collect();
        if !self.contains(&pw) {
            return Err(Error::pre(format!("{p} times the glue vector is not in the lattice")));
        }
        if self.contains(w) {
            return Err(Error::pre("glue vector already lies in the lattice"));
        }
        let mut rows = self.basis.to_rows();
        rows.push(w.to_vec());
        let den = rows.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| (x * rint(&den)).to_integer()).collect()).collect();
        let hnf = hermite_row_lattice(&IntMatrix::from_rows(&scaled)?)?;
        let basis = RatMatrix::from_rows(
            hnf.to_rows().iter().map(|r| r.iter().map(|x| Rational::new(x.clone(), den.clone())).collect()).collect(),
        );
        let next = Overlattice::from_basis(&self.ambient, basis)?;
        let pp = BigInt::from(p);
        if next.index != &self.index * &pp || next.gram.delta() * &pp * &pp != self.gram.delta() {
            return Err(Error::Inconsistent(format!("adjoining did not have index {p}")));
        }
        Ok(next)
    }

    pub fn adjoin_dual(&self, c: &[BigInt], p: u64) -> Result<Overlattice> {
        let w = self.ambient_from_dual(c)?;
        self.adjoin_ambient(&w, p)
    }

    /// True iff `w ↦ w·a` (ambient coordinates) maps the lattice into itself.
    pub fn preserved_by(&self, a: &RatMatrix) -> bool {
        (0..self.rank()).all(|i| {
            let img = a.vec_mul(self.basis.row(i));
            self.contains(&img)
        })
    }

    /// Matrix of an ambient action in this lattice's basis (row convention).
    pub fn transport(&self, a: &RatMatrix) -> RatMatrix {
        let inv = self.basis.inverse().expect("basis is invertible");
        self.basis.mul(a).mul(&inv)
    }
}

/// Index-`p` overlattice of `g` spanned by `g` and the dual vector `v`.
pub fn adjoin(g: &SymGram, v: &[BigInt], p: u64) -> Result<Overlattice> {
    Overlattice::trivial(g).adjoin_dual(v, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueStep {
    pub prime: u64,
    /// `p` for single glue vectors, `q²` for the paired quaternionic steps.
    pub index: u64,
    /// Glue vectors in ambient coordinates.
    pub vectors: Vec<Vec<Rational>>,
    /// Gram matrix of the lattice after the step.
    pub gram: SymGram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueChain {
    pub stage: u8,
    pub steps: Vec<GlueStep>,
}

impl GlueChain {
    fn new(stage: u8) -> Self {
        GlueChain { stage, steps: Vec::new() }
    }
}

fn scale(v: &[Rational], c: i64) -> Vec<Rational> {
    let c = Rational::from_integer(BigInt::from(c));
    v.iter().map(|x| x * &c).collect()
}

fn concat(parts: &[&[Rational]]) -> Vec<Rational> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// Choose the next stage-one glue vector (dual coordinates) and its prime:
/// the 2-part first, then odd primes in increasing order.
fn stage_one_candidate(blocks: &[PairingBlock]) -> Option<(Vec<BigInt>, u64)> {
    let shrink = |b: &PairingBlock| -> Vec<BigInt> {
        let f = BigInt::from(b.prime).pow(b.exponent - 1);
        b.generators[0].iter().map(|c| c * &f).collect()
    };
    let (two, odd): (Vec<&PairingBlock>, Vec<&PairingBlock>) = blocks.iter().partition(|b| b.prime == 2);
    for b in &two {
        if b.generators.len() == 2 || b.exponent > 1 {
            return Some((shrink(b), 2));
        }
    }
    if two.len() >= 2 {
        let x = two[0].generators[0].iter().zip(&two[1].generators[0]).map(|(a, b)| a + b).collect();
        return Some((x, 2));
    }
    odd.iter().find(|b| b.exponent > 1).map(|b| (shrink(b), b.prime))
}

/// Stage one: enlarge `L` until its linking pairing has only prime-order
/// cyclic summands (and determinant odd or twice odd).
pub fn chain_prime_linking(g: &SymGram) -> Result<(Overlattice, GlueChain)> {
    let mut cur = Overlattice::trivial(g);
    let mut chain = GlueChain::new(1);
    loop {
        let blocks = decompose(&cur.gram)?;
        let Some((v, p)) = stage_one_candidate(&blocks) else { break };
        let w = cur.ambient_from_dual(&v)?;
        cur = cur.adjoin_ambient(&w, p)?;
        chain.steps.push(GlueStep { prime: p, index: p, vectors: vec![w], gram: cur.gram.clone() });
    }
    Ok((cur, chain))
}

/// Smallest nonnegative `a` with `a² ≡ −1 (mod p)`.
pub fn sqrt_minus_one(p: u64) -> Result<u64> {
    if p == 2 {
        return Ok(1);
    }
    if p % 4 != 1 || !crate::numtheory::is_prime(p) {
        return Err(Error::pre(format!("−1 is not a square modulo {p}")));
    }
    sqrt_mod_prime(-1, p).ok_or_else(|| Error::Inconsistent("Tonelli–Shanks failed".into()))
}

/// `(a, b)` with `a² ≡ m−1`, `b² ≡ −m`, `m` the least nonresidue, so that
/// `a² + b² ≡ −1 (mod q)`.
pub fn sum_two_squares_neg_one(q: u64) -> Result<(u64, u64)> {
    if q % 4 != 3 || !crate::numtheory::is_prime(q) {
        return Err(Error::pre(format!("{q} is not a prime congruent to 3 mod 4")));
    }
    let m = smallest_nonresidue(q);
    let a = sqrt_mod_prime(m as i128 - 1, q).ok_or_else(|| Error::Inconsistent("m−1 is not a residue".into()))?;
    let b = sqrt_mod_prime(-(m as i128), q).ok_or_else(|| Error::Inconsistent("−m is not a residue".into()))?;
    Ok((a, b))
}

/// Ambient action matrices (row convention) of `𝐢` on `L²` and of `𝐢`, `𝐣` on `L⁴`.
fn block_action(n: usize, slots: usize, map: &[(usize, usize, i64)]) -> RatMatrix {
    let mut a = RatMatrix::zeros(n * slots, n * slots);
    for &(src, dst, sign) in map {
        for k in 0..n {
            a[(src * n + k, dst * n + k)] = Rational::from_integer(BigInt::from(sign));
        }
    }
    a
}

pub fn complex_i(n: usize) -> RatMatrix {
    // (x, y) ↦ (−y, x)
    block_action(n, 2, &[(1, 0, -1), (0, 1, 1)])
}

pub fn quaternion_i(n: usize) -> RatMatrix {
    // (x, y, z, w) ↦ (−y, x, −w, z)
    block_action(n, 4, &[(1, 0, -1), (0, 1, 1), (3, 2, -1), (2, 3, 1)])
}

pub fn quaternion_j(n: usize) -> RatMatrix {
    // (x, y, z, w) ↦ (−z, w, x, −y)
    block_action(n, 4, &[(2, 0, -1), (3, 1, 1), (0, 2, 1), (1, 3, -1)])
}

/// A stage-two lattice together with the q-blocks (`q ≡ 3 mod 4`) of the
/// stage-one lattice still waiting to be glued.
#[derive(Clone, Debug)]
pub struct ComplexLattice {
    pub lattice: Overlattice,
    pub chain: GlueChain,
    /// `(q, x)`: a generator of a `Z/q` summand, in ambient `L` coordinates.
    pub pending: Vec<(u64, Vec<Rational>)>,
}

fn doubled(l: &Overlattice) -> Result<Overlattice> {
    let ambient = SymGram::direct_sum(&[l.ambient(), l.ambient()]);
    let basis = RatMatrix::direct_sum(&[&l.basis, &l.basis]);
    Overlattice::from_basis(&ambient, basis)
}

/// Stage two: glue `L_{m₁} ⊕ L_{m₁}` along `(x, ax)` at `p = 2` and at primes
/// `p ≡ 1 (mod 4)`, keeping the lattice stable under `𝐢`.
pub fn complex_glue(l: &Overlattice) -> Result<ComplexLattice> {
    let n = l.ambient().rank();
    let blocks = decompose(&l.gram)?;
    let mut cur = doubled(l)?;
    let i_act = complex_i(n);
    let mut chain = GlueChain::new(2);
    let mut pending = Vec::new();
    for b in &blocks {
        if b.exponent != 1 || b.generators.len() != 1 {
            return Err(Error::pre("complex gluing needs prime-order cyclic summands"));
        }
        let x = l.ambient_from_dual(&b.generators[0])?;
        if b.prime % 4 == 3 {
            pending.push((b.prime, x));
            continue;
        }
        let a = sqrt_minus_one(b.prime)? as i64;
        let v = concat(&[&x, &scale(&x, a)]);
        let iv = i_act.vec_mul(&v);
        let check: Vec<Rational> = iv.iter().zip(&v).map(|(s, t)| s + t * Rational::from_integer(BigInt::from(a))).collect();
        if !cur.contains(&check) {
            return Err(Error::Inconsistent("𝐢v + av is not in the lattice".into()));
        }
        cur = cur.adjoin_ambient(&v, b.prime)?;
        if !cur.preserved_by(&i_act) {
            return Err(Error::Inconsistent("complex gluing broke the 𝐢-action".into()));
        }
        chain.steps.push(GlueStep { prime: b.prime, index: b.prime, vectors: vec![v], gram: cur.gram.clone() });
    }
    Ok(ComplexLattice { lattice: cur, chain, pending })
}

/// `M ⊕ σ(M)` with `σ(y₁, y₂) = (y₁, −y₂)`, which is stable under `𝐢` and `𝐣`.
fn quaternionic_double(m: &Overlattice) -> Result<Overlattice> {
    let n2 = m.ambient().rank();
    let n = n2 / 2;
    let ambient = SymGram::direct_sum(&[m.ambient(), m.ambient()]);
    let mut basis = RatMatrix::zeros(2 * n2, 2 * n2);
    for r in 0..n2 {
        for c in 0..n2 {
            let v = m.basis[(r, c)].clone();
            basis[(r, c)] = v.clone();
            basis[(n2 + r, n2 + c)] = if c < n { v } else { -v };
        }
    }
    Overlattice::from_basis(&ambient, basis)
}

/// Stage three: glue `N₀ = M ⊕ σ(M)` along `v₁ = (x, 0, ax, bx)` and
/// `v₂ = 𝐢v₁` for each pending `Z/q` summand.
pub fn quaternionic_glue(c: &ComplexLattice) -> Result<(Overlattice, GlueChain)> {
    let n = c.lattice.ambient().rank() / 2;
    let mut cur = quaternionic_double(&c.lattice)?;
    let (i_act, j_act) = (quaternion_i(n), quaternion_j(n));
    if !cur.preserved_by(&i_act) || !cur.preserved_by(&j_act) {
        return Err(Error::Inconsistent("N₀ is not quaternionic".into()));
    }
    let mut chain = GlueChain::new(3);
    let zero = vec![Rational::zero(); n];
    for (q, x) in &c.pending {
        let (a, b) = sum_two_squares_neg_one(*q)?;
        let (a, b) = (a as i64, b as i64);
        let v1 = concat(&[x, &zero, &scale(x, a), &scale(x, b)]);
        let v2 = i_act.vec_mul(&v1);
        let jv1 = j_act.vec_mul(&v1);
        let rel: Vec<Rational> = (0..4 * n)
            .map(|k| &jv1[k] + &v1[k] * Rational::from_integer(BigInt::from(a)) - &v2[k] * Rational::from_integer(BigInt::from(b)))
            .collect();
        if !cur.contains(&rel) {
            return Err(Error::Inconsistent("𝐣v₁ + av₁ − bv₂ is not in the lattice".into()));
        }
        cur = cur.adjoin_ambient(&v1, *q)?.adjoin_ambient(&v2, *q)?;
        if !cur.preserved_by(&i_act) || !cur.preserved_by(&j_act) {
            return Err(Error::Inconsistent("quaternionic gluing broke the action".into()));
        }
        chain.steps.push(GlueStep { prime: *q, index: q * q, vectors: vec![v1, v2], gram: cur.gram.clone() });
    }
    Ok((cur, chain))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionAction {
    pub i: RatMatrix,
    pub j: RatMatrix,
}

impl QuaternionAction {
    /// The coordinate action on `L⁴` for `L` of rank `n`.
    pub fn standard(n: usize) -> Self {
        QuaternionAction { i: quaternion_i(n), j: quaternion_j(n) }
    }
}

/// `𝐢`, `𝐣` (in the lattice basis, row convention) are integral isometries
/// with `𝐢² = 𝐣² = −1` and `𝐢𝐣 = −𝐣𝐢`.
pub fn verify_quaternionic(u: &SymGram, action: &QuaternionAction) -> Result<bool> {
    let r = u.rank();
    if r % 4 != 0 {
        return Err(Error::pre(format!("rank {r} is not divisible by 4")));
    }
    let (i, j) = (&action.i, &action.j);
    if i.rows() != r || i.cols() != r || j.rows() != r || j.cols() != r {
        return Err(Error::Dimension("action matrices do not match the rank".into()));
    }
    let minus = RatMatrix::identity(r).scale(&-Rational::one());
    let g = u.matrix().to_rational();
    let isometry = |m: &RatMatrix| m.mul(&g).mul(&m.transpose()) == g;
    Ok(i.is_integral()
        && j.is_integral()
        && i.mul(i) == minus
        && j.mul(j) == minus
        && i.mul(j) == j.mul(i).scale(&-Rational::one())
        && isometry(i)
        && isometry(j))
}

#[derive(Clone, Debug)]
pub struct FourCopies {
    pub unimodular: Overlattice,
    pub action: QuaternionAction,
    /// `[U : L⁴]`.
    pub index: BigInt,
    pub chains: Vec<GlueChain>,
}

/// Full chain `L⁴ ⊂ U` with `U` unimodular and quaternionic.
pub fn embed_four_copies(g: &SymGram) -> Result<FourCopies> {
    let n = g.rank();
    let (l, c1) = chain_prime_linking(g)?;
    let complex = complex_glue(&l)?;
    let (u, c3) = quaternionic_glue(&complex)?;
    if !u.gram.determinant().abs().is_one() {
        return Err(Error::Inconsistent(format!("glued lattice has determinant {}", u.gram.determinant())));
    }
    let action = QuaternionAction { i: u.transport(&quaternion_i(n)), j: u.transport(&quaternion_j(n)) };
    let index = u.index.clone();
    Ok(FourCopies { unimodular: u, action, index, chains: vec![c1, complex.chain, c3] })
}

#[derive(Clone, Debug)]
pub enum TwoCopies {
    Embedded { lattice: Overlattice, chains: Vec<GlueChain> },
    /// A prime `q ≡ 3 (mod 4)` dividing `det L` to an odd power.
    Obstructed { prime: u64 },
}

/// Unimodular overlattice of `L ⊕ L` when every prime `q ≡ 3 (mod 4)` has even
/// exponent in `det L`; otherwise the offending prime.
pub fn embed_two_copies(g: &SymGram) -> Result<TwoCopies> {
    let (l, c1) = chain_prime_linking(g)?;
    let complex = complex_glue(&l)?;
    let mut primes: Vec<u64> = complex.pending.iter().map(|(q, _)| *q).collect();
    primes.dedup();
    for &q in &primes {
        let count = complex.pending.iter().filter(|(p, _)| *p == q).count();
        if count % 2 == 1 {
            return Ok(TwoCopies::Obstructed { prime: q });
        }
    }
    let n = g.rank();
    let zero = vec![Rational::zero(); n];
    let mut cur = complex.lattice.clone();
    let mut chain = GlueChain::new(2);
    for &q in &primes {
        let elems: Vec<Vec<Rational>> = complex
            .pending
            .iter()
            .filter(|(p, _)| *p == q)
            .flat_map(|(_, x)| [concat(&[x, &zero]), concat(&[&zero, x])])
            .collect();
        let qq = Rational::from_integer(BigInt::from(q));
        let form: Vec<Vec<i64>> = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let v = cur.ambient().pair_rational(a, b) * &qq;
                        v.to_integer().mod_floor(&BigInt::from(q)).to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let iso = maximal_isotropic(&form, q as i64)
            .ok_or_else(|| Error::Inconsistent(format!("no maximal isotropic subspace at {q}")))?;
        for u in iso {
            let mut v = vec![Rational::zero(); 2 * n];
            for (coef, e) in u.iter().zip(&elems) {
                for (vi, ei) in v.iter_mut().zip(e) {
                    *vi += ei * Rational::from_integer(BigInt::from(*coef));
                }
            }
            cur = cur.adjoin_ambient(&v, q)?;
            chain.steps.push(GlueStep { prime: q, index: q, vectors: vec![v], gram: cur.gram.clone() });
        }
    }
    if !cur.gram.determinant().abs().is_one() {
        return Err(Error::Inconsistent("two-copy gluing did not reach a unimodular lattice".into()));
    }
    Ok(TwoCopies::Embedded { lattice: cur, chains: vec![c1, complex.chain, chain] })
}

/// True iff every prime `≡ 3 (mod 4)` divides `|δ|` to an even power.
pub fn two_copy_condition(delta: &BigInt) -> Result<bool> {
    Ok(factorize(delta)?.iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0))
}

fn bform(s: &[Vec<i64>], q: i64, x: &[i64], y: &[i64]) -> i64 {
    let mut acc = 0i128;
    for i in 0..x.len() {
        if x[i] == 0 {
            continue;
        }
        for j in 0..y.len() {
            acc += x[i] as i128 * s[i][j] as i128 * y[j] as i128;
        }
    }
    acc.rem_euclid(q as i128) as i64
}

fn inv_mod(a: i64, q: i64) -> i64 {
    crate::numtheory::mod_inverse(a as i128, q as i128).expect("unit") as i64
}

fn axpy(q: i64, a: i64, x: &[i64], y: &[i64]) -> Vec<i64> {
    y.iter().zip(x).map(|(yi, xi)| (yi + a * xi).rem_euclid(q)).collect()
}

/// Linearly independent subset (over `F_q`) spanning the same space.
fn independent(q: i64, vs: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut echelon: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut keep = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for (piv, e) in &echelon {
            if w[*piv] != 0 {
                let f = (q - w[*piv]) * inv_mod(e[*piv], q) % q;
                w = axpy(q, f, e, &w);
            }
        }
        if let Some(p) = w.iter().position(|&c| c != 0) {
            echelon.push((p, w));
            keep.push(v);
        }
    }
    keep
}

/// Orthogonal basis of the span of `basis` (form nondegenerate there).
fn orthogonalise(s: &[Vec<i64>], q: i64, mut basis: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    while !basis.is_empty() {
        let idx = match (0..basis.len()).find(|&i| bform(s, q, &basis[i], &basis[i]) != 0) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..basis.len())
                    .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| i < j && bform(s, q, &basis[i], &basis[j]) != 0)
                else {
                    break;
                };
                basis[i] = axpy(q, 1, &basis[j].clone(), &basis[i]);
                i
            }
        };
        let e = basis.remove(idx);
        let ee_inv = inv_mod(bform(s, q, &e, &e), q);
        for f in basis.iter_mut() {
            let c = bform(s, q, f, &e) * ee_inv % q;
            *f = axpy(q, (q - c) % q, &e, f);
        }
        out.push(e);
    }
    out
}

/// Basis of a totally isotropic subspace of half dimension for the
/// nondegenerate symmetric form `s` over `F_q` (odd `q`), if one exists.
pub(crate) fn maximal_isotropic(s: &[Vec<i64>], q: i64) -> Option<Vec<Vec<i64>>> {
    let m = s.len();
    if m % 2 == 1 {
        return None;
    }
    let mut span: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
    let mut result = Vec::new();
    while !span.is_empty() {
        let f = orthogonalise(s, q, span.clone());
        let d: Vec<i64> = f.iter().map(|v| bform(s, q, v, v)).collect();
        let v = match f.len() {
            1 => return None,
            2 => {
                let r = (q - d[1]) * inv_mod(d[0], q) % q;
                let x = sqrt_mod_prime(r as i128, q as u64)? as i64;
                axpy(q, x, &f[0], &f[1])
            }
            _ => {
                let inv1 = inv_mod(d[1], q);
                let (x, y) = (0..q).find_map(|x| {
                    let r = (-(d[0] * x % q * x % q + d[2]) % q + q) % q * inv1 % q;
                    if legendre(r as i128, q as u64) >= 0 {
                        sqrt_mod_prime(r as i128, q as u64).map(|y| (x, y as i64))
                    } else {
                        None
                    }
                })?;
                axpy(q, 1, &f[2], &axpy(q, y, &f[1], &f[0].iter().map(|c| c * x % q).collect::<Vec<_>>()))
            }
        };
        debug_assert_eq!(bform(s, q, &v, &v), 0);
        let w = f.iter().find(|w| bform(s, q, &v, w) != 0)?.clone();
        let h = bform(s, q, &v, &w);
        let hinv = inv_mod(h, q);
        let ww = bform(s, q, &w, &w);
        let projected: Vec<Vec<i64>> = f
            .iter()
            .map(|e| {
                let beta = bform(s, q, e, &v) * hinv % q;
                let alpha = (bform(s, q, e, &w) - beta * ww % q + q) % q * hinv % q;
                let t = axpy(q, (q - beta) % q, &w, e);
                axpy(q, (q - alpha) % q, &v, &t)
            })
            .collect();
        span = independent(q, projected);
        result.push(v);
    }
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::lattices::a2;

    fn gram1(d: i64) -> SymGram {
        SymGram::rank_one(d)
    }

    #[test]
    fn adjoin_examples() {
        let l = adjoin(&gram1(4), &[int(2)], 2).unwrap();
        assert_eq!(l.gram, gram1(1));
        assert_eq!(l.index, int(2));
        let l = adjoin(&gram1(9), &[int(3)], 3).unwrap();
        assert_eq!(l.gram, gram1(1));
        let l = adjoin(&SymGram::diagonal(&[2, 2]), &[int(1), int(1)], 2).unwrap();
        assert_eq!(l.gram.determinant(), int(1));
        assert_eq!(l.gram, SymGram::from_i64(&[&[1, 1], &[1, 2]]).unwrap());
    }

    #[test]
    fn adjoin_rejections() {
        // f/2 in ⟨2⟩ has square 1/2
        assert!(matches!(adjoin(&gram1(2), &[int(1)], 2), Err(Error::NotIntegral(_))));
        // 3·(f/2) is not in ⟨4⟩
        assert!(adjoin(&gram1(4), &[int(2)], 3).is_err());
        assert!(adjoin(&gram1(4), &[int(4)], 2).is_err());
    }

    #[test]
    fn stage_one() {
        assert_eq!(chain_prime_linking(&gram1(9)).unwrap().0.gram, gram1(1));
        assert_eq!(chain_prime_linking(&gram1(12)).unwrap().0.gram, gram1(3));
        let (l, c) = chain_prime_linking(&gram1(3)).unwrap();
        assert_eq!((l.gram, c.steps.len()), (gram1(3), 0));
        let (l, _) = chain_prime_linking(&gram1(16)).unwrap();
        assert_eq!(l.gram, gram1(1));
        let (l, _) = chain_prime_linking(&SymGram::diagonal(&[2, 2])).unwrap();
        assert_eq!(l.gram.determinant(), int(1));
    }

    #[test]
    fn stage_two() {
        let c = complex_glue(&Overlattice::trivial(&gram1(5))).unwrap();
        assert_eq!(c.lattice.gram.determinant(), int(1));
        assert!(c.pending.is_empty());
        let c = complex_glue(&Overlattice::trivial(&gram1(2))).unwrap();
        assert_eq!(c.lattice.gram.determinant(), int(1));
        let c = complex_glue(&Overlattice::trivial(&gram1(3))).unwrap();
        assert_eq!(c.lattice.gram, SymGram::diagonal(&[3, 3]));
        assert_eq!(c.pending.len(), 1);
    }

    #[test]
    fn stage_three() {
        for q in [3, 7] {
            let c = complex_glue(&Overlattice::trivial(&gram1(q))).unwrap();
            let (u, chain) = quaternionic_glue(&c).unwrap();
            assert_eq!(u.gram.determinant(), int(1));
            assert_eq!(chain.steps[0].index, (q * q) as u64);
            assert!(crate::charvec::is_extremal_form(&u.gram).unwrap());
        }
        let c = complex_glue(&Overlattice::trivial(&gram1(1))).unwrap();
        let (u, chain) = quaternionic_glue(&c).unwrap();
        assert_eq!(u.gram, SymGram::identity(4));
        assert!(chain.steps.is_empty());
    }

    #[test]
    fn modular_roots() {
        assert_eq!(sqrt_minus_one(2).unwrap(), 1);
        assert_eq!(sqrt_minus_one(5).unwrap(), 2);
        assert_eq!(sqrt_minus_one(13).unwrap(), 5);
        assert!(sqrt_minus_one(7).is_err());
        assert_eq!(sum_two_squares_neg_one(3).unwrap(), (1, 1));
        assert_eq!(sum_two_squares_neg_one(7).unwrap(), (3, 2));
        assert_eq!(sum_two_squares_neg_one(11).unwrap(), (1, 3));
        assert!(sum_two_squares_neg_one(5).is_err());
    }

    #[test]
    fn quaternion_checks() {
        let l4 = a2().power(4);
        assert!(verify_quaternionic(&l4, &QuaternionAction::standard(2)).unwrap());
        let id = RatMatrix::identity(8);
        assert!(!verify_quaternionic(&l4, &QuaternionAction { i: id.clone(), j: id }).unwrap());
        assert!(verify_quaternionic(&a2(), &QuaternionAction::standard(1)).is_err());
        let four = embed_four_copies(&gram1(3)).unwrap();
        assert!(verify_quaternionic(&four.unimodular.gram, &four.action).unwrap());
    }

    #[test]
    fn four_copies() {
        let f = embed_four_copies(&SymGram::identity(2)).unwrap();
        assert_eq!((f.unimodular.gram.clone(), f.index.clone()), (SymGram::identity(8), int(1)));
        let f = embed_four_copies(&gram1(3)).unwrap();
        assert_eq!(f.unimodular.gram.rank(), 4);
        assert_eq!(f.unimodular.gram.determinant(), int(1));
        // [U : L⁴]² = det L⁴
        assert_eq!(f.index, int(9));
        let f = embed_four_copies(&a2()).unwrap();
        assert_eq!(f.unimodular.gram.rank(), 8);
        assert_eq!(f.unimodular.gram.determinant(), int(1));
        assert!(f.unimodular.gram.is_even());
    }

    #[test]
    fn two_copies() {
        match embed_two_copies(&gram1(5)).unwrap() {
            TwoCopies::Embedded { lattice, .. } => assert_eq!(lattice.gram.determinant(), int(1)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(embed_two_copies(&gram1(3)).unwrap(), TwoCopies::Obstructed { prime: 3 }));
        assert!(matches!(embed_two_copies(&gram1(9)).unwrap(), TwoCopies::Embedded { .. }));
        assert!(matches!(embed_two_copies(&SymGram::diagonal(&[3, 3])).unwrap(), TwoCopies::Embedded { .. }));
        assert!(matches!(embed_two_copies(&a2()).unwrap(), TwoCopies::Obstructed { prime: 3 }));
    }

    #[test]
    fn isotropic_subspaces() {
        // x² + y² over F_3 is anisotropic; x² − y² is not
        assert!(maximal_isotropic(&[vec![1, 0], vec![0, 1]], 3).is_none());
        let iso = maximal_isotropic(&[vec![1, 0], vec![0, 2]], 3).unwrap();
        assert_eq!(iso.len(), 1);
        let s = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
        let iso = maximal_isotropic(&s, 7).unwrap();
        assert_eq!(iso.len(), 2);
        for a in &iso {
            for b in &iso {
                assert_eq!(bform(&s, 7, a, b), 0);
            }
        }
    }
}
