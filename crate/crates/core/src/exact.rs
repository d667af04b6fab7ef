//! Exact integer and rational linear algebra.
//!
//! Everything here works over `BigInt` / `BigRational`. Matrices are dense and
//! row-major; lattice bases are stored as rows.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// Reduce `x` into `[0, m)` for a positive rational modulus `m`.
pub fn rat_mod(x: &Rational, m: &Rational) -> Rational {
    debug_assert!(m.is_positive());
    let q = (x / m).floor();
    x - q * m
}

/// `"p/q"` for non-integers, `"p"` otherwise.
pub fn rat_to_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows, rejecting empty or ragged input.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::EmptyMatrix);
        }
        let c = rows[0].len();
        if c == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    c
                )));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    /// Panicking variant of [`IntMatrix::from_rows`] for literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(&owned).expect("malformed matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(rat_int).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += f * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * f;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += f * col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * f;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[&IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rational matrix");
        RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = Rational::zero();
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += x * &self[(i, j)];
                    }
                }
                acc
            })
            .collect()
    }

    /// `xᵀ · self · y` for integer vectors.
    pub fn bilinear_int(&self, x: &[BigInt], y: &[BigInt]) -> Rational {
        assert_eq!(x.len(), self.rows);
        assert_eq!(y.len(), self.cols);
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    row += &self[(i, j)] * yj;
                }
            }
            acc += row * xi;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }

    /// Least common multiple of all denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a[(i, k)].is_zero())?;
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                    inv.data.swap(p * n + j, k * n + j);
                }
            }
            let piv = a[(k, k)].clone();
            for j in 0..n {
                a[(k, j)] = &a[(k, j)] / &piv;
                inv[(k, j)] = &inv[(k, j)] / &piv;
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    let da = &f * &a[(k, j)];
                    a[(i, j)] -= da;
                    let di = &f * &inv[(k, j)];
                    inv[(i, j)] -= di;
                }
            }
        }
        Some(inv)
    }

    /// Determinant by rational elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let p = match (k..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                }
                det = -det;
            }
            let piv = a[(k, k)].clone();
            det *= &piv;
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &piv;
                for j in k..n {
                    let d = &f * &a[(k, j)];
                    a[(i, j)] -= d;
                }
            }
        }
        det
    }

    pub fn direct_sum(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Symmetric integer Gram matrix of a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymGram {
    matrix: IntMatrix,
}

impl SymGram {
    /// Accepts any symmetric square matrix of positive rank. Degenerate forms
    /// are allowed here and rejected by the operations that need `det != 0`.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "Gram matrix is {}x{}, expected square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if let Some((i, j)) = first_asymmetry(&matrix) {
            return Err(Error::Asymmetric { row: i + 1, col: j + 1 });
        }
        Ok(SymGram { matrix })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::new(IntMatrix::from_rows(&owned)?)
    }

    pub fn identity(n: usize) -> Self {
        SymGram { matrix: IntMatrix::identity(n) }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let big: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
        SymGram { matrix: IntMatrix::diagonal(&big) }
    }

    /// Rank one lattice `⟨d⟩`.
    pub fn rank_one(d: i64) -> Self {
        Self::diagonal(&[d])
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.matrix[(i, j)]
    }

    pub fn determinant(&self) -> BigInt {
        determinant(self)
    }

    /// `δ = |det|`.
    pub fn delta(&self) -> BigInt {
        self.determinant().abs()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.matrix[(i, i)].is_even())
    }

    pub fn neg(&self) -> SymGram {
        SymGram { matrix: self.matrix.neg() }
    }

    pub fn direct_sum(parts: &[&SymGram]) -> SymGram {
        let mats: Vec<&IntMatrix> = parts.iter().map(|g| &g.matrix).collect();
        SymGram { matrix: IntMatrix::direct_sum(&mats) }
    }

    /// `n` orthogonal copies.
    pub fn power(&self, copies: usize) -> SymGram {
        let parts: Vec<&SymGram> = std::iter::repeat(self).take(copies).collect();
        Self::direct_sum(&parts)
    }

    /// Gram matrix of the basis given by the rows of `basis`: `B·G·Bᵀ`.
    pub fn transform(&self, basis: &IntMatrix) -> SymGram {
        let m = basis.mul(&self.matrix).mul(&basis.transpose());
        SymGram { matrix: m }
    }

    /// Gram of the rational basis `B` (rows). Fails if the result is not integral.
    pub fn transform_rational(&self, basis: &RatMatrix) -> Result<SymGram> {
        let m = basis.mul(&self.matrix.to_rational()).mul(&basis.transpose());
        let m = m
            .to_integer()
            .ok_or_else(|| Error::NotIntegral("transformed Gram matrix".into()))?;
        SymGram::new(m)
    }

    /// `xᵀ G y` for integer vectors.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let n = self.rank();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for j in 0..n {
                row += &self.matrix[(i, j)] * &y[j];
            }
            acc += row * &x[i];
        }
        acc
    }

    /// `wᵀ G w` for a rational vector.
    pub fn norm_rational(&self, w: &[Rational]) -> Rational {
        self.pair_rational(w, w)
    }

    pub fn pair_rational(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..n {
                if !y[j].is_zero() {
                    row += &y[j] * &self.matrix[(i, j)];
                }
            }
            acc += row * &x[i];
        }
        acc
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rank())
            .map(|i| self.matrix.row(i).iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>())
            .collect()
    }
}

impl fmt::Display for SymGram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

fn first_asymmetry(m: &IntMatrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..i {
            if m[(i, j)] != m[(j, i)] {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn determinant(g: &SymGram) -> BigInt {
    g.matrix.determinant()
}

/// Inertia of a nondegenerate symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Signature {
    /// `σ = n₊ − n₋`.
    pub fn sigma(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0
    }

    pub fn is_definite(&self) -> bool {
        self.positive == 0 || self.negative == 0
    }
}

/// Counts positive and negative eigenvalues by symmetric rational elimination.
pub fn signature(g: &SymGram) -> Result<Signature> {
    if determinant(g).is_zero() {
        return Err(Error::Degenerate);
    }
    let n = g.rank();
    let mut a = g.matrix.to_rational();
    let mut sig = Signature { positive: 0, negative: 0 };
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                sym_swap(&mut a, j, k);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a_kk = a_jj = 0, so adding e_j to e_k yields 2·a_kj.
                sym_add(&mut a, k, j);
            } else {
                return Err(Error::Degenerate);
            }
        }
        let piv = a[(k, k)].clone();
        if piv.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &piv;
            for j in k + 1..n {
                let d = &f * &a[(k, j)];
                a[(i, j)] -= d;
            }
            a[(i, k)] = Rational::zero();
        }
        for j in k + 1..n {
            a[(k, j)] = Rational::zero();
        }
    }
    Ok(sig)
}

fn sym_swap(a: &mut RatMatrix, x: usize, y: usize) {
    let n = a.rows;
    for j in 0..n {
        a.data.swap(x * n + j, y * n + j);
    }
    for i in 0..n {
        a.data.swap(i * n + x, i * n + y);
    }
}

/// Congruence `e_k ← e_k + e_j`.
fn sym_add(a: &mut RatMatrix, k: usize, j: usize) {
    let n = a.rows;
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(k, c)] += v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, k)] += v;
    }
}

/// `Q⁻¹`, the Gram matrix of the dual lattice in the dual basis.
pub fn dual_gram(g: &SymGram) -> Result<RatMatrix> {
    g.matrix.to_rational().inverse().ok_or(Error::Degenerate)
}

/// Result of a Smith normal form computation with `U·M·V = D`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries `d₁ | d₂ | …`, nonnegative, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let steps = r.min(c);
    for t in 0..steps {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_abs_entry(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                if !a[(i, t)].is_zero() {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
                if !a[(t, j)].is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let piv = a[(t, t)].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, d: a, u, v }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| e.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Canonical (upper-triangular, positive pivots, reduced above pivots) basis
/// of the row lattice of `rows`. The rows must span a full-rank lattice.
pub fn hermite_row_lattice(rows: &IntMatrix) -> Result<IntMatrix> {
    let n = rows.cols();
    let mut w = rows.to_rows();
    let k = w.len();
    if k < n {
        return Err(Error::RankDeficient);
    }
    for col in 0..n {
        let r = col;
        for i in r + 1..k {
            if w[i][col].is_zero() {
                continue;
            }
            if w[r][col].is_zero() {
                w.swap(r, i);
                continue;
            }
            let a = w[r][col].clone();
            let b = w[i][col].clone();
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let ag = &a / &g;
            let bg = &b / &g;
            for j in 0..n {
                let top = &s * &w[r][j] + &t * &w[i][j];
                let bot = &ag * &w[i][j] - &bg * &w[r][j];
                w[r][j] = top;
                w[i][j] = bot;
            }
        }
        if w[r][col].is_zero() {
            return Err(Error::RankDeficient);
        }
        if w[r][col].is_negative() {
            for x in w[r].iter_mut() {
                *x = -&*x;
            }
        }
        let piv = w[r][col].clone();
        for i in 0..r {
            let q = w[i][col].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            for j in 0..n {
                let d = &q * &w[r][j];
                w[i][j] -= d;
            }
        }
    }
    debug_assert!(w[n..].iter().all(|row| row.iter().all(Zero::is_zero)));
    w.truncate(n);
    IntMatrix::from_rows(&w)
}

/// Positive-definiteness test by leading principal minors.
pub fn is_positive_definite(g: &SymGram) -> bool {
    let n = g.rank();
    (1..=n).all(|k| {
        let mut m = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = g.entry(i, j).clone();
            }
        }
        m.determinant().is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e8() -> SymGram {
        crate::lattices::e8()
    }

    #[test]
    fn determinants() {
        assert_eq!(SymGram::identity(3).determinant(), int(1));
        assert_eq!(SymGram::from_i64(&[&[2, 1], &[1, 2]]).unwrap().determinant(), int(3));
        assert_eq!(e8().determinant(), int(1));
        assert_eq!(SymGram::from_i64(&[&[0, 1], &[1, 0]]).unwrap().determinant(), int(-1));
        assert_eq!(SymGram::from_i64(&[&[1, 1], &[1, 1]]).unwrap().determinant(), int(0));
    }

    #[test]
    fn signatures() {
        let s = signature(&SymGram::identity(4)).unwrap();
        assert_eq!((s.positive, s.negative), (4, 0));
        let s = signature(&SymGram::diagonal(&[1, -1])).unwrap();
        assert_eq!((s.positive, s.negative), (1, 1));
        let s = signature(&SymGram::from_i64(&[&[2, 1], &[1, 2]]).unwrap()).unwrap();
        assert_eq!((s.positive, s.negative), (2, 0));
        assert!(s.is_positive_definite());
        // hyperbolic plane needs the zero-pivot path
        let s = signature(&SymGram::from_i64(&[&[0, 1], &[1, 0]]).unwrap()).unwrap();
        assert_eq!((s.positive, s.negative), (1, 1));
        assert!(matches!(
            signature(&SymGram::from_i64(&[&[1, 1], &[1, 1]]).unwrap()),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn duals() {
        let inv = dual_gram(&SymGram::rank_one(7)).unwrap();
        assert_eq!(inv[(0, 0)], rat(1, 7));
        assert_eq!(dual_gram(&SymGram::identity(3)).unwrap(), RatMatrix::identity(3));
        let a2 = SymGram::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let inv = dual_gram(&a2).unwrap();
        assert_eq!(inv.to_rows(), vec![vec![rat(2, 3), rat(-1, 3)], vec![rat(-1, 3), rat(2, 3)]]);
        assert_eq!(a2.matrix().to_rational().mul(&inv), RatMatrix::identity(2));
    }

    fn check_snf(m: &IntMatrix, expected: &[i64]) {
        let s = smith_normal_form(m);
        let exp: Vec<BigInt> = expected.iter().map(|&x| int(x)).collect();
        assert_eq!(s.diagonal, exp);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
    }

    #[test]
    fn smith_forms() {
        check_snf(&IntMatrix::identity(3), &[1, 1, 1]);
        check_snf(&IntMatrix::from_i64(&[&[2, 1], &[1, 2]]), &[1, 3]);
        check_snf(&IntMatrix::from_i64(&[&[4, 0], &[0, 6]]), &[2, 12]);
        check_snf(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), &[2, 6, 12]);
        check_snf(&e8().matrix().clone(), &[1; 8]);
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert!(s.u.is_identity() && s.v.is_identity());
    }

    #[test]
    fn hermite() {
        let h = hermite_row_lattice(&IntMatrix::from_i64(&[&[4], &[2]])).unwrap();
        assert_eq!(h, IntMatrix::from_i64(&[&[2]]));
        let h = hermite_row_lattice(&IntMatrix::identity(3)).unwrap();
        assert!(h.is_identity());
        let h = hermite_row_lattice(&IntMatrix::from_i64(&[&[2, 0], &[0, 2], &[1, 1]])).unwrap();
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        assert!(matches!(
            hermite_row_lattice(&IntMatrix::from_i64(&[&[1, 1], &[2, 2]])),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn asymmetric_rejected() {
        assert!(matches!(
            SymGram::from_i64(&[&[2, 1], &[0, 2]]),
            Err(Error::Asymmetric { row: 2, col: 1 })
        ));
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(rat_mod(&rat(-5, 3), &rat(4, 3)), rat(1, 1));
        assert_eq!(rat_to_string(&rat(11, 5)), "11/5");
        assert_eq!(rat_to_string(&rat(4, 2)), "2");
        assert_eq!(parse_rational("-7/4"), Some(rat(-7, 4)));
        assert_eq!(parse_rational("3"), Some(rat(3, 1)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
