//! Arithmetic in GF(p^m) and dense matrices over it.
//!
//! Elements are integers in `[0, p^m)` whose base-p digits are the polynomial
//! coefficients (lowest degree first). Multiplication and inversion go
//! through log/antilog tables built once per field.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest field for which tables are built.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// A field element, encoded base-p.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    // exp has 2(q-1) entries so a product of two logs never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Description of GF(p^m) together with its lookup tables.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("m", &self.0.m)
            .field("modulus", &self.0.modulus)
            .field("primitive", &self.0.primitive)
            .finish()
    }
}

/// Arithmetic operations exposed to callers that pick the operation at runtime.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, m)` when `q = p^m` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

/// Trial division by every monic polynomial of degree at most half the degree.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut div = digits(low, p, d);
            div.push(1);
            if poly_rem(modulus, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible of degree `m`, ordered by its base-p integer value.
fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for low in 0..count {
        let mut cand = digits(low, p, m as usize);
        cand.push(1);
        if cand[0] != 0 && is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn slow_mul(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len().saturating_sub(1).max(1);
    if modulus.is_empty() {
        return (a as u64 * b as u64 % p as u64) as u32;
    }
    let da = digits(a as u64, p, m);
    let db = digits(b as u64, p, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let r = poly_rem(&prod, modulus, p);
    let mut v = 0u64;
    for &c in r.iter().rev() {
        v = v * p as u64 + c as u64;
    }
    v as u32
}

impl FieldSpec {
    /// Builds GF(p^m). With no modulus the first irreducible polynomial (by
    /// base-p value) is used. Coefficients are listed lowest degree first and
    /// include the leading 1; prime fields take an empty modulus.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParams("extension degree must be at least 1".into()));
        }
        let q64 = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q64 > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { p, m });
        }
        let q = q64 as u32;
        let modulus: Vec<u32> = match (m, modulus) {
            (1, None) => Vec::new(),
            (1, Some(c)) if c.is_empty() => Vec::new(),
            (1, Some(c)) => return Err(Error::BadModulus { expected: 0, got: c.len() }),
            (_, None) => default_modulus(p, m),
            (_, Some(c)) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p) {
                    return Err(Error::BadModulus { expected: m, got: c.len() });
                }
                if !is_irreducible(c, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                c.to_vec()
            }
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let pow_slow = |g: u32, mut e: u64| {
            let mut acc = 1u32;
            let mut base = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, base, p, &modulus);
                }
                base = slow_mul(base, base, p, &modulus);
                e >>= 1;
            }
            acc
        };
        let primitive = (1..q)
            .find(|&g| factors.iter().all(|&f| pow_slow(g, order / f) != 1))
            .ok_or(Error::ReducibleModulus { p })?;
        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, primitive, p, &modulus);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }
        Ok(FieldSpec(Arc::new(Inner { p, m, q, modulus, primitive, exp, log })))
    }

    /// GF(q) for a prime power `q`, default modulus.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::InvalidParams("field order must be a prime power".into()))?;
        Self::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }
    pub fn primitive(&self) -> Fe {
        Fe(self.0.primitive)
    }
    pub fn is_binary(&self) -> bool {
        self.0.q == 2
    }

    pub fn elem(&self, v: u32) -> Result<Fe> {
        if v < self.0.q {
            Ok(Fe(v))
        } else {
            Err(Error::InvalidElement(v))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.0.m == 1 {
            return Fe((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.m == 1 {
            return Fe((p - a.0) % p);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let i = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Fe(self.0.exp[i as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivideByZero);
        }
        let l = self.0.log[a.0 as usize];
        Ok(Fe(self.0.exp[((self.0.q - 1 - l) % (self.0.q - 1)) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let ord = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64 * (e % ord) % ord;
        Fe(self.0.exp[l as usize])
    }

    /// `primitive^i` for any integer exponent, negative allowed.
    pub fn alpha_pow(&self, i: i64) -> Fe {
        let ord = (self.0.q - 1) as i64;
        Fe(self.0.exp[i.rem_euclid(ord) as usize])
    }

    /// Discrete log to the primitive base; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Option<u64> {
        let l = self.log(a)? as u64;
        let ord = (self.0.q - 1) as u64;
        Some(ord / num_integer::gcd(l, ord))
    }

    /// Runtime-dispatched arithmetic. `b` is an element for the binary
    /// operations and an exponent for `Pow`; it is ignored by `Inv`.
    pub fn apply(&self, op: FieldOp, a: Fe, b: u64) -> Result<Fe> {
        let check = |v: u64| -> Result<Fe> {
            if v < self.0.q as u64 {
                Ok(Fe(v as u32))
            } else {
                Err(Error::InvalidElement(v as u32))
            }
        };
        self.elem(a.0)?;
        match op {
            FieldOp::Add => Ok(self.add(a, check(b)?)),
            FieldOp::Sub => Ok(self.sub(a, check(b)?)),
            FieldOp::Mul => Ok(self.mul(a, check(b)?)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow => Ok(self.pow(a, b)),
        }
    }
}

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over GF({})", self.rows, self.cols, self.spec.q())?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{:>4}", self.get(i, j).0)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(spec: &FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { spec: spec.clone(), rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_fn(spec: &FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { spec: spec.clone(), rows, cols, data }
    }

    /// Builds a matrix from integer rows, validating every entry.
    pub fn from_rows(spec: &FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &v in row {
                data.push(spec.elem(v)?);
            }
        }
        Ok(Mat { spec: spec.clone(), rows: rows.len(), cols, data })
    }

    /// Binary matrix from strings of '0'/'1' characters.
    pub fn from_bits(spec: &FieldSpec, rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<u32>> = rows.iter().map(|r| r.bytes().map(|b| (b == b'1') as u32).collect()).collect();
        Self::from_rows(spec, &parsed)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.0).collect()).collect()
    }

    pub fn row_support(&self, i: usize) -> Vec<usize> {
        self.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, _)| j).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|v| !v.is_zero()).count()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.spec, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("inner dimensions differ".into()));
        }
        let f = &self.spec;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(l, j))));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Fe]) -> Vec<Fe> {
        let f = &self.spec;
        let mut out = vec![Fe::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Result<Mat> {
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange { index: c, len: self.cols });
            }
        }
        Ok(Mat::from_fn(&self.spec, self.rows, cols.len(), |i, j| self.get(i, cols[j])))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<Mat> {
        for &r in rows {
            if r >= self.rows {
                return Err(Error::IndexOutOfRange { index: r, len: self.rows });
            }
        }
        Ok(Mat::from_fn(&self.spec, rows.len(), self.cols, |i, j| self.get(rows[i], j)))
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("row counts differ".into()));
        }
        Ok(Mat::from_fn(&self.spec, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { spec: self.spec.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        if self.spec.is_binary() {
            return gf2_rref(self);
        }
        let f = &self.spec;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.spec.is_binary() {
            if (0..self.cols).all(|j| self.col_weight(j) <= 2) {
                return gf2_low_weight_rank(self);
            }
            return gf2_rank(self);
        }
        generic_rank(self)
    }

    /// Basis of `{x : M x^T = 0}` as rows.
    pub fn nullspace(&self) -> Mat {
        let f = &self.spec;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![usize::MAX; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = i;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| is_pivot[c] == usize::MAX).collect();
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, Fe::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(b, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Rows of the RREF that are nonzero: a basis of the row space.
    pub fn row_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        r.select_rows(&idx).expect("indices in range")
    }

    /// Solves `M x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Fe]) -> Result<Option<Vec<Fe>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let f = &self.spec;
        let col = Mat::from_fn(f, self.rows, 1, |i, _| b[i]);
        let aug = self.hstack(&col)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }
}

fn generic_rank(m: &Mat) -> usize {
    let f = &m.spec;
    let mut a: Vec<Fe> = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else { continue };
        if pr != r {
            for j in c..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a[r * cols + c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            let factor = a[i * cols + c];
            if factor.is_zero() {
                continue;
            }
            let s = f.mul(factor, inv);
            for j in c..cols {
                let v = f.sub(a[i * cols + j], f.mul(s, a[r * cols + j]));
                a[i * cols + j] = v;
            }
        }
        r += 1;
    }
    r
}

fn pack_gf2(m: &Mat) -> Vec<Vec<u64>> {
    let words = m.cols.div_ceil(64);
    (0..m.rows)
        .map(|i| {
            let mut w = vec![0u64; words];
            for (j, v) in m.row(i).iter().enumerate() {
                if !v.is_zero() {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect()
}

fn gf2_rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut rows = pack_gf2(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][wi] & bit != 0) else { continue };
        rows.swap(pr, r);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[wi] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot).skip(wi) {
                    *x ^= *y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = Mat::from_fn(&m.spec, m.rows, m.cols, |i, j| Fe(((rows[i][j / 64] >> (j % 64)) & 1) as u32));
    (out, pivots)
}

fn gf2_rank(m: &Mat) -> usize {
    let mut rows = pack_gf2(m);
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][wi] & bit != 0) else { continue };
        rows.swap(pr, r);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[wi] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot).skip(wi) {
                    *x ^= *y;
                }
            }
        }
        r += 1;
    }
    r
}

// Over GF(2), a matrix whose columns have weight at most two is the incidence
// matrix of a graph on its rows, weight-one columns joining a virtual extra
// node. Its rank is the row count minus the number of components that never
// reach the virtual node.
fn gf2_low_weight_rank(m: &Mat) -> usize {
    let virt = m.rows;
    let mut parent: Vec<usize> = (0..=m.rows).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut touched = vec![false; m.rows];
    for j in 0..m.cols {
        let ends: Vec<usize> = (0..m.rows).filter(|&i| !m.get(i, j).is_zero()).collect();
        let (a, b) = match ends.as_slice() {
            [] => continue,
            [a] => (*a, virt),
            [a, b] => (*a, *b),
            _ => unreachable!("caller checked column weights"),
        };
        touched[a] = true;
        if b != virt {
            touched[b] = true;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let root_v = find(&mut parent, virt);
    let mut seen = vec![false; m.rows + 1];
    let mut isolated_components = 0;
    for i in 0..m.rows {
        let r = find(&mut parent, i);
        if !touched[i] {
            // an all-zero row contributes nothing
            continue;
        }
        if r != root_v && !seen[r] {
            seen[r] = true;
            isolated_components += 1;
        }
    }
    let nonzero_rows = touched.iter().filter(|&&t| t).count();
    nonzero_rows - isolated_components
}

/// Vandermonde matrix with entry `(i, j) = points[j]^i`.
pub fn vandermonde(spec: &FieldSpec, points: &[Fe], rows: usize) -> Result<Mat> {
    let mut sorted = points.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoint);
    }
    if rows > points.len() {
        return Err(Error::DimensionMismatch("more rows than points".into()));
    }
    for p in points {
        spec.elem(p.0)?;
    }
    Ok(Mat::from_fn(spec, rows, points.len(), |i, j| spec.pow(points[j], i as u64)))
}
