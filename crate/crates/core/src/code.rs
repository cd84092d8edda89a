//! Linear codes given by a parity-check matrix, with the derived codes and
//! weight computations the rest of the crate relies on.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combi::{binomial, for_each_subset, gaussian_binomial};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec, Mat};

/// Enumeration budgets. Kept public so reports and tests can quote them.
pub const WORD_ENUM_BUDGET: u128 = 1 << 24;
pub const SUBSET_BUDGET: u128 = 1_000_000;

/// The kind of recovery property a code is built for.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Lr,
    SLr,
    Availability,
    Sa,
    Mr,
    Pmr,
    Mds,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Lr => "LR",
            Role::SLr => "S-LR",
            Role::Availability => "availability",
            Role::Sa => "SA",
            Role::Mr => "MR",
            Role::Pmr => "PMR",
            Role::Mds => "MDS",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "LR" => Role::Lr,
            "S-LR" => Role::SLr,
            "availability" => Role::Availability,
            "SA" => Role::Sa,
            "MR" => Role::Mr,
            "PMR" => Role::Pmr,
            "MDS" => Role::Mds,
            _ => return None,
        })
    }
}

/// Declared parameters. `n`, `k` and `q` are always derived from the matrix;
/// the rest come from the construction that produced the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub d_min: Option<usize>,
    pub q: u32,
    pub role: Option<Role>,
}

/// A sorted set of erased coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern(Vec<usize>);

impl ErasurePattern {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("erasure indices repeat".into()));
        }
        Ok(ErasurePattern(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// Coordinate groups of a code with local structure, e.g. the supports of
/// the local parity checks of a PMR or MR code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalStructure {
    pub groups: Vec<Vec<usize>>,
    /// Local parities per group.
    pub local_parities: usize,
    /// Global parities shared by all groups.
    pub global_parities: usize,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    h: Mat,
    g: Mat,
    n: usize,
    k: usize,
    pub params: CodeParams,
    pub local: Option<LocalStructure>,
}

fn complement(n: usize, s: &[usize]) -> Result<Vec<usize>> {
    let mut drop = vec![false; n];
    for &i in s {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        drop[i] = true;
    }
    Ok((0..n).filter(|&i| !drop[i]).collect())
}

impl LinearCode {
    /// The code `{c : H c^T = 0}`. `H` may have dependent rows.
    pub fn from_parity(h: Mat) -> Self {
        let g = h.nullspace();
        let n = h.cols();
        let k = g.rows();
        let params = CodeParams { n, k, r: None, t: None, d_min: None, q: h.spec().q(), role: None };
        LinearCode { h, g, n, k, params, local: None }
    }

    /// The row space of `G`.
    pub fn from_generator(g: Mat) -> Self {
        let h = g.nullspace();
        let g = g.row_basis();
        let n = g.cols();
        let k = g.rows();
        let params = CodeParams { n, k, r: None, t: None, d_min: None, q: g.spec().q(), role: None };
        LinearCode { h, g, n, k, params, local: None }
    }

    pub fn with_role(mut self, role: Role, r: Option<usize>, t: Option<usize>) -> Self {
        self.params.role = Some(role);
        self.params.r = r;
        self.params.t = t;
        self
    }

    pub fn with_local(mut self, local: LocalStructure) -> Self {
        self.local = Some(local);
        self
    }

    pub fn spec(&self) -> &FieldSpec {
        self.h.spec()
    }
    pub fn parity_check(&self) -> &Mat {
        &self.h
    }
    /// A basis of the code, one codeword per row.
    pub fn generator(&self) -> &Mat {
        &self.g
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }

    /// A parity-check matrix with independent rows.
    pub fn full_rank_parity(&self) -> Mat {
        self.h.row_basis()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_parity(self.g.clone())
    }

    /// Deletes the coordinates in `s`.
    pub fn puncture(&self, s: &[usize]) -> Result<LinearCode> {
        let keep = complement(self.n, s)?;
        Ok(LinearCode::from_generator(self.g.select_cols(&keep)?))
    }

    /// Keeps the codewords vanishing on `s`, then deletes `s`.
    pub fn shorten(&self, s: &[usize]) -> Result<LinearCode> {
        let keep = complement(self.n, s)?;
        Ok(LinearCode::from_parity(self.h.select_cols(&keep)?))
    }

    pub fn is_codeword(&self, c: &[Fe]) -> bool {
        c.len() == self.n && self.h.transpose().vec_mul(c).iter().all(|x| x.is_zero())
    }

    /// Smallest Hamming weight of a nonzero codeword.
    ///
    /// Enumerates codewords when `q^k` fits the word budget, otherwise looks
    /// for the smallest dependent set of columns of a full-rank `H`.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::InvalidParams("zero-dimensional code has no minimum distance".into()));
        }
        let q = self.spec().q() as u128;
        let words = q.checked_pow(self.k as u32).unwrap_or(u128::MAX);
        if words <= WORD_ENUM_BUDGET {
            return Ok(if q == 2 { min_weight_binary(&self.g) } else { min_weight_qary(&self.g) });
        }
        match min_dependent_columns_within(&self.full_rank_parity(), SUBSET_BUDGET) {
            Some(d) => Ok(d),
            None => Err(Error::BudgetExceeded { what: "minimum distance", needed: words, budget: WORD_ENUM_BUDGET }),
        }
    }

    /// The `i`-th generalized Hamming weight: the smallest support of an
    /// `i`-dimensional subcode.
    pub fn support_weight(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.k {
            return Err(Error::InvalidParams(alloc::format!("subcode dimension {i} outside 1..={}", self.k)));
        }
        let q = self.spec().q() as u64;
        let count = gaussian_binomial(self.k as u64, i as u64, q);
        if count > SUBSET_BUDGET {
            return Err(Error::BudgetExceeded { what: "support weight", needed: count, budget: SUBSET_BUDGET });
        }
        Ok(min_subcode_support(&self.g, i))
    }

    /// Every `k` coordinates form an information set.
    pub fn is_mds(&self) -> Result<bool> {
        let (n, k) = (self.n, self.k);
        if k == 0 || k == n {
            return Ok(true);
        }
        let count = binomial(n as u64, k as u64);
        if count > SUBSET_BUDGET {
            return Err(Error::BudgetExceeded { what: "MDS check", needed: count, budget: SUBSET_BUDGET });
        }
        // test whichever of G (k columns) or H (n-k columns) is narrower
        let (m, w) = if k <= n - k { (self.g.clone(), k) } else { (self.full_rank_parity(), n - k) };
        Ok(for_each_subset(n, w, |s| m.select_cols(s).expect("in range").rank() == w))
    }

    pub fn describe(&self) -> String {
        alloc::format!("[{}, {}] code over GF({})", self.n, self.k, self.spec().q())
    }
}

fn pack_rows(g: &Mat) -> Vec<Vec<u64>> {
    let words = g.cols().div_ceil(64);
    (0..g.rows())
        .map(|i| {
            let mut w = vec![0u64; words];
            for j in g.row_support(i) {
                w[j / 64] |= 1 << (j % 64);
            }
            w
        })
        .collect()
}

// Gray-code walk over all nonzero messages: one XOR per step.
fn min_weight_binary(g: &Mat) -> usize {
    let rows = pack_rows(g);
    let k = rows.len();
    let mut cur = vec![0u64; rows.first().map_or(0, |r| r.len())];
    let mut best = usize::MAX;
    for step in 1u64..(1u64 << k) {
        let bit = step.trailing_zeros() as usize;
        for (c, r) in cur.iter_mut().zip(&rows[bit]) {
            *c ^= *r;
        }
        let w: usize = cur.iter().map(|x| x.count_ones() as usize).sum();
        if w < best {
            best = w;
        }
    }
    best
}

// Depth-first over messages whose first nonzero coefficient is 1; scalar
// multiples share a weight, so this covers every nonzero codeword up to scale.
fn min_weight_qary(g: &Mat) -> usize {
    let f = g.spec();
    let (k, n) = (g.rows(), g.cols());
    let mut best = usize::MAX;
    let mut stack: Vec<Vec<Fe>> = vec![vec![Fe::ZERO; n]; k + 1];
    fn rec(g: &Mat, f: &FieldSpec, level: usize, leading: bool, stack: &mut Vec<Vec<Fe>>, best: &mut usize) {
        let k = g.rows();
        if level == k {
            if leading {
                let w = stack[k].iter().filter(|x| !x.is_zero()).count();
                *best = (*best).min(w);
            }
            return;
        }
        let coeffs: Vec<u32> = if leading { (0..f.q()).collect() } else { vec![0, 1] };
        for a in coeffs {
            let (head, tail) = stack.split_at_mut(level + 1);
            let prev = &head[level];
            let next = &mut tail[0];
            for j in 0..g.cols() {
                next[j] = f.add(prev[j], f.mul(Fe(a), g.get(level, j)));
            }
            rec(g, f, level + 1, leading || a != 0, stack, best);
        }
    }
    rec(g, f, 0, false, &mut stack, &mut best);
    best
}

/// Size of the smallest linearly dependent set of columns.
pub fn min_dependent_columns(h: &Mat) -> usize {
    min_dependent_columns_within(h, u128::MAX).expect("unbounded search")
}

/// As [`min_dependent_columns`], giving up once the number of column subsets
/// examined would pass `budget`.
pub fn min_dependent_columns_within(h: &Mat, budget: u128) -> Option<usize> {
    let n = h.cols();
    let mut spent: u128 = 0;
    for w in 1..=n.min(h.rows() + 1) {
        spent = spent.saturating_add(binomial(n as u64, w as u64));
        if spent > budget {
            return None;
        }
        let found = !for_each_subset(n, w, |s| h.select_cols(s).expect("in range").rank() == w);
        if found {
            return Some(w);
        }
    }
    Some(n + 1)
}

/// The first (lexicographic) set of `size` linearly dependent columns, if
/// any. Errors when there are more than `budget` subsets to examine.
pub fn dependent_columns_of_size(h: &Mat, size: usize, budget: u128) -> Result<Option<Vec<usize>>> {
    let needed = binomial(h.cols() as u64, size as u64);
    if needed > budget {
        return Err(Error::BudgetExceeded { what: "column subsets", needed, budget });
    }
    let mut hit = None;
    for_each_subset(h.cols(), size, |s| {
        if h.select_cols(s).expect("in range").rank() < size {
            hit = Some(s.to_vec());
            return false;
        }
        true
    });
    Ok(hit)
}

// Each i-dimensional subspace of the message space has exactly one i x k
// generator in reduced row echelon form; walk those.
fn min_subcode_support(g: &Mat, i: usize) -> usize {
    let f = g.spec();
    let (k, n) = (g.rows(), g.cols());
    let q = f.q();
    let mut best = usize::MAX;
    for_each_subset(k, i, |pivots| {
        // free positions: (row a, column c) with c > pivots[a] and c not a pivot
        let mut free = Vec::new();
        for (a, &p) in pivots.iter().enumerate() {
            for c in p + 1..k {
                if !pivots.contains(&c) {
                    free.push((a, c));
                }
            }
        }
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut support = vec![false; n];
            for (a, &p) in pivots.iter().enumerate() {
                let mut row = vec![Fe::ZERO; k];
                row[p] = Fe::ONE;
                for (slot, &(ra, c)) in free.iter().enumerate() {
                    if ra == a {
                        row[c] = Fe(digits[slot]);
                    }
                }
                let word = g.vec_mul(&row);
                for (s, x) in support.iter_mut().zip(&word) {
                    *s |= !x.is_zero();
                }
            }
            best = best.min(support.iter().filter(|&&b| b).count());
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        true
    });
    best
}
