//! Closed-form parameter bounds for locally recoverable, sequential-recovery,
//! availability and regenerating codes.
//!
//! Everything is exact: rates are [`BigRational`], integer bounds use
//! checked or big-integer arithmetic, and ceilings of square roots go
//! through an integer square root.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::combi::binomial;
use crate::error::{Error, Result};

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i128::from(a.rem_euclid(b) != 0)
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn rat(n: i128, d: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Largest minimum distance of an `(n, k)` code with locality `r`:
/// `n - k + 1 - (⌈k/r⌉ - 1)`.
pub fn lr_singleton_bound(n: u64, k: u64, r: u64) -> Result<i128> {
    if k == 0 || k > n || r == 0 {
        return Err(Error::InvalidParams("need 1 <= k <= n and r >= 1".into()));
    }
    let (n, k, r) = (n as i128, k as i128, r as i128);
    Ok(n - k + 1 - (ceil_div(k, r) - 1))
}

/// Upper bounds `e_1 <= ... <= e_{b1}` on the support weights of the dual of
/// a code with locality `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MswSequence {
    pub n: u64,
    pub r: u64,
    pub b1: u64,
    /// `e[i - 1]` holds `e_i`.
    pub e: Vec<i128>,
}

impl MswSequence {
    /// `e_i` for `1 <= i <= b1`.
    pub fn get(&self, i: u64) -> i128 {
        self.e[i as usize - 1]
    }
}

pub fn msw_sequence(n: u64, b1: u64, r: u64) -> MswSequence {
    let mut e = alloc::vec![0i128; b1 as usize];
    if b1 > 0 {
        e[b1 as usize - 1] = n as i128;
        for i in (2..=b1 as usize).rev() {
            let ei = e[i - 1];
            e[i - 2] = ei.min(ei - ceil_div(2 * ei, i as i128) + r as i128 + 1);
        }
    }
    MswSequence { n, r, b1, e }
}

/// Source of the best-possible distance or dimension of an unrestricted
/// linear code, used by the alphabet-dependent bounds.
pub trait ClassicalOracle {
    /// Largest `d` admitted for an `[n, k]_q` code, `None` if `k > n`.
    fn d_max(&self, n: u64, k: u64, q: u64) -> Option<u64>;
    /// Largest `k` admitted for an `[n, k, d]_q` code.
    fn k_max(&self, n: u64, d: u64, q: u64) -> u64;
}

/// Minimum of the Singleton, sphere-packing, Plotkin and Griesmer bounds.
#[derive(Copy, Clone, Debug, Default)]
pub struct ClosedFormOracle;

impl ClosedFormOracle {
    /// Whether no closed-form bound rules out an `[n, k, d]_q` code.
    pub fn admits(&self, n: u64, k: u64, d: u64, q: u64) -> bool {
        if k == 0 {
            return true;
        }
        if k > n || d == 0 || d > n - k + 1 {
            return false;
        }
        // sphere packing: q^k * V_q(n, floor((d-1)/2)) <= q^n
        let radius = (d - 1) / 2;
        let qb = BigUint::from(q);
        let mut volume = BigUint::zero();
        for i in 0..=radius {
            volume += BigUint::from(binomial(n, i)) * Pow::pow(&qb - 1u32, i as u32);
        }
        if Pow::pow(&qb, k as u32) * volume > Pow::pow(&qb, n as u32) {
            return false;
        }
        // Plotkin: when d > θn with θ = 1 - 1/q, q^k <= ⌊d / (d - θn)⌋,
        // written over the integers as ⌊dq / (dq - (q-1)n)⌋
        let (dq, tn) = (d as u128 * q as u128, (q as u128 - 1) * n as u128);
        if dq > tn {
            let cap = dq / (dq - tn);
            if Pow::pow(&qb, k as u32) > BigUint::from(cap) {
                return false;
            }
        }
        // Griesmer
        let mut sum: u128 = 0;
        let mut qi: u128 = 1;
        for _ in 0..k {
            sum += (d as u128).div_ceil(qi);
            if sum > n as u128 {
                return false;
            }
            qi = qi.saturating_mul(q as u128);
        }
        true
    }
}

impl ClassicalOracle for ClosedFormOracle {
    fn d_max(&self, n: u64, k: u64, q: u64) -> Option<u64> {
        if k > n {
            return None;
        }
        if k == 0 {
            return Some(n);
        }
        (1..=n - k + 1).rev().find(|&d| self.admits(n, k, d, q))
    }

    fn k_max(&self, n: u64, d: u64, q: u64) -> u64 {
        (0..=n).rev().find(|&k| self.admits(n, k, d, q)).unwrap_or(0)
    }
}

/// What the alphabet-dependent bound is asked for.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AlphabetQuery {
    /// Bound the distance of a code of this dimension.
    Distance { k: u64 },
    /// Bound the dimension of a code of this distance.
    Dimension { d: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetBound {
    pub value: u64,
    /// The index `i` of the shortening that achieved the minimum.
    pub argmin: u64,
    pub b1: u64,
}

/// Bounds obtained by shortening on the support of a minimum-support
/// subcode of the dual and applying a classical bound to what remains.
pub fn lr_alphabet_bounds(
    n: u64,
    query: AlphabetQuery,
    r: u64,
    q: u64,
    oracle: &dyn ClassicalOracle,
) -> Result<AlphabetBound> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParams("n and r must be positive".into()));
    }
    let b1 = n.div_ceil(r + 1);
    let e = msw_sequence(n, b1, r);
    let mut best: Option<(u64, u64)> = None;
    for i in 1..=b1 {
        let ei = e.get(i);
        let candidate = match query {
            AlphabetQuery::Distance { k } => {
                if ei - (i as i128) >= k as i128 {
                    continue;
                }
                let (n2, k2) = (n as i128 - ei, k as i128 + i as i128 - ei);
                if n2 < 0 || k2 < 1 {
                    continue;
                }
                match oracle.d_max(n2 as u64, k2 as u64, q) {
                    Some(d) => d,
                    None => continue,
                }
            }
            AlphabetQuery::Dimension { d } => {
                if ei >= n as i128 - d as i128 + 1 {
                    continue;
                }
                let kopt = oracle.k_max((n as i128 - ei) as u64, d, q) as i128;
                let v = ei - i as i128 + kopt;
                if v < 0 {
                    continue;
                }
                v as u64
            }
        };
        if best.is_none_or(|(v, _)| candidate < v) {
            best = Some((candidate, i));
        }
    }
    let (value, argmin) = best.ok_or(Error::EmptyS)?;
    Ok(AlphabetBound { value, argmin, b1 })
}

/// Binary dimension bound for locality `r` and distance at least 5:
/// `⌊rn/(r+1) - min(log2(1 + rn/2), rn/((r+1)(r+2)))⌋`.
pub fn hamming_type_bound(n: u64, r: u64) -> Result<u64> {
    if r < 2 || 2 * r + 4 > n {
        return Err(Error::OutOfRegime(alloc::format!("need 2 <= r <= n/2 - 2, got n={n}, r={r}")));
    }
    // The floor of a difference with a minimum is the larger of the two
    // floors, each computed exactly.
    let rational_branch = (r * n) / (r + 2);
    let lhs = Pow::pow(BigUint::from(2 + r * n), (r + 1) as u32);
    let mut log_branch: Option<u64> = None;
    let top = (r * n) / (r + 1);
    for k in (0..=top).rev() {
        let exp = (r * n + r + 1) as i128 - (k * (r + 1)) as i128;
        if exp >= 0 && lhs <= BigUint::one() << (exp as usize) {
            log_branch = Some(k);
            break;
        }
    }
    Ok(log_branch.map_or(rational_branch, |b| b.max(rational_branch)))
}

/// Largest rate of a binary code with sequential recovery from `t` erasures
/// and locality `r`.
pub fn seq_rate_bound(r: u64, t: u64) -> Result<BigRational> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let s = ((t - 1) / 2) as u32;
    let r = BigInt::from(r);
    let top = Pow::pow(&r, s + 1);
    let den = if t % 2 == 0 {
        &top + (0..=s).map(|i| Pow::pow(&r, i) * 2).sum::<BigInt>()
    } else {
        &top + (1..=s).map(|i| Pow::pow(&r, i) * 2).sum::<BigInt>() + 1
    };
    Ok(BigRational::new(top, den))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLengthBounds {
    /// Earlier bound (for `t = 2` the only one).
    pub prior: u64,
    /// Sharper bound for `t = 3`.
    pub new: Option<u64>,
}

// Smallest integer x with x >= (-b + sqrt(disc)) / 2.
fn ceil_half_root(b: i128, disc: i128) -> i128 {
    let root = (disc.max(0) as u128).sqrt() as i128;
    let mut x = floor_div(-b + root, 2) - 1;
    while 2 * x + b < 0 || (2 * x + b) * (2 * x + b) < disc {
        x += 1;
    }
    x
}

/// Smallest block length for `k` data symbols, locality `r` and sequential
/// recovery from `t ∈ {2, 3}` erasures.
pub fn seq_blocklength_bounds(k: u64, r: u64, t: u64) -> Result<BlockLengthBounds> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidParams("k and r must be positive".into()));
    }
    let (ki, ri) = (k as i128, r as i128);
    match t {
        2 => Ok(BlockLengthBounds { prior: (ki + ceil_div(2 * ki, ri)) as u64, new: None }),
        3 => {
            let prior = ki + ceil_div(2 * ki + ceil_div(ki, ri), ri);
            let mut best = i128::MAX;
            for s1 in 0..=3 * ki {
                let b1 = 2 * ri - 5;
                let f1 = ceil_half_root(b1, b1 * b1 + 4 * (6 * ki + s1 * s1 - 5 * s1));
                let b2 = 4 * ri - 4 + 2 * s1;
                let f2 = ceil_half_root(b2, b2 * b2 + 4 * (12 * ki + 3 * s1 * s1 - 4 * s1 - 7));
                best = best.min(f1.max(f2).max(s1));
            }
            Ok(BlockLengthBounds { prior: prior as u64, new: Some((ki + best) as u64) })
        }
        _ => Err(Error::UnsupportedT(t)),
    }
}

/// Dimension bound for `t = 2` with `m` local parities of weight at most
/// `r + 1`: the minimum over `1 <= L <= m` of
/// `⌊(m(r-L) + Σ_{i=1}^{L} (L+1-i) C(m,i)) / (L+1)⌋`.
pub fn seq_dim_bound_t2(m: u64, r: u64) -> Result<i128> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidParams("m and r must be positive".into()));
    }
    let mut best = i128::MAX;
    for l in 1..=m {
        let mut s: i128 = m as i128 * (r as i128 - l as i128);
        for i in 1..=l {
            let c = binomial(m, i);
            if c > i128::MAX as u128 / 4 {
                s = i128::MAX / 4;
                break;
            }
            s += (l + 1 - i) as i128 * c as i128;
        }
        best = best.min(floor_div(s, l as i128 + 1));
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvailRateBounds {
    pub tamo_barg: BigRational,
    /// Defined for `t >= 2`.
    pub transpose_new: Option<BigRational>,
}

fn inverse_product(r: u64, t: u64) -> BigRational {
    // 1 / Π_{j=1}^{t} (1 + 1/(j r))
    let mut p = BigRational::one();
    for j in 1..=t as i128 {
        p *= rat(j * r as i128 + 1, j * r as i128);
    }
    p.recip()
}

pub fn avail_rate_bounds(r: u64, t: u64) -> Result<AvailRateBounds> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let tamo_barg = inverse_product(r, t);
    let transpose_new = (t >= 2).then(|| {
        let frac = rat(t as i128, r as i128 + 1);
        BigRational::one() - &frac + frac * inverse_product(t - 1, r + 1)
    });
    Ok(AvailRateBounds { tamo_barg, transpose_new })
}

/// Rate bound used to size `b1` in the availability distance bound.
pub fn availability_rho(r: u64, t: u64) -> BigRational {
    let ri = r as i128;
    match t {
        0 => BigRational::one(),
        1 => rat(ri, ri + 1),
        2 => rat(ri, ri + 2),
        3 => rat(ri * ri, (ri + 1) * (ri + 1)),
        _ => inverse_product(r, t),
    }
}

/// `⌈n (1 - ρ(r, t))⌉`, the number of dual support weights the availability
/// distance bound works with.
pub fn availability_b1(n: u64, r: u64, t: u64) -> u64 {
    let b1 = (BigRational::one() - availability_rho(r, t)) * BigRational::from_integer(BigInt::from(n));
    b1.ceil().to_integer().to_u64().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvailDminBounds {
    pub wang: i128,
    pub tamo_barg: i128,
    /// Undefined for `r = 1`.
    pub kruglik_frolov: Option<i128>,
    /// `None` when no shortening index qualifies.
    pub msw_new: Option<i128>,
    pub b1: u64,
}

pub fn avail_dmin_bounds(n: u64, k: u64, r: u64, t: u64) -> Result<AvailDminBounds> {
    if n == 0 || k == 0 || k > n || r == 0 {
        return Err(Error::InvalidParams("need 1 <= k <= n and r >= 1".into()));
    }
    let (ni, ki, ri, ti) = (n as i128, k as i128, r as i128, t as i128);
    let wang = ni - ki + 2 - ceil_div(ti * (ki - 1) + 1, ti * (ri - 1) + 1);
    let pow = |j: u64| -> Option<i128> { ri.checked_pow(j as u32) };
    let floor_sum = |x: i128, from: u64| -> i128 { (from..=t).map(|j| pow(j).map_or(0, |p| floor_div(x, p))).sum() };
    let tamo_barg = ni - floor_sum(ki - 1, 0);
    let kruglik_frolov = (r > 1).then(|| ni - ki + 1 - floor_div(ki - 2, ri - 1));
    let b1 = availability_b1(n, r, t);
    let e = msw_sequence(n, b1, r);
    let msw_new = (1..=b1)
        .filter(|&i| e.get(i) - (i as i128) < ki)
        .map(|i| ni - ki - i as i128 + 1 - floor_sum(ki + i as i128 - e.get(i) - 1, 1))
        .min();
    Ok(AvailDminBounds { wang, tamo_barg, kruglik_frolov, msw_new, b1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTradeoff {
    pub upper: BigRational,
    pub lower_exist: BigRational,
}

/// Distance bounds for codes whose local code has rate `R_c` and length `n_c`.
pub fn avail_product_tradeoff(
    n: u64,
    k: u64,
    n_c: u64,
    rc: &BigRational,
    rmax: &BigRational,
) -> Result<ProductTradeoff> {
    let zero = BigRational::zero();
    if *rc <= zero || rc > rmax || *rmax > BigRational::one() {
        return Err(Error::InvalidParams("need 0 < R_c <= R_max <= 1".into()));
    }
    let int = |x: u64| BigRational::from_integer(BigInt::from(x));
    let one = BigRational::one();
    let upper = int(n) - int(k) / rc + int(n_c) * (&one - rc) / rc + &one;
    let lower_exist = int(n) * rc / rmax - int(k) / rmax + one;
    Ok(ProductTradeoff { upper, lower_exist })
}

/// Shortest length of a strict-availability code: `⌈(r+1)² - (r+1)r/t⌉`.
pub fn sa_blocklength_bound(r: u64, t: u64) -> Result<u64> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let num = ((r + 1) * (r + 1) * t) as i128 - ((r + 1) * r) as i128;
    Ok(ceil_div(num, t as i128) as u64)
}

/// Fewest nodes of an `(r+1)`-regular graph of girth `t+1`.
pub fn moore_bound(r: u64, t: u64) -> Result<u128> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let rr = r as u128;
    let s = ((t - 1) / 2) as u32;
    Ok(if t % 2 == 0 {
        1 + (0..=s).map(|i| (rr + 1) * rr.pow(i)).sum::<u128>()
    } else {
        2 * (0..=s).map(|i| rr.pow(i)).sum::<u128>()
    })
}

/// Settings in which a sub-packetization lower bound is known.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubpktMode {
    /// MSR, `d = n - 1`, optimal-access repair of every node.
    MsrDn1,
    /// MSR, `d = n - 1`, repair matrices independent of the helper.
    MsrConstRepair,
    /// MSR, any `d`, repair matrices independent of the other helpers.
    MsrAnyD,
    /// MDS, `d = n - 1`, optimal-access repair of `w` nodes.
    MdsWDn1,
    /// MDS, any `d`, optimal-access repair of `w` nodes.
    MdsWAnyD,
}

impl SubpktMode {
    pub const ALL: [SubpktMode; 5] = [
        SubpktMode::MsrDn1,
        SubpktMode::MsrConstRepair,
        SubpktMode::MsrAnyD,
        SubpktMode::MdsWDn1,
        SubpktMode::MdsWAnyD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubpktMode::MsrDn1 => "msr_d_n1",
            SubpktMode::MsrConstRepair => "msr_const_repair",
            SubpktMode::MsrAnyD => "msr_any_d",
            SubpktMode::MdsWDn1 => "mds_w_d_n1",
            SubpktMode::MdsWAnyD => "mds_w_any_d",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::InvalidMode(String::from(s)))
    }
}

/// Lower bound on the sub-packetization `α`.
pub fn msr_subpkt_bounds(n: u64, k: u64, d: u64, w: u64, mode: SubpktMode) -> Result<BigUint> {
    if k == 0 || k > d || d >= n {
        return Err(Error::InvalidParams("need 1 <= k <= d <= n - 1".into()));
    }
    let r = n - k;
    let s = d - k + 1;
    let p = |base: u64, e: u64| Pow::pow(BigUint::from(base), e as u32);
    let both = |base: u64, e: u64| p(base, e).min(p(base, k - 1));
    Ok(match mode {
        SubpktMode::MsrDn1 => both(r, (n - 1).div_ceil(r)),
        SubpktMode::MsrConstRepair => both(r, n.div_ceil(r)),
        SubpktMode::MsrAnyD => both(s, (n - 1).div_ceil(s)),
        SubpktMode::MdsWDn1 | SubpktMode::MdsWAnyD => {
            let base = if mode == SubpktMode::MdsWDn1 { r } else { s };
            if w == 0 || w > n {
                return Err(Error::InvalidParams("need 1 <= w <= n".into()));
            }
            if w > k - 1 {
                both(base, w.div_ceil(base))
            } else {
                p(base, w.div_ceil(base))
            }
        }
    })
}

/// Regenerating-code parameters.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RgParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub alpha: u64,
    pub beta: u64,
}

/// Largest file size: `Σ_{i=0}^{k-1} min(α, (d-i)β)`.
pub fn cutset_bound(p: &RgParams) -> Result<u128> {
    if p.k == 0 || p.k > p.d {
        return Err(Error::InvalidParams("need 1 <= k <= d".into()));
    }
    Ok((0..p.k).map(|i| (p.alpha as u128).min((p.d - i) as u128 * p.beta as u128)).sum())
}

/// `α / β` at the minimum-storage point.
pub fn msr_point(n: u64, k: u64, d: u64) -> Result<u64> {
    if k == 0 || k > d || d >= n {
        return Err(Error::InvalidParams("need 1 <= k <= d <= n - 1".into()));
    }
    Ok(d - k + 1)
}

/// `(α, B)` at the minimum-bandwidth point.
pub fn mbr_point(k: u64, d: u64, beta: u64) -> Result<(u128, u128)> {
    if k == 0 || k > d {
        return Err(Error::InvalidParams("need 1 <= k <= d".into()));
    }
    let b = (d as u128 * k as u128 - binomial(k, 2)) * beta as u128;
    Ok((d as u128 * beta as u128, b))
}
