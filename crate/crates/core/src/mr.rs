//! Partial-MR and maximally recoverable codes with local groups.
//!
//! Unless noted, parity-check matrices have the canonical shape
//! `[I_m F; 0 H_mds]`: column `i < m` is the local parity of group `i`, and
//! group `i` owns data columns `m + i r .. m + (i+1) r`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{dependent_columns_of_size, LinearCode, LocalStructure, Role};
use crate::combi::for_each_subset;
use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power, Fe, FieldSpec, Mat, MAX_FIELD_SIZE};
use crate::lr_avail::tamo_barg_code;
use crate::rng::SplitMix64;

/// `(r, δ, s)` over `m` groups: `n = m(r+δ)`, `k = mr - s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MrParams {
    pub r: usize,
    pub delta: usize,
    pub s: usize,
    pub m: usize,
}

impl MrParams {
    pub fn new(r: usize, delta: usize, s: usize, m: usize) -> Result<Self> {
        if r == 0 || delta == 0 || m == 0 || s >= m * r {
            return Err(Error::InvalidParams(format!("bad MR parameters r={r} delta={delta} s={s} m={m}")));
        }
        Ok(MrParams { r, delta, s, m })
    }
    pub fn n(&self) -> usize {
        self.m * (self.r + self.delta)
    }
    pub fn k(&self) -> usize {
        self.m * self.r - self.s
    }
}

/// `m` groups of `r` data symbols and one local parity, plus `Δ` global
/// parities: `n = m(r+1)`, `k = mr - Δ`, `Δ = a r + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PmrParams {
    pub m: usize,
    pub r: usize,
    pub global: usize,
}

impl PmrParams {
    pub fn new(m: usize, r: usize, global: usize) -> Result<Self> {
        if m == 0 || r == 0 || global == 0 || global >= m * r {
            return Err(Error::InvalidParams(format!("bad PMR parameters m={m} r={r} global={global}")));
        }
        Ok(PmrParams { m, r, global })
    }
    pub fn k0(&self) -> usize {
        self.m * self.r
    }
    pub fn n(&self) -> usize {
        self.m * (self.r + 1)
    }
    pub fn k(&self) -> usize {
        self.k0() - self.global
    }
    /// `(a, b)` with `Δ = a r + b`, `b < r`.
    pub fn split(&self) -> (usize, usize) {
        (self.global / self.r, self.global % self.r)
    }
    /// Distance required of a PMR code, `Δ + 2 + a`.
    pub fn target_distance(&self) -> usize {
        self.global + 2 + self.split().0
    }

    fn groups(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .map(|i| core::iter::once(i).chain(self.m + i * self.r..self.m + (i + 1) * self.r).collect())
            .collect()
    }
}

/// Assembles `[I_m F; 0 H_mds]` where row `i` of `F` carries `local[j]` on
/// the data columns of group `i`, and `H_mds[e][j] = theta[j]^e`.
fn canonical_h(spec: &FieldSpec, p: &PmrParams, local: &[Fe], theta: &[Fe], mds_rows: usize) -> Mat {
    let (m, r) = (p.m, p.r);
    let mut h = Mat::zeros(spec, m + mds_rows, p.n());
    for i in 0..m {
        h.set(i, i, Fe::ONE);
        for j in i * r..(i + 1) * r {
            h.set(i, m + j, local[j]);
        }
    }
    for e in 0..mds_rows {
        for (j, &t) in theta.iter().enumerate() {
            h.set(m + e, m + j, spec.pow(t, e as u64));
        }
    }
    h
}

fn pmr_code(h: Mat, p: &PmrParams, role: Role) -> LinearCode {
    let local = LocalStructure { groups: p.groups(), local_parities: 1, global_parities: p.global };
    LinearCode::from_parity(h).with_role(role, Some(p.r), None).with_local(local)
}

/// Parity splitting: the last row of a `(Δ+1) x mr` Vandermonde matrix is
/// cut into `m` pieces of length `r`, one per local check. Needs `Δ < r`.
pub fn pmr_parity_split(m: usize, r: usize, global: usize, spec: &FieldSpec) -> Result<LinearCode> {
    let p = PmrParams::new(m, r, global)?;
    if global >= r {
        return Err(Error::InvalidParams(format!("parity splitting needs global={global} < r={r}")));
    }
    let k0 = p.k0();
    if (spec.q() as usize) < k0 + 1 {
        return Err(Error::FieldTooSmall { q: spec.q() as u64, need: k0 as u64 + 1 });
    }
    let theta: Vec<Fe> = (0..k0).map(|j| spec.alpha_pow(j as i64)).collect();
    let last: Vec<Fe> = theta.iter().map(|&t| spec.pow(t, global as u64)).collect();
    let h = canonical_h(spec, &p, &last, &theta, global);
    let mut code = pmr_code(h, &p, Role::Pmr);
    code.params.d_min = Some(global + 2);
    Ok(code)
}

/// `(r, 1, 2)` MR code over `GF(2^{lρ})`. Local coefficients are
/// `θ_{ir+j}^2` with `θ_{ir+j} = α^i β^j`, `β` of order `2^l - 1`.
pub fn mr_r12(m: usize, r: usize) -> Result<LinearCode> {
    let p = PmrParams::new(m, r, 2)?;
    let l = (1..=20u32).find(|&l| (1usize << l) - 1 > r).ok_or(Error::NoSuitableField)?;
    let ord = (1u64 << l) - 1;
    // q > ord (k+2)/r + 1 with k + 2 = m r
    let rho = (1..).take_while(|rho| l * rho <= 20).find(|&rho| (1u64 << (l * rho)) > ord * m as u64 + 1);
    let rho = rho.ok_or(Error::NoSuitableField)?;
    let spec = FieldSpec::new(2, l * rho, None)?;
    let q1 = spec.q() as u64 - 1;
    let beta = spec.pow(spec.primitive(), q1 / ord);
    let theta: Vec<Fe> = (0..m)
        .flat_map(|i| (1..=r).map(move |j| (i, j)))
        .map(|(i, j)| spec.mul(spec.alpha_pow(i as i64), spec.pow(beta, j as u64)))
        .collect();
    let sq: Vec<Fe> = theta.iter().map(|&t| spec.mul(t, t)).collect();
    let h = canonical_h(&spec, &p, &sq, &theta, 2);
    Ok(pmr_code(h, &p, Role::Mr))
}

/// Smallest prime power `q` with `psi | q-1` and `q - 1 >= psi m`.
pub fn rdelta2_field(psi: usize, m: usize) -> Result<FieldSpec> {
    let start = (psi * m + 1) as u64;
    (start..=MAX_FIELD_SIZE)
        .find(|&q| (q - 1) % psi as u64 == 0 && prime_power(q).is_some())
        .ok_or(Error::NoSuitableField)
        .and_then(FieldSpec::of_order)
}

/// `(r, δ, 2)` MR code: block-diagonal `δ x (r+δ)` Vandermonde local checks
/// in powers of a `ψ`-th root of unity `β`, and two global rows
/// `(β^{cδ})_c` and `(α^j β^{-c})_c` on block `j`.
pub fn mr_rdelta2(m: usize, r: usize, delta: usize, psi: usize) -> Result<LinearCode> {
    let p = MrParams::new(r, delta, 2, m)?;
    let w = r + delta;
    if psi < w {
        return Err(Error::InvalidParams(format!("psi={psi} must be at least r+delta={w}")));
    }
    let spec = rdelta2_field(psi, m)?;
    let beta = spec.pow(spec.primitive(), (spec.q() as u64 - 1) / psi as u64);
    let bp = |e: i64| {
        let e = e.rem_euclid(psi as i64) as u64;
        spec.pow(beta, e)
    };
    let mut h = Mat::zeros(&spec, m * delta + 2, p.n());
    for j in 0..m {
        for c in 0..w {
            let col = j * w + c;
            for i in 0..delta {
                h.set(j * delta + i, col, bp((i * c) as i64));
            }
            h.set(m * delta, col, bp((c * delta) as i64));
            h.set(m * delta + 1, col, spec.mul(spec.alpha_pow(j as i64), bp(-(c as i64))));
        }
    }
    let groups = (0..m).map(|j| (j * w..(j + 1) * w).collect()).collect();
    let local = LocalStructure { groups, local_parities: delta, global_parities: 2 };
    Ok(LinearCode::from_parity(h).with_role(Role::Mr, Some(r), None).with_local(local))
}

/// How the offsets `h_ij` of `θ_ij = ξ + h_ij` are drawn from the base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffsetChoice {
    /// `h_ij = γ^i β^j` with `β` of the smallest order `> r` dividing `Q-1`.
    RootsOfUnity,
    /// Distinct base-field elements from a seeded shuffle.
    Random { seed: u64 },
}

/// Outcome of a construction whose success is decided by exhaustive check.
#[derive(Clone, Debug)]
pub enum PmrVerdict {
    Pmr(LinearCode),
    /// `erasures` is a set of `d - 1` columns of `H` that is dependent.
    Counterexample {
        code: LinearCode,
        erasures: Vec<usize>,
    },
}

/// Default number of column subsets [`pmr_general_a1`] may examine.
pub const PMR_CHECK_BUDGET: u128 = 2_000_000;

/// Attempt at a PMR code with `r <= Δ <= 2r - 1` over `GF(Q^3)`.
///
/// `θ_ij = ξ + h_ij` with `ξ` primitive in `GF(Q^3)` and `h_ij` in the
/// subfield `GF(Q)`; local coefficients are `θ_ij` themselves. Whether every
/// `Δ + 2` columns of `H` are independent is then decided by enumeration.
pub fn pmr_general_a1(
    m: usize,
    r: usize,
    global: usize,
    base_q: u64,
    offsets: OffsetChoice,
    budget: u128,
) -> Result<PmrVerdict> {
    let p = PmrParams::new(m, r, global)?;
    if !(r..2 * r).contains(&global) {
        return Err(Error::InvalidParams(format!("need r <= global < 2r, got global={global}, r={r}")));
    }
    let (bp, be) = prime_power(base_q).ok_or(Error::InvalidParams(format!("{base_q} is not a prime power")))?;
    debug_assert!(is_prime(bp as u64));
    let spec = FieldSpec::new(bp, 3 * be, None)?;
    let big1 = spec.q() as u64 - 1;
    let gamma = spec.pow(spec.primitive(), big1 / (base_q - 1));
    if p.k0() > base_q as usize {
        return Err(Error::FieldTooSmall { q: base_q, need: p.k0() as u64 + 1 });
    }
    let h: Vec<Fe> = match offsets {
        OffsetChoice::RootsOfUnity => {
            let ord = (r as u64 + 1..=base_q - 1).find(|d| (base_q - 1) % d == 0).unwrap_or(base_q - 1);
            if (base_q - 1) / ord < m as u64 {
                return Err(Error::FieldTooSmall { q: base_q, need: ord * m as u64 + 1 });
            }
            let beta = spec.pow(gamma, (base_q - 1) / ord);
            (0..m)
                .flat_map(|i| (0..r).map(move |j| (i, j)))
                .map(|(i, j)| spec.mul(spec.pow(gamma, i as u64), spec.pow(beta, j as u64)))
                .collect()
        }
        OffsetChoice::Random { seed } => {
            let mut rng = SplitMix64::new(seed);
            let mut sub: Vec<Fe> =
                core::iter::once(Fe::ZERO).chain((0..base_q - 1).map(|e| spec.pow(gamma, e))).collect();
            rng.shuffle(&mut sub);
            sub.truncate(p.k0());
            sub
        }
    };
    let xi = spec.primitive();
    let theta: Vec<Fe> = h.iter().map(|&x| spec.add(xi, x)).collect();
    let hm = canonical_h(&spec, &p, &theta, &theta, global);
    let d = p.target_distance();
    let witness = dependent_columns_of_size(&hm, d - 1, budget)?;
    let mut code = pmr_code(hm, &p, Role::Pmr);
    Ok(match witness {
        None => {
            code.params.d_min = Some(d);
            PmrVerdict::Pmr(code)
        }
        Some(erasures) => PmrVerdict::Counterexample { code, erasures },
    })
}

/// Result of the greedy coset search.
#[derive(Clone, Debug)]
pub struct CosetCode {
    pub code: LinearCode,
    /// Indices of the chosen cosets of the cube roots of unity.
    pub cosets: Vec<usize>,
}

/// Whether every `min(k, 2c)` columns of `g`, taking at most two from each
/// triple, are independent.
fn admissible_mds(g: &Mat, triples: usize) -> bool {
    let k = g.rows();
    let take = k.min(2 * triples);
    for_each_subset(3 * triples, take, |s| {
        let mut per = vec![0u8; triples];
        for &c in s {
            per[c / 3] += 1;
            if per[c / 3] > 2 {
                return true;
            }
        }
        g.select_cols(s).expect("in range").rank() == take
    })
}

/// `(2, 1, s)` MR code of length `big_n` and dimension `2D + 1`: start from
/// the Tamo–Barg code with `r = 2` on all of `GF(q)^*` and keep `big_n / 3`
/// cosets of the cube roots of unity, chosen greedily so that every
/// admissible puncturing stays MDS.
pub fn mr_r2_coset_search(big_n: usize, d: usize, spec: &FieldSpec) -> Result<CosetCode> {
    let k = 2 * d + 1;
    let q1 = spec.q() as usize - 1;
    if big_n == 0 || big_n % 3 != 0 || 3 * k > 2 * big_n + 2 || q1 % 3 != 0 {
        return Err(Error::InvalidParams(format!(
            "need 3 | N, 3 | q-1 and 2D/N < 2/3, got N={big_n}, D={d}, q={}",
            q1 + 1
        )));
    }
    let wanted = big_n / 3;
    let (base, ev) = tamo_barg_code(q1, k, 2, spec)?;
    let g = base.generator();
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..ev.cosets.len() {
        if chosen.len() == wanted {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(c);
        let cols: Vec<usize> = trial.iter().flat_map(|&i| ev.cosets[i].iter().copied()).collect();
        if admissible_mds(&g.select_cols(&cols)?, trial.len()) {
            chosen = trial;
        }
    }
    if chosen.len() < wanted {
        return Err(Error::SearchExhausted { q: spec.q() as u64, placed: chosen.len(), wanted });
    }
    let cols: Vec<usize> = chosen.iter().flat_map(|&i| ev.cosets[i].iter().copied()).collect();
    let groups = (0..wanted).map(|i| (3 * i..3 * i + 3).collect()).collect();
    let local = LocalStructure { groups, local_parities: 1, global_parities: big_n - k - wanted };
    let code = LinearCode::from_generator(g.select_cols(&cols)?).with_role(Role::Mr, Some(2), None).with_local(local);
    Ok(CosetCode { code, cosets: chosen })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    // Oracle: every pattern that leaves at least `delta` erasures in each
    // group, `s` beyond that, keeps an information set among the survivors.
    fn mr_by_generator(c: &LinearCode, delta: usize, s: usize) -> bool {
        let groups = &c.local.as_ref().unwrap().groups;
        let n = c.n();
        let mut group_of = vec![0; n];
        for (i, g) in groups.iter().enumerate() {
            for &x in g {
                group_of[x] = i;
            }
        }
        let size = groups.len() * delta + s;
        crate::combi::for_each_subset(n, size, |e| {
            let mut per = vec![0; groups.len()];
            for &x in e {
                per[group_of[x]] += 1;
            }
            if per.iter().any(|&p| p < delta) {
                return true;
            }
            let keep: Vec<usize> = (0..n).filter(|x| !e.contains(x)).collect();
            c.generator().select_cols(&keep).unwrap().rank() == c.k()
        })
    }

    #[test]
    fn parity_split_examples() {
        assert!(pmr_parity_split(3, 4, 4, &gf(13)).is_err());
        let c = pmr_parity_split(3, 4, 3, &gf(13)).unwrap();
        assert_eq!((c.n(), c.k()), (15, 9));
        assert_eq!(c.min_distance().unwrap(), 5);
        let c = pmr_parity_split(2, 3, 2, &gf(7)).unwrap();
        assert_eq!((c.n(), c.k()), (8, 4));
        assert_eq!(c.min_distance().unwrap(), 4);
        // puncturing the local parities leaves an MDS code
        let p = c.puncture(&[0, 1]).unwrap();
        assert!(p.is_mds().unwrap());
        assert!(matches!(pmr_parity_split(3, 4, 3, &gf(11)), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn r12_examples() {
        let c = mr_r12(3, 2).unwrap();
        assert_eq!((c.n(), c.k(), c.spec().q()), (9, 4, 16));
        assert!(mr_by_generator(&c, 1, 2));
        let c = mr_r12(2, 3).unwrap();
        assert_eq!((c.n(), c.k(), c.spec().q()), (8, 4, 64));
        assert!(mr_by_generator(&c, 1, 2));
    }

    #[test]
    fn rdelta2_examples() {
        let c = mr_rdelta2(2, 2, 2, 4).unwrap();
        assert_eq!((c.n(), c.k(), c.spec().q()), (8, 2, 9));
        assert!(mr_by_generator(&c, 2, 2));
        let c = mr_rdelta2(3, 2, 1, 4).unwrap();
        assert_eq!((c.n(), c.k(), c.spec().q()), (9, 4, 13));
        assert!(mr_by_generator(&c, 1, 2));
        // each group is an MDS [r+δ, r] code: its δ local rows have every δ columns independent
        let c = mr_rdelta2(2, 3, 2, 5).unwrap();
        let h = c.parity_check().select_rows(&[0, 1]).unwrap().select_cols(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(crate::code::min_dependent_columns(&h), 3);
    }

    #[test]
    fn general_a1_plane_offsets() {
        match pmr_general_a1(3, 3, 5, 16, OffsetChoice::RootsOfUnity, PMR_CHECK_BUDGET).unwrap() {
            PmrVerdict::Pmr(c) => {
                assert_eq!((c.n(), c.k()), (12, 4));
                assert_eq!(c.spec().q(), 4096);
            }
            PmrVerdict::Counterexample { erasures, .. } => panic!("dependent columns {erasures:?}"),
        }
    }

    #[test]
    fn general_a1_random_verdict_is_consistent() {
        let v = pmr_general_a1(2, 2, 2, 4, OffsetChoice::Random { seed: 7 }, PMR_CHECK_BUDGET).unwrap();
        let (code, witness) = match v {
            PmrVerdict::Pmr(c) => (c, None),
            PmrVerdict::Counterexample { code, erasures } => (code, Some(erasures)),
        };
        let d = code.min_distance().unwrap();
        assert_eq!(witness.is_none(), d >= PmrParams::new(2, 2, 2).unwrap().target_distance());
    }

    #[test]
    fn coset_search_small() {
        let cc = mr_r2_coset_search(6, 1, &gf(13)).unwrap();
        assert_eq!((cc.code.n(), cc.code.k()), (6, 3));
        assert!(mr_by_generator(&cc.code, 1, 6 - 3 - 2));
        let cc = mr_r2_coset_search(3, 0, &gf(7)).unwrap();
        assert_eq!(cc.code.k(), 1);
    }

    #[test]
    fn coset_search_n9() {
        let cc = mr_r2_coset_search(9, 2, &gf(31)).unwrap();
        assert_eq!((cc.code.n(), cc.code.k()), (9, 5));
        assert!(mr_by_generator(&cc.code, 1, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn parity_split_meets_target(m in 1usize..4, r in 2usize..5, g in 1usize..4) {
            prop_assume!(g < r);
            let c = pmr_parity_split(m, r, g, &gf(16)).unwrap();
            prop_assert_eq!(c.min_distance().unwrap(), g + 2);
            let p = c.puncture(&(0..m).collect::<Vec<_>>()).unwrap();
            prop_assert!(p.is_mds().unwrap());
        }

        #[test]
        fn rdelta2_is_mr(m in 1usize..3, r in 1usize..3, delta in 1usize..3) {
            prop_assume!(m * r > 2);
            let c = mr_rdelta2(m, r, delta, r + delta).unwrap();
            prop_assert_eq!(c.k(), m * r - 2);
            prop_assert!(mr_by_generator(&c, delta, 2));
        }
    }
}
