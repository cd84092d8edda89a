//! Codes with locality for a single erasure, and codes with availability.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{LinearCode, LocalStructure, Role};
use crate::combi::{binomial, for_each_subset};
use crate::error::{Error, Result};
use crate::field::{vandermonde, Fe, FieldSpec, Mat};
use crate::graph::projective_plane_incidence;

/// Pyramid code: split the first parity of a systematic MDS code across
/// groups of `r` data symbols.
///
/// Layout: each data group is followed by its local parity, and the
/// remaining global parities come last.
pub fn pyramid_code(n: usize, k: usize, r: usize, spec: &FieldSpec) -> Result<LinearCode> {
    if k == 0 || r == 0 || r > k {
        return Err(Error::InvalidParams(format!("need 1 <= r <= k, got k={k}, r={r}")));
    }
    let groups = k.div_ceil(r);
    let n1 = (n + 1)
        .checked_sub(groups)
        .filter(|&n1| n1 > k)
        .ok_or_else(|| Error::InvalidParams(format!("n={n} leaves no global parity for k={k}, r={r}")))?;
    if (spec.q() as usize) < n1 {
        return Err(Error::FieldTooSmall { q: spec.q() as u64, need: n1 as u64 });
    }
    let pts: Vec<Fe> = (0..n1 as u32).map(Fe).collect();
    let (sys, _) = vandermonde(spec, &pts, k)?.rref();
    let mut g = Mat::zeros(spec, k, n);
    let mut layout = Vec::with_capacity(groups);
    let mut col = 0;
    for grp in 0..groups {
        let rows: Vec<usize> = (grp * r..((grp + 1) * r).min(k)).collect();
        let parity = col + rows.len();
        let mut members = Vec::new();
        for &i in &rows {
            g.set(i, col, Fe::ONE);
            g.set(i, parity, sys.get(i, k));
            members.push(col);
            col += 1;
        }
        members.push(col);
        col += 1;
        layout.push(members);
    }
    for j in k + 1..n1 {
        for i in 0..k {
            g.set(i, col, sys.get(i, j));
        }
        col += 1;
    }
    debug_assert_eq!(col, n);
    let local = LocalStructure { groups: layout, local_parities: 1, global_parities: n1 - k - 1 };
    Ok(LinearCode::from_generator(g).with_role(Role::Lr, Some(r), None).with_local(local))
}

/// Evaluation set split into cosets on which `x^{r+1}` is constant.
#[derive(Clone, Debug)]
pub struct EvalPoints {
    pub spec: FieldSpec,
    /// Coordinate `i` is evaluated at `points[i]`.
    pub points: Vec<Fe>,
    /// Coordinates of each coset, in order.
    pub cosets: Vec<Vec<usize>>,
    /// Degree of the polynomial `x^{r+1}` that is constant on each coset.
    pub good_degree: usize,
}

impl EvalPoints {
    /// The multiplicative subgroup of order `n` split into cosets of its
    /// subgroup of order `r + 1`.
    pub fn subgroup(spec: &FieldSpec, n: usize, r: usize) -> Result<Self> {
        let q1 = spec.q() as usize - 1;
        if n == 0 || q1 % n != 0 {
            return Err(Error::SubgroupUnavailable { q: spec.q() as u64, order: n as u64 });
        }
        if n % (r + 1) != 0 {
            return Err(Error::InvalidParams(format!("r+1={} does not divide n={n}", r + 1)));
        }
        let g = spec.pow(spec.primitive(), (q1 / n) as u64);
        let m = n / (r + 1);
        let mut points = Vec::with_capacity(n);
        let mut cosets = Vec::with_capacity(m);
        for i in 0..m {
            cosets.push((i * (r + 1)..(i + 1) * (r + 1)).collect());
            for j in 0..=r {
                points.push(spec.pow(g, (i + j * m) as u64));
            }
        }
        Ok(EvalPoints { spec: spec.clone(), points, cosets, good_degree: r + 1 })
    }

    /// `x^{r+1}` evaluated on each coset.
    pub fn good_values(&self) -> Vec<Fe> {
        self.cosets.iter().map(|c| self.spec.pow(self.points[c[0]], self.good_degree as u64)).collect()
    }

    /// A dual codeword supported on coset `c`: the weights under which every
    /// polynomial of degree below `r` sums to zero on the coset.
    pub fn local_check(&self, c: usize) -> Vec<Fe> {
        let f = &self.spec;
        let mut out = vec![Fe::ZERO; self.points.len()];
        for &i in &self.cosets[c] {
            let x = self.points[i];
            let den =
                self.cosets[c].iter().filter(|&&j| j != i).fold(Fe::ONE, |a, &j| f.mul(a, f.sub(x, self.points[j])));
            out[i] = f.inv(den).expect("distinct points");
        }
        out
    }
}

/// Tamo–Barg code: evaluations of `Σ a_ij x^i (x^{r+1})^j` on the subgroup
/// of order `n`, with `k = a r + b` coefficients.
pub fn tamo_barg_code(n: usize, k: usize, r: usize, spec: &FieldSpec) -> Result<(LinearCode, EvalPoints)> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidParams("k and r must be positive".into()));
    }
    let ev = EvalPoints::subgroup(spec, n, r)?;
    let (a, b) = (k / r, k % r);
    let mut exps: Vec<usize> = (0..a).flat_map(|j| (0..r).map(move |i| i + (r + 1) * j)).collect();
    exps.extend((0..b).map(|i| i + (r + 1) * a));
    if exps.iter().any(|&e| e >= n) {
        return Err(Error::InvalidParams(format!("k={k} too large for n={n}, r={r}")));
    }
    let g = Mat::from_fn(spec, k, n, |row, col| spec.pow(ev.points[col], exps[row] as u64));
    let local = LocalStructure { groups: ev.cosets.clone(), local_parities: 1, global_parities: 0 };
    let code = LinearCode::from_generator(g).with_role(Role::Lr, Some(r), None).with_local(local);
    Ok((code, ev))
}

/// Maximum block length for the product and Wang families.
pub const AVAIL_LENGTH_BUDGET: u128 = 1 << 14;

fn budget(needed: u128, what: &'static str) -> Result<()> {
    if needed > AVAIL_LENGTH_BUDGET {
        return Err(Error::BudgetExceeded { what, needed, budget: AVAIL_LENGTH_BUDGET });
    }
    Ok(())
}

fn gf2() -> FieldSpec {
    FieldSpec::new(2, 1, None).expect("GF(2) is valid")
}

/// `t`-fold product of the `[r+1, r]` parity code: one check per axis-parallel line.
pub fn product_avail_code(r: usize, t: usize) -> Result<LinearCode> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let side = r + 1;
    let n = (side as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    budget(n, "product code length")?;
    let n = n as usize;
    let stride: Vec<usize> = (0..t).map(|a| side.pow(a as u32)).collect();
    let mut rows = Vec::new();
    for axis in 0..t {
        for base in (0..n).filter(|&x| (x / stride[axis]) % side == 0) {
            rows.push((0..side).map(|i| base + i * stride[axis]).collect::<Vec<_>>());
        }
    }
    let spec = gf2();
    let mut h = Mat::zeros(&spec, rows.len(), n);
    for (i, line) in rows.iter().enumerate() {
        for &c in line {
            h.set(i, c, Fe::ONE);
        }
    }
    Ok(LinearCode::from_parity(h).with_role(Role::Sa, Some(r), Some(t)))
}

/// Containment matrix of `(t-1)`-subsets against `t`-subsets of `[r+t]`.
pub fn wang_avail_code(r: usize, t: usize) -> Result<LinearCode> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParams("r and t must be positive".into()));
    }
    let l = r + t;
    let n = binomial(l as u64, t as u64);
    budget(n, "Wang code length")?;
    let mut cols = Vec::new();
    for_each_subset(l, t, |s| {
        cols.push(s.iter().fold(0u64, |a, &i| a | 1 << i));
        true
    });
    let mut rows = Vec::new();
    for_each_subset(l, t - 1, |s| {
        rows.push(s.iter().fold(0u64, |a, &i| a | 1 << i));
        true
    });
    let h = Mat::from_fn(&gf2(), rows.len(), cols.len(), |i, j| Fe(u32::from(rows[i] & !cols[j] == 0)));
    Ok(LinearCode::from_parity(h).with_role(Role::Sa, Some(r), Some(t)))
}

/// Line–point incidence of PG(2, 2^s): `r = 2^s`, `t = 2^s + 1`.
pub fn pg_plane_sa_code(s: u32) -> Result<LinearCode> {
    if !(1..=6).contains(&s) {
        return Err(Error::InvalidParams(format!("s={s} outside 1..=6")));
    }
    let q = 1u64 << s;
    let g = projective_plane_incidence(q)?;
    let np = (q * q + q + 1) as usize;
    let mut h = Mat::zeros(&gf2(), np, np);
    for &(p, l) in g.edges() {
        h.set(l - np, p, Fe::ONE);
    }
    Ok(LinearCode::from_parity(h).with_role(Role::Sa, Some(q as usize), Some(q as usize + 1)))
}

/// Point–line incidence of PG(s-1, 2): rows are the `2^s - 1` points,
/// columns the lines `{a, b, a ^ b}`.
pub fn steiner_sa_code(s: u32) -> Result<LinearCode> {
    if !(3..=10).contains(&s) {
        return Err(Error::InvalidParams(format!("s={s} outside 3..=10")));
    }
    let m = (1usize << s) - 1;
    let mut lines = Vec::new();
    for a in 1..=m {
        for b in a + 1..=m {
            let c = a ^ b;
            if c > b {
                lines.push([a, b, c]);
            }
        }
    }
    let mut h = Mat::zeros(&gf2(), m, lines.len());
    for (j, line) in lines.iter().enumerate() {
        for &p in line {
            h.set(p - 1, j, Fe::ONE);
        }
    }
    let r = (1usize << (s - 1)) - 2;
    Ok(LinearCode::from_parity(h).with_role(Role::Sa, Some(r), Some(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::lr_singleton_bound;
    use proptest::prelude::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    fn weights(h: &Mat) -> (Vec<usize>, Vec<usize>) {
        ((0..h.rows()).map(|i| h.row_weight(i)).collect(), (0..h.cols()).map(|j| h.col_weight(j)).collect())
    }

    #[test]
    fn pyramid_examples() {
        let c = pyramid_code(7, 4, 2, &gf(8)).unwrap();
        assert_eq!((c.n(), c.k()), (7, 4));
        assert_eq!(c.min_distance().unwrap(), 3);
        let g = c.generator();
        // two groups: columns 0,1 + parity 2, columns 3,4 + parity 5
        assert_eq!(c.local.as_ref().unwrap().groups, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        for i in 0..2 {
            assert!(g.get(i, 3).is_zero() && g.get(i, 4).is_zero() && g.get(i, 5).is_zero());
        }
        let mds = pyramid_code(6, 3, 3, &gf(7)).unwrap();
        assert!(mds.is_mds().unwrap());
        assert!(matches!(pyramid_code(12, 4, 2, &gf(8)), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn tamo_barg_example() {
        let (c, ev) = tamo_barg_code(8, 4, 3, &gf(9)).unwrap();
        assert_eq!(c.k(), 4);
        assert_eq!(c.min_distance().unwrap() as i128, lr_singleton_bound(8, 4, 3).unwrap());
        assert_eq!(c.min_distance().unwrap(), 4);
        let vals = ev.good_values();
        for (ci, coset) in ev.cosets.iter().enumerate() {
            for &i in coset {
                assert_eq!(ev.spec.pow(ev.points[i], 4), vals[ci]);
            }
            let w = ev.local_check(ci);
            assert_eq!(w.iter().filter(|x| !x.is_zero()).count(), 4);
            let g = c.generator();
            for row in 0..g.rows() {
                let s = (0..8).fold(Fe::ZERO, |a, j| ev.spec.add(a, ev.spec.mul(g.get(row, j), w[j])));
                assert!(s.is_zero());
            }
        }
        assert!(matches!(tamo_barg_code(7, 3, 2, &gf(9)), Err(Error::SubgroupUnavailable { .. })));
    }

    #[test]
    fn product_codes() {
        let spc = product_avail_code(3, 1).unwrap();
        assert_eq!((spc.n(), spc.k()), (4, 3));
        let c = product_avail_code(2, 2).unwrap();
        assert_eq!((c.n(), c.k()), (9, 4));
        let c = product_avail_code(2, 3).unwrap();
        assert_eq!((c.n(), c.k()), (27, 8));
        assert!(matches!(product_avail_code(3, 8), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn wang_codes() {
        let c = wang_avail_code(2, 2).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        let c = wang_avail_code(3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (10, 6));
        let c = wang_avail_code(3, 3).unwrap();
        assert_eq!(c.parity_check().rank(), 10); // C(5, 2)
        let (rw, cw) = weights(c.parity_check());
        assert!(rw.iter().all(|&w| w == 4) && cw.iter().all(|&w| w == 3));
    }

    #[test]
    fn projective_plane_and_steiner() {
        let c = pg_plane_sa_code(2).unwrap();
        assert_eq!((c.n(), c.k(), c.parity_check().rank()), (21, 11, 10));
        assert_eq!(c.min_distance().unwrap(), 6);
        assert_eq!(crate::bounds::sa_blocklength_bound(4, 5).unwrap(), 21);
        let f = steiner_sa_code(3).unwrap();
        assert_eq!((f.n(), f.k()), (7, 3));
        assert_eq!(f.min_distance().unwrap(), 4);
        let s4 = steiner_sa_code(4).unwrap();
        assert_eq!((s4.n(), s4.k()), (35, 35 - 15 + 4));
        let (rw, cw) = weights(s4.parity_check());
        assert!(rw.iter().all(|&w| w == 7) && cw.iter().all(|&w| w == 3));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn pyramid_meets_singleton(k in 2usize..6, r in 1usize..4, extra in 1usize..3) {
            prop_assume!(r <= k);
            let n = k + k.div_ceil(r) + extra;
            let c = pyramid_code(n, k, r, &gf(16)).unwrap();
            prop_assert_eq!(c.k(), k);
            prop_assert_eq!(c.min_distance().unwrap() as i128, lr_singleton_bound(n as u64, k as u64, r as u64).unwrap());
        }

        #[test]
        fn tamo_barg_meets_singleton(r in 1usize..4, groups in 1usize..4, k in 1usize..8) {
            let n = (r + 1) * groups;
            let q = [7u64, 9, 13, 16, 25, 27, 49].into_iter().find(|q| (q - 1) % n as u64 == 0).unwrap_or(0);
            prop_assume!(q > 0);
            if let Ok((c, _)) = tamo_barg_code(n, k, r, &gf(q)) {
                prop_assert_eq!(c.k(), k);
                prop_assert_eq!(c.min_distance().unwrap() as i128, lr_singleton_bound(n as u64, k as u64, r as u64).unwrap());
            }
        }

        #[test]
        fn sa_weights_are_constant(r in 1usize..5, t in 1usize..4) {
            for c in [product_avail_code(r, t).unwrap(), wang_avail_code(r, t).unwrap()] {
                let (rw, cw) = weights(c.parity_check());
                prop_assert!(rw.iter().all(|&w| w == r + 1));
                prop_assert!(cw.iter().all(|&w| w == t));
                prop_assert_eq!(rw.len() * (r + 1), c.n() * t);
            }
            let w = wang_avail_code(r, t).unwrap();
            prop_assert_eq!(w.parity_check().rank() as u128, binomial((r + t - 1) as u64, (t - 1) as u64));
        }
    }
}
