//! Property verifiers. Each check returns a [`VerifyReport`]; a failing
//! report always carries a witness.
//!
//! Pattern checks (sequential recovery, PMDS) enumerate erasure sets in
//! lexicographic rank order so a caller can split the rank range into shards
//! and [`VerifyReport::merge`] the results.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::lr_singleton_bound;
use crate::code::{LinearCode, LocalStructure};
use crate::combi::{binomial, for_each_subset_in};
use crate::construct_seq::StaircaseProfile;
use crate::error::{Error, Result};
use crate::field::{Fe, Mat};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Exhaustive pattern enumeration limit before downgrading to sampling.
pub const PATTERN_BUDGET: u128 = 1_000_000;
pub const DEFAULT_SAMPLES: u64 = 100_000;
/// Dual codewords are enumerated in full only up to this many.
pub const DUAL_ENUM_BUDGET: u128 = 1 << 20;
const DUAL_ENUM_MAX_N: usize = 14;
const PACKING_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
    Certificate,
}

/// What the caller asks for. `Auto` prefers a certificate, then exhaustive
/// enumeration, then sampling once the budget is exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeRequest {
    Auto,
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
    Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: ModeRequest,
    pub budget: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { mode: ModeRequest::Auto, budget: PATTERN_BUDGET }
    }
}

/// Split of a rate-optimal `t = 2` code into MDS blocks and a graph part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T2Partition {
    /// Coordinates of each `[r+2, r]` block.
    pub mds_blocks: Vec<Vec<usize>>,
    /// Coordinates of the regular-graph component.
    pub graph_part: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An erasure set, or a set of coordinates, that breaks the property.
    Pattern(Vec<usize>),
    /// Columns forming a short cycle in the check graph.
    Cycle(Vec<usize>),
    Coordinate(usize),
    Profile(StaircaseProfile),
    Partition(T2Partition),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub property: &'static str,
    pub verdict: Verdict,
    pub mode: Mode,
    pub witness: Option<Witness>,
    /// Patterns, coordinates or pairs examined.
    pub checked: u128,
    pub budget: u128,
    pub notes: Vec<String>,
}

impl VerifyReport {
    fn new(property: &'static str, mode: Mode, budget: u128) -> Self {
        VerifyReport { property, verdict: Verdict::Pass, mode, witness: None, checked: 0, budget, notes: Vec::new() }
    }

    fn fail(mut self, w: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Combines two shards of the same check. The first failing shard's
    /// witness wins.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.checked += other.checked;
        if self.verdict == Verdict::Pass && other.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
            self.witness = other.witness;
        }
        self.notes.extend(other.notes);
        self
    }
}

type PatternFn<'a> = Box<dyn Fn(&[usize]) -> bool + Send + Sync + 'a>;

/// An erasure-pattern property over all `size`-subsets of `0..n`: subsets
/// rejected by `filter` are skipped, the rest must satisfy `test`.
pub struct PatternCheck<'a> {
    pub property: &'static str,
    pub n: usize,
    pub size: usize,
    filter: PatternFn<'a>,
    test: PatternFn<'a>,
}

impl<'a> PatternCheck<'a> {
    /// Number of subsets in the rank range, before filtering.
    pub fn total(&self) -> u128 {
        binomial(self.n as u64, self.size as u64)
    }

    /// Exhaustive run over lexicographic ranks `from..to`.
    pub fn run_range(&self, from: u128, to: u128, budget: u128) -> VerifyReport {
        let mut rep = VerifyReport::new(self.property, Mode::Exhaustive, budget);
        let mut bad = None;
        for_each_subset_in(self.n, self.size, from, to, |s| {
            if !(self.filter)(s) {
                return true;
            }
            rep.checked += 1;
            if !(self.test)(s) {
                bad = Some(s.to_vec());
                return false;
            }
            true
        });
        match bad {
            Some(s) => rep.fail(Witness::Pattern(s)),
            None => rep,
        }
    }

    pub fn run_sampled(&self, seed: u64, samples: u64, budget: u128) -> VerifyReport {
        let mut rep = VerifyReport::new(self.property, Mode::Sampled { seed, samples }, budget);
        let mut rng = SplitMix64::new(seed);
        // rejection sampling against the filter, with a cap on wasted draws
        let mut draws = 0u64;
        while (rep.checked as u64) < samples && draws < samples.saturating_mul(64) {
            draws += 1;
            let s = rng.subset(self.n, self.size);
            if !(self.filter)(&s) {
                continue;
            }
            rep.checked += 1;
            if !(self.test)(&s) {
                return rep.fail(Witness::Pattern(s));
            }
        }
        if (rep.checked as u64) < samples {
            rep.notes.push(format!("only {} admissible samples in {draws} draws", rep.checked));
        }
        rep
    }

    pub fn run(&self, opts: VerifyOptions) -> VerifyReport {
        let total = self.total();
        match opts.mode {
            ModeRequest::Sampled { seed, samples } => self.run_sampled(seed, samples, opts.budget),
            _ if total <= opts.budget => self.run_range(0, total, opts.budget),
            _ => {
                let mut rep = self.run_sampled(0, DEFAULT_SAMPLES, opts.budget);
                rep.notes.push(format!("{total} patterns exceed budget {}; sampled instead", opts.budget));
                rep
            }
        }
    }
}

fn rows_as_checks(h: &Mat, max_weight: usize) -> BTreeSet<Vec<usize>> {
    (0..h.rows()).map(|i| h.row_support(i)).filter(|s| !s.is_empty() && s.len() <= max_weight).collect()
}

/// Supports of dual codewords of weight at most `r+1`: the low-weight rows of
/// `H`, plus every such dual word when the dual is small enough to list.
pub fn local_dual_supports(c: &LinearCode, r: usize) -> Vec<Vec<usize>> {
    let h = c.parity_check();
    let mut out = rows_as_checks(h, r + 1);
    let basis = c.full_rank_parity();
    let q = c.spec().q() as u128;
    let words = q.checked_pow(basis.rows() as u32).unwrap_or(u128::MAX);
    if c.n() <= DUAL_ENUM_MAX_N && words <= DUAL_ENUM_BUDGET {
        let f = c.spec();
        let mut coef = vec![0u32; basis.rows()];
        let mut word = vec![Fe::ZERO; c.n()];
        for _ in 1..words {
            // next coefficient vector in base-q counting order
            for slot in coef.iter_mut() {
                *slot += 1;
                if *slot < q as u32 {
                    break;
                }
                *slot = 0;
            }
            word.iter_mut().for_each(|x| *x = Fe::ZERO);
            for (i, &a) in coef.iter().enumerate() {
                if a != 0 {
                    for (j, x) in word.iter_mut().enumerate() {
                        *x = f.add(*x, f.mul(Fe(a), basis.get(i, j)));
                    }
                }
            }
            let supp: Vec<usize> = (0..c.n()).filter(|&j| !word[j].is_zero()).collect();
            if supp.len() <= r + 1 {
                out.insert(supp);
            }
        }
    }
    out.into_iter().collect()
}

/// Peeling decoder: repeatedly fixes an erased symbol that is the only
/// erasure inside some check. Returns whether everything is recovered.
pub fn peels(checks: &[Vec<usize>], by_col: &[Vec<usize>], erased: &[usize]) -> bool {
    let mut gone: BTreeSet<usize> = erased.iter().copied().collect();
    let mut progress = true;
    while progress && !gone.is_empty() {
        progress = false;
        let snapshot: Vec<usize> = gone.iter().copied().collect();
        for e in snapshot {
            if by_col[e].iter().any(|&ci| checks[ci].iter().all(|x| *x == e || !gone.contains(x))) {
                gone.remove(&e);
                progress = true;
            }
        }
    }
    gone.is_empty()
}

fn index_by_col(checks: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut by_col = vec![Vec::new(); n];
    for (ci, s) in checks.iter().enumerate() {
        for &j in s {
            by_col[j].push(ci);
        }
    }
    by_col
}

/// Every erasure set of size exactly `t` peels using checks of weight at most
/// `r+1`. Peelability is monotone, so this covers all sets of size `<= t`.
pub fn seq_recovery_patterns(c: &LinearCode, r: usize, t: usize) -> PatternCheck<'static> {
    let n = c.n();
    let checks = local_dual_supports(c, r);
    let by_col = index_by_col(&checks, n);
    PatternCheck {
        property: "sequential recovery",
        n,
        size: t.min(n),
        filter: Box::new(|_| true),
        test: Box::new(move |s| peels(&checks, &by_col, s)),
    }
}

enum Certificate {
    Girth(Option<usize>),
    Short(Vec<usize>),
}

/// When every column of `H` has weight 1 or 2 and rows are light, `H` is the
/// incidence matrix of a graph (weight-1 columns meet a virtual apex). Over
/// GF(2), peeling `t` erasures works iff that graph has girth `> t`.
fn graph_certificate(h: &Mat, r: usize, t: usize) -> Option<Certificate> {
    let n = h.cols();
    if (0..h.rows()).any(|i| h.row_weight(i) > r + 1) {
        return None;
    }
    let t_h = h.transpose();
    let apex = h.rows();
    let mut edges = Vec::with_capacity(n);
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for j in 0..n {
        let s = t_h.row_support(j);
        let e = match s.len() {
            0 => return Some(Certificate::Short(vec![j])),
            1 => (s[0], apex),
            2 => (s[0], s[1]),
            _ => return None,
        };
        if let Some(&other) = seen.get(&e) {
            return Some(Certificate::Short(vec![other, j]));
        }
        seen.insert(e, j);
        edges.push(e);
    }
    let g = Graph::new(apex + 1, edges).ok()?;
    match g.shortest_cycle() {
        Some(cyc) if cyc.len() <= t => {
            let cols = (0..cyc.len())
                .map(|i| {
                    let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                    seen[&(a.min(b), a.max(b))]
                })
                .collect();
            Some(Certificate::Short(cols))
        }
        other => Some(Certificate::Girth(other.map(|c| c.len()))),
    }
}

/// The girth certificate, when it settles the question: always for a graph
/// code over GF(2), and only on a pass for larger fields.
pub fn seq_recovery_certificate(c: &LinearCode, r: usize, t: usize) -> Option<VerifyReport> {
    let mut rep = VerifyReport::new("sequential recovery", Mode::Certificate, 0);
    match graph_certificate(c.parity_check(), r, t)? {
        Certificate::Girth(g) => {
            rep.notes.push(match g {
                Some(g) => format!("check graph girth {g} > t = {t}"),
                None => "check graph is a forest".into(),
            });
            Some(rep)
        }
        Certificate::Short(cols) if c.spec().is_binary() => Some(rep.fail(Witness::Cycle(cols))),
        // over larger fields a short cycle need not block recovery
        Certificate::Short(_) => None,
    }
}

/// Sequential recovery of any `t` erasures with locality `r`.
pub fn seq_recovery_check(c: &LinearCode, r: usize, t: usize, opts: VerifyOptions) -> VerifyReport {
    if matches!(opts.mode, ModeRequest::Auto | ModeRequest::Certificate) {
        if let Some(mut rep) = seq_recovery_certificate(c, r, t) {
            rep.budget = opts.budget;
            return rep;
        }
    }
    seq_recovery_patterns(c, r, t).run(opts)
}

/// Each coordinate has `t` recovery sets of size at most `r`, pairwise
/// disjoint.
pub fn availability_check(c: &LinearCode, r: usize, t: usize) -> Result<VerifyReport> {
    let supports = local_dual_supports(c, r);
    let mut rep = VerifyReport::new("availability", Mode::Exhaustive, PACKING_BUDGET as u128);
    let mut spent = 0u64;
    for i in 0..c.n() {
        let mut sets: Vec<Vec<usize>> = supports
            .iter()
            .filter(|s| s.contains(&i))
            .map(|s| s.iter().copied().filter(|&x| x != i).collect())
            .collect();
        sets.sort_by_key(|s| s.len());
        rep.checked += 1;
        let mut used = BTreeSet::new();
        if !pack(&sets, 0, t, &mut used, &mut spent)? {
            return Ok(rep.fail(Witness::Coordinate(i)));
        }
    }
    Ok(rep)
}

fn pack(sets: &[Vec<usize>], from: usize, need: usize, used: &mut BTreeSet<usize>, spent: &mut u64) -> Result<bool> {
    if need == 0 {
        return Ok(true);
    }
    *spent += 1;
    if *spent > PACKING_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "recovery-set packing",
            needed: *spent as u128,
            budget: PACKING_BUDGET as u128,
        });
    }
    for (k, s) in sets.iter().enumerate().skip(from) {
        if sets.len() - k < need {
            break;
        }
        if s.iter().any(|x| used.contains(x)) {
            continue;
        }
        used.extend(s.iter().copied());
        let ok = pack(sets, k + 1, need - 1, used, spent)?;
        for x in s {
            used.remove(x);
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Strict availability read off `H`: rows of weight `r+1`, columns of weight
/// `t`, and the `t` rows through a column share only that column.
pub fn sa_check(h: &Mat, r: usize, t: usize) -> VerifyReport {
    let mut rep = VerifyReport::new("strict availability", Mode::Exhaustive, 0);
    for i in 0..h.rows() {
        rep.checked += 1;
        let w = h.row_weight(i);
        if w != r + 1 {
            return rep.fail(Witness::Note(format!("row {i} has weight {w}, expected {}", r + 1)));
        }
    }
    let supports: Vec<BTreeSet<usize>> = (0..h.rows()).map(|i| h.row_support(i).into_iter().collect()).collect();
    let t_h = h.transpose();
    for j in 0..h.cols() {
        rep.checked += 1;
        let rows = t_h.row_support(j);
        if rows.len() != t {
            return rep.fail(Witness::Note(format!("column {j} has weight {}, expected {t}", rows.len())));
        }
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                let shared: Vec<usize> = supports[rows[a]].intersection(&supports[rows[b]]).copied().collect();
                if shared != [j] {
                    return rep.fail(Witness::Pattern(shared));
                }
            }
        }
    }
    rep
}

fn local_structure(c: &LinearCode) -> Result<&LocalStructure> {
    c.local.as_ref().ok_or_else(|| Error::InvalidParams("code carries no local group structure".into()))
}

/// Each group's local code is an `[r+δ, r, δ+1]` MDS code, checked on the
/// dual words supported inside the group.
fn local_groups_mds(c: &LinearCode, ls: &LocalStructure) -> Result<Option<Witness>> {
    let dual = c.dual();
    for (gi, g) in ls.groups.iter().enumerate() {
        let outside: Vec<usize> = (0..c.n()).filter(|j| !g.contains(j)).collect();
        let local = dual.shorten(&outside)?;
        if local.k() != ls.local_parities {
            return Ok(Some(Witness::Note(format!(
                "group {gi} has {} local checks, expected {}",
                local.k(),
                ls.local_parities
            ))));
        }
        if !local.is_mds()? {
            return Ok(Some(Witness::Note(format!("local code of group {gi} is not MDS"))));
        }
    }
    Ok(None)
}

/// The first `mδ` rows of `H` are the local checks, `δ` per group in group
/// order, each supported inside its group.
pub fn topology_check(c: &LinearCode) -> Result<VerifyReport> {
    let ls = local_structure(c)?;
    let h = c.parity_check();
    let delta = ls.local_parities;
    let mut rep = VerifyReport::new("local check layout", Mode::Exhaustive, 0);
    if h.rows() < ls.groups.len() * delta {
        return Ok(rep.fail(Witness::Note(format!("{} rows cannot hold the local checks", h.rows()))));
    }
    for (gi, g) in ls.groups.iter().enumerate() {
        for row in gi * delta..(gi + 1) * delta {
            rep.checked += 1;
            let outside: Vec<usize> = h.row_support(row).into_iter().filter(|j| !g.contains(j)).collect();
            if !outside.is_empty() {
                return Ok(rep.fail(Witness::Pattern(outside)));
            }
        }
    }
    Ok(rep)
}

/// Erasure sets with at least `δ` per group and `mδ + s` in total.
pub fn pmds_patterns(c: &LinearCode) -> Result<PatternCheck<'static>> {
    let ls = local_structure(c)?.clone();
    let n = c.n();
    let mut group_of = vec![usize::MAX; n];
    for (gi, g) in ls.groups.iter().enumerate() {
        for &j in g {
            if group_of[j] != usize::MAX {
                return Err(Error::InvalidParams("PMDS groups must be disjoint".into()));
            }
            group_of[j] = gi;
        }
    }
    let m = ls.groups.len();
    let delta = ls.local_parities;
    let size = m * delta + ls.global_parities;
    let h = c.full_rank_parity();
    if size > n {
        return Err(Error::InvalidParams(format!("{size} erasures exceed length {n}")));
    }
    Ok(PatternCheck {
        property: "maximally recoverable",
        n,
        size,
        filter: Box::new(move |s| {
            let mut per = vec![0usize; m];
            for &j in s {
                if group_of[j] == usize::MAX {
                    return false;
                }
                per[group_of[j]] += 1;
            }
            per.iter().all(|&x| x >= delta)
        }),
        test: Box::new(move |s| h.select_cols(s).expect("in range").rank() == s.len()),
    })
}

/// Maximal recoverability for the grouped topology: local MDS groups, and
/// every admissible erasure set is correctable.
pub fn pmds_check(c: &LinearCode, opts: VerifyOptions) -> Result<VerifyReport> {
    let local = pmds_local_check(c)?;
    if !local.passed() {
        return Ok(local);
    }
    Ok(pmds_patterns(c)?.run(opts))
}

/// The group half of [`pmds_check`]: every local code is MDS of the declared
/// redundancy.
pub fn pmds_local_check(c: &LinearCode) -> Result<VerifyReport> {
    let ls = local_structure(c)?;
    let mut rep = VerifyReport::new("maximally recoverable", Mode::Exhaustive, 0);
    rep.checked = ls.groups.len() as u128;
    Ok(match local_groups_mds(c, ls)? {
        Some(w) => rep.fail(w),
        None => rep,
    })
}

/// Partial maximal recoverability: puncturing one private coordinate per
/// group leaves an MDS code, and the distance meets the locality bound.
pub fn pmr_check(c: &LinearCode) -> Result<VerifyReport> {
    let ls = local_structure(c)?;
    let mut rep = VerifyReport::new("partial maximal recoverability", Mode::Exhaustive, 0);
    let mut punct = Vec::with_capacity(ls.groups.len());
    for (gi, g) in ls.groups.iter().enumerate() {
        let private = g.iter().copied().find(|j| ls.groups.iter().enumerate().all(|(o, h)| o == gi || !h.contains(j)));
        match private {
            Some(j) => punct.push(j),
            None => return Ok(rep.fail(Witness::Note(format!("group {gi} has no private coordinate")))),
        }
    }
    rep.checked = 2;
    if !c.puncture(&punct)?.is_mds()? {
        return Ok(rep.fail(Witness::Pattern(punct)));
    }
    let r = c.params.r.unwrap_or_else(|| ls.groups.iter().map(Vec::len).max().unwrap_or(1) - 1);
    let bound = lr_singleton_bound(c.n() as u64, c.k() as u64, r as u64)?;
    let d = c.min_distance()?;
    if d as i128 != bound {
        return Ok(rep.fail(Witness::Note(format!("distance {d}, locality bound {bound}"))));
    }
    rep.notes.push(format!("d = {d} meets the bound"));
    Ok(rep)
}

/// Reads the layered ("staircase") form off `H`: nodes are rows plus an apex,
/// edges are columns, and layers are BFS distances from the apex.
pub fn staircase_check(h: &Mat, r: usize, t: usize) -> VerifyReport {
    let mut rep = VerifyReport::new("staircase form", Mode::Certificate, 0);
    let s = (t.max(1) - 1) / 2;
    let t_h = h.transpose();
    let virtual_apex = (0..h.cols()).any(|j| t_h.row_weight(j) == 1);
    let apex = if virtual_apex { h.rows() } else { 0 };
    let nodes = h.rows() + virtual_apex as usize;
    let mut edges = Vec::with_capacity(h.cols());
    for j in 0..h.cols() {
        let sup = t_h.row_support(j);
        match sup.len() {
            1 => edges.push((sup[0], apex)),
            2 => edges.push((sup[0], sup[1])),
            w => return rep.fail(Witness::Note(format!("column {j} has weight {w}"))),
        }
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut dist = vec![usize::MAX; nodes];
    dist[apex] = 0;
    let mut queue = alloc::collections::VecDeque::from([apex]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if let Some(v) = (0..nodes).find(|&v| dist[v] == usize::MAX) {
        return rep.fail(Witness::Note(format!("row {v} is unreachable")));
    }
    let top = dist.iter().copied().max().unwrap_or(0);
    if top != s + 1 {
        return rep.fail(Witness::Note(format!("{top} layers, expected {}", s + 1)));
    }
    let mut rows = vec![0usize; s + 1];
    let mut parents = vec![0usize; nodes];
    let mut cols = vec![0usize; s + 2];
    for (j, &(a, b)) in edges.iter().enumerate() {
        let (da, db) = (dist[a], dist[b]);
        if da == db {
            if da != top || t % 2 == 1 {
                return rep.fail(Witness::Pattern(vec![j]));
            }
            cols[s + 1] += 1;
        } else {
            let child = if da > db { a } else { b };
            parents[child] += 1;
            cols[dist[child] - 1] += 1;
        }
    }
    for v in (0..nodes).filter(|&v| v != apex) {
        rep.checked += 1;
        rows[dist[v] - 1] += 1;
        let last = dist[v] == top;
        if parents[v] != 1 && !(last && t % 2 == 1) {
            return rep.fail(Witness::Note(format!("row {v} in layer {} has {} parents", dist[v] - 1, parents[v])));
        }
    }
    if let Some(i) = (1..=s).find(|&i| rows[i] > rows[i - 1] * r) {
        return rep.fail(Witness::Note(format!("layer {i} has {} rows, more than {} x {r}", rows[i], rows[i - 1])));
    }
    if cols[s + 1] == 0 {
        cols.pop();
    }
    rep.witness = Some(Witness::Profile(StaircaseProfile { s, cols, rows }));
    rep
}

/// Decomposes a rate-optimal `t = 2` code with light rows into disjoint
/// `[r+2, r]` MDS blocks and a regular-graph component.
pub fn classify_rate_optimal_t2(c: &LinearCode, r: usize) -> Result<VerifyReport> {
    let (n, k) = (c.n(), c.k());
    if (k * (r + 2)) != n * r {
        return Err(Error::NotRateOptimal);
    }
    let mut rep = VerifyReport::new("rate-optimal t=2 structure", Mode::Exhaustive, 0);
    // a basis of the dual made of weight <= r+1 rows of H
    let h = c.parity_check();
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc: Option<Mat> = None;
    for i in (0..h.rows()).filter(|&i| (1..=r + 1).contains(&h.row_weight(i))) {
        let row = h.select_rows(&[i])?;
        let next = match &acc {
            Some(a) => a.vstack(&row)?,
            None => row,
        };
        if next.rank() > chosen.len() {
            chosen.push(i);
            acc = Some(next);
        }
    }
    if chosen.len() != n - k {
        return Ok(rep.fail(Witness::Note(format!("light rows span {} of {} dual dimensions", chosen.len(), n - k))));
    }
    let supports: Vec<BTreeSet<usize>> = chosen.iter().map(|&i| h.row_support(i).into_iter().collect()).collect();
    let mut partner: Vec<Option<usize>> = vec![None; supports.len()];
    for a in 0..supports.len() {
        for b in a + 1..supports.len() {
            rep.checked += 1;
            let shared = supports[a].intersection(&supports[b]).count();
            if shared == r && r > 1 {
                if partner[a].is_some() || partner[b].is_some() {
                    return Ok(rep.fail(Witness::Pattern(vec![chosen[a], chosen[b]])));
                }
                partner[a] = Some(b);
                partner[b] = Some(a);
            } else if shared > 1 {
                return Ok(rep.fail(Witness::Pattern(vec![chosen[a], chosen[b]])));
            }
        }
    }
    let mut mds_blocks = Vec::new();
    let mut in_block = BTreeSet::new();
    for a in 0..supports.len() {
        if let Some(b) = partner[a].filter(|&b| b > a) {
            let block: BTreeSet<usize> = supports[a].union(&supports[b]).copied().collect();
            if block.len() != r + 2 {
                return Ok(rep.fail(Witness::Pattern(block.into_iter().collect())));
            }
            in_block.extend(block.iter().copied());
            mds_blocks.push(block.into_iter().collect::<Vec<_>>());
        }
    }
    let graph_part: Vec<usize> = (0..n).filter(|j| !in_block.contains(j)).collect();
    for (a, sup) in supports.iter().enumerate() {
        if partner[a].is_none() && sup.iter().any(|j| in_block.contains(j)) {
            return Ok(rep.fail(Witness::Note(format!("row {} touches an MDS block", chosen[a]))));
        }
    }
    rep.witness = Some(Witness::Partition(T2Partition { mds_blocks, graph_part }));
    Ok(rep)
}
