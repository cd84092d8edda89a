//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Oracles here are written independently of the library's
//! verifiers.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lrc_core::bounds::{
    avail_dmin_bounds, avail_rate_bounds, cutset_bound, hamming_type_bound, msr_point, msr_subpkt_bounds, msw_sequence,
    sa_blocklength_bound, seq_blocklength_bounds, seq_rate_bound, RgParams, SubpktMode,
};
use lrc_core::combi::{binomial, for_each_subset};
use lrc_core::construct_seq::{moore_code, seq_general_code, t2_turan_code, t3_catalog, AuxChoice, T3Example};
use lrc_core::graph::{complete_graph, incidence_code};
use lrc_core::lr_avail::{pg_plane_sa_code, product_avail_code, pyramid_code, steiner_sa_code, wang_avail_code};
use lrc_core::mr::{mr_r12, mr_rdelta2, pmr_general_a1, pmr_parity_split, OffsetChoice, PmrVerdict, PMR_CHECK_BUDGET};
use lrc_core::rng::SplitMix64;
use lrc_core::verify::{
    availability_check, pmds_check, pmr_check, sa_check, seq_recovery_certificate, seq_recovery_check, topology_check,
    Mode, ModeRequest, VerifyOptions,
};
use lrc_core::{Fe, FieldSpec, LinearCode, Mat};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn rate(c: &LinearCode) -> String {
    let g = gcd(c.k(), c.n());
    format!("{}/{}", c.k() / g, c.n() / g)
}

fn exhaustive(budget: u128) -> VerifyOptions {
    VerifyOptions { mode: ModeRequest::Exhaustive, budget }
}

/// Supports of all dual codewords of weight at most `w`, by enumerating
/// every combination of the rows of a full-rank parity-check matrix.
fn light_dual_words(c: &LinearCode, w: usize) -> Vec<Vec<usize>> {
    let h = c.full_rank_parity();
    let f = c.spec();
    let q = f.q() as u64;
    let rows = h.rows();
    let total = q.pow(rows as u32);
    let mut out = std::collections::BTreeSet::new();
    for idx in 1..total {
        let mut word = vec![Fe::ZERO; c.n()];
        let mut x = idx;
        for i in 0..rows {
            let a = Fe((x % q) as u32);
            x /= q;
            if a.is_zero() {
                continue;
            }
            for (j, slot) in word.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(a, h.get(i, j)));
            }
        }
        let supp: Vec<usize> = (0..c.n()).filter(|&j| !word[j].is_zero()).collect();
        if supp.len() <= w {
            out.insert(supp);
        }
    }
    out.into_iter().collect()
}

/// Some order of the erased symbols admits, at each step, a light dual word
/// meeting the still-erased set only in the symbol being recovered.
fn recoverable_by_ordering(words: &[Vec<usize>], erased: &[usize]) -> bool {
    erased.is_empty()
        || (0..erased.len()).any(|i| {
            let rest: Vec<usize> = erased.iter().copied().filter(|&x| x != erased[i]).collect();
            words.iter().any(|w| w.contains(&erased[i]) && rest.iter().all(|x| !w.contains(x)))
                && recoverable_by_ordering(words, &rest)
        })
}

fn seq_oracle(c: &LinearCode, r: usize, t: usize) -> bool {
    let words = light_dual_words(c, r + 1);
    (1..=t).all(|s| for_each_subset(c.n(), s, |e| recoverable_by_ordering(&words, e)))
}

/// Every admissible erasure pattern leaves an information set, checked on
/// the generator matrix.
fn mr_oracle(c: &LinearCode) -> bool {
    let ls = c.local.as_ref().expect("grouped code");
    let size = ls.groups.len() * ls.local_parities + ls.global_parities;
    let g = c.generator();
    for_each_subset(c.n(), size, |e| {
        let admissible = ls.groups.iter().all(|grp| grp.iter().filter(|j| e.contains(j)).count() >= ls.local_parities);
        if !admissible {
            return true;
        }
        let keep: Vec<usize> = (0..c.n()).filter(|j| !e.contains(j)).collect();
        g.select_cols(&keep).unwrap().rank() == c.k()
    })
}

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    for (t, n, k) in [(4u64, 15, 6), (5, 21, 8)] {
        let c = moore_code(2, t).map_err(|e| e.to_string())?;
        ensure(c.n() == n && c.k() == k, format!("t={t}: got ({}, {})", c.n(), c.k()))?;
        let bound = seq_rate_bound(2, t).map_err(|e| e.to_string())?.to_string();
        ensure(rate(&c) == bound, format!("t={t}: rate {} vs bound {bound}", rate(&c)))?;
        let rep = seq_recovery_check(&c, 2, t as usize, exhaustive(1_000_000));
        ensure(rep.passed() && rep.mode == Mode::Exhaustive, format!("t={t}: {rep:?}"))?;
        parts.push(format!("({n},{k}) rate {bound}, {} patterns", rep.checked));
    }
    Ok(parts.join("; "))
}

fn criterion_2() -> Outcome {
    let sc = seq_general_code(3, 5, AuxChoice::default()).map_err(|e| e.to_string())?;
    let c = &sc.code;
    ensure(c.n() == 1352, format!("n = {}", c.n()))?;
    let rank = c.parity_check().rank();
    ensure(rank == 650, format!("rank(H) = {rank}"))?;
    ensure(rate(c) == "27/52" && seq_rate_bound(3, 5).unwrap().to_string() == "27/52", format!("rate {}", rate(c)))?;
    ensure(c.n() == 26 * 52, "length is not 26 * 52")?;
    let girth = sc.provenance.girth.unwrap_or(usize::MAX);
    ensure(girth >= 6, format!("girth {girth}"))?;
    let cert = seq_recovery_certificate(c, 3, 5).ok_or("no certificate")?;
    ensure(cert.passed(), format!("{cert:?}"))?;
    let seed = 0;
    let rep =
        seq_recovery_check(c, 3, 5, VerifyOptions { mode: ModeRequest::Sampled { seed, samples: 100_000 }, budget: 0 });
    ensure(rep.passed() && rep.checked == 100_000, format!("{:?} after {}", rep.witness, rep.checked))?;
    Ok(format!("(1352, 702), rank 650, rate 27/52, girth {girth}, 100000 sampled 5-erasure sets recover (seed {seed})"))
}

fn criterion_3() -> Outcome {
    for (which, n, k, r) in [(T3Example::Ex1, 10, 5, 3), (T3Example::Ex2, 14, 8, 4)] {
        let c = t3_catalog(which);
        ensure(c.n() == n && c.k() == k, format!("{which:?}: ({}, {})", c.n(), c.k()))?;
        let h = c.parity_check();
        ensure((0..h.rows()).all(|i| h.row_weight(i) <= r + 1), format!("{which:?}: row heavier than r+1"))?;
        ensure(seq_recovery_check(&c, r, 3, exhaustive(1_000_000)).passed(), format!("{which:?}: recovery fails"))?;
        ensure(seq_oracle(&c, r, 3), format!("{which:?}: oracle disagrees"))?;
    }
    let a = seq_blocklength_bounds(5, 3, 3).map_err(|e| e.to_string())?;
    let b = seq_blocklength_bounds(8, 4, 3).map_err(|e| e.to_string())?;
    ensure((a.prior, a.new, b.prior, b.new) == (9, Some(10), 13, Some(14)), format!("{a:?} {b:?}"))?;
    Ok("(10,5,3,3) and (14,8,4,3) verified; bounds 9/10 and 13/14".into())
}

fn criterion_4() -> Outcome {
    let got: Vec<u64> = (2..=6).map(|r| hamming_type_bound(31, r).unwrap()).collect();
    ensure(got == [15, 18, 20, 22, 23], format!("{got:?}"))?;
    Ok(format!("{got:?}"))
}

fn criterion_5() -> Outcome {
    let pg = pg_plane_sa_code(2).map_err(|e| e.to_string())?;
    let rank = pg.parity_check().rank();
    let d = pg.min_distance().map_err(|e| e.to_string())?;
    ensure(pg.n() == 21 && rank == 10 && d == 6, format!("n {} rank {rank} d {d}", pg.n()))?;
    ensure(sa_check(pg.parity_check(), 4, 5).passed(), "PG(2,4) fails the SA shape")?;
    let av = availability_check(&pg, 4, 5).map_err(|e| e.to_string())?;
    ensure(av.passed() && av.mode == Mode::Exhaustive, format!("{av:?}"))?;
    ensure(sa_blocklength_bound(4, 5).unwrap() == 21, "SA length bound is not 21")?;
    let fano = steiner_sa_code(3).map_err(|e| e.to_string())?;
    let fd = fano.min_distance().map_err(|e| e.to_string())?;
    ensure((fano.n(), fano.k(), fd) == (7, 3, 4), format!("Fano code ({}, {}, {fd})", fano.n(), fano.k()))?;
    ensure(availability_check(&fano, 2, 3).map_err(|e| e.to_string())?.passed(), "Fano code lacks t = 3")?;
    Ok("PG(2,4): n 21, rank 10, d 6, SA and t=5 pass, meets length bound 21; Fano [7,3,4] t=3".into())
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for (name, c) in [("mr_r12(3,2)", mr_r12(3, 2)), ("mr_rdelta2(2,2,2,4)", mr_rdelta2(2, 2, 2, 4))] {
        let c = c.map_err(|e| e.to_string())?;
        let rep = pmds_check(&c, exhaustive(10_000_000)).map_err(|e| e.to_string())?;
        ensure(rep.passed() && rep.mode == Mode::Exhaustive, format!("{name}: {rep:?}"))?;
        ensure(mr_oracle(&c), format!("{name}: generator-side oracle finds a bad pattern"))?;
        let q = c.spec().q() as usize;
        ensure(q <= 2 * c.n(), format!("{name}: q = {q} > 2n = {}", 2 * c.n()))?;
        parts.push(format!("{name} q={q} n={} ({} patterns)", c.n(), rep.checked));
    }
    ensure(parts[0].contains("q=16") && parts[1].contains("q=9"), parts.join("; "))?;
    Ok(parts.join("; "))
}

fn criterion_7() -> Outcome {
    let c = pmr_parity_split(3, 4, 3, &FieldSpec::of_order(13).unwrap()).map_err(|e| e.to_string())?;
    let d = c.min_distance().map_err(|e| e.to_string())?;
    ensure(d == 5, format!("d_min {d}"))?;
    ensure(pmr_check(&c).map_err(|e| e.to_string())?.passed(), "parity split fails PMR check")?;
    let mut choices = vec![OffsetChoice::RootsOfUnity];
    choices.extend((0..8).map(|seed| OffsetChoice::Random { seed }));
    for choice in choices {
        if let PmrVerdict::Pmr(code) =
            pmr_general_a1(3, 3, 5, 16, choice, PMR_CHECK_BUDGET).map_err(|e| e.to_string())?
        {
            ensure(code.n() == 12, "wrong length")?;
            ensure(pmr_check(&code).map_err(|e| e.to_string())?.passed(), format!("{choice:?}: PMR check fails"))?;
            return Ok(format!(
                "parity split d=5 PMR; a=1 instance (n=12, global 5, r=3, base GF(16)) passes with {choice:?}"
            ));
        }
    }
    Err("no offset choice produced a PMR code".into())
}

fn criterion_8() -> Outcome {
    let c = t2_turan_code(2, 2).map_err(|e| e.to_string())?;
    let dual = c.dual();
    let b1 = (c.n() - c.k()) as u64;
    let e = msw_sequence(c.n() as u64, b1, 2);
    let mut got = Vec::new();
    for i in 1..=b1 {
        let w = dual.support_weight(i as usize).map_err(|e| e.to_string())?;
        ensure(w as i128 == e.get(i), format!("i={i}: support weight {w}, sequence {}", e.get(i)))?;
        got.push(w);
    }
    Ok(format!("dual support weights {got:?} equal the sequence"))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    for r in 3..=20 {
        let b = avail_rate_bounds(r, 4).unwrap();
        let tn = b.transpose_new.unwrap();
        if tn >= b.tamo_barg {
            failures.push(format!("t=4 r={r}: transpose {tn} vs Tamo-Barg {}", b.tamo_barg));
        }
    }
    for r in 3..=10u64 {
        let n = binomial(r + 3, 3) as u64;
        let k = n * r / (r + 3);
        let b = avail_dmin_bounds(n, k, r, 3).unwrap();
        let m = b.msw_new.unwrap_or(i128::MAX);
        let others = [Some(b.wang), Some(b.tamo_barg), b.kruglik_frolov];
        if others.iter().flatten().any(|&o| m > o) || b.msw_new.is_none() {
            failures.push(format!("t=3 r={r}: msw {:?} vs {others:?}", b.msw_new));
        }
    }
    for r in 1..=20u64 {
        if (r as f64).powf(1.8) - 1.0 < 20.0 {
            continue;
        }
        let b = seq_blocklength_bounds(20, r, 3).unwrap();
        if b.new.map_or(true, |x| x < b.prior) {
            failures.push(format!("k=20 r={r}: new {:?} < prior {}", b.new, b.prior));
        }
    }
    if failures.is_empty() {
        Ok("all three dominance sweeps hold".into())
    } else {
        Err(failures.join("; "))
    }
}

fn pow_u128(b: u64, e: u64) -> u128 {
    (b as u128).pow(e as u32)
}

fn ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn criterion_10() -> Outcome {
    let mut rng = SplitMix64::new(10);
    let mut points = 0;
    while points < 50 {
        let n = 4 + rng.below(14);
        let k = 2 + rng.below(n - 3);
        let d = k + rng.below(n - k);
        let w = 1 + rng.below(n);
        let (r, s) = (n - k, d - k + 1);
        let capped = |base: u64, e: u64| pow_u128(base, e).min(pow_u128(base, k - 1));
        let expect = [
            (SubpktMode::MsrDn1, capped(r, ceil(n - 1, r))),
            (SubpktMode::MsrConstRepair, capped(r, ceil(n, r))),
            (SubpktMode::MsrAnyD, capped(s, ceil(n - 1, s))),
            (SubpktMode::MdsWDn1, if w > k - 1 { capped(r, ceil(w, r)) } else { pow_u128(r, ceil(w, r)) }),
            (SubpktMode::MdsWAnyD, if w > k - 1 { capped(s, ceil(w, s)) } else { pow_u128(s, ceil(w, s)) }),
        ];
        for (mode, want) in expect {
            let got = msr_subpkt_bounds(n, k, d, w, mode).map_err(|e| e.to_string())?;
            ensure(got.to_string() == want.to_string(), format!("{mode:?} n={n} k={k} d={d} w={w}: {got} vs {want}"))?;
        }
        points += 1;
    }
    for i in 0..20u64 {
        let n = 5 + i;
        let k = 2 + i % 4;
        let d = k + (i % (n - k));
        let beta = 1 + i % 3;
        let ratio = msr_point(n, k, d).map_err(|e| e.to_string())?;
        let alpha = ratio * beta;
        let b = cutset_bound(&RgParams { n, k, d, alpha, beta }).map_err(|e| e.to_string())?;
        ensure(b == k as u128 * alpha as u128, format!("n={n} k={k} d={d}: B {b} vs k alpha {}", k * alpha))?;
    }
    Ok("50 sub-packetization points x 5 modes and 20 cut-set points agree exactly".into())
}

fn field_axioms(f: &FieldSpec, trials: usize, rng: &mut SplitMix64) -> Result<(), String> {
    let q = f.q() as u64;
    for _ in 0..trials {
        let [a, b, c] = [0; 3].map(|_| Fe(rng.below(q) as u32));
        let ok = f.add(a, b) == f.add(b, a)
            && f.mul(a, b) == f.mul(b, a)
            && f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
            && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            && f.add(a, f.neg(a)) == Fe::ZERO
            && f.mul(a, Fe::ONE) == a
            && (a.is_zero() || f.mul(a, f.inv(a).unwrap()) == Fe::ONE);
        let prime_ok = f.m() > 1
            || (f.add(a, b).0 as u64 == (a.0 as u64 + b.0 as u64) % q
                && f.mul(a, b).0 as u64 == (a.0 as u64 * b.0 as u64) % q);
        ensure(ok && prime_ok, format!("GF({q}) fails on ({a:?}, {b:?}, {c:?})"))?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let mut rng = SplitMix64::new(11);
    let orders = [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 128, 256, 4096];
    for &q in &orders {
        field_axioms(&FieldSpec::of_order(q).unwrap(), 10_000, &mut rng)?;
    }
    let gf2 = FieldSpec::of_order(2).unwrap();
    let seq_fixtures: Vec<(&str, LinearCode, usize)> = vec![
        ("t3 example 1", t3_catalog(T3Example::Ex1), 3),
        ("Turan(2,1)", t2_turan_code(2, 1).unwrap(), 2),
        ("Turan(2,2)", t2_turan_code(2, 2).unwrap(), 2),
        ("K4", incidence_code(&complete_graph(4), &gf2), 2),
        ("K5", incidence_code(&complete_graph(5), &gf2), 3),
        ("product(2,2)", product_avail_code(2, 2).unwrap(), 2),
        ("wang(3,2)", wang_avail_code(3, 2).unwrap(), 3),
        ("fano", steiner_sa_code(3).unwrap(), 2),
        ("pyramid(7,4,2)", pyramid_code(7, 4, 2, &FieldSpec::of_order(8).unwrap()).unwrap(), 2),
        ("mr_r12(2,2)", mr_r12(2, 2).unwrap(), 2),
    ];
    let mut compared = 0;
    for (name, c, r) in &seq_fixtures {
        ensure(c.n() <= 12, format!("{name} longer than 12"))?;
        for t in 1..=4 {
            let verdict = seq_recovery_check(c, *r, t, exhaustive(1_000_000)).passed();
            ensure(
                verdict == seq_oracle(c, *r, t),
                format!("{name} r={r} t={t}: verifier {verdict}, oracle disagrees"),
            )?;
            compared += 1;
        }
    }
    for c in [mr_r12(2, 2).unwrap(), mr_r12(3, 2).unwrap(), mr_rdelta2(2, 2, 2, 4).unwrap()] {
        let verdict = pmds_check(&c, exhaustive(10_000_000)).unwrap().passed();
        ensure(verdict == mr_oracle(&c), format!("MR fixture n={}: verifier {verdict}, oracle disagrees", c.n()))?;
        compared += 1;
    }
    // mutation guard
    let fixture = mr_rdelta2(2, 2, 2, 4).unwrap();
    let f = fixture.spec().clone();
    let h0: Mat = fixture.parity_check().clone();
    let suite =
        |c: &LinearCode| topology_check(c).unwrap().passed() && pmds_check(c, exhaustive(10_000_000)).unwrap().passed();
    ensure(suite(&fixture), "fixture itself fails")?;
    let mut mutants = 0;
    for i in 0..h0.rows() {
        for j in 0..h0.cols() {
            let v = h0.get(i, j);
            for w in [f.add(v, Fe::ONE), if v.is_zero() { Fe::ONE } else { Fe::ZERO }] {
                let mut h = h0.clone();
                h.set(i, j, w);
                let m = LinearCode::from_parity(h).with_local(fixture.local.clone().unwrap());
                ensure(!suite(&m), format!("mutation ({i},{j}) {v:?} -> {w:?} not detected"))?;
                mutants += 1;
            }
        }
    }
    Ok(format!(
        "{} fields x 10000 triples; {compared} verifier/oracle comparisons agree; {mutants} mutants all caught",
        orders.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Moore-graph codes are rate-optimal", 60, criterion_1),
        (2, "general construction r=3 t=5", 300, criterion_2),
        (3, "t=3 fixtures and block-length table", 120, criterion_3),
        (4, "Hamming-type bound row", 60, criterion_4),
        (5, "strict availability from designs", 120, criterion_5),
        (6, "MR codes pass exhaustively", 120, criterion_6),
        (7, "PMR constructions", 300, criterion_7),
        (8, "MSW sequence vs dual support weights", 300, criterion_8),
        (9, "bound dominance sweeps", 60, criterion_9),
        (10, "regenerating-code arithmetic", 60, criterion_10),
        (11, "property suites", 300, criterion_11),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let took = start.elapsed();
        let res = match res {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("took {took:.1?}, limit {limit}s")),
            other => other,
        };
        match res {
            Ok(detail) => println!("criterion {id:>2} PASS ({took:.1?}) {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL ({took:.1?}) {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
