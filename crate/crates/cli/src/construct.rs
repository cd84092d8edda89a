use clap::{Subcommand, ValueEnum};
use lrc_core::construct_seq::{
    moore_code, seq_general_code, seq_general_graph, t2_dim_optimal_code, t2_near_regular_code, t2_turan_code,
    t3_catalog, AuxChoice, SeqGraph, T3Example,
};
use lrc_core::lr_avail::{
    pg_plane_sa_code, product_avail_code, pyramid_code, steiner_sa_code, tamo_barg_code, wang_avail_code,
};
use lrc_core::mr::{
    mr_r12, mr_r2_coset_search, mr_rdelta2, pmr_general_a1, pmr_parity_split, OffsetChoice, PmrVerdict,
    PMR_CHECK_BUDGET,
};
use lrc_core::{FieldSpec, LinearCode};
use serde_json::{json, Value};

use crate::formats::{CodeJson, GraphJson};
use crate::{Cli, CliError, Outcome};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AuxKind {
    Catalog,
    Random,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OffsetKind {
    Roots,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCmd {
    /// Incidence code of a catalogued Moore graph.
    Moore {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    /// Rate-optimal sequential-recovery code for any supported t.
    SeqGeneral {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value = "catalog")]
        aux: AuxKind,
    },
    /// The graph behind `seq-general`, without the parity-check matrix.
    SeqGraph {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value = "catalog")]
        aux: AuxKind,
    },
    T2NearRegular {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    T2Turan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        beta: usize,
    },
    T2DimOptimal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Catalogued t = 3 example 1 or 2.
    T3 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        example: u8,
    },
    Pyramid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
    },
    TamoBarg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
    },
    Product {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    Wang {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    PgPlane {
        #[arg(long)]
        s: u32,
    },
    Steiner {
        #[arg(long)]
        s: u32,
    },
    PmrSplit {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        global: usize,
        #[arg(long)]
        q: u64,
    },
    MrR12 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    MrRdelta2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        psi: usize,
    },
    /// PMR attempt over GF(Q^3); exits 1 when the enumeration finds a
    /// dependent set.
    PmrA1 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        global: usize,
        #[arg(long)]
        base_q: u64,
        #[arg(long, value_enum, default_value = "roots")]
        offsets: OffsetKind,
    },
    /// r = 2 MR code from a greedy choice of cosets.
    MrCoset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
    },
}

fn aux(kind: AuxKind, seed: u64) -> AuxChoice {
    match kind {
        AuxKind::Catalog => AuxChoice::Catalog { seed },
        AuxKind::Random => AuxChoice::Random { seed },
    }
}

fn seq_provenance(g: &SeqGraph, seed: u64) -> Value {
    json!({
        "construction": "seq-general",
        "seed": seed,
        "graph_nodes": g.graph.node_count(),
        "girth": g.girth,
        "base_nodes": g.base.node_count(),
        "aux": g.aux.as_ref().map(|(src, nodes)| json!({ "source": format!("{src:?}"), "nodes": nodes })),
        "staircase": { "s": g.profile.s, "cols": g.profile.cols, "rows": g.profile.rows },
    })
}

fn emit(code: &LinearCode, provenance: Value) -> String {
    let mut s = serde_json::to_string_pretty(&CodeJson::of(code, Some(provenance))).expect("code serializes");
    s.push('\n');
    s
}

fn field(q: u64) -> Result<FieldSpec, CliError> {
    Ok(FieldSpec::of_order(q)?)
}

pub fn run(cmd: &ConstructCmd, cli: &Cli) -> Result<Outcome, CliError> {
    use ConstructCmd::*;
    let seed = cli.seed;
    let named = |name: &str| json!({ "construction": name });
    let text = match *cmd {
        Moore { r, t } => emit(&moore_code(r, t)?, json!({ "construction": "moore", "r": r, "t": t })),
        SeqGeneral { r, t, aux: a } => {
            let sc = seq_general_code(r, t, aux(a, seed))?;
            emit(&sc.code, seq_provenance(&sc.provenance, seed))
        }
        SeqGraph { r, t, aux: a } => {
            let g = seq_general_graph(r, t, aux(a, seed))?;
            let mut s = serde_json::to_string_pretty(&GraphJson::of(&g.graph)).expect("graph serializes");
            s.push('\n');
            s
        }
        T2NearRegular { k, r } => emit(&t2_near_regular_code(k, r)?, named("t2-near-regular")),
        T2Turan { r, beta } => emit(&t2_turan_code(r, beta)?, named("t2-turan")),
        T2DimOptimal { m, r } => emit(&t2_dim_optimal_code(m, r)?, named("t2-dim-optimal")),
        T3 { example } => {
            let which = if example == 1 { T3Example::Ex1 } else { T3Example::Ex2 };
            emit(&t3_catalog(which), json!({ "construction": "t3-catalog", "example": example }))
        }
        Pyramid { n, k, r, q } => emit(&pyramid_code(n, k, r, &field(q)?)?, named("pyramid")),
        TamoBarg { n, k, r, q } => {
            let (c, ev) = tamo_barg_code(n, k, r, &field(q)?)?;
            let points: Vec<u32> = ev.points.iter().map(|p| p.0).collect();
            emit(&c, json!({ "construction": "tamo-barg", "points": points, "cosets": ev.cosets }))
        }
        Product { r, t } => emit(&product_avail_code(r, t)?, named("product")),
        Wang { r, t } => emit(&wang_avail_code(r, t)?, named("wang")),
        PgPlane { s } => emit(&pg_plane_sa_code(s)?, named("pg-plane")),
        Steiner { s } => emit(&steiner_sa_code(s)?, named("steiner")),
        PmrSplit { m, r, global, q } => emit(&pmr_parity_split(m, r, global, &field(q)?)?, named("pmr-split")),
        MrR12 { m, r } => emit(&mr_r12(m, r)?, named("mr-r12")),
        MrRdelta2 { m, r, delta, psi } => emit(&mr_rdelta2(m, r, delta, psi)?, named("mr-rdelta2")),
        PmrA1 { m, r, global, base_q, offsets } => {
            let choice = match offsets {
                OffsetKind::Roots => OffsetChoice::RootsOfUnity,
                OffsetKind::Random => OffsetChoice::Random { seed },
            };
            let prov = |verdict: &str, erasures: Option<&[usize]>| {
                json!({
                    "construction": "pmr-a1",
                    "base_q": base_q,
                    "offsets": format!("{choice:?}"),
                    "verdict": verdict,
                    "dependent_columns": erasures,
                })
            };
            return Ok(match pmr_general_a1(m, r, global, base_q, choice, PMR_CHECK_BUDGET)? {
                PmrVerdict::Pmr(c) => Outcome::text(emit(&c, prov("pmr", None))),
                PmrVerdict::Counterexample { code, erasures } => {
                    Outcome { exit: 1, ..Outcome::text(emit(&code, prov("counterexample", Some(&erasures)))) }
                }
            });
        }
        MrCoset { n, d, q } => {
            let cc = mr_r2_coset_search(n, d, &field(q)?)?;
            emit(&cc.code, json!({ "construction": "mr-coset", "cosets": cc.cosets }))
        }
    };
    Ok(Outcome::text(text))
}
