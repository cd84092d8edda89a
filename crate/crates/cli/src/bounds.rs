use clap::Subcommand;
use lrc_core::bounds::{
    avail_dmin_bounds, avail_product_tradeoff, avail_rate_bounds, cutset_bound, hamming_type_bound, lr_alphabet_bounds,
    lr_singleton_bound, mbr_point, moore_bound, msr_point, msr_subpkt_bounds, msw_sequence, sa_blocklength_bound,
    seq_blocklength_bounds, seq_dim_bound_t2, seq_rate_bound, AlphabetQuery, ClosedFormOracle, RgParams, SubpktMode,
};
use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::formats::BOUND_SCHEMA;
use crate::{Cli, CliError, Format, Outcome};

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    LrSingleton {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
    },
    /// Largest rate of a sequential-recovery code.
    SeqRate {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    SeqBlocklength {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    SeqDimT2 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    Hamming {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Alphabet-dependent bound using the closed-form classical oracle.
    /// Give exactly one of --k (bound d) or --d (bound k).
    Alphabet {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, conflicts_with = "d", required_unless_present = "d")]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
    },
    AvailRate {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    AvailDmin {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    /// Distance bounds from local-code rate, e.g. --rc 2/3 --rmax 3/4.
    ProductTradeoff {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        nc: u64,
        #[arg(long)]
        rc: BigRational,
        #[arg(long)]
        rmax: BigRational,
    },
    SaLength {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    Moore {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    Msw {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b1: u64,
        #[arg(long)]
        r: u64,
    },
    MsrSubpkt {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        w: u64,
        /// msr_d_n1, msr_const_repair, msr_any_d, mds_w_d_n1 or mds_w_any_d.
        #[arg(long)]
        mode: String,
    },
    Cutset {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
    },
    MsrPoint {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
    },
    MbrPoint {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        beta: u64,
    },
}

/// One evaluated bound: named inputs and named outputs, all as strings so
/// big integers and rationals stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundOut {
    pub name: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub values: Vec<(&'static str, String)>,
}

impl BoundOut {
    pub fn value(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> Value {
        let obj = |kv: &[(&str, String)]| {
            Value::Object(kv.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect::<Map<_, _>>())
        };
        serde_json::json!({
            "schema": BOUND_SCHEMA,
            "bound": self.name,
            "params": obj(&self.params),
            "values": obj(&self.values),
        })
    }

    pub fn to_csv(&self) -> String {
        let cells = self.params.iter().chain(&self.values);
        let head: Vec<&str> = cells.clone().map(|(k, _)| *k).collect();
        let row: Vec<&str> = cells.map(|(_, v)| v.as_str()).collect();
        format!("{}\n{}\n", head.join(","), row.join(","))
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

pub fn evaluate(cmd: &BoundCmd) -> Result<BoundOut, CliError> {
    use BoundCmd::*;
    let s = |x: u64| x.to_string();
    let out = |name, params: Vec<(&'static str, String)>, values| BoundOut { name, params, values };
    Ok(match cmd {
        LrSingleton { n, k, r } => out(
            "lr-singleton",
            vec![("n", s(*n)), ("k", s(*k)), ("r", s(*r))],
            vec![("d_max", lr_singleton_bound(*n, *k, *r)?.to_string())],
        ),
        SeqRate { r, t } => {
            out("seq-rate", vec![("r", s(*r)), ("t", s(*t))], vec![("rate", seq_rate_bound(*r, *t)?.to_string())])
        }
        SeqBlocklength { k, r, t } => {
            let b = seq_blocklength_bounds(*k, *r, *t)?;
            out(
                "seq-blocklength",
                vec![("k", s(*k)), ("r", s(*r)), ("t", s(*t))],
                vec![("prior", s(b.prior)), ("new", opt(b.new))],
            )
        }
        SeqDimT2 { m, r } => {
            out("seq-dim-t2", vec![("m", s(*m)), ("r", s(*r))], vec![("k_max", seq_dim_bound_t2(*m, *r)?.to_string())])
        }
        Hamming { n, r } => {
            out("hamming", vec![("n", s(*n)), ("r", s(*r))], vec![("k_max", s(hamming_type_bound(*n, *r)?))])
        }
        Alphabet { n, r, q, k, d } => {
            let query = match (k, d) {
                (Some(k), None) => AlphabetQuery::Distance { k: *k },
                (None, Some(d)) => AlphabetQuery::Dimension { d: *d },
                _ => return Err(CliError::Usage("give exactly one of --k and --d".into())),
            };
            let b = lr_alphabet_bounds(*n, query, *r, *q, &ClosedFormOracle)?;
            out(
                "alphabet",
                vec![("n", s(*n)), ("r", s(*r)), ("q", s(*q)), ("k", opt(*k)), ("d", opt(*d))],
                vec![("value", s(b.value)), ("argmin", s(b.argmin)), ("b1", s(b.b1)), ("oracle", "closed-form".into())],
            )
        }
        AvailRate { r, t } => {
            let b = avail_rate_bounds(*r, *t)?;
            out(
                "avail-rate",
                vec![("r", s(*r)), ("t", s(*t))],
                vec![("tamo_barg", b.tamo_barg.to_string()), ("transpose_new", opt(b.transpose_new))],
            )
        }
        AvailDmin { n, k, r, t } => {
            let b = avail_dmin_bounds(*n, *k, *r, *t)?;
            out(
                "avail-dmin",
                vec![("n", s(*n)), ("k", s(*k)), ("r", s(*r)), ("t", s(*t))],
                vec![
                    ("wang", b.wang.to_string()),
                    ("tamo_barg", b.tamo_barg.to_string()),
                    ("kruglik_frolov", opt(b.kruglik_frolov)),
                    ("msw_new", opt(b.msw_new)),
                    ("b1", s(b.b1)),
                ],
            )
        }
        ProductTradeoff { n, k, nc, rc, rmax } => {
            let b = avail_product_tradeoff(*n, *k, *nc, rc, rmax)?;
            out(
                "product-tradeoff",
                vec![("n", s(*n)), ("k", s(*k)), ("nc", s(*nc)), ("rc", rc.to_string()), ("rmax", rmax.to_string())],
                vec![("upper", b.upper.to_string()), ("lower_exist", b.lower_exist.to_string())],
            )
        }
        SaLength { r, t } => {
            out("sa-length", vec![("r", s(*r)), ("t", s(*t))], vec![("n_min", s(sa_blocklength_bound(*r, *t)?))])
        }
        Moore { r, t } => {
            out("moore", vec![("r", s(*r)), ("t", s(*t))], vec![("nodes", moore_bound(*r, *t)?.to_string())])
        }
        Msw { n, b1, r } => {
            let e = msw_sequence(*n, *b1, *r);
            let list: Vec<String> = e.e.iter().map(|x| x.to_string()).collect();
            out("msw", vec![("n", s(*n)), ("b1", s(*b1)), ("r", s(*r))], vec![("e", list.join(" "))])
        }
        MsrSubpkt { n, k, d, w, mode } => {
            let m = SubpktMode::parse(mode)?;
            out(
                "msr-subpkt",
                vec![("n", s(*n)), ("k", s(*k)), ("d", s(*d)), ("w", s(*w)), ("mode", mode.clone())],
                vec![("alpha_min", msr_subpkt_bounds(*n, *k, *d, *w, m)?.to_string())],
            )
        }
        Cutset { n, k, d, alpha, beta } => {
            let p = RgParams { n: *n, k: *k, d: *d, alpha: *alpha, beta: *beta };
            out(
                "cutset",
                vec![("n", s(*n)), ("k", s(*k)), ("d", s(*d)), ("alpha", s(*alpha)), ("beta", s(*beta))],
                vec![("file_size", cutset_bound(&p)?.to_string())],
            )
        }
        MsrPoint { n, k, d } => out(
            "msr-point",
            vec![("n", s(*n)), ("k", s(*k)), ("d", s(*d))],
            vec![("alpha_over_beta", s(msr_point(*n, *k, *d)?))],
        ),
        MbrPoint { k, d, beta } => {
            let (alpha, file) = mbr_point(*k, *d, *beta)?;
            out(
                "mbr-point",
                vec![("k", s(*k)), ("d", s(*d)), ("beta", s(*beta))],
                vec![("alpha", alpha.to_string()), ("file_size", file.to_string())],
            )
        }
    })
}

pub fn run(cmd: &BoundCmd, cli: &Cli) -> Result<Outcome, CliError> {
    let b = evaluate(cmd)?;
    Ok(Outcome::text(match cli.format.unwrap_or(Format::Json) {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&b.to_json()).expect("bound serializes")),
        Format::Csv => b.to_csv(),
    }))
}
