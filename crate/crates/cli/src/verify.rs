use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lrc_core::verify::{
    availability_check, classify_rate_optimal_t2, pmds_local_check, pmds_patterns, pmr_check, sa_check,
    seq_recovery_certificate, seq_recovery_patterns, staircase_check, topology_check, ModeRequest, PatternCheck,
    VerifyOptions, VerifyReport, DEFAULT_SAMPLES, PATTERN_BUDGET,
};
use lrc_core::LinearCode;

use crate::formats::{report_json, CodeJson};
use crate::{read_json, Cli, CliError, Outcome};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Seq,
    Availability,
    Sa,
    Pmds,
    Pmr,
    Staircase,
    T2Structure,
    Topology,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
    Certificate,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub property: Property,
    #[arg(long)]
    pub code: PathBuf,
    /// Locality; defaults to the value stored with the code.
    #[arg(long)]
    pub r: Option<usize>,
    /// Erasures or recovery sets; defaults to the value stored with the code.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: u64,
    /// Most patterns enumerated before falling back to sampling.
    #[arg(long, default_value_t = PATTERN_BUDGET)]
    pub budget: u128,
}

/// Runs a pattern check, splitting the rank range over `jobs` threads when
/// it is enumerated exhaustively.
/// An explicit exhaustive request never falls back to sampling.
pub fn run_patterns(pc: &PatternCheck<'_>, opts: VerifyOptions, jobs: usize) -> Result<VerifyReport, CliError> {
    let total = pc.total();
    if opts.mode == ModeRequest::Exhaustive && total > opts.budget {
        return Err(
            lrc_core::Error::BudgetExceeded { what: "erasure patterns", needed: total, budget: opts.budget }.into()
        );
    }
    let exhaustive = !matches!(opts.mode, ModeRequest::Sampled { .. }) && total <= opts.budget;
    if jobs <= 1 || !exhaustive {
        return Ok(pc.run(opts));
    }
    let step = total.div_ceil(jobs as u128).max(1);
    let shards: Vec<(u128, u128)> =
        (0..jobs as u128).map(|i| (i * step, ((i + 1) * step).min(total))).filter(|(a, b)| a < b).collect();
    Ok(std::thread::scope(|s| {
        let handles: Vec<_> = shards.iter().map(|&(a, b)| s.spawn(move || pc.run_range(a, b, opts.budget))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .reduce(VerifyReport::merge)
            .expect("at least one shard")
    }))
}

fn need(v: Option<usize>, what: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{what} is required (the code file does not record it)")))
}

/// Checks `property` on `c`; shared by the command and the tests.
pub fn check(
    c: &LinearCode,
    property: Property,
    r: Option<usize>,
    t: Option<usize>,
    opts: VerifyOptions,
    jobs: usize,
) -> Result<VerifyReport, CliError> {
    let r = r.or(c.params.r);
    let t = t.or(c.params.t);
    Ok(match property {
        Property::Seq => {
            let (r, t) = (need(r, "r")?, need(t, "t")?);
            let cert = matches!(opts.mode, ModeRequest::Auto | ModeRequest::Certificate)
                .then(|| seq_recovery_certificate(c, r, t))
                .flatten();
            match cert {
                Some(rep) => rep,
                None => run_patterns(&seq_recovery_patterns(c, r, t), opts, jobs)?,
            }
        }
        Property::Availability => availability_check(c, need(r, "r")?, need(t, "t")?)?,
        Property::Sa => sa_check(c.parity_check(), need(r, "r")?, need(t, "t")?),
        Property::Pmds => {
            let local = pmds_local_check(c)?;
            if !local.passed() {
                return Ok(local);
            }
            run_patterns(&pmds_patterns(c)?, opts, jobs)?
        }
        Property::Pmr => pmr_check(c)?,
        Property::Staircase => staircase_check(c.parity_check(), need(r, "r")?, need(t, "t")?),
        Property::T2Structure => classify_rate_optimal_t2(c, need(r, "r")?)?,
        Property::Topology => topology_check(c)?,
    })
}

pub fn run(args: &VerifyArgs, cli: &Cli) -> Result<Outcome, CliError> {
    let c = read_json::<CodeJson>(&args.code)?.to_code()?;
    let mode = match args.mode {
        ModeArg::Auto => ModeRequest::Auto,
        ModeArg::Exhaustive => ModeRequest::Exhaustive,
        ModeArg::Certificate => ModeRequest::Certificate,
        ModeArg::Sampled => ModeRequest::Sampled { seed: cli.seed, samples: args.samples },
    };
    let rep = check(&c, args.property, args.r, args.t, VerifyOptions { mode, budget: args.budget }, cli.jobs)?;
    let mut text = serde_json::to_string_pretty(&report_json(&rep)).expect("report serializes");
    text.push('\n');
    Ok(Outcome {
        stdout: text,
        exit: if rep.passed() { 0 } else { 1 },
        inputs: vec![args.code.clone()],
        outputs: vec![],
    })
}
