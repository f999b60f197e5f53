//! The `kninterval` command line: argument parsing, subcommands and output
//! formatting. `main` only wires [`run`] to the process.

pub mod args;
pub mod output;
mod suites;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;
use log::info;

use kninterval::intervals::{
    nk_number_bounded, nk_required_limit, nk_sequence, proven_n_bound, theorem1_scan, NkMethod, NkResult,
    ScanConfig,
};
use kninterval::prime_engine::SieveConfig;
use kninterval::ramanujan::{required_limit, sequence};
use kninterval::residue::{
    capacity, chaining_bound, nk_sequence_p, sequence_p, ResidueClass, SmallIntervalTheorem,
};
use kninterval::{Error, PrimeTable, Ratio};

use args::{Cli, Command, Format, TheoremArgs};
use output::{emit, CapacityReport, GapsReport, NkReport, ResidueReport, SequenceReport, Tabular};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
    Resource(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Verification(_) | Failure::Io(_) => EXIT_VERIFICATION,
            Failure::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Resource(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidArgument(_) | Error::NotCertified { .. } => Failure::Usage(msg),
            Error::OutOfRange { .. } | Error::ResourceLimit(_) | Error::CapacityExceeded { .. } => {
                Failure::Resource(msg)
            }
            Error::CertificationFailed { .. } | Error::BoundViolation(_) => Failure::Verification(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first), writes data to `out` and returns the
/// exit code. Diagnostics go to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("kninterval: {f}");
            f.exit_code()
        }
    }
}

fn sieve_config(cli: &Cli) -> SieveConfig {
    SieveConfig {
        max_memory: cli.global.max_memory,
        ..SieveConfig::default()
    }
}

fn table(limit: u64, config: &SieveConfig) -> Result<PrimeTable, Failure> {
    info!("sieving primes up to {limit}");
    let t = PrimeTable::build_with(limit.max(2), config)?;
    info!("{} primes in table", t.primes().len());
    Ok(t)
}

fn theorem(args: &TheoremArgs, default: SmallIntervalTheorem) -> Result<SmallIntervalTheorem, Failure> {
    match (args.x0, args.delta) {
        (Some(x0), Some((p, q))) => Ok(SmallIntervalTheorem::from_delta(x0, p, q)?),
        _ => Ok(default),
    }
}

fn write<T: Tabular>(report: &T, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    emit(report, format, out)?;
    Ok(EXIT_OK)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.global.format;
    let sieve = sieve_config(cli);
    match &cli.command {
        &Command::Ramanujan { v, count, kind } => {
            let t = table(required_limit(v, count)?, &sieve)?;
            let terms = sequence(&t, kind.into(), v, count)?;
            write(
                &SequenceReport {
                    kind: kind.into(),
                    v,
                    terms,
                },
                format,
                out,
            )
        }

        &Command::Nk {
            k,
            count,
            closed,
            any_k,
        } => {
            let terms = if !any_k || kninterval::intervals::is_certified(k) {
                let t = table(nk_required_limit(k, count)?, &sieve)?;
                nk_sequence(&t, k, count, closed)?
            } else {
                let bounds = (1..=count)
                    .map(|m| proven_n_bound(k, m))
                    .collect::<Result<Vec<_>, _>>()?;
                let top = *bounds.last().expect("count >= 1");
                let limit = top
                    .checked_mul(k + 1)
                    .ok_or_else(|| Failure::Resource("table limit exceeds u64".into()))?;
                let t = table(limit, &sieve)?;
                (1..=count)
                    .zip(bounds)
                    .map(|(m, b)| {
                        let value = nk_number_bounded(&t, k, m, b, closed)?;
                        Ok(NkResult {
                            k,
                            m,
                            value,
                            method: NkMethod::Descent,
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            };
            write(&NkReport { k, closed, terms }, format, out)
        }

        &Command::Gaps {
            k_min,
            k_max,
            n_max,
            jobs,
        } => {
            if k_max < k_min {
                return Err(Failure::Usage(format!(
                    "--k-max {k_max} is below --k-min {k_min}"
                )));
            }
            let config = ScanConfig {
                n_max,
                jobs: jobs.map(|j| j as usize),
                sieve,
            };
            info!("scanning k in [{k_min}, {k_max}] with n <= {n_max}");
            let reports = theorem1_scan(k_min, k_max, &config)?;
            let anomalies: Vec<u64> = reports.iter().filter(|r| r.is_anomaly()).map(|r| r.k).collect();
            emit(
                &GapsReport {
                    k_min,
                    k_max,
                    n_max,
                    reports,
                },
                format,
                out,
            )?;
            if anomalies.is_empty() {
                Ok(EXIT_OK)
            } else {
                eprintln!(
                    "kninterval: {} k without a gap up to n = {n_max}: {anomalies:?}",
                    anomalies.len()
                );
                Ok(EXIT_VERIFICATION)
            }
        }

        Command::Residue {
            modulus,
            residue,
            v,
            nk,
            count,
            theorem: thm_args,
        } => {
            let class = ResidueClass::new(*modulus, *residue)?;
            let thm = theorem(thm_args, SmallIntervalTheorem::cullinan_hajir())?;
            let v = match (v, nk) {
                (_, Some(k)) => Ratio::interval(*k)?,
                (Some(v), None) => *v,
                (None, None) => return Err(Failure::Usage("one of --v or --nk is required".into())),
            };
            let cap = capacity(v, &thm)?;
            let limit = chaining_bound(v, &thm).saturating_add(nk.unwrap_or(0));
            let t = table(limit, &sieve)?;
            let terms = match nk {
                Some(k) => nk_sequence_p(&t, class, *k, *count, &thm)?,
                None => sequence_p(&t, class, v, *count, &thm)?,
            };
            let report = ResidueReport {
                modulus: *modulus,
                residue: *residue,
                v,
                nk: *nk,
                x0: thm.x0,
                step: thm.step,
                capacity: cap,
                terms,
            };
            write(&report, format, out)
        }

        Command::Capacity { k, theorem: thm_args } => {
            let thm = theorem(thm_args, SmallIntervalTheorem::ramare_saouter())?;
            let v = Ratio::interval(*k)?;
            let report = CapacityReport {
                k: *k,
                v,
                x0: thm.x0,
                step: thm.step,
                capacity: capacity(v, &thm)?,
            };
            write(&report, format, out)
        }

        &Command::Verify {
            suite,
            m_max,
            k_max,
            jobs,
        } => {
            let report = suites::run(suite, m_max, k_max, jobs.map(|j| j as usize), &sieve)?;
            emit(&report, format, out)?;
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("kninterval: FAIL {}: {}", c.name, c.detail);
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_VERIFICATION })
        }
    }
}
