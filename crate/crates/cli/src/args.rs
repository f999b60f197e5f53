use clap::{Args, Parser, Subcommand, ValueEnum};

use kninterval::ramanujan::Kind;
use kninterval::Ratio;

#[derive(Debug, Parser)]
#[command(
    name = "kninterval",
    version,
    about = "Primes in intervals (kn, (k+1)n) and generalized Ramanujan numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Bfile, global = true)]
    pub format: Format,

    /// Memory cap for prime tables, e.g. 512M or 4G.
    #[arg(long, value_parser = parse_memory, default_value = "4G", global = true)]
    pub max_memory: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `<index> <value>` lines, OEIS b-file style.
    Bfile,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ramanujan,
    Chebyshev,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Ramanujan => Kind::Ramanujan,
            KindArg::Chebyshev => Kind::Chebyshev,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Prop8,
    Fixtures,
    Theorem1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// R_v(m) or C_v(m) for m = 1..count.
    Ramanujan {
        /// v as P or P/Q, reduced and greater than 1.
        #[arg(long, value_parser = parse_ratio)]
        v: Ratio,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = KindArg::Ramanujan)]
        kind: KindArg,
    },
    /// N_k(m) for m = 1..count.
    Nk {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Count primes in [kn, (k+1)n] instead of (kn, (k+1)n).
        #[arg(long)]
        closed: bool,
        /// Allow k outside 1, 2, 3, 5, 9, 14, descending from an explicit
        /// theta-bound threshold.
        #[arg(long)]
        any_k: bool,
    },
    /// a(k): least n > 1 with (kn, (k+1)n) prime-free, 0 if none.
    Gaps {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k_min: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
        #[arg(long, default_value_t = kninterval::intervals::DEFAULT_N_MAX)]
        n_max: u64,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
    /// Ramanujan numbers (or N_k thresholds) for primes in one residue class.
    Residue {
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: u64,
        #[arg(long = "res")]
        residue: u64,
        /// v as P or P/Q; required unless --nk is given.
        #[arg(long, value_parser = parse_ratio, required_unless_present = "nk", conflicts_with = "nk")]
        v: Option<Ratio>,
        /// Report N_k^(P)(m) instead of R_v^(P)(m), with v = (k+1)/k.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nk: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[command(flatten)]
        theorem: TheoremArgs,
    },
    /// Largest m with (1 + 1/delta)^m < (k+1)/k.
    Capacity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[command(flatten)]
        theorem: TheoremArgs,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// m range for prop8.
        #[arg(long, default_value_t = 100)]
        m_max: u64,
        /// Upper k for the theorem1 range scan.
        #[arg(long, default_value_t = 100_000)]
        k_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
}

/// A small-interval theorem: (x, (1 + 1/delta) x] holds a prime for x >= x0.
#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(long, requires = "delta")]
    pub x0: Option<u64>,
    /// delta as P or P/Q.
    #[arg(long, value_parser = parse_fraction, requires = "x0")]
    pub delta: Option<(u64, u64)>,
}

fn parse_ratio(s: &str) -> Result<Ratio, String> {
    s.parse::<Ratio>().map_err(|e| e.to_string())
}

/// Positive P or P/Q, not necessarily above 1.
pub fn parse_fraction(s: &str) -> Result<(u64, u64), String> {
    let bad = || format!("cannot parse {s:?}; expected P or P/Q with P, Q > 0");
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            q.trim().parse::<u64>().map_err(|_| bad())?,
        ),
        None => (s.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    if p == 0 || q == 0 {
        return Err(bad());
    }
    Ok((p, q))
}

/// Bytes, with an optional K, M or G suffix (powers of 1024).
pub fn parse_memory(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let (digits, shift) = match s.chars().last().map(|c| c.to_ascii_uppercase()) {
        Some('K') => (&s[..s.len() - 1], 10),
        Some('M') => (&s[..s.len() - 1], 20),
        Some('G') => (&s[..s.len() - 1], 30),
        _ => (s, 0),
    };
    let n: u64 = digits
        .parse()
        .map_err(|_| format!("cannot parse memory size {s:?}"))?;
    n.checked_mul(1 << shift)
        .ok_or_else(|| format!("memory size {s:?} overflows"))
}
