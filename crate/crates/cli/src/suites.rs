use log::info;

use kninterval::intervals::{
    certify_no_gap, certify_required_limit, nk_required_limit, nk_sequence, theorem1_scan, ScanConfig,
};
use kninterval::prime_engine::SieveConfig;
use kninterval::ramanujan::{
    prop8_required_limit, required_limit, sequence, verify_prop8, Kind, CERTIFIED_K,
};
use kninterval::residue::{chaining_bound, nk_sequence_p, sequence_p, ResidueClass, SmallIntervalTheorem};
use kninterval::{PrimeTable, Ratio};
use kninterval_testkit::{all, Fixture};

use crate::args::Suite;
use crate::output::{Check, VerifyReport};
use crate::Failure;

pub fn run(
    suite: Suite,
    m_max: u64,
    k_max: u64,
    jobs: Option<usize>,
    sieve: &SieveConfig,
) -> Result<VerifyReport, Failure> {
    let (name, checks) = match suite {
        Suite::Prop8 => ("prop8", prop8(m_max, sieve)?),
        Suite::Fixtures => ("fixtures", fixtures(sieve)?),
        Suite::Theorem1 => ("theorem1", theorem1(k_max, jobs, sieve)?),
    };
    Ok(VerifyReport {
        suite: name.into(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn prop8(m_max: u64, sieve: &SieveConfig) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for k in CERTIFIED_K {
        let t = PrimeTable::build_with(prop8_required_limit(k, m_max)?, sieve)?;
        let r = verify_prop8(&t, k, m_max)?;
        info!("prop8 k={k}: {} violations", r.violations.len());
        let detail = if r.all_hold {
            format!("t={}, m<={}, analytic m0={}", r.t, r.m_max, r.analytic_m0)
        } else {
            format!("{:?}", r.violations)
        };
        out.push(check(format!("prop8 k={k}"), r.all_hold, detail));
    }
    Ok(out)
}

/// What a fixture tabulates.
enum Source {
    Sequence(Kind, u64, u64),
    Nk(u64),
    Residue(u64, u64),
    ResidueNk(u64, u64, u64),
    Gaps,
}

fn source_of(id: &str) -> Option<Source> {
    let nums = |s: &str| {
        s.split('_')
            .map(|p| p.parse::<u64>().ok())
            .collect::<Option<Vec<u64>>>()
    };
    if let Some(rest) = id.strip_prefix("ramanujan_") {
        let v = nums(rest)?;
        return Some(Source::Sequence(Kind::Ramanujan, v[0], *v.get(1).unwrap_or(&1)));
    }
    if let Some(rest) = id.strip_prefix("chebyshev_") {
        let v = nums(rest)?;
        return Some(Source::Sequence(Kind::Chebyshev, v[0], *v.get(1).unwrap_or(&1)));
    }
    if let Some((k, class)) = id.strip_prefix("nk_").and_then(|s| s.split_once("_residue_")) {
        let (r, q) = class.split_once("_mod_")?;
        return Some(Source::ResidueNk(
            k.parse().ok()?,
            q.parse().ok()?,
            r.parse().ok()?,
        ));
    }
    if let Some(k) = id.strip_prefix("nk_") {
        return Some(Source::Nk(k.parse().ok()?));
    }
    if let Some((r, q)) = id.strip_prefix("residue_").and_then(|s| s.split_once("_mod_")) {
        return Some(Source::Residue(q.parse().ok()?, r.parse().ok()?));
    }
    (id == "gap_least_n").then_some(Source::Gaps)
}

fn compute(source: &Source, m: u64, sieve: &SieveConfig) -> kninterval::Result<Vec<u64>> {
    let ch = SmallIntervalTheorem::cullinan_hajir();
    let two = Ratio::integer(2)?;
    match *source {
        Source::Sequence(kind, p, q) => {
            let v = Ratio::new(p, q)?;
            let t = PrimeTable::build_with(required_limit(v, m)?, sieve)?;
            sequence(&t, kind, v, m)
        }
        Source::Nk(k) => {
            let t = PrimeTable::build_with(nk_required_limit(k, m)?, sieve)?;
            Ok(nk_sequence(&t, k, m, false)?.iter().map(|r| r.value).collect())
        }
        Source::Residue(q, r) => {
            let t = PrimeTable::build_with(chaining_bound(two, &ch), sieve)?;
            sequence_p(&t, ResidueClass::new(q, r)?, two, m, &ch)
        }
        Source::ResidueNk(k, q, r) => {
            let t = PrimeTable::build_with(chaining_bound(Ratio::interval(k)?, &ch) + k, sieve)?;
            nk_sequence_p(&t, ResidueClass::new(q, r)?, k, m, &ch)
        }
        Source::Gaps => {
            let config = ScanConfig {
                sieve: *sieve,
                ..ScanConfig::default()
            };
            Ok(theorem1_scan(1, m, &config)?
                .iter()
                .map(|r| r.a_value().unwrap_or(u64::MAX))
                .collect())
        }
    }
}

fn fixture_check(f: &Fixture, sieve: &SieveConfig) -> Check {
    let Some(source) = source_of(f.id) else {
        return check(f.id, false, "no computation is registered for this fixture");
    };
    match compute(&source, f.len() as u64, sieve) {
        Ok(terms) if terms == f.terms => check(f.id, true, format!("{} terms match {}", f.len(), f.source)),
        Ok(terms) => check(f.id, false, format!("computed {terms:?}")),
        Err(e) => check(f.id, false, e.to_string()),
    }
}

fn fixtures(sieve: &SieveConfig) -> Result<Vec<Check>, Failure> {
    Ok(all()
        .iter()
        .map(|f| {
            info!("fixture {}", f.id);
            fixture_check(f, sieve)
        })
        .collect())
}

fn theorem1(k_max: u64, jobs: Option<usize>, sieve: &SieveConfig) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    let cert_limit = CERTIFIED_K
        .iter()
        .map(|&k| certify_required_limit(k))
        .collect::<kninterval::Result<Vec<_>>>()?;
    let certs = PrimeTable::build_with(cert_limit.into_iter().max().unwrap_or(2), sieve)?;
    for k in CERTIFIED_K {
        let ok = certify_no_gap(&certs, k);
        out.push(check(
            format!("certify k={k}"),
            ok.is_ok(),
            ok.map(|r| format!("{:?}", r.outcome))
                .unwrap_or_else(|e| e.to_string()),
        ));
    }

    let config = ScanConfig {
        jobs,
        sieve: *sieve,
        ..ScanConfig::default()
    };
    let head = kninterval_testkit::fixture("gap_least_n").expect("embedded");
    let got: Vec<u64> = theorem1_scan(1, head.len() as u64, &config)?
        .iter()
        .map(|r| r.a_value().unwrap_or(u64::MAX))
        .collect();
    out.push(check("a(k), k=1..30", got == head.terms, format!("{got:?}")));

    if k_max >= 15 {
        info!("scanning k in [15, {k_max}]");
        let reports = theorem1_scan(15, k_max, &config)?;
        let anomalies = reports.iter().filter(|r| r.is_anomaly()).count();
        let values: Vec<u64> = reports.iter().filter_map(|r| r.a_value()).collect();
        let (lo, hi) = (values.iter().min().copied(), values.iter().max().copied());
        let in_range = values.iter().all(|a| (2..=16).contains(a));
        out.push(check(
            format!("a(k) in [2, 16], k=15..{k_max}"),
            anomalies == 0 && in_range,
            format!("min {lo:?}, max {hi:?}, {anomalies} anomalies"),
        ));
    }
    Ok(out)
}
