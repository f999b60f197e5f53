//! Acceptance criteria, run one after another so the time limits are
//! measured on an otherwise idle process. Each prints a single PASS or FAIL
//! line; the run fails if any criterion does.
//!
//! `cargo test -p kninterval --test acceptance -- 5 12` runs a subset.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use kninterval::intervals::{
    certify_no_gap, certify_required_limit, nk_number, nk_required_limit, nk_sequence, nk_upper,
    theorem1_scan, NkMethod, ScanConfig,
};
use kninterval::ramanujan::{
    prop8_required_limit, ramanujan_inequality_counterexample, required_limit, sequence, verify_prop8, Kind,
    CERTIFIED_K,
};
use kninterval::residue::{
    capacity, chaining_bound, nk_sequence_p, sequence_p, ResidueClass, SmallIntervalTheorem,
};
use kninterval::{is_prime, PrimeTable, Ratio};
use kninterval_testkit::{fixture, oracle_n, oracle_r};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn terms(id: &str) -> Vec<u64> {
    fixture(id)
        .unwrap_or_else(|| panic!("fixture {id} is embedded"))
        .terms
}

fn ratio(p: u64, q: u64) -> Ratio {
    Ratio::new(p, q).unwrap()
}

fn table(limit: u64) -> Result<PrimeTable, String> {
    PrimeTable::build(limit).map_err(|e| e.to_string())
}

fn seq(kind: Kind, v: Ratio, m: u64) -> Result<Vec<u64>, String> {
    let t = table(required_limit(v, m).map_err(|e| e.to_string())?)?;
    sequence(&t, kind, v, m).map_err(|e| e.to_string())
}

fn bin(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kninterval"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("kninterval binary runs");
    (out, start.elapsed())
}

fn within(elapsed: Duration, limit_secs: f64) -> Result<(), String> {
    let secs = elapsed.as_secs_f64();
    if secs >= limit_secs {
        return Err(format!("took {secs:.2} s, limit {limit_secs} s"));
    }
    Ok(())
}

fn bfile_values(text: &str) -> Vec<u64> {
    text.lines()
        .map(|l| l.split(' ').nth(1).unwrap().parse().unwrap())
        .collect()
}

/// The (v, kind, fixture) triples of the printed ten-sequence table.
const TEN: [(u64, u64, Kind, &str); 10] = [
    (3, 2, Kind::Chebyshev, "chebyshev_3_2"),
    (3, 2, Kind::Ramanujan, "ramanujan_3_2"),
    (4, 3, Kind::Chebyshev, "chebyshev_4_3"),
    (4, 3, Kind::Ramanujan, "ramanujan_4_3"),
    (6, 5, Kind::Chebyshev, "chebyshev_6_5"),
    (6, 5, Kind::Ramanujan, "ramanujan_6_5"),
    (10, 9, Kind::Chebyshev, "chebyshev_10_9"),
    (10, 9, Kind::Ramanujan, "ramanujan_10_9"),
    (15, 14, Kind::Chebyshev, "chebyshev_15_14"),
    (15, 14, Kind::Ramanujan, "ramanujan_15_14"),
];

fn c1_ramanujan_primes() -> Outcome {
    let (out, elapsed) = bin(&["ramanujan", "--v", "2", "--count", "10"]);
    ensure!(out.status.success(), "exit status {}", out.status);
    let got = bfile_values(&String::from_utf8_lossy(&out.stdout));
    ensure!(got == terms("ramanujan_2"), "got {got:?}");
    within(elapsed, 1.0)?;
    Ok(format!("{got:?} in {:.3} s", elapsed.as_secs_f64()))
}

fn c2_chebyshev_numbers() -> Outcome {
    let start = Instant::now();
    let two = ratio(2, 1);
    let c = seq(Kind::Chebyshev, two, 100)?;
    let printed = terms("chebyshev_2");
    ensure!(
        c[..printed.len()] == printed[..],
        "prefix differs: {:?}",
        &c[..printed.len()]
    );
    ensure!(
        (c[16], c[35], c[99]) == (223, 443, 1489),
        "C(17), C(36), C(100) = {}, {}, {}",
        c[16],
        c[35],
        c[99]
    );

    // every Ramanujan prime up to C(100)
    let r_all = seq(Kind::Ramanujan, two, 250)?;
    ensure!(*r_all.last().unwrap() > 1489, "R(250) does not reach past 1489");
    let r: BTreeSet<u64> = r_all.into_iter().filter(|&p| p <= 1489).collect();
    let c_set: BTreeSet<u64> = c.iter().copied().collect();
    let missing: Vec<u64> = r.difference(&c_set).copied().collect();
    let extra: Vec<u64> = c_set.difference(&r).copied().collect();
    // R(1) = 2 lies below C(1) = 11 and has no counterpart
    let missing: Vec<u64> = missing.into_iter().filter(|&p| p > c[0]).collect();
    ensure!(
        missing == [181, 227, 439, 491, 1283, 1301] && extra == [223, 443],
        "Ramanujan primes missing from C: {missing:?} (expected [181, 227, 439, 491, 1283, 1301]); \
         C terms that are not Ramanujan primes: {extra:?} (expected [223, 443])"
    );
    within(start.elapsed(), 10.0)?;
    Ok(format!(
        "{} printed terms, C(100) = 1489, missing {missing:?}, in {:.2} s",
        printed.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn c3_ten_sequences() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (p, q, kind, id) in TEN {
        let printed = terms(id);
        let got = seq(kind, ratio(p, q), printed.len() as u64)?;
        if got != printed {
            let at = got.iter().zip(&printed).position(|(a, b)| a != b).unwrap();
            bad.push(format!(
                "{id}: term {} is {}, printed {}",
                at + 1,
                got[at],
                printed[at]
            ));
        }
    }
    ensure!(bad.is_empty(), "{}", bad.join("; "));
    within(start.elapsed(), 30.0)?;
    Ok(format!("10 sequences in {:.2} s", start.elapsed().as_secs_f64()))
}

fn c4_nk_sequences() -> Outcome {
    let mut closed_forms = 0;
    for (k, id, n) in [
        (1, "nk_1", 10),
        (2, "nk_2", 18),
        (3, "nk_3", 18),
        (5, "nk_5", 18),
        (9, "nk_9", 18),
        (14, "nk_14", 18),
    ] {
        let printed = terms(id);
        let n = n.min(printed.len());
        let t = table(nk_required_limit(k, n as u64).map_err(|e| e.to_string())?)?;
        // nk_sequence rejects any disagreement between descent and a closed form
        let got = nk_sequence(&t, k, n as u64, false).map_err(|e| format!("k={k}: {e}"))?;
        let values: Vec<u64> = got.iter().map(|r| r.value).collect();
        ensure!(values == printed[..n], "k={k}: {values:?}");
        closed_forms += got.iter().filter(|r| r.method != NkMethod::Descent).count();
    }
    let t = table(nk_required_limit(3, 3).map_err(|e| e.to_string())?)?;
    let n32 = nk_number(&t, 3, 2).map_err(|e| e.to_string())?.value;
    let n33 = nk_number(&t, 3, 3).map_err(|e| e.to_string())?.value;
    let upper = nk_upper(&t, 3, 3).map_err(|e| e.to_string())?;
    ensure!(n32 == 8, "N_3(2) = {n32}");
    ensure!(n33 == 11 && upper == 15, "N_3(3) = {n33}, ceil(R/4) = {upper}");
    let (n3, n9) = (terms("nk_3"), terms("nk_9"));
    ensure!(
        n3[10] == 68 && n3[11] == 68 && n9[2] == 23 && n9[3] == 23,
        "plateaus"
    );
    Ok(format!(
        "6 sequences, {closed_forms} closed-form agreements, N_3(2) = 8, N_3(3) = 11 < 15"
    ))
}

fn c5_theorem1() -> Outcome {
    let start = Instant::now();
    let config = ScanConfig::default();
    let head: Vec<u64> = theorem1_scan(1, 30, &config)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| r.a_value().unwrap_or(u64::MAX))
        .collect();
    ensure!(head == terms("gap_least_n"), "a(1..30) = {head:?}");

    let reports = theorem1_scan(15, 100_000, &config).map_err(|e| e.to_string())?;
    let anomalies: Vec<u64> = reports.iter().filter(|r| r.is_anomaly()).map(|r| r.k).collect();
    ensure!(anomalies.is_empty(), "anomalies at k = {anomalies:?}");
    let a: Vec<u64> = reports.iter().filter_map(|r| r.a_value()).collect();
    let (lo, hi) = (*a.iter().min().unwrap(), *a.iter().max().unwrap());
    ensure!(lo >= 2 && hi <= 16, "a(k) ranges over [{lo}, {hi}]");

    let limit = CERTIFIED_K
        .iter()
        .map(|&k| certify_required_limit(k).unwrap())
        .max()
        .unwrap();
    let t = table(limit)?;
    for k in CERTIFIED_K {
        certify_no_gap(&t, k).map_err(|e| e.to_string())?;
    }
    within(start.elapsed(), 300.0)?;
    Ok(format!(
        "a(1..30) matches, a(k) in [{lo}, {hi}] for k = 15..100000, 6 certificates, {:.1} s",
        start.elapsed().as_secs_f64()
    ))
}

fn c6_prop8() -> Outcome {
    let mut total = 0;
    for k in CERTIFIED_K {
        let t = table(prop8_required_limit(k, 100).map_err(|e| e.to_string())?)?;
        let r = verify_prop8(&t, k, 100).map_err(|e| e.to_string())?;
        ensure!(r.all_hold, "k={k}: {:?}", r.violations);
        total += r.violations.len();
    }
    Ok(format!("k in {CERTIFIED_K:?}, m <= 100: {total} violations"))
}

fn c7_structure() -> Outcome {
    let mut pairs = 0;
    let mut cases: Vec<(Ratio, u64)> = vec![(ratio(2, 1), 100)];
    cases.extend(
        TEN.iter()
            .filter(|c| c.2 == Kind::Ramanujan)
            .map(|&(p, q, _, id)| (ratio(p, q), terms(id).len() as u64)),
    );
    for (v, m) in cases {
        let r = seq(Kind::Ramanujan, v, m)?;
        let c = seq(Kind::Chebyshev, v, m)?;
        for s in [&r, &c] {
            ensure!(
                s.windows(2).all(|w| w[0] < w[1]),
                "v={v}: not strictly increasing"
            );
            ensure!(s.iter().all(|&p| is_prime(p)), "v={v}: composite term");
        }
        for (i, (a, b)) in r.iter().zip(&c).enumerate() {
            ensure!(a <= b, "v={v}: R({}) = {a} > C({}) = {b}", i + 1, i + 1);
        }
        pairs += r.len();
    }
    Ok(format!("{pairs} (R, C) pairs over 6 values of v"))
}

fn c8_residue_classes() -> Outcome {
    let start = Instant::now();
    let ch = SmallIntervalTheorem::cullinan_hajir();
    let two = ratio(2, 1);
    let t = table(chaining_bound(two, &ch) + 1).map_err(|e| e.to_string())?;
    for (q, r) in [(3, 1), (3, 2), (4, 1), (4, 3)] {
        let class = ResidueClass::new(q, r).map_err(|e| e.to_string())?;
        let printed = terms(&format!("residue_{r}_mod_{q}"));
        let got = sequence_p(&t, class, two, printed.len() as u64, &ch).map_err(|e| e.to_string())?;
        ensure!(got == printed, "{r} mod {q}: R = {got:?}");
        let printed = terms(&format!("nk_1_residue_{r}_mod_{q}"));
        let got = nk_sequence_p(&t, class, 1, printed.len() as u64, &ch).map_err(|e| e.to_string())?;
        ensure!(got == printed, "{r} mod {q}: N_1 = {got:?}");
    }
    within(start.elapsed(), 10.0)?;
    Ok(format!(
        "4 classes x 2 sequences in {:.2} s",
        start.elapsed().as_secs_f64()
    ))
}

fn c9_capacity() -> Outcome {
    let rs = capacity(ratio(15, 14), &SmallIntervalTheorem::ramare_saouter()).map_err(|e| e.to_string())?;
    let ch = capacity(ratio(2, 1), &SmallIntervalTheorem::cullinan_hajir()).map_err(|e| e.to_string())?;
    ensure!(ch == 14, "capacity(2, Cullinan-Hajir) = {ch}");
    ensure!(
        rs == 1_954_471,
        "capacity(15/14, Ramare-Saouter) = {rs}, expected 1954471"
    );
    Ok(format!("{rs} and {ch}"))
}

fn c10_oracles() -> Outcome {
    let mut checked = 0;
    for (p, q, id) in [
        (2, 1, "ramanujan_2"),
        (3, 2, "ramanujan_3_2"),
        (4, 3, "ramanujan_4_3"),
    ] {
        let v = ratio(p, q);
        let lib = seq(Kind::Ramanujan, v, 4)?;
        let printed = terms(id);
        for m in 1..=4u64 {
            let want = printed[m as usize - 1];
            let oracle = oracle_r(p, q, m, (4 * want).max(200));
            ensure!(
                oracle == Some(want) && lib[m as usize - 1] == want,
                "R_{v}({m}): oracle {oracle:?}, library {}, printed {want}",
                lib[m as usize - 1]
            );
            checked += 1;
        }
    }
    for (k, id) in [(1, "nk_1"), (2, "nk_2"), (3, "nk_3")] {
        let t = table(nk_required_limit(k, 3).map_err(|e| e.to_string())?)?;
        let lib = nk_sequence(&t, k, 3, false).map_err(|e| e.to_string())?;
        let printed = terms(id);
        for m in 1..=3u64 {
            let want = printed[m as usize - 1];
            let oracle = oracle_n(k, m, (4 * want).max(100));
            ensure!(
                oracle == Some(want) && lib[m as usize - 1].value == want,
                "N_{k}({m}): oracle {oracle:?}, library {}, printed {want}",
                lib[m as usize - 1].value
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} values agree three ways"))
}

fn c11_ramanujan_inequality() -> Outcome {
    let t = table(1_000_000)?;
    let bad = ramanujan_inequality_counterexample(&t, 300, 1_000_000).map_err(|e| e.to_string())?;
    ensure!(bad.is_none(), "fails at x = {}", bad.unwrap());
    Ok("holds for every integer x in (300, 1000000]".into())
}

fn c12_determinism() -> Outcome {
    let base = ["gaps", "--k-min", "15", "--k-max", "10000"];
    let (one, t1) = bin(&[&base[..], &["--jobs", "1"]].concat());
    let (eight, t8) = bin(&[&base[..], &["--jobs", "8"]].concat());
    ensure!(
        one.status.success() && eight.status.success(),
        "exit {} / {}",
        one.status,
        eight.status
    );
    ensure!(one.stdout == eight.stdout, "outputs differ");
    ensure!(one.stdout.starts_with(b"15 6\n"), "unexpected first line");
    Ok(format!(
        "{} identical bytes ({:.2} s with 1 job, {:.2} s with 8)",
        one.stdout.len(),
        t1.as_secs_f64(),
        t8.as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("ramanujan primes via the CLI", c1_ramanujan_primes),
        ("Chebyshev numbers for v = 2", c2_chebyshev_numbers),
        ("ten R_v and C_v sequences", c3_ten_sequences),
        ("N_k sequences and closed forms", c4_nk_sequences),
        ("a(k) table, range scan, certificates", c5_theorem1),
        ("R and C below p_tm", c6_prop8),
        ("R <= C, increasing, prime", c7_structure),
        ("residue-class sequences", c8_residue_classes),
        ("small-interval capacity", c9_capacity),
        ("oracle equivalence", c10_oracles),
        ("Ramanujan's inequality", c11_ramanujan_inequality),
        ("determinism across --jobs", c12_determinism),
    ];

    // libtest-style flags from `cargo test` are ignored; bare numbers select criteria
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !wanted.is_empty() && !wanted.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name} [{secs:.2} s]: {detail}"),
            Err(detail) => {
                println!("criterion {n:>2} FAIL  {name} [{secs:.2} s]: {detail}");
                failed.push(n);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
