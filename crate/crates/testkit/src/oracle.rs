/// Primality by trial division.
pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// pi(x) by testing every integer up to x.
pub fn prime_count_trial(x: u64) -> u64 {
    (2..=x).filter(|&n| is_prime_trial(n)).count() as u64
}

/// pi(0..=x_max) as a table, built by trial division.
fn counts(x_max: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(x_max as usize + 1);
    let mut c = 0;
    for n in 0..=x_max {
        if is_prime_trial(n) {
            c += 1;
        }
        out.push(c);
    }
    out
}

/// Smallest X in [2, x_max] with pi(x) - pi(floor(x den/num)) >= m for every
/// integer x in [X, x_max]; `None` if the count at x_max is still short.
///
/// The answer is only meaningful when x_max is well beyond it.
pub fn oracle_r(num: u64, den: u64, m: u64, x_max: u64) -> Option<u64> {
    assert!(num > den && den >= 1, "v = num/den must exceed 1");
    assert!(x_max >= 2);
    let pi = counts(x_max);
    let mut answer = None;
    for x in (2..=x_max).rev() {
        let y = (x as u128 * den as u128 / num as u128) as usize;
        if pi[x as usize] - pi[y] < m {
            break;
        }
        answer = Some(x);
    }
    answer
}

/// Smallest N with at least m primes in the open interval (kn, (k+1)n) for
/// every n in [N, n_max]; `None` if n_max itself fails.
pub fn oracle_n(k: u64, m: u64, n_max: u64) -> Option<u64> {
    oracle_n_with(k, m, n_max, false)
}

/// As [`oracle_n`], counting over [kn, (k+1)n] when `closed`. The scan starts
/// at n = 1.
pub fn oracle_n_with(k: u64, m: u64, n_max: u64, closed: bool) -> Option<u64> {
    assert!(k >= 1 && n_max >= 2);
    let mut answer = None;
    for n in (1..=n_max).rev() {
        let (lo, hi) = if closed {
            (k * n, (k + 1) * n)
        } else {
            (k * n + 1, (k + 1) * n - 1)
        };
        let count = (lo..=hi).filter(|&p| is_prime_trial(p)).count() as u64;
        if count < m {
            break;
        }
        answer = Some(n);
    }
    answer
}
