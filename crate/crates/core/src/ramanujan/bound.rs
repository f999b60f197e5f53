//! Explicit upper bounds for R_v(m) and C_v(m) from piecewise Chebyshev
//! theta estimates |theta(x) - x| <= a x / ln^b x.
//!
//! Both solvers search integer x over "cells": maximal runs on which the
//! regime of x (and, for the two-sided form, the regime of x/v) is fixed.
//! Within one cell the bound predicate is upward closed, so a binary search
//! finds its first true point; the answer is the start of the final run of
//! cells on which the predicate holds everywhere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// Smallest bound ever returned; ln^4 x > 1300 from here on.
pub const MIN_BOUND: u64 = 406;

/// One row |theta(x) - x| <= a x / ln^b x, valid for x in (x_lo, x_hi].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DusartRegime {
    pub a: f64,
    pub b: i32,
    pub x_lo: u128,
    /// `None` means unbounded.
    pub x_hi: Option<u128>,
}

impl DusartRegime {
    #[inline]
    pub fn eps(&self, x: f64) -> f64 {
        self.a / x.ln().powi(self.b)
    }
}

/// Regimes tiling (x_lo of the first row, infinity).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DusartTable {
    regimes: Vec<DusartRegime>,
}

impl DusartTable {
    pub fn new(regimes: Vec<DusartRegime>) -> Result<Self> {
        if regimes.is_empty() {
            return Err(Error::InvalidArgument("empty regime table".into()));
        }
        for (i, r) in regimes.iter().enumerate() {
            if r.a <= 0.0 || r.b <= 0 {
                return Err(Error::InvalidArgument(format!(
                    "regime {i}: a and b must be positive"
                )));
            }
            // eps is decreasing, so positivity at the left end covers the whole regime
            if r.eps(r.x_lo as f64) >= 1.0 {
                return Err(Error::InvalidArgument(format!(
                    "regime {i}: 1 - a/ln^b x is not positive above {}",
                    r.x_lo
                )));
            }
            match (r.x_hi, regimes.get(i + 1)) {
                (Some(hi), Some(next)) if hi == next.x_lo && hi > r.x_lo => {}
                (None, None) => {}
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "regime {i} does not tile with its successor"
                    )))
                }
            }
        }
        Ok(DusartTable { regimes })
    }

    /// The piecewise table of best (a, b) per range used for all bounds here.
    pub fn standard() -> Self {
        const E9: u128 = 1_000_000_000;
        let rows = vec![
            DusartRegime {
                a: 3.965,
                b: 2,
                x_lo: 25,
                x_hi: Some(70_000_000),
            },
            DusartRegime {
                a: 1300.0,
                b: 4,
                x_lo: 70_000_000,
                x_hi: Some(E9),
            },
            DusartRegime {
                a: 0.001,
                b: 1,
                x_lo: E9,
                x_hi: Some(8 * E9),
            },
            DusartRegime {
                a: 0.78,
                b: 3,
                x_lo: 8 * E9,
                x_hi: Some(7 * 10u128.pow(33)),
            },
            DusartRegime {
                a: 1300.0,
                b: 4,
                x_lo: 7 * 10u128.pow(33),
                x_hi: None,
            },
        ];
        DusartTable::new(rows).expect("standard table is well formed")
    }

    pub fn regimes(&self) -> &[DusartRegime] {
        &self.regimes
    }
}

/// Which inequality the solver enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundForm {
    /// (x / ln x)(1 - a/ln^b x) >= v m / (v - 1).
    Published,
    /// x(1 - 1/v) - x eps(x) - (x/v) eps(x/v) >= m ln x, i.e. the theta
    /// estimate applied separately at x and at x/v.
    TwoSided,
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    start: u128,
    rx: Option<usize>,
    ry: Option<usize>,
}

const U64_END: u128 = u64::MAX as u128 + 1;

fn sat_mul(a: u128, b: u128) -> u128 {
    a.saturating_mul(b)
}

fn build_cells(table: &DusartTable, form: BoundForm, v: Ratio, floor: u64) -> Vec<Cell> {
    let regs = table.regimes();
    // first integer x with x > lo, and first with x / v > lo
    let x_starts: Vec<u128> = regs.iter().map(|r| r.x_lo + 1).collect();
    let y_starts: Vec<u128> = regs
        .iter()
        .map(|r| sat_mul(r.x_lo, v.num() as u128) / v.den() as u128 + 1)
        .collect();

    let mut points = vec![floor as u128];
    points.extend(x_starts.iter().copied());
    if form == BoundForm::TwoSided {
        points.extend(y_starts.iter().copied());
    }
    points.retain(|&p| p >= floor as u128 && p != u128::MAX);
    points.sort_unstable();
    points.dedup();

    let last_le = |starts: &[u128], s: u128| starts.iter().rposition(|&b| b <= s);
    points
        .into_iter()
        .map(|start| Cell {
            start,
            rx: last_le(&x_starts, start),
            ry: last_le(&y_starts, start),
        })
        .collect()
}

struct Solver<'a> {
    table: &'a DusartTable,
    form: BoundForm,
    v: Ratio,
    m: u64,
}

impl Solver<'_> {
    fn holds(&self, cell: &Cell, x: f64) -> bool {
        let regs = self.table.regimes();
        let Some(rx) = cell.rx.map(|i| &regs[i]) else {
            return false;
        };
        let v = self.v.to_f64();
        let m = self.m as f64;
        match self.form {
            BoundForm::Published => {
                let target = v * m / (v - 1.0);
                x / x.ln() * (1.0 - rx.eps(x)) >= target
            }
            BoundForm::TwoSided => {
                let Some(ry) = cell.ry.map(|i| &regs[i]) else {
                    return false;
                };
                let y = x / v;
                let lhs = x * (1.0 - 1.0 / v) - x * rx.eps(x) - y * ry.eps(y);
                let rhs = m * x.ln();
                lhs >= rhs * (1.0 + 1e-9)
            }
        }
    }

    /// First integer in [lo, hi] where the predicate holds, if any.
    fn first_true(&self, cell: &Cell, lo: u64, hi: u64) -> Option<u64> {
        if !self.holds(cell, hi as f64) {
            return None;
        }
        let (mut lo, mut hi) = (lo, hi);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.holds(cell, mid as f64) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }

    fn solve(&self, floor: u64) -> Result<u64> {
        let cells = build_cells(self.table, self.form, self.v, floor);

        // beyond u64 only cell starts can be probed
        for c in cells.iter().filter(|c| c.start >= U64_END) {
            if !self.holds(c, c.start as f64) {
                return Err(Error::ResourceLimit(format!(
                    "no 64-bit bound for v = {}, m = {}",
                    self.v, self.m
                )));
            }
        }

        let in_range: Vec<&Cell> = cells.iter().filter(|c| c.start < U64_END).collect();
        let mut bound: Option<u64> = None;
        for (i, cell) in in_range.iter().enumerate().rev() {
            let lo = cell.start as u64;
            let hi = in_range
                .get(i + 1)
                .map(|n| n.start as u64 - 1)
                .unwrap_or(u64::MAX);
            match self.first_true(cell, lo, hi) {
                Some(x) if x == lo => bound = Some(lo),
                Some(x) => {
                    bound = Some(x);
                    break;
                }
                None => break,
            }
        }
        bound.ok_or_else(|| {
            Error::ResourceLimit(format!("no 64-bit bound for v = {}, m = {}", self.v, self.m))
        })
    }
}

/// Smallest B >= `MIN_BOUND` such that the chosen inequality holds for every
/// integer x >= B under the given regime table.
pub fn solve_bound(table: &DusartTable, form: BoundForm, v: Ratio, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    Solver { table, form, v, m }.solve(MIN_BOUND)
}

/// Published-form bound x_v(m) with R_v(m) <= C_v(m) <= x_v(m).
pub fn upper_bound_x(v: Ratio, m: u64) -> Result<u64> {
    solve_bound(&DusartTable::standard(), BoundForm::Published, v, m)
}

/// Bound used to seed every descent: the larger of the published and
/// two-sided bounds.
pub fn descent_bound(v: Ratio, m: u64) -> Result<u64> {
    let table = DusartTable::standard();
    let published = solve_bound(&table, BoundForm::Published, v, m)?;
    let two_sided = solve_bound(&table, BoundForm::TwoSided, v, m)?;
    Ok(published.max(two_sided))
}
