//! Exhaustive enumeration of `X(𝔽_{qⁿ})`.
//!
//! Each projective point has exactly one representative whose first nonzero
//! coordinate is 1, so the search space for `v` coordinates is
//! `Σ_{i<v} Q^{v−1−i} = (Q^v − 1)/(Q − 1)` with `Q = qⁿ`. Work is split by the
//! position of the leading 1 and the value of the next coordinate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, TruncatedSeries};
use crate::points::field::{FieldTower, GaloisField, LOG_ZERO};
use crate::points::scheme::ProjectiveScheme;
use crate::zeta::zeta_from_traces;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Largest number of representatives one count may visit.
    pub budget: u64,
    /// Worker threads; 0 means one per core.
    pub workers: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { budget: DEFAULT_BUDGET, workers: 0 }
    }
}

/// Number of normalized representatives of `ℙ^{v−1}(𝔽_Q)`, or `None` on overflow.
pub fn representative_count(v: usize, order: u64) -> Option<u128> {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..v {
        total = total.checked_add(power)?;
        power = power.checked_mul(order as u128)?;
    }
    Some(total)
}

/// Arithmetic in which monomials are evaluated. Codes are either encoded field
/// elements or discrete logs, depending on the implementation.
trait Domain: Sync {
    fn size(&self) -> u64;
    /// Code of the `idx`-th element, `idx < size()`.
    fn code_at(&self, idx: u64) -> u64;
    fn zero(&self) -> u64;
    fn one(&self) -> u64;
    /// Code of an element of the prime field given as `0..p`.
    fn prime(&self, c: u64) -> u64;
    /// `acc · xᵉ`
    fn times_power(&self, acc: u64, x: u64, e: u32) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
}

struct Plain<'a>(&'a GaloisField);

impl Domain for Plain<'_> {
    fn size(&self) -> u64 {
        self.0.order()
    }
    fn code_at(&self, idx: u64) -> u64 {
        idx
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn prime(&self, c: u64) -> u64 {
        c
    }
    fn times_power(&self, acc: u64, x: u64, e: u32) -> u64 {
        self.0.mul(acc, self.0.pow(x, e as u64))
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        self.0.add(a, b)
    }
}

/// Zero is `LOG_ZERO`; everything else is its discrete log. `n = Q − 1`.
struct Logs<'a> {
    field: &'a GaloisField,
    n: u64,
}

impl<'a> Logs<'a> {
    fn new(field: &'a GaloisField) -> Self {
        Logs { field, n: field.order() - 1 }
    }
}

const ZERO: u64 = LOG_ZERO as u64;

impl Domain for Logs<'_> {
    fn size(&self) -> u64 {
        self.n + 1
    }
    fn code_at(&self, idx: u64) -> u64 {
        if idx == 0 {
            ZERO
        } else {
            idx - 1
        }
    }
    fn zero(&self) -> u64 {
        ZERO
    }
    fn one(&self) -> u64 {
        0
    }
    fn prime(&self, c: u64) -> u64 {
        self.field.log(c).expect("tables") as u64
    }
    #[inline]
    fn times_power(&self, acc: u64, x: u64, e: u32) -> u64 {
        if e == 0 || acc == ZERO {
            return acc;
        }
        if x == ZERO {
            return ZERO;
        }
        let mut s = acc + e as u64 * x;
        if e > 4 {
            return s % self.n;
        }
        while s >= self.n {
            s -= self.n;
        }
        s
    }
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        self.field.log_add(a as u32, b as u32) as u64
    }
}

/// Equations flattened to monomials: `ranges[k]` selects the monomials of
/// equation `k`.
struct Compiled {
    coeffs: Vec<u64>,
    /// `exps[m * v + j]`
    exps: Vec<u32>,
    ranges: Vec<std::ops::Range<usize>>,
    v: usize,
}

impl Compiled {
    fn new<D: Domain>(x: &ProjectiveScheme, d: &D) -> Self {
        let v = x.num_vars();
        let mut coeffs = Vec::new();
        let mut exps = Vec::new();
        let mut ranges = Vec::new();
        for eq in &x.equations {
            let start = coeffs.len();
            for (e, c) in eq.reduce_mod(x.p) {
                coeffs.push(d.prime(c));
                exps.extend(e);
            }
            ranges.push(start..coeffs.len());
        }
        Compiled { coeffs, exps, ranges, v }
    }

    fn monomials(&self) -> usize {
        self.coeffs.len()
    }

    /// `dst[m] = src[m] · x^{e_{m,var}}`
    #[inline]
    fn extend<D: Domain>(&self, d: &D, src: &[u64], dst: &mut [u64], var: usize, x: u64) {
        for (m, (s, t)) in src.iter().zip(dst.iter_mut()).enumerate() {
            *t = d.times_power(*s, x, self.exps[m * self.v + var]);
        }
    }

    #[inline]
    fn vanishes<D: Domain>(&self, d: &D, values: &[u64]) -> bool {
        let zero = d.zero();
        self.ranges.iter().all(|r| values[r.clone()].iter().fold(zero, |acc, &y| d.add(acc, y)) == zero)
    }
}

/// Counts solutions with the first `prefix.len()` coordinates fixed.
fn count_task<D: Domain>(d: &D, c: &Compiled, prefix: &[u64]) -> u64 {
    let m = c.monomials();
    let v = c.v;
    // levels[j*m..(j+1)*m] holds monomial values after assigning j coordinates.
    let mut levels = vec![0u64; (v + 1) * m];
    levels[..m].copy_from_slice(&c.coeffs);
    for (j, &x) in prefix.iter().enumerate() {
        let (lo, hi) = levels.split_at_mut((j + 1) * m);
        c.extend(d, &lo[j * m..], &mut hi[..m], j, x);
    }
    walk(d, c, prefix.len(), &mut levels)
}

fn walk<D: Domain>(d: &D, c: &Compiled, depth: usize, levels: &mut [u64]) -> u64 {
    let m = c.monomials();
    if depth == c.v {
        return c.vanishes(d, &levels[depth * m..(depth + 1) * m]) as u64;
    }
    if depth + 1 == c.v {
        // Innermost coordinate: evaluate without storing the last level.
        let src = &levels[depth * m..(depth + 1) * m];
        let zero = d.zero();
        return (0..d.size())
            .filter(|&idx| {
                let x = d.code_at(idx);
                c.ranges.iter().all(|r| {
                    r.clone().fold(zero, |acc, k| d.add(acc, d.times_power(src[k], x, c.exps[k * c.v + depth]))) == zero
                })
            })
            .count() as u64;
    }
    let mut total = 0;
    for idx in 0..d.size() {
        let x = d.code_at(idx);
        let (lo, hi) = levels.split_at_mut((depth + 1) * m);
        c.extend(d, &lo[depth * m..], &mut hi[..m], depth, x);
        total += walk(d, c, depth + 1, levels);
    }
    total
}

fn count_in<D: Domain>(x: &ProjectiveScheme, d: &D, workers: usize) -> Result<u64> {
    let c = Compiled::new(x, d);
    let v = c.v;
    let mut tasks: Vec<Vec<u64>> = Vec::new();
    for lead in 0..v {
        let mut prefix = vec![d.zero(); lead];
        prefix.push(d.one());
        if lead + 1 < v {
            for idx in 0..d.size() {
                let mut p = prefix.clone();
                p.push(d.code_at(idx));
                tasks.push(p);
            }
        } else {
            tasks.push(prefix);
        }
    }
    if workers == 1 {
        return Ok(tasks.iter().map(|p| count_task(d, &c, p)).sum());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Parse(format!("workers: {e}")))?;
    Ok(pool.install(|| tasks.par_iter().map(|p| count_task(d, &c, p)).sum()))
}

/// `|X(𝔽_{qⁿ})|` by enumeration.
pub fn count_points(x: &ProjectiveScheme, tower: &FieldTower, n: u32, opts: &CountOptions) -> Result<u64> {
    if tower.q() != x.base_q() {
        return Err(Error::FieldMismatch { scheme_q: x.base_q(), tower_q: tower.q() });
    }
    let field = tower.build_extension(n)?;
    let budget = opts.budget;
    match representative_count(x.num_vars(), field.order()) {
        Some(needed) if needed <= budget as u128 => {}
        needed => return Err(Error::BudgetExceeded { needed: needed.unwrap_or(u128::MAX), budget }),
    }
    if field.has_tables() {
        count_in(x, &Logs::new(&field), opts.workers)
    } else {
        count_in(x, &Plain(&field), opts.workers)
    }
}

/// Point counts `N₁..N_m` over the tower of a base field of order `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountVector {
    pub counts: Vec<u64>,
    pub q: u64,
}

impl CountVector {
    pub fn count(x: &ProjectiveScheme, m: usize, opts: &CountOptions) -> Result<Self> {
        let tower = x.tower();
        let counts = (1..=m as u32).map(|n| count_points(x, &tower, n, opts)).collect::<Result<_>>()?;
        Ok(CountVector { counts, q: x.base_q() })
    }

    /// Counts of `X ⊔ Y`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::FieldMismatch { scheme_q: self.q, tower_q: other.q });
        }
        if self.counts.len() != other.counts.len() {
            return Err(Error::DimensionMismatch {
                what: "count vector length",
                expected: self.counts.len(),
                found: other.counts.len(),
            });
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(CountVector { counts, q: self.q })
    }

    /// `exp(Σ Nₙ tⁿ / n)` through `t^m`.
    pub fn zeta_series(&self) -> TruncatedSeries {
        let traces: Vec<Rational> = self.counts.iter().map(|&c| Rational::from_int(c as i64)).collect();
        zeta_from_traces(&traces, traces.len()).expect("length matches")
    }
}
