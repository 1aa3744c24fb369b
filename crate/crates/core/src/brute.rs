//! Exhaustive search of `A + B = C <= c_bound`, `ABC = D^n`.

use num_traits::Pow;

use crate::error::{Error, Result};
use crate::hybrid::{classify_gcd, verify_hybrid, GcdClass, GcdKind, HybridSolution};
use crate::numeric::Int;
use crate::roots::perfect_power_u128;
use crate::shards::{default_shards, map_units};

/// Largest `c_bound` handled; keeps `ABC <= c^3/4` inside 128 bits.
pub const MAX_C_BOUND: u64 = 1 << 40;

/// Restricts search output by the shape of `gcd(A, B, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdFilter {
    One,
    /// `p^k`, any `k` when `None`.
    PrimePower(Option<u32>),
    Other,
}

impl GcdFilter {
    /// `gcd(A, B, C)` prime.
    pub const PRIME: GcdFilter = GcdFilter::PrimePower(Some(1));

    pub fn matches(&self, class: &GcdClass) -> bool {
        match (self, &class.kind) {
            (GcdFilter::One, GcdKind::One) => true,
            (GcdFilter::PrimePower(None), GcdKind::PrimePower { .. }) => true,
            (GcdFilter::PrimePower(Some(k)), GcdKind::PrimePower { k: got, .. }) => k == got,
            (GcdFilter::Other, GcdKind::Other(_)) => true,
            _ => false,
        }
    }
}

/// A search hit with its gcd classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub solution: HybridSolution,
    pub gcd: GcdClass,
}

#[derive(Debug, Clone)]
pub struct BruteSearch {
    pub n: u32,
    pub c_bound: u64,
    pub filter: Option<GcdFilter>,
    pub shards: usize,
}

/// C values per work unit.
const UNIT: u64 = 512;

impl BruteSearch {
    pub fn new(n: u32, c_bound: u64) -> Self {
        BruteSearch {
            n,
            c_bound,
            filter: None,
            shards: default_shards(),
        }
    }

    pub fn filter(mut self, filter: Option<GcdFilter>) -> Self {
        self.filter = filter;
        self
    }

    pub fn shards(mut self, shards: usize) -> Self {
        self.shards = shards.max(1);
        self
    }

    /// All hits with `1 <= A <= B`, sorted by `(C, A)`.
    pub fn run(&self) -> Result<Vec<Hit>> {
        let (n, c_bound) = (self.n, self.c_bound);
        if n < 3 || c_bound < 2 {
            return Err(Error::InvalidInput("need n >= 3 and c_bound >= 2".into()));
        }
        if c_bound > MAX_C_BOUND {
            return Err(Error::InvalidInput(format!(
                "c_bound {c_bound} exceeds the brute-force limit {MAX_C_BOUND}"
            )));
        }
        let units: Vec<(u64, u64)> = (0..)
            .map(|i| (2 + i * UNIT, (2 + (i + 1) * UNIT - 1).min(c_bound)))
            .take_while(|(lo, _)| *lo <= c_bound)
            .collect();
        let raw = map_units(self.shards, units, |(lo, hi)| scan(n, lo, hi));
        let mut hits = Vec::with_capacity(raw.len());
        for (a, b, c, d) in raw {
            let (a, b, c, d) = (Int::from(a), Int::from(b), Int::from(c), Int::from(d));
            debug_assert!(verify_hybrid(&a, &b, &c, &d, &Int::from(n)));
            let gcd = classify_gcd(&a, &b, &c)?;
            if self.filter.is_some_and(|f| !f.matches(&gcd)) {
                continue;
            }
            hits.push(Hit {
                solution: HybridSolution { a, b, c, d, n },
                gcd,
            });
        }
        hits.sort_by(|x, y| (&x.solution.c, &x.solution.a).cmp(&(&y.solution.c, &y.solution.a)));
        Ok(hits)
    }
}

/// Candidates with `lo <= C <= hi` in `(C, A)` order.
fn scan(n: u32, lo: u64, hi: u64) -> Vec<(u128, u128, u128, u128)> {
    let mut out = Vec::new();
    for c in lo..=hi {
        let c = c as u128;
        for a in 1..=c / 2 {
            let b = c - a;
            if let Some(d) = perfect_power_u128(a * b * c, n) {
                out.push((a, b, c, d));
            }
        }
    }
    out
}

/// [`BruteSearch`] with default parallelism.
pub fn brute_search(n: u32, c_bound: u64, filter: Option<GcdFilter>) -> Result<Vec<Hit>> {
    BruteSearch::new(n, c_bound).filter(filter).run()
}

/// One of the worked `n = 4` examples with prime gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkedExample {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
    pub n: u32,
    pub p: Int,
}

/// The four `n = 4` tuples with `gcd(A, B, C) = 2, 17, 5, 239`.
pub fn worked_examples() -> Vec<WorkedExample> {
    let rows: [(u64, u64, u64, u64, u64); 4] = [
        (2, 2, 4, 2, 2),
        (17, 272, 289, 34, 17),
        (5, 400, 405, 30, 5),
        (
            47_927_607_119,
            1_631_432_881,
            49_559_040_000,
            44_367_960,
            239,
        ),
    ];
    rows.iter()
        .map(|&(a, b, c, d, p)| WorkedExample {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            n: 4,
            p: p.into(),
        })
        .collect()
}

/// Verifies each example tuple and that its gcd is exactly the stated prime.
pub fn verify_examples(examples: &[WorkedExample]) -> bool {
    examples.iter().all(|e| {
        verify_hybrid(&e.a, &e.b, &e.c, &e.d, &Int::from(e.n))
            && classify_gcd(&e.a, &e.b, &e.c).is_ok_and(|g| g.prime_power() == Some((&e.p, 1)))
    })
}

pub fn verify_worked_examples() -> bool {
    verify_examples(&worked_examples())
}

/// Whether `x` equals `D^n` for the given `D`, as a plain integer identity.
pub fn is_power_identity(x: &Int, d: &Int, n: u32) -> bool {
    *x == Pow::pow(d, n)
}
