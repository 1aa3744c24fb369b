//! Search for witnesses `(a, b, m)` with `a + b = m^n` and
//! `p = (a^n + b^n)/(a + b)` an odd prime.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result, WitnessFailure};
use crate::numeric::Int;
use crate::primes::{is_prime, is_prime_u64};
use crate::roots::perfect_power;
use crate::shards::{default_shards, map_units};

/// A witness for exponent `n`, stored with `a >= b` and `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub p: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub a: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub b: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub m: Int,
    pub n: u32,
}

impl Certificate {
    /// Re-checks `a + b = m^n`, `p (a + b) = a^n + b^n`, `p` an odd prime,
    /// `p ≡ 1 (mod 2n)` and `gcd(a, b) = 1`.
    pub fn is_valid(&self) -> bool {
        let sum = &self.a + &self.b;
        self.m.is_positive()
            && sum == Pow::pow(&self.m, self.n)
            && &self.p * &sum == Pow::pow(&self.a, self.n) + Pow::pow(&self.b, self.n)
            && self.p.is_odd()
            && is_prime(&self.p)
            && ((&self.p - 1u32) % (2 * self.n)).is_zero()
            && self.a.gcd(&self.b).is_one()
    }

    fn assert_conclusions(&self) {
        assert!(
            ((&self.p - 1u32) % (2 * self.n)).is_zero(),
            "p = {} is not 1 mod 2n for witness ({}, {})",
            self.p,
            self.a,
            self.b
        );
        assert!(
            self.a.gcd(&self.b).is_one(),
            "gcd(a, b) != 1 for witness ({}, {})",
            self.a,
            self.b
        );
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p = {} from (a, b, m) = ({}, {}, {}), n = {}",
            self.p, self.a, self.b, self.m, self.n
        )
    }
}

fn check_exponent(n: u32) -> std::result::Result<(), WitnessFailure> {
    if n <= 3 || !is_prime_u64(n as u64) {
        return Err(WitnessFailure::Exponent(n));
    }
    Ok(())
}

/// Builds the certificate for `(a, b)` if it is a witness for exponent `n`.
///
/// A negative sum is flipped to `(−a, −b)`, which leaves `p` unchanged for odd `n`.
pub fn certificate_from_witness(n: u32, a: &Int, b: &Int) -> Result<Certificate> {
    check_exponent(n).map_err(Error::NotAWitness)?;
    let mut sum = a + b;
    if sum.is_zero() {
        return Err(Error::NotAWitness(WitnessFailure::ZeroSum));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    if sum.is_negative() {
        (a, b, sum) = (-a, -b, -sum);
    }
    let m = perfect_power(&sum, n).ok_or_else(|| {
        Error::NotAWitness(WitnessFailure::SumNotPower {
            sum: sum.clone(),
            n,
        })
    })?;
    let p = (Pow::pow(&a, n) + Pow::pow(&b, n)) / &sum;
    if p.is_even() || !is_prime(&p) {
        return Err(Error::NotAWitness(WitnessFailure::NotOddPrime(p)));
    }
    if p == Int::from(n) {
        return Err(Error::NotAWitness(WitnessFailure::EqualsExponent(p)));
    }
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    let cert = Certificate { p, a, b, m, n };
    cert.assert_conclusions();
    Ok(cert)
}

/// Consecutive over-bound values tolerated before an a-scan stops.
pub const DEFAULT_WINDOW: usize = 16;

#[derive(Debug, Clone)]
pub struct CertificateSearch {
    pub n: u32,
    pub p_bound: Int,
    pub m_max: u32,
    pub window: usize,
    pub shards: usize,
}

impl CertificateSearch {
    pub fn new(n: u32, p_bound: Int, m_max: u32) -> Self {
        CertificateSearch {
            n,
            p_bound,
            m_max,
            window: DEFAULT_WINDOW,
            shards: default_shards(),
        }
    }

    pub fn shards(mut self, shards: usize) -> Self {
        self.shards = shards.max(1);
        self
    }

    /// All certificates with `p < p_bound` and `1 <= m <= m_max`, sorted by `p`.
    pub fn run(&self) -> Result<Vec<Certificate>> {
        let n = self.n;
        check_exponent(n)
            .map_err(|_| Error::InvalidInput(format!("n = {n} is not a prime > 3")))?;
        if self.p_bound < Int::from(3) || self.m_max < 1 {
            return Err(Error::InvalidInput(
                "need p_bound >= 3 and m_max >= 1".into(),
            ));
        }

        // The cheap part: exact p for every (m, a) below the bound. For fixed
        // S = a + b the value a^n + (S − a)^n grows with |a − S/2|, so scanning
        // a upward from S/2 visits each unordered pair once and ends quickly.
        let mut candidates = Vec::new();
        for m in 1..=self.m_max {
            let m = Int::from(m);
            let sum: Int = Pow::pow(&m, n);
            let mut a: Int = (&sum >> 1u32) + 1u32;
            let mut over = 0;
            while over < self.window {
                let b = &sum - &a;
                let p = (Pow::pow(&a, n) + Pow::pow(&b, n)) / &sum;
                if p < self.p_bound {
                    over = 0;
                    candidates.push((a.clone(), b, m.clone(), p));
                } else {
                    over += 1;
                }
                a += 1u32;
            }
        }

        let chunk = candidates.len().div_ceil(self.shards * 8).max(1);
        let mut units = Vec::new();
        while !candidates.is_empty() {
            let rest = candidates.split_off(chunk.min(candidates.len()));
            units.push(std::mem::replace(&mut candidates, rest));
        }
        let n_int = Int::from(n);
        let mut found = map_units(self.shards, units, |unit| {
            unit.into_iter()
                .filter(|(_, b, _, p)| !b.is_zero() && p.is_odd() && *p != n_int && is_prime(p))
                .map(|(a, b, m, p)| {
                    let cert = Certificate { p, a, b, m, n };
                    cert.assert_conclusions();
                    cert
                })
                .collect()
        });
        found.sort_by(|x, y| x.p.cmp(&y.p).then_with(|| y.a.cmp(&x.a)));
        found.dedup();
        Ok(found)
    }
}

/// [`CertificateSearch`] with default window and parallelism.
pub fn search_certificates(n: u32, p_bound: &Int, m_max: u32) -> Result<Vec<Certificate>> {
    CertificateSearch::new(n, p_bound.clone(), m_max).run()
}
