//! Integer factorization, radicals and squarefree decomposition.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numeric::{Int, Rat};
use crate::primes::{is_prime, small_primes};
use crate::roots::perfect_power;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Int, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Int, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Product of `p^e` over all factors.
    pub fn value(&self) -> Int {
        self.factors
            .iter()
            .fold(Int::one(), |acc, (p, e)| acc * Pow::pow(p, *e))
    }

    pub fn radical(&self) -> Int {
        self.factors.iter().fold(Int::one(), |acc, (p, _)| acc * p)
    }

    fn from_primes(mut primes: Vec<Int>) -> Self {
        primes.sort();
        let mut factors: Vec<(Int, u32)> = Vec::new();
        for p in primes {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
        Factorization { factors }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub const DEFAULT_TRIAL_LIMIT: u32 = 1_000_000;
pub const DEFAULT_RHO_BUDGET: u64 = 10_000_000;
const RHO_SEED: u64 = 0x5eed_f00d;

/// Trial division followed by Pollard-Brent rho under an iteration budget.
#[derive(Debug, Clone, Copy)]
pub struct Factorizer {
    pub trial_limit: u32,
    pub rho_budget: u64,
}

impl Default for Factorizer {
    fn default() -> Self {
        Factorizer {
            trial_limit: DEFAULT_TRIAL_LIMIT,
            rho_budget: DEFAULT_RHO_BUDGET,
        }
    }
}

impl Factorizer {
    pub fn factorize(&self, x: &Int) -> Result<Factorization> {
        if !x.is_positive() {
            return Err(Error::Domain(format!("cannot factor {x}: need x >= 1")));
        }
        let mut primes = Vec::new();
        let mut rest = x.clone();
        self.trial_divide(&mut rest, &mut primes);
        if !rest.is_one() {
            let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
            let mut steps = 0u64;
            let mut stack = vec![(rest, 1u32)];
            while let Some((n, mult)) = stack.pop() {
                if is_prime(&n) {
                    primes.extend(std::iter::repeat_n(n, mult as usize));
                    continue;
                }
                if let Some((root, e)) = perfect_power_split(&n) {
                    stack.push((root, mult * e));
                    continue;
                }
                let d = self.find_factor(&n, &mut rng, &mut steps).ok_or_else(|| {
                    Error::FactorBudgetExceeded {
                        value: x.clone(),
                        budget: self.rho_budget,
                    }
                })?;
                stack.push((&n / &d, mult));
                stack.push((d, mult));
            }
        }
        Ok(Factorization::from_primes(primes))
    }

    fn trial_divide(&self, rest: &mut Int, primes: &mut Vec<Int>) {
        for (i, &p) in small_primes().iter().enumerate() {
            if p > self.trial_limit {
                break;
            }
            if let Some(v) = rest.to_u64() {
                // Finish in machine arithmetic.
                let mut v = v;
                for &q in &small_primes()[i..] {
                    if q > self.trial_limit {
                        break;
                    }
                    let q = q as u64;
                    if q * q > v {
                        break;
                    }
                    while v % q == 0 {
                        v /= q;
                        primes.push(Int::from(q));
                    }
                }
                if v > 1 && (v as u128) < (self.trial_limit as u128).pow(2) {
                    primes.push(Int::from(v));
                    v = 1;
                }
                *rest = Int::from(v);
                return;
            }
            while (&*rest % p).is_zero() {
                *rest /= p;
                primes.push(Int::from(p));
            }
            // A large prime cofactor would otherwise cost a full sweep.
            if i == 200 && is_prime(rest) {
                primes.push(std::mem::replace(rest, Int::one()));
                return;
            }
        }
    }

    /// Brent's variant of Pollard rho on composite `n`.
    fn find_factor(&self, n: &Int, rng: &mut ChaCha8Rng, steps: &mut u64) -> Option<Int> {
        if n.is_even() {
            return Some(Int::from(2));
        }
        let root = n.sqrt();
        if &root * &root == *n {
            return Some(root);
        }
        let bound = n.to_u64().unwrap_or(u64::MAX);
        while *steps < self.rho_budget {
            let c = Int::from(rng.gen_range(1..bound.max(3)));
            let mut y = Int::from(rng.gen_range(0..bound.max(3)));
            let f = |v: &Int| (v * v + &c) % n;
            let batch = 128u64;
            let mut r = 1u64;
            let mut q = Int::one();
            let mut g = Int::one();
            let mut x = y.clone();
            let mut ys = y.clone();
            while g.is_one() {
                x = y.clone();
                for _ in 0..r {
                    y = f(&y);
                }
                let mut k = 0;
                while k < r && g.is_one() {
                    ys = y.clone();
                    for _ in 0..batch.min(r - k) {
                        y = f(&y);
                        q = (q * (&x - &y).abs()) % n;
                    }
                    *steps += batch.min(r - k);
                    g = q.gcd(n);
                    k += batch;
                }
                r *= 2;
                if *steps >= self.rho_budget {
                    break;
                }
            }
            if g == *n {
                loop {
                    ys = f(&ys);
                    *steps += 1;
                    g = (&x - &ys).abs().gcd(n);
                    if !g.is_one() || *steps >= self.rho_budget {
                        break;
                    }
                }
            }
            if !g.is_one() && g != *n {
                return Some(g);
            }
        }
        None
    }
}

/// `n = root^e` with the largest such prime-indexed `e >= 2`, if any.
fn perfect_power_split(n: &Int) -> Option<(Int, u32)> {
    let max_e = n.bits() as u32;
    small_primes()
        .iter()
        .take_while(|&&e| e <= max_e)
        .find_map(|&e| perfect_power(n, e).map(|r| (r, e)))
}

/// Complete factorization of `x >= 1` with the default budget.
pub fn factorize(x: &Int) -> Result<Factorization> {
    Factorizer::default().factorize(x)
}

/// Product of the distinct primes dividing `x >= 1`.
pub fn radical(x: &Int) -> Result<Int> {
    Ok(factorize(x)?.radical())
}

/// Writes a nonzero rational as `t * u^2` with `t` a squarefree integer and `u > 0`.
pub fn squarefree_split(x: &Rat) -> Result<(Int, Rat)> {
    if x.is_zero() {
        return Err(Error::Domain("squarefree split of zero".into()));
    }
    // N = sN*qN^2, D = sD*qD^2  =>  N/D = (sN*sD) * (qN / (sD*qD))^2.
    let split = |v: &Int| -> Result<(Int, Int)> {
        let (mut s, mut q) = (Int::one(), Int::one());
        for (p, e) in factorize(v)?.factors() {
            if e % 2 == 1 {
                s *= p;
            }
            q *= Pow::pow(p, e / 2);
        }
        Ok((s, q))
    };
    let (num_free, num_sq) = split(&x.numer().abs())?;
    let (den_free, den_sq) = split(x.denom())?;
    let mut t = num_free * &den_free;
    if x.is_negative() {
        t = -t;
    }
    Ok((t, Rat::new(num_sq, den_free * den_sq)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rat;

    fn trial_factor(mut x: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= x {
            let mut e = 0;
            while x.is_multiple_of(d) {
                x /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if x > 1 {
            out.push((x, 1));
        }
        out
    }

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn examples() {
        assert!(factorize(&Int::one()).unwrap().is_empty());
        assert_eq!(
            pairs(&factorize(&Int::from(1336336)).unwrap()),
            vec![(2, 4), (17, 4)]
        );
        assert_eq!(
            pairs(&factorize(&Int::from(923521)).unwrap()),
            trial_factor(923521)
        );
        assert_eq!(
            pairs(&factorize(&Int::from(923521)).unwrap()),
            vec![(31, 4)]
        );
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&Int::one()).unwrap(), Int::one());
        assert_eq!(radical(&Int::from(272)).unwrap(), Int::from(34));
        assert_eq!(radical(&Int::from(810000)).unwrap(), Int::from(30));
    }

    #[test]
    fn rejects_non_positive() {
        assert!(factorize(&Int::zero()).is_err());
        assert!(radical(&Int::from(-4)).is_err());
    }

    #[test]
    fn agrees_with_trial_division() {
        for x in 1u64..5000 {
            assert_eq!(
                pairs(&factorize(&Int::from(x)).unwrap()),
                trial_factor(x),
                "{x}"
            );
        }
    }

    #[test]
    fn rho_splits_semiprimes_beyond_trial_range() {
        // Two primes above 10^6 force the rho stage.
        let p = Int::from(1_000_003u64);
        let q = Int::from(1_000_033u64);
        let r: Int = "1000000000039".parse().unwrap();
        let n = &p * &q * &q * &r;
        let f = factorize(&n).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(f.factors(), &[(p, 1), (q.clone(), 2), (r.clone(), 1)]);
        // The 2^64 + 1 split.
        let big = Pow::pow(&r, 30u32) * Pow::pow(&q, 7u32);
        let f = factorize(&big).unwrap();
        assert_eq!(f.factors(), &[(q.clone(), 7), (r.clone(), 30)]);
        let n = (Int::one() << 64u32) + 1u32;
        let f = factorize(&n).unwrap();
        assert_eq!(f.to_string(), "274177 * 67280421310721");
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let p: Int = "1000000000039".parse().unwrap();
        let q: Int = "1000000000061".parse().unwrap();
        let n = &p * &q;
        let small = Factorizer {
            trial_limit: 1000,
            rho_budget: 10,
        };
        assert!(matches!(
            small.factorize(&n),
            Err(Error::FactorBudgetExceeded { .. })
        ));
        // Deterministic seed: repeated calls give identical results.
        assert_eq!(factorize(&n).unwrap(), factorize(&n).unwrap());
    }

    #[test]
    fn squarefree_split_examples() {
        let (t, u) = squarefree_split(&Rat::from_integer(Int::from(-3))).unwrap();
        assert_eq!((t, u.to_string()), (Int::from(-3), "1".to_string()));
        let (t, u) = squarefree_split(&parse_rat("9/4").unwrap()).unwrap();
        assert_eq!((t, u.to_string()), (Int::one(), "3/2".to_string()));
        // 500/27 = 15 * (10/9)^2.
        let x = parse_rat("500/27").unwrap();
        let (t, u) = squarefree_split(&x).unwrap();
        assert_eq!(
            (t.clone(), u.to_string()),
            (Int::from(15), "10/9".to_string())
        );
        assert_eq!(Rat::from_integer(t) * &u * &u, x);
        assert!(squarefree_split(&Rat::zero()).is_err());
    }
}
