//! Non-existence criteria for solutions with `gcd(A, B, C) = p^k`.
//!
//! Proven rules and conjectural rules are kept apart: a verdict is
//! [`Status::ProvenNone`] only when a proven rule fires, and in that case only
//! the proven rules are listed.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Int;
use crate::primes::{is_prime, is_prime_u64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// `k ≡ 0 (mod n)`.
    Lemma4,
    /// `3 | n`: no positive solutions at all.
    Thm2mod3,
    /// `n = 4`, odd `p ≡ 3 (mod 8)`.
    Thm3,
    /// `n = 5`, odd `p ≢ 1 (mod 10)`.
    Thm4,
    /// Prime `n`, odd `p ≢ 1 (mod 2n)`.
    Conj1,
    /// Prime `n > 3`, `k ≢ (rn−1)/3 (mod n)`.
    Conj2,
    /// Prime `n > 3`, `k = 1`.
    Conj3,
}

impl Rule {
    pub fn is_proven(self) -> bool {
        matches!(
            self,
            Rule::Lemma4 | Rule::Thm2mod3 | Rule::Thm3 | Rule::Thm4
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    ProvenNone,
    ConjecturedNone,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub reasons: Vec<Rule>,
}

/// Applies every rule to the query "solutions with exponent `n` and
/// `gcd(A, B, C) = p^k`".
pub fn obstruction_check(n: u32, p: &Int, k: u32) -> Result<Verdict> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 3")));
    }
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("p = {p} is not prime")));
    }
    let odd_p = p.is_odd();
    let p_mod = |m: u32| (p % m).to_u32().unwrap();

    let mut proven = Vec::new();
    if k.is_multiple_of(n) {
        proven.push(Rule::Lemma4);
    }
    if n.is_multiple_of(3) {
        proven.push(Rule::Thm2mod3);
    }
    if n == 4 && odd_p && p_mod(8) == 3 {
        proven.push(Rule::Thm3);
    }
    if n == 5 && odd_p && p_mod(10) != 1 {
        proven.push(Rule::Thm4);
    }
    if !proven.is_empty() {
        return Ok(Verdict {
            status: Status::ProvenNone,
            reasons: proven,
        });
    }

    let mut conjectured = Vec::new();
    if n > 3 && is_prime_u64(n as u64) {
        if odd_p && p_mod(2 * n) != 1 {
            conjectured.push(Rule::Conj1);
        }
        let r = n % 3;
        if k % n != ((r * n - 1) / 3) % n {
            conjectured.push(Rule::Conj2);
        }
        if k == 1 {
            conjectured.push(Rule::Conj3);
        }
    }
    Ok(if conjectured.is_empty() {
        Verdict {
            status: Status::Inconclusive,
            reasons: Vec::new(),
        }
    } else {
        Verdict {
            status: Status::ConjecturedNone,
            reasons: conjectured,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: u32, p: i64, k: u32) -> Verdict {
        obstruction_check(n, &Int::from(p), k).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            check(4, 3, 1),
            Verdict {
                status: Status::ProvenNone,
                reasons: vec![Rule::Thm3]
            }
        );
        assert_eq!(check(5, 7, 2).reasons, vec![Rule::Thm4]);
        assert_eq!(check(5, 7, 2).status, Status::ProvenNone);
        assert_eq!(check(5, 31, 3).status, Status::Inconclusive);
        assert!(check(5, 31, 3).reasons.is_empty());
        assert_eq!(check(9, 17, 2).reasons, vec![Rule::Thm2mod3]);
        assert_eq!(check(5, 11, 5).reasons, vec![Rule::Lemma4]);
    }

    #[test]
    fn invalid_inputs() {
        assert!(obstruction_check(4, &Int::from(9), 1).is_err());
        assert!(obstruction_check(2, &Int::from(3), 1).is_err());
        assert!(obstruction_check(4, &Int::from(3), 0).is_err());
    }

    #[test]
    fn odd_prime_requirement_excludes_two() {
        // 2 + 2 = 4, 2*2*4 = 2^4 is a genuine solution with gcd 2.
        assert_eq!(check(4, 2, 1).status, Status::Inconclusive);
        assert_eq!(check(5, 2, 1).status, Status::ConjecturedNone);
        assert_eq!(check(5, 2, 1).reasons, vec![Rule::Conj2, Rule::Conj3]);
    }

    #[test]
    fn conjectural_rules() {
        // n = 7: r = 1, (rn-1)/3 = 2.
        assert_eq!(check(7, 127, 2).status, Status::Inconclusive);
        assert_eq!(check(7, 127, 3).reasons, vec![Rule::Conj2]);
        assert_eq!(
            check(7, 13, 1).reasons,
            vec![Rule::Conj1, Rule::Conj2, Rule::Conj3]
        );
        // n = 9 is composite but 3 | 9 anyway; n = 8 has no conjectural rule.
        assert_eq!(check(8, 3, 1).status, Status::Inconclusive);
    }

    #[test]
    fn proven_rules_hide_conjectures() {
        let v = check(5, 3, 1);
        assert_eq!(v.status, Status::ProvenNone);
        assert!(v.reasons.iter().all(|r| r.is_proven()));
        // All applicable proven rules are reported.
        assert_eq!(check(6, 7, 6).reasons, vec![Rule::Lemma4, Rule::Thm2mod3]);
        assert_eq!(check(4, 11, 8).reasons, vec![Rule::Lemma4, Rule::Thm3]);
    }

    #[test]
    fn exponent_rule_ignores_p_and_congruence_rules_ignore_k() {
        for p in [2i64, 3, 5, 7, 11, 13, 17, 19, 23] {
            assert!(check(4, p, 8).reasons.contains(&Rule::Lemma4));
            assert!(check(7, p, 14).reasons.contains(&Rule::Lemma4));
        }
        for k in 1..=12 {
            assert!(check(4, 19, k).reasons.contains(&Rule::Thm3));
            assert!(check(5, 13, k).reasons.contains(&Rule::Thm4));
        }
    }
}
