//! Writing a large `n` as at most `k + 2` positive parts whose product is a
//! perfect k-th power, for composite `k`.

use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Int;
use crate::primes::is_prime_u64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaringDecomposition {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub n: Int,
    pub k: u32,
    #[serde(serialize_with = "crate::report::as_decimal_seq")]
    pub parts: Vec<Int>,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub root: Int,
}

fn check_composite(k: u32) -> Result<()> {
    if k < 4 || is_prime_u64(k as u64) {
        return Err(Error::NotComposite(k));
    }
    Ok(())
}

/// The sufficient bound from the existence proof: `n > 2k^(2k)` when `k | n`,
/// otherwise `n > k^(2k−1) + k`.
pub fn proof_threshold(k: u32, divisible: bool) -> Int {
    let k_int = Int::from(k);
    if divisible {
        Pow::pow(&k_int, 2 * k) * 2u32
    } else {
        Pow::pow(&k_int, 2 * k - 1) + &k_int
    }
}

/// Decomposes `n = k m + r` as
///
/// * `r = 0`: `k` copies of `m − 2k^(2k−1)` plus `k^(2k)` twice, root `(m − 2k^(2k−1)) k^4`;
/// * `r > 0`: `k` copies of `m − k^(k−1) r^(k−1)` plus `k^k r^(k−1)` and `r`,
///   root `(m − k^(k−1) r^(k−1)) k r`.
///
/// Refuses with [`Error::BelowThreshold`] whenever the repeated part would not
/// be positive; there is no fallback search.
pub fn waring_decompose(n: &Int, k: u32) -> Result<WaringDecomposition> {
    check_composite(k)?;
    let k_int = Int::from(k);
    let (m, r) = n.div_mod_floor(&k_int);
    let r_u = r.to_u32().expect("r < k");
    let offset: Int = if r_u == 0 {
        Pow::pow(&k_int, 2 * k - 1) * 2u32
    } else {
        Pow::pow(&k_int, k - 1) * Pow::pow(&r, k - 1)
    };
    if m <= offset {
        return Err(Error::BelowThreshold {
            n: n.clone(),
            k,
            minimum: (&offset + 1u32) * &k_int + &r,
        });
    }
    let base = &m - &offset;
    let mut parts = vec![base.clone(); k as usize];
    let root = if r_u == 0 {
        let big: Int = Pow::pow(&k_int, 2 * k);
        parts.push(big.clone());
        parts.push(big);
        &base * Pow::pow(&k_int, 4u32)
    } else {
        parts.push(Pow::pow(&k_int, k) * Pow::pow(&r, k - 1));
        parts.push(r.clone());
        &base * &k_int * &r
    };
    Ok(WaringDecomposition {
        n: n.clone(),
        k,
        parts,
        root,
    })
}

/// Re-checks `sum(parts) = n`, `len(parts) <= k + 2`, every part positive and
/// `product(parts) = root^k`.
pub fn verify_decomposition(d: &WaringDecomposition) -> bool {
    let sum: Int = d.parts.iter().sum();
    let product = d.parts.iter().fold(Int::one(), |acc, p| acc * p);
    sum == d.n
        && d.parts.len() <= d.k as usize + 2
        && d.parts.iter().all(|p| p.is_positive())
        && product == Pow::pow(&d.root, d.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn examples() {
        let d = waring_decompose(&Int::from(131076), 4).unwrap();
        assert_eq!(d.parts, ints(&[1, 1, 1, 1, 65536, 65536]));
        assert_eq!(d.root, Int::from(256));
        assert!(verify_decomposition(&d));

        let d = waring_decompose(&Int::from(261), 4).unwrap();
        assert_eq!(d.parts, ints(&[1, 1, 1, 1, 256, 1]));
        assert_eq!(d.root, Int::from(4));
        assert!(verify_decomposition(&d));

        assert_eq!(
            waring_decompose(&Int::from(1000), 7),
            Err(Error::NotComposite(7))
        );
    }

    #[test]
    fn verify_rejects_tampering() {
        let bad = WaringDecomposition {
            n: Int::from(6),
            k: 4,
            parts: ints(&[1, 2, 3]),
            root: Int::from(1),
        };
        assert!(!verify_decomposition(&bad));
        let mut d = waring_decompose(&Int::from(261), 4).unwrap();
        d.parts[0] += 1;
        assert!(!verify_decomposition(&d));
    }

    #[test]
    fn refuses_below_threshold() {
        // k | n needs n > 2 * 4^8 = 131072.
        assert!(matches!(
            waring_decompose(&Int::from(131072), 4),
            Err(Error::BelowThreshold { .. })
        ));
        // r = 1 needs m > 4^3 = 64, i.e. n >= 4*65 + 1 = 261.
        match waring_decompose(&Int::from(257), 4) {
            Err(Error::BelowThreshold { minimum, .. }) => assert_eq!(minimum, Int::from(261)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            waring_decompose(&Int::from(10), 1),
            Err(Error::NotComposite(1))
        ));
    }

    #[test]
    fn above_proof_threshold_always_works() {
        for k in [4u32, 6, 8, 9, 10] {
            for r in 0..k {
                let start = proof_threshold(k, r == 0);
                // First n above the bound with n ≡ r (mod k).
                let mut n = &start + 1u32;
                while (&n % k) != Int::from(r) {
                    n += 1u32;
                }
                let d = waring_decompose(&n, k).unwrap();
                assert!(verify_decomposition(&d), "k = {k}, n = {n}");
                assert_eq!(d.parts.len(), k as usize + 2);
            }
        }
    }

    #[test]
    fn root_identities() {
        for k in [4u32, 6, 9] {
            let k_int = Int::from(k);
            for m in [Int::from(3), Int::from(1_000_003)] {
                let lhs = Pow::pow(&m, k) * Pow::pow(&k_int, 4 * k);
                assert_eq!(lhs, Pow::pow(&m * Pow::pow(&k_int, 4u32), k));
                for r in 1..k {
                    let r = Int::from(r);
                    let lhs = Pow::pow(&m, k) * Pow::pow(&k_int, k) * Pow::pow(&r, k);
                    assert_eq!(lhs, Pow::pow(&m * &k_int * &r, k));
                }
            }
        }
    }
}
