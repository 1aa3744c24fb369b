//! Explicit solution families: the Pythagorean construction for `3 ∤ n` and
//! the prime-power construction from a witness `(a, b, m)`.

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::hybrid::{GcdClass, GcdKind, HybridSolution};
use crate::is_prime;
use crate::numeric::Int;
use crate::primes::is_prime_u64;

/// Smallest `k >= 1` with `3k + 2 ≡ 0 (mod n)`.
pub fn thm2_min_k(n: u32) -> Result<u32> {
    if n < 3 || n.is_multiple_of(3) {
        return Err(Error::InvalidModulus(n));
    }
    Ok((1..=n)
        .find(|k| (3 * k + 2) % n == 0)
        .expect("3 is invertible mod n"))
}

/// Pythagorean construction with the minimal exponent.
pub fn construct_thm2(a: &Int, b: &Int, c: &Int, n: u32) -> Result<HybridSolution> {
    construct_thm2_with(a, b, c, n, 0)
}

/// Pythagorean construction using exponent `k_min + multiplicity * n`.
///
/// `A = a^(k+2) b^k c^k`, `B = a^k b^(k+2) c^k`, `C = a^k b^k c^(k+2)`,
/// `D = (abc)^((3k+2)/n)`.
pub fn construct_thm2_with(
    a: &Int,
    b: &Int,
    c: &Int,
    n: u32,
    multiplicity: u32,
) -> Result<HybridSolution> {
    let positive = a.is_positive() && b.is_positive() && c.is_positive();
    if !positive || a * a + b * b != c * c {
        return Err(Error::InvalidTriple {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
        });
    }
    let k = thm2_min_k(n)? + multiplicity * n;
    let common: Int = Pow::pow(a * b * c, k);
    let big_a = &common * a * a;
    let big_b = &common * b * b;
    let big_c = &common * c * c;
    let d: Int = Pow::pow(a * b * c, (3 * k + 2) / n);
    Ok(HybridSolution {
        a: big_a,
        b: big_b,
        c: big_c,
        d,
        n,
    })
}

/// Primitive Pythagorean triples `(u²−v², 2uv, u²+v²)` in order of increasing `u`.
pub fn euclid_triples(count: usize) -> Vec<(Int, Int, Int)> {
    let mut out = Vec::with_capacity(count);
    let mut u = 2u64;
    while out.len() < count {
        for v in 1..u {
            if (u - v) % 2 == 1 && u.gcd(&v) == 1 {
                out.push((
                    Int::from(u * u - v * v),
                    Int::from(2 * u * v),
                    Int::from(u * u + v * v),
                ));
                if out.len() == count {
                    break;
                }
            }
        }
        u += 1;
    }
    out
}

/// A witness `(a, b, m)` for exponent `n` plus the shift `t >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm5Params {
    pub n: u32,
    pub a: Int,
    pub b: Int,
    pub m: Int,
    pub t: u32,
}

impl Thm5Params {
    pub fn new(n: u32, a: Int, b: Int, m: Int, t: u32) -> Self {
        Thm5Params { n, a, b, m, t }
    }

    /// `n mod 3`, in {1, 2} for a prime `n > 3`.
    pub fn r(&self) -> u32 {
        self.n % 3
    }

    /// `(r n − 1)/3 + t n`, the exponent of `p` in the gcd.
    pub fn k(&self) -> u32 {
        (self.r() * self.n - 1) / 3 + self.t * self.n
    }

    /// Checks every hypothesis and returns `p = (a^n + b^n)/(a + b)`.
    pub fn validate(&self) -> Result<Int> {
        let n = self.n;
        if n <= 3 || !is_prime_u64(n as u64) {
            return Err(Error::InvalidWitness(format!("n = {n} is not a prime > 3")));
        }
        if self.m.is_zero() {
            return Err(Error::InvalidWitness("m = 0".into()));
        }
        let sum = &self.a + &self.b;
        if sum != Pow::pow(&self.m, n) {
            return Err(Error::InvalidWitness(format!(
                "a + b = {sum} differs from m^n = {}^{n}",
                self.m
            )));
        }
        let (p, rem) = (Pow::pow(&self.a, n) + Pow::pow(&self.b, n)).div_rem(&sum);
        debug_assert!(rem.is_zero(), "a + b divides a^n + b^n for odd n");
        if p.is_even() || !is_prime(&p) {
            return Err(Error::InvalidWitness(format!(
                "p = {p} is not an odd prime"
            )));
        }
        if !self.a.gcd(&self.b).is_one() {
            return Err(Error::InvalidWitness(format!(
                "gcd(a, b) = {} != 1",
                self.a.gcd(&self.b)
            )));
        }
        Ok(p)
    }
}

/// Rearranges a signed identity `A + B = C` (no zero entries) into positive
/// integers whose two smaller entries sum to the largest, and drops the sign of `D`.
///
/// With one negative summand the result is `(C, −B, A)` or `(C, −A, B)`.
pub fn positive_normal_form(a: Int, b: Int, c: Int, d: Int) -> (Int, Int, Int, Int) {
    // Terms of A + B − C = 0; exactly one differs in sign from the other two.
    let terms = [a, b, -c];
    let positives = terms.iter().filter(|v| v.is_positive()).count();
    let odd = if positives == 1 {
        terms.iter().position(|v| v.is_positive())
    } else {
        terms.iter().position(|v| v.is_negative())
    }
    .expect("nonzero terms");
    let [x, y, z] = terms.map(|v| v.abs());
    let d = d.abs();
    match odd {
        0 => (z, y, x, d),
        1 => (z, x, y, d),
        _ => (x, y, z, d),
    }
}

/// Prime-power family: `A = p^e a^n`, `B = p^e b^n`, `C = p^(e+1) m^n`,
/// `D = p^(r+3t) a b m` with `e = (rn−1)/3 + tn`, in positive normal form.
pub fn construct_thm5(params: &Thm5Params) -> Result<(HybridSolution, GcdClass)> {
    let p = params.validate()?;
    let n = params.n;
    let e = params.k();
    let pe: Int = Pow::pow(&p, e);
    let a = &pe * Pow::pow(&params.a, n);
    let b = &pe * Pow::pow(&params.b, n);
    let c = &pe * &p * Pow::pow(&params.m, n);
    let d = Pow::pow(&p, params.r() + 3 * params.t) * &params.a * &params.b * &params.m;
    let (a, b, c, d) = positive_normal_form(a, b, c, d);
    let solution = HybridSolution { a, b, c, d, n };
    let gcd = GcdClass {
        g: pe,
        kind: GcdKind::PrimePower { p, k: e },
    };
    Ok((solution, gcd))
}

/// The family with witness `(2, −1, 1)`, requiring `2^n − 1` prime.
pub fn construct_mersenne(n: u32, t: u32) -> Result<(HybridSolution, GcdClass)> {
    if n <= 3 || !is_prime_u64(n as u64) {
        return Err(Error::InvalidWitness(format!("n = {n} is not a prime > 3")));
    }
    let mersenne: Int = (Int::one() << n) - 1u32;
    if !is_prime(&mersenne) {
        return Err(Error::NotMersenne(n));
    }
    construct_thm5(&Thm5Params::new(
        n,
        Int::from(2),
        Int::from(-1),
        Int::one(),
        t,
    ))
}

/// `p ≡ 1 (mod 2n)`; false also when the parameters are not a witness.
pub fn verify_p_congruence(params: &Thm5Params) -> bool {
    match params.validate() {
        Ok(p) => ((p - 1u32) % (2 * params.n)).is_zero(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::classify_gcd;

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    fn tuple(s: &HybridSolution) -> (Int, Int, Int, Int) {
        (s.a.clone(), s.b.clone(), s.c.clone(), s.d.clone())
    }

    #[test]
    fn thm2_examples() {
        let s = construct_thm2(&i(3), &i(4), &i(5), 5).unwrap();
        assert_eq!(tuple(&s), (i(540), i(960), i(1500), i(60)));
        assert!(s.verify());
        let s = construct_thm2(&i(3), &i(4), &i(5), 4).unwrap();
        assert_eq!(tuple(&s), (i(32400), i(57600), i(90000), i(3600)));
        assert!(s.verify());
        assert_eq!(
            construct_thm2(&i(3), &i(4), &i(5), 6),
            Err(Error::InvalidModulus(6))
        );
        assert!(matches!(
            construct_thm2(&i(3), &i(4), &i(6), 5),
            Err(Error::InvalidTriple { .. })
        ));
    }

    #[test]
    fn thm2_multiplicity() {
        for j in 0..3 {
            let s = construct_thm2_with(&i(5), &i(12), &i(13), 7, j).unwrap();
            assert!(s.verify());
        }
        assert_eq!(thm2_min_k(4).unwrap(), 2);
        assert_eq!(thm2_min_k(5).unwrap(), 1);
        assert_eq!(thm2_min_k(7).unwrap(), 4);
    }

    #[test]
    fn euclid_generator() {
        let triples = euclid_triples(100);
        assert_eq!(triples.len(), 100);
        assert_eq!(triples[0], (i(3), i(4), i(5)));
        for (a, b, c) in &triples {
            assert_eq!(a * a + b * b, c * c);
            assert!(a.gcd(b).is_one());
        }
    }

    #[test]
    fn thm5_examples() {
        let (s, g) = construct_thm5(&Thm5Params::new(5, i(2), i(-1), i(1), 0)).unwrap();
        assert_eq!(tuple(&s), (i(923521), i(29791), i(953312), i(1922)));
        assert_eq!(g.prime_power(), Some((&i(31), 3)));
        assert!(s.verify());

        let (s, g) = construct_thm5(&Thm5Params::new(7, i(2), i(-1), i(1), 0)).unwrap();
        assert_eq!(tuple(&s), (i(2048383), i(16129), i(2064512), i(254)));
        assert_eq!(g.prime_power(), Some((&i(127), 2)));
        assert!(s.verify());

        let params = Thm5Params::new(5, i(11), i(21), i(2), 0);
        let (s, g) = construct_thm5(&params).unwrap();
        let p = i(132661);
        let p3: Int = Pow::pow(&p, 3u32);
        assert_eq!(s.a, &p3 * Pow::pow(i(11), 5u32));
        assert_eq!(s.b, &p3 * Pow::pow(i(21), 5u32));
        assert_eq!(s.c, &p3 * &p * 32);
        assert_eq!(g.prime_power(), Some((&p, 3)));
        assert_eq!(classify_gcd(&s.a, &s.b, &s.c).unwrap(), g);
        assert!(s.verify());
    }

    #[test]
    fn thm5_rejects_bad_witnesses() {
        // 2 + 2 = 4 is not a 5th power.
        assert!(construct_thm5(&Thm5Params::new(5, i(2), i(2), i(1), 0)).is_err());
        // n = 3 is excluded.
        assert!(construct_thm5(&Thm5Params::new(3, i(2), i(-1), i(1), 0)).is_err());
        // (4^5 + (-3)^5)/1 = 781 = 11 * 71.
        let err = construct_thm5(&Thm5Params::new(5, i(4), i(-3), i(1), 0)).unwrap_err();
        assert!(err.to_string().contains("781"));
        assert!(construct_thm5(&Thm5Params::new(5, i(1), i(0), i(0), 0)).is_err());
    }

    #[test]
    fn shifting_t_scales_gcd_and_d() {
        let base = Thm5Params::new(5, i(3), i(-2), i(1), 0);
        let (s0, g0) = construct_thm5(&base).unwrap();
        let (s1, g1) = construct_thm5(&Thm5Params { t: 1, ..base }).unwrap();
        let p = i(211);
        assert_eq!(g1.g, &g0.g * Pow::pow(&p, 5u32));
        assert_eq!(s1.d, &s0.d * Pow::pow(&p, 3u32));
        assert!(s1.verify());
    }

    #[test]
    fn negative_m_normalizes() {
        let (s, g) = construct_thm5(&Thm5Params::new(5, i(-2), i(1), i(-1), 0)).unwrap();
        assert!(s.verify());
        assert_eq!(g.prime_power(), Some((&i(31), 3)));
        assert_eq!(tuple(&s), (i(923521), i(29791), i(953312), i(1922)));
    }

    #[test]
    fn normal_form_cases() {
        // B < 0: 5 + (-2) = 3 -> 3 + 2 = 5.
        assert_eq!(
            positive_normal_form(i(5), i(-2), i(3), i(-7)),
            (i(3), i(2), i(5), i(7))
        );
        // A < 0: -2 + 5 = 3.
        assert_eq!(
            positive_normal_form(i(-2), i(5), i(3), i(1)),
            (i(3), i(2), i(5), i(1))
        );
        // All negative.
        assert_eq!(
            positive_normal_form(i(-1), i(-2), i(-3), i(-1)),
            (i(1), i(2), i(3), i(1))
        );
        assert_eq!(
            positive_normal_form(i(1), i(2), i(3), i(1)),
            (i(1), i(2), i(3), i(1))
        );
    }

    #[test]
    fn mersenne() {
        let (_, g) = construct_mersenne(5, 0).unwrap();
        assert_eq!(g.g, i(29791));
        let (_, g) = construct_mersenne(7, 0).unwrap();
        assert_eq!(g.g, i(16129));
        assert_eq!(construct_mersenne(11, 0), Err(Error::NotMersenne(11)));
        let (s, g) = construct_mersenne(13, 1).unwrap();
        assert!(s.verify());
        // r = 1 for n = 13: k = (13 - 1)/3 + 13 = 17.
        assert_eq!(g.prime_power(), Some((&i(8191), 17)));
    }

    #[test]
    fn congruence() {
        assert!(verify_p_congruence(&Thm5Params::new(
            5,
            i(2),
            i(-1),
            i(1),
            0
        )));
        assert!(verify_p_congruence(&Thm5Params::new(
            7,
            i(2),
            i(-1),
            i(1),
            0
        )));
        assert!(verify_p_congruence(&Thm5Params::new(
            5,
            i(49),
            i(-17),
            i(2),
            0
        )));
        assert!(!verify_p_congruence(&Thm5Params::new(
            5,
            i(2),
            i(2),
            i(1),
            0
        )));
    }
}
