//! Verification of `A + B = C, ABC = D^n`, gcd classification and abc-quality.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factorize, radical, Factorization};
use crate::numeric::{ln, Int};

/// A tuple in positive normal form satisfying the hybrid system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HybridSolution {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub a: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub b: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub c: Int,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub d: Int,
    pub n: u32,
}

impl HybridSolution {
    /// Checks the tuple and wraps it.
    pub fn new(a: Int, b: Int, c: Int, d: Int, n: u32) -> Result<Self> {
        let n_int = Int::from(n);
        if !verify_hybrid(&a, &b, &c, &d, &n_int) {
            return Err(Error::InvalidInput(format!(
                "({a}, {b}, {c}, {d}, {n}) does not satisfy A+B=C, ABC=D^n in positive integers"
            )));
        }
        Ok(HybridSolution { a, b, c, d, n })
    }

    pub fn verify(&self) -> bool {
        verify_hybrid(&self.a, &self.b, &self.c, &self.d, &Int::from(self.n))
    }

    pub fn gcd_class(&self) -> Result<GcdClass> {
        classify_gcd(&self.a, &self.b, &self.c)
    }
}

impl fmt::Display for HybridSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} = {}, {}*{}*{} = {}^{}",
            self.a, self.b, self.c, self.a, self.b, self.c, self.d, self.n
        )
    }
}

/// True iff `A + B = C`, `A*B*C = D^n` and `A, B, C >= 1`.
pub fn verify_hybrid(a: &Int, b: &Int, c: &Int, d: &Int, n: &Int) -> bool {
    let Some(n) = crate::numeric::exponent(n, "n").ok().filter(|&n| n >= 2) else {
        return false;
    };
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return false;
    }
    if a + b != *c {
        return false;
    }
    a * b * c == Pow::pow(d, n)
}

/// Shape of `gcd(A, B, C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcdKind {
    One,
    PrimePower { p: Int, k: u32 },
    Other(Factorization),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdClass {
    pub g: Int,
    pub kind: GcdKind,
}

impl GcdClass {
    pub fn of(g: Int) -> Result<Self> {
        if g.is_one() {
            return Ok(GcdClass {
                g,
                kind: GcdKind::One,
            });
        }
        let f = factorize(&g)?;
        let kind = match f.factors() {
            [(p, k)] => GcdKind::PrimePower {
                p: p.clone(),
                k: *k,
            },
            _ => GcdKind::Other(f),
        };
        Ok(GcdClass { g, kind })
    }

    /// `(p, k)` when the gcd is a prime power.
    pub fn prime_power(&self) -> Option<(&Int, u32)> {
        match &self.kind {
            GcdKind::PrimePower { p, k } => Some((p, *k)),
            _ => None,
        }
    }
}

impl fmt::Display for GcdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GcdKind::One => write!(f, "1"),
            GcdKind::PrimePower { p, k: 1 } => write!(f, "{p}"),
            GcdKind::PrimePower { p, k } => write!(f, "{p}^{k}"),
            GcdKind::Other(fac) => write!(f, "{} = {fac}", self.g),
        }
    }
}

/// `gcd(A, B, C)` with its prime-power classification.
pub fn classify_gcd(a: &Int, b: &Int, c: &Int) -> Result<GcdClass> {
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return Err(Error::Domain("classify_gcd needs A, B, C >= 1".into()));
    }
    GcdClass::of(a.gcd(b).gcd(c))
}

/// Decimal approximation of the abc-quality `log(C/p) / log(rad(ABC/p^3))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quality {
    pub value: f64,
    pub digits: usize,
}

pub const DEFAULT_QUALITY_DIGITS: usize = 12;

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.*}", self.digits, self.value)
    }
}

/// abc-quality of the reduced triple `(A/p, B/p, C/p)`.
pub fn quality(a: &Int, b: &Int, c: &Int, p: &Int) -> Result<Quality> {
    if !p.is_positive() {
        return Err(Error::Domain(format!("p = {p} must be positive")));
    }
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return Err(Error::Domain("quality needs A, B, C >= 1".into()));
    }
    if !(a.is_multiple_of(p) && b.is_multiple_of(p) && c.is_multiple_of(p)) {
        return Err(Error::Domain(format!("{p} does not divide gcd(A, B, C)")));
    }
    let product = a * b * c;
    let p3: Int = Pow::pow(p, 3u32);
    let (reduced, rem) = product.div_rem(&p3);
    if !rem.is_zero() {
        return Err(Error::Domain(format!("{p}^3 does not divide ABC")));
    }
    let c_over_p = c / p;
    if c_over_p < Int::from(2) {
        return Err(Error::Domain("C/p must be at least 2".into()));
    }
    let rad = radical(&reduced)?;
    if rad < Int::from(2) {
        return Err(Error::Domain("rad(ABC/p^3) must be at least 2".into()));
    }
    Ok(Quality {
        value: ln(&c_over_p) / ln(&rad),
        digits: DEFAULT_QUALITY_DIGITS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn verify_examples() {
        assert!(verify_hybrid(&i(2), &i(2), &i(4), &i(2), &i(4)));
        assert!(verify_hybrid(&i(17), &i(272), &i(289), &i(34), &i(4)));
        assert!(!verify_hybrid(&i(1), &i(2), &i(3), &i(1), &i(3)));
    }

    #[test]
    fn rejects_non_positive_and_small_n() {
        // (-2)^... : 2 + (-1) = 1 but entries must be positive.
        assert!(!verify_hybrid(&i(2), &i(-1), &i(1), &i(-2), &i(1)));
        assert!(!verify_hybrid(&i(0), &i(4), &i(4), &i(0), &i(3)));
        assert!(!verify_hybrid(&i(2), &i(2), &i(4), &i(4), &i(1)));
        // 2*2*4 = 16 = 4^2 is fine at n = 2.
        assert!(verify_hybrid(&i(2), &i(2), &i(4), &i(4), &i(2)));
    }

    #[test]
    fn gcd_examples() {
        let g = classify_gcd(&i(17), &i(272), &i(289)).unwrap();
        assert_eq!(g.kind, GcdKind::PrimePower { p: i(17), k: 1 });
        assert_eq!(
            classify_gcd(&i(3), &i(4), &i(5)).unwrap().kind,
            GcdKind::One
        );
        let g = classify_gcd(&i(923521), &i(29791), &i(953312)).unwrap();
        assert_eq!(g.g, i(29791));
        assert_eq!(g.prime_power(), Some((&i(31), 3)));
        let g = classify_gcd(&i(6), &i(12), &i(18)).unwrap();
        assert!(matches!(g.kind, GcdKind::Other(_)));
        assert_eq!(g.to_string(), "6 = 2 * 3");
    }

    #[test]
    fn quality_examples() {
        // Reference values from 30-digit logarithms of the exact radicals.
        let q = quality(&i(17), &i(272), &i(289), &i(17)).unwrap();
        assert!(
            (q.value - 0.803_438_367_767_177).abs() < 1e-12,
            "{}",
            q.value
        );
        let q = quality(&i(2), &i(2), &i(4), &i(2)).unwrap();
        assert!((q.value - 1.0).abs() < 1e-12);
        assert_eq!(q.to_string(), "1.000000000000");
        let q = quality(&i(5), &i(400), &i(405), &i(5)).unwrap();
        assert!(
            (q.value - 1.292_030_029_884_618).abs() < 1e-12,
            "{}",
            q.value
        );
    }

    #[test]
    fn quality_domain_errors() {
        assert!(quality(&i(17), &i(272), &i(289), &i(2)).is_err());
        // 3*3*6 / 27 = 2.
        assert!(quality(&i(3), &i(3), &i(6), &i(3)).is_ok());
        // C/p = 1.
        assert!(quality(&i(1), &i(1), &i(2), &i(2)).is_err());
        assert!(quality(&i(2), &i(2), &i(4), &i(0)).is_err());
    }

    proptest! {
        #[test]
        fn verify_is_symmetric(a in 1i64..10_000, b in 1i64..10_000, d in 1i64..1000, n in 2i64..6) {
            let c = a + b;
            prop_assert_eq!(
                verify_hybrid(&i(a), &i(b), &i(c), &i(d), &i(n)),
                verify_hybrid(&i(b), &i(a), &i(c), &i(d), &i(n))
            );
        }

        #[test]
        fn gcd_is_homogeneous(a in 1i64..100_000, b in 1i64..100_000, m in 1i64..1000) {
            let c = a + b;
            let base = classify_gcd(&i(a), &i(b), &i(c)).unwrap();
            let scaled = classify_gcd(&i(m * a), &i(m * b), &i(m * c)).unwrap();
            prop_assert_eq!(scaled.g, base.g * m);
        }
    }
}
