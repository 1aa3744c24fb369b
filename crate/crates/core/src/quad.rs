//! The `n = 3` system over `Q(sqrt t)`: the explicit family attached to a
//! rational point of `t u^2 = 1 + 4k^3`, Burnside's solutions of
//! `x^3 + y^3 = z^3`, Mordell models of the curves and a height-bounded point
//! search.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factorize, squarefree_split};
use crate::numeric::{Int, Rat};
use crate::shards::{default_shards, map_units};

fn check_field(t: &Int) -> Result<()> {
    if t.is_zero() || t.is_one() {
        return Err(Error::InvalidInput(format!("t = {t} must not be 0 or 1")));
    }
    if factorize(&t.abs())?.factors().iter().any(|(_, e)| *e > 1) {
        return Err(Error::InvalidInput(format!("t = {t} is not squarefree")));
    }
    Ok(())
}

/// `x + y sqrt(t)` with `t` squarefree and not 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadElem {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub x: Rat,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub y: Rat,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub t: Int,
}

impl QuadElem {
    pub fn new(x: Rat, y: Rat, t: Int) -> Result<Self> {
        check_field(&t)?;
        Ok(QuadElem { x, y, t })
    }

    /// Builds an element without re-checking `t`; `t` must already be valid.
    fn raw(x: Rat, y: Rat, t: &Int) -> Self {
        QuadElem { x, y, t: t.clone() }
    }

    pub fn rational(x: Rat, t: &Int) -> Result<Self> {
        Self::new(x, Rat::zero(), t.clone())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.t != other.t {
            return Err(Error::MixedField(self.t.clone(), other.t.clone()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::raw(&self.x + &other.x, &self.y + &other.y, &self.t))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::raw(&self.x - &other.x, &self.y - &other.y, &self.t))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let t = Rat::from_integer(self.t.clone());
        Ok(Self::raw(
            &self.x * &other.x + &t * &self.y * &other.y,
            &self.x * &other.y + &self.y * &other.x,
            &self.t,
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::raw(Rat::one(), Rat::zero(), &self.t);
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same field");
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Self::raw(self.x.clone(), -self.y.clone(), &self.t)
    }

    /// `x^2 − t y^2`.
    pub fn norm(&self) -> Rat {
        &self.x * &self.x - Rat::from_integer(self.t.clone()) * &self.y * &self.y
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "{}*sqrt({})", self.y, self.t),
            (false, false) if self.y.is_negative() => {
                write!(f, "{} - {}*sqrt({})", self.x, -self.y.clone(), self.t)
            }
            (false, false) => write!(f, "{} + {}*sqrt({})", self.x, self.y, self.t),
        }
    }
}

/// Exact check of `A + B = C` and `A B C = D^n` in `Q(sqrt t)`.
pub fn qf_verify(a: &QuadElem, b: &QuadElem, c: &QuadElem, d: &QuadElem, n: u32) -> Result<bool> {
    for other in [b, c, d] {
        a.same_field(other)?;
    }
    if n < 3 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 3")));
    }
    Ok(a.checked_add(b)? == *c && a.checked_mul(b)?.checked_mul(c)? == d.pow(n))
}

/// A rational point of `t u^2 = 1 + 4 k^3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CurvePoint {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub u: Rat,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub k: Rat,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub t: Int,
}

fn on_curve(u: &Rat, k: &Rat, t: &Int) -> bool {
    Rat::from_integer(t.clone()) * u * u == Rat::one() + Rat::from_integer(Int::from(4)) * k * k * k
}

impl CurvePoint {
    pub fn new(u: Rat, k: Rat, t: Int) -> Result<Self> {
        check_field(&t)?;
        if !on_curve(&u, &k, &t) {
            return Err(Error::InvalidInput(format!(
                "({u}, {k}) is not on {t} u^2 = 1 + 4k^3"
            )));
        }
        Ok(CurvePoint { u, k, t })
    }

    pub fn is_valid(&self) -> bool {
        on_curve(&self.u, &self.k, &self.t)
    }
}

/// `(A, B, C, D)` over a common field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadSolution {
    pub a: QuadElem,
    pub b: QuadElem,
    pub c: QuadElem,
    pub d: QuadElem,
}

impl QuadSolution {
    pub fn verify(&self, n: u32) -> Result<bool> {
        qf_verify(&self.a, &self.b, &self.c, &self.d, n)
    }
}

/// The `n = 3` family attached to a point `(u, k)`:
///
/// ```text
/// A = uta + (a − 2k^3 c) sqrt t
/// B = utc − (2a + c) sqrt t
/// C = ut(a + c) − (a + (2k^3 + 1) c) sqrt t
/// D = utkc − k(2a + c) sqrt t
/// ```
pub fn thm6_construct(a: &Rat, c: &Rat, pt: &CurvePoint) -> Result<QuadSolution> {
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    if c.is_zero() {
        return Err(Error::ZeroParameter("c"));
    }
    if pt.k.is_zero() {
        return Err(Error::ZeroParameter("k"));
    }
    if !pt.is_valid() {
        return Err(Error::InvalidInput(format!(
            "({}, {}) is not on {} u^2 = 1 + 4k^3",
            pt.u, pt.k, pt.t
        )));
    }
    let t = &pt.t;
    let ut = &pt.u * Rat::from_integer(t.clone());
    let k = &pt.k;
    let two_k3: Rat = k * k * k * Rat::from_integer(Int::from(2));
    let two_a_plus_c = a * Rat::from_integer(Int::from(2)) + c;
    Ok(QuadSolution {
        a: QuadElem::raw(&ut * a, a - &two_k3 * c, t),
        b: QuadElem::raw(&ut * c, -two_a_plus_c.clone(), t),
        c: QuadElem::raw(&ut * (a + c), -(a + (&two_k3 + Rat::one()) * c), t),
        d: QuadElem::raw(&ut * k * c, -(k * &two_a_plus_c), t),
    })
}

/// Burnside's solution `x, y = −3 ± sqrt(−3(1 + 4k^3))`, `z = 6k` of
/// `x^3 + y^3 = z^3`, expressed over the squarefree part of `−3(1 + 4k^3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Burnside {
    pub x: QuadElem,
    pub y: QuadElem,
    pub z: QuadElem,
}

impl Burnside {
    pub fn verify(&self) -> bool {
        self.x.pow(3).checked_add(&self.y.pow(3)).ok() == Some(self.z.pow(3))
    }
}

pub fn burnside_construct(k: &Rat) -> Result<Burnside> {
    if k.is_zero() || *k == -Rat::one() {
        return Err(Error::DegenerateK(k.to_string()));
    }
    let one = Rat::one();
    let radicand =
        Rat::from_integer(Int::from(-3)) * (&one + Rat::from_integer(Int::from(4)) * k * k * k);
    let (t, w) = squarefree_split(&radicand)?;
    if t.is_one() {
        // A rational square would give a rational solution of x^3 + y^3 = z^3.
        return Err(Error::InvalidInput(format!(
            "{radicand} is a rational square"
        )));
    }
    let minus_three = Rat::from_integer(Int::from(-3));
    let out = Burnside {
        x: QuadElem::raw(minus_three.clone(), w.clone(), &t),
        y: QuadElem::raw(minus_three, -w, &t),
        z: QuadElem::raw(k * Rat::from_integer(Int::from(6)), Rat::zero(), &t),
    };
    debug_assert!(out.verify());
    Ok(out)
}

/// Mordell models `Y^2 = X^3 + c` of `t u^2 = 1 + 4k^3` and `t u^2 = −3(1 + 4k^3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MordellModels {
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub t: Int,
    /// `16 t^3`, reached by `(X, Y) = (4tk, 4t^2 u)`.
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub c1: Int,
    /// `−432 t^3`, reached by `(X, Y) = (−12tk, 12t^2 u)`.
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub c2: Int,
}

pub fn mordell_transform(t: &Int) -> MordellModels {
    let t3: Int = Pow::pow(t, 3u32);
    MordellModels {
        t: t.clone(),
        c1: &t3 * 16,
        c2: &t3 * -432,
    }
}

impl MordellModels {
    /// Image of `(u, k)` on `t u^2 = 1 + 4k^3`.
    pub fn map_first(&self, u: &Rat, k: &Rat) -> (Rat, Rat) {
        let t = Rat::from_integer(self.t.clone());
        (
            Rat::from_integer(Int::from(4)) * &t * k,
            Rat::from_integer(Int::from(4)) * &t * &t * u,
        )
    }

    /// Image of `(u, k)` on `t u^2 = −3(1 + 4k^3)`.
    pub fn map_second(&self, u: &Rat, k: &Rat) -> (Rat, Rat) {
        let t = Rat::from_integer(self.t.clone());
        (
            Rat::from_integer(Int::from(-12)) * &t * k,
            Rat::from_integer(Int::from(12)) * &t * &t * u,
        )
    }
}

/// `Y^2 = X^3 + c`.
pub fn on_mordell(c: &Int, x: &Rat, y: &Rat) -> bool {
    y * y == x * x * x + Rat::from_integer(c.clone())
}

/// j-invariant of `y^2 = x^3 + a x + b`, `None` when singular.
pub fn j_invariant(a: &Rat, b: &Rat) -> Option<Rat> {
    let four_a3 = Rat::from_integer(Int::from(4)) * a * a * a;
    let denom = &four_a3 + Rat::from_integer(Int::from(27)) * b * b;
    if denom.is_zero() {
        return None;
    }
    Some(Rat::from_integer(Int::from(1728)) * four_a3 / denom)
}

/// All points of `t u^2 = 1 + 4k^3` with `k = P/Q` in lowest terms,
/// `|P| <= height`, `1 <= Q <= height`, sorted by `(k, u)`.
pub fn point_search(t: &Int, height: u64) -> Result<Vec<CurvePoint>> {
    point_search_sharded(t, height, default_shards())
}

pub fn point_search_sharded(t: &Int, height: u64, shards: usize) -> Result<Vec<CurvePoint>> {
    check_field(t)?;
    if height < 1 {
        return Err(Error::InvalidInput("height must be at least 1".into()));
    }
    let h = height as i64;
    let units: Vec<i64> = (-h..=h).collect();
    let mut points = map_units(shards, units, |p| {
        let mut out = Vec::new();
        let p_int = Int::from(p);
        let four_p3: Int = Pow::pow(&p_int, 3u32) * 4;
        for q in 1..=h {
            if p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
                continue;
            }
            let q_int = Int::from(q);
            // t u^2 = N / Q^3 with N = Q^3 + 4P^3; u = s / (t Q^2) where s^2 = t N Q.
            let big_n: Int = Pow::pow(&q_int, 3u32) + &four_p3;
            let tnq = t * &big_n * &q_int;
            if tnq.is_negative() || tnq.is_zero() {
                continue;
            }
            let s = tnq.sqrt();
            if &s * &s != tnq {
                continue;
            }
            let u = Rat::new(s, t * &q_int * &q_int);
            let k = Rat::new(p_int.clone(), q_int.clone());
            for u in [u.clone(), -u] {
                out.push(CurvePoint {
                    u,
                    k: k.clone(),
                    t: t.clone(),
                });
            }
        }
        out
    });
    points.sort_by(|a, b| (&a.k, &a.u).cmp(&(&b.k, &b.u)));
    Ok(points)
}
