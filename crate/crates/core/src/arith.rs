//! Exact arithmetic: arbitrary precision rationals and real quadratic
//! irrationals `a + b·√D`.
//!
//! Rationals are [`num_rational::BigRational`], which is always kept in
//! lowest terms with a positive denominator. Text form is `p/q`, or `p`
//! when the denominator is one.
//!
//! Quadratic numbers in different fields are never added together by this
//! artifact, but they are compared: interval membership `μ0 ∈ I_α` pits
//! `√(5+8Δ(ξ))` against `√(5+8Δ_α)`. Comparison reduces to the exact sign
//! of `a + b√m + c√n`, decided with at most two sign-tracked squarings.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Trial-division bound used when pulling square factors out of a radicand.
pub const DEFAULT_SQUAREFREE_BOUND: u32 = 1 << 12;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::parse("empty rational"));
    }
    Rational::from_str(t).map_err(|e| Error::parse(format!("bad rational {t:?}: {e}")))
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

fn sign_of(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn ordering_from_sign(s: i8) -> Ordering {
    s.cmp(&0)
}

/// Exact sign of `a + b·√d` for any nonnegative `d`, squarefree or not.
fn sign_linear(a: &Rational, b: &Rational, d: &BigUint) -> i8 {
    let sa = sign_of(a);
    let sb = if d.is_zero() { 0 } else { sign_of(b) };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let lhs = a * a;
    let rhs = b * b * Rational::from_integer(BigInt::from(d.clone()));
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Exact sign of `a + b·√m + c·√n`.
fn sign_two_radicals(a: &Rational, b: &Rational, m: &BigUint, c: &Rational, n: &BigUint) -> i8 {
    let su = {
        // sign of b√m + c√n
        let sb = if m.is_zero() { 0 } else { sign_of(b) };
        let sc = if n.is_zero() { 0 } else { sign_of(c) };
        if sb == 0 {
            sc
        } else if sc == 0 || sb == sc {
            sb
        } else {
            let lb = b * b * Rational::from_integer(BigInt::from(m.clone()));
            let lc = c * c * Rational::from_integer(BigInt::from(n.clone()));
            match lb.cmp(&lc) {
                Ordering::Greater => sb,
                Ordering::Less => sc,
                Ordering::Equal => 0,
            }
        }
    };
    let sa = sign_of(a);
    if su == 0 {
        return sa;
    }
    if sa == 0 || sa == su {
        return su;
    }
    // Opposite signs: compare a² with (b√m + c√n)² = b²m + c²n + 2bc√(mn).
    let mr = Rational::from_integer(BigInt::from(m.clone()));
    let nr = Rational::from_integer(BigInt::from(n.clone()));
    let rational_part = a * a - b * b * mr - c * c * nr;
    let radical_coeff = -(b * c) * int(2);
    match sign_linear(&rational_part, &radical_coeff, &(m * n)) {
        1 => sa,
        -1 => su,
        _ => 0,
    }
}

/// Splits `n` as `k²·m`, pulling out square factors of primes below `bound`
/// and detecting a perfect-square cofactor. Returns `(k, m)`.
fn extract_square(n: &BigUint, bound: u32) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut p: u32 = 2;
    while p <= bound {
        let pp = BigUint::from(p) * BigUint::from(p);
        if pp > rest {
            break;
        }
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            root *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        root *= s;
        rest = BigUint::one();
    }
    (root, rest)
}

/// A real number `a + b·√D` with rational `a`, `b` and integer `D ≥ 0`.
///
/// On construction square factors are moved from `D` into `b`; when `D`
/// collapses to 0 or 1 the value is stored as the rational `a` with `D = 0`.
/// Radicands with large repeated prime factors may stay partially reduced;
/// equality and ordering are computed from the value, never from the fields.
#[derive(Clone, Debug)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    radicand: BigUint,
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, radicand: BigUint) -> Self {
        Self::with_bound(a, b, radicand, DEFAULT_SQUAREFREE_BOUND)
    }

    pub fn with_bound(a: Rational, b: Rational, radicand: BigUint, bound: u32) -> Self {
        if b.is_zero() || radicand.is_zero() {
            return Self::from_rational(a);
        }
        let (k, m) = extract_square(&radicand, bound);
        let b = b * Rational::from_integer(BigInt::from(k));
        if m.is_one() {
            return Self::from_rational(a + b);
        }
        QuadraticNumber { a, b, radicand: m }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadraticNumber {
            a,
            b: Rational::zero(),
            radicand: BigUint::zero(),
        }
    }

    pub fn from_integer(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        QuadraticNumber {
            a: &self.a + r,
            b: self.b.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn sub_rational(&self, r: &Rational) -> Self {
        self.add_rational(&-r)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QuadraticNumber {
            a: &self.a * r,
            b: &self.b * r,
            radicand: self.radicand.clone(),
        }
    }

    /// Sum of two numbers in the same quadratic field (or where one is
    /// rational). Returns `None` for distinct fields.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if other.is_rational() {
            return Some(self.add_rational(&other.a));
        }
        if self.is_rational() {
            return Some(other.add_rational(&self.a));
        }
        if self.radicand != other.radicand {
            return None;
        }
        let b = &self.b + &other.b;
        if b.is_zero() {
            return Some(Self::from_rational(&self.a + &other.a));
        }
        Some(QuadraticNumber {
            a: &self.a + &other.a,
            b,
            radicand: self.radicand.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&-other.clone())
    }

    /// Square of the number; stays inside the same field.
    pub fn square(&self) -> Self {
        let d = Rational::from_integer(BigInt::from(self.radicand.clone()));
        let a = &self.a * &self.a + &self.b * &self.b * d;
        let b = &self.a * &self.b * int(2);
        if b.is_zero() {
            Self::from_rational(a)
        } else {
            QuadraticNumber {
                a,
                b,
                radicand: self.radicand.clone(),
            }
        }
    }

    /// Exact sign: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        sign_linear(&self.a, &self.b, &self.radicand)
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        ordering_from_sign(sign_linear(&(&self.a - r), &self.b, &self.radicand))
    }

    /// Exact ordering of two quadratic numbers, possibly in different fields.
    pub fn compare(&self, other: &Self) -> Ordering {
        let a = &self.a - &other.a;
        if self.radicand == other.radicand || other.b.is_zero() || other.radicand.is_zero() {
            let b = if self.radicand == other.radicand {
                &self.b - &other.b
            } else {
                self.b.clone()
            };
            return ordering_from_sign(sign_linear(&a, &b, &self.radicand));
        }
        if self.b.is_zero() || self.radicand.is_zero() {
            return ordering_from_sign(sign_linear(&a, &-&other.b, &other.radicand));
        }
        ordering_from_sign(sign_two_radicals(
            &a,
            &self.b,
            &self.radicand,
            &-&other.b,
            &other.radicand,
        ))
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let guess = {
            let rad = &self.b * &self.b * Rational::from_integer(BigInt::from(self.radicand.clone()));
            let root = rad.floor().to_integer().to_biguint().unwrap_or_default().sqrt();
            let root = BigInt::from(root);
            let off = if self.b.is_negative() { -root } else { root };
            self.a.floor().to_integer() + off
        };
        let mut g = guess;
        while self.cmp_rational(&Rational::from_integer(g.clone())) == Ordering::Less {
            g -= 1;
        }
        while self.cmp_rational(&Rational::from_integer(&g + 1)) != Ordering::Less {
            g += 1;
        }
        g
    }

    /// Floating point approximation for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.radicand.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + b * libm_sqrt(d)
    }

    /// Value truncated toward zero after scaling by `10^digits`, i.e. the
    /// decimal expansion to `digits` places as an integer.
    pub fn scaled_floor(&self, digits: u32) -> BigInt {
        let scale = Rational::from_integer(BigInt::from(10u32).pow(digits));
        self.scale(&scale).floor()
    }
}

// Newton iteration; keeps the crate free of a libm dependency.
fn libm_sqrt(x: f64) -> f64 {
    if x <= 0.0 || x.is_nan() {
        return 0.0;
    }
    let mut y = if x > 1.0 { x / 2.0 } else { 1.0 };
    for _ in 0..64 {
        let next = 0.5 * (y + x / y);
        if next == y {
            break;
        }
        y = next;
    }
    y
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;

    fn neg(self) -> Self::Output {
        QuadraticNumber {
            a: -self.a,
            b: -self.b,
            radicand: self.radicand,
        }
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for QuadraticNumber {}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

/// Exact square root of a nonnegative rational.
///
/// `√(n/d)` is written as `(1/d)·√(n·d)` before square factors are pulled
/// out, so the result is rational exactly when `n/d` is a rational square.
pub fn sqrt_exact(x: &Rational) -> Result<QuadraticNumber> {
    if x.is_negative() {
        return Err(Error::domain(format!("square root of negative rational {x}")));
    }
    if x.is_zero() {
        return Ok(QuadraticNumber::zero());
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let b = Rational::new(BigInt::one(), BigInt::from(d.clone()));
    Ok(QuadraticNumber::new(Rational::zero(), b, n * d))
}

/// `qn_sign` as a free function.
pub fn qn_sign(x: &QuadraticNumber) -> i8 {
    x.sign()
}

/// `qn_compare_cross` as a free function.
pub fn qn_compare_cross(x: &QuadraticNumber, y: &QuadraticNumber) -> Ordering {
    x.compare(y)
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.radicand)
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad quadratic number {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, rest) = inner.split_once(" + ").ok_or_else(bad)?;
        let (b, rad) = rest.split_once("*sqrt(").ok_or_else(bad)?;
        let rad = rad.strip_suffix(')').ok_or_else(bad)?;
        let a = parse_rational(a)?;
        let b = parse_rational(b)?;
        let rad = BigInt::from_str(rad.trim()).map_err(|_| bad())?;
        if rad.sign() == Sign::Minus {
            return Err(Error::domain("negative radicand"));
        }
        let rad = rad.magnitude().clone();
        Ok(QuadraticNumber::new(a, b, rad))
    }
}

/// Integer helpers shared by the other modules.
pub(crate) fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub(crate) fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
