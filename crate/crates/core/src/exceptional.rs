//! Exceptional slopes.
//!
//! Every exceptional slope is `ε(p/2^q)` for a unique reduced dyadic
//! `p/2^q`, where `ε(n) = n` and
//! `ε((2p+1)/2^{q+1}) = ε(p/2^q) . ε((p+1)/2^q)`. All tree walks here keep
//! a bracket of consecutive slopes `(a, b)` at the current depth and probe
//! with `a.b`, so addressing a slope of order `q` costs `q` dot products.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, rat, sqrt_exact, QuadraticNumber, Rational};
use crate::cfrac::{slope_to_lr, LRWord};
use crate::error::{Error, Result};
use crate::kgroup::{hilbert_poly, ChernCharacter};

/// Bound on the dyadic order explored by interval descent.
pub const DEFAULT_MAX_ORDER: u32 = 64;

/// A dyadic rational `p/2^q` kept reduced: `p` is odd unless `q = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    p: BigInt,
    q: u32,
}

impl DyadicRational {
    pub fn new(p: BigInt, q: u32) -> Self {
        let mut p = p;
        let mut q = q;
        while q > 0 && p.is_even() {
            p /= 2;
            q -= 1;
        }
        DyadicRational { p, q }
    }

    pub fn integer(n: BigInt) -> Self {
        DyadicRational { p: n, q: 0 }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn exponent(&self) -> u32 {
        self.q
    }

    /// The order of the dyadic, `q` in reduced form.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), BigInt::one() << self.q)
    }

    pub fn floor(&self) -> BigInt {
        self.p.div_floor(&(BigInt::one() << self.q))
    }

    /// Neighbours `(p−1)/2^q` and `(p+1)/2^q`, reduced. Integers get `(n−1, n+1)`.
    pub fn neighbours(&self) -> (Self, Self) {
        (
            Self::new(&self.p - 1, self.q),
            Self::new(&self.p + 1, self.q),
        )
    }

    pub fn translate(&self, n: &BigInt) -> Self {
        DyadicRational {
            p: &self.p + (n << self.q),
            q: self.q,
        }
    }
}

impl core::ops::Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational { p: -self.p, q: self.q }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value().cmp(&other.value())
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/2^{}", self.p, self.q)
        }
    }
}

impl FromStr for DyadicRational {
    type Err = Error;

    /// Accepts `p`, `p/2^q` or `p/m` with `m` a power of two.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::parse(format!("bad dyadic rational {t:?}"));
        let Some((p, den)) = t.split_once('/') else {
            return Ok(Self::integer(BigInt::from_str(t).map_err(|_| bad())?));
        };
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let den = den.trim();
        let q = if let Some(e) = den.strip_prefix("2^") {
            e.parse::<u32>().map_err(|_| bad())?
        } else {
            let m = BigInt::from_str(den).map_err(|_| bad())?;
            if !m.is_positive() || (&m & (&m - 1u32)) != BigInt::zero() {
                return Err(bad());
            }
            (m.bits() - 1) as u32
        };
        Ok(Self::new(p, q))
    }
}

/// An exceptional slope together with its rank, discriminant and address.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExceptionalSlope {
    slope: Rational,
    rank: BigInt,
    discriminant: Rational,
    dyadic: DyadicRational,
}

/// `Δ = (1 − 1/r²)/2` for the denominator `r` of the slope.
fn exceptional_discriminant(slope: &Rational) -> Rational {
    let r = Rational::from_integer(slope.denom().clone());
    (int(1) - (&r * &r).recip()) / int(2)
}

impl ExceptionalSlope {
    fn from_parts(slope: Rational, dyadic: DyadicRational) -> Self {
        let rank = slope.denom().clone();
        let discriminant = exceptional_discriminant(&slope);
        ExceptionalSlope {
            slope,
            rank,
            discriminant,
            dyadic,
        }
    }

    pub fn integer(n: BigInt) -> Self {
        Self::from_parts(Rational::from_integer(n.clone()), DyadicRational::integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::integer(BigInt::from(n))
    }

    /// Recognizes an exceptional slope, or returns `None`.
    ///
    /// Every rational lies in the closure of some `I_α`, and `I_α` contains
    /// no other exceptional slope, so the descent stops at `α` and `x` is
    /// exceptional exactly when `x = α`.
    pub fn from_rational(x: &Rational, max_order: u32) -> Result<Option<Self>> {
        let a = find_interval(&QuadraticNumber::from_rational(x.clone()), max_order)?;
        Ok((a.slope == *x).then_some(a))
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    pub fn discriminant(&self) -> &Rational {
        &self.discriminant
    }

    pub fn dyadic(&self) -> &DyadicRational {
        &self.dyadic
    }

    pub fn order(&self) -> u32 {
        self.dyadic.order()
    }

    pub fn is_integer(&self) -> bool {
        self.dyadic.q == 0
    }

    /// Left-right word of the fractional part `α − ⌊α⌋`; empty for integers.
    pub fn lr_word(&self) -> LRWord {
        let frac = &self.slope - Rational::from_integer(self.slope.floor().to_integer());
        slope_to_lr(&ExceptionalSlope::from_parts(
            frac,
            self.dyadic.translate(&-self.dyadic.floor()),
        ))
        .expect("fractional part lies in [0, 1)")
    }

    pub fn translate(&self, n: &BigInt) -> Self {
        Self::from_parts(
            &self.slope + Rational::from_integer(n.clone()),
            self.dyadic.translate(n),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(-&self.slope, -self.dyadic.clone())
    }

    /// `ξ_α = (r, rα, r(α²/2 − Δ_α))`.
    pub fn to_character(&self) -> ChernCharacter {
        let r = Rational::from_integer(self.rank.clone());
        ChernCharacter::from_rmd(&r, &self.slope, &self.discriminant)
            .expect("exceptional rank is positive")
    }

    pub fn halfwidth(&self) -> QuadraticNumber {
        interval_halfwidth(self)
    }

    pub fn left_endpoint(&self) -> QuadraticNumber {
        (-interval_halfwidth(self)).add_rational(&self.slope)
    }

    pub fn right_endpoint(&self) -> QuadraticNumber {
        interval_halfwidth(self).add_rational(&self.slope)
    }
}

impl fmt::Display for ExceptionalSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slope)
    }
}

impl PartialOrd for ExceptionalSlope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExceptionalSlope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slope.cmp(&other.slope)
    }
}

/// `α.β = (α+β)/2 + (Δ_β − Δ_α)/(3 + α − β)` on bare slopes.
pub fn dot_slopes(alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let den = int(3) + alpha - beta;
    if den.is_zero() {
        return Err(Error::domain(format!("{alpha} . {beta}: 3 + alpha - beta = 0")));
    }
    let da = exceptional_discriminant(alpha);
    let db = exceptional_discriminant(beta);
    Ok((alpha + beta) / int(2) + (db - da) / den)
}

/// `α.β`, addressed by the dyadic midpoint of the two addresses.
pub fn dot(alpha: &ExceptionalSlope, beta: &ExceptionalSlope) -> Result<ExceptionalSlope> {
    let slope = dot_slopes(&alpha.slope, &beta.slope)?;
    let q = alpha.dyadic.q.max(beta.dyadic.q) + 1;
    let pa = &alpha.dyadic.p << (q - alpha.dyadic.q);
    let pb = &beta.dyadic.p << (q - beta.dyadic.q);
    let dyadic = DyadicRational::new((pa + pb) / 2, q);
    Ok(ExceptionalSlope::from_parts(slope, dyadic))
}

enum Step {
    Found,
    Left,
    Right,
}

/// Walks the tree below the integer bracket `(n, n+1)`, probing `a.b` at
/// each depth until `probe` reports `Found`.
fn descend(
    n: &BigInt,
    max_order: u32,
    mut probe: impl FnMut(&ExceptionalSlope) -> Step,
) -> Result<ExceptionalSlope> {
    let mut lo = ExceptionalSlope::integer(n.clone());
    let mut hi = ExceptionalSlope::integer(n + 1);
    for _ in 0..max_order {
        let mid = dot(&lo, &hi)?;
        match probe(&mid) {
            Step::Found => return Ok(mid),
            Step::Left => hi = mid,
            Step::Right => lo = mid,
        }
    }
    Err(Error::NotFound { max_order })
}

/// `ε(d)`.
pub fn epsilon(d: &DyadicRational) -> ExceptionalSlope {
    let n = d.floor();
    if d.q == 0 {
        return ExceptionalSlope::integer(n);
    }
    let f = &d.p - (&n << d.q);
    let mut depth = 0u32;
    descend(&n, d.q, |_| {
        depth += 1;
        if depth == d.q {
            Step::Found
        } else if ((&f >> (d.q - depth)) & BigInt::one()).is_one() {
            Step::Right
        } else {
            Step::Left
        }
    })
    .expect("descent to a known depth terminates")
}

/// `(pare_L(γ), pare_R(γ)) = (ε((p−1)/2^q), ε((p+1)/2^q))`.
pub fn parents(g: &ExceptionalSlope) -> (ExceptionalSlope, ExceptionalSlope) {
    let (l, r) = g.dyadic.neighbours();
    (epsilon(&l), epsilon(&r))
}

/// `x_α = (3 − √(5 + 8Δ_α))/2`.
pub fn interval_halfwidth(a: &ExceptionalSlope) -> QuadraticNumber {
    let root = sqrt_exact(&(int(5) + int(8) * &a.discriminant)).expect("radicand is positive");
    root.scale(&rat(-1, 2)).add_rational(&rat(3, 2))
}

pub fn interval_contains(a: &ExceptionalSlope, x: &QuadraticNumber, closed: bool) -> bool {
    let left = x.compare(&a.left_endpoint());
    let right = x.compare(&a.right_endpoint());
    if closed {
        left != Ordering::Less && right != Ordering::Greater
    } else {
        left == Ordering::Greater && right == Ordering::Less
    }
}

/// The exceptional slope `α` with `x` in the closure of `I_α`.
///
/// An input equal to an endpoint shared by no other interval resolves to
/// the interval it bounds; descent probes integers first, then `a.b` for
/// the current bracket `(a, b)`.
pub fn find_interval(x: &QuadraticNumber, max_order: u32) -> Result<ExceptionalSlope> {
    let n = x.floor();
    for m in [n.clone(), &n + 1] {
        let a = ExceptionalSlope::integer(m);
        if interval_contains(&a, x, true) {
            return Ok(a);
        }
    }
    descend(&n, max_order, |mid| {
        if interval_contains(mid, x, true) {
            Step::Found
        } else if x.cmp_rational(&mid.slope) == Ordering::Less {
            Step::Left
        } else {
            Step::Right
        }
    })
}

/// `δ(μ) = P(−|μ − α|) − Δ_α` for the `α` with `μ ∈ I_α`.
pub fn delta_curve(mu: &Rational, max_order: u32) -> Result<Rational> {
    let a = find_interval(&QuadraticNumber::from_rational(mu.clone()), max_order)?;
    Ok(delta_on_interval(&a, mu))
}

/// `P(−|μ − α|) − Δ_α`, the branch of `δ` over `I_α`.
pub fn delta_on_interval(a: &ExceptionalSlope, mu: &Rational) -> Rational {
    hilbert_poly(&-(mu - &a.slope).abs()) - &a.discriminant
}

/// Exceptional slopes of order at most `max_order` in `[lo, hi]`, sorted.
pub fn enumerate_slopes(lo: &Rational, hi: &Rational, max_order: u32) -> Result<Vec<ExceptionalSlope>> {
    if lo >= hi {
        return Err(Error::domain("enumerate_slopes needs lo < hi"));
    }
    let in_range = |s: &Rational| lo <= s && s <= hi;
    let first = lo.floor().to_integer();
    let last = hi.ceil().to_integer();
    let mut out = Vec::new();
    let mut n = first;
    while n < last {
        let a = ExceptionalSlope::integer(n.clone());
        let b = ExceptionalSlope::integer(&n + 1);
        if in_range(&a.slope) {
            out.push(a.clone());
        }
        walk(&a, &b, 1, max_order, lo, hi, &mut out)?;
        n += 1;
    }
    let end = ExceptionalSlope::integer(last);
    if in_range(&end.slope) {
        out.push(end);
    }
    Ok(out)
}

fn walk(
    a: &ExceptionalSlope,
    b: &ExceptionalSlope,
    depth: u32,
    max_order: u32,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<ExceptionalSlope>,
) -> Result<()> {
    if depth > max_order || b.slope <= *lo || a.slope >= *hi {
        return Ok(());
    }
    let mid = dot(a, b)?;
    walk(a, &mid, depth + 1, max_order, lo, hi, out)?;
    if *lo <= mid.slope && mid.slope <= *hi {
        out.push(mid.clone());
    }
    walk(&mid, b, depth + 1, max_order, lo, hi, out)
}

pub fn to_character(a: &ExceptionalSlope) -> ChernCharacter {
    a.to_character()
}

/// Name of an exceptional slope for messages.
pub fn describe(a: &ExceptionalSlope) -> String {
    format!("E_{}", a.slope)
}
