//! Left-right words and continued fractions of exceptional slopes.
//!
//! The word `w` addresses `0·w`, obtained from the triple
//! `(γ, pare_L γ, pare_R γ) = (0, −1, 1)` by `γ·R = γ.pare_R(γ)` and
//! `γ·L = pare_L(γ).γ`. Slopes in `(0, 1/2)` have words beginning `RL`.
//!
//! Expansions are `[0; a1, …, ak]`. The even-length expansion satisfies
//! `γ^e = β^o 2 α^e` for parents `(α, β)`, with `0^e` empty and
//! `(1/2)^e = 11`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{int, rat, QuadraticNumber, Rational};
use crate::error::{Error, Result};
use crate::exceptional::{dot, DyadicRational, ExceptionalSlope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LRWord(pub Vec<Letter>);

impl LRWord {
    pub fn empty() -> Self {
        LRWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn prefix(&self, n: usize) -> LRWord {
        LRWord(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn is_prefix_of(&self, other: &LRWord) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Splits `w = σ' X Y^n` with `n ≥ 1` maximal, returning `(σ', X, n)`,
    /// or `(∅, None, n)` when `w` is a power of one letter.
    fn split_tail(&self) -> Option<(LRWord, Option<Letter>, usize)> {
        let last = self.last()?;
        let n = self.0.iter().rev().take_while(|&&l| l == last).count();
        let rest = self.0.len() - n;
        if rest == 0 {
            return Some((LRWord::empty(), None, n));
        }
        Some((self.prefix(rest - 1), Some(self.0[rest - 1]), n))
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LRWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "∅" {
            return Ok(LRWord::empty());
        }
        t.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Letter::L),
                'R' | 'r' => Ok(Letter::R),
                _ => Err(Error::parse(format!("bad letter {c:?} in word {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LRWord)
    }
}

/// Continued fraction digits `a1, …, ak` of `[0; a1, …, ak]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CFWord(pub Vec<u32>);

impl CFWord {
    pub fn empty() -> Self {
        CFWord(Vec::new())
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &CFWord) -> CFWord {
        let mut d = self.0.clone();
        d.extend_from_slice(&other.0);
        CFWord(d)
    }

    pub fn repeat(&self, n: usize) -> CFWord {
        CFWord(self.0.repeat(n))
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Smallest `p ≥ 1` with `a_i = a_{i+p}` wherever both are defined.
    pub fn smallest_period(&self) -> usize {
        let d = &self.0;
        (1..=d.len())
            .find(|&p| (0..d.len() - p).all(|i| d[i] == d[i + p]))
            .unwrap_or(0)
    }
}

impl fmt::Display for CFWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
        } else {
            for (i, a) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CFWord {
    type Err = Error;

    /// Either a run of single digits (`2112`) or a comma list (`2,11,3`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::parse(format!("bad continued fraction word {t:?}"));
        if t.is_empty() || t == "∅" {
            return Ok(CFWord::empty());
        }
        let digits: Vec<u32> = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if digits.contains(&0) {
            return Err(bad());
        }
        Ok(CFWord(digits))
    }
}

/// `[0; a1, …, ak]`; the empty word evaluates to 0.
pub fn cf_eval(w: &CFWord) -> Rational {
    let mut v = Rational::zero();
    for &a in w.0.iter().rev() {
        v = (Rational::from_integer(BigInt::from(a)) + v).recip();
    }
    v
}

/// The other expansion of the same rational: `…, a, 1 ↦ …, a+1` and
/// `…, a ↦ …, a−1, 1` for `a ≥ 2`.
pub fn parity_convert(w: &CFWord) -> Result<CFWord> {
    let mut d = w.0.clone();
    match d.as_slice() {
        [] => return Err(Error::domain("empty expansion has no other parity")),
        [1] => return Err(Error::domain("[0; 1] has no other expansion with zero integer part")),
        _ => {}
    }
    let k = d.len() - 1;
    if d[k] == 1 {
        d.pop();
        d[k - 1] += 1;
    } else {
        d[k] -= 1;
        d.push(1);
    }
    Ok(CFWord(d))
}

/// Triple `(γ, pare_L γ, pare_R γ)` during a word walk.
#[derive(Clone, Debug)]
struct Triple {
    g: ExceptionalSlope,
    l: ExceptionalSlope,
    r: ExceptionalSlope,
}

impl Triple {
    fn root() -> Self {
        Triple {
            g: ExceptionalSlope::from_i64(0),
            l: ExceptionalSlope::from_i64(-1),
            r: ExceptionalSlope::from_i64(1),
        }
    }

    fn step(&self, letter: Letter) -> Triple {
        match letter {
            Letter::R => Triple {
                g: dot(&self.g, &self.r).expect("adjacent slopes"),
                l: self.g.clone(),
                r: self.r.clone(),
            },
            Letter::L => Triple {
                g: dot(&self.l, &self.g).expect("adjacent slopes"),
                l: self.l.clone(),
                r: self.g.clone(),
            },
        }
    }

    fn walk(w: &LRWord) -> Triple {
        w.0.iter().fold(Triple::root(), |t, &l| t.step(l))
    }
}

/// `0·w`.
pub fn lr_to_slope(w: &LRWord) -> ExceptionalSlope {
    Triple::walk(w).g
}

/// The word `w` with `0·w = g`, for `g` in `(−1, 1)`.
pub fn slope_to_lr(g: &ExceptionalSlope) -> Result<LRWord> {
    let d = g.dyadic();
    let mut p = d.numer().clone();
    let mut q = d.exponent();
    let bound = BigInt::one() << q;
    if q == 0 && !p.is_zero() || q > 0 && (p >= bound || p <= -bound) {
        return Err(Error::domain(format!("slope {g} has no word: outside (-1, 1)")));
    }
    let mut rev = Vec::with_capacity(q as usize);
    while q > 0 {
        let down: BigInt = (&p - 1) / 2;
        let up: BigInt = (&p + 1) / 2;
        let go_right = if q == 1 { down.is_zero() } else { down.is_odd() };
        rev.push(if go_right { Letter::R } else { Letter::L });
        p = if go_right { down } else { up };
        q -= 1;
    }
    rev.reverse();
    Ok(LRWord(rev))
}

/// Words of `(pare_L(0·w), pare_R(0·w))`; `None` stands for `−1` or `1`,
/// which have no word.
pub fn lr_parents(w: &LRWord) -> (Option<LRWord>, Option<LRWord>) {
    let Some((sigma, turn, n)) = w.split_tail() else {
        return (None, None);
    };
    let last = w.last().expect("nonempty");
    let mut near = sigma.clone();
    if let Some(t) = turn {
        near.push(t);
    }
    near.0.extend(core::iter::repeat_n(last, n - 1));
    let far = turn.map(|_| sigma);
    match last {
        Letter::L => (far, Some(near)),
        Letter::R => (Some(near), far),
    }
}

fn check_reduced_range(g: &ExceptionalSlope) -> Result<()> {
    let s = g.slope();
    if *s < int(0) || *s > rat(1, 2) {
        return Err(Error::domain(format!(
            "slope {s} outside [0, 1/2]; normalize it first"
        )));
    }
    Ok(())
}

/// `γ^e`, for slopes in `[0, 1/2]`.
pub fn even_expansion(g: &ExceptionalSlope) -> Result<CFWord> {
    check_reduced_range(g)?;
    let w = slope_to_lr(g)?;
    Ok(expansions_along(&w)?.0)
}

/// `γ^o`, for slopes in `(0, 1/2]`.
pub fn odd_expansion(g: &ExceptionalSlope) -> Result<CFWord> {
    parity_convert(&even_expansion(g)?)
}

/// Even expansions of `(0·w, pare_L, pare_R)` for a word addressing `[0, 1/2]`.
fn expansions_along(w: &LRWord) -> Result<(CFWord, CFWord, CFWord)> {
    let letters = w.letters();
    match letters {
        [] => return Ok((CFWord::empty(), CFWord::empty(), CFWord::empty())),
        [Letter::R, ..] => {}
        _ => return Err(Error::domain(format!("word {w} does not address [0, 1/2]"))),
    }
    // after "R": γ = 1/2, pare_L = 0, pare_R = 1 (never used as β^o below)
    let mut ge = CFWord(vec![1, 1]);
    let mut le = CFWord::empty();
    let mut re: Option<CFWord> = None;
    for (i, &letter) in letters[1..].iter().enumerate() {
        if i == 0 && letter == Letter::R {
            return Err(Error::domain(format!("word {w} does not address [0, 1/2]")));
        }
        match letter {
            Letter::R => {
                let beta = re.as_ref().expect("right parent inside [0, 1/2]");
                let next = parity_convert(beta)?.concat(&CFWord(vec![2])).concat(&ge);
                le = ge;
                ge = next;
            }
            Letter::L => {
                let next = parity_convert(&ge)?.concat(&CFWord(vec![2])).concat(&le);
                re = Some(ge);
                ge = next;
            }
        }
    }
    Ok((ge, le, re.unwrap_or_default()))
}

/// Integer translation and negation taking a slope to `[0, 1/2]`:
/// `slope = shift + reduced` or `slope = shift − reduced`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub shift: BigInt,
    pub negated: bool,
    pub reduced: ExceptionalSlope,
}

pub fn normalize(g: &ExceptionalSlope) -> Normalized {
    let n = g.slope().floor().to_integer();
    let frac = g.translate(&-&n);
    if *frac.slope() <= rat(1, 2) {
        Normalized {
            shift: n,
            negated: false,
            reduced: frac,
        }
    } else {
        let m = &n + 1;
        Normalized {
            reduced: g.translate(&-&m).neg(),
            shift: m,
            negated: true,
        }
    }
}

/// `γ^e = (β^o 2)^{n+1} α^e` for `0·w` with `w = σ'LR^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodStructure {
    pub block: CFWord,
    pub exponent: usize,
    pub tail: CFWord,
    /// `β = 1/2`, where `γ^e = 2^{2n+2}` and the block is not the smallest period.
    pub beta_half: bool,
}

pub fn period_structure(w: &LRWord) -> Result<PeriodStructure> {
    if w.last() != Some(Letter::R) {
        return Err(Error::domain(format!("word {w} must end in R")));
    }
    if !w.letters().starts_with(&[Letter::R, Letter::L]) {
        return Err(Error::domain(format!("word {w} does not address (0, 1/2)")));
    }
    let (sigma, turn, n) = w.split_tail().expect("nonempty");
    debug_assert_eq!(turn, Some(Letter::L));
    let beta = lr_to_slope(&sigma);
    let (be, le, _) = expansions_along(&sigma)?;
    let block = parity_convert(&be)?.concat(&CFWord(vec![2]));
    let beta_half = *beta.slope() == rat(1, 2);
    let ps = PeriodStructure {
        block,
        exponent: n + 1,
        tail: le,
        beta_half,
    };
    let whole = ps.block.repeat(ps.exponent).concat(&ps.tail);
    let expected = even_expansion(&lr_to_slope(w))?;
    if whole != expected {
        return Err(Error::internal(format!(
            "period structure of {w} gives {whole}, expected {expected}"
        )));
    }
    if !beta_half && expected.smallest_period() != ps.block.len() {
        return Err(Error::internal(format!(
            "smallest period of {expected} is not |{}|",
            ps.block
        )));
    }
    Ok(ps)
}

/// Enclosure of every Cantor point whose word extends a given prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CantorEnclosure {
    /// `0·τ` for the truncated prefix `τ`.
    pub approx: ExceptionalSlope,
    pub left_parent: ExceptionalSlope,
    pub right_parent: ExceptionalSlope,
    /// `pare_L + x_{pare_L}`.
    pub lower: QuadraticNumber,
    /// `pare_R − x_{pare_R}`.
    pub upper: QuadraticNumber,
}

impl CantorEnclosure {
    pub fn contains(&self, x: &QuadraticNumber) -> bool {
        self.lower <= *x && *x <= self.upper
    }

    pub fn is_within(&self, outer: &CantorEnclosure) -> bool {
        outer.lower <= self.lower && self.upper <= outer.upper
    }
}

pub fn cantor_approx(prefix: &LRWord, depth: usize) -> CantorEnclosure {
    let t = Triple::walk(&prefix.prefix(depth));
    CantorEnclosure {
        lower: t.l.right_endpoint(),
        upper: t.r.left_endpoint(),
        approx: t.g,
        left_parent: t.l,
        right_parent: t.r,
    }
}

/// `prefix · tail^∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfiniteWord {
    pub prefix: LRWord,
    pub tail: LRWord,
}

impl FromStr for InfiniteWord {
    type Err = Error;

    /// `PREFIX(TAIL)`, e.g. `RL(L)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::parse(format!("bad infinite word {t:?}; expected PREFIX(TAIL)"));
        let (p, rest) = t.split_once('(').ok_or_else(bad)?;
        let tail = rest.strip_suffix(')').ok_or_else(bad)?;
        let tail: LRWord = tail.parse()?;
        if tail.is_empty() {
            return Err(bad());
        }
        Ok(InfiniteWord {
            prefix: p.parse()?,
            tail,
        })
    }
}

impl fmt::Display for InfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, self.tail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// For an eventually constant word, the `α` whose interval it bounds:
/// `σ_α R L̄ = α + x_α` and `σ_α L R̄ = α − x_α`.
pub fn is_endpoint_word(w: &InfiniteWord) -> Option<(ExceptionalSlope, Side)> {
    let c = *w.tail.letters().first()?;
    if w.tail.letters().iter().any(|&l| l != c) {
        return None;
    }
    let mut letters = w.prefix.letters().to_vec();
    while letters.last() == Some(&c) {
        letters.pop();
    }
    let side = match c {
        Letter::L => Side::Right,
        Letter::R => Side::Left,
    };
    if letters.pop().is_none() {
        let n = match c {
            Letter::L => -1,
            Letter::R => 1,
        };
        return Some((ExceptionalSlope::from_i64(n), side));
    }
    Some((lr_to_slope(&LRWord(letters)), side))
}

/// Rows `(word, slope, even, odd)` for all slopes in `(0, 1/2]` of order at
/// most `max_order`, in word order of increasing length.
pub fn expansion_table(max_order: u32) -> Result<Vec<(LRWord, ExceptionalSlope, CFWord, CFWord)>> {
    let mut rows = Vec::new();
    let mut frontier = vec![LRWord(vec![Letter::R])];
    for _ in 0..max_order {
        let mut next = Vec::new();
        for w in frontier {
            let g = lr_to_slope(&w);
            let e = even_expansion(&g)?;
            let o = parity_convert(&e)?;
            rows.push((w.clone(), g, e, o));
            for l in [Letter::L, Letter::R] {
                if w.len() == 1 && l == Letter::R {
                    continue;
                }
                let mut c = w.clone();
                c.push(l);
                next.push(c);
            }
        }
        frontier = next;
    }
    Ok(rows)
}

/// Dyadic address of `0·w`, computed directly from the letters.
pub fn lr_to_dyadic(w: &LRWord) -> DyadicRational {
    let q = w.len() as u32;
    let mut p = BigInt::zero();
    for (i, &l) in w.letters().iter().enumerate() {
        let bit = BigInt::one() << (q - 1 - i as u32);
        match l {
            Letter::R => p += bit,
            Letter::L => p -= bit,
        }
    }
    DyadicRational::new(p, q)
}

pub fn format_word_or_empty(w: &LRWord) -> String {
    if w.is_empty() {
        String::from("∅")
    } else {
        format!("{w}")
    }
}
