//! Parsing of characters and slopes from flags and JSON lines.

use effcone_core::arith::{int, parse_rational, rat};
use effcone_core::cfrac::lr_to_slope;
use effcone_core::{ChernCharacter, DyadicRational, ExceptionalSlope, LRWord, Rational};
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

fn parse_list<const N: usize>(s: &str, what: &str) -> Result<[Rational; N]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(CliError::usage(format!(
            "{what} expects {N} comma-separated values, got {s:?}"
        )));
    }
    let mut out: [Rational; N] = core::array::from_fn(|_| Rational::zero());
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = parse_rational(p)?;
    }
    Ok(out)
}

/// `r,c1,ch2`.
pub fn chern(s: &str) -> Result<ChernCharacter> {
    let [r, c1, ch2] = parse_list::<3>(s, "--chern")?;
    Ok(ChernCharacter::new(r, c1, ch2))
}

/// `r,mu,delta` with `r > 0`.
pub fn rmd(s: &str) -> Result<ChernCharacter> {
    let [r, mu, delta] = parse_list::<3>(s, "--rmd")?;
    Ok(ChernCharacter::from_rmd(&r, &mu, &delta)?)
}

/// `d,chi` for a rank zero character.
pub fn rank_zero(s: &str) -> Result<ChernCharacter> {
    let [d, chi] = parse_list::<2>(s, "--rank-zero")?;
    Ok(ChernCharacter::from_rank_zero(&d, &chi))
}

/// `(r, c1, χ)` with `ch2 = χ − r − 3c1/2`.
pub fn from_r_c1_chi(r: Rational, c1: Rational, chi: Rational) -> ChernCharacter {
    let ch2 = &chi - &r - rat(3, 2) * &c1;
    ChernCharacter::new(r, c1, ch2)
}

fn json_rational(obj: &Map<String, Value>, key: &str) -> Result<Rational> {
    match obj.get(key) {
        None => Err(CliError::usage(format!("missing field {key:?}"))),
        Some(Value::String(s)) => Ok(parse_rational(s)?),
        Some(Value::Number(n)) => n.as_i64().map(int).ok_or_else(|| {
            CliError::usage(format!(
                "field {key:?} = {n} is not an integer; write rationals as \"p/q\""
            ))
        }),
        Some(v) => Err(CliError::usage(format!("field {key:?} has unsupported value {v}"))),
    }
}

/// One JSON object in one of the forms `{"ch0","ch1","ch2"}`,
/// `{"r","mu","delta"}` or `{"r","c1","chi"}`.
pub fn character_json(line: &str) -> Result<ChernCharacter> {
    let value: Value = serde_json::from_str(line)?;
    let Value::Object(obj) = value else {
        return Err(CliError::usage("expected a JSON object"));
    };
    let has = |k: &str| obj.contains_key(k);
    let keys: &[&str] = if has("ch0") || has("ch1") || has("ch2") {
        &["ch0", "ch1", "ch2"]
    } else if has("mu") || has("delta") {
        &["r", "mu", "delta"]
    } else {
        &["r", "c1", "chi"]
    };
    if let Some(extra) = obj.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(CliError::usage(format!(
            "unexpected field {extra:?}; expected {keys:?}"
        )));
    }
    let [a, b, c] = [0, 1, 2].map(|i| json_rational(&obj, keys[i]));
    let (a, b, c) = (a?, b?, c?);
    Ok(match keys[1] {
        "ch1" => ChernCharacter::new(a, b, c),
        "mu" => ChernCharacter::from_rmd(&a, &b, &c)?,
        _ => from_r_c1_chi(a, b, c),
    })
}

/// How an exceptional slope was given on the command line.
#[derive(Clone, Debug)]
pub enum SlopeInput {
    Dyadic(String),
    Rational(String),
    Lr(String),
}

pub fn exceptional_slope(given: &SlopeInput, max_order: u32) -> Result<ExceptionalSlope> {
    match given {
        SlopeInput::Dyadic(s) => {
            let d: DyadicRational = s.parse()?;
            Ok(effcone_core::exceptional::epsilon(&d))
        }
        SlopeInput::Rational(s) => {
            let x = parse_rational(s)?;
            ExceptionalSlope::from_rational(&x, max_order)?.ok_or_else(|| {
                CliError::usage(format!(
                    "{x} is not an exceptional slope of order at most {max_order}"
                ))
            })
        }
        SlopeInput::Lr(s) => {
            let w: LRWord = s.parse()?;
            Ok(lr_to_slope(&w))
        }
    }
}
