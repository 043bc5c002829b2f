//! Rendering of core values as JSON (deterministic field order), aligned
//! text and decimal approximations.
//!
//! Rationals are strings `"p/q"` (or `"p"`), quadratic numbers are
//! `"(a + b*sqrt(D))"`, integers that may exceed 64 bits are strings.

use effcone_core::cone::{
    bundle_name, Classification, KroneckerData, OrthogonalInvariants, PrimaryEdge, Ray,
    ResolutionData, SecondaryEdge, Wall,
};
use effcone_core::{ChernCharacter, ConeReport, ExceptionalSlope, QuadraticNumber, Rational, SlopeDisc};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn bigint(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn quadratic(x: &QuadraticNumber) -> Value {
    Value::String(x.to_string())
}

pub fn character(c: &ChernCharacter) -> Value {
    json!({
        "ch0": rational(&c.ch0),
        "ch1": rational(&c.ch1),
        "ch2": rational(&c.ch2),
    })
}

/// The character together with `χ` and, in positive rank, `(μ, Δ)`.
pub fn input_character(c: &ChernCharacter) -> Value {
    let mut m = Map::new();
    m.insert("ch0".into(), rational(&c.ch0));
    m.insert("ch1".into(), rational(&c.ch1));
    m.insert("ch2".into(), rational(&c.ch2));
    m.insert("chi".into(), rational(&c.euler_chi()));
    if let Ok(sd) = c.slope_disc() {
        m.insert("mu".into(), rational(&sd.mu));
        m.insert("delta".into(), rational(&sd.delta));
    }
    Value::Object(m)
}

pub fn point(p: &SlopeDisc) -> Value {
    json!({ "mu": rational(&p.mu), "delta": rational(&p.delta) })
}

pub fn slope(s: &ExceptionalSlope) -> Value {
    json!({
        "slope": rational(s.slope()),
        "rank": bigint(s.rank()),
        "discriminant": rational(s.discriminant()),
        "order": s.order(),
        "dyadic": s.dyadic().to_string(),
        "lr_word": effcone_core::cfrac::format_word_or_empty(&s.lr_word()),
        "interval": {
            "left": quadratic(&s.left_endpoint()),
            "right": quadratic(&s.right_endpoint()),
        },
    })
}

pub fn classification(c: &Classification) -> Value {
    json!({ "kind": c.kind.as_str(), "reasons": c.reasons })
}

fn invariants(inv: &OrthogonalInvariants) -> Value {
    json!({
        "mu0": quadratic(&inv.mu0),
        "corresponding_slope": rational(inv.corresponding_slope.slope()),
        "case_sign": inv.case_sign.as_str(),
        "orthogonal_point": point(&inv.point),
        "on_delta_curve": inv.on_delta_curve,
    })
}

fn ray(r: &Ray) -> Value {
    let perp = match &r.perp_coordinates {
        Some((a, b)) => json!([rational(a), rational(b)]),
        None => Value::Null,
    };
    json!({
        "character": character(&r.character),
        "point": point(&r.point),
        "perp_coordinates": perp,
    })
}

fn resolution(res: &ResolutionData) -> Value {
    let triad: Vec<Value> = res
        .triad
        .iter()
        .zip(res.triad_characters())
        .map(|(s, c)| {
            json!({
                "bundle": bundle_name(s),
                "slope": rational(s.slope()),
                "character": character(&c),
            })
        })
        .collect();
    json!({
        "alpha": rational(res.alpha.slope()),
        "beta": rational(res.beta.slope()),
        "triad": triad,
        "m1": bigint(&res.m1),
        "m2": bigint(&res.m2),
        "m3": res.m3.as_ref().map_or(Value::Null, bigint),
        "shape": res.shape,
    })
}

fn kronecker(k: &KroneckerData) -> Value {
    json!({
        "N": bigint(&k.n),
        "dim_vector": [bigint(&k.dim_vector.0), bigint(&k.dim_vector.1)],
        "expected_dimension": bigint(&k.expected_dimension),
        "fibration": k.fibration.as_str(),
    })
}

fn wall(w: &Wall) -> Value {
    json!({
        "center_s": rational(&w.center_s),
        "radius": quadratic(&w.radius),
        "exceeds_sqrt5_over_2": w.exceeds_sqrt5_over_2,
    })
}

pub fn primary(p: &PrimaryEdge) -> Value {
    json!({
        "invariants": invariants(&p.invariants),
        "extremal_ray": ray(&p.extremal),
        "resolution": p.resolution.as_ref().map_or(Value::Null, resolution),
        "kronecker": p.kronecker.as_ref().map_or(Value::Null, kronecker),
        "wall": wall(&p.wall),
        "movable_edge_coincides": p.movable_edge_coincides,
    })
}

pub fn secondary(s: &SecondaryEdge) -> Value {
    json!({
        "mode": s.mode.as_str(),
        "point": s.point.as_ref().map_or(Value::Null, point),
        "corresponding_slope": s.corresponding_slope.as_ref().map_or(Value::Null, rational),
        "extremal_ray": s.extremal.as_ref().map_or(Value::Null, ray),
        "descriptor": s.descriptor,
        "dual_primary": s.dual.as_deref().map_or(Value::Null, primary),
    })
}

pub fn report(r: &ConeReport) -> Value {
    let natural = match &r.natural_classes {
        Some((z0, z1)) => json!({ "zeta0": character(z0), "zeta1": character(z1) }),
        None => Value::Null,
    };
    json!({
        "input": input_character(&r.input),
        "classification": classification(&r.classification),
        "dimension": r.dimension.as_ref().map_or(Value::Null, bigint),
        "natural_classes": natural,
        "primary": r.primary.as_ref().map_or(Value::Null, primary),
        "secondary": r.secondary.as_ref().map_or(Value::Null, secondary),
    })
}

/// One `key  value` line per leaf, keys as dotted paths, values aligned.
pub fn text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(String::new(), v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn flatten(prefix: String, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(join(k), x, rows);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(format!("{prefix}[{i}]"), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix, s.clone())),
        Value::Null => rows.push((prefix, "-".into())),
        other => rows.push((prefix, other.to_string())),
    }
}

/// `x` rounded half away from zero to `digits` decimal places.
pub fn decimal(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let n = x.numer().abs() * &scale * 2u32 + x.denom();
    let q = n / (x.denom() * 2u32);
    let mut s = q.to_string();
    if digits > 0 {
        let d = digits as usize;
        if s.len() <= d {
            s = format!("{}{s}", "0".repeat(d + 1 - s.len()));
        }
        s.insert(s.len() - d, '.');
    }
    if x.is_negative() && !q.is_zero() {
        s.insert(0, '-');
    }
    s
}
