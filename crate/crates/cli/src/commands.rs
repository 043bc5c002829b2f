//! Subcommand drivers. Each returns the text for standard output and
//! standard error together with the exit code.

use std::thread;

use effcone_core::arith::int;
use effcone_core::cfrac::{
    even_expansion, format_word_or_empty, normalize, odd_expansion, period_structure,
};
use effcone_core::cone::{classify as classify_character, cone_report_with, Kind};
use effcone_core::exceptional::{delta_on_interval, enumerate_slopes, find_interval};
use effcone_core::kgroup::hilbert_poly;
use effcone_core::{ChernCharacter, ExceptionalSlope, QuadraticNumber, Rational};
use num_traits::Signed;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};
use crate::input::{self, SlopeInput};
use crate::render;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
            s.push('\n');
            s
        }
        Format::Text => render::text(v),
    }
}

/// 0 for a cone report, 1 for an invalid character, 2 otherwise.
pub fn kind_code(kind: Kind) -> i32 {
    if kind.has_cone() {
        0
    } else if kind == Kind::Invalid {
        1
    } else {
        2
    }
}

fn with_reasons(stdout: String, kind: Kind, reasons: &[String]) -> Outcome {
    let code = kind_code(kind);
    let stderr = if code == 1 {
        reasons.iter().map(|r| format!("invalid character: {r}\n")).collect()
    } else {
        String::new()
    };
    Outcome { stdout, stderr, code }
}

pub fn cone(x: &ChernCharacter, multiplier: u32, max_order: u32, format: Format) -> Result<Outcome> {
    let rep = cone_report_with(x, multiplier, max_order)?;
    let out = emit(&render::report(&rep), format);
    Ok(with_reasons(out, rep.classification.kind, &rep.classification.reasons))
}

pub fn classify(x: &ChernCharacter, max_order: u32, format: Format) -> Result<Outcome> {
    let c = classify_character(x, max_order)?;
    let v = json!({
        "input": render::input_character(x),
        "kind": c.kind.as_str(),
        "reasons": c.reasons,
    });
    Ok(with_reasons(emit(&v, format), c.kind, &c.reasons))
}

pub fn slope(given: &SlopeInput, max_order: u32, format: Format) -> Result<Outcome> {
    let s = input::exceptional_slope(given, max_order)?;
    Ok(Outcome::ok(emit(&render::slope(&s), format)))
}

/// Expansions of the slope after reduction to `[0, 1/2]`. `odd` adds the
/// odd expansion, `period` the period structure of the even expansion.
pub fn cfrac(given: &SlopeInput, max_order: u32, odd: bool, period: bool, format: Format) -> Result<Outcome> {
    let g = input::exceptional_slope(given, max_order)?;
    let n = normalize(&g);
    let r = &n.reduced;
    let even = even_expansion(r)?;
    let word = r.lr_word();
    let mut m = Map::new();
    m.insert("input_slope".into(), render::rational(g.slope()));
    m.insert(
        "normalization".into(),
        json!({
            "shift": render::bigint(&n.shift),
            "negated": n.negated,
            "reduced": render::rational(r.slope()),
        }),
    );
    m.insert("slope".into(), render::rational(r.slope()));
    m.insert("lr_word".into(), Value::String(format_word_or_empty(&word)));
    m.insert("even".into(), Value::String(even.to_string()));
    if odd {
        let o = match odd_expansion(r) {
            Ok(w) => Value::String(w.to_string()),
            Err(_) => Value::Null,
        };
        m.insert("odd".into(), o);
    }
    m.insert("palindrome".into(), Value::Bool(even.is_palindrome()));
    if period {
        match period_structure(&word) {
            Ok(ps) => {
                m.insert("period_block".into(), Value::String(ps.block.to_string()));
                m.insert("period_exponent".into(), json!(ps.exponent));
                m.insert("tail".into(), Value::String(ps.tail.to_string()));
            }
            Err(e) => {
                m.insert("period_block".into(), Value::Null);
                m.insert("period_exponent".into(), Value::Null);
                m.insert("tail".into(), Value::Null);
                m.insert("period_note".into(), Value::String(e.to_string()));
            }
        }
    }
    Ok(Outcome::ok(emit(&Value::Object(m), format)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CurveFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CurveTable {
    #[default]
    Samples,
    Intervals,
}

#[derive(Clone, Debug)]
pub struct CurveRequest {
    pub lo: Rational,
    pub hi: Rational,
    pub samples: usize,
    /// Order bound for the interval table.
    pub table_order: u32,
    /// Order bound for the descent at each sample.
    pub max_order: u32,
    pub format: CurveFormat,
    pub table: CurveTable,
    pub approx: Option<u32>,
    pub overlay: Option<ChernCharacter>,
}

struct Sample {
    mu: Rational,
    found: std::result::Result<(ExceptionalSlope, Rational), String>,
}

const APPROX_NOTE: &str = "decimal columns are rounded and non-authoritative";

/// `Q_ξ`: `Δ = P(μ + μ(ξ)) − Δ(ξ)`.
struct Parabola {
    xi: ChernCharacter,
    mu: Rational,
    delta: Rational,
}

impl Parabola {
    fn new(xi: &ChernCharacter) -> Result<Self> {
        if !xi.ch0.is_positive() {
            return Err(CliError::usage("the parabola overlay needs positive rank"));
        }
        let sd = xi.slope_disc()?;
        Ok(Parabola {
            xi: xi.clone(),
            mu: sd.mu,
            delta: sd.delta,
        })
    }

    fn at(&self, mu: &Rational) -> Rational {
        hilbert_poly(&(mu + &self.mu)) - &self.delta
    }

    fn describe(&self) -> Value {
        json!({
            "character": render::character(&self.xi),
            "vertex": {
                "mu": render::rational(&(int(-3) / int(2) - &self.mu)),
                "delta": render::rational(&(int(-1) / int(8) - &self.delta)),
            },
            "translation": {
                "mu": render::rational(&-&self.mu),
                "delta": render::rational(&-&self.delta),
            },
        })
    }
}

fn sample_at(mu: Rational, max_order: u32) -> Sample {
    let found = find_interval(&QuadraticNumber::from_rational(mu.clone()), max_order)
        .map(|a| {
            let d = delta_on_interval(&a, &mu);
            (a, d)
        })
        .map_err(|e| e.to_string());
    Sample { mu, found }
}

pub fn curve(req: &CurveRequest) -> Result<Outcome> {
    if req.lo >= req.hi {
        return Err(CliError::usage(format!("need lo < hi, got {} and {}", req.lo, req.hi)));
    }
    if req.samples < 2 {
        return Err(CliError::usage("need at least 2 samples"));
    }
    let parabola = req.overlay.as_ref().map(Parabola::new).transpose()?;
    let step = (&req.hi - &req.lo) / int((req.samples - 1) as i64);
    let samples: Vec<Sample> = (0..req.samples)
        .map(|i| sample_at(&req.lo + &step * int(i as i64), req.max_order))
        .collect();
    let intervals = enumerate_slopes(&req.lo, &req.hi, req.table_order)?;
    let flagged = samples.iter().filter(|s| s.found.is_err()).count();
    let stderr = if flagged > 0 {
        format!("{flagged} sample(s) flagged: descent exceeded max order {}\n", req.max_order)
    } else {
        String::new()
    };
    let stdout = match req.format {
        CurveFormat::Json => curve_json(req, &samples, &intervals, parabola.as_ref()),
        CurveFormat::Csv => match req.table {
            CurveTable::Samples => samples_csv(req, &samples, parabola.as_ref())?,
            CurveTable::Intervals => intervals_csv(req, &intervals)?,
        },
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: 0,
    })
}

fn interval_row(a: &ExceptionalSlope) -> [String; 8] {
    [
        a.slope().to_string(),
        a.rank().to_string(),
        a.discriminant().to_string(),
        a.order().to_string(),
        a.dyadic().to_string(),
        a.halfwidth().to_string(),
        a.left_endpoint().to_string(),
        a.right_endpoint().to_string(),
    ]
}

const INTERVAL_HEADER: [&str; 8] = [
    "alpha", "rank", "discriminant", "order", "dyadic", "x_alpha", "left", "right",
];

fn curve_json(
    req: &CurveRequest,
    samples: &[Sample],
    intervals: &[ExceptionalSlope],
    parabola: Option<&Parabola>,
) -> String {
    let samples: Vec<Value> = samples
        .iter()
        .map(|s| {
            let mut m = Map::new();
            m.insert("mu".into(), render::rational(&s.mu));
            match &s.found {
                Ok((a, d)) => {
                    m.insert("delta".into(), render::rational(d));
                    m.insert("alpha".into(), render::rational(a.slope()));
                    m.insert("status".into(), Value::String("ok".into()));
                    if let Some(n) = req.approx {
                        m.insert("delta_approx".into(), Value::String(render::decimal(d, n)));
                    }
                }
                Err(e) => {
                    m.insert("delta".into(), Value::Null);
                    m.insert("alpha".into(), Value::Null);
                    m.insert("status".into(), Value::String(format!("flagged: {e}")));
                    if req.approx.is_some() {
                        m.insert("delta_approx".into(), Value::Null);
                    }
                }
            }
            if let Some(p) = parabola {
                m.insert("q_xi".into(), render::rational(&p.at(&s.mu)));
            }
            Value::Object(m)
        })
        .collect();
    let intervals: Vec<Value> = intervals
        .iter()
        .map(|a| {
            let row = interval_row(a);
            let mut m = Map::new();
            for (k, v) in INTERVAL_HEADER.iter().zip(row) {
                let v = if *k == "order" {
                    json!(a.order())
                } else {
                    Value::String(v)
                };
                m.insert((*k).into(), v);
            }
            Value::Object(m)
        })
        .collect();
    let mut v = Map::new();
    v.insert(
        "range".into(),
        json!({ "lo": render::rational(&req.lo), "hi": render::rational(&req.hi) }),
    );
    v.insert("max_order".into(), json!(req.max_order));
    v.insert("table_order".into(), json!(req.table_order));
    v.insert("samples".into(), Value::Array(samples));
    v.insert("intervals".into(), Value::Array(intervals));
    v.insert("parabola".into(), parabola.map_or(Value::Null, Parabola::describe));
    if req.approx.is_some() {
        v.insert("approx_note".into(), Value::String(APPROX_NOTE.into()));
    }
    emit(&Value::Object(v), Format::Json)
}

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    rows(&mut w).map_err(|e| CliError::usage(format!("csv: {e}")))?;
    let bytes = w.into_inner().map_err(|e| CliError::usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn samples_csv(req: &CurveRequest, samples: &[Sample], parabola: Option<&Parabola>) -> Result<String> {
    csv_string(|w| {
        let mut header = vec!["mu".to_string(), "delta".into(), "alpha".into(), "status".into()];
        if parabola.is_some() {
            header.push("q_xi".into());
        }
        if let Some(n) = req.approx {
            header.push(format!("delta_approx_{n}dp_nonauthoritative"));
        }
        w.write_record(&header)?;
        for s in samples {
            let mut row = vec![s.mu.to_string()];
            match &s.found {
                Ok((a, d)) => {
                    row.extend([d.to_string(), a.slope().to_string(), "ok".into()]);
                }
                Err(e) => row.extend([String::new(), String::new(), format!("flagged: {e}")]),
            }
            if let Some(p) = parabola {
                row.push(p.at(&s.mu).to_string());
            }
            if let Some(n) = req.approx {
                row.push(match &s.found {
                    Ok((_, d)) => render::decimal(d, n),
                    Err(_) => String::new(),
                });
            }
            w.write_record(&row)?;
        }
        Ok(())
    })
}

fn intervals_csv(req: &CurveRequest, intervals: &[ExceptionalSlope]) -> Result<String> {
    csv_string(|w| {
        let mut header: Vec<String> = INTERVAL_HEADER.iter().map(|s| s.to_string()).collect();
        if let Some(n) = req.approx {
            header.push(format!("alpha_approx_{n}dp_nonauthoritative"));
        }
        w.write_record(&header)?;
        for a in intervals {
            let mut row = interval_row(a).to_vec();
            if let Some(n) = req.approx {
                row.push(render::decimal(a.slope(), n));
            }
            w.write_record(&row)?;
        }
        Ok(())
    })
}

fn batch_record(line_no: usize, line: &str, multiplier: u32, max_order: u32) -> String {
    let result = input::character_json(line)
        .and_then(|x| Ok(cone_report_with(&x, multiplier, max_order)?));
    let v = match result {
        Ok(rep) if rep.classification.kind == Kind::Invalid => json!({
            "line": line_no,
            "error": rep.classification.reasons.join("; "),
            "kind": Kind::Invalid.as_str(),
        }),
        Ok(rep) => json!({ "line": line_no, "report": render::report(&rep) }),
        Err(e) => json!({ "line": line_no, "error": e.to_string() }),
    };
    let mut s = serde_json::to_string(&v).expect("values are serializable");
    s.push('\n');
    s
}

/// One record per non-blank line, in input order. Lines are split into
/// contiguous chunks evaluated on separate threads.
pub fn batch(text: &str, multiplier: u32, max_order: u32) -> Outcome {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(lines.len())
        .max(1);
    let chunk = lines.len().div_ceil(workers).max(1);
    let stdout = thread::scope(|s| {
        let handles: Vec<_> = lines
            .chunks(chunk)
            .map(|c| {
                s.spawn(move || {
                    c.iter()
                        .map(|(n, l)| batch_record(*n, l, multiplier, max_order))
                        .collect::<String>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("batch worker panicked"))
            .collect::<String>()
    });
    Outcome::ok(stdout)
}
