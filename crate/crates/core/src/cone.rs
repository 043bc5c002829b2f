//! Classification of characters and the effective cone pipeline.
//!
//! For a character `ξ` with two-dimensional Picard group the primary edge
//! of the effective cone is spanned by an orthogonal character `ξ+`. It is
//! found from the larger root `μ0` of `Q_ξ ∩ {Δ = 1/2}`, the exceptional
//! slope `γ` with `μ0 ∈ I_γ`, and the sign of `(ξ, ξ_γ)`. The secondary
//! edge comes from the Serre dual for `r ≥ 3` and from explicit rules for
//! smaller rank.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, is_integer, lcm, rat, sqrt_exact, QuadraticNumber, Rational};
use crate::error::{Error, Result};
use crate::exceptional::{
    delta_curve, dot, find_interval, parents, ExceptionalSlope, DEFAULT_MAX_ORDER,
};
use crate::kgroup::{hilbert_poly, ChernCharacter, HalfPlane, SlopeDisc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Exceptional,
    HeightZero,
    PicardRank2,
    RankZeroPicardRank2,
    Invalid,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Exceptional => "EXCEPTIONAL",
            Kind::HeightZero => "HEIGHT_ZERO",
            Kind::PicardRank2 => "PICARD_RANK_2",
            Kind::RankZeroPicardRank2 => "RANK_ZERO_PICARD_RANK_2",
            Kind::Invalid => "INVALID",
        }
    }

    /// Kinds whose moduli space has Picard rank two.
    pub fn has_cone(self) -> bool {
        matches!(self, Kind::PicardRank2 | Kind::RankZeroPicardRank2)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub reasons: Vec<String>,
}

impl Classification {
    fn new(kind: Kind, reason: impl Into<String>) -> Self {
        Classification {
            kind,
            reasons: vec![reason.into()],
        }
    }
}

fn integrality_failures(x: &ChernCharacter) -> Vec<String> {
    let mut out = Vec::new();
    if !is_integer(&x.ch0) {
        out.push(format!("rank {} is not an integer", x.ch0));
    }
    if !is_integer(&x.ch1) {
        out.push(format!("c1 = {} is not an integer", x.ch1));
    }
    let chi = x.euler_chi();
    if !is_integer(&chi) {
        out.push(format!("chi = {chi} is not an integer"));
    }
    out
}

pub fn classify(x: &ChernCharacter, max_order: u32) -> Result<Classification> {
    if x.ch0.is_negative() {
        return Ok(Classification::new(Kind::Invalid, "rank is negative"));
    }
    let failures = integrality_failures(x);
    if !failures.is_empty() {
        return Ok(Classification {
            kind: Kind::Invalid,
            reasons: failures,
        });
    }
    if x.ch0.is_zero() {
        let d = &x.ch1;
        return Ok(if *d >= int(3) {
            Classification::new(
                Kind::RankZeroPicardRank2,
                format!("rank zero with d = {d} ≥ 3 and chi = {}", x.euler_chi()),
            )
        } else {
            Classification::new(Kind::Invalid, format!("d ≥ 3 required for rank zero, got d = {d}"))
        });
    }
    let sd = x.slope_disc()?;
    if let Some(a) = ExceptionalSlope::from_rational(&sd.mu, max_order)? {
        if sd.delta == *a.discriminant() {
            let k = &x.ch0 / Rational::from_integer(a.rank().clone());
            return Ok(Classification::new(
                Kind::Exceptional,
                format!("{k} copies of the exceptional character of slope {}; M is a point", sd.mu),
            ));
        }
    }
    let delta = delta_curve(&sd.mu, max_order)?;
    Ok(match sd.delta.cmp(&delta) {
        Ordering::Less => Classification::new(
            Kind::Invalid,
            format!("Delta = {} < delta(mu) = {delta}; no semistable sheaves", sd.delta),
        ),
        Ordering::Equal => Classification::new(
            Kind::HeightZero,
            format!("Delta = delta(mu) = {delta}; M has Picard rank one"),
        ),
        Ordering::Greater => Classification::new(
            Kind::PicardRank2,
            format!("Delta = {} > delta(mu) = {delta}", sd.delta),
        ),
    })
}

/// `μ0 = (−3 − 2μ + √(5 + 8Δ))/2`, or `−χ/d` in rank zero.
pub fn intersection_slope_zero(x: &ChernCharacter) -> Result<QuadraticNumber> {
    if x.ch0.is_zero() {
        if x.ch1.is_zero() {
            return Err(Error::domain("rank zero character with d = 0"));
        }
        return Ok(QuadraticNumber::from_rational(-x.euler_chi() / &x.ch1));
    }
    let sd = x.slope_disc()?;
    let rad = int(5) + int(8) * &sd.delta;
    if rad.is_negative() {
        return Err(Error::internal(format!("5 + 8 Delta = {rad} < 0")));
    }
    Ok(sqrt_exact(&rad)?
        .add_rational(&(int(-3) - int(2) * &sd.mu))
        .scale(&rat(1, 2)))
}

/// The larger root of `Q_ξ ∩ {Δ = 1/2}` for the Serre dual, negated:
/// `μ0− = (−3 − 2μ − √(5 + 8Δ))/2`.
pub fn intersection_slope_zero_minus(x: &ChernCharacter) -> Result<QuadraticNumber> {
    let sd = x.slope_disc()?;
    let rad = int(5) + int(8) * &sd.delta;
    Ok(sqrt_exact(&rad)?
        .scale(&int(-1))
        .add_rational(&(int(-3) - int(2) * &sd.mu))
        .scale(&rat(1, 2)))
}

pub fn corresponding_slope(x: &ChernCharacter, max_order: u32) -> Result<ExceptionalSlope> {
    find_interval(&intersection_slope_zero(x)?, max_order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseSign {
    Positive,
    Zero,
    Negative,
}

impl CaseSign {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseSign::Positive => "POSITIVE",
            CaseSign::Zero => "ZERO",
            CaseSign::Negative => "NEGATIVE",
        }
    }

    fn of(x: &Rational) -> Self {
        if x.is_positive() {
            CaseSign::Positive
        } else if x.is_negative() {
            CaseSign::Negative
        } else {
            CaseSign::Zero
        }
    }
}

impl fmt::Display for CaseSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalInvariants {
    pub point: SlopeDisc,
    pub case_sign: CaseSign,
    pub on_delta_curve: bool,
    pub corresponding_slope: ExceptionalSlope,
    /// `μ0`, whose interval gives the corresponding slope.
    pub mu0: QuadraticNumber,
}

/// Solves `P(μ + s) − P(μ + t) = c` for `μ`.
fn translate_intersection(s: &Rational, t: &Rational, c: &Rational) -> Result<Rational> {
    let diff = s - t;
    if diff.is_zero() {
        return Err(Error::internal("parabolas coincide; no unique intersection"));
    }
    Ok((int(2) * c / diff - s - t - int(3)) / int(2))
}

pub fn orthogonal_invariants(x: &ChernCharacter, max_order: u32) -> Result<OrthogonalInvariants> {
    let mu0 = intersection_slope_zero(x)?;
    let g = find_interval(&mu0, max_order)?;
    let case_sign = CaseSign::of(&x.euler_pairing(&g.to_character()));
    let gs = g.slope().clone();
    let gd = g.discriminant().clone();
    let point = if x.ch0.is_zero() {
        let mu = mu0.to_rational().expect("rank zero slope is rational");
        match case_sign {
            CaseSign::Positive => SlopeDisc::new(mu.clone(), hilbert_poly(&(&mu - &gs)) - &gd),
            CaseSign::Negative => {
                SlopeDisc::new(mu.clone(), hilbert_poly(&(&mu - &gs - int(3))) - &gd)
            }
            CaseSign::Zero => SlopeDisc::new(gs.clone(), gd.clone()),
        }
    } else {
        let sd = x.slope_disc()?;
        let t = match case_sign {
            CaseSign::Positive => Some(-&gs),
            CaseSign::Negative => Some(-&gs - int(3)),
            CaseSign::Zero => None,
        };
        match t {
            None => SlopeDisc::new(gs.clone(), gd.clone()),
            Some(t) => {
                let mu = translate_intersection(&sd.mu, &t, &(&sd.delta - &gd))?;
                let delta = hilbert_poly(&(&sd.mu + &mu)) - &sd.delta;
                SlopeDisc::new(mu, delta)
            }
        }
    };
    let on_delta_curve = case_sign != CaseSign::Positive || point.mu <= gs;
    let inv = OrthogonalInvariants {
        point,
        case_sign,
        on_delta_curve,
        corresponding_slope: g,
        mu0,
    };
    let z = inv.point.to_character();
    if !x.euler_pairing(&z).is_zero() {
        return Err(Error::internal(format!(
            "orthogonal point ({}, {}) does not pair to zero",
            inv.point.mu, inv.point.delta
        )));
    }
    Ok(inv)
}

/// Smallest positive `r` with `rμ` and `r(P(μ) − Δ)` integral.
pub fn minimal_integral_rank(p: &SlopeDisc) -> BigInt {
    let chi = hilbert_poly(&p.mu) - &p.delta;
    lcm(p.mu.denom(), chi.denom())
}

pub fn orthogonal_character(
    inv: &OrthogonalInvariants,
    multiplier: u32,
    max_order: u32,
) -> Result<ChernCharacter> {
    if multiplier == 0 {
        return Err(Error::domain("multiplier must be positive"));
    }
    let p = &inv.point;
    let exceptional = ExceptionalSlope::from_rational(&p.mu, max_order)?
        .is_some_and(|a| *a.discriminant() == p.delta);
    if !exceptional && p.delta < delta_curve(&p.mu, max_order)? {
        return Err(Error::internal(format!(
            "orthogonal point ({}, {}) lies below the delta curve",
            p.mu, p.delta
        )));
    }
    let r = minimal_integral_rank(p) * BigInt::from(multiplier);
    ChernCharacter::from_rmd(&Rational::from_integer(r), &p.mu, &p.delta)
}

/// Exceptional bundle of slope `s` as a character.
fn e(s: &ExceptionalSlope) -> ChernCharacter {
    s.to_character()
}

/// `E_{−s}` and `E_{−s−3}`.
fn minus(s: &ExceptionalSlope) -> ExceptionalSlope {
    s.neg()
}

fn minus3(s: &ExceptionalSlope) -> ExceptionalSlope {
    s.neg().translate(&BigInt::from(-3))
}

/// Display name: `O(n)` for line bundles, `E_{p/q}` otherwise.
pub fn bundle_name(s: &ExceptionalSlope) -> String {
    if s.is_integer() {
        if s.slope().is_zero() {
            String::from("O")
        } else {
            format!("O({})", s.slope())
        }
    } else {
        format!("E_{{{}}}", s.slope())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    pub case_sign: CaseSign,
    pub alpha: ExceptionalSlope,
    pub beta: ExceptionalSlope,
    /// The bundles in the order listed for the case; slopes are negated.
    pub triad: Vec<ExceptionalSlope>,
    pub m1: BigInt,
    pub m2: BigInt,
    pub m3: Option<BigInt>,
    pub shape: String,
}

impl ResolutionData {
    pub fn triad_characters(&self) -> Vec<ChernCharacter> {
        self.triad.iter().map(e).collect()
    }
}

fn as_count(x: Rational, what: &str) -> Result<BigInt> {
    if !is_integer(&x) || x.is_negative() {
        return Err(Error::internal(format!("{what} = {x} is not a nonnegative integer")));
    }
    Ok(x.to_integer())
}

fn power(name: String, m: &BigInt) -> String {
    format!("{name}^{m}")
}

pub fn resolution(x: &ChernCharacter, inv: &OrthogonalInvariants) -> Result<ResolutionData> {
    if !x.ch0.is_positive() {
        return Err(Error::domain("resolutions need positive rank"));
    }
    let g = &inv.corresponding_slope;
    let (a, b) = parents(g);
    let chi = |s: &ExceptionalSlope| x.tensor(&e(s)).euler_chi();
    let (triad, m1, m2, m3) = match inv.case_sign {
        CaseSign::Positive => {
            let aag = dot(&a, g)?;
            (
                vec![minus3(&a), minus(&b), minus(g)],
                -chi(&a),
                -chi(&aag),
                Some(chi(g)),
            )
        }
        CaseSign::Negative => {
            let gb = dot(g, &b)?;
            (
                vec![minus3(g), minus3(&a), minus(&b)],
                chi(&gb),
                chi(&b),
                Some(-chi(g)),
            )
        }
        CaseSign::Zero => (vec![minus3(&a), minus(&b)], -chi(&a), chi(&b), None),
    };
    let m1 = as_count(m1, "m1")?;
    let m2 = as_count(m2, "m2")?;
    let m3 = m3.map(|m| as_count(m, "m3")).transpose()?;
    let k = |n: &BigInt| Rational::from_integer(n.clone());
    let ea3 = e(&minus3(&a));
    let eb = e(&minus(&b));
    let mut rebuilt = &(&eb * &k(&m2)) - &(&ea3 * &k(&m1));
    let shape = match (inv.case_sign, &m3) {
        (CaseSign::Positive, Some(m3)) => {
            rebuilt = &rebuilt + &(&e(&minus(g)) * &k(m3));
            format!(
                "0 -> {} -> {} + {} -> U -> 0",
                power(bundle_name(&minus3(&a)), &m1),
                power(bundle_name(&minus(&b)), &m2),
                power(bundle_name(&minus(g)), m3)
            )
        }
        (CaseSign::Negative, Some(m3)) => {
            rebuilt = &rebuilt - &(&e(&minus3(g)) * &k(m3));
            format!(
                "0 -> {} + {} -> {} -> U -> 0",
                power(bundle_name(&minus3(g)), m3),
                power(bundle_name(&minus3(&a)), &m1),
                power(bundle_name(&minus(&b)), &m2)
            )
        }
        _ => format!(
            "0 -> {} -> {} -> U -> 0",
            power(bundle_name(&minus3(&a)), &m1),
            power(bundle_name(&minus(&b)), &m2)
        ),
    };
    if rebuilt != *x {
        return Err(Error::internal(format!(
            "resolution rebuilds {rebuilt}, expected {x}"
        )));
    }
    Ok(ResolutionData {
        case_sign: inv.case_sign,
        alpha: a,
        beta: b,
        triad,
        m1,
        m2,
        m3,
        shape,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fibration {
    Birational,
    PositiveDimFibers,
}

impl Fibration {
    pub fn as_str(self) -> &'static str {
        match self {
            Fibration::Birational => "BIRATIONAL",
            Fibration::PositiveDimFibers => "POSITIVE_DIM_FIBERS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerData {
    pub n: BigInt,
    /// `(b, a) = (m1, m2)`.
    pub dim_vector: (BigInt, BigInt),
    pub expected_dimension: BigInt,
    pub fibration: Fibration,
}

pub fn kronecker_data(x: &ChernCharacter, res: &ResolutionData) -> Result<KroneckerData> {
    let ea3 = e(&minus3(&res.alpha));
    let eb = e(&minus(&res.beta));
    let n = ChernCharacter::chi_pair(&ea3, &eb);
    if !is_integer(&n) || !n.is_positive() {
        return Err(Error::internal(format!("hom count N = {n} is not a positive integer")));
    }
    let n = n.to_integer();
    let (b, a) = (res.m1.clone(), res.m2.clone());
    let edim = &a * &b * &n - &a * &a - &b * &b + BigInt::one();
    let fibration = if res.case_sign == CaseSign::Zero {
        Fibration::Birational
    } else {
        Fibration::PositiveDimFibers
    };
    let dim = x.moduli_dimension()?;
    let ok = match fibration {
        Fibration::Birational => dim == edim,
        Fibration::PositiveDimFibers => dim > edim,
    };
    if !ok {
        return Err(Error::internal(format!(
            "dim M = {dim} and edim Kr = {edim} violate the {} relation",
            fibration.as_str()
        )));
    }
    Ok(KroneckerData {
        n,
        dim_vector: (b, a),
        expected_dimension: edim,
        fibration,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub center_s: Rational,
    pub radius: QuadraticNumber,
    /// `ρ > √5/2`.
    pub exceeds_sqrt5_over_2: bool,
}

pub fn bridgeland_wall(point: &SlopeDisc) -> Result<Wall> {
    let r2 = int(2) * &point.delta + rat(1, 4);
    let radius = sqrt_exact(&r2)?;
    let half_sqrt5 = sqrt_exact(&rat(5, 4))?;
    Ok(Wall {
        center_s: -&point.mu - rat(3, 2),
        exceeds_sqrt5_over_2: radius > half_sqrt5,
        radius,
    })
}

/// An extremal ray in three pictures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub character: ChernCharacter,
    pub point: SlopeDisc,
    /// Coordinates in the basis `(ζ0, ζ1)` of `ξ⊥`, when `r(ξ) > 0`.
    pub perp_coordinates: Option<(Rational, Rational)>,
}

impl Ray {
    fn new(x: &ChernCharacter, character: ChernCharacter) -> Result<Ray> {
        let point = character.slope_disc()?;
        let perp_coordinates = if x.ch0.is_positive() {
            Some(x.perp_coordinates(&character)?)
        } else {
            None
        };
        Ok(Ray {
            character,
            point,
            perp_coordinates,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryEdge {
    pub invariants: OrthogonalInvariants,
    pub extremal: Ray,
    /// Absent in rank zero.
    pub resolution: Option<ResolutionData>,
    pub kronecker: Option<KroneckerData>,
    pub wall: Wall,
    pub movable_edge_coincides: bool,
}

pub fn primary_edge(x: &ChernCharacter, multiplier: u32, max_order: u32) -> Result<PrimaryEdge> {
    let inv = orthogonal_invariants(x, max_order)?;
    let character = orthogonal_character(&inv, multiplier, max_order)?;
    let extremal = Ray::new(x, character)?;
    let (resolution, kronecker) = if x.ch0.is_positive() {
        let res = resolution(x, &inv)?;
        let kr = kronecker_data(x, &res)?;
        (Some(res), Some(kr))
    } else {
        (None, None)
    };
    Ok(PrimaryEdge {
        wall: bridgeland_wall(&inv.point)?,
        movable_edge_coincides: inv.case_sign != CaseSign::Zero,
        invariants: inv,
        extremal,
        resolution,
        kronecker,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SecondaryMode {
    SerreDual,
    Rank2SingularLocus,
    Rank1HilbertChow,
    Rank0SupportMap,
}

impl SecondaryMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SecondaryMode::SerreDual => "SERRE_DUAL",
            SecondaryMode::Rank2SingularLocus => "RANK2_SINGULAR_LOCUS",
            SecondaryMode::Rank1HilbertChow => "RANK1_HILBERT_CHOW",
            SecondaryMode::Rank0SupportMap => "RANK0_SUPPORT_MAP",
        }
    }
}

pub const HILBERT_CHOW_DESCRIPTOR: &str = "exceptional divisor B of the Hilbert-Chow morphism";
pub const SUPPORT_MAP_DESCRIPTOR: &str = "pullback of O(1) under the support map";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondaryEdge {
    pub mode: SecondaryMode,
    /// `(μ−, Δ−)` when a character is computed.
    pub point: Option<SlopeDisc>,
    /// `−γ^D` for the Serre dual's corresponding slope `γ^D`.
    pub corresponding_slope: Option<Rational>,
    pub extremal: Option<Ray>,
    /// The primary edge of the Serre dual, for `r ≥ 3`.
    pub dual: Option<Box<PrimaryEdge>>,
    pub descriptor: Option<String>,
}

pub fn secondary_edge(x: &ChernCharacter, multiplier: u32, max_order: u32) -> Result<SecondaryEdge> {
    if x.ch0.is_zero() {
        return Ok(SecondaryEdge {
            mode: SecondaryMode::Rank0SupportMap,
            point: None,
            corresponding_slope: None,
            extremal: None,
            dual: None,
            descriptor: Some(String::from(SUPPORT_MAP_DESCRIPTOR)),
        });
    }
    if x.ch0 == int(1) {
        return Ok(SecondaryEdge {
            mode: SecondaryMode::Rank1HilbertChow,
            point: None,
            corresponding_slope: None,
            extremal: None,
            dual: None,
            descriptor: Some(String::from(HILBERT_CHOW_DESCRIPTOR)),
        });
    }
    let sd = x.slope_disc()?;
    if x.ch0 == int(2) {
        let mu = rat(-3, 2) - &sd.mu;
        let delta = hilbert_poly(&rat(-3, 2)) - &sd.delta;
        let point = SlopeDisc::new(mu, delta);
        let r = Rational::from_integer(minimal_integral_rank(&point) * BigInt::from(multiplier));
        let zeta = -ChernCharacter::from_rmd(&r, &point.mu, &point.delta)?;
        return Ok(SecondaryEdge {
            mode: SecondaryMode::Rank2SingularLocus,
            extremal: Some(Ray::new(x, zeta)?),
            point: Some(point),
            corresponding_slope: None,
            dual: None,
            descriptor: None,
        });
    }
    let d = x.serre_dual();
    let dual = primary_edge(&d, multiplier, max_order)?;
    let p = &dual.invariants.point;
    let point = SlopeDisc::new(-&p.mu, p.delta.clone());
    let r = Rational::from_integer(minimal_integral_rank(&point) * BigInt::from(multiplier));
    let zeta = -ChernCharacter::from_rmd(&r, &point.mu, &point.delta)?;
    Ok(SecondaryEdge {
        mode: SecondaryMode::SerreDual,
        corresponding_slope: Some(-dual.invariants.corresponding_slope.slope()),
        extremal: Some(Ray::new(x, zeta)?),
        point: Some(point),
        dual: Some(Box::new(dual)),
        descriptor: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub input: ChernCharacter,
    pub classification: Classification,
    /// `None` in rank zero or when the character is invalid.
    pub dimension: Option<BigInt>,
    pub natural_classes: Option<(ChernCharacter, ChernCharacter)>,
    pub primary: Option<PrimaryEdge>,
    pub secondary: Option<SecondaryEdge>,
}

impl ConeReport {
    pub fn has_cone(&self) -> bool {
        self.primary.is_some()
    }
}

pub fn cone_report(x: &ChernCharacter, multiplier: u32) -> Result<ConeReport> {
    cone_report_with(x, multiplier, DEFAULT_MAX_ORDER)
}

pub fn cone_report_with(x: &ChernCharacter, multiplier: u32, max_order: u32) -> Result<ConeReport> {
    let classification = classify(x, max_order)?;
    let kind = classification.kind;
    let positive = x.ch0.is_positive();
    let dimension = match kind {
        Kind::PicardRank2 | Kind::HeightZero => Some(x.moduli_dimension()?),
        Kind::Exceptional => Some(BigInt::zero()),
        _ => None,
    };
    let natural_classes = if positive && kind != Kind::Invalid {
        Some(x.natural_classes()?)
    } else {
        None
    };
    let mut report = ConeReport {
        input: x.clone(),
        classification,
        dimension,
        natural_classes,
        primary: None,
        secondary: None,
    };
    if !kind.has_cone() {
        return Ok(report);
    }
    let primary = primary_edge(x, multiplier, max_order)?;
    let secondary = secondary_edge(x, multiplier, max_order)?;
    if positive {
        if x.half_plane(&primary.extremal.character)? != HalfPlane::Primary {
            return Err(Error::internal("primary ray is not in the primary half"));
        }
        if let Some(ray) = &secondary.extremal {
            if x.half_plane(&ray.character)? != HalfPlane::Secondary {
                return Err(Error::internal("secondary ray is not in the secondary half"));
            }
        }
    }
    report.primary = Some(primary);
    report.secondary = Some(secondary);
    Ok(report)
}
