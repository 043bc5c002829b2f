use effcone_core::arith::{int, rat, QuadraticNumber, Rational};
use effcone_core::cfrac::{lr_to_slope, period_structure, LRWord};
use effcone_core::cone::{
    classify, cone_report, corresponding_slope, intersection_slope_zero, CaseSign, Fibration,
    Kind, SecondaryMode,
};
use effcone_core::exceptional::{delta_curve, epsilon, find_interval, DEFAULT_MAX_ORDER};
use effcone_core::kgroup::{ChernCharacter, SlopeDisc};
use num_bigint::{BigInt, BigUint};

const M: u32 = DEFAULT_MAX_ORDER;

fn rmd(r: i64, mu: Rational, delta: Rational) -> ChernCharacter {
    ChernCharacter::from_rmd(&int(r), &mu, &delta).unwrap()
}

#[test]
fn negative_case_report() {
    let x = rmd(3, rat(2, 3), rat(23, 9));
    let rep = cone_report(&x, 1).unwrap();
    assert_eq!(rep.dimension, Some(BigInt::from(38)));
    let p = rep.primary.unwrap();
    assert_eq!(p.invariants.case_sign, CaseSign::Negative);
    assert_eq!(p.invariants.point, SlopeDisc::new(rat(4, 11), rat(63, 121)));
    assert_eq!(p.extremal.character, ChernCharacter::new(int(11), int(4), int(-5)));
    let res = p.resolution.unwrap();
    let triad: Vec<_> = res.triad.iter().map(|s| s.slope().clone()).collect();
    assert_eq!(triad, vec![int(-3), int(-2), int(-1)]);
    let kr = p.kronecker.unwrap();
    assert_eq!((kr.n, kr.expected_dimension), (BigInt::from(3), BigInt::from(6)));
    assert_eq!(kr.fibration, Fibration::PositiveDimFibers);
    assert!(p.movable_edge_coincides);
}

#[test]
fn rank_two_remark_character() {
    let x = rmd(2, int(0), rat(11, 2));
    assert_eq!(classify(&x, M).unwrap().kind, Kind::PicardRank2);
    assert_eq!(intersection_slope_zero(&x).unwrap(), int(2).into());
    assert_eq!(*corresponding_slope(&x, M).unwrap().slope(), int(2));
    let rep = cone_report(&x, 1).unwrap();
    assert_eq!(rep.dimension, Some(BigInt::from(41)));
    let p = rep.primary.unwrap();
    assert_eq!(p.invariants.point, SlopeDisc::new(rat(9, 4), rat(45, 32)));
    assert!(!p.invariants.on_delta_curve);
    // (1, 9/4, 45/32) is orthogonal to both ξ and ξ_{-2}
    let z = p.invariants.point.to_character();
    assert_eq!(x.euler_pairing(&z), int(0));
    assert_eq!(z.euler_pairing(&ChernCharacter::line_bundle(-2)), int(0));
    // 21/10 sits on the δ-curve and on Q_ξ
    let mu = rat(21, 10);
    let delta = effcone_core::kgroup::hilbert_poly(&mu) - rat(11, 2);
    assert_eq!(delta, delta_curve(&mu, M).unwrap());
    let s = rep.secondary.unwrap();
    assert_eq!(s.mode, SecondaryMode::Rank2SingularLocus);
    assert_eq!(
        s.extremal.unwrap().character,
        ChernCharacter::new(int(-2), int(3), rat(-27, 2))
    );
}

#[test]
fn serre_dual_corresponding_slope() {
    let d = rmd(3, rat(2, 3), rat(17, 9)).serre_dual();
    assert_eq!(d, ChernCharacter::new(int(3), int(-11), rat(29, 2)));
    assert_eq!(*corresponding_slope(&d, M).unwrap().slope(), rat(22, 5));
    let mu = QuadraticNumber::new(rat(13, 6), rat(1, 6), BigUint::from(181u32));
    assert_eq!(*find_interval(&mu, M).unwrap().slope(), rat(22, 5));
}

#[test]
fn rank_zero_reports() {
    let x = ChernCharacter::from_rank_zero(&int(4), &int(1));
    assert_eq!(x, ChernCharacter::new(int(0), int(4), int(-5)));
    let rep = cone_report(&x, 1).unwrap();
    assert_eq!(rep.dimension, None);
    let s = rep.secondary.unwrap();
    assert_eq!(s.mode, SecondaryMode::Rank0SupportMap);
    let bad = ChernCharacter::from_rank_zero(&int(2), &int(1));
    let c = classify(&bad, M).unwrap();
    assert_eq!(c.kind, Kind::Invalid);
    assert!(c.reasons[0].contains("d ≥ 3 required"));
}

#[test]
fn slope_table_rows() {
    let e = |s: &str| epsilon(&s.parse().unwrap()).slope().clone();
    assert_eq!(e("1/8"), rat(5, 13));
    assert_eq!(e("3/16"), rat(75, 194));
    assert_eq!(e("7/16"), rat(70, 169));
}

#[test]
fn period_examples() {
    let w: LRWord = "RLLLRR".parse().unwrap();
    let ps = period_structure(&w).unwrap();
    assert_eq!(ps.block.to_string(), "211112");
    assert_eq!(ps.exponent, 3);
    assert!(ps.tail.is_empty());
    assert_eq!(*lr_to_slope(&"RLR".parse().unwrap()).slope(), rat(12, 29));
}

#[test]
fn multiplier_scales_rank() {
    let x = rmd(3, rat(2, 3), rat(17, 9));
    let rep = cone_report(&x, 4).unwrap();
    let c = rep.primary.unwrap().extremal.character;
    assert_eq!(c, ChernCharacter::new(int(4), int(4), int(-10)));
}
