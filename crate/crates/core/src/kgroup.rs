//! Chern characters on the projective plane.
//!
//! A character is stored as `(ch0, ch1, ch2)`. For nonzero rank the
//! `(r, μ, Δ)` view is available through [`ChernCharacter::slope_disc`].
//! The Euler characteristic is the Todd-class linear form
//! `ch0 + (3/2)·ch1 + ch2`, which needs no special case in rank zero.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{int, is_integer, rat, Rational};
use crate::error::{Error, Result};

/// Hilbert polynomial of the structure sheaf: `P(m) = (m² + 3m + 2)/2`.
pub fn hilbert_poly(m: &Rational) -> Rational {
    (m * m + m * int(3) + int(2)) / int(2)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    pub ch0: Rational,
    pub ch1: Rational,
    pub ch2: Rational,
}

/// A point `(μ, Δ)` of the slope–discriminant plane, i.e. the
/// rank-normalized character `(1, μ, Δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlopeDisc {
    pub mu: Rational,
    pub delta: Rational,
}

impl SlopeDisc {
    pub fn new(mu: Rational, delta: Rational) -> Self {
        SlopeDisc { mu, delta }
    }

    pub fn to_character(&self) -> ChernCharacter {
        ChernCharacter::from_rmd(&int(1), &self.mu, &self.delta)
            .expect("rank one is nonzero")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Primary,
    Secondary,
    OnBoundary,
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational) -> Self {
        ChernCharacter { ch0, ch1, ch2 }
    }

    pub fn from_ints(r: i64, c1: i64, ch2: Rational) -> Self {
        Self::new(int(r), int(c1), ch2)
    }

    /// Structure sheaf `O`.
    pub fn structure_sheaf() -> Self {
        Self::from_ints(1, 0, int(0))
    }

    /// Line bundle `O(n)`.
    pub fn line_bundle(n: i64) -> Self {
        let n = int(n);
        Self::new(int(1), n.clone(), &n * &n / int(2))
    }

    pub fn from_rmd(r: &Rational, mu: &Rational, delta: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::domain("rank must be nonzero to build a character from (r, mu, delta)"));
        }
        let ch1 = r * mu;
        let ch2 = r * (mu * mu / int(2) - delta);
        Ok(Self::new(r.clone(), ch1, ch2))
    }

    /// Rank zero sheaf with first Chern class `d` and Euler characteristic `chi`.
    pub fn from_rank_zero(d: &Rational, chi: &Rational) -> Self {
        let ch2 = chi - d * rat(3, 2);
        Self::new(Rational::zero(), d.clone(), ch2)
    }

    pub fn rank(&self) -> &Rational {
        &self.ch0
    }

    pub fn slope_disc(&self) -> Result<SlopeDisc> {
        if self.ch0.is_zero() {
            return Err(Error::RankZero);
        }
        let mu = &self.ch1 / &self.ch0;
        let delta = &mu * &mu / int(2) - &self.ch2 / &self.ch0;
        Ok(SlopeDisc { mu, delta })
    }

    pub fn slope(&self) -> Result<Rational> {
        self.slope_disc().map(|sd| sd.mu)
    }

    pub fn discriminant(&self) -> Result<Rational> {
        self.slope_disc().map(|sd| sd.delta)
    }

    pub fn euler_chi(&self) -> Rational {
        &self.ch0 + &self.ch1 * rat(3, 2) + &self.ch2
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(
            &self.ch0 * &other.ch0,
            &self.ch0 * &other.ch1 + &other.ch0 * &self.ch1,
            &self.ch0 * &other.ch2 + &self.ch1 * &other.ch1 + &other.ch0 * &self.ch2,
        )
    }

    pub fn dual(&self) -> Self {
        Self::new(self.ch0.clone(), -&self.ch1, self.ch2.clone())
    }

    /// Twist by `O(n)`.
    pub fn twist(&self, n: i64) -> Self {
        self.tensor(&Self::line_bundle(n))
    }

    /// The pairing `(ξ, ζ) = χ(ξ*, ζ) = χ(ξ ⊗ ζ)`. Symmetric.
    pub fn euler_pairing(&self, other: &Self) -> Rational {
        self.tensor(other).euler_chi()
    }

    /// `χ(E, F) = χ(E* ⊗ F)` for the ordered pair of sheaves.
    pub fn chi_pair(e: &Self, f: &Self) -> Rational {
        e.dual().tensor(f).euler_chi()
    }

    /// Serre dual `ξ* ⊗ O(−3)`.
    pub fn serre_dual(&self) -> Self {
        self.dual().twist(-3)
    }

    /// `r²(2Δ − 1) + 1`, the dimension of the moduli space.
    pub fn moduli_dimension(&self) -> Result<BigInt> {
        if !self.ch0.is_positive() {
            return Err(Error::domain("moduli dimension needs positive rank"));
        }
        let sd = self.slope_disc()?;
        let dim = &self.ch0 * &self.ch0 * (sd.delta * int(2) - int(1)) + int(1);
        if !is_integer(&dim) {
            return Err(Error::internal(alloc::format!(
                "moduli dimension {dim} is not an integer"
            )));
        }
        Ok(dim.to_integer())
    }

    /// The classes `ζ0 = (r, 0, −χ)` and `ζ1 = (0, r, −(3/2)r − c1)`
    /// spanning `ξ⊥`.
    pub fn natural_classes(&self) -> Result<(Self, Self)> {
        if !self.ch0.is_positive() {
            return Err(Error::domain("natural classes need positive rank"));
        }
        let r = self.ch0.clone();
        let zeta0 = Self::new(r.clone(), Rational::zero(), -self.euler_chi());
        let zeta1 = Self::new(Rational::zero(), r.clone(), -(r * rat(3, 2)) - &self.ch1);
        Ok((zeta0, zeta1))
    }

    /// Coordinates of `z ∈ ξ⊥` in the basis `(ζ0, ζ1)`.
    pub fn perp_coordinates(&self, z: &Self) -> Result<(Rational, Rational)> {
        let (z0, z1) = self.natural_classes()?;
        if !self.euler_pairing(z).is_zero() {
            return Err(Error::domain("class is not orthogonal"));
        }
        let a = &z.ch0 / &z0.ch0;
        let b = &z.ch1 / &z1.ch1;
        debug_assert_eq!(&(&z0 * &a) + &(&z1 * &b), *z);
        Ok((a, b))
    }

    pub fn half_plane(&self, z: &Self) -> Result<HalfPlane> {
        if !self.euler_pairing(z).is_zero() {
            return Err(Error::domain("half-plane classification needs an orthogonal class"));
        }
        Ok(if z.ch0.is_positive() {
            HalfPlane::Primary
        } else if z.ch0.is_negative() {
            HalfPlane::Secondary
        } else {
            HalfPlane::OnBoundary
        })
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.ch0, self.ch1, self.ch2)
    }
}

impl<'a> Add<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;

    fn add(self, rhs: &'a ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(&self.ch0 + &rhs.ch0, &self.ch1 + &rhs.ch1, &self.ch2 + &rhs.ch2)
    }
}

impl<'a> Sub<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;

    fn sub(self, rhs: &'a ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(&self.ch0 - &rhs.ch0, &self.ch1 - &rhs.ch1, &self.ch2 - &rhs.ch2)
    }
}

impl<'a> Mul<&'a Rational> for &'a ChernCharacter {
    type Output = ChernCharacter;

    fn mul(self, k: &'a Rational) -> ChernCharacter {
        ChernCharacter::new(&self.ch0 * k, &self.ch1 * k, &self.ch2 * k)
    }
}

impl Neg for ChernCharacter {
    type Output = ChernCharacter;

    fn neg(self) -> ChernCharacter {
        ChernCharacter::new(-self.ch0, -self.ch1, -self.ch2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(r: i64, c1: i64, ch2: Rational) -> ChernCharacter {
        ChernCharacter::from_ints(r, c1, ch2)
    }

    #[test]
    fn hilbert_polynomial_values() {
        assert_eq!(hilbert_poly(&int(0)), int(1));
        assert_eq!(hilbert_poly(&rat(-3, 2)), rat(-1, 8));
        assert_eq!(hilbert_poly(&int(1)), int(3));
    }

    #[test]
    fn slope_and_discriminant() {
        let sd = ch(1, 0, int(0)).slope_disc().unwrap();
        assert_eq!((sd.mu, sd.delta), (int(0), int(0)));
        let sd = ch(3, 2, int(-5)).slope_disc().unwrap();
        assert_eq!((sd.mu, sd.delta), (rat(2, 3), rat(17, 9)));
        let sd = ch(2, 0, int(-11)).slope_disc().unwrap();
        assert_eq!((sd.mu, sd.delta), (int(0), rat(11, 2)));
        assert_eq!(ch(0, 3, int(1)).slope_disc(), Err(Error::RankZero));
    }

    #[test]
    fn from_rmd_inverts_slope_disc() {
        assert_eq!(
            ChernCharacter::from_rmd(&int(1), &int(0), &int(7)).unwrap(),
            ch(1, 0, int(-7))
        );
        assert_eq!(
            ChernCharacter::from_rmd(&int(3), &rat(2, 3), &rat(17, 9)).unwrap(),
            ch(3, 2, int(-5))
        );
        assert_eq!(
            ChernCharacter::from_rmd(&int(2), &int(0), &rat(11, 2)).unwrap(),
            ch(2, 0, int(-11))
        );
        assert!(ChernCharacter::from_rmd(&int(0), &int(1), &int(1)).is_err());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(ch(1, 0, int(0)).euler_chi(), int(1));
        assert_eq!(ch(3, 2, int(-5)).euler_chi(), int(1));
        assert_eq!(ch(2, 0, int(-11)).euler_chi(), int(-9));
    }

    #[test]
    fn tensor_products() {
        let x = ch(3, 2, int(-5));
        assert_eq!(ChernCharacter::structure_sheaf().tensor(&x), x);
        let o_m1 = ch(1, -1, rat(1, 2));
        let o_1 = ch(1, 1, rat(1, 2));
        assert_eq!(o_m1.tensor(&o_1), ChernCharacter::structure_sheaf());
        let t = x.tensor(&o_m1);
        assert_eq!(t, ChernCharacter::new(int(3), int(-1), rat(-11, 2)));
        let sd = t.slope_disc().unwrap();
        assert_eq!((sd.mu, sd.delta), (rat(-1, 3), rat(17, 9)));
    }

    #[test]
    fn duals() {
        assert_eq!(ChernCharacter::structure_sheaf().dual(), ChernCharacter::structure_sheaf());
        assert_eq!(ch(3, 2, int(-5)).dual(), ch(3, -2, int(-5)));
    }

    #[test]
    fn pairings() {
        let o = ChernCharacter::structure_sheaf();
        assert_eq!(o.euler_pairing(&o), int(1));
        let xi = ch(2, 0, int(-11));
        assert_eq!(xi.euler_pairing(&ch(1, 2, int(2))), int(1));
        assert_eq!(ch(3, 2, int(-5)).euler_pairing(&o), int(1));
    }

    #[test]
    fn chi_pair_matches_riemann_roch() {
        // χ(O(-7), T(-6)) = 15
        let t = ChernCharacter::new(int(2), int(3), rat(3, 2)).twist(-6);
        assert_eq!(ChernCharacter::chi_pair(&ChernCharacter::line_bundle(-7), &t), int(15));
    }

    #[test]
    fn serre_duals() {
        assert_eq!(
            ChernCharacter::structure_sheaf().serre_dual(),
            ChernCharacter::new(int(1), int(-3), rat(9, 2))
        );
        let d = ch(3, 2, int(-5)).serre_dual();
        assert_eq!(d, ChernCharacter::new(int(3), int(-11), rat(29, 2)));
        let sd = d.slope_disc().unwrap();
        assert_eq!((sd.mu, sd.delta), (rat(-11, 3), rat(17, 9)));
    }

    #[test]
    fn dimensions() {
        let xi = ChernCharacter::from_rmd(&int(3), &rat(2, 3), &rat(17, 9)).unwrap();
        assert_eq!(xi.moduli_dimension().unwrap(), BigInt::from(26));
        for n in 1..20 {
            assert_eq!(ch(1, 0, int(-n)).moduli_dimension().unwrap(), BigInt::from(2 * n));
        }
        let xi = ChernCharacter::from_rmd(&int(2), &int(0), &rat(11, 2)).unwrap();
        assert_eq!(xi.moduli_dimension().unwrap(), BigInt::from(41));
        let bad = ChernCharacter::from_rmd(&int(2), &int(0), &rat(1, 3)).unwrap();
        assert!(matches!(bad.moduli_dimension(), Err(Error::Internal(_))));
    }

    #[test]
    fn natural_classes_are_orthogonal() {
        let xi = ch(3, 2, int(-5));
        let (z0, z1) = xi.natural_classes().unwrap();
        assert_eq!(z0, ch(3, 0, int(-1)));
        assert_eq!(z1, ChernCharacter::new(int(0), int(3), rat(-13, 2)));
        assert_eq!(xi.euler_pairing(&z0), int(0));
        assert_eq!(xi.euler_pairing(&z1), int(0));
        for n in 1..10 {
            let xi = ch(1, 0, int(-n));
            let (z0, z1) = xi.natural_classes().unwrap();
            assert_eq!(z0, ch(1, 0, int(n - 1)));
            assert_eq!(z1, ChernCharacter::new(int(0), int(1), rat(-3, 2)));
        }
    }

    #[test]
    fn half_planes() {
        let xi = ch(3, 2, int(-5));
        let (z0, z1) = xi.natural_classes().unwrap();
        assert_eq!(xi.half_plane(&z1).unwrap(), HalfPlane::OnBoundary);
        assert_eq!(xi.half_plane(&z0).unwrap(), HalfPlane::Primary);
        assert_eq!(xi.half_plane(&-z0).unwrap(), HalfPlane::Secondary);
        assert!(xi.half_plane(&ChernCharacter::structure_sheaf()).is_err());
    }

    #[test]
    fn perp_coordinates_reconstruct() {
        let xi = ch(3, 2, int(-5));
        let z = ChernCharacter::from_rmd(&int(1), &int(1), &int(3)).unwrap();
        let (a, b) = xi.perp_coordinates(&z).unwrap();
        let (z0, z1) = xi.natural_classes().unwrap();
        assert_eq!(&(&z0 * &a) + &(&z1 * &b), z);
    }
}
