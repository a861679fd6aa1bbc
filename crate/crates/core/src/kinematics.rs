//! Relativistic velocity composition in half-velocity form and the Wigner
//! rotation of two composed boosts.
//!
//! Velocities live in GA(3), the space/time split image of the even
//! spacetime algebra: a boost generator `½ξ^k γ_kγ_0` is the vector `½ξ`,
//! and its hyperbolic tangent is the half-velocity `w = tanh(ξ/2) ξ̂`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};
use crate::rotor::{self, Bivector, Rotor};
use crate::scalar::Scalar;
use crate::spacetime::{self, LorentzGenerator};

const E3: Signature = Signature::EUCLIDEAN3;

fn norm3<T: Scalar>(v: &[T; 3]) -> T {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn check_subluminal<T: Scalar>(v: &[T; 3]) -> Result<()> {
    let n = norm3(v);
    if !(n < T::one()) {
        return Err(Error::Superluminal {
            norm: n.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

fn to_vector<T: Scalar>(v: &[T; 3]) -> Multivector<T> {
    Multivector::vector(E3, v).expect("three components")
}

fn from_vector<T: Scalar>(m: &Multivector<T>) -> [T; 3] {
    let c = m.vector_part();
    [c[0], c[1], c[2]]
}

/// Velocity in units of c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocity3<T> {
    pub beta: [T; 3],
}

impl<T: Scalar> Velocity3<T> {
    pub fn new(beta: [T; 3]) -> Result<Self> {
        check_subluminal(&beta)?;
        Ok(Velocity3 { beta })
    }

    pub fn speed(&self) -> T {
        norm3(&self.beta)
    }

    /// Rapidity vector `ξ = atanh(|β|) β̂`.
    pub fn rapidity(&self) -> [T; 3] {
        let b = self.speed();
        if b == T::zero() {
            return [T::zero(); 3];
        }
        let f = b.atanh() / b;
        self.beta.map(|x| x * f)
    }
}

/// `w = tanh(ξ/2) ξ̂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfVelocity3<T> {
    pub w: [T; 3],
}

impl<T: Scalar> HalfVelocity3<T> {
    pub fn new(w: [T; 3]) -> Result<Self> {
        check_subluminal(&w)?;
        Ok(HalfVelocity3 { w })
    }

    /// Half-velocity of the boost with rapidity vector `ξ`.
    pub fn from_rapidity(xi: &[T; 3]) -> Self {
        let n = norm3(xi);
        if n == T::zero() {
            return HalfVelocity3 { w: [T::zero(); 3] };
        }
        let f = (n * T::lit(0.5)).tanh() / n;
        HalfVelocity3 { w: xi.map(|x| x * f) }
    }

    pub fn rapidity(&self) -> [T; 3] {
        let n = norm3(&self.w);
        if n == T::zero() {
            return [T::zero(); 3];
        }
        let f = T::lit(2.0) * n.atanh() / n;
        self.w.map(|x| x * f)
    }

    pub fn norm(&self) -> T {
        norm3(&self.w)
    }

    pub fn as_vector(&self) -> Multivector<T> {
        to_vector(&self.w)
    }
}

/// `w = β / (1 + √(1 − β²))`.
pub fn half_velocity<T: Scalar>(v: &Velocity3<T>) -> Result<HalfVelocity3<T>> {
    check_subluminal(&v.beta)?;
    let b2 = v.beta.iter().fold(T::zero(), |acc, &x| acc + x * x);
    let f = (T::one() + (T::one() - b2).sqrt()).recip();
    Ok(HalfVelocity3 {
        w: v.beta.map(|x| x * f),
    })
}

/// `β = 2w / (1 + w²)`.
pub fn full_velocity<T: Scalar>(w: &HalfVelocity3<T>) -> Result<Velocity3<T>> {
    check_subluminal(&w.w)?;
    let w2 = w.w.iter().fold(T::zero(), |acc, &x| acc + x * x);
    let f = T::lit(2.0) / (T::one() + w2);
    Ok(Velocity3 {
        beta: w.w.map(|x| x * f),
    })
}

/// `w = (w1 + w2)(1 + w1 w2)⁻¹`.
pub fn compose_half_velocities<T: Scalar>(
    w1: &HalfVelocity3<T>,
    w2: &HalfVelocity3<T>,
) -> Result<HalfVelocity3<T>> {
    check_subluminal(&w1.w)?;
    check_subluminal(&w2.w)?;
    let a = w1.as_vector();
    let b = w2.as_vector();
    let den = Multivector::one(E3) + a * b;
    let inv = den
        .versor_inverse()
        .expect("1 + w1 w2 is invertible for subluminal half-velocities");
    let w = (a + b) * inv;
    debug_assert!(w.off_grade_residual(&[1]) <= T::lit(1e-9) * (T::one() + w.norm()));
    HalfVelocity3::new(from_vector(&w.grade_project(1)))
}

/// Wigner rotation of two composed boosts in the K frame.
#[derive(Clone, Copy, PartialEq)]
pub struct WignerRotation<T> {
    /// Rotation angle, `2 atan |ρ|`.
    pub theta: T,
    /// Unit bivector along `w1 ∧ w2`; absent for parallel boosts.
    pub plane: Option<Bivector<T>>,
    /// `ρ = (w1 ∧ w2)/(1 + w1·w2)`, the tangent of the rotation generator.
    pub rho: Bivector<T>,
}

pub fn wigner_angle<T: Scalar>(w1: &HalfVelocity3<T>, w2: &HalfVelocity3<T>) -> WignerRotation<T> {
    let a = w1.as_vector();
    let b = w2.as_vector();
    let wedge = a.wedge(&b).expect("same signature");
    let dot = (a * b).scalar_part();
    let rho = Bivector::project(&(wedge * (T::one() + dot).recip()));
    let scale = w1.norm() * w2.norm();
    let wn = wedge.norm();
    if scale == T::zero() || wn <= T::null_tolerance() * scale {
        return WignerRotation {
            theta: T::zero(),
            plane: None,
            rho: Bivector::zero(E3),
        };
    }
    WignerRotation {
        theta: T::lit(2.0) * rho.norm().atan(),
        plane: Some(Bivector::project(&(wedge * wn.recip()))),
        rho,
    }
}

/// `B1 B2 = B R`: a pure boost followed by a pure rotation in the K frame.
#[derive(Clone, Copy, PartialEq)]
pub struct BoostRotationPair<T> {
    pub boost: Rotor<T>,
    pub rotation: Rotor<T>,
    pub wigner_angle: T,
    /// Unit spacelike rotation plane; absent for parallel boosts.
    pub plane: Option<Bivector<T>>,
    /// Composite half-velocity of the boost factor.
    pub half_velocity: HalfVelocity3<T>,
}

/// Splits the product of the boosts with rapidity vectors `xi1`, `xi2`.
pub fn boost_boost_decompose<T: Scalar>(xi1: &[T; 3], xi2: &[T; 3]) -> Result<BoostRotationPair<T>> {
    let w1 = HalfVelocity3::from_rapidity(xi1);
    let w2 = HalfVelocity3::from_rapidity(xi2);
    let w = compose_half_velocities(&w1, &w2)?;
    let wr = wigner_angle(&w1, &w2);
    let boost = rotor::exp(&spacetime::generator_to_bivector(&LorentzGenerator::boost(
        w.rapidity(),
    )));
    let phi = rotor::atanh(&wr.rho)?;
    let phi = Bivector::project(&spacetime::to_spacetime(phi.as_multivector())?);
    let rotation = rotor::exp(&phi);
    let plane = match wr.plane {
        Some(p) => Some(Bivector::project(&spacetime::to_spacetime(p.as_multivector())?)),
        None => None,
    };
    Ok(BoostRotationPair {
        boost,
        rotation,
        wigner_angle: wr.theta,
        plane,
        half_velocity: w,
    })
}

impl<T: Scalar> fmt::Debug for WignerRotation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WignerRotation")
            .field("theta", &self.theta)
            .field("plane", &self.plane)
            .field("rho", &self.rho)
            .finish()
    }
}

impl<T: Scalar> fmt::Debug for BoostRotationPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoostRotationPair")
            .field("boost", &self.boost)
            .field("rotation", &self.rotation)
            .field("wigner_angle", &self.wigner_angle)
            .field("plane", &self.plane)
            .field("half_velocity", &self.half_velocity)
            .finish()
    }
}
