//! Composition of generalized rotations through their bivector generators.
//!
//! The crate implements dense geometric algebra GA(p,q) for `p + q ≤ 4`, the
//! rotor exponential and logarithm, a closed-form Baker–Campbell–Hausdorff
//! map for bivectors, the spacetime parametrization of Lorentz generators, a
//! 2×2 complex-matrix fast path for Minkowski spacetime, and relativistic
//! velocity composition with the Wigner angle.
//!
//! All types are generic over the real scalar ([`Scalar`], implemented for
//! `f32` and `f64`); the `*64` aliases below cover the common case.
//!
//! ```
//! use rotor_bch::{bch, exp, Bivector64, Signature};
//!
//! let sig = Signature::SPACETIME;
//! let s1 = Bivector64::from_components(sig, &[0.3, 0.0, 0.1, 0.0, 0.0, 0.2]).unwrap();
//! let s2 = Bivector64::from_components(sig, &[0.0, -0.4, 0.0, 0.5, 0.0, 0.0]).unwrap();
//! let s3 = bch(&s1, &s2).unwrap();
//! assert!(exp(&s3).distance_up_to_sign(&(exp(&s1) * exp(&s2))) < 1e-12);
//! ```

pub mod error;
pub mod ga;
pub mod kinematics;
pub mod pauli;
pub mod plane;
pub mod rotor;
pub mod scalar;
pub mod series;
pub mod spacetime;

pub use error::{Error, Result};
pub use ga::{BladeIndex, Multivector, Signature};
pub use kinematics::{BoostRotationPair, HalfVelocity3, Velocity3, WignerRotation};
pub use pauli::{Complex, EvenMatrix, GeneratorMatrix2};
pub use plane::ScalarPseudo;
pub use rotor::{
    apply_rotor, atanh, bch, exp, invariant_decomposition, log, normalize_bivector, reflect,
    rodrigues_compose, rodrigues_via_bch, tanh, Bivector, EvenSeries, OddSeries, Rotor,
};
pub use scalar::Scalar;
pub use series::bch_series_oracle;
pub use spacetime::{GeneratorMatrix4, LorentzGenerator, LorentzMatrix4};

pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;
pub type Bivector64 = Bivector<f64>;
pub type Bivector32 = Bivector<f32>;
pub type Rotor64 = Rotor<f64>;
pub type Rotor32 = Rotor<f32>;
pub type ScalarPseudo64 = ScalarPseudo<f64>;
pub type LorentzGenerator64 = LorentzGenerator<f64>;
pub type LorentzMatrix64 = LorentzMatrix4<f64>;
pub type EvenMatrix64 = EvenMatrix<f64>;
pub type GeneratorMatrix2x64 = GeneratorMatrix2<f64>;
pub type Velocity64 = Velocity3<f64>;
pub type HalfVelocity64 = HalfVelocity3<f64>;
