//! The scalar–pseudoscalar plane `α + β𝕚` and the even/odd power-series
//! kernels evaluated on it.
//!
//! Every analytic function of a bivector that the rotor calculus needs can be
//! written through `x = σ²` alone: even series are `f(√x)` and odd series are
//! `(f(√x)/√x)·σ`. Both kernels are even in `√x`, so they are single-valued
//! functions of `x` and never depend on which square root is chosen. When
//! `𝕚² = −1` the plane is the complex numbers; when `𝕚² = +1` it is the
//! split-complex numbers and the kernels act on the two idempotent components
//! `α ± β` independently.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};
use crate::scalar::Scalar;

/// `α + β𝕚` with 𝕚 the unit pseudoscalar of `sig`.
#[derive(Clone, Copy, PartialEq)]
pub struct ScalarPseudo<T> {
    pub alpha: T,
    pub beta: T,
    sig: Signature,
}

impl<T: Scalar> ScalarPseudo<T> {
    pub fn new(sig: Signature, alpha: T, beta: T) -> Self {
        ScalarPseudo { alpha, beta, sig }
    }

    pub fn real(sig: Signature, alpha: T) -> Self {
        Self::new(sig, alpha, T::zero())
    }

    pub fn zero(sig: Signature) -> Self {
        Self::real(sig, T::zero())
    }

    pub fn one(sig: Signature) -> Self {
        Self::real(sig, T::one())
    }

    /// The grade-0 and grade-4 parts of `a`. Outside four dimensions there is
    /// no grade-4 part and `β = 0`.
    pub fn from_invariant_part(a: &Multivector<T>) -> Self {
        let sig = a.signature();
        let beta = if sig.dim() == 4 {
            a.pseudoscalar_part()
        } else {
            T::zero()
        };
        Self::new(sig, a.scalar_part(), beta)
    }

    #[inline]
    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// `true` when 𝕚² = −1, so the plane is isomorphic to ℂ.
    #[inline]
    pub fn is_complex(&self) -> bool {
        self.sig.pseudoscalar_square() < 0
    }

    pub fn to_multivector(&self) -> Multivector<T> {
        let mut m = Multivector::scalar(self.sig, self.alpha);
        let i = self.sig.pseudoscalar_index();
        m.set_coeff(i, m.coeff(i) + self.beta);
        m
    }

    /// `(α + β𝕚)·A`, with 𝕚 acting from the left.
    pub fn scale(&self, a: &Multivector<T>) -> Multivector<T> {
        let mut out = *a * self.alpha;
        if self.beta != T::zero() {
            out += (Multivector::pseudoscalar(self.sig) * *a) * self.beta;
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self::new(self.sig, self.alpha, -self.beta)
    }

    /// Idempotent components `(α + β, α − β)` of a split-complex number.
    #[inline]
    fn split_components(&self) -> (T, T) {
        (self.alpha + self.beta, self.alpha - self.beta)
    }

    #[inline]
    fn from_split_components(sig: Signature, a: T, b: T) -> Self {
        let half = T::lit(0.5);
        Self::new(sig, half * (a + b), half * (a - b))
    }

    #[inline]
    fn as_complex(&self) -> Complex<T> {
        Complex::new(self.alpha, self.beta)
    }

    /// Distance from the non-invertible set: `|z|` in the complex case, the
    /// smaller idempotent component in the split case.
    pub fn modulus(&self) -> T {
        if self.is_complex() {
            self.alpha.hypot(self.beta)
        } else {
            let (a, b) = self.split_components();
            a.abs().min(b.abs())
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.modulus() >= T::singular_tolerance()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_invertible() {
            return None;
        }
        let s = T::from_i8(self.sig.pseudoscalar_square()).unwrap();
        let norm = self.alpha * self.alpha - s * self.beta * self.beta;
        let c = self.conj();
        Some(Self::new(self.sig, c.alpha / norm, c.beta / norm))
    }

    /// Principal square root. Complex plane: branch cut on the negative real
    /// axis with `√(−1) = 𝕚`, so `arg √x ∈ (−π/2, π/2]`. Split plane: a root
    /// exists only when both idempotent components are non-negative.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_complex() {
            if self.beta == T::zero() {
                return Ok(if self.alpha >= T::zero() {
                    Self::real(self.sig, self.alpha.sqrt())
                } else {
                    Self::new(self.sig, T::zero(), (-self.alpha).sqrt())
                });
            }
            let r = self.as_complex().sqrt();
            Ok(Self::new(self.sig, r.re, r.im))
        } else {
            let (a, b) = self.split_components();
            if a < T::zero() || b < T::zero() {
                return Err(Error::NoRoot);
            }
            Ok(Self::from_split_components(self.sig, a.sqrt(), b.sqrt()))
        }
    }

    /// Evaluate one of the plane kernels at `self` (which plays the role of `σ²`).
    pub fn eval(&self, kernel: Kernel) -> Result<Self> {
        let on_cut = self.is_complex() && kernel == Kernel::AtanhOver && self.alpha > T::one();
        if self.beta == T::zero() && !on_cut {
            let v = kernel.eval_real(self.alpha)?;
            return Ok(Self::real(self.sig, v));
        }
        if self.is_complex() {
            let v = kernel.eval_complex(self.as_complex())?;
            Ok(Self::new(self.sig, v.re, v.im))
        } else {
            let (a, b) = self.split_components();
            Ok(Self::from_split_components(
                self.sig,
                kernel.eval_real(a)?,
                kernel.eval_real(b)?,
            ))
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for ScalarPseudo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}𝕚)", self.alpha, self.beta)
    }
}

impl<T: Scalar> Add for ScalarPseudo<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.sig, self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

impl<T: Scalar> Sub for ScalarPseudo<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.sig, self.alpha - rhs.alpha, self.beta - rhs.beta)
    }
}

impl<T: Scalar> Neg for ScalarPseudo<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.sig, -self.alpha, -self.beta)
    }
}

impl<T: Scalar> Mul for ScalarPseudo<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let s = T::from_i8(self.sig.pseudoscalar_square()).unwrap();
        Self::new(
            self.sig,
            self.alpha * rhs.alpha + s * self.beta * rhs.beta,
            self.alpha * rhs.beta + self.beta * rhs.alpha,
        )
    }
}

impl<T: Scalar> Mul<T> for ScalarPseudo<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.sig, self.alpha * rhs, self.beta * rhs)
    }
}

/// Series kernels as functions of `x = z²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// `cosh √x`
    Cosh,
    /// `sinh(√x)/√x`
    SinhOver,
    /// `tanh(√x)/√x`
    TanhOver,
    /// `atanh(√x)/√x`
    AtanhOver,
}

/// Below this `|x|` the kernels are summed from their Taylor series in `x`.
const TAYLOR_RADIUS: f64 = 0.1;
const TAYLOR_TERMS: usize = 24;

impl Kernel {
    /// Taylor coefficients in `x`; `TanhOver` is formed as a quotient instead.
    fn coefficient<T: Scalar>(self, k: usize) -> T {
        let kf = k as f64;
        match self {
            Kernel::Cosh => T::lit(1.0 / factorial(2 * k)),
            Kernel::SinhOver => T::lit(1.0 / factorial(2 * k + 1)),
            Kernel::AtanhOver => T::lit(1.0 / (2.0 * kf + 1.0)),
            Kernel::TanhOver => unreachable!("tanh kernel is a quotient"),
        }
    }

    fn eval_real<T: Scalar>(self, u: T) -> Result<T> {
        if self == Kernel::TanhOver {
            let c = Kernel::Cosh.eval_real(u)?;
            if c.abs() < T::singular_tolerance() {
                return Err(Error::SingularDenominator);
            }
            return Ok(Kernel::SinhOver.eval_real(u)? / c);
        }
        if self == Kernel::AtanhOver && (u - T::one()).abs() < T::singular_tolerance() {
            return Err(Error::AtanhPole);
        }
        if u.abs() <= T::lit(TAYLOR_RADIUS) {
            let mut sum = T::zero();
            let mut pow = T::one();
            for k in 0..TAYLOR_TERMS {
                sum = sum + pow * self.coefficient::<T>(k);
                pow = pow * u;
            }
            return Ok(sum);
        }
        if u > T::zero() {
            let r = u.sqrt();
            match self {
                Kernel::Cosh => Ok(r.cosh()),
                Kernel::SinhOver => Ok(r.sinh() / r),
                Kernel::AtanhOver if r < T::one() => Ok(r.atanh() / r),
                Kernel::AtanhOver => Err(Error::NoRoot),
                Kernel::TanhOver => unreachable!(),
            }
        } else {
            let s = (-u).sqrt();
            match self {
                Kernel::Cosh => Ok(s.cos()),
                Kernel::SinhOver => Ok(s.sin() / s),
                Kernel::AtanhOver => Ok(s.atan() / s),
                Kernel::TanhOver => unreachable!(),
            }
        }
    }

    fn eval_complex<T: Scalar>(self, x: Complex<T>) -> Result<Complex<T>> {
        if self == Kernel::TanhOver {
            let c = Kernel::Cosh.eval_complex(x)?;
            if c.norm() < T::singular_tolerance() {
                return Err(Error::SingularDenominator);
            }
            return Ok(Kernel::SinhOver.eval_complex(x)? / c);
        }
        let one = Complex::new(T::one(), T::zero());
        if self == Kernel::AtanhOver && (x - one).norm() < T::singular_tolerance() {
            return Err(Error::AtanhPole);
        }
        if x.norm() <= T::lit(TAYLOR_RADIUS) {
            let mut sum = Complex::new(T::zero(), T::zero());
            let mut pow = one;
            for k in 0..TAYLOR_TERMS {
                sum = sum + pow * self.coefficient::<T>(k);
                pow = pow * x;
            }
            return Ok(sum);
        }
        let r = principal_sqrt(x);
        Ok(match self {
            Kernel::Cosh => r.cosh(),
            Kernel::SinhOver => r.sinh() / r,
            Kernel::AtanhOver => atanh(r) / r,
            Kernel::TanhOver => unreachable!(),
        })
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Complex square root with `√(−a) = i√a` on the cut regardless of the sign of zero.
pub fn principal_sqrt<T: Scalar>(z: Complex<T>) -> Complex<T> {
    if z.im == T::zero() {
        if z.re >= T::zero() {
            Complex::new(z.re.sqrt(), T::zero())
        } else {
            Complex::new(T::zero(), (-z.re).sqrt())
        }
    } else {
        z.sqrt()
    }
}

/// Principal `atanh` with `|Im| ≤ π/2`, written as `½(ln(1+z) − ln(1−z))`
/// with the cut inputs (real, |z| > 1) mapped to `+π/2`.
pub fn atanh<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let z = if z.im == T::zero() {
        Complex::new(z.re, T::zero())
    } else {
        z
    };
    let num = (one + z).ln();
    let den = (one - z).ln();
    let mut w = (num - den) * T::lit(0.5);
    if z.im == T::zero() && z.re.abs() > T::one() {
        w.im = T::FRAC_PI_2();
    }
    w
}

/// Complex `tanh` that stays finite for large real parts.
pub fn tanh<T: Scalar>(z: Complex<T>) -> Complex<T> {
    if z.re.abs() > T::lit(20.0) {
        return Complex::new(z.re.signum(), T::zero());
    }
    z.tanh()
}

#[cfg(test)]
mod tests {
    use super::*;

    const STA: Signature = Signature::SPACETIME;

    fn sp(a: f64, b: f64) -> ScalarPseudo<f64> {
        ScalarPseudo::new(STA, a, b)
    }

    #[test]
    fn sqrt_examples() {
        let r = sp(4.0, 0.0).sqrt().unwrap();
        assert_eq!((r.alpha, r.beta), (2.0, 0.0));
        let r = sp(-1.0, 0.0).sqrt().unwrap();
        assert_eq!((r.alpha, r.beta), (0.0, 1.0));
        let r = sp(-1.0, -0.0).sqrt().unwrap();
        assert_eq!((r.alpha, r.beta), (0.0, 1.0));
        let r = sp(0.0, 2.0).sqrt().unwrap();
        assert!((r.alpha - 1.0).abs() < 1e-15 && (r.beta - 1.0).abs() < 1e-15);
        // (1 + 𝕚)² = 2𝕚
        let sq = sp(1.0, 1.0) * sp(1.0, 1.0);
        assert_eq!((sq.alpha, sq.beta), (0.0, 2.0));
    }

    #[test]
    fn sqrt_principal_argument_range() {
        for k in 0..64 {
            let theta = -std::f64::consts::PI + (k as f64 + 0.5) * std::f64::consts::TAU / 64.0;
            let z = sp(theta.cos() * 3.0, theta.sin() * 3.0);
            let r = z.sqrt().unwrap();
            assert!(r.alpha >= 0.0);
            let back = r * r;
            assert!((back.alpha - z.alpha).abs() < 1e-14);
            assert!((back.beta - z.beta).abs() < 1e-14);
        }
    }

    #[test]
    fn split_complex_sqrt_requires_cone() {
        let g22 = Signature::new(2, 2).unwrap();
        assert!(ScalarPseudo::new(g22, -1.0, 0.0).sqrt().is_err());
        assert!(ScalarPseudo::new(g22, 0.0, 1.0).sqrt().is_err());
        let x = ScalarPseudo::new(g22, 5.0f64, 3.0);
        let r = x.sqrt().unwrap();
        let back = r * r;
        assert!((back.alpha - 5.0).abs() < 1e-14 && (back.beta - 3.0).abs() < 1e-14);
    }

    #[test]
    fn inverse_roundtrip() {
        for sig in [STA, Signature::new(2, 2).unwrap()] {
            let x = ScalarPseudo::new(sig, 0.7f64, -0.3);
            let y = x * x.inverse().unwrap();
            assert!((y.alpha - 1.0).abs() < 1e-15 && y.beta.abs() < 1e-15);
        }
        assert!(sp(1e-14, 0.0).inverse().is_none());
    }

    #[test]
    fn kernels_continuous_across_taylor_radius() {
        for kernel in [Kernel::Cosh, Kernel::SinhOver, Kernel::TanhOver, Kernel::AtanhOver] {
            for &u in &[0.1f64, -0.1] {
                let inside = kernel.eval_real(u * (1.0 - 1e-15)).unwrap();
                let outside = kernel.eval_real(u * (1.0 + 1e-15)).unwrap();
                assert!((inside - outside).abs() < 1e-14, "{kernel:?} at {u}");
                let zc = kernel
                    .eval_complex(Complex::new(u * (1.0 + 1e-12), 1e-9))
                    .unwrap();
                assert!((zc.re - outside).abs() < 1e-8, "{kernel:?} complex at {u}");
            }
        }
    }

    #[test]
    fn kernels_match_closed_forms() {
        let x = -0.8f64; // √x = 𝕚·0.894…
        let s = 0.8f64.sqrt();
        assert!((Kernel::TanhOver.eval_real(x).unwrap() - s.tan() / s).abs() < 1e-15);
        assert!((Kernel::AtanhOver.eval_real(x).unwrap() - s.atan() / s).abs() < 1e-15);
        let z = Complex::new(0.3, 0.9);
        let r = z.sqrt();
        let t = Kernel::TanhOver.eval_complex(z).unwrap();
        assert!((t - r.tanh() / r).norm() < 1e-15);
        // Even kernels: the other root gives the same value.
        let t2 = (-r).tanh() / (-r);
        assert!((t - t2).norm() < 1e-15);
    }

    #[test]
    fn atanh_pole_detected() {
        assert_eq!(sp(1.0, 0.0).eval(Kernel::AtanhOver), Err(Error::AtanhPole));
        assert_eq!(
            ScalarPseudo::new(Signature::EUCLIDEAN3, 1.0, 0.0).eval(Kernel::AtanhOver),
            Err(Error::AtanhPole)
        );
    }
}
