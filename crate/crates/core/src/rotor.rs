//! Bivector generators, rotors, and the closed-form BCH composition.
//!
//! For a bivector `σ` in dimension ≤ 4, `σ²` lies in the scalar–pseudoscalar
//! plane, so `cosh σ` is a plane element and `tanh σ` is a plane multiple of
//! `σ`. A rotor `R = ±e^σ` then has `⟨R⟩₊ = cosh σ` and `⟨R⟩₋ = sinh σ`, which
//! gives `σ = atanh(⟨R⟩₋ ⟨R⟩₊⁻¹)` and, substituting `R = e^{σ1} e^{σ2}`,
//!
//! ```text
//! B(σ1, σ2) = atanh( (T1 + T2 + T1×T2) / (1 + T1·T2 + T1∧T2) ),   Ti = tanh σi
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ga::{BladeIndex, Multivector, Signature};
use crate::plane::{Kernel, ScalarPseudo};
use crate::scalar::Scalar;

/// A pure grade-2 multivector.
#[derive(Clone, Copy, PartialEq)]
pub struct Bivector<T>(Multivector<T>);

impl<T: Scalar> Bivector<T> {
    /// Accepts `mv` if its off-grade content is negligible, and drops it.
    pub fn new(mv: Multivector<T>) -> Result<Self> {
        let residual = mv.off_grade_residual(&[2]);
        if residual > T::lit(1e-12) * mv.max_abs().max(T::one()) {
            return Err(Error::NotBivector {
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::project(&mv))
    }

    /// `⟨mv⟩₂`.
    pub fn project(mv: &Multivector<T>) -> Self {
        Bivector(mv.grade_project(2))
    }

    pub fn zero(sig: Signature) -> Self {
        Bivector(Multivector::zero(sig))
    }

    /// Grade-2 basis blades in ascending bitmask order.
    pub fn basis(sig: Signature) -> Vec<BladeIndex> {
        (0..sig.blade_count())
            .map(BladeIndex)
            .filter(|b| b.grade() == 2)
            .collect()
    }

    /// Bivector with the given coefficients on [`Bivector::basis`].
    pub fn from_components(sig: Signature, components: &[T]) -> Result<Self> {
        let basis = Self::basis(sig);
        if components.len() != basis.len() {
            return Err(Error::IndexOutOfRange {
                index: components.len(),
                dim: basis.len(),
            });
        }
        let mut mv = Multivector::zero(sig);
        for (b, &c) in basis.iter().zip(components) {
            mv.set_coeff(*b, c);
        }
        Ok(Bivector(mv))
    }

    pub fn components(&self) -> Vec<T> {
        Self::basis(self.signature())
            .into_iter()
            .map(|b| self.0.coeff(b))
            .collect()
    }

    #[inline]
    pub fn signature(&self) -> Signature {
        self.0.signature()
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector<T> {
        &self.0
    }

    #[inline]
    pub fn into_multivector(self) -> Multivector<T> {
        self.0
    }

    /// `σ²` as a plane element (its grade-0 and grade-4 parts).
    pub fn square(&self) -> ScalarPseudo<T> {
        ScalarPseudo::from_invariant_part(&(self.0 * self.0))
    }

    pub fn norm(&self) -> T {
        self.0.norm()
    }

    /// True when `σ²` vanishes relative to `‖σ‖²`.
    pub fn is_null(&self) -> bool {
        let sq = self.square();
        let mag = sq.alpha.abs().max(sq.beta.abs());
        mag < T::null_tolerance() * (self.norm() * self.norm()).max(T::one())
    }

    /// `½[σ, τ]`, which for bivectors is `⟨στ⟩₂`.
    pub fn commutator(&self, other: &Self) -> Self {
        Bivector((self.0 * other.0).grade_project(2))
    }

    /// Plane element times bivector; stays a bivector for `dim ≤ 4`.
    pub fn scale_by(&self, factor: ScalarPseudo<T>) -> Self {
        Bivector::project(&factor.scale(&self.0))
    }

    pub fn cast<U: Scalar>(&self) -> Bivector<U> {
        Bivector(self.0.cast())
    }
}

impl<T: Scalar> Add for Bivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Bivector(self.0 + rhs.0)
    }
}

impl<T: Scalar> Sub for Bivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Bivector(self.0 - rhs.0)
    }
}

impl<T: Scalar> Neg for Bivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Bivector(-self.0)
    }
}

impl<T: Scalar> Mul<T> for Bivector<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Bivector(self.0 * rhs)
    }
}

/// An even multivector with `R R̃ = 1`.
#[derive(Clone, Copy, PartialEq)]
pub struct Rotor<T>(Multivector<T>);

impl<T: Scalar> Rotor<T> {
    pub fn new(mv: Multivector<T>) -> Result<Self> {
        if mv.off_grade_residual(&[0, 2, 4]) > T::zero() {
            return Err(Error::OddGrade);
        }
        let r = Rotor(mv);
        let residual = r.membership_residual();
        if !(residual <= T::rotor_tolerance()) {
            return Err(Error::NotARotor {
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(r)
    }

    /// Wraps without checking membership.
    pub fn new_unchecked(mv: Multivector<T>) -> Self {
        Rotor(mv)
    }

    pub fn identity(sig: Signature) -> Self {
        Rotor(Multivector::one(sig))
    }

    /// `max |R R̃ − 1|`.
    pub fn membership_residual(&self) -> T {
        let one = Multivector::one(self.0.signature());
        (self.0 * self.0.reverse()).max_abs_diff(&one)
    }

    #[inline]
    pub fn signature(&self) -> Signature {
        self.0.signature()
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector<T> {
        &self.0
    }

    #[inline]
    pub fn into_multivector(self) -> Multivector<T> {
        self.0
    }

    pub fn reverse(&self) -> Self {
        Rotor(self.0.reverse())
    }

    /// `R A R̃`.
    pub fn apply(&self, a: &Multivector<T>) -> Result<Multivector<T>> {
        self.0
            .geometric_product(a)?
            .geometric_product(&self.0.reverse())
    }

    /// Componentwise distance to `other` after choosing the closer of `±other`.
    pub fn distance_up_to_sign(&self, other: &Self) -> T {
        let d_plus = self.0.max_abs_diff(&other.0);
        let d_minus = self.0.max_abs_diff(&(-other.0));
        d_plus.min(d_minus)
    }
}

impl<T: Scalar> Mul for Rotor<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Rotor(self.0 * rhs.0)
    }
}

impl<T: Scalar> Neg for Rotor<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Rotor(-self.0)
    }
}

/// `σ = N σ̂` with `N = √(σ²)` in the scalar–pseudoscalar plane.
#[derive(Clone, Copy)]
pub struct Normalized<T> {
    pub n: ScalarPseudo<T>,
    /// `σ̂ = N⁻¹σ`. In four dimensions this is a bivector; in GA(2) and GA(3)
    /// an imaginary `N` turns it into a scalar or vector respectively.
    pub unit: Multivector<T>,
    /// `σ² = 0`; then `N = 0` and `σ̂ = σ`.
    pub null: bool,
}

pub fn normalize_bivector<T: Scalar>(sigma: &Bivector<T>) -> Result<Normalized<T>> {
    let sig = sigma.signature();
    if sigma.is_null() {
        return Ok(Normalized {
            n: ScalarPseudo::zero(sig),
            unit: *sigma.as_multivector(),
            null: true,
        });
    }
    let n = sigma.square().sqrt()?;
    let inv = n.inverse().ok_or(Error::NoRoot)?;
    Ok(Normalized {
        n,
        unit: inv.scale(sigma.as_multivector()),
        null: false,
    })
}

/// Commuting split `σ = σ₊ + σ₋` with `σ₊² ≥ 0`, `σ₋² ≤ 0`.
#[derive(Clone, Copy)]
pub struct InvariantDecomposition<T> {
    pub plus: Bivector<T>,
    pub minus: Bivector<T>,
    /// Null input: returned as `(σ, 0)`.
    pub null: bool,
}

/// Invariant decomposition of a spacetime bivector.
pub fn invariant_decomposition<T: Scalar>(
    sigma: &Bivector<T>,
) -> Result<InvariantDecomposition<T>> {
    let sig = sigma.signature();
    if sig != Signature::SPACETIME {
        return Err(Error::WrongSignature {
            expected_p: 1,
            expected_q: 3,
            p: sig.p(),
            q: sig.q(),
        });
    }
    let norm = normalize_bivector(sigma)?;
    if norm.null {
        return Ok(InvariantDecomposition {
            plus: *sigma,
            minus: Bivector::zero(sig),
            null: true,
        });
    }
    let unit = Bivector::project(&norm.unit);
    let plus = unit * norm.n.alpha;
    let minus = Bivector::project(&(Multivector::pseudoscalar(sig) * *unit.as_multivector()))
        * norm.n.beta;
    Ok(InvariantDecomposition {
        plus,
        minus,
        null: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenSeries {
    Cosh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddSeries {
    Sinh,
    Tanh,
    Atanh,
}

/// `f(σ) = f(N_σ)` for an even series; for null `σ` this is `f(0)`.
pub fn even_series<T: Scalar>(f: EvenSeries, sigma: &Bivector<T>) -> Result<ScalarPseudo<T>> {
    let kernel = match f {
        EvenSeries::Cosh => Kernel::Cosh,
    };
    sigma.square().eval(kernel)
}

/// `f(σ) = (f(N_σ)/N_σ) σ` for an odd series; for null `σ` this is `f′(0) σ`.
pub fn odd_series<T: Scalar>(f: OddSeries, sigma: &Bivector<T>) -> Result<Bivector<T>> {
    let kernel = match f {
        OddSeries::Sinh => Kernel::SinhOver,
        OddSeries::Tanh => Kernel::TanhOver,
        OddSeries::Atanh => Kernel::AtanhOver,
    };
    let factor = sigma.square().eval(kernel)?;
    Ok(sigma.scale_by(factor))
}

pub fn tanh<T: Scalar>(sigma: &Bivector<T>) -> Result<Bivector<T>> {
    odd_series(OddSeries::Tanh, sigma)
}

pub fn atanh<T: Scalar>(sigma: &Bivector<T>) -> Result<Bivector<T>> {
    odd_series(OddSeries::Atanh, sigma)
}

/// `e^σ = cosh σ + sinh σ`.
pub fn exp<T: Scalar>(sigma: &Bivector<T>) -> Rotor<T> {
    let x = sigma.square();
    // Both kernels are entire, so evaluation cannot fail.
    let c = x.eval(Kernel::Cosh).expect("cosh kernel is entire");
    let s = x.eval(Kernel::SinhOver).expect("sinh kernel is entire");
    Rotor(c.to_multivector() + s.scale(sigma.as_multivector()))
}

/// `ln R = atanh(⟨R⟩₋ ⟨R⟩₊⁻¹)` on the principal branch. The overall sign of
/// `R` is not recovered: `ln(R) = ln(−R)`.
pub fn log<T: Scalar>(rotor: &Rotor<T>) -> Result<Bivector<T>> {
    let r = rotor.as_multivector();
    let residual = rotor.membership_residual();
    if !(residual <= T::rotor_tolerance()) {
        return Err(Error::NotARotor {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let cosh_part = ScalarPseudo::from_invariant_part(&r.srev_part());
    let inv = cosh_part.inverse().ok_or(Error::PiRotation)?;
    let t = Bivector::project(&inv.scale(&r.arev_part()));
    atanh(&t)
}

/// Closed-form BCH: the bivector `B` with `e^{σ1} e^{σ2} = ±e^B`.
pub fn bch<T: Scalar>(sigma1: &Bivector<T>, sigma2: &Bivector<T>) -> Result<Bivector<T>> {
    let (num, den) = bch_parts(sigma1, sigma2)?;
    let inv = den.inverse().ok_or(Error::SingularDenominator)?;
    atanh(&num.scale_by(inv))
}

/// Numerator `T1 + T2 + T1×T2` and denominator `1 + T1·T2 + T1∧T2` of the
/// BCH quotient, before the division.
pub fn bch_parts<T: Scalar>(
    sigma1: &Bivector<T>,
    sigma2: &Bivector<T>,
) -> Result<(Bivector<T>, ScalarPseudo<T>)> {
    let sig = sigma1.signature();
    if sig != sigma2.signature() {
        return Err(Error::SignatureMismatch(
            sig.p(),
            sig.q(),
            sigma2.signature().p(),
            sigma2.signature().q(),
        ));
    }
    let t1 = tanh(sigma1)?;
    let t2 = tanh(sigma2)?;
    let prod = *t1.as_multivector() * *t2.as_multivector();
    let num = t1 + t2 + Bivector::project(&prod);
    let den = ScalarPseudo::one(sig) + ScalarPseudo::from_invariant_part(&prod);
    Ok((num, den))
}

/// Double-sided transformation `A ↦ R A R̃`.
pub fn apply_rotor<T: Scalar>(rotor: &Rotor<T>, a: &Multivector<T>) -> Result<Multivector<T>> {
    rotor.apply(a)
}

/// Reflection `A ↦ −v A v` across a unit vector (`v² = ±1`).
pub fn reflect<T: Scalar>(v: &Multivector<T>, a: &Multivector<T>) -> Result<Multivector<T>> {
    let square = v.geometric_product(v)?;
    let s = square.scalar_part();
    if v.off_grade_residual(&[1]) > T::zero() || (s.abs() - T::one()).abs() > T::rotor_tolerance()
    {
        return Err(Error::NonUnitVector {
            square: s.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(-(v.geometric_product(a)?.geometric_product(v)?))
}

fn dot3<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Rodrigues composition `(r1 + r2 − r1×r2)/(1 − r1·r2)` of half-angle
/// rotation vectors `r = r̂ tan(θ/2)`.
pub fn rodrigues_compose<T: Scalar>(r1: &[T; 3], r2: &[T; 3]) -> Result<[T; 3]> {
    let den = T::one() - dot3(r1, r2);
    if den.abs() < T::singular_tolerance() {
        return Err(Error::RodriguesSingular);
    }
    let c = cross3(r1, r2);
    Ok([
        (r1[0] + r2[0] - c[0]) / den,
        (r1[1] + r2[1] - c[1]) / den,
        (r1[2] + r2[2] - c[2]) / den,
    ])
}

/// The same composition routed through [`bch`] in GA(3): `r𝕚 = tanh σ`,
/// `σ12 = B(σ1, σ2)`, `r12 = (tanh σ12) 𝕚⁻¹`.
pub fn rodrigues_via_bch<T: Scalar>(r1: &[T; 3], r2: &[T; 3]) -> Result<[T; 3]> {
    let sig = Signature::EUCLIDEAN3;
    let i = Multivector::pseudoscalar(sig);
    let to_biv = |r: &[T; 3]| -> Result<Bivector<T>> {
        let v = Multivector::vector(sig, r)?;
        atanh(&Bivector::project(&(v * i)))
    };
    let s12 = bch(&to_biv(r1)?, &to_biv(r2)?)?;
    let t = tanh(&s12)?;
    let v = *t.as_multivector() * (-i);
    let c = v.vector_part();
    Ok([c[0], c[1], c[2]])
}

impl<T: Scalar> fmt::Debug for Bivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bivector({:?})", self.0)
    }
}

impl<T: Scalar> fmt::Debug for Rotor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rotor({:?})", self.0)
    }
}

impl<T: Scalar> fmt::Debug for Normalized<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Normalized")
            .field("n", &self.n)
            .field("unit", &self.unit)
            .field("null", &self.null)
            .finish()
    }
}

impl<T: Scalar> fmt::Debug for InvariantDecomposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvariantDecomposition")
            .field("plus", &self.plus)
            .field("minus", &self.minus)
            .field("null", &self.null)
            .finish()
    }
}
