//! 2×2 complex-matrix representation of the even spacetime algebra and the
//! matrix form of the BCH map.
//!
//! Relative vectors `σ_k = γ_k γ_0` map to the Pauli matrices and 𝕚 maps to
//! `iI`, so an even multivector `q⁰ + q^k σ_k` (with complex `q^μ`) becomes
//! `[[q⁰+q³, q¹−iq²], [q¹+iq², q⁰−q³]]`. Everything here is fixed-size and
//! allocation-free.

use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex;

use crate::error::{Error, Result};
use crate::ga::{BladeIndex, Multivector, Signature};
use crate::plane;
use crate::scalar::Scalar;
use crate::spacetime::{self, LorentzGenerator};

type C<T> = Complex<T>;

#[inline]
fn c<T: Scalar>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
fn czero<T: Scalar>() -> C<T> {
    c(T::zero(), T::zero())
}

/// Image of an even multivector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvenMatrix<T> {
    pub m: [[C<T>; 2]; 2],
}

/// Image of a bivector: a traceless [`EvenMatrix`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorMatrix2<T>(pub EvenMatrix<T>);

impl<T: Scalar> EvenMatrix<T> {
    pub fn new(m: [[C<T>; 2]; 2]) -> Self {
        EvenMatrix { m }
    }

    pub fn zero() -> Self {
        Self::new([[czero(); 2]; 2])
    }

    pub fn identity() -> Self {
        Self::scalar(c(T::one(), T::zero()))
    }

    pub fn scalar(s: C<T>) -> Self {
        Self::new([[s, czero()], [czero(), s]])
    }

    /// `q⁰ I + q^k σ_k`.
    pub fn from_components(q: [C<T>; 4]) -> Self {
        let i = c(T::zero(), T::one());
        Self::new([
            [q[0] + q[3], q[1] - i * q[2]],
            [q[1] + i * q[2], q[0] - q[3]],
        ])
    }

    /// Inverse of [`from_components`](Self::from_components).
    pub fn components(&self) -> [C<T>; 4] {
        let m = &self.m;
        let half = T::lit(0.5);
        let q0 = (m[0][0] + m[1][1]) * half;
        let q3 = (m[0][0] - m[1][1]) * half;
        let q1 = (m[0][1] + m[1][0]) * half;
        // (m10 − m01)/(2i)
        let d = (m[1][0] - m[0][1]) * half;
        let q2 = c(d.im, -d.re);
        [q0, q1, q2, q3]
    }

    pub fn trace(&self) -> C<T> {
        self.m[0][0] + self.m[1][1]
    }

    pub fn determinant(&self) -> C<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn scale(&self, s: C<T>) -> Self {
        let m = &self.m;
        Self::new([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut d = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }
}

impl<T: Scalar> Add for EvenMatrix<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        Self::new([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl<T: Scalar> Sub for EvenMatrix<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for EvenMatrix<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(c(-T::one(), T::zero()))
    }
}

impl<T: Scalar> Mul for EvenMatrix<T> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        Self::new([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl<T: Scalar> GeneratorMatrix2<T> {
    pub fn zero() -> Self {
        GeneratorMatrix2(EvenMatrix::zero())
    }

    /// Projects onto the traceless part.
    pub fn project(m: &EvenMatrix<T>) -> Self {
        let s = m.trace() * T::lit(0.5);
        GeneratorMatrix2(*m - EvenMatrix::scalar(s))
    }

    /// `Σ_k q^k σ_k`.
    pub fn from_components(q: [C<T>; 3]) -> Self {
        GeneratorMatrix2(EvenMatrix::from_components([czero(), q[0], q[1], q[2]]))
    }

    pub fn components(&self) -> [C<T>; 3] {
        let q = self.0.components();
        [q[1], q[2], q[3]]
    }

    pub fn matrix(&self) -> &EvenMatrix<T> {
        &self.0
    }

    /// `λ²`, read off the (0,0) entry of `Σ²`.
    pub fn lambda_squared(&self) -> C<T> {
        let m = &self.0.m;
        m[0][0] * m[0][0] + m[0][1] * m[1][0]
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.0.max_abs_diff(&other.0)
    }
}

fn pauli<T: Scalar>(k: usize) -> EvenMatrix<T> {
    let mut q = [czero(); 4];
    q[k + 1] = c(T::one(), T::zero());
    EvenMatrix::from_components(q)
}

/// Image of a GA(3) multivector under `e_k ↦ σ_k`, `e₁₂₃ ↦ iI`.
pub fn to_matrix_ga3<T: Scalar>(a: &Multivector<T>) -> Result<EvenMatrix<T>> {
    let sig = a.signature();
    if sig != Signature::EUCLIDEAN3 {
        return Err(Error::WrongSignature {
            expected_p: 3,
            expected_q: 0,
            p: sig.p(),
            q: sig.q(),
        });
    }
    let mut out = EvenMatrix::zero();
    for blade in 0..8 {
        let coef = a.coeff(BladeIndex(blade));
        if coef == T::zero() {
            continue;
        }
        let mut m = EvenMatrix::identity();
        for k in 0..3 {
            if blade & (1 << k) != 0 {
                m = m * pauli(k);
            }
        }
        out = out + m.scale(c(coef, T::zero()));
    }
    Ok(out)
}

/// Inverse of [`to_matrix_ga3`].
pub fn from_matrix_ga3<T: Scalar>(m: &EvenMatrix<T>) -> Multivector<T> {
    let q = m.components();
    let sig = Signature::EUCLIDEAN3;
    let mut out = Multivector::scalar(sig, q[0].re);
    out.set_coeff(sig.pseudoscalar_index(), q[0].im);
    let i = Multivector::pseudoscalar(sig);
    for k in 0..3 {
        let e = Multivector::basis_vector(sig, k).expect("index < 3");
        out += e * q[k + 1].re + (i * e) * q[k + 1].im;
    }
    out
}

/// Even GA(1,3) multivector to its matrix.
pub fn to_matrix<T: Scalar>(a: &Multivector<T>) -> Result<EvenMatrix<T>> {
    to_matrix_ga3(&spacetime::from_spacetime(a)?)
}

/// Matrix to the even GA(1,3) multivector it represents.
pub fn from_matrix<T: Scalar>(m: &EvenMatrix<T>) -> Multivector<T> {
    spacetime::to_spacetime(&from_matrix_ga3(m)).expect("GA(3) input")
}

/// `Σ = Σ_k q^k σ_k` with `q^k = ½(ξ^k + iθ^k)`.
pub fn generator_to_matrix2<T: Scalar>(g: &LorentzGenerator<T>) -> GeneratorMatrix2<T> {
    let half = T::lit(0.5);
    GeneratorMatrix2::from_components([0, 1, 2].map(|k| c(g.xi[k] * half, g.theta[k] * half)))
}

pub fn matrix2_to_generator<T: Scalar>(m: &GeneratorMatrix2<T>) -> LorentzGenerator<T> {
    let q = m.components();
    let two = T::lit(2.0);
    LorentzGenerator::new(q.map(|z| z.re * two), q.map(|z| z.im * two))
}

const NEAR_NULL: f64 = 1e-8;

/// `tanh(λ)/λ` for `λ = √x`.
fn tanh_over<T: Scalar>(lambda: C<T>) -> Result<C<T>> {
    if lambda.norm() < T::lit(NEAR_NULL) {
        let l2 = lambda * lambda;
        let one = c(T::one(), T::zero());
        return Ok(one - l2 / T::lit(3.0) + l2 * l2 * T::lit(2.0 / 15.0));
    }
    if lambda.cosh().norm() < T::singular_tolerance() {
        return Err(Error::SingularDenominator);
    }
    Ok(plane::tanh(lambda) / lambda)
}

/// `atanh(λ)/λ` for `λ = √x`.
fn atanh_over<T: Scalar>(lambda: C<T>) -> Result<C<T>> {
    let one = c(T::one(), T::zero());
    if (lambda * lambda - one).norm() < T::singular_tolerance() {
        return Err(Error::AtanhPole);
    }
    if lambda.norm() < T::lit(NEAR_NULL) {
        let l2 = lambda * lambda;
        return Ok(one + l2 / T::lit(3.0) + l2 * l2 / T::lit(5.0));
    }
    Ok(plane::atanh(lambda) / lambda)
}

fn lambda<T: Scalar>(m: &GeneratorMatrix2<T>) -> C<T> {
    plane::principal_sqrt(m.lambda_squared())
}

/// `tanh Σ = (tanh λ/λ) Σ`.
pub fn matrix_tanh<T: Scalar>(m: &GeneratorMatrix2<T>) -> Result<GeneratorMatrix2<T>> {
    Ok(GeneratorMatrix2(m.0.scale(tanh_over(lambda(m))?)))
}

/// `atanh M = (atanh λ/λ) M`.
pub fn matrix_atanh<T: Scalar>(m: &GeneratorMatrix2<T>) -> Result<GeneratorMatrix2<T>> {
    Ok(GeneratorMatrix2(m.0.scale(atanh_over(lambda(m))?)))
}

/// `e^Σ = cosh λ I + (sinh λ/λ) Σ`.
pub fn matrix_exp2<T: Scalar>(m: &GeneratorMatrix2<T>) -> EvenMatrix<T> {
    let l = lambda(m);
    let (ch, sh_over) = if l.norm() < T::lit(NEAR_NULL) {
        let l2 = l * l;
        let one = c(T::one(), T::zero());
        (one + l2 * T::lit(0.5), one + l2 / T::lit(6.0))
    } else {
        (l.cosh(), l.sinh() / l)
    };
    EvenMatrix::scalar(ch) + m.0.scale(sh_over)
}

/// Matrix BCH: with `Π = T1 T2` split into its scalar part `S = ½ tr Π · I`
/// and traceless part `A`, returns `atanh((T1 + T2 + A)(I + S)⁻¹)`.
pub fn matrix_bch<T: Scalar>(
    s1: &GeneratorMatrix2<T>,
    s2: &GeneratorMatrix2<T>,
) -> Result<GeneratorMatrix2<T>> {
    let t1 = matrix_tanh(s1)?.0;
    let t2 = matrix_tanh(s2)?.0;
    let p = t1 * t2;
    let s = p.trace() * T::lit(0.5);
    let mut a = p;
    a.m[0][0] = a.m[0][0] - s;
    a.m[1][1] = a.m[1][1] - s;
    debug_assert!(a.trace().norm() <= T::lit(1e-9) * (T::one() + p.trace().norm()));
    let den = c(T::one(), T::zero()) + s;
    if den.norm() < T::singular_tolerance() {
        return Err(Error::SingularDenominator);
    }
    let num = t1 + t2 + a;
    matrix_atanh(&GeneratorMatrix2(num.scale(den.inv())))
}
