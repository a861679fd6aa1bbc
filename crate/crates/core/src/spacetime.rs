//! Spacetime GA(1,3): the K-frame parametrization of Lorentz generators by
//! rapidities and angles, the space/time split, and the 4×4 vector
//! representation.
//!
//! Conventions: γ0² = +1, γi² = −1, relative vectors `σ_i = γ_i γ_0` (which
//! square to +1), 𝕚 = γ0γ1γ2γ3 = σ1σ2σ3, and ε₁₂₃ = +1. A generator
//! `(ξ, θ)` maps to `σ = ½ Σ (ξ^i + 𝕚θ^i) σ_i`.

use crate::error::{Error, Result};
use crate::ga::{BladeIndex, Multivector, Signature};
use crate::plane::ScalarPseudo;
use crate::rotor::{self, Bivector, Rotor};
use crate::scalar::Scalar;

const STA: Signature = Signature::SPACETIME;

/// Rapidity and angle triples in the K frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LorentzGenerator<T> {
    pub xi: [T; 3],
    pub theta: [T; 3],
}

impl<T: Scalar> LorentzGenerator<T> {
    pub fn new(xi: [T; 3], theta: [T; 3]) -> Self {
        LorentzGenerator { xi, theta }
    }

    pub fn zero() -> Self {
        Self::new([T::zero(); 3], [T::zero(); 3])
    }

    pub fn boost(xi: [T; 3]) -> Self {
        Self::new(xi, [T::zero(); 3])
    }

    pub fn rotation(theta: [T; 3]) -> Self {
        Self::new([T::zero(); 3], theta)
    }

    pub fn is_pure_boost(&self) -> bool {
        self.theta.iter().all(|&t| t == T::zero())
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.xi
            .iter()
            .chain(self.theta.iter())
            .zip(other.xi.iter().chain(other.theta.iter()))
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).abs()))
    }
}

fn check_spacetime(sig: Signature) -> Result<()> {
    if sig != STA {
        return Err(Error::WrongSignature {
            expected_p: 1,
            expected_q: 3,
            p: sig.p(),
            q: sig.q(),
        });
    }
    Ok(())
}

fn gamma<T: Scalar>(i: usize) -> Multivector<T> {
    Multivector::basis_vector(STA, i).expect("spacetime index")
}

/// Relative vector `σ_i = γ_i γ_0` for `i ∈ {1,2,3}` (0-based `k = i − 1`).
pub fn relative_vector<T: Scalar>(k: usize) -> Multivector<T> {
    gamma::<T>(k + 1) * gamma::<T>(0)
}

/// Relative bivector `𝕚σ_k`.
pub fn relative_dual<T: Scalar>(k: usize) -> Multivector<T> {
    Multivector::pseudoscalar(STA) * relative_vector::<T>(k)
}

/// Single signed blade `(index, sign)` carried by a basis element.
fn signed_blade<T: Scalar>(m: &Multivector<T>) -> (BladeIndex, T) {
    let i = (0..STA.blade_count())
        .find(|&i| m.coeff(BladeIndex(i)) != T::zero())
        .expect("non-zero basis image");
    (BladeIndex(i), m.coeff(BladeIndex(i)))
}

pub fn generator_to_bivector<T: Scalar>(g: &LorentzGenerator<T>) -> Bivector<T> {
    let half = T::lit(0.5);
    let mut mv = Multivector::zero(STA);
    for k in 0..3 {
        mv += relative_vector::<T>(k) * (half * g.xi[k]);
        mv += relative_dual::<T>(k) * (half * g.theta[k]);
    }
    Bivector::project(&mv)
}

/// Space/time split `F ≅ E + 𝕚B` relative to γ0.
pub fn spacetime_split<T: Scalar>(f: &Bivector<T>) -> Result<([T; 3], [T; 3])> {
    check_spacetime(f.signature())?;
    let m = f.as_multivector();
    let mut e = [T::zero(); 3];
    let mut b = [T::zero(); 3];
    for k in 0..3 {
        let (idx, s) = signed_blade(&relative_vector::<T>(k));
        e[k] = m.coeff(idx) * s;
        let (idx, s) = signed_blade(&relative_dual::<T>(k));
        b[k] = m.coeff(idx) * s;
    }
    Ok((e, b))
}

/// Inverse of the split: `E + 𝕚B` as a spacetime bivector.
pub fn spacetime_unsplit<T: Scalar>(e: &[T; 3], b: &[T; 3]) -> Bivector<T> {
    let mut mv = Multivector::zero(STA);
    for k in 0..3 {
        mv += relative_vector::<T>(k) * e[k] + relative_dual::<T>(k) * b[k];
    }
    Bivector::project(&mv)
}

pub fn bivector_to_generator<T: Scalar>(sigma: &Bivector<T>) -> Result<LorentzGenerator<T>> {
    let (e, b) = spacetime_split(sigma)?;
    let two = T::lit(2.0);
    Ok(LorentzGenerator::new(e.map(|x| x * two), b.map(|x| x * two)))
}

/// Image of a GA(3) blade under `e_k ↦ σ_k`, as a signed GA(1,3) blade.
fn even_image<T: Scalar>(blade: usize) -> (BladeIndex, T) {
    let mut m = Multivector::<T>::one(STA);
    for k in 0..3 {
        if blade & (1 << k) != 0 {
            m = m * relative_vector::<T>(k);
        }
    }
    signed_blade(&m)
}

/// The frame isomorphism GA(3) → even GA(1,3), `e_k ↦ γ_k γ_0`.
pub fn to_spacetime<T: Scalar>(a: &Multivector<T>) -> Result<Multivector<T>> {
    let sig = a.signature();
    if sig != Signature::EUCLIDEAN3 {
        return Err(Error::WrongSignature {
            expected_p: 3,
            expected_q: 0,
            p: sig.p(),
            q: sig.q(),
        });
    }
    let mut out = Multivector::zero(STA);
    for i in 0..8 {
        let (idx, s) = even_image::<T>(i);
        out.set_coeff(idx, out.coeff(idx) + s * a.coeff(BladeIndex(i)));
    }
    Ok(out)
}

/// Inverse of [`to_spacetime`]; the input must be even.
pub fn from_spacetime<T: Scalar>(a: &Multivector<T>) -> Result<Multivector<T>> {
    check_spacetime(a.signature())?;
    if !a.is_even() {
        return Err(Error::OddGrade);
    }
    let mut out = Multivector::zero(Signature::EUCLIDEAN3);
    for i in 0..8 {
        let (idx, s) = even_image::<T>(i);
        out.set_coeff(BladeIndex(i), a.coeff(idx) * s);
    }
    Ok(out)
}

pub type Matrix4<T> = [[T; 4]; 4];

fn identity4<T: Scalar>() -> Matrix4<T> {
    let mut m = [[T::zero(); 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = T::one();
    }
    m
}

fn matmul4<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> Matrix4<T> {
    let mut out = [[T::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = T::zero();
            for k in 0..4 {
                s = s + a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

fn max_abs_diff4<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> T {
    let mut d = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

fn eta<T: Scalar>(i: usize) -> T {
    if i == 0 {
        T::one()
    } else {
        -T::one()
    }
}

fn det4<T: Scalar>(m: &Matrix4<T>) -> T {
    // Laplace expansion along 2×2 minors of the first two rows.
    let s0 = m[0][0] * m[1][1] - m[1][0] * m[0][1];
    let s1 = m[0][0] * m[1][2] - m[1][0] * m[0][2];
    let s2 = m[0][0] * m[1][3] - m[1][0] * m[0][3];
    let s3 = m[0][1] * m[1][2] - m[1][1] * m[0][2];
    let s4 = m[0][1] * m[1][3] - m[1][1] * m[0][3];
    let s5 = m[0][2] * m[1][3] - m[1][2] * m[0][3];
    let c5 = m[2][2] * m[3][3] - m[3][2] * m[2][3];
    let c4 = m[2][1] * m[3][3] - m[3][1] * m[2][3];
    let c3 = m[2][1] * m[3][2] - m[3][1] * m[2][2];
    let c2 = m[2][0] * m[3][3] - m[3][0] * m[2][3];
    let c1 = m[2][0] * m[3][2] - m[3][0] * m[2][2];
    let c0 = m[2][0] * m[3][1] - m[3][0] * m[2][1];
    s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
}

/// Element of so(1,3) in the mixed-index layout used by [`generator_matrix`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorMatrix4<T> {
    pub m: Matrix4<T>,
}

/// Element of SO⁺(1,3) acting on contravariant components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix4<T> {
    pub m: Matrix4<T>,
}

impl<T: Scalar> LorentzMatrix4<T> {
    pub fn identity() -> Self {
        LorentzMatrix4 { m: identity4() }
    }

    /// Validates `mᵀ η m = η` within `tol`, `det m > 0` and `m₀₀ ≥ 1`.
    pub fn new_with_tolerance(m: Matrix4<T>, tol: T) -> Result<Self> {
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NotLorentz {
                reason: "non-finite entry".into(),
            });
        }
        let l = LorentzMatrix4 { m };
        let residual = l.metric_residual();
        if residual > tol {
            return Err(Error::NotLorentz {
                reason: format!("metric residual {residual:?}"),
            });
        }
        let det = det4(&m);
        if det <= T::zero() {
            return Err(Error::NotLorentz {
                reason: "improper (det < 0)".into(),
            });
        }
        if m[0][0] < T::one() - tol {
            return Err(Error::NotLorentz {
                reason: "not orthochronous".into(),
            });
        }
        Ok(l)
    }

    pub fn new(m: Matrix4<T>) -> Result<Self> {
        Self::new_with_tolerance(m, T::rotor_tolerance())
    }

    pub fn new_unchecked(m: Matrix4<T>) -> Self {
        LorentzMatrix4 { m }
    }

    /// `max |mᵀ η m − η|`.
    pub fn metric_residual(&self) -> T {
        let m = &self.m;
        let mut r = T::zero();
        for a in 0..4 {
            for b in 0..4 {
                let mut s = T::zero();
                for c in 0..4 {
                    s = s + m[c][a] * eta::<T>(c) * m[c][b];
                }
                let target = if a == b { eta::<T>(a) } else { T::zero() };
                r = r.max((s - target).abs());
            }
        }
        r
    }

    pub fn determinant(&self) -> T {
        det4(&self.m)
    }

    pub fn compose(&self, other: &Self) -> Self {
        LorentzMatrix4 {
            m: matmul4(&self.m, &other.m),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        max_abs_diff4(&self.m, &other.m)
    }

    /// Row-major entries.
    pub fn to_row_major(&self) -> [T; 16] {
        let mut out = [T::zero(); 16];
        for i in 0..4 {
            for j in 0..4 {
                out[4 * i + j] = self.m[i][j];
            }
        }
        out
    }

    pub fn from_row_major(entries: &[T; 16]) -> Matrix4<T> {
        let mut m = [[T::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = entries[4 * i + j];
            }
        }
        m
    }
}

/// The so(1,3) generator: ξ in the first row and column, `ε_ijk θ^k` in the
/// spatial block.
pub fn generator_matrix<T: Scalar>(g: &LorentzGenerator<T>) -> GeneratorMatrix4<T> {
    let z = T::zero();
    let [x1, x2, x3] = g.xi;
    let [t1, t2, t3] = g.theta;
    GeneratorMatrix4 {
        m: [
            [z, x1, x2, x3],
            [x1, z, t3, -t2],
            [x2, -t3, z, t1],
            [x3, t2, -t1, z],
        ],
    }
}

const EXP_TAYLOR_DEGREE: usize = 13;

/// Matrix exponential by scaling and squaring around a degree-13 Taylor core.
/// The input is scaled by `2^-s` until its ∞-norm is at most ½.
pub fn matrix_exp_so13<T: Scalar>(g: &GeneratorMatrix4<T>) -> LorentzMatrix4<T> {
    let norm = g
        .m
        .iter()
        .map(|row| row.iter().fold(T::zero(), |acc, x| acc + x.abs()))
        .fold(T::zero(), T::max);
    let mut squarings = 0u32;
    let mut scale = T::one();
    let half = T::lit(0.5);
    while norm * scale > half {
        scale = scale * half;
        squarings += 1;
    }
    let mut a = g.m;
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = *x * scale;
        }
    }
    // Horner: I + A(1 + A/2(1 + A/3(…))).
    let id = identity4::<T>();
    let mut acc = id;
    for k in (1..=EXP_TAYLOR_DEGREE).rev() {
        let mut next = matmul4(&a, &acc);
        let inv_k = T::from_usize(k).unwrap().recip();
        for i in 0..4 {
            for j in 0..4 {
                next[i][j] = id[i][j] + next[i][j] * inv_k;
            }
        }
        acc = next;
    }
    for _ in 0..squarings {
        acc = matmul4(&acc, &acc);
    }
    LorentzMatrix4 { m: acc }
}

/// `Λ^a_b = η^{aa} ⟨γ_a R γ_b R̃⟩₀`.
pub fn rotor_to_matrix<T: Scalar>(rotor: &Rotor<T>) -> Result<LorentzMatrix4<T>> {
    check_spacetime(rotor.signature())?;
    let residual = rotor.membership_residual();
    if !(residual <= T::rotor_tolerance()) {
        return Err(Error::NotARotor {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut m = [[T::zero(); 4]; 4];
    for b in 0..4 {
        let image = rotor.apply(&gamma(b))?;
        for (a, row) in m.iter_mut().enumerate() {
            // ⟨γ_a v⟩₀ = η_aa v^a, so raising the index recovers v^a.
            row[b] = image.coeff(BladeIndex(1 << a));
        }
    }
    Ok(LorentzMatrix4 { m })
}

/// Rotor (up to sign) whose action is `lambda`, rebuilt from the images of
/// the basis vectors: `ψ = Σ_a Λ(γ_a) γ^a = 4R⟨R̃⟩₀,₄` normalized by `√(ψψ̃)`.
pub fn matrix_to_rotor<T: Scalar>(lambda: &LorentzMatrix4<T>) -> Result<Rotor<T>> {
    let mut psi = Multivector::zero(STA);
    for a in 0..4 {
        let mut image = Multivector::zero(STA);
        for b in 0..4 {
            image += gamma::<T>(b) * lambda.m[b][a];
        }
        psi += image * (gamma::<T>(a) * eta::<T>(a));
    }
    let norm = ScalarPseudo::from_invariant_part(&(psi * psi.reverse()));
    let root = norm.sqrt().map_err(|_| Error::PiRotation)?;
    let inv = root.inverse().ok_or(Error::PiRotation)?;
    let r = inv.scale(&psi).grades(&[0, 2, 4]);
    Rotor::new(r)
}

/// Principal generator of a Lorentz matrix via its rotor and [`rotor::log`].
pub fn matrix_to_generator<T: Scalar>(lambda: &LorentzMatrix4<T>) -> Result<LorentzGenerator<T>> {
    let r = matrix_to_rotor(lambda)?;
    bivector_to_generator(&rotor::log(&r)?)
}

/// Lorentz matrix of a generator along the rotor path.
pub fn generator_to_matrix<T: Scalar>(g: &LorentzGenerator<T>) -> LorentzMatrix4<T> {
    let r = rotor::exp(&generator_to_bivector(g));
    rotor_to_matrix(&r).expect("exponential of a spacetime bivector is a rotor")
}
