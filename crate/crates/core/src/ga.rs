//! Dense multivector arithmetic for real geometric algebras GA(p,q), p+q ≤ 4.
//!
//! Basis vectors are ordered with the `p` positive-square vectors first, then
//! the `q` negative-square ones. A basis blade is addressed by the bitmask of
//! the vectors it contains, always taken in ascending index order, so the
//! coefficient array has `2^(p+q)` live slots (at most 16).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 4;
pub const MAX_BLADES: usize = 1 << MAX_DIM;

/// Metric signature `(p, q)` of the underlying vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub const EUCLIDEAN2: Signature = Signature { p: 2, q: 0 };
    pub const ANTI_EUCLIDEAN2: Signature = Signature { p: 0, q: 2 };
    pub const HYPERBOLIC: Signature = Signature { p: 1, q: 1 };
    pub const EUCLIDEAN3: Signature = Signature { p: 3, q: 0 };
    /// Minkowski spacetime with γ0² = +1, γi² = −1.
    pub const SPACETIME: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidSignature { p, q });
        }
        Ok(Signature {
            p: p as u8,
            q: q as u8,
        })
    }

    /// Every supported signature, in `(p, q)` order.
    pub fn all() -> impl Iterator<Item = Signature> {
        (1..=MAX_DIM).flat_map(|n| (0..=n).rev().map(move |p| Signature::new(p, n - p).unwrap()))
    }

    #[inline]
    pub fn p(self) -> usize {
        self.p as usize
    }

    #[inline]
    pub fn q(self) -> usize {
        self.q as usize
    }

    #[inline]
    pub fn dim(self) -> usize {
        (self.p + self.q) as usize
    }

    #[inline]
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Bitmask of the basis vectors that square to −1.
    #[inline]
    fn negative_mask(self) -> usize {
        ((1usize << self.q) - 1) << self.p
    }

    /// Square of basis vector `i` (+1 or −1).
    pub fn vector_square(self, i: usize) -> i8 {
        if i < self.p() {
            1
        } else {
            -1
        }
    }

    /// Blade index of the unit pseudoscalar.
    #[inline]
    pub fn pseudoscalar_index(self) -> BladeIndex {
        BladeIndex(self.blade_count() - 1)
    }

    /// Sign of 𝕚² for the unit pseudoscalar 𝕚 = e1 e2 ⋯ en.
    pub fn pseudoscalar_square(self) -> i8 {
        let i = self.pseudoscalar_index().0;
        self.product_sign(i, i)
    }

    /// Sign picked up by the geometric product of basis blades `a` and `b`.
    #[inline]
    pub(crate) fn product_sign(self, a: usize, b: usize) -> i8 {
        let metric = if (a & b & self.negative_mask()).count_ones() % 2 == 1 {
            -1
        } else {
            1
        };
        REORDER_SIGN[a][b] * metric
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GA({},{})", self.p, self.q)
    }
}

/// Bitmask naming a basis blade; bit `i` set means `e_i` is a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex(pub usize);

impl BladeIndex {
    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Blade built from the listed (distinct, ascending) vector indices.
    pub fn from_vectors(indices: &[usize]) -> Self {
        BladeIndex(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }
}

const fn reorder_sign(a: usize, b: usize) -> i8 {
    // Count transpositions needed to merge the two ascending words.
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

const fn reorder_table() -> [[i8; MAX_BLADES]; MAX_BLADES] {
    let mut t = [[1i8; MAX_BLADES]; MAX_BLADES];
    let mut a = 0;
    while a < MAX_BLADES {
        let mut b = 0;
        while b < MAX_BLADES {
            t[a][b] = reorder_sign(a, b);
            b += 1;
        }
        a += 1;
    }
    t
}

static REORDER_SIGN: [[i8; MAX_BLADES]; MAX_BLADES] = reorder_table();

/// Sign `(−1)^(k(k−1)/2)` applied by reversion to a grade-`k` blade.
#[inline]
pub fn reverse_sign(grade: usize) -> i8 {
    if (grade / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A general element of GA(p,q), stored densely.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector<T> {
    sig: Signature,
    coeffs: [T; MAX_BLADES],
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: [T::zero(); MAX_BLADES],
        }
    }

    pub fn scalar(sig: Signature, value: T) -> Self {
        Self::blade(sig, BladeIndex(0), value)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, T::one())
    }

    /// `value` times the basis blade `index`. Indices beyond the algebra are ignored.
    pub fn blade(sig: Signature, index: BladeIndex, value: T) -> Self {
        let mut m = Self::zero(sig);
        if index.0 < sig.blade_count() {
            m.coeffs[index.0] = value;
        }
        m
    }

    /// Unit basis vector `e_i`; `e_i² = +1` for `i < p`, `−1` otherwise.
    pub fn basis_vector(sig: Signature, i: usize) -> Result<Self> {
        if i >= sig.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: sig.dim(),
            });
        }
        Ok(Self::blade(sig, BladeIndex(1 << i), T::one()))
    }

    /// Unit pseudoscalar 𝕚 = e1 e2 ⋯ en.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, sig.pseudoscalar_index(), T::one())
    }

    /// Vector `Σ c_i e_i`. Extra components are an error.
    pub fn vector(sig: Signature, components: &[T]) -> Result<Self> {
        if components.len() > sig.dim() {
            return Err(Error::IndexOutOfRange {
                index: components.len() - 1,
                dim: sig.dim(),
            });
        }
        let mut m = Self::zero(sig);
        for (i, &c) in components.iter().enumerate() {
            m.coeffs[1 << i] = c;
        }
        Ok(m)
    }

    /// Build from the first `2^n` coefficients in blade-index order.
    pub fn from_coeffs(sig: Signature, coeffs: &[T]) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::IndexOutOfRange {
                index: coeffs.len(),
                dim: sig.blade_count(),
            });
        }
        let mut m = Self::zero(sig);
        m.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(m)
    }

    #[inline]
    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Live coefficients in blade-index order.
    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs[..self.sig.blade_count()]
    }

    #[inline]
    pub fn coeff(&self, index: BladeIndex) -> T {
        if index.0 < MAX_BLADES {
            self.coeffs[index.0]
        } else {
            T::zero()
        }
    }

    #[inline]
    pub fn set_coeff(&mut self, index: BladeIndex, value: T) {
        if index.0 < self.sig.blade_count() {
            self.coeffs[index.0] = value;
        }
    }

    #[inline]
    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    /// Coefficient of the unit pseudoscalar.
    #[inline]
    pub fn pseudoscalar_part(&self) -> T {
        self.coeffs[self.sig.pseudoscalar_index().0]
    }

    /// Vector components `(c_0, …, c_{n-1})`.
    pub fn vector_part(&self) -> Vec<T> {
        (0..self.sig.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    fn map_by_grade(&self, f: impl Fn(usize) -> T) -> Self {
        let mut out = *self;
        for (i, c) in out.coeffs[..self.sig.blade_count()].iter_mut().enumerate() {
            *c = *c * f(BladeIndex(i).grade());
        }
        out
    }

    /// `⟨A⟩_k`; zero when `k` exceeds the dimension.
    pub fn grade_project(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sig);
        for i in 0..self.sig.blade_count() {
            if BladeIndex(i).grade() == k {
                out.coeffs[i] = self.coeffs[i];
            }
        }
        out
    }

    /// Sum of the grade projections for every grade in `grades`.
    pub fn grades(&self, grades: &[usize]) -> Self {
        let mut out = Self::zero(self.sig);
        for i in 0..self.sig.blade_count() {
            if grades.contains(&BladeIndex(i).grade()) {
                out.coeffs[i] = self.coeffs[i];
            }
        }
        out
    }

    pub fn reverse(&self) -> Self {
        self.map_by_grade(|k| T::from_i8(reverse_sign(k)).unwrap())
    }

    /// Grade involution: grade-`k` part scaled by `(−1)^k`.
    pub fn involute(&self) -> Self {
        self.map_by_grade(|k| if k % 2 == 0 { T::one() } else { -T::one() })
    }

    /// Self-reverse part `½(A + Ã)`.
    pub fn srev_part(&self) -> Self {
        let mut out = *self;
        for i in 0..self.sig.blade_count() {
            if reverse_sign(BladeIndex(i).grade()) < 0 {
                out.coeffs[i] = T::zero();
            }
        }
        out
    }

    /// Anti-self-reverse part `½(A − Ã)`.
    pub fn arev_part(&self) -> Self {
        let mut out = *self;
        for i in 0..self.sig.blade_count() {
            if reverse_sign(BladeIndex(i).grade()) > 0 {
                out.coeffs[i] = T::zero();
            }
        }
        out
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(
                self.sig.p(),
                self.sig.q(),
                other.sig.p(),
                other.sig.q(),
            ));
        }
        Ok(())
    }

    fn product_unchecked(&self, other: &Self) -> Self {
        let n = self.sig.blade_count();
        let mut out = [T::zero(); MAX_BLADES];
        for i in 0..n {
            let a = self.coeffs[i];
            if a == T::zero() {
                continue;
            }
            for j in 0..n {
                let b = other.coeffs[j];
                if b == T::zero() {
                    continue;
                }
                let term = a * b;
                if self.sig.product_sign(i, j) > 0 {
                    out[i ^ j] = out[i ^ j] + term;
                } else {
                    out[i ^ j] = out[i ^ j] - term;
                }
            }
        }
        Multivector {
            sig: self.sig,
            coeffs: out,
        }
    }

    /// Geometric product `ab`.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.product_unchecked(other))
    }

    /// Outer product, extended bilinearly from `⟨ab⟩_{j+k}` on blades.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let n = self.sig.blade_count();
        let mut out = Self::zero(self.sig);
        for i in 0..n {
            let a = self.coeffs[i];
            if a == T::zero() {
                continue;
            }
            for j in 0..n {
                if i & j != 0 {
                    continue;
                }
                let b = other.coeffs[j];
                let s = T::from_i8(REORDER_SIGN[i][j]).unwrap();
                out.coeffs[i | j] = out.coeffs[i | j] + s * a * b;
            }
        }
        Ok(out)
    }

    /// Commutator product `½(ab − ba)`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let ab = self.product_unchecked(other);
        let ba = other.product_unchecked(self);
        Ok((ab - ba) * T::lit(0.5))
    }

    /// Anticommutator product `½(ab + ba)`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let ab = self.product_unchecked(other);
        let ba = other.product_unchecked(self);
        Ok((ab + ba) * T::lit(0.5))
    }

    /// Euclidean norm of the coefficient array.
    pub fn norm(&self) -> T {
        self.coeffs().iter().fold(T::zero(), |acc, &c| acc + c * c).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.coeffs()
            .iter()
            .fold(T::zero(), |acc, &c| acc.max(c.abs()))
    }

    /// Largest componentwise difference; signatures must agree.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        debug_assert_eq!(self.sig, other.sig);
        (*self - *other).max_abs()
    }

    /// True when every odd-grade coefficient is exactly zero.
    pub fn is_even(&self) -> bool {
        (0..self.sig.blade_count())
            .all(|i| BladeIndex(i).grade() % 2 == 0 || self.coeffs[i] == T::zero())
    }

    /// Largest coefficient outside the listed grades.
    pub fn off_grade_residual(&self, grades: &[usize]) -> T {
        (0..self.sig.blade_count())
            .filter(|&i| !grades.contains(&BladeIndex(i).grade()))
            .fold(T::zero(), |acc, i| acc.max(self.coeffs[i].abs()))
    }

    /// Inverse `Ã / (A Ã)` for elements whose `A Ã` is a non-zero scalar
    /// (versors, and every `{0,2}` element of GA(3)).
    pub fn versor_inverse(&self) -> Option<Self> {
        let rev = self.reverse();
        let norm = self.product_unchecked(&rev);
        let s = norm.scalar_part();
        let scale = self.max_abs() * self.max_abs();
        if norm.off_grade_residual(&[0]) > T::lit(1e-12) * scale.max(T::one())
            || s.abs() <= T::min_positive_value()
        {
            return None;
        }
        Some(rev * s.recip())
    }

    /// Direct truncated exponential series `Σ A^k/k!`, stopping early once a
    /// term drops below machine precision relative to the running sum.
    pub fn exp_series(&self, max_terms: usize) -> Self {
        let mut sum = Self::one(self.sig);
        let mut term = Self::one(self.sig);
        for k in 1..max_terms {
            term = term.product_unchecked(self) * T::from_usize(k).unwrap().recip();
            sum = sum + term;
            if term.max_abs() <= T::epsilon() * sum.max_abs() * T::lit(1e-2) {
                break;
            }
        }
        sum
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        let mut out = *self;
        for c in out.coeffs[..self.sig.blade_count()].iter_mut() {
            *c = f(*c);
        }
        out
    }

    /// Re-interpret in another scalar type.
    pub fn cast<U: Scalar>(&self) -> Multivector<U> {
        let mut out = Multivector::<U>::zero(self.sig);
        for i in 0..self.sig.blade_count() {
            out.coeffs[i] = U::from(self.coeffs[i]).unwrap();
        }
        out
    }
}

fn blade_name(sig: Signature, i: usize) -> String {
    if i == 0 {
        return String::new();
    }
    let digits: String = (0..sig.dim())
        .filter(|b| i & (1 << b) != 0)
        .map(|b| char::from_digit(b as u32, 10).unwrap())
        .collect();
    format!("e{digits}")
}

impl<T: Scalar> fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.sig)?;
        let mut first = true;
        for i in 0..self.sig.blade_count() {
            let c = self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}{}", c, blade_name(self.sig, i))?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Scalar> AddAssign for Multivector<T> {
    fn add_assign(&mut self, rhs: Self) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for i in 0..self.sig.blade_count() {
            self.coeffs[i] = self.coeffs[i] + rhs.coeffs[i];
        }
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<T: Scalar> SubAssign for Multivector<T> {
    fn sub_assign(&mut self, rhs: Self) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for i in 0..self.sig.blade_count() {
            self.coeffs[i] = self.coeffs[i] - rhs.coeffs[i];
        }
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c)
    }
}

impl<T: Scalar> Mul<T> for Multivector<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        self.map(|c| c * rhs)
    }
}

/// Geometric product. Panics on signature mismatch; use
/// [`Multivector::geometric_product`] for a fallible version.
impl<T: Scalar> Mul for Multivector<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        self.product_unchecked(&rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a Multivector<T>> for &'a Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: &'a Multivector<T>) -> Multivector<T> {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        self.product_unchecked(rhs)
    }
}
