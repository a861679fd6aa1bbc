use thiserror::Error;

/// Errors raised by the algebra, the rotor calculus and the representations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature ({p},{q}) unsupported: need 1 <= p+q <= 4")]
    InvalidSignature { p: usize, q: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("signature mismatch: ({0},{1}) vs ({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("operation requires signature ({expected_p},{expected_q}), got ({p},{q})")]
    WrongSignature {
        expected_p: usize,
        expected_q: usize,
        p: usize,
        q: usize,
    },
    #[error("multivector is not a pure bivector (off-grade residual {residual:e})")]
    NotBivector { residual: f64 },
    #[error("multivector has odd-grade components")]
    OddGrade,
    #[error("not a rotor: |R R~ - 1| = {residual:e}")]
    NotARotor { residual: f64 },
    #[error("reflection vector is not unit: v^2 = {square}")]
    NonUnitVector { square: f64 },
    #[error("no square root in the scalar-pseudoscalar plane")]
    NoRoot,
    #[error("inverse hyperbolic tangent evaluated at its pole")]
    AtanhPole,
    #[error("rotor log undefined: self-reverse part is not invertible (rotation by pi)")]
    PiRotation,
    #[error("BCH denominator 1 + T1.T2 + T1^T2 is not invertible")]
    SingularDenominator,
    #[error("Rodrigues denominator 1 - r1.r2 vanishes (composite rotation by pi)")]
    RodriguesSingular,
    #[error("speed {norm} is not below the speed of light")]
    Superluminal { norm: f64 },
    #[error("matrix is not a proper orthochronous Lorentz transformation ({reason})")]
    NotLorentz { reason: String },
    #[error("series order {0} unsupported (max 6)")]
    UnsupportedOrder(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
