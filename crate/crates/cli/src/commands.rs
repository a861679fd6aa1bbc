use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use rotor_bch::kinematics::{self, HalfVelocity3};
use rotor_bch::pauli::{generator_to_matrix2, matrix2_to_generator, matrix_bch};
use rotor_bch::spacetime::{
    bivector_to_generator, generator_matrix, generator_to_bivector, generator_to_matrix,
    matrix_exp_so13, matrix_to_generator,
};
use rotor_bch::{
    bch, BladeIndex, Bivector64, Error, LorentzGenerator64, LorentzMatrix64, Velocity3,
};

use crate::{Backend, CliError, GeneratorRecord, Result};

/// Matrices given to `log` must satisfy the Lorentz conditions to this
/// tolerance.
pub const LOG_INPUT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComposeReport {
    pub backend: Backend,
    pub inputs: Vec<GeneratorRecord>,
    pub composed: GeneratorRecord,
    /// Row-major matrix of the composed generator along the rotor path.
    pub matrix: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wigner_angle: Option<f64>,
    /// Max-abs difference between `matrix` and the product of the inputs'
    /// matrix exponentials.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpReport {
    pub generator: GeneratorRecord,
    pub rotor_matrix: Vec<f64>,
    pub oracle_matrix: Vec<f64>,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogReport {
    pub generator: GeneratorRecord,
    /// Max-abs difference between the input and the exponential of `generator`.
    pub residual: f64,
}

/// A unit bivector of GA(3) by its `e23`, `e31`, `e12` coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Plane {
    pub e23: f64,
    pub e31: f64,
    pub e12: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VelocityReport {
    pub beta1: [f64; 3],
    pub beta2: [f64; 3],
    pub w1: [f64; 3],
    pub w2: [f64; 3],
    pub w: [f64; 3],
    pub beta: [f64; 3],
    pub speed: f64,
    pub wigner_angle: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<Plane>,
}

fn compose_pair(
    backend: Backend,
    a: &LorentzGenerator64,
    b: &LorentzGenerator64,
) -> rotor_bch::Result<LorentzGenerator64> {
    match backend {
        Backend::Ga => {
            let s = bch(&generator_to_bivector(a), &generator_to_bivector(b))?;
            bivector_to_generator(&s)
        }
        Backend::Pauli => Ok(matrix2_to_generator(&matrix_bch(
            &generator_to_matrix2(a),
            &generator_to_matrix2(b),
        )?)),
    }
}

fn oracle_matrix(g: &LorentzGenerator64) -> LorentzMatrix64 {
    matrix_exp_so13(&generator_matrix(g))
}

/// Left fold of BCH over `inputs`.
pub fn cmd_compose(inputs: &[GeneratorRecord], backend: Backend) -> Result<ComposeReport> {
    if inputs.len() < 2 {
        return Err(CliError::Malformed(format!(
            "compose needs at least two generators, got {}",
            inputs.len()
        )));
    }
    let gens = inputs
        .iter()
        .map(GeneratorRecord::generator)
        .collect::<Result<Vec<_>>>()?;
    let mut acc = gens[0];
    let mut oracle = oracle_matrix(&gens[0]);
    for (i, g) in gens.iter().enumerate().skip(1) {
        acc = compose_pair(backend, &acc, g).map_err(|err| match err {
            Error::SingularDenominator => CliError::Singular(format!(
                "{err} when composing inputs 0..{i} with input {i}"
            )),
            other => other.into(),
        })?;
        oracle = oracle.compose(&oracle_matrix(g));
    }
    let matrix = generator_to_matrix(&acc);
    let wigner_angle = match gens.as_slice() {
        [a, b] if a.is_pure_boost() && b.is_pure_boost() => Some(
            kinematics::wigner_angle(
                &HalfVelocity3::from_rapidity(&a.xi),
                &HalfVelocity3::from_rapidity(&b.xi),
            )
            .theta,
        ),
        _ => None,
    };
    Ok(ComposeReport {
        backend,
        inputs: inputs.to_vec(),
        composed: acc.into(),
        matrix: matrix.to_row_major().to_vec(),
        wigner_angle,
        residual: matrix.max_abs_diff(&oracle),
    })
}

pub fn cmd_exp(record: &GeneratorRecord) -> Result<ExpReport> {
    let g = record.generator()?;
    let rotor = generator_to_matrix(&g);
    let oracle = oracle_matrix(&g);
    Ok(ExpReport {
        generator: record.clone(),
        rotor_matrix: rotor.to_row_major().to_vec(),
        oracle_matrix: oracle.to_row_major().to_vec(),
        residual: rotor.max_abs_diff(&oracle),
    })
}

pub fn cmd_log(entries: &[f64; 16]) -> Result<LogReport> {
    let m = LorentzMatrix64::from_row_major(entries);
    let lambda = LorentzMatrix64::new_with_tolerance(m, LOG_INPUT_TOLERANCE)?;
    let g = matrix_to_generator(&lambda)?;
    Ok(LogReport {
        generator: g.into(),
        residual: oracle_matrix(&g).max_abs_diff(&lambda),
    })
}

pub fn cmd_velocity(beta1: &[f64; 3], beta2: &[f64; 3]) -> Result<VelocityReport> {
    let v1 = Velocity3::new(*beta1)?;
    let v2 = Velocity3::new(*beta2)?;
    let w1 = kinematics::half_velocity(&v1)?;
    let w2 = kinematics::half_velocity(&v2)?;
    let w = kinematics::compose_half_velocities(&w1, &w2)?;
    let v = kinematics::full_velocity(&w)?;
    let wr = kinematics::wigner_angle(&w1, &w2);
    Ok(VelocityReport {
        beta1: *beta1,
        beta2: *beta2,
        w1: w1.w,
        w2: w2.w,
        w: w.w,
        beta: v.beta,
        speed: v.speed(),
        wigner_angle: wr.theta,
        plane: wr.plane.as_ref().map(plane_of),
    })
}

fn plane_of(b: &Bivector64) -> Plane {
    let m = b.as_multivector();
    Plane {
        e23: m.coeff(BladeIndex(0b110)),
        e31: -m.coeff(BladeIndex(0b101)),
        e12: m.coeff(BladeIndex(0b011)),
    }
}

fn fmt_vec(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:.12}")).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_matrix(out: &mut String, m: &[f64]) {
    for row in m.chunks(4) {
        let _ = writeln!(out, "  {}", fmt_vec(row));
    }
}

impl ComposeReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = match self.backend {
            Backend::Ga => "ga",
            Backend::Pauli => "pauli",
        };
        let _ = writeln!(out, "backend: {name}");
        let _ = writeln!(out, "xi:      {}", fmt_vec(&self.composed.xi));
        let _ = writeln!(out, "theta:   {}", fmt_vec(&self.composed.theta));
        let _ = writeln!(out, "matrix:");
        fmt_matrix(&mut out, &self.matrix);
        if let Some(w) = self.wigner_angle {
            let _ = writeln!(out, "wigner angle: {w:.12}");
        }
        let _ = writeln!(out, "residual: {:e}", self.residual);
        out
    }
}

impl ExpReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rotor matrix:");
        fmt_matrix(&mut out, &self.rotor_matrix);
        let _ = writeln!(out, "oracle matrix:");
        fmt_matrix(&mut out, &self.oracle_matrix);
        let _ = writeln!(out, "residual: {:e}", self.residual);
        out
    }
}

impl LogReport {
    pub fn to_text(&self) -> String {
        format!(
            "xi:      {}\ntheta:   {}\nresidual: {:e}\n",
            fmt_vec(&self.generator.xi),
            fmt_vec(&self.generator.theta),
            self.residual
        )
    }
}

impl VelocityReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "w1:    {}", fmt_vec(&self.w1));
        let _ = writeln!(out, "w2:    {}", fmt_vec(&self.w2));
        let _ = writeln!(out, "w:     {}", fmt_vec(&self.w));
        let _ = writeln!(out, "beta:  {}", fmt_vec(&self.beta));
        let _ = writeln!(out, "speed: {:.12}", self.speed);
        let _ = writeln!(out, "wigner angle: {:.12}", self.wigner_angle);
        if let Some(p) = &self.plane {
            let _ = writeln!(out, "plane: e23 {:.12}, e31 {:.12}, e12 {:.12}", p.e23, p.e31, p.e12);
        }
        out
    }
}
