#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotor_bch::{BladeIndex, Bivector, LorentzGenerator, Multivector, Signature};

pub type Mv = Multivector<f64>;
pub type Biv = Bivector<f64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..=hi)
}

pub fn random_mv(rng: &mut ChaCha8Rng, sig: Signature) -> Mv {
    let c: Vec<f64> = (0..sig.blade_count()).map(|_| uniform(rng, -1.0, 1.0)).collect();
    Mv::from_coeffs(sig, &c).unwrap()
}

pub fn random_grade(rng: &mut ChaCha8Rng, sig: Signature, k: usize) -> Mv {
    let mut m = Mv::zero(sig);
    for i in 0..sig.blade_count() {
        if BladeIndex(i).grade() == k {
            m.set_coeff(BladeIndex(i), uniform(rng, -1.0, 1.0));
        }
    }
    m
}

pub fn random_even(rng: &mut ChaCha8Rng, sig: Signature) -> Mv {
    random_mv(rng, sig).grades(&[0, 2, 4])
}

pub fn random_bivector(rng: &mut ChaCha8Rng, sig: Signature) -> Biv {
    Biv::project(&random_grade(rng, sig, 2))
}

pub fn random_vector(rng: &mut ChaCha8Rng, sig: Signature) -> Mv {
    random_grade(rng, sig, 1)
}

pub fn random_generator(rng: &mut ChaCha8Rng, max_xi: f64, max_theta: f64) -> LorentzGenerator<f64> {
    LorentzGenerator::new(
        random_ball(rng, max_xi),
        random_ball(rng, max_theta),
    )
}

/// Uniform point in the closed ball of radius `r` by rejection.
pub fn random_ball(rng: &mut ChaCha8Rng, r: f64) -> [f64; 3] {
    loop {
        let v = [0; 3].map(|_| uniform(rng, -1.0, 1.0));
        if v.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            return v.map(|x| x * r);
        }
    }
}

pub fn e(sig: Signature, i: usize) -> Mv {
    Mv::basis_vector(sig, i).unwrap()
}

/// Signatures whose pseudoscalar squares to −1 on bivectors and the split ones
/// used across the test-suite.
pub fn bch_signatures() -> [Signature; 5] {
    [
        Signature::EUCLIDEAN2,
        Signature::ANTI_EUCLIDEAN2,
        Signature::HYPERBOLIC,
        Signature::EUCLIDEAN3,
        Signature::SPACETIME,
    ]
}

pub type Mat3 = [[f64; 3]; 3];

/// Right-handed rotation by `angle` about unit `axis`.
pub fn axis_angle_matrix(axis: [f64; 3], angle: f64) -> Mat3 {
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    let [x, y, z] = axis;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Matrix of the Rodrigues vector `r = tan(θ/2) n̂`, right-handed.
pub fn rodrigues_matrix(r: [f64; 3]) -> Mat3 {
    let n = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if n == 0.0 {
        return axis_angle_matrix([1.0, 0.0, 0.0], 0.0);
    }
    axis_angle_matrix(r.map(|x| x / n), 2.0 * n.atan())
}

pub fn mat3_max_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}
