mod common;

use common::*;
use proptest::prelude::*;
use rotor_bch::kinematics::{
    boost_boost_decompose, compose_half_velocities, full_velocity, half_velocity, wigner_angle,
};
use rotor_bch::spacetime::{bivector_to_generator, generator_matrix, generator_to_bivector, matrix_exp_so13, to_spacetime};
use rotor_bch::{bch, exp, tanh, Bivector, HalfVelocity3, LorentzGenerator, Signature, Velocity3};

const E3: Signature = Signature::EUCLIDEAN3;

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// `β1 ⊕ β2 = (β1 + β2∥ + β2⊥/γ1)/(1 + β1·β2)`.
fn einstein_add(b1: &[f64; 3], b2: &[f64; 3]) -> [f64; 3] {
    let g1 = 1.0 / (1.0 - dot(b1, b1)).sqrt();
    let n1 = dot(b1, b1);
    let par = if n1 == 0.0 { [0.0; 3] } else { b1.map(|x| x * dot(b1, b2) / n1) };
    let d = 1.0 + dot(b1, b2);
    [0, 1, 2].map(|k| (b1[k] + par[k] + (b2[k] - par[k]) / g1) / d)
}

/// Velocity and Wigner angle from the 4×4 product of the two boost matrices:
/// `Λ = L(β) R` with `β^i = Λ^i_0/Λ^0_0` and `cos θ = (tr R₃ − 1)/2`.
fn matrix_oracle(xi1: &[f64; 3], xi2: &[f64; 3]) -> ([f64; 3], f64) {
    let l1 = matrix_exp_so13(&generator_matrix(&LorentzGenerator::boost(*xi1)));
    let l2 = matrix_exp_so13(&generator_matrix(&LorentzGenerator::boost(*xi2)));
    let l = l1.compose(&l2);
    let beta = [l.m[1][0] / l.m[0][0], l.m[2][0] / l.m[0][0], l.m[3][0] / l.m[0][0]];
    let rapidity = Velocity3::new(beta).unwrap().rapidity();
    let lb = matrix_exp_so13(&generator_matrix(&LorentzGenerator::boost(rapidity.map(|x| -x))));
    let rot = lb.compose(&l);
    let tr = rot.m[1][1] + rot.m[2][2] + rot.m[3][3];
    let theta = ((tr - 1.0) / 2.0).clamp(-1.0, 1.0).acos();
    (beta, theta)
}

fn hv(w: [f64; 3]) -> HalfVelocity3<f64> {
    HalfVelocity3::new(w).unwrap()
}

#[test]
fn collinear_composition() {
    let w = half_velocity(&Velocity3::new([0.6f64, 0.0, 0.0]).unwrap()).unwrap();
    let c = full_velocity(&compose_half_velocities(&w, &w).unwrap()).unwrap();
    assert!((c.beta[0] - 1.2 / 1.36).abs() < 1e-12);
    assert_eq!((c.beta[1], c.beta[2]), (0.0, 0.0));
}

#[test]
fn perpendicular_composition() {
    let b1 = [0.6, 0.0, 0.0];
    let b2 = [0.0, 0.6, 0.0];
    let w1 = half_velocity(&Velocity3::new(b1).unwrap()).unwrap();
    let w2 = half_velocity(&Velocity3::new(b2).unwrap()).unwrap();
    let c = full_velocity(&compose_half_velocities(&w1, &w2).unwrap()).unwrap();
    let speed = (0.36f64 + 0.36 * 0.64).sqrt();
    assert!((c.speed() - speed).abs() < 1e-12);
    assert!((c.speed() - 0.768375).abs() < 1e-6);
    let oracle = einstein_add(&b1, &b2);
    for k in 0..3 {
        assert!((c.beta[k] - oracle[k]).abs() < 1e-12);
    }
}

#[test]
fn wigner_angle_for_equal_perpendicular_boosts() {
    let t = 1.0 / 3.0;
    let r = wigner_angle(&hv([t, 0.0, 0.0]), &hv([0.0, t, 0.0]));
    let expect = 2.0 * (1.0f64 / 9.0).atan();
    assert!((r.theta - expect).abs() < 1e-15);
    assert!((expect - 0.221314).abs() < 1e-6);
    let xi = HalfVelocity3::new([t, 0.0, 0.0]).unwrap().rapidity()[0];
    let (_, oracle) = matrix_oracle(&[xi, 0.0, 0.0], &[0.0, xi, 0.0]);
    assert!((r.theta - oracle).abs() < 1e-10);
    let d = boost_boost_decompose(&[xi, 0.0, 0.0], &[0.0, xi, 0.0]).unwrap();
    assert!((d.wigner_angle - expect).abs() < 1e-15);
}

#[test]
fn small_velocity_limit() {
    let b = 0.01;
    let w1 = half_velocity(&Velocity3::new([b, 0.0, 0.0]).unwrap()).unwrap();
    let w2 = half_velocity(&Velocity3::new([0.0, b, 0.0]).unwrap()).unwrap();
    let theta = wigner_angle(&w1, &w2).theta;
    let (_, oracle) = matrix_oracle(&w1.rapidity(), &w2.rapidity());
    assert!((theta - oracle).abs() < 1e-6 * oracle);
    assert!((theta - 0.5 * b * b).abs() < 1e-3 * theta);
}

#[test]
fn coplanar_grade_bookkeeping() {
    let mut r = rng(41);
    for _ in 0..200 {
        let w1 = hv(random_ball(&mut r, 0.9));
        let w2 = hv(random_ball(&mut r, 0.9));
        let w = compose_half_velocities(&w1, &w2).unwrap().as_vector();
        let rho = *wigner_angle(&w1, &w2).rho.as_multivector();
        assert!(w.wedge(&rho).unwrap().max_abs() < 1e-12);
        // tanh of the BCH generator of (boost w, rotation ρ) is w + ρ + wρ.
        let sb = Bivector::project(&to_spacetime(&w.map(|x| x)).unwrap());
        let boost = rotor_bch::atanh(&sb).unwrap();
        let rot = rotor_bch::atanh(&Bivector::project(&to_spacetime(&rho).unwrap())).unwrap();
        let t = tanh(&bch(&boost, &rot).unwrap()).unwrap();
        let expect = to_spacetime(&(w + rho + w * rho)).unwrap();
        assert!(t.as_multivector().max_abs_diff(&expect) < 1e-10);
    }
}

#[test]
fn consistency_with_bch() {
    let mut r = rng(42);
    for _ in 0..500 {
        let xi1 = random_ball(&mut r, 3.0);
        let xi2 = random_ball(&mut r, 3.0);
        let s1 = generator_to_bivector(&LorentzGenerator::boost(xi1));
        let s2 = generator_to_bivector(&LorentzGenerator::boost(xi2));
        let w1 = HalfVelocity3::from_rapidity(&xi1);
        let w2 = HalfVelocity3::from_rapidity(&xi2);
        let wr = wigner_angle(&w1, &w2);
        let t = tanh(&bch(&s1, &s2).unwrap()).unwrap();
        let g = bivector_to_generator(&t).unwrap();
        // tanh B = (w1 + w2 + w1∧w2)/(1 + w1·w2): vector part over the
        // rotation part's (1 + ρ).
        let rho_tan = norm(&g.theta) / 2.0;
        assert!((2.0 * rho_tan.atan() - wr.theta).abs() < 1e-10);
        let rho_split = to_spacetime(wr.rho.as_multivector()).unwrap();
        let rho_gen = bivector_to_generator(&Bivector::project(&rho_split)).unwrap();
        for k in 0..3 {
            assert!((g.theta[k] - rho_gen.theta[k]).abs() < 1e-10);
        }
        let v = g.xi.map(|x| x / 2.0);
        let v = rotor_bch::Multivector::vector(E3, &v).unwrap();
        let one_plus_rho = rotor_bch::Multivector::one(E3) + *wr.rho.as_multivector();
        let w = v * one_plus_rho.versor_inverse().unwrap();
        let composed = compose_half_velocities(&w1, &w2).unwrap();
        let wv = w.vector_part();
        for k in 0..3 {
            assert!((wv[k] - composed.w[k]).abs() < 1e-10);
        }
        assert!(w.off_grade_residual(&[1]) < 1e-10);
    }
}

#[test]
fn decomposition_reconstructs_product() {
    let mut r = rng(43);
    for _ in 0..1000 {
        let xi1 = random_ball(&mut r, 3.0);
        let xi2 = random_ball(&mut r, 3.0);
        let d = boost_boost_decompose(&xi1, &xi2).unwrap();
        let b1 = exp(&generator_to_bivector(&LorentzGenerator::boost(xi1)));
        let b2 = exp(&generator_to_bivector(&LorentzGenerator::boost(xi2)));
        let prod = b1 * b2;
        let scale = prod.as_multivector().max_abs().max(1.0);
        assert!((d.boost * d.rotation).distance_up_to_sign(&prod) < 1e-10 * scale);
        let (beta, theta) = matrix_oracle(&xi1, &xi2);
        let v = full_velocity(&d.half_velocity).unwrap();
        for k in 0..3 {
            assert!((v.beta[k] - beta[k]).abs() < 1e-9);
        }
        assert!((d.wigner_angle - theta).abs() < 1e-6);
        if let Some(plane) = d.plane {
            // Boost direction lies in the rotation plane.
            let (bd, _) = rotor_bch::spacetime::spacetime_split(&Bivector::project(&d.boost.as_multivector().grade_project(2))).unwrap();
            let (_, axis) = rotor_bch::spacetime::spacetime_split(&plane).unwrap();
            assert!(dot(&bd, &axis).abs() < 1e-9 * (1.0 + norm(&bd)));
        }
    }
}

#[test]
fn einstein_oracle_on_random_pairs() {
    let mut r = rng(44);
    for _ in 0..1000 {
        let b1 = random_ball(&mut r, 0.99);
        let b2 = random_ball(&mut r, 0.99);
        let w1 = half_velocity(&Velocity3::new(b1).unwrap()).unwrap();
        let w2 = half_velocity(&Velocity3::new(b2).unwrap()).unwrap();
        let c = full_velocity(&compose_half_velocities(&w1, &w2).unwrap()).unwrap();
        let oracle = einstein_add(&b1, &b2);
        for k in 0..3 {
            assert!((c.beta[k] - oracle[k]).abs() < 1e-9);
        }
    }
}

proptest! {
    #[test]
    fn velocity_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = random_ball(&mut r, 0.999);
        let v = Velocity3::new(b).unwrap();
        let back = full_velocity(&half_velocity(&v).unwrap()).unwrap();
        for k in 0..3 {
            prop_assert!((back.beta[k] - b[k]).abs() < 1e-14);
        }
        let w = half_velocity(&v).unwrap();
        let via_rapidity = HalfVelocity3::from_rapidity(&v.rapidity());
        for k in 0..3 {
            prop_assert!((w.w[k] - via_rapidity.w[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn order_changes_direction_not_speed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w1 = hv(random_ball(&mut r, 0.95));
        let w2 = hv(random_ball(&mut r, 0.95));
        let a = compose_half_velocities(&w1, &w2).unwrap();
        let b = compose_half_velocities(&w2, &w1).unwrap();
        prop_assert!((a.norm() - b.norm()).abs() < 1e-12);
        prop_assert!(a.norm() < 1.0);
    }

    #[test]
    fn swapping_reverses_plane(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w1 = hv(random_ball(&mut r, 0.95));
        let w2 = hv(random_ball(&mut r, 0.95));
        let a = wigner_angle(&w1, &w2);
        let b = wigner_angle(&w2, &w1);
        prop_assert!((a.theta - b.theta).abs() < 1e-15);
        let (pa, pb) = (a.plane.unwrap(), b.plane.unwrap());
        prop_assert!((pa + pb).norm() < 1e-15);
        prop_assert!((pa.norm() - 1.0).abs() < 1e-14);
    }
}
