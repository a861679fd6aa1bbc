mod common;

use common::*;
use proptest::prelude::*;
use rotor_bch::spacetime::{
    bivector_to_generator, generator_matrix, generator_to_bivector, matrix_exp_so13,
    matrix_to_generator, matrix_to_rotor, rotor_to_matrix, spacetime_split, spacetime_unsplit,
};
use rotor_bch::{bch, exp, LorentzGenerator, LorentzMatrix4, Signature};

const STA: Signature = Signature::SPACETIME;

#[test]
fn representation_consistency() {
    let mut r = rng(21);
    let mut worst: f64 = 0.0;
    for _ in 0..2000 {
        let g = random_generator(&mut r, 3.0, std::f64::consts::PI);
        let a = rotor_to_matrix(&exp(&generator_to_bivector(&g))).unwrap();
        let b = matrix_exp_so13(&generator_matrix(&g));
        worst = worst.max(a.max_abs_diff(&b));
        assert!(a.metric_residual() < 1e-9);
        assert!((a.determinant() - 1.0).abs() < 1e-9);
        assert!(a.m[0][0] >= 1.0);
    }
    assert!(worst < 1e-8, "{worst:e}");
}

#[test]
fn bch_at_matrix_level() {
    let mut r = rng(22);
    for _ in 0..1000 {
        let g1 = random_generator(&mut r, 1.5, 1.5);
        let g2 = random_generator(&mut r, 1.5, 1.5);
        let Ok(s) = bch(&generator_to_bivector(&g1), &generator_to_bivector(&g2)) else {
            continue;
        };
        let g3 = bivector_to_generator(&s).unwrap();
        let lhs = matrix_exp_so13(&generator_matrix(&g3));
        let rhs = matrix_exp_so13(&generator_matrix(&g1)).compose(&matrix_exp_so13(&generator_matrix(&g2)));
        let scale = rhs.m.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
        assert!(lhs.max_abs_diff(&rhs) < 1e-8 * scale);
    }
}

#[test]
fn boost_matrix_closed_form() {
    let xi = 1.0f64;
    let l = rotor_to_matrix(&exp(&generator_to_bivector(&LorentzGenerator::boost([xi, 0.0, 0.0])))).unwrap();
    let mut expect = [[0.0; 4]; 4];
    expect[0][0] = xi.cosh();
    expect[1][1] = xi.cosh();
    expect[0][1] = xi.sinh();
    expect[1][0] = xi.sinh();
    expect[2][2] = 1.0;
    expect[3][3] = 1.0;
    assert!(l.max_abs_diff(&LorentzMatrix4::new_unchecked(expect)) < 1e-15);
    let g = matrix_to_generator(&LorentzMatrix4::new(expect).unwrap()).unwrap();
    assert!(g.max_abs_diff(&LorentzGenerator::boost([1.0, 0.0, 0.0])) < 1e-14);
}

#[test]
fn non_lorentz_rejected() {
    let mut m = LorentzMatrix4::<f64>::identity().m;
    m[0][1] = 0.5;
    assert!(LorentzMatrix4::new(m).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn generator_bivector_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_generator(&mut r, 3.0, 3.0);
        let back = bivector_to_generator(&generator_to_bivector(&g)).unwrap();
        prop_assert!(back.max_abs_diff(&g) < 1e-15);
        let s = random_bivector(&mut r, STA);
        let again = generator_to_bivector(&bivector_to_generator(&s).unwrap());
        prop_assert!(again.as_multivector().max_abs_diff(s.as_multivector()) < 1e-15);
    }

    #[test]
    fn split_is_linear(seed in any::<u64>(), k in -2.0f64..2.0) {
        let mut r = rng(seed);
        let f = random_bivector(&mut r, STA);
        let h = random_bivector(&mut r, STA);
        let (ef, bf) = spacetime_split(&f).unwrap();
        let (eh, bh) = spacetime_split(&h).unwrap();
        let (es, bs) = spacetime_split(&(f + h * k)).unwrap();
        for i in 0..3 {
            prop_assert!((es[i] - ef[i] - k * eh[i]).abs() < 1e-14);
            prop_assert!((bs[i] - bf[i] - k * bh[i]).abs() < 1e-14);
        }
        let back = spacetime_unsplit(&ef, &bf);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn matrices_are_lorentz(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_generator(&mut r, 3.0, std::f64::consts::PI);
        let l = matrix_exp_so13(&generator_matrix(&g));
        prop_assert!(l.metric_residual() < 1e-9);
        prop_assert!(LorentzMatrix4::new(l.m).is_ok());
    }

    #[test]
    fn matrix_log_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_generator(&mut r, 2.0, 1.5);
        let l = matrix_exp_so13(&generator_matrix(&g));
        let rot = exp(&generator_to_bivector(&g));
        prop_assert!(matrix_to_rotor(&l).unwrap().distance_up_to_sign(&rot) < 1e-10);
        let back = matrix_to_generator(&l).unwrap();
        prop_assert!(back.max_abs_diff(&g) < 1e-9);
    }
}
