mod common;

use common::*;
use proptest::prelude::*;
use rotor_bch::pauli::{
    from_matrix, from_matrix_ga3, generator_to_matrix2, matrix2_to_generator, matrix_atanh,
    matrix_bch, matrix_exp2, matrix_tanh, to_matrix, to_matrix_ga3,
};
use rotor_bch::spacetime::{bivector_to_generator, generator_to_bivector};
use rotor_bch::{bch, exp, Complex, Error, EvenMatrix, Signature};

const STA: Signature = Signature::SPACETIME;

fn random_matrix(r: &mut rand_chacha::ChaCha8Rng) -> EvenMatrix<f64> {
    let mut m = [[Complex::new(0.0, 0.0); 2]; 2];
    for row in m.iter_mut() {
        for z in row.iter_mut() {
            *z = Complex::new(uniform(r, -1.0, 1.0), uniform(r, -1.0, 1.0));
        }
    }
    EvenMatrix::new(m)
}

#[test]
fn backends_agree() {
    let mut r = rng(31);
    let mut compared = 0;
    for _ in 0..10_000 {
        let g1 = random_generator(&mut r, 1.0, 1.0);
        let g2 = random_generator(&mut r, 1.0, 1.0);
        let ga = bch(&generator_to_bivector(&g1), &generator_to_bivector(&g2));
        let pa = matrix_bch(&generator_to_matrix2(&g1), &generator_to_matrix2(&g2));
        match (ga, pa) {
            (Ok(a), Ok(b)) => {
                let ga_gen = bivector_to_generator(&a).unwrap();
                let pa_gen = matrix2_to_generator(&b);
                assert!(ga_gen.max_abs_diff(&pa_gen) < 1e-10, "{g1:?} {g2:?}");
                compared += 1;
            }
            (Err(Error::SingularDenominator), Err(Error::SingularDenominator)) => {}
            other => panic!("backends disagree on {g1:?} {g2:?}: {other:?}"),
        }
    }
    assert!(compared > 9_900);
}

#[test]
fn near_null_generators() {
    // A null generator and a tiny one both go through the short Taylor branch.
    let n = generator_to_matrix2(&rotor_bch::LorentzGenerator::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]));
    assert!(n.lambda_squared().norm() < 1e-16);
    let ga = tanh_ga(&rotor_bch::LorentzGenerator::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]));
    assert!(matrix_tanh(&n).unwrap().max_abs_diff(&generator_to_matrix2(&ga)) < 1e-15);
    let tiny = rotor_bch::LorentzGenerator::new([3e-9, 0.0, 0.0], [0.0, 0.0, 1e-9]);
    let m = matrix_tanh(&generator_to_matrix2(&tiny)).unwrap();
    assert!(m.max_abs_diff(&generator_to_matrix2(&tanh_ga(&tiny))) < 1e-24);
}

fn tanh_ga(g: &rotor_bch::LorentzGenerator<f64>) -> rotor_bch::LorentzGenerator<f64> {
    bivector_to_generator(&rotor_bch::tanh(&generator_to_bivector(g)).unwrap()).unwrap()
}

#[test]
fn matrix_singular_denominator() {
    let q = rotor_bch::LorentzGenerator::rotation([0.0, 0.0, std::f64::consts::FRAC_PI_2]);
    let m = generator_to_matrix2(&q);
    assert_eq!(matrix_bch(&m, &m), Err(Error::SingularDenominator));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_even(&mut r, STA);
        let b = random_even(&mut r, STA);
        let lhs = to_matrix(&(a * b)).unwrap();
        let rhs = to_matrix(&a).unwrap() * to_matrix(&b).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let g3 = Signature::EUCLIDEAN3;
        let (x, y) = (random_mv(&mut r, g3), random_mv(&mut r, g3));
        let lhs = to_matrix_ga3(&(x * y)).unwrap();
        let rhs = to_matrix_ga3(&x).unwrap() * to_matrix_ga3(&y).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn matrix_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_matrix(&mut r);
        prop_assert!(to_matrix(&from_matrix(&m)).unwrap().max_abs_diff(&m) < 1e-15);
        prop_assert!(to_matrix_ga3(&from_matrix_ga3(&m)).unwrap().max_abs_diff(&m) < 1e-15);
        let a = random_even(&mut r, STA);
        prop_assert!(from_matrix(&to_matrix(&a).unwrap()).max_abs_diff(&a) < 1e-15);
    }

    #[test]
    fn matrix_bch_matches_rotor_bch(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s1 = random_bivector(&mut r, STA);
        let s2 = random_bivector(&mut r, STA);
        let m1 = rotor_bch::pauli::GeneratorMatrix2::project(&to_matrix(s1.as_multivector()).unwrap());
        let m2 = rotor_bch::pauli::GeneratorMatrix2::project(&to_matrix(s2.as_multivector()).unwrap());
        if let (Ok(a), Ok(b)) = (bch(&s1, &s2), matrix_bch(&m1, &m2)) {
            prop_assert!(from_matrix(&b.0).max_abs_diff(a.as_multivector()) < 1e-11);
            let t = to_matrix(a.as_multivector()).unwrap();
            prop_assert!(b.0.trace().norm() < 1e-14);
            prop_assert!(t.max_abs_diff(&b.0) < 1e-11);
        }
    }

    #[test]
    fn atanh_inverts_tanh(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_generator(&mut r, 2.0, 1.5);
        let s = generator_to_matrix2(&g);
        let back = matrix_atanh(&matrix_tanh(&s).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&s) < 1e-10);
    }

    #[test]
    fn generator_squares_to_scalar(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = generator_to_matrix2(&random_generator(&mut r, 3.0, 3.0));
        let sq = s.0 * s.0;
        prop_assert!(sq.m[0][1].norm() < 1e-14 && sq.m[1][0].norm() < 1e-14);
        prop_assert!((sq.m[0][0] - sq.m[1][1]).norm() < 1e-14);
        prop_assert!(s.0.trace().norm() == 0.0);
    }

    #[test]
    fn exp_matches_rotor_image(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_generator(&mut r, 3.0, 3.0);
        let rot = exp(&generator_to_bivector(&g));
        let m = matrix_exp2(&generator_to_matrix2(&g));
        let scale = m.m.iter().flatten().fold(1.0f64, |acc, z| acc.max(z.norm()));
        prop_assert!(m.max_abs_diff(&to_matrix(rot.as_multivector()).unwrap()) < 1e-13 * scale);
    }
}
