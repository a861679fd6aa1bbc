//! Seeded timing of the three composition paths on random generator pairs.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use rotor_bch::pauli::{generator_to_matrix2, matrix2_to_generator, matrix_bch};
use rotor_bch::spacetime::{
    bivector_to_generator, generator_matrix, generator_to_bivector, matrix_exp_so13,
    matrix_to_generator,
};
use rotor_bch::{bch, LorentzGenerator64, LorentzMatrix64};

const REPEATS: usize = 7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: usize,
    pub seed: u64,
    /// Pairs whose BCH denominator was singular; excluded from residuals.
    pub singular: usize,
    pub pauli_ns: f64,
    pub ga_ns: f64,
    pub dense_ns: f64,
    /// Largest max-abs difference between the Lorentz matrices of the three
    /// composed generators and the direct product of the input matrices.
    pub max_residual: f64,
}

impl BenchReport {
    pub fn speedup_vs_ga(&self) -> f64 {
        self.ga_ns / self.pauli_ns
    }

    pub fn speedup_vs_dense(&self) -> f64 {
        self.dense_ns / self.pauli_ns
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pairs: {}  seed: {}  singular: {}", self.n, self.seed, self.singular);
        let _ = writeln!(out, "{:<28} {:>12} {:>10}", "path", "median ns/op", "vs pauli");
        let _ = writeln!(out, "{:<28} {:>12.1} {:>10.2}", "pauli matrix_bch", self.pauli_ns, 1.0);
        let _ = writeln!(out, "{:<28} {:>12.1} {:>10.2}", "ga bch", self.ga_ns, self.speedup_vs_ga());
        let _ = writeln!(
            out,
            "{:<28} {:>12.1} {:>10.2}",
            "dense exp/multiply/log",
            self.dense_ns,
            self.speedup_vs_dense()
        );
        let _ = writeln!(out, "max residual: {:e}", self.max_residual);
        out
    }
}

/// `n` generator pairs with every component uniform in [−1, 1].
pub fn bench_inputs(n: usize, seed: u64) -> Vec<(LorentzGenerator64, LorentzGenerator64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gen = || {
        let mut c = [0.0; 6];
        for x in c.iter_mut() {
            *x = rng.gen_range(-1.0..=1.0);
        }
        LorentzGenerator64::new([c[0], c[1], c[2]], [c[3], c[4], c[5]])
    };
    (0..n).map(|_| (gen(), gen())).collect()
}

fn pauli_path(a: &LorentzGenerator64, b: &LorentzGenerator64) -> Option<LorentzGenerator64> {
    matrix_bch(&generator_to_matrix2(a), &generator_to_matrix2(b))
        .ok()
        .map(|m| matrix2_to_generator(&m))
}

fn ga_path(a: &LorentzGenerator64, b: &LorentzGenerator64) -> Option<LorentzGenerator64> {
    let s = bch(&generator_to_bivector(a), &generator_to_bivector(b)).ok()?;
    bivector_to_generator(&s).ok()
}

fn dense_product(a: &LorentzGenerator64, b: &LorentzGenerator64) -> LorentzMatrix64 {
    matrix_exp_so13(&generator_matrix(a)).compose(&matrix_exp_so13(&generator_matrix(b)))
}

fn dense_path(a: &LorentzGenerator64, b: &LorentzGenerator64) -> Option<LorentzGenerator64> {
    matrix_to_generator(&dense_product(a, b)).ok()
}

fn median_ns<F>(pairs: &[(LorentzGenerator64, LorentzGenerator64)], f: F) -> f64
where
    F: Fn(&LorentzGenerator64, &LorentzGenerator64) -> Option<LorentzGenerator64>,
{
    let mut samples: Vec<f64> = (0..REPEATS)
        .map(|_| {
            let start = Instant::now();
            for (a, b) in pairs {
                black_box(f(black_box(a), black_box(b)));
            }
            start.elapsed().as_nanos() as f64 / pairs.len() as f64
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[REPEATS / 2]
}

pub fn cmd_bench(n: usize, seed: u64) -> BenchReport {
    let pairs = bench_inputs(n.max(1), seed);
    let mut singular = 0;
    let mut max_residual: f64 = 0.0;
    for (a, b) in &pairs {
        let target = dense_product(a, b);
        let results = [pauli_path(a, b), ga_path(a, b), dense_path(a, b)];
        if results.iter().any(Option::is_none) {
            singular += 1;
            continue;
        }
        for g in results.iter().flatten() {
            max_residual = max_residual.max(matrix_exp_so13(&generator_matrix(g)).max_abs_diff(&target));
        }
    }
    BenchReport {
        n: pairs.len(),
        seed,
        singular,
        pauli_ns: median_ns(&pairs, pauli_path),
        ga_ns: median_ns(&pairs, ga_path),
        dense_ns: median_ns(&pairs, dense_path),
        max_residual,
    }
}
