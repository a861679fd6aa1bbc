//! Truncated Dynkin series for `ln(e^a e^b)`, built from nested commutators.
//!
//! Used as an independent check on [`crate::rotor::bch`] for small generators.
//! The series is
//!
//! ```text
//! Σ_n (−1)^(n−1)/n  Σ  [a^{r1} b^{s1} ⋯ a^{rn} b^{sn}] / (m · Π r_i! s_i!)
//! ```
//!
//! over `r_i + s_i ≥ 1`, where `m = Σ (r_i + s_i)` and `[x1 x2 ⋯ xm]` is the
//! right-nested commutator `[x1, [x2, … [x_{m−1}, xm]]]` with `[x, y] = xy − yx`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ga::Multivector;
use crate::rotor::Bivector;
use crate::scalar::Scalar;

pub const MAX_ORDER: usize = 6;

/// Words over `{a = false, b = true}` with their Dynkin weights, for all
/// total degrees `≤ order`.
fn dynkin_words(order: usize) -> BTreeMap<Vec<bool>, f64> {
    let mut words = BTreeMap::new();
    // Enumerate sequences of (r, s) blocks depth-first.
    fn recurse(
        order: usize,
        blocks: &mut Vec<(usize, usize)>,
        words: &mut BTreeMap<Vec<bool>, f64>,
    ) {
        let degree: usize = blocks.iter().map(|(r, s)| r + s).sum();
        if !blocks.is_empty() {
            let n = blocks.len();
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let denom: f64 = blocks
                .iter()
                .map(|&(r, s)| fact(r) * fact(s))
                .product::<f64>()
                * degree as f64
                * n as f64;
            let mut word = Vec::with_capacity(degree);
            for &(r, s) in blocks.iter() {
                word.extend(std::iter::repeat(false).take(r));
                word.extend(std::iter::repeat(true).take(s));
            }
            *words.entry(word).or_insert(0.0) += sign / denom;
        }
        for r in 0..=(order - degree) {
            for s in 0..=(order - degree - r) {
                if r + s == 0 {
                    continue;
                }
                blocks.push((r, s));
                recurse(order, blocks, words);
                blocks.pop();
            }
        }
    }
    recurse(order, &mut Vec::new(), &mut words);
    words
}

fn fact(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn nested_commutator<T: Scalar>(
    word: &[bool],
    a: &Multivector<T>,
    b: &Multivector<T>,
) -> Multivector<T> {
    let pick = |x: bool| if x { *b } else { *a };
    let mut acc = pick(*word.last().expect("non-empty word"));
    for &letter in word[..word.len() - 1].iter().rev() {
        let x = pick(letter);
        acc = x * acc - acc * x;
    }
    acc
}

/// BCH series of two bivectors truncated at nested-commutator order `order ≤ 6`.
pub fn bch_series_oracle<T: Scalar>(
    sigma1: &Bivector<T>,
    sigma2: &Bivector<T>,
    order: usize,
) -> Result<Bivector<T>> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    let a = sigma1.as_multivector();
    let b = sigma2.as_multivector();
    let mut sum = Multivector::zero(a.signature());
    for (word, weight) in dynkin_words(order) {
        if weight == 0.0 {
            continue;
        }
        sum += nested_commutator(&word, a, b) * T::lit(weight);
    }
    Ok(Bivector::project(&sum))
}
