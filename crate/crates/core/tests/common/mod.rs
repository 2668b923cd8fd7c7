//! Brute-force reference computations. Nothing here calls the transform, the
//! derivative counters, or the majority memo.

#![allow(dead_code)]

use boolfourier::{BooleanFunction, Dyadic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coordinates of the point at `idx`: bit `i` set means `x_{i+1} = -1`.
pub fn point(idx: usize, n: u32) -> Vec<i64> {
    (0..n)
        .map(|i| if idx >> i & 1 == 1 { -1 } else { 1 })
        .collect()
}

pub fn value(f: &BooleanFunction, idx: usize) -> i64 {
    if f.bit(idx) {
        -1
    } else {
        1
    }
}

/// `E[f(x) ∏_{i∈S} x_i]` by direct summation over the cube.
pub fn naive_coefficient(f: &BooleanFunction, mask: usize) -> Dyadic {
    let n = f.arity();
    let sum: i64 = (0..1usize << n)
        .map(|idx| {
            let x = point(idx, n);
            let chi: i64 = (0..n as usize)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| x[b])
                .product();
            value(f, idx) * chi
        })
        .sum();
    Dyadic::new(sum as i128, n)
}

pub fn naive_spectrum(f: &BooleanFunction) -> Vec<Dyadic> {
    (0..1usize << f.arity())
        .map(|m| naive_coefficient(f, m))
        .collect()
}

pub fn naive_linear_sum(f: &BooleanFunction) -> Dyadic {
    (0..f.arity() as usize)
        .map(|b| naive_coefficient(f, 1 << b))
        .sum()
}

pub fn naive_degree(spectrum: &[Dyadic]) -> u32 {
    spectrum
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, _)| m.count_ones())
        .max()
        .unwrap_or(0)
}

/// `∂_i f` at every point with `x_i = +1`, as a list of `{-1,0,1}` values.
pub fn naive_derivative(f: &BooleanFunction, i: u32) -> Vec<i64> {
    let n = f.arity();
    let bit = 1usize << (i - 1);
    (0..1usize << n)
        .filter(|idx| idx & bit == 0)
        .map(|idx| (value(f, idx) - value(f, idx | bit)) / 2)
        .collect()
}

/// `(Pr[=0], Pr[=1], Pr[=-1])` of `∂_i f` by enumeration.
pub fn naive_derivative_probs(f: &BooleanFunction, i: u32) -> (Dyadic, Dyadic, Dyadic) {
    let vals = naive_derivative(f, i);
    let k = f.arity() - 1;
    let count = |v: i64| Dyadic::new(vals.iter().filter(|&&x| x == v).count() as i128, k);
    (count(0), count(1), count(-1))
}

/// Majority by summing coordinates and taking the sign, `sgn(0) = -1`.
pub fn naive_majority(d: u32) -> BooleanFunction {
    let bits: Vec<bool> = (0..1usize << d)
        .map(|idx| point(idx, d).iter().sum::<i64>() <= 0)
        .collect();
    BooleanFunction::from_truth_table(&bits, d).unwrap()
}

/// `2^-n Σ_x |x_1 + ... + x_n|` by enumeration.
pub fn naive_abs_sum(n: u32) -> Dyadic {
    let total: i64 = (0..1usize << n)
        .map(|idx| point(idx, n).iter().sum::<i64>().abs())
        .sum();
    Dyadic::new(total as i128, n)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_function(rng: &mut ChaCha8Rng, n: u32) -> BooleanFunction {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
    BooleanFunction::from_truth_table(&bits, n).unwrap()
}
