//! Discrete derivatives, influences, and the distribution of `∂_i f` over
//! `{-1, 0, +1}`.
//!
//! There are two independent ways to get `Pr[∂_i f = v]`: count entries of the
//! derivative ([`derivative_distribution_counted`]) or read it off the
//! spectrum through `Inf_i[f]` and `f̂(i)` ([`derivative_distribution_spectral`]).
//! Neither is implemented in terms of the other.

use serde::Serialize;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::spectrum::FourierSpectrum;

fn check_coordinate(i: u32, n: u32) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::CoordinateOutOfRange {
            coordinate: i,
            arity: n,
        })
    } else {
        Ok(())
    }
}

/// Index of the point obtained by inserting coordinate `i` (1-based) into the
/// restriction `y`, with `x_i = +1` (`minus = false`) or `x_i = -1`.
#[inline]
fn lift_restriction(y: usize, i: u32, minus: bool) -> usize {
    let low_mask = (1usize << (i - 1)) - 1;
    let low = y & low_mask;
    let high = (y & !low_mask) << 1;
    high | low | (minus as usize) << (i - 1)
}

/// `∂_i f` on `{-1,1}^(n-1)`. Restrictions are indexed by deleting coordinate
/// `i` and packing the remaining coordinates in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeTable {
    arity: u32,
    coordinate: u32,
    values: Vec<i8>,
}

impl DerivativeTable {
    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn coordinate(&self) -> u32 {
        self.coordinate
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// How many restrictions give `0`, `+1`, `-1`.
    pub fn counts(&self) -> DerivativeCounts {
        let mut c = DerivativeCounts::default();
        for &v in &self.values {
            match v {
                0 => c.zero += 1,
                1 => c.plus += 1,
                _ => c.minus += 1,
            }
        }
        c
    }
}

pub fn discrete_derivative(f: &BooleanFunction, i: u32) -> Result<DerivativeTable> {
    check_coordinate(i, f.arity())?;
    let values = (0..f.len() / 2)
        .map(|y| {
            let at_plus = f.value_at(lift_restriction(y, i, false));
            let at_minus = f.value_at(lift_restriction(y, i, true));
            (at_plus - at_minus) / 2
        })
        .collect();
    Ok(DerivativeTable {
        arity: f.arity(),
        coordinate: i,
        values,
    })
}

/// Mean of the derivative's entries.
pub fn expectation_of_derivative(table: &DerivativeTable) -> Dyadic {
    let sum: i64 = table.values.iter().map(|&v| v as i64).sum();
    Dyadic::new(sum as i128, table.arity - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DerivativeCounts {
    pub zero: u64,
    pub plus: u64,
    pub minus: u64,
}

impl DerivativeCounts {
    fn total(&self) -> u64 {
        self.zero + self.plus + self.minus
    }

    pub fn distribution(&self) -> DerivativeDistribution {
        let k = self.total().trailing_zeros();
        debug_assert!(self.total().is_power_of_two());
        DerivativeDistribution {
            p_zero: Dyadic::new(self.zero as i128, k),
            p_plus: Dyadic::new(self.plus as i128, k),
            p_minus: Dyadic::new(self.minus as i128, k),
        }
    }
}

// Bit positions p within a word with bit `s` of p clear, for s = 1, 2, 4, ..., 32.
const STRIDE_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Counts the values of `∂_i f` by comparing table bits `i` apart, a word at a
/// time. `+1` where `f` goes from `-1` at `x_i = -1` to `+1` at `x_i = +1`.
pub fn count_derivative_values(f: &BooleanFunction, i: u32) -> Result<DerivativeCounts> {
    check_coordinate(i, f.arity())?;
    let words = f.words();
    let (mut plus, mut minus) = (0u64, 0u64);
    let stride = 1usize << (i - 1);
    if stride < 64 {
        let mut mask = STRIDE_MASKS[(i - 1) as usize];
        if f.len() < 64 {
            mask &= (1u64 << f.len()) - 1;
        }
        for &w in words {
            let at_minus = w >> stride;
            plus += (!w & at_minus & mask).count_ones() as u64;
            minus += (w & !at_minus & mask).count_ones() as u64;
        }
    } else {
        let word_stride = stride / 64;
        for a in (0..words.len()).filter(|a| a & word_stride == 0) {
            let (w, at_minus) = (words[a], words[a + word_stride]);
            plus += (!w & at_minus).count_ones() as u64;
            minus += (w & !at_minus).count_ones() as u64;
        }
    }
    let half = (f.len() / 2) as u64;
    Ok(DerivativeCounts {
        zero: half - plus - minus,
        plus,
        minus,
    })
}

/// `(Pr[∂_i f = 0], Pr[∂_i f = 1], Pr[∂_i f = -1])` under the uniform measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivativeDistribution {
    pub p_zero: Dyadic,
    pub p_plus: Dyadic,
    pub p_minus: Dyadic,
}

impl DerivativeDistribution {
    pub fn check_invariants(&self) -> Result<()> {
        let probs = [self.p_zero, self.p_plus, self.p_minus];
        if probs.iter().sum::<Dyadic>() != Dyadic::ONE
            || probs.iter().any(|p| p.is_negative() || *p > Dyadic::ONE)
        {
            return Err(Error::Invariant(format!(
                "not a probability distribution: {} {} {}",
                self.p_zero, self.p_plus, self.p_minus
            )));
        }
        Ok(())
    }
}

/// Counted distribution of `∂_i f`.
pub fn derivative_distribution_counted(
    f: &BooleanFunction,
    i: u32,
) -> Result<DerivativeDistribution> {
    Ok(count_derivative_values(f, i)?.distribution())
}

/// Distribution of `∂_i f` from the spectrum alone:
/// `p_0 = 1 - Inf_i`, `p_+ = (Inf_i + f̂(i)) / 2`, `p_- = (Inf_i - f̂(i)) / 2`.
pub fn derivative_distribution_spectral(
    spec: &FourierSpectrum,
    i: u32,
) -> Result<DerivativeDistribution> {
    let inf = influence(spec, i)?;
    let lin = spec.linear_coefficient(i)?;
    Ok(DerivativeDistribution {
        p_zero: Dyadic::ONE - inf,
        p_plus: (inf + lin).div_pow2(1),
        p_minus: (inf - lin).div_pow2(1),
    })
}

/// `Inf_i[f] = Σ_{S∋i} f̂(S)^2`.
pub fn influence(spec: &FourierSpectrum, i: u32) -> Result<Dyadic> {
    check_coordinate(i, spec.arity())?;
    let bit = 1usize << (i - 1);
    let sum: i128 = spec
        .scaled_coefficients()
        .iter()
        .enumerate()
        .filter(|(m, _)| m & bit != 0)
        .map(|(_, &c)| c as i128 * c as i128)
        .sum();
    Ok(Dyadic::new(sum, 2 * spec.arity()))
}

/// `Inf[f] = Σ_S |S| f̂(S)^2`.
pub fn total_influence(spec: &FourierSpectrum) -> Dyadic {
    Dyadic::new(
        total_influence_scaled(spec.scaled_coefficients()),
        2 * spec.arity(),
    )
}

pub(crate) fn total_influence_scaled(coeffs: &[i32]) -> i128 {
    coeffs
        .iter()
        .enumerate()
        .map(|(m, &c)| m.count_ones() as i128 * c as i128 * c as i128)
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfluenceProfile {
    pub per_coordinate: Vec<Dyadic>,
    pub total: Dyadic,
}

/// All `Inf_i[f]` in one pass over the spectrum, plus `Inf[f]` from the
/// `|S|`-weighted sum. Fails if the two totals disagree.
pub fn influence_profile(spec: &FourierSpectrum) -> Result<InfluenceProfile> {
    let n = spec.arity();
    let mut acc = vec![0i128; n as usize];
    for (m, &c) in spec.scaled_coefficients().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sq = c as i128 * c as i128;
        for (b, slot) in acc.iter_mut().enumerate() {
            if m >> b & 1 == 1 {
                *slot += sq;
            }
        }
    }
    let per_coordinate: Vec<Dyadic> = acc.into_iter().map(|s| Dyadic::new(s, 2 * n)).collect();
    let total = total_influence(spec);
    if per_coordinate.iter().sum::<Dyadic>() != total {
        return Err(Error::Invariant(format!(
            "Σ Inf_i != Σ |S| f̂(S)^2 for n={n}"
        )));
    }
    Ok(InfluenceProfile {
        per_coordinate,
        total,
    })
}
