//! `Maj_d(x) = sgn(x_1 + ... + x_d)` with `sgn(0) = -1`, and the bound
//! `M(d) = Σ_j Maj_d-hat(j)`.
//!
//! Every quantity here is read off the actual truth table of `Maj_d`. The
//! odd-`d` binomial formula is only used as a cross-check.

use std::sync::OnceLock;

use serde::Serialize;

use crate::derivatives::{count_derivative_values, total_influence, DerivativeDistribution};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::{check_arity, BooleanFunction, MAX_ARITY};
use crate::spectrum::{fwht, SubsetMask};

/// Majority on `d` bits; ties go to `-1`.
pub fn majority(d: u32) -> Result<BooleanFunction> {
    check_arity(d)?;
    // idx has one set bit per -1 coordinate, so the sum is d - 2·popcount
    BooleanFunction::from_index_fn(d, |idx| 2 * idx.count_ones() >= d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MajorityProfile {
    pub d: u32,
    /// The common value of `Maj_d-hat({j})`.
    pub linear_coefficient: Dyadic,
    /// `M(d)`.
    pub bound_m: Dyadic,
    pub total_influence: Dyadic,
    pub p_plus_per_coordinate: Dyadic,
    /// Distribution of `∂_1 Maj_d`; the same for every coordinate.
    pub derivative_distribution: DerivativeDistribution,
    /// `Σ_j Pr[∂_j Maj_d = 1]`, counted coordinate by coordinate.
    pub sum_p_plus: Dyadic,
}

fn invariant(msg: String) -> Error {
    Error::Invariant(msg)
}

fn compute_profile(d: u32) -> Result<MajorityProfile> {
    let f = majority(d)?;
    let spec = fwht(&f);
    let linear_coefficient = spec.linear_coefficient(1)?;
    for j in 2..=d {
        if spec.linear_coefficient(j)? != linear_coefficient {
            return Err(invariant(format!(
                "Maj_{d} linear coefficients differ at {j}"
            )));
        }
    }
    let bound_m = spec.linear_sum();
    if bound_m != linear_coefficient.scale(d as i64) {
        return Err(invariant(format!("M({d}) != d · Maj_{d}-hat(1)")));
    }

    let counts = (1..=d)
        .map(|j| count_derivative_values(&f, j))
        .collect::<Result<Vec<_>>>()?;
    if counts.iter().any(|c| *c != counts[0]) {
        return Err(invariant(format!("∂_j Maj_{d} not symmetric")));
    }
    if counts.iter().any(|c| c.minus != 0) {
        return Err(invariant(format!("∂_j Maj_{d} takes the value -1")));
    }
    let derivative_distribution = counts[0].distribution();
    let sum_p_plus = counts.iter().map(|c| c.distribution().p_plus).sum();

    let total_influence = total_influence(&spec);
    if total_influence != bound_m || sum_p_plus != bound_m {
        return Err(invariant(format!("Inf[Maj_{d}] != M({d})")));
    }
    if let Some(closed) = odd_closed_form(d) {
        if closed != linear_coefficient {
            return Err(invariant(format!(
                "Maj_{d}-hat(1) disagrees with C(d-1,(d-1)/2)/2^(d-1)"
            )));
        }
    }

    Ok(MajorityProfile {
        d,
        linear_coefficient,
        bound_m,
        total_influence,
        p_plus_per_coordinate: derivative_distribution.p_plus,
        derivative_distribution,
        sum_p_plus,
    })
}

static PROFILES: [OnceLock<Result<MajorityProfile>>; MAX_ARITY as usize + 1] =
    [const { OnceLock::new() }; MAX_ARITY as usize + 1];

/// Profile of `Maj_d`, computed once per process.
pub fn majority_profile(d: u32) -> Result<&'static MajorityProfile> {
    check_arity(d)?;
    PROFILES[d as usize]
        .get_or_init(|| compute_profile(d))
        .as_ref()
        .map_err(Clone::clone)
}

/// `Maj_d-hat(j)`, the same for every `j`.
pub fn maj_linear_coefficient(d: u32) -> Result<Dyadic> {
    Ok(majority_profile(d)?.linear_coefficient)
}

/// `M(d) = Σ_{j=1}^{d} Maj_d-hat(j)`, with `M(0) = 0` so that constant
/// functions satisfy the bound vacuously.
pub fn maj_bound(d: u32) -> Result<Dyadic> {
    if d == 0 {
        return Ok(Dyadic::ZERO);
    }
    Ok(majority_profile(d)?.bound_m)
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

/// `C(d-1, (d-1)/2) / 2^(d-1)` for odd `d`.
pub fn odd_closed_form(d: u32) -> Option<Dyadic> {
    (d % 2 == 1).then(|| Dyadic::new(binomial(d - 1, (d - 1) / 2) as i128, d - 1))
}

/// `E[|x_1 + ... + x_n|] = 2^-n Σ_k C(n,k) |n - 2k|`.
pub fn expected_abs_sum(n: u32) -> Result<Dyadic> {
    check_arity(n)?;
    let total: u128 = (0..=n)
        .map(|k| binomial(n, k) * (n as i64 - 2 * k as i64).unsigned_abs() as u128)
        .sum();
    Ok(Dyadic::new(total as i128, n))
}

/// Whether `Maj_d-hat(S)` vanishes for every even `|S|`.
pub fn even_levels_vanish(d: u32) -> Result<bool> {
    let spec = fwht(&majority(d)?);
    let odd_only = spec
        .nonzero()
        .all(|(m, _): (SubsetMask, _)| m.cardinality() % 2 == 1);
    Ok(odd_only)
}
