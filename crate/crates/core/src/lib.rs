//! Exact Fourier analysis of Boolean-valued functions `f : {-1,1}^n -> {-1,1}`.
//!
//! Truth tables are bit-packed, spectra are integer Walsh–Hadamard transforms,
//! and every derived quantity (coefficients, influences, probabilities) is a
//! [`Dyadic`] rational, so all comparisons are exact.
//!
//! The [`conjecture`] and [`scan`] modules check the bound
//! `Σ_i f̂(i) <= Σ_j Maj_d-hat(j)` for `d = deg f`, together with three
//! equivalent inequalities phrased through discrete derivatives, on single
//! functions and over whole cubes.

pub mod builtin;
pub mod conjecture;
pub mod derivatives;
pub mod dyadic;
pub mod error;
pub mod function;
pub mod majority;
pub mod scan;
pub mod spectrum;

pub use builtin::{builtin, Family};
pub use conjecture::{
    assert_equivalence, conjecture_report, equivalence_predicates, ConjectureReport,
    EquivalencePredicates, FunctionAnalysis, Inequality,
};
pub use derivatives::{
    derivative_distribution_counted, derivative_distribution_spectral, discrete_derivative,
    expectation_of_derivative, influence, influence_profile, total_influence,
    DerivativeDistribution, DerivativeTable, InfluenceProfile,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use function::BooleanFunction;
pub use majority::{
    expected_abs_sum, maj_bound, maj_linear_coefficient, majority, majority_profile,
    MajorityProfile,
};
pub use scan::{
    exhaustive_scan, merge_results, random_scan, run_scan, ScanConfig, ScanMode, ScanResult,
};
pub use spectrum::{fwht, FourierSpectrum, SubsetMask};
