//! Integer Walsh–Hadamard transform and the quantities read off the spectrum.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Index into a spectrum: bit `i-1` is set iff coordinate `i` is in the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn singleton(i: u32) -> Self {
        SubsetMask(1 << (i - 1))
    }

    pub fn from_coordinates(coords: &[u32]) -> Self {
        SubsetMask(coords.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    /// 1-based coordinates in ascending order.
    pub fn coordinates(self) -> Vec<u32> {
        (0..32)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn contains(self, i: u32) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }
}

/// In-place unnormalized butterfly over a slice of length `2^k`.
pub fn butterfly(values: &mut [i32]) {
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in values.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Writes `2^n f̂(S)` for every mask into `buf`, reusing its allocation.
pub fn fwht_into(f: &BooleanFunction, buf: &mut Vec<i32>) {
    buf.clear();
    buf.extend((0..f.len()).map(|idx| f.value_at(idx) as i32));
    butterfly(buf);
}

/// The scaled Fourier spectrum of `f`.
pub fn fwht(f: &BooleanFunction) -> FourierSpectrum {
    let mut coeffs = Vec::with_capacity(f.len());
    fwht_into(f, &mut coeffs);
    FourierSpectrum {
        arity: f.arity(),
        coeffs,
    }
}

/// `coeffs[m] = 2^n · f̂(S_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierSpectrum {
    arity: u32,
    coeffs: Vec<i32>,
}

impl FourierSpectrum {
    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn scaled_coefficients(&self) -> &[i32] {
        &self.coeffs
    }

    pub(crate) fn check_coordinate(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.arity {
            Err(Error::CoordinateOutOfRange {
                coordinate: i,
                arity: self.arity,
            })
        } else {
            Ok(())
        }
    }

    pub fn coefficient(&self, s: SubsetMask) -> Result<Dyadic> {
        let c = self.coeffs.get(s.0 as usize).ok_or(Error::MaskOutOfRange {
            mask: s.0 as u64,
            arity: self.arity,
        })?;
        Ok(Dyadic::new(*c as i128, self.arity))
    }

    /// `f̂({i})` for a 1-based coordinate.
    pub fn linear_coefficient(&self, i: u32) -> Result<Dyadic> {
        self.check_coordinate(i)?;
        self.coefficient(SubsetMask::singleton(i))
    }

    /// Largest `|S|` with a nonzero coefficient; 0 for constants.
    pub fn degree(&self) -> u32 {
        degree_of(&self.coeffs)
    }

    /// `Σ_i f̂({i})`.
    pub fn linear_sum(&self) -> Dyadic {
        Dyadic::new(
            linear_sum_scaled(&self.coeffs, self.arity) as i128,
            self.arity,
        )
    }

    /// Nonzero coefficients in mask order.
    pub fn nonzero(&self) -> impl Iterator<Item = (SubsetMask, Dyadic)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (SubsetMask(m as u32), Dyadic::new(c as i128, self.arity)))
    }

    /// `Σ_m coeffs[m]^2`, which is `4^n` for every Boolean-valued function.
    pub fn parseval_sum(&self) -> u128 {
        self.coeffs
            .iter()
            .map(|&c| (c as i64 * c as i64) as u128)
            .sum()
    }

    /// Checks the parity, magnitude and Parseval constraints.
    pub fn check_invariants(&self) -> Result<()> {
        let full = 1i64 << self.arity;
        for (m, &c) in self.coeffs.iter().enumerate() {
            if (c as i64 - full) % 2 != 0 || (c as i64).abs() > full {
                return Err(Error::Invariant(format!(
                    "coefficient {c} at mask {m:#x} violates parity/magnitude for n={}",
                    self.arity
                )));
            }
        }
        let parseval = self.parseval_sum();
        if parseval != 1u128 << (2 * self.arity) {
            return Err(Error::Invariant(format!(
                "Parseval sum {parseval} != 4^{}",
                self.arity
            )));
        }
        Ok(())
    }

    /// Evaluates `Σ_S f̂(S) ∏_{i∈S} x_i` at every point and rebuilds the table.
    pub fn reconstruct(&self) -> Result<BooleanFunction> {
        let mut values = self.coeffs.clone();
        butterfly(&mut values);
        let full = 1i32 << self.arity;
        let mut bits = Vec::with_capacity(values.len());
        for (idx, v) in values.into_iter().enumerate() {
            match v / full {
                _ if v % full != 0 => {
                    return Err(Error::Invariant(format!(
                        "inverse transform at {idx} is not a multiple of 2^n"
                    )))
                }
                1 => bits.push(false),
                -1 => bits.push(true),
                other => {
                    return Err(Error::Invariant(format!(
                        "inverse transform at {idx} gives {other}, not ±1"
                    )))
                }
            }
        }
        BooleanFunction::from_truth_table(&bits, self.arity)
    }
}

pub(crate) fn degree_of(coeffs: &[i32]) -> u32 {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(m, _)| m.count_ones())
        .max()
        .unwrap_or(0)
}

pub(crate) fn linear_sum_scaled(coeffs: &[i32], n: u32) -> i64 {
    (0..n).map(|b| coeffs[1 << b] as i64).sum()
}
