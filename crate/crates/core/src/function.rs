//! Bit-packed truth tables.
//!
//! A point `x` of `{-1,1}^n` is stored at index `sum_i b_i 2^(i-1)` with
//! `b_i = (1 - x_i) / 2`, and the table bit at that index is
//! `(1 - f(x)) / 2`. So `+1` is always bit 0 and `-1` is always bit 1, both
//! for inputs and outputs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MIN_ARITY: u32 = 1;
pub const MAX_ARITY: u32 = 24;

pub(crate) fn check_arity(n: u32) -> Result<()> {
    if (MIN_ARITY..=MAX_ARITY).contains(&n) {
        Ok(())
    } else {
        Err(Error::ArityOutOfRange(n, MIN_ARITY, MAX_ARITY))
    }
}

/// Index of a point of the cube under the encoding above.
pub fn point_to_index(x: &[i8]) -> Result<usize> {
    let mut idx = 0usize;
    for (i, &xi) in x.iter().enumerate() {
        match xi {
            1 => {}
            -1 => idx |= 1 << i,
            other => return Err(Error::NotSign(other as i64)),
        }
    }
    Ok(idx)
}

/// Inverse of [`point_to_index`].
pub fn index_to_point(idx: usize, n: u32) -> Vec<i8> {
    (0..n)
        .map(|i| if (idx >> i) & 1 == 0 { 1 } else { -1 })
        .collect()
}

/// A function `f : {-1,1}^n -> {-1,1}` stored as `2^n` bits in `u64` words,
/// least significant bit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    arity: u32,
    words: Vec<u64>,
}

impl BooleanFunction {
    fn words_for(n: u32) -> usize {
        (1usize << n).div_ceil(64)
    }

    fn tail_mask(n: u32) -> u64 {
        let len = 1usize << n;
        if len >= 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        }
    }

    /// Builds a function from one bit per input point (`0` for `+1`).
    pub fn from_truth_table(bits: &[bool], n: u32) -> Result<Self> {
        check_arity(n)?;
        let len = 1usize << n;
        if bits.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: bits.len(),
            });
        }
        let mut words = vec![0u64; Self::words_for(n)];
        for (idx, &b) in bits.iter().enumerate() {
            if b {
                words[idx / 64] |= 1 << (idx % 64);
            }
        }
        Ok(BooleanFunction { arity: n, words })
    }

    /// Builds a function directly from packed words; bits above `2^n` must be clear.
    pub fn from_words(words: Vec<u64>, n: u32) -> Result<Self> {
        check_arity(n)?;
        let expected = Self::words_for(n);
        if words.len() != expected {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                actual: words.len() * 64,
            });
        }
        if words[expected - 1] & !Self::tail_mask(n) != 0 {
            return Err(Error::HexExcessBits(n));
        }
        Ok(BooleanFunction { arity: n, words })
    }

    /// The function whose truth table, read as an integer, is `table`.
    /// Only valid for `n <= 6`.
    pub fn from_table_int(table: u64, n: u32) -> Result<Self> {
        if n > 6 {
            return Err(Error::ArityOutOfRange(n, MIN_ARITY, 6));
        }
        Self::from_words(vec![table], n)
    }

    /// Builds the table of `g` evaluated at every index.
    pub fn from_index_fn(n: u32, mut g: impl FnMut(usize) -> bool) -> Result<Self> {
        check_arity(n)?;
        let mut words = vec![0u64; Self::words_for(n)];
        for idx in 0..1usize << n {
            if g(idx) {
                words[idx / 64] |= 1 << (idx % 64);
            }
        }
        Ok(BooleanFunction { arity: n, words })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Number of input points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Table bit at `idx`: `true` means `f = -1` there.
    #[inline]
    pub fn bit(&self, idx: usize) -> bool {
        (self.words[idx / 64] >> (idx % 64)) & 1 == 1
    }

    /// `f` at the point with index `idx`, as `+1` or `-1`.
    #[inline]
    pub fn value_at(&self, idx: usize) -> i8 {
        1 - 2 * self.bit(idx) as i8
    }

    pub fn evaluate(&self, x: &[i8]) -> Result<i8> {
        if x.len() != self.arity as usize {
            return Err(Error::WrongDimension {
                expected: self.arity as usize,
                actual: x.len(),
            });
        }
        Ok(self.value_at(point_to_index(x)?))
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |idx| self.bit(idx))
    }

    /// Number of `-1` outputs.
    pub fn count_minus(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Numeric order of the table as a `2^n`-bit integer. For equal arity
    /// this is also the lexicographic order of the canonical hex strings.
    pub fn cmp_table(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }

    fn hex_digits(n: u32) -> usize {
        (1usize << n).div_ceil(4)
    }

    /// Parses `[0x]<digits>` with exactly `ceil(2^n / 4)` digits, most
    /// significant first.
    pub fn from_hex(hex: &str, n: u32) -> Result<Self> {
        check_arity(n)?;
        let digits = hex
            .strip_prefix("0x")
            .or_else(|| hex.strip_prefix("0X"))
            .unwrap_or(hex);
        let expected = Self::hex_digits(n);
        if digits.chars().count() != expected {
            if let Some(c) = digits.chars().find(|c| !c.is_ascii_hexdigit()) {
                return Err(Error::BadHexDigit(c));
            }
            return Err(Error::HexLength {
                expected,
                actual: digits.chars().count(),
            });
        }
        let mut words = vec![0u64; Self::words_for(n)];
        for (pos, c) in digits.chars().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or(Error::BadHexDigit(c))? as u64;
            let bit = pos * 4;
            words[bit / 64] |= nibble << (bit % 64);
        }
        Self::from_words(words, n)
    }

    /// Canonical lowercase hex with `0x` prefix.
    pub fn to_hex(&self) -> String {
        let digits = Self::hex_digits(self.arity);
        let mut out = String::with_capacity(digits + 2);
        out.push_str("0x");
        for pos in (0..digits).rev() {
            let bit = pos * 4;
            let nibble = (self.words[bit / 64] >> (bit % 64)) & 0xf;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.arity, self.to_hex())
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A hex table together with its arity, written `0xe@2`.
impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (hex, n) = s.split_once('@').ok_or_else(|| Error::BadParams {
            family: "hex".into(),
            reason: "expected <hex>@<n>".into(),
        })?;
        let n = n.parse().map_err(|_| Error::BadParams {
            family: "hex".into(),
            reason: format!("bad arity {n:?}"),
        })?;
        Self::from_hex(hex, n)
    }
}
