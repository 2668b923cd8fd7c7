//! Named function families and the flat `family:params` grammar.
//!
//! ```text
//! maj:d  parity:n  dictator:i:n  and:n  or:n  const:+:n  const:-:n
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::function::{check_arity, BooleanFunction};
use crate::majority;

/// `f ≡ +1` when `plus`, else `f ≡ -1`.
pub fn constant(plus: bool, n: u32) -> Result<BooleanFunction> {
    BooleanFunction::from_index_fn(n, |_| !plus)
}

/// `f(x) = x_i`.
pub fn dictator(i: u32, n: u32) -> Result<BooleanFunction> {
    check_arity(n)?;
    if i == 0 || i > n {
        return Err(Error::CoordinateOutOfRange {
            coordinate: i,
            arity: n,
        });
    }
    BooleanFunction::from_index_fn(n, |idx| (idx >> (i - 1)) & 1 == 1)
}

/// `f(x) = x_1 x_2 ⋯ x_n`.
pub fn parity(n: u32) -> Result<BooleanFunction> {
    BooleanFunction::from_index_fn(n, |idx| idx.count_ones() % 2 == 1)
}

/// `+1` only at the all-`+1` point.
pub fn and(n: u32) -> Result<BooleanFunction> {
    BooleanFunction::from_index_fn(n, |idx| idx != 0)
}

/// `-1` only at the all-`-1` point.
pub fn or(n: u32) -> Result<BooleanFunction> {
    check_arity(n)?;
    let all = (1usize << n) - 1;
    BooleanFunction::from_index_fn(n, |idx| idx == all)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Majority { d: u32 },
    Parity { n: u32 },
    Dictator { i: u32, n: u32 },
    And { n: u32 },
    Or { n: u32 },
    Constant { plus: bool, n: u32 },
}

impl Family {
    pub fn build(&self) -> Result<BooleanFunction> {
        match *self {
            Family::Majority { d } => majority::majority(d),
            Family::Parity { n } => parity(n),
            Family::Dictator { i, n } => dictator(i, n),
            Family::And { n } => and(n),
            Family::Or { n } => or(n),
            Family::Constant { plus, n } => constant(plus, n),
        }
    }

    /// Monotone families never have a `-1` derivative.
    pub fn is_monotone(&self) -> bool {
        !matches!(self, Family::Parity { n } if *n > 1)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Majority { d } => write!(f, "maj:{d}"),
            Family::Parity { n } => write!(f, "parity:{n}"),
            Family::Dictator { i, n } => write!(f, "dictator:{i}:{n}"),
            Family::And { n } => write!(f, "and:{n}"),
            Family::Or { n } => write!(f, "or:{n}"),
            Family::Constant { plus, n } => {
                write!(f, "const:{}:{n}", if *plus { '+' } else { '-' })
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let family = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let bad = |reason: &str| Error::BadParams {
            family: family.to_string(),
            reason: reason.to_string(),
        };
        let int = |p: &str| {
            p.parse::<u32>()
                .map_err(|_| bad(&format!("{p:?} is not an integer")))
        };
        let one = |params: &[&str]| match params {
            [p] => int(p),
            _ => Err(bad("expected exactly one parameter")),
        };
        match family {
            "maj" => Ok(Family::Majority { d: one(&params)? }),
            "parity" => Ok(Family::Parity { n: one(&params)? }),
            "and" => Ok(Family::And { n: one(&params)? }),
            "or" => Ok(Family::Or { n: one(&params)? }),
            "dictator" => match params.as_slice() {
                [i, n] => Ok(Family::Dictator {
                    i: int(i)?,
                    n: int(n)?,
                }),
                _ => Err(bad("expected dictator:i:n")),
            },
            "const" => match params.as_slice() {
                [sign, n] => {
                    let plus = match *sign {
                        "+" | "+1" => true,
                        "-" | "-1" => false,
                        _ => return Err(bad("sign must be + or -")),
                    };
                    Ok(Family::Constant { plus, n: int(n)? })
                }
                _ => Err(bad("expected const:+:n or const:-:n")),
            },
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Parses and builds a function from a `family:params` string.
pub fn builtin(spec: &str) -> Result<BooleanFunction> {
    spec.parse::<Family>()?.build()
}
