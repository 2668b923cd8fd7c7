//! The linear-coefficient-sum bound `Σ_i f̂(i) <= M(deg f)` and its three
//! derivative reformulations.
//!
//! The reformulations compare `f` against `Maj_d` over a common coordinate set
//! of size `max(n, d)`: each function is padded with dummy coordinates on which
//! its derivative is identically zero.

use serde::Serialize;

use crate::derivatives::{count_derivative_values, total_influence_scaled};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, MAX_ARITY};
use crate::majority::{maj_bound, majority_profile};
use crate::spectrum::{degree_of, fwht_into, linear_sum_scaled};

/// Everything about `f` the bound and its reformulations need.
///
/// `sum_p_plus` and `sum_p_minus` are counted from the truth table; the
/// linear sum and total influence come from the spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionAnalysis {
    pub arity: u32,
    pub degree: u32,
    pub linear_sum: Dyadic,
    pub total_influence: Dyadic,
    /// `Σ_k Pr[∂_k f = 1]`.
    pub sum_p_plus: Dyadic,
    /// `Σ_k Pr[∂_k f = -1]`.
    pub sum_p_minus: Dyadic,
}

impl FunctionAnalysis {
    pub fn new(f: &BooleanFunction) -> Self {
        let mut buf = Vec::new();
        Self::with_buffer(f, &mut buf)
    }

    /// Same as [`FunctionAnalysis::new`], reusing `buf` for the spectrum.
    pub fn with_buffer(f: &BooleanFunction, buf: &mut Vec<i32>) -> Self {
        let n = f.arity();
        fwht_into(f, buf);
        let (mut plus, mut minus) = (0u64, 0u64);
        for i in 1..=n {
            let c = count_derivative_values(f, i).expect("coordinate in range");
            plus += c.plus;
            minus += c.minus;
        }
        FunctionAnalysis {
            arity: n,
            degree: degree_of(buf),
            linear_sum: Dyadic::new(linear_sum_scaled(buf, n) as i128, n),
            total_influence: Dyadic::new(total_influence_scaled(buf), 2 * n),
            sum_p_plus: Dyadic::new(plus as i128, n - 1),
            sum_p_minus: Dyadic::new(minus as i128, n - 1),
        }
    }

    pub fn report(&self) -> Result<ConjectureReport> {
        let bound_m = maj_bound(self.degree)?;
        let gap = bound_m - self.linear_sum;
        Ok(ConjectureReport {
            arity: self.arity,
            degree: self.degree,
            linear_sum: self.linear_sum,
            bound_m,
            gap,
            satisfied: !gap.is_negative(),
        })
    }

    /// `Σ f̂(i) = Inf[f] - 2 Σ Pr[∂_i f = -1] = 2 Σ Pr[∂_i f = 1] - Inf[f]`.
    pub fn identities_hold(&self) -> bool {
        let via_minus = self.total_influence - self.sum_p_minus.scale(2);
        let via_plus = self.sum_p_plus.scale(2) - self.total_influence;
        self.linear_sum == via_minus && self.linear_sum == via_plus
    }

    pub fn predicates(&self, d: u32) -> Result<EquivalencePredicates> {
        if d == 0 || d > MAX_ARITY {
            return Err(Error::ArityOutOfRange(d, 1, MAX_ARITY));
        }
        let maj = majority_profile(d)?;
        let original = Inequality::new(self.linear_sum, maj.bound_m);
        let ineq_a = Inequality::new(
            self.total_influence - maj.total_influence,
            self.sum_p_minus.scale(2),
        );
        let ineq_b = Inequality::new(self.sum_p_plus - maj.sum_p_plus, self.sum_p_minus);
        let ineq_c = Inequality::new(
            self.sum_p_plus.scale(2),
            self.total_influence + maj.total_influence,
        );
        let agreement = [ineq_a.holds, ineq_b.holds, ineq_c.holds]
            .iter()
            .all(|&h| h == original.holds);
        Ok(EquivalencePredicates {
            d_used: d,
            original,
            ineq_a,
            ineq_b,
            ineq_c,
            agreement,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    #[serde(rename = "n")]
    pub arity: u32,
    pub degree: u32,
    pub linear_sum: Dyadic,
    pub bound_m: Dyadic,
    pub gap: Dyadic,
    pub satisfied: bool,
}

/// `lhs <= rhs`, with both sides kept exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: Dyadic,
    pub rhs: Dyadic,
    pub holds: bool,
}

impl Inequality {
    fn new(lhs: Dyadic, rhs: Dyadic) -> Self {
        Inequality {
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalencePredicates {
    pub d_used: u32,
    /// `Σ f̂(i) <= M(d)`
    pub original: Inequality,
    /// `Inf[f] - Inf[Maj_d] <= 2 Σ Pr[∂_k f = -1]`
    pub ineq_a: Inequality,
    /// `Σ (Pr[∂_k f = 1] - Pr[∂_k Maj_d = 1]) <= Σ Pr[∂_k f = -1]`
    pub ineq_b: Inequality,
    /// `2 Σ Pr[∂_k f = 1] <= Inf[f] + Inf[Maj_d]`
    pub ineq_c: Inequality,
    pub agreement: bool,
}

pub fn conjecture_report(f: &BooleanFunction) -> Result<ConjectureReport> {
    FunctionAnalysis::new(f).report()
}

pub fn equivalence_predicates(f: &BooleanFunction, d: u32) -> Result<EquivalencePredicates> {
    FunctionAnalysis::new(f).predicates(d)
}

/// `true` iff the four predicates agree for `(f, d)`.
pub fn assert_equivalence(f: &BooleanFunction, d: u32) -> Result<bool> {
    Ok(equivalence_predicates(f, d)?.agreement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    fn d(num: i128, k: u32) -> Dyadic {
        Dyadic::new(num, k)
    }

    #[test]
    fn reports() {
        let r = conjecture_report(&builtin("dictator:1:5").unwrap()).unwrap();
        assert_eq!(
            (r.degree, r.linear_sum, r.bound_m, r.gap),
            (1, Dyadic::ONE, Dyadic::ONE, Dyadic::ZERO)
        );
        assert!(r.satisfied);

        let r = conjecture_report(&builtin("parity:3").unwrap()).unwrap();
        assert_eq!(
            (r.degree, r.linear_sum, r.bound_m, r.gap),
            (3, Dyadic::ZERO, d(3, 1), d(3, 1))
        );
        assert!(r.satisfied);

        let r = conjecture_report(&builtin("maj:3").unwrap()).unwrap();
        assert_eq!(
            (r.degree, r.linear_sum, r.bound_m, r.gap),
            (3, d(3, 1), d(3, 1), Dyadic::ZERO)
        );
        assert!(r.satisfied);

        let r = conjecture_report(&builtin("const:-:3").unwrap()).unwrap();
        assert_eq!(
            (r.degree, r.bound_m, r.gap),
            (0, Dyadic::ZERO, Dyadic::ZERO)
        );
        assert!(r.satisfied);
    }

    #[test]
    fn maj3_against_itself() {
        let p = equivalence_predicates(&builtin("maj:3").unwrap(), 3).unwrap();
        assert!(p.original.holds && p.ineq_a.holds && p.ineq_b.holds && p.ineq_c.holds);
        assert!(p.agreement);
        assert_eq!(p.original.lhs, p.original.rhs);
    }

    #[test]
    fn maj3_against_maj1() {
        let p = equivalence_predicates(&builtin("maj:3").unwrap(), 1).unwrap();
        assert_eq!((p.original.lhs, p.original.rhs), (d(3, 1), Dyadic::ONE));
        assert_eq!((p.ineq_a.lhs, p.ineq_a.rhs), (d(1, 1), Dyadic::ZERO));
        assert_eq!((p.ineq_b.lhs, p.ineq_b.rhs), (d(1, 1), Dyadic::ZERO));
        assert_eq!((p.ineq_c.lhs, p.ineq_c.rhs), (Dyadic::from_int(3), d(5, 1)));
        assert!(!p.original.holds && !p.ineq_a.holds && !p.ineq_b.holds && !p.ineq_c.holds);
        assert!(p.agreement);
    }

    #[test]
    fn constant_all_true() {
        let p = equivalence_predicates(&builtin("const:+:3").unwrap(), 1).unwrap();
        assert!(p.original.holds && p.ineq_a.holds && p.ineq_b.holds && p.ineq_c.holds);
        assert!(p.agreement);
    }

    #[test]
    fn agreement_examples() {
        assert!(assert_equivalence(&builtin("maj:3").unwrap(), 2).unwrap());
        assert!(assert_equivalence(&builtin("parity:4").unwrap(), 4).unwrap());
        // d larger than n exercises padding on the f side
        assert!(assert_equivalence(&builtin("maj:3").unwrap(), 4).unwrap());
        assert!(assert_equivalence(&builtin("and:2").unwrap(), 7).unwrap());
    }

    #[test]
    fn d_out_of_range() {
        let f = builtin("maj:3").unwrap();
        assert!(equivalence_predicates(&f, 0).is_err());
        assert!(equivalence_predicates(&f, 25).is_err());
    }

    #[test]
    fn identities() {
        for s in [
            "maj:5",
            "parity:3",
            "and:4",
            "or:3",
            "dictator:2:4",
            "const:-:2",
        ] {
            assert!(
                FunctionAnalysis::new(&builtin(s).unwrap()).identities_hold(),
                "{s}"
            );
        }
    }
}
