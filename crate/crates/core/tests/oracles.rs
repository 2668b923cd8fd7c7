//! Library results checked against the brute-force references in `common`.

mod common;

use boolfourier::derivatives::{
    derivative_distribution_counted, derivative_distribution_spectral, discrete_derivative,
    expectation_of_derivative, influence,
};
use boolfourier::majority::{even_levels_vanish, odd_closed_form};
use boolfourier::scan::{exhaustive_scan, random_scan, ScanConfig};
use boolfourier::spectrum::SubsetMask;
use boolfourier::{
    builtin, conjecture_report, expected_abs_sum, fwht, maj_bound, maj_linear_coefficient,
    majority, majority_profile, BooleanFunction, Dyadic, FunctionAnalysis,
};
use common::*;
use proptest::prelude::*;

fn d(num: i128, k: u32) -> Dyadic {
    Dyadic::new(num, k)
}

#[test]
fn maj3_spectrum_matches_enumeration() {
    let f = majority(3).unwrap();
    let naive = naive_spectrum(&f);
    let half = d(1, 1);
    let expected = [
        Dyadic::ZERO,
        half,
        half,
        Dyadic::ZERO,
        half,
        Dyadic::ZERO,
        Dyadic::ZERO,
        -half,
    ];
    assert_eq!(naive, expected);
    let s = fwht(&f);
    for (m, c) in naive.iter().enumerate() {
        assert_eq!(s.coefficient(SubsetMask(m as u32)).unwrap(), *c);
    }
}

#[test]
fn and2_linear_sum_matches_enumeration() {
    let f = BooleanFunction::from_hex("0xe", 2).unwrap();
    assert_eq!(naive_coefficient(&f, 1), d(1, 1));
    assert_eq!(naive_coefficient(&f, 2), d(1, 1));
    assert_eq!(fwht(&f).linear_sum(), naive_linear_sum(&f));
}

#[test]
fn majority_tables_match_sign_rule() {
    for k in 1..=12 {
        assert_eq!(majority(k).unwrap(), naive_majority(k), "d={k}");
    }
    assert_eq!(majority(2).unwrap().to_hex(), "0xe");
}

#[test]
fn majority_fixtures_from_enumeration() {
    // M(d) and Maj_d-hat(1) recomputed from the sign-rule table by direct summation
    for k in 1..=9 {
        let f = naive_majority(k);
        let lin = naive_coefficient(&f, 1);
        assert_eq!(maj_linear_coefficient(k).unwrap(), lin, "d={k}");
        assert_eq!(maj_bound(k).unwrap(), naive_linear_sum(&f), "d={k}");
        assert_eq!(expected_abs_sum(k).unwrap(), naive_abs_sum(k), "n={k}");
    }
    assert_eq!(maj_bound(1).unwrap(), Dyadic::ONE);
    assert_eq!(maj_bound(2).unwrap(), Dyadic::ONE);
    assert_eq!(maj_bound(3).unwrap(), d(3, 1));
    assert_eq!(maj_bound(5).unwrap(), d(15, 3));
    assert_eq!(maj_linear_coefficient(5).unwrap(), d(3, 3));
}

#[test]
fn majority_symmetry_and_monotonicity() {
    for k in 1..=9 {
        let f = majority(k).unwrap();
        let s = fwht(&f);
        let first = s.linear_coefficient(1).unwrap();
        for j in 1..=k {
            assert_eq!(s.linear_coefficient(j).unwrap(), first);
            let (_, p_plus, p_minus) = naive_derivative_probs(&f, j);
            assert_eq!(p_minus, Dyadic::ZERO, "d={k} j={j}");
            assert_eq!(influence(&s, j).unwrap(), p_plus);
            assert_eq!(influence(&s, j).unwrap(), first);
        }
        if k % 2 == 1 {
            assert!(even_levels_vanish(k).unwrap(), "d={k}");
            let closed = Dyadic::new(binomial(k as u64 - 1, (k as u64 - 1) / 2) as i128, k - 1);
            assert_eq!(first, closed);
            assert_eq!(odd_closed_form(k), Some(closed));
        }
        let p = majority_profile(k).unwrap();
        assert_eq!(p.total_influence, p.bound_m);
        assert_eq!(p.bound_m, first.scale(k as i64));
    }
}

#[test]
fn derivative_fixtures_from_enumeration() {
    let maj3 = majority(3).unwrap();
    assert_eq!(naive_derivative(&maj3, 1), vec![0, 1, 1, 0]);
    assert_eq!(
        discrete_derivative(&maj3, 1).unwrap().values(),
        &[0, 1, 1, 0]
    );
    let (z, p, m) = naive_derivative_probs(&maj3, 1);
    assert_eq!((z, p, m), (d(1, 1), d(1, 1), Dyadic::ZERO));
    let counted = derivative_distribution_counted(&maj3, 1).unwrap();
    assert_eq!((counted.p_zero, counted.p_plus, counted.p_minus), (z, p, m));
}

#[test]
fn conjecture_reports_against_enumeration() {
    let parity = builtin("parity:3").unwrap();
    let r = conjecture_report(&parity).unwrap();
    assert_eq!(r.gap, d(3, 1));
    assert_eq!(r.linear_sum, naive_linear_sum(&parity));
    let r = conjecture_report(&majority(3).unwrap()).unwrap();
    assert_eq!(
        (r.linear_sum, r.bound_m, r.gap),
        (d(3, 1), d(3, 1), Dyadic::ZERO)
    );
}

/// Per-degree maxima recomputed without the transform or the scan engine.
fn naive_extremals(n: u32) -> Vec<(u32, u64, Dyadic, String, u64)> {
    let mut best: Vec<Option<(u64, Dyadic, String, u64)>> = vec![None; n as usize + 1];
    for t in 0..1u64 << (1 << n) {
        let f = BooleanFunction::from_table_int(t, n).unwrap();
        let spec = naive_spectrum(&f);
        let deg = naive_degree(&spec);
        let lin: Dyadic = (0..n).map(|b| spec[1 << b]).sum();
        let slot = &mut best[deg as usize];
        match slot {
            None => *slot = Some((1, lin, f.to_hex(), 1)),
            Some((count, max, hex, wc)) => {
                *count += 1;
                if lin > *max {
                    *max = lin;
                    *hex = f.to_hex();
                    *wc = 1;
                } else if lin == *max {
                    *wc += 1;
                    if f.to_hex() < *hex {
                        *hex = f.to_hex();
                    }
                }
            }
        }
    }
    best.into_iter()
        .enumerate()
        .filter_map(|(deg, b)| b.map(|(c, m, h, w)| (deg as u32, c, m, h, w)))
        .collect()
}

#[test]
fn scan_matches_naive_extremals() {
    for n in 1..=3 {
        let r = exhaustive_scan(&ScanConfig::exhaustive(n).workers(2)).unwrap();
        let got: Vec<_> = r
            .per_degree
            .iter()
            .filter(|e| e.functions > 0)
            .map(|e| {
                (
                    e.degree,
                    e.functions,
                    e.max_linear_sum.unwrap(),
                    e.witness.as_ref().unwrap().to_hex(),
                    e.witness_count,
                )
            })
            .collect();
        assert_eq!(got, naive_extremals(n), "n={n}");
    }
}

#[test]
fn n2_degree_histogram() {
    let r = exhaustive_scan(&ScanConfig::exhaustive(2)).unwrap();
    assert_eq!(r.degree(0).unwrap().functions, 2);
    assert_eq!(
        r.degree(1).unwrap().functions + r.degree(2).unwrap().functions,
        14
    );
    assert_eq!(r.functions_examined, 16);
}

#[test]
fn random_scan_n8_has_no_failures() {
    let config = ScanConfig::random(8, 1000, 7).equivalence(1..=9).workers(4);
    let r = random_scan(&config).unwrap();
    assert_eq!(r.functions_examined, 1000);
    assert!(r.equivalence_failures.is_empty());
    assert!(r.conjecture_violations.is_empty());
    let again = random_scan(&config.clone().workers(1).chunk_size(37)).unwrap();
    assert_eq!(r.without_timing(), again.without_timing());
}

#[test]
fn determinism_across_workers_and_chunks() {
    let base = ScanConfig::exhaustive(3);
    let reference =
        serde_json::to_string(&exhaustive_scan(&base).unwrap().without_timing()).unwrap();
    for workers in [1, 2, 8] {
        for chunk in [1, 7, 64, 1000] {
            let r = exhaustive_scan(&base.clone().workers(workers).chunk_size(chunk)).unwrap();
            let json = serde_json::to_string(&r.without_timing()).unwrap();
            assert_eq!(json, reference, "workers={workers} chunk={chunk}");
        }
    }
}

fn arb_function(max_n: u32) -> impl Strategy<Value = BooleanFunction> {
    (1u32..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |bits| BooleanFunction::from_truth_table(&bits, n).unwrap())
    })
}

proptest! {
    #[test]
    fn transform_matches_direct_summation(f in arb_function(6)) {
        let s = fwht(&f);
        let naive = naive_spectrum(&f);
        for (m, c) in naive.iter().enumerate() {
            prop_assert_eq!(s.coefficient(SubsetMask(m as u32)).unwrap(), *c);
        }
        prop_assert_eq!(s.degree(), naive_degree(&naive));
    }

    #[test]
    fn derivative_paths_match_enumeration(f in arb_function(8)) {
        let s = fwht(&f);
        for i in 1..=f.arity() {
            let (z, p, m) = naive_derivative_probs(&f, i);
            let c = derivative_distribution_counted(&f, i).unwrap();
            let sp = derivative_distribution_spectral(&s, i).unwrap();
            prop_assert_eq!((c.p_zero, c.p_plus, c.p_minus), (z, p, m));
            prop_assert_eq!(c, sp);
            let t = discrete_derivative(&f, i).unwrap();
            prop_assert_eq!(expectation_of_derivative(&t), naive_coefficient(&f, 1 << (i - 1)));
        }
    }

    #[test]
    fn linear_sum_identities(f in arb_function(9)) {
        let a = FunctionAnalysis::new(&f);
        prop_assert!(a.identities_hold());
        prop_assert_eq!(a.linear_sum, a.total_influence - a.sum_p_minus.scale(2));
        prop_assert_eq!(a.linear_sum, a.sum_p_plus.scale(2) - a.total_influence);
        prop_assert!(a.total_influence <= Dyadic::from_int(a.degree as i64));
        prop_assert!(a.linear_sum <= expected_abs_sum(f.arity()).unwrap());
    }

    #[test]
    fn predicates_agree_for_any_d(f in arb_function(7), k in 1u32..=10) {
        let p = FunctionAnalysis::new(&f).predicates(k).unwrap();
        prop_assert!(p.agreement, "{:?}", p);
    }
}
