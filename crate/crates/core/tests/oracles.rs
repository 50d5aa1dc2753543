//! Cross-checks of the closed forms against path-level oracles.

use std::collections::BTreeSet;

use dyckstat_core::{
    bounded_height_count, build_table, catalan_series, count_exact_dp, enumerate, exchange_sites,
    f_series_t, no_valley_band_gf, peak1_printed_gf, peak_gf, psi, r_series, rv_cfrac, statistics,
    theta_forward, theta_inverse, valley_gf, BivarSeries, CountMethod, DyckPath, Series, StatKind,
    Step, WeightSpec,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn coeff(s: &Series, n: usize) -> BigUint {
    s.coeffs()[n].to_integer().to_biguint().unwrap()
}

fn enum_count(n: usize, k: usize, r: usize, kind: StatKind) -> BigUint {
    BigUint::from(
        enumerate(n)
            .unwrap()
            .filter(|p| p.count_at(kind, k) == r)
            .count(),
    )
}

#[test]
fn three_way_tables_agree() {
    let e = build_table(9, 4, CountMethod::Enum, 14).unwrap();
    let d = build_table(9, 4, CountMethod::Dp, 14).unwrap();
    let g = build_table(9, 4, CountMethod::Gf, 14).unwrap();
    assert_eq!(e.first_difference(&d), None);
    assert_eq!(e.first_difference(&g), None);
    let catalan = catalan_series(9).as_integer_sequence().unwrap();
    for n in 0..=9 {
        for k in 0..=4 {
            for kind in StatKind::ALL {
                assert_eq!(BigInt::from(e.total(n, k, kind)), catalan[n]);
            }
        }
    }
}

#[test]
fn dp_matches_enumeration_on_single_queries() {
    for n in 0..=8 {
        for k in 0..=4 {
            for r in 0..=3 {
                for kind in StatKind::ALL {
                    assert_eq!(count_exact_dp(n, k, r, kind), enum_count(n, k, r, kind));
                }
            }
        }
    }
}

#[test]
fn dp_reaches_large_semilength() {
    // Sum rule at n = 60 where counts far exceed 64 bits.
    let n = 60;
    let total: BigUint = (0..=n).map(|r| count_exact_dp(n, 3, r, StatKind::Valley)).sum();
    assert_eq!(BigInt::from(total), catalan_series(n).as_integer_sequence().unwrap()[n]);
    assert_eq!(
        count_exact_dp(n, 3, 2, StatKind::Valley),
        coeff(&valley_gf(3, 2, n), n)
    );
}

#[test]
fn r_series_counts_height_bounded_paths() {
    for k in 1..=6 {
        let r = r_series(k, 10);
        for n in 0..=10 {
            let bounded = enumerate(n)
                .unwrap()
                .filter(|p| statistics(p).max_height < k)
                .count();
            assert_eq!(coeff(&r, n), BigUint::from(bounded), "k={k} n={n}");
        }
    }
}

#[test]
fn corridor_series_matches_band_dp() {
    for k in 0..=5 {
        let f = f_series_t(k, 30);
        for n in 0..=30 {
            assert_eq!(coeff(&f, n), bounded_height_count(n, k, k).unwrap(), "k={k} n={n}");
        }
    }
}

/// Paths of `2n` steps from height `k+1` back to it, never below 0, with no
/// valley at height `k`.
fn band_brute_force(k: usize, n: usize) -> BigUint {
    let mut total = 0u64;
    for mask in 0u32..(1 << (2 * n)) {
        let steps: Vec<i32> = (0..2 * n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
        let mut heights = vec![k as i32 + 1];
        for s in &steps {
            heights.push(heights.last().unwrap() + s);
        }
        if heights.iter().any(|&h| h < 0) || *heights.last().unwrap() != k as i32 + 1 {
            continue;
        }
        let valley = (0..steps.len().saturating_sub(1))
            .any(|i| steps[i] == -1 && steps[i + 1] == 1 && heights[i + 1] == k as i32);
        if !valley {
            total += 1;
        }
    }
    BigUint::from(total)
}

#[test]
fn no_valley_band_matches_brute_force() {
    for k in 0..=3 {
        let gf = no_valley_band_gf(k, 7);
        for n in 0..=7 {
            assert_eq!(coeff(&gf, n), band_brute_force(k, n), "k={k} n={n}");
        }
    }
}

#[test]
fn height_one_closed_form_matches_oracle() {
    for r in 0..=3 {
        let gf = peak_gf(1, r, 11);
        let printed = peak1_printed_gf(r, 11);
        let mut printed_mismatch = false;
        for n in 0..=11 {
            let oracle = enum_count(n, 1, r, StatKind::Peak);
            assert_eq!(coeff(&gf, n), oracle, "r={r} n={n}");
            printed_mismatch |= coeff(&printed, n) != oracle;
        }
        assert_eq!(printed_mismatch, r > 0, "r={r}");
    }
}

#[test]
fn psi_is_a_statistic_swapping_involution() {
    for n in 0..=9 {
        for p in enumerate(n).unwrap() {
            for k in 2..=5 {
                let (peaks, valleys) = exchange_sites(&p, k).unwrap();
                let peak_set: BTreeSet<usize> = peaks.iter().copied().collect();
                // No position is both kinds, and no two sites share a step.
                assert!(valleys.iter().all(|v| !peak_set.contains(v)
                    && !peak_set.contains(&(v + 1))
                    && (*v == 0 || !peak_set.contains(&(v - 1)))));
                let q = psi(&p, k).unwrap();
                assert_eq!(q.semilength(), p.semilength());
                assert!(DyckPath::from_steps(q.steps().to_vec()).is_ok());
                assert_eq!(psi(&q, k).unwrap(), p);
                assert_eq!(q.count_at(StatKind::Peak, k), p.count_at(StatKind::Valley, k - 2));
                assert_eq!(q.count_at(StatKind::Valley, k - 2), p.count_at(StatKind::Peak, k));
            }
        }
    }
}

#[test]
fn theta_is_a_bijection_onto_shorter_paths() {
    let catalan = catalan_series(10).as_integer_sequence().unwrap();
    for n in 1..=10 {
        let mut images = BTreeSet::new();
        for p in enumerate(n).unwrap() {
            if p.count_at(StatKind::Valley, 0) > 0 {
                continue;
            }
            let inner = theta_forward(&p).unwrap().unwrap();
            assert_eq!(theta_inverse(&inner), p);
            assert!(images.insert(inner));
        }
        assert_eq!(BigInt::from(images.len()), catalan[n - 1]);
    }
}

/// Sum over all paths of semilength `n` of the product of down-step weights
/// `lam[j-1]` or `mu[j-1]` (after a peak) by height `j`.
fn weighted_path_sum(n: usize, lam: &[i64], mu: &[i64]) -> BigInt {
    enumerate(n)
        .unwrap()
        .map(|p| {
            let steps = p.steps();
            let mut h = 0usize;
            let mut w = BigInt::from(1);
            for (i, s) in steps.iter().enumerate() {
                match s {
                    Step::Up => h += 1,
                    Step::Down => {
                        let after_peak = i > 0 && steps[i - 1] == Step::Up;
                        w *= if after_peak { mu[h - 1] } else { lam[h - 1] };
                        h -= 1;
                    }
                }
            }
            w
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn weighted_fraction_matches_weighted_enumeration(
        lam in prop::collection::vec(-3i64..=3, 8),
        mu in prop::collection::vec(-3i64..=3, 8),
    ) {
        let n = 7;
        let weight = |c: i64| BivarSeries::from_series(
            &Series::monomial(BigRational::from_integer(c.into()), 1, n), 0);
        let spec = WeightSpec {
            lambdas: lam.iter().map(|&c| weight(c)).collect(),
            mus: mu.iter().map(|&c| weight(c)).collect(),
            depth: 8,
            tail: BivarSeries::one(0, n),
        };
        let gf = rv_cfrac(&spec, n, 0).unwrap().slice(0);
        for m in 0..=n {
            prop_assert_eq!(gf.coeffs()[m].to_integer(), weighted_path_sum(m, &lam, &mu));
        }
    }

    #[test]
    fn parse_display_roundtrip(seed in 0usize..1430) {
        let p = enumerate(8).unwrap().nth(seed).unwrap();
        prop_assert_eq!(dyckstat_core::parse_path(&p.to_string()).unwrap(), p);
    }
}
