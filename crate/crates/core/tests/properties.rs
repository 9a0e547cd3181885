mod common;

use katzlab::dpoly::{
    cycle_denominator, cycle_denominator_parity, d_closed, d_recursive, d_table, fib_ratio,
    ratio_constant,
};
use katzlab::graphs::{graph_distance, resistance, resistance_oracle};
use katzlab::katz::{katz, katz_cycle, katz_oracle_series, katz_path};
use katzlab::ordering::{cutoff_root, cutoff_table, p_gap, p_tilde, GapPoly};
use katzlab::{Error, Family, GraphSpec, VertexPair};
use proptest::prelude::*;

use common::{rel, INV_SQRT5};

fn below_half() -> impl Strategy<Value = f64> {
    1e-3..0.4999f64
}

fn below_root5() -> impl Strategy<Value = f64> {
    1e-3..(INV_SQRT5 - 1e-6)
}

/// Effective resistance from a grounded Laplacian solve.
fn resistance_ref(n: usize, cycle: bool, i: usize, j: usize) -> f64 {
    let mut l = vec![vec![0.0; n]; n];
    let mut edge = |a: usize, b: usize| {
        l[a][a] += 1.0;
        l[b][b] += 1.0;
        l[a][b] -= 1.0;
        l[b][a] -= 1.0;
    };
    for v in 0..n - 1 {
        edge(v, v + 1);
    }
    if cycle {
        edge(n - 1, 0);
    }
    // ground j, inject a unit current at i
    let keep: Vec<usize> = (0..n).filter(|&v| v != j - 1).collect();
    let m: Vec<Vec<f64>> = keep
        .iter()
        .map(|&r| keep.iter().map(|&c| l[r][c]).collect())
        .collect();
    let b: Vec<f64> = keep
        .iter()
        .map(|&r| if r == i - 1 { 1.0 } else { 0.0 })
        .collect();
    let x = common::solve(m, b);
    x[keep.iter().position(|&v| v == i - 1).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closed_form_matches_recursion(n in 0usize..=100, a in below_half()) {
        let c = d_closed(n, a);
        prop_assert!((c - common::d(n, a)).abs() <= 1e-12 * c.abs().max(1.0));
        prop_assert!((d_recursive(n, a) - common::d(n, a)).abs() <= 1e-15);
    }

    #[test]
    fn d_table_matches_pointwise(max in 0usize..=60, a in below_half()) {
        let t = d_table(max, a);
        prop_assert_eq!(t.len(), max + 1);
        for (n, v) in t.iter().enumerate() {
            prop_assert!((v - d_recursive(n, a)).abs() <= 1e-15);
        }
    }

    #[test]
    fn splitting_and_product(n in 1isize..=60, k in 1isize..=60, a in below_half()) {
        prop_assume!(k <= n);
        let dm = |m: isize| common::dm(m, a);
        let split = dm(k) * dm(n - k) - a * a * dm(k - 1) * dm(n - k - 1);
        prop_assert!((split - d_recursive(n as usize, a)).abs() <= 1e-12);
        let prod = dm(k) * dm(n) - dm(k - 1) * dm(n + 1);
        prop_assert!((prod - a.powi(2 * k as i32) * dm(n - k)).abs() <= 1e-12);
    }

    #[test]
    fn monotone_bounds(n in 2usize..=100, a in below_half()) {
        let (prev, cur) = (d_recursive(n - 1, a), d_recursive(n, a));
        prop_assert!(prev > cur);
        prop_assert!(cur > prev / 2.0);
        prop_assert!(prev / 2.0 > 0.0);
        prop_assert!(cur <= 1.0);
    }

    #[test]
    fn vanishing_ratio(n in 1usize..=200, a in below_half()) {
        prop_assert!(a.powi(n as i32) / d_recursive(n, a) <= 2.0 * a / (n as f64 + 1.0));
    }

    #[test]
    fn fibonacci_ratio_bound(n in 1usize..=100, a in below_root5()) {
        let bound = fib_ratio(n).unwrap() * d_recursive(n - 1, a);
        prop_assert!(d_recursive(n, a) >= bound * (1.0 - 1e-14));
    }

    #[test]
    fn cycle_denominator_forms_agree(n in 3usize..=100, a in below_half()) {
        let reference = common::d(n - 1, a) - 2.0 * a.powi(n as i32) - 2.0 * a * a * common::d(n - 2, a);
        prop_assert!(rel(cycle_denominator(n, a).unwrap(), reference) <= 1e-12);
        prop_assert!(rel(cycle_denominator_parity(n, a).unwrap(), reference) <= 1e-12);
    }

    #[test]
    fn path_determinant(n in 2usize..=40, a in below_half()) {
        prop_assert!(rel(common::det(common::kernel(n, false, a)), d_recursive(n, a)) <= 1e-11);
    }

    #[test]
    fn cycle_determinant(n in 3usize..=40, a in below_half()) {
        let det = common::det(common::kernel(n, true, a));
        prop_assert!(rel(det, cycle_denominator(n, a).unwrap()) <= 1e-11);
    }

    #[test]
    fn katz_matches_dense_solve(n in 2usize..=25, cycle in any::<bool>(), t in 0.01..0.99f64) {
        prop_assume!(!cycle || n >= 3);
        let a = t / common::spectral_radius(n, cycle);
        let family = if cycle { Family::Cycle } else { Family::Path };
        let g = GraphSpec::new(family, n).unwrap();
        let k = common::katz_dense(n, cycle, a);
        for i in 1..=n {
            for j in 1..=n {
                let v = katz(&g, VertexPair::new(i, j), a).unwrap();
                let e = (v - k[i - 1][j - 1]).abs() / k[i - 1][j - 1].abs().max(1e-300);
                prop_assert!(e <= 1e-9 || (v - k[i - 1][j - 1]).abs() <= 1e-15, "{} ({},{}) a={}", g, i, j, a);
            }
        }
    }

    #[test]
    fn katz_is_symmetric_and_reflection_invariant(n in 3usize..=40, i in 1usize..=40, j in 1usize..=40, a in below_half()) {
        prop_assume!(i <= n && j <= n);
        prop_assert_eq!(katz_path(n, i, j, a).unwrap(), katz_path(n, j, i, a).unwrap());
        let mirrored = katz_path(n, n + 1 - j, n + 1 - i, a).unwrap();
        prop_assert!(rel(katz_path(n, i, j, a).unwrap(), mirrored) <= 1e-13);
    }

    #[test]
    fn cycle_katz_depends_on_cyclic_distance(n in 3usize..=40, i in 1usize..=40, j in 1usize..=40, s in 0usize..40, a in below_half()) {
        prop_assume!(i <= n && j <= n);
        let shift = |v: usize| (v - 1 + s) % n + 1;
        let x = katz_cycle(n, i, j, a).unwrap();
        prop_assert!(rel(x, katz_cycle(n, shift(i), shift(j), a).unwrap()) <= 1e-13);
    }

    #[test]
    fn path_katz_decreases_with_distance_from_a_vertex(n in 3usize..=40, i in 1usize..=40, a in below_half()) {
        prop_assume!(i <= n);
        for j in i + 1..n {
            prop_assert!(katz_path(n, i, j + 1, a).unwrap() < katz_path(n, i, j, a).unwrap());
        }
    }

    #[test]
    fn shift_toward_centre_increases_katz(
        (n, k, i) in (3usize..=30)
            .prop_flat_map(|n| (Just(n), 1..=n - 2))
            .prop_flat_map(|(n, k)| (Just(n), Just(k), 1..=(n - k) / 2)),
        a in below_half(),
    ) {
        // moving a pair one step toward the middle never lowers its score
        let here = katz_path(n, i, i + k, a).unwrap();
        let moved = katz_path(n, i + 1, i + k + 1, a).unwrap();
        prop_assert!(here <= moved * (1.0 + 1e-14), "n={} i={} k={}", n, i, k);
    }

    #[test]
    fn series_oracle_matches_closed_form(n in 3usize..=12, cycle in any::<bool>(), a in 0.01..0.4f64) {
        let family = if cycle { Family::Cycle } else { Family::Path };
        let g = GraphSpec::new(family, n).unwrap();
        let s = katz_oracle_series(&g, a, 1e-13).unwrap();
        for p in g.pairs() {
            prop_assert!((s[(p.i - 1, p.j - 1)] - katz(&g, p, a).unwrap()).abs() <= 1e-11);
        }
    }

    #[test]
    fn resistance_matches_grounded_solve(n in 3usize..=40, cycle in any::<bool>(), i in 1usize..=40, j in 1usize..=40) {
        prop_assume!(i <= n && j <= n && i != j);
        let family = if cycle { Family::Cycle } else { Family::Path };
        let g = GraphSpec::new(family, n).unwrap();
        let p = VertexPair::new(i, j);
        let r = resistance(&g, p).unwrap();
        prop_assert!((r - resistance_ref(n, cycle, i, j)).abs() <= 1e-10);
        prop_assert!((r - resistance_oracle(&g, p).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn sign_of_gap_matches_reduced_polynomial(n in 3usize..=30, j in 1usize..=3, t in 0.01..0.99f64) {
        prop_assume!(n >= j + 2);
        let a = t / common::spectral_radius(n, false);
        let (p, q) = (p_gap(n, j, a).unwrap(), p_tilde(n, j, a).unwrap());
        prop_assert_eq!(p.signum(), q.signum());
        prop_assert!((q - common::p_tilde(n, j, a)).abs() <= 1e-14);
    }

    #[test]
    fn gap_is_extreme_class_difference(n in 4usize..=20, j in 1usize..=3, t in 0.01..0.99f64) {
        // min over distance-j pairs minus max over distance-(j+1) pairs
        prop_assume!(n >= j + 2);
        let a = t / common::spectral_radius(n, false);
        let k = common::katz_dense(n, false, a);
        let near = (1..=n - j).map(|i| k[i - 1][i + j - 1]).fold(f64::INFINITY, f64::min);
        let far = (1..n - j).map(|i| k[i - 1][i + j]).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((p_gap(n, j, a).unwrap() - (near - far)).abs() <= 1e-12);
    }
}

#[test]
fn ratio_limit_at_400() {
    for a in [0.1, 0.3, 0.45] {
        let d = common::d_seq(403, a);
        for k in 1..=3 {
            let limit = ((1.0 + (1.0 - 4.0 * a * a).sqrt()) / 2.0).powi(k);
            assert!((d[400 + k as usize] / d[400] - limit).abs() <= 1e-8);
            assert!((ratio_constant(k, a).unwrap() - limit).abs() <= 1e-14);
        }
    }
}

#[test]
fn resistance_symmetry_and_triangle_inequality() {
    for family in [Family::Path, Family::Cycle] {
        for n in 3..=20 {
            let g = GraphSpec::new(family, n).unwrap();
            let r = |a: usize, b: usize| {
                if a == b {
                    0.0
                } else {
                    resistance(&g, VertexPair::new(a, b)).unwrap()
                }
            };
            for x in 1..=n {
                for y in 1..=n {
                    assert_eq!(r(x, y), r(y, x));
                    for z in 1..=n {
                        assert!(r(x, z) <= r(x, y) + r(y, z) + 1e-12, "{g} {x} {y} {z}");
                    }
                }
            }
        }
    }
}

#[test]
fn resistance_translation_invariance() {
    for n in 3..=30 {
        let c = GraphSpec::cycle(n).unwrap();
        let p = GraphSpec::path(n).unwrap();
        for i in 1..=n {
            for j in i + 1..=n {
                let k = j - i;
                assert_eq!(resistance(&p, VertexPair::new(i, j)).unwrap(), k as f64);
                let rc = resistance(&c, VertexPair::new(i, j)).unwrap();
                assert!((rc - resistance(&c, VertexPair::new(1, 1 + k)).unwrap()).abs() <= 1e-15);
                assert!((rc - (k * (n - k)) as f64 / n as f64).abs() <= 1e-15);
                assert_eq!(
                    graph_distance(&c, VertexPair::new(i, j)).unwrap(),
                    k.min(n - k)
                );
            }
        }
    }
}

#[test]
fn reduced_polynomial_at_inv_sqrt5_decreases_to_zero() {
    for j in 1..=3 {
        for nj in 2..=48 {
            let n = nj + j;
            let here = p_tilde(n, j, INV_SQRT5).unwrap();
            let later = p_tilde(n + 2, j, INV_SQRT5).unwrap();
            assert!(here > 0.0 && later > 0.0 && later < here, "n={n} j={j}");
            let g = GapPoly::new(n, j).unwrap();
            assert!((g.p_tilde_at_inv_sqrt5() - here).abs() <= 1e-15);
        }
        assert!(p_tilde(50 + j, j, INV_SQRT5).unwrap() < 1e-15);
    }
}

#[test]
fn reduced_polynomial_brackets_the_cutoff() {
    for j in 1..=3 {
        for nj in 5..=50 {
            let n = nj + j;
            assert!(p_tilde(n, j, 0.5).unwrap() < 0.0);
            assert!(p_tilde(n, j, INV_SQRT5).unwrap() > 0.0);
            // the root is within 1e-9 of 1/sqrt5 once n - j reaches 40
            if nj <= 39 {
                assert!(
                    p_tilde(n, j, INV_SQRT5 + 1e-9).unwrap() > 0.0,
                    "n={n} j={j}"
                );
            }
        }
    }
}

#[test]
fn cutoff_table_matches_single_roots() {
    let table = cutoff_table(2, 7..=30, 1e-15).unwrap();
    assert_eq!(table.len(), 24);
    for (row, n) in table.iter().zip(7..=30) {
        let row = row.as_ref().unwrap();
        assert_eq!(row.n, n);
        assert_eq!(*row, cutoff_root(n, 2, 1e-15).unwrap());
        assert!(row.root > INV_SQRT5 && row.root < 0.5);
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(matches!(GraphSpec::path(1), Err(Error::InvalidGraph(_))));
    assert!(matches!(GraphSpec::cycle(2), Err(Error::InvalidGraph(_))));
    let g = GraphSpec::path(10).unwrap();
    assert!(matches!(g.pair(0, 3), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(g.pair(2, 11), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(
        katz(&g, VertexPair::new(1, 2), 0.6),
        Err(Error::InadmissibleAlpha { .. })
    ));
    assert!(matches!(
        katz(&g, VertexPair::new(1, 2), 0.0),
        Err(Error::InadmissibleAlpha { .. })
    ));
    assert!(matches!(
        katz(&g, VertexPair::new(1, 2), f64::NAN),
        Err(Error::InadmissibleAlpha { .. })
    ));
    assert!(katz_cycle(15, 1, 2, 0.5).is_err());
    assert!(fib_ratio(0).is_err());
    assert!(ratio_constant(1, 0.5).is_err());
    assert!(GapPoly::new(5, 4).is_err());
    let msg = katz(&g, VertexPair::new(1, 2), 0.6)
        .unwrap_err()
        .to_string();
    assert!(msg.contains("0.6") && msg.contains("0.521"), "{msg}");
}
