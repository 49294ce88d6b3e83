mod common;

use std::collections::BTreeMap;

use num_complex::{Complex, Complex64};
use num_rational::Ratio;
use proptest::prelude::*;

use splitsig::{
    assemble_h, bordered_delta_exact, build_gss, gaussian_hermitian_signature, h_at_minus_ones, hermitian_signature,
    integer_symmetric_signature, lt_signature_from_multivariable, signature_nullity, splitting_bound_multivariable,
    torus_scan, unlinking_bound, Catalog, ComponentInvariants, ComponentValue, ConwayForm, GeneralizedSeifertSystem,
    HermitianMatrix, SignPattern, TorusPoint, DEFAULT_TOL,
};

use common::*;

fn system_strategy(max_mu: usize, max_rank: usize, bound: i64) -> impl Strategy<Value = GeneralizedSeifertSystem> {
    (1..=max_mu, 0..=max_rank).prop_flat_map(move |(mu, rank)| {
        let count = SignPattern::canonical(mu).len();
        proptest::collection::vec(
            proptest::collection::vec(proptest::collection::vec(-bound..=bound, rank), rank),
            count,
        )
        .prop_map(move |mats| {
            let matrices: BTreeMap<_, _> = SignPattern::canonical(mu).into_iter().zip(mats).collect();
            GeneralizedSeifertSystem::new(mu, rank, matrices).unwrap()
        })
    })
}

fn fraction() -> impl Strategy<Value = Ratio<i64>> {
    (2i64..=24).prop_flat_map(|q| (1..q).prop_map(move |p| Ratio::new(p, q)))
}

fn point(mu: usize) -> impl Strategy<Value = TorusPoint> {
    proptest::collection::vec(fraction(), mu).prop_map(|f| TorusPoint::new(f).unwrap())
}

fn system_and_point() -> impl Strategy<Value = (GeneralizedSeifertSystem, TorusPoint)> {
    system_strategy(3, 6, 5).prop_flat_map(|gss| {
        let mu = gss.mu;
        (Just(gss), point(mu))
    })
}

fn gaussian_hermitian(max_n: usize) -> impl Strategy<Value = Vec<Vec<Complex<i64>>>> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((-9i64..=9, -9i64..=9), n * n).prop_map(move |raw| {
            let mut m = vec![vec![Complex::new(0, 0); n]; n];
            for i in 0..n {
                m[i][i] = Complex::new(raw[i * n + i].0, 0);
                for j in i + 1..n {
                    let (re, im) = raw[i * n + j];
                    m[i][j] = Complex::new(re, im);
                    m[j][i] = Complex::new(re, -im);
                }
            }
            m
        })
    })
}

fn symmetric(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    gaussian_hermitian(max_n).prop_map(|m| m.iter().map(|r| r.iter().map(|z| z.re).collect()).collect())
}

fn to_float(m: &[Vec<Complex<i64>>]) -> HermitianMatrix {
    HermitianMatrix::from_rows(
        m.iter()
            .map(|r| r.iter().map(|z| Complex64::new(z.re as f64, z.im as f64)).collect())
            .collect(),
    )
    .unwrap()
}

fn theta(omega: &TorusPoint) -> Vec<f64> {
    omega
        .fractions()
        .iter()
        .map(|q| *q.numer() as f64 / *q.denom() as f64)
        .collect()
}

/// Whether every eigenvalue is either clearly zero or clearly away from the
/// zero threshold, so that classification cannot depend on rounding.
fn well_separated(eigenvalues: &[f64], threshold: f64) -> bool {
    eigenvalues
        .iter()
        .all(|&x| x.abs() < threshold * 1e-3 || x.abs() > threshold * 1e3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bordering_changes_inertia_by_one(
        m in gaussian_hermitian(8),
        seed in proptest::collection::vec((-9i64..=9, -9i64..=9), 8),
        lam in -9i64..=9,
    ) {
        let z: Vec<Complex<i64>> = seed.iter().take(m.len()).map(|&(a, b)| Complex::new(a, b)).collect();
        let (ds, de) = bordered_delta_exact(&m, &z, lam).unwrap();
        prop_assert_eq!(ds.abs() + de.abs(), 1);
    }

    #[test]
    fn exact_gaussian_matches_charpoly(m in gaussian_hermitian(6)) {
        let r = gaussian_hermitian_signature(&m).unwrap();
        let re: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|z| z.re).collect()).collect();
        let im: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|z| z.im).collect()).collect();
        let (p, q, z) = charpoly_inertia(&real_embedding(&re, &im));
        prop_assert_eq!((r.positives, r.negatives, r.nullity), (p / 2, q / 2, z / 2));
    }

    #[test]
    fn float_signature_matches_exact_on_gaussian(m in gaussian_hermitian(8)) {
        let exact = gaussian_hermitian_signature(&m).unwrap();
        prop_assert_eq!(hermitian_signature(&to_float(&m), DEFAULT_TOL).unwrap(), exact);
    }

    #[test]
    fn signature_is_scale_invariant(m in symmetric(8), k in 1i64..=50) {
        let h = HermitianMatrix::from_int_rows(&m).unwrap();
        let base = hermitian_signature(&h, DEFAULT_TOL).unwrap();
        prop_assert_eq!(hermitian_signature(&h.scaled(k as f64), DEFAULT_TOL).unwrap(), base);
        prop_assert_eq!(hermitian_signature(&h.scaled(1.0 / k as f64), DEFAULT_TOL).unwrap(), base);
        let scaled: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        prop_assert_eq!(integer_symmetric_signature(&scaled).unwrap(), integer_symmetric_signature(&m).unwrap());
    }

    #[test]
    fn negation_swaps_inertia(m in symmetric(8)) {
        let h = HermitianMatrix::from_int_rows(&m).unwrap();
        let r = hermitian_signature(&h, DEFAULT_TOL).unwrap();
        let n = hermitian_signature(&-&h, DEFAULT_TOL).unwrap();
        prop_assert_eq!((n.positives, n.negatives, n.nullity), (r.negatives, r.positives, r.nullity));
        prop_assert_eq!(n.signature, -r.signature);
    }

    #[test]
    fn assembled_h_is_hermitian_and_matches_naive_sum((gss, omega) in system_and_point()) {
        let h = assemble_h(&gss, &omega).unwrap();
        prop_assert_eq!(h.hermitian_defect().2, 0.0);
        let naive = naive_h(&gss, &theta(&omega));
        let scale = h.max_abs().max(1.0);
        for j in 0..gss.rank {
            for k in 0..gss.rank {
                prop_assert!((h.get(j, k) - naive[j][k]).norm() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn float_signature_matches_jacobi((gss, omega) in system_and_point()) {
        let h = assemble_h(&gss, &omega).unwrap();
        let ev = hermitian_eigenvalues(&h.rows());
        let threshold = DEFAULT_TOL * h.max_abs().max(1.0);
        prop_assume!(well_separated(&ev, threshold));
        let r = signature_nullity(&gss, &omega, DEFAULT_TOL).unwrap();
        prop_assert_eq!((r.signature, r.nullity), classify(&ev, threshold));
    }

    #[test]
    fn minus_ones_agree_with_assembly(gss in system_strategy(3, 6, 5)) {
        let exact = h_at_minus_ones(&gss).unwrap();
        let h = assemble_h(&gss, &TorusPoint::all_minus_one(gss.mu)).unwrap();
        for j in 0..gss.rank {
            for k in 0..gss.rank {
                prop_assert!((h.get(j, k) - Complex64::new(exact[j][k] as f64, 0.0)).norm() <= 1e-9);
            }
        }
    }

    #[test]
    fn conjugate_point_has_the_same_invariants((gss, omega) in system_and_point()) {
        // H(conj omega) is the complex conjugate of H(omega).
        let a = signature_nullity(&gss, &omega, DEFAULT_TOL).unwrap();
        let b = signature_nullity(&gss, &omega.inverted(), DEFAULT_TOL).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn one_color_levine_tristram_is_symmetric(gss in system_strategy(1, 6, 5), q in fraction()) {
        let a = lt_signature_from_multivariable(&gss, q, DEFAULT_TOL).unwrap();
        let b = lt_signature_from_multivariable(&gss, Ratio::from_integer(1) - q, DEFAULT_TOL).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reversing_a_color_inverts_its_coordinate(
        (gss, omega) in system_and_point(),
        pick in 0usize..3,
    ) {
        let color = pick % gss.mu;
        let reversed = gss.reverse_color(color).unwrap();
        let a = signature_nullity(&gss, &omega, DEFAULT_TOL).unwrap();
        let b = signature_nullity(&reversed, &omega.with_inverted(color), DEFAULT_TOL).unwrap();
        prop_assert_eq!(a, b);
        let comps = ComponentInvariants::unknots(gss.mu);
        let bound_a = splitting_bound_multivariable(gss.mu, a.signature, a.nullity as u32, &comps).unwrap();
        let bound_b = splitting_bound_multivariable(gss.mu, b.signature, b.nullity as u32, &comps).unwrap();
        prop_assert_eq!(bound_a.value, bound_b.value);
    }

    #[test]
    fn bounds_ignore_color_order(
        mu in 1usize..=5,
        sigma in -20i64..=20,
        eta in 0u32..=6,
        raw in proptest::collection::vec((-6i64..=6, 0u32..=3), 5),
        rotate in 0usize..5,
    ) {
        let comps: Vec<ComponentValue> = raw[..mu].iter().map(|&(s, e)| ComponentValue::new(s, e)).collect();
        let mut permuted = comps.clone();
        permuted.rotate_left(rotate % mu);
        permuted.reverse();
        let a = splitting_bound_multivariable(mu, sigma, eta, &ComponentInvariants(comps)).unwrap();
        let b = splitting_bound_multivariable(mu, sigma, eta, &ComponentInvariants(permuted)).unwrap();
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn unlinking_bound_is_half_rounded_up(
        sigma in -20i64..=20,
        eta in 0u32..=5,
        lk12 in -5i64..=5,
        lk13 in -5i64..=5,
        lk23 in -5i64..=5,
    ) {
        let lk = vec![vec![0, lk12, lk13], vec![lk12, 0, lk23], vec![lk13, lk23, 0]];
        let r = unlinking_bound(3, sigma, eta, &lk).unwrap();
        let raw = sigma.abs() + (2 - eta as i64).abs() + lk12.abs() + lk13.abs() + lk23.abs();
        prop_assert_eq!(r.raw, Some(raw));
        prop_assert!(2 * r.value as i64 >= raw && 2 * r.value as i64 <= raw + 1);
    }

    #[test]
    fn two_bridge_forms_are_negative_definite(
        a in proptest::collection::vec(1u32..=8, 1..=6),
        b_seed in proptest::collection::vec(1u32..=8, 5),
    ) {
        let b = &b_seed[..a.len() - 1];
        let form = ConwayForm::from_ab(&a, b).unwrap();
        let s: usize = a.iter().map(|&x| x as usize).sum();
        let gss = build_gss(&form).unwrap();
        let h = h_at_minus_ones(&gss).unwrap();
        let exact = integer_symmetric_signature(&h).unwrap();
        prop_assert_eq!((exact.negatives, exact.nullity), (s - 1, 0));
        let r = signature_nullity(&gss, &TorusPoint::all_minus_one(2), DEFAULT_TOL).unwrap();
        prop_assert_eq!(r.signature, 1 - s as i64);
        let bound = splitting_bound_multivariable(2, r.signature, 0, &ComponentInvariants::unknots(2)).unwrap();
        prop_assert_eq!(bound.value, s as u64);
    }

    #[test]
    fn system_json_round_trips(gss in system_strategy(3, 4, 5)) {
        let back = GeneralizedSeifertSystem::from_json(&gss.to_json()).unwrap();
        prop_assert_eq!(back, gss);
    }

    #[test]
    fn torus_point_text_round_trips(omega in (1usize..=4).prop_flat_map(point)) {
        let back: TorusPoint = omega.to_string().parse().unwrap();
        prop_assert_eq!(back, omega);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scan_samples_respect_dimension(gss in system_strategy(2, 5, 4), res in 1usize..=6) {
        let grid = torus_scan(&gss, res, DEFAULT_TOL).unwrap();
        prop_assert_eq!(grid.len(), res.pow(gss.mu as u32));
        for s in &grid.samples {
            prop_assert!(s.sigma.unsigned_abs() as usize + s.eta as usize <= gss.rank);
            prop_assert_eq!((s.sigma + gss.rank as i64 - s.eta as i64) % 2, 0);
            if s.eta > 0 {
                prop_assert!(s.det_zero || gss.rank == 0);
            }
        }
    }
}

#[test]
fn fixture_bounds_match_linking_parity() {
    let catalog = Catalog::builtin().unwrap();
    let mut checked = 0;
    for record in catalog.fixtures() {
        let report = record.evaluate().unwrap();
        if let Some(ok) = report.parity_consistent {
            assert!(ok, "{}: bound {} has the wrong parity", record.name, report.value);
            checked += 1;
        }
    }
    assert!(checked >= 6, "only {checked} fixtures carry parity data");
}
