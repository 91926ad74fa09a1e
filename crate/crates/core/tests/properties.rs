mod common;

use polsar_gd::classify::{classify_raster, PALETTE};
use polsar_gd::params::params_for_kennaugh;
use polsar_gd::raster::write_class_map;
use polsar_gd::spff::{dominant_label, Component};
use polsar_gd::{
    covariance_from_coherency, gd_coherency, gd_covariance, gd_kennaugh, gd_scattering,
    kennaugh_from_coherency, kennaugh_from_scattering, rotate_kennaugh, CoherencyMatrix,
    CovarianceMatrix, RollInvariantParams, Scheme, SpffConfig, SpffEngine,
};
use proptest::prelude::*;

fn kennaugh(seed: u64) -> polsar_gd::KennaughMatrix {
    kennaugh_from_coherency(&common::coherency(&mut common::rng(seed)))
}

proptest! {
    #[test]
    fn gd_is_bounded_and_symmetric(a in any::<u64>(), b in any::<u64>()) {
        let (k1, k2) = (kennaugh(a), kennaugh(b));
        let d = gd_kennaugh(&k1, &k2).unwrap().value();
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert_eq!(d, gd_kennaugh(&k2, &k1).unwrap().value());
        prop_assert!(gd_kennaugh(&k1, &k1).unwrap().value() < 1e-7);
    }

    #[test]
    fn gd_is_scale_invariant(a in any::<u64>(), b in any::<u64>(), s in 1e-6f64..1e6, e in -20i32..20) {
        let (k1, k2) = (kennaugh(a), kennaugh(b));
        let d = gd_kennaugh(&k1, &k2).unwrap().value();
        let scaled = gd_kennaugh(&k1.scaled(s), &k2.scaled(1.0 / s)).unwrap().value();
        prop_assert!((scaled - d).abs() < 1e-12);
        let p2 = 2f64.powi(e);
        prop_assert_eq!(gd_kennaugh(&k1.scaled(p2), &k2).unwrap().value(), d);
    }

    #[test]
    fn gd_is_orthogonally_invariant(a in any::<u64>(), b in any::<u64>(), q in any::<u64>()) {
        let (k1, k2) = (kennaugh(a), kennaugh(b));
        let q = common::orthogonal(&mut common::rng(q));
        let d = gd_kennaugh(&k1, &k2).unwrap().value();
        let dq = gd_kennaugh(&k1.congruence(&q), &k2.congruence(&q)).unwrap().value();
        prop_assert!((d - dq).abs() < 1e-12);
    }

    #[test]
    fn representations_agree(a in any::<u64>(), b in any::<u64>()) {
        let (mut ra, mut rb) = (common::rng(a), common::rng(b));
        let (s1, s2) = (common::scattering(&mut ra), common::scattering(&mut rb));
        let ds = gd_scattering(&s1, &s2).unwrap().value();
        let dk = gd_kennaugh(&kennaugh_from_scattering(&s1), &kennaugh_from_scattering(&s2)).unwrap().value();
        let dt = gd_coherency(&CoherencyMatrix::from_scattering(&s1), &CoherencyMatrix::from_scattering(&s2))
            .unwrap()
            .value();
        let dc = gd_covariance(&CovarianceMatrix::from_scattering(&s1), &CovarianceMatrix::from_scattering(&s2))
            .unwrap()
            .value();
        for x in [dk, dt, dc] {
            prop_assert!((x - ds).abs() < 1e-12, "{} vs {}", x, ds);
        }
        let (t1, t2) = (common::coherency(&mut ra), common::coherency(&mut rb));
        let dt = gd_coherency(&t1, &t2).unwrap().value();
        let dc = gd_covariance(&covariance_from_coherency(&t1), &covariance_from_coherency(&t2)).unwrap().value();
        let dk = gd_kennaugh(&kennaugh_from_coherency(&t1), &kennaugh_from_coherency(&t2)).unwrap().value();
        prop_assert!((dt - dc).abs() < 1e-12 && (dt - dk).abs() < 1e-12);
    }

    #[test]
    fn parameters_are_roll_invariant(a in any::<u64>(), theta in -3.2f64..3.2) {
        let k = kennaugh(a);
        let p = params_for_kennaugh(&k).unwrap();
        let r = params_for_kennaugh(&rotate_kennaugh(&k, theta)).unwrap();
        for (x, y) in [(p.alpha_gd, r.alpha_gd), (p.tau_gd, r.tau_gd), (p.p_gd, r.p_gd), (p.p_d, r.p_d)] {
            prop_assert!((x - y).abs() < 1e-10);
        }
        prop_assert!((0.0..=90.0).contains(&p.alpha_gd) && (0.0..=45.0).contains(&p.tau_gd));
        prop_assert!((0.0..=1.0).contains(&p.p_gd) && (0.0..=1.0).contains(&p.p_d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_conserves_power(a in any::<u64>(), swapped in any::<bool>(), vol in any::<bool>()) {
        let t = common::coherency(&mut common::rng(a));
        let mut cfg = SpffConfig { theta_step_deg: 1.0, include_volume: vol, ..SpffConfig::default() };
        if swapped {
            cfg.branch_map = polsar_gd::spff::BranchMap::Swapped;
        }
        let d = SpffEngine::new(cfg).unwrap().factorize_coherency(&t).unwrap();
        prop_assert!((d.total() - d.span).abs() <= 1e-9 * d.span);
        prop_assert!((d.span - t.trace()).abs() <= 1e-12 * d.span);
        prop_assert!(d.components.iter().all(|c| c.power >= 0.0) && d.residue >= 0.0);
        // Dominance order is by similarity (volume possibly last) and weights follow it.
        let weights: Vec<f64> = d.dominance.iter().map(|c| d.components.iter().find(|x| x.component == *c).unwrap().weight).collect();
        prop_assert_eq!(d.dominance.len(), d.components.len());
        prop_assert_eq!(d.dominance.contains(&Component::Volume), vol);
        prop_assert!(weights.iter().all(|w| (0.0..=1.0).contains(w)));
        prop_assert!(dominant_label(&d).is_some());
    }

    #[test]
    fn class_maps_use_known_labels(
        params in proptest::collection::vec(
            proptest::option::of((0.0f64..=90.0, 0.0f64..=45.0, 0.0f64..=1.0)), 1..64),
        scheme in prop_oneof![Just(Scheme::Tau), Just(Scheme::Alpha), Just(Scheme::PgdAlpha)],
    ) {
        let params: Vec<Option<RollInvariantParams>> = params
            .into_iter()
            .map(|p| p.map(|(alpha_gd, tau_gd, p_gd)| RollInvariantParams { alpha_gd, tau_gd, p_gd, p_d: p_gd, span: 1.0 }))
            .collect();
        let labels = classify_raster(&params, scheme);
        let legend = scheme.legend();
        prop_assert!(labels.iter().all(|&l| l as usize <= PALETTE.len()));
        prop_assert!(labels.iter().all(|l| legend.iter().any(|e| e.0 == *l)));
        for (p, l) in params.iter().zip(&labels) {
            prop_assert_eq!(p.is_none(), *l == 0);
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("class.u8.bin");
        write_class_map(&path, &labels, &legend).unwrap();
        prop_assert!(std::fs::read(&path).unwrap().iter().all(|&l| l <= 8));
    }
}
