use std::f64::consts::PI;

use dicke_ising::cavity::{
    closed_form_energies, hopfield_coefficients, hopfield_matrix, CavityParams, PolaritonModel,
};
use dicke_ising::ising::{
    bose_energy, fermion_energy, hp1_coefficients_numeric, hp1_perturbative_energy,
};
use dicke_ising::oracle::{bdg_spin_chain, ed_spin_chain_with};
use dicke_ising::{ApproximationTag, ChainParams, MomentumGrid};
use proptest::prelude::*;

fn eta() -> impl Strategy<Value = f64> {
    -0.25f64..=0.25
}

/// `(w~, E, Lambda)` with `4 Lambda^2 < w~ E`, i.e. a stable normal phase.
fn admissible_triple() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.05f64..5.0, 0.05f64..5.0, -0.999f64..0.999)
        .prop_map(|(w, e, t)| (w, e, t * 0.5 * (w * e).sqrt()))
}

proptest! {
    #[test]
    fn grid_is_mirror_symmetric(n in 1usize..5000) {
        let g = MomentumGrid::pekar(n);
        prop_assert_eq!(g.len(), n);
        for l in 1..=n {
            let a = g.k(l).unwrap();
            prop_assert!(a > 0.0 && a < PI);
            if 2 * l <= n + 1 {
                prop_assert_eq!(g.k(n + 1 - l).unwrap(), PI - a);
            }
        }
    }

    #[test]
    fn validation_is_idempotent(n in 0usize..50, w0 in -2.0f64..2.0, eta in -0.4f64..0.4) {
        match ChainParams::new(n, w0, eta) {
            Ok(p) => prop_assert_eq!(p.validate().unwrap(), p),
            Err(e) => {
                let again = ChainParams::new(n, w0, eta).unwrap_err();
                prop_assert_eq!(format!("{e}"), format!("{again}"));
            }
        }
    }

    #[test]
    fn coupling_sign_mirrors_the_zone(eta in eta(), k in 0.0f64..PI) {
        let p = ChainParams::new(10, 1.3, eta).unwrap();
        let m = p.with_eta(-eta).unwrap();
        let tol = 1e-13;
        prop_assert!((fermion_energy(k, &p) - fermion_energy(PI - k, &m)).abs() < tol);
        prop_assert!((bose_energy(k, &p).unwrap() - bose_energy(PI - k, &m).unwrap()).abs() < tol);
        prop_assert!(
            (hp1_perturbative_energy(k, &p) - hp1_perturbative_energy(PI - k, &m)).abs() < tol
        );
    }

    #[test]
    fn negative_coupling_raises_the_band(eta in -0.25f64..-1e-3, n in 2usize..60) {
        let p = ChainParams::new(n, 1.0, eta).unwrap();
        let ks: Vec<f64> = p.grid().ks().collect();
        for w in ks.windows(2) {
            prop_assert!(fermion_energy(w[1], &p) > fermion_energy(w[0], &p));
            prop_assert!(bose_energy(w[1], &p).unwrap() > bose_energy(w[0], &p).unwrap());
        }
    }

    #[test]
    fn bose_never_exceeds_exact(eta in eta(), k in 0.0f64..PI) {
        let p = ChainParams::new(10, 1.0, eta).unwrap();
        prop_assert!(bose_energy(k, &p).unwrap() <= fermion_energy(k, &p) + 1e-15);
    }

    #[test]
    fn hopfield_closed_form_matches_eigensolver((w, e, l) in admissible_triple()) {
        let (lo, hi) = closed_form_energies(w, e, l).unwrap();
        let ev = hopfield_matrix(w, e, l).eigenvalues().unwrap();
        prop_assert!((ev[3] - hi).abs() <= 1e-12 * hi);
        prop_assert!((ev[2] - lo).abs() <= 1e-12 * hi);
        prop_assert!((ev[0] + hi).abs() <= 1e-12 * hi);
        prop_assert!((ev[1] + lo).abs() <= 1e-12 * hi);
    }

    #[test]
    fn hopfield_branches_are_ordered((w, e, l) in admissible_triple()) {
        let (lo, hi) = closed_form_energies(w, e, l).unwrap();
        let scale = w.max(e);
        prop_assert!(lo * hi <= w * e * (1.0 + 1e-14));
        prop_assert!(lo * lo + hi * hi - (w * w + e * e) <= 1e-13 * scale * scale);
        prop_assert!(lo <= w.min(e) * (1.0 + 1e-14));
        prop_assert!(hi >= w.max(e) * (1.0 - 1e-14));
        if l.abs() > 1e-6 * scale {
            prop_assert!(lo < w.min(e));
            prop_assert!(hi > w.max(e));
        }
    }

    #[test]
    fn hopfield_vectors_are_metric_orthonormal((w, e, l) in admissible_triple()) {
        let scale = w.max(e);
        prop_assume!(l.abs() > 1e-3 * scale);
        let en = closed_form_energies(w, e, l).unwrap();
        let c = hopfield_coefficients(w, e, l, en).unwrap();
        prop_assert!((c.minus.bosonic_norm() - 1.0).abs() < 1e-9);
        prop_assert!((c.plus.bosonic_norm() - 1.0).abs() < 1e-9);
        prop_assert!(c.minus.metric_dot(&c.plus).abs() < 1e-9);
        let m = hopfield_matrix(w, e, l).entries;
        for (v, ep) in [(c.minus, en.0), (c.plus, en.1)] {
            let g = v.matrix_gauge().as_array();
            let size = g.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            for r in 0..4 {
                let mv: f64 = (0..4).map(|j| m[r][j] * g[j]).sum();
                prop_assert!((mv - ep * g[r]).abs() < 1e-9 * scale * size);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn no_go_margin_holds(eta in eta(), nu in 0.0f64..1.0, k in 0.0f64..PI) {
        let chain = ChainParams::new(40, 1.0, eta).unwrap();
        for tag in [ApproximationTag::Bose, ApproximationTag::HolsteinPrimakoff1] {
            let model = PolaritonModel::new(CavityParams::new(chain, nu, 4.0, tag).unwrap()).unwrap();
            prop_assert!(model.no_go_margin(k).unwrap() >= -1e-10);
            let (lo, hi) = model.polariton_energies(k).unwrap();
            prop_assert!(lo > 0.0 && hi > lo);
        }
    }

    #[test]
    fn hp1_solution_has_no_pairing_residual(eta in eta(), n in 2usize..80) {
        let p = ChainParams::new(n, 1.0, eta).unwrap();
        let s = hp1_coefficients_numeric(&p).unwrap();
        prop_assert!(s.residual_norm < 1e-10);
        for pair in &s.pairs {
            prop_assert!(pair.normalization_defect() < 1e-12);
        }
    }

    #[test]
    fn ed_spectrum_is_even_in_coupling(eta in eta(), n in 2usize..8) {
        let p = ChainParams::new(n, 1.0, eta).unwrap();
        let a = ed_spin_chain_with(&p, 14, false).unwrap().eigenvalues;
        let b = ed_spin_chain_with(&p.with_eta(-eta).unwrap(), 14, false).unwrap().eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-11);
        }
    }

    #[test]
    fn ed_population_is_reflection_symmetric(eta in eta(), n in 2usize..8) {
        let p = ChainParams::new(n, 1.0, eta).unwrap();
        let obs = ed_spin_chain_with(&p, 14, true).unwrap().ground_vector_observables.unwrap();
        for i in 0..n {
            prop_assert!((obs[i] - obs[n - 1 - i]).abs() < 1e-10);
        }
    }

    #[test]
    fn jordan_wigner_reproduces_ed(eta in eta(), n in 2usize..9) {
        let p = ChainParams::new(n, 1.0, eta).unwrap();
        let ed = ed_spin_chain_with(&p, 14, false).unwrap().eigenvalues;
        let bdg = bdg_spin_chain(&p).unwrap().many_body_spectrum().unwrap();
        prop_assert_eq!(ed.len(), bdg.len());
        for (x, y) in ed.iter().zip(&bdg) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }
}
