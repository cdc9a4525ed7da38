use std::f64::consts::TAU;

use angspec_core::angular::{
    angular_potential, exact_b, exact_eigenfunction, fd_spectrum, nearest_singularity,
    AngularProblem, PotentialForm,
};
use angspec_core::model::domain_cell;
use angspec_core::{ModelParams, NClass};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn model() -> impl Strategy<Value = ModelParams> {
    (1u32..=16, 1.0f64..4.0, 1.0f64..4.0)
        .prop_map(|(n, g1, g2)| ModelParams::from_values(n, g1, g2, 1.0).unwrap())
}

#[test]
fn direct_and_reduced_forms_agree_on_ten_thousand_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 10_000 {
        let n = rng.gen_range(1..=16);
        let p = ModelParams::from_values(n, rng.gen_range(1.0..4.0), rng.gen_range(1.0..4.0), 1.0)
            .unwrap();
        let phi = rng.gen_range(0.0..TAU);
        if nearest_singularity(&p, phi).map_or(false, |(d, _)| d < 1e-2) {
            continue;
        }
        let direct = angular_potential(&p, phi, PotentialForm::DirectSum).unwrap();
        let reduced = angular_potential(&p, phi, PotentialForm::Reduced).unwrap();
        assert!(
            ((direct - reduced) / reduced).abs() <= 1e-10,
            "N={n} phi={phi}: {direct} vs {reduced}"
        );
        checked += 1;
    }
}

proptest! {
    #[test]
    fn ladder_spacing_by_class(p in model(), m in 0u32..20) {
        let step = exact_b(&p, m + 1) - exact_b(&p, m);
        let expected = match p.n_class() {
            NClass::Odd => 2.0 * p.n(),
            _ => p.n(),
        };
        prop_assert!((step - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn ground_state_has_no_node(p in model(), t in 0.01f64..0.99) {
        let problem = AngularProblem::new(p);
        let cell = domain_cell(&p);
        let psi = exact_eigenfunction(&problem, 0, cell.phi_lo + t * cell.length()).unwrap();
        prop_assert!(psi > 0.0);
    }

    #[test]
    fn couplings_swap_is_a_reflection_for_odd_n(n in (0u32..8).prop_map(|k| 2 * k + 1), g1 in 1.0f64..4.0, g2 in 1.0f64..4.0) {
        // phi -> pi/(2N) - phi exchanges the sine and cosine barriers of the reduced potential
        let a = ModelParams::from_values(n, g1, g2, 1.0).unwrap();
        let b = ModelParams::from_values(n, g2, g1, 1.0).unwrap();
        for m in 0..4 {
            prop_assert!((exact_b(&a, m) - exact_b(&b, m)).abs() <= 1e-12 * exact_b(&a, m));
        }
        let phi = 0.3 * std::f64::consts::PI / (2.0 * f64::from(n));
        let mirrored = std::f64::consts::PI / (2.0 * f64::from(n)) - phi;
        let va = angular_potential(&a, phi, PotentialForm::Reduced).unwrap();
        let vb = angular_potential(&b, mirrored, PotentialForm::Reduced).unwrap();
        prop_assert!(((va - vb) / va).abs() <= 1e-12);
    }
}

#[test]
fn fd_error_falls_by_at_least_three_and_a_half_per_halving() {
    for (n, g1, g2) in [
        (1, 2.0, 3.0),
        (2, 1.5, 2.5),
        (3, 2.0, 2.0),
        (4, 2.5, 1.5),
        (5, 1.5, 1.5),
        (8, 2.0, 2.5),
    ] {
        let p = ModelParams::from_values(n, g1, g2, 1.0).unwrap();
        let problem = AngularProblem::new(p);
        let exact = exact_b(&p, 0).powi(2);
        let err = |grid| (fd_spectrum(&problem, grid, 1).unwrap().values[0] - exact).abs();
        let ratio = err(500) / err(1000);
        assert!(ratio >= 3.5, "N={n} g=({g1},{g2}): ratio {ratio}");
    }
}
