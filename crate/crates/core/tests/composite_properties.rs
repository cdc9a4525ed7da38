use std::f64::consts::{PI, TAU};

use angspec_core::composite::{
    cms_inverse, cms_transform, planar_energy, planar_potential, threebody_energy,
    threebody_potential, CmsMatrix, PlanarForm, PlanarPoint, ThreeBodyForm, ThreeBodyPoint,
};
use angspec_core::ModelParams;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn cms_round_trip_on_a_hundred_thousand_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100_000 {
        let x = ThreeBodyPoint::new(
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
        );
        let (y1, y2, y) = cms_transform(x);
        let back = cms_inverse(y1, y2, y);
        for (a, b) in x.as_array().iter().zip(back.as_array()) {
            assert!((a - b).abs() <= 1e-13, "{x:?} -> {back:?}");
        }
        let norm = y1 * y1 + y2 * y2 + y * y;
        assert!((norm - x.norm_sq()).abs() <= 1e-12 * x.norm_sq().max(1.0));
    }
}

#[test]
fn standard_matrix_is_orthonormal() {
    assert!(CmsMatrix::standard().orthonormality_defect() <= 1e-15);
}

/// Three-body point whose Jacobi projection sits at least `clearance` rad from the order-`n` lines.
fn clear_point(rng: &mut ChaCha8Rng, n: u32, clearance: f64) -> ThreeBodyPoint {
    let period = PI / (2.0 * f64::from(n));
    loop {
        let phi = rng.gen_range(0.0..TAU);
        let off = (phi / period).round() * period;
        if (phi - off).abs() > clearance {
            let r = rng.gen_range(0.5..3.0);
            return cms_inverse(r * phi.cos(), r * phi.sin(), rng.gen_range(-2.0..2.0));
        }
    }
}

proptest! {
    #[test]
    fn calogero_wolfes_potential_is_permutation_symmetric(g1 in 1.0f64..4.0, g2 in 1.0f64..4.0, seed in 0u64..1000) {
        let p = ModelParams::from_values(3, g1, g2, 1.3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = clear_point(&mut rng, 3, 1e-2);
        let v = threebody_potential(&p, x, ThreeBodyForm::Pullback).unwrap();
        let [a, b, c] = x.as_array();
        for perm in [[b, a, c], [a, c, b], [c, b, a], [b, c, a], [c, a, b]] {
            let w = threebody_potential(&p, ThreeBodyPoint::new(perm[0], perm[1], perm[2]), ThreeBodyForm::Pullback).unwrap();
            prop_assert!(((v - w) / v).abs() <= 1e-12);
        }
    }

    #[test]
    fn singular_part_is_translation_invariant(n in 1u32..=12, g1 in 1.0f64..4.0, g2 in 1.0f64..4.0, shift in -5.0f64..5.0, seed in 0u64..1000) {
        let p = ModelParams::from_values(n, g1, g2, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = clear_point(&mut rng, n, 1e-2);
        let harmonic = |q: ThreeBodyPoint| 0.5 * q.norm_sq();
        let a = threebody_potential(&p, x, ThreeBodyForm::Printed).unwrap() - harmonic(x);
        let moved = x.translated(shift);
        let b = threebody_potential(&p, moved, ThreeBodyForm::Printed).unwrap() - harmonic(moved);
        prop_assert!(((a - b) / a).abs() <= 1e-10);
    }

    #[test]
    fn planar_potential_has_dihedral_symmetry(n in 1u32..=12, g1 in 1.0f64..4.0, g2 in 1.0f64..4.0, r in 0.5f64..3.0, t in 0.05f64..0.95) {
        // rotations by 2 pi/N permute both line families
        let p = ModelParams::from_values(n, g1, g2, 1.0).unwrap();
        let phi = t * PI / f64::from(n);
        let v = planar_potential(&p, PlanarPoint::from_polar(r, phi), PlanarForm::General).unwrap();
        let w = planar_potential(&p, PlanarPoint::from_polar(r, phi + TAU / f64::from(n)), PlanarForm::General).unwrap();
        prop_assert!(((v - w) / v).abs() <= 1e-11);
    }

    #[test]
    fn energies_scale_with_omega(n in 1u32..=12, g1 in 1.0f64..4.0, g2 in 1.0f64..4.0, w in 0.1f64..5.0, k in 0u32..4, m in 0u32..4, t in 0u32..4) {
        let p = ModelParams::from_values(n, g1, g2, 1.0).unwrap();
        let q = p.with_omega(w).unwrap();
        let e1 = planar_energy(&p, k, m);
        let ew = planar_energy(&q, k, m);
        prop_assert!((ew.oracle_form - w * e1.oracle_form).abs() <= 1e-12 * ew.oracle_form);
        prop_assert!((ew.printed_form - w * e1.printed_form).abs() <= 1e-12 * ew.printed_form);
        let three = threebody_energy(&q, k, m, t);
        let cms = std::f64::consts::SQRT_2 * w * (f64::from(t) + 0.5);
        prop_assert!((three.oracle_form - ew.oracle_form - cms).abs() <= 1e-12 * three.oracle_form);
    }
}
