//! Planar two-particle and three-body models assembled from the angular operator.

mod energy;
mod planar;
mod reductions;
mod threebody;

pub use energy::{
    cms_oracle, cms_oracle_check, energy_adjudication, planar_energy, radial_min_box,
    radial_oracle, threebody_energy, EnergyPair, BOX_DRIFT_TOLERANCE, CMS_TOLERANCE,
    ENERGY_TOLERANCE,
};
pub use planar::{planar_potential, planar_singular_part, PlanarForm, PlanarPoint};
pub use reductions::{
    polar_report, printed_form_report, reduction_report, ReductionKind, REDUCTION_TOLERANCE,
};
pub use threebody::{
    cms_inverse, cms_transform, threebody_potential, CmsMatrix, ThreeBodyForm, ThreeBodyPoint,
};

use crate::error::{Error, Result};
use crate::model::SINGULAR_GUARD;

/// `c / form²`, refusing forms inside the singular guard.
fn inverse_square(coefficient: f64, form: f64) -> Result<f64> {
    if coefficient == 0.0 {
        return Ok(0.0);
    }
    if form.abs() < SINGULAR_GUARD {
        return Err(Error::NearSingularLine {
            value: form,
            guard: SINGULAR_GUARD,
        });
    }
    Ok(coefficient / (form * form))
}
