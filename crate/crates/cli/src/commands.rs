//! One function per subcommand: compute, then lay the results out as a table.

use std::collections::BTreeMap;

use angspec_core::angular::{
    angular_potential, exact_b, exact_eigenfunction, fd_spectrum_extrapolated, spectrum_crosscheck,
    AngularProblem, PotentialForm,
};
use angspec_core::composite::{
    cms_oracle_check, energy_adjudication, planar_energy, polar_report, printed_form_report,
    radial_min_box, radial_oracle, reduction_report, threebody_energy, ReductionKind,
    ENERGY_TOLERANCE,
};
use angspec_core::identities::{identity_report, identity_tolerance, IdentityKind};
use angspec_core::model::domain_cell;
use angspec_core::report::{relative_deviation, DiscrepancyReport};
use angspec_core::{Error, ModelParams};
use serde_json::Value;

use crate::args::{
    AngularArgs, IdentitiesArgs, ModelArgs, OracleArgs, PotentialArgs, ReductionsArgs,
    Spectrum2dArgs, Spectrum3bArgs, WavefunctionArgs,
};
use crate::output::{Cell, ReportSummary, Table};
use crate::CliError;

pub const IDENTITY_COLUMNS: &[&str] = &[
    "kind",
    "n_order",
    "samples",
    "min_singularity_distance",
    "max_relative_residual",
    "worst_point",
];
pub const ANGULAR_COLUMNS: &[&str] = &["m", "b_exact", "b_fd", "rel_err"];
pub const WAVEFUNCTION_COLUMNS: &[&str] = &["phi", "theta", "psi"];
pub const POTENTIAL_COLUMNS: &[&str] = &["phi", "v_direct", "v_reduced"];
pub const SPECTRUM2D_COLUMNS: &[&str] = &[
    "n",
    "m",
    "b",
    "e_printed_form",
    "e_oracle_form",
    "e_radial_fd",
];
pub const SPECTRUM3B_COLUMNS: &[&str] = &["n", "m", "t", "b", "e_printed_form", "e_oracle_form"];
pub const REPORT_COLUMNS: &[&str] = &[
    "subject",
    "label",
    "claimed",
    "observed",
    "relative_deviation",
    "within_tolerance",
];

type Params = BTreeMap<&'static str, Value>;

/// Result of one subcommand before serialization.
pub struct Outcome {
    pub params: Params,
    pub reports: Vec<ReportSummary>,
    pub payload: Table,
    /// Some checked quantity missed its tolerance.
    pub breach: bool,
}

fn model(args: &ModelArgs, params: &mut Params) -> Result<ModelParams, CliError> {
    params.insert("N", args.n.into());
    params.insert("g1", args.g1.into());
    params.insert("g2", args.g2.into());
    params.insert("omega", args.omega.into());
    Ok(ModelParams::from_values(
        args.n, args.g1, args.g2, args.omega,
    )?)
}

/// `count` equally spaced interior points of the fundamental cell.
fn cell_points(params: &ModelParams, count: usize) -> Result<Vec<f64>, CliError> {
    if count == 0 {
        return Err(Error::InvalidParameter("points must be >= 1".into()).into());
    }
    let cell = domain_cell(params);
    let step = cell.length() / (count + 1) as f64;
    Ok((1..=count).map(|i| cell.phi_lo + i as f64 * step).collect())
}

fn report_rows(table: &mut Table, report: &DiscrepancyReport) {
    for e in &report.entries {
        table.push(vec![
            report.subject.as_str().into(),
            e.label.as_str().into(),
            e.claimed.into(),
            e.observed.into(),
            e.relative_deviation.into(),
            e.within_tolerance.into(),
        ]);
    }
}

pub fn identities(args: &IdentitiesArgs) -> Result<Outcome, CliError> {
    let kinds: Vec<IdentityKind> = if args.kind == "all" {
        IdentityKind::ALL.to_vec()
    } else {
        vec![args.kind.parse()?]
    };
    let mut params = Params::new();
    params.insert("kind", args.kind.as_str().into());
    params.insert("n_max", args.n_max.into());
    params.insert("samples", args.samples.into());
    params.insert("min_dist", args.min_dist.into());
    params.insert("seed", args.seed.into());
    let mut payload = Table::new(IDENTITY_COLUMNS);
    let mut breach = false;
    for kind in kinds {
        for r in identity_report(kind, args.n_max, args.samples, args.min_dist, args.seed)? {
            breach |= !(r.max_relative_residual <= identity_tolerance(kind));
            payload.push(vec![
                kind.as_str().into(),
                r.n_order.into(),
                r.samples.into(),
                r.min_singularity_distance.into(),
                r.max_relative_residual.into(),
                r.worst_point.into(),
            ]);
        }
    }
    Ok(Outcome {
        params,
        reports: Vec::new(),
        payload,
        breach,
    })
}

pub fn angular(args: &AngularArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("m_max", args.m_max.into());
    params.insert("method", args.method.as_str().into());
    if args.method.fd() {
        params.insert("grid", args.grid.into());
    }
    let mut payload = Table::new(ANGULAR_COLUMNS);
    let mut reports = Vec::new();
    let mut breach = false;
    if args.method.exact() && args.method.fd() {
        let report = spectrum_crosscheck(&p, args.m_max, args.grid)?;
        for (m, e) in report.entries.iter().enumerate() {
            payload.push(vec![
                m.into(),
                e.claimed.sqrt().into(),
                e.observed.sqrt().into(),
                e.relative_deviation.into(),
            ]);
        }
        for level in &report.skipped {
            payload.push(vec![
                Cell::Empty,
                Cell::Empty,
                level.sqrt().into(),
                Cell::Empty,
            ]);
        }
        breach = !report.all_within_tolerance();
        reports.push(ReportSummary::from(&report));
    } else if args.method.fd() {
        let count = args.m_max as usize + 1;
        let fd = fd_spectrum_extrapolated(&AngularProblem::new(p), args.grid, count)?;
        for (m, v) in fd.values.iter().enumerate() {
            payload.push(vec![m.into(), Cell::Empty, v.sqrt().into(), Cell::Empty]);
        }
    } else {
        for m in 0..=args.m_max {
            payload.push(vec![
                m.into(),
                exact_b(&p, m).into(),
                Cell::Empty,
                Cell::Empty,
            ]);
        }
    }
    Ok(Outcome {
        params,
        reports,
        payload,
        breach,
    })
}

pub fn wavefunction(args: &WavefunctionArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("m", args.m.into());
    params.insert("points", args.points.into());
    let problem = AngularProblem::new(p);
    let mut payload = Table::new(WAVEFUNCTION_COLUMNS);
    for phi in cell_points(&p, args.points)? {
        let psi = exact_eigenfunction(&problem, args.m, phi)?;
        payload.push(vec![phi.into(), problem.cell.theta(phi).into(), psi.into()]);
    }
    Ok(Outcome {
        params,
        reports: Vec::new(),
        payload,
        breach: false,
    })
}

pub fn potential(args: &PotentialArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("points", args.points.into());
    let mut payload = Table::new(POTENTIAL_COLUMNS);
    for phi in cell_points(&p, args.points)? {
        let direct = angular_potential(&p, phi, PotentialForm::DirectSum)?;
        let reduced = angular_potential(&p, phi, PotentialForm::Reduced)?;
        payload.push(vec![phi.into(), direct.into(), reduced.into()]);
    }
    Ok(Outcome {
        params,
        reports: Vec::new(),
        payload,
        breach: false,
    })
}

pub fn spectrum2d(args: &Spectrum2dArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("n_max", args.n_max.into());
    params.insert("m_max", args.m_max.into());
    params.insert("method", args.method.as_str().into());
    if args.method.fd() {
        params.insert("grid", args.grid.into());
    }
    let count = args.n_max as usize + 1;
    let mut payload = Table::new(SPECTRUM2D_COLUMNS);
    let mut breach = false;
    for m in 0..=args.m_max {
        let b = exact_b(&p, m);
        let radial = if args.method.fd() {
            Some(radial_oracle(
                p.omega(),
                b,
                count,
                args.grid,
                radial_min_box(p.omega(), b, count),
            )?)
        } else {
            None
        };
        for n in 0..=args.n_max {
            let e = planar_energy(&p, n, m);
            let fd = radial.as_ref().map(|levels| levels[n as usize]);
            if let Some(fd) = fd {
                breach |= !(relative_deviation(e.oracle_form, fd) <= ENERGY_TOLERANCE);
            }
            let (lit, orc) = if args.method.exact() {
                (Some(e.printed_form), Some(e.oracle_form))
            } else {
                (None, None)
            };
            payload.push(vec![
                n.into(),
                m.into(),
                b.into(),
                lit.into(),
                orc.into(),
                fd.into(),
            ]);
        }
    }
    Ok(Outcome {
        params,
        reports: Vec::new(),
        payload,
        breach,
    })
}

pub fn spectrum3b(args: &Spectrum3bArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("n_max", args.n_max.into());
    params.insert("m_max", args.m_max.into());
    params.insert("t_max", args.t_max.into());
    let mut payload = Table::new(SPECTRUM3B_COLUMNS);
    for n in 0..=args.n_max {
        for m in 0..=args.m_max {
            for t in 0..=args.t_max {
                let e = threebody_energy(&p, n, m, t);
                payload.push(vec![
                    n.into(),
                    m.into(),
                    t.into(),
                    exact_b(&p, m).into(),
                    e.printed_form.into(),
                    e.oracle_form.into(),
                ]);
            }
        }
    }
    Ok(Outcome {
        params,
        reports: Vec::new(),
        payload,
        breach: false,
    })
}

pub fn reductions(args: &ReductionsArgs) -> Result<Outcome, CliError> {
    let kind: ReductionKind = args.check.parse()?;
    let mut params = Params::new();
    params.insert("check", kind.as_str().into());
    params.insert("samples", args.samples.into());
    params.insert("seed", args.seed.into());
    if args.as_printed {
        params.insert("as_printed", true.into());
    }
    let report = match (kind, args.n) {
        (ReductionKind::PolarEquiv, Some(n)) => {
            params.insert("N", n.into());
            polar_report(n, args.samples, args.seed)?
        }
        (_, Some(_)) => return Err(CliError::Usage("--N applies only to --check polar".into())),
        (_, None) if args.as_printed => printed_form_report(kind, args.samples, args.seed)?,
        (_, None) => reduction_report(kind, args.samples, args.seed)?,
    };
    let mut payload = Table::new(REPORT_COLUMNS);
    report_rows(&mut payload, &report);
    Ok(Outcome {
        params,
        reports: vec![ReportSummary::from(&report)],
        breach: !report.all_within_tolerance(),
        payload,
    })
}

pub fn oracle(args: &OracleArgs) -> Result<Outcome, CliError> {
    let mut params = Params::new();
    let p = model(&args.model, &mut params)?;
    params.insert("n_max", args.n_max.into());
    params.insert("m_max", args.m_max.into());
    params.insert("t_max", args.t_max.into());
    params.insert("grid", args.grid.into());
    let energies = energy_adjudication(&p, args.n_max, args.m_max, args.grid)?;
    let cms = cms_oracle_check(p.omega(), args.t_max, args.grid)?;
    let mut payload = Table::new(REPORT_COLUMNS);
    report_rows(&mut payload, &energies);
    report_rows(&mut payload, &cms);
    let breach = !(energies.all_within_tolerance() && cms.all_within_tolerance());
    Ok(Outcome {
        params,
        reports: vec![(&energies).into(), (&cms).into()],
        payload,
        breach,
    })
}
