//! The five subcommands: single-shape checks, the two family tracers, the
//! integration-based verifier, and the landmark constants.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use s2rotator::dynamics::{integrate, DynamicsError, IntegrationOptions, State, Trajectory};
use s2rotator::families::{
    special_points, trace_equal_mass_isosceles, trace_two_equal_mass, FamilyError, IsoscelesBranch,
    NuBand, SpecialPoints, TwoEqualMassBranch,
};
use s2rotator::geometry::{Configuration, Masses, Shape, ARC_PAIRS};
use s2rotator::potentials::{Cotangent, HarmonicTest, PairPotential};
use s2rotator::rotator::{
    check_rotator, hemisphere_and_sign_conditions, reduced_equation_residuals, RotatorError,
    RotatorVerdict,
};

use crate::format::{csv_line, fmt_sig, Json};

/// Failure with the exit code it maps to: usage and input problems exit 2,
/// numerical breakdowns exit 3.
pub enum CliError {
    Usage(String),
    Numerical(String),
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut values = [0.0; 3];
    for (slot, part) in values.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number {part:?}: {e}"))?;
    }
    Ok(values)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    /// `cot(σ)/R`, singular at collision and antipode.
    Cotangent,
    /// `−D²`, a smooth attractive law for potential-independence checks.
    HarmonicTest,
}

impl PotentialKind {
    fn name(self) -> &'static str {
        match self {
            PotentialKind::Cotangent => "cotangent",
            PotentialKind::HarmonicTest => "harmonic-test",
        }
    }

    fn from_name(name: &str) -> Result<Self, CliError> {
        match name {
            "cotangent" => Ok(PotentialKind::Cotangent),
            "harmonic-test" => Ok(PotentialKind::HarmonicTest),
            other => Err(CliError::Usage(format!(
                "unknown interaction law {other:?}"
            ))),
        }
    }

    fn build(self, radius: f64) -> Result<Box<dyn PairPotential>, CliError> {
        match self {
            PotentialKind::Cotangent => Cotangent::new(radius)
                .map(|p| Box::new(p) as Box<dyn PairPotential>)
                .map_err(|e| CliError::Usage(e.to_string())),
            PotentialKind::HarmonicTest => HarmonicTest::new(radius)
                .map(|p| Box::new(p) as Box<dyn PairPotential>)
                .map_err(|e| CliError::Usage(e.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Decide whether one mass triple in one triangle spins rigidly.
#[derive(Args)]
pub struct CheckArgs {
    /// Masses m1,m2,m3 (positive).
    #[arg(long, value_parser = parse_triple, value_name = "M1,M2,M3")]
    masses: [f64; 3],
    /// Mutual arcs sigma12,sigma23,sigma31 in radians.
    #[arg(long, value_parser = parse_triple, value_name = "S12,S23,S31")]
    shape: [f64; 3],
    /// Interaction law between bodies.
    #[arg(long, value_enum, default_value_t = PotentialKind::Cotangent)]
    potential: PotentialKind,
    /// Sphere radius.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Relative spread tolerance for accepting a rotator.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Interpret --shape in degrees instead of radians.
    #[arg(long)]
    degrees: bool,
    /// json (default) for the full report, csv for a single summary row.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl CheckArgs {
    pub fn run(&self) -> Result<u8, CliError> {
        let arcs = if self.degrees {
            [
                self.shape[0].to_radians(),
                self.shape[1].to_radians(),
                self.shape[2].to_radians(),
            ]
        } else {
            self.shape
        };
        let masses = Masses::new(self.masses[0], self.masses[1], self.masses[2])
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let shape =
            Shape::new(arcs[0], arcs[1], arcs[2]).map_err(|e| CliError::Usage(e.to_string()))?;
        let potential = self.potential.build(self.radius)?;

        let verdict = match check_rotator(&masses, &shape, potential.as_ref(), self.tol) {
            Ok(v) => v,
            Err(RotatorError::InfeasibleShape) => {
                return Err(CliError::Usage(
                    "the arcs do not close into a spherical triangle".into(),
                ))
            }
            Err(RotatorError::RepulsivePotential) => {
                let content = match self.format {
                    OutputFormat::Json => Json::Obj(vec![
                        ("input", self.input_json(&arcs)),
                        ("is_rotator", Json::Bool(false)),
                        (
                            "reason",
                            Json::Str("repulsive interaction admits no rigid rotator".into()),
                        ),
                    ])
                    .render(),
                    OutputFormat::Csv => self.csv_report(&arcs, None),
                };
                emit(self.out.as_deref(), &content)?;
                return Ok(1);
            }
            Err(RotatorError::Potential(e)) => {
                return Err(CliError::Usage(format!(
                    "the interaction law rejected this shape: {e}"
                )))
            }
            Err(RotatorError::Inertia(e)) => {
                return Err(CliError::Numerical(format!(
                    "eigenpair translation failed: {e}"
                )))
            }
        };

        let content = match self.format {
            OutputFormat::Json => self.json_report(&arcs, &masses, potential.as_ref(), &verdict)?,
            OutputFormat::Csv => self.csv_report(&arcs, Some(&verdict)),
        };
        emit(self.out.as_deref(), &content)?;
        Ok(u8::from(!verdict.is_rotator))
    }

    fn input_json(&self, arcs: &[f64; 3]) -> Json {
        Json::Obj(vec![
            ("masses", Json::nums(self.masses)),
            ("shape", Json::nums(*arcs)),
            ("potential", Json::Str(self.potential.name().into())),
            ("radius", Json::Num(self.radius)),
            ("tolerance", Json::Num(self.tol)),
        ])
    }

    fn json_report(
        &self,
        arcs: &[f64; 3],
        masses: &Masses,
        potential: &dyn PairPotential,
        verdict: &RotatorVerdict,
    ) -> Result<String, CliError> {
        let mut doc = vec![
            ("input", self.input_json(arcs)),
            ("is_rotator", Json::Bool(verdict.is_rotator)),
            (
                "classification",
                Json::Str(verdict.classification.as_str().into()),
            ),
            ("residual", Json::Num(verdict.residual)),
        ];
        if let Some(solution) = &verdict.solution {
            let mut sol = vec![
                ("lambda", Json::Num(solution.lambda)),
                ("psi", Json::nums(solution.psi)),
                ("omega_squared", Json::Num(solution.omega_squared)),
                (
                    "scaled_omega_squared",
                    Json::Num(solution.scaled_omega_squared),
                ),
                ("omega", Json::Num(solution.omega_squared.sqrt())),
                ("gamma", solution.gamma.map_or(Json::Null, Json::Num)),
                ("pair_quantities", Json::nums(solution.quantities.q)),
            ];
            if let Some(config) = &solution.configuration {
                sol.push((
                    "cos_theta",
                    Json::nums(config.theta.iter().map(|t| t.cos())),
                ));
                sol.push((
                    "cos_phi_diff",
                    Json::nums(
                        ARC_PAIRS
                            .iter()
                            .map(|(i, j)| (config.phi[*i] - config.phi[*j]).cos()),
                    ),
                ));
            }
            doc.push(("solution", Json::Obj(sol)));
            if let Some(config) = &solution.configuration {
                doc.push((
                    "configuration",
                    Json::Obj(vec![
                        ("theta", Json::nums(config.theta)),
                        ("phi", Json::nums(config.phi)),
                        ("omega", Json::Num(config.omega)),
                        ("radius", Json::Num(config.radius)),
                    ]),
                ));
                let residuals = reduced_equation_residuals(config, masses, potential)
                    .map_err(|e| CliError::Numerical(format!("residual evaluation failed: {e}")))?;
                doc.push((
                    "reduced_residuals",
                    Json::Obj(vec![
                        ("colatitude", Json::nums(residuals.theta)),
                        ("azimuth", Json::nums(residuals.phi)),
                        ("planar_momentum", Json::Num(residuals.momentum_xy)),
                    ]),
                ));
                doc.push((
                    "hemisphere_ordered",
                    Json::Bool(hemisphere_and_sign_conditions(config)),
                ));
            }
        }
        Ok(Json::Obj(doc).render())
    }

    fn csv_report(&self, arcs: &[f64; 3], verdict: Option<&RotatorVerdict>) -> String {
        let header = [
            "m1",
            "m2",
            "m3",
            "sigma12",
            "sigma23",
            "sigma31",
            "potential",
            "radius",
            "is_rotator",
            "classification",
            "lambda",
            "scaled_omega_squared",
            "omega",
            "residual",
        ];
        let mut fields: Vec<String> = self.masses.iter().map(|m| fmt_sig(*m)).collect();
        fields.extend(arcs.iter().map(|s| fmt_sig(*s)));
        fields.push(self.potential.name().into());
        fields.push(fmt_sig(self.radius));
        match verdict {
            Some(v) => {
                fields.push(v.is_rotator.to_string());
                fields.push(v.classification.as_str().into());
                match &v.solution {
                    Some(sol) => {
                        fields.push(fmt_sig(sol.lambda));
                        fields.push(fmt_sig(sol.scaled_omega_squared));
                        fields.push(fmt_sig(sol.omega_squared.sqrt()));
                    }
                    None => fields.extend([String::new(), String::new(), String::new()]),
                }
                fields.push(fmt_sig(v.residual));
            }
            None => {
                fields.push("false".into());
                fields.push("none".into());
                fields.extend([String::new(), String::new(), String::new(), String::new()]);
            }
        }
        let mut out = csv_line(&header.map(String::from));
        out.push_str(&csv_line(&fields));
        out
    }
}

/// Trace the equal-mass isosceles family over the base arc.
#[derive(Args)]
pub struct IsoscelesCurveArgs {
    /// Number of base arcs sampled uniformly inside (0, pi).
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    /// csv (default) for plot rows, json for the structured branch.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl IsoscelesCurveArgs {
    pub fn run(&self) -> Result<u8, CliError> {
        let branch = trace_equal_mass_isosceles(self.resolution).map_err(family_error)?;
        let content = match self.format {
            OutputFormat::Csv => isosceles_csv(&branch),
            OutputFormat::Json => isosceles_json(&branch).render(),
        };
        emit(self.out.as_deref(), &content)?;
        Ok(0)
    }
}

fn isosceles_csv(branch: &IsoscelesBranch) -> String {
    let mut out = csv_line(
        &[
            "sigma12",
            "sigma",
            "scaled_omega_squared",
            "classification",
            "residual",
        ]
        .map(String::from),
    );
    for point in &branch.points {
        for root in &point.roots {
            out.push_str(&csv_line(&[
                fmt_sig(point.sigma12),
                fmt_sig(root.sigma),
                fmt_sig(root.scaled_omega_squared),
                root.classification.as_str().into(),
                fmt_sig(root.residual),
            ]));
        }
    }
    out
}

fn isosceles_json(branch: &IsoscelesBranch) -> Json {
    Json::Obj(vec![
        ("family", Json::Str("equal-mass-isosceles".into())),
        ("resolution", Json::Int(branch.resolution as i64)),
        ("special_points", special_points_json(&branch.special)),
        (
            "points",
            Json::Arr(
                branch
                    .points
                    .iter()
                    .map(|p| {
                        Json::Obj(vec![
                            ("sigma12", Json::Num(p.sigma12)),
                            (
                                "roots",
                                Json::Arr(
                                    p.roots
                                        .iter()
                                        .map(|r| {
                                            Json::Obj(vec![
                                                ("sigma", Json::Num(r.sigma)),
                                                (
                                                    "scaled_omega_squared",
                                                    Json::Num(r.scaled_omega_squared),
                                                ),
                                                (
                                                    "classification",
                                                    Json::Str(r.classification.as_str().into()),
                                                ),
                                                ("residual", Json::Num(r.residual)),
                                            ])
                                        })
                                        .collect(),
                                ),
                            ),
                        ])
                    })
                    .collect(),
            ),
        ),
    ])
}

/// Trace the two-equal-mass right-angle family over the leg arc.
#[derive(Args)]
pub struct TwoEqualMassArgs {
    /// Number of leg arcs sampled uniformly inside (pi/4, 3pi/4).
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    /// csv (default) for plot rows, json for the structured branch.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl TwoEqualMassArgs {
    pub fn run(&self) -> Result<u8, CliError> {
        let branch = trace_two_equal_mass(self.resolution).map_err(family_error)?;
        let content = match self.format {
            OutputFormat::Csv => two_equal_mass_csv(&branch),
            OutputFormat::Json => two_equal_mass_json(&branch).render(),
        };
        emit(self.out.as_deref(), &content)?;
        Ok(0)
    }
}

fn two_equal_mass_csv(branch: &TwoEqualMassBranch) -> String {
    let mut out = csv_line(
        &[
            "sigma",
            "nu",
            "scaled_omega_squared",
            "classification",
            "residual",
        ]
        .map(String::from),
    );
    for sol in &branch.points {
        out.push_str(&csv_line(&[
            fmt_sig(sol.sigma),
            fmt_sig(sol.nu),
            fmt_sig(sol.scaled_omega_squared),
            sol.classification.as_str().into(),
            fmt_sig(sol.residual),
        ]));
    }
    out
}

fn two_equal_mass_json(branch: &TwoEqualMassBranch) -> Json {
    Json::Obj(vec![
        ("family", Json::Str("two-equal-mass".into())),
        ("resolution", Json::Int(branch.resolution as i64)),
        ("sigma_nu_zero", Json::Num(branch.sigma_nu_zero)),
        ("nu_band", nu_band_json(&branch.band)),
        (
            "points",
            Json::Arr(
                branch
                    .points
                    .iter()
                    .map(|s| {
                        Json::Obj(vec![
                            ("sigma", Json::Num(s.sigma)),
                            ("nu", Json::Num(s.nu)),
                            ("scaled_omega_squared", Json::Num(s.scaled_omega_squared)),
                            (
                                "classification",
                                Json::Str(s.classification.as_str().into()),
                            ),
                            ("residual", Json::Num(s.residual)),
                        ])
                    })
                    .collect(),
            ),
        ),
    ])
}

/// Integrate a checked configuration and report how rigid it stayed.
#[derive(Args)]
pub struct VerifyArgs {
    /// JSON report written by `check`; must contain a configuration.
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Number of revolutions to integrate.
    #[arg(long, default_value_t = 1.0)]
    periods: f64,
    /// Relative step-error tolerance.
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    /// Absolute step-error tolerance.
    #[arg(long, default_value_t = 1e-12)]
    abs_tol: f64,
    /// Also write the trajectory as CSV to this file.
    #[arg(long, value_name = "PATH")]
    trajectory: Option<PathBuf>,
    /// Keep every n-th accepted step in the trajectory.
    #[arg(long, default_value_t = 1, value_name = "N")]
    record_every: usize,
    /// Write the report to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Deserialize)]
struct ReportFile {
    input: ReportInput,
    configuration: Option<ReportConfiguration>,
}

#[derive(Deserialize)]
struct ReportInput {
    masses: [f64; 3],
    potential: String,
    radius: f64,
}

#[derive(Deserialize)]
struct ReportConfiguration {
    theta: [f64; 3],
    phi: [f64; 3],
    omega: f64,
    radius: f64,
}

impl VerifyArgs {
    pub fn run(&self) -> Result<u8, CliError> {
        let text = fs::read_to_string(&self.config)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", self.config.display())))?;
        let report: ReportFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", self.config.display())))?;
        let Some(config) = report.configuration else {
            return Err(CliError::Usage(
                "the report has no configuration to integrate; run `check` on a rotator first"
                    .into(),
            ));
        };
        if config.omega == 0.0 {
            return Err(CliError::Usage(
                "the configuration does not rotate; nothing to verify".into(),
            ));
        }
        let masses = Masses::new(
            report.input.masses[0],
            report.input.masses[1],
            report.input.masses[2],
        )
        .map_err(|e| CliError::Usage(e.to_string()))?;
        let configuration =
            Configuration::new(config.theta, config.phi, config.omega, config.radius)
                .map_err(|e| CliError::Usage(e.to_string()))?;
        let potential =
            PotentialKind::from_name(&report.input.potential)?.build(report.input.radius)?;

        let period = 2.0 * std::f64::consts::PI / configuration.omega.abs();
        let span = self.periods * period;
        if !span.is_finite() || span <= 0.0 {
            return Err(CliError::Usage(format!(
                "periods must be positive, got {}",
                self.periods
            )));
        }
        let options = IntegrationOptions {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            record_every: self.record_every.max(1),
            ..IntegrationOptions::default()
        };
        let initial = State::from_configuration(&configuration);
        let trajectory = integrate(&initial, &masses, potential.as_ref(), span, &options)
            .map_err(dynamics_error)?;

        if let Some(path) = &self.trajectory {
            emit(Some(path), &trajectory_csv(&trajectory))?;
        }
        let doc = Json::Obj(vec![
            ("periods", Json::Num(self.periods)),
            ("period", Json::Num(period)),
            ("duration", Json::Num(span)),
            (
                "accepted_steps",
                Json::Int(trajectory.accepted_steps as i64),
            ),
            (
                "rejected_steps",
                Json::Int(trajectory.rejected_steps as i64),
            ),
            ("max_arc_drift", Json::Num(trajectory.max_arc_drift())),
            (
                "max_colatitude_drift",
                Json::Num(trajectory.max_colatitude_drift()),
            ),
            ("energy_rel_drift", Json::Num(trajectory.energy_rel_drift())),
            (
                "momentum_rel_drift",
                Json::Num(trajectory.momentum_rel_drift()),
            ),
        ]);
        emit(self.out.as_deref(), &doc.render())?;
        Ok(0)
    }
}

fn trajectory_csv(trajectory: &Trajectory) -> String {
    let mut out = csv_line(
        &[
            "t", "theta1", "theta2", "theta3", "phi1", "phi2", "phi3", "sigma12", "sigma23",
            "sigma31", "energy", "cx", "cy", "cz",
        ]
        .map(String::from),
    );
    for sample in &trajectory.samples {
        let mut fields = vec![fmt_sig(sample.state.t)];
        fields.extend(sample.state.theta.iter().map(|x| fmt_sig(*x)));
        fields.extend(sample.state.phi.iter().map(|x| fmt_sig(*x)));
        fields.extend(sample.arcs.iter().map(|x| fmt_sig(*x)));
        fields.push(fmt_sig(sample.energy));
        fields.push(fmt_sig(sample.momentum.cx));
        fields.push(fmt_sig(sample.momentum.cy));
        fields.push(fmt_sig(sample.momentum.cz));
        out.push_str(&csv_line(&fields));
    }
    out
}

/// Landmark arcs and the mass-ratio band of the solution families.
#[derive(Args)]
pub struct SpecialPointsArgs {
    /// json (default) for the structured constants, csv for name,value rows.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl SpecialPointsArgs {
    pub fn run(&self) -> Result<u8, CliError> {
        let special = special_points();
        let band = s2rotator::families::two_equal_mass_band();
        let sigma_zero = s2rotator::families::two_equal_mass_sigma_zero();
        let content = match self.format {
            OutputFormat::Json => {
                let mut doc = match special_points_json(&special) {
                    Json::Obj(pairs) => pairs,
                    _ => unreachable!("special points render as an object"),
                };
                doc.push(("sigma_nu_zero", Json::Num(sigma_zero)));
                doc.push(("nu_band", nu_band_json(&band)));
                Json::Obj(doc).render()
            }
            OutputFormat::Csv => {
                let mut out = csv_line(&["name", "value"].map(String::from));
                let rows: Vec<(&str, f64)> = vec![
                    ("sigma_saddle", special.sigma_saddle),
                    ("sigma_saddle_mirror", special.sigma_saddle_mirror),
                    ("sigma_branch_end", special.sigma_branch_end),
                    ("two_sigma_branch_end", special.two_sigma_branch_end),
                    ("right_angle_sigma_1", special.right_angle_sigmas[0]),
                    ("right_angle_sigma_2", special.right_angle_sigmas[1]),
                    ("right_angle_sigma_3", special.right_angle_sigmas[2]),
                    ("sigma_nu_zero", sigma_zero),
                    ("nu_band_lower", band.lower),
                    ("nu_band_upper", band.upper),
                    ("nu_band_sigma_at_lower", band.sigma_at_lower),
                    ("nu_band_sigma_at_upper", band.sigma_at_upper),
                ];
                for (name, value) in rows {
                    out.push_str(&csv_line(&[name.into(), fmt_sig(value)]));
                }
                out
            }
        };
        emit(self.out.as_deref(), &content)?;
        Ok(0)
    }
}

fn special_points_json(special: &SpecialPoints) -> Json {
    Json::Obj(vec![
        ("sigma_saddle", Json::Num(special.sigma_saddle)),
        (
            "sigma_saddle_mirror",
            Json::Num(special.sigma_saddle_mirror),
        ),
        ("sigma_branch_end", Json::Num(special.sigma_branch_end)),
        (
            "two_sigma_branch_end",
            Json::Num(special.two_sigma_branch_end),
        ),
        ("right_angle_sigmas", Json::nums(special.right_angle_sigmas)),
    ])
}

fn nu_band_json(band: &NuBand) -> Json {
    Json::Obj(vec![
        ("lower", Json::Num(band.lower)),
        ("upper", Json::Num(band.upper)),
        ("sigma_at_lower", Json::Num(band.sigma_at_lower)),
        ("sigma_at_upper", Json::Num(band.sigma_at_upper)),
    ])
}

fn family_error(e: FamilyError) -> CliError {
    match e {
        FamilyError::InvalidParameter(_) => CliError::Usage(e.to_string()),
        FamilyError::NoRoot
        | FamilyError::DegenerateDenominator(_)
        | FamilyError::NonPositiveNu { .. }
        | FamilyError::InfeasibleShape { .. }
        | FamilyError::RotatorCheckFailed { .. } => CliError::Numerical(e.to_string()),
    }
}

fn dynamics_error(e: DynamicsError) -> CliError {
    match e {
        DynamicsError::NonPositiveDuration(_) | DynamicsError::ZeroAngularRate => {
            CliError::Usage(e.to_string())
        }
        DynamicsError::PoleApproach { .. }
        | DynamicsError::CloseEncounter { .. }
        | DynamicsError::Potential(_)
        | DynamicsError::StepSizeUnderflow { .. }
        | DynamicsError::StepLimit { .. } => CliError::Numerical(e.to_string()),
    }
}
