//! Deciding whether a shape admits a rigid rotator, and classifying it.
//!
//! A positive eigenpair `(λ, ψ)` of the shape's `J` matrix encodes a
//! candidate configuration. It actually rotates rigidly exactly when the
//! three pair quantities
//!
//! `q_ij = ψᵢ ψⱼ / (√(mᵢ mⱼ) · U′(D²ᵢⱼ))`
//!
//! agree across the pairs, in which case the common value is `−2/ω²`. The
//! test is potential-independent in form; the interaction law enters only
//! through `U′(D²)`.

use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::geometry::{chord_squared_from_arc, Configuration, Masses, Shape, ARC_PAIRS};
use crate::inertia::{eigen_decompose, positive_candidates, translate, InertiaError, JTensor};
use crate::potentials::{PairPotential, PotentialError};

/// Default bound on the relative spread of the pair quantities.
pub const DEFAULT_ROTATOR_TOL: f64 = 1e-9;

/// Relative margin (against total mass) within which `λ = M` counts as the
/// equatorial case `cos θₖ = 0`.
const EQUATOR_GAP: f64 = 1e-9;

/// Margin for recognizing collinear shapes in the classification.
const COLLINEAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum RotatorError {
    /// The arcs do not close into a spherical triangle.
    InfeasibleShape,
    /// The law is repulsive on every pair at this shape; rigid rotators
    /// require attraction somewhere, since all bodies would otherwise have
    /// to straddle the equator pairwise, which three bodies cannot do.
    RepulsivePotential,
    /// The interaction law could not be evaluated (collision or antipodal
    /// pair).
    Potential(PotentialError),
    /// The eigenpair passed the rotator test but failed to translate into
    /// a configuration.
    Inertia(InertiaError),
}

impl fmt::Display for RotatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotatorError::InfeasibleShape => {
                write!(f, "arc angles violate the spherical triangle inequalities")
            }
            RotatorError::RepulsivePotential => {
                write!(
                    f,
                    "interaction law is repulsive on every pair at this shape"
                )
            }
            RotatorError::Potential(e) => write!(f, "{e}"),
            RotatorError::Inertia(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RotatorError {}

impl From<PotentialError> for RotatorError {
    fn from(e: PotentialError) -> Self {
        RotatorError::Potential(e)
    }
}

impl From<InertiaError> for RotatorError {
    fn from(e: InertiaError) -> Self {
        RotatorError::Inertia(e)
    }
}

/// Kind of rigid motion a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Bodies strictly inside one hemisphere, not on one great circle,
    /// rotating about the hemisphere's pole.
    ExtendedLagrangian,
    /// Bodies on the equator of the rotation axis (`λ = M`); arises for
    /// great-circle shapes whose arcs wrap the full circle. Such rings
    /// rotate rigidly at any rate; the reported rate is the limit value of
    /// the generic formula.
    EquatorialEulerian,
    /// Collinear shape that the positive-eigenvector test does not settle.
    /// Rotators of this kind spin about an axis lying in their great
    /// circle; detecting the geometry is supported, certifying the motion
    /// is out of scope.
    MeridianEulerian,
    /// Reserved for equilibria without rotation. Strictly attractive laws
    /// never produce one (`ω² = −2/q̄ > 0`), so this is never emitted for
    /// the built-in laws.
    FixedPoint,
    /// No rigid rotator of the supported kinds at this shape.
    None,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::ExtendedLagrangian => "extended-lagrangian",
            Classification::EquatorialEulerian => "equatorial-eulerian",
            Classification::MeridianEulerian => "meridian-eulerian",
            Classification::FixedPoint => "fixed-point",
            Classification::None => "none",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three pair quantities whose agreement is the rotator condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatorQuantities {
    /// `q_ij` per pair, in the order `(1,2), (2,3), (3,1)`.
    pub q: [f64; 3],
    pub mean: f64,
    /// `max |q_ij − mean| / |mean|`.
    pub spread: f64,
}

/// Computes the pair quantities from an eigenvector and the per-pair values
/// of `U′(D²)`.
pub fn rotator_quantities(masses: &Masses, psi: &[f64; 3], uprime: &[f64; 3]) -> RotatorQuantities {
    let m = masses.array();
    let mut q = [0.0; 3];
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        q[a] = psi[*i] * psi[*j] / ((m[*i] * m[*j]).sqrt() * uprime[a]);
    }
    let mean = (q[0] + q[1] + q[2]) / 3.0;
    let denom = mean.abs().max(f64::MIN_POSITIVE);
    let spread = q.iter().fold(0.0_f64, |acc, x| acc.max((x - mean).abs())) / denom;
    RotatorQuantities { q, mean, spread }
}

/// For the cotangent law the rotator condition closes in elementary terms:
/// each pair independently predicts `R³ω² = √(mᵢmⱼ) / (ψᵢ ψⱼ sin³ σᵢⱼ)`.
/// Returns the three predictions; they coincide exactly at a rotator.
/// Independent route for cross-checking `−2/q̄`.
pub fn cotangent_rate_identity(masses: &Masses, shape: &Shape, psi: &[f64; 3]) -> [f64; 3] {
    let m = masses.array();
    let arcs = shape.arcs();
    let mut rates = [0.0; 3];
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        rates[a] = (m[*i] * m[*j]).sqrt() / (psi[*i] * psi[*j] * arcs[a].sin().powi(3));
    }
    rates
}

/// An accepted rigid rotator.
#[derive(Debug, Clone, PartialEq)]
pub struct RotatorSolution {
    /// Eigenvalue of `J` behind the solution.
    pub lambda: f64,
    /// Positive unit eigenvector.
    pub psi: [f64; 3],
    /// Squared rotation rate at the law's radius.
    pub omega_squared: f64,
    /// `R³ ω²`, the radius-independent rate for laws scaling like the
    /// cotangent.
    pub scaled_omega_squared: f64,
    /// `γ = ω² / (2(M − λ))`; the constant tying `U′(D²ᵢⱼ)` to
    /// `−γ cos θᵢ cos θⱼ`. Present for extended-Lagrangian rotators only.
    pub gamma: Option<f64>,
    pub quantities: RotatorQuantities,
    /// Concrete rotating configuration, when one can be written down in
    /// the polar chart (equatorial rings only when the arcs wrap exactly).
    pub configuration: Option<Configuration>,
}

/// Outcome of the rotator test at one shape.
#[derive(Debug, Clone, PartialEq)]
pub struct RotatorVerdict {
    pub is_rotator: bool,
    pub classification: Classification,
    /// Smallest relative spread of the pair quantities over the positive
    /// eigenvector candidates; infinite when no candidate exists.
    pub residual: f64,
    pub solution: Option<RotatorSolution>,
}

/// Tests whether `shape` carries a rigid rotator of `masses` under the
/// given interaction law.
///
/// The law is probed on all three pairs first: if it is repulsive on every
/// pair the test errs out immediately, since no arrangement of three bodies
/// can satisfy the sign constraints that repulsion forces. Otherwise each
/// positive eigenvector candidate of `J` is scored by the spread of its
/// pair quantities, and the best one is accepted if the spread is at most
/// `tol`.
pub fn check_rotator(
    masses: &Masses,
    shape: &Shape,
    potential: &dyn PairPotential,
    tol: f64,
) -> Result<RotatorVerdict, RotatorError> {
    if !shape.triangle_feasible() {
        return Err(RotatorError::InfeasibleShape);
    }
    let radius = potential.radius();
    let arcs = shape.arcs();
    let mut uprime = [0.0; 3];
    for a in 0..3 {
        uprime[a] = potential.derivative(chord_squared_from_arc(arcs[a], radius))?;
    }
    if uprime.iter().all(|&u| u > 0.0) {
        return Err(RotatorError::RepulsivePotential);
    }

    let spectrum = eigen_decompose(&JTensor::new(masses, shape));
    let candidates = positive_candidates(&spectrum);
    let best = candidates
        .iter()
        .map(|c| (c, rotator_quantities(masses, &c.psi, &uprime)))
        .min_by(|a, b| a.1.spread.partial_cmp(&b.1.spread).expect("finite spread"));

    let fallback = |residual: f64| RotatorVerdict {
        is_rotator: false,
        classification: if shape.is_collinear(COLLINEAR_TOL) {
            Classification::MeridianEulerian
        } else {
            Classification::None
        },
        residual,
        solution: None,
    };

    let Some((candidate, quantities)) = best else {
        return Ok(fallback(f64::INFINITY));
    };
    if quantities.spread > tol {
        return Ok(fallback(quantities.spread));
    }
    if quantities.mean >= 0.0 {
        return Err(RotatorError::RepulsivePotential);
    }

    let omega_squared = -2.0 / quantities.mean;
    let scaled = radius.powi(3) * omega_squared;
    let omega = omega_squared.sqrt();
    let total = masses.total();

    if total - candidate.lambda <= EQUATOR_GAP * total {
        let configuration = equatorial_configuration(shape, omega, radius);
        return Ok(RotatorVerdict {
            is_rotator: true,
            classification: Classification::EquatorialEulerian,
            residual: quantities.spread,
            solution: Some(RotatorSolution {
                lambda: candidate.lambda,
                psi: candidate.psi,
                omega_squared,
                scaled_omega_squared: scaled,
                gamma: None,
                quantities,
                configuration,
            }),
        });
    }

    let translated = translate(masses, shape, candidate.lambda, &candidate.psi)?;
    let configuration = translated
        .configuration(omega, radius)
        .map_err(|e| RotatorError::Inertia(InertiaError::Geometry(e)))?;
    let gamma = omega_squared / (2.0 * (total - candidate.lambda));
    Ok(RotatorVerdict {
        is_rotator: true,
        classification: Classification::ExtendedLagrangian,
        residual: quantities.spread,
        solution: Some(RotatorSolution {
            lambda: candidate.lambda,
            psi: candidate.psi,
            omega_squared,
            scaled_omega_squared: scaled,
            gamma: Some(gamma),
            quantities,
            configuration: Some(configuration),
        }),
    })
}

/// Ring on the equator for a shape whose arcs wrap a full great circle.
fn equatorial_configuration(shape: &Shape, omega: f64, radius: f64) -> Option<Configuration> {
    let [s12, _s23, s31] = shape.arcs();
    let span: f64 = shape.arcs().iter().sum();
    if (span - core::f64::consts::TAU).abs() > 1e-6 {
        return None;
    }
    let half_pi = core::f64::consts::FRAC_PI_2;
    Configuration::new(
        [half_pi; 3],
        [0.0, core::f64::consts::TAU - s12, s31],
        omega,
        radius,
    )
    .ok()
}

/// Residuals of the rotating-frame balance equations at a configuration.
/// At a rigid rotator all entries vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedResiduals {
    /// Colatitude balance per body:
    /// `sinθₖcosθₖ ω² + 2 Σᵢ mᵢ U′(D²ₖᵢ)(sinθₖcosθᵢ − cosθₖsinθᵢ cos(φₖ−φᵢ))`.
    pub theta: [f64; 3],
    /// Azimuth balance per body:
    /// `2 Σᵢ mᵢ U′(D²ₖᵢ) sinθₖ sinθᵢ sin(φₖ−φᵢ)`.
    pub phi: [f64; 3],
    /// Norm of the horizontal mass moment
    /// `Σ mₖ sinθₖcosθₖ (cosφₖ, sinφₖ)`; zero exactly when the rotation
    /// axis is a principal axis of the configuration.
    pub momentum_xy: f64,
}

/// Evaluates the rotating-frame balance equations directly on a
/// configuration, independent of the eigenvector machinery.
pub fn reduced_equation_residuals(
    config: &Configuration,
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<ReducedResiduals, RotatorError> {
    let m = masses.array();
    let radius = potential.radius();
    let omega2 = config.omega * config.omega;
    let mut theta_res = [0.0; 3];
    let mut phi_res = [0.0; 3];
    for k in 0..3 {
        let (st_k, ct_k) = (config.theta[k].sin(), config.theta[k].cos());
        let mut t_sum = 0.0;
        let mut p_sum = 0.0;
        for i in 0..3 {
            if i == k {
                continue;
            }
            let (st_i, ct_i) = (config.theta[i].sin(), config.theta[i].cos());
            let arc = crate::geometry::arc_angle(
                config.theta[k],
                config.phi[k],
                config.theta[i],
                config.phi[i],
            );
            let up = potential.derivative(chord_squared_from_arc(arc, radius))?;
            let dphi = config.phi[k] - config.phi[i];
            t_sum += m[i] * up * (st_k * ct_i - ct_k * st_i * dphi.cos());
            p_sum += m[i] * up * st_k * st_i * dphi.sin();
        }
        theta_res[k] = st_k * ct_k * omega2 + 2.0 * t_sum;
        phi_res[k] = 2.0 * p_sum;
    }
    let mut x = 0.0;
    let mut y = 0.0;
    for k in 0..3 {
        let w = m[k] * config.theta[k].sin() * config.theta[k].cos();
        x += w * config.phi[k].cos();
        y += w * config.phi[k].sin();
    }
    Ok(ReducedResiduals {
        theta: theta_res,
        phi: phi_res,
        momentum_xy: (x * x + y * y).sqrt(),
    })
}

/// Whether a configuration satisfies the canonical-frame conventions of
/// the translation: all bodies strictly north of the equator and azimuths
/// ordered clockwise from above.
pub fn hemisphere_and_sign_conditions(config: &Configuration) -> bool {
    let north = config.theta.iter().all(|&t| t.cos() > 0.0);
    let order = ARC_PAIRS
        .iter()
        .all(|(i, j)| (config.phi[*i] - config.phi[*j]).sin() > 0.0);
    north && order
}
