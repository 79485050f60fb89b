//! Direct integration of the three-body equations of motion on the sphere.
//!
//! This module is the independent check on everything the eigenproblem
//! route produces: a claimed rigid rotator, integrated from rest in the
//! rotating sense (colatitudes fixed, azimuths advancing together), must
//! keep its mutual arcs constant to integration accuracy over several
//! revolutions. The equations come from the Lagrangian
//! `L = (R²/2) Σ mₖ (θ̇ₖ² + sin²θₖ φ̇ₖ²) + Σ_{i<j} mᵢmⱼ U(D²ᵢⱼ)`
//! in spherical angles, with `U` the pair law and `D²` the squared chord:
//!
//! * `θ̈ₖ = sin θₖ cos θₖ φ̇ₖ² + 2 Σ_{i≠k} mᵢ U′(D²ₖᵢ) (sin θₖ cos θᵢ − cos θₖ sin θᵢ cos(φₖ−φᵢ))`
//! * `φ̈ₖ = −2 cot θₖ θ̇ₖ φ̇ₖ + (2/sin²θₖ) Σ_{i≠k} mᵢ U′(D²ₖᵢ) sin θₖ sin θᵢ sin(φₖ−φᵢ)`
//!
//! The integrator is an adaptive embedded Runge-Kutta 5(4) pair with
//! first-same-as-last reuse, controlled by mixed absolute and relative
//! tolerances. Energy `E = K − Σ mᵢmⱼ U` and the angular momentum vector
//! are conserved by the flow and serve as accuracy monitors.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::geometry::{arc_angle, Configuration, Masses, ARC_PAIRS};
use crate::potentials::{PairPotential, PotentialError};

/// A colatitude this close to a pole (by `sin θ`) stops the integration;
/// the azimuth coordinate degenerates there.
pub const POLE_GUARD: f64 = 1e-8;

/// A mutual arc below this stops the integration as a close encounter.
pub const ENCOUNTER_GUARD: f64 = 1e-6;

const MIN_STEP: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub enum DynamicsError {
    /// A body ran into the coordinate singularity at a pole.
    PoleApproach {
        t: f64,
        body: usize,
    },
    /// Two bodies closed to within [`ENCOUNTER_GUARD`] of collision.
    CloseEncounter {
        t: f64,
        pair: (usize, usize),
    },
    /// The pair law rejected a separation (collision or antipode).
    Potential(PotentialError),
    /// Error control drove the step below `1e-14` without acceptance.
    StepSizeUnderflow {
        t: f64,
    },
    /// The step budget ran out before reaching the end time.
    StepLimit {
        t: f64,
    },
    NonPositiveDuration(f64),
    /// A rigidity check needs a nonzero rotation rate to define a period.
    ZeroAngularRate,
}

impl fmt::Display for DynamicsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynamicsError::PoleApproach { t, body } => {
                write!(f, "body {} reached a coordinate pole at t = {t}", body + 1)
            }
            DynamicsError::CloseEncounter { t, pair } => write!(
                f,
                "bodies {} and {} collided at t = {t}",
                pair.0 + 1,
                pair.1 + 1
            ),
            DynamicsError::Potential(e) => write!(f, "pair law failed: {e}"),
            DynamicsError::StepSizeUnderflow { t } => {
                write!(f, "step size underflow at t = {t}")
            }
            DynamicsError::StepLimit { t } => write!(f, "step budget exhausted at t = {t}"),
            DynamicsError::NonPositiveDuration(d) => {
                write!(f, "integration span {d} is not positive")
            }
            DynamicsError::ZeroAngularRate => {
                write!(f, "rotation rate is zero, no period to integrate over")
            }
        }
    }
}

impl core::error::Error for DynamicsError {}

impl From<PotentialError> for DynamicsError {
    fn from(e: PotentialError) -> Self {
        DynamicsError::Potential(e)
    }
}

/// Instantaneous phase-space point in spherical angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub t: f64,
    pub theta: [f64; 3],
    pub phi: [f64; 3],
    pub theta_dot: [f64; 3],
    pub phi_dot: [f64; 3],
}

impl State {
    /// The phase-space point of a configuration rotating rigidly about the
    /// vertical axis: colatitudes at rest, all azimuths advancing at `ω`.
    pub fn from_configuration(config: &Configuration) -> State {
        State {
            t: 0.0,
            theta: config.theta,
            phi: config.phi,
            theta_dot: [0.0; 3],
            phi_dot: [config.omega; 3],
        }
    }

    /// Mutual arcs `[σ12, σ23, σ31]` at this instant.
    pub fn arcs(&self) -> [f64; 3] {
        let mut s = [0.0; 3];
        for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
            s[a] = arc_angle(self.theta[*i], self.phi[*i], self.theta[*j], self.phi[*j]);
        }
        s
    }
}

/// Total angular momentum vector of the system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularMomentum {
    pub cx: f64,
    pub cy: f64,
    pub cz: f64,
}

impl AngularMomentum {
    pub fn norm(&self) -> f64 {
        (self.cx * self.cx + self.cy * self.cy + self.cz * self.cz).sqrt()
    }
}

/// Angular momentum `Σ mₖ xₖ × ẋₖ` evaluated in spherical angles.
pub fn angular_momentum(state: &State, masses: &Masses, radius: f64) -> AngularMomentum {
    let m = masses.array();
    let r2 = radius * radius;
    let (mut cx, mut cy, mut cz) = (0.0, 0.0, 0.0);
    for k in 0..3 {
        let (st, ct) = (state.theta[k].sin(), state.theta[k].cos());
        let (sp, cp) = (state.phi[k].sin(), state.phi[k].cos());
        let (td, pd) = (state.theta_dot[k], state.phi_dot[k]);
        cx += m[k] * (-td * sp - pd * st * ct * cp);
        cy += m[k] * (td * cp - pd * st * ct * sp);
        cz += m[k] * pd * st * st;
    }
    AngularMomentum {
        cx: r2 * cx,
        cy: r2 * cy,
        cz: r2 * cz,
    }
}

/// Kinetic energy `(R²/2) Σ mₖ (θ̇ₖ² + sin²θₖ φ̇ₖ²)`.
pub fn kinetic_energy(state: &State, masses: &Masses, radius: f64) -> f64 {
    let m = masses.array();
    let mut k = 0.0;
    for b in 0..3 {
        let st = state.theta[b].sin();
        k += m[b]
            * (state.theta_dot[b] * state.theta_dot[b]
                + st * st * state.phi_dot[b] * state.phi_dot[b]);
    }
    0.5 * radius * radius * k
}

/// Pairwise interaction sum `Σ_{i<j} mᵢ mⱼ U(D²ᵢⱼ)`.
pub fn interaction_sum(
    state: &State,
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<f64, DynamicsError> {
    let m = masses.array();
    let radius = potential.radius();
    let arcs = state.arcs();
    let mut w = 0.0;
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        let half = 0.5 * arcs[a];
        let d2 = 4.0 * radius * radius * half.sin() * half.sin();
        w += m[*i] * m[*j] * potential.evaluate(d2)?;
    }
    Ok(w)
}

/// Conserved energy `K − Σ mᵢmⱼ U` of the flow.
pub fn total_energy(
    state: &State,
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<f64, DynamicsError> {
    Ok(kinetic_energy(state, masses, potential.radius())
        - interaction_sum(state, masses, potential)?)
}

/// Angular accelerations `(θ̈, φ̈)` at a state, with pole and encounter
/// guards.
pub fn accelerations(
    state: &State,
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<([f64; 3], [f64; 3]), DynamicsError> {
    let m = masses.array();
    let radius = potential.radius();
    let mut st = [0.0; 3];
    let mut ct = [0.0; 3];
    for k in 0..3 {
        st[k] = state.theta[k].sin();
        ct[k] = state.theta[k].cos();
        if st[k] < POLE_GUARD {
            return Err(DynamicsError::PoleApproach {
                t: state.t,
                body: k,
            });
        }
    }
    let mut uprime = [0.0; 3];
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        let cos_arc = ct[*i] * ct[*j] + st[*i] * st[*j] * (state.phi[*i] - state.phi[*j]).cos();
        let arc = cos_arc.clamp(-1.0, 1.0).acos();
        if arc < ENCOUNTER_GUARD {
            return Err(DynamicsError::CloseEncounter {
                t: state.t,
                pair: (*i, *j),
            });
        }
        let half = 0.5 * arc;
        let d2 = 4.0 * radius * radius * half.sin() * half.sin();
        uprime[a] = potential.derivative(d2)?;
    }
    let mut theta_ddot = [0.0; 3];
    let mut phi_ddot = [0.0; 3];
    for k in 0..3 {
        let mut f_theta = 0.0;
        let mut f_phi = 0.0;
        for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
            let other = if *i == k {
                *j
            } else if *j == k {
                *i
            } else {
                continue;
            };
            let dphi = (state.phi[k] - state.phi[other]).cos();
            let sphi = (state.phi[k] - state.phi[other]).sin();
            f_theta += m[other] * uprime[a] * (st[k] * ct[other] - ct[k] * st[other] * dphi);
            f_phi += m[other] * uprime[a] * st[k] * st[other] * sphi;
        }
        theta_ddot[k] = st[k] * ct[k] * state.phi_dot[k] * state.phi_dot[k] + 2.0 * f_theta;
        phi_ddot[k] = -2.0 * (ct[k] / st[k]) * state.theta_dot[k] * state.phi_dot[k]
            + 2.0 * f_phi / (st[k] * st[k]);
    }
    Ok((theta_ddot, phi_ddot))
}

/// Adaptive step control settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Budget of step attempts, accepted and rejected together.
    pub max_steps: usize,
    /// Record every n-th accepted step (the initial and final states are
    /// always recorded).
    pub record_every: usize,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_steps: 2_000_000,
            record_every: 1,
        }
    }
}

/// One recorded instant of a trajectory with its conserved quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub state: State,
    pub arcs: [f64; 3],
    pub energy: f64,
    pub momentum: AngularMomentum,
}

/// An integrated trajectory with drift diagnostics against its first
/// sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    /// Magnitude the energy drift is measured against: the larger of
    /// `|E₀|` and the initial kinetic energy plus the sum of absolute
    /// pair interaction terms. The two coincide up to a small factor
    /// except when pair terms of opposite sign cancel in `E₀`.
    pub energy_scale: f64,
    /// Magnitude the momentum drift is measured against: the larger of
    /// `|c₀|` and `R √(2 M · energy_scale)`, the momentum of the total
    /// mass moving at the characteristic speed of `energy_scale`.
    pub momentum_scale: f64,
}

impl Trajectory {
    pub fn final_state(&self) -> &State {
        &self.samples.last().expect("a trajectory has samples").state
    }

    /// Largest deviation of any mutual arc from its initial value.
    pub fn max_arc_drift(&self) -> f64 {
        let first = self.samples[0].arcs;
        let mut worst: f64 = 0.0;
        for s in &self.samples {
            for a in 0..3 {
                worst = worst.max((s.arcs[a] - first[a]).abs());
            }
        }
        worst
    }

    /// Largest deviation of any colatitude from its initial value.
    pub fn max_colatitude_drift(&self) -> f64 {
        let first = self.samples[0].state.theta;
        let mut worst: f64 = 0.0;
        for s in &self.samples {
            for k in 0..3 {
                worst = worst.max((s.state.theta[k] - first[k]).abs());
            }
        }
        worst
    }

    /// Largest energy deviation relative to [`Trajectory::energy_scale`].
    pub fn energy_rel_drift(&self) -> f64 {
        let e0 = self.samples[0].energy;
        let mut worst: f64 = 0.0;
        for s in &self.samples {
            worst = worst.max((s.energy - e0).abs());
        }
        worst / self.energy_scale
    }

    /// Largest deviation of the angular momentum vector relative to
    /// [`Trajectory::momentum_scale`].
    pub fn momentum_rel_drift(&self) -> f64 {
        let c0 = self.samples[0].momentum;
        let mut worst: f64 = 0.0;
        for s in &self.samples {
            let dx = s.momentum.cx - c0.cx;
            let dy = s.momentum.cy - c0.cy;
            let dz = s.momentum.cz - c0.cz;
            worst = worst.max((dx * dx + dy * dy + dz * dz).sqrt());
        }
        worst / self.momentum_scale
    }
}

const DIM: usize = 12;

fn pack(state: &State) -> [f64; DIM] {
    let mut y = [0.0; DIM];
    y[0..3].copy_from_slice(&state.theta);
    y[3..6].copy_from_slice(&state.phi);
    y[6..9].copy_from_slice(&state.theta_dot);
    y[9..12].copy_from_slice(&state.phi_dot);
    y
}

fn unpack(t: f64, y: &[f64; DIM]) -> State {
    State {
        t,
        theta: [y[0], y[1], y[2]],
        phi: [y[3], y[4], y[5]],
        theta_dot: [y[6], y[7], y[8]],
        phi_dot: [y[9], y[10], y[11]],
    }
}

fn derivative(
    t: f64,
    y: &[f64; DIM],
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<[f64; DIM], DynamicsError> {
    let state = unpack(t, y);
    let (theta_ddot, phi_ddot) = accelerations(&state, masses, potential)?;
    let mut dy = [0.0; DIM];
    dy[0..3].copy_from_slice(&state.theta_dot);
    dy[3..6].copy_from_slice(&state.phi_dot);
    dy[6..9].copy_from_slice(&theta_ddot);
    dy[9..12].copy_from_slice(&phi_ddot);
    Ok(dy)
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn combine(y: &[f64; DIM], h: f64, stages: &[(&[f64; DIM], f64)]) -> [f64; DIM] {
    let mut out = *y;
    for (k, w) in stages {
        for i in 0..DIM {
            out[i] += h * w * k[i];
        }
    }
    out
}

/// Integrates the equations of motion from `initial` to
/// `initial.t + span` and records the trajectory.
pub fn integrate(
    initial: &State,
    masses: &Masses,
    potential: &dyn PairPotential,
    span: f64,
    options: &IntegrationOptions,
) -> Result<Trajectory, DynamicsError> {
    if !span.is_finite() || span <= 0.0 {
        return Err(DynamicsError::NonPositiveDuration(span));
    }
    let record_every = options.record_every.max(1);
    let t_end = initial.t + span;
    let mut t = initial.t;
    let mut y = pack(initial);
    let mut k1 = derivative(t, &y, masses, potential)?;

    let sample = |t: f64, y: &[f64; DIM]| -> Result<Sample, DynamicsError> {
        let state = unpack(t, y);
        Ok(Sample {
            state,
            arcs: state.arcs(),
            energy: total_energy(&state, masses, potential)?,
            momentum: angular_momentum(&state, masses, potential.radius()),
        })
    };

    let mut samples = Vec::new();
    samples.push(sample(t, &y)?);
    let (energy_scale, momentum_scale) = drift_scales(&samples[0], masses, potential)?;

    let mut h = (span * 1e-3).min(0.05);
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    let mut last_rejected = false;

    while t < t_end {
        if accepted + rejected >= options.max_steps {
            return Err(DynamicsError::StepLimit { t });
        }
        if h < MIN_STEP {
            return Err(DynamicsError::StepSizeUnderflow { t });
        }
        let h_try = h.min(t_end - t);

        let y2 = combine(&y, h_try, &[(&k1, A21)]);
        let k2 = derivative(t, &y2, masses, potential)?;
        let y3 = combine(&y, h_try, &[(&k1, A31), (&k2, A32)]);
        let k3 = derivative(t, &y3, masses, potential)?;
        let y4 = combine(&y, h_try, &[(&k1, A41), (&k2, A42), (&k3, A43)]);
        let k4 = derivative(t, &y4, masses, potential)?;
        let y5 = combine(&y, h_try, &[(&k1, A51), (&k2, A52), (&k3, A53), (&k4, A54)]);
        let k5 = derivative(t, &y5, masses, potential)?;
        let y6 = combine(
            &y,
            h_try,
            &[(&k1, A61), (&k2, A62), (&k3, A63), (&k4, A64), (&k5, A65)],
        );
        let k6 = derivative(t, &y6, masses, potential)?;
        let y_new = combine(
            &y,
            h_try,
            &[(&k1, B1), (&k3, B3), (&k4, B4), (&k5, B5), (&k6, B6)],
        );
        let k7 = derivative(t + h_try, &y_new, masses, potential)?;

        let mut err_sq = 0.0;
        for i in 0..DIM {
            let err = h_try
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let scale = options.abs_tol + options.rel_tol * y[i].abs().max(y_new[i].abs());
            err_sq += (err / scale) * (err / scale);
        }
        let err_norm = (err_sq / DIM as f64).sqrt();

        if err_norm <= 1.0 {
            t += h_try;
            y = y_new;
            k1 = k7;
            accepted += 1;
            if accepted % record_every == 0 || t >= t_end {
                samples.push(sample(t, &y)?);
            }
            let mut factor = if err_norm == 0.0 {
                5.0
            } else {
                (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0)
            };
            if last_rejected {
                factor = factor.min(1.0);
            }
            h = h_try * factor;
            last_rejected = false;
        } else {
            rejected += 1;
            h = h_try * (0.9 * err_norm.powf(-0.2)).clamp(0.2, 1.0);
            last_rejected = true;
        }
    }

    Ok(Trajectory {
        samples,
        accepted_steps: accepted,
        rejected_steps: rejected,
        energy_scale,
        momentum_scale,
    })
}

/// Reference magnitudes for the relative drift diagnostics, from the
/// initial sample. Plain `|E₀|` and `|c₀|` fail as scales when pair terms
/// cancel or the system starts at rest, so both are floored by the total
/// unsigned energy content and its equivalent momentum.
fn drift_scales(
    first: &Sample,
    masses: &Masses,
    potential: &dyn PairPotential,
) -> Result<(f64, f64), DynamicsError> {
    let m = masses.array();
    let radius = potential.radius();
    let kinetic = kinetic_energy(&first.state, masses, radius);
    let mut unsigned_interaction = 0.0;
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        let d2 = crate::geometry::chord_squared_from_arc(first.arcs[a], radius);
        unsigned_interaction += (m[*i] * m[*j] * potential.evaluate(d2)?).abs();
    }
    let energy_scale = first
        .energy
        .abs()
        .max(kinetic + unsigned_interaction)
        .max(f64::MIN_POSITIVE);
    let momentum_scale = first
        .momentum
        .norm()
        .max(radius * (2.0 * masses.total() * energy_scale).sqrt())
        .max(f64::MIN_POSITIVE);
    Ok((energy_scale, momentum_scale))
}

/// Drift diagnostics from integrating a claimed rotator over whole
/// revolutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidityReport {
    /// One revolution time `2π/ω`.
    pub period: f64,
    /// Total integrated time.
    pub duration: f64,
    pub accepted_steps: usize,
    pub max_arc_drift: f64,
    pub max_colatitude_drift: f64,
    pub energy_rel_drift: f64,
    pub momentum_rel_drift: f64,
}

/// Integrates a configuration rotating at its own rate for `periods`
/// revolutions and reports how rigid it stayed. A genuine rotator holds
/// every drift near the integration tolerance; anything else shows arc
/// drift orders of magnitude above it.
pub fn verify_rotator(
    config: &Configuration,
    masses: &Masses,
    potential: &dyn PairPotential,
    periods: f64,
    options: &IntegrationOptions,
) -> Result<RigidityReport, DynamicsError> {
    if config.omega == 0.0 {
        return Err(DynamicsError::ZeroAngularRate);
    }
    if !periods.is_finite() || periods <= 0.0 {
        return Err(DynamicsError::NonPositiveDuration(periods));
    }
    let period = 2.0 * PI / config.omega.abs();
    let initial = State::from_configuration(config);
    let trajectory = integrate(&initial, masses, potential, periods * period, options)?;
    Ok(RigidityReport {
        period,
        duration: periods * period,
        accepted_steps: trajectory.accepted_steps,
        max_arc_drift: trajectory.max_arc_drift(),
        max_colatitude_drift: trajectory.max_colatitude_drift(),
        energy_rel_drift: trajectory.energy_rel_drift(),
        momentum_rel_drift: trajectory.momentum_rel_drift(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{temporal_placement, Shape};
    use crate::potentials::Cotangent;
    use core::f64::consts::FRAC_PI_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn right_equilateral_rotator() -> (Configuration, Masses, Cotangent) {
        let third = (1.0_f64 / 3.0).sqrt().acos();
        let config = Configuration::new(
            [third; 3],
            [0.0, 4.0 * PI / 3.0, 2.0 * PI / 3.0],
            3.0_f64.sqrt(),
            1.0,
        )
        .unwrap();
        let masses = Masses::new(1.0, 1.0, 1.0).unwrap();
        (config, masses, Cotangent::new(1.0).unwrap())
    }

    #[test]
    fn rigid_rotation_has_zero_angular_acceleration() {
        let (config, masses, potential) = right_equilateral_rotator();
        let state = State::from_configuration(&config);
        assert_eq!(state.theta_dot, [0.0; 3]);
        assert_eq!(state.phi_dot, [3.0_f64.sqrt(); 3]);
        let (tdd, pdd) = accelerations(&state, &masses, &potential).unwrap();
        for k in 0..3 {
            assert!(tdd[k].abs() < 1e-12, "theta acceleration {}", tdd[k]);
            assert!(pdd[k].abs() < 1e-12, "phi acceleration {}", pdd[k]);
        }
    }

    #[test]
    fn energy_and_momentum_of_the_reference_rotator() {
        let (config, masses, potential) = right_equilateral_rotator();
        let state = State::from_configuration(&config);
        assert!(close(
            total_energy(&state, &masses, &potential).unwrap(),
            3.0,
            1e-12
        ));
        let c = angular_momentum(&state, &masses, 1.0);
        assert!(close(c.cz, 2.0 * 3.0_f64.sqrt(), 1e-12));
        assert!(c.cx.abs() < 1e-12);
        assert!(c.cy.abs() < 1e-12);
    }

    #[test]
    fn resting_configuration_has_interaction_energy_only() {
        let shape = Shape::equilateral(1.0).unwrap();
        let p = temporal_placement(&shape).unwrap();
        let state = State {
            t: 0.0,
            theta: p.theta,
            phi: p.phi,
            theta_dot: [0.0; 3],
            phi_dot: [0.0; 3],
        };
        let masses = Masses::new(1.0, 1.0, 1.0).unwrap();
        let potential = Cotangent::new(1.0).unwrap();
        assert_eq!(kinetic_energy(&state, &masses, 1.0), 0.0);
        let e = total_energy(&state, &masses, &potential).unwrap();
        assert!(close(e, -3.0 * (1.0_f64.cos() / 1.0_f64.sin()), 1e-12));
        assert!(close(
            angular_momentum(&state, &masses, 1.0).norm(),
            0.0,
            1e-15
        ));
    }

    #[test]
    fn a_rotator_stays_rigid_for_three_revolutions() {
        let (config, masses, potential) = right_equilateral_rotator();
        let report = verify_rotator(
            &config,
            &masses,
            &potential,
            3.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        assert!(close(report.period, 2.0 * PI / 3.0_f64.sqrt(), 1e-15));
        assert!(
            report.max_arc_drift < 1e-7,
            "arc drift {}",
            report.max_arc_drift
        );
        assert!(report.max_colatitude_drift < 1e-7);
        assert!(report.energy_rel_drift < 1e-9);
        assert!(report.momentum_rel_drift < 1e-9);
    }

    #[test]
    fn a_detuned_rate_breaks_rigidity() {
        let (config, masses, potential) = right_equilateral_rotator();
        let detuned =
            Configuration::new(config.theta, config.phi, config.omega * 1.1, config.radius)
                .unwrap();
        let report = verify_rotator(
            &detuned,
            &masses,
            &potential,
            1.5,
            &IntegrationOptions::default(),
        )
        .unwrap();
        assert!(
            report.max_arc_drift > 1e-3,
            "arc drift {}",
            report.max_arc_drift
        );
    }

    #[test]
    fn conservation_holds_off_equilibrium() {
        let (config, masses, potential) = right_equilateral_rotator();
        let mut state = State::from_configuration(&config);
        state.theta[0] += 0.05;
        state.theta_dot[1] = -0.02;
        let trajectory = integrate(
            &state,
            &masses,
            &potential,
            3.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        assert!(trajectory.energy_rel_drift() < 1e-8);
        assert!(trajectory.momentum_rel_drift() < 1e-8);
        assert!(trajectory.max_arc_drift() > 1e-3);
    }

    #[test]
    fn tighter_tolerances_conserve_better() {
        let (config, masses, potential) = right_equilateral_rotator();
        let mut state = State::from_configuration(&config);
        state.theta[0] += 0.05;
        let loose = IntegrationOptions {
            rel_tol: 1e-6,
            abs_tol: 1e-8,
            ..IntegrationOptions::default()
        };
        let tight = IntegrationOptions {
            rel_tol: 1e-11,
            abs_tol: 1e-13,
            ..IntegrationOptions::default()
        };
        let drift_loose = integrate(&state, &masses, &potential, 3.0, &loose)
            .unwrap()
            .energy_rel_drift();
        let drift_tight = integrate(&state, &masses, &potential, 3.0, &tight)
            .unwrap()
            .energy_rel_drift();
        assert!(drift_tight < drift_loose);
        assert!(drift_tight < 1e-9);
    }

    #[test]
    fn reversing_velocities_retraces_the_path() {
        let (config, masses, potential) = right_equilateral_rotator();
        let mut state = State::from_configuration(&config);
        state.theta[0] += 0.05;
        let forward = integrate(
            &state,
            &masses,
            &potential,
            2.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        let mut back = *forward.final_state();
        for k in 0..3 {
            back.theta_dot[k] = -back.theta_dot[k];
            back.phi_dot[k] = -back.phi_dot[k];
        }
        let returned = integrate(
            &back,
            &masses,
            &potential,
            2.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        let end = returned.final_state();
        for k in 0..3 {
            assert!(close(end.theta[k], state.theta[k], 1e-6));
            assert!(close(end.phi[k], state.phi[k], 1e-6));
        }
    }

    #[test]
    fn integration_is_deterministic() {
        let (config, masses, potential) = right_equilateral_rotator();
        let mut state = State::from_configuration(&config);
        state.theta[2] -= 0.03;
        let a = integrate(
            &state,
            &masses,
            &potential,
            1.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        let b = integrate(
            &state,
            &masses,
            &potential,
            1.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        assert_eq!(a.final_state(), b.final_state());
        assert_eq!(a.accepted_steps, b.accepted_steps);
    }

    #[test]
    fn a_body_heading_for_the_pole_is_reported() {
        let masses = Masses::new(1e-9, 1e-9, 1e-9).unwrap();
        let potential = Cotangent::new(1.0).unwrap();
        let state = State {
            t: 0.0,
            theta: [0.3, FRAC_PI_2, FRAC_PI_2],
            phi: [0.0, 2.0, 4.0],
            theta_dot: [-0.2, 0.0, 0.0],
            phi_dot: [0.0; 3],
        };
        match integrate(
            &state,
            &masses,
            &potential,
            5.0,
            &IntegrationOptions::default(),
        ) {
            Err(DynamicsError::PoleApproach { body: 0, t }) => assert!(t > 0.1 && t < 1.6),
            other => panic!("expected a pole report, got {other:?}"),
        }
    }

    #[test]
    fn an_attracting_pair_collides() {
        let masses = Masses::new(1.0, 1.0, 1.0).unwrap();
        let potential = Cotangent::new(1.0).unwrap();
        let state = State {
            t: 0.0,
            theta: [FRAC_PI_2; 3],
            phi: [0.0, 0.4, 2.0],
            theta_dot: [0.0; 3],
            phi_dot: [0.0; 3],
        };
        match integrate(
            &state,
            &masses,
            &potential,
            5.0,
            &IntegrationOptions::default(),
        ) {
            Err(DynamicsError::CloseEncounter { pair: (0, 1), .. }) => {}
            other => panic!("expected a close encounter, got {other:?}"),
        }
    }

    #[test]
    fn invalid_spans_are_rejected() {
        let (config, masses, potential) = right_equilateral_rotator();
        let state = State::from_configuration(&config);
        assert!(matches!(
            integrate(
                &state,
                &masses,
                &potential,
                0.0,
                &IntegrationOptions::default()
            ),
            Err(DynamicsError::NonPositiveDuration(_))
        ));
        let parked = Configuration::new(config.theta, config.phi, 0.0, 1.0).unwrap();
        assert!(matches!(
            verify_rotator(
                &parked,
                &masses,
                &potential,
                2.0,
                &IntegrationOptions::default()
            ),
            Err(DynamicsError::ZeroAngularRate)
        ));
    }

    #[test]
    fn recording_stride_thins_samples() {
        let (config, masses, potential) = right_equilateral_rotator();
        let state = State::from_configuration(&config);
        let dense = integrate(
            &state,
            &masses,
            &potential,
            2.0,
            &IntegrationOptions::default(),
        )
        .unwrap();
        let thin_options = IntegrationOptions {
            record_every: 10,
            ..IntegrationOptions::default()
        };
        let thin = integrate(&state, &masses, &potential, 2.0, &thin_options).unwrap();
        assert!(thin.samples.len() < dense.samples.len());
        assert_eq!(thin.final_state().t, dense.final_state().t);
    }
}
