//! Solution families for symmetric mass triples.
//!
//! Two one-parameter families admit closed reductions:
//!
//! * **Equal-mass isosceles** (`m1 = m2 = m3`, legs `σ23 = σ31 = σ`, base
//!   `σ12`): the rotator condition collapses to one scalar equation
//!   `q(σ, σ12) = 0` with
//!   `q = cos σ (2 sin⁶σ − sin⁶σ12) − sin³σ cos σ12 sin³σ12`.
//!   The diagonal `σ = σ12` (equilateral triangles) solves it identically.
//! * **Two equal masses at a right angle** (`m1 = m2 = νm`, `m3 = m`,
//!   `σ12 = π/2`, legs `σ23 = σ31 = σ`): a shape works exactly for the mass
//!   ratio `ν(σ) = (cos σ − sin³σ) / (sin³σ (2 sin³σ cos σ − 1))`.
//!
//! The solvers here find the roots, cross-check each against
//! [`crate::rotator::check_rotator`], and trace whole branches on parameter
//! grids for plotting.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::geometry::{Configuration, Masses, Shape};
use crate::potentials::Cotangent;
use crate::rotator::{check_rotator, Classification, RotatorError};

/// Scan density used to isolate roots before bisection.
const SCAN_POINTS: usize = 2000;

/// Width to which every root bracket is bisected.
const BRACKET_WIDTH: f64 = 1e-13;

/// Two roots closer than this merge into one.
const ROOT_MERGE: f64 = 1e-8;

/// Spread tolerance handed to the rotator check on every family solution.
const FAMILY_ROTATOR_TOL: f64 = 1e-9;

/// Half-width of the excluded parameter slot at `σ = π/2` in the
/// two-equal-mass family, where the triple crosses the equilateral point.
const EQUILATERAL_SLOT: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyError {
    /// Parameter outside the family's domain.
    InvalidParameter(f64),
    /// No root of the family equation survived the filters.
    NoRoot,
    /// The mass-ratio formula's denominator vanished (does not happen on
    /// `(0, π)`; guarded against roundoff anyway).
    DegenerateDenominator(f64),
    /// The mass ratio `ν(σ)` is not positive, so no physical mass triple
    /// realizes this arc.
    NonPositiveNu { sigma: f64, nu: f64 },
    /// The assembled shape is not a spherical triangle.
    InfeasibleShape { sigma: f64 },
    /// The assembled solution failed the rotator cross-check; indicates a
    /// numerical inconsistency rather than a family property.
    RotatorCheckFailed { sigma: f64 },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParameter(p) => {
                write!(f, "parameter {p} is outside the family domain")
            }
            FamilyError::NoRoot => write!(f, "no family solution at this parameter"),
            FamilyError::DegenerateDenominator(s) => {
                write!(f, "mass-ratio denominator degenerates at sigma = {s}")
            }
            FamilyError::NonPositiveNu { sigma, nu } => {
                write!(f, "mass ratio at sigma = {sigma} is {nu}, not positive")
            }
            FamilyError::InfeasibleShape { sigma } => {
                write!(f, "arcs at sigma = {sigma} do not close into a triangle")
            }
            FamilyError::RotatorCheckFailed { sigma } => {
                write!(
                    f,
                    "solution at sigma = {sigma} failed the rotator cross-check"
                )
            }
        }
    }
}

impl core::error::Error for FamilyError {}

fn unit_cotangent() -> Cotangent {
    Cotangent::new(1.0).expect("unit radius is valid")
}

/// The equal-mass isosceles family equation.
pub fn q_function(sigma: f64, sigma12: f64) -> f64 {
    let (s, c) = (sigma.sin(), sigma.cos());
    let (s12, c12) = (sigma12.sin(), sigma12.cos());
    c * (2.0 * s.powi(6) - s12.powi(6)) - s.powi(3) * c12 * s12.powi(3)
}

/// Partial derivative of [`q_function`] in `σ`.
pub fn q_derivative(sigma: f64, sigma12: f64) -> f64 {
    let (s, c) = (sigma.sin(), sigma.cos());
    let (s12, c12) = (sigma12.sin(), sigma12.cos());
    -s * (2.0 * s.powi(6) - s12.powi(6)) + 12.0 * s.powi(5) * c * c
        - 3.0 * s * s * c * c12 * s12.powi(3)
}

/// Residual of the un-squared form of the family equation, whose two sign
/// branches square to `q = 0` through the identity
/// `L² − R±² = 8 cos σ · q(σ, σ12)` with
/// `L = −4 sin³σ cos σ + sin³σ12 cos σ12` and
/// `R± = ± sin³σ12 √(8 cos²σ + cos²σ12)`.
///
/// Returns the smaller of `|L − R₊|` and `|L − R₋|`; genuine family
/// solutions satisfy one branch to roundoff, values that merely square to
/// zero do not.
pub fn isosceles_branch_residual(sigma: f64, sigma12: f64) -> f64 {
    let (s, c) = (sigma.sin(), sigma.cos());
    let (s12, c12) = (sigma12.sin(), sigma12.cos());
    let left = -4.0 * s.powi(3) * c + s12.powi(3) * c12;
    let right = s12.powi(3) * (8.0 * c * c + c12 * c12).sqrt();
    (left - right).abs().min((left + right).abs())
}

/// Window of leg arcs `σ` for which `(σ12, σ, σ)` is a spherical triangle:
/// `σ12/2 ≤ σ ≤ π − σ12/2`, the boundaries being collinear.
pub fn isosceles_window(sigma12: f64) -> (f64, f64) {
    (0.5 * sigma12, PI - 0.5 * sigma12)
}

/// One accepted solution of the equal-mass isosceles family.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoscelesRoot {
    /// Leg arc `σ23 = σ31`.
    pub sigma: f64,
    /// The full triangle `(σ12, σ, σ)`.
    pub shape: Shape,
    /// `R³ω²` for unit masses (scales linearly with a common mass factor).
    pub scaled_omega_squared: f64,
    pub classification: Classification,
    /// Spread of the rotator quantities at the root.
    pub residual: f64,
    /// Rotating configuration; absent only for equatorial rings whose arcs
    /// fail to wrap exactly.
    pub configuration: Option<Configuration>,
}

/// All rigid rotators of three equal unit masses in isosceles shapes with
/// base `σ12`, as roots of `q(·, σ12)` in the feasibility window.
///
/// Roots are isolated on a uniform scan, bisected to machine-width
/// brackets, Newton-polished, and accepted only if the full rotator test
/// passes. The diagonal root `σ = σ12` is guaranteed by the algebra; if the
/// scan misses it (it crosses the off-diagonal branch tangentially where
/// `10 cos²σ = 1`), it is seeded explicitly.
pub fn solve_equal_mass_isosceles(sigma12: f64) -> Result<Vec<IsoscelesRoot>, FamilyError> {
    if !sigma12.is_finite() || sigma12 <= 0.0 || sigma12 >= PI {
        return Err(FamilyError::InvalidParameter(sigma12));
    }
    let (lo, hi) = isosceles_window(sigma12);
    let mut sigmas = scan_roots(|s| q_function(s, sigma12), lo + 1e-9, hi - 1e-9);
    for s in &mut sigmas {
        for _ in 0..3 {
            let d = q_derivative(*s, sigma12);
            if d.abs() < 1e-9 {
                break;
            }
            let step = q_function(*s, sigma12) / d;
            *s -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        *s = s.clamp(lo, hi);
    }
    sigmas.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    sigmas.dedup_by(|a, b| (*a - *b).abs() < ROOT_MERGE);
    if sigma12 <= hi + 1e-12 && !sigmas.iter().any(|s| (s - sigma12).abs() < ROOT_MERGE) {
        sigmas.push(sigma12.min(hi));
        sigmas.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    }

    let masses = Masses::new(1.0, 1.0, 1.0).expect("unit masses");
    let potential = unit_cotangent();
    let mut out = Vec::new();
    for sigma in sigmas {
        let Ok(shape) = Shape::isosceles(sigma12, sigma) else {
            continue;
        };
        if !shape.triangle_feasible() {
            continue;
        }
        let Ok(verdict) = check_rotator(&masses, &shape, &potential, FAMILY_ROTATOR_TOL) else {
            continue;
        };
        if !verdict.is_rotator {
            continue;
        }
        let solution = verdict
            .solution
            .expect("accepted verdicts carry a solution");
        out.push(IsoscelesRoot {
            sigma,
            shape,
            scaled_omega_squared: solution.scaled_omega_squared,
            classification: verdict.classification,
            residual: verdict.residual,
            configuration: solution.configuration,
        });
    }
    if out.is_empty() {
        return Err(FamilyError::NoRoot);
    }
    Ok(out)
}

/// The involution `(σ, σ12) ↦ (π − σ, π − σ12)`, which carries family
/// solutions to family solutions with the same `R³ω²`. The image may land
/// outside the feasibility window; callers re-validate.
pub fn symmetry_map(sigma: f64, sigma12: f64) -> (f64, f64) {
    (PI - sigma, PI - sigma12)
}

/// Landmark arcs of the equal-mass isosceles family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialPoints {
    /// Saddle of `q` on the equilateral diagonal: `10 cos²σ = 1`, where the
    /// off-diagonal branch crosses tangentially.
    pub sigma_saddle: f64,
    /// Mirror image `π − σ` of the saddle under [`symmetry_map`].
    pub sigma_saddle_mirror: f64,
    /// Root of `32c⁶ + 8c⁴ − 4c² − 1` in `c = cos σ`: the leg arc at the
    /// lower end of the non-equilateral branch.
    pub sigma_branch_end: f64,
    /// Base arc `2σ` at that branch end.
    pub two_sigma_branch_end: f64,
    /// Leg arcs of the three family members whose apex angle is right
    /// (`cos σ12 = cos²σ` intersected with `q = 0`), ascending.
    pub right_angle_sigmas: [f64; 3],
}

/// Computes the landmark arcs by root-finding their defining equations
/// (closed forms exist for two of them and are pinned in tests).
pub fn special_points() -> SpecialPoints {
    let sigma_saddle = bisect_root(|s| 10.0 * s.cos().powi(2) - 1.0, 0.1, FRAC_PI_2 - 0.1);
    let sigma_branch_end = bisect_root(
        |s| {
            let c2 = s.cos() * s.cos();
            32.0 * c2 * c2 * c2 + 8.0 * c2 * c2 - 4.0 * c2 - 1.0
        },
        0.1,
        FRAC_PI_2 - 0.1,
    );
    let apex = |s: f64| q_function(s, (s.cos() * s.cos()).acos());
    let roots = scan_roots(apex, 0.05, PI - 0.05);
    let mut right_angle_sigmas = [0.0; 3];
    for (slot, r) in roots.iter().take(3).enumerate() {
        right_angle_sigmas[slot] = *r;
    }
    SpecialPoints {
        sigma_saddle,
        sigma_saddle_mirror: PI - sigma_saddle,
        sigma_branch_end,
        two_sigma_branch_end: 2.0 * sigma_branch_end,
        right_angle_sigmas,
    }
}

/// The mass ratio `ν(σ)` making `(π/2, σ, σ)` a rigid rotator of masses
/// `(ν, ν, 1)`. Raw formula without positivity or feasibility filtering;
/// negative values mean no physical mass triple realizes the arc.
///
/// The denominator `sin³σ (2 sin³σ cos σ − 1)` is strictly negative on all
/// of `(0, π)` (the bracketed factor stays below `3√3/8 − 1 < 0`), so the
/// formula is finite on the whole open interval. The arc `σ = π/2` is
/// excluded: the triple degenerates to the equilateral right triangle,
/// which belongs to the equal-mass family.
pub fn two_equal_mass_nu(sigma: f64) -> Result<f64, FamilyError> {
    if !sigma.is_finite() || sigma <= 0.0 || sigma >= PI {
        return Err(FamilyError::InvalidParameter(sigma));
    }
    if (sigma - FRAC_PI_2).abs() <= EQUILATERAL_SLOT {
        return Err(FamilyError::InvalidParameter(sigma));
    }
    let (s, c) = (sigma.sin(), sigma.cos());
    let s3 = s.powi(3);
    let denom = s3 * (2.0 * s3 * c - 1.0);
    if denom.abs() < 1e-300 {
        return Err(FamilyError::DegenerateDenominator(sigma));
    }
    Ok((c - s3) / denom)
}

/// A solved member of the two-equal-mass family.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoEqualMassSolution {
    /// Leg arc `σ23 = σ31`.
    pub sigma: f64,
    /// Mass ratio `ν = m1/m3 = m2/m3`.
    pub nu: f64,
    /// The concrete triple `(ν, ν, 1)`.
    pub masses: Masses,
    /// The triangle `(π/2, σ, σ)`.
    pub shape: Shape,
    /// `R³ω²` for the triple `(ν, ν, 1)`; scales linearly with a common
    /// mass factor.
    pub scaled_omega_squared: f64,
    pub classification: Classification,
    pub residual: f64,
    pub configuration: Option<Configuration>,
}

/// Solves the two-equal-mass family at leg arc `σ`: computes `ν(σ)`,
/// requires it positive, assembles masses `(ν, ν, 1)` on the triangle
/// `(π/2, σ, σ)`, and accepts only if the full rotator test passes.
pub fn solve_two_equal_mass(sigma: f64) -> Result<TwoEqualMassSolution, FamilyError> {
    let nu = two_equal_mass_nu(sigma)?;
    if nu <= 0.0 {
        return Err(FamilyError::NonPositiveNu { sigma, nu });
    }
    let masses = Masses::new(nu, nu, 1.0).map_err(|_| FamilyError::NonPositiveNu { sigma, nu })?;
    let shape =
        Shape::new(FRAC_PI_2, sigma, sigma).map_err(|_| FamilyError::InvalidParameter(sigma))?;
    if !shape.triangle_feasible() {
        return Err(FamilyError::InfeasibleShape { sigma });
    }
    let verdict = match check_rotator(&masses, &shape, &unit_cotangent(), FAMILY_ROTATOR_TOL) {
        Ok(v) => v,
        Err(RotatorError::InfeasibleShape) => return Err(FamilyError::InfeasibleShape { sigma }),
        Err(_) => return Err(FamilyError::RotatorCheckFailed { sigma }),
    };
    if !verdict.is_rotator {
        return Err(FamilyError::RotatorCheckFailed { sigma });
    }
    let solution = verdict
        .solution
        .expect("accepted verdicts carry a solution");
    Ok(TwoEqualMassSolution {
        sigma,
        nu,
        masses,
        shape,
        scaled_omega_squared: solution.scaled_omega_squared,
        classification: verdict.classification,
        residual: verdict.residual,
        configuration: solution.configuration,
    })
}

/// Arc at which `ν(σ) = 0`: the root of `cos σ = sin³σ`. Below it the
/// required ratio is negative; approaching it from above sends the third
/// body's relative weight to infinity.
pub fn two_equal_mass_sigma_zero() -> f64 {
    bisect_root(|s| s.cos() - s.sin().powi(3), 0.1, FRAC_PI_2 - 1e-3)
}

/// Roots of `ν(σ) = nu` over `(0, π)` excluding the equilateral slot at
/// `π/2`, ascending. Arcs above `3π/4` solve the equation but correspond to
/// arc sums beyond a full great circle; they are reported here (the count
/// of equation roots is meaningful) and rejected by
/// [`solve_two_equal_mass`]'s feasibility filter.
pub fn two_equal_mass_roots(nu: f64) -> Result<Vec<f64>, FamilyError> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(FamilyError::InvalidParameter(nu));
    }
    let f = |s: f64| match two_equal_mass_nu(s) {
        Ok(v) => v - nu,
        Err(_) => f64::NAN,
    };
    let mut roots = scan_roots(f, 1e-3, PI - 1e-3);
    roots.retain(|s| (s - FRAC_PI_2).abs() > EQUILATERAL_SLOT);
    Ok(roots)
}

/// Number of rigid rotators in the two-equal-mass family at mass ratio
/// `nu`: the roots of `ν(σ) = nu` away from `π/2`, plus the equilateral
/// right triangle exactly at `ν = 1`.
pub fn count_two_equal_mass_solutions(nu: f64) -> Result<usize, FamilyError> {
    let roots = two_equal_mass_roots(nu)?;
    let equilateral = if (nu - 1.0).abs() <= EQUILATERAL_SLOT {
        1
    } else {
        0
    };
    Ok(roots.len() + equilateral)
}

/// The interval of mass ratios with three family solutions, bounded by the
/// interior extrema of `ν(σ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuBand {
    /// Value of `ν` at its interior local minimum.
    pub lower: f64,
    /// Value of `ν` at its interior local maximum.
    pub upper: f64,
    pub sigma_at_lower: f64,
    pub sigma_at_upper: f64,
}

/// Locates the interior extrema of `ν(σ)` between the zero of the
/// numerator and the wrap boundary `3π/4`, by scan plus ternary refinement.
/// The computed limits are `lower = 0.8771357…` at `σ = 1.8159186…` and
/// `upper = 1.3687611…` at `σ = 1.2493567…`; mass ratios strictly inside
/// the band admit three solutions, ratios outside admit one.
pub fn two_equal_mass_band() -> NuBand {
    let lo = two_equal_mass_sigma_zero() + 1e-6;
    let hi = 3.0 * FRAC_PI_4 - 1e-6;
    let nu = |s: f64| two_equal_mass_nu(s).unwrap_or(f64::NAN);
    let n = 4000;
    let h = (hi - lo) / n as f64;
    let mut maxima: Vec<f64> = Vec::new();
    let mut minima: Vec<f64> = Vec::new();
    let mut prev = nu(lo);
    let mut here = nu(lo + h);
    for i in 2..=n {
        let next = nu(lo + h * i as f64);
        let x = lo + h * (i - 1) as f64;
        if here > prev && here > next {
            maxima.push(ternary_extremum(&nu, x - h, x + h, true));
        }
        if here < prev && here < next {
            minima.push(ternary_extremum(&nu, x - h, x + h, false));
        }
        prev = here;
        here = next;
    }
    let sigma_at_upper = maxima
        .iter()
        .copied()
        .max_by(|a, b| nu(*a).partial_cmp(&nu(*b)).expect("finite"))
        .expect("the ratio curve has an interior maximum");
    let sigma_at_lower = minima
        .iter()
        .copied()
        .min_by(|a, b| nu(*a).partial_cmp(&nu(*b)).expect("finite"))
        .expect("the ratio curve has an interior minimum");
    NuBand {
        lower: nu(sigma_at_lower),
        upper: nu(sigma_at_upper),
        sigma_at_lower,
        sigma_at_upper,
    }
}

/// Which family a traced branch belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    EqualMassIsosceles,
    TwoEqualMass,
}

/// The equal-mass isosceles branch sampled on a base-arc grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoscelesBranch {
    pub family: FamilyId,
    pub resolution: usize,
    /// Grid endpoints in `σ12` (open interval sampled uniformly inside).
    pub parameter_range: (f64, f64),
    pub points: Vec<IsoscelesBranchPoint>,
    pub special: SpecialPoints,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsoscelesBranchPoint {
    pub sigma12: f64,
    pub roots: Vec<IsoscelesRoot>,
}

/// Traces the equal-mass isosceles family over `resolution` base arcs
/// placed uniformly inside `(0, π)`.
pub fn trace_equal_mass_isosceles(resolution: usize) -> Result<IsoscelesBranch, FamilyError> {
    if resolution == 0 {
        return Err(FamilyError::InvalidParameter(0.0));
    }
    let mut points = Vec::with_capacity(resolution);
    for i in 0..resolution {
        let sigma12 = PI * (i + 1) as f64 / (resolution + 1) as f64;
        let roots = solve_equal_mass_isosceles(sigma12)?;
        points.push(IsoscelesBranchPoint { sigma12, roots });
    }
    Ok(IsoscelesBranch {
        family: FamilyId::EqualMassIsosceles,
        resolution,
        parameter_range: (0.0, PI),
        points,
        special: special_points(),
    })
}

/// The two-equal-mass branch sampled on a leg-arc grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoEqualMassBranch {
    pub family: FamilyId,
    pub resolution: usize,
    /// Grid endpoints in `σ` (open interval sampled uniformly inside).
    pub parameter_range: (f64, f64),
    pub points: Vec<TwoEqualMassSolution>,
    pub band: NuBand,
    /// Arc at which the required mass ratio crosses zero.
    pub sigma_nu_zero: f64,
}

/// Traces the two-equal-mass family over `resolution` leg arcs placed
/// uniformly inside the feasible window `(π/4, 3π/4)`. Grid points outside
/// the positive-ratio domain or in the equilateral slot are skipped, so the
/// traced point list may be shorter than the grid.
pub fn trace_two_equal_mass(resolution: usize) -> Result<TwoEqualMassBranch, FamilyError> {
    if resolution == 0 {
        return Err(FamilyError::InvalidParameter(0.0));
    }
    let (lo, hi) = (FRAC_PI_4, 3.0 * FRAC_PI_4);
    let mut points = Vec::new();
    for i in 0..resolution {
        let sigma = lo + (hi - lo) * (i + 1) as f64 / (resolution + 1) as f64;
        match solve_two_equal_mass(sigma) {
            Ok(sol) => points.push(sol),
            Err(FamilyError::NonPositiveNu { .. }) | Err(FamilyError::InvalidParameter(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(TwoEqualMassBranch {
        family: FamilyId::TwoEqualMass,
        resolution,
        parameter_range: (lo, hi),
        points,
        band: two_equal_mass_band(),
        sigma_nu_zero: two_equal_mass_sigma_zero(),
    })
}

/// Roots of `f` on `[lo, hi]`: uniform scan for sign changes, bisection on
/// each bracket. NaN segments (domain holes) are skipped.
fn scan_roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return roots;
    }
    let h = (hi - lo) / SCAN_POINTS as f64;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=SCAN_POINTS {
        let x1 = lo + h * i as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.is_finite() && f1.is_finite() && f0 * f1 < 0.0 {
            let (mut a, mut b, mut fa) = (x0, x1, f0);
            while b - a > BRACKET_WIDTH {
                let m = 0.5 * (a + b);
                let fm = f(m);
                if fm == 0.0 {
                    a = m;
                    b = m;
                } else if fa * fm < 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(x0);
    }
    roots
}

/// Root of a monotone-crossing function by plain bisection.
fn bisect_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a);
    debug_assert!(fa * f(b) < 0.0, "bisection bracket must straddle the root");
    while b - a > 1e-15 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Ternary search for an interior extremum of a unimodal section.
fn ternary_extremum(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, maximize: bool) -> f64 {
    while b - a > 1e-12 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        let keep_right = if maximize {
            f(m1) < f(m2)
        } else {
            f(m1) > f(m2)
        };
        if keep_right {
            a = m1;
        } else {
            b = m2;
        }
    }
    0.5 * (a + b)
}
