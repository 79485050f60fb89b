//! From a mass triple and a triangle shape to a rotating configuration.
//!
//! The central object is a symmetric 3×3 matrix `J` built from the masses
//! and the cosines of the mutual arcs: diagonal `(m2+m3, m3+m1, m1+m2)`,
//! off-diagonal `J_ij = −√(mᵢmⱼ) cos σᵢⱼ`. `J` shares its characteristic
//! polynomial with the Euclidean inertia tensor of the placed bodies, and
//! an eigenpair `(λ, ψ)` of `J` whose eigenvector has strictly positive
//! components encodes colatitudes on the northern hemisphere through
//!
//! `cos θₖ = ψₖ √(M − λ) / √mₖ`,   `M = m1 + m2 + m3`.
//!
//! Azimuths then follow from the spherical law of cosines, and the whole
//! configuration spins about the vertical axis. This module performs that
//! translation; deciding whether the result actually rotates rigidly is the
//! [`crate::rotator`] module's job.

use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::geometry::{
    temporal_placement, Configuration, GeometryError, Masses, Placement, Shape, ARC_PAIRS,
};
use crate::linalg::{self, Mat3, SymEigen3, Vec3};

/// Failures along the shape → configuration translation.
#[derive(Debug, Clone, PartialEq)]
pub enum InertiaError {
    /// The shape could not be placed or validated.
    Geometry(GeometryError),
    /// No eigenvector of `J` with all components strictly positive exists,
    /// so no configuration on one open hemisphere encodes this shape.
    NoPositiveEigenvector,
    /// The eigenpair does not translate into a consistent configuration:
    /// a colatitude left its range or the azimuth chain failed to close on
    /// the third arc.
    InvalidTranslation,
}

impl fmt::Display for InertiaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InertiaError::Geometry(e) => write!(f, "{e}"),
            InertiaError::NoPositiveEigenvector => {
                write!(f, "no eigenvector with strictly positive components")
            }
            InertiaError::InvalidTranslation => {
                write!(f, "eigenpair does not translate into a valid configuration")
            }
        }
    }
}

impl core::error::Error for InertiaError {}

impl From<GeometryError> for InertiaError {
    fn from(e: GeometryError) -> Self {
        InertiaError::Geometry(e)
    }
}

/// Relative eigenvalue gap (against the Frobenius norm of `J`) below which
/// two eigenvalues are flagged as one degenerate cluster.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// Smallest eigenvector component still counted as strictly positive.
/// Components at roundoff scale (an exact zero plus noise) must not promote
/// an eigenvector into the positive cone.
pub const POSITIVITY_FLOOR: f64 = 1e-12;

/// Largest allowed mismatch between `cos(δ12 + δ23)` and the recovered
/// `cos δ31` when the azimuth chain is closed around the triangle.
pub const CLOSURE_TOL: f64 = 1e-8;

/// The mass-and-shape matrix whose positive eigenvectors encode rotating
/// configurations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JTensor {
    mat: Mat3,
}

impl JTensor {
    pub fn new(masses: &Masses, shape: &Shape) -> Self {
        let [m1, m2, m3] = masses.array();
        let [c12, c23, c31] = shape.cosines();
        let j12 = -(m1 * m2).sqrt() * c12;
        let j23 = -(m2 * m3).sqrt() * c23;
        let j31 = -(m3 * m1).sqrt() * c31;
        JTensor {
            mat: [
                [m2 + m3, j12, j31],
                [j12, m3 + m1, j23],
                [j31, j23, m1 + m2],
            ],
        }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.mat
    }
}

/// The Euclidean inertia tensor `Σ mₖ (I − uₖuₖᵀ)` of bodies placed on the
/// unit sphere (the radius factors out as `R²` and is dropped).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InertiaTensor {
    mat: Mat3,
}

impl InertiaTensor {
    pub fn from_placement(masses: &Masses, placement: &Placement) -> Self {
        let u = placement.unit_vectors();
        let m = masses.array();
        let mut mat = [[0.0; 3]; 3];
        for k in 0..3 {
            for a in 0..3 {
                for b in 0..3 {
                    let eye = if a == b { 1.0 } else { 0.0 };
                    mat[a][b] += m[k] * (eye - u[k][a] * u[k][b]);
                }
            }
        }
        InertiaTensor { mat }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat[0][0] + self.mat[1][1] + self.mat[2][2]
    }
}

/// Inertia tensor of a shape in its canonical placement.
pub fn inertia_temporal(masses: &Masses, shape: &Shape) -> Result<InertiaTensor, GeometryError> {
    let placement = temporal_placement(shape)?;
    Ok(InertiaTensor::from_placement(masses, &placement))
}

/// Coefficients `[c2, c1, c0]` of `det(λI − J) = λ³ + c2 λ² + c1 λ + c0`,
/// expanded symbolically in the masses and arc cosines. Cross-checks the
/// matrix assembly and the placement route, which must produce the same
/// polynomial.
pub fn characteristic_polynomial(masses: &Masses, shape: &Shape) -> [f64; 3] {
    let [m1, m2, m3] = masses.array();
    let [c12, c23, c31] = shape.cosines();
    let (d1, d2, d3) = (m2 + m3, m3 + m1, m1 + m2);
    let (w1, w2, w3) = (
        m2 * m3 * c23 * c23,
        m3 * m1 * c31 * c31,
        m1 * m2 * c12 * c12,
    );
    let c2 = -(d1 + d2 + d3);
    let c1 = d1 * d2 + d2 * d3 + d3 * d1 - (w1 + w2 + w3);
    let c0 = -d1 * d2 * d3 + d1 * w1 + d2 * w2 + d3 * w3 + 2.0 * m1 * m2 * m3 * c12 * c23 * c31;
    [c2, c1, c0]
}

/// Eigendecomposition of `J` with degeneracy flags. `eigenvalues` ascend;
/// `eigenvectors[i]` belongs to `eigenvalues[i]`; `degenerate[i]` marks
/// membership in a cluster whose internal gaps fall below
/// [`DEGENERACY_GAP`] relative to the Frobenius norm of `J`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [Vec3; 3],
    pub degenerate: [bool; 3],
}

pub fn eigen_decompose(j: &JTensor) -> Spectrum {
    let SymEigen3 { values, vectors } = linalg::sym_eigen_3x3(j.matrix());
    let scale = linalg::frobenius(j.matrix()).max(f64::MIN_POSITIVE);
    let lo = (values[1] - values[0]).abs() < DEGENERACY_GAP * scale;
    let hi = (values[2] - values[1]).abs() < DEGENERACY_GAP * scale;
    Spectrum {
        eigenvalues: values,
        eigenvectors: vectors,
        degenerate: [lo, lo || hi, hi],
    }
}

/// An eigenvalue (or degenerate cluster) of `J` together with a unit vector
/// from its eigenspace whose components are all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCandidate {
    /// The eigenvalue; for a cluster, the mean over the cluster.
    pub lambda: f64,
    /// Unit eigenvector with every component above [`POSITIVITY_FLOOR`].
    pub psi: Vec3,
    /// Inclusive index range of the eigenvalues spanning the candidate.
    pub cluster: (usize, usize),
}

/// Extracts every candidate eigenvector lying strictly inside the positive
/// cone, one per eigenvalue cluster at most, ordered by eigenvalue.
///
/// Isolated eigenvalues contribute their eigenvector if some sign of it is
/// positive. A two-fold degenerate cluster is searched over its whole
/// eigenplane for the direction maximizing the smallest component; a
/// three-fold cluster means `J` is a multiple of the identity and the
/// symmetric direction `(1,1,1)/√3` is the canonical representative.
pub fn positive_candidates(spectrum: &Spectrum) -> Vec<EigenCandidate> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < 3 {
        let mut end = start;
        while end + 1 < 3 && spectrum.degenerate[end] && spectrum.degenerate[end + 1] {
            end += 1;
        }
        let lambda =
            spectrum.eigenvalues[start..=end].iter().sum::<f64>() / (end - start + 1) as f64;
        let psi = match end - start {
            0 => oriented_positive(&spectrum.eigenvectors[start]),
            1 => {
                let (v, min) = maximin_positive(
                    &spectrum.eigenvectors[start],
                    &spectrum.eigenvectors[start + 1],
                );
                (min > POSITIVITY_FLOOR).then_some(v)
            }
            _ => Some([1.0 / 3f64.sqrt(); 3]),
        };
        if let Some(psi) = psi {
            out.push(EigenCandidate {
                lambda,
                psi,
                cluster: (start, end),
            });
        }
        start = end + 1;
    }
    out
}

/// Flips the sign of `v` so its largest-magnitude component is positive,
/// then accepts it only if every component clears the positivity floor.
fn oriented_positive(v: &Vec3) -> Option<Vec3> {
    let mut w = *v;
    let lead = (0..3)
        .max_by(|&a, &b| w[a].abs().partial_cmp(&w[b].abs()).expect("finite"))
        .expect("nonempty");
    if w[lead] < 0.0 {
        for x in &mut w {
            *x = -*x;
        }
    }
    w.iter().all(|&x| x > POSITIVITY_FLOOR).then_some(w)
}

/// Over unit vectors `v(t) = u cos t + w sin t` of a two-dimensional
/// eigenplane, maximizes the smallest component. The optimum of a minimum
/// of three sinusoids sits either where two components are equal or at a
/// single component's crest, so nine candidate angles are exhaustive.
fn maximin_positive(u: &Vec3, w: &Vec3) -> (Vec3, f64) {
    let mut angles = [0.0_f64; 9];
    let mut n = 0;
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let t = f64::atan2(-(u[i] - u[j]), w[i] - w[j]);
        angles[n] = t;
        angles[n + 1] = t + core::f64::consts::PI;
        n += 2;
    }
    for k in 0..3 {
        angles[n] = f64::atan2(w[k], u[k]);
        n += 1;
    }
    let mut best = ([0.0; 3], f64::NEG_INFINITY);
    for &t in &angles {
        let (s, c) = (t.sin(), t.cos());
        let v = [
            u[0] * c + w[0] * s,
            u[1] * c + w[1] * s,
            u[2] * c + w[2] * s,
        ];
        let min = v[0].min(v[1]).min(v[2]);
        if min > best.1 {
            best = (v, min);
        }
    }
    best
}

/// A positive eigenpair translated into sphere coordinates.
///
/// Azimuths use the gauge `φ1 = 0` with the bodies ordered clockwise seen
/// from the north pole (`sin(φᵢ − φⱼ) > 0` for the pairs `(1,2)`, `(2,3)`,
/// `(3,1)`), which fixes the configuration uniquely up to rotation.
#[derive(Debug, Clone, PartialEq)]
pub struct Translation {
    pub lambda: f64,
    pub psi: Vec3,
    pub cos_theta: [f64; 3],
    pub theta: [f64; 3],
    pub phi: [f64; 3],
    /// Recovered `[cos(φ1−φ2), cos(φ2−φ3), cos(φ3−φ1)]`.
    pub cos_phi_diff: [f64; 3],
    /// `|cos(δ12 + δ23) − cos δ31|`, the consistency defect of the azimuth
    /// chain against the third arc.
    pub closure_residual: f64,
}

impl Translation {
    /// Attaches a rotation rate and radius to the translated positions.
    pub fn configuration(&self, omega: f64, radius: f64) -> Result<Configuration, GeometryError> {
        Configuration::new(self.theta, self.phi, omega, radius)
    }
}

/// Translates a positive eigenpair of `J` into colatitudes and azimuths
/// realizing the shape.
///
/// Fails with [`InertiaError::InvalidTranslation`] when `λ ≥ M`, when a
/// colatitude cosine leaves `(0, 1)`, when an azimuth difference cosine
/// leaves `[−1, 1]`, or when the azimuth chain around the triangle fails to
/// close on the third arc to within [`CLOSURE_TOL`]. Eigenpairs of actual
/// rigid rotators never trip these; candidates from shapes that merely have
/// a positive eigenvector can.
pub fn translate(
    masses: &Masses,
    shape: &Shape,
    lambda: f64,
    psi: &Vec3,
) -> Result<Translation, InertiaError> {
    let total = masses.total();
    let remainder = total - lambda;
    if remainder <= 0.0 {
        return Err(InertiaError::InvalidTranslation);
    }
    let root = remainder.sqrt();
    let m = masses.array();
    let mut cos_theta = [0.0; 3];
    let mut sin_theta = [0.0; 3];
    let mut theta = [0.0; 3];
    for k in 0..3 {
        let c = psi[k] * root / m[k].sqrt();
        if c <= 0.0 || c >= 1.0 {
            return Err(InertiaError::InvalidTranslation);
        }
        cos_theta[k] = c;
        sin_theta[k] = (1.0 - c * c).sqrt();
        theta[k] = c.acos();
    }

    let cosines = shape.cosines();
    let mut delta = [0.0; 3];
    let mut cos_delta = [0.0; 3];
    for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
        let c = (cosines[a] - cos_theta[*i] * cos_theta[*j]) / (sin_theta[*i] * sin_theta[*j]);
        if c.abs() > 1.0 + 1e-9 {
            return Err(InertiaError::InvalidTranslation);
        }
        cos_delta[a] = c.clamp(-1.0, 1.0);
        delta[a] = cos_delta[a].acos();
    }

    let chain = delta[0] + delta[1];
    let closure_residual = (chain.cos() - cos_delta[2]).abs();
    if closure_residual > CLOSURE_TOL || chain < core::f64::consts::PI - 1e-6 {
        return Err(InertiaError::InvalidTranslation);
    }

    let phi = [
        0.0,
        crate::geometry::wrap_two_pi(core::f64::consts::TAU - delta[0]),
        crate::geometry::wrap_two_pi(core::f64::consts::TAU - chain),
    ];
    Ok(Translation {
        lambda,
        psi: *psi,
        cos_theta,
        theta,
        phi,
        cos_phi_diff: cos_delta,
        closure_residual,
    })
}

/// Which eigenvalue of `J` to translate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EigenChoice {
    /// Try every positive candidate and keep the one whose azimuth chain
    /// closes most precisely.
    Auto,
    /// Use the candidate containing the eigenvalue of this index
    /// (ascending order).
    Index(usize),
}

/// Full translation pipeline: build `J`, decompose, pick a positive
/// eigenpair, translate, and attach `omega` and `radius`.
pub fn shape_to_configuration(
    masses: &Masses,
    shape: &Shape,
    omega: f64,
    radius: f64,
    choice: EigenChoice,
) -> Result<(Translation, Configuration), InertiaError> {
    if !shape.triangle_feasible() {
        return Err(InertiaError::Geometry(GeometryError::InfeasibleShape));
    }
    let spectrum = eigen_decompose(&JTensor::new(masses, shape));
    let candidates = positive_candidates(&spectrum);
    if candidates.is_empty() {
        return Err(InertiaError::NoPositiveEigenvector);
    }
    let translated = match choice {
        EigenChoice::Auto => candidates
            .iter()
            .filter_map(|c| translate(masses, shape, c.lambda, &c.psi).ok())
            .min_by(|a, b| {
                a.closure_residual
                    .partial_cmp(&b.closure_residual)
                    .expect("finite residuals")
            })
            .ok_or(InertiaError::InvalidTranslation)?,
        EigenChoice::Index(i) => {
            let c = candidates
                .iter()
                .find(|c| c.cluster.0 <= i && i <= c.cluster.1)
                .ok_or(InertiaError::NoPositiveEigenvector)?;
            translate(masses, shape, c.lambda, &c.psi)?
        }
    };
    let config = translated.configuration(omega, radius)?;
    Ok((translated, config))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn masses(a: f64, b: f64, c: f64) -> Masses {
        Masses::new(a, b, c).unwrap()
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn expanded_polynomial_matches_matrix_route() {
        let cases = [
            (masses(1.0, 1.0, 1.0), Shape::new(1.0, 1.1, 0.9).unwrap()),
            (masses(1.0, 2.0, 3.0), Shape::new(2.0, 1.5, 1.0).unwrap()),
            (
                masses(0.3, 5.0, 1.7),
                Shape::equilateral(FRAC_PI_2).unwrap(),
            ),
        ];
        for (m, s) in cases {
            let direct = linalg::char_poly_coeffs(JTensor::new(&m, &s).matrix());
            let expanded = characteristic_polynomial(&m, &s);
            for k in 0..3 {
                assert!(
                    rel_close(direct[k], expanded[k], 1e-13),
                    "coefficient {k}: {} vs {}",
                    direct[k],
                    expanded[k]
                );
            }
        }
    }

    #[test]
    fn inertia_and_j_share_the_characteristic_polynomial() {
        let cases = [
            (masses(1.0, 1.0, 1.0), Shape::new(1.0, 1.1, 0.9).unwrap()),
            (masses(2.0, 0.5, 1.25), Shape::new(0.8, 1.9, 1.4).unwrap()),
            (
                masses(1.0, 1.0, 100.0),
                Shape::new(1.3, 0.97, 0.97).unwrap(),
            ),
        ];
        for (m, s) in cases {
            let i = inertia_temporal(&m, &s).unwrap();
            let pi_coeffs = linalg::char_poly_coeffs(i.matrix());
            let pj_coeffs = characteristic_polynomial(&m, &s);
            for k in 0..3 {
                assert!(
                    rel_close(pi_coeffs[k], pj_coeffs[k], 1e-10),
                    "coefficient {k}: {} vs {}",
                    pi_coeffs[k],
                    pj_coeffs[k]
                );
            }
            assert!(rel_close(i.trace(), 2.0 * m.total(), 1e-13));
        }
    }

    #[test]
    fn massless_second_body_zeroes_its_inertia_cross_terms() {
        let m = Masses { m: [1.3, 0.0, 0.7] };
        let s = Shape::new(1.0, 1.1, 0.9).unwrap();
        let i = inertia_temporal(&m, &s).unwrap();
        assert!(i.matrix()[0][1].abs() < 1e-15);
        assert!(i.matrix()[1][2].abs() < 1e-15);
    }

    #[test]
    fn spectrum_satisfies_eigen_equation_and_bounds() {
        let cases = [
            (masses(1.0, 1.0, 1.0), Shape::equilateral(PI / 3.0).unwrap()),
            (masses(1.0, 2.0, 3.0), Shape::new(2.0, 1.5, 1.0).unwrap()),
            (
                masses(1.0, 1.0, 100.0),
                Shape::new(1.3, 0.973, 0.973).unwrap(),
            ),
        ];
        for (m, s) in cases {
            let j = JTensor::new(&m, &s);
            let spec = eigen_decompose(&j);
            let norm = linalg::frobenius(j.matrix());
            for i in 0..3 {
                let jv = linalg::mat_vec(j.matrix(), &spec.eigenvectors[i]);
                for d in 0..3 {
                    let r = jv[d] - spec.eigenvalues[i] * spec.eigenvectors[i][d];
                    assert!(r.abs() <= 1e-12 * norm);
                }
                assert!(spec.eigenvalues[i] >= -1e-12 * m.total());
                assert!(spec.eigenvalues[i] <= m.total() * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn right_equilateral_gives_the_symmetric_candidate() {
        let m = masses(1.0, 1.0, 1.0);
        let s = Shape::equilateral(FRAC_PI_2).unwrap();
        let spec = eigen_decompose(&JTensor::new(&m, &s));
        assert_eq!(spec.degenerate, [true, true, true]);
        let cands = positive_candidates(&spec);
        assert_eq!(cands.len(), 1);
        for k in 0..3 {
            assert!(rel_close(cands[0].psi[k], 1.0 / 3f64.sqrt(), 1e-14));
        }
        assert!(rel_close(cands[0].lambda, 2.0, 1e-13));
    }

    #[test]
    fn zero_component_eigenvector_is_not_positive() {
        let m = masses(1.0, 1.0, 1.0);
        let s = Shape::isosceles(1.2, FRAC_PI_2).unwrap();
        let spec = eigen_decompose(&JTensor::new(&m, &s));
        for c in positive_candidates(&spec) {
            assert!(
                c.psi.iter().all(|&x| x > POSITIVITY_FLOOR),
                "candidate {:?} leaked a zero component",
                c.psi
            );
        }
    }

    #[test]
    fn maximin_finds_the_symmetric_direction() {
        let u = [1.0 / 2f64.sqrt(), 1.0 / 2f64.sqrt(), 0.0];
        let w = [0.0, 0.0, 1.0];
        let (v, min) = maximin_positive(&u, &w);
        assert!(rel_close(min, 1.0 / 3f64.sqrt(), 1e-12));
        for x in v {
            assert!(rel_close(x, 1.0 / 3f64.sqrt(), 1e-12));
        }
    }

    #[test]
    fn translation_of_the_right_equilateral() {
        let m = masses(1.0, 1.0, 1.0);
        let s = Shape::equilateral(FRAC_PI_2).unwrap();
        let psi = [1.0 / 3f64.sqrt(); 3];
        let t = translate(&m, &s, 2.0, &psi).unwrap();
        for k in 0..3 {
            assert!(rel_close(t.cos_theta[k], 1.0 / 3f64.sqrt(), 1e-14));
        }
        for a in 0..3 {
            assert!(rel_close(t.cos_phi_diff[a], -0.5, 1e-13));
        }
        assert!(rel_close(t.phi[1], 4.0 * PI / 3.0, 1e-13));
        assert!(rel_close(t.phi[2], 2.0 * PI / 3.0, 1e-13));
        assert!(t.closure_residual < 1e-13);
    }

    #[test]
    fn translated_positions_keep_the_vertical_axis_principal() {
        let m = masses(1.0, 2.0, 3.0);
        let s = Shape::new(1.9, 1.5, 1.2).unwrap();
        let (t, config) = shape_to_configuration(&m, &s, 1.0, 1.0, EigenChoice::Auto).unwrap();
        let mm = m.array();
        let mut x = 0.0;
        let mut y = 0.0;
        let mut norm = 0.0;
        for k in 0..3 {
            let w = mm[k] * t.theta[k].sin() * t.theta[k].cos();
            x += w * t.phi[k].cos();
            y += w * t.phi[k].sin();
            norm += mm[k];
        }
        assert!((x * x + y * y).sqrt() <= 1e-9 * norm);
        let back = config.shape().unwrap();
        for a in 0..3 {
            assert!(rel_close(back.arcs()[a], s.arcs()[a], 1e-9));
        }
        let weighted: f64 = (0..3).map(|k| mm[k] * t.cos_theta[k].powi(2)).sum();
        assert!(rel_close(weighted, m.total() - t.lambda, 1e-12));
    }

    #[test]
    fn infeasible_shape_is_rejected_up_front() {
        let m = masses(1.0, 1.0, 1.0);
        let s = Shape::new(PI / 6.0, PI / 20.0, PI / 20.0).unwrap();
        assert_eq!(
            shape_to_configuration(&m, &s, 1.0, 1.0, EigenChoice::Auto),
            Err(InertiaError::Geometry(GeometryError::InfeasibleShape))
        );
    }

    #[test]
    fn eigen_index_choice_respects_clusters() {
        let m = masses(1.0, 1.0, 1.0);
        let s = Shape::equilateral(PI / 3.0).unwrap();
        let spec = eigen_decompose(&JTensor::new(&m, &s));
        let cands = positive_candidates(&spec);
        assert_eq!(cands.len(), 1);
        let positive_index = cands[0].cluster.0;
        assert!(
            shape_to_configuration(&m, &s, 1.0, 1.0, EigenChoice::Index(positive_index)).is_ok()
        );
    }
}
