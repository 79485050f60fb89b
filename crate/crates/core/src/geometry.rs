//! Masses, triangle shapes, and their placement on the sphere.
//!
//! A shape is the unordered triangle of mutual arc angles `(σ12, σ23, σ31)`
//! measured from the sphere's center. Everything downstream consumes either
//! the shape itself or a concrete placement of it: colatitudes `θk` from the
//! north pole and azimuths `φk` around the vertical axis.

use core::f64::consts::{PI, TAU};
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

/// Spherical law of cosines: the arc angle between two points given in
/// colatitude/azimuth coordinates. The cosine is clamped before `acos`, so
/// roundoff at antipodal or coincident points cannot produce NaN.
pub fn arc_angle(theta_i: f64, phi_i: f64, theta_j: f64, phi_j: f64) -> f64 {
    let c = theta_i.cos() * theta_j.cos() + theta_i.sin() * theta_j.sin() * (phi_i - phi_j).cos();
    c.clamp(-1.0, 1.0).acos()
}

/// Euclidean chord length `2 R sin(σ/2)` subtended by an arc angle.
pub fn chord_from_arc(sigma: f64, radius: f64) -> f64 {
    2.0 * radius * (0.5 * sigma).sin()
}

/// Squared chord length `2 R² (1 − cos σ)`.
///
/// Computed as `(2 R sin(σ/2))²` so it degrades gracefully for tiny arcs.
pub fn chord_squared_from_arc(sigma: f64, radius: f64) -> f64 {
    let d = chord_from_arc(sigma, radius);
    d * d
}

/// Reduce an angle to `[0, 2π)`.
pub(crate) fn wrap_two_pi(x: f64) -> f64 {
    let y = x % TAU;
    if y < 0.0 {
        y + TAU
    } else {
        y
    }
}

/// Validation failures for masses, shapes, and configurations.
#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    /// A mass was zero, negative, or not finite.
    NonPositiveMass(f64),
    /// An arc angle fell outside `(0, π]` or was not finite.
    ArcOutOfRange(f64),
    /// The three arcs violate the spherical triangle inequalities.
    InfeasibleShape,
    /// The shape cannot be placed: a vertex angle is undefined because the
    /// triangle is degenerate or impossible.
    DegeneratePlacement,
    /// A colatitude fell outside the open interval `(0, π)`.
    ColatitudeOutOfRange(f64),
    /// The sphere radius was zero, negative, or not finite.
    NonPositiveRadius(f64),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NonPositiveMass(m) => write!(f, "mass must be positive, got {m}"),
            GeometryError::ArcOutOfRange(s) => {
                write!(f, "arc angle must lie in (0, pi], got {s}")
            }
            GeometryError::InfeasibleShape => {
                write!(f, "arc angles violate the spherical triangle inequalities")
            }
            GeometryError::DegeneratePlacement => {
                write!(f, "shape is degenerate and has no well-defined placement")
            }
            GeometryError::ColatitudeOutOfRange(t) => {
                write!(f, "colatitude must lie strictly inside (0, pi), got {t}")
            }
            GeometryError::NonPositiveRadius(r) => {
                write!(f, "sphere radius must be positive, got {r}")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

/// Three positive point masses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Masses {
    pub(crate) m: [f64; 3],
}

impl Masses {
    /// Validates that every mass is finite and strictly positive.
    pub fn new(m1: f64, m2: f64, m3: f64) -> Result<Self, GeometryError> {
        for m in [m1, m2, m3] {
            if !m.is_finite() || m <= 0.0 {
                return Err(GeometryError::NonPositiveMass(m));
            }
        }
        Ok(Masses { m: [m1, m2, m3] })
    }

    /// The masses as `[m1, m2, m3]`.
    pub fn array(&self) -> [f64; 3] {
        self.m
    }

    /// Total mass `m1 + m2 + m3`.
    pub fn total(&self) -> f64 {
        self.m[0] + self.m[1] + self.m[2]
    }
}

/// A triangle of mutual arc angles, stored as `[σ12, σ23, σ31]`.
///
/// The constructor checks only the per-arc range `(0, π]`; whether the three
/// arcs close into a spherical triangle is a separate query
/// ([`Shape::triangle_feasible`]) so that callers can report infeasible
/// inputs instead of never seeing them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shape {
    sigma: [f64; 3],
}

/// Index pairs `(i, j)` of the arcs in storage order `σ12, σ23, σ31`.
pub const ARC_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

impl Shape {
    /// Validates each arc angle into `(0, π]`.
    pub fn new(sigma12: f64, sigma23: f64, sigma31: f64) -> Result<Self, GeometryError> {
        for s in [sigma12, sigma23, sigma31] {
            if !s.is_finite() || s <= 0.0 || s > PI {
                return Err(GeometryError::ArcOutOfRange(s));
            }
        }
        Ok(Shape {
            sigma: [sigma12, sigma23, sigma31],
        })
    }

    /// All three arcs equal.
    pub fn equilateral(sigma: f64) -> Result<Self, GeometryError> {
        Shape::new(sigma, sigma, sigma)
    }

    /// Isosceles with base `σ12` and equal legs `σ23 = σ31 = leg`.
    pub fn isosceles(sigma12: f64, leg: f64) -> Result<Self, GeometryError> {
        Shape::new(sigma12, leg, leg)
    }

    pub fn sigma12(&self) -> f64 {
        self.sigma[0]
    }

    pub fn sigma23(&self) -> f64 {
        self.sigma[1]
    }

    pub fn sigma31(&self) -> f64 {
        self.sigma[2]
    }

    /// The arcs as `[σ12, σ23, σ31]`.
    pub fn arcs(&self) -> [f64; 3] {
        self.sigma
    }

    /// The arc cosines as `[cos σ12, cos σ23, cos σ31]`.
    pub fn cosines(&self) -> [f64; 3] {
        [
            self.sigma[0].cos(),
            self.sigma[1].cos(),
            self.sigma[2].cos(),
        ]
    }

    /// Whether the arcs satisfy the spherical triangle inequalities:
    /// each arc at most the sum of the other two, and the perimeter at most
    /// `2π`. Boundary cases (collinear triangles) count as feasible.
    pub fn triangle_feasible(&self) -> bool {
        let [a, b, c] = self.sigma;
        a <= b + c && b <= c + a && c <= a + b && a + b + c <= TAU
    }

    /// Whether the triangle is collinear to within `tol`: one arc equals the
    /// sum of the other two, or the perimeter closes a full great circle.
    pub fn is_collinear(&self, tol: f64) -> bool {
        let [a, b, c] = self.sigma;
        (a - (b + c)).abs() <= tol
            || (b - (c + a)).abs() <= tol
            || (c - (a + b)).abs() <= tol
            || (a + b + c - TAU).abs() <= tol
    }
}

/// Positions of the three bodies on the unit sphere, colatitude/azimuth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    pub theta: [f64; 3],
    pub phi: [f64; 3],
}

impl Placement {
    /// Recovers the triangle of mutual arcs from the positions.
    ///
    /// Fails with [`GeometryError::ArcOutOfRange`] if two bodies coincide.
    pub fn shape(&self) -> Result<Shape, GeometryError> {
        let mut s = [0.0; 3];
        for (a, (i, j)) in ARC_PAIRS.iter().enumerate() {
            s[a] = arc_angle(self.theta[*i], self.phi[*i], self.theta[*j], self.phi[*j]);
        }
        Shape::new(s[0], s[1], s[2])
    }

    /// Cartesian unit vectors of the three bodies.
    pub fn unit_vectors(&self) -> [[f64; 3]; 3] {
        let mut u = [[0.0; 3]; 3];
        for k in 0..3 {
            let (st, ct) = (self.theta[k].sin(), self.theta[k].cos());
            let (sp, cp) = (self.phi[k].sin(), self.phi[k].cos());
            u[k] = [st * cp, st * sp, ct];
        }
        u
    }
}

/// Places a shape on the unit sphere in a canonical frame: body 3 at the
/// north pole, body 1 on the `φ = 0` meridian at colatitude `σ31`, body 2 at
/// colatitude `σ23` and azimuth `α ∈ [0, π]` chosen so the remaining arc
/// comes out as `σ12`.
///
/// Fails with [`GeometryError::DegeneratePlacement`] when the vertex angle
/// at body 3 is undefined: a leg arc equal to `π` puts a body at the south
/// pole, and an infeasible shape pushes `cos α` outside `[−1, 1]`.
pub fn temporal_placement(shape: &Shape) -> Result<Placement, GeometryError> {
    let [s12, s23, s31] = shape.arcs();
    let denom = s31.sin() * s23.sin();
    if s23 >= PI || s31 >= PI || denom <= 0.0 {
        return Err(GeometryError::DegeneratePlacement);
    }
    let cos_alpha = (s12.cos() - s31.cos() * s23.cos()) / denom;
    if cos_alpha.abs() > 1.0 + 1e-12 {
        return Err(GeometryError::DegeneratePlacement);
    }
    let alpha = cos_alpha.clamp(-1.0, 1.0).acos();
    Ok(Placement {
        theta: [s31, s23, 0.0],
        phi: [0.0, alpha, 0.0],
    })
}

/// A rigidly rotating configuration: positions, a common rotation rate about
/// the vertical axis, and the sphere radius.
///
/// Colatitudes are restricted to the open interval `(0, π)` because the
/// coordinate chart degenerates at the poles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Configuration {
    pub theta: [f64; 3],
    pub phi: [f64; 3],
    pub omega: f64,
    pub radius: f64,
}

impl Configuration {
    /// Validates colatitudes into `(0, π)`, normalizes azimuths into
    /// `[0, 2π)`, and requires a positive radius.
    pub fn new(
        theta: [f64; 3],
        phi: [f64; 3],
        omega: f64,
        radius: f64,
    ) -> Result<Self, GeometryError> {
        for t in theta {
            if !t.is_finite() || t <= 0.0 || t >= PI {
                return Err(GeometryError::ColatitudeOutOfRange(t));
            }
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(GeometryError::NonPositiveRadius(radius));
        }
        let mut p = [0.0; 3];
        for k in 0..3 {
            if !phi[k].is_finite() {
                return Err(GeometryError::ArcOutOfRange(phi[k]));
            }
            p[k] = wrap_two_pi(phi[k]);
        }
        Ok(Configuration {
            theta,
            phi: p,
            omega,
            radius,
        })
    }

    /// The positions without rotation rate or radius.
    pub fn placement(&self) -> Placement {
        Placement {
            theta: self.theta,
            phi: self.phi,
        }
    }

    /// The triangle of mutual arcs spanned by the configuration.
    pub fn shape(&self) -> Result<Shape, GeometryError> {
        self.placement().shape()
    }

    /// Cartesian unit vectors of the three bodies.
    pub fn unit_vectors(&self) -> [[f64; 3]; 3] {
        self.placement().unit_vectors()
    }
}
