//! Pairwise interaction laws on the sphere.
//!
//! A law is expressed as a function `U` of the squared Euclidean chord
//! distance `D²` between two bodies; the pair `(i, j)` contributes
//! `mᵢ mⱼ U(D²ᵢⱼ)` to the force function. Everything downstream only needs
//! `U` and its derivative `U′(D²)`, and a law is *attractive* where
//! `U′(D²) < 0`.
//!
//! For laws defined through the arc angle, such as the cotangent law, the
//! chord and arc pictures are related by `D² = 2R²(1 − cos σ)`; the module
//! exposes both forms so they can be checked against each other.

use core::f64::consts::PI;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

/// Failures when evaluating an interaction law.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialError {
    /// The law diverges at this squared chord distance (coincident or
    /// antipodal bodies), or the distance is outside the geometric range.
    Singular { d2: f64 },
    /// The sphere radius was zero, negative, or not finite.
    InvalidRadius(f64),
}

impl fmt::Display for PotentialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PotentialError::Singular { d2 } => {
                write!(f, "interaction law is singular at squared chord {d2}")
            }
            PotentialError::InvalidRadius(r) => {
                write!(f, "sphere radius must be positive, got {r}")
            }
        }
    }
}

impl core::error::Error for PotentialError {}

/// A pairwise interaction law `U(D²)` on a sphere of fixed radius.
pub trait PairPotential {
    /// Radius of the sphere the law lives on.
    fn radius(&self) -> f64;

    /// `U(D²)` at squared chord distance `d2`.
    fn evaluate(&self, d2: f64) -> Result<f64, PotentialError>;

    /// `U′(D²)`, the derivative with respect to the squared chord distance.
    fn derivative(&self, d2: f64) -> Result<f64, PotentialError>;
}

fn check_radius(radius: f64) -> Result<f64, PotentialError> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(PotentialError::InvalidRadius(radius));
    }
    Ok(radius)
}

/// The cotangent law `U = cot(σ)/R`, the spherical analogue of the inverse
/// distance: its gradient flow matches planar gravity in the small-triangle
/// limit and it is singular both at collision (`σ = 0`) and at the antipode
/// (`σ = π`).
///
/// In chord form, with `s² = D²/(4R²)` and `c² = 1 − s²`:
/// `U = (1 − 2s²) / (2R·s·c)` and `U′(D²) = −1 / (16 R³ (s²c²)^{3/2})`,
/// which is negative everywhere, so the law is attractive on the whole
/// sphere.
#[derive(Debug, Clone, Copy)]
pub struct Cotangent {
    radius: f64,
}

impl Cotangent {
    pub fn new(radius: f64) -> Result<Self, PotentialError> {
        Ok(Cotangent {
            radius: check_radius(radius)?,
        })
    }
}

impl PairPotential for Cotangent {
    fn radius(&self) -> f64 {
        self.radius
    }

    fn evaluate(&self, d2: f64) -> Result<f64, PotentialError> {
        let s2 = chord_fractions(d2, self.radius)?;
        let c2 = 1.0 - s2;
        Ok((1.0 - 2.0 * s2) / (2.0 * self.radius * (s2 * c2).sqrt()))
    }

    fn derivative(&self, d2: f64) -> Result<f64, PotentialError> {
        let s2 = chord_fractions(d2, self.radius)?;
        let c2 = 1.0 - s2;
        Ok(-1.0 / (16.0 * self.radius.powi(3) * (s2 * c2).powf(1.5)))
    }
}

/// Validates `0 < D² < 4R²` and returns `s² = D²/(4R²)`.
fn chord_fractions(d2: f64, radius: f64) -> Result<f64, PotentialError> {
    let max = 4.0 * radius * radius;
    if !d2.is_finite() || d2 <= 0.0 || d2 >= max {
        return Err(PotentialError::Singular { d2 });
    }
    Ok(d2 / max)
}

/// `cot(σ)/R` evaluated directly from the arc angle. Same law as
/// [`Cotangent::evaluate`], kept as an independent route for cross-checks.
pub fn cotangent_of_arc(sigma: f64, radius: f64) -> Result<f64, PotentialError> {
    let radius = check_radius(radius)?;
    let s = sigma.sin();
    if !sigma.is_finite() || sigma <= 0.0 || sigma >= PI || s <= 0.0 {
        return Err(PotentialError::Singular {
            d2: crate::geometry::chord_squared_from_arc(sigma, radius),
        });
    }
    Ok(sigma.cos() / (s * radius))
}

/// `U′(D²) = −1/(2R³ sin³σ)` for the cotangent law, from the arc angle.
/// Same quantity as [`Cotangent::derivative`], kept as an independent route.
pub fn cotangent_derivative_of_arc(sigma: f64, radius: f64) -> Result<f64, PotentialError> {
    let radius = check_radius(radius)?;
    let s = sigma.sin();
    if !sigma.is_finite() || sigma <= 0.0 || sigma >= PI || s <= 0.0 {
        return Err(PotentialError::Singular {
            d2: crate::geometry::chord_squared_from_arc(sigma, radius),
        });
    }
    Ok(-1.0 / (2.0 * radius.powi(3) * s.powi(3)))
}

/// A smooth attractive test law, `U = −D²` with constant `U′(D²) = −1`.
///
/// It has no singularities and no preferred scale, which makes it useful
/// for exercising the parts of the pipeline that must not depend on the
/// specific interaction law.
#[derive(Debug, Clone, Copy)]
pub struct HarmonicTest {
    radius: f64,
}

impl HarmonicTest {
    pub fn new(radius: f64) -> Result<Self, PotentialError> {
        Ok(HarmonicTest {
            radius: check_radius(radius)?,
        })
    }
}

impl PairPotential for HarmonicTest {
    fn radius(&self) -> f64 {
        self.radius
    }

    fn evaluate(&self, d2: f64) -> Result<f64, PotentialError> {
        if !d2.is_finite() || d2 < 0.0 {
            return Err(PotentialError::Singular { d2 });
        }
        Ok(-d2)
    }

    fn derivative(&self, d2: f64) -> Result<f64, PotentialError> {
        if !d2.is_finite() || d2 < 0.0 {
            return Err(PotentialError::Singular { d2 });
        }
        Ok(-1.0)
    }
}

/// Sign-flips an interaction law, turning an attractive law repulsive and
/// vice versa.
#[derive(Debug, Clone, Copy)]
pub struct Negated<P>(pub P);

impl<P: PairPotential> PairPotential for Negated<P> {
    fn radius(&self) -> f64 {
        self.0.radius()
    }

    fn evaluate(&self, d2: f64) -> Result<f64, PotentialError> {
        Ok(-self.0.evaluate(d2)?)
    }

    fn derivative(&self, d2: f64) -> Result<f64, PotentialError> {
        Ok(-self.0.derivative(d2)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::chord_squared_from_arc;
    use core::f64::consts::PI;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn cotangent_reference_values() {
        let p = Cotangent::new(1.0).unwrap();
        let at = |sigma: f64| chord_squared_from_arc(sigma, 1.0);
        assert!(rel_close(p.evaluate(at(PI / 4.0)).unwrap(), 1.0, 1e-14));
        assert!((p.evaluate(at(PI / 2.0)).unwrap()).abs() < 1e-15);
        assert!(rel_close(p.derivative(at(PI / 6.0)).unwrap(), -4.0, 1e-13));
        assert!(rel_close(p.derivative(at(PI / 2.0)).unwrap(), -0.5, 1e-14));
    }

    #[test]
    fn chord_and_arc_routes_agree() {
        let radius = 1.7;
        let p = Cotangent::new(radius).unwrap();
        for sigma in [0.05, 0.7, 1.3, 2.2, 3.0] {
            let d2 = chord_squared_from_arc(sigma, radius);
            assert!(rel_close(
                p.evaluate(d2).unwrap(),
                cotangent_of_arc(sigma, radius).unwrap(),
                1e-12
            ));
            assert!(rel_close(
                p.derivative(d2).unwrap(),
                cotangent_derivative_of_arc(sigma, radius).unwrap(),
                1e-12
            ));
        }
    }

    #[test]
    fn derivative_matches_finite_difference_through_the_chain() {
        let radius = 1.0;
        let p = Cotangent::new(radius).unwrap();
        let h = 1e-6;
        for sigma in [PI / 4.0, 1.0, 2.0] {
            let up = p
                .evaluate(chord_squared_from_arc(sigma + h, radius))
                .unwrap();
            let dn = p
                .evaluate(chord_squared_from_arc(sigma - h, radius))
                .unwrap();
            let fd = (up - dn) / (2.0 * h);
            let chain = p.derivative(chord_squared_from_arc(sigma, radius)).unwrap()
                * 2.0
                * radius
                * radius
                * sigma.sin();
            assert!(
                rel_close(fd, chain, 1e-7),
                "chain-rule mismatch at sigma = {sigma}: {fd} vs {chain}"
            );
        }
    }

    #[test]
    fn singular_endpoints_are_rejected() {
        let p = Cotangent::new(2.0).unwrap();
        assert!(matches!(
            p.evaluate(0.0),
            Err(PotentialError::Singular { .. })
        ));
        assert!(matches!(
            p.evaluate(16.0),
            Err(PotentialError::Singular { .. })
        ));
        assert!(matches!(
            p.derivative(-0.1),
            Err(PotentialError::Singular { .. })
        ));
        assert!(matches!(
            cotangent_of_arc(0.0, 1.0),
            Err(PotentialError::Singular { .. })
        ));
        assert!(matches!(
            cotangent_derivative_of_arc(PI, 1.0),
            Err(PotentialError::Singular { .. })
        ));
    }

    #[test]
    fn invalid_radius_is_rejected() {
        assert!(matches!(
            Cotangent::new(0.0),
            Err(PotentialError::InvalidRadius(_))
        ));
        assert!(matches!(
            HarmonicTest::new(-1.0),
            Err(PotentialError::InvalidRadius(_))
        ));
        assert!(matches!(
            cotangent_of_arc(1.0, f64::NAN),
            Err(PotentialError::InvalidRadius(_))
        ));
    }

    #[test]
    fn harmonic_test_law() {
        let p = HarmonicTest::new(3.0).unwrap();
        assert_eq!(p.evaluate(2.5).unwrap(), -2.5);
        assert_eq!(p.derivative(100.0).unwrap(), -1.0);
        assert!(p.evaluate(-1.0).is_err());
    }

    #[test]
    fn negation_flips_both_values() {
        let p = Negated(Cotangent::new(1.0).unwrap());
        let d2 = chord_squared_from_arc(PI / 6.0, 1.0);
        assert!(rel_close(p.derivative(d2).unwrap(), 4.0, 1e-13));
        let d2q = chord_squared_from_arc(PI / 4.0, 1.0);
        assert!(rel_close(p.evaluate(d2q).unwrap(), -1.0, 1e-14));
    }
}
