//! The area-preserving quadrupole boundary
//! r(phi) = (1 + eps cos 2phi) / sqrt(1 + eps^2/2)
//! together with its differential geometry and discretization into flat
//! boundary elements (midpoints, outward unit normals, arc-length weights).
//!
//! The prefactor keeps the enclosed area equal to pi for every deformation,
//! so the mean radius at eps = 0 sets the length unit.

use nalgebra::Vector2;

use crate::error::{Error, Result};

/// Upper end of the deformation window the solver accepts. Below this the
/// radius stays positive and the boundary star-shaped, so the radial
/// inside/outside test used by the field reconstruction is valid.
pub const MAX_EPSILON: f64 = 0.5;

/// Smallest boundary element count accepted by [`discretize_boundary`].
pub const MIN_ELEMENTS: usize = 16;

/// Shape of the cavity: deformation parameter plus refractive index.
///
/// The refractive index only rescales the wavenumber (k -> n k) for a closed
/// cavity and defaults to 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShapeParams {
    epsilon: f64,
    refractive_index: f64,
}

impl ShapeParams {
    /// Quadrupole with deformation `epsilon` and refractive index 1.
    pub fn new(epsilon: f64) -> Result<Self> {
        Self::with_index(epsilon, 1.0)
    }

    pub fn with_index(epsilon: f64, refractive_index: f64) -> Result<Self> {
        if !epsilon.is_finite() || !(0.0..MAX_EPSILON).contains(&epsilon) {
            return Err(Error::Config(format!(
                "epsilon must lie in [0, {MAX_EPSILON}), got {epsilon}"
            )));
        }
        if !refractive_index.is_finite() || refractive_index <= 0.0 {
            return Err(Error::Config(format!(
                "refractive_index must be > 0, got {refractive_index}"
            )));
        }
        Ok(Self {
            epsilon,
            refractive_index,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn refractive_index(&self) -> f64 {
        self.refractive_index
    }

    /// Area-preserving prefactor 1/sqrt(1 + eps^2/2).
    fn prefactor(&self) -> f64 {
        1.0 / (1.0 + 0.5 * self.epsilon * self.epsilon).sqrt()
    }

    /// Boundary radius r(phi).
    pub fn radius(&self, phi: f64) -> f64 {
        self.prefactor() * (1.0 + self.epsilon * (2.0 * phi).cos())
    }

    /// dr/dphi.
    pub fn radius_derivative(&self, phi: f64) -> f64 {
        -2.0 * self.prefactor() * self.epsilon * (2.0 * phi).sin()
    }

    /// Largest boundary radius, attained on the x axis.
    pub fn max_radius(&self) -> f64 {
        self.prefactor() * (1.0 + self.epsilon)
    }
}

/// Point on the boundary at parameter angle `phi`.
pub fn boundary_point(params: ShapeParams, phi: f64) -> Vector2<f64> {
    let r = params.radius(phi);
    Vector2::new(r * phi.cos(), r * phi.sin())
}

/// Tangent vector d/dphi of [`boundary_point`], outward unit normal, and the
/// parametric speed |dr/dphi| at `phi`.
pub fn boundary_derivatives(params: ShapeParams, phi: f64) -> (Vector2<f64>, Vector2<f64>, f64) {
    let r = params.radius(phi);
    let dr = params.radius_derivative(phi);
    let (sin, cos) = phi.sin_cos();
    let tangent = Vector2::new(dr * cos - r * sin, dr * sin + r * cos);
    let speed = tangent.norm();
    // phi increases counterclockwise, so the outward normal is the tangent
    // rotated by -90 degrees.
    let normal = Vector2::new(tangent.y / speed, -tangent.x / speed);
    (tangent, normal, speed)
}

/// Enclosed area by periodic trapezoid quadrature of (1/2) r^2 dphi.
///
/// The integrand is a trig polynomial of degree four, so the quadrature is
/// exact (to rounding) for any sample count above five; 64 keeps it obviously
/// safe.
pub fn enclosed_area(params: ShapeParams) -> f64 {
    let n = 64;
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let sum: f64 = (0..n)
        .map(|j| {
            let r = params.radius(j as f64 * step);
            r * r
        })
        .sum();
    0.5 * sum * step
}

/// Discretized boundary: element midpoints, outward unit normals and
/// arc-length weights, kept together with the shape they came from.
#[derive(Clone, Debug)]
pub struct BoundaryMesh {
    params: ShapeParams,
    points: Vec<Vector2<f64>>,
    normals: Vec<Vector2<f64>>,
    weights: Vec<f64>,
}

impl BoundaryMesh {
    pub fn params(&self) -> ShapeParams {
        self.params
    }

    pub fn epsilon(&self) -> f64 {
        self.params.epsilon()
    }

    pub fn points(&self) -> &[Vector2<f64>] {
        &self.points
    }

    pub fn normals(&self) -> &[Vector2<f64>] {
        &self.normals
    }

    /// Element arc lengths ds_j.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Perimeter as the sum of the element weights.
    pub fn perimeter(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn mean_element_length(&self) -> f64 {
        self.perimeter() / self.len() as f64
    }
}

/// Split the boundary into `elements` flat pieces at parameter angles
/// phi_j = (j + 1/2) 2 pi / M. Midpoint placement keeps the mesh symmetric
/// under the reflections of the shape; the weights carry the Jacobian
/// ds_j = |dr/dphi|(phi_j) * 2 pi / M.
pub fn discretize_boundary(params: ShapeParams, elements: usize) -> Result<BoundaryMesh> {
    if elements < MIN_ELEMENTS {
        return Err(Error::Config(format!(
            "element count must be at least {MIN_ELEMENTS}, got {elements}"
        )));
    }
    let step = 2.0 * std::f64::consts::PI / elements as f64;
    let mut points = Vec::with_capacity(elements);
    let mut normals = Vec::with_capacity(elements);
    let mut weights = Vec::with_capacity(elements);
    for j in 0..elements {
        let phi = (j as f64 + 0.5) * step;
        points.push(boundary_point(params, phi));
        let (_, normal, speed) = boundary_derivatives(params, phi);
        normals.push(normal);
        weights.push(speed * step);
    }
    Ok(BoundaryMesh {
        params,
        points,
        normals,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn circle_boundary_points() {
        let p = ShapeParams::new(0.0).unwrap();
        let a = boundary_point(p, 0.0);
        assert_abs_diff_eq!(a.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.y, 0.0, epsilon = 1e-15);
        let b = boundary_point(p, std::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(b.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b.y, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn deformed_boundary_point_on_axis() {
        // direct evaluation of the radius formula at eps = 0.1, phi = 0
        let p = ShapeParams::new(0.1).unwrap();
        let a = boundary_point(p, 0.0);
        assert_abs_diff_eq!(a.x, 1.1 / 1.005f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(a.x, 1.097_261, epsilon = 1e-6);
        assert_abs_diff_eq!(a.y, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn circle_normals_and_speed() {
        let p = ShapeParams::new(0.0).unwrap();
        let (_, n, speed) = boundary_derivatives(p, 0.0);
        assert_abs_diff_eq!(n.x, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(n.y, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(speed, 1.0, epsilon = 1e-14);
        for j in 0..17 {
            let phi = j as f64 * 0.37;
            let (_, n, _) = boundary_derivatives(p, phi);
            assert_abs_diff_eq!(n.x, phi.cos(), epsilon = 1e-14);
            assert_abs_diff_eq!(n.y, phi.sin(), epsilon = 1e-14);
        }
    }

    #[test]
    fn normals_are_unit_and_orthogonal() {
        let p = ShapeParams::new(0.1).unwrap();
        for j in 0..32 {
            let phi = j as f64 * 0.21 - 3.0;
            let (t, n, _) = boundary_derivatives(p, phi);
            assert!((n.norm() - 1.0).abs() <= 1e-12);
            assert!(n.dot(&t).abs() / t.norm() <= 1e-14);
            // outward: positive radial component for star-shaped boundaries
            let radial = boundary_point(p, phi).normalize();
            assert!(n.dot(&radial) > 0.0);
        }
    }

    #[test]
    fn area_is_pi_for_all_deformations() {
        for &eps in &[0.0, 0.091, 0.3, 0.49] {
            let p = ShapeParams::new(eps).unwrap();
            assert_abs_diff_eq!(enclosed_area(p), std::f64::consts::PI, epsilon = 1e-10);
        }
    }

    #[test]
    fn boundary_is_periodic_and_mirror_symmetric() {
        let p = ShapeParams::new(0.2).unwrap();
        for j in 0..13 {
            let phi = j as f64 * 0.47;
            let a = boundary_point(p, phi);
            let b = boundary_point(p, phi + 2.0 * std::f64::consts::PI);
            // cos/sin of phi + 2pi are not bitwise equal, but the radius
            // formula sees the same angle arithmetic to rounding
            assert_abs_diff_eq!(a.x, b.x, epsilon = 1e-12);
            assert_abs_diff_eq!(a.y, b.y, epsilon = 1e-12);
            let m = boundary_point(p, -phi);
            assert_abs_diff_eq!(a.x, m.x, epsilon = 1e-12);
            assert_abs_diff_eq!(a.y, -m.y, epsilon = 1e-12);
        }
    }

    #[test]
    fn circle_mesh_has_equal_weights_and_unit_points() {
        let p = ShapeParams::new(0.0).unwrap();
        let mesh = discretize_boundary(p, 100).unwrap();
        for &w in mesh.weights() {
            assert_abs_diff_eq!(w, 2.0 * std::f64::consts::PI / 100.0, epsilon = 1e-14);
        }
        let mesh64 = discretize_boundary(p, 64).unwrap();
        for pt in mesh64.points() {
            assert_abs_diff_eq!(pt.norm(), 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn mesh_weights_sum_to_perimeter() {
        // independent fine trapezoid quadrature of the perimeter integrand
        let p = ShapeParams::new(0.1).unwrap();
        let n = 100_000;
        let step = 2.0 * std::f64::consts::PI / n as f64;
        let perimeter: f64 = (0..n)
            .map(|j| {
                let phi = j as f64 * step;
                let r = p.radius(phi);
                let dr = p.radius_derivative(phi);
                (r * r + dr * dr).sqrt() * step
            })
            .sum();
        let mesh = discretize_boundary(p, 200).unwrap();
        assert_abs_diff_eq!(mesh.perimeter(), perimeter, epsilon = 1e-6);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ShapeParams::new(-0.01).is_err());
        assert!(ShapeParams::new(0.5).is_err());
        assert!(ShapeParams::with_index(0.1, 0.0).is_err());
        let p = ShapeParams::new(0.0).unwrap();
        assert!(discretize_boundary(p, 15).is_err());
    }
}
