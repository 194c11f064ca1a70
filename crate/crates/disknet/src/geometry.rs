//! Poincaré disk primitives.
//!
//! Points live strictly inside the unit disk and are stored in Cartesian
//! coordinates; polar views are derived on demand. Angles are reported in
//! [0, 2π).

use crate::{Error, Result};
use std::f64::consts::TAU;

/// A point strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPoint {
    x: f64,
    y: f64,
}

impl HyperbolicPoint {
    /// Construct from Cartesian coordinates; the Euclidean norm must be < 1.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::numeric(format!(
                "hyperbolic point must be finite, got ({x}, {y})"
            )));
        }
        if x * x + y * y >= 1.0 {
            return Err(Error::numeric(format!(
                "hyperbolic point must lie inside the unit disk, got ({x}, {y})"
            )));
        }
        Ok(HyperbolicPoint { x, y })
    }

    pub fn origin() -> Self {
        HyperbolicPoint { x: 0.0, y: 0.0 }
    }

    /// Construct from a radius in [0, 1) and an angle in radians.
    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        if !r.is_finite() || !theta.is_finite() {
            return Err(Error::numeric(format!(
                "polar coordinates must be finite, got (r = {r}, theta = {theta})"
            )));
        }
        if !(0.0..1.0).contains(&r) {
            return Err(Error::numeric(format!(
                "polar radius must lie in [0, 1), got {r}"
            )));
        }
        Ok(HyperbolicPoint {
            x: r * theta.cos(),
            y: r * theta.sin(),
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Euclidean norm, i.e. the radial coordinate.
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// (radius, angle) with the angle normalized into [0, 2π).
    pub fn to_polar(&self) -> (f64, f64) {
        (self.norm(), normalize_angle(self.y.atan2(self.x)))
    }

    pub fn coords(&self) -> [f64; 2] {
        [self.x, self.y]
    }
}

/// Map an angle into [0, 2π).
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Smaller of the two arc gaps between two angles, in [0, π].
pub fn angular_separation(a: f64, b: f64) -> f64 {
    let d = (normalize_angle(a) - normalize_angle(b)).abs();
    d.min(TAU - d)
}

/// Geodesic distance in the Poincaré disk.
///
/// Computed as arcosh(1 + t) via log1p so that nearby points do not lose
/// precision to cancellation.
pub fn poincare_distance(u: &HyperbolicPoint, v: &HyperbolicPoint) -> f64 {
    let dx = u.x - v.x;
    let dy = u.y - v.y;
    let sq = dx * dx + dy * dy;
    let au = 1.0 - (u.x * u.x + u.y * u.y);
    let av = 1.0 - (v.x * v.x + v.y * v.y);
    let t = 2.0 * sq / (au * av);
    (t + (t * (t + 2.0)).sqrt()).ln_1p()
}

/// Hyperbolic inner product of two points in polar form:
/// 4 · artanh(r_x) · artanh(r_y) · cos(θ_x − θ_y).
pub fn hyperbolic_inner_product(x: &HyperbolicPoint, y: &HyperbolicPoint) -> f64 {
    let (rx, tx) = x.to_polar();
    let (ry, ty) = y.to_polar();
    4.0 * rx.atanh() * ry.atanh() * (tx - ty).cos()
}

/// Pull an arbitrary finite point back into the open disk.
///
/// Points with norm ≥ 1 − epsilon are rescaled onto the circle of radius
/// 1 − epsilon; everything else passes through unchanged.
pub fn project_into_disk(p: [f64; 2], epsilon: f64) -> Result<HyperbolicPoint> {
    if !p[0].is_finite() || !p[1].is_finite() {
        return Err(Error::numeric(format!(
            "cannot project non-finite point ({}, {})",
            p[0], p[1]
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::numeric(format!(
            "projection epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let max_r = 1.0 - epsilon;
    let norm = p[0].hypot(p[1]);
    if norm < max_r {
        return HyperbolicPoint::new(p[0], p[1]);
    }
    let mut scale = max_r / norm;
    // One ulp of slack can put the rescaled norm above the cap; nudge down.
    while (p[0] * scale).hypot(p[1] * scale) > max_r {
        scale *= 1.0 - f64::EPSILON;
    }
    HyperbolicPoint::new(p[0] * scale, p[1] * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn distance_origin_to_itself_is_zero() {
        let o = HyperbolicPoint::origin();
        assert_eq!(poincare_distance(&o, &o), 0.0);
    }

    #[test]
    fn distance_from_origin_matches_artanh_form() {
        // d(0, p) = 2 artanh(|p|); at |p| = 0.5 that is ln 3.
        let o = HyperbolicPoint::origin();
        let p = HyperbolicPoint::new(0.5, 0.0).unwrap();
        let d = poincare_distance(&o, &p);
        assert!(close(d, 2.0 * 0.5f64.atanh(), 1e-12));
        assert!(close(d, 3.0f64.ln(), 1e-12));

        for k in 1..99 {
            let r = k as f64 / 100.0;
            let q = HyperbolicPoint::new(0.0, r).unwrap();
            assert!(close(poincare_distance(&o, &q), 2.0 * r.atanh(), 1e-10));
        }
    }

    #[test]
    fn distance_across_a_diameter() {
        let a = HyperbolicPoint::new(0.9, 0.0).unwrap();
        let b = HyperbolicPoint::new(-0.9, 0.0).unwrap();
        let d = poincare_distance(&a, &b);
        assert!(close(d, 4.0 * 0.9f64.atanh(), 1e-10));
        assert!(close(d, 5.8889, 5e-5));
    }

    #[test]
    fn distance_is_symmetric_and_zero_only_on_diagonal() {
        let a = HyperbolicPoint::new(0.3, -0.4).unwrap();
        let b = HyperbolicPoint::new(-0.1, 0.7).unwrap();
        assert_eq!(poincare_distance(&a, &b), poincare_distance(&b, &a));
        assert!(poincare_distance(&a, &b) > 0.0);
        assert_eq!(poincare_distance(&a, &a), 0.0);
    }

    #[test]
    fn distance_is_stable_for_near_identical_points() {
        let a = HyperbolicPoint::new(0.4, 0.2).unwrap();
        let b = HyperbolicPoint::new(0.4 + 1e-13, 0.2).unwrap();
        let d = poincare_distance(&a, &b);
        assert!(d > 0.0 && d < 1e-11);
    }

    #[test]
    fn polar_round_trip() {
        let p = HyperbolicPoint::new(0.0, -0.3).unwrap();
        let (r, theta) = p.to_polar();
        assert!(close(r, 0.3, 1e-15));
        assert!(close(theta, 1.5 * PI, 1e-12));
        let q = HyperbolicPoint::from_polar(r, theta).unwrap();
        assert!(close(p.x(), q.x(), 1e-12));
        assert!(close(p.y(), q.y(), 1e-12));
    }

    #[test]
    fn angles_normalize_into_the_unit_circle() {
        assert!(close(normalize_angle(-FRAC_PI_2), 1.5 * PI, 1e-12));
        assert!(close(normalize_angle(2.0 * TAU + 0.25), 0.25, 1e-12));
        assert_eq!(normalize_angle(-1e-20), 0.0);
        assert!(close(angular_separation(0.1, TAU - 0.1), 0.2, 1e-12));
        assert!(close(angular_separation(1.0, 2.5), 1.5, 1e-12));
    }

    #[test]
    fn inner_product_of_a_point_with_itself() {
        let x = HyperbolicPoint::from_polar(0.5, 0.0).unwrap();
        let got = hyperbolic_inner_product(&x, &x);
        let want = 4.0 * 0.5f64.atanh() * 0.5f64.atanh();
        assert!(close(got, want, 1e-12));
        assert!(close(got, 1.20695, 5e-5));
    }

    #[test]
    fn inner_product_vanishes_at_right_angles() {
        let x = HyperbolicPoint::from_polar(0.5, 0.0).unwrap();
        let y = HyperbolicPoint::from_polar(0.7, FRAC_PI_2).unwrap();
        assert!(hyperbolic_inner_product(&x, &y).abs() < 1e-15);
    }

    #[test]
    fn projection_caps_the_norm() {
        let p = project_into_disk([1.2, 0.0], 1e-5).unwrap();
        assert!(close(p.x(), 0.99999, 1e-12));
        assert_eq!(p.y(), 0.0);
        assert!(p.norm() <= 1.0 - 1e-5);
    }

    #[test]
    fn projection_leaves_interior_points_alone() {
        let p = project_into_disk([0.2, -0.1], 1e-5).unwrap();
        assert_eq!(p.coords(), [0.2, -0.1]);
        let o = project_into_disk([0.0, 0.0], 1e-5).unwrap();
        assert_eq!(o.coords(), [0.0, 0.0]);
    }

    #[test]
    fn projection_rejects_bad_input() {
        assert!(project_into_disk([f64::NAN, 0.0], 1e-5).is_err());
        assert!(project_into_disk([f64::INFINITY, 0.0], 1e-5).is_err());
        assert!(project_into_disk([0.1, 0.1], 0.0).is_err());
    }

    #[test]
    fn constructors_reject_points_outside_the_disk() {
        assert!(HyperbolicPoint::new(1.0, 0.0).is_err());
        assert!(HyperbolicPoint::new(0.8, 0.8).is_err());
        assert!(HyperbolicPoint::from_polar(1.0, 0.0).is_err());
        assert!(HyperbolicPoint::from_polar(-0.1, 0.0).is_err());
        assert!(HyperbolicPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn triangle_inequality_on_a_grid() {
        let pts: Vec<HyperbolicPoint> = [-0.8f64, -0.35, 0.0, 0.4, 0.75]
            .iter()
            .flat_map(|&x| {
                [-0.5f64, 0.0, 0.55]
                    .iter()
                    .map(move |&y| HyperbolicPoint::new(x * 0.7, y * 0.7).unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    let lhs = poincare_distance(a, c);
                    let rhs = poincare_distance(a, b) + poincare_distance(b, c);
                    assert!(lhs <= rhs + 1e-9);
                }
            }
        }
    }
}
