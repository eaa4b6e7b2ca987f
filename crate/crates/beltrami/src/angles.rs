//! True hyperbolic angles on the disk.
//!
//! The map from the hyperbolic plane to the disk preserves angles only at the
//! centre. These operations recover the true angle between geodesic
//! directions from their Euclidean data: the coordinate-curve angle, the
//! slope form `tan(alpha) = a (n - m) w / [(1 + mn) a^2 - (v - mu)(v - nu)]`,
//! its inclination form in terms of the Euclidean angle between the chords,
//! and the angle of parallelism `cot(theta) = sinh(rho/R)`.

use std::f64::consts::PI;

use crate::disk::{DiskPoint, ModelParams};
use crate::error::{Error, Result};

/// Direction of a chord as its inclination to the `u`-axis, in `[0, pi)`.
///
/// Vertical chords are representable (inclination `pi/2`) even though they
/// have no finite slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordDirection {
    inclination: f64,
}

impl ChordDirection {
    pub fn new(angle: f64) -> Self {
        let mut t = angle % PI;
        if t < 0.0 {
            t += PI;
        }
        ChordDirection { inclination: t }
    }

    /// Inclination of the line through two points.
    pub fn from_points(p: (f64, f64), q: (f64, f64)) -> Self {
        Self::new((q.1 - p.1).atan2(q.0 - p.0))
    }

    pub fn inclination(&self) -> f64 {
        self.inclination
    }

    /// `tan(inclination)`, or `None` for a vertical chord.
    pub fn slope(&self) -> Option<f64> {
        if (self.inclination - PI / 2.0).abs() <= f64::EPSILON * 4.0 {
            None
        } else {
            Some(self.inclination.tan())
        }
    }
}

fn guard_interior(p: &DiskPoint, params: &ModelParams) -> Result<()> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    Ok(())
}

/// Angle between the coordinate curves `u = const` and `v = const` at `p`,
/// returned as `(cos, sin, theta)`:
/// `cos = uv / sqrt((a^2-u^2)(a^2-v^2))`, `sin = a w / sqrt(...)`.
pub fn coordinate_curve_angle(p: &DiskPoint, params: &ModelParams) -> Result<(f64, f64, f64)> {
    guard_interior(p, params)?;
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let denom = ((a2 - u * u) * (a2 - v * v)).sqrt();
    let cos = u * v / denom;
    let sin = params.a * p.w() / denom;
    Ok((cos, sin, sin.atan2(cos)))
}

/// True angle at `p` between geodesic directions of slopes `m` and `n`.
///
/// Evaluated through `atan2` of the numerator and denominator so the result
/// covers `(0, pi)`, obtuse angles included. Vertical directions have no
/// slope; use [`chord_angle_map`] for those.
pub fn tangent_angle(p: &DiskPoint, m: f64, n: f64, params: &ModelParams) -> Result<f64> {
    guard_interior(p, params)?;
    if (m - n).abs() <= params.tol.root_tol * (1.0 + m.abs() + n.abs()) {
        return Err(Error::EqualDirections);
    }
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let num = params.a * (n - m) * p.w();
    let den = (1.0 + m * n) * a2 - (v - m * u) * (v - n * u);
    Ok(num.atan2(den).abs())
}

/// Shared core of the inclination form: `tan(alpha) = a w sin(alpha') /
/// [a^2 cos(alpha') - (v cos mu - u sin mu)(v cos nu - u sin nu)]` with
/// `alpha' = nu - mu`, evaluated by `atan2` so the full range `(0, pi)` is
/// reachable. Applied to ray directions this yields the true angle between
/// the rays.
fn inclination_angle(p: &DiskPoint, mu: f64, nu: f64, params: &ModelParams) -> Result<f64> {
    guard_interior(p, params)?;
    if (nu - mu).sin().abs() <= params.tol.root_tol {
        return Err(Error::EqualDirections);
    }
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let alpha_e = nu - mu;
    let num = params.a * p.w() * alpha_e.sin();
    let den = a2 * alpha_e.cos() - (v * mu.cos() - u * mu.sin()) * (v * nu.cos() - u * nu.sin());
    Ok(num.atan2(den).abs())
}

// Representative of the chord direction with nonnegative u-component (the
// representative that has the chord's slope as its tangent), in (-pi/2, pi/2].
fn slope_ray(inclination: f64) -> f64 {
    let mut t = inclination % PI;
    if t > PI / 2.0 {
        t -= PI;
    } else if t <= -PI / 2.0 {
        t += PI;
    }
    t
}

/// True angle at `p` between chords of inclinations `mu` and `nu` to the
/// `u`-axis.
///
/// Inclinations are directions of lines, taken mod `pi`; the angle is the one
/// between the chords' slope directions, so the result agrees with
/// [`tangent_angle`] at `m = tan(mu)`, `n = tan(nu)` whenever both slopes are
/// finite, and covers vertical chords (inclination `pi/2`) exactly. For the
/// angle between specific rays (triangle interior angles), see [`ray_angle`].
pub fn chord_angle_map(p: &DiskPoint, mu: f64, nu: f64, params: &ModelParams) -> Result<f64> {
    inclination_angle(p, slope_ray(mu), slope_ray(nu), params)
}

/// True angle at `p` between two ray directions (full-circle inclinations).
///
/// Same formula as [`chord_angle_map`] without the reduction mod `pi`, so an
/// obtuse opening between the rays stays obtuse.
pub fn ray_angle(p: &DiskPoint, mu: f64, nu: f64, params: &ModelParams) -> Result<f64> {
    inclination_angle(p, mu, nu, params)
}

/// Angle of parallelism for a perpendicular of hyperbolic length `rho`:
/// `theta = arccot(sinh(rho/R))`, strictly between 0 and `pi/2`.
pub fn angle_of_parallelism(rho: f64, params: &ModelParams) -> Result<f64> {
    if rho.is_nan() || rho <= 0.0 {
        return Err(Error::NonpositiveDistance);
    }
    Ok((1.0 / (rho / params.r).sinh()).atan())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::make_disk_point;
    use crate::geodesy::dist_from_origin;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    const ATANH_HALF: f64 = 0.5493061443340548;

    fn unit() -> ModelParams {
        ModelParams::unit()
    }

    #[test]
    fn coordinate_curves_orthogonal_on_axes() {
        let params = unit();
        let p = make_disk_point(0.0, 0.7, &params).unwrap();
        let (cos, _, theta) = coordinate_curve_angle(&p, &params).unwrap();
        assert_eq!(cos, 0.0);
        assert_abs_diff_eq!(theta, FRAC_PI_2, epsilon = 1e-15);

        let p = make_disk_point(0.5, 0.0, &params).unwrap();
        let (_, _, theta) = coordinate_curve_angle(&p, &params).unwrap();
        assert_abs_diff_eq!(theta, FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn coordinate_curve_angle_off_axis() {
        let params = unit();
        let p = make_disk_point(0.5, 0.5, &params).unwrap();
        let (cos, sin, _) = coordinate_curve_angle(&p, &params).unwrap();
        assert_relative_eq!(cos, 1.0 / 3.0, max_relative = 1e-14);
        assert_abs_diff_eq!(cos * cos + sin * sin, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn tangent_angle_at_center_is_euclidean() {
        let params = unit();
        let o = make_disk_point(0.0, 0.0, &params).unwrap();
        assert_abs_diff_eq!(
            tangent_angle(&o, 0.0, 1.0, &params).unwrap(),
            FRAC_PI_4,
            epsilon = 1e-15
        );
    }

    #[test]
    fn vertical_chord_orthogonal_to_diameter() {
        let params = unit();
        let p = make_disk_point(0.5, 0.0, &params).unwrap();
        // slope form as a limit of steep slopes
        let steep = tangent_angle(&p, 0.0, 1e9, &params).unwrap();
        assert_abs_diff_eq!(steep, FRAC_PI_2, epsilon = 1e-8);
        // inclination form handles the vertical chord exactly
        let exact = chord_angle_map(&p, 0.0, FRAC_PI_2, &params).unwrap();
        assert_abs_diff_eq!(exact, FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn equal_directions_rejected() {
        let params = unit();
        let p = make_disk_point(0.1, 0.2, &params).unwrap();
        assert!(matches!(
            tangent_angle(&p, 0.7, 0.7, &params),
            Err(Error::EqualDirections)
        ));
        assert!(matches!(
            chord_angle_map(&p, 0.7, 0.7, &params),
            Err(Error::EqualDirections)
        ));
    }

    #[test]
    fn chord_angle_at_center_is_euclidean() {
        let params = unit();
        let o = make_disk_point(0.0, 0.0, &params).unwrap();
        assert_abs_diff_eq!(
            chord_angle_map(&o, 0.3, 1.1, &params).unwrap(),
            0.8,
            epsilon = 1e-14
        );
    }

    #[test]
    fn chord_angle_vanishes_toward_boundary() {
        let params = unit();
        // fixed chord pair, evaluation point sliding to the boundary
        let mut last = f64::INFINITY;
        for &u in &[0.9, 0.99, 0.999, 0.99999] {
            let p = make_disk_point(u, 0.0, &params).unwrap();
            let alpha = chord_angle_map(&p, 0.2, 1.0, &params).unwrap();
            assert!(alpha < last);
            last = alpha;
        }
        assert!(last < 1e-2);
    }

    #[test]
    fn obtuse_angles_preserved() {
        // non-conformality witness: an angle pi/2 at (0.5, 0) maps well away
        // from pi/2 under both conventions; the ray form keeps the obtuse
        // opening, the chord form reports its supplement
        let params = unit();
        let p = make_disk_point(0.5, 0.0, &params).unwrap();
        let rays = ray_angle(&p, FRAC_PI_4, 3.0 * FRAC_PI_4, &params).unwrap();
        assert_relative_eq!(rays, 1.714143895700262, max_relative = 1e-13);
        let chords = chord_angle_map(&p, FRAC_PI_4, 3.0 * FRAC_PI_4, &params).unwrap();
        assert_relative_eq!(
            chords,
            std::f64::consts::PI - 1.714143895700262,
            max_relative = 1e-12
        );
        assert!((rays - FRAC_PI_2).abs() > 1e-3);
        assert!((chords - FRAC_PI_2).abs() > 1e-3);
    }

    #[test]
    fn ray_and_chord_angles_are_supplementary() {
        let params = unit();
        let p = make_disk_point(0.2, -0.5, &params).unwrap();
        // one ray flipped: ray angle becomes the supplement, chord angle is
        // unchanged
        let a_rays = ray_angle(&p, 0.4, 2.9, &params).unwrap();
        let a_flip = ray_angle(&p, 0.4, 2.9 - std::f64::consts::PI, &params).unwrap();
        assert_abs_diff_eq!(a_rays + a_flip, std::f64::consts::PI, epsilon = 1e-13);
        let c = chord_angle_map(&p, 0.4, 2.9, &params).unwrap();
        let c_flip = chord_angle_map(&p, 0.4, 2.9 - std::f64::consts::PI, &params).unwrap();
        assert_abs_diff_eq!(c, c_flip, epsilon = 1e-14);
    }

    #[test]
    fn forms_agree_on_finite_slopes() {
        let params = unit();
        let p = make_disk_point(0.3, -0.4, &params).unwrap();
        let (mu, nu) = (0.25, 1.9);
        let a1 = chord_angle_map(&p, mu, nu, &params).unwrap();
        let a2 = tangent_angle(&p, mu.tan(), nu.tan(), &params).unwrap();
        assert_abs_diff_eq!(a1, a2, epsilon = 1e-12);
    }

    #[test]
    fn chord_angle_symmetric() {
        let params = unit();
        let p = make_disk_point(0.3, 0.1, &params).unwrap();
        let a1 = chord_angle_map(&p, 0.4, 2.2, &params).unwrap();
        let a2 = chord_angle_map(&p, 2.2, 0.4, &params).unwrap();
        assert_eq!(a1, a2);
    }

    #[test]
    fn parallelism_examples() {
        let params = unit();
        assert_abs_diff_eq!(
            angle_of_parallelism(ATANH_HALF, &params).unwrap(),
            FRAC_PI_3,
            epsilon = 1e-14
        );
        // Euclidean limit
        assert_abs_diff_eq!(
            angle_of_parallelism(1e-9, &params).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-8
        );
        assert_relative_eq!(
            angle_of_parallelism(5.0, &params).unwrap(),
            0.0134756900688456,
            max_relative = 1e-13
        );
        assert!(matches!(
            angle_of_parallelism(0.0, &params),
            Err(Error::NonpositiveDistance)
        ));
    }

    #[test]
    fn parallelism_agrees_with_lobachevsky_form() {
        let params = unit();
        for i in 0..100 {
            let rho = 1e-6 * (50.0f64 / 1e-6).powf(i as f64 / 99.0);
            let theta = angle_of_parallelism(rho, &params).unwrap();
            let lobachevsky = 2.0 * (-rho / params.r).exp().atan();
            assert_abs_diff_eq!(theta, lobachevsky, epsilon = 1e-13);
        }
    }

    #[test]
    fn parallelism_matches_boundary_construction() {
        // foot B at Euclidean radius r on a diameter, chord perpendicular at
        // B, radius drawn to the chord's ideal endpoint S: the Euclidean
        // angle SOB at the centre is the angle of parallelism for OB
        let params = unit();
        for &r in &[0.2, 0.5, 0.8, 0.95] {
            let geometric = (1.0f64 - r * r).sqrt().atan2(r);
            let rho = dist_from_origin(r, &params).unwrap();
            assert_abs_diff_eq!(
                angle_of_parallelism(rho, &params).unwrap(),
                geometric,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn chord_direction_slope() {
        let d = ChordDirection::new(FRAC_PI_2);
        assert!(d.slope().is_none());
        let d = ChordDirection::from_points((0.0, 0.0), (1.0, 1.0));
        assert_abs_diff_eq!(d.slope().unwrap(), 1.0, epsilon = 1e-15);
        // direction is a line property: reversed points give the same inclination
        let r = ChordDirection::from_points((1.0, 1.0), (0.0, 0.0));
        assert_abs_diff_eq!(r.inclination(), d.inclination(), epsilon = 1e-15);
    }
}
