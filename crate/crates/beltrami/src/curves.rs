//! The three circumference families: geodesic circles (interior centre),
//! equidistants (ultra-ideal centre, here the pole of the diameter `v = 0`),
//! and horocycles (ideal centre on the boundary).
//!
//! Each family carries its defining identity as a residual so sampled loci
//! can be checked against the closed form:
//!
//! ```text
//! circle      (a^2 - u u0 - v v0) / (w w0)      = cosh(rho/R)
//! equidistant v                                 = (a^2 - u^2)^{1/2} tanh(xi/R)
//! horocycle   (a^2 - u u0 - v v0) / w           = a e^{-rho/R}      (k = a)
//! ```

use std::f64::consts::TAU;

use crate::batch;
use crate::disk::{DiskPoint, IdealPoint, ModelParams};
use crate::error::{Error, Result};
use crate::geodesy::distance;
use crate::metric::ParametricCurve;

/// Circumference of a geodesic circle of hyperbolic radius `rho`:
/// `C = 2 pi R sinh(rho/R)`.
pub fn circumference(rho: f64, params: &ModelParams) -> f64 {
    TAU * params.r * (rho / params.r).sinh()
}

/// A geodesic circle: the locus at constant hyperbolic distance `rho` from an
/// interior centre.
#[derive(Debug, Clone, Copy)]
pub struct GeodesicCircle {
    pub center: DiskPoint,
    pub rho: f64,
    c_const: f64,
}

impl GeodesicCircle {
    pub fn new(center: DiskPoint, rho: f64, params: &ModelParams) -> Result<Self> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::NonpositiveDistance);
        }
        // integration constant of the orthogonal-system equation:
        // (a^2 - u u0 - v v0)/w = C on the locus, so C = w0 cosh(rho/R).
        // cosh never vanishes, so C cannot be zero for a real centre.
        let c_const = center.w() * (rho / params.r).cosh();
        Ok(GeodesicCircle {
            center,
            rho,
            c_const,
        })
    }

    /// The integration constant `C = w0 cosh(rho/R)`; never zero.
    pub fn c_const(&self) -> f64 {
        self.c_const
    }

    /// Dimensionless defect of the circle identity at `p`:
    /// `(a^2 - u u0 - v v0)/(w w0) - cosh(rho/R)`.
    pub fn residual(&self, p: &DiskPoint, params: &ModelParams) -> f64 {
        let lhs = (params.a * params.a - p.u() * self.center.u() - p.v() * self.center.v())
            / (p.w() * self.center.w());
        lhs - (self.rho / params.r).cosh()
    }

    /// Sample the locus; see [`circle_locus`].
    pub fn locus(&self, n: usize, params: &ModelParams) -> Result<Vec<DiskPoint>> {
        circle_locus(&self.center, self.rho, n, params)
    }
}

/// Sample `n` points of the geodesic circle around `center` by root-finding
/// along `n` evenly spaced Euclidean rays from the centre.
///
/// Hyperbolic distance is strictly increasing along each ray, so bisection
/// always converges; iteration stops when the bracket is below `root_tol * a`.
pub fn circle_locus(
    center: &DiskPoint,
    rho: f64,
    n: usize,
    params: &ModelParams,
) -> Result<Vec<DiskPoint>> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::NonpositiveDistance);
    }
    if n < 3 {
        return Err(Error::InsufficientSamples { needed: 3, got: n });
    }
    let (cu, cv) = center.coords();
    let center = *center;
    batch::try_map(n, move |k| {
        let theta = TAU * k as f64 / n as f64;
        let (dx, dy) = (theta.cos(), theta.sin());
        // chord exit parameter along the ray: |center + s d| = a
        let b = cu * dx + cv * dy;
        let c = params.a * params.a - (cu * cu + cv * cv);
        let s_max = c / (b + (b * b + c).sqrt());

        let reaches = |s: f64| -> Result<bool> {
            // beyond-boundary evaluation counts as past the target radius
            match params.disk_point(cu + s * dx, cv + s * dy) {
                Ok(p) => Ok(distance(&center, &p, params)? >= rho),
                Err(_) => Ok(true),
            }
        };
        let (mut lo, mut hi) = (0.0, s_max);
        // distance blows up toward s_max, so the upper end always brackets
        while hi - lo > params.tol.root_tol * params.a {
            let mid = 0.5 * (lo + hi);
            if reaches(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        params.disk_point(cu + 0.5 * (lo + hi) * dx, cv + 0.5 * (lo + hi) * dy)
    })
}

/// Left side of the orthogonal-system equation at `p` with displacement `dp`:
/// `E(u-u0)du + F(v-v0)du + F(u-u0)dv + G(v-v0)dv`.
///
/// Vanishes exactly when `dp` is tangent to the geodesic circle through `p`
/// centred at `center` -- the circles are orthogonal to their radii.
pub fn orthogonality_residual(
    center: &DiskPoint,
    p: &DiskPoint,
    dp: (f64, f64),
    params: &ModelParams,
) -> Result<f64> {
    let ff = crate::metric::fundamental_form(p, params)?;
    let (ru, rv) = (p.u() - center.u(), p.v() - center.v());
    let (du, dv) = dp;
    Ok(ff.e * ru * du + ff.f * rv * du + ff.f * ru * dv + ff.g * rv * dv)
}

/// The point at equidistant coordinates `(eta, xi)`: signed distance `eta`
/// along the base geodesic `v = 0`, then perpendicular offset `xi`:
/// `u = a tanh(eta/R)`, `v = a tanh(xi/R) / cosh(eta/R)`.
///
/// Always interior (`w = a / [cosh(eta/R) cosh(xi/R)] > 0`).
pub fn equidistant_point(eta: f64, xi: f64, params: &ModelParams) -> DiskPoint {
    let u = params.a * (eta / params.r).tanh();
    let v = params.a * (xi / params.r).tanh() / (eta / params.r).cosh();
    DiskPoint::new_unchecked(u, v, params.w_sq(u, v))
}

/// Equidistant coordinates of an interior point:
/// `eta = R atanh(u/a)`, `xi = R atanh(v / (a^2 - u^2)^{1/2})`.
/// Returns `(xi, eta)`. Exact inverse of [`equidistant_point`].
pub fn equidistant_coords(p: &DiskPoint, params: &ModelParams) -> Result<(f64, f64)> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    let eta = params.r * (p.u() / params.a).atanh();
    let k = (params.a * params.a - p.u() * p.u()).sqrt();
    let xi = params.r * (p.v() / k).atanh();
    Ok((xi, eta))
}

/// An equidistant curve: constant perpendicular offset `xi` from the diameter
/// `v = 0` (signed; the sign selects the side).
#[derive(Debug, Clone, Copy)]
pub struct Equidistant {
    pub xi: f64,
}

impl Equidistant {
    pub fn new(xi: f64) -> Self {
        Equidistant { xi }
    }

    /// Side of the base geodesic: `+1`, `-1`, or `0` on it.
    pub fn side(&self) -> i8 {
        if self.xi > 0.0 {
            1
        } else if self.xi < 0.0 {
            -1
        } else {
            0
        }
    }

    pub fn point_at(&self, eta: f64, params: &ModelParams) -> DiskPoint {
        equidistant_point(eta, self.xi, params)
    }

    /// Offset defect at `p`: measured `xi(p)` minus the curve's `xi`.
    pub fn residual(&self, p: &DiskPoint, params: &ModelParams) -> Result<f64> {
        let (xi, _) = equidistant_coords(p, params)?;
        Ok(xi - self.xi)
    }
}

/// Horocyclic coordinates of `p` for the ideal centre `ideal`, normalized so
/// the reference horocycle `rho = 0` passes through the origin (`k = a`):
/// `rho = -R log[(a^2 - u u0 - v v0)/(a w)]`,
/// `sigma = R (u0 v - u v0)/(a^2 - u u0 - v v0)`.
pub fn horocycle_coords(
    p: &DiskPoint,
    ideal: &IdealPoint,
    params: &ModelParams,
) -> Result<(f64, f64)> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    let (u0, v0) = ideal.coords(params);
    let denom = params.a * params.a - p.u() * u0 - p.v() * v0;
    if denom <= params.tol.boundary_eps {
        return Err(Error::AtIdealCenter);
    }
    let rho = -params.r * (denom / (params.a * p.w())).ln();
    let sigma = params.r * (u0 * p.v() - p.u() * v0) / denom;
    Ok((rho, sigma))
}

/// Inverse of [`horocycle_coords`]: the point at `(rho, sigma)` around the
/// given ideal centre.
pub fn horocycle_point(
    ideal: &IdealPoint,
    rho: f64,
    sigma: f64,
    params: &ModelParams,
) -> DiskPoint {
    // solved in the frame with the ideal centre at angle 0, then rotated
    let s = sigma / params.r;
    let b = (2.0 * rho / params.r).exp() + s * s;
    let u0 = params.a * (b - 1.0) / (b + 1.0);
    let v0 = 2.0 * params.a * s / (b + 1.0);
    let (sin, cos) = ideal.angle().sin_cos();
    let u = u0 * cos - v0 * sin;
    let v = u0 * sin + v0 * cos;
    DiskPoint::new_unchecked(u, v, params.w_sq(u, v))
}

/// A horocycle: ideal centre on the boundary plus the signed offset `rho`
/// from the reference horocycle through the origin.
#[derive(Debug, Clone, Copy)]
pub struct Horocycle {
    pub ideal_center: IdealPoint,
    pub rho_offset: f64,
}

impl Horocycle {
    pub fn new(ideal_center: IdealPoint, rho_offset: f64) -> Self {
        Horocycle {
            ideal_center,
            rho_offset,
        }
    }

    /// Defect of the defining identity at `p`:
    /// `(a^2 - u u0 - v v0)/w - a e^(-rho/R)`, in units of `a`.
    pub fn residual(&self, p: &DiskPoint, params: &ModelParams) -> f64 {
        let (u0, v0) = self.ideal_center.coords(params);
        let lhs = (params.a * params.a - p.u() * u0 - p.v() * v0) / p.w();
        lhs - params.a * (-self.rho_offset / params.r).exp()
    }

    pub fn point_at(&self, sigma: f64, params: &ModelParams) -> DiskPoint {
        horocycle_point(&self.ideal_center, self.rho_offset, sigma, params)
    }
}

// Default arc-position span (in units of R) for horocycle locus sampling: at
// |sigma| = 5R the locus has closed most of the gap to its ideal centre.
const SIGMA_SPAN: f64 = 5.0;

/// Sample `n` points of a horocycle with `sigma` sweeping `[-5R, 5R]`
/// symmetrically (so odd `n` includes `sigma = 0`).
pub fn horocycle_locus(
    ideal: &IdealPoint,
    rho_offset: f64,
    n: usize,
    params: &ModelParams,
) -> Vec<DiskPoint> {
    let span = SIGMA_SPAN * params.r;
    let ideal = *ideal;
    batch::map(n, move |k| {
        let sigma = if n == 1 {
            0.0
        } else {
            -span + 2.0 * span * k as f64 / (n - 1) as f64
        };
        horocycle_point(&ideal, rho_offset, sigma, params)
    })
}

/// Length of the concentric horocyclic arc a distance `tau` farther from the
/// reference one: `s2 = s1 e^(-tau/R)`.
pub fn horocycle_arc_ratio(s1: f64, tau: f64, params: &ModelParams) -> f64 {
    s1 * (-tau / params.r).exp()
}

/// Parametric origin-centred circle of hyperbolic radius `rho`, `t` in
/// `[0, 2pi]`, with analytic velocity.
pub fn circle_path(rho: f64, params: &ModelParams) -> ParametricCurve<'static> {
    let r = params.a * (rho / params.r).tanh();
    ParametricCurve::new(0.0, TAU, move |t| (r * t.cos(), r * t.sin()))
        .with_derivative(move |t| (-r * t.sin(), r * t.cos()))
}

/// Parametric equidistant at offset `xi`, parametrized by `eta` over
/// `[eta0, eta1]`, with analytic velocity.
pub fn equidistant_path(
    xi: f64,
    eta0: f64,
    eta1: f64,
    params: &ModelParams,
) -> ParametricCurve<'static> {
    let (a, r) = (params.a, params.r);
    let tx = (xi / r).tanh();
    ParametricCurve::new(eta0, eta1, move |eta| {
        (a * (eta / r).tanh(), a * tx / (eta / r).cosh())
    })
    .with_derivative(move |eta| {
        let c = (eta / r).cosh();
        (a / (r * c * c), -a * tx * (eta / r).sinh() / (r * c * c))
    })
}

/// Parametric horocycle at offset `rho`, parametrized by `sigma` over
/// `[sigma0, sigma1]`, with analytic velocity.
pub fn horocycle_path(
    ideal: IdealPoint,
    rho: f64,
    sigma0: f64,
    sigma1: f64,
    params: &ModelParams,
) -> ParametricCurve<'static> {
    let (a, r) = (params.a, params.r);
    let e2 = (2.0 * rho / r).exp();
    let (sin, cos) = ideal.angle().sin_cos();
    let rotate = move |x: f64, y: f64| (x * cos - y * sin, x * sin + y * cos);
    ParametricCurve::new(sigma0, sigma1, move |sigma| {
        let s = sigma / r;
        let b = e2 + s * s;
        rotate(a * (b - 1.0) / (b + 1.0), 2.0 * a * s / (b + 1.0))
    })
    .with_derivative(move |sigma| {
        let s = sigma / r;
        let b = e2 + s * s;
        let d = (b + 1.0) * (b + 1.0) * r;
        rotate(4.0 * a * s / d, 2.0 * a * (b + 1.0 - 2.0 * s * s) / d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::make_disk_point;
    use crate::metric::arc_length;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    const ATANH_HALF: f64 = 0.5493061443340548;

    fn unit() -> ModelParams {
        ModelParams::unit()
    }

    #[test]
    fn circumference_examples() {
        let params = unit();
        assert_eq!(circumference(0.0, &params), 0.0);
        assert_relative_eq!(
            circumference(ATANH_HALF, &params),
            3.6275987284684357, // 2 pi / sqrt 3
            max_relative = 1e-13
        );
        let wide = ModelParams::new(1.0, 3.0).unwrap();
        assert_relative_eq!(
            circumference(2.0, &wide),
            13.518118515432308,
            max_relative = 1e-13
        );
    }

    #[test]
    fn circumference_matches_quadrature() {
        let params = unit();
        for &rho in &[0.25, 0.5, 1.0, 2.0] {
            let len = arc_length(&circle_path(rho, &params), &params, 1e-9).unwrap();
            assert_abs_diff_eq!(len, circumference(rho, &params), epsilon = 1e-7);
        }
    }

    #[test]
    fn origin_circle_locus_is_euclidean_circle() {
        let params = unit();
        let center = make_disk_point(0.0, 0.0, &params).unwrap();
        let pts = circle_locus(&center, ATANH_HALF, 8, &params).unwrap();
        assert_eq!(pts.len(), 8);
        for p in &pts {
            assert_abs_diff_eq!(p.r_euclidean(), 0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn offcenter_locus_satisfies_circle_identity() {
        let params = unit();
        let center = make_disk_point(0.3, 0.0, &params).unwrap();
        let circle = GeodesicCircle::new(center, 0.5, &params).unwrap();
        assert!(circle.c_const() != 0.0);
        let pts = circle.locus(32, &params).unwrap();
        let mut min_e = f64::INFINITY;
        let mut max_e: f64 = 0.0;
        for p in &pts {
            assert!(circle.residual(p, &params).abs() < 1e-10);
            assert_abs_diff_eq!(distance(&center, p, &params).unwrap(), 0.5, epsilon = 1e-10);
            let e = (p.u() - 0.3).hypot(p.v());
            min_e = min_e.min(e);
            max_e = max_e.max(e);
        }
        // metric distortion: the Euclidean trace is not a Euclidean circle
        assert!(max_e - min_e > 1e-3);
    }

    #[test]
    fn locus_input_validation() {
        let params = unit();
        let center = make_disk_point(0.0, 0.0, &params).unwrap();
        assert!(circle_locus(&center, 0.5, 2, &params).is_err());
        assert!(circle_locus(&center, -1.0, 8, &params).is_err());
        assert!(GeodesicCircle::new(center, 0.0, &params).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let params = unit();
        let center = make_disk_point(0.0, 0.0, &params).unwrap();
        let p = make_disk_point(0.5, 0.0, &params).unwrap();
        let tangent = orthogonality_residual(&center, &p, (0.0, 1.0), &params).unwrap();
        assert_abs_diff_eq!(tangent, 0.0, epsilon = 1e-14);
        let radial = orthogonality_residual(&center, &p, (1.0, 0.0), &params).unwrap();
        assert!(radial.abs() > 0.1);
    }

    #[test]
    fn locus_tangents_are_orthogonal_to_radii() {
        // fourth-order tangent estimates from the sampled locus; the
        // orthogonality defect is compared against the same functional in
        // the (maximally non-tangent) radial direction
        let params = unit();
        let center = make_disk_point(0.3, 0.0, &params).unwrap();
        let n = 1024;
        let pts = circle_locus(&center, 0.5, n, &params).unwrap();
        for i in (0..n).step_by(37) {
            let at = |k: i32| &pts[((i as i32 + k).rem_euclid(n as i32)) as usize];
            let du = -at(2).u() + 8.0 * at(1).u() - 8.0 * at(-1).u() + at(-2).u();
            let dv = -at(2).v() + 8.0 * at(1).v() - 8.0 * at(-1).v() + at(-2).v();
            let norm = du.hypot(dv);
            let p = &pts[i];
            let tangent =
                orthogonality_residual(&center, p, (du / norm, dv / norm), &params).unwrap();
            let (ru, rv) = (p.u() - center.u(), p.v() - center.v());
            let rnorm = ru.hypot(rv);
            let radial =
                orthogonality_residual(&center, p, (ru / rnorm, rv / rnorm), &params).unwrap();
            assert!(
                tangent.abs() <= 1e-8 * radial.abs(),
                "{tangent} vs {radial}"
            );
        }
    }

    #[test]
    fn equidistant_point_examples() {
        let params = unit();
        assert_eq!(equidistant_point(0.0, 0.0, &params).coords(), (0.0, 0.0));

        let p = equidistant_point(0.0, 0.5, &params);
        assert_abs_diff_eq!(p.u(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(p.v(), 0.46211715726000974, max_relative = 1e-14);

        let p = equidistant_point(0.7, 0.5, &params);
        assert_relative_eq!(p.u(), 0.6043677771171636, max_relative = 1e-14);
        assert_relative_eq!(p.v(), 0.36817126234543585, max_relative = 1e-14);
        // w^2 = a^2 / (cosh^2(eta) cosh^2(xi))
        let w_expect = 1.0 / ((0.7f64.cosh() * 0.5f64.cosh()).powi(2));
        assert_relative_eq!(p.w_sq(), w_expect, max_relative = 1e-13);
    }

    #[test]
    fn equidistant_coords_round_trip() {
        let params = unit();
        let o = make_disk_point(0.0, 0.0, &params).unwrap();
        assert_eq!(equidistant_coords(&o, &params).unwrap(), (0.0, 0.0));

        let p = make_disk_point(0.0, 0.46211715726000974, &params).unwrap();
        let (xi, eta) = equidistant_coords(&p, &params).unwrap();
        assert_relative_eq!(xi, 0.5, max_relative = 1e-13);
        assert_abs_diff_eq!(eta, 0.0, epsilon = 1e-15);

        let p = equidistant_point(0.7, 0.5, &params);
        let (xi, eta) = equidistant_coords(&p, &params).unwrap();
        assert_abs_diff_eq!(xi, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(eta, 0.7, epsilon = 1e-12);
    }

    #[test]
    fn equidistant_residual_and_perpendicular_distance() {
        let params = unit();
        let eq = Equidistant::new(0.5);
        assert_eq!(eq.side(), 1);
        for &eta in &[-0.9, 0.0, 0.4, 1.3] {
            let p = eq.point_at(eta, &params);
            assert_abs_diff_eq!(eq.residual(&p, &params).unwrap(), 0.0, epsilon = 1e-12);
            // perpendicular hyperbolic distance to v = 0 is |xi|: the foot is
            // the base point at the same eta
            let foot = equidistant_point(eta, 0.0, &params);
            assert_abs_diff_eq!(distance(&foot, &p, &params).unwrap(), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn equidistant_arc_length_follows_cosh_law() {
        let params = unit();
        let path = equidistant_path(0.5, 0.0, 0.7, &params);
        let len = arc_length(&path, &params, 1e-10).unwrap();
        assert_abs_diff_eq!(len, 0.7 * 0.5f64.cosh(), epsilon = 1e-7);
        // xi = 0 is the base geodesic itself
        let base = equidistant_path(0.0, 0.0, 0.7, &params);
        assert_abs_diff_eq!(
            arc_length(&base, &params, 1e-10).unwrap(),
            0.7,
            epsilon = 1e-7
        );
    }

    #[test]
    fn horocycle_coords_examples() {
        let params = unit();
        let ideal = IdealPoint::new(0.0);
        let o = make_disk_point(0.0, 0.0, &params).unwrap();
        let (rho, sigma) = horocycle_coords(&o, &ideal, &params).unwrap();
        assert_eq!((rho, sigma), (0.0, 0.0));

        let p = make_disk_point(0.5, 0.0, &params).unwrap();
        let (rho, sigma) = horocycle_coords(&p, &ideal, &params).unwrap();
        assert_relative_eq!(rho, ATANH_HALF, max_relative = 1e-13);
        assert_abs_diff_eq!(sigma, 0.0, epsilon = 1e-15);

        let p = make_disk_point(0.0, 0.2, &params).unwrap();
        let (_, sigma) = horocycle_coords(&p, &ideal, &params).unwrap();
        assert_relative_eq!(sigma, 0.2, max_relative = 1e-14);
    }

    #[test]
    fn horocycle_point_round_trip() {
        let params = unit();
        let ideal = IdealPoint::new(1.1);
        for &(rho, sigma) in &[(0.0, 0.0), (0.3, -0.8), (-0.5, 2.0), (1.2, 0.4)] {
            let p = horocycle_point(&ideal, rho, sigma, &params);
            let (r2, s2) = horocycle_coords(&p, &ideal, &params).unwrap();
            assert_abs_diff_eq!(r2, rho, epsilon = 1e-12);
            assert_abs_diff_eq!(s2, sigma, epsilon = 1e-12);
        }
    }

    #[test]
    fn horocycle_locus_geometry() {
        let params = unit();
        let ideal = IdealPoint::new(0.0);
        let pts = horocycle_locus(&ideal, 0.0, 33, &params);
        // reference horocycle passes through the origin
        let through_origin = pts.iter().any(|p| p.r_euclidean() < 1e-12);
        assert!(through_origin);
        // residual of the defining identity vanishes on every sample
        let h = Horocycle::new(ideal, 0.0);
        for p in &pts {
            assert_abs_diff_eq!(h.residual(p, &params), 0.0, epsilon = 1e-12);
        }
        // tangency: distance to the ideal point decreases monotonically in |sigma|
        let gap = |p: &DiskPoint| (p.u() - 1.0).hypot(p.v());
        for i in 16..32 {
            assert!(gap(&pts[i + 1]) < gap(&pts[i]));
        }
        for i in 0..16 {
            assert!(gap(&pts[i + 1]) > gap(&pts[i]));
        }
    }

    #[test]
    fn horocycle_arc_lengths_decay() {
        let params = unit();
        let ideal = IdealPoint::new(0.0);
        let s0 = arc_length(
            &horocycle_path(ideal, 0.0, 0.0, 1.0, &params),
            &params,
            1e-10,
        )
        .unwrap();
        let s1 = arc_length(
            &horocycle_path(ideal, 2f64.ln(), 0.0, 1.0, &params),
            &params,
            1e-10,
        )
        .unwrap();
        assert_abs_diff_eq!(s0, 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(s1 / s0, 0.5, epsilon = 1e-7);
    }

    #[test]
    fn arc_ratio_examples() {
        let params = unit();
        assert_eq!(horocycle_arc_ratio(1.0, 0.0, &params), 1.0);
        assert_relative_eq!(
            horocycle_arc_ratio(1.0, 2f64.ln(), &params),
            0.5,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            horocycle_arc_ratio(2.5, -1.0, &params),
            6.7957045711476125,
            max_relative = 1e-14
        );
    }

    #[test]
    fn trichotomy_limits() {
        // circles with centres approaching the boundary converge to the
        // horocycle with that ideal centre -- on bounded regions (the far
        // arc always hugs the boundary instead). Measure the horocycle
        // residual on locus points within hyperbolic distance 1.5 of the
        // origin; it decreases monotonically as the centre closes in.
        let params = unit();
        let origin = make_disk_point(0.0, 0.0, &params).unwrap();
        let horocycle = Horocycle::new(IdealPoint::new(0.0), 0.0);
        let mut last = f64::INFINITY;
        for &delta in &[0.2, 0.1, 0.05, 0.02] {
            let center = make_disk_point(1.0 - delta, 0.0, &params).unwrap();
            let rho = crate::geodesy::dist_from_origin(1.0 - delta, &params).unwrap();
            let near: Vec<f64> = circle_locus(&center, rho, 256, &params)
                .unwrap()
                .iter()
                .filter(|p| distance(&origin, p, &params).unwrap() <= 1.5)
                .map(|p| horocycle.residual(p, &params).abs())
                .collect();
            assert!(near.len() > 4, "need samples near the origin");
            let worst = near.into_iter().fold(0.0f64, f64::max);
            assert!(worst < last, "residual should shrink: {worst} vs {last}");
            last = worst;
        }

        // equidistants collapse onto their polar line (the base geodesic
        // v = 0) as the offset vanishes
        let mut last = f64::INFINITY;
        for &xi in &[0.5, 0.2, 0.05, 0.01] {
            let eq = Equidistant::new(xi);
            let worst = (0..16)
                .map(|k| eq.point_at(-1.5 + 3.0 * k as f64 / 15.0, &params).v().abs())
                .fold(0.0f64, f64::max);
            assert!(worst < last);
            last = worst;
        }
    }

    #[test]
    fn at_ideal_center_guard() {
        let params = unit();
        // Cauchy-Schwarz keeps the denominator positive for interior points,
        // so only the near-boundary guard can fire in practice
        let p = make_disk_point(0.999999, 0.0, &params).unwrap();
        let ideal = IdealPoint::new(0.0);
        assert!(horocycle_coords(&p, &ideal, &params).is_ok());
    }
}
