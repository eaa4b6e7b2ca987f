//! The hyperboloid model: the upper sheet of `x^2 + y^2 - z^2 = -R^2` with
//! the Minkowski line element `ds^2 = dx^2 + dy^2 - dz^2`.
//!
//! Central projection through the origin carries the sheet onto the disk
//! (`u = a x / z`, `v = a y / z`) and is an isometry onto the disk model; the
//! Minkowski bilinear form therefore doubles as an independent distance and
//! metric oracle for everything computed in disk coordinates.

use crate::disk::{DiskPoint, ModelParams};
use crate::error::{Error, Result};
use crate::geodesy::acosh_stable;
use crate::metric::FundamentalForm;

/// A point on the upper sheet (`z > 0`) of the hyperboloid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPoint {
    x: f64,
    y: f64,
    z: f64,
}

impl HyperboloidPoint {
    /// Validate `(x, y, z)` against the sheet constraint.
    ///
    /// Residuals below `1e-8` (relative to `R^2`) are repaired by
    /// renormalizing `z = sqrt(x^2 + y^2 + R^2)`, so long computation chains
    /// stay on the sheet; anything larger is rejected as a real error.
    pub fn new(x: f64, y: f64, z: f64, params: &ModelParams) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let r2 = params.r * params.r;
        if z <= 0.0 {
            return Err(Error::OffSheet {
                residual: f64::INFINITY,
            });
        }
        let residual = (x * x + y * y - z * z + r2).abs() / r2;
        if residual > 1e-8 {
            return Err(Error::OffSheet { residual });
        }
        let z = (x * x + y * y + r2).sqrt();
        Ok(HyperboloidPoint { x, y, z })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn coords(&self) -> (f64, f64, f64) {
        (self.x, self.y, self.z)
    }
}

/// A raw Minkowski 3-vector (no sheet constraint); used for differentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// The bilinear form `x1 x2 + y1 y2 - z1 z2` on raw vectors.
pub fn minkowski_form(d1: &MinkowskiVector, d2: &MinkowskiVector) -> f64 {
    d1.x * d2.x + d1.y * d2.y - d1.z * d2.z
}

/// Polar coordinates on the sheet: `m = p/R` with `p` the geodesic distance
/// from the vertex, and the azimuth `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPolar {
    pub m: f64,
    pub theta: f64,
}

/// Lift an interior disk point to the sheet: `z = R a / w`, `x = u z / a`,
/// `y = v z / a`.
pub fn lift_to_hyperboloid(p: &DiskPoint, params: &ModelParams) -> Result<HyperboloidPoint> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    let z = params.r * params.a / p.w();
    Ok(HyperboloidPoint {
        x: p.u() * z / params.a,
        y: p.v() * z / params.a,
        z,
    })
}

/// Project a sheet point to the disk: `u = a x / z`, `v = a y / z`.
///
/// The sheet constraint gives `x^2 + y^2 < z^2`, so the image is always
/// interior and the projection cannot fail.
pub fn project_to_disk(h: &HyperboloidPoint, params: &ModelParams) -> DiskPoint {
    let u = params.a * h.x / h.z;
    let v = params.a * h.y / h.z;
    DiskPoint::new_unchecked(u, v, params.w_sq(u, v))
}

/// Minkowski inner product of two sheet points; always `<= -R^2`, with
/// equality exactly at coincident points.
pub fn minkowski_inner(h1: &HyperboloidPoint, h2: &HyperboloidPoint) -> f64 {
    h1.x * h2.x + h1.y * h2.y - h1.z * h2.z
}

/// Geodesic distance on the sheet: `R acosh(-<h1, h2> / R^2)`.
///
/// Serves as the independent oracle for the disk-model distance.
pub fn hyperboloid_distance(
    h1: &HyperboloidPoint,
    h2: &HyperboloidPoint,
    params: &ModelParams,
) -> f64 {
    let r2 = params.r * params.r;
    params.r * acosh_stable(-minkowski_inner(h1, h2) / r2)
}

/// The sheet in polar form: `x = R sinh m cos theta`, `y = R sinh m sin
/// theta`, `z = R cosh m`. Satisfies the sheet constraint identically.
pub fn polar_parametrization(q: &HyperboloidPolar, params: &ModelParams) -> HyperboloidPoint {
    let (s, c) = (q.m.sinh(), q.m.cosh());
    HyperboloidPoint {
        x: params.r * s * q.theta.cos(),
        y: params.r * s * q.theta.sin(),
        z: params.r * c,
    }
}

// Step for first-derivative pushforward stencils (fourth order).
const PUSH_STEP: f64 = 1e-4;

fn tangent<F>(f: F, t: f64, h: f64) -> MinkowskiVector
where
    F: Fn(f64) -> (f64, f64, f64),
{
    let (p2, p1, m1, m2) = (f(t + 2.0 * h), f(t + h), f(t - h), f(t - 2.0 * h));
    let d = |a: f64, b: f64, c: f64, e: f64| (-a + 8.0 * b - 8.0 * c + e) / (12.0 * h);
    MinkowskiVector {
        x: d(p2.0, p1.0, m1.0, m2.0),
        y: d(p2.1, p1.1, m1.1, m2.1),
        z: d(p2.2, p1.2, m1.2, m2.2),
    }
}

/// Measure the polar metric coefficients numerically: finite-difference
/// tangents of [`polar_parametrization`] fed through the Minkowski form.
///
/// Returns `(dm_coeff, dtheta_coeff)`, expected `(R^2, R^2 sinh^2 m)`.
pub fn polar_metric_check(m: f64, theta: f64, params: &ModelParams) -> (f64, f64) {
    let at = |mm: f64, tt: f64| {
        polar_parametrization(&HyperboloidPolar { m: mm, theta: tt }, params).coords()
    };
    let t_m = tangent(|t| at(t, theta), m, PUSH_STEP);
    let t_theta = tangent(|t| at(m, t), theta, PUSH_STEP);
    (
        minkowski_form(&t_m, &t_m),
        minkowski_form(&t_theta, &t_theta),
    )
}

/// Push the Minkowski form through [`lift_to_hyperboloid`] by finite
/// differences, returning measured `E, F, G` at `p`.
///
/// The independent oracle for [`crate::metric::fundamental_form`].
pub fn lift_pushforward(p: &DiskPoint, params: &ModelParams) -> Result<FundamentalForm> {
    let h = PUSH_STEP * params.a;
    let (u, v) = p.coords();
    if p.r_euclidean() > params.a - 10.0 * h {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    let lift = |uu: f64, vv: f64| -> (f64, f64, f64) {
        let w = params.w_sq(uu, vv).sqrt();
        let z = params.r * params.a / w;
        (uu * z / params.a, vv * z / params.a, z)
    };
    let t_u = tangent(|t| lift(t, v), u, h);
    let t_v = tangent(|t| lift(u, t), v, h);
    Ok(FundamentalForm {
        e: minkowski_form(&t_u, &t_u),
        f: minkowski_form(&t_u, &t_v),
        g: minkowski_form(&t_v, &t_v),
    })
}
