//! Domain types for the Beltrami-Klein disk: model parameters, interior and
//! ideal points, polar coordinate forms, and geodesics (chords).
//!
//! The model maps the hyperbolic plane of Gaussian curvature `-1/R^2` onto the
//! open disk `u^2 + v^2 < a^2`. Every distance, angle, and area formula in
//! this crate is driven by the two lengths `a` (disk radius) and `R`
//! (curvature scale), carried together in [`ModelParams`].
//!
//! Interior membership is always tested on the quadratic form
//! `w^2 = a^2 - u^2 - v^2`, not on `r < a`, so that every downstream division
//! by `w` is guarded by the same predicate.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Numerical tolerances shared across the kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Interior test threshold on `w^2` (default `1e-12 * a^2`).
    pub boundary_eps: f64,
    /// Absolute error target for adaptive quadrature.
    pub quad_tol: f64,
    /// Convergence threshold for root-finding and degeneracy tests.
    pub root_tol: f64,
    /// Angular tolerance for chord-endpoint classification.
    pub angle_eps: f64,
}

impl Tolerances {
    /// Defaults scaled to a disk of radius `a`.
    pub fn for_radius(a: f64) -> Self {
        Tolerances {
            boundary_eps: 1e-12 * a * a,
            quad_tol: 1e-10,
            root_tol: 1e-12,
            angle_eps: 1e-9,
        }
    }

    fn validate(&self) -> Result<()> {
        let all = [
            self.boundary_eps,
            self.quad_tol,
            self.root_tol,
            self.angle_eps,
        ];
        if all.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
            return Err(Error::InvalidParams(
                "tolerances must be finite and positive".into(),
            ));
        }
        Ok(())
    }
}

/// Disk radius `a` and curvature scale `R`.
///
/// The represented surface has constant Gaussian curvature `-1/R^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Euclidean radius of the disk.
    pub a: f64,
    /// Curvature scale `R`.
    pub r: f64,
    /// Tolerances used by operations on this model.
    pub tol: Tolerances,
}

impl ModelParams {
    pub fn new(a: f64, r: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0 && r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParams(format!(
                "disk radius and curvature scale must be finite and positive (a = {a}, R = {r})"
            )));
        }
        Ok(ModelParams {
            a,
            r,
            tol: Tolerances::for_radius(a),
        })
    }

    /// The unit model `a = 1`, `R = 1`.
    pub fn unit() -> Self {
        ModelParams {
            a: 1.0,
            r: 1.0,
            tol: Tolerances::for_radius(1.0),
        }
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Result<Self> {
        tol.validate()?;
        self.tol = tol;
        Ok(self)
    }

    /// Gaussian curvature `K = -1/R^2` of the represented surface.
    pub fn curvature(&self) -> f64 {
        -1.0 / (self.r * self.r)
    }

    /// `w^2 = a^2 - u^2 - v^2` for raw coordinates.
    pub fn w_sq(&self, u: f64, v: f64) -> f64 {
        self.a * self.a - u * u - v * v
    }

    /// Validated interior point; see [`make_disk_point`].
    pub fn disk_point(&self, u: f64, v: f64) -> Result<DiskPoint> {
        make_disk_point(u, v, self)
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        Self::unit()
    }
}

/// A point strictly inside the disk, with `w^2 = a^2 - u^2 - v^2` cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    u: f64,
    v: f64,
    w_sq: f64,
}

impl DiskPoint {
    /// For callers that guarantee interiority themselves (e.g. the
    /// hyperboloid projection, which cannot leave the disk).
    pub(crate) fn new_unchecked(u: f64, v: f64, w_sq: f64) -> Self {
        DiskPoint { u, v, w_sq }
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// Cached `w^2 = a^2 - u^2 - v^2` (always positive).
    pub fn w_sq(&self) -> f64 {
        self.w_sq
    }

    /// `w = (a^2 - u^2 - v^2)^{1/2}`.
    pub fn w(&self) -> f64 {
        self.w_sq.sqrt()
    }

    /// Euclidean distance from the disk centre.
    pub fn r_euclidean(&self) -> f64 {
        self.u.hypot(self.v)
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.u, self.v)
    }
}

/// Validate `(u, v)` as a strictly interior point.
///
/// Rejects any point with `w^2 <= boundary_eps`; callers may rely on every
/// accepted point having a usable positive `w`.
pub fn make_disk_point(u: f64, v: f64, params: &ModelParams) -> Result<DiskPoint> {
    if !(u.is_finite() && v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let w_sq = params.w_sq(u, v);
    if w_sq <= params.tol.boundary_eps {
        return Err(Error::OutsideDisk { u, v, a: params.a });
    }
    Ok(DiskPoint { u, v, w_sq })
}

/// A point on the boundary circle, stored by angle so that its coordinates
/// satisfy `u^2 + v^2 = a^2` by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealPoint {
    angle: f64,
}

impl IdealPoint {
    /// Boundary point at the given angle (normalized to `[0, 2pi)`).
    pub fn new(angle: f64) -> Self {
        IdealPoint {
            angle: normalize_angle(angle),
        }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// Cartesian coordinates `(a cos angle, a sin angle)`.
    pub fn coords(&self, params: &ModelParams) -> (f64, f64) {
        (params.a * self.angle.cos(), params.a * self.angle.sin())
    }
}

/// Euclidean polar coordinates `(r, phi)` of an interior point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanPolar {
    /// Euclidean radius, `0 <= r < a`.
    pub r: f64,
    /// Polar angle in `[0, 2pi)`.
    pub phi: f64,
}

/// Hyperbolic polar coordinates `(rho, phi)`: true distance from the centre
/// and the (undistorted) polar angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPolar {
    /// Hyperbolic distance from the centre, `rho >= 0`.
    pub rho: f64,
    /// Polar angle in `[0, 2pi)`.
    pub phi: f64,
}

/// A geodesic: a chord of the disk, identified by its two ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    endpoints: [IdealPoint; 2],
}

impl Geodesic {
    /// Build from two distinct ideal endpoints.
    pub fn new(e0: IdealPoint, e1: IdealPoint, params: &ModelParams) -> Result<Self> {
        if angle_diff(e0.angle(), e1.angle()).abs() <= params.tol.angle_eps {
            return Err(Error::DegeneratePair);
        }
        Ok(Geodesic {
            endpoints: [e0, e1],
        })
    }

    pub fn endpoints(&self) -> [IdealPoint; 2] {
        self.endpoints
    }

    /// True when both chords have the same endpoint set within `angle_eps`.
    pub fn coincides_with(&self, other: &Geodesic, angle_eps: f64) -> bool {
        let same =
            |x: &IdealPoint, y: &IdealPoint| angle_diff(x.angle(), y.angle()).abs() <= angle_eps;
        (same(&self.endpoints[0], &other.endpoints[0])
            && same(&self.endpoints[1], &other.endpoints[1]))
            || (same(&self.endpoints[0], &other.endpoints[1])
                && same(&self.endpoints[1], &other.endpoints[0]))
    }
}

/// Convert Euclidean polar coordinates to Cartesian, validating interiority.
pub fn polar_to_cartesian(p: EuclideanPolar, params: &ModelParams) -> Result<DiskPoint> {
    if !(p.r.is_finite() && p.phi.is_finite()) {
        return Err(Error::NonFinite);
    }
    make_disk_point(p.r * p.phi.cos(), p.r * p.phi.sin(), params)
}

/// Convert an interior point to Euclidean polar coordinates.
///
/// `phi` is normalized to `[0, 2pi)` and is zero at the origin, so the
/// representation is canonical.
pub fn cartesian_to_polar(p: &DiskPoint) -> EuclideanPolar {
    let r = p.r_euclidean();
    let phi = if r == 0.0 {
        0.0
    } else {
        normalize_angle(p.v().atan2(p.u()))
    };
    EuclideanPolar { r, phi }
}

/// Reduce an angle to `[0, 2pi)`.
pub fn normalize_angle(t: f64) -> f64 {
    let mut x = t % TAU;
    if x < 0.0 {
        x += TAU;
    }
    // `% TAU` can round back up to TAU for tiny negative inputs
    if x >= TAU {
        x -= TAU;
    }
    x
}

/// Signed angular difference `b - a` reduced to `(-pi, pi]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let mut d = normalize_angle(b - a);
    if d > std::f64::consts::PI {
        d -= TAU;
    }
    d
}
