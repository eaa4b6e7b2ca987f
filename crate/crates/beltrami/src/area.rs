//! Triangle area: the angular-defect formula `R^2 [pi - (A + B + C)]`, the
//! right-triangle angle relation `tan(mu') = (a^2 cos^2 mu - u^2)^{1/2} / (a
//! sin mu)`, and an independent quadrature of the area element
//! `R^2 a / w^3 du dv` over the Euclidean triangle of the vertices.
//!
//! The quadrature integrates the strip integral in `v` in closed form
//! (`integral dv / (k^2 - v^2)^{3/2} = v / (k^2 sqrt(k^2 - v^2))`) and the
//! remaining `u`-integral adaptively. Ideal triangles are improper: they are
//! evaluated on copies shrunk toward the centroid by `1 - eps` and
//! extrapolated to `eps = 0` (the defect scales as `sqrt(eps)` at an ideal
//! vertex, so the extrapolation runs in `sqrt(eps)`).

use std::f64::consts::PI;

use crate::angles::ray_angle;
use crate::disk::{DiskPoint, IdealPoint, ModelParams};
use crate::error::{Error, Result};
use crate::metric::adaptive_simpson;

/// A triangle vertex: interior, or ideal (at infinity, contributing angle 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriangleVertex {
    Interior(DiskPoint),
    Ideal(IdealPoint),
}

impl TriangleVertex {
    fn coords(&self, params: &ModelParams) -> (f64, f64) {
        match self {
            TriangleVertex::Interior(p) => p.coords(),
            TriangleVertex::Ideal(q) => q.coords(params),
        }
    }

    fn is_ideal(&self) -> bool {
        matches!(self, TriangleVertex::Ideal(_))
    }
}

/// A geodesic triangle, stored counterclockwise.
#[derive(Debug, Clone, Copy)]
pub struct Triangle {
    vertices: [TriangleVertex; 3],
}

impl Triangle {
    /// Build from three vertices; rejects collinear ones and reorders to
    /// counterclockwise (positive Euclidean signed area).
    pub fn new(vertices: [TriangleVertex; 3], params: &ModelParams) -> Result<Self> {
        let c: Vec<(f64, f64)> = vertices.iter().map(|v| v.coords(params)).collect();
        let signed = (c[1].0 - c[0].0) * (c[2].1 - c[0].1) - (c[2].0 - c[0].0) * (c[1].1 - c[0].1);
        let scale = params.a * params.a;
        if signed.abs() <= 1e-12 * scale {
            return Err(Error::CollinearVertices);
        }
        let vertices = if signed > 0.0 {
            vertices
        } else {
            [vertices[0], vertices[2], vertices[1]]
        };
        Ok(Triangle { vertices })
    }

    /// All-interior triangle.
    pub fn interior(
        p0: DiskPoint,
        p1: DiskPoint,
        p2: DiskPoint,
        params: &ModelParams,
    ) -> Result<Self> {
        Self::new(
            [
                TriangleVertex::Interior(p0),
                TriangleVertex::Interior(p1),
                TriangleVertex::Interior(p2),
            ],
            params,
        )
    }

    /// Ideal triangle from three boundary angles.
    pub fn ideal(angles: [f64; 3], params: &ModelParams) -> Result<Self> {
        Self::new(
            angles.map(|t| TriangleVertex::Ideal(IdealPoint::new(t))),
            params,
        )
    }

    pub fn vertices(&self) -> [TriangleVertex; 3] {
        self.vertices
    }

    pub fn vertex_coords(&self, params: &ModelParams) -> [(f64, f64); 3] {
        [
            self.vertices[0].coords(params),
            self.vertices[1].coords(params),
            self.vertices[2].coords(params),
        ]
    }

    fn has_ideal(&self) -> bool {
        self.vertices.iter().any(TriangleVertex::is_ideal)
    }

    /// Interior angles, measured through the inclination angle map applied to
    /// the ray directions of the two adjacent sides (so obtuse interior
    /// angles come out obtuse); ideal vertices contribute 0.
    pub fn angles(&self, params: &ModelParams) -> Result<[f64; 3]> {
        let coords = self.vertex_coords(params);
        let mut out = [0.0; 3];
        for i in 0..3 {
            if let TriangleVertex::Interior(p) = &self.vertices[i] {
                let (px, py) = coords[i];
                let (ax, ay) = coords[(i + 1) % 3];
                let (bx, by) = coords[(i + 2) % 3];
                let mu = (ay - py).atan2(ax - px);
                let nu = (by - py).atan2(bx - px);
                out[i] = ray_angle(p, mu, nu, params)?;
            }
        }
        Ok(out)
    }
}

/// Area density at `p`: `sqrt(EG - F^2) = R^2 a / w^3`.
pub fn area_element(p: &DiskPoint, params: &ModelParams) -> Result<f64> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    Ok(params.r * params.r * params.a / (p.w_sq() * p.w()))
}

/// True hyperbolic angle `mu'` at the far vertex of the right triangle with
/// legs on `v = 0` and the chord `u = const`, hypotenuse at Euclidean
/// inclination `mu` from the origin:
/// `tan(mu') = (a^2 cos^2 mu - u^2)^{1/2} / (a sin mu)`.
pub fn mu_prime(u: f64, mu: f64, params: &ModelParams) -> Result<f64> {
    if !(mu > 0.0 && mu < PI / 2.0) {
        return Err(Error::InvalidAngles);
    }
    if u.is_nan() || u < 0.0 || u >= params.a * mu.cos() {
        return Err(Error::DegenerateTriangle);
    }
    let num = (params.a * params.a * mu.cos() * mu.cos() - u * u).sqrt();
    Ok(num.atan2(params.a * mu.sin()))
}

/// The closed-form density `d(mu')/du` alongside its central-difference
/// estimate (step `1e-6 a`), for cross-checking:
/// `d(mu') = -a sin(mu) u du / [(a^2 - u^2)(a^2 cos^2 mu - u^2)^{1/2}]`.
pub fn mu_prime_derivative_check(u: f64, mu: f64, params: &ModelParams) -> Result<(f64, f64)> {
    let a = params.a;
    let h = 1e-6 * a;
    // the stencil needs room on both sides
    if u.is_nan() || u <= h {
        return Err(Error::DegenerateTriangle);
    }
    let analytic =
        -(a * mu.sin() * u) / ((a * a - u * u) * (a * a * mu.cos() * mu.cos() - u * u).sqrt());
    let numeric = (mu_prime(u + h, mu, params)? - mu_prime(u - h, mu, params)?) / (2.0 * h);
    Ok((analytic, numeric))
}

/// Area from the angular defect: `R^2 (pi - A - B - C)`.
pub fn triangle_area_defect(
    a_ang: f64,
    b_ang: f64,
    c_ang: f64,
    params: &ModelParams,
) -> Result<f64> {
    if !(a_ang >= 0.0 && b_ang >= 0.0 && c_ang >= 0.0) || a_ang + b_ang + c_ang >= PI {
        return Err(Error::InvalidAngles);
    }
    Ok(params.r * params.r * (PI - a_ang - b_ang - c_ang))
}

/// Antiderivative in `v` of the area density:
/// `integral R^2 a dv / w^3 = R^2 a v / [(a^2 - u^2) sqrt(a^2 - u^2 - v^2)]`.
fn inner_antiderivative(u: f64, v: f64, params: &ModelParams) -> Result<f64> {
    let k2 = params.a * params.a - u * u;
    let w_sq = k2 - v * v;
    if w_sq <= 0.0 {
        return Err(Error::NearBoundary { w_sq });
    }
    Ok(params.r * params.r * params.a * v / (k2 * w_sq.sqrt()))
}

fn quad_over_coords(verts: [(f64, f64); 3], params: &ModelParams, tol: f64) -> Result<f64> {
    let mut vs = verts;
    vs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let [p1, p2, p3] = vs;

    let line = |p: (f64, f64), q: (f64, f64)| {
        let m = (q.1 - p.1) / (q.0 - p.0);
        move |u: f64| p.1 + m * (u - p.0)
    };
    let long = line(p1, p3);

    let mut total = 0.0;
    let width_eps = 1e-15 * params.a;
    for (lo_x, hi_x, edge) in [(p1.0, p2.0, line(p1, p2)), (p2.0, p3.0, line(p2, p3))] {
        if hi_x - lo_x <= width_eps {
            continue;
        }
        let strip = |u: f64| -> Result<f64> {
            let (va, vb) = (edge(u), long(u));
            let (v_lo, v_hi) = if va <= vb { (va, vb) } else { (vb, va) };
            Ok(inner_antiderivative(u, v_hi, params)? - inner_antiderivative(u, v_lo, params)?)
        };
        total += adaptive_simpson(&strip, lo_x, hi_x, tol / 2.0)?;
    }
    Ok(total)
}

// Shrink factors for improper (ideal-vertex) triangles; the extrapolation is
// quadratic in sqrt(eps) through these three samples.
const IDEAL_EPS: [f64; 3] = [1e-2, 1e-3, 1e-4];
const IDEAL_INNER_TOL: f64 = 1e-9;

/// Hyperbolic area of a triangle by quadrature of `R^2 a / w^3` over the
/// Euclidean triangle of the vertices, to absolute accuracy `tol`.
///
/// Triangles with ideal vertices are evaluated on shrunk copies and
/// extrapolated; the result carries the extrapolation's own error (about
/// 1e-4 for the all-ideal triangle), not `tol`.
pub fn area_quadrature(tri: &Triangle, params: &ModelParams, tol: f64) -> Result<f64> {
    let coords = tri.vertex_coords(params);
    if !tri.has_ideal() {
        return quad_over_coords(coords, params, tol);
    }

    let cx = (coords[0].0 + coords[1].0 + coords[2].0) / 3.0;
    let cy = (coords[0].1 + coords[1].1 + coords[2].1) / 3.0;
    let shrink =
        |eps: f64| coords.map(|(x, y)| (cx + (1.0 - eps) * (x - cx), cy + (1.0 - eps) * (y - cy)));
    let mut xs = [0.0; 3];
    let mut areas = [0.0; 3];
    for (i, &eps) in IDEAL_EPS.iter().enumerate() {
        xs[i] = eps.sqrt();
        areas[i] = quad_over_coords(shrink(eps), params, IDEAL_INNER_TOL)?;
    }
    // Lagrange extrapolation to x = sqrt(eps) = 0
    let mut extrapolated = 0.0;
    for i in 0..3 {
        let mut weight = 1.0;
        for j in 0..3 {
            if j != i {
                weight *= -xs[j] / (xs[i] - xs[j]);
            }
        }
        extrapolated += areas[i] * weight;
    }
    Ok(extrapolated)
}
