//! The first fundamental form in every coordinate system of the disk model,
//! plus the two numerical oracles used to cross-check closed forms: adaptive
//! arc-length quadrature and finite-difference Gaussian curvature.
//!
//! In Cartesian disk coordinates the metric is
//!
//! ```text
//! ds^2 = R^2 [(a^2 - v^2) du^2 + 2uv du dv + (a^2 - u^2) dv^2] / w^4,
//! w^2 = a^2 - u^2 - v^2,
//! ```
//!
//! with equivalent polar, hyperbolic-polar, equidistant, and horocyclic
//! forms. The quadrature integrates `sqrt(E u'^2 + 2F u'v' + G v'^2)` along a
//! parametric curve; the curvature oracle feeds finite differences of E, F, G
//! through the Brioschi formula and must recover `-1/R^2` everywhere.

use crate::disk::{DiskPoint, ModelParams};
use crate::error::{Error, Result};

/// Coefficients `E, F, G` of the first fundamental form at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl FundamentalForm {
    /// `EG - F^2`.
    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }

    /// Metric inner product of two tangent vectors.
    pub fn inner(&self, t1: (f64, f64), t2: (f64, f64)) -> f64 {
        self.e * t1.0 * t2.0 + self.f * (t1.0 * t2.1 + t1.1 * t2.0) + self.g * t1.1 * t2.1
    }

    /// Squared metric length of a tangent vector.
    pub fn norm_sq(&self, t: (f64, f64)) -> f64 {
        self.inner(t, t)
    }
}

fn guard_interior(p: &DiskPoint, params: &ModelParams) -> Result<()> {
    if p.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    Ok(())
}

/// E, F, G at an interior point:
/// `E = R^2 (a^2 - v^2)/w^4`, `F = R^2 uv/w^4`, `G = R^2 (a^2 - u^2)/w^4`.
pub fn fundamental_form(p: &DiskPoint, params: &ModelParams) -> Result<FundamentalForm> {
    guard_interior(p, params)?;
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let r2 = params.r * params.r;
    let w4 = p.w_sq() * p.w_sq();
    Ok(FundamentalForm {
        e: r2 * (a2 - v * v) / w4,
        f: r2 * u * v / w4,
        g: r2 * (a2 - u * u) / w4,
    })
}

/// `ds^2` for a coordinate displacement `(du, dv)` at `p`.
pub fn line_element_sq(p: &DiskPoint, du: f64, dv: f64, params: &ModelParams) -> Result<f64> {
    guard_interior(p, params)?;
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let r2 = params.r * params.r;
    let w4 = p.w_sq() * p.w_sq();
    Ok(r2 * ((a2 - v * v) * du * du + 2.0 * u * v * du * dv + (a2 - u * u) * dv * dv) / w4)
}

/// `ds^2` in Euclidean polar coordinates:
/// `R^2 [a^2 dr^2/(a^2-r^2)^2 + r^2 dphi^2/(a^2-r^2)]`.
pub fn polar_line_element_sq(r: f64, dr: f64, dphi: f64, params: &ModelParams) -> Result<f64> {
    let a2 = params.a * params.a;
    let w2 = a2 - r * r;
    if r.is_nan() || r < 0.0 || w2 <= params.tol.boundary_eps {
        return Err(Error::OutsideDisk {
            u: r,
            v: 0.0,
            a: params.a,
        });
    }
    let r_sq = params.r * params.r;
    Ok(r_sq * (a2 * dr * dr / (w2 * w2) + r * r * dphi * dphi / w2))
}

/// `ds^2` in hyperbolic polar coordinates: `drho^2 + R^2 sinh^2(rho/R) dphi^2`.
pub fn hyperbolic_polar_line_element_sq(
    rho: f64,
    drho: f64,
    dphi: f64,
    params: &ModelParams,
) -> f64 {
    let s = (rho / params.r).sinh() * params.r;
    drho * drho + s * s * dphi * dphi
}

/// `ds^2` in equidistant coordinates: `dxi^2 + cosh^2(xi/R) deta^2`.
pub fn equidistant_line_element_sq(xi: f64, dxi: f64, deta: f64, params: &ModelParams) -> f64 {
    let c = (xi / params.r).cosh();
    dxi * dxi + c * c * deta * deta
}

/// `ds^2` in horocyclic coordinates: `drho^2 + e^(-2 rho/R) dsigma^2`.
pub fn horocyclic_line_element_sq(rho: f64, drho: f64, dsigma: f64, params: &ModelParams) -> f64 {
    drho * drho + (-2.0 * rho / params.r).exp() * dsigma * dsigma
}

type CurveFn<'a> = Box<dyn Fn(f64) -> (f64, f64) + Sync + 'a>;

/// A curve `t -> (u(t), v(t))` on `[t0, t1]`, with an optional analytic
/// derivative. Without one, velocities come from central differences with
/// step `1e-6 * (t1 - t0)`.
pub struct ParametricCurve<'a> {
    map: CurveFn<'a>,
    deriv: Option<CurveFn<'a>>,
    t0: f64,
    t1: f64,
}

impl<'a> ParametricCurve<'a> {
    pub fn new(t0: f64, t1: f64, map: impl Fn(f64) -> (f64, f64) + Sync + 'a) -> Self {
        ParametricCurve {
            map: Box::new(map),
            deriv: None,
            t0,
            t1,
        }
    }

    pub fn with_derivative(mut self, deriv: impl Fn(f64) -> (f64, f64) + Sync + 'a) -> Self {
        self.deriv = Some(Box::new(deriv));
        self
    }

    pub fn span(&self) -> (f64, f64) {
        (self.t0, self.t1)
    }

    pub fn point(&self, t: f64) -> (f64, f64) {
        (self.map)(t)
    }

    /// `(du/dt, dv/dt)`, analytic when supplied.
    pub fn velocity(&self, t: f64) -> (f64, f64) {
        if let Some(d) = &self.deriv {
            return d(t);
        }
        let h = 1e-6 * (self.t1 - self.t0);
        let (u_p, v_p) = (self.map)(t + h);
        let (u_m, v_m) = (self.map)(t - h);
        ((u_p - u_m) / (2.0 * h), (v_p - v_m) / (2.0 * h))
    }
}

/// Speed `ds/dt` at parameter `t`; errors if the curve leaves the interior.
fn speed(c: &ParametricCurve, t: f64, params: &ModelParams) -> Result<f64> {
    let (u, v) = c.point(t);
    let w_sq = params.w_sq(u, v);
    if w_sq <= params.tol.boundary_eps {
        return Err(Error::NearBoundary { w_sq });
    }
    let (du, dv) = c.velocity(t);
    let a2 = params.a * params.a;
    let r2 = params.r * params.r;
    let ds_sq = r2 * ((a2 - v * v) * du * du + 2.0 * u * v * du * dv + (a2 - u * u) * dv * dv)
        / (w_sq * w_sq);
    Ok(ds_sq.max(0.0).sqrt())
}

// Adaptive Simpson refinement cap: 2^20 accepted subintervals. The depth cap
// only guards against bisection collapsing below f64 resolution.
const MAX_SUBINTERVALS: usize = 1 << 20;
const MAX_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature with absolute error target `tol`.
///
/// Classic bisection scheme: accept an interval when the two-panel estimate
/// differs from the one-panel estimate by at most `15 tol`, applying the
/// Richardson end-correction `(S2 - S1)/15`.
pub(crate) fn adaptive_simpson<F>(f: &F, t0: f64, t1: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    fn simpson<F>(f: &F, x0: f64, x2: f64) -> Result<f64>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let x1 = 0.5 * (x0 + x2);
        Ok((x2 - x0) / 6.0 * (f(x0)? + 4.0 * f(x1)? + f(x2)?))
    }

    fn recurse<F>(
        f: &F,
        x0: f64,
        x2: f64,
        whole: f64,
        tol: f64,
        depth: u32,
        budget: &mut usize,
    ) -> Result<f64>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let xm = 0.5 * (x0 + x2);
        let left = simpson(f, x0, xm)?;
        let right = simpson(f, xm, x2)?;
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            *budget = budget.saturating_sub(1);
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 || *budget == 0 {
            return Err(Error::NoConvergence);
        }
        Ok(recurse(f, x0, xm, left, tol / 2.0, depth - 1, budget)?
            + recurse(f, xm, x2, right, tol / 2.0, depth - 1, budget)?)
    }

    if t0 == t1 {
        return Ok(0.0);
    }
    let whole = simpson(f, t0, t1)?;
    let mut budget = MAX_SUBINTERVALS;
    recurse(f, t0, t1, whole, tol, MAX_DEPTH, &mut budget)
}

/// Hyperbolic arc length of a curve by adaptive quadrature of the metric
/// speed, to absolute accuracy `tol`.
pub fn arc_length(c: &ParametricCurve, params: &ModelParams, tol: f64) -> Result<f64> {
    let (t0, t1) = c.span();
    adaptive_simpson(&|t| speed(c, t, params), t0, t1, tol)
}

// Step for the curvature stencil, relative to the disk radius. Fourth-order
// stencils at this step keep |K + 1/R^2| below 1e-7 up to 0.1a from the
// boundary; the naive 3-point stencil at 1e-5a loses ~4e-6 to roundoff there.
const CURV_STEP_REL: f64 = 1e-4;

/// Gaussian curvature at `p` via the Brioschi formula with finite-difference
/// derivatives of E, F, G (fourth-order central stencils, step `1e-4 a`).
///
/// The point needs clearance `>= 10` steps from the boundary for the stencil.
pub fn gauss_curvature(p: &DiskPoint, params: &ModelParams) -> Result<f64> {
    let h = CURV_STEP_REL * params.a;
    if p.r_euclidean() > params.a - 10.0 * h {
        return Err(Error::NearBoundary { w_sq: p.w_sq() });
    }
    let (u, v) = p.coords();
    let a2 = params.a * params.a;
    let r2 = params.r * params.r;
    let efg = |x: f64, y: f64| -> [f64; 3] {
        let w2 = a2 - x * x - y * y;
        let w4 = w2 * w2;
        [
            r2 * (a2 - y * y) / w4,
            r2 * x * y / w4,
            r2 * (a2 - x * x) / w4,
        ]
    };

    // 5-point, 4th-order central stencils
    let d1 = |g: &dyn Fn(f64) -> [f64; 3]| -> [f64; 3] {
        let (p2, p1, m1, m2) = (g(2.0 * h), g(h), g(-h), g(-2.0 * h));
        std::array::from_fn(|i| (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h))
    };
    let d2 = |g: &dyn Fn(f64) -> [f64; 3]| -> [f64; 3] {
        let (p2, p1, c, m1, m2) = (g(2.0 * h), g(h), g(0.0), g(-h), g(-2.0 * h));
        std::array::from_fn(|i| {
            (-p2[i] + 16.0 * p1[i] - 30.0 * c[i] + 16.0 * m1[i] - m2[i]) / (12.0 * h * h)
        })
    };

    let along_u = |k: f64| efg(u + k, v);
    let along_v = |k: f64| efg(u, v + k);
    let [e, f, g] = efg(u, v);
    let [e_u, f_u, g_u] = d1(&along_u);
    let [e_v, f_v, g_v] = d1(&along_v);
    let e_vv = d2(&along_v)[0];
    let g_uu = d2(&along_u)[2];
    // mixed derivative of F: 4th-order d/du applied to 4th-order dF/dv
    let f_v_at = |x: f64| -> f64 {
        (-efg(x, v + 2.0 * h)[1] + 8.0 * efg(x, v + h)[1] - 8.0 * efg(x, v - h)[1]
            + efg(x, v - 2.0 * h)[1])
            / (12.0 * h)
    };
    let f_uv = (-f_v_at(u + 2.0 * h) + 8.0 * f_v_at(u + h) - 8.0 * f_v_at(u - h)
        + f_v_at(u - 2.0 * h))
        / (12.0 * h);

    let det3 = |m: [[f64; 3]; 3]| -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let m1 = [
        [-0.5 * e_vv + f_uv - 0.5 * g_uu, 0.5 * e_u, f_u - 0.5 * e_v],
        [f_v - 0.5 * g_u, e, f],
        [0.5 * g_v, f, g],
    ];
    let m2 = [
        [0.0, 0.5 * e_v, 0.5 * g_u],
        [0.5 * e_v, e, f],
        [0.5 * g_u, f, g],
    ];
    let den = e * g - f * f;
    Ok((det3(m1) - det3(m2)) / (den * den))
}
