//! Distances and geodesics: the closed-form two-point distance, the
//! cross-ratio (Cayley) distance used as its independent oracle, chord
//! construction through point pairs, the straight-line condition for sampled
//! curves, and classification of chord pairs as intersecting, asymptotic, or
//! ultraparallel.

use crate::angles;
use crate::disk::{angle_diff, DiskPoint, Geodesic, HyperbolicPolar, IdealPoint, ModelParams};
use crate::error::{Error, Result};

/// Relation of two distinct chords.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairClass {
    /// Supporting lines meet strictly inside the disk; carries the meeting
    /// point and the hyperbolic angle there.
    Intersecting { point: DiskPoint, angle: f64 },
    /// Chords share an ideal endpoint: the geodesics converge at infinity at
    /// angle zero.
    Asymptotic { ideal: IdealPoint },
    /// Supporting lines meet outside the disk (or are parallel): the
    /// geodesics have no common point.
    Ultraparallel,
}

/// Hyperbolic distance from the centre of a point at Euclidean radius `r`:
/// `rho = R atanh(r/a)`.
pub fn dist_from_origin(r: f64, params: &ModelParams) -> Result<f64> {
    if !(r >= 0.0 && r < params.a) {
        return Err(Error::OutsideDisk {
            u: r,
            v: 0.0,
            a: params.a,
        });
    }
    Ok(params.r * (r / params.a).atanh())
}

/// Euclidean radius of the point at hyperbolic distance `rho` from the
/// centre: `r = a tanh(rho/R)`. Inverse of [`dist_from_origin`].
///
/// Strictly below `a` even where `tanh` saturates to 1 in f64 (around
/// `rho/R = 19`), so the result always validates as interior.
pub fn euclidean_radius(rho: f64, params: &ModelParams) -> f64 {
    let r = params.a * (rho / params.r).tanh();
    if r >= params.a {
        params.a.next_down()
    } else {
        r
    }
}

/// `cosh(rho/R) = a / (a^2 - r^2)^{1/2}` for a point at Euclidean radius `r`.
///
/// Computed as `a / sqrt((a-r)(a+r))`: the factored difference stays accurate
/// arbitrarily close to the boundary, where `a^2 - r^2` would cancel.
pub fn cosh_from_r(r: f64, params: &ModelParams) -> Result<f64> {
    if !(r >= 0.0 && r < params.a) {
        return Err(Error::OutsideDisk {
            u: r,
            v: 0.0,
            a: params.a,
        });
    }
    Ok(params.a / ((params.a - r) * (params.a + r)).sqrt())
}

/// Hyperbolic polar coordinates of an interior point: the true distance from
/// the centre and the (undistorted) polar angle.
pub fn to_hyperbolic_polar(p: &DiskPoint, params: &ModelParams) -> Result<HyperbolicPolar> {
    let polar = crate::disk::cartesian_to_polar(p);
    Ok(HyperbolicPolar {
        rho: dist_from_origin(polar.r, params)?,
        phi: polar.phi,
    })
}

/// Interior point at hyperbolic polar coordinates `(rho, phi)`.
pub fn from_hyperbolic_polar(q: &HyperbolicPolar, params: &ModelParams) -> Result<DiskPoint> {
    if !(q.rho >= 0.0 && q.rho.is_finite()) {
        return Err(Error::NonpositiveDistance);
    }
    let r = euclidean_radius(q.rho, params);
    crate::disk::make_disk_point(r * q.phi.cos(), r * q.phi.sin(), params)
}

/// `acosh` via `log(x + sqrt(x^2 - 1))`, switching to the series
/// `sqrt(2t) (1 - t/12 + 3t^2/160)` for `t = x - 1 < 1e-8` where the log form
/// cancels. Arguments within rounding below 1 are clamped to 1.
pub(crate) fn acosh_stable(x: f64) -> f64 {
    let t = x - 1.0;
    if t <= 0.0 {
        return 0.0;
    }
    if t < 1e-8 {
        return (2.0 * t).sqrt() * (1.0 - t / 12.0 + 3.0 * t * t / 160.0);
    }
    (x + (x * x - 1.0).sqrt()).ln()
}

/// Hyperbolic distance between interior points:
/// `R acosh[(a^2 - u u0 - v v0) / (w w0)]`.
pub fn distance(p: &DiskPoint, q: &DiskPoint, params: &ModelParams) -> Result<f64> {
    if p.w_sq() <= params.tol.boundary_eps || q.w_sq() <= params.tol.boundary_eps {
        return Err(Error::NearBoundary {
            w_sq: p.w_sq().min(q.w_sq()),
        });
    }
    // keep d(p, p) = 0 exact: the general route rounds w * w away from w^2
    if p.u() == q.u() && p.v() == q.v() {
        return Ok(0.0);
    }
    let arg = (params.a * params.a - p.u() * q.u() - p.v() * q.v()) / (p.w() * q.w());
    Ok(params.r * acosh_stable(arg))
}

/// Distance by Cayley's cross ratio along the chord through `p` and `q`:
/// `(R/2) |log[(|Aq| |pB|) / (|Ap| |qB|)]|` with `A`, `B` the chord's ideal
/// endpoints, ordered so travel from `p` to `q` heads toward `B`.
pub fn cross_ratio_distance(p: &DiskPoint, q: &DiskPoint, params: &ModelParams) -> Result<f64> {
    let chord = chord_through(p, q, params)?;
    let [a_end, b_end] = chord.endpoints();
    let (ax, ay) = a_end.coords(params);
    let (bx, by) = b_end.coords(params);
    let dist = |x0: f64, y0: f64, x1: f64, y1: f64| (x1 - x0).hypot(y1 - y0);
    let (pu, pv) = p.coords();
    let (qu, qv) = q.coords();
    let ratio = (dist(ax, ay, qu, qv) * dist(pu, pv, bx, by))
        / (dist(ax, ay, pu, pv) * dist(qu, qv, bx, by));
    Ok(0.5 * params.r * ratio.ln().abs())
}

/// The chord through two interior points, as its pair of ideal endpoints.
///
/// Endpoints are ordered so that travel from `p` to `q` heads toward
/// `endpoints()[1]`. The line-circle intersection uses the sign-stable
/// quadratic form (the constant term `a^2 - |p|^2` is positive, so neither
/// root suffers cancellation).
pub fn chord_through(p: &DiskPoint, q: &DiskPoint, params: &ModelParams) -> Result<Geodesic> {
    let (px, py) = p.coords();
    let (dx, dy) = (q.u() - px, q.v() - py);
    let sep = dx.hypot(dy);
    if sep <= params.tol.root_tol {
        return Err(Error::DegeneratePair);
    }
    let (dx, dy) = (dx / sep, dy / sep);
    // |p + s d|^2 = a^2  =>  s^2 + 2 b s - c = 0, c = a^2 - |p|^2 > 0
    let b = px * dx + py * dy;
    let c = params.a * params.a - (px * px + py * py);
    let root = (b * b + c).sqrt();
    let (s_fwd, s_back) = if b >= 0.0 {
        // -b - root cancels; use the product of roots  s_fwd * s_back = -c
        let s_back = -(b + root);
        (c / (b + root), s_back)
    } else {
        let s_fwd = root - b;
        (s_fwd, -c / (root - b))
    };
    let at = |s: f64| IdealPoint::new((py + s * dy).atan2(px + s * dx));
    Geodesic::new(at(s_back), at(s_fwd), params)
}

/// Test whether sampled points `(t, u, v)` trace a straight line, via the
/// condition `du d2v - dv d2u = 0` evaluated by central differences at every
/// interior sample. Needs at least 5 samples with strictly increasing `t`.
pub fn is_straight(samples: &[(f64, f64, f64)], tol: f64) -> Result<bool> {
    if samples.len() < 5 {
        return Err(Error::InsufficientSamples {
            needed: 5,
            got: samples.len(),
        });
    }
    if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::UnorderedSamples);
    }
    for win in samples.windows(3) {
        let [(t0, u0, v0), (t1, u1, v1), (t2, u2, v2)] = [win[0], win[1], win[2]];
        let (h1, h2) = (t1 - t0, t2 - t1);
        let denom = h1 * h2 * (h1 + h2);
        let du = (h1 * h1 * u2 + (h2 * h2 - h1 * h1) * u1 - h2 * h2 * u0) / denom;
        let dv = (h1 * h1 * v2 + (h2 * h2 - h1 * h1) * v1 - h2 * h2 * v0) / denom;
        let ddu = 2.0 * (h1 * u2 - (h1 + h2) * u1 + h2 * u0) / denom;
        let ddv = 2.0 * (h1 * v2 - (h1 + h2) * v1 + h2 * v0) / denom;
        let speed = du.abs() + dv.abs();
        if (du * ddv - dv * ddu).abs() > tol * speed * speed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classify two distinct chords by where their supporting lines meet.
pub fn classify_pair(g1: &Geodesic, g2: &Geodesic, params: &ModelParams) -> Result<PairClass> {
    let eps = params.tol.angle_eps;
    if g1.coincides_with(g2, eps) {
        return Err(Error::CoincidentChords);
    }
    // shared ideal endpoint, by angular distance on the boundary circle
    for e1 in g1.endpoints() {
        for e2 in g2.endpoints() {
            if angle_diff(e1.angle(), e2.angle()).abs() <= eps {
                return Ok(PairClass::Asymptotic { ideal: e1 });
            }
        }
    }

    let line = |g: &Geodesic| {
        let [e0, e1] = g.endpoints();
        let (x0, y0) = e0.coords(params);
        let (x1, y1) = e1.coords(params);
        ((x0, y0), (x1 - x0, y1 - y0))
    };
    let ((x1, y1), (dx1, dy1)) = line(g1);
    let ((x2, y2), (dx2, dy2)) = line(g2);
    let det = dx1 * dy2 - dy1 * dx2;
    // parallel supporting lines never meet: ultraparallel
    if det.abs() <= 1e-14 * (dx1.hypot(dy1) * dx2.hypot(dy2)) {
        return Ok(PairClass::Ultraparallel);
    }
    let s = ((x2 - x1) * dy2 - (y2 - y1) * dx2) / det;
    let (ix, iy) = (x1 + s * dx1, y1 + s * dy1);

    let w_sq = params.w_sq(ix, iy);
    if w_sq > params.tol.boundary_eps {
        let point = params.disk_point(ix, iy)?;
        let mu = dy1.atan2(dx1);
        let nu = dy2.atan2(dx2);
        let angle = angles::chord_angle_map(&point, mu, nu, params)?;
        Ok(PairClass::Intersecting { point, angle })
    } else if w_sq.abs() <= params.tol.boundary_eps {
        // meeting on the circle without a shared stored endpoint: treat as
        // asymptotic at the meeting angle
        Ok(PairClass::Asymptotic {
            ideal: IdealPoint::new(iy.atan2(ix)),
        })
    } else {
        Ok(PairClass::Ultraparallel)
    }
}
