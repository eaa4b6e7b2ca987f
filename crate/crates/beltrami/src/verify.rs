//! The self-verification suite: every closed-form identity the kernel
//! implements, re-measured against an independent numerical route at a fixed
//! tolerance. `beltrami verify` runs these and reports one line per check;
//! the acceptance tests run the same functions.
//!
//! All randomness is seeded, so reports are byte-identical between runs.
//! Checks are independent and run through [`crate::batch::map`], which
//! parallelizes under the `parallel` feature; the report order is fixed
//! either way.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angles::{angle_of_parallelism, coordinate_curve_angle};
use crate::area::{area_quadrature, mu_prime, triangle_area_defect, Triangle};
use crate::batch;
use crate::curves::{circle_locus, circle_path, circumference, equidistant_path, horocycle_path};
use crate::disk::{DiskPoint, IdealPoint, ModelParams};
use crate::geodesy::{
    chord_through, cosh_from_r, cross_ratio_distance, dist_from_origin, distance, is_straight,
};
use crate::hyperboloid::{
    hyperboloid_distance, lift_pushforward, lift_to_hyperboloid, polar_metric_check,
    polar_parametrization, project_to_disk, HyperboloidPolar,
};
use crate::metric::{
    arc_length, fundamental_form, gauss_curvature, hyperbolic_polar_line_element_sq,
    ParametricCurve,
};

/// One verification check: `passed` iff `|measured - expected| <= tolerance`.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
}

impl Check {
    fn judge(name: &'static str, measured: f64, expected: f64, tolerance: f64) -> Self {
        let passed = measured.is_finite() && (measured - expected).abs() <= tolerance;
        Check {
            name,
            passed,
            measured,
            expected,
            tolerance,
        }
    }

    /// Deviation-style check: `measured` is a worst-case absolute deviation.
    fn deviation(name: &'static str, worst: f64, tolerance: f64) -> Self {
        Self::judge(name, worst, 0.0, tolerance)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} measured={:.6e} expected={:.6e} tol={:.3e}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.measured,
            self.expected,
            self.tolerance
        )
    }
}

/// Outcome of a full verification run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

fn unit() -> ModelParams {
    ModelParams::unit()
}

fn rng_for(check: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xBE17_7A31 ^ check)
}

/// Uniform sample over the disk of radius `frac * a`.
fn sample_disk(rng: &mut ChaCha8Rng, params: &ModelParams, frac: f64) -> DiskPoint {
    let r = frac * params.a * rng.gen::<f64>().sqrt();
    let t = rng.gen::<f64>() * TAU;
    params
        .disk_point(r * t.cos(), r * t.sin())
        .expect("sample is interior by construction")
}

fn radial_path(r_end: f64) -> ParametricCurve<'static> {
    ParametricCurve::new(0.0, r_end, |t| (t, 0.0)).with_derivative(|_| (1.0, 0.0))
}

/// Radial arc length by quadrature vs `(R/2) log[(a+r)/(a-r)]`.
pub fn check_distance_closed_form_vs_quadrature(tol_scale: f64) -> Check {
    let params = unit();
    let mut worst: f64 = 0.0;
    for &r in &[0.1, 0.5, 0.9, 0.99] {
        let quad = arc_length(&radial_path(r), &params, 1e-11).unwrap_or(f64::NAN);
        let closed = 0.5 * ((1.0 + r) / (1.0 - r)).ln();
        worst = worst.max((quad - closed).abs());
    }
    Check::deviation(
        "distance_closed_form_vs_quadrature",
        worst,
        1e-9 * tol_scale,
    )
}

/// `cosh(rho(r)) = a / sqrt(a^2 - r^2)` on random radii (relative).
pub fn check_cosh_distance_identity(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(2);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let r: f64 = rng.gen();
        let lhs = (dist_from_origin(r, &params).unwrap() / params.r).cosh();
        let rhs = cosh_from_r(r, &params).unwrap();
        worst = worst.max(((lhs - rhs) / rhs).abs());
    }
    Check::deviation("cosh_distance_identity", worst, 1e-13 * tol_scale)
}

/// Cross-ratio distance equals the closed-form distance on random pairs.
pub fn check_cross_ratio_matches_distance(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let p = sample_disk(&mut rng, &params, 0.9);
        let q = sample_disk(&mut rng, &params, 0.9);
        if (p.u() - q.u()).hypot(p.v() - q.v()) < 1e-6 {
            continue;
        }
        let d1 = cross_ratio_distance(&p, &q, &params).unwrap_or(f64::NAN);
        let d2 = distance(&p, &q, &params).unwrap_or(f64::NAN);
        worst = worst.max((d1 - d2).abs());
    }
    Check::deviation("cross_ratio_matches_distance", worst, 1e-10 * tol_scale)
}

/// Quadrature around origin-centred circles vs `2 pi R sinh(rho/R)`.
pub fn check_circumference_quadrature(tol_scale: f64) -> Check {
    let params = unit();
    let mut worst: f64 = 0.0;
    for &rho in &[0.25, 0.5, 1.0, 2.0] {
        let quad = arc_length(&circle_path(rho, &params), &params, 1e-9).unwrap_or(f64::NAN);
        worst = worst.max((quad - circumference(rho, &params)).abs());
    }
    Check::deviation("circumference_quadrature", worst, 1e-7 * tol_scale)
}

/// The `rho = atanh(1/2)` circle has circumference `2 pi / sqrt 3`.
pub fn check_circumference_at_half_radius(tol_scale: f64) -> Check {
    let params = unit();
    let rho = 0.5f64.atanh();
    let quad = arc_length(&circle_path(rho, &params), &params, 1e-10).unwrap_or(f64::NAN);
    Check::judge(
        "circumference_at_half_radius",
        quad,
        2.0 * PI / 3f64.sqrt(),
        1e-8 * tol_scale,
    )
}

/// The perpendicular foot at `r = 1/2` gives the parallelism angle `pi/3`,
/// via both the closed form and the boundary construction.
pub fn check_parallelism_at_half_radius(tol_scale: f64) -> Check {
    let params = unit();
    let rho = dist_from_origin(0.5, &params).unwrap();
    let from_formula = angle_of_parallelism(rho, &params).unwrap();
    let from_geometry = (1.0f64 - 0.25).sqrt().atan2(0.5);
    let worst = (from_formula - FRAC_PI_3)
        .abs()
        .max((from_geometry - FRAC_PI_3).abs());
    Check::deviation("parallelism_at_half_radius", worst, 1e-12 * tol_scale)
}

/// `arccot(sinh(rho/R))` agrees with `2 atan(e^(-rho/R))` across scales.
pub fn check_parallelism_two_forms(tol_scale: f64) -> Check {
    let params = unit();
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let rho = 1e-6 * (50.0f64 / 1e-6).powf(i as f64 / 99.0);
        let theta = angle_of_parallelism(rho, &params).unwrap();
        let lobachevsky = 2.0 * (-rho / params.r).exp().atan();
        worst = worst.max((theta - lobachevsky).abs());
    }
    Check::deviation("parallelism_two_forms", worst, 1e-13 * tol_scale)
}

/// The coordinate-curve angle satisfies `cos^2 + sin^2 = 1` everywhere and is
/// a right angle on the axes (catches any corruption of the angle formulas).
pub fn check_coordinate_angle_identity(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(20);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let p = sample_disk(&mut rng, &params, 0.95);
        let (cos, sin, _) = coordinate_curve_angle(&p, &params).unwrap();
        worst = worst.max((cos * cos + sin * sin - 1.0).abs());
    }
    for i in 1..10 {
        let x = 0.09 * i as f64;
        let on_u = params.disk_point(x, 0.0).unwrap();
        let on_v = params.disk_point(0.0, x).unwrap();
        worst = worst.max((coordinate_curve_angle(&on_u, &params).unwrap().2 - FRAC_PI_2).abs());
        worst = worst.max((coordinate_curve_angle(&on_v, &params).unwrap().2 - FRAC_PI_2).abs());
    }
    Check::deviation("coordinate_angle_identity", worst, 1e-13 * tol_scale)
}

/// Quadrature area of the canonical right triangle vs its angular defect.
pub fn check_right_triangle_area_defect(tol_scale: f64) -> Check {
    let params = unit();
    let tri = Triangle::interior(
        params.disk_point(0.0, 0.0).unwrap(),
        params.disk_point(0.5, 0.0).unwrap(),
        params.disk_point(0.5, 0.5).unwrap(),
        &params,
    )
    .unwrap();
    let quad = area_quadrature(&tri, &params, 1e-9).unwrap_or(f64::NAN);
    let mu_p = mu_prime(0.5, FRAC_PI_4, &params).unwrap();
    let defect = triangle_area_defect(FRAC_PI_2, FRAC_PI_4, mu_p, &params).unwrap();
    Check::judge("right_triangle_area_defect", quad, defect, 1e-6 * tol_scale)
}

/// Quadrature equals defect on random interior triangles.
pub fn check_random_triangle_area_defect(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(9);
    let mut worst: f64 = 0.0;
    let mut produced = 0;
    while produced < 100 {
        let p0 = sample_disk(&mut rng, &params, 0.8);
        let p1 = sample_disk(&mut rng, &params, 0.8);
        let p2 = sample_disk(&mut rng, &params, 0.8);
        let sep = |x: &DiskPoint, y: &DiskPoint| (x.u() - y.u()).hypot(x.v() - y.v());
        let signed = (p1.u() - p0.u()) * (p2.v() - p0.v()) - (p2.u() - p0.u()) * (p1.v() - p0.v());
        if sep(&p0, &p1) < 0.15
            || sep(&p1, &p2) < 0.15
            || sep(&p0, &p2) < 0.15
            || signed.abs() < 0.02
        {
            continue;
        }
        produced += 1;
        let tri = Triangle::interior(p0, p1, p2, &params).unwrap();
        let [a, b, c] = tri.angles(&params).unwrap();
        let defect = triangle_area_defect(a, b, c, &params).unwrap_or(f64::NAN);
        let quad = area_quadrature(&tri, &params, 1e-8).unwrap_or(f64::NAN);
        worst = worst.max((quad - defect).abs());
    }
    Check::deviation("random_triangle_area_defect", worst, 1e-5 * tol_scale)
}

/// Extrapolated quadrature of the all-ideal triangle reaches `pi R^2`.
pub fn check_ideal_triangle_area(tol_scale: f64) -> Check {
    let params = unit();
    let tri = Triangle::ideal([0.0, TAU / 3.0, 2.0 * TAU / 3.0], &params).unwrap();
    let quad = area_quadrature(&tri, &params, 1e-9).unwrap_or(f64::NAN);
    Check::judge("ideal_triangle_area", quad, PI, 1e-4 * tol_scale)
}

/// Finite-difference Brioschi curvature equals `-1/R^2` everywhere.
pub fn check_gauss_curvature_constant(tol_scale: f64) -> Check {
    let mut rng = rng_for(11);
    let mut worst: f64 = 0.0;
    for (a, r) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)] {
        let params = ModelParams::new(a, r).unwrap();
        for _ in 0..100 {
            let p = sample_disk(&mut rng, &params, 0.9);
            let k = gauss_curvature(&p, &params).unwrap_or(f64::NAN);
            worst = worst.max((k - params.curvature()).abs());
        }
    }
    Check::deviation("gauss_curvature_constant", worst, 1e-6 * tol_scale)
}

/// Concentric horocyclic arcs between the same axes decay by `e^(-tau/R)`.
pub fn check_horocycle_arc_decay(tol_scale: f64) -> Check {
    let params = unit();
    let ideal = IdealPoint::new(0.0);
    let near = arc_length(
        &horocycle_path(ideal, 0.0, 0.0, 1.0, &params),
        &params,
        1e-10,
    );
    let far = arc_length(
        &horocycle_path(ideal, 2f64.ln(), 0.0, 1.0, &params),
        &params,
        1e-10,
    );
    let ratio = match (near, far) {
        (Ok(s1), Ok(s2)) => s2 / s1,
        _ => f64::NAN,
    };
    Check::judge("horocycle_arc_decay", ratio, 0.5, 1e-6 * tol_scale)
}

/// Arc length along an equidistant grows by the factor `cosh(xi/R)`.
pub fn check_equidistant_arc_length(tol_scale: f64) -> Check {
    let params = unit();
    let len =
        arc_length(&equidistant_path(0.5, 0.0, 0.7, &params), &params, 1e-10).unwrap_or(f64::NAN);
    Check::judge(
        "equidistant_arc_length",
        len,
        0.7 * 0.5f64.cosh(),
        1e-7 * tol_scale,
    )
}

/// The Minkowski bilinear form reproduces the disk distance on random pairs.
pub fn check_minkowski_distance_oracle(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(14);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let p = sample_disk(&mut rng, &params, 0.9);
        let q = sample_disk(&mut rng, &params, 0.9);
        let via_sheet = hyperboloid_distance(
            &lift_to_hyperboloid(&p, &params).unwrap(),
            &lift_to_hyperboloid(&q, &params).unwrap(),
            &params,
        );
        let via_disk = distance(&p, &q, &params).unwrap_or(f64::NAN);
        worst = worst.max((via_sheet - via_disk).abs());
    }
    Check::deviation("minkowski_distance_oracle", worst, 1e-10 * tol_scale)
}

/// Lift/project round-trips in both directions, componentwise.
pub fn check_hyperboloid_round_trip(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(15);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let p = sample_disk(&mut rng, &params, 0.999);
        let back = project_to_disk(&lift_to_hyperboloid(&p, &params).unwrap(), &params);
        worst = worst.max((back.u() - p.u()).abs() / params.a);
        worst = worst.max((back.v() - p.v()).abs() / params.a);

        let q = HyperboloidPolar {
            m: 3.0 * rng.gen::<f64>(),
            theta: TAU * rng.gen::<f64>(),
        };
        let h = polar_parametrization(&q, &params);
        let again = lift_to_hyperboloid(&project_to_disk(&h, &params), &params).unwrap();
        let (hx, hy, hz) = h.coords();
        let (gx, gy, gz) = again.coords();
        worst = worst.max((gx - hx).abs() / params.r.max(hx.abs()));
        worst = worst.max((gy - hy).abs() / params.r.max(hy.abs()));
        worst = worst.max((gz - hz).abs() / params.r.max(hz.abs()));
    }
    Check::deviation("hyperboloid_round_trip", worst, 1e-13 * tol_scale)
}

/// Pushing the Minkowski form through the lift reproduces E, F, G.
pub fn check_metric_pushforward(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(16);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let p = sample_disk(&mut rng, &params, 0.9);
        let measured = lift_pushforward(&p, &params).unwrap();
        let closed = fundamental_form(&p, &params).unwrap();
        worst = worst.max((measured.e - closed.e).abs());
        worst = worst.max((measured.f - closed.f).abs());
        worst = worst.max((measured.g - closed.g).abs());
    }
    Check::deviation("metric_pushforward", worst, 1e-6 * tol_scale)
}

/// Measured polar-sheet coefficients equal `(R^2, R^2 sinh^2 m)` and bridge
/// to the hyperbolic-polar line element at `rho = R m`.
pub fn check_polar_metric_bridge(tol_scale: f64) -> Check {
    let mut worst: f64 = 0.0;
    for r in [1.0, 2.0] {
        let params = ModelParams::new(1.0, r).unwrap();
        for &m in &[0.1, 0.5, 1.0, 2.0] {
            let (dm, dtheta) = polar_metric_check(m, 0.7, &params);
            worst = worst.max((dm - r * r).abs());
            worst = worst.max((dtheta - r * r * m.sinh() * m.sinh()).abs());
            // bridge at rho = R m: a unit step in m is a step of R in rho
            let rho = r * m;
            worst = worst.max((dm - hyperbolic_polar_line_element_sq(rho, r, 0.0, &params)).abs());
            worst = worst
                .max((dtheta - hyperbolic_polar_line_element_sq(rho, 0.0, 1.0, &params)).abs());
        }
    }
    Check::deviation("polar_metric_bridge", worst, 1e-6 * tol_scale)
}

/// Sampled chords pass the straightness test; circle loci fail it.
pub fn check_chords_are_straight(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(18);
    let mut wrong = 0usize;
    for _ in 0..10 {
        let p = sample_disk(&mut rng, &params, 0.8);
        let q = sample_disk(&mut rng, &params, 0.8);
        if (p.u() - q.u()).hypot(p.v() - q.v()) < 0.1 {
            continue;
        }
        let [e0, e1] = chord_through(&p, &q, &params).unwrap().endpoints();
        let (x0, y0) = e0.coords(&params);
        let (x1, y1) = e1.coords(&params);
        let samples: Vec<_> = (0..21)
            .map(|i| {
                let t = 0.05 + 0.9 * i as f64 / 20.0;
                (t, x0 + t * (x1 - x0), y0 + t * (y1 - y0))
            })
            .collect();
        if !is_straight(&samples, 1e-6).unwrap_or(false) {
            wrong += 1;
        }
    }
    for center in [(0.3, 0.0), (-0.2, 0.4)] {
        let c = params.disk_point(center.0, center.1).unwrap();
        let pts = circle_locus(&c, 0.5, 33, &params).unwrap();
        let samples: Vec<_> = pts
            .iter()
            .enumerate()
            .map(|(k, p)| (k as f64, p.u(), p.v()))
            .collect();
        if is_straight(&samples, 1e-6).unwrap_or(true) {
            wrong += 1;
        }
    }
    // tolerance scaling does not apply to a counting check
    let _ = tol_scale;
    Check::deviation("chords_are_straight", wrong as f64, 0.5)
}

/// Distance is a metric (symmetry, positivity, identity, triangle
/// inequality) and is invariant under rotations about the centre.
pub fn check_metric_space_axioms(tol_scale: f64) -> Check {
    let params = unit();
    let mut rng = rng_for(19);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let p = sample_disk(&mut rng, &params, 0.9);
        let q = sample_disk(&mut rng, &params, 0.9);
        let s = sample_disk(&mut rng, &params, 0.9);
        let d_pq = distance(&p, &q, &params).unwrap();
        let d_qp = distance(&q, &p, &params).unwrap();
        worst = worst.max((d_pq - d_qp).abs());
        worst = worst.max(-d_pq.min(0.0));
        worst = worst.max(distance(&p, &p, &params).unwrap().abs());
        if (p.u() - q.u()).hypot(p.v() - q.v()) > 1e-9 && d_pq == 0.0 {
            worst = worst.max(1.0);
        }
        let d_ps = distance(&p, &s, &params).unwrap();
        let d_qs = distance(&q, &s, &params).unwrap();
        worst = worst.max((d_ps - (d_pq + d_qs)).max(0.0));

        let phi = TAU * rng.gen::<f64>();
        let (sin, cos) = phi.sin_cos();
        let rot = |x: &DiskPoint| {
            params
                .disk_point(x.u() * cos - x.v() * sin, x.u() * sin + x.v() * cos)
                .expect("rotation preserves interiority")
        };
        let d_rot = distance(&rot(&p), &rot(&q), &params).unwrap();
        worst = worst.max((d_rot - d_pq).abs());
    }
    Check::deviation("metric_space_axioms", worst, 1e-12 * tol_scale)
}

/// Every check, in fixed report order.
pub fn run_all(tol_scale: f64) -> VerifyReport {
    let checks: [fn(f64) -> Check; 20] = [
        check_distance_closed_form_vs_quadrature,
        check_cosh_distance_identity,
        check_cross_ratio_matches_distance,
        check_circumference_quadrature,
        check_circumference_at_half_radius,
        check_parallelism_at_half_radius,
        check_parallelism_two_forms,
        check_coordinate_angle_identity,
        check_right_triangle_area_defect,
        check_random_triangle_area_defect,
        check_ideal_triangle_area,
        check_gauss_curvature_constant,
        check_horocycle_arc_decay,
        check_equidistant_arc_length,
        check_minkowski_distance_oracle,
        check_hyperboloid_round_trip,
        check_metric_pushforward,
        check_polar_metric_bridge,
        check_chords_are_straight,
        check_metric_space_axioms,
    ];
    VerifyReport {
        checks: batch::map(checks.len(), |i| checks[i](tol_scale)),
    }
}
