//! A self-verifying kernel for the Beltrami-Klein disk model of the
//! hyperbolic plane.
//!
//! The disk of radius `a` carries the metric of a surface of constant
//! Gaussian curvature `-1/R^2`; geodesics are straight chords. This crate
//! implements the model's metric forms, distance and angle identities, curve
//! families, and the hyperboloid model behind it, with every closed form
//! paired against an independent numerical oracle (quadrature,
//! finite differences, root-finding, or the Minkowski bilinear form):
//!
//! - [`disk`] -- model parameters, interior/ideal points, coordinate forms
//! - [`metric`] -- the first fundamental form in all coordinate systems,
//!   arc-length quadrature, finite-difference Gaussian curvature
//! - [`geodesy`] -- distances (closed form and cross-ratio), chords,
//!   straightness, chord-pair classification
//! - [`angles`] -- true hyperbolic angles and the angle of parallelism
//! - [`curves`] -- geodesic circles, equidistants, horocycles
//! - [`area`] -- triangle area by angular defect and by quadrature
//! - [`hyperboloid`] -- lift/projection to the Minkowski sheet
//! - [`scene`] / [`render`] -- figure descriptions and SVG output
//! - [`verify`] -- the cross-check suite behind `beltrami verify`
//!
//! With the `parallel` feature (default), point sweeps and the verification
//! suite fan out over rayon; disable it for a fully sequential build.

pub mod angles;
pub mod area;
pub mod batch;
pub mod curves;
pub mod disk;
pub mod error;
pub mod geodesy;
pub mod hyperboloid;
pub mod metric;
pub mod render;
pub mod scene;
pub mod verify;

pub use disk::{
    cartesian_to_polar, make_disk_point, polar_to_cartesian, DiskPoint, EuclideanPolar, Geodesic,
    HyperbolicPolar, IdealPoint, ModelParams, Tolerances,
};
pub use error::{Error, Result};
