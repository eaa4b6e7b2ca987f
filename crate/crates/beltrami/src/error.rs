use thiserror::Error;

/// Errors produced by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({u}, {v}) lies outside the disk of radius {a}")]
    OutsideDisk { u: f64, v: f64, a: f64 },

    #[error("point too close to the disk boundary (w^2 = {w_sq:e})")]
    NearBoundary { w_sq: f64 },

    #[error("coordinates must be finite")]
    NonFinite,

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("points coincide within tolerance")]
    DegeneratePair,

    #[error("chords coincide within tolerance")]
    CoincidentChords,

    #[error("directions coincide within tolerance")]
    EqualDirections,

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("sample parameters must be strictly increasing")]
    UnorderedSamples,

    #[error("distance must be strictly positive")]
    NonpositiveDistance,

    #[error("angles do not form a hyperbolic triangle (negative, or sum >= pi)")]
    InvalidAngles,

    #[error("right triangle degenerates: vertex would leave the disk (u >= a cos mu)")]
    DegenerateTriangle,

    #[error("triangle vertices are collinear")]
    CollinearVertices,

    #[error("quadrature did not converge within the refinement cap")]
    NoConvergence,

    #[error("point coincides with the horocycle's ideal centre")]
    AtIdealCenter,

    #[error("point off the hyperboloid sheet (constraint residual {residual:e})")]
    OffSheet { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
