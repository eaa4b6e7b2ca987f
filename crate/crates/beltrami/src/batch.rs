//! Data-parallel evaluation helpers.
//!
//! Locus sampling, random-point property sweeps, and the verification suite
//! all evaluate an independent function over an index range. With the
//! `parallel` feature (default) [`map`] fans the work out over rayon's thread
//! pool; without it the same call degrades to a plain sequential loop.
//! [`map_seq`] is always sequential and exists so benchmarks can compare the
//! two paths within one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluate `f` on `0..n`, in parallel when the `parallel` feature is on.
///
/// Results are returned in index order regardless of execution order.
pub fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(n, f)
    }
}

/// Sequential reference version of [`map`].
pub fn map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Fallible version of [`map`]; the first error wins.
pub fn try_map<T, E, F>(n: usize, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(usize) -> Result<T, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}
