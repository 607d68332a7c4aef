//! Order-preserving maps over a slice: rayon when the `parallel` feature is on,
//! a plain iterator otherwise or when one worker is requested.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when this build can run work on more than one thread.
pub const PARALLEL: bool = cfg!(feature = "parallel");

/// Maps on rayon's global pool.
#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Maps on a dedicated pool of `jobs` threads; inline for `jobs <= 1`.
#[cfg(feature = "parallel")]
pub(crate) fn map_with_jobs<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_with_jobs<T, R, F>(items: &[T], _jobs: usize, f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
