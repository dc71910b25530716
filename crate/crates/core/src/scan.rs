//! Ordered parallel maps over integer ranges.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Map `f` over `lo..=hi` on `threads` workers, results in ascending order.
///
/// Output is independent of `threads`: workers split the range but the
/// collected vector is always assembled in index order.
pub fn map_range<T, F>(lo: u64, hi: u64, threads: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    if hi < lo {
        return Ok(Vec::new());
    }
    if threads <= 1 {
        return (lo..=hi).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| (lo..=hi).into_par_iter().map(f).collect())
}

/// Like [`map_range`] but drops `None`s.
pub fn filter_map_range<T, F>(lo: u64, hi: u64, threads: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<Option<T>> + Sync + Send,
{
    Ok(map_range(lo, hi, threads, f)?
        .into_iter()
        .flatten()
        .collect())
}
