//! Data-parallel helpers for the batch sweeps. With the `parallel` feature
//! (the default) the work fans out over rayon; without it the same calls run
//! sequentially. Results keep input order either way.

#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: &[T], map_op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(map_op).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: &[T], map_op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(map_op).collect()
}

/// Always-sequential twin of [`map_collect`], kept for benchmarking the
/// parallel speedup against the same workload.
pub fn map_collect_seq<T, R, F>(items: &[T], map_op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(map_op).collect()
}
