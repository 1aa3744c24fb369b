use rayon::prelude::*;

/// Default parallelism for searches.
pub fn default_shards() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Maps `f` over `units` on a pool of `shards` threads, preserving unit order.
pub(crate) fn map_units<U, T, F>(shards: usize, units: Vec<U>, f: F) -> Vec<T>
where
    U: Send,
    T: Send,
    F: Fn(U) -> Vec<T> + Send + Sync,
{
    if shards <= 1 {
        return units.into_iter().flat_map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(shards)
        .build()
        .expect("thread pool");
    pool.install(|| {
        units
            .into_par_iter()
            .map(f)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}
