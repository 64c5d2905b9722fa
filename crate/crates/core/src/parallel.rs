//! Data-parallel helpers. With the `parallel` feature the work is spread
//! over a rayon pool; without it every call runs sequentially. Results are
//! always returned in input order.

/// How many workers a batch may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Jobs {
    #[default]
    Sequential,
    /// Use the global rayon pool.
    Auto,
    /// A dedicated pool with this many threads.
    Fixed(usize),
}

impl Jobs {
    /// `0` means auto, `1` sequential.
    pub fn from_count(n: usize) -> Self {
        match n {
            0 => Jobs::Auto,
            1 => Jobs::Sequential,
            k => Jobs::Fixed(k),
        }
    }
}

#[cfg(feature = "parallel")]
pub fn par_map<T, R, F>(items: &[T], jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        Jobs::Sequential => items.iter().map(f).collect(),
        Jobs::Auto => items.par_iter().map(f).collect(),
        Jobs::Fixed(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.iter().map(f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, R, F>(items: &[T], _jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Whether this build can actually run in parallel.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
