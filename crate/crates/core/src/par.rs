//! Ordered data-parallel helpers.
//!
//! Every helper returns results in input order, so callers produce identical
//! output whether the `parallel` feature is enabled or not and whatever the
//! worker count.

/// How many workers a sweep may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    /// Use the global pool.
    #[default]
    Auto,
    /// A dedicated pool with this many threads.
    Threads(usize),
}

impl Parallelism {
    pub fn from_workers(workers: usize) -> Self {
        match workers {
            0 => Parallelism::Auto,
            1 => Parallelism::Sequential,
            n => Parallelism::Threads(n),
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_ordered<T, R, F>(items: &[T], mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match mode {
            Parallelism::Sequential => items.iter().map(f).collect(),
            Parallelism::Auto => items.par_iter().map(f).collect(),
            Parallelism::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build()
            {
                Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                Err(_) => items.iter().map(f).collect(),
            },
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = mode;
        items.iter().map(f).collect()
    }
}

/// Exact integer sum of `f(x)` over `0..n`.
pub fn sum_range<F>(n: u64, f: F) -> i64
where
    F: Fn(u64) -> i64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        // Small ranges are not worth the fork.
        if n >= 1 << 14 {
            return (0..n).into_par_iter().map(f).sum();
        }
    }
    (0..n).map(f).sum()
}
