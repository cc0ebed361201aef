//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon; without it, or with [`Parallelism::Sequential`], they run in order.
//! Results never depend on the mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

/// `items.map(f)` preserving order.
pub fn map<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// First item (in slice order) for which `f` returns `Some`.
pub fn find_map_first<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => items.par_iter().find_map_first(f),
        _ => items.iter().find_map(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let f = |x: &u64| (x % 97 == 96 && *x > 300).then_some(*x);
        assert_eq!(
            find_map_first(Parallelism::Sequential, &xs, f),
            find_map_first(Parallelism::Parallel, &xs, f)
        );
        assert_eq!(
            map(Parallelism::Sequential, &xs, |x| x * x),
            map(Parallelism::Parallel, &xs, |x| x * x)
        );
    }
}
