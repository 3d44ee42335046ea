//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature off, [`Execution::Parallel`] runs sequentially.
//! Results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn filter_map_range<U, F>(self, range: std::ops::Range<u64>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(u64) -> Option<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => range.into_par_iter().filter_map(f).collect(),
            _ => range.filter_map(f).collect(),
        }
    }

    /// The result for the smallest index in `range` where `f` succeeds.
    pub fn find_first_range<U, F>(self, range: std::ops::Range<u64>, f: F) -> Option<U>
    where
        U: Send,
        F: Fn(u64) -> Option<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => range.into_par_iter().find_map_first(f),
            _ => range.into_iter().find_map(f),
        }
    }

    pub fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().flat_map_iter(f).collect(),
            _ => items.iter().flat_map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_in_order() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = Execution::Sequential.map(&items, |x| x * 3);
        let par = Execution::Parallel.map(&items, |x| x * 3);
        assert_eq!(seq, par);
        let f = |i: u64| i.is_multiple_of(7).then_some(i);
        assert_eq!(
            Execution::Sequential.filter_map_range(0..500, f),
            Execution::Parallel.filter_map_range(0..500, f)
        );
        let g = |x: &u32| vec![*x; (*x % 3) as usize];
        assert_eq!(
            Execution::Sequential.flat_map(&items, g),
            Execution::Parallel.flat_map(&items, g)
        );
        let h = |i: u64| (i > 100 && i.is_multiple_of(13)).then_some(i * 2);
        assert_eq!(Execution::Parallel.find_first_range(0..100_000, h), Some(208));
        assert_eq!(Execution::Sequential.find_first_range(0..100_000, h), Some(208));
        assert_eq!(Execution::Parallel.find_first_range(0..50, h), None);
    }
}
