//! Degree-slice execution. Graded pieces are independent work units; with the
//! `parallel` feature they are evaluated on the rayon pool, otherwise in
//! order on the calling thread. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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
    pub fn map<I, T, F>(self, items: Vec<I>, f: F) -> Vec<T>
    where
        I: Send,
        T: Send,
        F: Fn(I) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().map(f).collect(),
            _ => items.into_iter().map(f).collect(),
        }
    }

    pub fn map_degrees<T, F>(self, degrees: std::ops::RangeInclusive<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.map(degrees.collect(), f)
    }

    /// True when every item satisfies `pred`.
    pub fn all<I, F>(self, items: Vec<I>, pred: F) -> bool
    where
        I: Send,
        F: Fn(I) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().all(pred),
            _ => items.into_iter().all(pred),
        }
    }
}
