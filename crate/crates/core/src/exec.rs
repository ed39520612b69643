//! Execution strategy for the data-parallel hot loops.
//!
//! With the `parallel` feature disabled, [`Exec::Parallel`] runs sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Applies `f` to every item, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Keeps the items satisfying `keep`, preserving order.
    pub fn filter<T, F>(self, items: Vec<T>, keep: F) -> Vec<T>
    where
        T: Send + Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().filter(|x| keep(x)).collect()
            }
            _ => items.into_iter().filter(|x| keep(x)).collect(),
        }
    }
}
