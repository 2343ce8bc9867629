//! Ordered map over work items, parallel when the `rayon` feature is on.

/// How scans distribute segments over workers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    /// Falls back to serial when built without the `rayon` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "rayon") && matches!(self, Execution::Parallel)
    }
}

/// `items.into_iter().map(f).collect()`, preserving order.
pub fn map_ordered<T, R, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "rayon")]
    {
        if exec.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Worker threads available to parallel scans.
pub fn worker_count() -> usize {
    #[cfg(feature = "rayon")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "rayon"))]
    {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let out = map_ordered(Execution::Parallel, (0..1000).collect(), |i: u32| i * 2);
        assert_eq!(out, (0..1000).map(|i| i * 2).collect::<Vec<_>>());
        let serial = map_ordered(Execution::Serial, (0..1000).collect(), |i: u32| i * 2);
        assert_eq!(out, serial);
    }
}
