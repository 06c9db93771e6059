//! Execution strategy for data-parallel loops.
//!
//! Kernels only ever parallelize over *disjoint* output slices, keeping the
//! per-element accumulation order fixed. `Seq` and `Par` therefore produce
//! bit-identical results; `Par` without the `parallel` feature degrades to
//! the sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How batch-parallel kernels split their work.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// Single-threaded reference path.
    Seq,
    /// Parallel over independent output slices (rayon) when the `parallel`
    /// feature is enabled; otherwise identical to `Seq`.
    #[default]
    Par,
}

/// Apply `f` to each `chunk`-sized slice of `data`. `data.len()` must be a
/// multiple of `chunk`.
pub(crate) fn for_each_chunk_mut<T, F>(exec: Exec, data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    debug_assert!(chunk > 0 && data.len() % chunk == 0);
    match exec {
        Exec::Seq => {
            for (i, c) in data.chunks_mut(chunk).enumerate() {
                f(i, c);
            }
        }
        Exec::Par => {
            #[cfg(feature = "parallel")]
            {
                data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
            }
            #[cfg(not(feature = "parallel"))]
            {
                for (i, c) in data.chunks_mut(chunk).enumerate() {
                    f(i, c);
                }
            }
        }
    }
}

/// Collect `f(0..n)` in index order.
pub(crate) fn map_collect<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    match exec {
        Exec::Seq => (0..n).map(f).collect(),
        Exec::Par => {
            #[cfg(feature = "parallel")]
            {
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}
