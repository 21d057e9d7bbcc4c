//! Execution strategy for the data-parallel loops.
//!
//! Every parallel site in the crate funnels through [`map_collect`], an
//! order-preserving map over an owned vector.  With the `parallel` feature
//! (on by default) it runs on the global rayon pool; without the feature it
//! is a plain sequential loop and rayon is not even compiled in.  A parallel
//! build can additionally be forced back to sequential execution at runtime
//! with [`force_sequential`], which is how the benchmarks compare the two
//! paths inside a single binary.

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force all parallel loops in this crate onto the calling thread.
///
/// No-op when the crate is built without the `parallel` feature (execution
/// is already sequential).  Intended for benchmarks and debugging; the
/// results are identical either way.
pub fn force_sequential(on: bool) {
    #[cfg(feature = "parallel")]
    FORCE_SEQUENTIAL.store(on, Ordering::Relaxed);
    #[cfg(not(feature = "parallel"))]
    let _ = on;
}

/// Whether parallel execution is currently in effect.
pub fn parallelism_enabled() -> bool {
    #[cfg(feature = "parallel")]
    {
        !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        false
    }
}

/// Map `f` over `items`, preserving order.
///
/// The closure runs on the rayon pool when parallelism is in effect, so the
/// results are identical to the sequential loop as long as `f` is pure —
/// which every caller in this crate guarantees.
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallelism_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}
