//! Exact walk counts on McKay quivers, tensor-power decompositions and
//! centralizer dimensions for finite groups.

pub mod arith;
pub mod closed_forms;
pub mod combinat;
pub mod diagram;
pub mod error;
pub mod group;
pub mod quiver;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

/// Environment variable capping the worker threads; 0 or unset means one per core.
pub const THREADS_ENV: &str = "TENSOR_WALKS_THREADS";

/// Configures the global rayon pool from [`THREADS_ENV`]. Returns the thread count in effect.
/// Calling it after the pool exists leaves the pool unchanged.
pub fn init_thread_pool() -> Result<usize> {
    let requested = match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            Error::invalid(format!("{THREADS_ENV} must be a nonnegative integer, got '{s}'"))
        })?,
        Err(_) => 0,
    };
    // A second initialisation fails harmlessly; the existing pool stays in use.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(requested).build_global();
    Ok(rayon::current_num_threads())
}
