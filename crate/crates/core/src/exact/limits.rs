//! Process-wide bound on polynomial degree and series order.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: usize = 64;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

/// Sets the guard. Intended to be called once at start-up (the CLI does this
/// from `--max-degree`).
pub fn set_max_degree(max: usize) {
    MAX_DEGREE.store(max, Ordering::Relaxed);
}

pub fn check_degree(requested: usize) -> Result<()> {
    let max = max_degree();
    if requested > max {
        return Err(Error::GuardExceeded { requested, max });
    }
    Ok(())
}
