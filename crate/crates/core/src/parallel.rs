//! Data-parallel batch helpers. With the `parallel` feature (on by default)
//! batches run on the rayon pool; without it, or with
//! [`Execution::Sequential`], they run in order on the calling thread.
//! Output order always matches input order.

use crate::error::Result;
use crate::exact::{Coeff, LambdaMode, XPoly};
use crate::represent::{represent_higher_order, FormulaVariant, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether parallel execution is compiled in.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], mode: Execution, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Expands every polynomial of a batch in the order-`r` basis for `mode`.
pub fn represent_batch<C: Coeff>(
    polys: &[XPoly<C>],
    r: usize,
    mode: &LambdaMode,
    variant: FormulaVariant,
    execution: Execution,
) -> Result<Vec<Representation<C>>> {
    map(polys, execution, |p| represent_higher_order(p, r, mode, variant)).into_iter().collect()
}
