//! Process-wide size guard for constructed objects.
//!
//! Semidirect products and pullbacks grow multiplicatively, so every
//! constructor checks the result size against these caps before building
//! tables.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 64;
pub const DEFAULT_MAX_DIM: usize = 12;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);
static MAX_DIM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DIM);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

pub fn limits() -> Limits {
    Limits {
        max_order: MAX_ORDER.load(Ordering::Relaxed),
        max_dim: MAX_DIM.load(Ordering::Relaxed),
    }
}

pub fn set_limits(l: Limits) {
    MAX_ORDER.store(l.max_order, Ordering::Relaxed);
    MAX_DIM.store(l.max_dim, Ordering::Relaxed);
}

pub(crate) fn check_order(size: usize) -> Result<()> {
    let cap = MAX_ORDER.load(Ordering::Relaxed);
    if size > cap {
        return Err(Error::Cap {
            what: "group order",
            size,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn check_dim(size: usize) -> Result<()> {
    let cap = MAX_DIM.load(Ordering::Relaxed);
    if size > cap {
        return Err(Error::Cap {
            what: "algebra dimension",
            size,
            cap,
        });
    }
    Ok(())
}
