//! Exact operator calculus for modified Macdonald polynomials over `Q(q, t)`.

pub mod error;
pub mod hspace;
pub mod pieri;
pub mod qalgebra;
pub mod qtcoeff;
pub mod shapes;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
pub use hspace::HExp;
pub use qtcoeff::{QtPoly, QtScalar};
pub use shapes::{Cell, Partition};
pub use symfun::{Basis, SymFun};

/// Drops every memoized table so that timings can start from a cold state.
pub fn clear_caches() {
    shapes::clear_cache();
    pieri::clear_cache();
    symfun::clear_cache();
    hspace::clear_cache();
    qalgebra::clear_cache();
}
