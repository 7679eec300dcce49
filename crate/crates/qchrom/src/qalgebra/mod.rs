//! Exact arithmetic in Z[q], Q(q), and Q(q)[x].
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here can be shared freely across workers.

mod interp;
mod qfuncs;
mod qpoly;
mod qrat;
mod xpoly;
mod zgcd;

pub use interp::lagrange_interpolate;
pub use qfuncs::{q_binomial, q_factorial, q_int, q_int_poly, q_int_pow};
pub use qpoly::QPoly;
pub use qrat::QRat;
pub use xpoly::XPoly;
