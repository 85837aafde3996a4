//! Library surface of the command-line tool: demo computations and the
//! adaptive quadrature they use. The binary in `main.rs` is a thin
//! formatting and dispatch layer over this.

pub mod demos;
pub mod quad;
