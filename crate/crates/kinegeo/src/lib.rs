//! Exact verification engine for the kinematical algebras, their contractions
//! and the Beltrami-coordinate geometries they act on.
//!
//! Everything is computed over ℚ: scalars are rational functions in the chart
//! coordinates `x0 = ct, x1, x2, x3`, the invariant parameters `c`, `l` and a
//! formal contraction parameter `eps`.

pub mod exactnum;
pub mod liefields;
pub mod geometry;
pub mod catalog;
pub mod contraction;
pub mod speccli;
