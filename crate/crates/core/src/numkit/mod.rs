//! Minimal dense numeric core: row-major f32 matrices, dense layers with
//! hand-written backprop, Adam, and finite-difference gradient checking.
//!
//! Everything here is single-threaded and deterministic given identical
//! inputs and state. Values are stored as f32; dot products and loss
//! reductions accumulate in f64.

mod adam;
mod gradcheck;
mod layer;
mod matrix;

pub use adam::{adam_step, AdamState};
pub use gradcheck::{max_relative_error, relative_error, sample_coords};
pub use layer::{tower_backward, tower_forward, Activation, DenseLayer};
pub use matrix::{dot_f64, Matrix};
