//! Bayesian federated inference for parametric proportional-hazards survival
//! models.
//!
//! Each center fits the local maximum-a-posteriori estimate of a
//! proportional-hazards model `λ(t|z) = λ₀(t|ω)·exp(zᵀβ)` with a parametric
//! baseline hazard and a zero-mean Gaussian prior, then ships only the mode
//! and the local curvature matrix. A single aggregation step combines the
//! payloads into an approximation of the estimate the pooled data would have
//! produced. No individual-level data ever leaves a center.
//!
//! The crate is `no_std` (alloc required) and holds the numerics only; file
//! formats, the federation transport and the CLI live in the companion `bfi`
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod aggregate;
pub mod data;
pub mod error;
pub mod fit;
pub mod hazard;
pub mod posterior;
pub mod quad;
pub mod simulate;
pub mod special;

pub use error::{Error, Result};
