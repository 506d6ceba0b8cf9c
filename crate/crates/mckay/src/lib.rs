//! Exact, desk-scale verification of a McKay-type character bijection for
//! `GL_n(εq)` and `SL_n(εq)`.
//!
//! The global side parametrizes `Irr(GL_n(εq))` by semisimple classes and
//! unipotent labels; the local side parametrizes the characters of the
//! normalizer of a Sylow `Φ_d`-torus by Clifford theory. A small matrix-group
//! toolkit with an exact character-table routine serves as the oracle.

pub mod bijection;
pub mod charparams;
pub mod dixon;
pub mod error;
pub mod exactfield;
pub mod gggr;
pub mod localside;
pub mod matrixoracle;
pub mod partitions;
pub mod ssclasses;

pub use error::{Error, Result};
