//! Torus-equivariant Schubert calculus on flag varieties `G/P` in the
//! fixed-point localization model, with exact arithmetic throughout.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod char_classes;
pub mod error;
pub mod gkm;
pub mod operators;
pub mod quantum;
pub mod root_system;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};
