//! Underlying multicategories of symmetric monoidal categories.
//!
//! The crate builds the operad `Y` of symmetric monoidal structure, the
//! underlying multicategory `U_κC` of a symmetric monoidal category for any
//! choice `κ` of bracketings, and the comparison between lax symmetric
//! monoidal functors and multifunctors, together with executable checks of
//! the laws involved on the free symmetric monoidal category on one object.

pub mod adjunction;
pub mod error;
pub mod free;
pub mod functor;
pub mod multicat;
pub mod mutation;
pub mod operad;
pub mod report;
pub mod shapes;
pub mod smc;
pub mod symgrp;

pub use error::{Error, Result};
