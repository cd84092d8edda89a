//! Locally recoverable codes: finite fields, code and graph primitives,
//! parameter bounds, explicit constructions and property verifiers.
//!
//! The crate is `no_std` with `alloc`. File formats and the command-line
//! front end live in `lrc-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod code;
pub mod combi;
pub mod construct_seq;
pub mod error;
pub mod field;
pub mod graph;
pub mod lr_avail;
pub mod mr;
pub mod rng;
pub mod verify;

pub use code::{CodeParams, LinearCode, Role};
pub use error::{Error, Result};
pub use field::{Fe, FieldSpec, Mat};
pub use graph::{EdgeColoring, Graph};
