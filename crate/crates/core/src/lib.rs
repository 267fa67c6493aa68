//! Triangulations of 3-manifolds, normal surfaces, and the width parameters
//! of their dual graphs.
//!
//! The crate is `no_std` with `alloc`. File formats, the command line tool
//! and anything needing the operating system live in the `tetwidth` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complex;
pub mod gen;
pub mod graph;
pub mod hypbounds;
pub mod normal;
pub mod perm;
pub mod tri;
pub mod unionfind;
pub mod width;

pub use graph::{MultiGraph, PortGraph};
pub use perm::Perm4;
pub use tri::{FaceGluing, Gluing, Kind, Triangulation, TriError};
