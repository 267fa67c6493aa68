//! File formats, seeded fixtures and the `tetwidth` command line tool built
//! on [`tetwidth_core`].

pub mod cli;
pub mod formats;
pub mod random;

pub use tetwidth_core as core;
