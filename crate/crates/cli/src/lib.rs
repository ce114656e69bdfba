//! Sweeps, comparison tables, and file formats for the `photon-qfi` catalog,
//! plus the argument grammar shared by the command-line front end.

pub mod report;
pub mod spec_arg;
