//! Measurement harness for the hqc crate: repeated timing with
//! per-component breakdowns, a multiplication threshold sweep, and the
//! differential self-test suite. The `hqc-bench` binary is a thin CLI over
//! these modules.

pub mod bench;
pub mod selftest;
pub mod sweep;
