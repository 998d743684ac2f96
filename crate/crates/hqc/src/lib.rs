//! HQC key encapsulation over quasi-cyclic binary codes, built around three
//! performance-oriented kernels: ring multiplication that synthesizes
//! sparse-by-dense products from rotated copies with a weight-aware dense
//! fallback, SHAKE256 with fused absorb/squeeze and batched hashing, and a
//! table-driven Reed-Solomon encoder plus nibble-sliced syndrome computation.
//!
//! # Layout
//!
//! - [`params`]: the three standardized parameter sets and derived sizes.
//! - [`shake`]: SHAKE256, domain-separated derivations, PRNG and samplers.
//! - [`gf256`]: GF(2^8) arithmetic and the precomputed lookup tables.
//! - [`ring`]: arithmetic in GF(2)[X]/(X^N - 1).
//! - [`codec`]: the concatenated Reed-Solomon / duplicated Reed-Muller code.
//! - [`kem`]: PKE and KEM operations with serialization.
//! - [`perf`]: opt-in span timing and operation tracing.
//!
//! The `oracle` feature adds naive reference kernels and baseline flows used
//! by the differential tests and the benchmark harness.
//!
//! # Example
//!
//! ```
//! use hqc::{get_params, kem, ParamName};
//!
//! let params = get_params(ParamName::Hqc1);
//! let (pk, sk) = kem::keygen(&[7u8; 32], params);
//! let (ct, key_sent) = kem::encap(&pk, &[9u8; 32]);
//! let key_received = kem::decap(&sk, &ct);
//! assert_eq!(key_sent, key_received);
//! ```
//!
//! This crate is a research implementation: it has not been audited and its
//! serialization is not interoperable with the NIST submission's byte
//! formats.

pub mod codec;
pub mod gf256;
pub mod kem;
pub mod params;
pub mod perf;
pub mod ring;
pub mod shake;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use params::{get_params, ParamName, ParamSet, ALL_PARAMS, HQC1, HQC3, HQC5};
