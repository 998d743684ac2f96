//! HQC public-key encryption and the KEM wrapper: keygen, encapsulation and
//! decapsulation with re-encryption and implicit rejection.
//!
//! Decapsulation always decrypts, re-encrypts, hashes both the accept and
//! reject candidates and picks one with a byte-wise constant-time select, so
//! the accept and reject paths perform the same operation sequence.

use std::fmt;

use crate::codec;
use crate::params::ParamSet;
use crate::perf::{self, Component, TraceEvent};
use crate::ring::{self, RingElement, SparseVector};
use crate::shake::{derive, sample_dense, sample_fixed_weight, DomainTag, Prng};

/// Length of key-generation seeds and encapsulation coins.
pub const SEED_BYTES: usize = 32;

/// Length of the derived session key.
pub const SHARED_SECRET_BYTES: usize = 64;

/// Public key: the 32-byte seed regenerating h, plus s = x + h * y. The
/// expanded h is kept in memory; only the seed is serialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey {
    pub(crate) params: &'static ParamSet,
    pub(crate) seed_h: [u8; SEED_BYTES],
    pub(crate) h: RingElement,
    pub(crate) s: RingElement,
}

/// Secret key: the sparse pair (x, y), the rejection secret sigma, and a
/// copy of the public key so decapsulation is self-contained.
#[derive(Clone, PartialEq, Eq)]
pub struct SecretKey {
    pub(crate) params: &'static ParamSet,
    pub(crate) seed: [u8; SEED_BYTES],
    pub(crate) x: SparseVector,
    pub(crate) y: SparseVector,
    pub(crate) sigma: Vec<u8>,
    pub(crate) pk: PublicKey,
}

impl fmt::Debug for SecretKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SecretKey").field("params", &self.params.name).finish_non_exhaustive()
    }
}

/// Ciphertext c = (u, v) with v truncated to rs_n1 * rm_n2 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    pub(crate) params: &'static ParamSet,
    pub(crate) u: RingElement,
    pub(crate) v: Vec<u8>,
}

/// The derived 64-byte session key.
#[derive(Clone)]
pub struct SharedSecret([u8; SHARED_SECRET_BYTES]);

impl SharedSecret {
    pub fn as_bytes(&self) -> &[u8; SHARED_SECRET_BYTES] {
        &self.0
    }

    #[cfg_attr(not(any(test, feature = "oracle")), allow(dead_code))]
    pub(crate) fn from_raw(bytes: [u8; SHARED_SECRET_BYTES]) -> Self {
        SharedSecret(bytes)
    }
}

impl PartialEq for SharedSecret {
    fn eq(&self, other: &Self) -> bool {
        ct_eq_mask(&self.0, &other.0) == 0xFF
    }
}

impl Eq for SharedSecret {}

impl fmt::Debug for SharedSecret {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SharedSecret(..)")
    }
}

/// Rejected serialized input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Length { expected: usize, got: usize },
    PadBits,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Length { expected, got } => {
                write!(f, "wrong length: expected {expected} bytes, got {got}")
            }
            ParseError::PadBits => f.write_str("nonzero padding bits"),
        }
    }
}

impl std::error::Error for ParseError {}

fn expand_h(seed_h: &[u8; SEED_BYTES], params: &'static ParamSet) -> RingElement {
    let mut prng = Prng::new(seed_h, DomainTag::Prng);
    sample_dense(&mut prng, params)
}

fn expand_secret(
    seed: &[u8; SEED_BYTES],
    params: &'static ParamSet,
) -> (SparseVector, SparseVector, Vec<u8>) {
    let mut prng = Prng::new(seed, DomainTag::Prng);
    let x = sample_fixed_weight(&mut prng, params.omega, params);
    let y = sample_fixed_weight(&mut prng, params.omega, params);
    let sigma = prng.bytes(params.rs_k);
    (x, y, sigma)
}

/// Deterministic key generation from a 32-byte seed.
pub fn keygen(seed: &[u8; SEED_BYTES], params: &'static ParamSet) -> (PublicKey, SecretKey) {
    let (seed_h, seed_sk) = perf::span(Component::Shake, || {
        let mut master = Prng::new(seed, DomainTag::Prng);
        let mut seed_h = [0u8; SEED_BYTES];
        master.fill(&mut seed_h);
        let mut seed_sk = [0u8; SEED_BYTES];
        master.fill(&mut seed_sk);
        (seed_h, seed_sk)
    });
    let h = perf::span(Component::VectorGen, || expand_h(&seed_h, params));
    let (x, y, sigma) = perf::span(Component::VectorGen, || expand_secret(&seed_sk, params));
    let hy = perf::span(Component::PolyMult, || ring::mul_sparse(&y, &h, params.mul_threshold));
    let s = perf::span(Component::PolyAdd, || ring::add(&ring::to_dense(&x), &hy));
    let pk = PublicKey { params, seed_h, h, s };
    let sk = SecretKey { params, seed: seed_sk, x, y, sigma, pk: pk.clone() };
    (pk, sk)
}

/// Deterministic encryption of an rs_k-byte message under the seed theta.
pub fn pke_encrypt(pk: &PublicKey, m: &[u8], theta: &[u8; SEED_BYTES]) -> Ciphertext {
    let params = pk.params;
    assert_eq!(m.len(), params.rs_k, "message length must be rs_k");

    let (e, r1, r2) = perf::span(Component::VectorGen, || {
        let mut prng = Prng::new(theta, DomainTag::Prng);
        let e = sample_fixed_weight(&mut prng, params.omega_r, params);
        let r1 = sample_fixed_weight(&mut prng, params.omega_r, params);
        let r2 = sample_fixed_weight(&mut prng, params.omega_r, params);
        (e, r1, r2)
    });

    let hr2 = perf::span(Component::PolyMult, || ring::mul_sparse(&r2, &pk.h, params.mul_threshold));
    let u = perf::span(Component::PolyAdd, || ring::add(&ring::to_dense(&r1), &hr2));

    let encoded = perf::span(Component::CodeEncode, || codec::code_encode(m, params));
    let sr2 = perf::span(Component::PolyMult, || ring::mul_sparse(&r2, &pk.s, params.mul_threshold));
    let v_full = perf::span(Component::PolyAdd, || {
        ring::add(&ring::add(&encoded, &sr2), &ring::to_dense(&e))
    });
    let v = perf::span(Component::VectorResize, || {
        perf::trace(|| TraceEvent::Truncate { bits: params.n1n2_bits() });
        ring::truncate(&v_full, params.n1n2_bits())
    });

    Ciphertext { params, u, v }
}

/// Decrypts to an rs_k-byte message; validity is only decided by the
/// re-encryption check in [`decap`].
pub fn pke_decrypt(sk: &SecretKey, c: &Ciphertext) -> Vec<u8> {
    let params = sk.params;
    let uy = perf::span(Component::PolyMult, || ring::mul_sparse(&sk.y, &c.u, params.mul_threshold));
    let v_elem = perf::span(Component::VectorResize, || {
        RingElement::load_bytes(params.n, params.words, &c.v)
    });
    let noisy = perf::span(Component::PolyAdd, || ring::add(&v_elem, &uy));
    perf::span(Component::CodeDecode, || codec::code_decode(&noisy, params))
}

/// Derives a message and session key from the coins and encrypts the message.
pub fn encap(pk: &PublicKey, coins: &[u8; SEED_BYTES]) -> (Ciphertext, SharedSecret) {
    let params = pk.params;
    let m = perf::span(Component::Shake, || {
        let mut prng = Prng::new(coins, DomainTag::Prng);
        prng.bytes(params.rs_k)
    });
    let pk_bytes = pk.to_bytes();
    let theta: [u8; SEED_BYTES] = perf::span(Component::Shake, || {
        derive(DomainTag::G, &[&m, &pk_bytes], SEED_BYTES).try_into().unwrap()
    });
    let c = pke_encrypt(pk, &m, &theta);
    let c_bytes = c.to_bytes();
    let k = perf::span(Component::Shake, || {
        derive(DomainTag::K, &[&m, &c_bytes], SHARED_SECRET_BYTES)
    });
    (c, SharedSecret(k.try_into().unwrap()))
}

/// Decrypts, re-encrypts and compares; on mismatch returns the implicit
/// rejection key derived from sigma instead of signalling failure.
pub fn decap(sk: &SecretKey, c: &Ciphertext) -> SharedSecret {
    let m_prime = pke_decrypt(sk, c);
    let pk_bytes = sk.pk.to_bytes();
    let theta_prime: [u8; SEED_BYTES] = perf::span(Component::Shake, || {
        derive(DomainTag::G, &[&m_prime, &pk_bytes], SEED_BYTES).try_into().unwrap()
    });
    let c_prime = pke_encrypt(&sk.pk, &m_prime, &theta_prime);

    let c_bytes = c.to_bytes();
    let c_prime_bytes = c_prime.to_bytes();
    let accept = ct_eq_mask(&c_prime_bytes, &c_bytes);

    let k_accept = perf::span(Component::Shake, || {
        derive(DomainTag::K, &[&m_prime, &c_bytes], SHARED_SECRET_BYTES)
    });
    let k_reject = perf::span(Component::Shake, || {
        derive(DomainTag::K, &[&sk.sigma, &c_bytes], SHARED_SECRET_BYTES)
    });

    perf::trace(|| TraceEvent::CtSelect { len: SHARED_SECRET_BYTES });
    let mut out = [0u8; SHARED_SECRET_BYTES];
    for (slot, (a, r)) in out.iter_mut().zip(k_accept.iter().zip(&k_reject)) {
        *slot = (a & accept) | (r & !accept);
    }
    SharedSecret(out)
}

/// 0xFF when the slices are byte-wise equal, 0x00 otherwise; runs over the
/// full length regardless of where a difference appears.
fn ct_eq_mask(a: &[u8], b: &[u8]) -> u8 {
    debug_assert_eq!(a.len(), b.len());
    perf::trace(|| TraceEvent::CtCompare { len: a.len() });
    let mut diff = 0u8;
    for (x, y) in a.iter().zip(b) {
        diff |= x ^ y;
    }
    !crate::gf256::nonzero_mask(diff)
}

impl PublicKey {
    pub fn params(&self) -> &'static ParamSet {
        self.params
    }

    /// seed_h (32 bytes) followed by the dense s.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.params.public_key_bytes());
        out.extend_from_slice(&self.seed_h);
        out.extend_from_slice(&self.s.to_bytes());
        out
    }

    pub fn from_bytes(params: &'static ParamSet, bytes: &[u8]) -> Result<Self, ParseError> {
        let expected = params.public_key_bytes();
        if bytes.len() != expected {
            return Err(ParseError::Length { expected, got: bytes.len() });
        }
        let seed_h: [u8; SEED_BYTES] = bytes[..SEED_BYTES].try_into().unwrap();
        let s = RingElement::from_bytes(params, &bytes[SEED_BYTES..]).ok_or(ParseError::PadBits)?;
        let h = expand_h(&seed_h, params);
        Ok(PublicKey { params, seed_h, h, s })
    }
}

impl SecretKey {
    pub fn params(&self) -> &'static ParamSet {
        self.params
    }

    /// 32-byte secret seed, sigma, then the serialized public key; the
    /// sparse secrets are re-expanded from the seed on load.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.params.secret_key_bytes());
        out.extend_from_slice(&self.seed);
        out.extend_from_slice(&self.sigma);
        out.extend_from_slice(&self.pk.to_bytes());
        out
    }

    pub fn from_bytes(params: &'static ParamSet, bytes: &[u8]) -> Result<Self, ParseError> {
        let expected = params.secret_key_bytes();
        if bytes.len() != expected {
            return Err(ParseError::Length { expected, got: bytes.len() });
        }
        let seed: [u8; SEED_BYTES] = bytes[..SEED_BYTES].try_into().unwrap();
        let sigma = bytes[SEED_BYTES..SEED_BYTES + params.rs_k].to_vec();
        let pk = PublicKey::from_bytes(params, &bytes[SEED_BYTES + params.rs_k..])?;
        let (x, y, _) = expand_secret(&seed, params);
        Ok(SecretKey { params, seed, x, y, sigma, pk })
    }
}

impl Ciphertext {
    pub fn params(&self) -> &'static ParamSet {
        self.params
    }

    /// u (ceil(n / 8) bytes) followed by the truncated v.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.params.ciphertext_bytes());
        out.extend_from_slice(&self.u.to_bytes());
        out.extend_from_slice(&self.v);
        out
    }

    pub fn from_bytes(params: &'static ParamSet, bytes: &[u8]) -> Result<Self, ParseError> {
        let expected = params.ciphertext_bytes();
        if bytes.len() != expected {
            return Err(ParseError::Length { expected, got: bytes.len() });
        }
        let u = RingElement::from_bytes(params, &bytes[..params.n_bytes()])
            .ok_or(ParseError::PadBits)?;
        let v = bytes[params.n_bytes()..].to_vec();
        Ok(Ciphertext { params, u, v })
    }
}
