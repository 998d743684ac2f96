//! SHAKE256 extendable-output function, domain-separated derivations, a
//! deterministic PRNG, and the dense / fixed-weight samplers built on it.
//!
//! The permutation is scalar 64-bit and constant-time; absorb and squeeze
//! write straight into the state (no staging buffer) with a lane-aligned
//! wide-copy fast path. Batched hashing keeps a small group of states
//! resident and is bit-identical to the scalar path.

use crate::params::ParamSet;
use crate::perf::{self, TraceEvent};
use crate::ring::{RingElement, SparseVector};

/// SHAKE256 rate in bytes.
pub const SHAKE256_RATE: usize = 136;

const ROUNDS: usize = 24;

const ROUND_CONSTANTS: [u64; ROUNDS] = [
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
];

/// Rotation offsets indexed x + 5y.
const RHO: [u32; 25] = [
    0, 1, 62, 28, 27, //
    36, 44, 6, 55, 20, //
    3, 10, 43, 25, 39, //
    41, 45, 15, 21, 8, //
    18, 2, 61, 56, 14,
];

fn keccak_f1600(a: &mut [u64; 25]) {
    for &rc in &ROUND_CONSTANTS {
        // theta
        let mut c = [0u64; 5];
        for x in 0..5 {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for x in 0..5 {
            let d = c[(x + 4) % 5] ^ c[(x + 1) % 5].rotate_left(1);
            for y in 0..5 {
                a[x + 5 * y] ^= d;
            }
        }
        // rho and pi
        let mut b = [0u64; 25];
        for x in 0..5 {
            for y in 0..5 {
                b[y + 5 * ((2 * x + 3 * y) % 5)] = a[x + 5 * y].rotate_left(RHO[x + 5 * y]);
            }
        }
        // chi
        for y in 0..5 {
            for x in 0..5 {
                a[x + 5 * y] = b[x + 5 * y] ^ (!b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
            }
        }
        // iota
        a[0] ^= rc;
    }
}

fn xor_bytes_into_lanes(lanes: &mut [u64; 25], offset: usize, bytes: &[u8]) {
    let mut p = offset;
    let mut rest = bytes;
    while p % 8 != 0 && !rest.is_empty() {
        lanes[p / 8] ^= (rest[0] as u64) << (8 * (p % 8));
        p += 1;
        rest = &rest[1..];
    }
    let mut chunks = rest.chunks_exact(8);
    for chunk in &mut chunks {
        lanes[p / 8] ^= u64::from_le_bytes(chunk.try_into().unwrap());
        p += 8;
    }
    for &b in chunks.remainder() {
        lanes[p / 8] ^= (b as u64) << (8 * (p % 8));
        p += 1;
    }
}

fn read_bytes_from_lanes(lanes: &[u64; 25], offset: usize, out: &mut [u8]) {
    let mut p = offset;
    let mut rest = out;
    while p % 8 != 0 && !rest.is_empty() {
        rest[0] = (lanes[p / 8] >> (8 * (p % 8))) as u8;
        p += 1;
        rest = &mut rest[1..];
    }
    let mut chunks = rest.chunks_exact_mut(8);
    for chunk in &mut chunks {
        chunk.copy_from_slice(&lanes[p / 8].to_le_bytes());
        p += 8;
    }
    for b in chunks.into_remainder() {
        *b = (lanes[p / 8] >> (8 * (p % 8))) as u8;
        p += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Absorbing,
    Squeezing,
}

/// The 1600-bit sponge state with a byte cursor into the SHAKE256 rate.
#[derive(Clone)]
pub struct KeccakState {
    lanes: [u64; 25],
    rate_offset: usize,
    phase: Phase,
}

impl Default for KeccakState {
    fn default() -> Self {
        Self::new()
    }
}

impl KeccakState {
    pub fn new() -> Self {
        KeccakState { lanes: [0; 25], rate_offset: 0, phase: Phase::Absorbing }
    }

    /// Absorbs message bytes, permuting whenever a rate block fills.
    pub fn absorb(&mut self, mut data: &[u8]) {
        assert_eq!(self.phase, Phase::Absorbing, "absorb after finalize");
        while !data.is_empty() {
            let take = (SHAKE256_RATE - self.rate_offset).min(data.len());
            xor_bytes_into_lanes(&mut self.lanes, self.rate_offset, &data[..take]);
            self.rate_offset += take;
            data = &data[take..];
            if self.rate_offset == SHAKE256_RATE {
                keccak_f1600(&mut self.lanes);
                self.rate_offset = 0;
            }
        }
    }

    /// Applies the SHAKE padding and switches to the squeezing phase.
    pub fn finalize_xof(&mut self) {
        assert_eq!(self.phase, Phase::Absorbing, "already finalized");
        self.lanes[self.rate_offset / 8] ^= 0x1Fu64 << (8 * (self.rate_offset % 8));
        self.lanes[(SHAKE256_RATE - 1) / 8] ^= 0x80u64 << (8 * ((SHAKE256_RATE - 1) % 8));
        keccak_f1600(&mut self.lanes);
        self.rate_offset = 0;
        self.phase = Phase::Squeezing;
    }

    /// Reads output bytes; successive calls continue the same stream.
    pub fn squeeze(&mut self, out: &mut [u8]) {
        assert_eq!(self.phase, Phase::Squeezing, "squeeze before finalize");
        let mut rest = &mut out[..];
        while !rest.is_empty() {
            let take = (SHAKE256_RATE - self.rate_offset).min(rest.len());
            read_bytes_from_lanes(&self.lanes, self.rate_offset, &mut rest[..take]);
            self.rate_offset += take;
            rest = &mut rest[take..];
            if self.rate_offset == SHAKE256_RATE {
                keccak_f1600(&mut self.lanes);
                self.rate_offset = 0;
            }
        }
    }
}

/// One-shot SHAKE256.
pub fn shake256(input: &[u8], out_len: usize) -> Vec<u8> {
    let mut state = KeccakState::new();
    state.absorb(input);
    state.finalize_xof();
    let mut out = vec![0u8; out_len];
    state.squeeze(&mut out);
    out
}

/// Trailing domain-separation byte appended before finalization. One
/// constant per derived function and one for PRNG seeding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainTag {
    G,
    H,
    K,
    Prng,
}

impl DomainTag {
    pub const ALL: [DomainTag; 4] = [DomainTag::G, DomainTag::H, DomainTag::K, DomainTag::Prng];

    pub fn byte(self) -> u8 {
        match self {
            DomainTag::G => 0x01,
            DomainTag::H => 0x02,
            DomainTag::K => 0x03,
            DomainTag::Prng => 0x04,
        }
    }
}

/// Domain-separated derivation: shake256(concat(parts) || tag, out_len).
pub fn derive(tag: DomainTag, parts: &[&[u8]], out_len: usize) -> Vec<u8> {
    perf::trace(|| TraceEvent::Derive { tag: tag.byte(), out_len });
    let mut state = KeccakState::new();
    for part in parts {
        state.absorb(part);
    }
    state.absorb(&[tag.byte()]);
    state.finalize_xof();
    let mut out = vec![0u8; out_len];
    state.squeeze(&mut out);
    out
}

/// Deterministic byte stream: a pure function of (seed, tag).
#[derive(Clone)]
pub struct Prng {
    state: KeccakState,
    emitted: u64,
}

impl Prng {
    pub fn new(seed: &[u8], tag: DomainTag) -> Self {
        perf::trace(|| TraceEvent::PrngInit { tag: tag.byte() });
        let mut state = KeccakState::new();
        state.absorb(seed);
        state.absorb(&[tag.byte()]);
        state.finalize_xof();
        Prng { state, emitted: 0 }
    }

    pub fn fill(&mut self, out: &mut [u8]) {
        perf::trace(|| TraceEvent::PrngBytes { count: out.len() });
        self.state.squeeze(out);
        self.emitted += out.len() as u64;
    }

    pub fn bytes(&mut self, count: usize) -> Vec<u8> {
        let mut out = vec![0u8; count];
        self.fill(&mut out);
        out
    }

    pub fn next_u32(&mut self) -> u32 {
        let mut buf = [0u8; 4];
        self.fill(&mut buf);
        u32::from_le_bytes(buf)
    }

    /// Bytes emitted so far; part of the stream position.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

/// Uniform dense element: ceil(n / 8) PRNG bytes with the tail masked to n
/// bits.
pub fn sample_dense(prng: &mut Prng, params: &ParamSet) -> RingElement {
    perf::trace(|| TraceEvent::SampleDense { bytes: params.n_bytes() });
    let mut bytes = prng.bytes(params.n_bytes());
    let tail = params.n % 8;
    if tail != 0 {
        *bytes.last_mut().unwrap() &= (1u8 << tail) - 1;
    }
    RingElement::load_bytes(params.n, params.words, &bytes)
}

/// Exactly `weight` distinct indices in [0, n), sorted ascending.
///
/// Partial Fisher-Yates selection over the virtual range: one 32-bit word per
/// output index mapped into a growing prefix, with collisions redirected to
/// the fresh position. PRNG consumption is a fixed 4 * weight bytes.
pub fn sample_fixed_weight(prng: &mut Prng, weight: usize, params: &ParamSet) -> SparseVector {
    assert!(weight > 0 && weight < params.n, "weight out of range");
    perf::trace(|| TraceEvent::SampleFixedWeight { weight, bytes: 4 * weight });
    let n = params.n as u64;
    let w = weight as u64;
    let mut support: Vec<u32> = Vec::with_capacity(weight);
    for i in (n - w)..n {
        let r = prng.next_u32() as u64;
        let candidate = ((r * (i + 1)) >> 32) as u32;
        let pick = if support.contains(&candidate) { i as u32 } else { candidate };
        support.push(pick);
    }
    support.sort_unstable();
    SparseVector::new(support, params)
}

/// Hashes a list of (input, out_len) requests in cache-friendly groups of
/// resident states. Element-wise identical to calling [`shake256`] on each
/// input; batching is a throughput measure only.
pub fn shake_batch(inputs: &[(&[u8], usize)]) -> Vec<Vec<u8>> {
    assert!(!inputs.is_empty(), "batch must not be empty");
    const GROUP: usize = 4;
    let mut out = Vec::with_capacity(inputs.len());
    for chunk in inputs.chunks(GROUP) {
        let mut states: Vec<KeccakState> = chunk
            .iter()
            .map(|(input, _)| {
                let mut state = KeccakState::new();
                state.absorb(input);
                state.finalize_xof();
                state
            })
            .collect();
        for (state, &(_, out_len)) in states.iter_mut().zip(chunk) {
            let mut buf = vec![0u8; out_len];
            state.squeeze(&mut buf);
            out.push(buf);
        }
    }
    out
}
