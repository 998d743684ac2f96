//! Arithmetic in R = GF(2)[X]/(X^N - 1).
//!
//! Elements are dense bit vectors stored as 64-bit words, padded to whole
//! 256-bit blocks. A cyclic shift decomposes into a coarse word offset plus a
//! fine intra-word shift with carries across word boundaries; the product of
//! a sparse and a dense element is the XOR superposition of one rotated copy
//! per support index, so its cost scales with the operand weight rather than
//! the ring degree. A carry-less Karatsuba multiplier backs the dense route.
//!
//! For a fixed (n, weight) the sparse kernel executes the same word-operation
//! sequence whatever the support values are: no index-dependent early exits,
//! no per-word branches.

use crate::params::{padded_words, ParamSet};
use crate::perf::{self, MulRoute, TraceEvent};

/// Dense ring element of bit length `n`. Bit `i` lives in word `i / 64` at
/// bit `i % 64`; all bits at positions >= n stay zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    n: usize,
    words: Vec<u64>,
}

/// Fixed-weight element represented by its sorted support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    n: usize,
    indices: Vec<u32>,
}

/// Counts the word operations a kernel actually executed; the audit suite
/// uses it to check that runs over different secret inputs take the same
/// path. The default no-op implementation compiles away.
pub trait KernelMeter {
    fn shift(&mut self, words_processed: usize) {
        let _ = words_processed;
    }
    fn fold(&mut self, words_processed: usize) {
        let _ = words_processed;
    }
}

struct NoopMeter;

impl KernelMeter for NoopMeter {}

/// Records one entry per kernel stage, in execution order.
#[derive(Default, Debug, Clone, PartialEq, Eq)]
pub struct CountingMeter {
    pub ops: Vec<(&'static str, usize)>,
}

impl KernelMeter for CountingMeter {
    fn shift(&mut self, words_processed: usize) {
        self.ops.push(("shift", words_processed));
    }
    fn fold(&mut self, words_processed: usize) {
        self.ops.push(("fold", words_processed));
    }
}

impl RingElement {
    /// The all-zero element for a standardized parameter set.
    pub fn zero(params: &ParamSet) -> Self {
        RingElement { n: params.n, words: vec![0; params.words] }
    }

    /// Test-only constructor for small oracle rings.
    #[cfg(any(test, feature = "oracle"))]
    pub fn zero_with_ring_size(n: usize) -> Self {
        assert!(n > 0);
        RingElement { n, words: vec![0; padded_words(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Population count over the first n bits.
    pub fn weight(&self) -> usize {
        self.debug_assert_padding();
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.n, "bit index {i} out of range for ring size {}", self.n);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    /// Test-only mutator for building noisy inputs.
    #[cfg(any(test, feature = "oracle"))]
    pub fn flip_bit(&mut self, i: usize) {
        assert!(i < self.n);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Support of the element as a sorted sparse vector.
    pub fn support(&self) -> SparseVector {
        let mut indices = Vec::with_capacity(self.weight());
        for (k, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros();
                indices.push((k * 64) as u32 + b);
                bits &= bits - 1;
            }
        }
        SparseVector { n: self.n, indices }
    }

    /// Serializes to ceil(n / 8) bytes, little-endian bit order within each
    /// byte, low positions first; unused high bits of the last byte are zero.
    pub fn to_bytes(&self) -> Vec<u8> {
        truncate(self, self.n)
    }

    /// Parses the serialized form. Rejects wrong lengths and nonzero pad bits.
    pub fn from_bytes(params: &ParamSet, bytes: &[u8]) -> Option<Self> {
        if bytes.len() != params.n_bytes() {
            return None;
        }
        let tail_bits = params.n % 8;
        if tail_bits != 0 {
            let pad_mask = !((1u8 << tail_bits) - 1);
            if bytes[params.n_bytes() - 1] & pad_mask != 0 {
                return None;
            }
        }
        Some(Self::load_bytes(params.n, params.words, bytes))
    }

    /// Wraps a prepared word buffer. The caller guarantees padding is clear.
    pub(crate) fn from_raw_words(n: usize, words: Vec<u64>) -> Self {
        let elem = RingElement { n, words };
        elem.debug_assert_padding();
        elem
    }

    /// Loads bytes into the low bit positions without validation. The caller
    /// guarantees `bytes.len() * 8` fits and pad bits beyond n are clear.
    pub(crate) fn load_bytes(n: usize, words: usize, bytes: &[u8]) -> Self {
        debug_assert!(bytes.len() <= words * 8);
        let mut out = vec![0u64; words];
        for (k, &b) in bytes.iter().enumerate() {
            out[k / 8] |= (b as u64) << (8 * (k % 8));
        }
        let elem = RingElement { n, words: out };
        elem.debug_assert_padding();
        elem
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn padding_clear(&self) -> bool {
        let wn = (self.n + 63) / 64;
        let r = self.n % 64;
        if r != 0 && self.words[wn - 1] & !((1u64 << r) - 1) != 0 {
            return false;
        }
        self.words[wn..].iter().all(|&w| w == 0)
    }

    #[inline]
    fn debug_assert_padding(&self) {
        debug_assert!(self.padding_clear(), "bits at positions >= n must stay zero");
    }
}

impl SparseVector {
    /// Builds a sparse vector over a standardized ring. The indices must be
    /// strictly ascending and below n.
    pub fn new(indices: Vec<u32>, params: &ParamSet) -> Self {
        Self::build(indices, params.n)
    }

    /// Test-only constructor for small oracle rings.
    #[cfg(any(test, feature = "oracle"))]
    pub fn with_ring_size(indices: Vec<u32>, n: usize) -> Self {
        Self::build(indices, n)
    }

    fn build(indices: Vec<u32>, n: usize) -> Self {
        for pair in indices.windows(2) {
            assert!(pair[0] < pair[1], "support indices must be strictly ascending");
        }
        if let Some(&last) = indices.last() {
            assert!((last as usize) < n, "support index {last} out of range for ring size {n}");
        }
        SparseVector { n, indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn weight(&self) -> usize {
        self.indices.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Word-wise XOR of two elements of the same ring.
pub fn add(a: &RingElement, b: &RingElement) -> RingElement {
    assert_eq!(a.n, b.n, "ring size mismatch");
    perf::trace(|| TraceEvent::RingAdd);
    let words = a.words.iter().zip(&b.words).map(|(x, y)| x ^ y).collect();
    let out = RingElement { n: a.n, words };
    out.debug_assert_padding();
    out
}

/// XOR-accumulates `src` shifted left by `shift` bits into `acc`, returning
/// the number of source words processed. The per-word work is identical for
/// every shift value: a coarse word offset plus two sub-word shifts whose
/// carry lanes contribute zero when the shift is word-aligned.
#[inline]
fn shift_accumulate(acc: &mut [u64], src: &[u64], shift: usize) -> usize {
    let word_shift = shift / 64;
    let bit_shift = (shift % 64) as u32;
    let carry_shift = 63 - bit_shift; // (w >> 1) >> carry_shift == w >> (64 - bit_shift)
    for (k, &w) in src.iter().enumerate() {
        acc[k + word_shift] ^= w << bit_shift;
        acc[k + word_shift + 1] ^= (w >> 1) >> carry_shift;
    }
    src.len()
}

/// Reduces a < 2n-bit scratch buffer modulo X^n - 1 and masks the tail.
fn fold_scratch(scratch: &[u64], n: usize, padded: usize) -> RingElement {
    let wn = (n + 63) / 64;
    let q = n / 64;
    let r = (n % 64) as u32;
    let mut words = vec![0u64; padded];
    for (k, slot) in words.iter_mut().take(wn).enumerate() {
        let wrapped_lo = scratch[q + k] >> r;
        let wrapped_hi = (scratch[q + k + 1] << 1) << (63 - r); // zero when r == 0
        *slot = scratch[k] ^ wrapped_lo ^ wrapped_hi;
    }
    if r != 0 {
        words[wn - 1] &= (1u64 << r) - 1;
    }
    let out = RingElement { n, words };
    out.debug_assert_padding();
    out
}

/// Cyclic shift: result bit (j + i) mod n equals input bit j.
pub fn cyclic_shift(a: &RingElement, i: usize) -> RingElement {
    assert!(i < a.n, "shift amount {i} out of range for ring size {}", a.n);
    let mut scratch = vec![0u64; 2 * a.words.len() + 1];
    shift_accumulate(&mut scratch, &a.words, i);
    fold_scratch(&scratch, a.n, a.words.len())
}

/// Product of a sparse and a dense element: the XOR superposition of one
/// rotated copy of `d` per support index, reduced once at the end.
pub fn sparse_dense_mul(s: &SparseVector, d: &RingElement) -> RingElement {
    sparse_dense_mul_metered(s, d, &mut NoopMeter)
}

/// As [`sparse_dense_mul`], reporting executed word counts to `meter`.
pub fn sparse_dense_mul_metered<M: KernelMeter>(
    s: &SparseVector,
    d: &RingElement,
    meter: &mut M,
) -> RingElement {
    assert_eq!(s.n, d.n, "ring size mismatch");
    let mut scratch = vec![0u64; 2 * d.words.len() + 1];
    for &idx in &s.indices {
        let processed = shift_accumulate(&mut scratch, &d.words, idx as usize);
        meter.shift(processed);
    }
    let out = fold_scratch(&scratch, d.n, d.words.len());
    meter.fold((d.n + 63) / 64);
    out
}

/// 4-bit windowed carry-less multiplier for one 64-bit word. The window
/// table is rebuilt per left-hand word; lookups run over all 16 nibbles of
/// the right-hand word unconditionally.
struct ClmulWindow {
    low: [u64; 16],
    high: [u8; 16], // product of a 64-bit by 4-bit value spills at most 3 bits
}

impl ClmulWindow {
    #[inline]
    fn new(a: u64) -> Self {
        let mut low = [0u64; 16];
        let mut high = [0u8; 16];
        low[1] = a;
        for i in 2..16 {
            let half = i >> 1;
            low[i] = low[half] << 1;
            high[i] = (high[half] << 1) | (low[half] >> 63) as u8;
            if i & 1 != 0 {
                low[i] ^= a;
            }
        }
        ClmulWindow { low, high }
    }

    #[inline]
    fn mul(&self, b: u64) -> (u64, u64) {
        let nib = (b & 0xF) as usize;
        let mut lo = self.low[nib];
        let mut hi = self.high[nib] as u64;
        for k in 1..16u32 {
            let nib = ((b >> (4 * k)) & 0xF) as usize;
            let t = self.low[nib];
            lo ^= t << (4 * k);
            hi ^= (t >> (64 - 4 * k)) | ((self.high[nib] as u64) << (4 * k));
        }
        (lo, hi)
    }
}

const KARATSUBA_CUTOFF: usize = 24;

fn xor_padded(a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (slot, &w) in out.iter_mut().zip(a) {
        *slot ^= w;
    }
    for (slot, &w) in out.iter_mut().zip(b) {
        *slot ^= w;
    }
    out
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (slot, &w) in dst.iter_mut().zip(src) {
        *slot ^= w;
    }
}

/// XOR-accumulates the carry-less product a * b into `out`
/// (`out.len() >= a.len() + b.len()`).
fn clmul_words(a: &[u64], b: &[u64], out: &mut [u64]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if a.len().min(b.len()) <= KARATSUBA_CUTOFF {
        for (i, &aw) in a.iter().enumerate() {
            let window = ClmulWindow::new(aw);
            for (j, &bw) in b.iter().enumerate() {
                let (lo, hi) = window.mul(bw);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        return;
    }
    // Karatsuba split at half the longer operand.
    let m = (a.len().max(b.len()) + 1) / 2;
    let (a0, a1) = a.split_at(a.len().min(m));
    let (b0, b1) = b.split_at(b.len().min(m));

    let mut z0 = vec![0u64; a0.len() + b0.len()];
    clmul_words(a0, b0, &mut z0);

    let mut z2 = vec![0u64; a1.len() + b1.len()];
    clmul_words(a1, b1, &mut z2);

    let a_sum = xor_padded(a0, a1);
    let b_sum = xor_padded(b0, b1);
    let mut z1 = vec![0u64; a_sum.len() + b_sum.len()];
    clmul_words(&a_sum, &b_sum, &mut z1);
    xor_into(&mut z1, &z0);
    xor_into(&mut z1, &z2);

    xor_into(&mut out[..z0.len()], &z0);
    xor_into(&mut out[m..m + z1.len()], &z1);
    xor_into(&mut out[2 * m..2 * m + z2.len()], &z2);
}

/// Dense fallback: carry-less polynomial product reduced mod X^n - 1.
pub fn dense_mul(a: &RingElement, b: &RingElement) -> RingElement {
    assert_eq!(a.n, b.n, "ring size mismatch");
    let w = a.words.len();
    let mut scratch = vec![0u64; 2 * w + 1];
    clmul_words(&a.words, &b.words, &mut scratch);
    fold_scratch(&scratch, a.n, w)
}

/// Weight-routed product: below `threshold` nonzero coefficients the sparse
/// superposition kernel runs, otherwise the dense fallback. Both routes
/// return identical values.
pub fn mul(a1: &RingElement, a2: &RingElement, threshold: usize) -> RingElement {
    assert!(threshold > 0, "threshold must be positive");
    let weight = a1.weight();
    if weight < threshold {
        perf::trace(|| TraceEvent::RingMul { route: MulRoute::Sparse, weight });
        sparse_dense_mul(&a1.support(), a2)
    } else {
        perf::trace(|| TraceEvent::RingMul { route: MulRoute::Dense, weight });
        dense_mul(a1, a2)
    }
}

/// [`mul`] for an operand already held in sparse form.
pub fn mul_sparse(s: &SparseVector, d: &RingElement, threshold: usize) -> RingElement {
    assert!(threshold > 0, "threshold must be positive");
    let weight = s.weight();
    if weight < threshold {
        perf::trace(|| TraceEvent::RingMul { route: MulRoute::Sparse, weight });
        sparse_dense_mul(s, d)
    } else {
        perf::trace(|| TraceEvent::RingMul { route: MulRoute::Dense, weight });
        dense_mul(&to_dense(s), d)
    }
}

/// Expands a support list into the dense representation.
pub fn to_dense(s: &SparseVector) -> RingElement {
    let mut words = vec![0u64; padded_words(s.n)];
    for &idx in &s.indices {
        words[(idx / 64) as usize] |= 1 << (idx % 64);
    }
    let out = RingElement { n: s.n, words };
    out.debug_assert_padding();
    out
}

/// Copies the low `bits` bits into ceil(bits / 8) bytes, zero-padding the
/// final byte.
pub fn truncate(a: &RingElement, bits: usize) -> Vec<u8> {
    assert!(bits <= a.n, "truncate length {bits} exceeds ring size {}", a.n);
    a.debug_assert_padding();
    let n_bytes = (bits + 7) / 8;
    let mut out = vec![0u8; n_bytes];
    for (k, byte) in out.iter_mut().enumerate() {
        *byte = (a.words[k / 8] >> (8 * (k % 8))) as u8;
    }
    let tail = bits % 8;
    if tail != 0 {
        out[n_bytes - 1] &= (1u8 << tail) - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{get_params, ParamName, HQC1};
    use crate::shake::{DomainTag, Prng};
    use proptest::prelude::*;

    fn random_dense(n: usize, prng: &mut Prng) -> RingElement {
        let bytes = prng.bytes((n + 7) / 8);
        let mut e = RingElement::zero_with_ring_size(n);
        for (k, &b) in bytes.iter().enumerate() {
            for bit in 0..8 {
                let pos = k * 8 + bit;
                if pos < n && (b >> bit) & 1 == 1 {
                    e.flip_bit(pos);
                }
            }
        }
        e
    }

    fn random_support(n: usize, weight: usize, prng: &mut Prng) -> SparseVector {
        let mut indices: Vec<u32> = Vec::new();
        while indices.len() < weight {
            let v = prng.next_u32() % n as u32;
            if !indices.contains(&v) {
                indices.push(v);
            }
        }
        indices.sort_unstable();
        SparseVector::with_ring_size(indices, n)
    }

    #[test]
    fn add_characteristic_two() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-add", DomainTag::Prng);
        let a = random_dense(p.n, &mut prng);
        let b = random_dense(p.n, &mut prng);
        let zero = RingElement::zero(p);
        assert_eq!(add(&a, &a), zero);
        assert_eq!(add(&a, &zero), a);
        assert_eq!(add(&add(&a, &b), &b), a);
    }

    #[test]
    #[should_panic(expected = "ring size mismatch")]
    fn add_rejects_mismatched_rings() {
        let a = RingElement::zero_with_ring_size(8);
        let b = RingElement::zero_with_ring_size(64);
        let _ = add(&a, &b);
    }

    #[test]
    fn shift_identity_and_small_ring() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-shift", DomainTag::Prng);
        let a = random_dense(p.n, &mut prng);
        assert_eq!(cyclic_shift(&a, 0), a);

        // n = 8 test ring: X^5 shifted by 7 lands on X^4.
        let x5 = to_dense(&SparseVector::with_ring_size(vec![5], 8));
        let shifted = cyclic_shift(&x5, 7);
        assert_eq!(shifted, to_dense(&SparseVector::with_ring_size(vec![4], 8)));
    }

    #[test]
    fn shift_by_word_matches_bit_reference() {
        let n = 257;
        let mut prng = Prng::new(b"ring-shift-64", DomainTag::Prng);
        let a = random_dense(n, &mut prng);
        for shift in [1usize, 63, 64, 128, 200, 256] {
            let fast = cyclic_shift(&a, shift);
            let mut slow = RingElement::zero_with_ring_size(n);
            for j in 0..n {
                if a.bit(j) {
                    slow.flip_bit((j + shift) % n);
                }
            }
            assert_eq!(fast, slow, "shift {shift}");
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn shift_rejects_out_of_range() {
        let a = RingElement::zero_with_ring_size(8);
        let _ = cyclic_shift(&a, 8);
    }

    #[test]
    fn sparse_mul_identity_and_empty() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-sparse", DomainTag::Prng);
        let d = random_dense(p.n, &mut prng);
        let one = SparseVector::new(vec![0], p);
        assert_eq!(sparse_dense_mul(&one, &d), d);
        let empty = SparseVector::new(vec![], p);
        assert_eq!(sparse_dense_mul(&empty, &d), RingElement::zero(p));
    }

    #[test]
    fn dense_mul_identity_and_zero() {
        let n = 1024;
        let mut prng = Prng::new(b"ring-dense", DomainTag::Prng);
        let a = random_dense(n, &mut prng);
        let one = to_dense(&SparseVector::with_ring_size(vec![0], n));
        let zero = RingElement::zero_with_ring_size(n);
        assert_eq!(dense_mul(&a, &one), a);
        assert_eq!(dense_mul(&a, &zero), zero);
    }

    #[test]
    fn mul_routes_agree() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-routes", DomainTag::Prng);
        for _ in 0..10 {
            let s = random_support(p.n, p.omega, &mut prng);
            let d = random_dense(p.n, &mut prng);
            let dense_form = to_dense(&s);
            let sparse_route = mul(&dense_form, &d, p.mul_threshold);
            let dense_route = mul(&dense_form, &d, 1);
            assert_eq!(sparse_route, dense_route);
            assert_eq!(mul_sparse(&s, &d, p.mul_threshold), sparse_route);
            assert_eq!(mul_sparse(&s, &d, 1), sparse_route);
        }
    }

    #[test]
    fn distributivity_over_add() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-distrib", DomainTag::Prng);
        let s = random_support(p.n, 40, &mut prng);
        let a = random_dense(p.n, &mut prng);
        let b = random_dense(p.n, &mut prng);
        let lhs = sparse_dense_mul(&s, &add(&a, &b));
        let rhs = add(&sparse_dense_mul(&s, &a), &sparse_dense_mul(&s, &b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weight_and_support_roundtrip() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-weight", DomainTag::Prng);
        let s = random_support(p.n, p.omega, &mut prng);
        let d = to_dense(&s);
        assert_eq!(d.weight(), p.omega);
        assert_eq!(d.support(), s);
        assert_eq!(RingElement::zero(p).weight(), 0);
    }

    #[test]
    fn truncate_roundtrip_and_codeword_length() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-trunc", DomainTag::Prng);
        let a = random_dense(p.n, &mut prng);
        let bytes = truncate(&a, p.n);
        assert_eq!(bytes.len(), p.n_bytes());
        let back = RingElement::from_bytes(p, &bytes).unwrap();
        assert_eq!(back, a);

        // n1 * n2 = 17664 for the level-1 set: truncation drops 5 bits.
        assert_eq!(p.n - p.n1n2_bits(), 5);
        let t = truncate(&a, p.n1n2_bits());
        assert_eq!(t.len(), 2208);
    }

    #[test]
    #[should_panic(expected = "exceeds ring size")]
    fn truncate_rejects_oversize() {
        let a = RingElement::zero_with_ring_size(8);
        let _ = truncate(&a, 9);
    }

    #[test]
    fn from_bytes_validates() {
        let p = get_params(ParamName::Hqc1);
        assert!(RingElement::from_bytes(p, &vec![0u8; p.n_bytes() - 1]).is_none());
        let mut bytes = vec![0u8; p.n_bytes()];
        *bytes.last_mut().unwrap() = 0x80; // n % 8 == 5, so the top 3 bits are pad
        assert!(RingElement::from_bytes(p, &bytes).is_none());
        *bytes.last_mut().unwrap() = 0x1F;
        assert!(RingElement::from_bytes(p, &bytes).is_some());
    }

    #[test]
    fn serialization_bit_order() {
        let e = to_dense(&SparseVector::with_ring_size(vec![0, 9], 16));
        assert_eq!(e.to_bytes(), vec![0x01, 0x02]);
    }

    #[test]
    #[should_panic(expected = "strictly ascending")]
    fn sparse_vector_rejects_duplicates() {
        let _ = SparseVector::new(vec![3, 3], &HQC1);
    }

    #[test]
    fn meter_is_input_independent() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"ring-meter", DomainTag::Prng);
        let d = random_dense(p.n, &mut prng);
        let s1 = random_support(p.n, p.omega, &mut prng);
        let s2 = random_support(p.n, p.omega, &mut prng);
        assert_ne!(s1, s2);
        let mut m1 = CountingMeter::default();
        let mut m2 = CountingMeter::default();
        let _ = sparse_dense_mul_metered(&s1, &d, &mut m1);
        let _ = sparse_dense_mul_metered(&s2, &d, &mut m2);
        assert_eq!(m1, m2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shift_composition(bits in prop::collection::vec(any::<bool>(), 257),
                             i in 0usize..257, j in 0usize..257) {
            let mut a = RingElement::zero_with_ring_size(257);
            for (pos, &b) in bits.iter().enumerate() {
                if b { a.flip_bit(pos); }
            }
            let two_step = cyclic_shift(&cyclic_shift(&a, i), j);
            let one_step = cyclic_shift(&a, (i + j) % 257);
            prop_assert_eq!(two_step, one_step);
        }

        #[test]
        fn small_ring_commutativity(xa in any::<u64>(), xb in any::<u64>()) {
            let n = 64;
            let mut a = RingElement::zero_with_ring_size(n);
            let mut b = RingElement::zero_with_ring_size(n);
            for bit in 0..64 {
                if (xa >> bit) & 1 == 1 { a.flip_bit(bit); }
                if (xb >> bit) & 1 == 1 { b.flip_bit(bit); }
            }
            prop_assert_eq!(dense_mul(&a, &b), dense_mul(&b, &a));
            let sparse = sparse_dense_mul(&a.support(), &b);
            prop_assert_eq!(sparse, dense_mul(&a, &b));
        }
    }
}
