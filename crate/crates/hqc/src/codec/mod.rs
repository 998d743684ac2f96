//! Concatenated code: shortened Reed-Solomon over GF(2^8) outside, a
//! duplicated first-order Reed-Muller code inside. One RS symbol maps to one
//! rm_n2-bit inner block; rm_n2 is a multiple of 64, so blocks are whole
//! words of the ring element and the codeword occupies exactly the low
//! rs_n1 * rm_n2 bits.

mod rm;
mod rs;

pub use rm::{rm_decode, rm_encode};
pub use rs::{generator_poly, rs_decode, rs_encode, rs_syndromes};

#[cfg(any(test, feature = "oracle"))]
pub use rs::{encoder_taps, rs_encode_with_table};

#[cfg(any(test, feature = "oracle"))]
pub(crate) use rs::correct_from_syndromes;

use crate::params::ParamSet;
use crate::perf::{self, TraceEvent};
use crate::ring::RingElement;

/// Packs rs_n1 symbols into their inner-encoded blocks inside a ring element.
pub(crate) fn pack_inner_blocks(codeword: &[u8], params: &ParamSet) -> RingElement {
    debug_assert_eq!(codeword.len(), params.rs_n1);
    let words_per_block = params.rm_n2 / 64;
    let mut words = vec![0u64; params.words];
    for (b, &symbol) in codeword.iter().enumerate() {
        let block = rm::encode_block_words(symbol, params.rm_mult);
        words[b * words_per_block..(b + 1) * words_per_block].copy_from_slice(&block);
    }
    RingElement::from_raw_words(params.n, words)
}

/// Inner-decodes each block of the low rs_n1 * rm_n2 bits back to RS symbols.
pub(crate) fn rm_decode_blocks(noisy: &RingElement, params: &ParamSet) -> Vec<u8> {
    let words_per_block = params.rm_n2 / 64;
    let words = noisy.words();
    (0..params.rs_n1)
        .map(|b| rm::decode_block_words(&words[b * words_per_block..(b + 1) * words_per_block], params.rm_mult))
        .collect()
}

/// mG: Reed-Solomon encode, then one duplicated Reed-Muller block per symbol,
/// concatenated into the low rs_n1 * rm_n2 bits of a ring element.
pub fn code_encode(msg: &[u8], params: &ParamSet) -> RingElement {
    assert_eq!(msg.len(), params.rs_k, "message length must be rs_k");
    perf::trace(|| TraceEvent::CodeEncode);
    let outer = rs::rs_encode(msg, params);
    pack_inner_blocks(&outer, params)
}

/// Inner Reed-Muller decisions followed by Reed-Solomon correction. Bits at
/// positions >= rs_n1 * rm_n2 in the input are ignored.
pub fn code_decode(noisy: &RingElement, params: &ParamSet) -> Vec<u8> {
    perf::trace(|| TraceEvent::CodeDecode);
    let symbols = rm_decode_blocks(noisy, params);
    rs::rs_decode(&symbols, params)
}
