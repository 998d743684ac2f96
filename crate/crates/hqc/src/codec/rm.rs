//! Duplicated first-order Reed-Muller inner code.
//!
//! One byte encodes to a [128, 8, 64] RM(1,7) codeword repeated `rm_mult`
//! times. Codeword bit t is the parity of `byte & (t | 0x80)`: the low seven
//! byte bits dot the position index in Hadamard order and the MSB selects
//! the all-ones row. Decoding accumulates the copies into per-position
//! counters mapped to +-1, applies the fast Hadamard transform, and takes
//! the maximum-magnitude coordinate (ties to the lowest index, negative
//! sign restores the MSB) - the inverse of the encoder convention.

use crate::params::ParamSet;

pub(crate) const RM_BITS: usize = 128;
pub(crate) const RM_WORDS: usize = 2;

fn encode_base(byte: u8) -> [u64; RM_WORDS] {
    let mut out = [0u64; RM_WORDS];
    for t in 0..RM_BITS {
        let bit = (byte & (t as u8 | 0x80)).count_ones() & 1;
        out[t / 64] |= u64::from(bit) << (t % 64);
    }
    out
}

/// Duplicated codeword as `2 * mult` little-endian words.
pub(crate) fn encode_block_words(byte: u8, mult: usize) -> Vec<u64> {
    let base = encode_base(byte);
    let mut out = Vec::with_capacity(RM_WORDS * mult);
    for _ in 0..mult {
        out.extend_from_slice(&base);
    }
    out
}

fn hadamard_transform(v: &mut [i32; RM_BITS]) {
    let mut half = 1;
    while half < RM_BITS {
        let step = half * 2;
        for start in (0..RM_BITS).step_by(step) {
            for j in start..start + half {
                let a = v[j];
                let b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
        half = step;
    }
}

/// Soft-decision decode of one duplicated block given as `2 * mult` words.
pub(crate) fn decode_block_words(words: &[u64], mult: usize) -> u8 {
    debug_assert_eq!(words.len(), RM_WORDS * mult);
    let mut counters = [0i32; RM_BITS];
    for copy in 0..mult {
        for (t, counter) in counters.iter_mut().enumerate() {
            let w = words[copy * RM_WORDS + t / 64];
            let bit = (w >> (t % 64)) & 1;
            *counter += 1 - 2 * bit as i32;
        }
    }
    hadamard_transform(&mut counters);

    let mut best = 0usize;
    let mut best_mag = counters[0].abs();
    for (u, &c) in counters.iter().enumerate().skip(1) {
        if c.abs() > best_mag {
            best = u;
            best_mag = c.abs();
        }
    }
    let msb = if counters[best] < 0 { 0x80 } else { 0x00 };
    msb | best as u8
}

/// Encodes one byte into the rm_n2-bit duplicated block, packed in bytes
/// with the ring's little-endian bit order.
pub fn rm_encode(byte: u8, params: &ParamSet) -> Vec<u8> {
    let words = encode_block_words(byte, params.rm_mult);
    let mut out = Vec::with_capacity(params.rm_n2 / 8);
    for w in words {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

/// Decodes one rm_n2-bit block back to a byte.
pub fn rm_decode(block: &[u8], params: &ParamSet) -> u8 {
    assert_eq!(block.len(), params.rm_n2 / 8, "block length must be rm_n2 bits");
    let words: Vec<u64> = block
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    decode_block_words(&words, params.rm_mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{get_params, ParamName, ALL_PARAMS};
    use crate::shake::{DomainTag, Prng};

    #[test]
    fn roundtrip_error_free_exhaustive() {
        for name in ALL_PARAMS {
            let p = get_params(name);
            for byte in 0..=255u8 {
                let block = rm_encode(byte, p);
                assert_eq!(block.len() * 8, p.rm_n2);
                assert_eq!(rm_decode(&block, p), byte);
            }
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let p = get_params(ParamName::Hqc1);
        assert!(rm_encode(0, p).iter().all(|&b| b == 0));
        assert_eq!(rm_decode(&vec![0u8; p.rm_n2 / 8], p), 0);
    }

    #[test]
    fn nonzero_codeword_weights() {
        // duplicated RM(1,7) weights are 64 * mult or 128 * mult
        let p = get_params(ParamName::Hqc1);
        for byte in 1..=255u8 {
            let w: u32 = rm_encode(byte, p).iter().map(|b| b.count_ones()).sum();
            assert!(w == 192 || w == 384, "byte {byte} weight {w}");
        }
    }

    #[test]
    fn corrects_below_half_distance() {
        for name in ALL_PARAMS {
            let p = get_params(name);
            let radius = (64 * p.rm_mult - 1) / 2; // (d' - 1) / 2
            let mut prng = Prng::new(b"rm-correct", DomainTag::Prng);
            for trial in 0..200 {
                let byte = (prng.next_u32() & 0xFF) as u8;
                let mut block = rm_encode(byte, p);
                let flips = prng.next_u32() as usize % (radius + 1);
                let mut positions: Vec<usize> = Vec::new();
                while positions.len() < flips {
                    let pos = prng.next_u32() as usize % p.rm_n2;
                    if !positions.contains(&pos) {
                        positions.push(pos);
                    }
                }
                for &pos in &positions {
                    block[pos / 8] ^= 1 << (pos % 8);
                }
                assert_eq!(rm_decode(&block, p), byte, "{name} trial {trial} flips {flips}");
            }
        }
    }

    #[test]
    fn accumulated_decode_agrees_with_unanimous_copies() {
        // If every copy decodes to b on its own, the soft accumulation must too.
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"rm-major", DomainTag::Prng);
        for _ in 0..200 {
            let byte = (prng.next_u32() & 0xFF) as u8;
            let mut block = rm_encode(byte, p);
            // light independent noise per copy, below the single-copy radius
            for copy in 0..p.rm_mult {
                for _ in 0..prng.next_u32() % 32 {
                    let pos = copy * 128 + prng.next_u32() as usize % 128;
                    block[pos / 8] ^= 1 << (pos % 8);
                }
            }
            let copies_agree = (0..p.rm_mult).all(|c| {
                let words: Vec<u64> = block[c * 16..(c + 1) * 16]
                    .chunks_exact(8)
                    .map(|ch| u64::from_le_bytes(ch.try_into().unwrap()))
                    .collect();
                decode_block_words(&words, 1) == byte
            });
            if copies_agree {
                assert_eq!(rm_decode(&block, p), byte);
            }
        }
    }
}
