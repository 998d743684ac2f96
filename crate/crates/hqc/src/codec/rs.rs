//! Shortened Reed-Solomon outer code over GF(2^8).
//!
//! Codeword byte at array position j is the coefficient of X^j, so the
//! syndromes are plain evaluations s_i = r(alpha^i) and codewords are the
//! multiples of g(X) = prod_{i=1..2delta} (X - alpha^i) of degree < n1.
//! Message symbols occupy positions 0..k. The systematic encoder runs the
//! standard parity shift register over the reversed codeword, whose
//! generator is the reciprocal polynomial ghat(X) = prod (X - alpha^{-i});
//! every tap multiplication is one row lookup in the precomputed table.
//!
//! Decoding: nibble-table syndromes, inversion-free Berlekamp-Massey with a
//! fixed 2delta iteration count, a Chien sweep over the n1 shortened
//! positions, and Forney error values. All loop bounds depend only on the
//! parameter set; a locator whose degree disagrees with its root count
//! leaves the received word uncorrected rather than signalling failure.

use std::sync::OnceLock;

use crate::gf256::{
    alpha_pow, build_encode_table, gf_inv_or_zero, gf_mul, nonzero_mask, syndrome_tables,
    EncodeTable, Gf,
};
use crate::params::{ParamName, ParamSet};

struct RsContext {
    /// g(X), lowest degree first, monic leading 1 included.
    generator: Vec<Gf>,
    /// ghat(X) coefficients 0..2delta feeding the encoder taps.
    #[cfg_attr(not(any(test, feature = "oracle")), allow(dead_code))]
    recip_taps: Vec<Gf>,
    table: EncodeTable,
}

static CONTEXTS: [OnceLock<RsContext>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];

fn context(params: &ParamSet) -> &'static RsContext {
    let slot = match params.name {
        ParamName::Hqc1 => &CONTEXTS[0],
        ParamName::Hqc3 => &CONTEXTS[1],
        ParamName::Hqc5 => &CONTEXTS[2],
    };
    slot.get_or_init(|| {
        let two_delta = 2 * params.rs_delta;
        let generator = poly_from_root_powers(1..=two_delta);
        let recip = poly_from_root_powers((1..=two_delta).map(|i| 255 - i));
        let table = build_encode_table(&recip[..two_delta]);
        RsContext { generator, recip_taps: recip, table }
    })
}

/// prod (X - alpha^e) over the given exponents, lowest degree first.
fn poly_from_root_powers(exponents: impl Iterator<Item = usize>) -> Vec<Gf> {
    let mut poly = vec![1u8];
    for e in exponents {
        let root = alpha_pow(e);
        let mut next = vec![0u8; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d] ^= gf_mul(c, root);
            next[d + 1] ^= c;
        }
        poly = next;
    }
    poly
}

/// Coefficients of the code generator g(X), lowest degree first, including
/// the monic leading term.
pub fn generator_poly(params: &ParamSet) -> &'static [Gf] {
    &context(params).generator
}

/// The reciprocal-generator taps the encoder's shift register multiplies by
/// (non-monic coefficients only). These are the rows of the encode table.
#[cfg(any(test, feature = "oracle"))]
pub fn encoder_taps(params: &ParamSet) -> &'static [Gf] {
    let ctx = context(params);
    &ctx.recip_taps[..2 * params.rs_delta]
}

fn encode_with(msg: &[u8], params: &ParamSet, tap_mul: impl Fn(usize, u8) -> u8) -> Vec<u8> {
    assert_eq!(msg.len(), params.rs_k, "message length must be rs_k");
    let n1 = params.rs_n1;
    let r = n1 - params.rs_k;
    let mut reg = vec![0u8; r];
    for &byte in msg {
        let feedback = byte ^ reg[r - 1];
        for d in (1..r).rev() {
            reg[d] = reg[d - 1] ^ tap_mul(d, feedback);
        }
        reg[0] = tap_mul(0, feedback);
    }
    let mut cw = vec![0u8; n1];
    cw[..params.rs_k].copy_from_slice(msg);
    for (j, &p) in reg.iter().enumerate() {
        cw[n1 - 1 - j] = p;
    }
    cw
}

/// Systematic encode: message bytes followed by parity, every shift-register
/// multiplication resolved through the lookup table.
pub fn rs_encode(msg: &[u8], params: &ParamSet) -> Vec<u8> {
    let table = &context(params).table;
    encode_with(msg, params, |d, x| table.mul(d, x))
}

/// Encode against a caller-supplied table; the self-test harness uses this
/// to prove the differential suite notices a corrupted table.
#[cfg(any(test, feature = "oracle"))]
pub fn rs_encode_with_table(msg: &[u8], table: &EncodeTable, params: &ParamSet) -> Vec<u8> {
    encode_with(msg, params, |d, x| table.mul(d, x))
}

/// Syndromes s_i = r(alpha^i) for i = 1..2delta via hi/lo nibble lookups.
/// The position-0 term is alpha^0 and needs no rotation.
pub fn rs_syndromes(received: &[u8], params: &ParamSet) -> Vec<Gf> {
    assert_eq!(received.len(), params.rs_n1, "received length must be rs_n1");
    let tables = syndrome_tables();
    let two_delta = 2 * params.rs_delta;
    let mut out = vec![0u8; two_delta];
    for (idx, slot) in out.iter_mut().enumerate() {
        let i = idx + 1;
        let mut acc = received[0];
        let mut p = 0usize;
        for &byte in &received[1..] {
            p += i;
            if p >= 255 {
                p -= 255;
            }
            acc ^= tables.mul_alpha_pow(p, byte);
        }
        *slot = acc;
    }
    out
}

/// Full decode: syndromes via the table path, then the shared corrector.
pub fn rs_decode(received: &[u8], params: &ParamSet) -> Vec<u8> {
    let synd = rs_syndromes(received, params);
    correct_from_syndromes(received, &synd, params)
}

/// Locator / root-search / error-value stages, shared by the table-driven
/// and reference syndrome paths.
pub(crate) fn correct_from_syndromes(received: &[u8], synd: &[Gf], params: &ParamSet) -> Vec<u8> {
    let n1 = params.rs_n1;
    let delta = params.rs_delta;
    let two_delta = 2 * delta;
    debug_assert_eq!(synd.len(), two_delta);
    let cap = delta + 1;

    // Inversion-free Berlekamp-Massey: sigma picks up nonzero scale factors
    // that cancel in the Forney ratio. Updates are mask-selected so every
    // iteration performs the same work.
    let mut sigma = vec![0u8; cap];
    sigma[0] = 1;
    let mut prev = vec![0u8; cap];
    prev[0] = 1;
    let mut old_sigma = vec![0u8; cap];
    let mut b: Gf = 1;
    let mut formal_deg: usize = 0;

    for step in 0..two_delta {
        let mut d: Gf = 0;
        for j in 0..cap.min(step + 1) {
            d ^= gf_mul(sigma[j], synd[step - j]);
        }
        // prev <- X * prev
        for j in (1..cap).rev() {
            prev[j] = prev[j - 1];
        }
        prev[0] = 0;

        let swap_mask = nonzero_mask(d) & nonzero_mask(u8::from(2 * formal_deg <= step));
        old_sigma.copy_from_slice(&sigma);
        for j in 0..cap {
            sigma[j] = gf_mul(b, old_sigma[j]) ^ gf_mul(d, prev[j]);
            prev[j] = (old_sigma[j] & swap_mask) | (prev[j] & !swap_mask);
        }
        b = (d & swap_mask) | (b & !swap_mask);
        let swapped = (swap_mask & 1) as usize;
        formal_deg = swapped * (step + 1 - formal_deg) + (1 - swapped) * formal_deg;
    }

    let mut locator_deg = 0usize;
    for (j, &c) in sigma.iter().enumerate() {
        if c != 0 {
            locator_deg = j;
        }
    }

    // Chien sweep over all n1 shortened positions.
    let mut root_mask = vec![0u8; n1];
    let mut root_count = 0usize;
    for (pos, mask) in root_mask.iter_mut().enumerate() {
        let mut val: Gf = 0;
        for (j, &c) in sigma.iter().enumerate() {
            let e = (255 - (pos * j) % 255) % 255;
            val ^= gf_mul(c, alpha_pow(e));
        }
        *mask = !nonzero_mask(val);
        root_count += (*mask & 1) as usize;
    }

    // Error evaluator omega = S(X) * sigma(X) mod X^{2delta}.
    let mut omega = vec![0u8; two_delta];
    for (i, slot) in omega.iter_mut().enumerate() {
        let mut acc: Gf = 0;
        for j in 0..cap.min(i + 1) {
            acc ^= gf_mul(sigma[j], synd[i - j]);
        }
        *slot = acc;
    }

    // A locator whose degree disagrees with its root count (or a degree-0
    // locator) applies no correction; the systematic bytes pass through and
    // the KEM-level re-encryption check arbitrates validity.
    let apply_mask = nonzero_mask(u8::from(root_count == locator_deg && locator_deg != 0));

    let mut out = received.to_vec();
    for (pos, slot) in out.iter_mut().enumerate() {
        let mut num: Gf = 0;
        for (j, &c) in omega.iter().enumerate() {
            let e = (255 - (pos * j) % 255) % 255;
            num ^= gf_mul(c, alpha_pow(e));
        }
        let mut den: Gf = 0;
        let mut j = 1;
        while j <= delta {
            let e = (255 - (pos * (j - 1)) % 255) % 255;
            den ^= gf_mul(sigma[j], alpha_pow(e));
            j += 2;
        }
        let err = gf_mul(num, gf_inv_or_zero(den));
        *slot ^= err & root_mask[pos] & apply_mask;
    }
    out.truncate(params.rs_k);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_rs_encode, naive_rs_syndromes};
    use crate::params::{get_params, ALL_PARAMS};
    use crate::shake::{DomainTag, Prng};

    #[test]
    fn generator_poly_frozen() {
        // Level-1 generator of the HQC parameter family, roots alpha^1..alpha^30.
        let expected: [u8; 31] = [
            89, 69, 153, 116, 176, 117, 111, 75, 73, 233, 242, 233, 65, 210, 21, 139, 103, 173,
            67, 118, 105, 210, 174, 110, 74, 69, 228, 82, 255, 181, 1,
        ];
        assert_eq!(generator_poly(&crate::params::HQC1), &expected);
        for name in ALL_PARAMS {
            let p = get_params(name);
            let g = generator_poly(p);
            assert_eq!(g.len(), 2 * p.rs_delta + 1);
            assert_eq!(*g.last().unwrap(), 1);
            // every alpha^i for i in 1..=2delta is a root
            for i in 1..=2 * p.rs_delta {
                let mut val = 0u8;
                for (d, &c) in g.iter().enumerate() {
                    val ^= gf_mul(c, alpha_pow(i * d));
                }
                assert_eq!(val, 0, "{name}: alpha^{i} must be a root");
            }
        }
    }

    #[test]
    fn encode_is_systematic_and_in_the_code() {
        for name in ALL_PARAMS {
            let p = get_params(name);
            let mut prng = Prng::new(name.as_str().as_bytes(), DomainTag::Prng);
            for _ in 0..20 {
                let msg = prng.bytes(p.rs_k);
                let cw = rs_encode(&msg, p);
                assert_eq!(cw.len(), p.rs_n1);
                assert_eq!(&cw[..p.rs_k], msg.as_slice());
                assert!(rs_syndromes(&cw, p).iter().all(|&s| s == 0));
            }
            assert_eq!(rs_encode(&vec![0u8; p.rs_k], p), vec![0u8; p.rs_n1]);
        }
    }

    #[test]
    fn syndrome_linearity() {
        let p = get_params(crate::params::ParamName::Hqc1);
        let mut prng = Prng::new(b"rs-linear", DomainTag::Prng);
        let a = prng.bytes(p.rs_n1);
        let b = prng.bytes(p.rs_n1);
        let ab: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
        let sa = rs_syndromes(&a, p);
        let sb = rs_syndromes(&b, p);
        let sab = rs_syndromes(&ab, p);
        for i in 0..sa.len() {
            assert_eq!(sab[i], sa[i] ^ sb[i]);
        }
    }

    #[test]
    fn table_paths_match_reference_paths() {
        for name in ALL_PARAMS {
            let p = get_params(name);
            let mut prng = Prng::new(b"rs-diff", DomainTag::Prng);
            for v in 0..=255u8 {
                let mut msg = vec![0u8; p.rs_k];
                msg[0] = v;
                assert_eq!(rs_encode(&msg, p), naive_rs_encode(&msg, p));
            }
            for _ in 0..50 {
                let msg = prng.bytes(p.rs_k);
                assert_eq!(rs_encode(&msg, p), naive_rs_encode(&msg, p));
                let word = prng.bytes(p.rs_n1);
                assert_eq!(rs_syndromes(&word, p), naive_rs_syndromes(&word, p));
            }
        }
    }

    #[test]
    fn corrects_up_to_delta_errors() {
        for name in ALL_PARAMS {
            let p = get_params(name);
            let mut prng = Prng::new(b"rs-correct", DomainTag::Prng);
            for trial in 0..100 {
                let msg = prng.bytes(p.rs_k);
                let mut cw = rs_encode(&msg, p);
                let nerr = (prng.next_u32() as usize % p.rs_delta) + 1;
                let mut positions: Vec<usize> = Vec::new();
                while positions.len() < nerr {
                    let pos = prng.next_u32() as usize % p.rs_n1;
                    if !positions.contains(&pos) {
                        positions.push(pos);
                    }
                }
                for &pos in &positions {
                    let flip = (prng.next_u32() % 255 + 1) as u8;
                    cw[pos] ^= flip;
                }
                assert_eq!(rs_decode(&cw, p), msg, "{name} trial {trial} nerr {nerr}");
            }
        }
    }

    #[test]
    fn uncorrupted_and_overloaded_words() {
        let p = get_params(crate::params::ParamName::Hqc1);
        let mut prng = Prng::new(b"rs-edges", DomainTag::Prng);
        let msg = prng.bytes(p.rs_k);
        let cw = rs_encode(&msg, p);
        assert_eq!(rs_decode(&cw, p), msg);

        // beyond-capacity corruption may miscorrect but keeps the contract
        let mut bad = cw.clone();
        for pos in 0..p.rs_delta + 3 {
            bad[pos] ^= 0xA5;
        }
        assert_eq!(rs_decode(&bad, p).len(), p.rs_k);
    }

    #[test]
    fn encode_table_size_matches_parameters() {
        let p = get_params(crate::params::ParamName::Hqc1);
        assert_eq!(context(p).table.size_bytes(), 30 * 256);
        assert_eq!(encoder_taps(p).len(), 30);
    }

    #[test]
    fn corrupted_table_breaks_the_differential() {
        let p = get_params(crate::params::ParamName::Hqc1);
        let table = build_encode_table(encoder_taps(p));
        let bad = table.corrupted_copy(3, 0x40);
        let mut prng = Prng::new(b"rs-sensitivity", DomainTag::Prng);
        let mut caught = false;
        for _ in 0..32 {
            let msg = prng.bytes(p.rs_k);
            if rs_encode_with_table(&msg, &bad, p) != naive_rs_encode(&msg, p) {
                caught = true;
                break;
            }
        }
        assert!(caught, "corrupted table must be detected");
    }
}
