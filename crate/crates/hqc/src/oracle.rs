//! Deliberately naive reference implementations: differential baselines for
//! every optimized kernel, plus whole-operation baseline flows that mirror
//! the KEM with the naive kernels substituted. Compiled into test and bench
//! builds only; none of this is constant-time.

use crate::codec;
use crate::gf256::Gf;
use crate::kem::{Ciphertext, PublicKey, SecretKey, SharedSecret};
use crate::params::ParamSet;
use crate::ring::{RingElement, SparseVector};

/// Bit-by-bit convolution: for each set bit i of `a` and each set bit j of
/// `b`, flip result bit (i + j) mod n.
pub fn naive_ring_mul(a: &RingElement, b: &RingElement) -> RingElement {
    assert_eq!(a.n(), b.n(), "ring size mismatch");
    let n = a.n();
    let mut out = RingElement::zero_with_ring_size(n);
    for &i in a.support().indices() {
        for &j in b.support().indices() {
            let mut t = i as usize + j as usize;
            if t >= n {
                t -= n;
            }
            out.flip_bit(t);
        }
    }
    out
}

/// Shift-and-XOR carry-less multiply reduced modulo the field polynomial;
/// no tables involved.
pub fn naive_gf_mul(a: Gf, b: Gf) -> Gf {
    let mut acc: u16 = 0;
    let mut aa = a as u16;
    let mut bb = b;
    for _ in 0..8 {
        if bb & 1 != 0 {
            acc ^= aa;
        }
        aa <<= 1;
        if aa & 0x100 != 0 {
            aa ^= 0x11D;
        }
        bb >>= 1;
    }
    acc as u8
}

fn naive_alpha_pow(e: usize) -> Gf {
    let mut out: Gf = 1;
    for _ in 0..(e % 255) {
        out = naive_gf_mul(out, 0x02);
    }
    out
}

/// Shift-register encoder with a plain field multiply per tap.
pub fn naive_rs_encode(msg: &[u8], params: &ParamSet) -> Vec<u8> {
    assert_eq!(msg.len(), params.rs_k, "message length must be rs_k");
    let taps = codec::encoder_taps(params);
    let n1 = params.rs_n1;
    let r = n1 - params.rs_k;
    let mut reg = vec![0u8; r];
    for &byte in msg {
        let feedback = byte ^ reg[r - 1];
        for d in (1..r).rev() {
            reg[d] = reg[d - 1] ^ naive_gf_mul(taps[d], feedback);
        }
        reg[0] = naive_gf_mul(taps[0], feedback);
    }
    let mut cw = vec![0u8; n1];
    cw[..params.rs_k].copy_from_slice(msg);
    for (j, &p) in reg.iter().enumerate() {
        cw[n1 - 1 - j] = p;
    }
    cw
}

/// Direct alpha-power syndrome evaluation, one naive multiply per term.
pub fn naive_rs_syndromes(received: &[u8], params: &ParamSet) -> Vec<Gf> {
    assert_eq!(received.len(), params.rs_n1, "received length must be rs_n1");
    let two_delta = 2 * params.rs_delta;
    let mut out = vec![0u8; two_delta];
    for (idx, slot) in out.iter_mut().enumerate() {
        let i = idx + 1;
        let step = naive_alpha_pow(i);
        let mut power: Gf = 1;
        let mut acc: Gf = 0;
        for &byte in received {
            acc ^= naive_gf_mul(byte, power);
            power = naive_gf_mul(power, step);
        }
        *slot = acc;
    }
    out
}

/// Naive syndromes feeding the shared locator/root/error-value stages.
pub fn naive_rs_decode(received: &[u8], params: &ParamSet) -> Vec<u8> {
    let synd = naive_rs_syndromes(received, params);
    codec::correct_from_syndromes(received, &synd, params)
}

/// Concatenated encode with the naive outer encoder.
pub fn naive_code_encode(msg: &[u8], params: &ParamSet) -> RingElement {
    let outer = naive_rs_encode(msg, params);
    codec::pack_inner_blocks(&outer, params)
}

/// Concatenated decode with the naive outer decoder.
pub fn naive_code_decode(noisy: &RingElement, params: &ParamSet) -> Vec<u8> {
    let symbols = codec::rm_decode_blocks(noisy, params);
    naive_rs_decode(&symbols, params)
}

/// KEM flows with every optimized kernel replaced by its naive counterpart.
/// Outputs are bit-identical to the production flows; these serve as the
/// measured original in benchmark comparisons.
pub mod baseline {
    use super::*;
    use crate::perf::{self, Component};
    use crate::ring;
    use crate::shake::{derive, sample_dense, sample_fixed_weight, DomainTag, Prng};

    const SEED_BYTES: usize = crate::kem::SEED_BYTES;
    const SS_BYTES: usize = crate::kem::SHARED_SECRET_BYTES;

    fn mul_baseline(s: &SparseVector, d: &RingElement) -> RingElement {
        naive_ring_mul(&ring::to_dense(s), d)
    }

    pub fn keygen(seed: &[u8; 32], params: &'static ParamSet) -> (PublicKey, SecretKey) {
        let (seed_h, seed_sk) = perf::span(Component::Shake, || {
            let mut master = Prng::new(seed, DomainTag::Prng);
            let mut seed_h = [0u8; SEED_BYTES];
            master.fill(&mut seed_h);
            let mut seed_sk = [0u8; SEED_BYTES];
            master.fill(&mut seed_sk);
            (seed_h, seed_sk)
        });
        let h = perf::span(Component::VectorGen, || {
            let mut prng = Prng::new(&seed_h, DomainTag::Prng);
            sample_dense(&mut prng, params)
        });
        let (x, y, sigma) = perf::span(Component::VectorGen, || {
            let mut prng = Prng::new(&seed_sk, DomainTag::Prng);
            let x = sample_fixed_weight(&mut prng, params.omega, params);
            let y = sample_fixed_weight(&mut prng, params.omega, params);
            let sigma = prng.bytes(params.rs_k);
            (x, y, sigma)
        });
        let hy = perf::span(Component::PolyMult, || mul_baseline(&y, &h));
        let s = perf::span(Component::PolyAdd, || ring::add(&ring::to_dense(&x), &hy));
        let pk = PublicKey { params, seed_h, h, s };
        let sk = SecretKey { params, seed: seed_sk, x, y, sigma, pk: pk.clone() };
        (pk, sk)
    }

    pub fn pke_encrypt(pk: &PublicKey, m: &[u8], theta: &[u8; 32]) -> Ciphertext {
        let params = pk.params;
        assert_eq!(m.len(), params.rs_k);
        let (e, r1, r2) = perf::span(Component::VectorGen, || {
            let mut prng = Prng::new(theta, DomainTag::Prng);
            let e = sample_fixed_weight(&mut prng, params.omega_r, params);
            let r1 = sample_fixed_weight(&mut prng, params.omega_r, params);
            let r2 = sample_fixed_weight(&mut prng, params.omega_r, params);
            (e, r1, r2)
        });
        let hr2 = perf::span(Component::PolyMult, || mul_baseline(&r2, &pk.h));
        let u = perf::span(Component::PolyAdd, || ring::add(&ring::to_dense(&r1), &hr2));
        let encoded = perf::span(Component::CodeEncode, || naive_code_encode(m, params));
        let sr2 = perf::span(Component::PolyMult, || mul_baseline(&r2, &pk.s));
        let v_full = perf::span(Component::PolyAdd, || {
            ring::add(&ring::add(&encoded, &sr2), &ring::to_dense(&e))
        });
        let v = perf::span(Component::VectorResize, || {
            ring::truncate(&v_full, params.n1n2_bits())
        });
        Ciphertext { params, u, v }
    }

    pub fn pke_decrypt(sk: &SecretKey, c: &Ciphertext) -> Vec<u8> {
        let params = sk.params;
        let uy = perf::span(Component::PolyMult, || mul_baseline(&sk.y, &c.u));
        let v_elem = perf::span(Component::VectorResize, || {
            RingElement::load_bytes(params.n, params.words, &c.v)
        });
        let noisy = perf::span(Component::PolyAdd, || ring::add(&v_elem, &uy));
        perf::span(Component::CodeDecode, || naive_code_decode(&noisy, params))
    }

    pub fn encap(pk: &PublicKey, coins: &[u8; 32]) -> (Ciphertext, SharedSecret) {
        let params = pk.params;
        let m = perf::span(Component::Shake, || {
            Prng::new(coins, DomainTag::Prng).bytes(params.rs_k)
        });
        let pk_bytes = pk.to_bytes();
        let theta: [u8; 32] = perf::span(Component::Shake, || {
            derive(DomainTag::G, &[&m, &pk_bytes], SEED_BYTES).try_into().unwrap()
        });
        let c = pke_encrypt(pk, &m, &theta);
        let c_bytes = c.to_bytes();
        let k: [u8; 64] = perf::span(Component::Shake, || {
            derive(DomainTag::K, &[&m, &c_bytes], SS_BYTES).try_into().unwrap()
        });
        (c, SharedSecret::from_raw(k))
    }

    pub fn decap(sk: &SecretKey, c: &Ciphertext) -> SharedSecret {
        let m_prime = pke_decrypt(sk, c);
        let pk_bytes = sk.pk.to_bytes();
        let theta_prime: [u8; 32] = perf::span(Component::Shake, || {
            derive(DomainTag::G, &[&m_prime, &pk_bytes], SEED_BYTES).try_into().unwrap()
        });
        let c_prime = pke_encrypt(&sk.pk, &m_prime, &theta_prime);
        let selector = if c_prime.to_bytes() == c.to_bytes() { &m_prime } else { &sk.sigma };
        let k: [u8; 64] = perf::span(Component::Shake, || {
            derive(DomainTag::K, &[selector, &c.to_bytes()], SS_BYTES).try_into().unwrap()
        });
        SharedSecret::from_raw(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{get_params, ParamName};
    use crate::ring;
    use crate::shake::{DomainTag, Prng};

    #[test]
    fn naive_gf_examples() {
        assert_eq!(naive_gf_mul(0x02, 0x80), 0x1D);
        assert_eq!(naive_gf_mul(0x00, 0x77), 0x00);
        assert_eq!(naive_gf_mul(0x01, 0x77), 0x77);
    }

    #[test]
    fn naive_ring_mul_identity_and_commutativity() {
        let n = 257;
        let mut prng = Prng::new(b"oracle-ring", DomainTag::Prng);
        let mut a = RingElement::zero_with_ring_size(n);
        let mut b = RingElement::zero_with_ring_size(n);
        for _ in 0..40 {
            a.flip_bit(prng.next_u32() as usize % n);
            b.flip_bit(prng.next_u32() as usize % n);
        }
        let one = ring::to_dense(&SparseVector::with_ring_size(vec![0], n));
        assert_eq!(naive_ring_mul(&a, &one), a);
        assert_eq!(naive_ring_mul(&a, &b), naive_ring_mul(&b, &a));
    }

    #[test]
    fn naive_matches_optimized_on_small_ring() {
        let p = get_params(ParamName::Hqc1);
        let mut prng = Prng::new(b"oracle-diff", DomainTag::Prng);
        let mut d = RingElement::zero(p);
        for _ in 0..500 {
            d.flip_bit(prng.next_u32() as usize % p.n);
        }
        let mut idx: Vec<u32> = Vec::new();
        while idx.len() < p.omega {
            let v = prng.next_u32() % p.n as u32;
            if !idx.contains(&v) {
                idx.push(v);
            }
        }
        idx.sort_unstable();
        let s = SparseVector::new(idx, p);
        assert_eq!(
            naive_ring_mul(&ring::to_dense(&s), &d),
            ring::sparse_dense_mul(&s, &d)
        );
    }

    #[test]
    fn baseline_flows_match_production() {
        let p = get_params(ParamName::Hqc1);
        let seed = [0x42u8; 32];
        let coins = [0x17u8; 32];

        let (pk_b, sk_b) = baseline::keygen(&seed, p);
        let (pk, sk) = crate::kem::keygen(&seed, p);
        assert_eq!(pk_b.to_bytes(), pk.to_bytes());
        assert_eq!(sk_b.to_bytes(), sk.to_bytes());

        let (c_b, k_b) = baseline::encap(&pk_b, &coins);
        let (c, k) = crate::kem::encap(&pk, &coins);
        assert_eq!(c_b.to_bytes(), c.to_bytes());
        assert_eq!(k_b, k);

        assert_eq!(baseline::decap(&sk_b, &c_b), crate::kem::decap(&sk, &c));
    }
}
