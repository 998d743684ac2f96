//! Differential and round-trip suites: every optimized kernel against its
//! naive oracle, codec correction, KEM round trips, SHAKE known answers,
//! and a sensitivity check proving the harness notices a corrupted table.

use hqc::gf256::{build_encode_table, gf_mul};
use hqc::kem;
use hqc::oracle::{
    self, baseline, naive_gf_mul, naive_ring_mul, naive_rs_encode, naive_rs_syndromes,
};
use hqc::ring::{self, RingElement, SparseVector};
use hqc::shake::{self, sample_dense, sample_fixed_weight, DomainTag, Prng};
use hqc::{codec, get_params, ParamName, ParamSet, ALL_PARAMS};

struct Outcome {
    suite: &'static str,
    param: String,
    pass: bool,
    detail: String,
}

fn outcome(suite: &'static str, param: Option<ParamName>, pass: bool, detail: String) -> Outcome {
    Outcome {
        suite,
        param: param.map_or_else(|| "-".to_string(), |p| p.as_str().to_string()),
        pass,
        detail,
    }
}

fn random_dense(params: &ParamSet, prng: &mut Prng) -> RingElement {
    sample_dense(prng, params)
}

fn shake_vectors() -> Outcome {
    let empty = hex::encode(shake::shake256(b"", 32));
    let abc = hex::encode(shake::shake256(b"abc", 32));
    let pass = empty == "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f"
        && abc == "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739"
        && shake::shake256(b"", 0).is_empty();
    outcome("shake_vectors", None, pass, "FIPS 202 known answers".into())
}

fn shake_batch_suite() -> Outcome {
    let mut prng = Prng::new(b"selftest-batch", DomainTag::Prng);
    let mut pass = true;
    for batch_size in 1..=8usize {
        let inputs: Vec<(Vec<u8>, usize)> = (0..batch_size)
            .map(|i| (prng.bytes(11 * i + 1), 16 + 8 * i))
            .collect();
        let refs: Vec<(&[u8], usize)> =
            inputs.iter().map(|(data, len)| (data.as_slice(), *len)).collect();
        let batched = shake::shake_batch(&refs);
        for ((data, len), got) in refs.iter().zip(&batched) {
            pass &= got == &shake::shake256(data, *len);
        }
    }
    outcome("shake_batch", None, pass, "batch sizes 1-8 equal the scalar path".into())
}

fn gf_differential() -> Outcome {
    let mut pass = true;
    for a in 0..=255u8 {
        for b in 0..=255u8 {
            pass &= gf_mul(a, b) == naive_gf_mul(a, b);
        }
    }
    outcome("gf_mul_differential", None, pass, "exhaustive over all 65536 pairs".into())
}

fn ring_differential(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-ring", DomainTag::Prng);
    let mut pass = true;
    for weight in [params.omega, params.omega_r] {
        for _ in 0..trials {
            let s = sample_fixed_weight(&mut prng, weight, params);
            let d = random_dense(params, &mut prng);
            let expected = naive_ring_mul(&ring::to_dense(&s), &d);
            pass &= ring::sparse_dense_mul(&s, &d) == expected;
            pass &= ring::dense_mul(&ring::to_dense(&s), &d) == expected;
            pass &= ring::mul_sparse(&s, &d, params.mul_threshold) == expected;
            pass &= ring::mul_sparse(&s, &d, 1) == expected;
        }
    }
    outcome("ring_differential", Some(name), pass, format!("{trials} trials per weight"))
}

fn ring_exhaustive_small() -> Outcome {
    let mut pass = true;
    for a_bits in 0..256u32 {
        let mut a = RingElement::zero_with_ring_size(8);
        let mut support = Vec::new();
        for bit in 0..8 {
            if (a_bits >> bit) & 1 == 1 {
                a.flip_bit(bit);
                support.push(bit as u32);
            }
        }
        let s = SparseVector::with_ring_size(support, 8);
        for b_bits in 0..256u32 {
            let mut b = RingElement::zero_with_ring_size(8);
            for bit in 0..8 {
                if (b_bits >> bit) & 1 == 1 {
                    b.flip_bit(bit);
                }
            }
            let expected = naive_ring_mul(&a, &b);
            pass &= ring::dense_mul(&a, &b) == expected;
            pass &= ring::sparse_dense_mul(&s, &b) == expected;
        }
    }
    outcome("ring_exhaustive_n8", None, pass, "all 65536 pairs on the n=8 ring".into())
}

fn rs_encode_differential(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-rsenc", DomainTag::Prng);
    let mut pass = true;
    for v in 0..=255u8 {
        let mut msg = vec![0u8; params.rs_k];
        msg[v as usize % params.rs_k] = v;
        pass &= codec::rs_encode(&msg, params) == naive_rs_encode(&msg, params);
    }
    for _ in 0..trials {
        let msg = prng.bytes(params.rs_k);
        pass &= codec::rs_encode(&msg, params) == naive_rs_encode(&msg, params);
    }
    outcome("rs_encode_differential", Some(name), pass, format!("256 single-byte + {trials} random"))
}

fn rs_syndromes_differential(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-rssyn", DomainTag::Prng);
    let mut pass = true;
    for _ in 0..trials {
        let word = prng.bytes(params.rs_n1);
        pass &= codec::rs_syndromes(&word, params) == naive_rs_syndromes(&word, params);
        let msg = prng.bytes(params.rs_k);
        let cw = codec::rs_encode(&msg, params);
        pass &= codec::rs_syndromes(&cw, params).iter().all(|&s| s == 0);
    }
    outcome(
        "rs_syndromes_differential",
        Some(name),
        pass,
        format!("{trials} random words + codeword zero-syndromes"),
    )
}

fn rs_correction(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-rscorr", DomainTag::Prng);
    let mut pass = true;
    for _ in 0..trials {
        let msg = prng.bytes(params.rs_k);
        let mut cw = codec::rs_encode(&msg, params);
        let mut positions = Vec::new();
        while positions.len() < params.rs_delta {
            let pos = prng.next_u32() as usize % params.rs_n1;
            if !positions.contains(&pos) {
                positions.push(pos);
            }
        }
        for &pos in &positions {
            cw[pos] ^= (prng.next_u32() % 255 + 1) as u8;
        }
        pass &= codec::rs_decode(&cw, params) == msg;
    }
    outcome("rs_correction", Some(name), pass, format!("{trials} trials at delta errors"))
}

fn rm_suite(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-rm", DomainTag::Prng);
    let mut pass = true;
    for byte in 0..=255u8 {
        pass &= codec::rm_decode(&codec::rm_encode(byte, params), params) == byte;
    }
    let radius = (64 * params.rm_mult - 1) / 2;
    for _ in 0..trials {
        let byte = (prng.next_u32() & 0xFF) as u8;
        let mut block = codec::rm_encode(byte, params);
        let flips = prng.next_u32() as usize % (radius + 1);
        let mut positions = Vec::new();
        while positions.len() < flips {
            let pos = prng.next_u32() as usize % params.rm_n2;
            if !positions.contains(&pos) {
                positions.push(pos);
            }
        }
        for &pos in &positions {
            block[pos / 8] ^= 1 << (pos % 8);
        }
        pass &= codec::rm_decode(&block, params) == byte;
    }
    outcome("rm_roundtrip_and_correction", Some(name), pass, format!("exhaustive + {trials} noisy"))
}

fn kem_suite(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-kem", DomainTag::Prng);
    let mut pass = true;
    for _ in 0..trials {
        let mut seed = [0u8; 32];
        prng.fill(&mut seed);
        let (pk, sk) = kem::keygen(&seed, params);
        let mut coins = [0u8; 32];
        prng.fill(&mut coins);
        let (ct, sent) = kem::encap(&pk, &coins);
        pass &= kem::decap(&sk, &ct) == sent;
    }
    outcome("kem_roundtrip", Some(name), pass, format!("{trials} keygen/encaps/decaps triples"))
}

fn kem_tamper(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-tamper", DomainTag::Prng);
    let mut seed = [0u8; 32];
    prng.fill(&mut seed);
    let (pk, sk) = kem::keygen(&seed, params);
    let mut pass = true;
    for _ in 0..trials {
        let mut coins = [0u8; 32];
        prng.fill(&mut coins);
        let (ct, sent) = kem::encap(&pk, &coins);
        let mut bytes = ct.to_bytes();
        let bit = prng.next_u32() as usize % params.n;
        bytes[bit / 8] ^= 1 << (bit % 8);
        let tampered = kem::Ciphertext::from_bytes(params, &bytes).unwrap();
        let k1 = kem::decap(&sk, &tampered);
        let k2 = kem::decap(&sk, &tampered);
        pass &= k1 != sent && k1 == k2;
    }
    outcome("kem_tamper_rejection", Some(name), pass, format!("{trials} single-bit flips"))
}

fn baseline_equivalence(name: ParamName) -> Outcome {
    let params = get_params(name);
    let seed = [0x5Au8; 32];
    let coins = [0xC3u8; 32];
    let (pk_b, sk_b) = baseline::keygen(&seed, params);
    let (pk, sk) = kem::keygen(&seed, params);
    let mut pass = pk_b.to_bytes() == pk.to_bytes() && sk_b.to_bytes() == sk.to_bytes();
    let (ct_b, k_b) = baseline::encap(&pk_b, &coins);
    let (ct, k) = kem::encap(&pk, &coins);
    pass &= ct_b.to_bytes() == ct.to_bytes() && k_b == k;
    pass &= baseline::decap(&sk_b, &ct_b) == kem::decap(&sk, &ct);
    outcome("baseline_equivalence", Some(name), pass, "oracle flows match production".into())
}

fn table_sensitivity() -> Outcome {
    // A corrupted encode table must make the differential suite fail; this
    // proves the comparisons are live.
    let params = get_params(ParamName::Hqc1);
    let table = build_encode_table(codec::encoder_taps(params));
    let corrupted = table.corrupted_copy(5, 0x21);
    let mut prng = Prng::new(b"selftest-sens", DomainTag::Prng);
    let mut caught = false;
    for _ in 0..64 {
        let msg = prng.bytes(params.rs_k);
        if codec::rs_encode_with_table(&msg, &corrupted, params) != naive_rs_encode(&msg, params) {
            caught = true;
            break;
        }
    }
    outcome("encode_table_sensitivity", None, caught, "corrupted table detected".into())
}

fn code_roundtrip(name: ParamName, trials: usize) -> Outcome {
    let params = get_params(name);
    let mut prng = Prng::new(b"selftest-codec", DomainTag::Prng);
    let mut pass = true;
    for _ in 0..trials {
        let msg = prng.bytes(params.rs_k);
        let encoded = codec::code_encode(&msg, params);
        pass &= codec::code_decode(&encoded, params) == msg;
        pass &= oracle::naive_code_encode(&msg, params) == encoded;
        pass &= oracle::naive_code_decode(&encoded, params) == msg;
    }
    outcome("code_roundtrip", Some(name), pass, format!("{trials} messages, both paths"))
}

/// Runs every suite on all three parameter sets, prints a pass/fail table,
/// and returns whether everything passed.
pub fn run() -> bool {
    let mut results = vec![
        shake_vectors(),
        shake_batch_suite(),
        gf_differential(),
        ring_exhaustive_small(),
        table_sensitivity(),
    ];
    for name in ALL_PARAMS {
        results.push(ring_differential(name, 25));
        results.push(rs_encode_differential(name, 50));
        results.push(rs_syndromes_differential(name, 50));
        results.push(rs_correction(name, 100));
        results.push(rm_suite(name, 100));
        results.push(code_roundtrip(name, 25));
        results.push(kem_suite(name, 50));
        results.push(kem_tamper(name, 20));
        results.push(baseline_equivalence(name));
    }

    println!("{:<28} {:<6} {:<6} detail", "suite", "param", "result");
    let mut all_pass = true;
    for r in &results {
        all_pass &= r.pass;
        println!(
            "{:<28} {:<6} {:<6} {}",
            r.suite,
            r.param,
            if r.pass { "PASS" } else { "FAIL" },
            r.detail
        );
    }
    println!("{}", if all_pass { "selftest: all suites passed" } else { "selftest: FAILURES" });
    all_pass
}
