//! Public-surface integration tests: the KEM as a consumer would drive it.

use hqc::kem::{self, Ciphertext, ParseError, PublicKey, SecretKey};
use hqc::shake::{DomainTag, Prng};
use hqc::{get_params, ParamName, ALL_PARAMS};

fn seeds(label: &[u8], count: usize) -> Vec<[u8; 32]> {
    let mut prng = Prng::new(label, DomainTag::Prng);
    (0..count)
        .map(|_| {
            let mut s = [0u8; 32];
            prng.fill(&mut s);
            s
        })
        .collect()
}

#[test]
fn full_roundtrips_across_sets() {
    for name in ALL_PARAMS {
        let params = get_params(name);
        for (i, seed) in seeds(name.as_str().as_bytes(), 10).iter().enumerate() {
            let (pk, sk) = kem::keygen(seed, params);
            let (ct, sent) = kem::encap(&pk, seed);
            let received = kem::decap(&sk, &ct);
            assert_eq!(sent, received, "{name} roundtrip {i}");
        }
    }
}

#[test]
fn wire_format_survives_reload() {
    let params = get_params(ParamName::Hqc3);
    let [ref kseed, ref coins] = seeds(b"wire", 2)[..] else { unreachable!() };
    let (pk, sk) = kem::keygen(kseed, params);
    let (ct, sent) = kem::encap(&pk, coins);

    let pk2 = PublicKey::from_bytes(params, &pk.to_bytes()).unwrap();
    let sk2 = SecretKey::from_bytes(params, &sk.to_bytes()).unwrap();
    let ct2 = Ciphertext::from_bytes(params, &ct.to_bytes()).unwrap();

    assert_eq!(kem::decap(&sk2, &ct2), sent);
    let (ct3, sent3) = kem::encap(&pk2, coins);
    assert_eq!(ct3.to_bytes(), ct.to_bytes());
    assert_eq!(sent3, sent);
}

#[test]
fn serialized_lengths_match_contract() {
    let params = get_params(ParamName::Hqc1);
    let [ref kseed, ref coins] = seeds(b"lengths", 2)[..] else { unreachable!() };
    let (pk, sk) = kem::keygen(kseed, params);
    let (ct, key) = kem::encap(&pk, coins);
    assert_eq!(pk.to_bytes().len(), 32 + 2209);
    assert_eq!(sk.to_bytes().len(), 32 + 16 + 2241);
    assert_eq!(ct.to_bytes().len(), 4417);
    assert_eq!(key.as_bytes().len(), 64);
}

#[test]
fn truncated_and_padded_inputs_are_rejected() {
    let params = get_params(ParamName::Hqc1);
    let [ref kseed, ref coins] = seeds(b"reject", 2)[..] else { unreachable!() };
    let (pk, _) = kem::keygen(kseed, params);
    let (ct, _) = kem::encap(&pk, coins);

    let ct_bytes = ct.to_bytes();
    assert!(matches!(
        Ciphertext::from_bytes(params, &ct_bytes[..ct_bytes.len() - 1]),
        Err(ParseError::Length { .. })
    ));

    // u occupies 17669 bits: the top 3 bits of its final byte are padding
    let mut padded = ct_bytes.clone();
    padded[params.n_bytes() - 1] |= 0xE0;
    assert_eq!(Ciphertext::from_bytes(params, &padded), Err(ParseError::PadBits));
}

#[test]
fn cross_key_decapsulation_rejects() {
    let params = get_params(ParamName::Hqc1);
    let [ref seed_a, ref seed_b, ref coins] = seeds(b"cross", 3)[..] else { unreachable!() };
    let (pk_a, _) = kem::keygen(seed_a, params);
    let (_, sk_b) = kem::keygen(seed_b, params);
    let (ct, sent) = kem::encap(&pk_a, coins);
    // wrong secret key: implicit rejection, deterministic
    let k1 = kem::decap(&sk_b, &ct);
    let k2 = kem::decap(&sk_b, &ct);
    assert_ne!(k1, sent);
    assert_eq!(k1, k2);
}
