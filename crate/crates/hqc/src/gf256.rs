//! GF(2^8) arithmetic and the two precomputed table families backing the
//! Reed-Solomon encoder and syndrome computation.
//!
//! Field polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11D), primitive element
//! alpha = 0x02. Multiplication goes through log/antilog tables with an
//! arithmetic zero mask so the access pattern does not branch on a secret
//! zero operand.

use std::sync::OnceLock;

/// A field element. All 256 byte values are valid.
pub type Gf = u8;

/// The primitive element generating the multiplicative group.
pub const ALPHA: Gf = 0x02;

/// Reduction mask: low eight bits of the field polynomial 0x11D.
const POLY: u16 = 0x1D;

/// EXP[i] = alpha^i, mirrored to 512 entries so `EXP[log a + log b]` needs
/// no reduction mod 255.
static EXP: [u8; 512] = build_exp_table();

/// LOG[a] = discrete log of a; LOG[0] is unused and set to 0.
static LOG: [u8; 256] = build_log_table();

const fn build_exp_table() -> [u8; 512] {
    let mut table = [0u8; 512];
    let mut val: u16 = 1;
    let mut i = 0;
    while i < 255 {
        table[i] = val as u8;
        table[i + 255] = val as u8;
        val <<= 1;
        if val & 0x100 != 0 {
            val ^= 0x100 | POLY;
        }
        i += 1;
    }
    table[255] = 1;
    table[510] = 1;
    table
}

const fn build_log_table() -> [u8; 256] {
    let mut table = [0u8; 256];
    let mut val: u16 = 1;
    let mut i = 0u8;
    loop {
        table[val as usize] = i;
        val <<= 1;
        if val & 0x100 != 0 {
            val ^= 0x100 | POLY;
        }
        if i == 254 {
            break;
        }
        i += 1;
    }
    table
}

/// 0xFF when x is nonzero, 0x00 otherwise, without branching.
#[inline]
pub(crate) fn nonzero_mask(x: u8) -> u8 {
    (((x as u16).wrapping_neg()) >> 8) as u8
}

/// Product in GF(2^8).
#[inline]
pub fn gf_mul(a: Gf, b: Gf) -> Gf {
    let t = EXP[LOG[a as usize] as usize + LOG[b as usize] as usize];
    t & nonzero_mask(a) & nonzero_mask(b)
}

/// Multiplicative inverse, a^254. Returns `None` for the non-invertible 0.
#[inline]
pub fn gf_inv(a: Gf) -> Option<Gf> {
    if a == 0 {
        None
    } else {
        Some(EXP[255 - LOG[a as usize] as usize])
    }
}

/// Branchless inverse that maps 0 to 0; used where the caller has already
/// masked out the zero case.
#[inline]
pub(crate) fn gf_inv_or_zero(a: Gf) -> Gf {
    EXP[255 - LOG[a as usize] as usize] & nonzero_mask(a)
}

/// alpha^e for any non-negative exponent (reduced mod 255).
#[inline]
pub fn alpha_pow(e: usize) -> Gf {
    EXP[e % 255]
}

/// Per-coefficient multiplication table for the Reed-Solomon encoder:
/// `row j, column x` holds `g_j * x` for generator coefficient `g_j`.
pub struct EncodeTable {
    rows: Vec<[u8; 256]>,
}

/// Builds the encode table from the non-monic generator coefficients
/// g_0 .. g_{r-1}. Roughly 8 KB for the level-1 parameters.
pub fn build_encode_table(generator: &[Gf]) -> EncodeTable {
    let rows = generator
        .iter()
        .map(|&g| {
            let mut row = [0u8; 256];
            for (x, slot) in row.iter_mut().enumerate() {
                *slot = gf_mul(g, x as u8);
            }
            row
        })
        .collect();
    EncodeTable { rows }
}

impl EncodeTable {
    /// `g_j * x` as a single lookup.
    #[inline]
    pub fn mul(&self, j: usize, x: u8) -> u8 {
        self.rows[j][x as usize]
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size_bytes(&self) -> usize {
        self.rows.len() * 256
    }

    /// Copy with a single entry flipped; lets the self-test harness verify
    /// that the differential suite notices a corrupted table.
    #[cfg(any(test, feature = "oracle"))]
    pub fn corrupted_copy(&self, row: usize, column: u8) -> EncodeTable {
        let mut rows = self.rows.clone();
        rows[row][column as usize] ^= 0x01;
        EncodeTable { rows }
    }
}

/// Nibble-sliced syndrome tables: for every exponent p in [0, 255),
/// `hi[p][nb]` is `alpha^p * (nb << 4)` and `lo[p][nb]` is `alpha^p * nb`,
/// so a full byte product is one XOR of two lookups.
pub struct SyndromeTables {
    hi: Vec<[u8; 16]>,
    lo: Vec<[u8; 16]>,
}

/// Builds the nibble tables (2 * 255 * 16 bytes).
pub fn build_syndrome_tables() -> SyndromeTables {
    let mut hi = vec![[0u8; 16]; 255];
    let mut lo = vec![[0u8; 16]; 255];
    for p in 0..255 {
        let ap = alpha_pow(p);
        for nib in 0..16u8 {
            hi[p][nib as usize] = gf_mul(ap, nib << 4);
            lo[p][nib as usize] = gf_mul(ap, nib);
        }
    }
    SyndromeTables { hi, lo }
}

impl SyndromeTables {
    /// `alpha^p * byte` via the hi/lo pair. `p` must already be reduced
    /// mod 255.
    #[inline]
    pub fn mul_alpha_pow(&self, p: usize, byte: u8) -> u8 {
        self.hi[p][(byte >> 4) as usize] ^ self.lo[p][(byte & 0x0F) as usize]
    }

    pub fn size_bytes(&self) -> usize {
        2 * 255 * 16
    }
}

static SYNDROME_TABLES: OnceLock<SyndromeTables> = OnceLock::new();

/// Process-wide syndrome tables, built on first use.
pub fn syndrome_tables() -> &'static SyndromeTables {
    SYNDROME_TABLES.get_or_init(build_syndrome_tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_gf_mul;
    use proptest::prelude::*;

    #[test]
    fn mul_identities() {
        assert_eq!(gf_mul(0x00, 0x53), 0x00);
        assert_eq!(gf_mul(0x53, 0x00), 0x00);
        assert_eq!(gf_mul(0x01, 0x53), 0x53);
        // x * x^7 = x^8 = x^4 + x^3 + x^2 + 1
        assert_eq!(gf_mul(0x02, 0x80), 0x1D);
    }

    #[test]
    fn mul_matches_naive_exhaustively() {
        for a in 0..=255u8 {
            for b in 0..=255u8 {
                assert_eq!(gf_mul(a, b), naive_gf_mul(a, b), "a={a:#04x} b={b:#04x}");
            }
        }
    }

    #[test]
    fn inverse_contract() {
        assert_eq!(gf_inv(0x01), Some(0x01));
        assert_eq!(gf_inv(0x00), None);
        assert_eq!(gf_inv_or_zero(0x00), 0x00);
        for a in 1..=255u8 {
            let inv = gf_inv(a).unwrap();
            assert_eq!(gf_mul(a, inv), 1, "a={a:#04x}");
            assert_eq!(gf_inv_or_zero(a), inv);
        }
    }

    #[test]
    fn alpha_generates_the_group() {
        let mut seen = [false; 256];
        for e in 0..255 {
            let v = alpha_pow(e);
            assert!(!seen[v as usize], "alpha^{e} repeats");
            seen[v as usize] = true;
        }
        assert!(!seen[0]);
        assert_eq!(alpha_pow(0), 1);
        assert_eq!(alpha_pow(255), 1);
    }

    #[test]
    fn log_antilog_consistency() {
        for a in 1..=255u8 {
            assert_eq!(EXP[LOG[a as usize] as usize], a);
        }
    }

    #[test]
    fn encode_table_matches_mul() {
        let gen: Vec<u8> = (0..30).map(|j| alpha_pow(j * 7 + 1)).collect();
        let table = build_encode_table(&gen);
        assert_eq!(table.rows(), 30);
        assert_eq!(table.size_bytes(), 7680);
        for (j, &g) in gen.iter().enumerate() {
            assert_eq!(table.mul(j, 0), 0);
            assert_eq!(table.mul(j, 1), g);
            for x in 0..=255u8 {
                assert_eq!(table.mul(j, x), gf_mul(g, x));
            }
        }
    }

    #[test]
    fn encode_table_row_linearity() {
        let gen = [0x35u8, 0xA7, 0x01];
        let table = build_encode_table(&gen);
        for j in 0..gen.len() {
            for a in (0..=255u8).step_by(7) {
                for b in (0..=255u8).step_by(11) {
                    assert_eq!(table.mul(j, a) ^ table.mul(j, b), table.mul(j, a ^ b));
                }
            }
        }
    }

    #[test]
    fn syndrome_tables_match_mul() {
        let t = syndrome_tables();
        assert_eq!(t.size_bytes(), 8160);
        assert_eq!(t.lo[0][5], 5);
        assert_eq!(t.hi[0][0xF], 0xF0);
        for p in 0..255 {
            for byte in 0..=255u8 {
                assert_eq!(t.mul_alpha_pow(p, byte), gf_mul(alpha_pow(p), byte));
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a: u8, b: u8, c: u8) {
            prop_assert_eq!(gf_mul(a, b), gf_mul(b, a));
            prop_assert_eq!(gf_mul(gf_mul(a, b), c), gf_mul(a, gf_mul(b, c)));
            prop_assert_eq!(gf_mul(a, b ^ c), gf_mul(a, b) ^ gf_mul(a, c));
        }
    }
}
