//! The three standardized HQC parameter sets and the derived sizes every
//! other module consumes.

use std::fmt;
use std::str::FromStr;

/// Security level names, as accepted on the command line ("hqc1", "hqc3", "hqc5").
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamName {
    Hqc1,
    Hqc3,
    Hqc5,
}

/// All parameter sets, in increasing security order.
pub const ALL_PARAMS: [ParamName; 3] = [ParamName::Hqc1, ParamName::Hqc3, ParamName::Hqc5];

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::Hqc1 => "hqc1",
            ParamName::Hqc3 => "hqc3",
            ParamName::Hqc5 => "hqc5",
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParamName {
    type Err = UnknownParamSet;

    fn from_str(s: &str) -> Result<Self, UnknownParamSet> {
        if s.eq_ignore_ascii_case("hqc1") {
            Ok(ParamName::Hqc1)
        } else if s.eq_ignore_ascii_case("hqc3") {
            Ok(ParamName::Hqc3)
        } else if s.eq_ignore_ascii_case("hqc5") {
            Ok(ParamName::Hqc5)
        } else {
            Err(UnknownParamSet(s.to_string()))
        }
    }
}

/// Error returned when parsing an unrecognized parameter-set name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownParamSet(pub String);

impl fmt::Display for UnknownParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown parameter set {:?} (expected hqc1, hqc3 or hqc5)", self.0)
    }
}

impl std::error::Error for UnknownParamSet {}

/// One HQC parameter set with all derived quantities populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSet {
    pub name: ParamName,
    /// Ring length N in bits. Always odd.
    pub n: usize,
    /// Hamming weight of the secret vectors x and y.
    pub omega: usize,
    /// Hamming weight of the error and randomness vectors (omega_e = omega_r).
    pub omega_r: usize,
    /// Outer Reed-Solomon code length in bytes.
    pub rs_n1: usize,
    /// Reed-Solomon dimension in bytes (= message length).
    pub rs_k: usize,
    /// Reed-Solomon minimum distance.
    pub rs_d: usize,
    /// Reed-Solomon correction capacity, (rs_d - 1) / 2.
    pub rs_delta: usize,
    /// Inner code length in bits per RS symbol.
    pub rm_n2: usize,
    /// Reed-Muller duplication multiplicity, rm_n2 / 128.
    pub rm_mult: usize,
    /// Ring storage length in 64-bit words: ceil(n / 64) rounded up to a
    /// multiple of 4, so buffers are whole 256-bit blocks.
    pub words: usize,
    /// Hamming-weight threshold below which multiplication routes to the
    /// sparse-dense kernel. Calibrated per parameter set; the bench CLI can
    /// sweep alternatives.
    pub mul_threshold: usize,
}

pub(crate) const fn padded_words(n: usize) -> usize {
    let w = (n + 63) / 64;
    (w + 3) & !3
}

const DEFAULT_MUL_THRESHOLD: usize = 2048;

pub const HQC1: ParamSet = ParamSet {
    name: ParamName::Hqc1,
    n: 17_669,
    omega: 66,
    omega_r: 75,
    rs_n1: 46,
    rs_k: 16,
    rs_d: 31,
    rs_delta: 15,
    rm_n2: 384,
    rm_mult: 3,
    words: padded_words(17_669),
    mul_threshold: DEFAULT_MUL_THRESHOLD,
};

pub const HQC3: ParamSet = ParamSet {
    name: ParamName::Hqc3,
    n: 35_851,
    omega: 100,
    omega_r: 114,
    rs_n1: 56,
    rs_k: 24,
    rs_d: 33,
    rs_delta: 16,
    rm_n2: 640,
    rm_mult: 5,
    words: padded_words(35_851),
    mul_threshold: DEFAULT_MUL_THRESHOLD,
};

pub const HQC5: ParamSet = ParamSet {
    name: ParamName::Hqc5,
    n: 57_637,
    omega: 131,
    omega_r: 149,
    rs_n1: 90,
    rs_k: 32,
    rs_d: 59,
    rs_delta: 29,
    rm_n2: 640,
    rm_mult: 5,
    words: padded_words(57_637),
    mul_threshold: DEFAULT_MUL_THRESHOLD,
};

/// Look up the constant record for a parameter-set name.
pub fn get_params(name: ParamName) -> &'static ParamSet {
    match name {
        ParamName::Hqc1 => &HQC1,
        ParamName::Hqc3 => &HQC3,
        ParamName::Hqc5 => &HQC5,
    }
}

impl ParamSet {
    /// Ring serialization length, ceil(n / 8) bytes.
    pub fn n_bytes(&self) -> usize {
        (self.n + 7) / 8
    }

    /// Bits occupied by one concatenated codeword: rs_n1 * rm_n2.
    pub fn n1n2_bits(&self) -> usize {
        self.rs_n1 * self.rm_n2
    }

    /// Byte length of a truncated codeword. rm_n2 is a multiple of 128, so
    /// this is always exact.
    pub fn n1n2_bytes(&self) -> usize {
        (self.n1n2_bits() + 7) / 8
    }

    /// Serialized public key length: 32-byte seed plus the dense vector s.
    pub fn public_key_bytes(&self) -> usize {
        32 + self.n_bytes()
    }

    /// Serialized secret key length: 32-byte seed, sigma, embedded public key.
    pub fn secret_key_bytes(&self) -> usize {
        32 + self.rs_k + self.public_key_bytes()
    }

    /// Serialized ciphertext length: u followed by the truncated v.
    pub fn ciphertext_bytes(&self) -> usize {
        self.n_bytes() + self.n1n2_bytes()
    }
}
