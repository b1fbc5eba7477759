use std::fmt;

use serde::Serialize;

/// Machine-readable reason why an instance falls outside a theorem's
/// hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationCode {
    MultiplierNotCoprime,
    A0NotMinimal,
    JNotCovering,
    DegeneratePair,
    CharacteristicDividesModulus,
    DegreeBound,
    CoeffZero,
    NotMCover,
    NotEssential,
    PairNotDistinct,
    ZeroCoefficient,
    PermanentZero,
    RankDeficient,
    ModulusNotLcm,
    RowCount,
    LengthMismatch,
    ReciprocalSumTooLarge,
    BelowThreshold,
    NotPrime,
    NotPrimePower,
    OutOfRange,
}

impl ViolationCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationCode::MultiplierNotCoprime => "multiplier-not-coprime",
            ViolationCode::A0NotMinimal => "a0-not-minimal",
            ViolationCode::JNotCovering => "j-not-covering",
            ViolationCode::DegeneratePair => "degenerate-pair",
            ViolationCode::CharacteristicDividesModulus => "characteristic-divides-modulus",
            ViolationCode::DegreeBound => "degree-bound",
            ViolationCode::CoeffZero => "coeff-zero",
            ViolationCode::NotMCover => "not-m-cover",
            ViolationCode::NotEssential => "not-essential",
            ViolationCode::PairNotDistinct => "pair-not-distinct",
            ViolationCode::ZeroCoefficient => "zero-coefficient",
            ViolationCode::PermanentZero => "permanent-zero",
            ViolationCode::RankDeficient => "rank-deficient",
            ViolationCode::ModulusNotLcm => "modulus-not-lcm",
            ViolationCode::RowCount => "row-count",
            ViolationCode::LengthMismatch => "length-mismatch",
            ViolationCode::ReciprocalSumTooLarge => "reciprocal-sum-too-large",
            ViolationCode::BelowThreshold => "below-threshold",
            ViolationCode::NotPrime => "not-prime",
            ViolationCode::NotPrimePower => "not-prime-power",
            ViolationCode::OutOfRange => "out-of-range",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub message: String,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("hypothesis violated [{}]: {}", .0.code, .0.message)]
    Hypothesis(Violation),
    #[error("{what} exceeds the cap of {cap} (got {got})")]
    Cap { what: &'static str, cap: u64, got: u64 },
    #[error("order undefined: gcd({base}, {modulus}) != 1")]
    OrderUndefined { base: i64, modulus: u64 },
    #[error("no root of unity exists: characteristic {characteristic} divides {order}")]
    NoRootOfUnity { characteristic: u64, order: u64 },
    #[error("not an m-cover: multiplicity {actual} < {m}")]
    NotMCover { m: u64, actual: u64 },
    #[error("formula inapplicable: degree bound {degree} exceeds |J| = {j}")]
    FormulaInapplicable { degree: usize, j: usize },
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn violation(code: ViolationCode, message: impl Into<String>) -> Self {
        Error::Hypothesis(Violation { code, message: message.into() })
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Error::Parse(message.into())
    }

    pub fn violation_code(&self) -> Option<ViolationCode> {
        match self {
            Error::Hypothesis(v) => Some(v.code),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
