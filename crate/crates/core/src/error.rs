//! Error type shared by the construction, planning and analysis paths.
//!
//! Validation errors name the violated constraint so a CLI user sees exactly
//! which parameter-set condition failed.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence length must be positive")]
    EmptyLength,

    #[error("step length m={m} does not divide sequence length N={n}")]
    StepNotDivisor { m: u64, n: u64 },

    #[error("normalized bandwidth gamma={gamma} outside [1/N, 1] for N={n}")]
    BandwidthOutOfRange { gamma: String, n: u64 },

    #[error("beam direction u0={0} outside [-1, 1)")]
    DirectionOutOfRange(String),

    #[error("gamma={0} is not the reciprocal of a positive integer")]
    NotReciprocalInteger(String),

    #[error("s={0} is not square-free")]
    NotSquareFree(u64),

    #[error("alpha({index})={value} is not in {{1..s-1}} coprime to s={s}")]
    AlphaNotUnit { index: usize, value: u64, s: u64 },

    #[error("beta mod m={m} is not a permutation of Z_m")]
    BetaNotPermutation { m: u64 },

    #[error("table length {got} does not match step count m={m}")]
    TableLengthMismatch { got: usize, m: u64 },

    #[error("chirp slope a={0} must be positive")]
    NonPositiveSlope(String),

    #[error("Nyquist sampling number a*T^2={0} is below 1")]
    NyquistViolated(String),

    #[error("sampling rate a*T/gamma={0} is not a positive integer")]
    NonIntegerSamplingRate(String),

    #[error("operation requires gamma=1, got gamma={0}")]
    NotFullBand(String),

    #[error("m={m} is not the square part of N={n} (need N = s*m^2 with s square-free)")]
    NotSquarePart { m: u64, n: u64 },

    #[error("offset b={b} fails the parity condition: need {need}")]
    OffsetParity { b: String, need: &'static str },

    #[error("passband index set is empty")]
    EmptyPassband,

    #[error("beta-table enumeration with m > 1 is limited to N <= 30, got N={0}")]
    FamilyTooLarge(u64),

    #[error("closed-form phase resolution requires an integer b, got {0}")]
    NonIntegerOffset(String),

    #[error("sequence energy {0} is not 1 within 1e-12")]
    NotUnitEnergy(f64),

    #[error("cannot parse rational from {0:?} (expected \"p\" or \"p/q\")")]
    BadRational(String),

    #[error("malformed sequence file: {0}")]
    MalformedFile(String),
}
