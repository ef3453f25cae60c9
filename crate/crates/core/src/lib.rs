//! Step-chirp sequence toolkit.
//!
//! Constructs polyphase beamforming sequences — step-chirp (GSC), chirp (GC),
//! DFT codewords, and Mow's unified perfect-autocorrelation family — with
//! exact rational phase arithmetic, analyzes their spectra, autocorrelations
//! and phase resolutions, and plans beam sweeps with tunable bandwidth.
//!
//! The construction side works in exact arithmetic: every phase is a rational
//! number of turns, reduced into `[0, 1)`, so identities between the families
//! can be checked with zero tolerance. The analysis side (autocorrelation,
//! power spectra, ISL, passband metrics) renders sequences to complex vectors
//! over any [`Scalar`] floating type; `f64` is the default used by the CLI.

pub mod analysis;
pub mod equivalence;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod random;
pub mod rational;
pub mod scalar;
pub mod sequences;
pub mod sweep;
pub mod verification;

pub use error::Error;
pub use rational::Rational;
pub use scalar::Scalar;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex sample type over an arbitrary scalar.
pub type Cplx<T> = num_complex::Complex<T>;

// Concrete aliases for the default double-precision pipeline.
pub type Complex64 = num_complex::Complex<f64>;
pub type ComplexSequence64 = sequences::ComplexSequence<f64>;
pub type AutocorrProfile64 = analysis::AutocorrProfile<f64>;
pub type PeriodicAutocorr64 = analysis::PeriodicAutocorr<f64>;
pub type SpectrumGrid64 = analysis::SpectrumGrid<f64>;
