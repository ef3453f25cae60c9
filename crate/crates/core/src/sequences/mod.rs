//! Sequence construction: exact rational phases and their complex rendering.

mod chirp;
mod gsc;
mod mow;

pub use chirp::{sample_step_chirp, ChirpModel};
pub use gsc::{dft_codeword, gc_phases, gsc_entries_float, gsc_phases, GscParams};
pub use mow::{mow_phases, MowParams};

use crate::rational::{mod_unit, to_scalar, Rational};
use crate::{Cplx, Error, Result, Scalar};

use serde::{Deserialize, Serialize};

/// Which construction produced a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceFamily {
    Gsc,
    Gc,
    Dft,
    Mow,
}

impl std::fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SequenceFamily::Gsc => "gsc",
            SequenceFamily::Gc => "gc",
            SequenceFamily::Dft => "dft",
            SequenceFamily::Mow => "mow",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SequenceFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gsc" => Ok(SequenceFamily::Gsc),
            "gc" => Ok(SequenceFamily::Gc),
            "dft" => Ok(SequenceFamily::Dft),
            "mow" => Ok(SequenceFamily::Mow),
            other => Err(Error::MalformedFile(format!("unknown family {other:?}"))),
        }
    }
}

/// A polyphase sequence in its lossless form: entry `n` is
/// `exp(j*2*pi*phases[n]) / sqrt(N)` with every phase an exact rational
/// number of turns, reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPhaseSequence {
    family: SequenceFamily,
    phases: Vec<Rational>,
}

impl RationalPhaseSequence {
    /// Builds from raw phases, reducing each into `[0, 1)`.
    pub fn new(family: SequenceFamily, phases: Vec<Rational>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::EmptyLength);
        }
        let phases = phases.iter().map(mod_unit).collect();
        Ok(Self { family, phases })
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    /// Phases in turns, each in `[0, 1)`.
    pub fn phases(&self) -> &[Rational] {
        &self.phases
    }

    /// Renders to the unit-energy complex vector.
    pub fn render<T: Scalar>(&self) -> ComplexSequence<T> {
        let n = self.len();
        let amp = T::one() / T::from_usize(n).unwrap().sqrt();
        let two_pi = T::TAU();
        let entries = self
            .phases
            .iter()
            .map(|p| {
                let (sin, cos) = (two_pi * to_scalar::<T>(p)).sin_cos();
                Cplx::new(amp * cos, amp * sin)
            })
            .collect();
        ComplexSequence { entries }
    }
}

/// A unit-energy complex vector, the numeric form consumed by every
/// correlation and spectrum kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSequence<T> {
    entries: Vec<Cplx<T>>,
}

impl<T: Scalar> ComplexSequence<T> {
    /// Wraps raw entries, enforcing unit total energy within 1e-12.
    pub fn from_entries(entries: Vec<Cplx<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyLength);
        }
        let seq = Self { entries };
        let energy = seq.energy().to_f64().unwrap();
        if (energy - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitEnergy(energy));
        }
        Ok(seq)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<Cplx<T>>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[Cplx<T>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn energy(&self) -> T {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Entrywise modulation by `exp(j*pi*u0*n)`, which steers the beam
    /// without changing correlation magnitudes.
    pub fn modulated(&self, u0: T) -> Self {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(n, e)| {
                let (sin, cos) = (T::PI() * u0 * T::from_usize(n).unwrap()).sin_cos();
                e * Cplx::new(cos, sin)
            })
            .collect();
        Self { entries }
    }
}
