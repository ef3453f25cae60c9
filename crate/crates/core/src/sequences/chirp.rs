//! Continuous step-chirp signal model and its critical sampling.

use super::{RationalPhaseSequence, SequenceFamily};
use crate::rational::{is_integer, rat, rat_int, Rational};
use crate::{Error, Result};
use num_traits::{Signed, ToPrimitive};

/// Step-frequency chirp `c(t) = exp(j*2*pi*Int_0^t f)`, where
/// `f(t) = a*(floor(t) + b)` steps once per unit time for `duration` steps.
///
/// `a` and `b` are kept rational so the sampled phases stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChirpModel {
    a: Rational,
    b: Rational,
    duration: u64,
}

impl ChirpModel {
    pub fn new(a: Rational, b: Rational, duration: u64) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::NonPositiveSlope(a.to_string()));
        }
        if duration == 0 {
            return Err(Error::EmptyLength);
        }
        // Nyquist sampling number: a*T^2 >= 1
        let nyquist = &a * rat_int((duration * duration) as i64);
        if nyquist < rat_int(1) {
            return Err(Error::NyquistViolated(nyquist.to_string()));
        }
        Ok(Self { a, b, duration })
    }

    pub fn slope(&self) -> &Rational {
        &self.a
    }

    pub fn offset(&self) -> &Rational {
        &self.b
    }

    /// Duration `T` in steps.
    pub fn duration(&self) -> u64 {
        self.duration
    }

    /// Spectrum passband edges `f0 = a(b - 1/2)` and `f1 = a(b - 1/2 + T)`.
    pub fn band_edges(&self) -> (Rational, Rational) {
        let half = &self.b - rat(1, 2);
        (
            &self.a * &half,
            &self.a * (half + rat_int(self.duration as i64)),
        )
    }
}

/// Samples the step-chirp at rate `m = a*T/gamma`, producing the `N = m*T`
/// phases `phi_n/(2*pi) = a*k(k-1+2b)/2 + a*(k+b)*l/m` with `n = k*m + l`.
///
/// This is the pre-substitution form of the sampled phase; it must agree
/// exactly with [`super::gsc_phases`] under the induced `(N, m, gamma, b)`,
/// which the tests check term by term.
pub fn sample_step_chirp(model: &ChirpModel, gamma: &Rational) -> Result<RationalPhaseSequence> {
    if !gamma.is_positive() {
        return Err(Error::NonIntegerSamplingRate(format!("a*T/({gamma})")));
    }
    let rate = model.slope() * rat_int(model.duration as i64) / gamma;
    if !is_integer(&rate) {
        return Err(Error::NonIntegerSamplingRate(rate.to_string()));
    }
    let m = rate
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegerSamplingRate(rate.to_string()))?;
    let n = m * model.duration;
    super::gsc::check_bandwidth(n, gamma)?;
    let a = model.slope();
    let b = model.offset();
    let phases = (0..n)
        .map(|idx| {
            let k = rat_int((idx / m) as i64);
            let l = rat_int((idx % m) as i64);
            let quad = a * &k * (&k - rat_int(1) + b * rat_int(2)) / rat_int(2);
            quad + a * (&k + b) * &l / rat_int(m as i64)
        })
        .collect();
    RationalPhaseSequence::new(SequenceFamily::Gsc, phases)
}
