//! Step-chirp (GSC), chirp (GC) and DFT-codeword constructions.

use super::{ComplexSequence, RationalPhaseSequence, SequenceFamily};
use crate::rational::{rat, rat_int, Rational};
use crate::{Cplx, Error, Result, Scalar};
use num_bigint::BigInt;


/// Parameter set of the step-chirp family: length `N`, step length `m`
/// dividing `N`, normalized bandwidth `gamma` in `[1/N, 1]`, and a rational
/// frequency offset `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GscParams {
    n: u64,
    m: u64,
    gamma: Rational,
    b: Rational,
}

impl GscParams {
    pub fn new(n: u64, m: u64, gamma: Rational, b: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyLength);
        }
        if m == 0 || n % m != 0 {
            return Err(Error::StepNotDivisor { m, n });
        }
        check_bandwidth(n, &gamma)?;
        Ok(Self { n, m, gamma, b })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

pub(crate) fn check_bandwidth(n: u64, gamma: &Rational) -> Result<()> {
    let lo = rat(1, n as i64);
    if *gamma < lo || *gamma > rat_int(1) {
        return Err(Error::BandwidthOutOfRange {
            gamma: gamma.to_string(),
            n,
        });
    }
    Ok(())
}

/// Step-chirp sequence phases: entry `n` of the sequence is
/// `exp(j*2*pi*phi_n)/sqrt(N)` with
/// `phi_n = (m/N) * gamma * (k(k-1)m/2 + k*l + b*n)`, `k = floor(n/m)`,
/// `l = n - k*m`. All arithmetic exact.
pub fn gsc_phases(params: &GscParams) -> RationalPhaseSequence {
    let (n, m) = (params.n, params.m);
    let scale = rat(m as i64, n as i64) * &params.gamma;
    let phases = (0..n)
        .map(|idx| {
            let k = (idx / m) as i64;
            let l = (idx % m) as i64;
            let quad = Rational::new(
                BigInt::from(k) * BigInt::from(k - 1) * BigInt::from(m),
                BigInt::from(2),
            );
            let inner = quad + rat_int(k * l) + &params.b * rat_int(idx as i64);
            &scale * inner
        })
        .collect();
    RationalPhaseSequence::new(SequenceFamily::Gsc, phases).expect("n > 0")
}

/// Chirp sequence phases `gamma * n(n + 2b - 1) / (2N)`: the `m = 1`
/// specialization of the step-chirp family.
pub fn gc_phases(n: u64, gamma: &Rational, b: &Rational) -> Result<RationalPhaseSequence> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    check_bandwidth(n, gamma)?;
    let scale = gamma / rat_int(n as i64);
    let phases = (0..n as i64)
        .map(|idx| {
            let inner = (rat_int(idx) + b * rat_int(2) - rat_int(1)) * rat_int(idx) / rat_int(2);
            &scale * inner
        })
        .collect();
    RationalPhaseSequence::new(SequenceFamily::Gc, phases)
}

/// DFT codeword pointing at `u0`: entry `n` is `exp(j*pi*n*u0)/sqrt(N)`.
pub fn dft_codeword(n: u64, u0: &Rational) -> Result<RationalPhaseSequence> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    if *u0 < rat_int(-1) || *u0 >= rat_int(1) {
        return Err(Error::DirectionOutOfRange(u0.to_string()));
    }
    let phases = (0..n as i64).map(|idx| u0 * rat(idx, 2)).collect();
    RationalPhaseSequence::new(SequenceFamily::Dft, phases)
}

/// Float-only step-chirp rendering for irrational parameters.
///
/// Accepts any real `gamma` and `b`; the result never passes through the
/// rational path, so exact queries (phase resolution, equivalence checks)
/// are unavailable for it by construction.
pub fn gsc_entries_float<T: Scalar>(n: u64, m: u64, gamma: T, b: T) -> Result<ComplexSequence<T>> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    if m == 0 || n % m != 0 {
        return Err(Error::StepNotDivisor { m, n });
    }
    let n_t = T::from_u64(n).unwrap();
    if gamma < n_t.recip() || gamma > T::one() {
        return Err(Error::BandwidthOutOfRange {
            gamma: format!("{:?}", gamma.to_f64()),
            n,
        });
    }
    let amp = n_t.sqrt().recip();
    let scale = T::from_u64(m).unwrap() / n_t * gamma;
    let half = T::from_f64(0.5).unwrap();
    let entries = (0..n)
        .map(|idx| {
            let k = T::from_u64(idx / m).unwrap();
            let l = T::from_u64(idx % m).unwrap();
            let inner =
                k * (k - T::one()) * T::from_u64(m).unwrap() * half + k * l + b * T::from_u64(idx).unwrap();
            let turns = (scale * inner).fract();
            let (sin, cos) = (T::TAU() * turns).sin_cos();
            Cplx::new(amp * cos, amp * sin)
        })
        .collect();
    Ok(ComplexSequence::from_entries_unchecked(entries))
}
