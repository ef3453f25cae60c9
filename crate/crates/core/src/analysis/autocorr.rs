//! Aperiodic and periodic autocorrelation, and the integrated sidelobe level.

use crate::sequences::ComplexSequence;
use crate::{Cplx, Scalar};
use num_traits::Zero;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Aperiodic autocorrelation `R(tau) = sum_n a[n] * conj(a[n - tau])` over
/// lags `tau` in `[1-N, N-1]`, out-of-range entries treated as zero.
#[derive(Debug, Clone)]
pub struct AutocorrProfile<T> {
    n: usize,
    values: Vec<Cplx<T>>,
}

impl<T: Scalar> AutocorrProfile<T> {
    /// Length of the underlying sequence.
    pub fn seq_len(&self) -> usize {
        self.n
    }

    /// All `2N - 1` values; lag `tau` sits at index `tau + N - 1`.
    pub fn values(&self) -> &[Cplx<T>] {
        &self.values
    }

    pub fn at_lag(&self, tau: i64) -> Cplx<T> {
        let idx = tau + self.n as i64 - 1;
        assert!(
            (0..self.values.len() as i64).contains(&idx),
            "lag {tau} outside [{}, {}]",
            1 - self.n as i64,
            self.n as i64 - 1
        );
        self.values[idx as usize]
    }

    /// `(lag, value)` pairs in increasing lag order.
    pub fn lags(&self) -> impl Iterator<Item = (i64, Cplx<T>)> + '_ {
        let n = self.n as i64;
        self.values.iter().enumerate().map(move |(i, v)| (i as i64 - (n - 1), *v))
    }
}

/// Sum of squared sidelobes `sum_{tau != 0} |R(tau)|^2`.
pub fn isl<T: Scalar>(profile: &AutocorrProfile<T>) -> T {
    profile
        .lags()
        .filter(|(tau, _)| *tau != 0)
        .map(|(_, v)| v.norm_sqr())
        .sum()
}

/// Reusable FFT pair for linear autocorrelation of length-`n` sequences.
///
/// Planning is hoisted out so family sweeps can amortize it across members.
pub struct AutocorrEngine<T: Scalar> {
    n: usize,
    size: usize,
    forward: Arc<dyn Fft<T>>,
    inverse: Arc<dyn Fft<T>>,
}

impl<T: Scalar> AutocorrEngine<T> {
    pub fn for_len(n: usize) -> Self {
        assert!(n > 0);
        let size = (2 * n - 1).next_power_of_two();
        let mut planner = FftPlanner::new();
        Self {
            n,
            size,
            forward: planner.plan_fft_forward(size),
            inverse: planner.plan_fft_inverse(size),
        }
    }

    /// Linear autocorrelation via zero-padded circular convolution.
    pub fn aperiodic(&self, seq: &ComplexSequence<T>) -> AutocorrProfile<T> {
        let n = seq.len();
        assert_eq!(n, self.n, "engine planned for length {}", self.n);
        let mut buf = vec![Cplx::zero(); self.size];
        buf[..n].copy_from_slice(seq.entries());
        self.forward.process(&mut buf);
        for v in buf.iter_mut() {
            *v = Cplx::new(v.norm_sqr(), T::zero());
        }
        self.inverse.process(&mut buf);
        let scale = T::from_usize(self.size).unwrap().recip();
        // circular index tau for tau >= 0, size + tau for tau < 0
        let mut values = Vec::with_capacity(2 * n - 1);
        for tau in 1 - n as i64..n as i64 {
            let idx = tau.rem_euclid(self.size as i64) as usize;
            values.push(buf[idx] * scale);
        }
        AutocorrProfile { n, values }
    }

    /// ISL without keeping the profile around.
    pub fn isl(&self, seq: &ComplexSequence<T>) -> T {
        isl(&self.aperiodic(seq))
    }
}

/// Fast-convolution aperiodic autocorrelation.
pub fn aperiodic_autocorr<T: Scalar>(seq: &ComplexSequence<T>) -> AutocorrProfile<T> {
    AutocorrEngine::for_len(seq.len()).aperiodic(seq)
}

/// Direct `O(N^2)` aperiodic autocorrelation, kept as the independent oracle
/// for the fast path.
pub fn aperiodic_autocorr_direct<T: Scalar>(seq: &ComplexSequence<T>) -> AutocorrProfile<T> {
    let n = seq.len();
    let a = seq.entries();
    let mut values = Vec::with_capacity(2 * n - 1);
    for tau in 1 - n as i64..n as i64 {
        let mut acc = Cplx::<T>::zero();
        for idx in 0..n as i64 {
            let j = idx - tau;
            if (0..n as i64).contains(&j) {
                acc = acc + a[idx as usize] * a[j as usize].conj();
            }
        }
        values.push(acc);
    }
    AutocorrProfile { n, values }
}

/// Circular autocorrelation `R_p(tau) = sum_n a[n] * conj(a[(n - tau) mod N])`
/// over `tau` in `Z_N`.
#[derive(Debug, Clone)]
pub struct PeriodicAutocorr<T> {
    values: Vec<Cplx<T>>,
}

impl<T: Scalar> PeriodicAutocorr<T> {
    pub fn seq_len(&self) -> usize {
        self.values.len()
    }

    /// Values at shifts `0..N`.
    pub fn values(&self) -> &[Cplx<T>] {
        &self.values
    }

    /// Largest sidelobe magnitude over nonzero shifts (0 for length 1).
    pub fn max_offpeak(&self) -> T {
        self.values[1..]
            .iter()
            .map(|v| v.norm())
            .fold(T::zero(), T::max)
    }
}

pub fn periodic_autocorr<T: Scalar>(seq: &ComplexSequence<T>) -> PeriodicAutocorr<T> {
    let n = seq.len();
    let a = seq.entries();
    let values = (0..n)
        .map(|tau| {
            (0..n)
                .map(|idx| a[idx] * a[(idx + n - tau) % n].conj())
                .fold(Cplx::zero(), |acc, v| acc + v)
        })
        .collect();
    PeriodicAutocorr { values }
}
