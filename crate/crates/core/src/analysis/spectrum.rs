//! Power spectra over the u-domain, spectrum variance, and passband metrics.

use crate::sequences::{ComplexSequence, ChirpModel};
use crate::sweep::PassbandInterval;
use crate::rational::to_scalar;
use crate::{Cplx, Error, Result, Scalar};
use num_traits::Zero;
use rustfft::FftPlanner;

/// Sampled power spectrum `y(u) = |sum_n a[n] e^{-j*pi*n*u}|^2` on the
/// uniform grid `u_i = -1 + 2i/G`, with a passband/stopband partition of the
/// grid indices. Until a passband is assigned, every index is stopband.
#[derive(Debug, Clone)]
pub struct SpectrumGrid<T> {
    u: Vec<T>,
    y: Vec<T>,
    passband_idx: Vec<usize>,
    stopband_idx: Vec<usize>,
}

impl<T: Scalar> SpectrumGrid<T> {
    pub fn grid_size(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[T] {
        &self.u
    }

    pub fn y(&self) -> &[T] {
        &self.y
    }

    pub fn passband_idx(&self) -> &[usize] {
        &self.passband_idx
    }

    pub fn stopband_idx(&self) -> &[usize] {
        &self.stopband_idx
    }

    /// Splits the grid indices by membership in `pb` (half-open segments).
    pub fn assign_passband(&mut self, pb: &PassbandInterval) {
        self.passband_idx.clear();
        self.stopband_idx.clear();
        for (i, u) in self.u.iter().enumerate() {
            if pb.contains_scalar(u.to_f64().unwrap()) {
                self.passband_idx.push(i);
            } else {
                self.stopband_idx.push(i);
            }
        }
    }

    /// Grid mean of `y`; equals the sequence energy when the grid has at
    /// least `2N - 1` points.
    pub fn mean_power(&self) -> T {
        self.y.iter().copied().sum::<T>() / T::from_usize(self.y.len()).unwrap()
    }

    /// `y` at the grid point closest to `u`.
    pub fn power_near(&self, u: T) -> T {
        let g = self.u.len();
        let step = T::from_usize(g).unwrap() / (T::one() + T::one());
        let pos = ((u + T::one()) * step).round().to_f64().unwrap() as i64;
        let idx = pos.rem_euclid(g as i64) as usize;
        self.y[idx]
    }
}

/// Evaluates the radiated-power spectrum on a `grid_size`-point uniform grid.
///
/// `u_i = -1 + 2i/G`; with `e^{-j*pi*n*u_i} = (-1)^n e^{-j*2*pi*n*i/G}` the
/// whole grid is one DFT of the sign-flipped, zero-padded sequence. A grid of
/// at least `2N - 1` points samples the degree-`N-1` trigonometric polynomial
/// without aliasing, making the grid mean exactly the average power.
pub fn power_spectrum<T: Scalar>(seq: &ComplexSequence<T>, grid_size: usize) -> SpectrumGrid<T> {
    assert!(grid_size > 0);
    let mut buf = vec![Cplx::zero(); grid_size];
    for (n, e) in seq.entries().iter().enumerate() {
        let signed = if n % 2 == 0 { *e } else { -*e };
        // sequences longer than the grid fold onto it (aliasing by design)
        let slot = n % grid_size;
        buf[slot] = buf[slot] + signed;
    }
    FftPlanner::new().plan_fft_forward(grid_size).process(&mut buf);
    let two = T::one() + T::one();
    let g = T::from_usize(grid_size).unwrap();
    let u = (0..grid_size)
        .map(|i| -T::one() + two * T::from_usize(i).unwrap() / g)
        .collect();
    let y = buf.iter().map(|v| v.norm_sqr()).collect();
    SpectrumGrid {
        u,
        y,
        passband_idx: Vec::new(),
        stopband_idx: (0..grid_size).collect(),
    }
}

/// Radiated power at a single direction, `y(u) = |sum_n a[n] e^{-j pi n u}|^2`,
/// evaluated directly.
pub fn radiated_power<T: Scalar>(seq: &ComplexSequence<T>, u: T) -> T {
    let mut acc = Cplx::<T>::zero();
    for (n, e) in seq.entries().iter().enumerate() {
        let (sin, cos) = (-T::PI() * u * T::from_usize(n).unwrap()).sin_cos();
        acc = acc + e * Cplx::new(cos, sin);
    }
    acc.norm_sqr()
}

/// Variance of the power spectrum around unit level,
/// `(1/M) * sum_i (y(u_i) - 1)^2` on an `M = 4N` grid.
///
/// `(y - 1)^2` is a trigonometric polynomial of degree `2(N-1)` in `pi*u`,
/// so any grid beyond `4N - 3` points makes the discrete mean equal the
/// integral `(1/2) Int_{-1}^{1} (y - 1)^2 du` exactly; for unit-energy input
/// that integral is the ISL.
pub fn spectrum_variance<T: Scalar>(seq: &ComplexSequence<T>) -> T {
    let grid = power_spectrum(seq, 4 * seq.len());
    let mean = grid
        .y()
        .iter()
        .map(|&y| (y - T::one()) * (y - T::one()))
        .sum::<T>();
    mean / T::from_usize(grid.grid_size()).unwrap()
}

/// Squared-magnitude DFT bins `|sum_n g[n] e^{-j*2*pi*i*n/N'}|^2`.
pub fn dft_power<T: Scalar>(seq: &ComplexSequence<T>, dft_len: usize) -> Vec<T> {
    assert!(dft_len > 0);
    let mut buf = vec![Cplx::zero(); dft_len];
    for (n, e) in seq.entries().iter().enumerate() {
        let slot = n % dft_len;
        buf[slot] = buf[slot] + *e;
    }
    FftPlanner::new().plan_fft_forward(dft_len).process(&mut buf);
    buf.iter().map(|v| v.norm_sqr()).collect()
}

/// Normalized RMS deviation of the scaled passband power from unit level:
/// `sqrt((1/|Ip|) * sum_{i in Ip} (gamma * |DFT[i]|^2 - 1)^2)`.
pub fn passband_nrmse<T: Scalar>(
    seq: &ComplexSequence<T>,
    gamma: T,
    passband_idx: &[usize],
    dft_len: usize,
) -> Result<T> {
    if passband_idx.is_empty() {
        return Err(Error::EmptyPassband);
    }
    let bins = dft_power(seq, dft_len);
    let sum = passband_idx
        .iter()
        .map(|&i| {
            let d = gamma * bins[i] - T::one();
            d * d
        })
        .sum::<T>();
    Ok((sum / T::from_usize(passband_idx.len()).unwrap()).sqrt())
}

/// Fraction of power radiated outside the passband:
/// `(1/N') * sum_{i in Is} |DFT[i]|^2`. Empty stopband gives 0.
pub fn stopband_leakage<T: Scalar>(
    seq: &ComplexSequence<T>,
    stopband_idx: &[usize],
    dft_len: usize,
) -> T {
    let bins = dft_power(seq, dft_len);
    stopband_idx.iter().map(|&i| bins[i]).sum::<T>() / T::from_usize(dft_len).unwrap()
}

/// Flatness summary of a beam's passband.
#[derive(Debug, Clone, Copy)]
pub struct PassbandStats {
    /// Largest deviation of `y` from the nominal flat level `1/gamma`, in dB,
    /// over the guard-banded passband interior.
    pub max_dev_db: f64,
    /// Peak-to-peak interior ripple `10*log10(max/min)` in dB.
    pub ripple_db: f64,
    pub min_power: f64,
    pub max_power: f64,
    /// Fraction of total power radiated into the passband bins.
    pub energy_fraction: f64,
}

/// Evaluates passband flatness on a dense u-grid and the passband energy
/// fraction on `energy_dft_len` DFT bins.
///
/// `guard_u` is stripped from both passband edges before taking extrema, so
/// the stats describe the interior rather than the transition skirt. An
/// interior too narrow to contain grid points yields infinite deviations.
pub fn passband_stats<T: Scalar>(
    seq: &ComplexSequence<T>,
    pb: &PassbandInterval,
    grid_size: usize,
    guard_u: f64,
    energy_dft_len: usize,
) -> PassbandStats {
    let grid = power_spectrum(seq, grid_size);
    let mut min_power = f64::INFINITY;
    let mut max_power = 0.0f64;
    for (u, y) in grid.u().iter().zip(grid.y()) {
        if pb.contains_scalar_guarded(u.to_f64().unwrap(), guard_u) {
            let y = y.to_f64().unwrap();
            min_power = min_power.min(y);
            max_power = max_power.max(y);
        }
    }
    let gamma = to_scalar::<f64>(pb.width_turns());
    let max_dev_db = 10.0
        * (gamma * max_power)
            .log10()
            .abs()
            .max((gamma * min_power).log10().abs());
    let ripple_db = 10.0 * (max_power / min_power).log10();

    let bins = dft_power(seq, energy_dft_len);
    let (passband_idx, _) = crate::sweep::classify_bins(pb, energy_dft_len);
    let total: f64 = bins.iter().map(|y| y.to_f64().unwrap()).sum();
    let inside: f64 = passband_idx
        .iter()
        .map(|&i| bins[i].to_f64().unwrap())
        .sum();
    PassbandStats {
        max_dev_db,
        ripple_db,
        min_power,
        max_power,
        energy_fraction: inside / total,
    }
}

/// `sin(pi x)/(pi x)`, with `sinc(0) = 1`: unit-spaced nulls at the integers.
pub fn sinc<T: Scalar>(x: T) -> T {
    if x.is_zero() {
        T::one()
    } else {
        let px = T::PI() * x;
        px.sin() / px
    }
}

/// Continuous-time spectrum of the step-chirp signal: a weighted sum of one
/// sinc per frequency step,
/// `C(f) = sum_i exp(j*pi*[a i^2 + 2(ab - f)i + ab - f]) * sinc(f - a(i+b))`.
pub fn chirp_spectrum<T: Scalar>(model: &ChirpModel, f: T) -> Cplx<T> {
    let a = to_scalar::<T>(model.slope());
    let b = to_scalar::<T>(model.offset());
    let ab = a * b;
    let mut acc = Cplx::<T>::zero();
    for i in 0..model.duration() {
        let i_t = T::from_u64(i).unwrap();
        let phase = T::PI() * (a * i_t * i_t + (ab - f) * (i_t + i_t) + ab - f);
        let (sin, cos) = phase.sin_cos();
        let weight = sinc(f - a * (i_t + b));
        acc = acc + Cplx::new(cos, sin) * weight;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{aperiodic_autocorr, isl};
    use crate::rational::{rat, rat_int};
    use crate::sequences::{dft_codeword, gsc_phases, GscParams};

    #[test]
    fn dft_codeword_peak_gain() {
        // y(u0) = N at the pointing direction
        let n = 32;
        let seq = dft_codeword(n, &rat(1, 4)).unwrap().render::<f64>();
        let grid = power_spectrum(&seq, 256);
        assert!((grid.power_near(0.25) - n as f64).abs() < 1e-9);
    }

    #[test]
    fn grid_mean_is_unit_energy() {
        let seq = dft_codeword(16, &rat_int(0)).unwrap().render::<f64>();
        for g in [31, 32, 64, 100] {
            let grid = power_spectrum(&seq, g);
            assert!((grid.mean_power() - 1.0).abs() < 1e-9, "grid {g}");
        }
    }

    #[test]
    fn variance_matches_closed_form_for_two_element_codeword() {
        // R(+-1) = 1/2, so ISL = 1/2
        let seq = dft_codeword(2, &rat_int(0)).unwrap().render::<f64>();
        assert!((spectrum_variance(&seq) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn variance_equals_isl() {
        let p = GscParams::new(50, 10, rat(1, 2), rat_int(1)).unwrap();
        let seq = gsc_phases(&p).render::<f64>();
        let v = spectrum_variance(&seq);
        let s = isl(&aperiodic_autocorr(&seq));
        assert!((v - s).abs() < 1e-9, "{v} vs {s}");
    }

    #[test]
    fn variance_of_single_entry_is_zero() {
        let seq = dft_codeword(1, &rat_int(0)).unwrap().render::<f64>();
        assert!(spectrum_variance(&seq).abs() < 1e-15);
    }

    #[test]
    fn parseval_partition() {
        let p = GscParams::new(50, 10, rat(1, 2), rat_int(1)).unwrap();
        let seq = gsc_phases(&p).render::<f64>();
        let dft_len = 200;
        let all: Vec<usize> = (0..dft_len).collect();
        let total = stopband_leakage(&seq, &all, dft_len);
        assert!((total - 1.0).abs() < 1e-9);
        assert_eq!(stopband_leakage(&seq, &[], dft_len), 0.0);
    }

    #[test]
    fn nrmse_empty_passband_rejected() {
        let seq = dft_codeword(4, &rat_int(0)).unwrap().render::<f64>();
        assert!(matches!(
            passband_nrmse(&seq, 1.0, &[], 16),
            Err(Error::EmptyPassband)
        ));
    }

    #[test]
    fn sinc_convention() {
        assert_eq!(sinc(0.0f64), 1.0);
        for k in 1..5 {
            assert!(sinc(k as f64).abs() < 1e-15);
        }
    }

    #[test]
    fn chirp_spectrum_single_step() {
        // T=1: |C(ab)| = sinc(0) = 1
        let model = ChirpModel::new(rat_int(2), rat(3, 4), 1).unwrap();
        let c = chirp_spectrum(&model, 1.5f64);
        assert!((c.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chirp_spectrum_left_edge() {
        // at f0 = a(b - 1/2) the leading term has magnitude |sinc(-a/2)|;
        // with a single step that term is the whole sum
        let model = ChirpModel::new(rat_int(1), rat(1, 2), 1).unwrap();
        let (f0, _) = model.band_edges();
        assert_eq!(f0, rat_int(0));
        let c = chirp_spectrum(&model, 0.0f64);
        assert!((c.norm() - sinc(-0.5f64).abs()).abs() < 1e-12);
    }

    #[test]
    fn chirp_spectrum_decays() {
        let model = ChirpModel::new(rat_int(1), rat(1, 2), 10).unwrap();
        assert!(chirp_spectrum(&model, 1e4f64).norm() < 1e-3);
    }
}
