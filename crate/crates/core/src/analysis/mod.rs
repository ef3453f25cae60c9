//! Correlation, spectrum, ISL, passband metrics and phase-resolution
//! analysis of rendered sequences.

mod autocorr;
mod phase_grid;
mod spectrum;

pub use autocorr::{
    aperiodic_autocorr, aperiodic_autocorr_direct, isl, periodic_autocorr, AutocorrEngine,
    AutocorrProfile, PeriodicAutocorr,
};
pub use phase_grid::{
    gc_resolution_closed_form, gsc_resolution_closed_form, mow_phase_resolution,
    phase_resolution, PhaseGrid,
};
pub use spectrum::{
    chirp_spectrum, dft_power, passband_nrmse, passband_stats, power_spectrum, radiated_power,
    sinc, spectrum_variance, stopband_leakage, PassbandStats, SpectrumGrid,
};
