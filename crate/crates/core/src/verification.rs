//! Randomized invariant suites behind the `verify` workflow.
//!
//! Each suite draws reproducibly from a seed, checks one family-level
//! invariant at its stated tolerance, and reports the worst case it saw.

use crate::analysis::{
    aperiodic_autocorr, aperiodic_autocorr_direct, gsc_resolution_closed_form, isl,
    periodic_autocorr, phase_resolution, spectrum_variance,
};
use crate::equivalence::max_phase_gap;
use crate::random::{
    random_family_sequence, random_gsc_params, random_gsc_params_integer_b, random_mow_params,
    rng_from_seed,
};
use crate::rational::{mod_u, rat, rat_int};
use crate::sequences::{dft_codeword, gc_phases, gsc_phases, mow_phases, GscParams};
use num_traits::Zero;

/// Outcome of one invariant suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        CheckReport { name, passed, detail }
    }
}

/// `gsc(m=1) = gc` and `gsc(m=N, gamma=1/N) = dft(2b/N)` on random draws,
/// exact rational equality.
pub fn check_degenerate_identities(seed: u64, draws: usize, n_max: u64) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut failures = 0usize;
    for _ in 0..draws {
        let p = random_gsc_params(&mut rng, n_max);
        let chirp_side = GscParams::new(p.n(), 1, p.gamma().clone(), p.b().clone()).unwrap();
        let gc = gc_phases(p.n(), p.gamma(), p.b()).unwrap();
        if gsc_phases(&chirp_side).phases() != gc.phases() {
            failures += 1;
        }
        let dft_side =
            GscParams::new(p.n(), p.n(), rat(1, p.n() as i64), p.b().clone()).unwrap();
        let u0 = mod_u(&(p.b() * rat(2, p.n() as i64)));
        let dft = dft_codeword(p.n(), &u0).unwrap();
        if !max_phase_gap(&gsc_phases(&dft_side), &dft).is_zero() {
            failures += 1;
        }
    }
    CheckReport::new(
        "degenerate-identities",
        failures == 0,
        format!("{draws} draws, {failures} failures"),
    )
}

/// `|spectrum_variance - isl| < tol` on random family members.
pub fn check_isl_variance_identity(seed: u64, draws: usize, n_max: u64, tol: f64) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let seq = random_family_sequence(&mut rng, n_max).render::<f64>();
        let v = spectrum_variance(&seq);
        let s = isl(&aperiodic_autocorr(&seq));
        worst = worst.max((v - s).abs());
    }
    CheckReport::new(
        "isl-variance-identity",
        worst < tol,
        format!("{draws} draws, worst |variance - isl| = {worst:.3e} (tol {tol:.1e})"),
    )
}

/// Perfect periodic autocorrelation of random Mow members.
pub fn check_perfect_periodic_autocorr(
    seed: u64,
    draws: usize,
    n_max: u64,
    tol: f64,
) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let params = random_mow_params(&mut rng, n_max);
        let r = periodic_autocorr(&mow_phases(&params).render::<f64>());
        worst = worst.max(r.max_offpeak());
    }
    CheckReport::new(
        "perfect-periodic-autocorr",
        worst < tol,
        format!("{draws} draws, worst off-peak |R_p| = {worst:.3e} (tol {tol:.1e})"),
    )
}

/// Closed-form phase resolution against the lcm-of-denominators grid,
/// exact equality on integer-offset draws.
pub fn check_phase_resolution_closed_form(seed: u64, draws: usize, n_max: u64) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut failures = 0usize;
    for _ in 0..draws {
        let p = random_gsc_params_integer_b(&mut rng, n_max);
        let numeric = phase_resolution(&gsc_phases(&p));
        let closed = gsc_resolution_closed_form(&p).unwrap();
        if numeric != closed {
            failures += 1;
        }
    }
    CheckReport::new(
        "phase-resolution-closed-form",
        failures == 0,
        format!("{draws} draws, {failures} failures"),
    )
}

/// Fast-convolution autocorrelation against the direct kernel.
pub fn check_autocorr_kernels_agree(seed: u64, draws: usize, n_max: u64, tol: f64) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let seq = random_family_sequence(&mut rng, n_max).render::<f64>();
        let fast = aperiodic_autocorr(&seq);
        let direct = aperiodic_autocorr_direct(&seq);
        for (a, b) in fast.values().iter().zip(direct.values()) {
            worst = worst.max((a - b).norm());
        }
    }
    CheckReport::new(
        "autocorr-kernels-agree",
        worst < tol,
        format!("{draws} draws, worst elementwise gap = {worst:.3e} (tol {tol:.1e})"),
    )
}

/// Rendering invariants: unimodular entries and phases in `[0, 1)`.
pub fn check_rendering_invariants(seed: u64, draws: usize, n_max: u64) -> CheckReport {
    let mut rng = rng_from_seed(seed);
    let mut worst = 0.0f64;
    let mut range_ok = true;
    for _ in 0..draws {
        let seq = random_family_sequence(&mut rng, n_max);
        let amp = 1.0 / (seq.len() as f64).sqrt();
        for ph in seq.phases() {
            range_ok &= *ph >= rat_int(0) && *ph < rat_int(1);
        }
        for e in seq.render::<f64>().entries() {
            worst = worst.max((e.norm() - amp).abs());
        }
    }
    CheckReport::new(
        "rendering-invariants",
        range_ok && worst < 1e-12,
        format!("{draws} draws, worst |amplitude - 1/sqrt(N)| = {worst:.3e}, phases in range: {range_ok}"),
    )
}

/// Default bundle of suites run by the command-line `verify`.
pub fn run_invariant_suites(seed: u64) -> Vec<CheckReport> {
    vec![
        check_degenerate_identities(seed, 200, 128),
        check_isl_variance_identity(seed.wrapping_add(1), 60, 256, 1e-9),
        check_perfect_periodic_autocorr(seed.wrapping_add(2), 60, 200, 1e-9),
        check_phase_resolution_closed_form(seed.wrapping_add(3), 100, 200),
        check_autocorr_kernels_agree(seed.wrapping_add(4), 40, 256, 1e-10),
        check_rendering_invariants(seed.wrapping_add(5), 60, 200),
    ]
}
