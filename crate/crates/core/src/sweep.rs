//! Beam-sweep planning: passband geometry, beam directions, and full plans
//! covering `[-1, 1)`.
//!
//! Everything here is exact rational interval arithmetic; all public
//! interfaces speak u-units (`u = omega/pi`), with half-open intervals
//! throughout so grids partition without double counting.

use crate::rational::{mod_u, rat, rat_int, Rational};
use crate::sequences::GscParams;
use crate::{Error, Result};
use num_traits::{Signed, ToPrimitive, Zero};

/// The spectral passband of a step-chirp sequence in the u-domain: one
/// half-open interval of total width `2*gamma`, stored as one or two
/// segments when it wraps across the `+-1` seam.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassbandInterval {
    /// Left edge in turns (`omega_0 / 2pi`); u-units are twice this.
    omega0_turns: Rational,
    /// Width in turns, equal to `gamma`.
    width_turns: Rational,
    segments: Vec<(Rational, Rational)>,
}

impl PassbandInterval {
    /// Builds from the left edge (u-units, any real representative) and the
    /// bandwidth `gamma`. A full-band interval collapses to `[-1, 1)`.
    pub fn from_left_edge(left_u: Rational, gamma: Rational) -> Self {
        let width = rat_int(2) * &gamma;
        let segments = if width == rat_int(2) {
            vec![(rat_int(-1), rat_int(1))]
        } else {
            let left = mod_u(&left_u);
            let right = &left + &width;
            if right <= rat_int(1) {
                vec![(left, right)]
            } else {
                vec![
                    (left, rat_int(1)),
                    (rat_int(-1), right - rat_int(2)),
                ]
            }
        };
        Self {
            omega0_turns: left_u / rat_int(2),
            width_turns: gamma,
            segments,
        }
    }

    /// Left edge in turns (radians divided by `2*pi`).
    pub fn omega0_turns(&self) -> &Rational {
        &self.omega0_turns
    }

    /// Bandwidth in turns (`gamma`). The u-domain width is twice this.
    pub fn width_turns(&self) -> &Rational {
        &self.width_turns
    }

    /// One or two disjoint half-open segments inside `[-1, 1)`.
    pub fn segments(&self) -> &[(Rational, Rational)] {
        &self.segments
    }

    /// Total u-domain width of the segments (`2*gamma`).
    pub fn total_width(&self) -> Rational {
        self.segments
            .iter()
            .map(|(a, b)| b - a)
            .fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Exact half-open membership for a u-value in `[-1, 1)`.
    pub fn contains(&self, u: &Rational) -> bool {
        self.segments.iter().any(|(a, b)| u >= a && u < b)
    }

    /// Float membership with an optional guard stripped from both edges:
    /// `u` belongs when `(u - left) mod 2` falls in `[guard, 2*gamma - guard)`.
    pub fn contains_scalar_guarded(&self, u: f64, guard: f64) -> bool {
        let left = 2.0 * self.omega0_turns.to_f64().unwrap();
        let width = 2.0 * self.width_turns.to_f64().unwrap();
        let rel = (u - left).rem_euclid(2.0);
        rel >= guard && rel < width - guard
    }

    pub fn contains_scalar(&self, u: f64) -> bool {
        self.contains_scalar_guarded(u, 0.0)
    }
}

/// Beam direction `u0 = (2/N) m gamma (b - 1/2) + gamma  mod [-1, 1)`.
pub fn beam_direction(params: &GscParams) -> Rational {
    let raw = rat(2, params.n() as i64)
        * rat_int(params.m() as i64)
        * params.gamma()
        * (params.b() - rat(1, 2))
        + params.gamma();
    mod_u(&raw)
}

/// Passband of the sequence's power spectrum: left edge
/// `(2/N) m gamma (b - 1/2)` in u-units, width `2*gamma`, wrapped into
/// `[-1, 1)`. Its union equals `[u0 - gamma, u0 + gamma) mod [-1, 1)`.
pub fn passband(params: &GscParams) -> PassbandInterval {
    let left = rat(2, params.n() as i64)
        * rat_int(params.m() as i64)
        * params.gamma()
        * (params.b() - rat(1, 2));
    PassbandInterval::from_left_edge(left, params.gamma().clone())
}

/// Inverts the beam-direction map: the smallest-|b| rational with
/// `beam_direction = target_u0`, i.e. `b = 1/2 + N(target - gamma + 2t)/(2 m gamma)`
/// over integers `t`, ties broken toward positive `b`.
pub fn solve_b(n: u64, m: u64, gamma: &Rational, target_u0: &Rational) -> Result<Rational> {
    if *target_u0 < rat_int(-1) || *target_u0 >= rat_int(1) {
        return Err(Error::DirectionOutOfRange(target_u0.to_string()));
    }
    // validate (n, m, gamma) as a parameter set; b itself is unconstrained
    GscParams::new(n, m, gamma.clone(), rat_int(0))?;
    let b0 = rat(1, 2)
        + rat_int(n as i64) * (target_u0 - gamma) / (rat_int(2 * m as i64) * gamma);
    let slope = rat_int(n as i64) / (rat_int(m as i64) * gamma);
    let t_star = -&b0 / &slope;
    let t_floor = t_star.floor();
    let mut best: Option<Rational> = None;
    for t in [t_floor.clone(), t_floor + rat_int(1)] {
        let b = &b0 + &slope * t;
        let better = match &best {
            None => true,
            Some(cur) => {
                b.abs() < cur.abs() || (b.abs() == cur.abs() && b > *cur)
            }
        };
        if better {
            best = Some(b);
        }
    }
    Ok(best.expect("two candidates examined"))
}

/// One beam of a sweep plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepBeam {
    pub b: Rational,
    pub u0: Rational,
    pub passband: PassbandInterval,
}

/// An ordered set of beams whose coverage intervals `[u0 - gamma, u0 + gamma)`
/// tile `[-1, 1)` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPlan {
    pub n: u64,
    pub m: u64,
    pub gamma: Rational,
    pub beams: Vec<SweepBeam>,
}

impl SweepPlan {
    /// Number of sweeps (`1/gamma`).
    pub fn beam_count(&self) -> usize {
        self.beams.len()
    }

    /// Checks the tiling property: beam coverages are contiguous, disjoint,
    /// and their union is exactly `[-1, 1)`.
    pub fn tiles_exactly(&self) -> bool {
        let mut cursor = rat_int(-1);
        for beam in &self.beams {
            let left = &beam.u0 - &self.gamma;
            let right = &beam.u0 + &self.gamma;
            if left != cursor {
                return false;
            }
            cursor = right;
        }
        cursor == rat_int(1)
    }
}

/// Builds the full sweep: beams pointed at `(2i - 1) gamma - 1` for
/// `i = 1..1/gamma`. Requires `gamma` to be the reciprocal of a positive
/// integer so the coverages tile.
pub fn make_sweep_plan(n: u64, m: u64, gamma: &Rational) -> Result<SweepPlan> {
    use num_traits::One;
    if !gamma.numer().is_one() || !gamma.is_positive() {
        return Err(Error::NotReciprocalInteger(gamma.to_string()));
    }
    GscParams::new(n, m, gamma.clone(), rat_int(0))?;
    let sweeps = gamma.denom().to_u64().expect("reciprocal fits u64");
    let mut beams = Vec::with_capacity(sweeps as usize);
    for i in 1..=sweeps as i64 {
        let target = mod_u(&(rat_int(2 * i - 1) * gamma - rat_int(1)));
        let b = solve_b(n, m, gamma, &target)?;
        let params = GscParams::new(n, m, gamma.clone(), b.clone())?;
        let u0 = beam_direction(&params);
        debug_assert_eq!(u0, target);
        beams.push(SweepBeam {
            b,
            u0,
            passband: passband(&params),
        });
    }
    Ok(SweepPlan {
        n,
        m,
        gamma: gamma.clone(),
        beams,
    })
}

/// Maps DFT bin `i` to `u_i = 2i/N' mod [-1, 1)` and splits `Z_{N'}` into
/// passband and stopband index sets.
pub fn classify_bins(pb: &PassbandInterval, dft_len: usize) -> (Vec<usize>, Vec<usize>) {
    let mut passband_idx = Vec::new();
    let mut stopband_idx = Vec::new();
    for i in 0..dft_len {
        let u = mod_u(&rat(2 * i as i64, dft_len as i64));
        if pb.contains(&u) {
            passband_idx.push(i);
        } else {
            stopband_idx.push(i);
        }
    }
    (passband_idx, stopband_idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_beam_direction() {
        // (N=120, gamma=1/2, m=15, b=-15/2) -> u0 = -1/2
        let p = GscParams::new(120, 15, rat(1, 2), rat(-15, 2)).unwrap();
        assert_eq!(beam_direction(&p), rat(-1, 2));
        // m=N, gamma=1/N: u0 = 2b/N mod [-1, 1)
        let p = GscParams::new(50, 50, rat(1, 50), rat(25, 2)).unwrap();
        assert_eq!(beam_direction(&p), mod_u(&rat(2 * 25, 2 * 50)));
        // b = 1/2: u0 = gamma
        let p = GscParams::new(24, 6, rat(1, 3), rat(1, 2)).unwrap();
        assert_eq!(beam_direction(&p), rat(1, 3));
    }

    #[test]
    fn worked_passbands() {
        // full sweep beam: coverage [-1, 0)
        let p = GscParams::new(120, 15, rat(1, 2), rat(-15, 2)).unwrap();
        let pb = passband(&p);
        assert_eq!(pb.segments(), &[(rat_int(-1), rat_int(0))]);
        assert_eq!(pb.total_width(), rat_int(1));

        // gamma = 1: the whole circle
        let p = GscParams::new(8, 2, rat_int(1), rat(1, 2)).unwrap();
        let pb = passband(&p);
        assert_eq!(pb.segments(), &[(rat_int(-1), rat_int(1))]);

        // wrap: N=50, gamma=1/2, b=1, m=10 -> [1/10, 1) u [-1, -9/10)
        let p = GscParams::new(50, 10, rat(1, 2), rat_int(1)).unwrap();
        let pb = passband(&p);
        assert_eq!(
            pb.segments(),
            &[(rat(1, 10), rat_int(1)), (rat_int(-1), rat(-9, 10))]
        );
        assert_eq!(pb.total_width(), rat_int(1));
    }

    #[test]
    fn passband_matches_beam_coverage() {
        for (n, m, q, b) in [(120u64, 15u64, 2i64, rat(-15, 2)), (50, 10, 2, rat_int(1)), (24, 4, 3, rat(7, 3))] {
            let p = GscParams::new(n, m, rat(1, q), b).unwrap();
            let pb = passband(&p);
            let u0 = beam_direction(&p);
            // membership test against [u0 - gamma, u0 + gamma) mod [-1, 1)
            for i in -50..50i64 {
                let u = rat(i, 50);
                if u >= rat_int(1) {
                    continue;
                }
                let rel = mod_u(&(&u - &u0 + p.gamma())); // in [-1,1); coverage iff rel in [0, 2gamma)
                let covered = rel >= rat_int(0) && rel < rat_int(2) * p.gamma();
                assert_eq!(pb.contains(&u), covered, "u={u} n={n} m={m}");
            }
        }
    }

    #[test]
    fn solve_b_round_trips() {
        // worked example
        assert_eq!(
            solve_b(120, 15, &rat(1, 2), &rat(-1, 2)).unwrap(),
            rat(-15, 2)
        );
        // DFT pointing inversion: m=N, gamma=1/N -> b = N*u0/2 (mod N)
        let b = solve_b(16, 16, &rat(1, 16), &rat(3, 8)).unwrap();
        let p = GscParams::new(16, 16, rat(1, 16), b.clone()).unwrap();
        assert_eq!(beam_direction(&p), rat(3, 8));
        assert_eq!(b, rat_int(3)); // 16*(3/8)/2 = 3, already smallest
    }

    #[test]
    fn sweep_plan_shapes() {
        let plan = make_sweep_plan(120, 15, &rat(1, 2)).unwrap();
        assert_eq!(plan.beam_count(), 2);
        assert_eq!(
            plan.beams.iter().map(|b| b.u0.clone()).collect::<Vec<_>>(),
            vec![rat(-1, 2), rat(1, 2)]
        );
        assert!(plan.tiles_exactly());

        let plan = make_sweep_plan(120, 40, &rat(1, 13)).unwrap();
        assert_eq!(plan.beam_count(), 13);
        assert!(plan.tiles_exactly());

        let plan = make_sweep_plan(8, 8, &rat_int(1)).unwrap();
        assert_eq!(plan.beam_count(), 1);
        assert!(plan.tiles_exactly());

        assert!(matches!(
            make_sweep_plan(120, 15, &rat(2, 3)),
            Err(Error::NotReciprocalInteger(_))
        ));
    }

    #[test]
    fn bin_classification() {
        // coverage [-1, 0), N'=8 -> passband bins {4, 5, 6, 7}
        let pb = PassbandInterval::from_left_edge(rat_int(-1), rat(1, 2));
        let (ip, is) = classify_bins(&pb, 8);
        assert_eq!(ip, vec![4, 5, 6, 7]);
        assert_eq!(is, vec![0, 1, 2, 3]);

        // gamma = 1: everything is passband
        let pb = PassbandInterval::from_left_edge(rat(1, 3), rat_int(1));
        let (ip, is) = classify_bins(&pb, 12);
        assert_eq!(ip.len(), 12);
        assert!(is.is_empty());
    }

    #[test]
    fn bin_fraction_approaches_gamma() {
        let pb = PassbandInterval::from_left_edge(rat(1, 7), rat(1, 5));
        for dft_len in [40usize, 400, 4000] {
            let (ip, _) = classify_bins(&pb, dft_len);
            let frac = ip.len() as f64 / dft_len as f64;
            assert!((frac - 0.2).abs() < 2.0 / dft_len as f64, "{frac}");
        }
    }
}
