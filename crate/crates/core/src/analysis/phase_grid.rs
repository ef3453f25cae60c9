//! Phase resolution: the coarsest uniform grid containing all phases.

use crate::rational::{is_integer, lcm_denominators, Rational};
use crate::sequences::{GscParams, MowParams, RationalPhaseSequence};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// A uniform phase grid `{2*pi*p/P | p in Z_P}`: `levels` is the level count
/// `P`, `resolution_turns` the spacing `1/P` as a fraction of a turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseGrid {
    resolution_turns: Rational,
    levels: BigUint,
}

impl PhaseGrid {
    fn from_levels(levels: BigUint) -> Self {
        assert!(!levels.is_zero(), "phase grid needs at least one level");
        Self {
            resolution_turns: Rational::new(BigInt::one(), BigInt::from(levels.clone())),
            levels,
        }
    }

    /// Grid spacing as a fraction of a full turn (multiply by `2*pi` for
    /// radians).
    pub fn resolution_turns(&self) -> &Rational {
        &self.resolution_turns
    }

    pub fn levels(&self) -> &BigUint {
        &self.levels
    }

    /// True when every phase of `self`'s grid lies on `other`'s grid, i.e.
    /// `other` is the same grid or a coarser sub-grid.
    pub fn refines(&self, other: &PhaseGrid) -> bool {
        self.levels.is_multiple_of(&other.levels)
    }
}

/// Minimal uniform grid containing every phase of the sequence: the level
/// count is the least common multiple of the reduced denominators.
pub fn phase_resolution(seq: &RationalPhaseSequence) -> PhaseGrid {
    PhaseGrid::from_levels(lcm_denominators(seq.phases()))
}

/// Closed-form step-chirp resolution for integer `b` and `gamma = p/q`:
/// `P = N*q / gcd(N*q, m*p)`.
pub fn gsc_resolution_closed_form(params: &GscParams) -> Result<PhaseGrid> {
    if !is_integer(params.b()) {
        return Err(Error::NonIntegerOffset(params.b().to_string()));
    }
    let p = params.gamma().numer().magnitude().clone();
    let q = params.gamma().denom().magnitude().clone();
    let nq = BigUint::from(params.n()) * q;
    let mp = BigUint::from(params.m()) * p;
    Ok(PhaseGrid::from_levels(&nq / nq.gcd(&mp)))
}

/// Closed-form chirp resolution (`m = 1` case): `P = N*q / gcd(N*q, p)`.
pub fn gc_resolution_closed_form(n: u64, gamma: &Rational, b: &Rational) -> Result<PhaseGrid> {
    gsc_resolution_closed_form(&GscParams::new(n, 1, gamma.clone(), b.clone())?)
}

/// Family-level Mow resolution for integer `f0` tables: half a turn over
/// `N/m` levels when `s` is even and `m` odd, a full turn over `N/m` levels
/// otherwise. Individual members may land on a coarser sub-grid; with a
/// non-integer `f0` the closed form does not apply and the resolution is
/// computed from the phases instead.
pub fn mow_phase_resolution(params: &MowParams) -> PhaseGrid {
    if params.f0().iter().all(is_integer) {
        let n_over_m = params.s() * params.m();
        let levels = if params.s() % 2 == 0 && params.m() % 2 == 1 {
            2 * n_over_m
        } else {
            n_over_m
        };
        PhaseGrid::from_levels(BigUint::from(levels))
    } else {
        phase_resolution(&crate::sequences::mow_phases(params))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::sequences::{dft_codeword, gc_phases, gsc_phases, mow_phases};

    #[test]
    fn ten_times_coarser() {
        // N=50, gamma=1/2, b=1: the m=10 grid is 10x coarser than m=1
        let gsc = GscParams::new(50, 10, rat(1, 2), rat_int(1)).unwrap();
        let r_gsc = phase_resolution(&gsc_phases(&gsc));
        let r_gc = phase_resolution(&gc_phases(50, &rat(1, 2), &rat_int(1)).unwrap());
        assert_eq!(
            r_gsc.resolution_turns(),
            &(r_gc.resolution_turns() * rat_int(10))
        );
        assert_eq!(r_gsc, gsc_resolution_closed_form(&gsc).unwrap());
        assert_eq!(
            r_gc,
            gc_resolution_closed_form(50, &rat(1, 2), &rat_int(1)).unwrap()
        );
    }

    #[test]
    fn dft_levels_divide_n() {
        // u0 = 2k/N: phases k*n/N live on the N-level grid
        for k in [0i64, 1, 3, 7] {
            let seq = dft_codeword(20, &rat(2 * k, 20)).unwrap();
            let grid = phase_resolution(&seq);
            assert!(BigUint::from(20u32).is_multiple_of(grid.levels()));
        }
    }

    #[test]
    fn all_zero_phases_single_level() {
        let seq = dft_codeword(5, &rat_int(0)).unwrap();
        let grid = phase_resolution(&seq);
        assert_eq!(grid.levels(), &BigUint::from(1u32));
        assert_eq!(grid.resolution_turns(), &rat_int(1));
    }

    #[test]
    fn mow_closed_form_branches() {
        // s even, m odd -> pi/(N/m): N=462, s=462, m=1 -> 924 levels
        let p = MowParams::new(462, 1, vec![1], vec![0], vec![rat_int(0)]).unwrap();
        let grid = mow_phase_resolution(&p);
        assert_eq!(grid.levels(), &BigUint::from(924u32));
        assert_eq!(grid, phase_resolution(&mow_phases(&p)));

        // otherwise branch: s=2, m=1 (s even, m odd -> first branch);
        // s=3, m=2 -> 2pi/(N/m) = 6 levels
        let p = MowParams::new(3, 2, vec![1, 1], vec![0, 1], vec![rat_int(0), rat_int(0)])
            .unwrap();
        let grid = mow_phase_resolution(&p);
        assert_eq!(grid.levels(), &BigUint::from(6u32));
        // any member lands on the family grid or a coarser sub-grid
        assert!(grid.levels().is_multiple_of(phase_resolution(&mow_phases(&p)).levels()));
    }

    #[test]
    fn member_divides_family_grid() {
        let p = MowParams::new(2, 1, vec![1], vec![1], vec![rat_int(0)]).unwrap();
        let family = mow_phase_resolution(&p);
        let member = phase_resolution(&mow_phases(&p));
        // family levels are a multiple of the member's
        assert!(family.levels().is_multiple_of(member.levels()));
    }

    #[test]
    fn non_integer_f0_falls_back_to_numeric() {
        let p = MowParams::new(2, 1, vec![1], vec![0], vec![rat(1, 3)]).unwrap();
        let grid = mow_phase_resolution(&p);
        assert_eq!(grid, phase_resolution(&mow_phases(&p)));
    }

    #[test]
    fn closed_form_rejects_fractional_b() {
        let p = GscParams::new(8, 2, rat(1, 2), rat(1, 2)).unwrap();
        assert!(matches!(
            gsc_resolution_closed_form(&p),
            Err(Error::NonIntegerOffset(_))
        ));
    }
}
