//! Exhaustive Mow-family enumeration with ISL ranking, and the
//! ISL-versus-step-length sweep.

use crate::analysis::AutocorrEngine;
use crate::rational::{euler_phi, is_square_free, rat, square_free_decomposition, Rational};
use crate::sequences::{gsc_phases, mow_phases, GscParams, MowParams};
use crate::{Error, Result};
use num_traits::Zero;
use rayon::prelude::*;

/// Gauge for the per-step initial phases during enumeration. A constant
/// shift of `f0` is a global phase and cannot move the ISL, so the family
/// is enumerated in a fixed gauge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F0Policy {
    /// `f0 = 0` everywhere: one member per `(alpha, beta)` pair.
    FixedZero,
    /// Each `f0[l]` drawn from `{0, 1/2}`: `2^m` members per pair.
    HalfIntegers,
}

impl F0Policy {
    fn choices(&self) -> Vec<Rational> {
        match self {
            F0Policy::FixedZero => vec![Rational::zero()],
            F0Policy::HalfIntegers => vec![Rational::zero(), rat(1, 2)],
        }
    }
}

/// Selects a Mow family to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MowFamilyQuery {
    /// Sequence length `N = s*m^2`.
    pub n: u64,
    /// Demand `m = 1` (requires square-free `N`); the full `beta`-table
    /// enumeration for `m > 1` explodes combinatorially and is only
    /// supported for `N <= 30`.
    pub restrict_m_to_1: bool,
    pub f0_policy: F0Policy,
}

/// One enumerated member with its integrated sidelobe level.
#[derive(Debug, Clone)]
pub struct MowIslRecord {
    pub params: MowParams,
    pub isl: f64,
}

const M_GT_1_LIMIT: u64 = 30;

/// Closed-form member count for a query: `phi(s)^m * m! * s^m * c^m` with
/// `c` the per-step `f0` choice count.
pub fn family_size(query: &MowFamilyQuery) -> Result<u128> {
    let (s, m) = decompose(query)?;
    let phi = euler_phi(s) as u128;
    let c = query.f0_policy.choices().len() as u128;
    let mut total: u128 = 1;
    for l in 1..=m as u128 {
        total *= phi * s as u128 * c * l; // the trailing l accumulates m!
    }
    Ok(total)
}

fn decompose(query: &MowFamilyQuery) -> Result<(u64, u64)> {
    if query.n == 0 {
        return Err(Error::EmptyLength);
    }
    let (s, m) = square_free_decomposition(query.n);
    if query.restrict_m_to_1 {
        if !is_square_free(query.n) {
            return Err(Error::NotSquareFree(query.n));
        }
        return Ok((query.n, 1));
    }
    if m > 1 && query.n > M_GT_1_LIMIT {
        return Err(Error::FamilyTooLarge(query.n));
    }
    Ok((s, m))
}

/// Mixed-radix odometer over `m` positions with `base` choices each.
fn tables<T: Clone>(choices: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<u64>> {
    if m == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for rest in permutations(m - 1) {
        for pos in 0..m {
            let mut perm: Vec<u64> = rest.clone();
            perm.insert(pos, (m - 1) as u64);
            out.push(perm);
        }
    }
    out
}

/// Enumerates the whole family in a deterministic order, computes each
/// member's ISL with the shared fast-convolution kernel, and returns the
/// records sorted ascending by `(isl, alpha, beta, f0)`.
pub fn enumerate_mow_isl(query: &MowFamilyQuery) -> Result<Vec<MowIslRecord>> {
    let (s, m) = decompose(query)?;
    let units: Vec<u64> = if s == 1 {
        vec![1]
    } else {
        (1..s).filter(|a| num_integer::gcd(*a, s) == 1).collect()
    };
    let alpha_tables = tables(&units, m as usize);
    let offsets: Vec<u64> = (0..s).collect();
    let beta_tables: Vec<Vec<i64>> = permutations(m as usize)
        .into_iter()
        .flat_map(|perm| {
            tables(&offsets, m as usize).into_iter().map(move |offs| {
                perm.iter()
                    .zip(&offs)
                    .map(|(p, o)| (p + o * m) as i64)
                    .collect()
            })
        })
        .collect();
    let f0_tables = tables(&query.f0_policy.choices(), m as usize);

    let mut members = Vec::new();
    for alpha in &alpha_tables {
        for beta in &beta_tables {
            for f0 in &f0_tables {
                members.push(
                    MowParams::new(s, m, alpha.clone(), beta.clone(), f0.clone())
                        .expect("enumerated tables are valid"),
                );
            }
        }
    }
    debug_assert_eq!(members.len() as u128, family_size(query)?);

    let n = (s * m * m) as usize;
    let mut records: Vec<MowIslRecord> = members
        .into_par_iter()
        .map_init(
            || AutocorrEngine::<f64>::for_len(n),
            |engine, params| {
                let isl = engine.isl(&mow_phases(&params).render());
                MowIslRecord { params, isl }
            },
        )
        .collect();
    records.sort_by(|a, b| {
        a.isl
            .partial_cmp(&b.isl)
            .expect("finite ISL")
            .then_with(|| a.params.alpha().cmp(b.params.alpha()))
            .then_with(|| a.params.beta().cmp(b.params.beta()))
            .then_with(|| a.params.f0().cmp(b.params.f0()))
    });
    Ok(records)
}

/// ISL of the step-chirp sequence at every divisor `m` of `N`, in
/// increasing `m` order.
pub fn isl_vs_m_sweep(n: u64, gamma: &Rational, b: &Rational) -> Result<Vec<(u64, f64)>> {
    let divisors: Vec<u64> = (1..=n).filter(|m| n % m == 0).collect();
    let params: Vec<GscParams> = divisors
        .iter()
        .map(|&m| GscParams::new(n, m, gamma.clone(), b.clone()))
        .collect::<Result<_>>()?;
    let values: Vec<f64> = params
        .into_par_iter()
        .map_init(
            || AutocorrEngine::<f64>::for_len(n as usize),
            |engine, p| engine.isl(&gsc_phases(&p).render()),
        )
        .collect();
    Ok(divisors.into_iter().zip(values).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{aperiodic_autocorr_direct, isl};
    use crate::rational::rat_int;

    #[test]
    fn small_family_counts() {
        // N=6: phi(6)*6 = 12 with fixed-zero f0
        let q = MowFamilyQuery {
            n: 6,
            restrict_m_to_1: true,
            f0_policy: F0Policy::FixedZero,
        };
        assert_eq!(family_size(&q).unwrap(), 12);
        let records = enumerate_mow_isl(&q).unwrap();
        assert_eq!(records.len(), 12);
        // half-integer policy doubles the single-step count
        let q2 = MowFamilyQuery {
            f0_policy: F0Policy::HalfIntegers,
            ..q
        };
        assert_eq!(family_size(&q2).unwrap(), 24);
        assert_eq!(enumerate_mow_isl(&q2).unwrap().len(), 24);
    }

    #[test]
    fn brute_force_cross_check() {
        // independent generator: filter all raw (alpha, beta) tables by the
        // definition's constraints and compare against the enumerator
        let q = MowFamilyQuery {
            n: 12, // s=3, m=2
            restrict_m_to_1: false,
            f0_policy: F0Policy::FixedZero,
        };
        let records = enumerate_mow_isl(&q).unwrap();
        let mut brute = 0u64;
        for a0 in 1..3u64 {
            for a1 in 1..3u64 {
                for b0 in 0..6i64 {
                    for b1 in 0..6i64 {
                        let alpha = vec![a0, a1];
                        let ok = MowParams::new(3, 2, alpha, vec![b0, b1], vec![rat_int(0); 2])
                            .is_ok();
                        if ok {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(records.len() as u64, brute);
        assert_eq!(records.len() as u128, family_size(&q).unwrap());
    }

    #[test]
    fn non_square_free_rejected_under_m1() {
        let q = MowFamilyQuery {
            n: 4,
            restrict_m_to_1: true,
            f0_policy: F0Policy::FixedZero,
        };
        assert!(matches!(enumerate_mow_isl(&q), Err(Error::NotSquareFree(4))));
    }

    #[test]
    fn oversized_m_gt_1_family_rejected() {
        let q = MowFamilyQuery {
            n: 44, // 11 * 2^2
            restrict_m_to_1: false,
            f0_policy: F0Policy::FixedZero,
        };
        assert!(matches!(enumerate_mow_isl(&q), Err(Error::FamilyTooLarge(44))));
    }

    #[test]
    fn fast_isl_matches_direct_oracle_on_members() {
        let q = MowFamilyQuery {
            n: 10,
            restrict_m_to_1: true,
            f0_policy: F0Policy::FixedZero,
        };
        let records = enumerate_mow_isl(&q).unwrap();
        for rec in records.iter().step_by(7) {
            let direct = isl(&aperiodic_autocorr_direct(&mow_phases(&rec.params).render::<f64>()));
            assert!((rec.isl - direct).abs() < 1e-10);
        }
    }

    #[test]
    fn f0_constant_shift_is_isl_gauge() {
        let q = MowFamilyQuery {
            n: 10,
            restrict_m_to_1: true,
            f0_policy: F0Policy::FixedZero,
        };
        let records = enumerate_mow_isl(&q).unwrap();
        for rec in records.iter().step_by(11) {
            let p = &rec.params;
            let shifted = MowParams::new(
                p.s(),
                p.m(),
                p.alpha().to_vec(),
                p.beta().iter().map(|&v| v as i64).collect(),
                p.f0().iter().map(|f| f + rat(7, 3)).collect(),
            )
            .unwrap();
            let isl_shifted = isl(&crate::analysis::aperiodic_autocorr(
                &mow_phases(&shifted).render::<f64>(),
            ));
            assert!((rec.isl - isl_shifted).abs() < 1e-10);
        }
    }

    #[test]
    fn sweep_is_ordered_and_deterministic() {
        let a = isl_vs_m_sweep(50, &rat_int(1), &rat(1, 2)).unwrap();
        let b = isl_vs_m_sweep(50, &rat_int(1), &rat(1, 2)).unwrap();
        assert_eq!(a.iter().map(|(m, _)| *m).collect::<Vec<_>>(), vec![1, 2, 5, 10, 25, 50]);
        let bits = |v: &[(u64, f64)]| v.iter().map(|(_, x)| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn ramp_endpoint_closed_form() {
        // at m=N the sweep's last entry is the alternating ramp:
        // ISL = (N-1)(2N-1)/(3N)
        let n = 10u64;
        let sweep = isl_vs_m_sweep(n, &rat_int(1), &rat(1, 2)).unwrap();
        let (_, last) = sweep.last().unwrap();
        let closed = ((n - 1) * (2 * n - 1)) as f64 / (3 * n) as f64;
        assert!((last - closed).abs() < 1e-9);
    }
}
