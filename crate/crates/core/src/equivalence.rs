//! Mechanical verification of the identities between the sequence families:
//! the chirp and DFT degenerations of the step-chirp construction, and the
//! two parity branches embedding the full-band step-chirp sequence into the
//! Mow family.

use crate::rational::{
    is_integer, mod_u, mod_unit, rat, rat_int, square_free_decomposition, Rational,
};
use crate::sequences::{
    dft_codeword, gc_phases, gsc_phases, mow_phases, GscParams, MowParams,
    RationalPhaseSequence,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceKind {
    /// `gsc(m=N, gamma=1/N, b)` against `dft(2b/N mod [-1,1))`.
    GscDft,
    /// `gsc(m=1)` against `gc` with the same `(N, gamma, b)`.
    GscGc,
    /// Full-band step-chirp as a Mow member, even square-free part.
    GscMowEvenS,
    /// Full-band step-chirp as a Mow member, odd square-free part.
    GscMowOddS,
}

impl std::fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EquivalenceKind::GscDft => "gsc<->dft",
            EquivalenceKind::GscGc => "gsc<->gc",
            EquivalenceKind::GscMowEvenS => "gsc<->mow-even-s",
            EquivalenceKind::GscMowOddS => "gsc<->mow-odd-s",
        };
        f.write_str(s)
    }
}

/// Outcome of one exact phase comparison. `verdict` holds exactly when the
/// two sequences agree up to a single global phase constant, with zero
/// tolerance on the rationals.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub kind: EquivalenceKind,
    pub lhs_params: String,
    pub rhs_params: String,
    /// Largest per-entry circle distance (in turns) after removing the
    /// global offset.
    pub max_phase_gap: Rational,
    pub verdict: bool,
}

impl EquivalenceReport {
    fn from_gap(kind: EquivalenceKind, lhs: String, rhs: String, gap: Rational) -> Self {
        let verdict = gap.is_zero();
        EquivalenceReport {
            kind,
            lhs_params: lhs,
            rhs_params: rhs,
            max_phase_gap: gap,
            verdict,
        }
    }
}

/// Maximum circle distance between per-entry phase differences and the
/// entry-0 difference, in turns. Zero iff the sequences are equal modulo one
/// global phase constant.
pub fn max_phase_gap(lhs: &RationalPhaseSequence, rhs: &RationalPhaseSequence) -> Rational {
    if lhs.len() != rhs.len() {
        return rat(1, 2); // maximal circle distance
    }
    let offset = mod_unit(&(&lhs.phases()[0] - &rhs.phases()[0]));
    let mut max = Rational::zero();
    for (a, b) in lhs.phases().iter().zip(rhs.phases()) {
        let diff = mod_unit(&(&(a - b) - &offset));
        let dist = if diff > rat(1, 2) { rat_int(1) - diff } else { diff };
        if dist > max {
            max = dist;
        }
    }
    max
}

/// Full-band (`gamma = 1`) step-chirp sequence, the named entry point for
/// the Mow-embedding workflow.
pub fn degenerate_gsc(params: &GscParams) -> Result<RationalPhaseSequence> {
    if *params.gamma() != rat_int(1) {
        return Err(Error::NotFullBand(params.gamma().to_string()));
    }
    Ok(gsc_phases(params))
}

/// Explicit Mow parameters rendering the full-band step-chirp sequence, per
/// the two parity branches: requires `m` to be the square part of `N` and
/// `2b` odd (even `s`) or `b` integer (odd `s`).
pub fn mow_params_for_gsc(params: &GscParams) -> Result<MowParams> {
    if *params.gamma() != rat_int(1) {
        return Err(Error::NotFullBand(params.gamma().to_string()));
    }
    let (s, m_square) = square_free_decomposition(params.n());
    let m = params.m();
    if m != m_square {
        return Err(Error::NotSquarePart { m, n: params.n() });
    }
    let b = params.b();
    let two_b = b * rat_int(2);
    let sm = BigInt::from(s * m);
    let ls = 0..m as i64;
    if s % 2 == 0 {
        // need 2b an odd integer; then (2b-1)/2 is an integer j and
        // alpha = 1, beta(l) = j*m + l, f0(l) = b*l
        let odd = is_integer(&two_b) && two_b.to_integer().is_odd();
        if !odd {
            return Err(Error::OffsetParity {
                b: b.to_string(),
                need: "2b an odd integer (s even)",
            });
        }
        let j = (&two_b - rat_int(1)).to_integer() / BigInt::from(2);
        let beta = ls
            .map(|l| (&j * BigInt::from(m) + BigInt::from(l)).mod_floor(&sm))
            .map(|v| v.to_i64().expect("reduced mod s*m"))
            .collect();
        MowParams::new(
            s,
            m,
            vec![1; m as usize],
            beta,
            (0..m as i64).map(|l| b * rat_int(l)).collect(),
        )
    } else {
        // need b integer; with s = 2d - 1, alpha = d,
        // beta(l) = (2b-1)*d*m + l, f0(l) = b*l
        if !is_integer(b) {
            return Err(Error::OffsetParity {
                b: b.to_string(),
                need: "b an integer (s odd)",
            });
        }
        let d = (s + 1) / 2;
        let factor = (&two_b - rat_int(1)).to_integer() * BigInt::from(d) * BigInt::from(m);
        let beta = ls
            .map(|l| (&factor + BigInt::from(l)).mod_floor(&sm))
            .map(|v| v.to_i64().expect("reduced mod s*m"))
            .collect();
        MowParams::new(
            s,
            m,
            vec![if s == 1 { 1 } else { d }; m as usize],
            beta,
            (0..m as i64).map(|l| b * rat_int(l)).collect(),
        )
    }
}

fn report_pair(
    kind: EquivalenceKind,
    lhs_desc: String,
    rhs_desc: String,
    lhs: &RationalPhaseSequence,
    rhs: &RationalPhaseSequence,
) -> EquivalenceReport {
    EquivalenceReport::from_gap(kind, lhs_desc, rhs_desc, max_phase_gap(lhs, rhs))
}

/// Exhaustively checks, for every length up to `n_max`:
/// (a) `gsc(m=1) = gc`, (b) `gsc(m=N, gamma=1/N) = dft(2b/N)`, and
/// (c) both parity branches of the Mow embedding, all as exact phase
/// comparisons modulo one global constant.
pub fn verify_equivalences(n_max: u64) -> Vec<EquivalenceReport> {
    let mut reports = Vec::new();
    let offsets = [rat_int(0), rat_int(1), rat(1, 2), rat(-3, 2), rat_int(5)];
    for n in 1..=n_max {
        let mut gammas = vec![rat(1, n as i64), rat_int(1)];
        if n > 2 {
            gammas.push(rat(1, 2));
        }
        gammas.dedup();
        // (a) step length 1 reduces to the chirp sequence
        for gamma in &gammas {
            for b in &offsets {
                let p = GscParams::new(n, 1, gamma.clone(), b.clone()).unwrap();
                let lhs = gsc_phases(&p);
                let rhs = gc_phases(n, gamma, b).unwrap();
                reports.push(report_pair(
                    EquivalenceKind::GscGc,
                    format!("gsc(N={n}, m=1, gamma={gamma}, b={b})"),
                    format!("gc(N={n}, gamma={gamma}, b={b})"),
                    &lhs,
                    &rhs,
                ));
            }
        }
        // (b) single-step full-length degeneration is a DFT codeword
        for b in &offsets {
            let p = GscParams::new(n, n, rat(1, n as i64), b.clone()).unwrap();
            let lhs = gsc_phases(&p);
            let u0 = mod_u(&(b * rat(2, n as i64)));
            let rhs = dft_codeword(n, &u0).unwrap();
            reports.push(report_pair(
                EquivalenceKind::GscDft,
                format!("gsc(N={n}, m={n}, gamma=1/{n}, b={b})"),
                format!("dft(N={n}, u0={u0})"),
                &lhs,
                &rhs,
            ));
        }
        // (c) full-band sequences against their Mow embeddings
        let (s, m) = square_free_decomposition(n);
        let branch_offsets: Vec<Rational> = if s % 2 == 0 {
            vec![rat(1, 2), rat(3, 2), rat(-5, 2)]
        } else {
            vec![rat_int(0), rat_int(1), rat_int(-3)]
        };
        let kind = if s % 2 == 0 {
            EquivalenceKind::GscMowEvenS
        } else {
            EquivalenceKind::GscMowOddS
        };
        for b in branch_offsets {
            let p = GscParams::new(n, m, rat_int(1), b.clone()).unwrap();
            let lhs = degenerate_gsc(&p).unwrap();
            let mow = mow_params_for_gsc(&p).expect("constraints satisfied by construction");
            let rhs = mow_phases(&mow);
            reports.push(report_pair(
                kind,
                format!("gsc(N={n}, m={m}, gamma=1, b={b})"),
                format!(
                    "mow(s={s}, m={m}, alpha={:?}, beta={:?})",
                    mow.alpha(),
                    mow.beta()
                ),
                &lhs,
                &rhs,
            ));
        }
    }
    reports
}
