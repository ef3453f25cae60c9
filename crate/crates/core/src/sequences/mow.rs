//! Mow's unified construction of sequences with perfect periodic
//! autocorrelation.

use super::{RationalPhaseSequence, SequenceFamily};
use crate::rational::{is_square_free, mod_unit, rat, rat_int, Rational};
use crate::{Error, Result};
use num_integer::Integer;

/// Parameters of a length `N = s*m^2` Mow sequence: square-free `s`,
/// per-step multipliers `alpha` (units modulo `s`), linear offsets `beta`
/// (with `beta mod m` a permutation of `Z_m`), and rational initial phases
/// `f0`, one of each per step `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MowParams {
    s: u64,
    m: u64,
    alpha: Vec<u64>,
    beta: Vec<u64>,
    f0: Vec<Rational>,
}

impl MowParams {
    /// Validates and canonicalizes: `beta` is reduced modulo `s*m` (the
    /// construction is periodic in it) and `f0` modulo `s*m` likewise.
    pub fn new(s: u64, m: u64, alpha: Vec<u64>, beta: Vec<i64>, f0: Vec<Rational>) -> Result<Self> {
        if s == 0 || m == 0 {
            return Err(Error::EmptyLength);
        }
        if !is_square_free(s) {
            return Err(Error::NotSquareFree(s));
        }
        for got in [alpha.len(), beta.len(), f0.len()] {
            if got != m as usize {
                return Err(Error::TableLengthMismatch { got, m });
            }
        }
        for (index, &value) in alpha.iter().enumerate() {
            let in_range = if s == 1 { value == 1 } else { value >= 1 && value < s };
            if !in_range || value.gcd(&s) != 1 {
                return Err(Error::AlphaNotUnit { index, value, s });
            }
        }
        let sm = (s * m) as i64;
        let beta: Vec<u64> = beta.iter().map(|&v| v.rem_euclid(sm) as u64).collect();
        let mut seen = vec![false; m as usize];
        for &v in &beta {
            let residue = (v % m) as usize;
            if seen[residue] {
                return Err(Error::BetaNotPermutation { m });
            }
            seen[residue] = true;
        }
        let period = rat_int(sm);
        let f0 = f0
            .into_iter()
            .map(|v| &v - (&v / &period).floor() * &period)
            .collect();
        Ok(Self { s, m, alpha, beta, f0 })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Sequence length `N = s*m^2`.
    pub fn seq_len(&self) -> u64 {
        self.s * self.m * self.m
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn f0(&self) -> &[Rational] {
        &self.f0
    }

    /// `c(s)`: 1/2 for even `s`, 1 for odd.
    pub fn quadratic_coeff(&self) -> Rational {
        if self.s % 2 == 0 {
            rat(1, 2)
        } else {
            rat_int(1)
        }
    }
}

/// Mow sequence phases: for `n = k*m + l` (`l` in `Z_m`, `k` in `Z_{sm}`),
/// `phi_n = (m/N) * (m*c(s)*alpha[l]*k^2 + beta[l]*k + f0[l])  mod 1`.
pub fn mow_phases(params: &MowParams) -> RationalPhaseSequence {
    mow_phases_integer(params).unwrap_or_else(|| mow_phases_generic(params))
}

/// Integer fast path: every phase lives on the common denominator
/// `D = 2*N*L` with `L` the lcm of the `f0` denominators, so the numerators
/// can be accumulated in checked i128 arithmetic. Family sweeps construct
/// tens of thousands of members, and this avoids a big-rational reduction
/// per term. Falls back to the generic path on any overflow.
fn mow_phases_integer(params: &MowParams) -> Option<RationalPhaseSequence> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    let m = params.m as i128;
    let n = params.seq_len() as i128;
    let mut f0_lcm = BigInt::from(1);
    for f in &params.f0 {
        f0_lcm = f0_lcm.lcm(f.denom());
    }
    let l_scale = f0_lcm.to_i128()?;
    let denom = 2i128.checked_mul(n)?.checked_mul(l_scale)?;
    // 2*m*c(s): m when s is even, 2m when odd
    let c2 = if params.s % 2 == 0 { m } else { 2 * m };
    let coeffs: Option<Vec<(i128, i128, i128)>> = (0..params.m as usize)
        .map(|l| {
            let quad = m
                .checked_mul(l_scale)?
                .checked_mul(c2)?
                .checked_mul(params.alpha[l] as i128)?;
            let lin = 2i128
                .checked_mul(m)?
                .checked_mul(l_scale)?
                .checked_mul(params.beta[l] as i128)?;
            // f0 * L is an integer by choice of L
            let f0_scaled = ((params.f0[l].numer() * &f0_lcm) / params.f0[l].denom()).to_i128()?;
            let cst = 2i128.checked_mul(m)?.checked_mul(f0_scaled)?;
            Some((quad, lin, cst))
        })
        .collect();
    let coeffs = coeffs?;
    let mut phases = Vec::with_capacity(params.seq_len() as usize);
    for idx in 0..params.seq_len() {
        let k = (idx / params.m) as i128;
        let (quad, lin, cst) = coeffs[(idx % params.m) as usize];
        let num = quad
            .checked_mul(k.checked_mul(k)?)?
            .checked_add(lin.checked_mul(k)?)?
            .checked_add(cst)?;
        phases.push(Rational::new(
            BigInt::from(num.rem_euclid(denom)),
            BigInt::from(denom),
        ));
    }
    Some(RationalPhaseSequence::new(SequenceFamily::Mow, phases).expect("n > 0"))
}

fn mow_phases_generic(params: &MowParams) -> RationalPhaseSequence {
    let m = params.m;
    let n = params.seq_len();
    let c = params.quadratic_coeff();
    let scale = rat(m as i64, n as i64);
    let phases = (0..n)
        .map(|idx| {
            let k = (idx / m) as i64;
            let l = (idx % m) as usize;
            let quad = rat_int(m as i64) * &c * rat_int(params.alpha[l] as i64) * rat_int(k * k);
            let inner = quad + rat_int(params.beta[l] as i64) * rat_int(k) + &params.f0[l];
            mod_unit(&(&scale * inner))
        })
        .collect();
    RationalPhaseSequence::new(SequenceFamily::Mow, phases).expect("n > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The length-50 example: s=2, m=5, alpha=1, beta(l)=l-25, f0(l)=-19l/2.
    pub(crate) fn length_50_params() -> MowParams {
        MowParams::new(
            2,
            5,
            vec![1; 5],
            (0..5).map(|l| l - 25).collect(),
            (0..5).map(|l| rat(-19 * l, 2)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn beta_reduced_mod_sm() {
        let p = length_50_params();
        assert_eq!(p.beta(), &[5, 6, 7, 8, 9]);
        assert_eq!(p.seq_len(), 50);
    }

    #[test]
    fn degenerate_single_entry() {
        // s=1, m=1: one entry exp(j*2*pi*f0)
        let p = MowParams::new(1, 1, vec![1], vec![0], vec![rat(1, 3)]).unwrap();
        let seq = mow_phases(&p);
        assert_eq!(seq.phases(), &[rat(1, 3)]);
    }

    #[test]
    fn two_entry_example() {
        // s=2, m=1, alpha=[1], beta=[1], f0=[0]:
        // xi_k = k^2/2 + k, phases = xi_k/2 mod 1 -> {0, 3/4}
        let p = MowParams::new(2, 1, vec![1], vec![1], vec![rat_int(0)]).unwrap();
        let seq = mow_phases(&p);
        assert_eq!(seq.phases(), &[rat_int(0), rat(3, 4)]);
    }

    #[test]
    fn validation_rejects_bad_tables() {
        assert!(matches!(
            MowParams::new(4, 1, vec![1], vec![0], vec![rat_int(0)]),
            Err(Error::NotSquareFree(4))
        ));
        assert!(matches!(
            MowParams::new(6, 1, vec![2], vec![0], vec![rat_int(0)]),
            Err(Error::AlphaNotUnit { value: 2, s: 6, .. })
        ));
        // beta residues must cover Z_m exactly once
        assert!(matches!(
            MowParams::new(2, 2, vec![1, 1], vec![0, 2], vec![rat_int(0), rat_int(0)]),
            Err(Error::BetaNotPermutation { m: 2 })
        ));
        assert!(matches!(
            MowParams::new(2, 2, vec![1], vec![0, 1], vec![rat_int(0), rat_int(0)]),
            Err(Error::TableLengthMismatch { got: 1, m: 2 })
        ));
    }

    #[test]
    fn integer_path_matches_generic() {
        let cases = vec![
            length_50_params(),
            MowParams::new(6, 2, vec![1, 5], vec![3, -2], vec![rat(1, 3), rat(-7, 2)]).unwrap(),
            MowParams::new(462, 1, vec![5], vec![17], vec![rat(9, 4)]).unwrap(),
            MowParams::new(1, 3, vec![1, 1, 1], vec![2, 0, 1], vec![rat_int(0); 3]).unwrap(),
        ];
        for p in cases {
            let fast = mow_phases_integer(&p).expect("fits i128");
            assert_eq!(fast.phases(), mow_phases_generic(&p).phases());
        }
    }

    #[test]
    fn f0_canonicalized_mod_sm() {
        let a = MowParams::new(2, 1, vec![1], vec![0], vec![rat(9, 2)]).unwrap();
        let b = MowParams::new(2, 1, vec![1], vec![0], vec![rat(1, 2)]).unwrap();
        assert_eq!(a.f0(), b.f0());
        assert_eq!(mow_phases(&a), mow_phases(&b));
    }
}
