//! Exact rational arithmetic helpers.
//!
//! Phases are rationals measured in turns (units of 2pi). Backing them with
//! arbitrary-precision integers keeps every construction exact: numerators of
//! the step-chirp phases grow like N^2, which would overflow fixed-width
//! arithmetic for long sequences.

use crate::error::Error;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational scalar, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`. Decimal notation is rejected so exactness is
/// never silently lost on the command line.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Canonical `"num/den"` form (denominator printed even when 1), so the
/// serialized representation round-trips bit-exactly.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Reduces into `[0, 1)`.
pub fn mod_unit(r: &Rational) -> Rational {
    r - r.floor()
}

/// Reduces modulo 2 into `[-1, 1)`, the u-domain convention.
pub fn mod_u(r: &Rational) -> Rational {
    let shifted = (r + rat_int(1)) / rat_int(2);
    r - (shifted.floor() * rat_int(2))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Lossy conversion for rendering; exact-path values always fit.
pub fn to_scalar<T: crate::Scalar>(r: &Rational) -> T {
    T::from_f64(r.to_f64().expect("rational convertible to f64")).expect("f64 fits scalar")
}

/// Least common multiple of the reduced denominators: the finest uniform
/// phase grid containing every value.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigUint {
    let mut acc = BigUint::one();
    for v in values {
        acc = acc.lcm(v.denom().magnitude());
    }
    acc
}

/// Factors `n = s * m^2` with `s` square-free; returns `(s, m)`.
pub fn square_free_decomposition(n: u64) -> (u64, u64) {
    assert!(n > 0, "square-free decomposition of 0");
    let (mut s, mut m, mut rest) = (1u64, 1u64, n);
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            m *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= p;
            }
        }
        p += 1;
    }
    s *= rest; // leftover prime, exponent 1
    (s, m)
}

pub fn is_square_free(n: u64) -> bool {
    n > 0 && square_free_decomposition(n).1 == 1
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let (mut phi, mut rest) = (1u64, n);
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut pk = 1u64;
            while rest % p == 0 {
                rest /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi *= rest - 1;
    }
    phi
}
