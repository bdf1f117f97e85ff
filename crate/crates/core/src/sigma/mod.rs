//! The lens-space defect `sigma(q, p, e)`.
//!
//! Independent routes:
//!
//! * [`sigma`]: exact; one shift, then a run-length even continued fraction
//!   (logarithmic cost);
//! * [`sigma_by_reciprocity`]: exact, by the shift / sign / reciprocity
//!   rewrite rules only;
//! * [`sigma_via_cf`]: exact, as `-sum sgn(a_i)` over the explicit even
//!   continued fraction of `p/q` (valid for `e = -1`, `p + q` odd, `|p| > |q|`);
//! * [`sigma_trig`]: the defining trigonometric sum in floating point.
//!
//! `sigma` is defined for every coprime `(q, p)` with `p != 0` whose sign `e`
//! corresponds to a spin structure on `L(|p|, q)`: when `p` is odd this
//! forces `e = (-1)^(q-1)`. For odd `p` and the other sign the trigonometric
//! sum collapses to `4 s(q, p)` (a Dedekind sum), which is not an integer in
//! general and is not determined by the rewrite rules; such inputs are
//! rejected with [`SigmaError::Inadmissible`].

mod cf;
mod trig;

pub use cf::{cf_eval, even_cf_expand, even_cf_runs, EvenCf};
pub use trig::{sigma_trig, trig_sum, TrigSigma, TRIG_MAX_MODULUS, TRIG_TOLERANCE};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{coprime, sgn, Int, Sign};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SigmaError {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: Int, b: Int },
    #[error("modulus must be non-zero")]
    ZeroModulus,
    #[error("{p} and {q} have the same parity")]
    SameParity { p: Int, q: Int },
    #[error("need |{p}| > |{q}|; reduce with the shift and reciprocity rules first")]
    NotReduced { p: Int, q: Int },
    #[error("invalid even continued fraction: {0}")]
    InvalidCf(String),
    #[error("sign {eps} is not a spin structure on L({p},{q}): odd modulus requires e = (-1)^(q-1)")]
    Inadmissible { q: Int, p: Int, eps: Sign },
    #[error("trigonometric sum {value} is {distance:e} away from an integer")]
    PrecisionFailure { value: f64, distance: f64 },
    #[error("modulus {0} too large for the trigonometric sum")]
    TooLarge(Int),
}

/// Whether `e` selects a spin structure on `L(|p|, q)`. Both signs are
/// accepted for `|p| = 1`, where the value is 0 either way.
pub fn is_spin_sign(q: &Int, p: &Int, eps: Sign) -> bool {
    p.is_even() || p.abs().is_one() || eps == Sign::from_parity(u8::from(q.is_even()))
}

/// Exact `sigma(q, p, e)`.
///
/// Normalizes `p > 0` (sign rule), shifts `q` by `p` once if needed so the
/// sign becomes `-1` (shift rule), reduces `q` into `(-p, p)` by multiples of
/// `2p`, and reads the value off the even continued fraction of `p/q`.
pub fn sigma(q: &Int, p: &Int, eps: Sign) -> Result<Int, SigmaError> {
    check_domain(q, p, eps)?;
    let (p, neg) = if p.is_negative() { (-p, true) } else { (p.clone(), false) };
    if p.is_one() {
        return Ok(Int::zero());
    }
    let q = if eps == Sign::Plus { q - &p } else { q.clone() };
    let two_p = &p * 2;
    let mut r = q.mod_floor(&two_p);
    if r >= p {
        r -= &two_p;
    }
    debug_assert!((&p + &r).is_odd());
    let s: Int = even_cf_runs(&p, &r)?
        .into_iter()
        .map(|(a, n)| if a.is_positive() { -n } else { n })
        .sum();
    Ok(if neg { -s } else { s })
}

fn check_domain(q: &Int, p: &Int, eps: Sign) -> Result<(), SigmaError> {
    if p.is_zero() {
        return Err(SigmaError::ZeroModulus);
    }
    if !coprime(q, p) {
        return Err(SigmaError::NotCoprime { a: q.clone(), b: p.clone() });
    }
    if !is_spin_sign(q, p, eps) {
        return Err(SigmaError::Inadmissible { q: q.clone(), p: p.clone(), eps });
    }
    Ok(())
}

/// Exact `sigma(q, p, e)` using only the rewrite rules
///
/// * `sigma(q + c p, p, e) = sigma(q, p, (-1)^c e)`
/// * `sigma(-q, p, e) = sigma(q, -p, e) = -sigma(q, p, e)`
/// * `sigma(q, 1, e) = 0`
/// * `sigma(p, q, -1) + sigma(q, p, -1) = -sgn(p q)` for `p + q` odd.
///
/// Each round moves `q` into `(-p, p)` so that the sign becomes `-1` and
/// `p + q` is odd, then swaps by reciprocity; the modulus strictly decreases.
/// The number of rounds grows with the length of the even continued
/// fraction, which is linear for inputs like `(p - 1, p)`; [`sigma`] is the
/// fast path.
pub fn sigma_by_reciprocity(q: &Int, p: &Int, eps: Sign) -> Result<Int, SigmaError> {
    check_domain(q, p, eps)?;

    // result = acc + mult * sigma(q, p, eps)
    let mut acc = Int::zero();
    let mut mult: i64 = 1;
    let (mut q, mut p, mut eps) = (q.clone(), p.clone(), eps);
    loop {
        if p.is_negative() {
            p = -p;
            mult = -mult;
        }
        if p.is_one() {
            return Ok(acc);
        }
        let r = if p.is_even() {
            // shift by an odd multiple of p iff eps = +1
            let two_p = &p * 2;
            let base = if eps == Sign::Plus { &q - &p } else { q.clone() };
            let m = base.mod_floor(&two_p);
            if m >= p {
                m - two_p
            } else {
                m
            }
        } else {
            let m = q.mod_floor(&p);
            if m.is_even() {
                m
            } else {
                m - &p
            }
        };
        debug_assert_eq!(eps.flip_by(&((&q - &r) / &p)), Sign::Minus);
        debug_assert!((&p + &r).is_odd());
        // sigma(r, p, -1) = -sgn(p r) - sigma(p, r, -1), p > 0
        acc += Int::from(-mult * sgn(&r));
        mult = -mult;
        q = p;
        p = r;
        eps = Sign::Minus;
    }
}

/// `sigma(q, p, -1) = -sum sgn(a_i)` where `p/q = [[a_1, ..., a_n]]`.
pub fn sigma_via_cf(q: &Int, p: &Int) -> Result<Int, SigmaError> {
    Ok(even_cf_expand(p, q)?.neg_sign_sum())
}

/// Convenience wrapper over small integers.
pub fn sigma_i64(q: i64, p: i64, eps: Sign) -> Result<Int, SigmaError> {
    sigma(&Int::from(q), &Int::from(p), eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn unit_modulus_vanishes() {
        for q in -5..=5 {
            assert_eq!(sigma_i64(q, 1, Sign::Plus).unwrap(), int(0));
            assert_eq!(sigma_i64(q, 1, Sign::Minus).unwrap(), int(0));
            assert_eq!(sigma_i64(q, -1, Sign::Minus).unwrap(), int(0));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(sigma_i64(4, 7, Sign::Minus).unwrap(), int(-2));
        assert_eq!(sigma_i64(3, 4, Sign::Plus).unwrap(), int(1));
        assert_eq!(sigma_i64(3, 4, Sign::Minus).unwrap(), int(-3));
        assert_eq!(sigma_i64(4, 5, Sign::Minus).unwrap(), int(-4));
    }

    #[test]
    fn minus_one_over_n() {
        for n in 2..=10 {
            assert_eq!(sigma_i64(-1, n, Sign::Plus).unwrap(), int(-(n - 1)));
            assert_eq!(sigma_i64(n - 1, n, Sign::Minus).unwrap(), int(-(n - 1)));
        }
    }

    #[test]
    fn n_over_one_minus_n() {
        for n in 2..=12 {
            assert_eq!(sigma_i64(n, 1 - n, Sign::Minus).unwrap(), int(2 - n), "n = {n}");
        }
    }

    #[test]
    fn negation() {
        for (q, p) in [(3, 4), (5, 8), (2, 7), (4, 9), (1, 6)] {
            for eps in [Sign::Plus, Sign::Minus] {
                let Ok(v) = sigma_i64(q, p, eps) else { continue };
                assert_eq!(sigma_i64(-q, p, eps).unwrap(), -&v);
                assert_eq!(sigma_i64(q, -p, eps).unwrap(), -&v);
            }
        }
    }

    #[test]
    fn rejects() {
        assert!(matches!(sigma_i64(2, 4, Sign::Plus), Err(SigmaError::NotCoprime { .. })));
        assert!(matches!(sigma_i64(1, 0, Sign::Plus), Err(SigmaError::ZeroModulus)));
        assert!(matches!(sigma_i64(1, 3, Sign::Minus), Err(SigmaError::Inadmissible { .. })));
        assert!(matches!(sigma_i64(2, 3, Sign::Plus), Err(SigmaError::Inadmissible { .. })));
    }

    #[test]
    fn cf_route() {
        assert_eq!(sigma_via_cf(&int(4), &int(7)).unwrap(), int(-2));
        assert_eq!(sigma_via_cf(&int(3), &int(4)).unwrap(), int(-3));
    }

    #[test]
    fn reciprocity_route_agrees() {
        for p in -40i64..=40 {
            for q in -90i64..=90 {
                for eps in [Sign::Plus, Sign::Minus] {
                    let (a, b) = (sigma_i64(q, p, eps), sigma_by_reciprocity(&int(q), &int(p), eps));
                    assert_eq!(a, b, "sigma({q},{p},{eps})");
                }
            }
        }
    }

    #[test]
    fn huge_arguments_do_not_overflow() {
        let p: Int = "1000000000000000000000000000000000000000".parse().unwrap();
        let q = &p - 1;
        // p/(p-1) is all twos, so sigma(p-1, p, -1) = -(p-1)
        assert_eq!(sigma(&q, &p, Sign::Minus).unwrap(), -q.clone());
        let q2 = &p / 2 + 1; // odd, coprime to p
        let v = sigma(&q2, &p, Sign::Minus).unwrap();
        // sigma(q, p, -1) = q (mod 2) for |p| > |q| of opposite parity
        assert!(v.is_odd());
    }
}
