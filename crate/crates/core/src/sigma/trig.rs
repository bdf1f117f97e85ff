//! Floating-point evaluation of the cotangent/cosecant sum.
//!
//! `sigma(q, p, e) = (1/p) * sum_{k=1}^{|p|-1} [cot(pi k/p) cot(pi k q/p) + 2 e^k csc(pi k/p) csc(pi k q/p)]`
//!
//! This is a numerical oracle for the exact recursion in the parent module.

use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::SigmaError;
use crate::arith::{coprime, Int, Sign};

/// Maximum tolerated distance between the sum and the nearest integer.
pub const TRIG_TOLERANCE: f64 = 1e-6;

/// Largest `|p|` accepted; the sum has `|p| - 1` terms.
pub const TRIG_MAX_MODULUS: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrigSigma {
    pub value: f64,
    #[serde(with = "crate::arith::json_int")]
    pub nearest: Int,
    pub distance: f64,
}

impl TrigSigma {
    pub fn is_integral(&self) -> bool {
        self.distance < TRIG_TOLERANCE
    }
}

/// Neumaier-compensated accumulator.
#[derive(Default)]
struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.c
    }
}

/// Raw value of the sum, without any integrality check.
pub fn trig_sum(q: &Int, p: &Int, eps: Sign) -> Result<TrigSigma, SigmaError> {
    if p.is_zero() {
        return Err(SigmaError::ZeroModulus);
    }
    if !coprime(q, p) {
        return Err(SigmaError::NotCoprime { a: q.clone(), b: p.clone() });
    }
    let m = p
        .abs()
        .to_u64()
        .filter(|m| *m <= TRIG_MAX_MODULUS)
        .ok_or_else(|| SigmaError::TooLarge(p.clone()))?;

    let two_m = Int::from(2 * m);
    // cot has period pi and csc has period 2 pi, so reducing k q mod 2m is exact.
    let q_red = q.mod_floor(&two_m).to_u64().expect("reduced below 2m");
    let mf = m as f64;

    let mut acc = Compensated::default();
    for k in 1..m {
        let kq = ((k as u128 * q_red as u128) % (2 * m as u128)) as f64;
        let a = PI * k as f64 / mf;
        let b = PI * kq / mf;
        let (sa, ca) = a.sin_cos();
        let (sb, cb) = b.sin_cos();
        let e_k = if eps == Sign::Minus && k % 2 == 1 { -1.0 } else { 1.0 };
        acc.add((ca * cb) / (sa * sb));
        acc.add(2.0 * e_k / (sa * sb));
    }
    let mut value = acc.total() / mf;
    if p.is_negative() {
        value = -value;
    }
    let rounded = value.round();
    Ok(TrigSigma {
        value,
        nearest: Int::from(rounded as i64),
        distance: (value - rounded).abs(),
    })
}

/// The sum together with its nearest integer; fails if the sum is not within
/// [`TRIG_TOLERANCE`] of an integer.
pub fn sigma_trig(q: &Int, p: &Int, eps: Sign) -> Result<TrigSigma, SigmaError> {
    let t = trig_sum(q, p, eps)?;
    if t.is_integral() {
        Ok(t)
    } else {
        Err(SigmaError::PrecisionFailure { value: t.value, distance: t.distance })
    }
}
