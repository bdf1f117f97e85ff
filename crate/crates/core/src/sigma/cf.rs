//! Even continued fractions `[[a1, ..., an]] = a1 - 1/(a2 - 1/(... - 1/an))`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SigmaError;
use crate::arith::{coprime, Int, Rational};

/// An even continued fraction: every entry is even with absolute value at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenCf {
    #[serde(with = "crate::arith::json_int::vec")]
    entries: Vec<Int>,
}

impl EvenCf {
    pub fn new(entries: Vec<Int>) -> Result<Self, SigmaError> {
        if entries.is_empty() {
            return Err(SigmaError::InvalidCf("empty expansion".into()));
        }
        if let Some(bad) = entries.iter().find(|a| a.is_odd() || a.abs() < Int::from(2)) {
            return Err(SigmaError::InvalidCf(format!("entry {bad} is not even with |a| >= 2")));
        }
        Ok(EvenCf { entries })
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `-sum sgn(a_i)`, which equals `sigma(q, p, -1)` for `p/q = [[a_1..a_n]]`.
    pub fn neg_sign_sum(&self) -> Int {
        let s: i64 = self.entries.iter().map(|a| if a.is_positive() { 1 } else { -1 }).sum();
        Int::from(-s)
    }
}

impl fmt::Display for EvenCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]]")
    }
}

/// Unique even continued fraction of `p/q` for coprime `p, q` of opposite
/// parity with `|p| > |q|`.
///
/// Each step picks the even `a` with `|p - a q| < |q|` and continues with
/// `(q, a q - p)`.
pub fn even_cf_expand(p: &Int, q: &Int) -> Result<EvenCf, SigmaError> {
    if q.is_zero() {
        return Err(SigmaError::ZeroModulus);
    }
    if !coprime(p, q) {
        return Err(SigmaError::NotCoprime { a: p.clone(), b: q.clone() });
    }
    if (p + q).is_even() {
        return Err(SigmaError::SameParity { p: p.clone(), q: q.clone() });
    }
    if p.abs() <= q.abs() {
        return Err(SigmaError::NotReduced { p: p.clone(), q: q.clone() });
    }

    let mut entries = Vec::new();
    let (mut p, mut q) = (p.clone(), q.clone());
    while !q.is_zero() {
        let a = nearest_even_quotient(&p, &q);
        let r = &a * &q - &p;
        debug_assert!(r.abs() < q.abs());
        entries.push(a);
        p = q;
        q = r;
    }
    EvenCf::new(entries)
}

/// Run-length form of [`even_cf_expand`]: `(entry, multiplicity)` pairs with
/// adjacent equal entries merged.
///
/// Runs of `+-2` are the only source of long expansions (`n/(n-1)` has
/// `n - 1` twos); each such run is skipped in closed form, so the cost stays
/// logarithmic in the inputs.
pub fn even_cf_runs(p: &Int, q: &Int) -> Result<Vec<(Int, Int)>, SigmaError> {
    // validate through the single-step routine's checks
    if q.is_zero() {
        return Err(SigmaError::ZeroModulus);
    }
    if !coprime(p, q) {
        return Err(SigmaError::NotCoprime { a: p.clone(), b: q.clone() });
    }
    if (p + q).is_even() {
        return Err(SigmaError::SameParity { p: p.clone(), q: q.clone() });
    }
    if p.abs() <= q.abs() {
        return Err(SigmaError::NotReduced { p: p.clone(), q: q.clone() });
    }

    let two = Int::from(2);
    let mut runs: Vec<(Int, Int)> = Vec::new();
    let (mut p, mut q) = (p.clone(), q.clone());
    while !q.is_zero() {
        let a = nearest_even_quotient(&p, &q);
        let (count, next_p, next_q) = if a.abs() == two {
            // With a = +-2 fixed, x_{j+1} = a x_j - x_{j-1}. In the frame
            // z_j = (sgn a)^j x_j the sequence is arithmetic, and the run
            // continues while z_j / z_{j+1} stays in (1, 3).
            let alt = a.is_negative();
            let z0 = p.clone();
            let z1 = if alt { -q.clone() } else { q.clone() };
            let (big_q, d) = if z1.is_positive() {
                (z1.clone(), &z0 - &z1)
            } else {
                (-z1.clone(), &z1 - &z0)
            };
            debug_assert!(d.is_positive() && d < &big_q * 2);
            let twice_q: Int = &big_q * 2;
            let twice_d: Int = &d * 2;
            let m: Int = (twice_q - &d).div_floor(&twice_d) + Int::one();
            let step = &z1 - &z0;
            let zm = &z0 + &m * &step;
            let zm1 = &zm + &step;
            let (xm, xm1) = if alt {
                if m.is_odd() {
                    (-zm, zm1)
                } else {
                    (zm, -zm1)
                }
            } else {
                (zm, zm1)
            };
            (m, xm, xm1)
        } else {
            let r = &a * &q - &p;
            (Int::one(), q.clone(), r)
        };
        match runs.last_mut() {
            Some((last, n)) if *last == a => *n += count,
            _ => runs.push((a, count)),
        }
        p = next_p;
        q = next_q;
    }
    Ok(runs)
}

/// The even integer `a` with `|p/q - a| < 1`. Exists and is unique when
/// `p + q` is odd: for non-integral `p/q` the window holds exactly `floor` and
/// `floor + 1`; for integral `p/q` (`q = +-1`) the value itself is even.
fn nearest_even_quotient(p: &Int, q: &Int) -> Int {
    let f = p.div_floor(q);
    if f.is_even() {
        f
    } else {
        f + Int::one()
    }
}

/// Exact value of an even continued fraction.
pub fn cf_eval(cf: &EvenCf) -> Rational {
    let mut it = cf.entries.iter().rev();
    let mut v = Rational::from_integer(it.next().expect("EvenCf is non-empty").clone());
    for a in it {
        // every tail of a valid even CF has |value| > 1
        assert!(!v.is_zero(), "tail of an even continued fraction evaluated to zero");
        v = Rational::from_integer(a.clone()) - v.recip();
    }
    v
}
