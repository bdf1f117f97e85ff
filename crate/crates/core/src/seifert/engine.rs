//! General formula for `delta(S, c)` on three-fiber data.
//!
//! After a rearrangement with `c(h) = 0`, `c(g_3) = 0` and
//! `c(g_1) + c(g_2) = 0`, write `Q = a_1 b_2 + a_2 b_1`, pick `(u_1, v_1)`
//! with `a_1 v_1 - b_1 u_1 = 1`, and set `P = a_2 v_1 + b_2 u_1`,
//! `c(m) = u_1 c(g_1) + v_1 c(h) + u_1 v_1`. Then
//!
//! ```text
//! delta = sgn(a_1 a_2 / Q + a_3 / b_3) + sigma(P, Q, (-1)^(c(m) - 1)) + sigma(a_3, b_3, -1)
//! ```

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{shift_parts, Fiber, SeifertData, SeifertError, SpinAssignment, PERMS3};
use crate::arith::{ext_gcd, int, parity, sgn_rational, Int, Rational, Sign};
use crate::sigma::sigma;

pub const DEFAULT_SEARCH_BOUND: i64 = 6;
pub const SEARCH_BOUND_ENV: &str = "SPINDEFECT_SEARCH_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `|c_i|` tried in shift moves.
    pub bound: i64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { bound: DEFAULT_SEARCH_BOUND }
    }
}

impl SearchConfig {
    /// Reads the bound from `SPINDEFECT_SEARCH_BOUND`, falling back to the default
    /// when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(SEARCH_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<i64>().ok())
            .filter(|b| *b >= 0)
            .map(|bound| SearchConfig { bound })
            .unwrap_or_default()
    }
}

/// A rearranged representative meeting the engine's conditions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Arrangement {
    pub perm: [usize; 3],
    #[serde(with = "crate::arith::json_int::vec")]
    pub shifts: Vec<Int>,
    pub fibers: Vec<Fiber>,
    pub cg: Vec<u8>,
    #[serde(with = "crate::arith::json_int")]
    pub delta: Int,
}

impl Arrangement {
    /// Re-evaluates the formula with `(u_1 + a_1 t, v_1 + b_1 t)` in place of
    /// the extended-gcd solution.
    pub fn evaluate_with_offset(&self, t: &Int) -> Result<Int, SeifertError> {
        evaluate(&self.fibers, &self.cg, t)
    }
}

/// The formula on a representative that already meets the conditions.
fn evaluate(f: &[Fiber], cg: &[u8], t: &Int) -> Result<Int, SeifertError> {
    let (a1, b1) = (&f[0].a, &f[0].b);
    let (a2, b2) = (&f[1].a, &f[1].b);
    let (a3, b3) = (&f[2].a, &f[2].b);
    let q = a1 * b2 + a2 * b1;
    // a1 x + (-b1) y = 1  gives  v1 = x, u1 = y
    let (g, x, y) = ext_gcd(a1, &-b1.clone());
    debug_assert!(g.is_one());
    let v1 = x + b1 * t;
    let u1 = y + a1 * t;
    debug_assert!((a1 * &v1 - b1 * &u1).is_one());
    let p = a2 * &v1 + b2 * &u1;
    let cm = (parity(&u1) * cg[0] + parity(&u1) * parity(&v1)) % 2;
    let eps_m = Sign::from_parity(cm + 1);
    let s0 = Rational::new(a1 * a2, q.clone()) + Rational::new(a3.clone(), b3.clone());
    let total = Int::from(sgn_rational(&s0)) + sigma(&p, &q, eps_m)? + sigma(a3, b3, Sign::Minus)?;
    Ok(total)
}

fn admissible(f: &[Fiber], cg: &[u8]) -> bool {
    if cg[2] != 0 || (cg[0] + cg[1]) % 2 != 0 {
        return false;
    }
    let q = &f[0].a * &f[1].b + &f[1].a * &f[0].b;
    if q.is_zero() || f[2].b.is_zero() {
        return false;
    }
    let s0 = Rational::new(&f[0].a * &f[1].a, q) + Rational::new(f[2].a.clone(), f[2].b.clone());
    !s0.is_zero()
}

/// Shift triples with `|c_i| <= bound`, `sum c_i = 0`, ordered by `sum |c_i|`
/// and then lexicographically.
fn shift_candidates(bound: i64) -> Vec<[i64; 3]> {
    let mut v = Vec::new();
    for c0 in -bound..=bound {
        for c1 in -bound..=bound {
            let c2 = -c0 - c1;
            if c2.abs() <= bound {
                v.push([c0, c1, c2]);
            }
        }
    }
    v.sort_by_key(|c| (c.iter().map(|x| x.abs()).sum::<i64>(), *c));
    v
}

fn check_input(s: &SeifertData, c: &SpinAssignment) -> Result<(), SeifertError> {
    if !s.has_three_exceptional() {
        return Err(SeifertError::NotThreeFibers);
    }
    c.validate(s)
}

/// Every arrangement within the search bound, each with its value.
pub fn engine_arrangements(s: &SeifertData, c: &SpinAssignment, cfg: &SearchConfig) -> Result<Vec<Arrangement>, SeifertError> {
    check_input(s, c)?;
    let mut out = Vec::new();
    if c.ch != 0 {
        return Ok(out);
    }
    for perm in PERMS3 {
        let fibers: Vec<Fiber> = perm.iter().map(|&i| s.fibers()[i].clone()).collect();
        let base = SpinAssignment { cg: perm.iter().map(|&i| c.cg[i]).collect(), ch: 0 };
        for sh in shift_candidates(cfg.bound) {
            let shifts: Vec<Int> = sh.iter().map(|&x| int(x)).collect();
            let (f2, cg2) = shift_parts(&fibers, &base, &shifts);
            if !admissible(&f2, &cg2) {
                continue;
            }
            let delta = evaluate(&f2, &cg2, &Int::zero())?;
            out.push(Arrangement { perm, shifts, fibers: f2, cg: cg2, delta });
        }
    }
    Ok(out)
}

/// `delta(S, c)` from the first admissible arrangement, with the bound taken
/// from the environment.
pub fn delta_engine(s: &SeifertData, c: &SpinAssignment) -> Result<Int, SeifertError> {
    delta_engine_with(s, c, &SearchConfig::from_env())
}

pub fn delta_engine_with(s: &SeifertData, c: &SpinAssignment, cfg: &SearchConfig) -> Result<Int, SeifertError> {
    check_input(s, c)?;
    if c.ch == 0 {
        for perm in PERMS3 {
            let fibers: Vec<Fiber> = perm.iter().map(|&i| s.fibers()[i].clone()).collect();
            let base = SpinAssignment { cg: perm.iter().map(|&i| c.cg[i]).collect(), ch: 0 };
            for sh in shift_candidates(cfg.bound) {
                let shifts: Vec<Int> = sh.iter().map(|&x| int(x)).collect();
                let (f2, cg2) = shift_parts(&fibers, &base, &shifts);
                if admissible(&f2, &cg2) {
                    return evaluate(&f2, &cg2, &Int::zero());
                }
            }
        }
    }
    Err(SeifertError::NoAdmissibleRearrangement { bound: cfg.bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::spin_enumerate;

    fn s(p: &[(i64, i64)]) -> SeifertData {
        SeifertData::from_pairs(p).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn poincare_sphere() {
        let d = s(&[(2, 1), (3, 1), (5, -4)]);
        let c = spin_enumerate(&d).remove(0);
        assert_eq!(delta_engine_with(&d, &c, &cfg()).unwrap(), int(-8));
    }

    #[test]
    fn dihedral_examples() {
        // (3,1) forces c(g_3) = 1, so c = (0,0,0) is not a spin structure there
        let d = s(&[(2, 1), (2, 1), (3, 1)]);
        assert!(delta_engine_with(&d, &SpinAssignment::new(vec![0, 0, 0], 0), &cfg()).is_err());
        let want = crate::sigma::sigma_i64(3, 2, Sign::Minus).unwrap() + 2;
        let d = s(&[(2, 1), (2, 1), (3, 2)]);
        assert_eq!(delta_engine_with(&d, &SpinAssignment::new(vec![0, 0, 0], 0), &cfg()).unwrap(), want);
        let d = s(&[(2, 1), (2, 1), (3, 1)]);
        assert_eq!(delta_engine_with(&d, &SpinAssignment::new(vec![0, 1, 1], 0), &cfg()).unwrap(), int(-3));

        let d = s(&[(2, 1), (2, 1), (2, -1)]);
        let c = SpinAssignment::new(vec![1, 0, 1], 0);
        assert_eq!(delta_engine_with(&d, &c, &cfg()).unwrap(), int(0));
    }

    #[test]
    fn all_arrangements_agree() {
        for d in [s(&[(2, 1), (3, 1), (5, -4)]), s(&[(2, 1), (3, 1), (4, 1)]), s(&[(2, 1), (2, 1), (5, 2)]), s(&[(2, -1), (3, 2), (3, -1)])] {
            for c in spin_enumerate(&d) {
                let all = engine_arrangements(&d, &c, &SearchConfig { bound: 3 }).unwrap();
                assert!(!all.is_empty(), "{d} {c}");
                for a in &all {
                    assert_eq!(a.delta, all[0].delta, "{d} {c}: {a:?}");
                    for t in -3..=3 {
                        assert_eq!(a.evaluate_with_offset(&int(t)).unwrap(), a.delta);
                    }
                }
            }
        }
    }

    #[test]
    fn bound_zero_may_fail() {
        let d = s(&[(2, 1), (3, 1), (5, -4)]);
        let c = spin_enumerate(&d).remove(0);
        let r = delta_engine_with(&d, &c, &SearchConfig { bound: 0 });
        match r {
            Ok(v) => assert_eq!(v, int(-8)),
            Err(e) => assert!(matches!(e, SeifertError::NoAdmissibleRearrangement { bound: 0 })),
        }
    }

    #[test]
    fn rejects_two_fibers() {
        let d = s(&[(2, 1), (3, 1)]);
        let c = spin_enumerate(&d).remove(0);
        assert!(matches!(delta_engine_with(&d, &c, &cfg()), Err(SeifertError::NotThreeFibers)));
    }
}
