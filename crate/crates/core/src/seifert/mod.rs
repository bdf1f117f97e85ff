//! Spherical Seifert manifolds over `S^2`, their spin structures, and `delta(S, c)`.
//!
//! A manifold is given by unnormalized Seifert invariants
//! `{(a_1, b_1), ..., (a_m, b_m)}` read off the standard framed link: a
//! 0-framed unknot with meridian `h` and `m` meridional circles of framing
//! `a_i / b_i` with meridians `g_i`. A spin structure is a homomorphism
//! `c` on the link complement to `Z/2`, recorded by `c(g_i)` and `c(h)`, with
//!
//! ```text
//! a_i c(g_i) + b_i c(h) = a_i b_i  (mod 2)   for every i
//! sum_i c(g_i)          = 0        (mod 2)
//! ```

mod delta;
mod engine;
mod table;

pub use delta::{delta, delta_lens, delta_seifert, DeltaReport, Target};
pub use engine::{delta_engine, delta_engine_with, engine_arrangements, Arrangement, SearchConfig, DEFAULT_SEARCH_BOUND, SEARCH_BOUND_ENV};
pub use table::{all_row_instances, classify, delta_table, Classification, DeltaCaseId, Family, RowParams};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{coprime, int, parity, Int, Rational, Sign};
use crate::sigma::SigmaError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeifertError {
    #[error("invalid fiber ({a},{b}): {reason}")]
    InvalidFiber { a: Int, b: Int, reason: &'static str },
    #[error("at most 3 fibers are supported, got {0}")]
    TooManyFibers(usize),
    #[error("rational Euler number vanishes; not a rational homology sphere")]
    DegenerateEuler,
    #[error("multiplicities {0:?} do not give a spherical manifold")]
    NotSpherical(Vec<Int>),
    #[error("operation needs exactly three exceptional fibers")]
    NotThreeFibers,
    #[error("spin data {0} does not satisfy the spin equations for {1}")]
    InvalidSpin(String, String),
    #[error("shifts must have one entry per fiber and sum to zero")]
    InvalidShift,
    #[error("no table row matches {0}")]
    UnrecognizedForm(String),
    #[error("no rearrangement with |c_i| <= {bound} satisfies the engine conditions")]
    NoAdmissibleRearrangement { bound: i64 },
    #[error("row {row}: parameter out of range ({detail})")]
    ParamOutOfRange { row: String, detail: String },
    #[error("table gives {table} but the engine gives {engine} for {input}")]
    InternalDisagreement { table: Int, engine: Int, input: String },
    #[error("lens space L({p},{q}) needs p >= 1 and gcd(p,q) = 1")]
    InvalidLens { p: Int, q: Int },
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error(transparent)]
    Sigma(#[from] SigmaError),
}

/// One Seifert pair `(a, b)`: multiplicity `a >= 1` and framing numerator `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fiber {
    #[serde(with = "crate::arith::json_int")]
    pub a: Int,
    #[serde(with = "crate::arith::json_int")]
    pub b: Int,
}

impl Fiber {
    pub fn new(a: Int, b: Int) -> Result<Self, SeifertError> {
        if !a.is_positive() {
            return Err(SeifertError::InvalidFiber { a, b, reason: "multiplicity must be positive" });
        }
        if !coprime(&a, &b) {
            return Err(SeifertError::InvalidFiber { a, b, reason: "a and b must be coprime" });
        }
        Ok(Fiber { a, b })
    }

    pub fn small(a: i64, b: i64) -> Self {
        Fiber::new(int(a), int(b)).expect("valid fiber")
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertData {
    fibers: Vec<Fiber>,
}

impl SeifertData {
    pub fn new(fibers: Vec<Fiber>) -> Result<Self, SeifertError> {
        if fibers.len() > 3 {
            return Err(SeifertError::TooManyFibers(fibers.len()));
        }
        let s = SeifertData { fibers };
        if s.euler().is_zero() {
            return Err(SeifertError::DegenerateEuler);
        }
        let mut mult: Vec<Int> = s.fibers.iter().map(|f| f.a.clone()).filter(|a| *a > Int::one()).collect();
        mult.sort();
        if mult.len() == 3 {
            // sum 1/a_i > 1
            let inv: Rational = mult.iter().map(|a| Rational::new(Int::one(), a.clone())).sum();
            if inv <= Rational::one() {
                return Err(SeifertError::NotSpherical(mult));
            }
        }
        Ok(s)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, SeifertError> {
        let fibers = pairs.iter().map(|&(a, b)| Fiber::new(int(a), int(b))).collect::<Result<Vec<_>, _>>()?;
        SeifertData::new(fibers)
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Rational Euler number `e = -sum b_i / a_i`.
    pub fn euler(&self) -> Rational {
        -self.fibers.iter().map(|f| Rational::new(f.b.clone(), f.a.clone())).sum::<Rational>()
    }

    /// Multiplicities `a_i >= 2`, sorted.
    pub fn multiplicities(&self) -> Vec<Int> {
        let mut m: Vec<Int> = self.fibers.iter().map(|f| f.a.clone()).filter(|a| *a > Int::one()).collect();
        m.sort();
        m
    }

    /// True when every fiber is exceptional and there are three of them.
    pub fn has_three_exceptional(&self) -> bool {
        self.fibers.len() == 3 && self.fibers.iter().all(|f| f.a > Int::one())
    }

    pub fn family(&self) -> Family {
        let m = self.multiplicities();
        let small: Vec<i64> = m.iter().map(|a| if *a > int(5) { 6 } else { a.to_string().parse().unwrap() }).collect();
        match small.as_slice() {
            [2, 2, _] => Family::Dihedral,
            [2, 3, 3] => Family::Tetrahedral,
            [2, 3, 4] => Family::Octahedral,
            [2, 3, 5] => Family::Icosahedral,
            _ => Family::Lens,
        }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.fibers.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for SeifertData {
    type Err = SeifertError;

    /// Parses `"(a1,b1),(a2,b2),(a3,b3)"`; braces around the list are optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        let mut fibers = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| parse_err(rest, "expected `(`"))?;
            if !rest[..open].trim().trim_matches(',').trim().is_empty() {
                return Err(parse_err(&rest[..open], "unexpected text between pairs"));
            }
            let close = rest[open..].find(')').ok_or_else(|| parse_err(&rest[open..], "missing `)`"))? + open;
            let inner = &rest[open + 1..close];
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(parse_err(&rest[open..=close], "expected a pair (a,b)"));
            }
            let a = parse_int(parts[0])?;
            let b = parse_int(parts[1])?;
            fibers.push(Fiber::new(a, b)?);
            rest = rest[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        if fibers.is_empty() {
            return Err(parse_err(s, "no Seifert pairs"));
        }
        SeifertData::new(fibers)
    }
}

pub(crate) fn parse_int(tok: &str) -> Result<Int, SeifertError> {
    let t = tok.trim().replace('\u{2212}', "-");
    let t = t.strip_prefix('+').unwrap_or(&t);
    Int::from_str(t).map_err(|_| parse_err(tok, "not an integer"))
}

pub(crate) fn parse_err(token: &str, reason: &str) -> SeifertError {
    SeifertError::Parse { token: token.trim().to_string(), reason: reason.to_string() }
}

/// Values `c(g_i)` and `c(h)` in `Z/2` of a spin structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinAssignment {
    pub cg: Vec<u8>,
    pub ch: u8,
}

impl SpinAssignment {
    pub fn new(cg: Vec<u8>, ch: u8) -> Self {
        SpinAssignment { cg: cg.into_iter().map(|x| x % 2).collect(), ch: ch % 2 }
    }

    pub fn is_valid_for(&self, s: &SeifertData) -> bool {
        if self.cg.len() != s.fibers.len() {
            return false;
        }
        let fibers_ok = s.fibers.iter().zip(&self.cg).all(|(f, &g)| {
            let lhs = parity(&f.a) * g + parity(&f.b) * self.ch;
            lhs % 2 == parity(&(&f.a * &f.b))
        });
        fibers_ok && self.cg.iter().map(|&x| x as u32).sum::<u32>() % 2 == 0
    }

    pub fn validate(&self, s: &SeifertData) -> Result<(), SeifertError> {
        if self.is_valid_for(s) {
            Ok(())
        } else {
            Err(SeifertError::InvalidSpin(self.to_string(), s.to_string()))
        }
    }
}

impl fmt::Display for SpinAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.cg.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ";{})", self.ch)
    }
}

impl FromStr for SpinAssignment {
    type Err = SeifertError;

    /// Parses `"cg1,cg2,cg3[;ch]"`, `ch` defaulting to 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (g, h) = match body.split_once(';') {
            Some((g, h)) => (g, Some(h)),
            None => (body, None),
        };
        let bit = |t: &str| -> Result<u8, SeifertError> {
            match t.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(parse_err(other, "spin values must be 0 or 1")),
            }
        };
        let cg = g.split(',').map(bit).collect::<Result<Vec<_>, _>>()?;
        let ch = h.map(bit).transpose()?.unwrap_or(0);
        Ok(SpinAssignment { cg, ch })
    }
}

/// `L(p, q)` with the spin structure selected by `eps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    #[serde(with = "crate::arith::json_int")]
    pub p: Int,
    #[serde(with = "crate::arith::json_int")]
    pub q: Int,
    pub eps: Sign,
}

impl LensSpace {
    pub fn new(p: Int, q: Int, eps: Sign) -> Result<Self, SeifertError> {
        if !p.is_positive() || !coprime(&p, &q) {
            return Err(SeifertError::InvalidLens { p, q });
        }
        if !crate::sigma::is_spin_sign(&q, &p, eps) {
            return Err(SigmaError::Inadmissible { q, p, eps }.into());
        }
        Ok(LensSpace { p, q, eps })
    }

    /// All spin structures: both signs for even `p`, the single admissible
    /// one `(-1)^(q-1)` for odd `p`.
    pub fn spin_signs(p: &Int, q: &Int) -> Vec<Sign> {
        [Sign::Minus, Sign::Plus]
            .into_iter()
            .filter(|&e| crate::sigma::is_spin_sign(q, p, e))
            .collect()
    }

    /// Same manifold and spin structure with `0 <= q < p`, using
    /// `L(p, q + c p)` with sign `(-1)^c e`.
    pub fn normalized(&self) -> LensSpace {
        let (c, r) = self.q.div_mod_floor(&self.p);
        LensSpace { p: self.p.clone(), q: r, eps: self.eps.flip_by(&c) }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{}) eps={}", self.p, self.q, self.eps)
    }
}

/// All solutions of the spin equations, ordered lexicographically by `(ch, cg)`.
pub fn spin_enumerate(s: &SeifertData) -> Vec<SpinAssignment> {
    let m = s.fibers.len();
    let mut out = Vec::new();
    for ch in 0..2u8 {
        for bits in 0..(1u32 << m) {
            // most significant bit first gives lexicographic order on cg
            let cg: Vec<u8> = (0..m).map(|i| ((bits >> (m - 1 - i)) & 1) as u8).collect();
            let c = SpinAssignment { cg, ch };
            if c.is_valid_for(s) {
                out.push(c);
            }
        }
    }
    out
}

/// Replaces `g_i` by `g_i + c_i h` (with `sum c_i = 0`): the fibers become
/// `(a_i, b_i - a_i c_i)` and `c(g_i') = c(g_i) + c_i c(h) + c_i`.
pub fn shift_move(s: &SeifertData, c: &SpinAssignment, shifts: &[Int]) -> Result<(SeifertData, SpinAssignment), SeifertError> {
    if shifts.len() != s.fibers.len() || !shifts.iter().sum::<Int>().is_zero() {
        return Err(SeifertError::InvalidShift);
    }
    let (fibers, cg) = shift_parts(&s.fibers, c, shifts);
    Ok((SeifertData { fibers }, SpinAssignment { cg, ch: c.ch }))
}

pub(crate) fn shift_parts(fibers: &[Fiber], c: &SpinAssignment, shifts: &[Int]) -> (Vec<Fiber>, Vec<u8>) {
    let new_fibers = fibers
        .iter()
        .zip(shifts)
        .map(|(f, k)| Fiber { a: f.a.clone(), b: &f.b - &f.a * k })
        .collect();
    let cg = c
        .cg
        .iter()
        .zip(shifts)
        .map(|(&g, k)| (g + parity(k) * c.ch + parity(k)) % 2)
        .collect();
    (new_fibers, cg)
}

/// `-S` with the spin structure given by the same homomorphism.
pub fn reverse_orientation(s: &SeifertData, c: &SpinAssignment) -> (SeifertData, SpinAssignment) {
    let fibers = s.fibers.iter().map(|f| Fiber { a: f.a.clone(), b: -f.b.clone() }).collect();
    (SeifertData { fibers }, c.clone())
}

/// Reorders fibers (and spin values) as `new[i] = old[perm[i]]`.
pub fn permute(s: &SeifertData, c: &SpinAssignment, perm: &[usize]) -> (SeifertData, SpinAssignment) {
    let fibers = perm.iter().map(|&i| s.fibers[i].clone()).collect();
    let cg = perm.iter().map(|&i| c.cg[i]).collect();
    (SeifertData { fibers }, SpinAssignment { cg, ch: c.ch })
}

pub(crate) const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
