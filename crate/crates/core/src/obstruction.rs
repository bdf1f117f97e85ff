//! 10/8-type constraints for closed spin V-manifolds built from cones
//! over spherical 3-manifolds.
//!
//! Everything goes through [`ten_eighths_verdict`]: for a closed spin
//! V-manifold `Z` with `b_1 = 0`, `ind D(Z) = -(sign Z + delta)/8` must be an
//! even integer and either vanish or lie in `[1 - b^-(Z), b^+(Z) - 1]`. A
//! non-zero first Betti number can be removed by spin surgery on loops
//! without changing `b^+`, `b^-` or the signature, so `b_1 = 0` is assumed.
//!
//! Verdicts only state consistency; they never assert that a manifold exists.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{Int, Sign};
use crate::seifert::{delta_lens, delta_seifert, spin_enumerate, SearchConfig, SeifertError, Target};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ObstructionError {
    #[error("b+ = {b_plus}, b- = {b_minus} must be non-negative")]
    NegativeBetti { b_plus: i64, b_minus: i64 },
    #[error("sign = {sign} differs from b+ - b- = {expected}")]
    SignMismatch { sign: i64, expected: i64 },
    #[error("square of the characteristic sphere must be positive, got {0}; reverse the orientation first")]
    NonPositiveSquare(i64),
    #[error("the ambient manifold needs b+ >= 1 to carry a sphere of positive square")]
    NoPositivePart,
    #[error("value {0} does not fit in 64 bits")]
    Overflow(String),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// Betti numbers of a 4-manifold with `b_1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourManifoldShape {
    pub b_plus: i64,
    pub b_minus: i64,
    pub sign: i64,
}

impl FourManifoldShape {
    pub fn new(b_plus: i64, b_minus: i64, sign: i64) -> Result<Self, ObstructionError> {
        if b_plus < 0 || b_minus < 0 {
            return Err(ObstructionError::NegativeBetti { b_plus, b_minus });
        }
        let expected = b_plus.checked_sub(b_minus).ok_or_else(|| ObstructionError::Overflow(format!("{b_plus} - {b_minus}")))?;
        if sign != expected {
            return Err(ObstructionError::SignMismatch { sign, expected });
        }
        Ok(FourManifoldShape { b_plus, b_minus, sign })
    }

    pub fn from_betti(b_plus: i64, b_minus: i64) -> Result<Self, ObstructionError> {
        let sign = b_plus.checked_sub(b_minus).ok_or_else(|| ObstructionError::Overflow(format!("{b_plus} - {b_minus}")))?;
        FourManifoldShape::new(b_plus, b_minus, sign)
    }

    /// The same manifold with reversed orientation.
    pub fn mirror(&self) -> Self {
        FourManifoldShape { b_plus: self.b_minus, b_minus: self.b_plus, sign: -self.sign }
    }
}

impl fmt::Display for FourManifoldShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b+={}, b-={}, sign={})", self.b_plus, self.b_minus, self.sign)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictStatus {
    ForcedEqual,
    RangeAdmissible,
    Excluded,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::ForcedEqual => "ForcedEqual",
            VerdictStatus::RangeAdmissible => "RangeAdmissible",
            VerdictStatus::Excluded => "Excluded",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TenEighthsVerdict {
    pub status: VerdictStatus,
    /// Index of the Dirac operator; `None` when `sign + delta` is not divisible by 16.
    pub ind: Option<i64>,
    pub residue_ok: bool,
}

impl TenEighthsVerdict {
    pub fn is_excluded(&self) -> bool {
        self.status == VerdictStatus::Excluded
    }
}

/// The kernel. `ind = 0` gives `ForcedEqual`, a non-zero index inside
/// `[1 - b^-, b^+ - 1]` gives `RangeAdmissible`, anything else (including a
/// failed mod-16 residue) gives `Excluded`.
pub fn ten_eighths_verdict(z: &FourManifoldShape, delta_total: i64) -> TenEighthsVerdict {
    let s = z.sign as i128 + delta_total as i128;
    if s.rem_euclid(16) != 0 {
        return TenEighthsVerdict { status: VerdictStatus::Excluded, ind: None, residue_ok: false };
    }
    let ind = -s / 8;
    let status = if ind == 0 {
        VerdictStatus::ForcedEqual
    } else if (1 - z.b_minus as i128) <= ind && ind <= z.b_plus as i128 - 1 {
        VerdictStatus::RangeAdmissible
    } else {
        VerdictStatus::Excluded
    };
    TenEighthsVerdict { status, ind: i64::try_from(ind).ok(), residue_ok: true }
}

/// Shape of `cS u (-Y)` for a spin filling `Y` of `(S, c)`.
pub fn filling_shape(y: &FourManifoldShape) -> FourManifoldShape {
    y.mirror()
}

/// Whether a spin `Y` with boundary `(S, c)` and `delta(S, c) = delta_s` is
/// consistent; `ForcedEqual` means `sign Y = delta_s`.
pub fn spin_filling_feasible(y: &FourManifoldShape, delta_s: i64) -> TenEighthsVerdict {
    ten_eighths_verdict(&filling_shape(y), delta_s)
}

/// Largest rank scanned by [`definite_filling_signature`].
pub const DEFINITE_SCAN_MAX: i64 = 64;

/// Bound below which a definite spin filling must have `sign = delta`.
pub const DEFINITE_FORCING_BOUND: i64 = 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefiniteForcing {
    pub delta: i64,
    /// `|delta| <= 18`.
    pub forced: bool,
    /// Definite shapes of rank `<= 64` with `sign != delta` that pass the kernel.
    pub survivors: Vec<FourManifoldShape>,
    /// Whether the consistent definite shapes all have `sign = delta`.
    pub scan_forces: bool,
}

pub fn definite_filling_signature(delta_s: i64) -> DefiniteForcing {
    let mut survivors = Vec::new();
    for b in 0..=DEFINITE_SCAN_MAX {
        for y in [FourManifoldShape { b_plus: b, b_minus: 0, sign: b }, FourManifoldShape { b_plus: 0, b_minus: b, sign: -b }] {
            if y.sign != delta_s && !spin_filling_feasible(&y, delta_s).is_excluded() && !survivors.contains(&y) {
                survivors.push(y);
            }
        }
    }
    DefiniteForcing {
        delta: delta_s,
        forced: delta_s.abs() <= DEFINITE_FORCING_BOUND,
        scan_forces: survivors.is_empty(),
        survivors,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CobordismCertificate {
    #[serde(with = "crate::arith::json_int")]
    pub delta: Int,
    /// `delta != 0`: no rational-homology-ball spin filling.
    pub bounds_no_acyclic: bool,
    /// The manifold has a unique spin structure (a Z/2 homology sphere).
    pub z2_homology_sphere: bool,
    /// Infinite order in the Z/2 homology cobordism group; only claimed for
    /// Z/2 homology spheres.
    pub infinite_order: bool,
}

pub fn cobordism_order_certificate(t: &Target) -> Result<CobordismCertificate, ObstructionError> {
    let (delta, z2) = match t {
        Target::Lens(l) => (delta_lens(l)?.delta, l.p.bit(0)),
        Target::Seifert(s, c) => (delta_seifert(s, c, &SearchConfig::from_env())?.delta, spin_enumerate(s).len() == 1),
    };
    let nonzero = delta != Int::from(0);
    Ok(CobordismCertificate { delta, bounds_no_acyclic: nonzero, z2_homology_sphere: z2, infinite_order: nonzero && z2 })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rp2Branch {
    pub eps: Sign,
    pub verdict: TenEighthsVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rp2Report {
    pub shape: FourManifoldShape,
    pub euler: i64,
    pub branches: Vec<Rp2Branch>,
    pub admissible_eps: Vec<Sign>,
    /// The only possible normal Euler numbers, `{sign - 2 eps}`, when `b^+ < 3`
    /// and `b^- < 3`.
    pub forced: Option<Vec<i64>>,
}

impl Rp2Report {
    pub fn admissible(&self) -> bool {
        !self.admissible_eps.is_empty()
    }
}

/// Characteristic `RP^2` with normal Euler number `e` in `X` (`H_1(X) = 0`).
/// For each `eps`, the double branched cover argument gives a spin
/// V-manifold with the shape of `X` and total defect `-(e + 2 eps)`.
pub fn rp2_embedding_check(x: &FourManifoldShape, e: i64) -> Rp2Report {
    let mut branches = Vec::new();
    let mut admissible_eps = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        let delta_total = -(e as i128 + 2 * eps.value() as i128);
        let verdict = match i64::try_from(delta_total) {
            Ok(d) => ten_eighths_verdict(x, d),
            Err(_) => TenEighthsVerdict { status: VerdictStatus::Excluded, ind: None, residue_ok: false },
        };
        if !verdict.is_excluded() {
            admissible_eps.push(eps);
        }
        branches.push(Rp2Branch { eps, verdict });
    }
    let forced = (x.b_plus < 3 && x.b_minus < 3).then(|| vec![x.sign - 2, x.sign + 2]);
    Rp2Report { shape: *x, euler: e, branches, admissible_eps, forced }
}

/// `X` contains a sphere of square `n > 0` representing a characteristic
/// class; removing its neighbourhood and coning `L(n, -1)` (with
/// `delta = -(n - 1)`) gives a spin V-manifold of shape `(b^+ - 1, b^-, sign - 1)`.
pub fn characteristic_sphere_check(x: &FourManifoldShape, n: i64) -> Result<(FourManifoldShape, TenEighthsVerdict), ObstructionError> {
    if n <= 0 {
        return Err(ObstructionError::NonPositiveSquare(n));
    }
    if x.b_plus == 0 {
        return Err(ObstructionError::NoPositivePart);
    }
    let shape = FourManifoldShape { b_plus: x.b_plus - 1, b_minus: x.b_minus, sign: x.sign - 1 };
    Ok((shape, ten_eighths_verdict(&shape, -(n - 1))))
}

/// Checked conversion for defects and Betti numbers coming from exact code.
pub fn to_i64(v: &Int) -> Result<i64, ObstructionError> {
    v.to_i64().ok_or_else(|| ObstructionError::Overflow(v.to_string()))
}

/// JSON/text report shared by the verdict-producing commands.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictReport {
    pub input: serde_json::Value,
    pub assembled_shape: FourManifoldShape,
    pub delta: i64,
    pub ind: Option<i64>,
    pub status: VerdictStatus,
    pub residue_ok: bool,
    pub citations: Vec<String>,
}

impl VerdictReport {
    pub fn new(input: serde_json::Value, shape: FourManifoldShape, delta: i64, v: &TenEighthsVerdict, citations: &[&str]) -> Self {
        VerdictReport {
            input,
            assembled_shape: shape,
            delta,
            ind: v.ind,
            status: v.status,
            residue_ok: v.residue_ok,
            citations: citations.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub const CITE_KERNEL: &str = "10/8 inequality for spin V-manifolds: ind D = -(sign + delta)/8 is 0 or in [1 - b-, b+ - 1]";
pub const CITE_B1: &str = "b1 = 0 assumed: spin surgery on loops kills b1 without changing b+, b-";
pub const CITE_FILLING: &str = "closed V-manifold: cone on (S, c) glued to -Y";
pub const CITE_RP2: &str = "double branched cover along a characteristic RP^2; sign - e = 2 eps (mod 16)";
pub const CITE_SPHERE: &str = "characteristic sphere of square n replaced by the cone on L(n, -1), delta = -(n - 1)";

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(bp: i64, bm: i64) -> FourManifoldShape {
        FourManifoldShape::from_betti(bp, bm).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let v = ten_eighths_verdict(&shape(0, 0), 0);
        assert_eq!((v.status, v.ind), (VerdictStatus::ForcedEqual, Some(0)));
        for d in [-48i64, -32, -16, 16, 32] {
            assert!(ten_eighths_verdict(&shape(2, 2), d).is_excluded(), "{d}");
        }
        let v = ten_eighths_verdict(&shape(0, 8), 8);
        assert_eq!((v.status, v.ind), (VerdictStatus::ForcedEqual, Some(0)));
        let v = ten_eighths_verdict(&shape(0, 0), 8);
        assert!(!v.residue_ok && v.ind.is_none() && v.is_excluded());
        let v = ten_eighths_verdict(&shape(3, 0), -19);
        assert_eq!((v.status, v.ind), (VerdictStatus::RangeAdmissible, Some(2)));
    }

    #[test]
    fn shape_validation() {
        assert!(FourManifoldShape::new(1, 0, 0).is_err());
        assert!(FourManifoldShape::new(-1, 0, -1).is_err());
        assert_eq!(shape(2, 5).mirror(), shape(5, 2));
    }

    #[test]
    fn filling_examples() {
        assert_eq!(spin_filling_feasible(&shape(0, 8), -8).status, VerdictStatus::ForcedEqual);
        let v = spin_filling_feasible(&shape(0, 24), -8);
        assert!(v.residue_ok && v.is_excluded());
        assert_eq!(spin_filling_feasible(&shape(0, 0), 0).status, VerdictStatus::ForcedEqual);
    }

    #[test]
    fn definite_forcing() {
        for d in -18..=18 {
            let r = definite_filling_signature(d);
            assert!(r.forced && r.scan_forces, "{d}: {:?}", r.survivors);
        }
        assert!(!definite_filling_signature(20).forced);
        assert_eq!(definite_filling_signature(20).survivors, vec![shape(4, 0)]);
        assert!(definite_filling_signature(26).survivors.contains(&shape(10, 0)));
        assert!(definite_filling_signature(-26).survivors.contains(&shape(0, 10)));
    }

    #[test]
    fn rp2_examples() {
        let s4 = shape(0, 0);
        let ok: Vec<i64> = (-40..=40).filter(|&e| rp2_embedding_check(&s4, e).admissible()).collect();
        assert_eq!(ok, vec![-2, 2]);
        assert_eq!(rp2_embedding_check(&s4, 2).admissible_eps, vec![Sign::Minus]);
        assert!(!rp2_embedding_check(&s4, 10).admissible());
        let cp2 = shape(1, 0);
        let ok: Vec<i64> = (-40..=40).filter(|&e| rp2_embedding_check(&cp2, e).admissible()).collect();
        assert_eq!(ok, vec![-1, 3]);
        assert_eq!(rp2_embedding_check(&cp2, 0).forced, Some(vec![-1, 3]));
    }

    #[test]
    fn sphere_examples() {
        let (sh, v) = characteristic_sphere_check(&shape(1, 0), 1).unwrap();
        assert_eq!(sh, shape(0, 0));
        assert_eq!((v.status, v.ind), (VerdictStatus::ForcedEqual, Some(0)));
        let (_, v) = characteristic_sphere_check(&shape(2, 0), 18).unwrap();
        assert!(v.is_excluded());
        for k in 1..=5 {
            let (_, v) = characteristic_sphere_check(&shape(k, 0), k).unwrap();
            assert!(!v.is_excluded(), "k={k}");
        }
        assert!(matches!(characteristic_sphere_check(&shape(1, 0), 0), Err(ObstructionError::NonPositiveSquare(0))));
        assert!(matches!(characteristic_sphere_check(&shape(0, 1), 1), Err(ObstructionError::NoPositivePart)));
    }
}
