//! Closed-form values of `delta` by family and row.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{shift_parts, Fiber, LensSpace, SeifertData, SeifertError, SpinAssignment, PERMS3};
use crate::arith::{coprime, int, Int, Sign};
use crate::sigma::sigma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Lens,
    #[serde(rename = "D(2,2,n)")]
    Dihedral,
    #[serde(rename = "T(2,3,3)")]
    Tetrahedral,
    #[serde(rename = "O(2,3,4)")]
    Octahedral,
    #[serde(rename = "I(2,3,5)")]
    Icosahedral,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lens => "Lens",
            Family::Dihedral => "D(2,2,n)",
            Family::Tetrahedral => "T(2,3,3)",
            Family::Octahedral => "O(2,3,4)",
            Family::Icosahedral => "I(2,3,5)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum RowParams {
    Lens {
        #[serde(with = "crate::arith::json_int")]
        p: Int,
        #[serde(with = "crate::arith::json_int")]
        q: Int,
        eps: Sign,
    },
    Dihedral {
        #[serde(with = "crate::arith::json_int")]
        n: Int,
        #[serde(with = "crate::arith::json_int")]
        b: Int,
        /// `c(g_1)` in the rows whose spin column is `(e, 1 - e, 1)`.
        #[serde(skip_serializing_if = "Option::is_none")]
        e: Option<u8>,
    },
    Platonic {
        #[serde(with = "crate::arith::json_int")]
        k: Int,
        #[serde(skip_serializing_if = "Option::is_none")]
        eps: Option<Sign>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DeltaCaseId {
    pub family: Family,
    /// Row label, e.g. `"2-5"`, `"4-13"`, `"5-11-ε"`; `"1"` for lens spaces.
    pub row: String,
    pub params: RowParams,
}

impl DeltaCaseId {
    pub fn lens(l: &LensSpace) -> Self {
        let l = l.normalized();
        DeltaCaseId { family: Family::Lens, row: "1".into(), params: RowParams::Lens { p: l.p, q: l.q, eps: l.eps } }
    }

    pub fn dihedral(row: &str, n: i64, b: i64, e: Option<u8>) -> Self {
        DeltaCaseId { family: Family::Dihedral, row: row.into(), params: RowParams::Dihedral { n: int(n), b: int(b), e } }
    }

    /// A row of families 3, 4 or 5; the family is read off the label.
    pub fn platonic(row: &str, k: i64, eps: Option<Sign>) -> Self {
        let family = match row.as_bytes().first() {
            Some(b'3') => Family::Tetrahedral,
            Some(b'4') => Family::Octahedral,
            _ => Family::Icosahedral,
        };
        DeltaCaseId { family, row: row.into(), params: RowParams::Platonic { k: int(k), eps } }
    }

    /// Label with any `ε` replaced by its value, e.g. `5-11-(-1)`.
    pub fn label(&self) -> String {
        match &self.params {
            RowParams::Platonic { eps: Some(e), .. } => {
                let v = if *e == Sign::Plus { "1" } else { "(-1)" };
                self.row.replace('ε', v)
            }
            _ => self.row.clone(),
        }
    }

    /// The Seifert data and spin structure the row describes.
    pub fn instance(&self) -> Result<(SeifertData, SpinAssignment), SeifertError> {
        match &self.params {
            RowParams::Lens { .. } => Err(SeifertError::NotThreeFibers),
            RowParams::Dihedral { n, b, e } => {
                let row = dihedral_row(&self.row)?;
                check_dihedral(&self.row, row, n, b, *e)?;
                let s = SeifertData::new(vec![Fiber::small(2, 1), Fiber::small(2, 1), Fiber::new(n.clone(), b.clone())?])?;
                let cg = match (row.cg, e) {
                    (Some(cg), _) => cg.to_vec(),
                    (None, Some(e)) => vec![*e, 1 - *e, 1],
                    (None, None) => unreachable!("checked above"),
                };
                Ok((s, SpinAssignment { cg, ch: 0 }))
            }
            RowParams::Platonic { k, eps } => {
                let row = platonic_row(&self.row)?;
                check_platonic(&self.row, row, k, *eps)?;
                let t = if row.template_a { 1 } else { -1 };
                let b3 = row.b3(k, *eps);
                let s = SeifertData::new(vec![Fiber::small(2, t), Fiber::small(3, t), Fiber::new(int(row.a3), b3)?])?;
                let c = match row.cg {
                    Some(cg) => SpinAssignment { cg: cg.to_vec(), ch: 0 },
                    None => {
                        let v = super::spin_enumerate(&s);
                        debug_assert_eq!(v.len(), 1);
                        v.into_iter().next().ok_or_else(|| SeifertError::UnrecognizedForm(s.to_string()))?
                    }
                };
                c.validate(&s)?;
                Ok((s, c))
            }
        }
    }
}

impl fmt::Display for DeltaCaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())?;
        match &self.params {
            RowParams::Lens { p, q, eps } => write!(f, " p={p} q={q} eps={eps}"),
            RowParams::Dihedral { n, b, e } => {
                write!(f, " n={n} b={b}")?;
                if let Some(e) = e {
                    write!(f, " e={e}")?;
                }
                Ok(())
            }
            RowParams::Platonic { k, .. } => write!(f, " k={k}"),
        }
    }
}

/// A matched row plus whether it was reached through `-S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub id: DeltaCaseId,
    pub reversed: bool,
}

#[derive(Clone, Copy, Debug)]
struct DihedralRow {
    label: &'static str,
    n_odd: bool,
    b_range: BRange,
    cg: Option<[u8; 3]>,
    uses_n_plus_b: bool,
    offset: i64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum BRange {
    /// `-n < b < 0`
    Negative,
    /// `b > 0`
    Positive,
    /// `n + b > 0`
    AboveMinusN,
}

const DIHEDRAL: [DihedralRow; 10] = [
    DihedralRow { label: "2-1", n_odd: true, b_range: BRange::Negative, cg: Some([0, 0, 0]), uses_n_plus_b: false, offset: 0 },
    DihedralRow { label: "2-2", n_odd: true, b_range: BRange::Negative, cg: Some([1, 1, 0]), uses_n_plus_b: false, offset: -4 },
    DihedralRow { label: "2-3", n_odd: true, b_range: BRange::Positive, cg: Some([0, 0, 0]), uses_n_plus_b: false, offset: 2 },
    DihedralRow { label: "2-4", n_odd: true, b_range: BRange::Positive, cg: Some([1, 1, 0]), uses_n_plus_b: false, offset: -2 },
    DihedralRow { label: "2-5", n_odd: true, b_range: BRange::AboveMinusN, cg: None, uses_n_plus_b: true, offset: 0 },
    DihedralRow { label: "2-6", n_odd: false, b_range: BRange::Negative, cg: Some([0, 0, 0]), uses_n_plus_b: false, offset: 0 },
    DihedralRow { label: "2-7", n_odd: false, b_range: BRange::Negative, cg: Some([1, 1, 0]), uses_n_plus_b: false, offset: -4 },
    DihedralRow { label: "2-8", n_odd: false, b_range: BRange::Positive, cg: Some([0, 0, 0]), uses_n_plus_b: false, offset: 2 },
    DihedralRow { label: "2-9", n_odd: false, b_range: BRange::Positive, cg: Some([1, 1, 0]), uses_n_plus_b: false, offset: -2 },
    DihedralRow { label: "2-10", n_odd: false, b_range: BRange::AboveMinusN, cg: None, uses_n_plus_b: true, offset: 0 },
];

#[derive(Clone, Copy, Debug)]
struct PlatonicRow {
    label: &'static str,
    /// First two fibers `(2,1),(3,1)` with `k >= 0`; otherwise `(2,-1),(3,-1)` with `k < 0`.
    template_a: bool,
    a3: i64,
    k_coef: i64,
    offset: i64,
    eps_coef: i64,
    cg: Option<[u8; 3]>,
    delta: i64,
}

impl PlatonicRow {
    fn b3(&self, k: &Int, eps: Option<Sign>) -> Int {
        let e = eps.map_or(0, Sign::value);
        k * self.k_coef + int(self.offset + self.eps_coef * e)
    }

    fn k_ok(&self, k: &Int) -> bool {
        if self.template_a {
            !k.is_negative()
        } else {
            k.is_negative()
        }
    }
}

const fn pr(label: &'static str, template_a: bool, a3: i64, k_coef: i64, offset: i64, eps_coef: i64, cg: Option<[u8; 3]>, delta: i64) -> PlatonicRow {
    PlatonicRow { label, template_a, a3, k_coef, offset, eps_coef, cg, delta }
}

const C110: Option<[u8; 3]> = Some([1, 1, 0]);
const C011: Option<[u8; 3]> = Some([0, 1, 1]);

const PLATONIC: [PlatonicRow; 34] = [
    pr("3-1", true, 3, 6, 2, 0, None, -2),
    pr("3-2", false, 3, -6, -2, 0, None, 0),
    pr("3-3", true, 3, 6, -2, 0, None, -6),
    pr("3-4", false, 3, -6, 2, 0, None, 4),
    pr("3-5", true, 3, 6, 1, 0, None, -4),
    pr("3-6", false, 3, -6, -1, 0, None, 2),
    pr("4-1", true, 4, 8, 1, 0, C110, -3),
    pr("4-2", true, 4, 8, 1, 0, C011, -5),
    pr("4-3", false, 4, -8, -1, 0, C110, 1),
    pr("4-4", false, 4, -8, -1, 0, C011, 3),
    pr("4-5", true, 4, 8, -1, 0, C110, -5),
    pr("4-6", true, 4, 8, -1, 0, C011, 1),
    pr("4-7", false, 4, -8, 1, 0, C110, 3),
    pr("4-8", false, 4, -8, 1, 0, C011, -3),
    pr("4-9", true, 4, 8, 3, 0, C110, -1),
    pr("4-10", true, 4, 8, 3, 0, C011, -3),
    pr("4-11", false, 4, -8, -3, 0, C110, -1),
    pr("4-12", false, 4, -8, -3, 0, C011, 1),
    pr("4-13", true, 4, 8, -3, 0, C110, -7),
    pr("4-14", true, 4, 8, -3, 0, C011, -1),
    pr("4-15", false, 4, -8, 3, 0, C110, 5),
    pr("4-16", false, 4, -8, 3, 0, C011, -1),
    pr("5-1-ε", true, 5, 10, 0, 2, None, -4),
    pr("5-2-ε", false, 5, -10, 0, -2, None, 2),
    pr("5-3", true, 5, 10, 4, 0, None, 0),
    pr("5-4", false, 5, -10, -4, 0, None, -2),
    pr("5-5", true, 5, 10, -4, 0, None, -8),
    pr("5-6", false, 5, -10, 4, 0, None, 6),
    pr("5-7", true, 5, 10, 1, 0, None, -6),
    pr("5-8", false, 5, -10, -1, 0, None, 4),
    pr("5-9", true, 5, 10, -1, 0, None, 2),
    pr("5-10", false, 5, -10, 1, 0, None, -4),
    pr("5-11-ε", true, 5, 10, 0, 3, None, -2),
    pr("5-12-ε", false, 5, -10, 0, -3, None, 0),
];

fn dihedral_row(label: &str) -> Result<&'static DihedralRow, SeifertError> {
    DIHEDRAL.iter().find(|r| r.label == label).ok_or_else(|| unknown_row(label))
}

fn platonic_row(label: &str) -> Result<&'static PlatonicRow, SeifertError> {
    PLATONIC.iter().find(|r| r.label == label).ok_or_else(|| unknown_row(label))
}

fn unknown_row(label: &str) -> SeifertError {
    SeifertError::ParamOutOfRange { row: label.to_string(), detail: "no such row".into() }
}

fn out_of_range(row: &str, detail: String) -> SeifertError {
    SeifertError::ParamOutOfRange { row: row.to_string(), detail }
}

fn check_dihedral(label: &str, row: &DihedralRow, n: &Int, b: &Int, e: Option<u8>) -> Result<(), SeifertError> {
    if *n < int(2) {
        return Err(out_of_range(label, format!("n = {n} < 2")));
    }
    if !coprime(n, b) {
        return Err(out_of_range(label, format!("gcd(n, b) != 1 for n = {n}, b = {b}")));
    }
    if n.is_odd() != row.n_odd {
        return Err(out_of_range(label, format!("n = {n} has the wrong parity")));
    }
    if row.n_odd {
        let b_even_needed = row.b_range != BRange::AboveMinusN;
        if b.is_even() != b_even_needed {
            return Err(out_of_range(label, format!("b = {b} has the wrong parity")));
        }
    }
    let ok = match row.b_range {
        BRange::Negative => b.is_negative() && (n + b).is_positive(),
        BRange::Positive => b.is_positive(),
        BRange::AboveMinusN => (n + b).is_positive(),
    };
    if !ok {
        return Err(out_of_range(label, format!("b = {b} outside the row's range for n = {n}")));
    }
    match (row.cg, e) {
        (None, Some(0 | 1)) | (Some(_), None) => Ok(()),
        (None, _) => Err(out_of_range(label, "row needs e in {0, 1}".into())),
        (Some(_), Some(_)) => Err(out_of_range(label, "row takes no e".into())),
    }
}

fn check_platonic(label: &str, row: &PlatonicRow, k: &Int, eps: Option<Sign>) -> Result<(), SeifertError> {
    if !row.k_ok(k) {
        let need = if row.template_a { "k >= 0" } else { "k < 0" };
        return Err(out_of_range(label, format!("k = {k}, need {need}")));
    }
    match (row.eps_coef != 0, eps) {
        (true, Some(_)) | (false, None) => Ok(()),
        (true, None) => Err(out_of_range(label, "row needs a sign".into())),
        (false, Some(_)) => Err(out_of_range(label, "row takes no sign".into())),
    }
}

/// The tabulated `delta` for a row.
pub fn delta_table(id: &DeltaCaseId) -> Result<Int, SeifertError> {
    match &id.params {
        RowParams::Lens { p, q, eps } => {
            if id.family != Family::Lens {
                return Err(unknown_row(&id.row));
            }
            let l = LensSpace::new(p.clone(), q.clone(), *eps)?;
            Ok(sigma(&l.q, &l.p, l.eps)?)
        }
        RowParams::Dihedral { n, b, e } => {
            let row = dihedral_row(&id.row)?;
            check_dihedral(&id.row, row, n, b, *e)?;
            let s = if row.uses_n_plus_b { sigma(n, &(n + b), Sign::Minus)? } else { sigma(n, b, Sign::Minus)? };
            Ok(s + int(row.offset))
        }
        RowParams::Platonic { k, eps } => {
            let row = platonic_row(&id.row)?;
            check_platonic(&id.row, row, k, *eps)?;
            Ok(int(row.delta))
        }
    }
}

/// Finds the row describing `(S, c)`.
///
/// When `e(S) < 0` the data is matched directly; otherwise `-S` is matched
/// and `reversed` is set, so that `delta(S, c) = -delta_table(id)`. Each
/// permutation is tried; the shifts taking the first two fibers to the
/// row's fixed pairs are solved for exactly, and the third fiber and the
/// transported spin values are compared with the row.
pub fn classify(s: &SeifertData, c: &SpinAssignment) -> Result<Classification, SeifertError> {
    if !s.has_three_exceptional() {
        return Err(SeifertError::NotThreeFibers);
    }
    c.validate(s)?;
    let reversed = s.euler().is_positive();
    let (s, c) = if reversed { super::reverse_orientation(s, c) } else { (s.clone(), c.clone()) };
    if c.ch != 0 {
        return Err(SeifertError::UnrecognizedForm(format!("{s} {c}")));
    }
    for perm in PERMS3 {
        let fibers: Vec<Fiber> = perm.iter().map(|&i| s.fibers()[i].clone()).collect();
        let base = SpinAssignment { cg: perm.iter().map(|&i| c.cg[i]).collect(), ch: 0 };
        if let Some(id) = match_dihedral(&fibers, &base) {
            return Ok(Classification { id, reversed });
        }
        for t in [1i64, -1] {
            let Some((f, cg)) = normalize_to(&fibers, &base, [(2, t), (3, t)]) else { continue };
            if let Some(id) = match_platonic(&f, &cg, t == 1) {
                return Ok(Classification { id, reversed });
            }
        }
    }
    Err(SeifertError::UnrecognizedForm(format!("{s} {c}")))
}

/// Shifts the first two fibers to the given pairs, or `None` when the
/// multiplicities differ or the framings are not congruent.
fn normalize_to(fibers: &[Fiber], c: &SpinAssignment, fixed: [(i64, i64); 2]) -> Option<(Vec<Fiber>, Vec<u8>)> {
    let mut shifts = Vec::with_capacity(3);
    for (f, (a, b)) in fibers.iter().zip(fixed) {
        if f.a != int(a) {
            return None;
        }
        let (k, r) = (&f.b - int(b)).div_rem(&f.a);
        if !r.is_zero() {
            return None;
        }
        shifts.push(k);
    }
    let last = -(&shifts[0] + &shifts[1]);
    shifts.push(last);
    Some(shift_parts(fibers, c, &shifts))
}

fn match_dihedral(fibers: &[Fiber], c: &SpinAssignment) -> Option<DeltaCaseId> {
    let (f, cg) = normalize_to(fibers, c, [(2, 1), (2, 1)])?;
    let (n, b) = (&f[2].a, &f[2].b);
    for row in &DIHEDRAL {
        let e = match row.cg {
            Some(pattern) if pattern[..] == cg[..] => None,
            Some(_) => continue,
            None if cg[2] == 1 && (cg[0] + cg[1]) % 2 == 1 => Some(cg[0]),
            None => continue,
        };
        if check_dihedral(row.label, row, n, b, e).is_ok() {
            return Some(DeltaCaseId { family: Family::Dihedral, row: row.label.into(), params: RowParams::Dihedral { n: n.clone(), b: b.clone(), e } });
        }
    }
    None
}

fn match_platonic(f: &[Fiber], cg: &[u8], template_a: bool) -> Option<DeltaCaseId> {
    for row in PLATONIC.iter().filter(|r| r.template_a == template_a && int(r.a3) == f[2].a) {
        if let Some(pattern) = row.cg {
            if pattern[..] != *cg {
                continue;
            }
        }
        let signs: &[Option<Sign>] = if row.eps_coef == 0 { &[None] } else { &[Some(Sign::Plus), Some(Sign::Minus)] };
        for &eps in signs {
            let rest = &f[2].b - int(row.eps_coef * eps.map_or(0, Sign::value) + row.offset);
            let (k, r) = rest.div_rem(&int(row.k_coef));
            if r.is_zero() && row.k_ok(&k) {
                return Some(DeltaCaseId::platonic(row.label, 0, eps).with_k(k));
            }
        }
    }
    None
}

impl DeltaCaseId {
    fn with_k(mut self, k: Int) -> Self {
        if let RowParams::Platonic { k: slot, .. } = &mut self.params {
            *slot = k;
        }
        self
    }
}

/// Every row instance with `|k| <= kmax` inside the row's range, and for
/// family 2 every `2 <= n <= nmax` with `-n < b <= 2n` meeting the row's
/// conditions.
pub fn all_row_instances(kmax: i64, nmax: i64) -> Vec<DeltaCaseId> {
    let mut out = Vec::new();
    for row in &DIHEDRAL {
        for n in 2..=nmax {
            for b in (-n + 1)..=(2 * n) {
                let es: &[Option<u8>] = if row.cg.is_some() { &[None] } else { &[Some(0), Some(1)] };
                for &e in es {
                    if check_dihedral(row.label, row, &int(n), &int(b), e).is_ok() {
                        out.push(DeltaCaseId::dihedral(row.label, n, b, e));
                    }
                }
            }
        }
    }
    for row in &PLATONIC {
        for k in -kmax..=kmax {
            if !row.k_ok(&int(k)) {
                continue;
            }
            let signs: &[Option<Sign>] = if row.eps_coef == 0 { &[None] } else { &[Some(Sign::Plus), Some(Sign::Minus)] };
            for &eps in signs {
                out.push(DeltaCaseId::platonic(row.label, k, eps));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::{delta_engine_with, reverse_orientation, shift_move, spin_enumerate, SearchConfig};

    fn s(p: &[(i64, i64)]) -> SeifertData {
        SeifertData::from_pairs(p).unwrap()
    }

    #[test]
    fn printed_constants() {
        let cases = [
            ("3-1", 0, -2),
            ("3-3", 2, -6),
            ("4-13", 0, -7),
            ("5-5", 0, -8),
            ("5-9", 1, 2),
            ("4-16", -1, -1),
        ];
        for (row, k, want) in cases {
            assert_eq!(delta_table(&DeltaCaseId::platonic(row, k, None)).unwrap(), int(want), "{row}");
        }
        let id = DeltaCaseId::dihedral("2-5", 3, 1, Some(0));
        assert_eq!(delta_table(&id).unwrap(), int(-3));
    }

    #[test]
    fn range_errors() {
        assert!(matches!(delta_table(&DeltaCaseId::platonic("3-1", -1, None)), Err(SeifertError::ParamOutOfRange { .. })));
        assert!(matches!(delta_table(&DeltaCaseId::platonic("3-2", 0, None)), Err(SeifertError::ParamOutOfRange { .. })));
        assert!(delta_table(&DeltaCaseId::platonic("5-1-ε", 0, None)).is_err());
        assert!(delta_table(&DeltaCaseId::dihedral("2-1", 3, 2, None)).is_err());
        assert!(delta_table(&DeltaCaseId::dihedral("2-1", 4, -1, None)).is_err());
        assert!(delta_table(&DeltaCaseId::platonic("9-9", 0, None)).is_err());
    }

    #[test]
    fn classify_examples() {
        let d = s(&[(2, 1), (3, 1), (5, -4)]);
        let c = spin_enumerate(&d).remove(0);
        let cl = classify(&d, &c).unwrap();
        assert_eq!(cl.id, DeltaCaseId::platonic("5-5", 0, None));
        assert!(!cl.reversed);

        let d = s(&[(2, -1), (2, -1), (3, 2)]);
        let cl = classify(&d, &SpinAssignment::new(vec![0, 0, 0], 0)).unwrap();
        assert!(cl.reversed);
        assert_eq!(cl.id.family, Family::Dihedral);

        let d = s(&[(2, 1), (3, 1), (3, 2)]);
        let c = spin_enumerate(&d).remove(0);
        assert_eq!(classify(&d, &c).unwrap().id, DeltaCaseId::platonic("3-1", 0, None));
    }

    #[test]
    fn label_substitutes_sign() {
        assert_eq!(DeltaCaseId::platonic("5-11-ε", 0, Some(Sign::Minus)).label(), "5-11-(-1)");
        assert_eq!(DeltaCaseId::platonic("5-1-ε", 0, Some(Sign::Plus)).label(), "5-1-1");
    }

    #[test]
    fn instances_classify_back() {
        for id in all_row_instances(5, 12) {
            let (d, c) = id.instance().unwrap();
            assert!(d.euler().is_negative(), "{id}");
            let cl = classify(&d, &c).unwrap();
            assert!(!cl.reversed);
            assert_eq!(delta_table(&cl.id).unwrap(), delta_table(&id).unwrap(), "{id} classified as {}", cl.id);
        }
    }

    #[test]
    fn table_matches_engine() {
        let cfg = SearchConfig::default();
        for id in all_row_instances(5, 12) {
            let (d, c) = id.instance().unwrap();
            let want = delta_table(&id).unwrap();
            assert_eq!(delta_engine_with(&d, &c, &cfg).unwrap(), want, "{id}");
        }
    }

    #[test]
    fn classify_survives_moves() {
        for id in all_row_instances(2, 7) {
            let (d, c) = id.instance().unwrap();
            let want = delta_table(&id).unwrap();
            for sh in [[1i64, -1, 0], [0, 2, -2], [-3, 1, 2], [2, 2, -4]] {
                let shifts: Vec<Int> = sh.iter().map(|&x| int(x)).collect();
                let (d2, c2) = shift_move(&d, &c, &shifts).unwrap();
                for perm in PERMS3 {
                    let (d3, c3) = super::super::permute(&d2, &c2, &perm);
                    let cl = classify(&d3, &c3).unwrap();
                    assert_eq!(delta_table(&cl.id).unwrap(), want, "{id} via {d3} {c3}");
                    let (r, rc) = reverse_orientation(&d3, &c3);
                    let cl = classify(&r, &rc).unwrap();
                    assert!(cl.reversed);
                    assert_eq!(delta_table(&cl.id).unwrap(), want);
                }
            }
        }
    }
}
