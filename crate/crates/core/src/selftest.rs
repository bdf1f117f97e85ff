//! Fixture regression behind the `selftest` command.

use std::time::Instant;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{coprime, int, Sign};
use crate::obstruction::{definite_filling_signature, rp2_embedding_check, FourManifoldShape};
use crate::plumbing::{intersection_matrix, plumbing_delta, seifert_to_plumbing, signature};
use crate::seifert::{all_row_instances, delta_engine_with, delta_seifert, delta_table, reverse_orientation, DeltaCaseId, LensSpace, SearchConfig};
use crate::sigma::{sigma, sigma_by_reciprocity, sigma_trig, sigma_via_cf};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    pub millis: u128,
}

/// Printed constants: `(row, k, eps, delta)`.
pub const ROW_CONSTANTS: &[(&str, i64, Option<Sign>, i64)] = &[
    ("3-1", 0, None, -2),
    ("3-3", 0, None, -6),
    ("4-13", 0, None, -7),
    ("5-5", 0, None, -8),
    ("5-9", 0, None, 2),
    ("4-16", -1, None, -1),
];

/// Definite spin fillings: `(row, k, eps, delta)`.
pub const DEFINITE_FIXTURES: &[(&str, i64, Option<Sign>, i64)] = &[
    ("3-5", 0, None, -4),
    ("4-2", 0, None, -5),
    ("4-8", -1, None, -3),
    ("4-10", 0, None, -3),
    ("5-1-ε", 0, Some(Sign::Plus), -4),
    ("5-7", 0, None, -6),
    ("3-6", -1, None, 2),
    ("4-4", -1, None, 3),
    ("4-11", -1, None, -1),
    ("4-12", -1, None, 1),
    ("4-14", 0, None, -1),
    ("5-2-ε", -1, Some(Sign::Plus), 2),
    ("5-8", -1, None, 4),
    ("5-11-ε", 0, Some(Sign::Minus), -2),
];

/// Resolution graphs with zero Wu vector: `(row, delta)`.
pub const RESOLUTION_ROWS: &[(&str, i64)] = &[("3-3", -6), ("4-5", -5), ("4-13", -7), ("5-5", -8)];

fn run(name: &'static str, f: impl FnOnce() -> Result<usize, String>) -> Check {
    let t = Instant::now();
    let (passed, cases, detail) = match f() {
        Ok(n) => (true, n, String::new()),
        Err(e) => (false, 0, e),
    };
    Check { name, passed, cases, detail, millis: t.elapsed().as_millis() }
}

pub fn run_all() -> Vec<Check> {
    let cfg = SearchConfig::default();
    vec![
        run("sigma: exact = trig sum = even continued fraction", || {
            let mut n = 0;
            for p in 1i64..=60 {
                for q in -p + 1..p {
                    if q == 0 || !coprime(&int(q), &int(p)) {
                        continue;
                    }
                    for eps in LensSpace::spin_signs(&int(p), &int(q)) {
                        let exact = sigma(&int(q), &int(p), eps).map_err(|e| e.to_string())?;
                        let t = sigma_trig(&int(q), &int(p), eps).map_err(|e| format!("({q},{p},{eps}): {e}"))?;
                        if t.nearest != exact {
                            return Err(format!("sigma({q},{p},{eps}) = {exact}, trig {}", t.value));
                        }
                        if eps == Sign::Minus && (p + q).is_odd() && p > q.abs() {
                            let cf = sigma_via_cf(&int(q), &int(p)).map_err(|e| e.to_string())?;
                            if cf != exact {
                                return Err(format!("sigma({q},{p},-1) = {exact}, cf {cf}"));
                            }
                        }
                        n += 1;
                    }
                }
            }
            Ok(n)
        }),
        run("sigma: reciprocity and parity", || {
            let mut n = 0;
            for p in -60i64..=60 {
                for q in -60i64..=60 {
                    if p == 0 || q == 0 || (p + q).is_even() || !coprime(&int(p), &int(q)) {
                        continue;
                    }
                    let a = sigma(&int(p), &int(q), Sign::Minus).map_err(|e| e.to_string())?;
                    let b = sigma(&int(q), &int(p), Sign::Minus).map_err(|e| e.to_string())?;
                    if &a + &b != int(-(p * q).signum()) {
                        return Err(format!("reciprocity fails at ({p},{q})"));
                    }
                    for eps in [Sign::Plus, Sign::Minus] {
                        let Ok(v) = sigma(&int(q), &int(p), eps) else { continue };
                        if v.is_odd() == p.is_odd() {
                            return Err(format!("sigma({q},{p},{eps}) = {v} has the wrong parity"));
                        }
                    }
                    if sigma_by_reciprocity(&int(q), &int(p), Sign::Minus).map_err(|e| e.to_string())? != b {
                        return Err(format!("rewrite-only route differs at ({q},{p})"));
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
        run("rows: printed constants", || {
            for &(row, k, eps, want) in ROW_CONSTANTS {
                let id = DeltaCaseId::platonic(row, k, eps);
                let got = delta_table(&id).map_err(|e| e.to_string())?;
                if got != int(want) {
                    return Err(format!("{id}: {got} != {want}"));
                }
            }
            Ok(ROW_CONSTANTS.len())
        }),
        run("rows: table = engine, antisymmetry", || {
            let ids = all_row_instances(5, 12);
            for id in &ids {
                let (s, c) = id.instance().map_err(|e| e.to_string())?;
                let t = delta_table(id).map_err(|e| e.to_string())?;
                let e = delta_engine_with(&s, &c, &cfg).map_err(|e| format!("{id}: {e}"))?;
                if t != e {
                    return Err(format!("{id}: table {t}, engine {e}"));
                }
                let (r, rc) = reverse_orientation(&s, &c);
                let back = delta_seifert(&r, &rc, &cfg).map_err(|e| format!("{id} reversed: {e}"))?.delta;
                if back != -t.clone() {
                    return Err(format!("{id}: reversed gives {back}"));
                }
            }
            Ok(ids.len())
        }),
        run("rows: definite filling fixtures", || {
            for &(row, k, eps, want) in DEFINITE_FIXTURES {
                let id = DeltaCaseId::platonic(row, k, eps);
                let (s, c) = id.instance().map_err(|e| e.to_string())?;
                let got = delta_seifert(&s, &c, &cfg).map_err(|e| e.to_string())?.delta;
                if got != int(want) {
                    return Err(format!("{id}: {got} != {want}"));
                }
            }
            Ok(DEFINITE_FIXTURES.len())
        }),
        run("plumbing: resolution graphs", || {
            let mut n = 0;
            for &(row, want) in RESOLUTION_ROWS {
                for k in 0..=2 {
                    let id = DeltaCaseId::platonic(row, k, None);
                    let (s, c) = id.instance().map_err(|e| e.to_string())?;
                    let (g, w) = seifert_to_plumbing(&s, &c).map_err(|e| e.to_string())?;
                    let i = signature(&intersection_matrix(&g));
                    if !w.is_zero() || !g.is_even() || !i.is_definite() || i.sign() != want {
                        return Err(format!("{id}: inertia {i:?}"));
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
        run("plumbing: sign - w.w = delta", || {
            let ids = all_row_instances(3, 12);
            for id in &ids {
                let (s, c) = id.instance().map_err(|e| e.to_string())?;
                let (g, w) = seifert_to_plumbing(&s, &c).map_err(|e| e.to_string())?;
                let d = plumbing_delta(&g, &w).map_err(|e| e.to_string())?;
                let t = delta_table(id).map_err(|e| e.to_string())?;
                if d != t {
                    return Err(format!("{id}: plumbing {d}, table {t}"));
                }
            }
            Ok(ids.len())
        }),
        run("obstruction: definite forcing", || {
            for d in -18i64..=18 {
                let r = definite_filling_signature(d);
                if !r.scan_forces {
                    return Err(format!("delta {d}: survivors {:?}", r.survivors));
                }
            }
            if definite_filling_signature(26).survivors.is_empty() {
                return Err("delta 26 has no survivor".into());
            }
            Ok(37)
        }),
        run("obstruction: RP^2 in S^4", || {
            let s4 = FourManifoldShape::from_betti(0, 0).map_err(|e| e.to_string())?;
            let ok: Vec<i64> = (-64..=64).filter(|&e| rp2_embedding_check(&s4, e).admissible()).collect();
            if ok != vec![-2, 2] {
                return Err(format!("admissible Euler numbers {ok:?}"));
            }
            Ok(129)
        }),
    ]
}
