//! Spin plumbings bounded by a given Seifert manifold with spin structure.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{PlumbingError, PlumbingGraph, WuVector};
use crate::arith::{parity, Int, Sign};
use crate::seifert::{LensSpace, SeifertData, SpinAssignment};
use crate::sigma::even_cf_expand;

/// Star-shaped spin plumbing with zero Wu vector bounded by `(S, c)`.
///
/// Each fiber is rewritten as `(a_i, b_i - a_i c_i)` with `c_i = c(g_i)`
/// (mod 2) and `|b_i - a_i c_i| < a_i`; the shifts are absorbed by a
/// central `(1, a)` term with `a = sum c_i`, which is even. The center has
/// weight `-a` and each fiber contributes the chain `[[a_i / b_i']]`.
pub fn seifert_to_plumbing(s: &SeifertData, c: &SpinAssignment) -> Result<(PlumbingGraph, WuVector), PlumbingError> {
    c.validate(s)?;
    if c.ch != 0 {
        return Err(PlumbingError::NoSpinForm(format!("c(h) = 1 on {s}; the central framing cannot be made even")));
    }
    let mut total = Int::zero();
    let mut branches = Vec::new();
    for (f, &g) in s.fibers().iter().zip(&c.cg) {
        // smallest |b - a k| with k = g (mod 2)
        let (mut k, _) = f.b.div_mod_floor(&f.a);
        if parity(&k) != g {
            k += 1;
        }
        let mut b2 = &f.b - &f.a * &k;
        if b2.abs() >= f.a && !b2.is_zero() {
            k -= 2;
            b2 = &f.b - &f.a * &k;
        }
        debug_assert!(b2.abs() < f.a || (f.a == Int::from(1) && b2.is_zero()));
        total += &k;
        if b2.is_zero() {
            continue;
        }
        branches.push(even_cf_expand(&f.a, &b2)?.entries().to_vec());
    }
    debug_assert!(total.is_even());
    let g = PlumbingGraph::star(-total, &branches);
    let w = WuVector::new(&g, vec![0; g.len()])?;
    Ok((g, w))
}

/// Linear spin plumbing with zero Wu vector bounded by `L(p, q)` with the
/// spin structure `eps`: the chain `[[-p / q']]` with `q' = q (mod p)`,
/// `|q'| < p`, `p + q'` odd and sign `-1` after the shift.
pub fn lens_to_plumbing(l: &LensSpace) -> Result<(PlumbingGraph, WuVector), PlumbingError> {
    let p = &l.p;
    if *p == Int::from(1) {
        return Ok((PlumbingGraph::empty(), WuVector::zero(&PlumbingGraph::empty())));
    }
    // q' = q + c p with (-1)^c eps = -1 and q' in (-p, p)
    let base = if l.eps == Sign::Plus { &l.q - p } else { l.q.clone() };
    let two_p = p * 2;
    let mut r = base.mod_floor(&two_p);
    if r >= *p {
        r -= &two_p;
    }
    if (p + &r).is_even() {
        return Err(PlumbingError::NoSpinForm(format!("{l}: sign is not a spin structure")));
    }
    let chain: Vec<Int> = even_cf_expand(&-p.clone(), &r)?.entries().to_vec();
    let g = PlumbingGraph::chain(&chain);
    let w = WuVector::new(&g, vec![0; g.len()])?;
    Ok((g, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::plumbing::{e8, intersection_matrix, plumbing_delta, signature, wu_solutions};
    use crate::seifert::{all_row_instances, delta_seifert, delta_table, spin_enumerate, SearchConfig};
    use crate::sigma::sigma;

    #[test]
    fn poincare_gives_e8() {
        let s = SeifertData::from_pairs(&[(2, 1), (3, 1), (5, -4)]).unwrap();
        let c = spin_enumerate(&s).remove(0);
        let (g, w) = seifert_to_plumbing(&s, &c).unwrap();
        assert_eq!(g, e8());
        assert!(w.is_zero());
    }

    #[test]
    fn table_graphs() {
        let rows = [
            ("3-3", vec![vec![-2], vec![-2, -2], vec![-2, -2]]),
            ("4-5", vec![vec![-2], vec![-4], vec![-2, -2]]),
            ("4-13", vec![vec![-2], vec![-2, -2], vec![-2, -2, -2]]),
            ("5-5", vec![vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]]),
        ];
        for (row, branches) in rows {
            for k in 0..=2 {
                let id = crate::seifert::DeltaCaseId::platonic(row, k, None);
                let (s, c) = id.instance().unwrap();
                let (g, _) = seifert_to_plumbing(&s, &c).unwrap();
                let want: Vec<Vec<Int>> = branches.iter().map(|b| b.iter().map(|&x| int(x)).collect()).collect();
                assert_eq!(star_shape(&g), Some((int(-2 * k - 2), sorted(want))), "{row} k={k}");
                let inertia = signature(&intersection_matrix(&g));
                assert!(inertia.is_definite());
                assert_eq!(int(inertia.sign()), delta_table(&id).unwrap());
            }
        }
    }

    fn sorted(mut v: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
        v.sort();
        v
    }

    /// Center weight and branch weight lists (outward, sorted) of a star rooted at id 0.
    fn star_shape(g: &PlumbingGraph) -> Option<(Int, Vec<Vec<Int>>)> {
        let center = g.vertices().iter().find(|v| v.id == 0)?.weight.clone();
        let mut branches = Vec::new();
        for start in g.neighbors(0) {
            let (mut prev, mut cur) = (0, start);
            let mut br = Vec::new();
            loop {
                br.push(g.vertices()[g.position(cur)?].weight.clone());
                let next: Vec<i64> = g.neighbors(cur).into_iter().filter(|&x| x != prev).collect();
                match next[..] {
                    [] => break,
                    [n] => {
                        prev = cur;
                        cur = n;
                    }
                    _ => return None,
                }
            }
            branches.push(br);
        }
        Some((center, sorted(branches)))
    }

    #[test]
    fn row_3_4_has_four() {
        let s = SeifertData::from_pairs(&[(2, -1), (3, -1), (3, 8)]).unwrap();
        let c = spin_enumerate(&s).remove(0);
        let (g, w) = seifert_to_plumbing(&s, &c).unwrap();
        assert_eq!(plumbing_delta(&g, &w).unwrap(), int(4));
    }

    #[test]
    fn route_agreement_small() {
        let cfg = SearchConfig::default();
        for id in all_row_instances(3, 8) {
            let (s, c) = id.instance().unwrap();
            let (g, w) = seifert_to_plumbing(&s, &c).unwrap();
            let want = delta_seifert(&s, &c, &cfg).unwrap().delta;
            assert_eq!(plumbing_delta(&g, &w).unwrap(), want, "{id}");
            assert_eq!(wu_solutions(&g).unwrap().len(), spin_enumerate(&s).len(), "{id}");
        }
    }

    #[test]
    fn lens_chains() {
        for p in 1i64..=24 {
            for q in -p..=p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                for eps in LensSpace::spin_signs(&int(p), &int(q)) {
                    let l = LensSpace::new(int(p), int(q), eps).unwrap();
                    let (g, w) = lens_to_plumbing(&l).unwrap();
                    let d = plumbing_delta(&g, &w).unwrap();
                    assert_eq!(d, sigma(&int(q), &int(p), eps).unwrap(), "L({p},{q}) {eps}");
                }
            }
        }
    }
}
