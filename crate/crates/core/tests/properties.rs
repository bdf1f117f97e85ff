//! Property tests for the invariants that hold on every valid input.

use nalgebra::DMatrix;
use num_integer::Integer;
use proptest::prelude::*;
use spindefect::arith::{coprime, int};
use spindefect::obstruction::{rp2_embedding_check, ten_eighths_verdict, FourManifoldShape, VerdictStatus};
use spindefect::plumbing::{
    blow_down, delta_multiset, plumbing_delta, signature, wu_solutions, IntMatrix, PlumbingError, PlumbingGraph, Vertex,
};
use spindefect::seifert::{all_row_instances, delta_seifert, shift_move, SearchConfig};
use spindefect::sigma::{cf_eval, even_cf_expand, sigma};
use spindefect::{Int, Rational, Sign};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// Random weighted tree on `n` vertices; vertex `i > 0` hangs off a smaller one.
fn tree(max: usize, wmax: i64) -> impl Strategy<Value = PlumbingGraph> {
    (1..=max).prop_flat_map(move |n| {
        (proptest::collection::vec(-wmax..=wmax, n), proptest::collection::vec(any::<prop::sample::Index>(), n)).prop_map(
            move |(ws, parents)| {
                let vertices = ws.iter().enumerate().map(|(i, &w)| Vertex { id: i as i64, weight: int(w) }).collect();
                let edges = (1..n).map(|i| (parents[i].index(i) as i64, i as i64)).collect();
                PlumbingGraph::new(vertices, edges).unwrap()
            },
        )
    })
}

fn shape() -> impl Strategy<Value = FourManifoldShape> {
    (0i64..40, 0i64..40).prop_map(|(a, b)| FourManifoldShape::from_betti(a, b).unwrap())
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn even_cf_round_trip(p in -200i64..=200, q in -200i64..=200) {
        prop_assume!(q != 0 && p.abs() > q.abs() && (p + q).is_odd() && coprime(&int(p), &int(q)));
        let cf = even_cf_expand(&int(p), &int(q)).unwrap();
        prop_assert!(cf.entries().iter().all(|a| a.is_even() && *a != int(0)));
        prop_assert_eq!(cf_eval(&cf), Rational::new(int(p), int(q)));
    }

    #[test]
    fn sigma_period_and_half_shift(q in -500i64..=500, p in 1i64..=300, eps in sign(), m in -5i64..=5) {
        prop_assume!(q != 0 && coprime(&int(q), &int(p)));
        if let Ok(v) = sigma(&int(q), &int(p), eps) {
            prop_assert_eq!(sigma(&int(q + 2 * m * p), &int(p), eps).unwrap(), v.clone());
            prop_assert_eq!(sigma(&int(q + p), &int(p), -eps).unwrap(), v.clone());
            prop_assert_eq!(sigma(&int(-q), &int(p), eps).unwrap(), -v);
        }
    }

    #[test]
    fn delta_is_shift_invariant(idx in any::<prop::sample::Index>(), s1 in -3i64..=3, s2 in -3i64..=3) {
        let ids = all_row_instances(2, 6);
        let id = &ids[idx.index(ids.len())];
        let (s, c) = id.instance().unwrap();
        let shifts = [int(s1), int(s2), int(-s1 - s2)];
        let (s2_, c2) = shift_move(&s, &c, &shifts).unwrap();
        let cfg = SearchConfig::default();
        prop_assert_eq!(delta_seifert(&s2_, &c2, &cfg).unwrap().delta, delta_seifert(&s, &c, &cfg).unwrap().delta);
    }

    #[test]
    fn signature_matches_eigenvalues(n in 1usize..=12, entries in proptest::collection::vec(-4i64..=4, 78)) {
        let mut m: IntMatrix = vec![vec![Int::from(0); n]; n];
        let mut it = entries.iter();
        for i in 0..n {
            for j in i..n {
                let v = int(*it.next().unwrap());
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        let d = DMatrix::from_fn(n, n, |i, j| m[i][j].to_string().parse::<f64>().unwrap());
        let ev = d.symmetric_eigen().eigenvalues;
        let inertia = signature(&m);
        // skip spectra too close to zero to classify in floating point
        prop_assume!(ev.iter().all(|x| x.abs() > 1e-7 || x.abs() < 1e-12));
        let pos = ev.iter().filter(|&&x| x > 1e-7).count();
        let neg = ev.iter().filter(|&&x| x < -1e-7).count();
        prop_assert_eq!((inertia.n_plus, inertia.n_minus, inertia.n_zero), (pos, neg, n - pos - neg));
    }

    #[test]
    fn wu_vectors_are_nonadjacent(g in tree(9, 5)) {
        match wu_solutions(&g) {
            Ok(ws) => {
                for w in ws {
                    for &(a, b) in g.edges() {
                        let (i, j) = (g.position(a).unwrap(), g.position(b).unwrap());
                        prop_assert!(!(w.bits()[i] == 1 && w.bits()[j] == 1));
                    }
                }
            }
            Err(PlumbingError::NoSolution) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn blow_down_preserves_defects(ws in proptest::collection::vec(-5i64..=5, 1..6), at in any::<prop::sample::Index>(), unit in prop_oneof![Just(1i64), Just(-1i64)]) {
        prop_assume!(ws.iter().all(|&w| w != 0));
        let mut chain: Vec<Int> = ws.iter().map(|&w| int(w)).collect();
        let pos = at.index(chain.len() + 1);
        chain.insert(pos, int(unit));
        let g = PlumbingGraph::chain(&chain);
        let Ok(sols) = wu_solutions(&g) else { return Ok(()) };
        let r = blow_down(&g, &sols[0], pos as i64).unwrap();
        prop_assert_eq!(delta_multiset(&r.graph).unwrap(), delta_multiset(&g).unwrap());
        prop_assert_eq!(plumbing_delta(&r.graph, &r.mapped).unwrap(), plumbing_delta(&g, &sols[0]).unwrap());
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn kernel_matches_literal_inequalities(z in shape(), d in -400i64..=400) {
        let v = ten_eighths_verdict(&z, d);
        let s = z.sign + d;
        let literal = s % 16 == 0 && (s == 0 || (z.b_plus >= 1 - s / 8 && z.b_minus >= 1 + s / 8));
        prop_assert_eq!(v.status != VerdictStatus::Excluded, literal);
        if s % 16 != 0 {
            prop_assert!(!v.residue_ok && v.status == VerdictStatus::Excluded);
        } else {
            prop_assert_eq!(v.ind, Some(-s / 8));
            prop_assert_eq!(v.status == VerdictStatus::ForcedEqual, s == 0);
        }
    }

    #[test]
    fn rp2_mirror_symmetry(x in shape(), e in -100i64..=100) {
        let a = rp2_embedding_check(&x, e);
        let b = rp2_embedding_check(&x.mirror(), -e);
        prop_assert_eq!(a.admissible(), b.admissible());
        prop_assert_eq!(a.admissible_eps.len(), b.admissible_eps.len());
        if (x.sign - e).rem_euclid(16) != 2 && (x.sign - e).rem_euclid(16) != 14 {
            prop_assert!(!a.admissible());
        }
    }
}
