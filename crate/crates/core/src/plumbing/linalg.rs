//! Intersection matrices, exact inertia, and linear algebra over GF(2).

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::PlumbingGraph;
use crate::arith::{Int, Rational};

pub type IntMatrix = Vec<Vec<Int>>;

/// `M_ii = weight(i)`, `M_ij = 1` on edges, in vertex order.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let n = g.len();
    let mut m = vec![vec![Int::zero(); n]; n];
    for (i, v) in g.vertices().iter().enumerate() {
        m[i][i] = v.weight.clone();
    }
    for &(a, b) in g.edges() {
        let (i, j) = (g.position(a).unwrap(), g.position(b).unwrap());
        m[i][j] = Int::from(1);
        m[j][i] = Int::from(1);
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn sign(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_definite(&self) -> bool {
        self.n_zero == 0 && (self.n_plus == 0 || self.n_minus == 0)
    }
}

/// Inertia of a symmetric matrix by congruent diagonalization over the
/// rationals.
///
/// Pivots on a non-zero diagonal entry when one remains; otherwise adds
/// row and column `j` to `i` for some `M_ij != 0`, which makes the new
/// `(i, i)` entry `2 M_ij`.
pub fn signature(m: &IntMatrix) -> Inertia {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    for i in 0..n {
        for j in 0..i {
            assert_eq!(m[i][j], m[j][i], "matrix must be symmetric");
        }
    }
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let hit = active.iter().enumerate().find_map(|(pi, &i)| {
                    active.iter().find(|&&j| j != i && !a[i][j].is_zero()).map(|&j| (pi, i, j))
                });
                let Some((pi, i, j)) = hit else { break };
                // row_i += row_j, col_i += col_j
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                debug_assert!(!a[i][i].is_zero());
                pi
            }
        };
        let p = active.swap_remove(pivot);
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                let v = &f * &a[p][j];
                a[i][j] -= v;
            }
        }
        for &i in &active {
            a[i][p] = Rational::zero();
            a[p][i] = Rational::zero();
        }
    }
    Inertia { n_plus: pos, n_minus: neg, n_zero: n - pos - neg }
}

/// Solution set of a linear system over GF(2): one particular solution and
/// a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Solution {
    pub particular: Vec<u8>,
    pub kernel: Vec<Vec<u8>>,
}

/// Solves `A x = b` over GF(2), or `None` when inconsistent.
pub fn gf2_solve(a: &[Vec<u8>], b: &[u8]) -> Option<Gf2Solution> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let words = (cols + 1).div_ceil(64);
    // augmented rows as bitsets; column `cols` holds b
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut w = vec![0u64; words];
            for c in 0..cols {
                if a[r][c] & 1 == 1 {
                    w[c / 64] |= 1 << (c % 64);
                }
            }
            if b[r] & 1 == 1 {
                w[cols / 64] |= 1 << (cols % 64);
            }
            w
        })
        .collect();
    let bit = |w: &[u64], c: usize| (w[c / 64] >> (c % 64)) & 1 == 1;

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| bit(&m[i], c)) else { continue };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && bit(row, c) {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| bit(row, cols)) {
        return None;
    }
    let mut particular = vec![0u8; cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = u8::from(bit(&m[i], cols));
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u8; cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                if bit(&m[i], f) {
                    v[c] = 1;
                }
            }
            v
        })
        .collect();
    Some(Gf2Solution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::plumbing::{e8, parse_star};

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_matrices() {
        let g = parse_star("(-2)").unwrap();
        assert_eq!(intersection_matrix(&g), mat(&[&[-2]]));
        assert_eq!(signature(&intersection_matrix(&g)), Inertia { n_plus: 0, n_minus: 1, n_zero: 0 });
        let g = PlumbingGraph::chain(&[int(-2), int(-2)]);
        assert_eq!(intersection_matrix(&g), mat(&[&[-2, 1], &[1, -2]]));
    }

    #[test]
    fn e8_inertia() {
        let m = intersection_matrix(&e8());
        assert_eq!(m.len(), 8);
        let i = signature(&m);
        assert_eq!(i, Inertia { n_plus: 0, n_minus: 8, n_zero: 0 });
        assert_eq!(i.sign(), -8);
    }

    #[test]
    fn table_graph_3_3() {
        let g = parse_star("(-2; -2; -2,-2; -2,-2)").unwrap();
        assert_eq!(signature(&intersection_matrix(&g)), Inertia { n_plus: 0, n_minus: 6, n_zero: 0 });
    }

    #[test]
    fn zero_diagonal() {
        assert_eq!(signature(&mat(&[&[0, 1], &[1, 0]])), Inertia { n_plus: 1, n_minus: 1, n_zero: 0 });
        assert_eq!(signature(&mat(&[&[0, 0], &[0, 0]])), Inertia { n_plus: 0, n_minus: 0, n_zero: 2 });
        assert_eq!(
            signature(&mat(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])),
            Inertia { n_plus: 1, n_minus: 1, n_zero: 1 }
        );
        assert_eq!(signature(&mat(&[&[1, 1], &[1, 1]])), Inertia { n_plus: 1, n_minus: 0, n_zero: 1 });
        assert_eq!(signature(&vec![]), Inertia { n_plus: 0, n_minus: 0, n_zero: 0 });
    }

    #[test]
    fn gf2_basics() {
        let s = gf2_solve(&[vec![1, 1], vec![1, 1]], &[1, 1]).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert!(gf2_solve(&[vec![1, 1], vec![1, 1]], &[1, 0]).is_none());
        let s = gf2_solve(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]], &[0, 1, 0]).unwrap();
        assert_eq!(s.kernel, vec![vec![1, 0, 1]]);
    }
}
