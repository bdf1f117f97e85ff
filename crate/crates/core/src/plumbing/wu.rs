//! Wu vectors, `delta = sign - w.w`, and blow-downs.

use std::fmt;

use num_traits::Zero;

use super::linalg::{gf2_solve, intersection_matrix, signature};
use super::{nonzero_abs_le_one, PlumbingError, PlumbingGraph, Vertex};
use crate::arith::{parity, Int};

/// Cap on the number of enumerated Wu vectors (kernel dimension 12).
pub const MAX_WU_SOLUTIONS: usize = 1 << 12;

/// A vector `w = sum e_i x_i` with `e_i` in {0, 1}, aligned with the graph's
/// vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WuVector {
    bits: Vec<u8>,
}

impl WuVector {
    /// Checks length and the Wu condition.
    pub fn new(g: &PlumbingGraph, bits: Vec<u8>) -> Result<Self, PlumbingError> {
        if bits.len() != g.len() {
            return Err(PlumbingError::WuLength { got: bits.len(), want: g.len() });
        }
        let w = WuVector { bits: bits.into_iter().map(|b| b & 1).collect() };
        if !is_wu_vector(g, &w) {
            return Err(PlumbingError::NotWuVector(w.to_string()));
        }
        Ok(w)
    }

    pub fn zero(g: &PlumbingGraph) -> Self {
        WuVector { bits: vec![0; g.len()] }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Ids of the vertices with `e_i = 1`.
    pub fn support(&self, g: &PlumbingGraph) -> Vec<i64> {
        g.vertices().iter().zip(&self.bits).filter(|(_, &b)| b == 1).map(|(v, _)| v.id).collect()
    }
}

impl fmt::Display for WuVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.bits.iter().map(u8::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `w . x_i = x_i . x_i (mod 2)` for every vertex.
pub fn is_wu_vector(g: &PlumbingGraph, w: &WuVector) -> bool {
    if w.bits.len() != g.len() {
        return false;
    }
    let m = intersection_matrix(g);
    (0..g.len()).all(|i| {
        let dot: u32 = (0..g.len()).map(|j| (parity(&m[i][j]) * w.bits[j]) as u32).sum();
        dot % 2 == parity(&m[i][i]) as u32
    })
}

fn check_nonadjacent(g: &PlumbingGraph, w: &WuVector) -> Result<(), PlumbingError> {
    for &(a, b) in g.edges() {
        if w.bits[g.position(a).unwrap()] == 1 && w.bits[g.position(b).unwrap()] == 1 {
            return Err(PlumbingError::AdjacentWu(w.to_string()));
        }
    }
    Ok(())
}

/// All Wu vectors, sorted.
pub fn wu_solutions(g: &PlumbingGraph) -> Result<Vec<WuVector>, PlumbingError> {
    if g.is_empty() {
        return Ok(vec![WuVector { bits: Vec::new() }]);
    }
    let m = intersection_matrix(g);
    let a: Vec<Vec<u8>> = m.iter().map(|r| r.iter().map(parity).collect()).collect();
    let d: Vec<u8> = (0..g.len()).map(|i| parity(&m[i][i])).collect();
    let sol = gf2_solve(&a, &d).ok_or(PlumbingError::NoSolution)?;
    if sol.kernel.len() > 12 {
        return Err(PlumbingError::TooManySolutions(MAX_WU_SOLUTIONS));
    }
    let mut out = Vec::with_capacity(1 << sol.kernel.len());
    for mask in 0u32..(1 << sol.kernel.len()) {
        let mut bits = sol.particular.clone();
        for (k, v) in sol.kernel.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                for (x, y) in bits.iter_mut().zip(v) {
                    *x ^= y;
                }
            }
        }
        let w = WuVector { bits };
        debug_assert!(is_wu_vector(g, &w));
        check_nonadjacent(g, &w)?;
        out.push(w);
    }
    out.sort();
    Ok(out)
}

/// `sign P(G) - w.w`.
pub fn plumbing_delta(g: &PlumbingGraph, w: &WuVector) -> Result<Int, PlumbingError> {
    if w.bits.len() != g.len() {
        return Err(PlumbingError::WuLength { got: w.bits.len(), want: g.len() });
    }
    if !is_wu_vector(g, w) {
        return Err(PlumbingError::NotWuVector(w.to_string()));
    }
    let m = intersection_matrix(g);
    let mut ww = Int::zero();
    for i in 0..g.len() {
        for j in 0..g.len() {
            if w.bits[i] == 1 && w.bits[j] == 1 {
                ww += &m[i][j];
            }
        }
    }
    Ok(Int::from(signature(&m).sign()) - ww)
}

/// `{sign - w.w}` over all Wu vectors, sorted.
pub fn delta_multiset(g: &PlumbingGraph) -> Result<Vec<Int>, PlumbingError> {
    let mut v = wu_solutions(g)?
        .iter()
        .map(|w| plumbing_delta(g, w))
        .collect::<Result<Vec<_>, _>>()?;
    v.sort();
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowDown {
    pub graph: PlumbingGraph,
    /// `w` restricted to the remaining vertices.
    pub mapped: WuVector,
    pub solutions: Vec<WuVector>,
}

/// Removes a `+-1` vertex `v` of degree at most 2. Each neighbour `u` gets
/// weight `w(u) - w(v)`, and two neighbours become adjacent.
pub fn blow_down(g: &PlumbingGraph, w: &WuVector, v: i64) -> Result<BlowDown, PlumbingError> {
    let fail = |reason: &str| PlumbingError::BlowDown { vertex: v, reason: reason.to_string() };
    let pos = g.position(v).ok_or_else(|| fail("no such vertex"))?;
    if !is_wu_vector(g, w) {
        return Err(PlumbingError::NotWuVector(w.to_string()));
    }
    let wv = g.vertices()[pos].weight.clone();
    if !nonzero_abs_le_one(&wv) {
        return Err(fail("weight must be +1 or -1"));
    }
    let nbrs = g.neighbors(v);
    if nbrs.len() > 2 {
        return Err(fail("degree must be at most 2"));
    }
    let mut vertices = Vec::with_capacity(g.len() - 1);
    let mut bits = Vec::with_capacity(g.len() - 1);
    for (x, &b) in g.vertices().iter().zip(w.bits()) {
        if x.id == v {
            continue;
        }
        let weight = if nbrs.contains(&x.id) { &x.weight - &wv } else { x.weight.clone() };
        vertices.push(Vertex { id: x.id, weight });
        bits.push(b);
    }
    let mut edges: Vec<(i64, i64)> = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v).collect();
    if let [a, b] = nbrs[..] {
        edges.push((a, b));
    }
    let graph = PlumbingGraph::new(vertices, edges)?;
    let mapped = WuVector::new(&graph, bits)?;
    let solutions = wu_solutions(&graph)?;
    Ok(BlowDown { graph, mapped, solutions })
}
