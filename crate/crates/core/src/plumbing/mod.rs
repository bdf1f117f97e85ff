//! Plumbed 4-manifolds on weighted trees.
//!
//! Vertex weights are self-intersections; edges are plumbings with
//! intersection number 1.

mod construct;
mod linalg;
mod wu;

pub use construct::{lens_to_plumbing, seifert_to_plumbing};
pub use linalg::{gf2_solve, intersection_matrix, signature, Gf2Solution, Inertia, IntMatrix};
pub use wu::{blow_down, delta_multiset, is_wu_vector, plumbing_delta, wu_solutions, BlowDown, WuVector, MAX_WU_SOLUTIONS};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, Int};
use crate::seifert::SeifertError;
use crate::sigma::SigmaError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlumbingError {
    #[error("duplicate vertex id {0}")]
    DuplicateId(i64),
    #[error("edge refers to unknown vertex {0}")]
    UnknownVertex(i64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(i64),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(i64, i64),
    #[error("graph is not a tree ({vertices} vertices, {edges} edges, connected: {connected})")]
    NotATree { vertices: usize, edges: usize, connected: bool },
    #[error("no Wu vector exists (inconsistent system mod 2)")]
    NoSolution,
    #[error("more than {0} Wu vectors")]
    TooManySolutions(usize),
    #[error("vector {0} is not a Wu vector of the graph")]
    NotWuVector(String),
    #[error("Wu vector has length {got}, graph has {want} vertices")]
    WuLength { got: usize, want: usize },
    #[error("Wu vector {0} has two adjacent vertices")]
    AdjacentWu(String),
    #[error("cannot blow down vertex {vertex}: {reason}")]
    BlowDown { vertex: i64, reason: String },
    #[error("no spin plumbing: {0}")]
    NoSpinForm(String),
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("graph JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Sigma(#[from] SigmaError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: i64,
    #[serde(with = "crate::arith::json_int")]
    pub weight: Int,
}

/// A weighted tree. The empty graph (no vertices) is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(i64, i64)>,
    index: BTreeMap<i64, usize>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(i64, i64)>) -> Result<Self, PlumbingError> {
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id, i).is_some() {
                return Err(PlumbingError::DuplicateId(v.id));
            }
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            for x in [a, b] {
                if !index.contains_key(&x) {
                    return Err(PlumbingError::UnknownVertex(x));
                }
            }
            if a == b {
                return Err(PlumbingError::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(PlumbingError::DuplicateEdge(a, b));
            }
        }
        let g = PlumbingGraph { vertices, edges, index };
        let n = g.vertices.len();
        let connected = g.is_connected();
        if n > 0 && (g.edges.len() != n - 1 || !connected) {
            return Err(PlumbingError::NotATree { vertices: n, edges: g.edges.len(), connected });
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        PlumbingGraph { vertices: Vec::new(), edges: Vec::new(), index: BTreeMap::new() }
    }

    /// A path with the given weights and ids `0..n`.
    pub fn chain(weights: &[Int]) -> Self {
        let vertices = weights.iter().enumerate().map(|(i, w)| Vertex { id: i as i64, weight: w.clone() }).collect();
        let edges = (1..weights.len()).map(|i| (i as i64 - 1, i as i64)).collect();
        PlumbingGraph::new(vertices, edges).expect("a path is a tree")
    }

    /// A star: center id 0, then each branch in order, first entry adjacent
    /// to the center.
    pub fn star(center: Int, branches: &[Vec<Int>]) -> Self {
        let mut vertices = vec![Vertex { id: 0, weight: center }];
        let mut edges = Vec::new();
        for br in branches {
            let mut prev = 0i64;
            for w in br {
                let id = vertices.len() as i64;
                vertices.push(Vertex { id, weight: w.clone() });
                edges.push((prev, id));
                prev = id;
            }
        }
        PlumbingGraph::new(vertices, edges).expect("a star is a tree")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(i64, i64)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Position of a vertex id in [`Self::vertices`].
    pub fn position(&self, id: i64) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn neighbors(&self, id: i64) -> Vec<i64> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == id { Some(b) } else if b == id { Some(a) } else { None })
            .collect()
    }

    fn is_connected(&self) -> bool {
        let Some(first) = self.vertices.first() else { return true };
        let mut seen = BTreeSet::from([first.id]);
        let mut stack = vec![first.id];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.iter().all(|v| !v.weight.bit(0))
    }

    pub fn from_json(text: &str) -> Result<(Self, Option<WuVector>), PlumbingError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| PlumbingError::Json(e.to_string()))?;
        let g = PlumbingGraph::new(raw.vertices, raw.edges.into_iter().map(|[a, b]| (a, b)).collect())?;
        let w = match raw.wu {
            Some(bits) => {
                if let Some(bad) = bits.iter().find(|&&b| b > 1) {
                    return Err(PlumbingError::Json(format!("wu entries must be 0 or 1, got {bad}")));
                }
                Some(WuVector::new(&g, bits)?)
            }
            None => None,
        };
        Ok((g, w))
    }

    pub fn to_json(&self, wu: Option<&WuVector>) -> serde_json::Value {
        let raw = GraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            wu: wu.map(|w| w.bits().to_vec()),
        };
        serde_json::to_value(raw).expect("graph serializes")
    }
}

/// Wire format: `{"vertices":[{"id","weight"}],"edges":[[i,j]],"wu":[0/1 in vertex order]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Vertex>,
    #[serde(default)]
    edges: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wu: Option<Vec<u8>>,
}

impl fmt::Display for PlumbingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.vertices.iter().map(|v| format!("{}:{}", v.id, v.weight)).collect();
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "vertices [{}] edges [{}]", ws.join(", "), es.join(", "))
    }
}

/// Parses the star shorthand `"(a; c1,c2; d1; e1,e2,e3)"`: center weight
/// `a`, then one branch per `;`-separated group listed outward from the
/// center.
pub fn parse_star(text: &str) -> Result<PlumbingGraph, PlumbingError> {
    let t = text.trim();
    let body = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| PlumbingError::Parse { token: t.to_string(), reason: "expected `(center; branch; ...)`".into() })?;
    let mut groups = body.split(';');
    let center = parse_weight(groups.next().unwrap_or(""))?;
    let mut branches = Vec::new();
    for g in groups {
        if g.trim().is_empty() {
            continue;
        }
        branches.push(g.split(',').map(parse_weight).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(PlumbingGraph::star(center, &branches))
}

fn parse_weight(tok: &str) -> Result<Int, PlumbingError> {
    let t = tok.trim().replace('\u{2212}', "-");
    let t = t.strip_prefix('+').unwrap_or(&t).to_string();
    t.parse::<Int>().map_err(|_| PlumbingError::Parse { token: tok.trim().to_string(), reason: "not an integer".into() })
}

/// The `E_8` star `(-2; -2; -2,-2; -2,-2,-2,-2)`.
pub fn e8() -> PlumbingGraph {
    let m2 = || int(-2);
    PlumbingGraph::star(m2(), &[vec![m2()], vec![m2(), m2()], vec![m2(), m2(), m2(), m2()]])
}

pub(crate) fn nonzero_abs_le_one(w: &Int) -> bool {
    !w.is_zero() && w.abs() == int(1)
}
