//! Pairwise separation predicates, each returning the smallest witness that
//! makes the pair separated.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::Kind;
use crate::objects::{
    path_neighbours, same_size, Edge, HamiltonCycle, PathLike, Permutation, Vertex, MAX_N,
};

/// Evidence that a pair of objects is separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A vertex of degree 4 in the union of two undirected paths.
    CrossingVertex(Vertex),
    /// An element whose positions differ by at least 2, neither being last.
    TwoDifferentElement(Vertex),
    /// A 1-based position where the two values differ by at least 2.
    ValueSeparatedPosition(usize),
    /// A vertex whose two immediate successors are four distinct vertices.
    TwoSeparatedVertex(Vertex),
    /// An edge present in both cycles.
    SharedEdge(Edge),
}

impl Witness {
    /// Re-checks the witness against the defining condition, computed from
    /// the raw sequences without any precomputed tables.
    pub fn verify(&self, a: &[Vertex], b: &[Vertex]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let n = a.len();
        let pos = |s: &[Vertex], v: Vertex| s.iter().position(|&x| x == v);
        match *self {
            Witness::CrossingVertex(v) => {
                let around = |s: &[Vertex]| -> Option<[Vertex; 2]> {
                    let i = pos(s, v)?;
                    if i == 0 || i + 1 == n {
                        return None;
                    }
                    Some([s[i - 1], s[i + 1]])
                };
                match (around(a), around(b)) {
                    (Some(x), Some(y)) => x.iter().all(|u| !y.contains(u)),
                    _ => false,
                }
            }
            Witness::TwoDifferentElement(e) => match (pos(a, e), pos(b, e)) {
                (Some(i), Some(j)) => i.abs_diff(j) >= 2 && i + 1 != n && j + 1 != n,
                _ => false,
            },
            Witness::ValueSeparatedPosition(i) => {
                i >= 1 && i <= n && a[i - 1].abs_diff(b[i - 1]) >= 2
            }
            Witness::TwoSeparatedVertex(e) => match (pos(a, e), pos(b, e)) {
                (Some(i), Some(j)) if i + 2 < n && j + 2 < n => {
                    let mut four = vec![a[i + 1], a[i + 2], b[j + 1], b[j + 2]];
                    four.sort_unstable();
                    four.dedup();
                    four.len() == 4
                }
                _ => false,
            },
            Witness::SharedEdge(e) => {
                let has = |s: &[Vertex]| (0..n).any(|i| Edge::new(s[i], s[(i + 1) % n]) == e);
                n >= 3 && has(a) && has(b)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CrossingVertex(v) => write!(f, "crossing vertex {v}"),
            Witness::TwoDifferentElement(e) => write!(f, "2-different element {e}"),
            Witness::ValueSeparatedPosition(i) => write!(f, "value-separated position {i}"),
            Witness::TwoSeparatedVertex(e) => write!(f, "two-separated vertex {e}"),
            Witness::SharedEdge(e) => write!(f, "shared edge {e}"),
        }
    }
}

pub(crate) fn crossing_vertex(a: &[Vertex], b: &[Vertex]) -> Option<Vertex> {
    let na = path_neighbours(a);
    let nb = path_neighbours(b);
    (1..=a.len()).map(|v| v as Vertex).find(|&v| {
        let (x, y) = na[v as usize];
        let (u, w) = nb[v as usize];
        x != 0 && y != 0 && u != 0 && w != 0 && x != u && x != w && y != u && y != w
    })
}

fn positions(s: &[Vertex]) -> [usize; MAX_N + 1] {
    let mut pos = [0; MAX_N + 1];
    for (i, &v) in s.iter().enumerate() {
        pos[v as usize] = i + 1;
    }
    pos
}

pub(crate) fn two_different_element(a: &[Vertex], b: &[Vertex]) -> Option<Vertex> {
    let n = a.len();
    let (pa, pb) = (positions(a), positions(b));
    (1..=n).find_map(|e| {
        let (i, j) = (pa[e], pb[e]);
        (i.abs_diff(j) >= 2 && i != n && j != n).then_some(e as Vertex)
    })
}

pub(crate) fn value_separated_position(a: &[Vertex], b: &[Vertex]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(x, y)| x.abs_diff(*y) >= 2)
        .map(|i| i + 1)
}

pub(crate) fn two_separated_vertex(a: &[Vertex], b: &[Vertex]) -> Option<Vertex> {
    let n = a.len();
    let (pa, pb) = (positions(a), positions(b));
    (1..=n).find_map(|e| {
        let (i, j) = (pa[e], pb[e]);
        if i + 2 > n || j + 2 > n {
            return None;
        }
        let (x, y) = (a[i], a[i + 1]);
        let (v, w) = (b[j], b[j + 1]);
        (x != v && x != w && y != v && y != w).then_some(e as Vertex)
    })
}

fn cycle_edge_mask(c: &[Vertex]) -> [u64; 3] {
    let n = c.len();
    let mut mask = [0u64; 3];
    for i in 0..n {
        let k = Edge::new(c[i], c[(i + 1) % n]).index();
        mask[k / 64] |= 1 << (k % 64);
    }
    mask
}

pub(crate) fn shared_edge(c: &[Vertex], d: &[Vertex]) -> Option<Edge> {
    let (mc, md) = (cycle_edge_mask(c), cycle_edge_mask(d));
    if mc.iter().zip(&md).all(|(x, y)| x & y == 0) {
        return None;
    }
    let n = c.len();
    (0..n)
        .map(|i| Edge::new(c[i], c[(i + 1) % n]))
        .filter(|e| {
            let k = e.index();
            md[k / 64] & (1 << (k % 64)) != 0
        })
        .min()
}

/// Smallest vertex of degree 4 in the union of `p` and `q`, i.e. a vertex
/// internal to both paths whose two neighbour pairs are disjoint.
pub fn is_crossing<P, Q>(p: &P, q: &Q) -> Result<Option<Witness>>
where
    P: PathLike + ?Sized,
    Q: PathLike + ?Sized,
{
    same_size(p.n(), q.n())?;
    Ok(crossing_vertex(p.vertices(), q.vertices()).map(Witness::CrossingVertex))
}

/// Smallest element whose positions in `a` and `b` differ by at least 2,
/// with neither position equal to `n`.
pub fn is_two_different(a: &Permutation, b: &Permutation) -> Result<Option<Witness>> {
    same_size(a.n(), b.n())?;
    Ok(two_different_element(a.as_slice(), b.as_slice()).map(Witness::TwoDifferentElement))
}

/// Smallest position at which `a` and `b` hold values differing by at
/// least 2.
pub fn is_value_separated(a: &Permutation, b: &Permutation) -> Result<Option<Witness>> {
    same_size(a.n(), b.n())?;
    Ok(value_separated_position(a.as_slice(), b.as_slice()).map(Witness::ValueSeparatedPosition))
}

/// Smallest vertex `e` such that `e x y` occurs in `a`, `e v w` occurs in
/// `b`, and `x, y, v, w` are four distinct vertices.
pub fn is_two_separated(a: &Permutation, b: &Permutation) -> Result<Option<Witness>> {
    same_size(a.n(), b.n())?;
    Ok(two_separated_vertex(a.as_slice(), b.as_slice()).map(Witness::TwoSeparatedVertex))
}

/// Both sides of the shared-edge / degree-3 equivalence for two cycles,
/// computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleUnion {
    pub shares_edge: bool,
    pub has_degree3_vertex: bool,
    pub witness: Option<Edge>,
}

pub fn cycles_degree3_equiv(c: &HamiltonCycle, d: &HamiltonCycle) -> Result<CycleUnion> {
    same_size(c.n(), d.n())?;
    if c == d {
        return Err(Error::SameCycle);
    }
    let witness = shared_edge(c.as_slice(), d.as_slice());

    let n = c.n();
    let mut adj = [[false; MAX_N + 1]; MAX_N + 1];
    for s in [c.as_slice(), d.as_slice()] {
        for i in 0..n {
            let (u, v) = (s[i] as usize, s[(i + 1) % n] as usize);
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let has_degree3_vertex = (1..=n).any(|v| adj[v].iter().filter(|&&x| x).count() == 3);

    Ok(CycleUnion {
        shares_edge: witness.is_some(),
        has_degree3_vertex,
        witness,
    })
}

/// The separation relations a family can be asked to satisfy pairwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Separation {
    Crossing,
    TwoDifferent,
    ValueSeparated,
    TwoSeparated,
    /// Two distinct cycles sharing an edge; equivalently their union has a
    /// vertex of degree 3.
    SharedEdge,
}

impl Separation {
    pub const ALL: [Separation; 5] = [
        Separation::Crossing,
        Separation::TwoDifferent,
        Separation::ValueSeparated,
        Separation::TwoSeparated,
        Separation::SharedEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Separation::Crossing => "crossing",
            Separation::TwoDifferent => "two-different",
            Separation::ValueSeparated => "value-separated",
            Separation::TwoSeparated => "two-separated",
            Separation::SharedEdge => "shared-edge",
        }
    }

    /// The kind of object the relation is defined on.
    pub fn kind(self) -> Kind {
        match self {
            Separation::Crossing => Kind::Paths,
            Separation::SharedEdge => Kind::Cycles,
            _ => Kind::Permutations,
        }
    }

    /// Witness for a pair of valid, equally sized sequences of the right
    /// kind. Identical cycles are never related.
    pub fn witness(self, a: &[Vertex], b: &[Vertex]) -> Option<Witness> {
        match self {
            Separation::Crossing => crossing_vertex(a, b).map(Witness::CrossingVertex),
            Separation::TwoDifferent => {
                two_different_element(a, b).map(Witness::TwoDifferentElement)
            }
            Separation::ValueSeparated => {
                value_separated_position(a, b).map(Witness::ValueSeparatedPosition)
            }
            Separation::TwoSeparated => two_separated_vertex(a, b).map(Witness::TwoSeparatedVertex),
            Separation::SharedEdge => {
                if a == b {
                    None
                } else {
                    shared_edge(a, b).map(Witness::SharedEdge)
                }
            }
        }
    }

    pub fn related(self, a: &[Vertex], b: &[Vertex]) -> bool {
        self.witness(a, b).is_some()
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Separation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "crossing" => Ok(Separation::Crossing),
            "two-different" | "2-different" => Ok(Separation::TwoDifferent),
            "value-separated" => Ok(Separation::ValueSeparated),
            "two-separated" => Ok(Separation::TwoSeparated),
            "shared-edge" | "degree3" => Ok(Separation::SharedEdge),
            _ => Err(Error::Unknown {
                what: "relation",
                name: s.to_string(),
            }),
        }
    }
}
