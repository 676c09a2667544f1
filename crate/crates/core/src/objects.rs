//! Core domain types: permutations of `[n]`, undirected Hamilton paths and
//! cycles of `K_n` in canonical form, couple orders and union degree profiles.
//!
//! Every public value is 1-based: a permutation of `[n]` is a sequence over
//! `1..=n`. Positions passed to or returned from this crate are 1-based too.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground-set size accepted anywhere in the crate. Every universe
/// handled here is factorial-sized, so anything above this is refused
/// rather than left running.
pub const MAX_N: usize = 20;

pub type Vertex = u8;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    Ok(())
}

fn check_bijection(seq: &[Vertex]) -> Result<()> {
    let n = seq.len();
    check_n(n)?;
    let mut seen = [false; MAX_N + 1];
    for &v in seq {
        let v = v as usize;
        if v == 0 || v > n {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("value {v} outside 1..={n}"),
            });
        }
        if seen[v] {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("value {v} repeated"),
            });
        }
        seen[v] = true;
    }
    Ok(())
}

fn write_seq(f: &mut fmt::Formatter<'_>, seq: &[Vertex]) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in seq.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

/// Anything that can be read as a vertex sequence of a Hamilton path.
///
/// Implemented by [`Permutation`] (read as a directed path) and
/// [`HamiltonPath`].
pub trait PathLike {
    fn vertices(&self) -> &[Vertex];

    fn n(&self) -> usize {
        self.vertices().len()
    }
}

/// A linear order of `[n]`; also read as a directed Hamilton path of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    seq: Vec<Vertex>,
}

impl Permutation {
    pub fn new(seq: Vec<Vertex>) -> Result<Self> {
        check_bijection(&seq)?;
        Ok(Self { seq })
    }

    pub(crate) fn new_unchecked(seq: Vec<Vertex>) -> Self {
        debug_assert!(check_bijection(&seq).is_ok());
        Self { seq }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            seq: (1..=n as Vertex).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    /// Value at a 1-based position.
    pub fn at(&self, pos: usize) -> Vertex {
        self.seq[pos - 1]
    }

    /// `table[v]` is the 1-based position of `v`; `table[0]` is unused.
    pub fn position_table(&self) -> Vec<usize> {
        let mut table = vec![0; self.n() + 1];
        for (i, &v) in self.seq.iter().enumerate() {
            table[v as usize] = i + 1;
        }
        table
    }

    /// The permutation `q` with `q[p[i]] = i`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.seq.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as Vertex;
        }
        Permutation { seq: inv }
    }

    pub fn reversed(&self) -> Permutation {
        let mut seq = self.seq.clone();
        seq.reverse();
        Permutation { seq }
    }

    /// Renames every value `v` to its position in `base`, so that `base`
    /// itself becomes the identity. Separation relations that only look at
    /// which values follow which are invariant under this renaming.
    pub fn relabel_against(&self, base: &Permutation) -> Result<Permutation> {
        if base.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: base.n(),
            });
        }
        let pos = base.position_table();
        Ok(Permutation {
            seq: self
                .seq
                .iter()
                .map(|&v| pos[v as usize] as Vertex)
                .collect(),
        })
    }

    pub fn couple_order(&self) -> Result<CoupleOrder> {
        if self.n() < 2 {
            return Err(Error::Domain {
                field: "couple_order",
                reason: "needs n >= 2".into(),
            });
        }
        let couples = self
            .seq
            .chunks_exact(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        Ok(CoupleOrder {
            n: self.n(),
            couples,
        })
    }
}

impl PathLike for Permutation {
    fn vertices(&self) -> &[Vertex] {
        &self.seq
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.seq)
    }
}

/// An undirected Hamilton path of `K_n`, stored with its smaller endpoint
/// first so that a path and its reverse compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonPath {
    seq: Vec<Vertex>,
}

impl HamiltonPath {
    /// Canonical representative of the undirected path through `raw`.
    pub fn canonical(raw: Vec<Vertex>) -> Result<Self> {
        check_bijection(&raw)?;
        Ok(Self::canonical_unchecked(raw))
    }

    pub(crate) fn canonical_unchecked(mut raw: Vec<Vertex>) -> Self {
        if raw.first() > raw.last() {
            raw.reverse();
        }
        Self { seq: raw }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.seq.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
    }
}

impl PathLike for HamiltonPath {
    fn vertices(&self) -> &[Vertex] {
        &self.seq
    }
}

impl fmt::Display for HamiltonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.seq)
    }
}

/// A Hamilton cycle of `K_n` (n >= 3), rotated to start at 1 and oriented so
/// that the second vertex is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonCycle {
    seq: Vec<Vertex>,
}

impl HamiltonCycle {
    pub fn canonical(raw: Vec<Vertex>) -> Result<Self> {
        check_bijection(&raw)?;
        if raw.len() < 3 {
            return Err(Error::Domain {
                field: "HamiltonCycle",
                reason: format!("a cycle needs n >= 3, got {}", raw.len()),
            });
        }
        Ok(Self::canonical_unchecked(raw))
    }

    pub(crate) fn canonical_unchecked(mut raw: Vec<Vertex>) -> Self {
        let start = raw.iter().position(|&v| v == 1).unwrap_or(0);
        raw.rotate_left(start);
        let n = raw.len();
        if raw[1] > raw[n - 1] {
            raw[1..].reverse();
        }
        Self { seq: raw }
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    /// The `n` edges, in traversal order starting with `{1, seq[2]}`.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.n();
        (0..n)
            .map(|i| Edge::new(self.seq[i], self.seq[(i + 1) % n]))
            .collect()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }
}

impl fmt::Display for HamiltonCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// An undirected edge `{lo, hi}` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        Edge(u.min(v), u.max(v))
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    /// Dense index of the edge among all edges of `K_MAX_N`.
    pub(crate) fn index(self) -> usize {
        let (a, b) = (self.0 as usize - 1, self.1 as usize - 1);
        b * (b - 1) / 2 + a
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// The couples `{p1,p2}, {p3,p4}, ...` of a permutation. For odd `n` the
/// last element is not paired.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoupleOrder {
    n: usize,
    couples: Vec<(Vertex, Vertex)>,
}

impl CoupleOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Couples as ordered pairs `(min, max)`.
    pub fn couples(&self) -> &[(Vertex, Vertex)] {
        &self.couples
    }
}

/// Degrees of the union of two Hamilton paths on the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    deg: Vec<u8>,
    edges: usize,
}

impl DegreeProfile {
    pub fn n(&self) -> usize {
        self.deg.len()
    }

    pub fn degree(&self, v: Vertex) -> u8 {
        self.deg[v as usize - 1]
    }

    pub fn max_degree(&self) -> u8 {
        self.deg.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct edges in the union graph.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// `(vertex, degree)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u8)> + '_ {
        self.deg
            .iter()
            .enumerate()
            .map(|(i, &d)| ((i + 1) as Vertex, d))
    }
}

pub(crate) fn same_size(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::SizeMismatch { left: a, right: b });
    }
    Ok(())
}

/// Neighbours of every vertex along a path: `nb[v] = (prev, next)`, 0 for a
/// missing side.
pub(crate) fn path_neighbours(seq: &[Vertex]) -> [(Vertex, Vertex); MAX_N + 1] {
    let mut nb = [(0, 0); MAX_N + 1];
    for (i, &v) in seq.iter().enumerate() {
        let prev = if i > 0 { seq[i - 1] } else { 0 };
        let next = seq.get(i + 1).copied().unwrap_or(0);
        nb[v as usize] = (prev, next);
    }
    nb
}

/// Degree of every vertex in the edge-union of two paths.
pub fn union_degree_profile<P, Q>(p: &P, q: &Q) -> Result<DegreeProfile>
where
    P: PathLike + ?Sized,
    Q: PathLike + ?Sized,
{
    let n = p.n();
    same_size(n, q.n())?;
    let mut seen = [false; MAX_N * (MAX_N - 1) / 2];
    let mut deg = vec![0u8; n];
    let mut edges = 0;
    for seq in [p.vertices(), q.vertices()] {
        for w in seq.windows(2) {
            let e = Edge::new(w[0], w[1]);
            if !seen[e.index()] {
                seen[e.index()] = true;
                edges += 1;
                deg[w[0] as usize - 1] += 1;
                deg[w[1] as usize - 1] += 1;
            }
        }
    }
    Ok(DegreeProfile { deg, edges })
}
