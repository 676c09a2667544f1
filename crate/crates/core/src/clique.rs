//! Exact maximum clique by branch and bound over packed bit rows, with
//! greedy-coloring upper bounds and a degeneracy vertex order.

use std::time::{Duration, Instant};

/// Symmetric adjacency over `0..n` stored as packed bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds the graph from one packed adjacency row per vertex.
    pub(crate) fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut g = BitGraph::new(n);
        for (i, r) in rows.into_iter().enumerate() {
            g.rows[i * g.words..(i + 1) * g.words].copy_from_slice(&r);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loop at {i}");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(a, &i)| {
            members[a + 1..]
                .iter()
                .all(|&j| i != j && self.has_edge(i, j))
        })
    }

    fn relabel(&self, order: &[usize]) -> BitGraph {
        let mut pos = vec![0; self.n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut g = BitGraph::new(self.n);
        for (new_i, &old_i) in order.iter().enumerate() {
            for old_j in ones(self.row(old_i)) {
                let new_j = pos[old_j];
                g.rows[new_i * g.words + new_j / 64] |= 1 << (new_j % 64);
            }
        }
        g
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let t = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(w * 64 + t)
        })
    })
}

fn first_one(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &b)| b != 0)
        .map(|(w, &b)| w * 64 + b.trailing_zeros() as usize)
}

/// Vertices ordered so that the ones removed last by repeated
/// minimum-degree deletion come first.
fn degeneracy_order(g: &BitGraph) -> Vec<usize> {
    let n = g.len();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex left");
        removed[v] = true;
        seq.push(v);
        for u in ones(g.row(v)) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    seq.reverse();
    seq
}

fn greedy_clique(g: &BitGraph, order: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut cand = vec![!0u64; g.words()];
    let mut clique = Vec::new();
    for v in order {
        if cand[v / 64] & (1 << (v % 64)) != 0 {
            clique.push(v);
            for (c, r) in cand.iter_mut().zip(g.row(v)) {
                *c &= r;
            }
        }
    }
    clique
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The clique is maximum.
    Exact,
    /// The time limit ran out; the clique is the best found.
    LowerBoundTimeout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertex indices of the clique, ascending.
    pub members: Vec<usize>,
    pub status: Status,
    /// Branch-and-bound nodes expanded.
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a BitGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: Option<Instant>,
    /// Known upper bound on the clique number; reaching it ends the search.
    ceiling: usize,
    timed_out: bool,
    nodes: u64,
}

impl Search<'_> {
    /// Greedy sequential coloring of `p`. Returns the vertices that could
    /// still improve on the incumbent, with their colors, in increasing
    /// color order.
    fn color_sort(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let kmin = (self.best.len() + 1)
            .saturating_sub(self.current.len())
            .max(1);
        let mut uncolored = p.to_vec();
        let mut q = vec![0u64; p.len()];
        let mut out = Vec::new();
        let mut k = 0;
        while uncolored.iter().any(|&w| w != 0) {
            k += 1;
            q.copy_from_slice(&uncolored);
            while let Some(v) = first_one(&q) {
                uncolored[v / 64] &= !(1 << (v % 64));
                q[v / 64] &= !(1 << (v % 64));
                for (x, r) in q.iter_mut().zip(self.g.row(v)) {
                    *x &= !r;
                }
                if k >= kmin {
                    out.push((v, k));
                }
            }
        }
        out
    }

    fn expand(&mut self, p: &mut [u64]) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out || self.best.len() >= self.ceiling {
            return;
        }
        let colored = self.color_sort(p);
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next: Vec<u64> = p.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(&mut next);
            }
            self.current.pop();
            p[v / 64] &= !(1 << (v % 64));
            if self.timed_out || self.best.len() >= self.ceiling {
                return;
            }
        }
    }
}

/// Maximum clique of `g`. Deterministic: the same graph always yields the
/// same clique. With a time limit the search may stop early and report
/// [`Status::LowerBoundTimeout`].
pub fn maximum_clique(g: &BitGraph, time_limit: Option<Duration>) -> CliqueResult {
    maximum_clique_capped(g, time_limit, usize::MAX)
}

/// As [`maximum_clique`], given that no clique exceeds `ceiling`: the
/// search stops as soon as a clique of that size is found.
pub fn maximum_clique_capped(
    g: &BitGraph,
    time_limit: Option<Duration>,
    ceiling: usize,
) -> CliqueResult {
    let n = g.len();
    if n == 0 {
        return CliqueResult {
            members: Vec::new(),
            status: Status::Exact,
            nodes: 0,
        };
    }
    let order = degeneracy_order(g);
    let h = g.relabel(&order);

    // Incumbents: first-fit in the caller's vertex order, and first-fit in
    // the branching order.
    let natural = greedy_clique(g, 0..n);
    let mut best: Vec<usize> = greedy_clique(&h, 0..n)
        .into_iter()
        .map(|v| order[v])
        .collect();
    if natural.len() > best.len() {
        best = natural;
    }
    let mut pos = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }

    let mut search = Search {
        g: &h,
        best: best.iter().map(|&v| pos[v]).collect(),
        current: Vec::new(),
        deadline: time_limit.map(|t| Instant::now() + t),
        ceiling,
        timed_out: false,
        nodes: 0,
    };
    let mut all = vec![0u64; h.words()];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    search.expand(&mut all);

    let mut members: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    members.sort_unstable();
    debug_assert!(g.is_clique(&members));
    CliqueResult {
        members,
        status: if search.timed_out && search.best.len() < ceiling {
            Status::LowerBoundTimeout
        } else {
            Status::Exact
        },
        nodes: search.nodes,
    }
}

/// Maximum clique among those containing vertex `v`: `v` plus a maximum
/// clique of its neighbourhood. Equals [`maximum_clique`] in size whenever
/// the automorphisms of `g` act transitively on its vertices.
/// `ceiling` bounds the clique number of `g` as in [`maximum_clique_capped`].
pub fn maximum_clique_through(
    g: &BitGraph,
    v: usize,
    time_limit: Option<Duration>,
    ceiling: usize,
) -> CliqueResult {
    let nbrs: Vec<usize> = ones(g.row(v)).collect();
    let mut h = BitGraph::new(nbrs.len());
    for (a, &x) in nbrs.iter().enumerate() {
        for (b, &y) in nbrs.iter().enumerate().skip(a + 1) {
            if g.has_edge(x, y) {
                h.add_edge(a, b);
            }
        }
    }
    let r = maximum_clique_capped(&h, time_limit, ceiling.saturating_sub(1));
    let mut members: Vec<usize> = r.members.iter().map(|&a| nbrs[a]).collect();
    members.push(v);
    members.sort_unstable();
    CliqueResult { members, ..r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(g: &BitGraph) -> usize {
        let n = g.len();
        (0u32..1 << n)
            .filter(|mask| {
                let m: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                g.is_clique(&m)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn trivial_graphs() {
        let g = BitGraph::new(7);
        assert_eq!(maximum_clique(&g, None).members.len(), 1);
        let mut k = BitGraph::new(70);
        for i in 0..70 {
            for j in i + 1..70 {
                k.add_edge(i, j);
            }
        }
        let r = maximum_clique(&k, None);
        assert_eq!(r.members.len(), 70);
        assert_eq!(r.status, Status::Exact);
        assert!(maximum_clique(&BitGraph::new(0), None).members.is_empty());
    }

    #[test]
    fn through_a_vertex_on_a_cycle() {
        // C_7 is vertex-transitive with clique number 2.
        let mut g = BitGraph::new(7);
        for i in 0..7 {
            g.add_edge(i, (i + 1) % 7);
        }
        let r = maximum_clique_through(&g, 3, None, usize::MAX);
        assert_eq!(r.members.len(), 2);
        assert!(r.members.contains(&3) && g.is_clique(&r.members));
        assert!(maximum_clique_through(&BitGraph::new(3), 1, None, 1).members == vec![1]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..13, edges in proptest::collection::vec(any::<bool>(), 78)) {
            let mut g = BitGraph::new(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if edges[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            let r = maximum_clique(&g, None);
            prop_assert!(g.is_clique(&r.members));
            prop_assert_eq!(r.members.len(), brute_force(&g));
        }
    }
}
