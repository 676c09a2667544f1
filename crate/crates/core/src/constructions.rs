//! Explicit families: the bipartite crossing-path family and the
//! value-separated permutations feeding it, the fixed-edge cycle family,
//! and the Walecki decomposition of `K_n` into Hamilton cycles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::{Family, Kind, Meta};
use crate::greedy::{greedy_family, GreedyConfig, Order};
use crate::limits::Limits;
use crate::objects::{check_n, Edge, HamiltonCycle, HamiltonPath, Permutation, Vertex};
use crate::oracle::{max_clique_exact, universe_graph};
use crate::relations::Separation;
use crate::universe::{Arrangements, Universe};

/// How a value-separated family is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Maximum family by exact clique search.
    Exact,
    /// Maximal family by a greedy pass in the given order.
    Greedy(Order),
}

impl Mode {
    fn label(self) -> String {
        match self {
            Mode::Exact => "exact".into(),
            Mode::Greedy(o) => format!("greedy-{o}"),
        }
    }

    fn seed(self) -> Option<u64> {
        match self {
            Mode::Exact => None,
            Mode::Greedy(o) => o.seed(),
        }
    }
}

/// The alternating path `b1 a1 b2 a2 ...` through
/// `K_{floor(n/2), ceil(n/2)}`, where `A = [floor(n/2)]` is visited in the
/// order of `alpha` and `B = [n] \ A` in increasing order. Returned as
/// traversed from `b1`, before canonical orientation.
pub fn bipartite_sequence(n: usize, alpha: &Permutation) -> Result<Vec<Vertex>> {
    check_n(n)?;
    let m = n / 2;
    if n < 2 || alpha.n() != m {
        return Err(Error::SizeMismatch {
            left: m,
            right: alpha.n(),
        });
    }
    let mut seq = Vec::with_capacity(n);
    for i in 0..n.div_ceil(2) {
        seq.push((m + 1 + i) as Vertex);
        if i < m {
            seq.push(alpha.as_slice()[i]);
        }
    }
    Ok(seq)
}

pub fn bipartite_path(n: usize, alpha: &Permutation) -> Result<HamiltonPath> {
    Ok(HamiltonPath::canonical_unchecked(bipartite_sequence(
        n, alpha,
    )?))
}

/// Permutations of `[m]`, pairwise value-separated (some position where
/// the values differ by at least 2).
pub fn two_diff_family(m: usize, mode: Mode, limits: &Limits) -> Result<Family> {
    check_n(m)?;
    let mut family = match mode {
        Mode::Exact => {
            if m > limits.exact_two_diff_max_m {
                return Err(Error::CapExceeded {
                    what: "exact value-separated family m",
                    size: m as u128,
                    cap: limits.exact_two_diff_max_m as u128,
                });
            }
            let g = universe_graph(
                Universe::Permutations,
                m,
                Separation::ValueSeparated,
                limits,
            )?;
            max_clique_exact(&g, None).witness
        }
        Mode::Greedy(order) => greedy_family(
            &GreedyConfig {
                order,
                relation: Separation::ValueSeparated,
                universe: Universe::Permutations,
                n: m,
            },
            limits,
        )?,
    };
    family.meta = Meta::new(format!("two-diff:{}", mode.label()), mode.seed());
    Ok(family)
}

/// Output of the bipartite crossing pipeline, with its intermediate stages.
#[derive(Clone, Debug)]
pub struct BipartiteCrossing {
    /// The value-separated permutations of `[floor(n/2)]`.
    pub base: Family,
    /// The common last element of the selected inverses.
    pub last_element: Vertex,
    /// The selected inverses, as orders of `A`.
    pub orders: Vec<Permutation>,
    /// The resulting pairwise crossing paths, sorted.
    pub family: Family,
}

/// Pairwise crossing Hamilton paths of `K_n` inside the balanced complete
/// bipartite graph.
///
/// The inverses of a value-separated family have, for every pair, an
/// element whose positions differ by at least 2. Keeping only the inverses
/// with one common last element makes that element's positions avoid the
/// last slot, so each pair is 2-different, and the alternating paths they
/// define cross at that element.
pub fn bipartite_crossing_family(
    n: usize,
    mode: Mode,
    limits: &Limits,
) -> Result<BipartiteCrossing> {
    if n < 4 {
        return Err(Error::Domain {
            field: "bipartite_crossing_family",
            reason: format!("needs n >= 4, got {n}"),
        });
    }
    let m = n / 2;
    let base = two_diff_family(m, mode, limits)?;

    let mut by_last: BTreeMap<Vertex, Vec<Permutation>> = BTreeMap::new();
    for p in base.permutations() {
        let inv = p.inverse();
        by_last.entry(inv.at(m)).or_default().push(inv);
    }
    // Largest class; ties go to the smallest last element.
    let (last_element, orders) = by_last
        .into_iter()
        .rev()
        .max_by_key(|(_, v)| v.len())
        .expect("family is never empty");

    let mut members = orders
        .iter()
        .map(|alpha| bipartite_path(n, alpha).map(HamiltonPath::into_vec))
        .collect::<Result<Vec<_>>>()?;
    members.sort_unstable();
    let family = Family::from_canonical(
        n,
        Kind::Paths,
        members,
        Meta::new(format!("bipartite-crossing:{}", mode.label()), mode.seed()),
    );
    Ok(BipartiteCrossing {
        base,
        last_element,
        orders,
        family,
    })
}

/// Every Hamilton cycle of `K_n` through the edge `{u, v}`.
pub fn kernel_cycle_family(n: usize, u: usize, v: usize, limits: &Limits) -> Result<Family> {
    check_n(n)?;
    if n < 3 || u == v || u == 0 || v == 0 || u > n || v > n {
        return Err(Error::BadEdge { u, v, n });
    }
    let size: u128 = (1..=(n - 2) as u128).product();
    if size > limits.output_cap {
        return Err(Error::CapExceeded {
            what: "kernel cycle family",
            size,
            cap: limits.output_cap,
        });
    }
    let rest: Vec<Vertex> = (1..=n as Vertex)
        .filter(|&x| x as usize != u && x as usize != v)
        .collect();
    let mut members: Vec<Vec<Vertex>> = Arrangements::of(rest)
        .map(|interior| {
            let mut s = Vec::with_capacity(n);
            s.push(u as Vertex);
            s.extend(interior);
            s.push(v as Vertex);
            HamiltonCycle::canonical_unchecked(s).into_vec()
        })
        .collect();
    members.sort_unstable();
    members.dedup();
    Ok(Family::from_canonical(
        n,
        Kind::Cycles,
        members,
        Meta::new(format!("kernel-cycles:{u}-{v}"), None),
    ))
}

/// `(n-1)/2` pairwise edge-disjoint Hamilton cycles covering every edge of
/// `K_n`, for odd `n`.
///
/// Vertices `0..n-1` sit on a circle around a hub. The zigzag
/// `i, i+1, i-1, i+2, i-2, ...` (mod `n-1`) closed through the hub is one
/// cycle; its rotations by `i = 0..(n-1)/2` are the others. Circle vertex
/// `x` is labelled `x+1` and the hub `n`.
pub fn walecki_decomposition(n: usize) -> Result<Vec<HamiltonCycle>> {
    check_n(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    if n < 3 {
        return Err(Error::Domain {
            field: "walecki_decomposition",
            reason: format!("needs n >= 3, got {n}"),
        });
    }
    let ring = (n - 1) as i64;
    let k = ring / 2;
    let cycles = (0..k)
        .map(|i| {
            let mut seq = vec![n as Vertex];
            seq.push((i + 1) as Vertex);
            for step in 1..=k {
                seq.push(((i + step).rem_euclid(ring) + 1) as Vertex);
                if step < k {
                    seq.push(((i - step).rem_euclid(ring) + 1) as Vertex);
                }
            }
            HamiltonCycle::canonical_unchecked(seq)
        })
        .collect();
    Ok(cycles)
}

/// True when `cycles` are Hamilton cycles of `K_n` that use every edge
/// exactly once.
pub fn is_hamilton_decomposition(n: usize, cycles: &[HamiltonCycle]) -> bool {
    let mut count = vec![0u32; n * (n - 1) / 2];
    for c in cycles {
        if c.n() != n {
            return false;
        }
        for e in c.edges() {
            count[e.index()] += 1;
        }
    }
    count.iter().all(|&c| c == 1)
}

/// The edge `{u, v}` as an [`Edge`], validated against `n`.
pub fn edge(n: usize, u: usize, v: usize) -> Result<Edge> {
    if u == v || u == 0 || v == 0 || u > n || v > n {
        return Err(Error::BadEdge { u, v, n });
    }
    Ok(Edge::new(u as Vertex, v as Vertex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::is_crossing;

    fn perm(v: &[Vertex]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bipartite_path_examples() {
        assert_eq!(
            bipartite_sequence(6, &perm(&[1, 2, 3])).unwrap(),
            vec![4, 1, 5, 2, 6, 3]
        );
        assert_eq!(
            bipartite_path(6, &perm(&[1, 2, 3])).unwrap(),
            HamiltonPath::canonical(vec![4, 1, 5, 2, 6, 3]).unwrap()
        );
        assert_eq!(
            bipartite_sequence(7, &perm(&[2, 1, 3])).unwrap(),
            vec![4, 2, 5, 1, 6, 3, 7]
        );
        assert!(matches!(
            bipartite_sequence(6, &perm(&[1, 2])),
            Err(Error::SizeMismatch { .. })
        ));
        // Not 2-different, and indeed not crossing.
        let p = bipartite_path(6, &perm(&[2, 1, 3])).unwrap();
        let q = bipartite_path(6, &perm(&[1, 2, 3])).unwrap();
        assert_eq!(is_crossing(&p, &q).unwrap(), None);
    }

    #[test]
    fn small_two_diff_families() {
        let limits = Limits::default();
        assert_eq!(two_diff_family(2, Mode::Exact, &limits).unwrap().len(), 1);
        let f3 = two_diff_family(3, Mode::Exact, &limits).unwrap();
        assert_eq!(f3.len(), 3);
        assert!(f3.verify(Separation::ValueSeparated).unwrap().ok());
        let witness = Family::new(
            3,
            Kind::Permutations,
            vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]],
            Meta::new("t", None),
        )
        .unwrap();
        assert!(witness.verify(Separation::ValueSeparated).unwrap().ok());
        assert!(matches!(
            two_diff_family(7, Mode::Exact, &limits),
            Err(Error::CapExceeded { .. })
        ));
        let g = two_diff_family(5, Mode::Greedy(Order::SeededShuffle(1)), &limits).unwrap();
        assert!(g.verify(Separation::ValueSeparated).unwrap().ok());
        assert_eq!(g.meta.seed, Some(1));
    }

    #[test]
    fn pipeline_small_n() {
        let limits = Limits::default();
        let f4 = bipartite_crossing_family(4, Mode::Exact, &limits).unwrap();
        assert_eq!(f4.family.len(), 1);
        let f8 = bipartite_crossing_family(8, Mode::Exact, &limits).unwrap();
        assert_eq!(f8.base.len(), 6);
        assert!(f8.family.len() >= 2);
        assert!(f8.family.verify(Separation::Crossing).unwrap().ok());
        assert!(bipartite_crossing_family(3, Mode::Exact, &limits).is_err());
    }

    #[test]
    fn kernel_examples() {
        let limits = Limits::default();
        let f = kernel_cycle_family(4, 1, 2, &limits).unwrap();
        assert_eq!(f.members(), &[vec![1, 2, 3, 4], vec![1, 2, 4, 3]]);
        assert_eq!(kernel_cycle_family(5, 1, 2, &limits).unwrap().len(), 6);
        assert_eq!(kernel_cycle_family(3, 1, 3, &limits).unwrap().len(), 1);
        assert!(matches!(
            kernel_cycle_family(5, 2, 2, &limits),
            Err(Error::BadEdge { .. })
        ));
        assert!(matches!(
            kernel_cycle_family(5, 1, 6, &limits),
            Err(Error::BadEdge { .. })
        ));
    }

    #[test]
    fn walecki_small() {
        assert_eq!(walecki_decomposition(3).unwrap().len(), 1);
        let w = walecki_decomposition(5).unwrap();
        assert_eq!(w.len(), 2);
        assert!(is_hamilton_decomposition(5, &w));
        assert_eq!(walecki_decomposition(6), Err(Error::EvenN(6)));
        // the verifier rejects a repeated cycle
        assert!(!is_hamilton_decomposition(5, &[w[0].clone(), w[0].clone()]));
    }
}
