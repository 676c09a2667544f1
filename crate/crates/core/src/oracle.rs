//! Exact maximum families. A family that is pairwise related is exactly a
//! clique of the compatibility graph whose vertices are the universe
//! objects, so each extremal quantity is a maximum clique size.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bounds::{decimal, eval_bounds};
use crate::clique::{maximum_clique, maximum_clique_through, BitGraph, CliqueResult};
use crate::error::{Error, Result};
use crate::family::{Family, Kind, Meta};
use crate::limits::Limits;
use crate::objects::{check_n, Vertex};
use crate::relations::Separation;
use crate::universe::Universe;

pub use crate::clique::Status;

/// Universe objects plus the symmetric, loop-free relation graph on them.
#[derive(Clone, Debug)]
pub struct CompatibilityGraph {
    n: usize,
    kind: Kind,
    relation: Separation,
    objects: Vec<Vec<Vertex>>,
    graph: BitGraph,
}

impl CompatibilityGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relation(&self) -> Separation {
        self.relation
    }

    pub fn objects(&self) -> &[Vec<Vertex>] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.graph.has_edge(i, j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.graph.degree(i)
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn bit_graph(&self) -> &BitGraph {
        &self.graph
    }

    /// Adjacency equals its transpose and has no loops.
    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| {
            !self.adjacent(i, i)
                && (0..self.len()).all(|j| self.adjacent(i, j) == self.adjacent(j, i))
        })
    }
}

/// Evaluates `relation` on every ordered pair of `objects`, which must be
/// canonical and distinct.
pub fn build_compatibility_graph(
    n: usize,
    kind: Kind,
    objects: Vec<Vec<Vertex>>,
    relation: Separation,
    limits: &Limits,
) -> Result<CompatibilityGraph> {
    if relation.kind() != kind {
        return Err(Error::IncompatibleRelation {
            relation: relation.name(),
            universe: kind.name(),
        });
    }
    if objects.len() > limits.oracle_vertex_cap {
        return Err(Error::CapExceeded {
            what: "compatibility graph vertices",
            size: objects.len() as u128,
            cap: limits.oracle_vertex_cap as u128,
        });
    }
    let words = objects.len().div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = (0..objects.len())
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u64; words];
            for (j, o) in objects.iter().enumerate() {
                if i != j && relation.related(&objects[i], o) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let graph = BitGraph::from_rows(objects.len(), rows);
    Ok(CompatibilityGraph {
        n,
        kind,
        relation,
        objects,
        graph,
    })
}

/// Compatibility graph over a whole universe, in its lexicographic order.
pub fn universe_graph(
    universe: Universe,
    n: usize,
    relation: Separation,
    limits: &Limits,
) -> Result<CompatibilityGraph> {
    check_n(n)?;
    let size = universe.size(n);
    if size > limits.oracle_vertex_cap as u128 {
        return Err(Error::CapExceeded {
            what: "compatibility graph vertices",
            size,
            cap: limits.oracle_vertex_cap as u128,
        });
    }
    if relation.kind() != universe.kind() {
        return Err(Error::IncompatibleRelation {
            relation: relation.name(),
            universe: universe.name(),
        });
    }
    let objects = universe.iter(n)?.collect();
    build_compatibility_graph(n, universe.kind(), objects, relation, limits)
}

/// A maximum (or best-found) pairwise-related family of a graph.
#[derive(Clone, Debug)]
pub struct CliqueOutcome {
    pub value: usize,
    pub witness: Family,
    pub status: Status,
    pub nodes: u64,
}

pub fn max_clique_exact(g: &CompatibilityGraph, time_limit: Option<Duration>) -> CliqueOutcome {
    outcome(g, maximum_clique(&g.graph, time_limit))
}

fn outcome(g: &CompatibilityGraph, r: CliqueResult) -> CliqueOutcome {
    let members = r.members.iter().map(|&i| g.objects[i].clone()).collect();
    CliqueOutcome {
        value: r.members.len(),
        witness: Family::from_canonical(
            g.n,
            g.kind,
            members,
            Meta::new(format!("max-clique:{}", g.relation), None),
        ),
        status: r.status,
        nodes: r.nodes,
    }
}

/// The extremal quantities computed by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Pairwise crossing Hamilton paths of `K_n`.
    Q,
    /// Pairwise crossing Hamilton paths of the balanced complete bipartite
    /// graph on `[n]`.
    B,
    /// Pairwise two-separated permutations of `[n]`.
    R,
    /// Hamilton cycles of `K_n` pairwise sharing an edge.
    Mcy,
}

impl Quantity {
    pub const ALL: [Quantity; 4] = [Quantity::Q, Quantity::B, Quantity::R, Quantity::Mcy];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Q => "Q",
            Quantity::B => "B",
            Quantity::R => "R",
            Quantity::Mcy => "Mcy",
        }
    }

    pub fn universe(self) -> Universe {
        match self {
            Quantity::Q => Universe::Paths,
            Quantity::B => Universe::BipartitePaths,
            Quantity::R => Universe::Permutations,
            Quantity::Mcy => Universe::Cycles,
        }
    }

    pub fn relation(self) -> Separation {
        match self {
            Quantity::Q | Quantity::B => Separation::Crossing,
            Quantity::R => Separation::TwoSeparated,
            Quantity::Mcy => Separation::SharedEdge,
        }
    }

    pub fn max_n(self, limits: &Limits) -> usize {
        match self {
            Quantity::Q => limits.q_max_n,
            Quantity::B => limits.b_max_n,
            Quantity::R => limits.r_max_n,
            Quantity::Mcy => limits.mcy_max_n,
        }
    }

    /// Certain lower and upper bounds from the closed forms. The lower bound
    /// of `Q` takes the larger of the two known bounds (the irrational one
    /// at the low end of its enclosure).
    pub fn known_bounds(self, n: usize) -> Result<(BigRational, BigRational)> {
        let b = eval_bounds(n)?;
        Ok(match self {
            Quantity::Q => (
                b.q_lower_new.clone().max(b.q_lower_kmm.lo.clone()),
                b.q_upper_kmm,
            ),
            Quantity::B => (b.q_lower_new, b.q_upper_kmm),
            Quantity::R => (b.r_lower, b.r_upper),
            Quantity::Mcy => (b.mcy_lower.clone(), b.mcy_upper()),
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                what: "quantity",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub quantity: Quantity,
    pub n: usize,
    pub value: usize,
    pub witness: Family,
    pub status: Status,
    pub nodes: u64,
}

impl fmt::Display for OracleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Exact => write!(f, "{}({}) = {} (exact)", self.quantity, self.n, self.value),
            Status::LowerBoundTimeout => write!(
                f,
                "{}({}) >= {} (time limit reached)",
                self.quantity, self.n, self.value
            ),
        }
    }
}

/// Largest clique size allowed by an upper bound `x`.
fn clique_ceiling(x: &BigRational) -> usize {
    x.floor().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// Exact value of `quantity` at `n` with a maximum witness family. The
/// value is checked against the closed-form bounds before it is returned;
/// a best-found value after a timeout is only checked against the upper
/// bound.
pub fn oracle_quantity(
    quantity: Quantity,
    n: usize,
    time_limit: Option<Duration>,
    limits: &Limits,
) -> Result<OracleResult> {
    let (lower, upper) = quantity.known_bounds(n)?;
    let max_n = quantity.max_n(limits);
    if n > max_n {
        return Err(Error::CapExceeded {
            what: "oracle n",
            size: n as u128,
            cap: max_n as u128,
        });
    }
    let g = universe_graph(quantity.universe(), n, quantity.relation(), limits)?;
    // Relabeling the ground set preserves every relation here and acts
    // transitively on each universe (for bipartite paths, relabeling each
    // side separately), so some maximum family contains the first object.
    let mut out = if g.is_empty() {
        max_clique_exact(&g, time_limit)
    } else {
        outcome(
            &g,
            maximum_clique_through(&g.graph, 0, time_limit, clique_ceiling(&upper)),
        )
    };
    if out.status == Status::LowerBoundTimeout {
        // The incumbents over the whole graph can beat the restricted ones.
        let quick = max_clique_exact(&g, Some(Duration::ZERO));
        if quick.value > out.value {
            out = CliqueOutcome {
                status: Status::LowerBoundTimeout,
                nodes: out.nodes + quick.nodes,
                ..quick
            };
        }
    }
    out.witness.meta = Meta::new(format!("oracle:{}", quantity), None);

    let value = BigRational::from_integer(BigInt::from(out.value));
    if value > upper {
        return Err(Error::SandwichViolation {
            quantity: quantity.name(),
            n,
            value: out.value,
            bound: decimal(&upper),
            side: "upper",
        });
    }
    if out.status == Status::Exact && value < lower {
        return Err(Error::SandwichViolation {
            quantity: quantity.name(),
            n,
            value: out.value,
            bound: decimal(&lower),
            side: "lower",
        });
    }
    Ok(OracleResult {
        quantity,
        n,
        value: out.value,
        witness: out.witness,
        status: out.status,
        nodes: out.nodes,
    })
}
