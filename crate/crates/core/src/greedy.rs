//! Greedy choose-and-eliminate over any universe and separation relation.
//!
//! Choosing an object and discarding everything unrelated to it, then
//! repeating, admits exactly the objects that are related to every object
//! admitted before them in visiting order. The engine therefore makes one
//! pass and never materializes the shrinking choice space.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{Family, Meta};
use crate::limits::Limits;
use crate::objects::{check_n, Vertex};
use crate::relations::Separation;
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Lexicographic,
    /// A ChaCha8 shuffle of the universe seeded with the given value.
    SeededShuffle(u64),
}

impl Order {
    pub fn seed(self) -> Option<u64> {
        match self {
            Order::Lexicographic => None,
            Order::SeededShuffle(s) => Some(s),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Lexicographic => f.write_str("lex"),
            Order::SeededShuffle(_) => f.write_str("shuffle"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyConfig {
    pub order: Order,
    pub relation: Separation,
    pub universe: Universe,
    pub n: usize,
}

/// Admits, in visiting order, every candidate related to all members
/// admitted so far.
pub fn greedy_pass<I>(candidates: I, relation: Separation) -> Vec<Vec<Vertex>>
where
    I: IntoIterator<Item = Vec<Vertex>>,
{
    let mut family: Vec<Vec<Vertex>> = Vec::new();
    for c in candidates {
        // Newest members first: they are the likeliest to reject.
        if family.iter().rev().all(|m| relation.related(m, &c)) {
            family.push(c);
        }
    }
    family
}

/// A maximal pairwise-related family of the configured universe.
pub fn greedy_family(cfg: &GreedyConfig, limits: &Limits) -> Result<Family> {
    check_n(cfg.n)?;
    if cfg.relation.kind() != cfg.universe.kind() {
        return Err(Error::IncompatibleRelation {
            relation: cfg.relation.name(),
            universe: cfg.universe.name(),
        });
    }
    let size = cfg.universe.size(cfg.n);
    if size > limits.greedy_universe_cap {
        return Err(Error::CapExceeded {
            what: "greedy universe",
            size,
            cap: limits.greedy_universe_cap,
        });
    }
    let members = match cfg.order {
        Order::Lexicographic => greedy_pass(cfg.universe.iter(cfg.n)?, cfg.relation),
        Order::SeededShuffle(seed) => {
            let mut all: Vec<Vec<Vertex>> = cfg.universe.iter(cfg.n)?.collect();
            all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            greedy_pass(all, cfg.relation)
        }
    };
    Ok(Family::from_canonical(
        cfg.n,
        cfg.universe.kind(),
        members,
        Meta::new(
            format!("greedy:{}:{}:{}", cfg.relation, cfg.universe, cfg.order),
            cfg.order.seed(),
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(universe: Universe, relation: Separation, n: usize, order: Order) -> GreedyConfig {
        GreedyConfig {
            order,
            relation,
            universe,
            n,
        }
    }

    #[test]
    fn empty_relation_gives_singleton() {
        let f = greedy_family(
            &cfg(
                Universe::Permutations,
                Separation::TwoSeparated,
                4,
                Order::SeededShuffle(7),
            ),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.meta.seed, Some(7));
    }

    #[test]
    fn same_seed_same_family() {
        let c = cfg(
            Universe::Permutations,
            Separation::ValueSeparated,
            5,
            Order::SeededShuffle(42),
        );
        let a = greedy_family(&c, &Limits::default()).unwrap();
        let b = greedy_family(&c, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn output_is_valid_and_maximal() {
        let limits = Limits::default();
        for (u, r) in [
            (Universe::Permutations, Separation::TwoSeparated),
            (Universe::Permutations, Separation::ValueSeparated),
            (Universe::Permutations, Separation::TwoDifferent),
            (Universe::Paths, Separation::Crossing),
            (Universe::BipartitePaths, Separation::Crossing),
            (Universe::Cycles, Separation::SharedEdge),
        ] {
            for order in [Order::Lexicographic, Order::SeededShuffle(3)] {
                let f = greedy_family(&cfg(u, r, 6, order), &limits).unwrap();
                assert!(f.verify(r).unwrap().ok(), "{u} {r}");
                for cand in u.iter(6).unwrap() {
                    if f.members().contains(&cand) {
                        continue;
                    }
                    assert!(
                        f.members().iter().any(|m| !r.related(m, &cand)),
                        "{u} {r}: {cand:?} could be added"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_mismatched_relation_and_big_universe() {
        let limits = Limits::default();
        assert!(matches!(
            greedy_family(
                &cfg(
                    Universe::Cycles,
                    Separation::Crossing,
                    5,
                    Order::Lexicographic
                ),
                &limits
            ),
            Err(Error::IncompatibleRelation { .. })
        ));
        assert!(matches!(
            greedy_family(
                &cfg(
                    Universe::Permutations,
                    Separation::Crossing,
                    5,
                    Order::Lexicographic
                ),
                &limits
            ),
            Err(Error::IncompatibleRelation { .. })
        ));
        assert!(matches!(
            greedy_family(
                &cfg(
                    Universe::Permutations,
                    Separation::TwoSeparated,
                    11,
                    Order::Lexicographic
                ),
                &limits
            ),
            Err(Error::CapExceeded { .. })
        ));
    }
}
