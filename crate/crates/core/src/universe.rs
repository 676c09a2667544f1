//! Lexicographic enumeration of the object universes: permutations of
//! `[n]`, Hamilton paths of `K_n`, Hamilton paths of the balanced complete
//! bipartite graph, and Hamilton cycles of `K_n`. Only canonical forms are
//! produced, so no object is seen twice.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::Kind;
use crate::objects::{check_n, Vertex};

/// Steps `s` to the next permutation in lexicographic order. Returns
/// `false` (leaving `s` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(s: &mut [T]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        s.reverse();
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Streams every arrangement of the given items in lexicographic order,
/// starting from the sorted arrangement.
#[derive(Clone, Debug)]
pub struct Arrangements {
    next: Option<Vec<Vertex>>,
}

impl Arrangements {
    pub fn of(mut items: Vec<Vertex>) -> Self {
        items.sort_unstable();
        Arrangements { next: Some(items) }
    }

    /// All permutations of `[n]`.
    pub fn of_n(n: usize) -> Self {
        Self::of((1..=n as Vertex).collect())
    }
}

impl Iterator for Arrangements {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Vec<Vertex>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    Permutations,
    Paths,
    /// Hamilton paths of `K_{floor(n/2), ceil(n/2)}` with parts
    /// `A = [floor(n/2)]` and `B = [n] \ A`.
    BipartitePaths,
    Cycles,
}

impl Universe {
    pub const ALL: [Universe; 4] = [
        Universe::Permutations,
        Universe::Paths,
        Universe::BipartitePaths,
        Universe::Cycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Universe::Permutations => "permutations",
            Universe::Paths => "paths",
            Universe::BipartitePaths => "bipartite-paths",
            Universe::Cycles => "cycles",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Universe::Permutations => Kind::Permutations,
            Universe::Paths | Universe::BipartitePaths => Kind::Paths,
            Universe::Cycles => Kind::Cycles,
        }
    }

    /// Number of objects, computed in closed form.
    pub fn size(self, n: usize) -> u128 {
        match self {
            Universe::Permutations => factorial(n),
            Universe::Paths => (factorial(n) / 2).max(1),
            Universe::BipartitePaths => {
                let k = n / 2;
                if n.is_multiple_of(2) {
                    factorial(k) * factorial(k)
                } else {
                    (factorial(k + 1) * factorial(k) / 2).max(1)
                }
            }
            Universe::Cycles => {
                if n < 3 {
                    0
                } else {
                    factorial(n - 1) / 2
                }
            }
        }
    }

    /// Canonical members in lexicographic order.
    pub fn iter(self, n: usize) -> Result<Box<dyn Iterator<Item = Vec<Vertex>> + Send>> {
        check_n(n)?;
        Ok(match self {
            Universe::Permutations => Box::new(Arrangements::of_n(n)),
            Universe::Paths => Box::new(Arrangements::of_n(n).filter(move |s| s[0] <= s[n - 1])),
            Universe::Cycles => {
                if n < 3 {
                    return Err(Error::Domain {
                        field: "cycles",
                        reason: format!("a Hamilton cycle needs n >= 3, got {n}"),
                    });
                }
                Box::new(
                    Arrangements::of((2..=n as Vertex).collect()).filter_map(move |rest| {
                        (rest[0] < rest[n - 2]).then(|| {
                            let mut s = Vec::with_capacity(n);
                            s.push(1);
                            s.extend(rest);
                            s
                        })
                    }),
                )
            }
            Universe::BipartitePaths => Box::new(bipartite_paths(n).into_iter()),
        })
    }
}

fn bipartite_paths(n: usize) -> Vec<Vec<Vertex>> {
    let a = n / 2;
    let side_a: Vec<Vertex> = (1..=a as Vertex).collect();
    let side_b: Vec<Vertex> = (a as Vertex + 1..=n as Vertex).collect();
    // Even n: A-vertices first gives the canonical orientation.
    // Odd n: B at both ends, canonical when the first is smaller.
    let (first, second) = if n.is_multiple_of(2) {
        (side_a, side_b)
    } else {
        (side_b, side_a)
    };
    let mut out = Vec::with_capacity(Universe::BipartitePaths.size(n) as usize);
    for x in Arrangements::of(first.clone()) {
        if n % 2 == 1 && x[0] > x[x.len() - 1] {
            continue;
        }
        for y in Arrangements::of(second.clone()) {
            let mut s = Vec::with_capacity(n);
            for i in 0..x.len() {
                s.push(x[i]);
                if i < y.len() {
                    s.push(y[i]);
                }
            }
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Universe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Universe::ALL
            .into_iter()
            .find(|u| u.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "universe",
                name: s.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn arrangements_are_lexicographic_and_complete() {
        let all: Vec<_> = Arrangements::of_n(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], vec![1, 2, 3, 4]);
        assert_eq!(all[23], vec![4, 3, 2, 1]);
        assert_eq!(Arrangements::of_n(1).count(), 1);
    }

    #[test]
    fn sizes_match_enumeration() {
        for n in 1..=8 {
            for u in Universe::ALL {
                let Ok(it) = u.iter(n) else {
                    assert!(u == Universe::Cycles && n < 3);
                    continue;
                };
                let v: Vec<_> = it.collect();
                assert_eq!(v.len() as u128, u.size(n), "{u} n={n}");
                assert!(v.windows(2).all(|w| w[0] < w[1]), "{u} n={n} not sorted");
                for s in &v {
                    assert_eq!(&u.kind().canonicalize(n, s.clone()).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn bipartite_paths_alternate_sides() {
        for n in 2..=8 {
            let a = (n / 2) as Vertex;
            let all: BTreeSet<_> = Universe::BipartitePaths.iter(n).unwrap().collect();
            // Oracle: filter every path of K_n by the alternation condition.
            let brute: BTreeSet<_> = Universe::Paths
                .iter(n)
                .unwrap()
                .filter(|s| s.windows(2).all(|w| (w[0] <= a) != (w[1] <= a)))
                .collect();
            assert_eq!(all, brute, "n={n}");
        }
    }
}
