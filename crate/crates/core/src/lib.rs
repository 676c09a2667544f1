//! Families of pairwise locally separated Hamilton paths, Hamilton cycles
//! and permutations of `[n]`.
//!
//! The crate builds the explicit families ([`constructions`]), checks the
//! pairwise separation relations with witnesses ([`relations`]), runs the
//! greedy choose-and-eliminate algorithm over any relation ([`greedy`]),
//! computes exact maxima by maximum-clique search ([`oracle`]), dissects
//! the permutations that fail to be two-separated from the identity
//! ([`structure`]) and evaluates the closed-form bounds exactly
//! ([`bounds`]). The `sepham` binary exposes all of it ([`cli`]).
//!
//! ```
//! use sepham::{relations::is_crossing, HamiltonPath};
//!
//! let p = HamiltonPath::canonical(vec![1, 2, 3, 4, 5])?;
//! let q = HamiltonPath::canonical(vec![2, 4, 1, 3, 5])?;
//! // Vertex 3 has neighbours {2, 4} in p and {1, 5} in q.
//! assert!(is_crossing(&p, &q)?.is_some());
//! # Ok::<(), sepham::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod family;
pub mod greedy;
pub mod limits;
pub mod objects;
pub mod oracle;
pub mod relations;
pub mod structure;
pub mod universe;

pub use error::{Error, Result};
pub use family::{Family, Kind, Meta};
pub use limits::Limits;
pub use objects::{
    union_degree_profile, CoupleOrder, DegreeProfile, Edge, HamiltonCycle, HamiltonPath, PathLike,
    Permutation, Vertex, MAX_N,
};
pub use relations::{Separation, Witness};
pub use universe::Universe;

// The guide's code blocks run as doctests, so the book cannot drift from
// the library.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/objects.md")]
    pub struct Objects;
    #[doc = include_str!("../../../book/src/relations.md")]
    pub struct Relations;
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub struct Constructions;
    #[doc = include_str!("../../../book/src/structure.md")]
    pub struct Structure;
    #[doc = include_str!("../../../book/src/greedy.md")]
    pub struct Greedy;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/bounds.md")]
    pub struct Bounds;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
