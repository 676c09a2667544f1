//! Families of objects and their pairwise verification.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::objects::{check_n, HamiltonCycle, HamiltonPath, Permutation, Vertex};
use crate::relations::{Separation, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Paths,
    Cycles,
    Permutations,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Paths => "paths",
            Kind::Cycles => "cycles",
            Kind::Permutations => "permutations",
        }
    }

    /// Validates `seq` as an object of this kind over `[n]` and returns its
    /// canonical form.
    pub fn canonicalize(self, n: usize, seq: Vec<Vertex>) -> Result<Vec<Vertex>> {
        if seq.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: seq.len(),
            });
        }
        Ok(match self {
            Kind::Paths => HamiltonPath::canonical(seq)?.into_vec(),
            Kind::Cycles => HamiltonCycle::canonical(seq)?.into_vec(),
            Kind::Permutations => Permutation::new(seq)?.into_vec(),
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paths" => Ok(Kind::Paths),
            "cycles" => Ok(Kind::Cycles),
            "permutations" => Ok(Kind::Permutations),
            _ => Err(Error::Unknown {
                what: "kind",
                name: s.to_string(),
            }),
        }
    }
}

/// Where a family came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meta {
    /// Construction name, a single token without whitespace.
    pub construction: String,
    pub seed: Option<u64>,
}

impl Meta {
    pub fn new(construction: impl Into<String>, seed: Option<u64>) -> Self {
        Meta {
            construction: construction.into(),
            seed,
        }
    }
}

/// An ordered list of pairwise distinct canonical objects of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    n: usize,
    kind: Kind,
    members: Vec<Vec<Vertex>>,
    pub meta: Meta,
}

impl Family {
    /// Canonicalizes every member and rejects duplicates.
    pub fn new(n: usize, kind: Kind, members: Vec<Vec<Vertex>>, meta: Meta) -> Result<Self> {
        check_n(n)?;
        let members = members
            .into_iter()
            .map(|m| kind.canonicalize(n, m))
            .collect::<Result<Vec<_>>>()?;
        let mut sorted: Vec<&Vec<Vertex>> = members.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain {
                field: "family",
                reason: format!("duplicate member {:?}", w[0]),
            });
        }
        Ok(Family {
            n,
            kind,
            members,
            meta,
        })
    }

    /// For members already known to be canonical and distinct.
    pub(crate) fn from_canonical(
        n: usize,
        kind: Kind,
        members: Vec<Vec<Vertex>>,
        meta: Meta,
    ) -> Self {
        debug_assert!(members
            .iter()
            .all(|m| kind.canonicalize(n, m.clone()).as_ref() == Ok(m)));
        Family {
            n,
            kind,
            members,
            meta,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<Vertex>] {
        &self.members
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        assert_eq!(self.kind, Kind::Permutations);
        self.members
            .iter()
            .map(|m| Permutation::new_unchecked(m.clone()))
            .collect()
    }

    pub fn paths(&self) -> Vec<HamiltonPath> {
        assert_eq!(self.kind, Kind::Paths);
        self.members
            .iter()
            .map(|m| HamiltonPath::canonical_unchecked(m.clone()))
            .collect()
    }

    pub fn cycles(&self) -> Vec<HamiltonCycle> {
        assert_eq!(self.kind, Kind::Cycles);
        self.members
            .iter()
            .map(|m| HamiltonCycle::canonical_unchecked(m.clone()))
            .collect()
    }

    /// Checks every pair for a witness of `relation` and re-verifies each
    /// witness from scratch. Reports the first offending pair in
    /// lexicographic pair order.
    pub fn verify(&self, relation: Separation) -> Result<Verification> {
        if relation.kind() != self.kind {
            return Err(Error::IncompatibleRelation {
                relation: relation.name(),
                universe: self.kind.name(),
            });
        }
        let m = &self.members;
        let failure = (0..m.len()).into_par_iter().find_map_first(|i| {
            (i + 1..m.len()).find_map(|j| match relation.witness(&m[i], &m[j]) {
                None => Some(PairFailure {
                    i,
                    j,
                    witness: None,
                }),
                Some(w) if !w.verify(&m[i], &m[j]) || !w.verify(&m[j], &m[i]) => {
                    Some(PairFailure {
                        i,
                        j,
                        witness: Some(w),
                    })
                }
                Some(_) => None,
            })
        });
        let k = m.len();
        Ok(Verification {
            members: k,
            pairs: k * k.saturating_sub(1) / 2,
            failure,
        })
    }
}

/// A pair that failed verification: either no witness exists, or the
/// reported one did not re-verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub members: usize,
    pub pairs: usize,
    pub failure: Option<PairFailure>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}
