//! Anatomy of the permutations that are *not* two-separated from the
//! identity: the follower property, close-enough followers, runs of big
//! jumps, and free versus constrained positions.
//!
//! A permutation `p` of `[n]` fails to be two-separated from the identity
//! exactly when, for every position `j <= n-2` whose value is neither `n`
//! nor `n-1`, one of `p[j+1]`, `p[j+2]` lies in `{p[j]+1, p[j]+2}`. That
//! is the *follower property*. Everything else in this module describes
//! how much freedom such a permutation has, which is what bounds their
//! number.
//!
//! Positions are 1-based throughout.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::objects::{Permutation, Vertex};

/// Outcome of the follower-property check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FollowerCheck {
    Holds,
    /// First position `j` at which neither follower is close enough.
    FailsAt(usize),
}

impl FollowerCheck {
    pub fn holds(self) -> bool {
        self == FollowerCheck::Holds
    }
}

fn close(p: &[Vertex], j: usize, k: usize) -> bool {
    let (a, b) = (p[j - 1] as i32, p[k - 1] as i32);
    b == a + 1 || b == a + 2
}

/// For each `j <= n-2` with `p[j]` not in `{n, n-1}`, at least one of
/// `p[j+1]`, `p[j+2]` is in `{p[j]+1, p[j]+2}`.
pub fn follower_property(p: &Permutation) -> FollowerCheck {
    let s = p.as_slice();
    let n = s.len();
    for j in 1..=n.saturating_sub(2) {
        if s[j - 1] as usize >= n - 1 {
            continue;
        }
        if !close(s, j, j + 1) && !close(s, j, j + 2) {
            return FollowerCheck::FailsAt(j);
        }
    }
    FollowerCheck::Holds
}

/// Which of the two followers of position `j` is close enough.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Follower {
    First,
    Second,
    Both,
    Neither,
}

pub fn close_enough_follower(p: &Permutation, j: usize) -> Result<Follower> {
    let n = p.n();
    if j == 0 || j + 2 > n {
        return Err(Error::PositionOutOfRange {
            pos: j,
            max: n.saturating_sub(2),
        });
    }
    let s = p.as_slice();
    Ok(match (close(s, j, j + 1), close(s, j, j + 2)) {
        (true, true) => Follower::Both,
        (true, false) => Follower::First,
        (false, true) => Follower::Second,
        (false, false) => Follower::Neither,
    })
}

/// A run of big jumps occupying positions `head ..= head + len - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Run {
    pub head: usize,
    pub len: usize,
}

impl Run {
    pub fn last(&self) -> usize {
        self.head + self.len - 1
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<usize> {
        self.head..=self.last()
    }
}

/// A step that can start a run: not in `{-2,-1,1,2,3}`.
pub fn is_big_jump(d: i32) -> bool {
    !matches!(d, -2 | -1 | 1 | 2 | 3)
}

/// A step that can continue a run: not in `{-1,1,2}`.
pub fn continues_run(d: i32) -> bool {
    !matches!(d, -1 | 1 | 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunStructure {
    pub runs: Vec<Run>,
    pub free: BTreeSet<usize>,
    pub constrained: BTreeSet<usize>,
}

/// Maximal runs of big jumps, and the free and constrained positions.
///
/// A run starts with a step `p[j+1]-p[j]` that is a big jump and continues
/// while steps continue it. Free positions are position 1, the second
/// position of every run, and the (up to) two positions right after the
/// values `n` and `n-1`.
pub fn run_structure(p: &Permutation) -> RunStructure {
    let s = p.as_slice();
    let n = s.len();
    let step = |k: usize| s[k] as i32 - s[k - 1] as i32; // step from position k to k+1

    let mut runs = Vec::new();
    let mut k = 1;
    while k < n {
        if is_big_jump(step(k)) {
            let head = k;
            let mut last = k + 1;
            while last < n && continues_run(step(last)) {
                last += 1;
            }
            runs.push(Run {
                head,
                len: last - head + 1,
            });
            k = last;
        } else {
            k += 1;
        }
    }

    let mut free = BTreeSet::from([1]);
    free.extend(runs.iter().map(|r| r.head + 1));
    let pos = p.position_table();
    for v in [n, n - 1] {
        if v >= 1 {
            free.extend((pos[v] + 1..=pos[v] + 2).filter(|&j| j <= n));
        }
    }
    let constrained = (1..=n).filter(|j| !free.contains(j)).collect();
    RunStructure {
        runs,
        free,
        constrained,
    }
}

/// The closeness law at a constrained position `j >= 2`: `p[j]` is within
/// `{p[j-1]-2, ..., p[j-1]+3}` or in `{p[j-2]+1, p[j-2]+2}`.
pub fn closeness_law_holds(p: &Permutation, j: usize) -> bool {
    let s = p.as_slice();
    if j < 2 {
        return false;
    }
    let d = s[j - 1] as i32 - s[j - 2] as i32;
    (-2..=3).contains(&d) || (j >= 3 && close(s, j - 2, j))
}

/// Violations of the structural lemmas for one permutation that fails to
/// be two-separated from the identity. Empty for every such permutation if
/// the lemmas hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaViolations {
    pub more_than_three_runs: bool,
    /// Runs containing neither `n` nor `n-1` that are not a suffix.
    pub non_suffix_runs: Vec<Run>,
    pub too_many_free: bool,
    /// Constrained positions breaking the closeness law.
    pub closeness: Vec<usize>,
}

impl LemmaViolations {
    pub fn is_empty(&self) -> bool {
        !self.more_than_three_runs
            && self.non_suffix_runs.is_empty()
            && !self.too_many_free
            && self.closeness.is_empty()
    }
}

/// Checks the run-count, suffix, free-count and closeness lemmas on `p`.
/// Meaningful only when the follower property holds.
pub fn check_lemmas(p: &Permutation) -> LemmaViolations {
    let rs = run_structure(p);
    let n = p.n();
    let s = p.as_slice();
    let big = |v: Vertex| v as usize >= n.saturating_sub(1);
    LemmaViolations {
        more_than_three_runs: rs.runs.len() > 3,
        non_suffix_runs: rs
            .runs
            .iter()
            .filter(|r| r.last() != n && !r.positions().any(|j| big(s[j - 1])))
            .copied()
            .collect(),
        too_many_free: rs.free.len() > rs.runs.len() + 5,
        closeness: rs
            .constrained
            .iter()
            .copied()
            .filter(|&j| !closeness_law_holds(p, j))
            .collect(),
    }
}

/// Analysis of `p` relative to an arbitrary base permutation: values are
/// renamed so that the base becomes the identity first.
pub fn analyze_against(
    base: &Permutation,
    p: &Permutation,
) -> Result<(Permutation, FollowerCheck, RunStructure)> {
    let q = p.relabel_against(base)?;
    let check = follower_property(&q);
    let rs = run_structure(&q);
    Ok((q, check, rs))
}

/// Number of permutations of `[n]` that are not two-separated from the
/// identity, the identity included.
///
/// Enumerates prefixes depth-first and cuts a branch as soon as a position
/// with two placed followers fails the follower property.
pub fn count_incompatible(n: usize, limits: &Limits) -> Result<u64> {
    if n > limits.count_incompatible_max_n {
        return Err(Error::CapExceeded {
            what: "count_incompatible n",
            size: n as u128,
            cap: limits.count_incompatible_max_n as u128,
        });
    }
    crate::objects::check_n(n)?;
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    Ok(extend(n, &mut prefix, &mut used))
}

fn extend(n: usize, prefix: &mut Vec<Vertex>, used: &mut [bool]) -> u64 {
    let len = prefix.len();
    if len >= 3 {
        let j = len - 2;
        let v = prefix[j - 1] as usize;
        if v < n - 1 && !close(prefix, j, j + 1) && !close(prefix, j, j + 2) {
            return 0;
        }
    }
    if len == n {
        return 1;
    }
    let mut total = 0;
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            prefix.push(v as Vertex);
            total += extend(n, prefix, used);
            prefix.pop();
            used[v] = false;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::is_two_separated;
    use crate::universe::Arrangements;

    fn perm(v: &[Vertex]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn follower_property_examples() {
        assert!(follower_property(&Permutation::identity(7).unwrap()).holds());
        assert!(follower_property(&perm(&[1, 4, 2, 3])).holds());
        assert_eq!(
            follower_property(&perm(&[3, 1, 2, 4, 5])),
            FollowerCheck::FailsAt(1)
        );
    }

    #[test]
    fn follower_examples() {
        let id = Permutation::identity(5).unwrap();
        for j in 1..=3 {
            // p[j+1] = p[j] + 1 and p[j+2] = p[j] + 2.
            assert_eq!(close_enough_follower(&id, j).unwrap(), Follower::Both);
        }
        assert_eq!(
            close_enough_follower(&perm(&[1, 4, 2, 3]), 1).unwrap(),
            Follower::Second
        );
        assert_eq!(
            close_enough_follower(&perm(&[3, 1, 2, 4]), 1).unwrap(),
            Follower::Neither
        );
        assert_eq!(
            close_enough_follower(&perm(&[1, 2, 4, 3]), 1).unwrap(),
            Follower::First
        );
        assert!(matches!(
            close_enough_follower(&id, 4),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(close_enough_follower(&id, 0).is_err());
    }

    #[test]
    fn run_structure_examples() {
        let rs = run_structure(&perm(&[2, 6, 4, 1, 3, 5]));
        assert_eq!(rs.runs, vec![Run { head: 1, len: 4 }]);
        assert_eq!(rs.free, BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(rs.constrained, BTreeSet::from([5, 6]));

        let rs = run_structure(&Permutation::identity(6).unwrap());
        assert!(rs.runs.is_empty());
        assert_eq!(rs.free, BTreeSet::from([1, 6]));
        assert_eq!(rs.constrained, BTreeSet::from([2, 3, 4, 5]));
    }

    #[test]
    fn runs_are_maximal() {
        for p in Arrangements::of_n(6) {
            let s = &p;
            let p = Permutation::new(p.clone()).unwrap();
            let rs = run_structure(&p);
            let step = |k: usize| s[k] as i32 - s[k - 1] as i32;
            for r in &rs.runs {
                assert!(r.len >= 2);
                assert!(is_big_jump(step(r.head)));
                for k in r.head + 1..r.last() {
                    assert!(continues_run(step(k)));
                }
                // cannot extend to the right
                if r.last() < 6 {
                    assert!(!continues_run(step(r.last())));
                }
                // cannot extend to the left as a new head
                if r.head > 1 {
                    assert!(!is_big_jump(step(r.head - 1)));
                }
            }
            for w in rs.runs.windows(2) {
                assert!(w[0].last() < w[1].head);
            }
            assert!(rs.free.contains(&1));
            assert!(rs.free.is_disjoint(&rs.constrained));
            assert_eq!(rs.free.len() + rs.constrained.len(), 6);
        }
    }

    #[test]
    fn relabeling_reduces_to_identity() {
        let base = perm(&[3, 1, 4, 2, 5]);
        let (q, check, _) = analyze_against(&base, &base).unwrap();
        assert_eq!(q, Permutation::identity(5).unwrap());
        assert!(check.holds());
        // two-separation from `base` is two-separation of relabeled p from ι
        let id = Permutation::identity(5).unwrap();
        for s in Arrangements::of_n(5) {
            let p = Permutation::new(s).unwrap();
            let (q, check, _) = analyze_against(&base, &p).unwrap();
            assert_eq!(
                is_two_separated(&base, &p).unwrap().is_none(),
                is_two_separated(&id, &q).unwrap().is_none()
            );
            assert_eq!(
                check.holds(),
                is_two_separated(&base, &p).unwrap().is_none()
            );
        }
    }

    #[test]
    fn count_matches_brute_force() {
        let limits = Limits::default();
        for n in 1..=7 {
            let id = Permutation::identity(n).unwrap();
            let brute = Arrangements::of_n(n)
                .filter(|s| {
                    let p = Permutation::new(s.clone()).unwrap();
                    is_two_separated(&id, &p).unwrap().is_none()
                })
                .count() as u64;
            assert_eq!(count_incompatible(n, &limits).unwrap(), brute, "n={n}");
        }
        assert_eq!(count_incompatible(4, &limits).unwrap(), 24);
        assert_eq!(count_incompatible(5, &limits).unwrap(), 89);
        assert!(count_incompatible(10, &limits).is_err());
    }
}
