use std::collections::HashSet;
use std::fmt;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::io;

/// Which closure properties a [`SubsetLattice`] promises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Closed under union and intersection.
    Lattice,
    /// Closed under union only.
    JoinClosed,
    /// No closure promised.
    Family,
}

/// A family of subsets of `[r]`, held in canonical order (cardinality, then
/// lexicographic), without repeats.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetLattice {
    r: usize,
    members: Vec<IndexSet>,
    kind: LatticeKind,
}

/// Irreducible elements of a sublattice of `2^[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibles {
    /// Members with exactly one lower cover, canonical order.
    pub join: Vec<IndexSet>,
    /// Members with exactly one upper cover, canonical order.
    pub meet: Vec<IndexSet>,
    /// `S_i`: the least member containing `i`, per 0-based `i`.
    pub least_containing: Vec<Option<IndexSet>>,
    /// The greatest member avoiding `i`, per 0-based `i`.
    pub greatest_avoiding: Vec<Option<IndexSet>>,
}

fn normalize(r: usize, members: impl IntoIterator<Item = IndexSet>) -> Result<Vec<IndexSet>> {
    if r > IndexSet::CAPACITY {
        return Err(Error::TooLarge {
            what: "r",
            limit: IndexSet::CAPACITY,
            got: r,
        });
    }
    let full = IndexSet::full(r);
    let mut out: Vec<IndexSet> = members.into_iter().collect();
    if let Some(bad) = out.iter().find(|m| !m.is_subset(full)) {
        return Err(Error::InvalidLattice(format!("{bad} is not a subset of [{r}]")));
    }
    out.sort_by(IndexSet::canonical_cmp);
    out.dedup();
    Ok(out)
}

impl SubsetLattice {
    /// A ∪/∩-closed family; the error names a pair whose union or
    /// intersection is missing.
    pub fn new(r: usize, members: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        let l = Self {
            r,
            members: normalize(r, members)?,
            kind: LatticeKind::Lattice,
        };
        if let Some((a, b)) = l.union_violation() {
            return Err(Error::InvalidLattice(format!("{a} ∪ {b} = {} is missing", a | b)));
        }
        if let Some((a, b)) = l.intersection_violation() {
            return Err(Error::InvalidLattice(format!("{a} ∩ {b} = {} is missing", a & b)));
        }
        Ok(l)
    }

    /// A ∪-closed family.
    pub fn join_closed(r: usize, members: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        let l = Self {
            r,
            members: normalize(r, members)?,
            kind: LatticeKind::JoinClosed,
        };
        if let Some((a, b)) = l.union_violation() {
            return Err(Error::InvalidLattice(format!("{a} ∪ {b} = {} is missing", a | b)));
        }
        Ok(l)
    }

    /// A family with no closure promised.
    pub fn family(r: usize, members: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        Ok(Self {
            r,
            members: normalize(r, members)?,
            kind: LatticeKind::Family,
        })
    }

    /// For callers that establish closure themselves, e.g. as the fixed
    /// sets of a closure operator.
    pub(crate) fn trusted(r: usize, mut members: Vec<IndexSet>, kind: LatticeKind) -> Self {
        members.sort_by(IndexSet::canonical_cmp);
        members.dedup();
        let l = Self { r, members, kind };
        if cfg!(debug_assertions) && l.len() <= 256 {
            match kind {
                LatticeKind::Lattice => {
                    debug_assert!(l.union_violation().is_none() && l.intersection_violation().is_none())
                }
                LatticeKind::JoinClosed => debug_assert!(l.union_violation().is_none()),
                LatticeKind::Family => {}
            }
        }
        l
    }

    /// `2^[r]`.
    pub fn boolean(r: usize) -> Self {
        let members = IndexSet::full(r).subsets().collect();
        Self::trusted(r, members, LatticeKind::Lattice)
    }

    /// The sublattice of `2^[r]` generated by `gens` under ∪ and ∩.
    pub fn generated(r: usize, gens: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        let start = normalize(r, gens)?;
        let closed = close_under(&start, |a, b| [a | b, a & b]);
        Ok(Self::trusted(r, closed, LatticeKind::Lattice))
    }

    pub fn from_family(family: &io::Family) -> Result<Self> {
        Self::new(family.r, family.sets.iter().copied())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn members(&self) -> &[IndexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: IndexSet) -> bool {
        self.members
            .binary_search_by(|m| m.canonical_cmp(&set))
            .is_ok()
    }

    pub fn is_subfamily_of(&self, other: &Self) -> bool {
        self.r == other.r && self.members.iter().all(|&m| other.contains(m))
    }

    /// Some pair of members whose union is not a member.
    pub fn union_violation(&self) -> Option<(IndexSet, IndexSet)> {
        self.pair_violation(|a, b| a | b)
    }

    /// Some pair of members whose intersection is not a member.
    pub fn intersection_violation(&self) -> Option<(IndexSet, IndexSet)> {
        self.pair_violation(|a, b| a & b)
    }

    fn pair_violation(&self, op: impl Fn(IndexSet, IndexSet) -> IndexSet) -> Option<(IndexSet, IndexSet)> {
        let set: HashSet<IndexSet> = self.members.iter().copied().collect();
        for (k, &a) in self.members.iter().enumerate() {
            for &b in &self.members[k + 1..] {
                if !set.contains(&op(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_union_closed(&self) -> bool {
        self.union_violation().is_none()
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.intersection_violation().is_none()
    }

    /// Closes the family under pairwise intersection. The kind records
    /// whether the result also happens to be ∪-closed.
    pub fn intersection_closure(&self) -> Self {
        let closed = close_under(&self.members, |a, b| [a & b, a & b]);
        let mut out = Self::trusted(self.r, closed, LatticeKind::Family);
        if out.is_union_closed() {
            out.kind = LatticeKind::Lattice;
        }
        out
    }

    /// Least upper bound of two members in the induced order, if any.
    fn order_join(&self, a: IndexSet, b: IndexSet) -> Option<IndexSet> {
        let uppers: Vec<IndexSet> = self
            .members
            .iter()
            .copied()
            .filter(|m| a.is_subset(*m) && b.is_subset(*m))
            .collect();
        uppers.iter().copied().find(|u| uppers.iter().all(|v| u.is_subset(*v)))
    }

    fn order_meet(&self, a: IndexSet, b: IndexSet) -> Option<IndexSet> {
        let lowers: Vec<IndexSet> = self
            .members
            .iter()
            .copied()
            .filter(|m| m.is_subset(a) && m.is_subset(b))
            .collect();
        lowers.iter().copied().find(|l| lowers.iter().all(|v| v.is_subset(*l)))
    }

    /// Checks the distributive law with joins and meets taken in the
    /// induced order rather than as set operations. Cubic in the size.
    pub fn is_distributive(&self) -> bool {
        let m = &self.members;
        for &a in m {
            for &b in m {
                for &c in m {
                    let lhs = self
                        .order_join(b, c)
                        .and_then(|bc| self.order_meet(a, bc));
                    let rhs = match (self.order_meet(a, b), self.order_meet(a, c)) {
                        (Some(ab), Some(ac)) => self.order_join(ab, ac),
                        _ => None,
                    };
                    if lhs.is_none() || lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cover pairs `(lower, upper)` as indices into [`Self::members`],
    /// sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = &self.members;
        let mut out = Vec::new();
        for (hi, &upper) in m.iter().enumerate() {
            let below: Vec<usize> = (0..hi).filter(|&k| m[k].is_proper_subset(upper)).collect();
            for &lo in &below {
                let covered = below
                    .iter()
                    .any(|&mid| m[lo].is_proper_subset(m[mid]));
                if !covered {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Length of the longest chain from a minimal member up to each member.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.len()];
        // canonical order lists every set after its proper subsets
        for (lo, hi) in self.covers() {
            height[hi] = height[hi].max(height[lo] + 1);
        }
        height
    }

    pub fn irreducibles(&self) -> Irreducibles {
        let covers = self.covers();
        let mut lower = vec![0usize; self.len()];
        let mut upper = vec![0usize; self.len()];
        for &(lo, hi) in &covers {
            upper[lo] += 1;
            lower[hi] += 1;
        }
        let pick = |counts: &[usize]| -> Vec<IndexSet> {
            (0..self.len())
                .filter(|&k| counts[k] == 1)
                .map(|k| self.members[k])
                .collect()
        };
        let least_containing = (0..self.r)
            .map(|i| {
                let mut it = self.members.iter().filter(|m| m.contains(i));
                let first = *it.next()?;
                Some(it.fold(first, |acc, &m| acc & m))
            })
            .map(|s| s.filter(|s| self.contains(*s)))
            .collect();
        let greatest_avoiding = (0..self.r)
            .map(|i| {
                let mut it = self.members.iter().filter(|m| !m.contains(i));
                let first = *it.next()?;
                Some(it.fold(first, |acc, &m| acc | m))
            })
            .map(|s| s.filter(|s| self.contains(*s)))
            .collect();
        Irreducibles {
            join: pick(&lower),
            meet: pick(&upper),
            least_containing,
            greatest_avoiding,
        }
    }

    /// Hasse diagram in DOT: one node per member labelled `{i,j,...}`,
    /// one edge per cover, members of equal height on one rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (k, m) in self.members.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{m}\"];\n"));
        }
        let heights = self.heights();
        let top = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=top {
            let nodes: Vec<String> = (0..self.len())
                .filter(|&k| heights[k] == h)
                .map(|k| format!("n{k};"))
                .collect();
            if !nodes.is_empty() {
                out.push_str(&format!("  {{ rank=same; {} }}\n", nodes.join(" ")));
            }
        }
        for (lo, hi) in self.covers() {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        io::lattice_to_json(self.r, &self.members)
    }
}

/// Closes `start` under a binary operation producing up to two results.
fn close_under(start: &[IndexSet], op: impl Fn(IndexSet, IndexSet) -> [IndexSet; 2]) -> Vec<IndexSet> {
    let mut seen: HashSet<IndexSet> = start.iter().copied().collect();
    let mut all: Vec<IndexSet> = seen.iter().copied().collect();
    all.sort_unstable();
    let mut next = 0;
    while next < all.len() {
        let a = all[next];
        next += 1;
        for k in 0..next {
            for c in op(a, all[k]) {
                if seen.insert(c) {
                    all.push(c);
                }
            }
        }
    }
    all
}

impl fmt::Debug for SubsetLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[r={}]", self.kind, self.r)?;
        f.debug_list().entries(self.members.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sets(list: &[&[usize]]) -> Vec<IndexSet> {
        list.iter().map(|s| IndexSet::from_one_based(s.iter().copied())).collect()
    }

    fn fig1_lower_lattice() -> SubsetLattice {
        SubsetLattice::new(
            4,
            sets(&[&[], &[2], &[3], &[1, 2], &[2, 3], &[3, 4], &[1, 2, 3], &[2, 3, 4], &[1, 2, 3, 4]]),
        )
        .unwrap()
    }

    #[test]
    fn validation_names_the_pair() {
        let err = SubsetLattice::new(3, sets(&[&[], &[1], &[2], &[1, 2, 3]])).unwrap_err();
        assert_eq!(err.to_string(), "invalid lattice: {1} ∪ {2} = {1,2} is missing");
        assert!(SubsetLattice::new(2, sets(&[&[], &[1], &[2], &[1, 2]])).is_ok());
        assert!(SubsetLattice::new(2, sets(&[&[3]])).is_err());
    }

    #[test]
    fn irreducibles_of_fig1_lower() {
        let l = fig1_lower_lattice();
        let irr = l.irreducibles();
        assert_eq!(irr.join, sets(&[&[2], &[3], &[1, 2], &[3, 4]]));
        assert_eq!(irr.meet, sets(&[&[1, 2], &[3, 4], &[1, 2, 3], &[2, 3, 4]]));
        let s: Vec<IndexSet> = irr.least_containing.iter().map(|s| s.unwrap()).collect();
        assert_eq!(s, sets(&[&[1, 2], &[2], &[3], &[3, 4]]));
        let g: Vec<IndexSet> = irr.greatest_avoiding.iter().map(|s| s.unwrap()).collect();
        assert_eq!(g, sets(&[&[2, 3, 4], &[3, 4], &[1, 2], &[1, 2, 3]]));
        assert!(l.is_distributive());
    }

    #[test]
    fn irreducibles_of_boolean_and_chain() {
        let b = SubsetLattice::boolean(3);
        let irr = b.irreducibles();
        assert_eq!(irr.join, sets(&[&[1], &[2], &[3]]));
        assert_eq!(irr.meet, sets(&[&[1, 2], &[1, 3], &[2, 3]]));
        let chain = SubsetLattice::new(2, sets(&[&[], &[1], &[1, 2]])).unwrap();
        assert_eq!(chain.irreducibles().join, sets(&[&[1], &[1, 2]]));
        assert_eq!(chain.heights(), vec![0, 1, 2]);
    }

    #[test]
    fn dot_is_stable() {
        let chain = SubsetLattice::new(2, sets(&[&[], &[1], &[1, 2]])).unwrap();
        assert_eq!(
            chain.to_dot(),
            "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n  \
             n0 [label=\"{}\"];\n  n1 [label=\"{1}\"];\n  n2 [label=\"{1,2}\"];\n  \
             { rank=same; n0; }\n  { rank=same; n1; }\n  { rank=same; n2; }\n  \
             n0 -> n1;\n  n1 -> n2;\n}\n"
        );
        let l = fig1_lower_lattice();
        assert_eq!(l.to_dot(), l.clone().to_dot());
        assert_eq!(l.to_dot().matches("->").count(), l.covers().len());
    }

    #[test]
    fn pentagon_is_not_distributive() {
        // {∅, {1}, {1,2}, {3}, [3]} is a lattice in its own order but not
        // a sublattice of 2^[3]
        let f = SubsetLattice::family(3, sets(&[&[], &[1], &[1, 2], &[3], &[1, 2, 3]])).unwrap();
        assert!(!f.is_distributive());
        assert!(!f.is_union_closed());
    }

    #[test]
    fn intersection_closure_and_generation() {
        let f = SubsetLattice::family(3, sets(&[&[1, 2], &[2, 3], &[1, 2, 3]])).unwrap();
        let c = f.intersection_closure();
        assert_eq!(c.members(), &sets(&[&[2], &[1, 2], &[2, 3], &[1, 2, 3]])[..]);
        assert_eq!(c.kind(), LatticeKind::Lattice);
        let g = SubsetLattice::generated(3, sets(&[&[1], &[2]])).unwrap();
        assert_eq!(g.len(), 4);
    }

    proptest! {
        #[test]
        fn join_irreducibles_are_the_least_containing_sets(gens in proptest::collection::vec(0u32..32, 0..6)) {
            let mut all: Vec<IndexSet> = gens.into_iter().map(IndexSet).collect();
            all.push(IndexSet::EMPTY);
            all.push(IndexSet::full(5));
            let l = SubsetLattice::generated(5, all).unwrap();
            prop_assert!(l.is_union_closed() && l.is_intersection_closed());
            let irr = l.irreducibles();
            let mut s: Vec<IndexSet> = irr.least_containing.iter().flatten().copied().collect();
            s.sort_by(IndexSet::canonical_cmp);
            s.dedup();
            prop_assert_eq!(&irr.join, &s);
            let mut g: Vec<IndexSet> = irr.greatest_avoiding.iter().flatten().copied().collect();
            g.sort_by(IndexSet::canonical_cmp);
            g.dedup();
            prop_assert_eq!(&irr.meet, &g);
            prop_assert_eq!(irr.join.len(), irr.meet.len());
            // graded: height of the top is the number of join-irreducibles
            prop_assert_eq!(*l.heights().last().unwrap(), irr.join.len());
        }
    }
}
