//! Presentations realising a prescribed lattice.
//!
//! Any sublattice `L` of `2^[r]` containing `∅` and `[r]` is `L_A` for a
//! maximal presentation of some rank-`r` transversal matroid, and also
//! `L_B` for a presentation of every uniform matroid `U_{r,n}` with
//! `n ≥ r`. Both constructions are implemented here, together with the
//! order ideals of a finite poset, which produce every such lattice up to
//! isomorphism.

use std::fmt;

use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::extlattice::SubsetLattice;
use crate::ground::GroundSet;
use crate::io::PosetRelation;
use crate::system::SetSystem;

/// A sublattice of `2^[r]` that contains `∅` and `[r]`.
#[derive(Clone, PartialEq, Eq)]
pub struct InputLattice(SubsetLattice);

impl InputLattice {
    pub fn lattice(&self) -> &SubsetLattice {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.r()
    }

    pub fn members(&self) -> &[IndexSet] {
        self.0.members()
    }

    pub fn into_lattice(self) -> SubsetLattice {
        self.0
    }
}

impl fmt::Debug for InputLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checks closure under ∪ and ∩ and the presence of `∅` and `[r]`.
pub fn validate_input_lattice(
    r: usize,
    members: impl IntoIterator<Item = IndexSet>,
) -> Result<InputLattice> {
    if r == 0 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    let l = SubsetLattice::new(r, members)?;
    for required in [IndexSet::EMPTY, IndexSet::full(r)] {
        if !l.contains(required) {
            return Err(Error::InvalidLattice(format!("{required} is missing")));
        }
    }
    Ok(InputLattice(l))
}

/// `I_0 = I - ⋃ { J ∈ L : J ⊊ I }` for each member `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOccurrence {
    /// `(I, I_0)` in the canonical order of `L`.
    pub entries: Vec<(IndexSet, IndexSet)>,
}

impl FirstOccurrence {
    /// The unique member `I` with `i ∈ I_0`.
    pub fn owner(&self, i: usize) -> IndexSet {
        self.entries
            .iter()
            .find(|(_, first)| first.contains(i))
            .map(|&(set, _)| set)
            .expect("the I_0 partition [r]")
    }

    pub fn first_of(&self, set: IndexSet) -> Option<IndexSet> {
        self.entries.iter().find(|(s, _)| *s == set).map(|&(_, f)| f)
    }
}

pub fn first_occurrence(l: &InputLattice) -> FirstOccurrence {
    let members = l.members();
    let entries = members
        .iter()
        .map(|&set| {
            let below = members
                .iter()
                .filter(|j| j.is_proper_subset(set))
                .fold(IndexSet::EMPTY, |acc, &j| acc | j);
            (set, set - below)
        })
        .collect();
    FirstOccurrence { entries }
}

/// A maximal presentation `A` with `L_A = L`.
///
/// Each nonempty member `I` contributes a block `X_I` of `|I| + 1` fresh
/// elements, labelled `"{I}:1"`, `"{I}:2"`, ...; then
/// `A_i = ⋃ { X_I : i ∈ I }`. Every element of `X_I` has support `I`.
pub fn build_maximal_presentation(l: &InputLattice) -> Result<SetSystem> {
    let mut labels = Vec::new();
    let mut blocks = Vec::new();
    for &set in l.members().iter().filter(|s| !s.is_empty()) {
        let start = labels.len();
        labels.extend((1..=set.len() + 1).map(|k| format!("{set}:{k}")));
        blocks.push((set, start..labels.len()));
    }
    let ground = GroundSet::new(labels)?;
    let sets = (0..l.r())
        .map(|i| {
            blocks
                .iter()
                .filter(|(set, _)| set.contains(i))
                .flat_map(|(_, range)| range.clone())
                .collect::<ElemSet>()
        })
        .collect();
    SetSystem::new(ground, sets)
}

/// A presentation `B` of `U_{r,n}` with `L_B = L`, on ground `"1".."n"`:
/// `B_i = ([n] - [r]) ∪ ⋃ { J_0 : J ∈ L, I ⊆ J }` where `I` is the member
/// with `i ∈ I_0`.
pub fn build_uniform_presentation(l: &InputLattice, n: usize) -> Result<SetSystem> {
    let r = l.r();
    if n < r {
        return Err(Error::Parameter(format!("n = {n} is less than r = {r}")));
    }
    let ground = GroundSet::new((1..=n).map(|k| k.to_string()))?;
    let first = first_occurrence(l);
    let tail = ElemSet::full(n) - ElemSet::full(r);
    let sets = (0..r)
        .map(|i| {
            let owner = first.owner(i);
            first
                .entries
                .iter()
                .filter(|(j, _)| owner.is_subset(*j))
                .fold(tail, |acc, &(_, j0)| acc | ElemSet(j0.bits() as u64))
        })
        .collect();
    SetSystem::new(ground, sets)
}

/// Largest poset accepted by [`ideals_of_poset`].
pub const MAX_POSET_POINTS: usize = 20;

/// The lattice of down-closed subsets of a finite poset, over `[k]`.
///
/// `rel.less` may be any relation whose transitive closure is a strict
/// partial order; cycles are rejected.
pub fn ideals_of_poset(rel: &PosetRelation) -> Result<InputLattice> {
    let k = rel.points;
    if k == 0 || k > MAX_POSET_POINTS {
        return Err(Error::Parameter(format!(
            "a poset needs 1..={MAX_POSET_POINTS} points, got {k}"
        )));
    }
    // below[j] = points strictly below j
    let mut below = vec![IndexSet::EMPTY; k];
    for &(i, j) in &rel.less {
        if i >= k || j >= k {
            return Err(Error::IndexOutOfRange { index: i.max(j) + 1, r: k });
        }
        below[j].insert(i);
    }
    loop {
        let mut changed = false;
        for j in 0..k {
            let closed = below[j]
                .iter()
                .fold(below[j], |acc, i| acc | below[i]);
            if closed != below[j] {
                below[j] = closed;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if let Some(j) = (0..k).find(|&j| below[j].contains(j)) {
        return Err(Error::NotPartialOrder(format!("point {} lies on a cycle", j + 1)));
    }
    let ideals = IndexSet::full(k)
        .subsets()
        .filter(|d| d.iter().all(|j| below[j].is_subset(*d)));
    validate_input_lattice(k, ideals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(list: &[&[usize]]) -> Vec<IndexSet> {
        list.iter().map(|s| IndexSet::from_one_based(s.iter().copied())).collect()
    }

    fn fig4() -> InputLattice {
        validate_input_lattice(
            6,
            sets(&[&[], &[1], &[1, 2, 3], &[1, 4, 5], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6]]),
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(validate_input_lattice(2, sets(&[&[], &[1], &[2], &[1, 2]])).is_ok());
        let err = validate_input_lattice(3, sets(&[&[], &[1], &[2], &[1, 2, 3]])).unwrap_err();
        assert!(err.to_string().contains("{1} ∪ {2}"));
        assert!(validate_input_lattice(2, sets(&[&[1], &[1, 2]])).is_err());
        assert!(validate_input_lattice(2, sets(&[&[], &[1]])).is_err());
    }

    #[test]
    fn first_occurrences_of_fig4() {
        let f = first_occurrence(&fig4());
        let firsts: Vec<IndexSet> = f.entries.iter().map(|e| e.1).collect();
        assert_eq!(firsts, sets(&[&[], &[1], &[2, 3], &[4, 5], &[], &[6]]));
        assert_eq!(f.owner(4), IndexSet::from_one_based([1, 4, 5]));
    }

    #[test]
    fn fig4_uniform_presentation() {
        let b = build_uniform_presentation(&fig4(), 7).unwrap();
        let shown: Vec<String> = b.sets().iter().map(|&s| b.ground().format(s)).collect();
        assert_eq!(
            shown,
            [
                "{1,2,3,4,5,6,7}",
                "{2,3,6,7}",
                "{2,3,6,7}",
                "{4,5,6,7}",
                "{4,5,6,7}",
                "{6,7}"
            ]
        );
        assert!(build_uniform_presentation(&fig4(), 5).is_err());
    }

    #[test]
    fn small_uniform_cases() {
        let boolean = validate_input_lattice(3, IndexSet::full(3).subsets()).unwrap();
        let b = build_uniform_presentation(&boolean, 3).unwrap();
        assert_eq!(b.sets(), &[ElemSet(1), ElemSet(2), ElemSet(4)]);
        let trivial = validate_input_lattice(2, sets(&[&[], &[1, 2]])).unwrap();
        let b = build_uniform_presentation(&trivial, 3).unwrap();
        assert_eq!(b.sets(), &[ElemSet(0b111), ElemSet(0b111)]);
    }

    #[test]
    fn maximal_presentation_sizes() {
        assert_eq!(build_maximal_presentation(&fig4()).unwrap().ground().len(), 23);
        let b2 = validate_input_lattice(2, IndexSet::full(2).subsets()).unwrap();
        let a = build_maximal_presentation(&b2).unwrap();
        assert_eq!(a.ground().len(), 7);
        assert_eq!(a.ground().name(0), "{1}:1");
        let trivial = validate_input_lattice(3, sets(&[&[], &[1, 2, 3]])).unwrap();
        let a = build_maximal_presentation(&trivial).unwrap();
        assert_eq!(a.ground().len(), 4);
        assert!(a.sets().iter().all(|&s| s == ElemSet::full(4)));
    }

    #[test]
    fn ideals() {
        let p = PosetRelation { points: 3, less: vec![(0, 1)] };
        assert_eq!(ideals_of_poset(&p).unwrap().members().len(), 6);
        let antichain = PosetRelation { points: 3, less: vec![] };
        assert_eq!(ideals_of_poset(&antichain).unwrap().lattice(), &SubsetLattice::boolean(3));
        let chain = PosetRelation { points: 3, less: vec![(0, 1), (1, 2)] };
        assert_eq!(
            ideals_of_poset(&chain).unwrap().members(),
            &sets(&[&[], &[1], &[1, 2], &[1, 2, 3]])[..]
        );
        let cycle = PosetRelation { points: 2, less: vec![(0, 1), (1, 0)] };
        assert!(matches!(ideals_of_poset(&cycle), Err(Error::NotPartialOrder(_))));
        let reflexive = PosetRelation { points: 2, less: vec![(0, 0)] };
        assert!(ideals_of_poset(&reflexive).is_err());
    }
}
