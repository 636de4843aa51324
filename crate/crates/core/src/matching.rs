//! Bipartite matching of elements into the sets of a set system.
//!
//! Rank in a transversal matroid is the size of a maximum matching between
//! the elements and the sets containing them. Everything here uses Kuhn's
//! augmenting paths, trying sets in ascending index order, so results are
//! reproducible. [`Augmenter`] keeps a matching alive between insertions so
//! that callers growing a set one element at a time pay for one augmenting
//! search per element.

use crate::bits::{ElemSet, IndexSet};
use crate::system::SetSystem;

/// A partial injection `φ: X → [r]` with `e ∈ A_{φ(e)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `(element, set index)` pairs, sorted by element.
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The matched elements.
    pub fn domain(&self) -> ElemSet {
        self.pairs.iter().map(|&(e, _)| e).collect()
    }

    pub fn image(&self) -> IndexSet {
        self.pairs.iter().map(|&(_, i)| i).collect()
    }

    /// Checks injectivity and `e ∈ A_{φ(e)}` against `system`.
    pub fn is_valid_for(&self, system: &SetSystem) -> bool {
        self.image().len() == self.pairs.len()
            && self.domain().len() == self.pairs.len()
            && self.pairs.iter().all(|&(e, i)| system.set(i).contains(e))
    }
}

const FREE: usize = usize::MAX;

/// Incremental maximum matching into at most 32 sets.
///
/// Elements are identified by caller-chosen ids and described only by their
/// support, so an element that is not in the ground set (such as the
/// extension point `x`) can be matched too.
#[derive(Clone, Debug)]
pub struct Augmenter {
    owner: [usize; 32],
    owner_support: [IndexSet; 32],
    size: usize,
}

impl Default for Augmenter {
    fn default() -> Self {
        Self::new()
    }
}

impl Augmenter {
    pub fn new() -> Self {
        Self {
            owner: [FREE; 32],
            owner_support: [IndexSet::EMPTY; 32],
            size: 0,
        }
    }

    /// Current matching size.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Tries to grow the matching by `id`, whose support is `support`.
    /// Returns whether the matching grew; on failure nothing changes.
    pub fn insert(&mut self, id: usize, support: IndexSet) -> bool {
        let mut seen = IndexSet::EMPTY;
        if self.augment(id, support, &mut seen) {
            self.size += 1;
            true
        } else {
            false
        }
    }

    /// Whether `support` could be matched on top of the current matching,
    /// without changing it.
    pub fn can_insert(&self, support: IndexSet) -> bool {
        self.clone().insert(FREE - 1, support)
    }

    fn augment(&mut self, id: usize, support: IndexSet, seen: &mut IndexSet) -> bool {
        for i in support.iter() {
            if seen.contains(i) {
                continue;
            }
            seen.insert(i);
            let taken = self.owner[i];
            if taken == FREE || self.augment(taken, self.owner_support[i], seen) {
                self.owner[i] = id;
                self.owner_support[i] = support;
                return true;
            }
        }
        false
    }

    /// `(id, set index)` pairs, sorted by id.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = (0..32)
            .filter(|&i| self.owner[i] != FREE)
            .map(|i| (self.owner[i], i))
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

/// A maximum matching of a subset of `x`, found by inserting the elements of
/// `x` in ascending order.
pub fn max_matching(system: &SetSystem, x: ElemSet) -> Matching {
    let supports = system.element_supports();
    let mut aug = Augmenter::new();
    for e in x.iter() {
        aug.insert(e, supports[e]);
    }
    Matching { pairs: aug.pairs() }
}

/// `r_{M[A]}(X)`.
pub fn rank(system: &SetSystem, x: ElemSet) -> usize {
    rank_with(&system.element_supports(), x)
}

/// Rank from precomputed element supports.
pub fn rank_with(supports: &[IndexSet], x: ElemSet) -> usize {
    let mut aug = Augmenter::new();
    for e in x.iter() {
        aug.insert(e, supports[e]);
    }
    aug.size()
}

/// Whether `X` is a partial transversal.
pub fn is_independent(system: &SetSystem, x: ElemSet) -> bool {
    independent_with(&system.element_supports(), x)
}

pub fn independent_with(supports: &[IndexSet], x: ElemSet) -> bool {
    let mut aug = Augmenter::new();
    x.iter().all(|e| aug.insert(e, supports[e]))
}
