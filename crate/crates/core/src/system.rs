use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::ground::GroundSet;

/// An ordered sequence `(A_1, ..., A_r)` of subsets of a ground set.
///
/// Index order matters: two systems that differ only by a permutation of
/// their sets are different values (see
/// [`same_up_to_reindexing`](crate::presentations::same_up_to_reindexing)).
/// Elements lying in no set are allowed; they are loops of the matroid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: GroundSet,
    sets: Vec<ElemSet>,
}

impl SetSystem {
    pub const MAX_SETS: usize = IndexSet::CAPACITY;

    pub fn new(ground: GroundSet, sets: Vec<ElemSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::NoSets);
        }
        if sets.len() > Self::MAX_SETS {
            return Err(Error::TooLarge {
                what: "number of sets",
                limit: Self::MAX_SETS,
                got: sets.len(),
            });
        }
        let full = ground.full();
        if let Some(stray) = sets.iter().find(|s| !s.is_subset(full)) {
            let e = (*stray - full).min_element().unwrap_or(0);
            return Err(Error::UnknownLabel(format!("#{e}")));
        }
        Ok(Self { ground, sets })
    }

    /// Convenience constructor from labels.
    pub fn from_labels<G, S, L>(ground: G, sets: &[S]) -> Result<Self>
    where
        G: IntoIterator,
        G::Item: Into<String>,
        S: AsRef<[L]>,
        L: AsRef<str>,
    {
        let ground = GroundSet::new(ground)?;
        let sets = sets
            .iter()
            .map(|s| ground.set_of(s.as_ref().iter()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, sets)
    }

    /// Parses the compact notation used in tests and examples: single-letter
    /// labels, one string per set, e.g. `("abcd", &["abd", "acd", "bcd"])`.
    pub fn from_chars(ground: &str, sets: &[&str]) -> Result<Self> {
        let ground_labels: Vec<String> = ground.chars().map(String::from).collect();
        let sets: Vec<Vec<String>> = sets
            .iter()
            .map(|s| s.chars().map(String::from).collect())
            .collect();
        Self::from_labels(ground_labels, &sets)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Number of sets, `r`.
    #[inline]
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    /// The set `A_{i+1}` (0-based `i`).
    pub fn set(&self, i: usize) -> ElemSet {
        self.sets[i]
    }

    /// `[r]` as an index mask.
    pub fn all_indices(&self) -> IndexSet {
        IndexSet::full(self.len())
    }

    /// `s_A(X) = { i : X ∩ A_i ≠ ∅ }`.
    pub fn support(&self, x: ElemSet) -> IndexSet {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_disjoint(x))
            .map(|(i, _)| i)
            .collect()
    }

    /// `s_A({e})` for every element `e`, indexed by element.
    pub fn element_supports(&self) -> Vec<IndexSet> {
        let mut out = vec![IndexSet::EMPTY; self.ground.len()];
        for (i, a) in self.sets.iter().enumerate() {
            for e in a.iter() {
                out[e].insert(i);
            }
        }
        out
    }

    /// Returns a copy with `sets` replaced; the ground set is kept.
    pub fn with_sets(&self, sets: Vec<ElemSet>) -> Result<Self> {
        Self::new(self.ground.clone(), sets)
    }

    /// Returns a copy with element `e` added to `A_{i+1}`.
    pub fn with_added(&self, i: usize, e: usize) -> Self {
        let mut sets = self.sets.clone();
        sets[i].insert(e);
        Self { ground: self.ground.clone(), sets }
    }

    /// Returns a copy with element `e` removed from `A_{i+1}`.
    pub fn with_removed(&self, i: usize, e: usize) -> Self {
        let mut sets = self.sets.clone();
        sets[i].remove(e);
        Self { ground: self.ground.clone(), sets }
    }

    /// `(A_i ∩ keep : i ∈ [r])` on the restricted, re-indexed ground set.
    pub fn restrict(&self, keep: ElemSet) -> Self {
        let (ground, old) = self.ground.restrict(keep);
        let sets = self
            .sets
            .iter()
            .map(|&a| crate::ground::project(a, &old))
            .collect();
        Self { ground, sets }
    }

    /// Applies `perm` to the indices: set `i` of the result is `A_{perm[i]}`.
    pub fn reindexed(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len());
        Self {
            ground: self.ground.clone(),
            sets: perm.iter().map(|&p| self.sets[p]).collect(),
        }
    }

    /// Adjoins a new element `label` (at index `n`) to each set in `indices`.
    pub fn adjoin(&self, label: &str, indices: IndexSet) -> Result<Self> {
        let ground = self.ground.with_element(label)?;
        let x = self.ground.len();
        let sets = self
            .sets
            .iter()
            .enumerate()
            .map(|(i, &a)| if indices.contains(i) { a.with(x) } else { a })
            .collect();
        Self::new(ground, sets)
    }
}

impl std::fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, &a) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.ground.format(a))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fig1_lower() -> SetSystem {
        SetSystem::from_chars("abcdefghi", &["abc", "abcdef", "defghi", "ghi"]).unwrap()
    }

    #[test]
    fn supports_from_fig1() {
        let a = fig1_lower();
        let g = a.ground();
        assert_eq!(a.support(g.set_of(["g"]).unwrap()).to_string(), "{3,4}");
        assert_eq!(a.support(g.set_of(["a", "d"]).unwrap()).to_string(), "{1,2,3}");
        assert_eq!(a.support(ElemSet::EMPTY), IndexSet::EMPTY);
    }

    #[test]
    fn rejects_empty_and_unknown() {
        assert!(matches!(SetSystem::from_chars("a", &[]), Err(Error::NoSets)));
        assert!(matches!(
            SetSystem::from_chars("a", &["b"]),
            Err(Error::UnknownLabel(l)) if l == "b"
        ));
    }

    #[test]
    fn adjoin_adds_to_selected_sets() {
        let a = fig1_lower();
        let ext = a.adjoin("x", IndexSet::from_one_based([1, 4])).unwrap();
        let x = ext.ground().index_of("x").unwrap();
        assert_eq!(x, 9);
        assert_eq!(ext.element_supports()[x].to_string(), "{1,4}");
        assert!(matches!(ext.adjoin("x", IndexSet::EMPTY), Err(Error::LabelExists(_))));
    }

    #[test]
    fn restriction_keeps_intersections() {
        let a = fig1_lower();
        let keep = a.ground().set_of(["g", "h", "i"]).unwrap();
        let r = a.restrict(keep);
        assert_eq!(r.ground().names(), ["g", "h", "i"]);
        assert_eq!(r.support(r.ground().full()).to_string(), "{3,4}");
    }

    fn arb_system() -> impl Strategy<Value = SetSystem> {
        (1usize..=5, 1usize..=8).prop_flat_map(|(r, n)| {
            proptest::collection::vec(0u64..(1 << n), r).prop_map(move |masks| {
                let ground = GroundSet::new((0..n).map(|i| format!("e{i}"))).unwrap();
                SetSystem::new(ground, masks.into_iter().map(ElemSet).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn support_is_a_union_homomorphism(a in arb_system(), x: u64, y: u64) {
            let full = a.ground().full();
            let (x, y) = (ElemSet(x) & full, ElemSet(y) & full);
            prop_assert_eq!(a.support(x | y), a.support(x) | a.support(y));
            let in_no_set = x.iter().all(|e| a.sets().iter().all(|s| !s.contains(e)));
            prop_assert_eq!(a.support(x).is_empty(), in_no_set);
        }
    }
}
