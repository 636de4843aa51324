use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};

/// Interned element labels with a fixed index order.
///
/// Cloning is cheap; the label list is shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    names: Arc<[String]>,
}

impl GroundSet {
    pub const MAX_LEN: usize = ElemSet::CAPACITY;

    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = labels.into_iter().map(Into::into).collect();
        if names.len() > Self::MAX_LEN {
            return Err(Error::TooLarge {
                what: "ground set size",
                limit: Self::MAX_LEN,
                got: names.len(),
            });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { names: names.into() })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// All elements.
    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// The set named by `labels`; unknown labels are an error.
    pub fn set_of<I, S>(&self, labels: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = ElemSet::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Labels of the members of `set`, in index order.
    pub fn labels_of(&self, set: ElemSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Renders `set` as `{a,b,c}`.
    pub fn format(&self, set: ElemSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// A new ground set with `label` appended at index `len()`.
    pub fn with_element(&self, label: &str) -> Result<Self> {
        if self.index_of(label).is_some() {
            return Err(Error::LabelExists(label.to_string()));
        }
        Self::new(self.names.iter().cloned().chain([label.to_string()]))
    }

    /// `base` if it is not taken, otherwise `base` followed by enough `'`
    /// characters to make it fresh.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut label = base.to_string();
        while self.index_of(&label).is_some() {
            label.push('\'');
        }
        label
    }

    /// The ground set of the restriction to `keep`, together with the old
    /// index of each new element.
    pub fn restrict(&self, keep: ElemSet) -> (Self, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&i| i < self.len()).collect();
        let names: Vec<String> = old.iter().map(|&i| self.names[i].clone()).collect();
        (Self { names: names.into() }, old)
    }
}

impl std::fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Re-indexes `set` through `old_of_new` (as returned by
/// [`GroundSet::restrict`]); members outside the kept part are dropped.
pub fn project(set: ElemSet, old_of_new: &[usize]) -> ElemSet {
    old_of_new
        .iter()
        .enumerate()
        .filter(|&(_, &old)| set.contains(old))
        .map(|(new, _)| new)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_oversize() {
        assert!(matches!(
            GroundSet::new(["a", "b", "a"]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
        let many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(matches!(GroundSet::new(many), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn labels_round_trip() {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let s = g.set_of(["d", "b"]).unwrap();
        assert_eq!(g.labels_of(s), ["b", "d"]);
        assert_eq!(g.format(s), "{b,d}");
        assert!(matches!(g.set_of(["z"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn fresh_labels_and_restriction() {
        let g = GroundSet::new(["x", "x'", "y"]).unwrap();
        assert_eq!(g.fresh_label("x"), "x''");
        assert_eq!(g.fresh_label("z"), "z");
        assert!(g.with_element("y").is_err());
        let (h, old) = g.restrict(ElemSet::from_iter([0, 2]));
        assert_eq!(h.names(), ["x", "y"]);
        assert_eq!(project(ElemSet::from_iter([1, 2]), &old), ElemSet::singleton(1));
    }
}
