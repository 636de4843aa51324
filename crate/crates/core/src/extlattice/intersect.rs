use std::collections::HashMap;

use super::{lattice_ta, LatticeKind, SubsetLattice};
use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::system::SetSystem;

/// The extensions common to two presentations of one matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    /// `L_{A,B}`: the `I ∈ L_A` whose extension is also some `M[B^J]`.
    pub left: SubsetLattice,
    /// `L_{B,A}`, likewise.
    pub right: SubsetLattice,
    /// The matched `(I, J)` with `M[A^I] = M[B^J]`, in the canonical order
    /// of `I`.
    pub pairs: Vec<(IndexSet, IndexSet)>,
}

impl IntersectionLattice {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn same_matroid(a: &SetSystem, b: &SetSystem) -> Result<()> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch);
    }
    if !Matroid::transversal(a).equals(&Matroid::transversal(b))? {
        return Err(Error::DifferentMatroids);
    }
    Ok(())
}

/// Matches `T_A` against `T_B` by comparing basis families.
pub fn intersection_lattice(a: &SetSystem, b: &SetSystem) -> Result<IntersectionLattice> {
    same_matroid(a, b)?;
    let tb: HashMap<Vec<ElemSet>, IndexSet> = lattice_ta(b)?
        .into_iter()
        .map(|rec| (rec.extension.bases().to_vec(), rec.set))
        .collect();
    let pairs: Vec<(IndexSet, IndexSet)> = lattice_ta(a)?
        .into_iter()
        .filter_map(|rec| tb.get(rec.extension.bases()).map(|&j| (rec.set, j)))
        .collect();
    let r = a.len();
    Ok(IntersectionLattice {
        left: SubsetLattice::new(r, pairs.iter().map(|p| p.0))?,
        right: SubsetLattice::new(r, pairs.iter().map(|p| p.1))?,
        pairs,
    })
}

/// `L_{A,B}` built directly: the intersection closure of the sets
/// `s_A(X)` with `|s_A(X)| = r(X) = |s_B(X)|`. As with `L'_A`, independent
/// `X` suffice.
pub fn star_lattice(a: &SetSystem, b: &SetSystem) -> Result<SubsetLattice> {
    same_matroid(a, b)?;
    let mut gens = Vec::new();
    Matroid::transversal(a).for_each_independent(a.ground().full(), |x| {
        let s = a.support(x);
        if s.len() == x.len() && b.support(x).len() == x.len() {
            gens.push(s);
        }
    });
    let family = SubsetLattice::trusted(a.len(), gens, LatticeKind::Family);
    Ok(family.intersection_closure())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extlattice::lattice_la;

    fn example2() -> (SetSystem, SetSystem) {
        let a = SetSystem::from_chars("abcdefgh", &["abcdg", "cdefg", "abefg", "gh"]).unwrap();
        let b = SetSystem::from_chars("abcdefgh", &["abcdh", "cdefh", "abefh", "gh"]).unwrap();
        (a, b)
    }

    #[test]
    fn self_intersection_is_the_whole_lattice() {
        let a = SetSystem::from_chars("abcdefghi", &["abc", "abcdef", "defghi", "ghi"]).unwrap();
        let both = intersection_lattice(&a, &a).unwrap();
        assert_eq!(both.left, lattice_la(&a).unwrap());
        assert_eq!(both.left, both.right);
        assert!(both.pairs.iter().all(|(i, j)| i == j));
        assert_eq!(star_lattice(&a, &a).unwrap(), both.left);
    }

    #[test]
    fn example2_pairs() {
        let (a, b) = example2();
        let both = intersection_lattice(&a, &b).unwrap();
        assert_eq!(star_lattice(&a, &b).unwrap(), both.left);
        assert_eq!(star_lattice(&b, &a).unwrap(), both.right);
        for &(i, j) in &both.pairs {
            assert_eq!(i.len(), j.len());
        }
        // {1} and {2} are closed in both, and the extensions they give are
        // common to both lattices
        let one = IndexSet::from_one_based([1]);
        let two = IndexSet::from_one_based([2]);
        assert!(both.pairs.contains(&(one, one)));
        assert!(both.pairs.contains(&(two, two)));
    }

    #[test]
    fn rejects_different_matroids() {
        let (a, _) = example2();
        let c = SetSystem::from_chars("abcdefgh", &["abcdg", "cdefg", "abefg", "h"]).unwrap();
        assert!(matches!(intersection_lattice(&a, &c), Err(Error::DifferentMatroids)));
    }
}
