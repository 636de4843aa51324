//! Single-element extensions of a presentation and the lattices they form.
//!
//! For `I ⊆ [r]`, `A^I` adjoins a new element `x` to the sets indexed by
//! `I`. The closure `σ_A(I)` adds every `k ∉ I` for which `x` is a coloop of
//! `M[A^I] \ A_k`; the closed sets form the lattice `L_A`, and
//! `I ↦ M[A^I]` maps it isomorphically onto the extensions `T_A` under the
//! weak order.
//!
//! `L_A` is computed two ways that check each other: a scan of `2^[r]` for
//! fixed points of `σ_A`, and the intersection closure of the supports
//! `s_A(X)` of independent sets `X` with `|s_A(X)| = |X|`.

mod intersect;
mod lattice;

pub use intersect::{intersection_lattice, star_lattice, IntersectionLattice};
pub use lattice::{Irreducibles, LatticeKind, SubsetLattice};

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::matching::{rank, Augmenter};
use crate::matroid::Matroid;
use crate::presentations::is_maximal;
use crate::system::SetSystem;

/// Label of the element adjoined by [`extend`].
pub const EXTENSION_LABEL: &str = "x";

/// Largest `r` for which [`lattice_la`] scans all of `2^[r]`.
pub const SCAN_MAX_R: usize = 20;

/// A member `I` of `L_A` together with its extension `M[A^I]`.
#[derive(Clone, Debug)]
pub struct ExtensionRecord {
    pub set: IndexSet,
    pub extension: Matroid,
}

/// `A^I`, with the new element labelled `x`.
pub fn extend(a: &SetSystem, i: IndexSet) -> Result<SetSystem> {
    check_indices(a, i)?;
    a.adjoin(EXTENSION_LABEL, i)
}

/// `(...((A^{I_1})^{I_2})...)^{I_k}`, adding `x1, x2, ...` (primed if a
/// label is taken).
pub fn iterated_extend(a: &SetSystem, steps: &[IndexSet]) -> Result<SetSystem> {
    let mut cur = a.clone();
    for (k, &i) in steps.iter().enumerate() {
        check_indices(a, i)?;
        let label = cur.ground().fresh_label(&format!("x{}", k + 1));
        cur = cur.adjoin(&label, i)?;
    }
    Ok(cur)
}

fn check_indices(a: &SetSystem, i: IndexSet) -> Result<()> {
    match (i - a.all_indices()).min_element() {
        Some(k) => Err(Error::IndexOutOfRange { index: k + 1, r: a.len() }),
        None => Ok(()),
    }
}

fn require_full_rank(a: &SetSystem) -> Result<()> {
    let r = rank(a, a.ground().full());
    if r != a.len() {
        return Err(Error::RankDeficient { sets: a.len(), rank: r });
    }
    Ok(())
}

/// `σ_A` with the per-index matchings it needs precomputed.
///
/// For each `k`, a maximum matching of `E - A_k` is kept. Then `x` (with
/// support `I`) is a coloop of `M[A^I] \ A_k` exactly when that matching
/// has an augmenting path from `x`.
pub struct Closure {
    r: usize,
    residual: Vec<Augmenter>,
}

impl Closure {
    pub fn new(a: &SetSystem) -> Self {
        let supports = a.element_supports();
        let full = a.ground().full();
        let residual = a
            .sets()
            .iter()
            .map(|&s| {
                let mut aug = Augmenter::new();
                for e in (full - s).iter() {
                    aug.insert(e, supports[e]);
                }
                aug
            })
            .collect();
        Self { r: a.len(), residual }
    }

    pub fn close(&self, i: IndexSet) -> IndexSet {
        let mut out = i;
        for k in (IndexSet::full(self.r) - i).iter() {
            if self.residual[k].can_insert(i) {
                out.insert(k);
            }
        }
        out
    }

    pub fn is_closed(&self, i: IndexSet) -> bool {
        (IndexSet::full(self.r) - i)
            .iter()
            .all(|k| !self.residual[k].can_insert(i))
    }
}

/// `σ_A(I)`.
pub fn sigma(a: &SetSystem, i: IndexSet) -> IndexSet {
    Closure::new(a).close(i)
}

/// `L_A` as the fixed points of `σ_A`, by scanning `2^[r]`.
pub fn lattice_la(a: &SetSystem) -> Result<SubsetLattice> {
    let r = a.len();
    if r > SCAN_MAX_R {
        return Err(Error::TooLarge {
            what: "r for the closure scan",
            limit: SCAN_MAX_R,
            got: r,
        });
    }
    require_full_rank(a)?;
    let op = Closure::new(a);
    let members: Vec<IndexSet> = (0..1u32 << r)
        .into_par_iter()
        .map(IndexSet)
        .filter(|&i| op.is_closed(i))
        .collect();
    Ok(SubsetLattice::trusted(r, members, LatticeKind::Lattice))
}

/// Visits every independent `X` of `M[A]` with `|s_A(X)| = |X|`.
fn balanced_independent_sets(a: &SetSystem, mut visit: impl FnMut(ElemSet, IndexSet)) {
    Matroid::transversal(a).for_each_independent(a.ground().full(), |x| {
        let s = a.support(x);
        if s.len() == x.len() {
            visit(x, s);
        }
    });
}

/// `L'_A = { s_A(X) : |s_A(X)| = r(X) }`, a ∪-closed family.
///
/// Restricting to independent `X` loses nothing: a basis `Y` of `X` has
/// `s_A(Y) ⊆ s_A(X)` and `|s_A(Y)| ≥ |Y| = r(X)`.
pub fn lattice_l_prime(a: &SetSystem) -> Result<SubsetLattice> {
    require_full_rank(a)?;
    let mut gens = HashSet::new();
    balanced_independent_sets(a, |_, s| {
        gens.insert(s);
    });
    Ok(SubsetLattice::trusted(a.len(), gens.into_iter().collect(), LatticeKind::JoinClosed))
}

/// `L_A` as the intersection closure of `L'_A`.
pub fn lattice_la_generated(a: &SetSystem) -> Result<SubsetLattice> {
    let closed = lattice_l_prime(a)?.intersection_closure();
    debug_assert_eq!(closed.kind(), LatticeKind::Lattice);
    Ok(closed)
}

/// `L''_A = { s_A(F) : F a cyclic flat of M } ∪ {[r]}`, for maximal `A`.
pub fn lattice_l_doubleprime(a: &SetSystem) -> Result<SubsetLattice> {
    require_full_rank(a)?;
    if !is_maximal(a) {
        return Err(Error::NotMaximal);
    }
    let m = Matroid::transversal(a);
    let mut members: Vec<IndexSet> = m.cyclic_flats()?.iter().map(|&f| a.support(f)).collect();
    members.push(a.all_indices());
    SubsetLattice::family(a.len(), members)
}

/// `T_A`: each `I ∈ L_A` with `M[A^I]`, in the canonical order of `L_A`.
pub fn lattice_ta(a: &SetSystem) -> Result<Vec<ExtensionRecord>> {
    let l = lattice_la(a)?;
    l.members()
        .iter()
        .map(|&i| {
            Ok(ExtensionRecord {
                set: i,
                extension: Matroid::transversal(&extend(a, i)?),
            })
        })
        .collect()
}

/// `⋂ s_A(C - x)` over the circuits `C` of `M[A^I]` that contain `x`.
/// For closed `I` this recovers `I`.
pub fn circuit_support_meet(a: &SetSystem, i: IndexSet) -> Result<IndexSet> {
    let ext = extend(a, i)?;
    let x = a.ground().len();
    let m = Matroid::transversal(&ext);
    Ok(m
        .circuits_through(x)
        .into_iter()
        .fold(a.all_indices(), |acc, c| acc & a.support(c.without(x))))
}

/// Recovers the sets of a minimal presentation from its extensions alone.
///
/// `extensions` are the members of `T_A` in any order, each on `E ∪ {x}`
/// with `x` last. Removing the free extension, the weak-order maximal
/// remaining extensions are the principal extensions on the hyperplanes
/// `E - A_i`; each has exactly one cyclic hyperplane containing `x`, which
/// gives `A_i` back. The sets are returned in canonical order; the indexing
/// of `A` is not recoverable.
pub fn reconstruct_minimal(extensions: &[Matroid]) -> Result<Vec<ElemSet>> {
    let not_minimal = || Error::Parameter("the extensions do not come from a minimal presentation".into());
    let first = extensions.first().ok_or_else(not_minimal)?;
    let r = first.rank();
    if r >= usize::BITS as usize || extensions.len() != 1 << r {
        return Err(not_minimal());
    }
    let x = first.ground().len() - 1;
    let mut top = None;
    for (k, m) in extensions.iter().enumerate() {
        let mut above_all = true;
        for other in extensions {
            if !other.weak_leq(m)? {
                above_all = false;
                break;
            }
        }
        if above_all {
            top = Some(k);
            break;
        }
    }
    let top = top.ok_or_else(not_minimal)?;
    let rest: Vec<&Matroid> = extensions
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != top)
        .map(|(_, m)| m)
        .collect();
    let mut sets = Vec::new();
    for (k, m) in rest.iter().enumerate() {
        let mut dominated = false;
        for (j, other) in rest.iter().enumerate() {
            if j != k && m.weak_leq(other)? && !other.weak_leq(m)? {
                dominated = true;
                break;
            }
        }
        if dominated {
            continue;
        }
        let hyperplanes: Vec<ElemSet> = m
            .cyclic_flats()?
            .into_iter()
            .filter(|f| f.contains(x) && m.rank_of(*f) + 1 == r)
            .collect();
        let [h] = hyperplanes[..] else {
            return Err(not_minimal());
        };
        sets.push(ElemSet::full(x) - h.without(x));
    }
    if sets.len() != r {
        return Err(not_minimal());
    }
    sets.sort_by(ElemSet::canonical_cmp);
    Ok(sets)
}
