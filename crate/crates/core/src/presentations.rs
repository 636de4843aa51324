//! The index-wise order on presentations of a transversal matroid.
//!
//! `A ⪯ B` when `A_i ⊆ B_i` for every `i`. Among presentations of a fixed
//! rank-`r` matroid `M` this order is graded by
//! `r(r-1) - Σ r(M \ A_i)`; minimal presentations are those where every
//! `E - A_i` is a hyperplane, and there is a unique maximal one above any
//! presentation. Single steps are governed by one test: adding `e` to `A_i`
//! keeps the matroid exactly when `e` is a coloop of `M \ A_i`.

use std::collections::HashSet;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::matching::rank;
use crate::matroid::Matroid;
use crate::system::SetSystem;

/// A saturated chain `A^0 ≺· A^1 ≺· ... ≺· A^j` of presentations of one
/// matroid, starting at a minimal presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationChain {
    pub steps: Vec<SetSystem>,
}

impl PresentationChain {
    /// Number of covering steps, `j`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bottom(&self) -> &SetSystem {
        &self.steps[0]
    }

    pub fn top(&self) -> &SetSystem {
        self.steps.last().expect("chains are nonempty")
    }
}

fn check_shape(a: &SetSystem, b: &SetSystem) -> Result<()> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch);
    }
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// `A ⪯ B`: `A_i ⊆ B_i` for all `i`.
pub fn preceq(a: &SetSystem, b: &SetSystem) -> Result<bool> {
    check_shape(a, b)?;
    Ok(a.sets().iter().zip(b.sets()).all(|(x, y)| x.is_subset(*y)))
}

/// Whether `A` and `B` are the same sets listed in a different order.
pub fn same_up_to_reindexing(a: &SetSystem, b: &SetSystem) -> bool {
    if a.ground() != b.ground() || a.len() != b.len() {
        return false;
    }
    let mut x = a.sets().to_vec();
    let mut y = b.sets().to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

fn full_rank(a: &SetSystem) -> Result<usize> {
    let r = rank(a, a.ground().full());
    if r != a.len() {
        return Err(Error::RankDeficient { sets: a.len(), rank: r });
    }
    Ok(r)
}

/// `r(M \ A_i)` for each `i`.
pub fn deletion_ranks(a: &SetSystem) -> Vec<usize> {
    let full = a.ground().full();
    a.sets().iter().map(|&s| rank(a, full - s)).collect()
}

/// Height of `A` above the minimal presentations of `M[A]`:
/// `r(r-1) - Σ r(M \ A_i)`.
pub fn presentation_rank(a: &SetSystem) -> Result<usize> {
    let r = full_rank(a)?;
    let sum: usize = deletion_ranks(a).iter().sum();
    Ok(r * (r - 1) - sum)
}

/// Every `E - A_i` is a hyperplane of `M[A]`.
pub fn is_minimal(a: &SetSystem) -> Result<bool> {
    let r = full_rank(a)?;
    Ok(deletion_ranks(a).iter().all(|&d| d == r - 1))
}

/// No element can be added to any set without changing `M[A]`.
pub fn is_maximal(a: &SetSystem) -> bool {
    addable(a, &Matroid::transversal(a)).is_empty()
}

/// Pairs `(i, e)` such that adding `e` to `A_i` keeps the matroid `m`.
fn addable(a: &SetSystem, m: &Matroid) -> Vec<(usize, usize)> {
    let full = a.ground().full();
    let mut out = Vec::new();
    for (i, &s) in a.sets().iter().enumerate() {
        let rest = full - s;
        let base = m.rank_of(rest);
        out.extend(rest.iter().filter(|&e| m.rank_of(rest.without(e)) < base).map(|e| (i, e)));
    }
    out
}

/// Whether removing `e` from `A_i` keeps the matroid: with `A'` the result,
/// `e` must be a coloop of `M[A'] \ A'_i`.
pub fn can_remove(a: &SetSystem, i: usize, e: usize) -> bool {
    if !a.set(i).contains(e) {
        return false;
    }
    let smaller = a.with_removed(i, e);
    let rest = a.ground().full() - smaller.set(i);
    rank(&smaller, rest.without(e)) < rank(&smaller, rest)
}

fn removable(a: &SetSystem) -> impl Iterator<Item = (usize, usize)> + '_ {
    a.sets()
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |e| (i, e)))
        .filter(|&(i, e)| can_remove(a, i, e))
}

/// The greatest presentation above `A` of the same matroid.
pub fn maximalize(a: &SetSystem) -> SetSystem {
    let m = Matroid::transversal(a);
    let full = a.ground().full();
    let mut sets = a.sets().to_vec();
    loop {
        let mut grew = false;
        for s in sets.iter_mut() {
            let rest = full - *s;
            let base = m.rank_of(rest);
            let gain: ElemSet = rest
                .iter()
                .filter(|&e| m.rank_of(rest.without(e)) < base)
                .collect();
            // adding one coloop can turn others into non-coloops, so add
            // them one at a time
            if let Some(e) = gain.min_element() {
                s.insert(e);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    a.with_sets(sets).expect("same ground")
}

/// Maximalizes by repeatedly adding the pair picked by `choose` from the
/// current list of admissible additions. The result does not depend on the
/// choices; this exists to test exactly that.
pub fn maximalize_with(
    a: &SetSystem,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> SetSystem {
    let m = Matroid::transversal(a);
    let mut cur = a.clone();
    loop {
        let options = addable(&cur, &m);
        if options.is_empty() {
            return cur;
        }
        let (i, e) = options[choose(&options) % options.len()];
        cur = cur.with_added(i, e);
    }
}

/// All minimal presentations `C ⪯ A` of `M[A]`. When `keep` is nonempty,
/// only those with `s_C(e) = s_A(e)` for every `e ∈ keep` are returned;
/// this requires `r(M \ keep) = r(M)`, which guarantees at least one.
///
/// Results are sorted by their set masks.
pub fn minimal_presentations_below(a: &SetSystem, keep: ElemSet) -> Result<Vec<SetSystem>> {
    let r = full_rank(a)?;
    if !keep.is_empty() {
        let kept = rank(a, a.ground().full() - keep);
        if kept != r {
            return Err(Error::KeepLowersRank { full: r, kept });
        }
    }
    let mut seen = HashSet::new();
    let mut minima = Vec::new();
    descend(a, &mut seen, &mut minima);
    minima.sort_by(|x: &SetSystem, y: &SetSystem| x.sets().cmp(y.sets()));
    let supports = a.element_supports();
    Ok(minima
        .into_iter()
        .filter(|c| {
            let cs = c.element_supports();
            keep.iter().all(|e| cs[e] == supports[e])
        })
        .collect())
}

fn descend(a: &SetSystem, seen: &mut HashSet<Vec<ElemSet>>, minima: &mut Vec<SetSystem>) {
    if !seen.insert(a.sets().to_vec()) {
        return;
    }
    let steps: Vec<(usize, usize)> = removable(a).collect();
    if steps.is_empty() {
        debug_assert!(is_minimal(a).unwrap_or(false));
        minima.push(a.clone());
        return;
    }
    for (i, e) in steps {
        descend(&a.with_removed(i, e), seen, minima);
    }
}

/// A chain from a minimal presentation up to `A`, found by greedy removal.
pub fn cover_chain(a: &SetSystem) -> Result<PresentationChain> {
    full_rank(a)?;
    let mut steps = vec![a.clone()];
    loop {
        let cur = steps.last().expect("nonempty");
        let Some((i, e)) = removable(cur).next() else {
            break;
        };
        let next = cur.with_removed(i, e);
        steps.push(next);
    }
    steps.reverse();
    Ok(PresentationChain { steps })
}
