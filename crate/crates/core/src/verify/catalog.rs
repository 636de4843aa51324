//! The large sublattices of `2^[r]`: the catalog `L_i`, `L'_i`, `L_V` and an
//! exhaustive census to compare it against.
//!
//! Families of subsets of `[r]` are handled here as membership masks: bit
//! `S` of a `u64` is set when the subset with bit pattern `S` belongs to the
//! family. This limits the census machinery to `r ≤ 6`; the census itself
//! enumerates all `2^(2^r)` generator families and is capped at `r = 4`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use super::{timed, VerdictReport};
use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::extlattice::{LatticeKind, SubsetLattice, SCAN_MAX_R};

/// Largest `r` for [`census_sublattices`].
pub const MAX_CENSUS_R: usize = 4;

/// Largest `r` whose families fit in a `u64` mask.
const MAX_MASK_R: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogKind {
    /// `L_i = 2^[r] - ⋃_{j ≤ i} [{1..j}, ¬{j+1}]`.
    L,
    /// `L'_i = 2^[r] - ⋃_{j ≤ i} [{j+1}, ¬{1..j}]`.
    LPrime,
    /// `L_V = 2^[r] - ([{1}, ¬{2}] ∪ [{3}, ¬{4}])`.
    V,
}

/// A member of the catalog, realised as a sublattice of `2^[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogLattice {
    pub kind: CatalogKind,
    pub r: usize,
    /// The index `i` of `L_i` or `L'_i`; `None` for `L_V`.
    pub i: Option<usize>,
    pub realized: SubsetLattice,
}

impl CatalogLattice {
    /// `2^(r-1) + 2^(r-1-i)` for `L_i` and `L'_i`, `9 · 2^(r-4)` for `L_V`.
    pub fn expected_len(&self) -> usize {
        match (self.kind, self.i) {
            (CatalogKind::V, _) => 9 << (self.r - 4),
            (_, Some(i)) => (1 << (self.r - 1)) + (1 << (self.r - 1 - i)),
            (_, None) => unreachable!("L_i and L'_i carry an index"),
        }
    }
}

impl fmt::Display for CatalogLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.i) {
            (CatalogKind::L, Some(i)) => write!(f, "L_{i}"),
            (CatalogKind::LPrime, Some(i)) => write!(f, "L'_{i}"),
            _ => f.write_str("L_V"),
        }
    }
}

/// `[X, ¬Y]`: the sets that contain `X` and avoid `Y`.
fn in_interval(s: IndexSet, contains: IndexSet, avoids: IndexSet) -> bool {
    contains.is_subset(s) && s.is_disjoint(avoids)
}

pub fn catalog_lattice(kind: CatalogKind, r: usize, i: usize) -> Result<CatalogLattice> {
    if r > SCAN_MAX_R {
        return Err(Error::TooLarge {
            what: "r for a catalog lattice",
            limit: SCAN_MAX_R,
            got: r,
        });
    }
    let removed: Vec<(IndexSet, IndexSet)> = match kind {
        CatalogKind::L | CatalogKind::LPrime => {
            if i == 0 || i >= r {
                return Err(Error::Parameter(format!("need 1 <= i < r, got i = {i}, r = {r}")));
            }
            (1..=i)
                .map(|j| {
                    let prefix = IndexSet::full(j);
                    let next = IndexSet::singleton(j);
                    if kind == CatalogKind::L {
                        (prefix, next)
                    } else {
                        (next, prefix)
                    }
                })
                .collect()
        }
        CatalogKind::V => {
            if r < 4 {
                return Err(Error::Parameter(format!("L_V needs r >= 4, got {r}")));
            }
            vec![
                (IndexSet::singleton(0), IndexSet::singleton(1)),
                (IndexSet::singleton(2), IndexSet::singleton(3)),
            ]
        }
    };
    let members = IndexSet::full(r)
        .subsets()
        .filter(|&s| !removed.iter().any(|&(x, y)| in_interval(s, x, y)));
    Ok(CatalogLattice {
        kind,
        r,
        i: (kind != CatalogKind::V).then_some(i),
        realized: SubsetLattice::new(r, members)?,
    })
}

/// Every catalog lattice for `r`: `L_i` and `L'_i` for `1 ≤ i < r`, then
/// `L_V` when `r ≥ 4`.
fn full_catalog(r: usize) -> Vec<CatalogLattice> {
    let mut out = Vec::new();
    for i in 1..r {
        for kind in [CatalogKind::L, CatalogKind::LPrime] {
            out.push(catalog_lattice(kind, r, i).expect("indices in range"));
        }
    }
    if r >= 4 {
        out.push(catalog_lattice(CatalogKind::V, r, 0).expect("r >= 4"));
    }
    out
}

fn bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros();
            mask &= mask - 1;
            b
        })
    })
}

fn mask_of(l: &SubsetLattice) -> u64 {
    l.members().iter().fold(0, |m, s| m | 1 << s.bits())
}

fn lattice_of(r: usize, mask: u64) -> SubsetLattice {
    SubsetLattice::new(r, bits(mask).map(IndexSet)).expect("closed families are lattices")
}

/// Closure of a family under pairwise ∪ and ∩.
fn close(mut fam: u64) -> u64 {
    loop {
        let mut next = fam;
        for a in bits(fam) {
            for b in bits(fam >> a >> 1).map(|d| a + 1 + d) {
                next |= 1 << (a | b) | 1 << (a & b);
            }
        }
        if next == fam {
            return fam;
        }
        fam = next;
    }
}

fn check_census_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    if r > MAX_CENSUS_R {
        return Err(Error::TooLarge {
            what: "r for the census",
            limit: MAX_CENSUS_R,
            got: r,
        });
    }
    Ok(())
}

/// Every nonempty ∪/∩-closed family of subsets of `[r]`, as membership
/// masks in increasing order, obtained by closing each of the `2^(2^r)`
/// generator families.
pub fn closed_families(r: usize) -> Result<Vec<u64>> {
    check_census_r(r)?;
    let mut out: Vec<u64> = (1..1u64 << (1 << r)).into_par_iter().map(close).collect();
    out.par_sort_unstable();
    out.dedup();
    Ok(out)
}

/// For each permutation of `[r]`, its action on the subsets of `[r]`.
fn subset_actions(r: usize) -> Vec<Vec<u32>> {
    let mut perms = vec![Vec::new()];
    for k in 0..r {
        perms = perms
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    perms
        .iter()
        .map(|p| {
            (0..1u32 << r)
                .map(|s| bits(s as u64).fold(0, |acc, i| acc | 1 << p[i as usize]))
                .collect()
        })
        .collect()
}

fn act(mask: u64, action: &[u32]) -> u64 {
    bits(mask).fold(0, |acc, s| acc | 1 << action[s as usize])
}

fn canonical(mask: u64, actions: &[Vec<u32>]) -> u64 {
    actions.iter().map(|a| act(mask, a)).min().expect("at least the identity")
}

/// The representative of the permutation class of `l` used by the census:
/// the image under a permutation of `[r]` with the smallest membership mask.
pub fn permutation_class(l: &SubsetLattice) -> Result<SubsetLattice> {
    if l.r() > MAX_MASK_R {
        return Err(Error::TooLarge {
            what: "r for permutation classes",
            limit: MAX_MASK_R,
            got: l.r(),
        });
    }
    let actions = subset_actions(l.r());
    let mask = canonical(mask_of(l), &actions);
    let members = bits(mask).map(IndexSet);
    match l.kind() {
        LatticeKind::Lattice => SubsetLattice::new(l.r(), members),
        LatticeKind::JoinClosed => SubsetLattice::join_closed(l.r(), members),
        LatticeKind::Family => SubsetLattice::family(l.r(), members),
    }
}

/// The sublattices of `2^[r]` with more than `min_size` members, one per
/// class under permutations of `[r]`, largest first.
pub fn census_sublattices(r: usize, min_size: usize) -> Result<Vec<SubsetLattice>> {
    let actions = subset_actions(r);
    let classes: BTreeSet<(std::cmp::Reverse<u32>, u64)> = closed_families(r)?
        .into_iter()
        .filter(|m| m.count_ones() as usize > min_size)
        .map(|m| {
            let c = canonical(m, &actions);
            (std::cmp::Reverse(c.count_ones()), c)
        })
        .collect();
    Ok(classes.into_iter().map(|(_, m)| lattice_of(r, m)).collect())
}

/// The maximal proper sublattices of `l` that keep its least and greatest
/// members, found among `closed`.
fn maximal_proper_sublattices(l: u64, closed: &[u64]) -> BTreeSet<u64> {
    let ends = 1 << l.trailing_zeros() | 1 << (63 - l.leading_zeros());
    let below: Vec<u64> = closed
        .iter()
        .copied()
        .filter(|&f| f & !l == 0 && f != l && f & ends == ends)
        .collect();
    below
        .iter()
        .copied()
        .filter(|&f| !below.iter().any(|&g| g != f && f & !g == 0))
        .collect()
}

/// `L - [a, b]` for every interval with `[a, b] ∩ J = {a}` and
/// `[a, b] ∩ M = {b}`, `J` and `M` being the join- and meet-irreducibles.
fn interval_removals(l: &SubsetLattice) -> BTreeSet<u64> {
    let irr = l.irreducibles();
    let full = mask_of(l);
    let mut out = BTreeSet::new();
    for &a in &irr.join {
        for &b in irr.meet.iter().filter(|b| a.is_subset(**b)) {
            let interval: Vec<IndexSet> = l
                .members()
                .iter()
                .copied()
                .filter(|s| a.is_subset(*s) && s.is_subset(b))
                .collect();
            let joins = interval.iter().filter(|s| irr.join.contains(s)).count();
            let meets = interval.iter().filter(|s| irr.meet.contains(s)).count();
            if joins == 1 && meets == 1 {
                out.insert(interval.iter().fold(full, |m, s| m & !(1 << s.bits())));
            }
        }
    }
    out
}

fn show(r: usize, mask: u64) -> String {
    format!("{:?}", lattice_of(r, mask).members())
}

/// Compares the census of sublattices with more than `2^(r-1)` members
/// against the catalog together with `2^[r]` itself, and checks the
/// description of maximal proper sublattices by irreducible intervals on
/// `2^[r]` and `L_1`.
pub fn check_classification(r: usize) -> VerdictReport {
    timed(|| {
        let mut report = VerdictReport::new("classification", None);
        if let Err(e) = check_census_r(r) {
            report.fail(0, e.to_string());
            return report;
        }
        let half = 1usize << (r - 1);
        let actions = subset_actions(r);
        let closed = closed_families(r).expect("r checked");
        report.note(format!(
            "{} nonempty sublattices of 2^[{r}] from {} generator families",
            closed.len(),
            (1u64 << (1 << r)) - 1
        ));

        // census against catalog
        let census: BTreeSet<u64> = closed
            .iter()
            .filter(|m| m.count_ones() as usize > half)
            .map(|&m| canonical(m, &actions))
            .collect();
        let catalog = full_catalog(r);
        let mut expected: BTreeSet<u64> = BTreeSet::new();
        expected.insert((1u64 << (1 << r)) - 1);
        for c in &catalog {
            report.instances += 1;
            if c.realized.len() != c.expected_len() {
                report.fail(
                    report.instances - 1,
                    format!("{c} has {} members, expected {}", c.realized.len(), c.expected_len()),
                );
            }
            expected.insert(canonical(mask_of(&c.realized), &actions));
        }
        let names = |mask: u64| -> String {
            let hits: Vec<String> = catalog
                .iter()
                .filter(|c| canonical(mask_of(&c.realized), &actions) == mask)
                .map(|c| c.to_string())
                .collect();
            if mask.count_ones() == 1 << r {
                format!("2^[{r}]")
            } else if hits.is_empty() {
                "uncatalogued".into()
            } else {
                hits.join(" ≅ ")
            }
        };
        let mut summary: Vec<(u32, String)> =
            census.iter().map(|&m| (m.count_ones(), names(m))).collect();
        summary.sort();
        let summary: Vec<String> = summary.into_iter().map(|(n, name)| format!("{name} ({n})")).collect();
        report.note(format!(
            "{} classes with more than {half} members: {}",
            census.len(),
            summary.join(", ")
        ));
        for &m in census.difference(&expected) {
            report.instances += 1;
            report.fail(report.instances - 1, format!("census class not in the catalog: {}", show(r, m)));
        }
        for &m in expected.difference(&census) {
            report.instances += 1;
            report.fail(report.instances - 1, format!("catalog class missing from the census: {}", show(r, m)));
        }

        // maximal proper sublattices
        if r >= 2 {
            let boolean = SubsetLattice::boolean(r);
            let l1 = catalog_lattice(CatalogKind::L, r, 1).expect("r >= 2").realized;
            for (name, l) in [(format!("2^[{r}]"), &boolean), ("L_1".to_string(), &l1)] {
                report.instances += 1;
                let direct = maximal_proper_sublattices(mask_of(l), &closed);
                let by_intervals = interval_removals(l);
                if direct != by_intervals {
                    let extra: Vec<String> =
                        direct.difference(&by_intervals).map(|&m| show(r, m)).collect();
                    let missing: Vec<String> =
                        by_intervals.difference(&direct).map(|&m| show(r, m)).collect();
                    report.fail(
                        report.instances - 1,
                        format!(
                            "maximal proper sublattices of {name} differ from the interval description; \
                             only by enumeration: {extra:?}; only by intervals: {missing:?}"
                        ),
                    );
                }
                report.note(format!("{name} has {} maximal proper sublattices", direct.len()));
            }
            report.instances += 1;
            let images: BTreeSet<u64> = actions.iter().map(|a| act(mask_of(&l1), a)).collect();
            if maximal_proper_sublattices(mask_of(&boolean), &closed) != images {
                report.fail(
                    report.instances - 1,
                    "the maximal proper sublattices of 2^[r] are not the images of L_1",
                );
            }
        } else {
            report.note("r = 1: 2^[1] has two elements, so the interval description does not apply");
        }

        // L_V sits in no sublattice of size 5/8 · 2^r and has no large proper sublattice
        if r >= 4 {
            let v = catalog_lattice(CatalogKind::V, r, 0).expect("r >= 4").realized;
            let vm = mask_of(&v);
            let five_eighths = 5 << (r - 3);
            report.instances += 1;
            if let Some(&m) = closed
                .iter()
                .find(|&&m| m.count_ones() as usize == five_eighths && vm & !m == 0)
            {
                report.fail(report.instances - 1, format!("L_V lies in {}", show(r, m)));
            }
            report.instances += 1;
            if let Some(&m) = closed
                .iter()
                .find(|&&m| m != vm && m & !vm == 0 && m.count_ones() as usize > half)
            {
                report.fail(
                    report.instances - 1,
                    format!("L_V has a proper sublattice with more than {half} members: {}", show(r, m)),
                );
            }
        }
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let l1 = catalog_lattice(CatalogKind::L, 4, 1).unwrap();
        assert_eq!(l1.realized.len(), 12);
        assert_eq!(l1.to_string(), "L_1");
        assert_eq!(catalog_lattice(CatalogKind::V, 4, 0).unwrap().realized.len(), 9);
        assert_eq!(catalog_lattice(CatalogKind::L, 4, 2).unwrap().realized.len(), 10);
        for r in 2..=7 {
            for c in full_catalog(r) {
                assert_eq!(c.realized.len(), c.expected_len(), "{c} at r = {r}");
            }
        }
    }

    #[test]
    fn catalog_parameters() {
        assert!(catalog_lattice(CatalogKind::L, 4, 0).is_err());
        assert!(catalog_lattice(CatalogKind::LPrime, 4, 4).is_err());
        assert!(catalog_lattice(CatalogKind::V, 3, 0).is_err());
        assert!(catalog_lattice(CatalogKind::L, 21, 1).is_err());
    }

    #[test]
    fn l2_is_l1_minus_an_interval() {
        let l1 = catalog_lattice(CatalogKind::L, 4, 1).unwrap().realized;
        let l2 = catalog_lattice(CatalogKind::L, 4, 2).unwrap().realized;
        let expected = l1.members().iter().copied().filter(|&s| {
            !in_interval(s, IndexSet::from_one_based([1, 2]), IndexSet::from_one_based([3]))
        });
        assert_eq!(l2, SubsetLattice::new(4, expected).unwrap());
    }

    /// Oracle: a family is closed iff every pair has its union and
    /// intersection inside, checked directly on the member list.
    fn closed_by_pairs(r: usize, mask: u64) -> bool {
        let l = SubsetLattice::family(r, bits(mask).map(IndexSet)).unwrap();
        l.union_violation().is_none() && l.intersection_violation().is_none()
    }

    #[test]
    fn closed_families_match_a_direct_filter() {
        for r in 1..=3 {
            let direct: Vec<u64> =
                (1..1u64 << (1 << r)).filter(|&m| closed_by_pairs(r, m)).collect();
            assert_eq!(closed_families(r).unwrap(), direct);
        }
    }

    #[test]
    fn sublattices_with_both_ends_count_labelled_preorders() {
        // labelled preorders on 1, 2, 3, 4 points: 1, 4, 29, 355
        for (r, count) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
            let ends = 1u64 | 1 << ((1 << r) - 1);
            let n = closed_families(r).unwrap().iter().filter(|&&m| m & ends == ends).count();
            assert_eq!(n, count, "r = {r}");
        }
    }

    #[test]
    fn small_censuses() {
        let r2 = census_sublattices(2, 2).unwrap();
        assert_eq!(r2.iter().map(|l| l.len()).collect::<Vec<_>>(), [4, 3]);
        let r3 = census_sublattices(3, 4).unwrap();
        assert_eq!(r3.iter().map(|l| l.len()).collect::<Vec<_>>(), [8, 6, 5, 5]);
        assert!(census_sublattices(5, 16).is_err());
        assert!(census_sublattices(0, 0).is_err());
    }

    #[test]
    fn permutation_classes() {
        let l1 = catalog_lattice(CatalogKind::L, 3, 1).unwrap().realized;
        let l1p = catalog_lattice(CatalogKind::LPrime, 3, 1).unwrap().realized;
        let l2 = catalog_lattice(CatalogKind::L, 3, 2).unwrap().realized;
        let l2p = catalog_lattice(CatalogKind::LPrime, 3, 2).unwrap().realized;
        assert_eq!(permutation_class(&l1).unwrap(), permutation_class(&l1p).unwrap());
        assert_ne!(permutation_class(&l2).unwrap(), permutation_class(&l2p).unwrap());
        assert_eq!(subset_actions(4).len(), 24);
    }

    #[test]
    fn interval_removals_of_the_boolean_lattice() {
        // J = singletons, M = complements of singletons; [{i}, ¬{j}] for i ≠ j
        let b = SubsetLattice::boolean(3);
        assert_eq!(interval_removals(&b).len(), 6);
    }

    #[test]
    fn classification_at_small_r() {
        for r in 1..=3 {
            let report = check_classification(r);
            assert!(report.passed(), "{}", report.to_text());
        }
        assert!(!check_classification(5).passed());
    }
}
