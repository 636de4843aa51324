//! Matroids behind a rank oracle.
//!
//! A [`Matroid`] is either transversal (carrying the set system that presents
//! it, with rank answered by bipartite matching) or given by an explicit
//! basis family, which is how constructed matroids such as principal
//! extensions are held. Derived families (bases, circuits, flats) are
//! computed on first use and then frozen.
//!
//! Whole-lattice scans over `2^E` (circuits, flats, cocircuits, cyclic flats)
//! are limited to [`Matroid::SCAN_LIMIT`] elements. Queries that only walk
//! independent sets (bases, circuits through one element) have no cap.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::ground::{project, GroundSet};
use crate::matching::{independent_with, rank_with, Augmenter};
use crate::system::SetSystem;

#[derive(Clone)]
enum Oracle {
    Transversal {
        system: SetSystem,
        supports: Vec<IndexSet>,
    },
    Bases(Vec<ElemSet>),
}

#[derive(Clone, Default)]
struct Cache {
    bases: OnceLock<Vec<ElemSet>>,
    rank_table: OnceLock<Vec<u8>>,
    circuits: OnceLock<Vec<ElemSet>>,
    flats: OnceLock<Vec<ElemSet>>,
}

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    rank: usize,
    oracle: Oracle,
    cache: Cache,
}

impl Matroid {
    /// Largest ground set for which `2^E` scans are allowed.
    pub const SCAN_LIMIT: usize = 16;

    /// `M[A]`.
    pub fn transversal(system: &SetSystem) -> Self {
        let supports = system.element_supports();
        let rank = rank_with(&supports, system.ground().full());
        Self {
            ground: system.ground().clone(),
            rank,
            oracle: Oracle::Transversal {
                system: system.clone(),
                supports,
            },
            cache: Cache::default(),
        }
    }

    /// A matroid from its bases. The family must be nonempty, equicardinal
    /// and satisfy basis exchange.
    pub fn from_bases(ground: GroundSet, bases: Vec<ElemSet>) -> Result<Self> {
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(Error::InvalidBases("no bases".into()));
        };
        let rank = first.len();
        let full = ground.full();
        for &b in &bases {
            if b.len() != rank {
                return Err(Error::InvalidBases(format!(
                    "{} has size {} but {} has size {rank}",
                    ground.format(b),
                    b.len(),
                    ground.format(first)
                )));
            }
            if !b.is_subset(full) {
                return Err(Error::InvalidBases("basis outside the ground set".into()));
            }
        }
        if let Some((b1, b2, e)) = exchange_violation(&bases) {
            return Err(Error::InvalidBases(format!(
                "exchange fails for {} leaving {} towards {}",
                ground.format(b1),
                ground.name(e),
                ground.format(b2)
            )));
        }
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    fn from_bases_unchecked(ground: GroundSet, mut bases: Vec<ElemSet>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.len());
        debug_assert!(exchange_violation(&bases).is_none());
        Self {
            ground,
            rank,
            oracle: Oracle::Bases(bases),
            cache: Cache::default(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `r(M)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The presenting set system, for matroids built with [`Self::transversal`].
    pub fn presentation(&self) -> Option<&SetSystem> {
        match &self.oracle {
            Oracle::Transversal { system, .. } => Some(system),
            Oracle::Bases(_) => None,
        }
    }

    pub fn rank_of(&self, x: ElemSet) -> usize {
        if let Some(table) = self.cache.rank_table.get() {
            return table[x.0 as usize] as usize;
        }
        self.rank_uncached(x)
    }

    fn rank_uncached(&self, x: ElemSet) -> usize {
        match &self.oracle {
            Oracle::Transversal { supports, .. } => rank_with(supports, x),
            Oracle::Bases(bases) => bases.iter().map(|&b| (b & x).len()).max().unwrap_or(0),
        }
    }

    pub fn is_independent(&self, x: ElemSet) -> bool {
        match &self.oracle {
            Oracle::Transversal { supports, .. } => independent_with(supports, x),
            Oracle::Bases(bases) => bases.iter().any(|&b| x.is_subset(b)),
        }
    }

    pub fn closure(&self, x: ElemSet) -> ElemSet {
        let r = self.rank_of(x);
        let mut cl = x;
        for e in (self.ground.full() - x).iter() {
            if self.rank_of(x.with(e)) == r {
                cl.insert(e);
            }
        }
        cl
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground.full().without(e)) < self.rank
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(ElemSet::singleton(e)) == 0
    }

    pub fn coloops(&self) -> ElemSet {
        (0..self.ground.len()).filter(|&e| self.is_coloop(e)).collect()
    }

    pub fn loops(&self) -> ElemSet {
        (0..self.ground.len()).filter(|&e| self.is_loop(e)).collect()
    }

    /// Calls `visit` on every independent subset of `within`, each exactly
    /// once, growing sets in ascending element order.
    pub fn for_each_independent(&self, within: ElemSet, mut visit: impl FnMut(ElemSet)) {
        match &self.oracle {
            Oracle::Transversal { supports, .. } => {
                walk_transversal(supports, within, ElemSet::EMPTY, 0, &Augmenter::new(), &mut visit)
            }
            Oracle::Bases(bases) => {
                let all: Vec<ElemSet> = bases.clone();
                walk_bases(&all, within, ElemSet::EMPTY, 0, &mut visit)
            }
        }
    }

    /// All bases, sorted by bitmask.
    pub fn bases(&self) -> &[ElemSet] {
        self.cache.bases.get_or_init(|| match &self.oracle {
            Oracle::Bases(bases) => bases.clone(),
            Oracle::Transversal { .. } => {
                let mut out = Vec::new();
                let r = self.rank;
                self.for_each_independent(self.ground.full(), |x| {
                    if x.len() == r {
                        out.push(x);
                    }
                });
                out.sort_unstable();
                out
            }
        })
    }

    fn require_scan(&self) -> Result<()> {
        if self.ground.len() > Self::SCAN_LIMIT {
            return Err(Error::TooLarge {
                what: "ground set size for subset scans",
                limit: Self::SCAN_LIMIT,
                got: self.ground.len(),
            });
        }
        Ok(())
    }

    fn rank_table(&self) -> Result<&[u8]> {
        self.require_scan()?;
        Ok(self.cache.rank_table.get_or_init(|| {
            self.ground
                .full()
                .subsets()
                .map(|x| self.rank_uncached(x) as u8)
                .collect()
        }))
    }

    /// All circuits, ordered by size then bitmask.
    pub fn circuits(&self) -> Result<&[ElemSet]> {
        let table = self.rank_table()?;
        Ok(self.cache.circuits.get_or_init(|| {
            let rk = |x: ElemSet| table[x.0 as usize] as usize;
            let mut out: Vec<ElemSet> = self
                .ground
                .full()
                .subsets()
                .filter(|&c| {
                    let k = c.len();
                    k > 0 && rk(c) == k - 1 && c.iter().all(|e| rk(c.without(e)) == k - 1)
                })
                .collect();
            out.sort_by(ElemSet::canonical_cmp);
            out
        }))
    }

    /// Circuits containing `e`, found by walking independent sets of `M\e`.
    pub fn circuits_through(&self, e: usize) -> Vec<ElemSet> {
        let mut out = Vec::new();
        self.for_each_independent(self.ground.full().without(e), |x| {
            let c = x.with(e);
            if !self.is_independent(c) && x.iter().all(|y| self.is_independent(c.without(y))) {
                out.push(c);
            }
        });
        out.sort_by(ElemSet::canonical_cmp);
        out
    }

    /// All flats, ordered by size then bitmask.
    pub fn flats(&self) -> Result<&[ElemSet]> {
        let table = self.rank_table()?;
        Ok(self.cache.flats.get_or_init(|| {
            let full = self.ground.full();
            let rk = |x: ElemSet| table[x.0 as usize];
            let mut out: Vec<ElemSet> = full
                .subsets()
                .filter(|&f| (full - f).iter().all(|e| rk(f.with(e)) > rk(f)))
                .collect();
            out.sort_by(ElemSet::canonical_cmp);
            out
        }))
    }

    /// Flats of rank `r(M) - 1`.
    pub fn hyperplanes(&self) -> Result<Vec<ElemSet>> {
        let target = self.rank.checked_sub(1);
        Ok(self
            .flats()?
            .iter()
            .copied()
            .filter(|&f| Some(self.rank_of(f)) == target)
            .collect())
    }

    /// Complements of hyperplanes.
    pub fn cocircuits(&self) -> Result<Vec<ElemSet>> {
        let full = self.ground.full();
        let mut out: Vec<ElemSet> = self.hyperplanes()?.into_iter().map(|h| full - h).collect();
        out.sort_by(ElemSet::canonical_cmp);
        Ok(out)
    }

    /// Flats `F` whose restriction `M|F` has no coloops.
    pub fn cyclic_flats(&self) -> Result<Vec<ElemSet>> {
        Ok(self
            .flats()?
            .iter()
            .copied()
            .filter(|&f| {
                let r = self.rank_of(f);
                f.iter().all(|e| self.rank_of(f.without(e)) == r)
            })
            .collect())
    }

    /// Whether `X` is a union of circuits.
    pub fn is_cyclic(&self, x: ElemSet) -> bool {
        let r = self.rank_of(x);
        x.iter().all(|e| self.rank_of(x.without(e)) == r)
    }

    /// The cyclic flat containing `e` that lies inside every other such
    /// cyclic flat, if there is one.
    pub fn least_cyclic_flat_containing(&self, e: usize) -> Result<Option<ElemSet>> {
        let containing: Vec<ElemSet> = self
            .cyclic_flats()?
            .into_iter()
            .filter(|f| f.contains(e))
            .collect();
        Ok(containing
            .iter()
            .copied()
            .find(|&f| containing.iter().all(|&g| f.is_subset(g))))
    }

    /// `M|X`, re-indexed onto the labels of `X`.
    pub fn restrict(&self, keep: ElemSet) -> Self {
        let keep = keep & self.ground.full();
        match &self.oracle {
            Oracle::Transversal { system, .. } => Self::transversal(&system.restrict(keep)),
            Oracle::Bases(bases) => {
                let (ground, old) = self.ground.restrict(keep);
                let r = self.rank_of(keep);
                let restricted: Vec<ElemSet> = bases
                    .iter()
                    .map(|&b| b & keep)
                    .filter(|b| b.len() == r)
                    .map(|b| project(b, &old))
                    .collect();
                Self::from_bases_unchecked(ground, restricted)
            }
        }
    }

    /// `M \ D`.
    pub fn delete(&self, d: ElemSet) -> Self {
        self.restrict(self.ground.full() - d)
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// `M ≤_w N`: every independent set of `M` is independent in `N`.
    /// Checking the bases of `M` suffices.
    pub fn weak_leq(&self, other: &Self) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.bases().iter().all(|&b| other.is_independent(b)))
    }

    /// `M ≤_w N` by comparing ranks of every subset; the definition itself.
    pub fn weak_leq_by_ranks(&self, other: &Self) -> Result<bool> {
        self.same_ground(other)?;
        self.require_scan()?;
        Ok(self
            .ground
            .full()
            .subsets()
            .all(|x| self.rank_of(x) <= other.rank_of(x)))
    }

    /// Same ground set and same bases.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.rank == other.rank && self.bases() == other.bases())
    }

    /// `M +_Y x`: `x` placed freely on the flat spanned by `Y`.
    pub fn principal_extension(&self, y: ElemSet, label: &str) -> Result<Self> {
        let ground = self.ground.with_element(label)?;
        let x = self.ground.len();
        let mut bases = self.bases().to_vec();
        if self.rank > 0 {
            let r = self.rank;
            self.for_each_independent(self.ground.full(), |z| {
                if z.len() + 1 == r && !y.is_subset(self.closure(z)) {
                    bases.push(z.with(x));
                }
            });
        }
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    pub fn is_transversal(&self) -> Result<bool> {
        Ok(self.transversal_witness()?.is_some())
    }

    /// Searches `r`-multisets of cocircuits for a presentation of `M`.
    ///
    /// A transversal matroid has a minimal presentation, and minimal
    /// presentations consist of cocircuits, so the search is complete. Each
    /// coloop `c` must be presented by the set `{c}`; those sets are fixed
    /// up front. A partial choice of sets is abandoned as soon as some basis
    /// of `M` cannot be matched onto all chosen sets.
    pub fn transversal_witness(&self) -> Result<Option<SetSystem>> {
        let coloops = self.coloops();
        let forced: Vec<ElemSet> = coloops.iter().map(ElemSet::singleton).collect();
        if self.rank == 0 {
            return Ok(Some(SetSystem::new(self.ground.clone(), vec![ElemSet::EMPTY])?));
        }
        let candidates: Vec<ElemSet> = self
            .cocircuits()?
            .into_iter()
            .filter(|d| d.is_disjoint(coloops))
            .collect();
        let slots = self.rank - forced.len();
        let nonloops = self.ground.full() - self.loops();
        let mut chosen = forced.clone();
        let found = self.search_cocircuits(&candidates, 0, slots, nonloops, &mut chosen);
        found
            .map(|sets| SetSystem::new(self.ground.clone(), sets))
            .transpose()
    }

    fn search_cocircuits(
        &self,
        candidates: &[ElemSet],
        start: usize,
        slots: usize,
        nonloops: ElemSet,
        chosen: &mut Vec<ElemSet>,
    ) -> Option<Vec<ElemSet>> {
        if !self.bases_saturate(chosen) {
            return None;
        }
        if slots == 0 {
            let covered = chosen.iter().fold(ElemSet::EMPTY, |acc, &s| acc | s);
            if !nonloops.is_subset(covered) {
                return None;
            }
            let system = SetSystem::new(self.ground.clone(), chosen.clone()).ok()?;
            let candidate = Self::transversal(&system);
            return (candidate.equals(self).ok()?).then(|| chosen.clone());
        }
        for k in start..candidates.len() {
            chosen.push(candidates[k]);
            if let Some(found) = self.search_cocircuits(candidates, k, slots - 1, nonloops, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    fn bases_saturate(&self, sets: &[ElemSet]) -> bool {
        let mut supports = vec![IndexSet::EMPTY; self.ground.len()];
        for (i, s) in sets.iter().enumerate() {
            for e in s.iter() {
                supports[e].insert(i);
            }
        }
        self.bases().iter().all(|&b| rank_with(&supports, b) == sets.len())
    }
}

fn walk_transversal(
    supports: &[IndexSet],
    within: ElemSet,
    cur: ElemSet,
    start: usize,
    aug: &Augmenter,
    visit: &mut impl FnMut(ElemSet),
) {
    visit(cur);
    for e in within.iter().filter(|&e| e >= start) {
        let mut next = aug.clone();
        if next.insert(e, supports[e]) {
            walk_transversal(supports, within, cur.with(e), e + 1, &next, visit);
        }
    }
}

fn walk_bases(
    containing: &[ElemSet],
    within: ElemSet,
    cur: ElemSet,
    start: usize,
    visit: &mut impl FnMut(ElemSet),
) {
    visit(cur);
    for e in within.iter().filter(|&e| e >= start) {
        let next: Vec<ElemSet> = containing.iter().copied().filter(|b| b.contains(e)).collect();
        if !next.is_empty() {
            walk_bases(&next, within, cur.with(e), e + 1, visit);
        }
    }
}

/// Finds `(B1, B2, e)` with `e ∈ B1 - B2` such that no `f ∈ B2 - B1` makes
/// `B1 - e + f` a basis.
fn exchange_violation(bases: &[ElemSet]) -> Option<(ElemSet, ElemSet, usize)> {
    let set: HashSet<ElemSet> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for e in (b1 - b2).iter() {
                let ok = (b2 - b1).iter().any(|f| set.contains(&b1.without(e).with(f)));
                if !ok {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.oracle {
            Oracle::Transversal { system, .. } => write!(f, "M[{system:?}]"),
            Oracle::Bases(b) => write!(
                f,
                "Matroid(rank {}, {} bases on {:?})",
                self.rank,
                b.len(),
                self.ground
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::SetSystem;

    fn fig1_lower() -> SetSystem {
        SetSystem::from_chars("abcdefghi", &["abc", "abcdef", "defghi", "ghi"]).unwrap()
    }

    fn fig1_upper() -> SetSystem {
        SetSystem::from_chars("abcdefghi", &["abc", "bcdef", "defghi", "ghi"]).unwrap()
    }

    fn u34() -> Matroid {
        Matroid::transversal(&SetSystem::from_chars("abcd", &["abd", "acd", "bcd"]).unwrap())
    }

    fn set(m: &Matroid, labels: &str) -> ElemSet {
        m.ground().set_of(labels.chars().map(String::from)).unwrap()
    }

    #[test]
    fn closure_examples() {
        let m = Matroid::transversal(&fig1_lower());
        assert_eq!(m.closure(set(&m, "ab")), set(&m, "abc"));
        assert_eq!(m.closure(m.ground().full()), m.ground().full());
        let u = u34();
        assert_eq!(u.closure(set(&u, "ab")), set(&u, "ab"));
    }

    #[test]
    fn u34_families() {
        let u = u34();
        assert_eq!(u.circuits().unwrap(), &[set(&u, "abcd")]);
        let cocircuits = u.cocircuits().unwrap();
        assert_eq!(cocircuits.len(), 6);
        assert!(cocircuits.iter().all(|c| c.len() == 2));
        assert_eq!(u.cyclic_flats().unwrap(), vec![ElemSet::EMPTY, set(&u, "abcd")]);
        assert!((0..4).all(|e| !u.is_coloop(e)));
        assert_eq!(u.bases().len(), 4);
    }

    #[test]
    fn fig1_circuits_and_cyclic_flats() {
        let m = Matroid::transversal(&fig1_lower());
        assert!(m.circuits().unwrap().contains(&set(&m, "abc")));
        let cf = m.cyclic_flats().unwrap();
        assert!(cf.contains(&set(&m, "abc")));
        assert!(cf.contains(&set(&m, "defghi")));
    }

    #[test]
    fn loops_are_circuits_and_not_coloops() {
        let a = SetSystem::from_chars("abl", &["ab"]).unwrap();
        let m = Matroid::transversal(&a);
        let l = m.ground().index_of("l").unwrap();
        assert!(m.circuits().unwrap().contains(&ElemSet::singleton(l)));
        assert!(!m.is_coloop(l));
        assert!(m.is_loop(l));
        assert_eq!(m.cyclic_flats().unwrap()[0], ElemSet::singleton(l));
    }

    #[test]
    fn all_coloops_has_only_the_empty_cyclic_flat() {
        let m = Matroid::transversal(&SetSystem::from_chars("ab", &["a", "b"]).unwrap());
        assert_eq!(m.cyclic_flats().unwrap(), vec![ElemSet::EMPTY]);
        let single = Matroid::transversal(&SetSystem::from_chars("e", &["e"]).unwrap());
        assert_eq!(single.cocircuits().unwrap(), vec![ElemSet::singleton(0)]);
    }

    #[test]
    fn coloop_in_deletion() {
        let a = fig1_upper();
        let m = Matroid::transversal(&a);
        let d = m.delete(a.set(1));
        assert_eq!(d.ground().names(), ["a", "g", "h", "i"]);
        assert_eq!(d.rank(), 3);
        assert!(d.is_coloop(d.ground().index_of("a").unwrap()));
    }

    #[test]
    fn deletion_and_restriction() {
        let a = fig1_lower();
        let m = Matroid::transversal(&a);
        let d = m.delete(a.set(1));
        assert_eq!(d.ground().names(), ["g", "h", "i"]);
        assert_eq!(d.rank(), 2);
        assert!(m.delete(ElemSet::EMPTY).equals(&m).unwrap());

        let u = u34();
        let ab = u.restrict(set(&u, "ab"));
        assert_eq!(ab.rank(), 2);
        assert_eq!(ab.bases(), &[ElemSet::full(2)]);
        let as_bases = Matroid::from_bases(u.ground().clone(), u.bases().to_vec()).unwrap();
        assert!(as_bases.restrict(set(&u, "ab")).equals(&ab).unwrap());
    }

    #[test]
    fn weak_order_and_equality() {
        let a = fig1_lower();
        let m2 = Matroid::transversal(&a.adjoin("x", IndexSet::from_one_based([2])).unwrap());
        let m12 = Matroid::transversal(&a.adjoin("x", IndexSet::from_one_based([1, 2])).unwrap());
        let m1 = Matroid::transversal(&a.adjoin("x", IndexSet::from_one_based([1])).unwrap());
        assert!(m2.weak_leq(&m12).unwrap());
        assert!(!m12.weak_leq(&m2).unwrap());
        assert!(m2.weak_leq_by_ranks(&m12).unwrap());
        assert!(!m12.weak_leq_by_ranks(&m2).unwrap());
        assert!(m2.weak_leq(&m2).unwrap());
        assert!(!m1.equals(&m2).unwrap());
        assert!(matches!(m1.equals(&u34()), Err(Error::GroundMismatch)));

        let b = SetSystem::from_chars("abcd", &["abc", "abd", "acd"]).unwrap();
        assert!(u34().equals(&Matroid::transversal(&b)).unwrap());
    }

    #[test]
    fn principal_extensions() {
        let a = fig1_lower();
        let m = Matroid::transversal(&a);
        let lp = m.principal_extension(ElemSet::EMPTY, "x").unwrap();
        assert!(lp.is_loop(9));
        let free = m.principal_extension(m.ground().full(), "x").unwrap();
        let free_t = Matroid::transversal(&a.adjoin("x", a.all_indices()).unwrap());
        assert!(free.equals(&free_t).unwrap());
        // supports {1,2}: x is free on the rank-2 flat {a,b,c}
        let on_abc = m.principal_extension(set(&m, "abc"), "x").unwrap();
        let ext = Matroid::transversal(&a.adjoin("x", IndexSet::from_one_based([1, 2])).unwrap());
        assert!(on_abc.equals(&ext).unwrap());
        let on_a = m.principal_extension(set(&m, "a"), "x").unwrap();
        assert!(!on_a.equals(&ext).unwrap());
        assert!(!on_a.is_independent(set(&m, "a").with(9)));
    }

    #[test]
    fn from_bases_validates() {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        assert!(Matroid::from_bases(g.clone(), vec![]).is_err());
        assert!(Matroid::from_bases(g.clone(), vec![ElemSet(0b11), ElemSet(0b100)]).is_err());
        // {a,b} and {c,d} alone violate exchange
        assert!(Matroid::from_bases(g.clone(), vec![ElemSet(0b0011), ElemSet(0b1100)]).is_err());
        assert!(Matroid::from_bases(g, vec![ElemSet(0b0011), ElemSet(0b0101)]).is_ok());
    }

    #[test]
    fn transversality_of_simple_matroids() {
        let u = u34();
        let w = u.transversal_witness().unwrap().expect("U34 is transversal");
        assert!(Matroid::transversal(&w).equals(&u).unwrap());

        let loops = SetSystem::from_chars("abl", &["ab"]).unwrap();
        assert!(Matroid::transversal(&loops).is_transversal().unwrap());

        let coloops = Matroid::transversal(&SetSystem::from_chars("abc", &["a", "bc", "bc"]).unwrap());
        let w = coloops.transversal_witness().unwrap().unwrap();
        assert!(Matroid::transversal(&w).equals(&coloops).unwrap());
    }

    #[test]
    fn scans_are_capped() {
        let labels: Vec<String> = (0..17).map(|i| format!("e{i}")).collect();
        let sets = vec![labels.clone()];
        let a = SetSystem::from_labels(labels, &sets).unwrap();
        let m = Matroid::transversal(&a);
        assert!(matches!(m.circuits(), Err(Error::TooLarge { .. })));
        assert_eq!(m.circuits_through(0).len(), 16);
    }
}
