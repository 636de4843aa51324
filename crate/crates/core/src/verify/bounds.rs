//! Size bounds on `L_A` along chains of presentations, and on the
//! extensions shared by two presentations, with the families attaining
//! them.

use rand::seq::SliceRandom;
use rand::Rng;

use super::catalog::{catalog_lattice, CatalogKind};
use super::{run_trials, sample_instance, timed, VerdictReport, MAX_BOUND_R};
use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::extlattice::{intersection_lattice, lattice_la, star_lattice, SubsetLattice};
use crate::ground::GroundSet;
use crate::presentations::{
    can_remove, cover_chain, is_minimal, maximalize, presentation_rank, same_up_to_reindexing,
};
use crate::system::SetSystem;

/// Largest possible `|L_A|` for a presentation `A` of rank `i` in the order
/// on presentations of a rank-`r` matroid: `2^r` at `i = 0`,
/// `2^(r-1) + 2^(r-1-i)` for `1 ≤ i < r`, and `2^(r-1)` beyond.
pub fn threequarters_bound(r: usize, i: usize) -> usize {
    match i {
        0 => 1 << r,
        i if i < r => (1 << (r - 1)) + (1 << (r - 1 - i)),
        _ => 1 << (r - 1),
    }
}

/// `A^k` from a minimal presentation `B = (B_2, ..., B_r)` of a
/// rank-`(r-1)` matroid `N`: with a new coloop `e`, `A^k_1 = {e}`,
/// `A^k_i = B_i ∪ {e}` for `2 ≤ i ≤ k+1` and `A^k_i = B_i` otherwise.
pub fn sharp_family_a_k(n_minimal: &SetSystem, k: usize) -> Result<SetSystem> {
    if !is_minimal(n_minimal)? {
        return Err(Error::NotMinimal);
    }
    let r = n_minimal.len() + 1;
    if k >= r {
        return Err(Error::Parameter(format!("need k < r, got k = {k}, r = {r}")));
    }
    let label = n_minimal.ground().fresh_label("e");
    let ground = n_minimal.ground().with_element(&label)?;
    let e = n_minimal.ground().len();
    let mut sets = vec![ElemSet::singleton(e)];
    sets.extend(
        n_minimal
            .sets()
            .iter()
            .enumerate()
            .map(|(j, &b)| if j < k { b.with(e) } else { b }),
    );
    SetSystem::new(ground, sets)
}

/// The minimal presentation `({n0, n1}, ..., {n0, n_m})` of `U_{m,m+1}`.
fn corank_one_uniform(m: usize) -> SetSystem {
    let ground = GroundSet::new((0..=m).map(|k| format!("n{k}"))).expect("distinct labels");
    let sets = (1..=m).map(|k| ElemSet::singleton(0).with(k)).collect();
    SetSystem::new(ground, sets).expect("valid system")
}

/// Two presentations of `U_{r-2,r-2} ⊕ U_{2,3}` sharing `3 · 2^(r-2)`
/// extensions: `A_i = B_i = {e_i}` for `i ≤ r-2`, `A_{r-1} = {e_{r-1}, a}`,
/// `B_{r-1} = {e_{r-1}, b}`, `A_r = B_r = {a, b}`.
pub fn sharp_intersection_pair(r: usize) -> Result<(SetSystem, SetSystem)> {
    if r < 2 {
        return Err(Error::Parameter(format!("need r >= 2, got {r}")));
    }
    let labels = (1..r).map(|k| format!("e{k}")).chain(["a".into(), "b".into()]);
    let ground = GroundSet::new(labels)?;
    let (a, b) = (r - 1, r);
    let mut left: Vec<ElemSet> = (0..r - 2).map(ElemSet::singleton).collect();
    let mut right = left.clone();
    left.push(ElemSet::singleton(r - 2).with(a));
    right.push(ElemSet::singleton(r - 2).with(b));
    let ab = ElemSet::singleton(a).with(b);
    left.push(ab);
    right.push(ab);
    Ok((SetSystem::new(ground.clone(), left)?, SetSystem::new(ground, right)?))
}

/// Two minimal presentations of `U_{r,2r}` on `1..2r` sharing only the loop
/// and free extensions: `A_i = {i} ∪ [r+1, 2r]` and `B_i = [r] ∪ {r+i}`.
pub fn uniform_pair(r: usize) -> Result<(SetSystem, SetSystem)> {
    if r == 0 || 2 * r > ElemSet::CAPACITY {
        return Err(Error::Parameter(format!("need 1 <= r <= 32, got {r}")));
    }
    let ground = GroundSet::new((1..=2 * r).map(|k| k.to_string()))?;
    let low = ElemSet::full(r);
    let high = ElemSet::full(2 * r) - low;
    let a = (0..r).map(|i| high.with(i)).collect();
    let b = (0..r).map(|i| low.with(r + i)).collect();
    Ok((SetSystem::new(ground.clone(), a)?, SetSystem::new(ground, b)?))
}

fn check_bound_r(report: &mut VerdictReport, r: usize, least: usize) -> bool {
    if r < least || r > MAX_BOUND_R {
        report.fail(0, format!("r must lie in {least}..={MAX_BOUND_R}, got {r}"));
        return false;
    }
    true
}

#[derive(Default)]
struct ChainTally {
    failures: Vec<String>,
    positions: usize,
    deep: usize,
    top_rank: usize,
}

impl ChainTally {
    fn merge(&mut self, other: ChainTally) {
        self.failures.extend(other.failures);
        self.positions += other.positions;
        self.deep += other.deep;
        self.top_rank = self.top_rank.max(other.top_rank);
    }
}

/// Walks a cover chain up to `a`, checking ranks, the size bound at each
/// position and that the lattices shrink along the chain.
fn check_chain(a: &SetSystem) -> ChainTally {
    let mut tally = ChainTally::default();
    let r = a.len();
    let chain = match cover_chain(a) {
        Ok(c) => c,
        Err(e) => {
            tally.failures.push(format!("{a:?}: {e}"));
            return tally;
        }
    };
    let mut previous: Option<SubsetLattice> = None;
    for (i, step) in chain.steps.iter().enumerate() {
        tally.positions += 1;
        if i >= r {
            tally.deep += 1;
        }
        tally.top_rank = tally.top_rank.max(i);
        match presentation_rank(step) {
            Ok(rank) if rank == i => {}
            other => tally
                .failures
                .push(format!("{step:?} sits at chain position {i} but has rank {other:?}")),
        }
        let l = match lattice_la(step) {
            Ok(l) => l,
            Err(e) => {
                tally.failures.push(format!("{step:?}: {e}"));
                return tally;
            }
        };
        let bound = threequarters_bound(r, i);
        if l.len() > bound {
            tally.failures.push(format!(
                "{step:?} has rank {i} and |L| = {} > {bound}",
                l.len()
            ));
        }
        if let Some(prev) = &previous {
            if !l.is_subfamily_of(prev) {
                tally.failures.push(format!(
                    "L at chain position {i} is not contained in L at position {}: {step:?}",
                    i - 1
                ));
            }
        }
        previous = Some(l);
    }
    tally
}

/// Checks the bound on `|L_A|` along cover chains of random presentations
/// and of their maximal presentations, and that the family `A^k` attains it.
pub fn check_threequarters(r: usize, trials: usize, seed: u64) -> VerdictReport {
    timed(|| {
        let mut report = VerdictReport::new("threequarters", Some(seed));
        if !check_bound_r(&mut report, r, 1) {
            return report;
        }
        let mut total = ChainTally::default();

        // the sharp family, and the chains through its maximal presentations
        let n = if r >= 2 { Some(corank_one_uniform(r - 1)) } else { None };
        let mut sizes = Vec::new();
        let mut sharp_outcomes = Vec::new();
        for k in 0..r {
            let mut failures = Vec::new();
            let a = match &n {
                Some(n) => sharp_family_a_k(n, k),
                None => SetSystem::from_chars("e", &["e"]),
            };
            let a = match a {
                Ok(a) => a,
                Err(e) => {
                    sharp_outcomes.push(vec![format!("A^{k}: {e}")]);
                    continue;
                }
            };
            let expected = threequarters_bound(r, k);
            match (presentation_rank(&a), lattice_la(&a)) {
                (Ok(rank), Ok(l)) => {
                    sizes.push(l.len());
                    if rank != k {
                        failures.push(format!("A^{k} = {a:?} has rank {rank}"));
                    }
                    if l.len() != expected {
                        failures.push(format!("A^{k} = {a:?} has |L| = {}, expected {expected}", l.len()));
                    }
                    if k >= 1 {
                        let lk = catalog_lattice(CatalogKind::L, r, k).expect("1 <= k < r").realized;
                        if l != lk {
                            failures.push(format!("L_{{A^{k}}} differs from L_{k}: {l:?}"));
                        }
                    }
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("A^{k}: {e}")),
            }
            let tally = check_chain(&maximalize(&a));
            failures.extend(tally.failures.iter().cloned());
            total.merge(ChainTally { failures: Vec::new(), ..tally });
            sharp_outcomes.push(failures);
        }
        report.absorb(sharp_outcomes);
        report.note(format!("sharp family |L_{{A^k}}| for k = 0..{}: {sizes:?}", r - 1));

        let outcomes = run_trials(trials, seed, |rng| {
            let a = sample_instance(rng, r);
            let mut tally = check_chain(&a);
            tally.merge(check_chain(&maximalize(&a)));
            tally
        });
        let mut failures = Vec::new();
        for mut tally in outcomes {
            failures.push(std::mem::take(&mut tally.failures));
            total.merge(tally);
        }
        report.absorb(failures);
        report.note(format!(
            "{} chain positions checked, {} at rank >= {r}, highest rank {}",
            total.positions, total.deep, total.top_rank
        ));
        report
    })
}

/// Removes random removable elements from `a`, stopping at random.
fn random_descent(a: &SetSystem, rng: &mut impl Rng) -> SetSystem {
    let mut cur = a.clone();
    loop {
        let options: Vec<(usize, usize)> = (0..cur.len())
            .flat_map(|i| cur.set(i).iter().map(move |e| (i, e)))
            .filter(|&(i, e)| can_remove(&cur, i, e))
            .collect();
        if options.is_empty() || rng.gen_bool(0.1) {
            return cur;
        }
        let (i, e) = options[rng.gen_range(0..options.len())];
        cur = cur.with_removed(i, e);
    }
}

/// Structural checks on the common extensions of `a` and `b`; returns the
/// failures and `|T_A ∩ T_B|`.
fn check_pair(a: &SetSystem, b: &SetSystem) -> (Vec<String>, usize) {
    let mut failures = Vec::new();
    let both = match intersection_lattice(a, b) {
        Ok(x) => x,
        Err(e) => return (vec![format!("{a:?} vs {b:?}: {e}")], 0),
    };
    if both.left.len() != both.right.len() {
        failures.push(format!("{a:?} vs {b:?}: |L_(A,B)| != |L_(B,A)|"));
    }
    for &(i, j) in &both.pairs {
        if i.len() != j.len() {
            failures.push(format!("{a:?} vs {b:?}: matched {i} and {j} differ in size"));
        }
    }
    let order_kept = both.pairs.iter().all(|&(i1, j1)| {
        both.pairs
            .iter()
            .all(|&(i2, j2)| i1.is_subset(i2) == j1.is_subset(j2))
    });
    if !order_kept {
        failures.push(format!("{a:?} vs {b:?}: the matching is not an order isomorphism"));
    }
    match (star_lattice(a, b), star_lattice(b, a)) {
        (Ok(l), Ok(r)) => {
            if l != both.left || r != both.right {
                failures.push(format!("{a:?} vs {b:?}: generated L_(A,B) disagrees with matching"));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("{a:?} vs {b:?}: {e}")),
    }
    if both.len() < 2 {
        failures.push(format!("{a:?} vs {b:?}: fewer than two common extensions"));
    }
    (failures, both.len())
}

/// Checks the structure of `L_{A,B}` on random pairs of presentations of
/// one matroid, the bound `|T_A ∩ T_B| ≤ (3/4) 2^r` when the pair differs
/// beyond reindexing, and the families attaining the extremes.
pub fn check_intersection_bound(r: usize, trials: usize, seed: u64) -> VerdictReport {
    timed(|| {
        let mut report = VerdictReport::new("intersection", Some(seed));
        if !check_bound_r(&mut report, r, 2) {
            return report;
        }
        let bound = 3 << (r - 2);

        let mut fixed = Vec::new();
        match sharp_intersection_pair(r) {
            Ok((a, b)) => {
                let (mut failures, len) = check_pair(&a, &b);
                if len != bound {
                    failures.push(format!("sharp pair shares {len} extensions, expected {bound}"));
                }
                // the common index sets: subsets of [r-1] and supersets of {r-1, r}
                let top = IndexSet::singleton(r - 2).with(r - 1);
                let expected = IndexSet::full(r)
                    .subsets()
                    .filter(|s| !s.contains(r - 1) || top.is_subset(*s));
                match (intersection_lattice(&a, &b), SubsetLattice::new(r, expected)) {
                    (Ok(both), Ok(expected)) if both.left == expected => {}
                    _ => failures.push("sharp pair: unexpected common index sets".into()),
                }
                report.note(format!("sharp pair {a:?} / {b:?}: {len} common extensions"));
                fixed.push(failures);
            }
            Err(e) => fixed.push(vec![e.to_string()]),
        }
        match uniform_pair(r) {
            Ok((a, b)) => {
                let (mut failures, len) = check_pair(&a, &b);
                if len != 2 {
                    failures.push(format!("U_(r,2r) pair shares {len} extensions, expected 2"));
                }
                report.note(format!("U_({r},{}) pair: {len} common extensions", 2 * r));
                fixed.push(failures);
            }
            Err(e) => fixed.push(vec![e.to_string()]),
        }
        report.absorb(fixed);

        let outcomes = run_trials(trials, seed, |rng| {
            let top = maximalize(&sample_instance(rng, r));
            let a = random_descent(&top, rng);
            let mut perm: Vec<usize> = (0..r).collect();
            perm.shuffle(rng);
            let b = random_descent(&top, rng).reindexed(&perm);
            let (mut failures, len) = check_pair(&a, &b);
            let qualifies = !same_up_to_reindexing(&a, &b);
            if qualifies && len > bound {
                failures.push(format!("{a:?} vs {b:?}: {len} common extensions > {bound}"));
            }
            (failures, qualifies, len)
        });
        let qualifying = outcomes.iter().filter(|o| o.1).count();
        let largest = outcomes.iter().filter(|o| o.1).map(|o| o.2).max().unwrap_or(0);
        report.absorb(outcomes.into_iter().map(|o| o.0).collect());
        report.note(format!(
            "{trials} random pairs, {qualifying} differing beyond reindexing, \
             largest common lattice among those {largest} (bound {bound})"
        ));
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extlattice::lattice_ta;

    #[test]
    fn bound_values() {
        assert_eq!(threequarters_bound(4, 0), 16);
        assert_eq!(threequarters_bound(4, 1), 12);
        assert_eq!(threequarters_bound(4, 3), 9);
        assert_eq!(threequarters_bound(4, 4), 8);
        assert_eq!(threequarters_bound(4, 9), 8);
    }

    #[test]
    fn sharp_family_sizes() {
        let n = corank_one_uniform(3);
        assert!(is_minimal(&n).unwrap());
        let sizes: Vec<usize> = (0..4)
            .map(|k| lattice_la(&sharp_family_a_k(&n, k).unwrap()).unwrap().len())
            .collect();
        assert_eq!(sizes, [16, 12, 10, 9]);
        let a0 = sharp_family_a_k(&n, 0).unwrap();
        assert!(is_minimal(&a0).unwrap());
        assert_eq!(a0.ground().name(4), "e");
        assert!(sharp_family_a_k(&n, 4).is_err());
    }

    #[test]
    fn sharp_family_needs_a_minimal_input() {
        let n = SetSystem::from_chars("abc", &["abc", "abc"]).unwrap();
        assert!(matches!(sharp_family_a_k(&n, 1), Err(Error::NotMinimal)));
    }

    #[test]
    fn sharp_family_chain_is_a_cover_chain() {
        let n = corank_one_uniform(2);
        let chain: Vec<SetSystem> = (0..3).map(|k| sharp_family_a_k(&n, k).unwrap()).collect();
        for w in chain.windows(2) {
            assert!(crate::presentations::preceq(&w[0], &w[1]).unwrap());
        }
    }

    #[test]
    fn sharp_pair_counts() {
        for (r, expected) in [(4, 12), (5, 24)] {
            let (a, b) = sharp_intersection_pair(r).unwrap();
            assert!(!same_up_to_reindexing(&a, &b));
            assert_eq!(intersection_lattice(&a, &b).unwrap().len(), expected);
        }
    }

    #[test]
    fn uniform_pair_shares_two_extensions() {
        let (a, b) = uniform_pair(3).unwrap();
        assert!(is_minimal(&a).unwrap() && is_minimal(&b).unwrap());
        assert_eq!(lattice_ta(&a).unwrap().len(), 8);
        assert_eq!(intersection_lattice(&a, &b).unwrap().len(), 2);
    }

    #[test]
    fn reindexed_pairs_do_not_qualify() {
        let (a, _) = sharp_intersection_pair(3).unwrap();
        let b = a.reindexed(&[2, 0, 1]);
        assert!(same_up_to_reindexing(&a, &b));
        let (failures, len) = check_pair(&a, &b);
        assert!(failures.is_empty(), "{failures:?}");
        assert_eq!(len, lattice_la(&a).unwrap().len());
    }

    #[test]
    fn small_suites_pass() {
        let report = check_threequarters(3, 10, 1);
        assert!(report.passed(), "{}", report.to_text());
        let report = check_intersection_bound(3, 10, 1);
        assert!(report.passed(), "{}", report.to_text());
        assert!(!check_threequarters(6, 1, 0).passed());
        assert!(!check_intersection_bound(1, 1, 0).passed());
    }
}
