//! Randomised sweeps over presentations, and round trips through the
//! constructions and file formats.

use rand::seq::SliceRandom;
use rand::Rng;

use super::catalog::closed_families;
use super::{run_trials, sample_instance, timed, VerdictReport, MAX_CENSUS_R};
use crate::bits::{ElemSet, IndexSet};
use crate::constructions::{
    build_maximal_presentation, build_uniform_presentation, ideals_of_poset,
    validate_input_lattice, InputLattice,
};
use crate::error::{Error, Result};
use crate::extlattice::{
    circuit_support_meet, extend, lattice_la, lattice_la_generated, lattice_ta,
    reconstruct_minimal, sigma, SubsetLattice,
};
use crate::io::{self, PosetRelation};
use crate::matroid::Matroid;
use crate::presentations::{
    cover_chain, is_maximal, is_minimal, minimal_presentations_below,
};
use crate::system::SetSystem;

fn same_extension(a: &SetSystem, i: IndexSet, c: &SetSystem, j: IndexSet) -> Result<bool> {
    Matroid::transversal(&extend(a, i)?).equals(&Matroid::transversal(&extend(c, j)?))
}

/// Does `M[A^I]` arise from some minimal `C ⪯ A`? The bottom of a cover
/// chain is tried first, with the same index set.
fn reached_from_minimal(a: &SetSystem, bottom: &SetSystem, i: IndexSet) -> Result<bool> {
    if same_extension(a, i, bottom, i)? {
        return Ok(true);
    }
    for c in minimal_presentations_below(a, ElemSet::EMPTY)? {
        for &j in lattice_la(&c)?.members() {
            if same_extension(a, i, &c, j)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn charmin_instance(a: &SetSystem) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let r = a.len();
    let l = lattice_la(a)?;
    if lattice_la_generated(a)? != l {
        failures.push(format!("{a:?}: the closure scan and the generated lattice differ"));
    }
    if is_minimal(a)? != (l.len() == 1 << r) {
        failures.push(format!("{a:?}: minimal = {} but |L| = {}", is_minimal(a)?, l.len()));
    }
    for &i in l.members() {
        let meet = circuit_support_meet(a, i)?;
        if meet != i {
            failures.push(format!("{a:?}: circuits through x in M[A^{i}] give {meet}"));
        }
    }
    for i in IndexSet::full(r).subsets() {
        let s = sigma(a, i);
        if !i.is_subset(s) || !l.contains(s) || !same_extension(a, i, a, s)? {
            failures.push(format!("{a:?}: σ({i}) = {s} is not the closure of {i}"));
        }
    }
    let bottom = cover_chain(a)?.bottom().clone();
    if lattice_la(&bottom)?.len() != 1 << r {
        failures.push(format!("minimal {bottom:?} does not have |L| = 2^{r}"));
    }
    for &i in l.members() {
        if !reached_from_minimal(a, &bottom, i)? {
            failures.push(format!("{a:?}: M[A^{i}] comes from no minimal presentation below A"));
        }
    }
    Ok(failures)
}

/// On random presentations of rank at most `r`: minimality against
/// `|L_A| = 2^r`, the two constructions of `L_A`, recovery of closed sets
/// from circuits, `σ_A` against its definition, and extensions coming from
/// minimal presentations below `A`.
pub fn check_charmin(r: usize, trials: usize, seed: u64) -> VerdictReport {
    timed(|| {
        let mut report = VerdictReport::new("charmin", Some(seed));
        if r == 0 || r > 4 {
            report.fail(0, format!("r must lie in 1..=4, got {r}"));
            return report;
        }
        let outcomes = run_trials(trials, seed, |rng| {
            let rank = rng.gen_range(1..=r);
            let a = sample_instance(rng, rank);
            let minimal = is_minimal(&a).unwrap_or(false);
            let failures = charmin_instance(&a).unwrap_or_else(|e| vec![format!("{a:?}: {e}")]);
            (failures, minimal)
        });
        let minimal = outcomes.iter().filter(|o| o.1).count();
        report.absorb(outcomes.into_iter().map(|o| o.0).collect());
        report.note(format!(
            "{trials} presentations of rank <= {r}, {minimal} of them minimal; \
             every cover-chain bottom also checked"
        ));
        report
    })
}

/// Every sublattice of `2^[r]` containing `∅` and `[r]`, for `r ≤ 4`.
pub fn lattices_with_ends(r: usize) -> Result<Vec<InputLattice>> {
    let ends = 1u64 | 1 << ((1 << r) - 1);
    closed_families(r)?
        .into_iter()
        .filter(|&m| m & ends == ends)
        .map(|m| validate_input_lattice(r, (0..1u32 << r).filter(|s| m >> s & 1 == 1).map(IndexSet)))
        .collect()
}

/// A random poset on `k` points: `i < j` for random pairs of a random
/// linear order.
fn random_poset(rng: &mut impl Rng, k: usize) -> PosetRelation {
    let mut order: Vec<usize> = (0..k).collect();
    order.shuffle(rng);
    let density = rng.gen_range(0.1..0.6);
    let mut less = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            if rng.gen_bool(density) {
                less.push((order[x], order[y]));
            }
        }
    }
    PosetRelation { points: k, less }
}

#[derive(Default)]
struct ConstructionTally {
    failures: Vec<String>,
    skipped_maximal: usize,
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

const GENERATED_CHECK_MAX: usize = 24;

fn construction_instance(l: &InputLattice) -> ConstructionTally {
    let mut tally = ConstructionTally::default();
    let lattice = l.lattice();
    let r = l.r();
    match build_maximal_presentation(l) {
        Ok(a) => {
            // the generator construction enumerates independent sets, so
            // it is only cross-checked on small grounds
            let generated_ok = a.ground().len() > GENERATED_CHECK_MAX
                || lattice_la_generated(&a).ok().as_ref() == Some(lattice);
            let ok = lattice_la(&a).ok().as_ref() == Some(lattice) && generated_ok && is_maximal(&a);
            if !ok {
                tally.failures.push(format!("maximal construction fails for {lattice:?}"));
            }
        }
        Err(Error::TooLarge { .. }) => tally.skipped_maximal += 1,
        Err(e) => tally.failures.push(format!("{lattice:?}: {e}")),
    }
    for n in [r, r + 2] {
        match build_uniform_presentation(l, n) {
            Ok(b) => {
                let bases = Matroid::transversal(&b).bases().len();
                if lattice_la(&b).ok().as_ref() != Some(lattice) || bases != binomial(n, r) {
                    tally
                        .failures
                        .push(format!("uniform construction with n = {n} fails for {lattice:?}"));
                }
            }
            Err(e) => tally.failures.push(format!("{lattice:?}: {e}")),
        }
    }
    let json = io::lattice_to_json(r, lattice.members());
    let reparsed = io::parse_lattice(&json).and_then(|f| SubsetLattice::from_family(&f));
    if reparsed.as_ref().ok() != Some(lattice) {
        tally.failures.push(format!("{lattice:?} does not survive JSON"));
    }
    tally
}

fn reconstruction_instance(a: &SetSystem, rng: &mut impl Rng) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let c = cover_chain(a)?.bottom().clone();
    let mut extensions: Vec<Matroid> = lattice_ta(&c)?.into_iter().map(|rec| rec.extension).collect();
    extensions.shuffle(rng);
    let mut expected = c.sets().to_vec();
    expected.sort_by(ElemSet::canonical_cmp);
    if reconstruct_minimal(&extensions)? != expected {
        failures.push(format!("{c:?} is not recovered from its extensions"));
    }
    let text = io::presentation_to_json(a);
    if io::parse_presentation(&text).ok().as_ref() != Some(a) {
        failures.push(format!("{a:?} does not survive JSON"));
    }
    Ok(failures)
}

/// Builds presentations realising lattices (every sublattice of `2^[r]`
/// with `∅` and `[r]` when `r ≤ 4`, otherwise `trials` random order-ideal
/// lattices) and checks that they give the lattice back; recovers random
/// minimal presentations from their extension lattices.
pub fn check_roundtrip(r: usize, trials: usize, seed: u64) -> VerdictReport {
    timed(|| {
        let mut report = VerdictReport::new("roundtrip", Some(seed));
        if r == 0 || r > 6 {
            report.fail(0, format!("r must lie in 1..=6, got {r}"));
            return report;
        }
        let lattices: Vec<InputLattice> = if r <= MAX_CENSUS_R {
            lattices_with_ends(r).expect("r checked")
        } else {
            run_trials(trials, seed, |rng| {
                ideals_of_poset(&random_poset(rng, r)).expect("random posets are acyclic")
            })
        };
        let tallies: Vec<ConstructionTally> = {
            use rayon::prelude::*;
            lattices.par_iter().map(construction_instance).collect()
        };
        let skipped: usize = tallies.iter().map(|t| t.skipped_maximal).sum();
        report.note(format!(
            "{} lattices over [{r}] realised; maximal construction skipped for {skipped} \
             exceeding the ground-set limit",
            lattices.len()
        ));
        report.absorb(tallies.into_iter().map(|t| t.failures).collect());

        let reconstructions = run_trials(trials, seed ^ 0x5eed, |rng| {
            let a = sample_instance(rng, r.min(4));
            reconstruction_instance(&a, rng).unwrap_or_else(|e| vec![format!("{a:?}: {e}")])
        });
        report.note(format!("{trials} minimal presentations recovered from their extensions"));
        report.absorb(reconstructions);
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn lattices_with_both_ends() {
        let all = lattices_with_ends(3).unwrap();
        assert_eq!(all.len(), 29);
        assert!(all.iter().any(|l| l.members().len() == 2));
    }

    #[test]
    fn posets_on_four_points_give_219_lattices() {
        // labelled posets on 4 points: 219
        let pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let less = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if let Ok(l) = ideals_of_poset(&PosetRelation { points: 4, less }) {
                seen.insert(l.into_lattice());
            }
        }
        assert_eq!(seen.len(), 219);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(4, 0), 1);
    }

    #[test]
    fn small_suites_pass() {
        let report = check_charmin(3, 20, 5);
        assert!(report.passed(), "{}", report.to_text());
        let report = check_roundtrip(3, 10, 5);
        assert!(report.passed(), "{}", report.to_text());
        assert!(!check_charmin(0, 1, 0).passed());
    }
}
