//! Brute-force checkers for the structural results about `L_A`.
//!
//! Every suite returns a [`VerdictReport`]: the number of instances tried,
//! informational notes, and one entry per failed instance with a witness.
//! Randomised suites take an explicit seed; instance `t` draws from the
//! ChaCha8 stream `t` of that seed, so reports do not depend on thread
//! scheduling.

mod bounds;
mod catalog;
mod sweeps;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matching::rank;
use crate::system::SetSystem;

pub use bounds::{
    check_intersection_bound, check_threequarters, sharp_family_a_k, sharp_intersection_pair,
    threequarters_bound, uniform_pair,
};
pub use catalog::{
    catalog_lattice, census_sublattices, check_classification, closed_families, permutation_class,
    CatalogKind, CatalogLattice, MAX_CENSUS_R,
};
pub use sweeps::{check_charmin, check_roundtrip, lattices_with_ends};

/// Largest ground set [`random_presentation`] will draw.
pub const MAX_RANDOM_ELEMENTS: usize = 16;

/// Largest `r` accepted by the bound checks.
pub const MAX_BOUND_R: usize = 5;

const MAX_ATTEMPTS: usize = 100_000;

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub message: String,
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub instances: usize,
    pub notes: Vec<String>,
    pub failures: Vec<Failure>,
    /// Wall-clock time; kept out of the text and JSON renderings so that
    /// they are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerdictReport {
    fn new(suite: &str, seed: Option<u64>) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            instances: 0,
            notes: Vec::new(),
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn fail(&mut self, instance: usize, message: impl Into<String>) {
        self.failures.push(Failure {
            instance,
            message: message.into(),
        });
    }

    /// Appends the failures of `outcomes` (indexed by instance, offset by
    /// the instances already counted) and bumps the instance count.
    fn absorb(&mut self, outcomes: Vec<Vec<String>>) {
        let base = self.instances;
        for (k, messages) in outcomes.into_iter().enumerate() {
            for message in messages {
                self.fail(base + k, message);
            }
            self.instances += 1;
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = write!(out, "{}: {verdict} ({} instances", self.suite, self.instances);
        if let Some(seed) = self.seed {
            let _ = write!(out, ", seed {seed}");
        }
        let _ = writeln!(out, ", {} failures)", self.failures.len());
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "  failure #{}: {}", f.instance, f.message);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}

/// Times `body` and stores the duration in the report it returns.
fn timed(body: impl FnOnce() -> VerdictReport) -> VerdictReport {
    let start = Instant::now();
    let mut report = body();
    report.elapsed = start.elapsed();
    report
}

/// The generator for instance `t` of a suite seeded with `seed`.
fn instance_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    rng
}

/// Runs `trials` independent instances in parallel; results come back in
/// instance order.
fn run_trials<T: Send>(
    trials: usize,
    seed: u64,
    body: impl Fn(&mut ChaCha8Rng) -> T + Sync,
) -> Vec<T> {
    (0..trials)
        .into_par_iter()
        .map(|t| body(&mut instance_rng(seed, t)))
        .collect()
}

fn letter_ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|k| char::from(b'a' + k as u8).to_string()))
        .expect("distinct letters")
}

/// A seeded random presentation of a rank-`r` transversal matroid on `n`
/// elements labelled `a`, `b`, ...: each element enters each set
/// independently with probability `density`, and systems of rank below `r`
/// are redrawn.
pub fn random_presentation(r: usize, n: usize, density: f64, seed: u64) -> Result<SetSystem> {
    sample_presentation(&mut ChaCha8Rng::seed_from_u64(seed), r, n, density)
}

fn sample_presentation(rng: &mut impl Rng, r: usize, n: usize, density: f64) -> Result<SetSystem> {
    if r == 0 || r > n {
        return Err(Error::Parameter(format!("need 1 <= r <= n, got r = {r}, n = {n}")));
    }
    if n > MAX_RANDOM_ELEMENTS {
        return Err(Error::TooLarge {
            what: "random ground set",
            limit: MAX_RANDOM_ELEMENTS,
            got: n,
        });
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::Parameter(format!("density must lie in (0, 1], got {density}")));
    }
    let ground = letter_ground(n);
    for _ in 0..MAX_ATTEMPTS {
        let sets = (0..r)
            .map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        let a = SetSystem::new(ground.clone(), sets)?;
        if rank(&a, a.ground().full()) == r {
            return Ok(a);
        }
    }
    Err(Error::Parameter(format!(
        "no rank-{r} system found in {MAX_ATTEMPTS} draws at density {density}"
    )))
}

/// Shape of a random instance in the sweeps: `n` in `r..=max(8, r + 3)`
/// and a moderate density.
fn sample_instance(rng: &mut impl Rng, r: usize) -> SetSystem {
    let n = rng.gen_range(r..=(r + 3).max(8));
    let density = rng.gen_range(0.25..0.8);
    sample_presentation(rng, r, n, density).expect("parameters are in range")
}

/// Runs every suite with the given parameters.
pub fn run_all(r: usize, trials: usize, seed: u64) -> Vec<VerdictReport> {
    let census_r = r.min(MAX_CENSUS_R);
    let bound_r = r.min(MAX_BOUND_R);
    vec![
        check_charmin(r.min(4), trials, seed),
        check_threequarters(bound_r, trials, seed),
        check_intersection_bound(bound_r, trials, seed),
        check_classification(census_r),
        check_roundtrip(census_r, trials, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::ElemSet;

    #[test]
    fn random_presentations_are_reproducible() {
        let a = random_presentation(4, 8, 0.4, 11).unwrap();
        let b = random_presentation(4, 8, 0.4, 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.ground().name(7), "h");
    }

    #[test]
    fn full_density_gives_the_ground_set() {
        let a = random_presentation(3, 5, 1.0, 0).unwrap();
        assert!(a.sets().iter().all(|&s| s == ElemSet::full(5)));
    }

    #[test]
    fn random_presentations_have_full_rank() {
        for seed in 0..100 {
            let a = random_presentation(4, 8, 0.3, seed).unwrap();
            assert_eq!(a.len(), 4);
            assert_eq!(rank(&a, a.ground().full()), 4);
        }
    }

    #[test]
    fn random_parameters_are_checked() {
        assert!(random_presentation(5, 4, 0.5, 0).is_err());
        assert!(random_presentation(0, 4, 0.5, 0).is_err());
        assert!(random_presentation(2, 17, 0.5, 0).is_err());
        assert!(random_presentation(2, 4, 0.0, 0).is_err());
        assert!(random_presentation(2, 4, f64::NAN, 0).is_err());
    }

    #[test]
    fn report_rendering() {
        let mut report = VerdictReport::new("demo", Some(3));
        report.absorb(vec![vec![], vec!["broken".into()]]);
        report.note("two instances");
        assert!(!report.passed());
        assert_eq!(
            report.to_text(),
            "demo: FAIL (2 instances, seed 3, 1 failures)\n  note: two instances\n  failure #1: broken\n"
        );
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["failures"][0]["instance"], 1);
        assert!(json.get("elapsed").is_none());
    }
}
