//! JSON file formats.
//!
//! | document      | shape                                             |
//! |---------------|---------------------------------------------------|
//! | presentation  | `{"ground": [labels], "sets": [[labels], ...]}`   |
//! | lattice       | `{"r": int, "sets": [[1-based indices], ...]}`    |
//! | basis family  | `{"ground": [labels], "bases": [[labels], ...]}`  |
//! | poset         | `{"points": k, "less": [[i, j], ...]}` (1-based)  |
//!
//! Parsing is strict about labels and index ranges. The writers emit one
//! set per line with a fixed layout, so output is byte-stable and diffable.

use serde::Deserialize;

use crate::bits::{ElemSet, IndexSet};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::system::SetSystem;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    ground: Vec<String>,
    sets: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeDoc {
    r: usize,
    sets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasesDoc {
    ground: Vec<String>,
    bases: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetDoc {
    points: usize,
    less: Vec<[usize; 2]>,
}

/// A family of subsets of `[r]` as read from a lattice file. No closure
/// properties are checked here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub r: usize,
    /// Distinct members in file order.
    pub sets: Vec<IndexSet>,
}

/// A strict order relation on `points` elements, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetRelation {
    pub points: usize,
    pub less: Vec<(usize, usize)>,
}

pub fn parse_presentation(text: &str) -> Result<SetSystem> {
    let doc: PresentationDoc = serde_json::from_str(text)?;
    if doc.sets.is_empty() {
        return Err(Error::NoSets);
    }
    SetSystem::from_labels(doc.ground, &doc.sets)
}

pub fn parse_lattice(text: &str) -> Result<Family> {
    let doc: LatticeDoc = serde_json::from_str(text)?;
    let r = doc.r;
    if r == 0 || r > IndexSet::CAPACITY {
        return Err(Error::Parameter(format!("r must be in 1..={}, got {r}", IndexSet::CAPACITY)));
    }
    let mut sets = Vec::with_capacity(doc.sets.len());
    for members in doc.sets {
        let mut set = IndexSet::EMPTY;
        for index in members {
            if index == 0 || index > r {
                return Err(Error::IndexOutOfRange { index, r });
            }
            set.insert(index - 1);
        }
        if !sets.contains(&set) {
            sets.push(set);
        }
    }
    Ok(Family { r, sets })
}

/// Reads an explicit basis family; the family is validated as a matroid.
pub fn parse_bases(text: &str) -> Result<Matroid> {
    let doc: BasesDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground)?;
    let bases = doc
        .bases
        .iter()
        .map(|b| ground.set_of(b))
        .collect::<Result<Vec<_>>>()?;
    Matroid::from_bases(ground, bases)
}

pub fn parse_poset(text: &str) -> Result<PosetRelation> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    let k = doc.points;
    let mut less = Vec::with_capacity(doc.less.len());
    for [i, j] in doc.less {
        for index in [i, j] {
            if index == 0 || index > k {
                return Err(Error::IndexOutOfRange { index, r: k });
            }
        }
        less.push((i - 1, j - 1));
    }
    Ok(PosetRelation { points: k, less })
}

fn quoted(label: &str) -> String {
    serde_json::to_string(label).expect("strings always serialize")
}

fn inline_list<T: AsRef<str>>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|s| s.as_ref().to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn label_list(ground: &GroundSet, set: ElemSet) -> String {
    inline_list(set.iter().map(|e| quoted(ground.name(e))))
}

fn block(lines: &[String]) -> String {
    if lines.is_empty() {
        return "[]".to_string();
    }
    format!("[\n    {}\n  ]", lines.join(",\n    "))
}

fn ground_line(ground: &GroundSet) -> String {
    inline_list(ground.names().iter().map(|n| quoted(n)))
}

pub fn presentation_to_json(system: &SetSystem) -> String {
    let ground = system.ground();
    let sets: Vec<String> = system.sets().iter().map(|&s| label_list(ground, s)).collect();
    format!(
        "{{\n  \"ground\": {},\n  \"sets\": {}\n}}\n",
        ground_line(ground),
        block(&sets)
    )
}

/// Writes a family of subsets of `[r]` in canonical order (cardinality,
/// then lexicographic), 1-based.
pub fn lattice_to_json(r: usize, members: &[IndexSet]) -> String {
    let mut sorted = members.to_vec();
    sorted.sort_by(IndexSet::canonical_cmp);
    sorted.dedup();
    let sets: Vec<String> = sorted
        .iter()
        .map(|s| inline_list(s.to_one_based().iter().map(usize::to_string)))
        .collect();
    format!("{{\n  \"r\": {r},\n  \"sets\": {}\n}}\n", block(&sets))
}

/// Writes the bases of `m` in bitmask order.
pub fn bases_to_json(m: &Matroid) -> String {
    let ground = m.ground();
    let bases: Vec<String> = m.bases().iter().map(|&b| label_list(ground, b)).collect();
    format!(
        "{{\n  \"ground\": {},\n  \"bases\": {}\n}}\n",
        ground_line(ground),
        block(&bases)
    )
}

pub fn poset_to_json(poset: &PosetRelation) -> String {
    let pairs = inline_list(
        poset
            .less
            .iter()
            .map(|&(i, j)| format!("[{}, {}]", i + 1, j + 1)),
    );
    format!("{{\n  \"points\": {},\n  \"less\": {pairs}\n}}\n", poset.points)
}
