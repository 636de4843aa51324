#![allow(dead_code)]

use std::path::PathBuf;

use translat::bits::IndexSet;
use translat::io;
use translat::{Matroid, SetSystem, SubsetLattice};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn presentation(name: &str) -> SetSystem {
    io::parse_presentation(&data(name)).unwrap()
}

pub fn lattice(name: &str) -> SubsetLattice {
    SubsetLattice::from_family(&io::parse_lattice(&data(name)).unwrap()).unwrap()
}

pub fn bases(name: &str) -> Matroid {
    io::parse_bases(&data(name)).unwrap()
}

pub fn sets(list: &[&[usize]]) -> Vec<IndexSet> {
    list.iter().map(|s| IndexSet::from_one_based(s.iter().copied())).collect()
}

pub fn fig1_upper_lattice() -> Vec<IndexSet> {
    sets(&[
        &[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[3, 4],
        &[1, 2, 3], &[1, 3, 4], &[2, 3, 4], &[1, 2, 3, 4],
    ])
}

pub fn fig1_lower_lattice() -> Vec<IndexSet> {
    sets(&[&[], &[2], &[3], &[1, 2], &[2, 3], &[3, 4], &[1, 2, 3], &[2, 3, 4], &[1, 2, 3, 4]])
}

/// The sets `B_1, ..., B_6` of the uniform construction on the `fig4_lattice.json`
/// lattice with `n = 7`, on ground `1..7`.
pub fn fig4_uniform_sets() -> Vec<Vec<&'static str>> {
    vec![
        vec!["1", "2", "3", "4", "5", "6", "7"],
        vec!["2", "3", "6", "7"],
        vec!["2", "3", "6", "7"],
        vec!["4", "5", "6", "7"],
        vec!["4", "5", "6", "7"],
        vec!["6", "7"],
    ]
}
