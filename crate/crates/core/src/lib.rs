//! Lattices of single-element transversal extensions.
//!
//! Given a presentation `A = (A_1, ..., A_r)` of a rank-`r` transversal matroid
//! `M`, adjoining a new element `x` to the sets indexed by `I ⊆ [r]` yields an
//! extension `M[A^I]`. Many index sets give the same extension; the greatest
//! one is the closure `σ_A(I)`. The closed sets form a distributive sublattice
//! `L_A` of `2^[r]`, isomorphic under the weak order to the lattice `T_A` of
//! extensions reachable from `A`.
//!
//! The crate is organised bottom-up:
//!
//! * [`bits`], [`ground`], [`system`], [`io`]: bitmask subsets, interned
//!   ground sets, set systems with supports, and JSON file formats.
//! * [`matching`]: the bipartite matching oracle behind every rank query.
//! * [`matroid`]: closure, circuits, flats, weak order, equality,
//!   transversality testing and principal extensions.
//! * [`presentations`]: the index-wise order on presentations, maximal and
//!   minimal presentations, and cover chains.
//! * [`extlattice`]: `σ_A`, `L_A`, `T_A`, irreducibles, `L'_A`, `L''_A` and
//!   the intersection lattices `L_{A,B}`.
//! * [`constructions`]: realising a given sublattice of `2^[r]` as `L_A`.
//! * [`verify`]: brute-force checkers for the structural bounds.
//! * [`cli`]: the `tlat` command-line front end.
//!
//! Indices into `[r]` are 0-based in the API and 1-based in files and
//! human-readable output.

pub mod bits;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod extlattice;
pub mod ground;
pub mod io;
pub mod matching;
pub mod matroid;
pub mod presentations;
pub mod system;
pub mod verify;

pub use bits::{ElemSet, IndexSet};
pub use error::{Error, Result};
pub use extlattice::{ExtensionRecord, LatticeKind, SubsetLattice};
pub use ground::GroundSet;
pub use matroid::Matroid;
pub use system::SetSystem;
