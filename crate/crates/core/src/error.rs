use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate ground label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("label `{0}` is already in the ground set")]
    LabelExists(String),

    #[error("a set system needs at least one set")]
    NoSets,

    #[error("{what} is limited to {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("index {index} is outside 1..={r}")]
    IndexOutOfRange { index: usize, r: usize },

    #[error("set systems have different shapes ({left} vs {right} sets)")]
    ShapeMismatch { left: usize, right: usize },

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("the set system has {sets} sets but its matroid has rank {rank}")]
    RankDeficient { sets: usize, rank: usize },

    #[error("the presentations do not present the same matroid")]
    DifferentMatroids,

    #[error("the presentation is not maximal")]
    NotMaximal,

    #[error("the presentation is not minimal")]
    NotMinimal,

    #[error("deleting the kept elements lowers the rank from {full} to {kept}")]
    KeepLowersRank { full: usize, kept: usize },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("invalid basis family: {0}")]
    InvalidBases(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
