use thiserror::Error;

use crate::apg::GraphError;
use crate::hf::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("level size not representable: |V_{m}| exceeds the count cap (rank {cap})")]
    LevelNotRepresentable { m: usize, cap: usize },

    #[error("enumeration infeasible: rank {m} exceeds the enumeration cap (rank {cap})")]
    EnumerationInfeasible { m: usize, cap: usize },

    #[error("set code not representable: rank {rank} sets need codes wider than 2^65536")]
    CodeNotRepresentable { rank: usize },

    #[error("rank {m} outside the supported range {min}..={max}")]
    RankOutOfRange { m: usize, min: usize, max: usize },

    #[error("witness index {n} exceeds the configured bound {bound}")]
    WitnessBound { n: usize, bound: usize },

    #[error("mover has lost: the position is the empty set")]
    MoverHasLost,

    #[error("no set with index {nu} lacks an ∈-minimal element (index must be > 1)")]
    SigmaDomain { nu: usize },

    #[error("search for an index-{nu} witness exhausted {nodes} nodes without success")]
    SearchExhausted { nu: usize, nodes: usize },

    #[error("seed rejected: {0}")]
    SeedRejected(String),

    #[error("stage {stage} would have {projected} nodes, over the cap of {cap}")]
    CapExceeded {
        stage: usize,
        projected: String,
        cap: usize,
    },

    #[error("stage {alpha} has no successor stage in a model built to stage {stages}")]
    StageOutOfRange { alpha: usize, stages: usize },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
