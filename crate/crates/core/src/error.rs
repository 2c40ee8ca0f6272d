use thiserror::Error;

use crate::algebra::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("target is not in the span of the basis (residual {residual:?})")]
    NotInSpan { residual: Vec<Scalar> },

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("affine tangent frame is degenerate at {point:?}: rank {rank}, expected {expected}")]
    FrameDegenerate {
        point: Vec<Scalar>,
        rank: usize,
        expected: usize,
    },

    #[error("line left the Grassmann chart with pivots {pivots:?}")]
    ChartMiss { pivots: (usize, usize) },

    #[error("frame rank {rank} is below the expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("rank saturation not reached after {points} sample points")]
    SaturationNotReached { points: usize },

    #[error("direction is not the image of a chart point")]
    DirectionNotOnChart,

    #[error("unsupported Veronese parameters r = {r}, k = {k}")]
    UnsupportedVeronese { r: usize, k: usize },

    #[error("unknown builtin fixture `{0}`")]
    UnknownBuiltin(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
