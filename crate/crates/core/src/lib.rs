//! Combinatorial triangulations and their flip graph: rotation-system
//! kernel, extremal generators, small-scale flip-graph enumeration, and
//! exact/bounded common-edge searches between triangulation pairs.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod flipgraph;
pub mod format;
pub mod kernel;
pub mod matching;
pub mod pathcover;
pub mod storage;

pub use canon::{canonical_code, CanonicalCode, MirrorMode};
pub use constructions::{
    build_g1, build_g2, check_lemma2_structure, host_max_deg6, Color, ColoredTriangulation,
    DoubleApex,
};
pub use kernel::{DirectedEdge, FlipSequence, Triangulation, Vertex};
