//! Error type shared by all graph and polynomial operations.

use thiserror::Error;

use crate::planar::KuratowskiWitness;
use crate::resonance::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("graph is not bipartite (odd cycle {0:?})")]
    NotBipartite(Vec<usize>),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph too large for brute-force oracle (n = {n}, bound = {bound})")]
    TooLargeForOracle { n: usize, bound: usize },
    #[error("graph is not planar")]
    NotPlanar(Option<KuratowskiWitness>),
    #[error("graph is not 2-connected")]
    Not2Connected,
    #[error("embedding is not a valid plane rotation system")]
    InvalidEmbedding,
    #[error("orientation does not match the graph's edge list")]
    InvalidOrientation,
    #[error("graph contains an even subdivision of K_2,3")]
    ContainsEvenK23,
    #[error("cycle has odd length; orientation parity is undefined")]
    OddLengthCycle,
    #[error("matrix too large (n = {n}, bound = {bound})")]
    TooLarge { n: usize, bound: usize },
    #[error("bipartition classes have different sizes")]
    UnbalancedParts,
    #[error("invalid theta path lengths")]
    InvalidLengths,
    #[error("invalid hexagon fusion code")]
    InvalidCode,
    #[error("hexagons overlap or violate the catacondensed condition")]
    OverlapDetected,
    #[error("graph has a cycle of length divisible by 4")]
    HasCycleLengthDivisibleBy4,
    #[error("greedy ear step failed: attachment vertices share a color")]
    NotResonant(Box<Violation>),
    #[error("invalid JSON input: {0}")]
    InvalidJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
