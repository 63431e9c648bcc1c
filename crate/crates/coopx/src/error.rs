//! Crate-wide error type.
//!
//! Every fallible operation in the library reports through [`Error`]; the
//! variants carry enough context (a vertex id, a round number, a file path)
//! to make CLI diagnostics actionable without string-parsing.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    // ---- graph construction / queries ----
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("bfs root {root} is outside the requested subset")]
    RootOutsideSubset { root: usize },
    #[error("subset is not connected in the host graph")]
    SubsetDisconnected,

    // ---- instance construction ----
    #[error("instance requires at least one packet")]
    ZeroPackets,
    #[error("holdings list has {got} entries but the graph has {expected} vertices")]
    HoldingsLengthMismatch { expected: usize, got: usize },
    #[error("vertex {v} holds packet {packet}, but only packets 0..{k} exist")]
    PacketOutOfRange { v: usize, packet: usize, k: usize },
    #[error("no vertex holds packet {packet}; the union of holdings must cover every packet")]
    MissingPacket { packet: usize },
    #[error("instance graph must be connected")]
    DisconnectedInstance,

    // ---- generators ----
    #[error("unknown graph name {name:?}; catalog: {catalog}")]
    UnknownGraphName { name: String, catalog: &'static str },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    // ---- covering LPs ----
    #[error("cover program is infeasible: vertex {vertex} has positive demand but an empty neighborhood")]
    InfeasibleCover { vertex: usize },
    #[error("LP solver internal failure: {0}")]
    SolverInternal(String),

    // ---- dominating sets ----
    #[error("demand at vertex {vertex} exceeds its neighborhood size; no integral cover exists")]
    InfeasibleDemand { vertex: usize },
    #[error("input set does not dominate vertex {vertex}")]
    NotDominating { vertex: usize },
    #[error("{what} supports at most {limit}, got {n}")]
    SizeLimit {
        what: String,
        n: usize,
        limit: usize,
    },
    #[error("no feasible set exists for {0}")]
    NoFeasibleSet(String),
    #[error("operation requires a connected graph")]
    DisconnectedGraph,

    // ---- schedulers ----
    #[error("graph is not a clique: edge ({u}, {v}) is missing")]
    NotAClique { u: usize, v: usize },
    #[error("vertex {vertex} misses {missing} packets; the clique scheme handles at most one")]
    TooManyMissing { vertex: usize, missing: usize },
    #[error("instance is not tagged as a counterexample construction")]
    UntaggedInstance,

    // ---- field / simulation ----
    #[error("field modulus {q} is not a prime >= 2")]
    NonPrimeModulus { q: u32 },
    #[error(
        "round {round}: sender {sender} cannot produce the requested payload from its knowledge"
    )]
    UndecodablePayload { round: usize, sender: usize },
    #[error("round {round}: malformed broadcast: {reason}")]
    BadBroadcast { round: usize, reason: String },

    // ---- I/O ----
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported file format {found:?}; expected \"coopx-v1\"")]
    UnsupportedFormat { found: String },
    #[error("malformed input file: {0}")]
    BadFile(String),
    #[error("rational value does not fit the 64-bit json encoding")]
    RationalOverflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
