use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: u32, count: u32 },
    #[error("edge {0} does not belong to this graph")]
    UnknownEdge(u32),
    #[error("no edge between vertices {0} and {1}")]
    NoSuchEdge(u32, u32),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("edge subtraction would create a loop")]
    WouldCreateLoop,
    #[error("edge subtraction would create a parallel edge")]
    WouldCreateParallelEdge,
    #[error("vertex {0} has valence {1} > 3")]
    ValenceTooHigh(u32, usize),
    #[error("coloring count overflow")]
    CountOverflow,
    #[error("psi is undefined: the graph is 3-edge-colorable")]
    ColorableGraph,
    #[error("coloring count {0} of the subtracted graph is not divisible by 18; this is a bug")]
    NotDivisibleBy18(u64),
    #[error("edge {0} is not colored with either chain color")]
    EdgeNotInChainColors(u32),
    #[error("boundary does not match any rotation of the x,y,x,x,z pattern")]
    NoStarPattern,
    #[error("edge set is not a cut set")]
    NotACutSet,
    #[error("terminal vertex sets overlap")]
    OverlappingTerminals,
    #[error("budget exceeded: {needed} subset checks needed, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),
    #[error("no disjoint 5-cycle exists for the chosen hinge")]
    NoDisjointCycle,
    #[error("no valid path or cycle choice found for a synthesis step")]
    NoSynthesisStep,
    #[error("synthesis verification mismatch: predicted psi {predicted}, brute force {actual}")]
    VerificationMismatch { predicted: u64, actual: u64 },
    #[error("target must be of the form 2^i*3^j*5^k*7^l, found factor {0}")]
    BadTargetFactor(u64),
    #[error("target with 2 or 3 factors requires the 4cc mode")]
    TargetNeedsFourCc,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}
