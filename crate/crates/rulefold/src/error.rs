use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("radius {radius} is outside 1..={max}", max = crate::rule::MAX_RADIUS)]
    RadiusOutOfRange { radius: u32 },

    #[error("rule number needs {needed} bits but a radius-{radius} table holds {available}")]
    RuleNumberOutOfRange {
        radius: u32,
        needed: u64,
        available: u64,
    },

    #[error("neighborhood has {got} cells, expected {want}")]
    NeighborhoodLength { want: usize, got: usize },

    #[error("bad rule serialization: {reason}")]
    BadRuleSerialization { reason: String },

    #[error("table needs {required_bytes} bytes, memory budget is {budget_bytes} bytes")]
    BudgetExceeded {
        required_bytes: u128,
        budget_bytes: u128,
    },

    #[error("rule maps the all-white neighborhood to black; white background is not quiescent")]
    NonQuiescentRule,

    #[error(
        "generation {target} is unreachable with fold {fold}; \
         nearest reachable generations are {lower} and {upper}"
    )]
    UnreachableGeneration {
        target: u64,
        fold: u32,
        lower: u64,
        upper: u64,
    },

    #[error("the bit-parallel kernel only implements Rule 30 at radius 1, fold 1")]
    KernelRequiresRule30,

    #[error("Lambert W_0 is only evaluated for x >= 0, got {x}")]
    LambertDomain { x: f64 },

    #[error("not enough spread to fit: {points} distinct generation counts, max/min ratio {ratio:.3} (need >= 3 points over a >= 4x range)")]
    InsufficientSpread { points: usize, ratio: f64 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("csv line {line}: {reason}")]
    CsvParse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
