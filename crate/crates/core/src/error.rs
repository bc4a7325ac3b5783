use thiserror::Error;

/// Errors shared across the crate. Operations that are total on valid input
/// return plain values; everything with a real failure mode funnels here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {u}-{v} is not present")]
    EdgeNotPresent { u: usize, v: usize },

    #[error("edge {u}-{v} is already present")]
    EdgeAlreadyPresent { u: usize, v: usize },

    #[error("loops are not allowed (vertex {0})")]
    LoopEdge(usize),

    #[error("graph on {n} vertices exceeds the cap of {cap} for this operation")]
    VertexCapExceeded { n: usize, cap: usize },

    #[error("enumeration supports 1 <= n <= {cap}, got {n}; ingest larger corpora from graph6 files")]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("chain cycle length {0} is invalid: lengths must be odd and >= 3")]
    InvalidCycleLength(usize),

    #[error("chain spec must contain at least one cycle length")]
    EmptyChainSpec,

    #[error("value overflows the counting range")]
    CountOverflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Raised when a node-expansion budget runs out mid-search. The operation is
/// undecided; callers surface this as an explicit budget verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted")]
pub struct BudgetExhausted;

/// Node-expansion allowance threaded through the coloring searches.
/// `unlimited` never trips; a limited meter is shared by every search an
/// operation (or one harness instance) performs.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    remaining: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget { remaining: None }
    }

    pub fn limited(nodes: u64) -> Self {
        SearchBudget {
            remaining: Some(nodes),
        }
    }

    #[inline]
    pub fn spend(&mut self, nodes: u64) -> std::result::Result<(), BudgetExhausted> {
        match &mut self.remaining {
            None => Ok(()),
            Some(left) => {
                if *left < nodes {
                    *left = 0;
                    Err(BudgetExhausted)
                } else {
                    *left -= nodes;
                    Ok(())
                }
            }
        }
    }
}
