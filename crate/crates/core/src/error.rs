use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Requested order exceeds what the operation supports.
    OrderTooLarge { order: usize, max: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    SameVertex(usize),
    NotAnEdge(usize, usize),
    SelfLoop(usize),
    /// Adjacency rows are not symmetric, carry a loop or stray bits.
    InvalidAdjacency(&'static str),
    /// Argument outside the documented domain of the operation.
    InvalidArgument(&'static str),
    /// `k` above the bound supported by the minor-based compliance oracle.
    KTooLarge { k: usize, max: usize },
    /// The graph is intrinsically linked where a linkless input is required.
    AlreadyLinked,
    /// A search budget ran out before an answer was established.
    BudgetExhausted,
    /// A proved statement was contradicted by a computation. Must never happen.
    TheoremFalsified(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderTooLarge { order, max } => {
                write!(f, "graph order {order} exceeds the supported maximum {max}")
            }
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph of order {order}")
            }
            Error::SameVertex(v) => write!(f, "expected two distinct vertices, got {v} twice"),
            Error::NotAnEdge(u, v) => write!(f, "{{{u},{v}}} is not an edge"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::InvalidAdjacency(why) => write!(f, "invalid adjacency: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::KTooLarge { k, max } => write!(f, "k = {k} exceeds the supported bound {max}"),
            Error::AlreadyLinked => write!(f, "graph is intrinsically linked"),
            Error::BudgetExhausted => write!(f, "search budget exhausted"),
            Error::TheoremFalsified(what) => write!(f, "theorem falsified: {what}"),
        }
    }
}

impl core::error::Error for Error {}
