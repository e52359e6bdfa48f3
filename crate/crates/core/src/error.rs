use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("root of order {order} does not live in conductor {conductor}")]
    RootOrder { conductor: u32, order: u32 },
    #[error("cannot parse family descriptor `{0}`")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("order bound exceeded: {what} has order {order} > {bound}")]
    OrderBound {
        what: String,
        order: usize,
        bound: usize,
    },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("orders of {0} are not coprime")]
    NotCoprime(String),
    #[error("no character table available for stabilizer of order {0}")]
    StabilizerTable(usize),
    #[error("input is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("malformed signed bijection: {0}")]
    MalformedBijection(String),
    #[error("search infeasible: {0}")]
    Feasibility(String),
    #[error("lifting failed at level 2^{level}: {what}")]
    Lifting { level: u32, what: String },
    #[error("verification failed for {case}: {claim}")]
    Verification { case: String, claim: String },
}

pub type Result<T> = std::result::Result<T, Error>;
