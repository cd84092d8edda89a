use alloc::string::String;

/// Every failure the library reports.
///
/// Budget errors carry the work that would have been needed so callers can
/// decide whether to raise the budget or switch to sampling.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus must be monic of degree {expected}, got {got} coefficients")]
    BadModulus { expected: u32, got: usize },
    #[error("field of size {p}^{m} exceeds the table limit")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("element {0} is outside the field")]
    InvalidElement(u32),
    #[error("division by zero")]
    DivideByZero,
    #[error("evaluation points must be distinct")]
    DuplicatePoint,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrices live over different fields")]
    FieldMismatch,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{what}: needs {needed} steps, budget is {budget}")]
    BudgetExceeded { what: &'static str, needed: u128, budget: u128 },
    #[error("degree sequence is not realisable as a simple graph")]
    DegreeSequenceInfeasible,
    #[error("beta must divide r with 1 <= beta <= r")]
    InvalidBeta,
    #[error("graph construction failed: {0}")]
    ConstructionFailed(String),
    #[error("graph is not a regular bipartite graph")]
    NotBipartiteRegular,
    #[error("no catalogued graph for r={r}, t={t}")]
    NotInCatalog { r: u64, t: u64 },
    #[error("the index set of the bound is empty")]
    EmptyS,
    #[error("parameters outside the regime of the formula: {0}")]
    OutOfRegime(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("r cannot be written as a sum of binomials with admissible remainder")]
    ParamDecompositionFails,
    #[error("unknown mode {0}")]
    InvalidMode(String),
    #[error("t={0} is not supported by the general construction")]
    UnsupportedT(u64),
    #[error("no auxiliary graph of degree {degree} and girth >= {girth}")]
    AuxiliaryUnavailable { degree: u64, girth: u64 },
    #[error("field of size {q} is too small, need at least {need}")]
    FieldTooSmall { q: u64, need: u64 },
    #[error("GF({q}) has no multiplicative subgroup of order {order}")]
    SubgroupUnavailable { q: u64, order: u64 },
    #[error("no prime power below the search limit satisfies the field constraints")]
    NoSuitableField,
    #[error("coset search exhausted over GF({q}) after placing {placed} of {wanted} cosets")]
    SearchExhausted { q: u64, placed: usize, wanted: usize },
    #[error("code rate is not r/(r+2)")]
    NotRateOptimal,
}

pub type Result<T> = core::result::Result<T, Error>;
