use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{0}`: {1}")]
    Parse(String, String),

    #[error("parts {0:?} are not weakly decreasing positive integers")]
    NotAPartition(Vec<usize>),

    #[error("parts {0:?} are not strictly decreasing positive integers")]
    NotStrict(Vec<usize>),

    #[error("{shape} is not contained in the {bound}")]
    Containment { shape: String, bound: String },

    #[error("sequences of unequal length ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("symmetric function of degree {degree} is not in the Q-span (residual on {residual})")]
    NotInQSpan { degree: usize, residual: String },

    #[error("coefficient {value} is not divisible by {divisor} (index {index})")]
    NotDivisible {
        index: String,
        value: String,
        divisor: String,
    },

    #[error("enumeration budget exceeded: weight {weight} > {limit}")]
    BudgetExceeded { weight: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
