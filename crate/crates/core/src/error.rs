use thiserror::Error;

use crate::rootsys::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {label}{rank}: {reason}")]
    InvalidSystem {
        label: String,
        rank: usize,
        reason: &'static str,
    },

    #[error("roots {0} and {1} are comparable, so the set is not an antichain")]
    NotAntichain(usize, usize),

    #[error("root index {0} is out of range")]
    RootOutOfRange(usize),

    #[error("root set is not closed under adding positive roots: {0} + {1} = {2} is missing")]
    NotAnIdeal(usize, usize, usize),

    #[error("the first ideal is not contained in the second")]
    NotContained,

    #[error("root {0} does not belong to the ideal")]
    NotInIdeal(usize),

    #[error("affine Weyl group element is not admissible")]
    NotAdmissible,

    #[error("set of affine roots is not biclosed: no affine simple root left after {peeled} of {total} steps")]
    NotBiclosed { peeled: usize, total: usize },

    #[error("no duality implemented for type {0}")]
    UnsupportedDuality(CartanType),

    #[error("malformed coordinates: {0}")]
    BadCoordinates(String),

    #[error("product formula is not integral: {0}")]
    InexactDivision(String),

    #[error("no point satisfies the region inequalities for ideal of size {0}")]
    WitnessInfeasible(usize),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}
