use crate::semigroup::{MAX_GENERATOR, MAX_SIEVE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generator {0} exceeds the supported maximum {MAX_GENERATOR}")]
    GeneratorTooLarge(i64),
    #[error("not a numerical semigroup (gcd ≠ 1): generators have gcd {gcd}")]
    NotCoprime { gcd: i64 },
    #[error("conductor exceeds the sieve bound {MAX_SIEVE}; the complement is too large to tabulate")]
    ConductorTooLarge,
    #[error("ideal generator list is empty")]
    EmptyIdealGenerators,
    #[error("ideal generator {0} exceeds the supported magnitude")]
    IdealElementTooLarge(i64),
    #[error("operands live over different ambient semigroups")]
    AmbientMismatch,
    #[error("ideal is not contained in the semigroup (generator {0} lies outside)")]
    NotInSemigroup(i64),
    #[error("ideal does not contain the conductor ideal")]
    ConductorNotContained,
    #[error("search space too large: {what} is {size}, cap is {cap}; raise the cap explicitly to proceed")]
    SearchSpaceExceeded {
        what: &'static str,
        size: u64,
        cap: u64,
    },
}
