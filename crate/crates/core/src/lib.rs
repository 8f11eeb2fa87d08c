//! Exact arithmetic for numerical semigroups and their relative ideals.

mod error;
pub mod enumerate;
pub mod ideal;
pub mod oracle;
pub mod report;
pub mod semigroup;
pub mod verify;

pub use enumerate::{
    classify, check_duality, intermediate_ideals, oversemigroups, semigroups_up_to_genus,
    trace_ideals, ClassificationVerdict, EnumerationResult, Family, GorensteinSmall, Limits,
};
pub use error::Error;
pub use ideal::{RelativeIdeal, TraceReport};
pub use semigroup::NumericalSemigroup;
pub use verify::{run_battery, CheckReport, VerifyReport, DEFAULT_SEED};
