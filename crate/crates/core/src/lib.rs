//! Summatory functions of the Möbius and von Mangoldt functions at desk
//! scale, exact identity checks, and rigorous certification of explicit
//! bounds on |M(x)|/x.

pub mod certify;
pub mod decimal;
pub mod enclosure;
pub mod error;
pub mod identity;
pub mod par;
pub mod sieve;
pub mod summatory;

pub use decimal::Decimal;
pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use par::Execution;
pub use summatory::{Mode, ScanConfig, SeriesKind, Summatory};
