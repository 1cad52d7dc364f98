//! Exact workbench for degree versions of the Erdős–Ko–Rado and
//! Hilton–Milner theorems and of the Erdős Matching Conjecture.
//!
//! * [`family`]: k-sets as bitmasks and canonically ordered families.
//! * [`invariants`]: degrees, t-degrees, diversity, matching and covering
//!   numbers.
//! * [`constructions`]: stars, Hilton–Milner families, `A_0`, `A_k`.
//! * [`exact`]: big-integer binomials, closed-form bounds, exact checks of
//!   the identity and inequality chains, threshold scans.
//! * [`search`]: isomorph-reduced exhaustive optimization of the minimum
//!   t-degree and the open-problem probes.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod family;
pub mod invariants;
pub mod io;
pub mod search;

pub use error::{Error, Result};
pub use family::{disjoint, Family, GroundSet, KSet};
