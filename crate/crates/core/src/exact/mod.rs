//! Arbitrary-precision binomials, the closed-form bounds, and exact
//! verification of the identity and inequality chains behind the degree
//! theorems. Nothing in here uses floating point except the explicitly
//! approximate [`bounds::kz_bound_real`].

pub mod binom;
pub mod bounds;
pub mod claims;
pub mod threshold;

pub use binom::binom;
pub use bounds::{
    a0_size, a0_t_degree, alpha_closed_form, emc_size_bound, hm_size_by_count, hm_t_degree_bound,
    kz_bound, kz_bound_real, EmcBound,
};
pub use claims::{
    check_case_predicates, check_eq04, check_eq07, check_eq25, evaluate, ClaimId, ClaimKind,
    ClaimOutcome, ParamPoint, Relation,
};
pub use threshold::{find_threshold, AffineRule, ThresholdReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
