//! Exact q-series arithmetic for overpartition identities and congruences.
//!
//! The crate provides:
//!
//! * truncated power series, Laurent series, and residue series over
//!   arbitrary-precision integers ([`series`]);
//! * Pochhammer products, Euler products, two-variable theta series, and
//!   the generating functions of several overpartition counting functions
//!   ([`products`]);
//! * brute-force enumeration of (over)partitions with residue or frequency
//!   restrictions, used as an independent oracle for every generating
//!   function ([`oracle`]);
//! * m-dissections of series and the 3-/4-dissections of theta functions
//!   ([`dissect`]);
//! * arithmetic-progression congruence claims and a scanner for them
//!   ([`congruence`]);
//! * a symbolic expression type with a small grammar, an exact evaluator,
//!   and a mod-m evaluator ([`expr`]);
//! * a registry of named identities that can be verified to any precision
//!   ([`registry`]), reporting results as serializable records
//!   ([`report`]).

pub mod congruence;
pub mod dissect;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod products;
pub mod registry;
pub mod report;
pub mod series;

pub use congruence::{CongruenceClaim, Family};
pub use error::{Result, SeriesError};
pub use products::{GordonParams, Sign};
pub use report::{ClaimReport, IdentityReport, Status};
pub use series::{LaurentSeries, ResidueSeries, TruncatedSeries};
