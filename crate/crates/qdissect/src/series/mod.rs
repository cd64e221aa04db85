//! Exact series arithmetic: the three coefficient containers everything
//! else is built on.

pub mod laurent;
pub mod residue;
pub mod truncated;

pub use laurent::LaurentSeries;
pub use residue::ResidueSeries;
pub use truncated::TruncatedSeries;
