//! Exact arithmetic foundation: symbols, multivariate Laurent polynomials
//! over big rationals, normalized rational functions, truncated power series
//! and the iterated constant-term expansion engine.

pub mod expand;
pub mod laurent;
pub mod ratfun;
pub mod series;
pub mod sym;

pub use expand::{constant_term, constant_term_checked, ExpansionSpec, Factor};
pub use laurent::{Mono, MultiLaurent};
pub use ratfun::{ratfun_arith, RatFun};
pub use series::TruncSeries;
pub use sym::Sym;
