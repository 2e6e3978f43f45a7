//! Exact symbolic computation of Macdonald symmetric functions, Macdonald
//! difference operators, and superpolynomial invariants of the colored Hopf
//! link, together with machine checks of the closed formulas against
//! independent summation oracles.

pub mod error;
pub mod exactalg;
pub mod partitions;
pub mod symfunc;

pub use error::{Error, Result};
pub use exactalg::{ExpansionSpec, MultiLaurent, RatFun, Sym, TruncSeries};
pub use partitions::Partition;
