//! Exact-arithmetic library for finite analogues of classical identities:
//! truncated beta and hypergeometric functions with their discretized
//! integral representations, truncated multiple zeta values and
//! polylogarithms, and the truncated Ohno-Zagier generating function, all
//! verified by exact rational and truncated-series comparison.
//!
//! Modules:
//! - [`exact`]: big-rational scalars, rising factorials, binomials, residues
//! - [`series`]: truncated multivariate power series over X, Y, Z
//! - [`hyperfun`]: truncated beta / hypergeometric functions and their
//!   discretized-integral and transformation identities
//! - [`polylog`]: truncated multiple zeta values and polylogarithms and the
//!   series-equals-discretization identities
//! - [`ozgen`]: the truncated Ohno-Zagier generating function, computed three
//!   independent ways, with its coefficient identities
//! - [`harness`]: seeded verification engine, report emission and the
//!   floating-point limit suite

pub mod exact;
pub mod harness;
pub mod hyperfun;
pub mod ozgen;
pub mod polylog;
pub mod series;

pub use exact::{binomial, factorial, rational, reduce_mod_p, rising_factorial, Rational, ResidueClass};
pub use series::{newton_power_sums, Exponents, PowerSumTable, TruncatedSeries, Var, VarSet};
