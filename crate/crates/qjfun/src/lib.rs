//! Exact q-series arithmetic for the multisection of fractional-power Euler
//! products.
//!
//! For a prime N > 3 the expansion
//!
//! ```text
//! (q^(1/N))_inf / (q^N)_inf = J_0(q) + q^(1/N) J_1(q) + ... + q^((N-1)/N) J_{N-1}(q)
//! ```
//!
//! has exactly (N+1)/2 nonzero coefficient series. This crate computes every
//! J_r by two independent routes — brute-force multisection of the pentagonal
//! series ([`oracle`]) and theta-function closed forms ([`closed_form`]) —
//! and verifies the classical 5- and 7-division identities, the support and
//! product theorems, and the root-of-unity product identity over exact
//! cyclotomic integers ([`cyclotomic`]). All series arithmetic is exact and
//! truncation-aware ([`series`]); nothing is ever compared by tolerance.

pub mod closed_form;
pub mod cyclotomic;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod qfunc;
pub mod series;

pub use error::{Error, Result};
pub use oracle::PrimeContext;
pub use series::{ResidualCheck, ScaledSeries};
