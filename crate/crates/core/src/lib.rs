//! Point–hyperplane incidence graphs of finite projective spaces, and the
//! machinery to pin down their vertex-isoperimetric and incidence-free
//! numbers: exact finite-field arithmetic, graph construction, analytic
//! lower bounds, counting upper bounds, explicit constructions (certificates
//! included), brute-force and pruned exact searches, and the integer
//! relaxation whose optimum meets the construction value plane by plane.
//!
//! Everything downstream of a claim re-verifies it: constructions emit
//! certificates, certificates are checked against the incidence relation
//! from scratch, and the summary-table pipeline derives every entry rather
//! than quoting it.

pub mod bitset;
pub mod bounds;
pub mod cert;
pub mod circle;
pub mod construct;
pub mod error;
pub mod field;
pub mod geometry;
pub mod graph;
pub mod par;
pub mod relax;
pub mod rng;
pub mod search;
pub mod table;
pub mod verify;

pub use error::Error;

/// Exact rational used for every ratio we report (never floats).
pub type Rat = num::rational::Ratio<i64>;
