//! Exact rational machinery for the classical square- and cube-root
//! approximation rules: bracketing between consecutive powers, the
//! closed-form estimates and iterations, proof-by-multiplication bound
//! certificates, exhaustive error scans, and circular-segment area rules.
//!
//! No floating point takes part in any computation or verdict. Every bound
//! claim is settled by raising an exact rational to the relevant power and
//! comparing integers; decimals appear only in rendered output.

pub mod bracket;
pub mod certify;
pub mod cli;
pub mod cuberoot;
pub mod error;
pub mod exactnum;
pub mod rescale;
pub mod segment;
pub mod squareroot;

pub use error::{Error, Result};
pub use exactnum::{Int, Rational};
