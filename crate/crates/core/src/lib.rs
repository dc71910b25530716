//! Generalized Euler totient over rings of integers of class-number-one
//! quadratic fields.
//!
//! For a field `K = Q(sqrt m)` with `O_K` a unique factorization domain,
//! `phi_K(d)` is the order of the unit group of `O_K / d O_K`. The crate
//! computes it two ways (exhaustive search and a multiplicative closed form),
//! classifies natural numbers by the Lehmer-type predicates built on it, and
//! runs bounded verification suites for the statements relating them.
//!
//! ```
//! use lehmerk::{QuadraticField, TotientEngine};
//!
//! let gauss = QuadraticField::new(-1).unwrap();
//! let engine = TotientEngine::new(gauss);
//! assert_eq!(engine.phi_fast(21).unwrap(), 384);
//! ```

pub mod arith;
pub mod classify;
pub mod cli;
pub mod error;
pub mod field;
pub mod rational;
pub mod residue;
pub mod scan;
pub mod splitting;
pub mod theorems;

pub use classify::{
    check_prop12, classify, classify_range, is_lehmer, is_normal, is_realizable,
    is_strongly_lehmer, ClassificationRecord, ClassifyOptions,
};
pub use error::{Error, Result};
pub use field::{AlgInt, BasisShape, QuadraticField, IMAGINARY_WHITELIST, REAL_WHITELIST};
pub use rational::RationalValue;
pub use residue::{
    crt_map, enumerate_residues, is_unit, phi_oracle, unit_table, ResidueClass, ResidueRing,
    TotientEngine, DEFAULT_ORACLE_CAP,
};
pub use splitting::{is_irreducible_nat, splitting_type, SplittingType};
pub use theorems::{
    crt_suite, ratio_scan, run_suite, zeta_bounds, RatioScan, Suite, SuiteOptions,
    VerificationReport, Witness, ZetaBound,
};
