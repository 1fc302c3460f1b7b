//! Even distribution of the gaps of numerical semigroups modulo `m`.
//!
//! The crate builds numerical semigroups from generators
//! ([`semigroup`]), provides residue histograms and arithmetic in
//! `Z[x]/(x^m - 1)` ([`residue`]), decides whether the gap set is evenly
//! distributed modulo `m` along several independent routes ([`criteria`]) and
//! cross-checks every closed form against a brute-force oracle
//! ([`verify`]).
//!
//! ```
//! use nsgap::{criteria, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&[5, 7]).unwrap();
//! assert_eq!(s.genus(), 12);
//! assert!(criteria::ed_direct(&s, 6).evenly_distributed);
//! assert_eq!(
//!     criteria::ed_all_moduli(&s),
//!     criteria::EdModuli::Moduli(vec![1, 2, 3, 4, 6])
//! );
//! ```

pub mod arith;
pub mod criteria;
pub mod error;
pub mod exec;
pub mod residue;
pub mod semigroup;
pub mod verify;

pub use criteria::{
    classify_family, ed_all_moduli, ed_apery_criterion, ed_direct, ArithmeticAperyForm, EdModuli,
    EdReport, Family,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use residue::{CycPoly, IntMultiset, ResidueHistogram};
pub use semigroup::{AperySet, NumericalSemigroup};
