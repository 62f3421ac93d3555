//! Weight invariants of numerical semigroups, gamma-hyperelliptic
//! classification, exhaustive enumeration by genus and tableau rendering.
//!
//! ```
//! use semigroup_weights::{gamma, weights, Semigroup};
//!
//! let s = Semigroup::from_generators(&[4, 14, 29]).unwrap();
//! assert_eq!(s.genus(), 20);
//! assert_eq!(weights::k_weight(&s), 109);
//! assert!(gamma::check_bounds(&s, 3).unwrap().attains_max_k);
//! ```

pub mod error;
pub mod gamma;
pub mod harness;
pub mod semigroup;
pub mod tableau;
pub mod tree;
pub mod weights;

pub use error::{Error, Result};
pub use semigroup::{GapList, Semigroup};
