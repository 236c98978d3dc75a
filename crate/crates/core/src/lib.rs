//! Directions sets of subsets of the natural numbers.
//!
//! For `A ⊆ ℕ` and `k ≥ 2`, the k-directions set `D^k(A)` collects the unit
//! vectors `a / ‖a‖` over all k-tuples `a` drawn from `A`, and `D^k̲(A)` does
//! the same over tuples with pairwise distinct entries. Both live on the
//! nonnegative orthant of the unit sphere `S^(k−1)`.
//!
//! The crate is organized around the questions one asks about these sets:
//!
//! * [`direction`]: exact and floating direction arithmetic (`ρ`, `ρ_I`,
//!   permutations, the dimension lift).
//! * [`targets`]: candidate accumulation sets `X`, their closure under
//!   permutations and coordinate projections, and dense enumerations of them.
//! * [`enumeration`]: ground sets (naturals, primes, powers, …) and the exact
//!   direction clouds they generate.
//! * [`density`]: covering radii over sphere nets, the ratio-gap diagnostic,
//!   witness tuples for dense sets, and the dimension-chain experiment.
//! * [`constructor`]: the factorial-scaling construction of a set `A` whose
//!   distinct-entry directions accumulate exactly on a prescribed `X`.
//! * [`remark`]: why the construction fails when repeated entries are allowed.
//!
//! ```
//! use kdirections::direction::{primitive, rho};
//! use num_bigint::BigUint;
//!
//! let d = primitive(&[BigUint::from(4u32), BigUint::from(6u32)]).unwrap();
//! assert_eq!(d.to_string(), "(2,3)");
//! let x = rho(&[3.0, 4.0]).unwrap();
//! assert!((x.coords()[0] - 0.6).abs() < 1e-15);
//! ```

pub mod budget;
pub mod constructor;
pub mod density;
pub mod direction;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod interval;
mod nearest;
pub mod remark;
pub mod targets;

pub use error::{Error, ErrorClass, Result};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/directions.md")]
    mod directions {}
    #[doc = include_str!("../../../book/src/targets.md")]
    mod targets {}
    #[doc = include_str!("../../../book/src/density.md")]
    mod density {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/repetition.md")]
    mod repetition {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
