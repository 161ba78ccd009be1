//! Numerical semigroups, their relative ideals, and the torsion of semigroup
//! tensor products.
//!
//! Everything here is pure arithmetic on integer sets. The crate is `no_std`
//! and only needs `alloc`; IO, file formats and the command line live in the
//! `semitorsion` companion crate.
//!
//! The main entry points:
//!
//! * [`NumericalSemigroup`] for `S = <n1, ..., ne>` with its Frobenius number,
//!   gaps, Apéry sets and symmetry test.
//! * [`CofiniteSet`] and [`RelativeIdeal`] for the ideal algebra: sums,
//!   intersections, duals, shifts and minimal generators.
//! * [`torsion`] for the graphs `Γ_z(A, B)`, the torsion numbers `τ_z` and
//!   `τ(A, B)`, the fiber oracle and the split criterion.
//! * [`hypersurface`] for two-generated semigroups `<a, b>`: lattice classes,
//!   the boundary cycle and the closed-form dual.
//! * [`hw`] for irreducible arithmetic sequences and the Huneke–Wiegand check
//!   for two-generated monomial ideals.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod cofinite;
mod error;
pub mod hw;
pub mod hypersurface;
mod ideal;
mod semigroup;
pub mod torsion;
mod union_find;

pub use cofinite::CofiniteSet;
pub use error::Error;
pub use ideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
pub use union_find::UnionFind;

pub type Result<T> = core::result::Result<T, Error>;
