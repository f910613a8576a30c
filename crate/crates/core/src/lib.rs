//! Exact integer-lattice computations behind the factoriality classification
//! of moduli spaces of semistable sheaves on K3 and abelian surfaces.
//!
//! The crate is organized in three layers:
//!
//! * [`lattice`] — arbitrary-precision lattices: Smith/Hermite normal forms,
//!   orthogonal complements, duals, discriminant groups, glue overlattices,
//!   and invariant fingerprints.
//! * [`mukai`] — surface models (Néron–Severi data plus an optional primitive
//!   embedding into the full Mukai lattice), Mukai vectors and their pairing,
//!   and the orthogonal lattices `v⊥`.
//! * [`factoriality`] — the verdict engine deciding locally factorial vs
//!   2-factorial, together with the lattice constructions `Γ_v`, `H_v` and the
//!   Beauville lattices of the symplectic resolutions.
//!
//! All arithmetic is exact (`BigInt`/`BigRational`); every operation is a pure
//! function of its inputs and safe to call concurrently.

pub mod error;
pub mod factoriality;
pub mod json;
pub mod lattice;
pub mod modelgen;
pub mod mukai;

pub use error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar used throughout the crate.
pub type Int = num_bigint::BigInt;
