//! Exact arithmetic core for classifying locally induced Galois
//! representations with exceptional residual image.
//!
//! Everything in this crate is computed over exact domains: arbitrary
//! precision integers and rationals for q-expansions, prime fields and their
//! quadratic extensions for eigenvalue systems, and the real quadratic field
//! Q(√5) for character values. There is no floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the command
//! line live in the companion `exrep-cli` crate.
//!
//! Module layout:
//!
//! * [`qseries`] — level-one modular forms: Eisenstein series, Δ, the
//!   Victor–Miller basis, Hecke operator matrices and eigensystems mod p.
//! * [`permrep`] — small permutation groups (S4, A5, dihedral, cyclic) with
//!   exact character theory: tables, induction, restriction, inner products.
//! * [`locus`] — the arithmetic classification pipeline: the order formula
//!   for d, valuation and Hatada obstructions, admissible (G, D, I)
//!   enumeration and the projective-image consistency statistic.
//! * [`selmer`] — the finite character-theoretic shadow of the deformation
//!   argument: Hom_D(C, W) dimensions, class-number fixtures, the nicely
//!   exceptional predicate and the vanishing verdict combinator.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod locus;
pub mod permrep;
pub mod qseries;
pub mod selmer;

// Coefficients in the public API are arbitrary-precision integers; re-export
// the type so downstream crates need no direct num-bigint dependency.
pub use num_bigint::BigInt;
