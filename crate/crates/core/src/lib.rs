//! Exact combinatorics and canonical bases for the level-1 q-deformed Fock
//! space of type A(2)_{2n}.
//!
//! The crate is `no_std` (it needs `alloc`) and every operation is a pure
//! function of its inputs. The layers build on each other:
//!
//! - [`partitions`]: h-strict partitions, residues, i-nodes, bar-cores, orders
//!   and block enumeration.
//! - [`abacus`]: the symmetric h-runner abacus, bar positions and the
//!   `<i,j>` notation for bar-weight-2 partitions.
//! - [`laurent`]: Laurent polynomials in `q` over arbitrary-precision integers.
//! - [`fock`]: Fock space vectors and the divided-power actions of `f_i`, `e_i`.
//! - [`canonical`]: signatures, the involutions `psi_i`, and the canonical
//!   basis oracle.
//! - [`formulas`]: closed forms for q-decomposition numbers in bar-weight 0, 1
//!   and 2.
//! - [`pairs`]: `[w:k]`-pairs, exceptional partitions and pair verification.
//! - [`spin`]: parities and the reduced-decomposition-number predictor.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod abacus;
pub mod canonical;
pub mod error;
pub mod fock;
pub mod formulas;
pub mod laurent;
pub mod matrix;
pub mod pairs;
pub mod partitions;
pub mod spin;

pub use abacus::{AbacusDisplay, AbacusTag, BarPositions};
pub use canonical::{canonical_basis, PeelPolicy};
pub use error::{Error, Result};
pub use fock::FockVector;
pub use laurent::LaurentPoly;
pub use matrix::CanonicalBasisMatrix;
pub use partitions::{BlockId, Dominance, HParams, Node, Partition};
