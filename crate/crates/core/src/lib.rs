//! Exact arithmetic over integral dihedral group rings and the lattice
//! machinery needed to verify a family of syzygy-kernel constructions.
//!
//! The crate is organised in layers:
//!
//! * [`groupring`] — arithmetic in `Z[D]` for the dihedral group `D` of
//!   order `4n`, together with ring-matrix maps between free modules and
//!   their integer-matrix realizations;
//! * [`intlat`] — deterministic integer lattice algebra (canonical
//!   Hermite bases, Smith invariant factors, kernels, images, quotients);
//! * [`gmod`] — lattices closed under the right group action: kernels and
//!   images of module maps, generated submodules, annihilators, multiplier
//!   and homomorphism lattices;
//! * [`constructions`] — the named objects of the verification suite: the
//!   standard resolution, the generators `w1..w4`, quintuple-parametrized
//!   maps to `ZC`, the elementary automorphisms and the Euclid-style
//!   quintuple reduction, the `psi` scaling maps, the kernels `K_{x,r}`,
//!   the ideals `I_l`, and the non-isomorphism certificate;
//! * [`checks`] — the runnable lemma catalog behind the CLI verifier.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so callers may evaluate checks concurrently without
//! coordination. Coefficients are arbitrary-precision integers.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod constructions;
pub mod error;
pub mod gmod;
pub mod groupring;
pub mod intlat;

pub use error::Error;
pub use gmod::GModule;
pub use groupring::{DihedralContext, ModuleElement, RingElement, RingMatrix};
pub use intlat::{IntMatrix, Lattice, QuotientInvariants};
