//! Exact modular representation theory for finite matrix groups.
//!
//! The crate builds representations of explicitly enumerated matrix groups
//! over finite fields and answers structural questions about them: fixed
//! points, homomorphism spaces, composition factors, socle layers, first
//! cohomology and `Ext^1`, and the three adequacy conditions
//!
//! 1. `p` does not divide `dim V`,
//! 2. `Ext^1_G(V, V) = 0`,
//! 3. `End(V)` is spanned by the images of semisimple elements.
//!
//! Everything is exact and deterministic. The crate is `no_std` (it needs
//! `alloc`); IO, file formats and the command line live in the `modrep`
//! companion crate.
//!
//! Module map:
//!
//! - [`gf`]: prime and extension fields, Frobenius.
//! - [`poly`]: univariate polynomials over a field (characteristic
//!   polynomials, irreducible factors).
//! - [`matlin`]: dense matrices, echelon forms, kernels, Kronecker products.
//! - [`grp`]: breadth-first group enumeration with a Cayley spanning tree.
//! - [`rep`]: validated representations and constructions on them.
//! - [`modstruct`]: spin-up, homomorphisms, MeatAxe chop, socles, summands.
//! - [`cohom`]: `H^1` and `Ext^1` via the spanning-tree cocycle solver.
//! - [`adequacy`]: the adequacy decision procedure.
//! - [`rootsys`]: finite root systems and coroot inequalities.
//! - [`sl2lab`]: a registry of reproducible scenarios on `SL_2`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod adequacy;
pub mod cohom;
mod error;
pub mod gf;
pub mod grp;
pub mod matlin;
pub mod modstruct;
pub mod poly;
pub mod rep;
pub mod rootsys;
pub mod sl2lab;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use grp::GroupTable;
pub use matlin::Mat;
pub use rep::Rep;
