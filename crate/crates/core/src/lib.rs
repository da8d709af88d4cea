//! Exact computations with finite-dimensional corings over prime fields.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: dense matrices, subspaces and quotients over GF(p).
//! * [`algebra`]: structure-constant algebras, their radicals and simplicity.
//! * [`bimodule`]: one- and two-sided modules and balanced tensor products.
//! * [`module_theory`]: hom spaces, projectivity, MeatAxe, socles, isotypic parts.
//! * [`coring`]: corings, their axiom suite, standard constructions and dual rings.
//! * [`comodule`]: comodules, bicomodules and the translation to dual-ring modules.
//! * [`structure`]: semisimplicity, simplicity and decomposition of corings.
//! * [`galois`]: grouplikes, coinvariants and the Galois comparison map.
//! * [`scene`] and [`cli`]: the JSON scene format and the command-line front end.

pub mod algebra;
pub mod bimodule;
pub mod cli;
pub mod comodule;
pub mod coring;
pub mod demo;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod module_theory;
pub mod report;
pub mod scene;
pub mod structure;

pub use error::{Error, Result};
