//! Monodromy zeta-functions of one-parameter deformations of polynomial germs,
//! computed from Newton diagrams with exact lattice geometry.
//!
//! A deformation is a polynomial `F(σ, z₁, …, z_n)` with `F(0) = 0`; variable
//! 0 is always the deformation parameter σ.

pub mod error;
pub mod germ;
pub mod lattice;
pub mod newton;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};
pub use germ::{parse_germ, GermSeries, IndexSet};
pub use newton::{diagram_facets, zeta_full, zeta_i, zeta_torus};
pub use zeta::FactoredZeta;
