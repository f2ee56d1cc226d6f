//! Rhombic and zonotopal tilings of Elnitsky polygons in type A, and the
//! Bott-Samelson data they index: reduced words up to commutation, hexagon
//! flips, the zonotopal tiling poset, Poincaré polynomials and torus-fixed
//! points given by light/dark colorings.

pub mod bott_samelson;
pub mod error;
pub mod flips;
mod growth;
pub mod io;
pub mod labelset;
pub mod oracle;
pub mod permutations;
pub mod tilings;
pub mod zonotopal;

pub use error::{Error, Result};
pub use labelset::LabelSet;
pub use permutations::{InversionSet, Permutation, Word};
pub use tilings::{Boundary, Edge, RhombicTiling, Rhombus};
