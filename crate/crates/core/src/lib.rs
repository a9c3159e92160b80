//! Steiner distance hypermatrices of graphs, their symmetric
//! hyperdeterminants and spectra.

pub mod error;
pub mod exact;
pub mod graphs;
pub mod harness;
pub mod hypermatrix;
mod modular;
pub mod resultant;
pub mod spectra;
pub mod sylvester2;
pub mod wendt;

pub use error::{Error, Result};
pub use exact::{BigMatrix, Poly};
pub use graphs::{Graph, Permutation, VertexSet};
pub use harness::{Cache, RunConfig, SweepReport};
pub use resultant::{Hyperdet, Route};
pub use wendt::VanishingVerdict;
pub use hypermatrix::{SliceProfile, SymmetricHypermatrix};
pub use spectra::{EigenPair, Spectrum};
