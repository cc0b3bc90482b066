//! Exact verification of a family of representations of `D_2q × C_2` into the
//! Chevalley group G2 over GF(2^m), and of the nonabelian 1-cohomology
//! statements built on it.

pub mod chevalley;
pub mod cohomology;
pub mod counterexample;
pub mod error;
pub mod gamma;
pub mod gf2m;
pub mod group;
pub mod linalg;
pub mod matrix;
pub mod roots;
pub mod suite;
pub mod unipotent;

pub use cohomology::{Cocycle, FiberReport, SigmaAction};
pub use counterexample::{Counterexample, Representation};
pub use error::Error;
pub use gamma::{Domain, Gamma, GammaElem};
pub use gf2m::{Fe, Gf2m};
pub use group::G2;
pub use matrix::{GrpElem, Mat, DIM};
pub use roots::Root;
pub use suite::{run, PairMode, Report, RunConfig, Suite, Verdict};
pub use unipotent::{UnipotentCoords, VSpace};
