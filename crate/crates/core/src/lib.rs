//! Spectra of finite weighted graphs with infinite paths attached.
//!
//! The adjacency operator of such a graph splits into a finite symmetric
//! block and a finite-rank Jacobi matrix. Eigenvalues of the block are read
//! off directly; eigenvalues of the Jacobi part come from the roots of its
//! Jost polynomial inside `(-1, 1)`.

pub mod analysis;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph_file;
pub mod jacobi;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod reduce;
pub mod scalar;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{attach_tails, truncate, TailAttachment, TailedGraph, WeightedGraph};
pub use matrix::SymmetricMatrix;
pub use poly::Polynomial;
pub use scalar::{Rational, Scalar};
