//! Exact-arithmetic toolkit for all-terminal network reliability polynomials:
//! deletion/contraction engines with closed forms for thick trees and cycles,
//! Schur/Hurwitz quasi-stability certificates through even/odd interlacing,
//! an interpolatory-hypercube calculus with a seeded falsifier, amicability
//! scans over vertex pairs, and f-vector audits for set systems and matroids.

pub mod error;
pub mod graph;
pub mod matroid;
pub mod poly;
pub mod reliability;
pub mod amicable;
pub mod cube;
pub mod realroot;

pub use error::{Error, Result};
pub use poly::{EvenOddPair, ExactPoly, Rat};
