//! Exact cyclotomic machinery for multitilings of `ℤ/Pℤ` and perfect
//! 2-colourings of circulant graphs.
//!
//! The pieces, bottom-up:
//!
//! * [`poly`]: dense `i64` polynomials with checked arithmetic.
//! * [`cyclotomic`]: `Φ_n` and the cyclotomic divisor spectrum of a mask.
//! * [`tiling`]: tiles, the multitiling condition, the existence criterion
//!   and explicit constructions.
//! * [`coloring`]: circulant graphs, the structured tile, and the
//!   colouring/tiling bijection.
//! * [`admissibility`]: parameter bounds and the constructive pipeline.
//! * [`oracle`]: brute-force search used to cross-check everything above.
//! * [`document`]: the JSON witness format.

pub mod admissibility;
pub mod arith;
pub mod coloring;
pub mod cyclotomic;
pub mod document;
pub mod oracle;
pub mod poly;
pub mod tiling;

pub use admissibility::{
    check_admissible, check_graph_condition, construct_distances, construct_perfect_coloring,
    AdmissibilityError, AdmissibilityVerdict, ConstructionWitness, GraphVerdict, ParamTriple, Violation,
};
pub use coloring::{is_perfect_coloring, CirculantSpec, Color, Coloring};
pub use cyclotomic::{cyclotomic, divisor_spectrum, DivisorSpectrum};
pub use poly::IntPolynomial;
pub use tiling::{MultitilingWitness, Tile};
