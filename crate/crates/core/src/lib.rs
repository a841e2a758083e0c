//! Fan graphs of complete graphs, the `∘` and `*` gluings, closed-form
//! formulas for the Krull dimension, depth and Castelnuovo–Mumford
//! regularity of their edge-ideal quotients, and the brute-force algebraic
//! oracles used to certify those formulas.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and the verification campaign live in the `fanideal` crate.
//!
//! Module map:
//!
//! * [`graph`]: simple graphs and the combinatorial computations everything
//!   else consumes (neighbourhoods, chordality, induced matchings, covers).
//! * [`fan`]: fan-graph specifications, their realization as graphs and the
//!   two gluing operations.
//! * [`formulas`]: the closed-form invariant formulas with their exact
//!   preconditions.
//! * [`oracle`]: squarefree monomial ideals, Stanley–Reisner complexes,
//!   simplicial homology and graded Betti numbers from first principles.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod fan;
pub mod formulas;
pub mod graph;
pub mod oracle;

pub use fan::{
    BranchSlot, Composite, CompositeError, CompositeSpec, FanBlock, FanGraphSpec, GlueSide, Gluing,
    LeafSite, Realization, Side, SpecError, TheoremQuantities,
};
pub use formulas::{FormulaError, Intermediates, InvariantReport, Method, SideQuantities};
pub use graph::{Edge, GraphError, Matching, SimpleGraph, Vertex, VertexCover};
pub use oracle::{
    BettiTable, Field, Monomial, OracleError, OracleInvariants, SimplicialComplex,
    SquarefreeMonomialIdeal,
};
