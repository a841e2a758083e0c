//! Ground truth for dimension, depth, regularity and graded Betti numbers
//! of squarefree monomial quotients, computed from first principles.
//!
//! Two independent Betti engines are provided. [`betti_table_hochster`]
//! sums reduced homology of restricted Stanley–Reisner complexes over all
//! variable subsets. [`betti_table_taylor`] takes homology of the Taylor
//! complex tensored with the field, one multidegree at a time. Both reduce
//! to exact ranks of `±1` boundary matrices.

use core::fmt;

use crate::formulas::InvariantReport;
use crate::graph::{GraphError, SimpleGraph, Vertex};

mod betti;
mod complex;
mod homology;
mod ideal;
mod linalg;

pub use betti::{
    betti_table_hochster, betti_table_taylor, BettiTable, HochsterSweep, TaylorSweep,
    HOCHSTER_MAX_VARIABLES, TAYLOR_MAX_GENERATORS, TAYLOR_MAX_VARIABLES,
};
pub use complex::{stanley_reisner_complex, SimplicialComplex, COMPLEX_MAX_VERTICES};
pub use homology::reduced_homology_ranks;
pub use ideal::{decompose_at_vertex, Monomial, SquarefreeMonomialIdeal, VertexDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("the ideals live over different variable sets")]
    VariableMismatch,
    #[error("the unit monomial cannot generate a proper ideal")]
    UnitGenerator,
    #[error("x{0} is not a variable of the ring")]
    UnknownVariable(Vertex),
    #[error("capacity exceeded: {count} {what}, the limit is {limit}")]
    Capacity {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("dimension routes disagree: largest facet has {facets} vertices but |V| - min cover = {covers}")]
    DimensionMismatch { facets: usize, covers: usize },
}

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Gf2,
    /// `GF(p)` for an odd prime `p`; use [`Field::prime`] to build one.
    Prime(u32),
    Rationals,
}

impl Field {
    /// `GF(p)`, normalizing `p = 2` to [`Field::Gf2`].
    pub fn prime(p: u32) -> Result<Field, OracleError> {
        let f = if p == 2 { Field::Gf2 } else { Field::Prime(p) };
        f.validate().map(|()| f)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Gf2 => 2,
            Field::Prime(p) => p,
            Field::Rationals => 0,
        }
    }

    pub(crate) fn validate(self) -> Result<(), OracleError> {
        match self {
            Field::Prime(p) if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) => {
                Err(OracleError::NotPrime(p))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => f.write_str("GF(2)"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => f.write_str("Q"),
        }
    }
}

/// Dimension, depth and regularity of `S/I`, with the Betti table they came
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleInvariants {
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub betti: BettiTable,
}

impl OracleInvariants {
    pub fn report(&self) -> InvariantReport {
        InvariantReport::oracle(self.dim, self.depth, self.reg)
    }
}

/// Krull dimension of `S/I`, computed as the largest Stanley–Reisner facet
/// and again as `n` minus the height, and checked for agreement.
pub fn oracle_dimension(ideal: &SquarefreeMonomialIdeal) -> Result<usize, OracleError> {
    let facets = stanley_reisner_complex(ideal)?
        .max_facet_size()
        .unwrap_or(0);
    let covers = ideal.variable_count() - ideal.min_transversal_size();
    if facets == covers {
        Ok(facets)
    } else {
        Err(OracleError::DimensionMismatch { facets, covers })
    }
}

/// Invariants from a Betti table already computed for `ideal`.
pub fn invariants_from_table(
    ideal: &SquarefreeMonomialIdeal,
    betti: BettiTable,
) -> Result<OracleInvariants, OracleError> {
    Ok(OracleInvariants {
        dim: oracle_dimension(ideal)?,
        depth: betti.depth(),
        reg: betti.regularity(),
        betti,
    })
}

pub fn oracle_invariants(
    ideal: &SquarefreeMonomialIdeal,
    field: Field,
) -> Result<OracleInvariants, OracleError> {
    let betti = betti_table_hochster(ideal, field)?;
    invariants_from_table(ideal, betti)
}

/// [`oracle_invariants`] of the edge ideal.
pub fn graph_invariants(g: &SimpleGraph, field: Field) -> Result<OracleInvariants, OracleError> {
    oracle_invariants(&SquarefreeMonomialIdeal::edge_ideal(g), field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::FanGraphSpec;
    use alloc::vec;

    fn triple(g: &SimpleGraph) -> (usize, usize, usize) {
        let o = graph_invariants(g, Field::Gf2).unwrap();
        (o.dim, o.depth, o.reg)
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=6 {
            assert_eq!(triple(&SimpleGraph::complete(n)), (1, 1, 1));
        }
    }

    #[test]
    fn paths() {
        assert_eq!(
            triple(&SimpleGraph::path(5)).1..=triple(&SimpleGraph::path(5)).2,
            2..=2
        );
        assert_eq!(triple(&SimpleGraph::path(4)), (2, 2, 1));
    }

    #[test]
    fn two_triangles_on_an_edge_fan() {
        let spec = FanGraphSpec::new(2, vec![(vec![1], vec![3]), (vec![2], vec![3])]).unwrap();
        let g = spec.realize().graph;
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.min_vertex_cover_size(), 4);
        assert_eq!(triple(&g), (2, 2, 2));
    }

    #[test]
    fn report_is_tagged_oracle() {
        let r = graph_invariants(&SimpleGraph::path(3), Field::Rationals)
            .unwrap()
            .report();
        assert_eq!((r.dim, r.depth, r.reg), (Some(2), Some(1), Some(1)));
        assert_eq!(r.method, crate::formulas::Method::Oracle);
    }

    #[test]
    fn field_constructor() {
        assert_eq!(Field::prime(2), Ok(Field::Gf2));
        assert_eq!(Field::prime(7), Ok(Field::Prime(7)));
        assert_eq!(Field::prime(9), Err(OracleError::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(OracleError::NotPrime(1)));
        assert_eq!(alloc::format!("{}", Field::Rationals), "Q");
        assert_eq!(Field::default(), Field::Gf2);
    }

    #[test]
    fn edgeless_graph() {
        assert_eq!(triple(&SimpleGraph::edgeless([1, 2, 3])), (3, 3, 0));
    }
}
