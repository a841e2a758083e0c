use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::OracleError;
use crate::graph::{SimpleGraph, Vertex};

/// A squarefree monomial, stored as its support in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Vertex>);

impl Monomial {
    pub fn new<I: IntoIterator<Item = Vertex>>(support: I) -> Self {
        let set: BTreeSet<Vertex> = support.into_iter().collect();
        Monomial(set.into_iter().collect())
    }

    pub fn support(&self) -> &[Vertex] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Divisibility is support inclusion.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    /// Least common multiple: the union of supports.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.0.iter().chain(&other.0).copied())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// A squarefree monomial ideal in the polynomial ring over a fixed
/// variable set, kept in its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomialIdeal {
    variables: BTreeSet<Vertex>,
    generators: BTreeSet<Monomial>,
}

fn minimalize(gens: BTreeSet<Monomial>) -> BTreeSet<Monomial> {
    let mut by_degree: Vec<Monomial> = gens.into_iter().collect();
    by_degree.sort_by_key(Monomial::degree);
    let mut kept: Vec<Monomial> = Vec::new();
    for g in by_degree {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.into_iter().collect()
}

impl SquarefreeMonomialIdeal {
    /// Builds the ideal generated by `generators`, dropping any generator
    /// divisible by another.
    pub fn new<V, G>(variables: V, generators: G) -> Result<Self, OracleError>
    where
        V: IntoIterator<Item = Vertex>,
        G: IntoIterator<Item = Monomial>,
    {
        let variables: BTreeSet<Vertex> = variables.into_iter().collect();
        let mut gens = BTreeSet::new();
        for g in generators {
            if g.degree() == 0 {
                return Err(OracleError::UnitGenerator);
            }
            if let Some(&x) = g.support().iter().find(|x| !variables.contains(x)) {
                return Err(OracleError::UnknownVariable(x));
            }
            gens.insert(g);
        }
        Ok(SquarefreeMonomialIdeal {
            variables,
            generators: minimalize(gens),
        })
    }

    pub fn zero<V: IntoIterator<Item = Vertex>>(variables: V) -> Self {
        SquarefreeMonomialIdeal {
            variables: variables.into_iter().collect(),
            generators: BTreeSet::new(),
        }
    }

    /// The edge ideal `I_G`: one generator `x_u x_v` per edge, over the
    /// variables `x_v, v ∈ V(G)`.
    pub fn edge_ideal(g: &SimpleGraph) -> Self {
        SquarefreeMonomialIdeal {
            variables: g.vertex_set().clone(),
            generators: g
                .edges()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    Monomial(alloc::vec![u, v])
                })
                .collect(),
        }
    }

    /// `(x_a : a ∈ subset)`.
    pub fn variable_ideal<V, A>(variables: V, subset: A) -> Result<Self, OracleError>
    where
        V: IntoIterator<Item = Vertex>,
        A: IntoIterator<Item = Vertex>,
    {
        Self::new(
            variables,
            subset.into_iter().map(|a| Monomial(alloc::vec![a])),
        )
    }

    pub fn variables(&self) -> &BTreeSet<Vertex> {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn generators(&self) -> impl ExactSizeIterator<Item = &Monomial> {
        self.generators.iter()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether the squarefree monomial `m` lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The same generators over a larger variable set.
    pub fn extend_variables<V: IntoIterator<Item = Vertex>>(&self, more: V) -> Self {
        let mut out = self.clone();
        out.variables.extend(more);
        out
    }

    fn same_ring(&self, other: &Self) -> Result<(), OracleError> {
        if self.variables == other.variables {
            Ok(())
        } else {
            Err(OracleError::VariableMismatch)
        }
    }

    /// `I + J`: the union of generators, re-minimalized.
    pub fn sum(&self, other: &Self) -> Result<Self, OracleError> {
        self.same_ring(other)?;
        Ok(SquarefreeMonomialIdeal {
            variables: self.variables.clone(),
            generators: minimalize(self.generators.union(&other.generators).cloned().collect()),
        })
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self, OracleError> {
        self.same_ring(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(SquarefreeMonomialIdeal {
            variables: self.variables.clone(),
            generators: minimalize(gens),
        })
    }

    /// The smallest number of variables meeting every generator, i.e. the
    /// height of the ideal. For an edge ideal this is the minimum vertex
    /// cover size.
    pub fn min_transversal_size(&self) -> usize {
        let vars: Vec<Vertex> = self.variables.iter().copied().collect();
        let gens: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| {
                g.support()
                    .iter()
                    .map(|x| vars.binary_search(x).expect("generator variable"))
                    .collect()
            })
            .collect();
        let mut chosen = alloc::vec![false; vars.len()];
        let mut best = vars.len();
        transversal(&gens, &mut chosen, 0, &mut best);
        best
    }
}

/// Branches on the variables of the first generator not yet hit.
fn transversal(gens: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(g) = gens.iter().find(|g| !g.iter().any(|&x| chosen[x])) else {
        *best = size;
        return;
    };
    for &x in g {
        chosen[x] = true;
        transversal(gens, chosen, size + 1, best);
        chosen[x] = false;
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// The ideals `J = (x_{N(v)}) + I_{G \ N[v]}` and `K = (x_v) + I_{G \ v}`,
/// both over the variables of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDecomposition {
    pub j: SquarefreeMonomialIdeal,
    pub k: SquarefreeMonomialIdeal,
    /// `(x_{N[v]}) + I_{G \ N[v]}`, what `J + K` should equal.
    pub expected_sum: SquarefreeMonomialIdeal,
}

pub fn decompose_at_vertex(g: &SimpleGraph, v: Vertex) -> Result<VertexDecomposition, OracleError> {
    let open = g.neighborhood(v)?;
    let closed = g.closed_neighborhood(v)?;
    let vars = g.vertex_set().iter().copied();
    let outside = SquarefreeMonomialIdeal::edge_ideal(&g.remove_vertices(&closed)?)
        .extend_variables(vars.clone());
    let without_v =
        SquarefreeMonomialIdeal::edge_ideal(&g.remove_vertex(v)?).extend_variables(vars.clone());
    let j = SquarefreeMonomialIdeal::variable_ideal(vars.clone(), open)?.sum(&outside)?;
    let k = SquarefreeMonomialIdeal::variable_ideal(vars.clone(), [v])?.sum(&without_v)?;
    let expected_sum = SquarefreeMonomialIdeal::variable_ideal(vars, closed)?.sum(&outside)?;
    Ok(VertexDecomposition { j, k, expected_sum })
}
