//! Finite simple graphs with stable integer vertex labels.
//!
//! Labels are opaque `u32`s. Every construction in this crate that creates
//! or moves vertices returns the label mapping it used, so composite graphs
//! can be reproduced exactly.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

mod chordal;
mod dense;
mod iso;
mod search;

pub(crate) use dense::Dense;

/// A vertex label.
pub type Vertex = u32;

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Returns `None` for a loop.
    pub fn new(u: Vertex, v: Vertex) -> Option<Self> {
        match u.cmp(&v) {
            core::cmp::Ordering::Less => Some(Edge { lo: u, hi: v }),
            core::cmp::Ordering::Greater => Some(Edge { lo: v, hi: u }),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if self.lo == v {
            Some(self.hi)
        } else if self.hi == v {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("vertices {0:?} are not in the graph")]
    UnknownVertices(Vec<Vertex>),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge endpoint {endpoint} of {edge} is not a vertex")]
    DanglingEdge { edge: Edge, endpoint: Vertex },
    #[error("set {0:?} is not a matching: edges share a vertex")]
    NotAMatching(Vec<Edge>),
    #[error("{0} is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("set {0:?} is not a vertex cover")]
    NotACover(Vec<Vertex>),
}

/// A finite simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// An edgeless graph on the given labels.
    pub fn edgeless<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        SimpleGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from a vertex set and an edge list.
    ///
    /// Repeated edges are merged. Loops and edges with an endpoint outside
    /// `vertices` are rejected.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::edgeless(vertices);
        for (u, v) in edges {
            let e = Edge::new(u, v).ok_or(GraphError::Loop(u))?;
            g.check_endpoints(e)?;
            g.edges.insert(e);
        }
        Ok(g)
    }

    /// Like [`SimpleGraph::from_edges`] but a repeated edge is an error.
    pub fn from_edges_strict<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::edgeless(vertices);
        for (u, v) in edges {
            let e = Edge::new(u, v).ok_or(GraphError::Loop(u))?;
            g.check_endpoints(e)?;
            if !g.edges.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
        }
        Ok(g)
    }

    fn check_endpoints(&self, e: Edge) -> Result<(), GraphError> {
        for endpoint in [e.lo, e.hi] {
            if !self.vertices.contains(&endpoint) {
                return Err(GraphError::DanglingEdge { edge: e, endpoint });
            }
        }
        Ok(())
    }

    /// The complete graph on `1..=n`.
    pub fn complete(n: u32) -> Self {
        let mut g = Self::edgeless(1..=n);
        g.add_clique(&(1..=n).collect::<Vec<_>>());
        g
    }

    /// The path `1 – 2 – … – n`.
    pub fn path(n: u32) -> Self {
        let mut g = Self::edgeless(1..=n);
        for v in 1..n {
            g.edges.insert(Edge { lo: v, hi: v + 1 });
        }
        g
    }

    /// The cycle on `1..=n`; `n` must be at least 3.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.edges.insert(Edge { lo: 1, hi: n });
        g
    }

    /// A star with centre `0` and tips `1..=tips`.
    pub fn star(tips: u32) -> Self {
        let mut g = Self::edgeless(0..=tips);
        for v in 1..=tips {
            g.edges.insert(Edge { lo: 0, hi: v });
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        self.vertices.insert(v)
    }

    /// Inserts the edge, adding missing endpoints. Returns whether it was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let e = Edge::new(u, v).ok_or(GraphError::Loop(u))?;
        self.vertices.insert(u);
        self.vertices.insert(v);
        Ok(self.edges.insert(e))
    }

    /// Makes the given vertices pairwise adjacent, adding missing ones.
    pub fn add_clique(&mut self, clique: &[Vertex]) {
        for (i, &u) in clique.iter().enumerate() {
            self.vertices.insert(u);
            for &v in &clique[i + 1..] {
                if let Some(e) = Edge::new(u, v) {
                    self.edges.insert(e);
                }
            }
        }
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        Edge::new(u, v).is_some_and(|e| self.edges.contains(&e))
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    fn require(&self, v: Vertex) -> Result<(), GraphError> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    fn require_all(&self, set: &BTreeSet<Vertex>) -> Result<(), GraphError> {
        let missing: Vec<Vertex> = set.difference(&self.vertices).copied().collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertices(missing))
        }
    }

    /// The open neighbourhood `N(v)`.
    pub fn neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        self.require(v)?;
        Ok(self.edges.iter().filter_map(|e| e.other(v)).collect())
    }

    /// The closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        let mut n = self.neighborhood(v)?;
        n.insert(v);
        Ok(n)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.require(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// The subgraph induced on `a`, with labels preserved.
    pub fn induced_subgraph(&self, a: &BTreeSet<Vertex>) -> Result<SimpleGraph, GraphError> {
        self.require_all(a)?;
        Ok(SimpleGraph {
            vertices: a.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| a.contains(&e.lo) && a.contains(&e.hi))
                .copied()
                .collect(),
        })
    }

    /// `G \ W`: the subgraph induced on the complement of `w`.
    pub fn remove_vertices(&self, w: &BTreeSet<Vertex>) -> Result<SimpleGraph, GraphError> {
        self.require_all(w)?;
        let keep: BTreeSet<Vertex> = self.vertices.difference(w).copied().collect();
        self.induced_subgraph(&keep)
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<SimpleGraph, GraphError> {
        self.remove_vertices(&BTreeSet::from([v]))
    }

    /// All vertices of degree exactly one.
    pub fn leaves(&self) -> BTreeSet<Vertex> {
        let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        for e in &self.edges {
            *degree.entry(e.lo).or_default() += 1;
            *degree.entry(e.hi).or_default() += 1;
        }
        degree
            .into_iter()
            .filter(|&(_, d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Renames vertices through `map`. Vertices missing from `map` keep
    /// their label. The map must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> SimpleGraph {
        let f = |v: Vertex| map.get(&v).copied().unwrap_or(v);
        let vertices: BTreeSet<Vertex> = self.vertices.iter().map(|&v| f(v)).collect();
        assert_eq!(
            vertices.len(),
            self.vertices.len(),
            "relabeling must be injective"
        );
        SimpleGraph {
            vertices,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(f(e.lo), f(e.hi)).expect("injective relabeling"))
                .collect(),
        }
    }

    /// Vertex-disjoint union. `self` keeps its labels; `other` is shifted
    /// by `max(self) + 1` (by zero when `self` is empty). Returns the union
    /// and the label map applied to `other`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> (SimpleGraph, BTreeMap<Vertex, Vertex>) {
        let shift = self.max_vertex().map_or(0, |m| m + 1);
        let map: BTreeMap<Vertex, Vertex> =
            other.vertices.iter().map(|&v| (v, v + shift)).collect();
        let moved = other.relabel(&map);
        let mut union = self.clone();
        union.vertices.extend(moved.vertices);
        union.edges.extend(moved.edges);
        (union, map)
    }

    /// Whether some ordering of the vertices is a perfect elimination
    /// ordering. The ordering found by maximum cardinality search is
    /// verified explicitly before `true` is returned.
    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// A verified perfect elimination ordering, or `None` if the graph is
    /// not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<Vertex>> {
        let dense = Dense::new(self);
        chordal::perfect_elimination_ordering(&dense)
            .map(|order| order.into_iter().map(|i| dense.label(i)).collect())
    }

    /// The induced matching number: the largest number of edges, pairwise
    /// disjoint, whose endpoints span no further edges.
    pub fn induced_matching_number(&self) -> usize {
        search::induced_matching_number(&Dense::new(self))
    }

    /// The size of a smallest vertex cover.
    pub fn min_vertex_cover_size(&self) -> usize {
        search::min_vertex_cover_size(&Dense::new(self))
    }

    /// The independence number.
    pub fn max_independent_set_size(&self) -> usize {
        search::max_independent_set_size(&Dense::new(self))
    }

    /// Whether the two graphs are isomorphic (labels ignored).
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        iso::isomorphic(&Dense::new(self), &Dense::new(other))
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V = {:?}, E = [", self.vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// A set of pairwise disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<Edge>,
}

impl Matching {
    pub fn new(
        host: &SimpleGraph,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut seen = BTreeSet::new();
        for &e in &edges {
            if !host.edges.contains(&e) {
                return Err(GraphError::UnknownEdge(e));
            }
            if !seen.insert(e.lo) || !seen.insert(e.hi) {
                return Err(GraphError::NotAMatching(edges.into_iter().collect()));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether the subgraph of `host` induced on the matched vertices has
    /// no edges besides the matching itself.
    pub fn is_induced(&self, host: &SimpleGraph) -> bool {
        let covered: BTreeSet<Vertex> = self.edges.iter().flat_map(|e| [e.lo, e.hi]).collect();
        host.edges
            .iter()
            .filter(|e| covered.contains(&e.lo) && covered.contains(&e.hi))
            .all(|e| self.edges.contains(e))
    }
}

/// A vertex cover of a host graph, flagged when it is minimal under inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    vertices: BTreeSet<Vertex>,
    minimal: bool,
}

impl VertexCover {
    pub fn new(host: &SimpleGraph, vertices: BTreeSet<Vertex>) -> Result<Self, GraphError> {
        host.require_all(&vertices)?;
        let covers = |set: &BTreeSet<Vertex>| {
            host.edges
                .iter()
                .all(|e| set.contains(&e.lo) || set.contains(&e.hi))
        };
        if !covers(&vertices) {
            return Err(GraphError::NotACover(vertices.into_iter().collect()));
        }
        let minimal = vertices.iter().all(|v| {
            let mut smaller = vertices.clone();
            smaller.remove(v);
            !covers(&smaller)
        });
        Ok(VertexCover { vertices, minimal })
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
}
