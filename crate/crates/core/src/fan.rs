//! Fan graphs of complete graphs and the `∘` / `*` gluings.
//!
//! A [`FanGraphSpec`] attaches, to the base clique on `1..=n`, one fan per
//! block `W_i = (w_{i,1}, …, w_{i,r_i})`: for every position `j` a new clique
//! of size `a_{i,j} > j` meeting the base clique exactly in
//! `{w_{i,1}, …, w_{i,j}}`. The excess `h_{i,j} = a_{i,j} - j` is the number
//! of fresh vertices that clique brings.
//!
//! Block and position indices are 1-based everywhere, in errors and in
//! [`BranchSlot`], to match how the blocks are usually written down.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("base clique K_{n} is too small: n must be at least 2")]
    BaseTooSmall { n: u32 },
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("block {block} has {vertices} vertices but {branches} branch sizes")]
    BranchCountMismatch {
        block: usize,
        vertices: usize,
        branches: usize,
    },
    #[error(
        "block {block}, position {position}: label {label} is outside the base clique 1..={n}"
    )]
    LabelOutOfRange {
        block: usize,
        position: usize,
        label: Vertex,
        n: u32,
    },
    #[error("block {block}, position {position}: label {label} already used by an earlier block or position")]
    RepeatedLabel {
        block: usize,
        position: usize,
        label: Vertex,
    },
    #[error("block {block}, position {position}: branch size {size} must exceed the position (a must exceed position)")]
    BranchTooSmall {
        block: usize,
        position: usize,
        size: u32,
    },
}

/// One block `W_i` of the partition together with its branch sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FanBlock {
    vertices: Vec<Vertex>,
    branch_sizes: Vec<u32>,
}

impl FanBlock {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn branch_sizes(&self) -> &[u32] {
        &self.branch_sizes
    }

    /// `r_i`, the number of branches.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `h_{i,j}` for the 1-based `position`.
    pub fn excess(&self, position: usize) -> u32 {
        self.branch_sizes[position - 1] - position as u32
    }

    pub fn excesses(&self) -> Vec<u32> {
        (1..=self.len()).map(|j| self.excess(j)).collect()
    }

    /// `h_{i,r_i}`, the excess of the last branch.
    pub fn terminal_excess(&self) -> u32 {
        self.excess(self.len())
    }
}

/// A validated fan-graph specification `F_k^W(K_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FanGraphSpec {
    n: u32,
    blocks: Vec<FanBlock>,
}

impl FanGraphSpec {
    /// Validates and builds a specification. `blocks` is a list of
    /// `(W_i, (a_{i,1}, …, a_{i,r_i}))` pairs; an empty list is the
    /// degenerate fan `K_n`.
    pub fn new(n: u32, blocks: Vec<(Vec<Vertex>, Vec<u32>)>) -> Result<Self, SpecError> {
        if n < 2 {
            return Err(SpecError::BaseTooSmall { n });
        }
        let mut used = BTreeSet::new();
        let mut checked = Vec::with_capacity(blocks.len());
        for (b, (vertices, branch_sizes)) in blocks.into_iter().enumerate() {
            let block = b + 1;
            if vertices.is_empty() {
                return Err(SpecError::EmptyBlock { block });
            }
            if vertices.len() != branch_sizes.len() {
                return Err(SpecError::BranchCountMismatch {
                    block,
                    vertices: vertices.len(),
                    branches: branch_sizes.len(),
                });
            }
            for (j, (&label, &size)) in vertices.iter().zip(&branch_sizes).enumerate() {
                let position = j + 1;
                if label < 1 || label > n {
                    return Err(SpecError::LabelOutOfRange {
                        block,
                        position,
                        label,
                        n,
                    });
                }
                if !used.insert(label) {
                    return Err(SpecError::RepeatedLabel {
                        block,
                        position,
                        label,
                    });
                }
                if size as usize <= position {
                    return Err(SpecError::BranchTooSmall {
                        block,
                        position,
                        size,
                    });
                }
            }
            checked.push(FanBlock {
                vertices,
                branch_sizes,
            });
        }
        Ok(FanGraphSpec { n, blocks: checked })
    }

    /// The degenerate fan: the complete graph `K_n`.
    pub fn complete(n: u32) -> Result<Self, SpecError> {
        Self::new(n, Vec::new())
    }

    /// Builds a specification from excess lists, assigning base labels to
    /// the blocks consecutively from 1.
    pub fn from_excesses(n: u32, blocks: &[Vec<u32>]) -> Result<Self, SpecError> {
        let mut next = 1;
        let blocks = blocks
            .iter()
            .map(|hs| {
                let vertices: Vec<Vertex> = (next..next + hs.len() as u32).collect();
                next += hs.len() as u32;
                let sizes = hs
                    .iter()
                    .enumerate()
                    .map(|(j, h)| h + j as u32 + 1)
                    .collect();
                (vertices, sizes)
            })
            .collect();
        Self::new(n, blocks)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[FanBlock] {
        &self.blocks
    }

    /// `k`, the number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `W`, the union of the blocks.
    pub fn w(&self) -> BTreeSet<Vertex> {
        self.blocks
            .iter()
            .flat_map(|b| b.vertices.iter().copied())
            .collect()
    }

    /// `|W|`.
    pub fn w_size(&self) -> usize {
        self.blocks.iter().map(FanBlock::len).sum()
    }

    /// `max_i |W_i|`, zero for the degenerate fan.
    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(FanBlock::len).max().unwrap_or(0)
    }

    /// `p`, the number of positions `(i, j)` with `h_{i,j} ≥ 2`.
    pub fn p(&self) -> usize {
        self.blocks
            .iter()
            .flat_map(FanBlock::excesses)
            .filter(|&h| h >= 2)
            .count()
    }

    /// `|V| = n + Σ h_{i,j}` of the realized graph.
    pub fn realized_vertex_count(&self) -> usize {
        self.n as usize
            + self
                .blocks
                .iter()
                .flat_map(FanBlock::excesses)
                .map(|h| h as usize)
                .sum::<usize>()
    }

    /// Block index (1-based) containing the base vertex `v`, if any.
    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.vertices.contains(&v))
            .map(|i| i + 1)
    }

    /// Realizes the fan graph.
    ///
    /// The base clique uses labels `1..=n`. Fresh vertices are numbered
    /// consecutively from `n + 1` in (block, position, local) order.
    pub fn realize(&self) -> Realization {
        let mut graph = SimpleGraph::complete(self.n);
        let mut slots = BTreeMap::new();
        let mut next = self.n + 1;
        for (b, block) in self.blocks.iter().enumerate() {
            for position in 1..=block.len() {
                let mut clique: Vec<Vertex> = block.vertices[..position].to_vec();
                for local in 1..=block.excess(position) as usize {
                    slots.insert(
                        BranchSlot {
                            block: b + 1,
                            position,
                            local,
                        },
                        next,
                    );
                    clique.push(next);
                    next += 1;
                }
                graph.add_clique(&clique);
            }
        }
        Realization { graph, slots }
    }

    /// Leaves of the realized graph whose neighbour lies in `W`.
    ///
    /// These are exactly the fresh vertices of branches `K_2` at position 1,
    /// one per block with `a_{i,1} = 2`.
    pub fn leaf_catalog(&self) -> Vec<LeafSite> {
        let mut label = self.n + 1;
        let mut sites = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            if block.branch_sizes[0] == 2 {
                sites.push(LeafSite {
                    leaf: label,
                    neighbor: block.vertices[0],
                    block: b + 1,
                });
            }
            label += block.excesses().iter().sum::<u32>();
        }
        sites
    }

    /// The quantities `T`, `T'` and `p` used by the gluing formulas, with
    /// the blocks re-indexed so that the one containing the leaf's
    /// neighbour comes first.
    pub fn theorem_quantities(&self, leaf: Vertex) -> Result<TheoremQuantities, CompositeError> {
        let site = self
            .leaf_catalog()
            .into_iter()
            .find(|s| s.leaf == leaf)
            .ok_or(CompositeError::NotAFanLeaf { vertex: leaf })?;
        let order: Vec<usize> = core::iter::once(site.block - 1)
            .chain((0..self.k()).filter(|&i| i != site.block - 1))
            .collect();
        let block_sizes: Vec<usize> = order.iter().map(|&i| self.blocks[i].len()).collect();
        let excesses = order.iter().map(|&i| self.blocks[i].excesses()).collect();
        let t_max = block_sizes.iter().copied().max().unwrap_or(0);
        let t_prime = core::iter::once(block_sizes[0] - 1)
            .chain(block_sizes[1..].iter().copied())
            .max()
            .unwrap_or(0);
        Ok(TheoremQuantities {
            site,
            n: self.n,
            w_size: self.w_size(),
            block_sizes,
            excesses,
            t_max,
            t_prime,
            p: self.p(),
        })
    }
}

impl fmt::Display for FanGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(K_{})[", self.n)?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{:?}:{:?}", b.vertices, b.branch_sizes)?;
        }
        f.write_str("]")
    }
}

/// Identifies one fresh vertex of a realized fan: the `local`-th new vertex
/// of the branch clique at (`block`, `position`). All indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchSlot {
    pub block: usize,
    pub position: usize,
    pub local: usize,
}

/// A realized fan graph with the labels given to its fresh vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: SimpleGraph,
    pub slots: BTreeMap<BranchSlot, Vertex>,
}

/// A leaf `f` of a fan graph, its neighbour `v ∈ W` and the block of `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafSite {
    pub leaf: Vertex,
    pub neighbor: Vertex,
    pub block: usize,
}

/// `T = max_i |W_i|`, `T' = max(|W_1| - 1, |W_2|, …, |W_k|)` and `p`, with
/// block 1 being the block of the leaf's neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremQuantities {
    pub site: LeafSite,
    pub n: u32,
    pub w_size: usize,
    /// `|W_i|` after re-indexing.
    pub block_sizes: Vec<usize>,
    /// `h_{i,j}` per block after re-indexing.
    pub excesses: Vec<Vec<u32>>,
    pub t_max: usize,
    pub t_prime: usize,
    pub p: usize,
}

impl TheoremQuantities {
    /// Whether `T' = T - 1`, i.e. the leaf's block is the unique largest.
    pub fn unique_max_at_leaf(&self) -> bool {
        self.t_prime + 1 == self.t_max
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompositeError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{side} side: vertex {vertex} is not a leaf (degree {degree})")]
    NotALeaf {
        side: Side,
        vertex: Vertex,
        degree: usize,
    },
    #[error("{side} side: vertex {vertex} is not in the graph")]
    UnknownVertex { side: Side, vertex: Vertex },
    #[error("{side} side: neighbour {neighbor} of the leaf has degree {degree}, the ∘ operation needs degree at least 2")]
    NeighborDegreeTooSmall {
        side: Side,
        neighbor: Vertex,
        degree: usize,
    },
    #[error("vertex {vertex} is not a leaf of the fan adjacent to a vertex of W")]
    NotAFanLeaf { vertex: Vertex },
}

/// Which gluing a composite uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gluing {
    /// Delete both leaves, then identify their neighbours.
    Circ,
    /// Identify the two leaves.
    Star,
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gluing::Circ => "circ",
            Gluing::Star => "star",
        })
    }
}

/// A fan together with a designated leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlueSide {
    pub spec: FanGraphSpec,
    pub leaf: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositeSpec {
    pub op: Gluing,
    pub left: GlueSide,
    pub right: GlueSide,
}

impl CompositeSpec {
    pub fn realize(&self) -> Result<Composite, CompositeError> {
        let g1 = self.left.spec.realize().graph;
        let g2 = self.right.spec.realize().graph;
        match self.op {
            Gluing::Circ => circ_compose(&g1, self.left.leaf, &g2, self.right.leaf),
            Gluing::Star => star_compose(&g1, self.left.leaf, &g2, self.right.leaf),
        }
    }

    /// The same composite with the two sides exchanged.
    pub fn swapped(&self) -> CompositeSpec {
        CompositeSpec {
            op: self.op,
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

/// A glued graph and the label maps from each side into it. Deleted
/// vertices are absent from the maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub graph: SimpleGraph,
    pub left_map: BTreeMap<Vertex, Vertex>,
    pub right_map: BTreeMap<Vertex, Vertex>,
    /// The identified vertex: `v` for `∘`, `f` for `*`.
    pub joint: Vertex,
}

fn leaf_neighbor(g: &SimpleGraph, side: Side, leaf: Vertex) -> Result<Vertex, CompositeError> {
    let nbrs = g
        .neighborhood(leaf)
        .map_err(|_| CompositeError::UnknownVertex { side, vertex: leaf })?;
    match nbrs.iter().next() {
        Some(&v) if nbrs.len() == 1 => Ok(v),
        _ => Err(CompositeError::NotALeaf {
            side,
            vertex: leaf,
            degree: nbrs.len(),
        }),
    }
}

/// Glues `g2` into a copy of `g1`. `g1` keeps its labels; `g2` is shifted
/// by `max(g1)` except for `identify.0`, which is sent to `identify.1`.
fn glue(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    identify: (Vertex, Vertex),
) -> (
    SimpleGraph,
    BTreeMap<Vertex, Vertex>,
    BTreeMap<Vertex, Vertex>,
) {
    let shift = g1.max_vertex().unwrap_or(0);
    let right_map: BTreeMap<Vertex, Vertex> = g2
        .vertices()
        .map(|x| {
            (
                x,
                if x == identify.0 {
                    identify.1
                } else {
                    x + shift
                },
            )
        })
        .collect();
    let left_map = g1.vertices().map(|x| (x, x)).collect();
    let mut graph = g1.clone();
    for x in g2.vertices() {
        graph.add_vertex(right_map[&x]);
    }
    for e in g2.edges() {
        let (u, v) = e.endpoints();
        graph
            .add_edge(right_map[&u], right_map[&v])
            .expect("identification never creates a loop");
    }
    (graph, left_map, right_map)
}

/// `(G_1, f_1) ∘ (G_2, f_2)`: delete both leaves, then identify their
/// neighbours. The merged vertex keeps the label of `v_1`.
pub fn circ_compose(
    g1: &SimpleGraph,
    f1: Vertex,
    g2: &SimpleGraph,
    f2: Vertex,
) -> Result<Composite, CompositeError> {
    let mut stripped = Vec::with_capacity(2);
    let mut joints = Vec::with_capacity(2);
    for (side, g, f) in [(Side::Left, g1, f1), (Side::Right, g2, f2)] {
        let v = leaf_neighbor(g, side, f)?;
        let degree = g.degree(v).expect("neighbour is a vertex");
        if degree < 2 {
            return Err(CompositeError::NeighborDegreeTooSmall {
                side,
                neighbor: v,
                degree,
            });
        }
        stripped.push(g.remove_vertex(f).expect("leaf is a vertex"));
        joints.push(v);
    }
    let (graph, left_map, right_map) = glue(&stripped[0], &stripped[1], (joints[1], joints[0]));
    Ok(Composite {
        graph,
        left_map,
        right_map,
        joint: joints[0],
    })
}

/// `(G_1, f_1) * (G_2, f_2)`: identify the two leaves. The merged vertex
/// keeps the label of `f_1`.
pub fn star_compose(
    g1: &SimpleGraph,
    f1: Vertex,
    g2: &SimpleGraph,
    f2: Vertex,
) -> Result<Composite, CompositeError> {
    leaf_neighbor(g1, Side::Left, f1)?;
    leaf_neighbor(g2, Side::Right, f2)?;
    let (graph, left_map, right_map) = glue(g1, g2, (f2, f1));
    Ok(Composite {
        graph,
        left_map,
        right_map,
        joint: f1,
    })
}

/// Every fan specification with at most `max_vertices` realized vertices,
/// one per class up to relabeling the base clique and reordering blocks.
///
/// Relabeling `K_n` is a graph automorphism of the base, so each class has
/// a single realized graph up to isomorphism. Representatives use
/// consecutive base labels from 1 and list blocks in the order their
/// excess sequences were enumerated. The output is sorted by `n`, then
/// deterministic within each `n`. Degenerate fans `K_n` are included.
pub fn canonical_fans(max_vertices: usize) -> Vec<FanGraphSpec> {
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        let budget = max_vertices - n;
        let mut shapes = Vec::new();
        excess_sequences(n, budget, &mut Vec::new(), &mut shapes);
        let mut chosen = Vec::new();
        block_multisets(
            n as u32,
            &shapes,
            shapes.len(),
            n,
            budget,
            &mut chosen,
            &mut out,
        );
    }
    out
}

/// Every fan specification with at most `max_vertices` realized vertices,
/// with base labels significant, one per class up to reordering blocks.
///
/// Within a class the blocks appear in the same shape order as in
/// [`canonical_fans`]. Blocks of equal shape carry increasing label
/// sequences, so no block permutation is produced twice.
pub fn all_fans(max_vertices: usize) -> Vec<FanGraphSpec> {
    let mut out = Vec::new();
    for shape_spec in canonical_fans(max_vertices) {
        let n = shape_spec.n();
        let shapes: Vec<Vec<u32>> = shape_spec.blocks().iter().map(FanBlock::excesses).collect();
        let mut used = alloc::vec![false; n as usize + 1];
        let mut labels: Vec<Vec<Vertex>> = Vec::new();
        assign_labels(n, &shapes, &mut used, &mut labels, &mut out);
    }
    out
}

fn assign_labels(
    n: u32,
    shapes: &[Vec<u32>],
    used: &mut [bool],
    labels: &mut Vec<Vec<Vertex>>,
    out: &mut Vec<FanGraphSpec>,
) {
    let b = labels.len();
    if b == shapes.len() {
        let blocks = shapes
            .iter()
            .zip(labels.iter())
            .map(|(hs, ws)| {
                let sizes = hs
                    .iter()
                    .enumerate()
                    .map(|(j, h)| h + j as u32 + 1)
                    .collect();
                (ws.clone(), sizes)
            })
            .collect();
        out.push(FanGraphSpec::new(n, blocks).expect("enumerated labels are valid"));
        return;
    }
    let floor = (b > 0 && shapes[b] == shapes[b - 1]).then(|| labels[b - 1].clone());
    let mut seq = Vec::new();
    label_sequences(n, shapes[b].len(), used, &mut seq, &mut |seq, used| {
        if floor.as_ref().is_some_and(|f| seq <= f.as_slice()) {
            return;
        }
        labels.push(seq.to_vec());
        assign_labels(n, shapes, used, labels, out);
        labels.pop();
    });
}

/// Calls `visit` on every sequence of `len` distinct unused labels, in
/// lexicographic order.
fn label_sequences(
    n: u32,
    len: usize,
    used: &mut [bool],
    seq: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex], &mut [bool]),
) {
    if seq.len() == len {
        let snapshot = seq.clone();
        visit(&snapshot, used);
        return;
    }
    for v in 1..=n {
        if !used[v as usize] {
            used[v as usize] = true;
            seq.push(v);
            label_sequences(n, len, used, seq, visit);
            seq.pop();
            used[v as usize] = false;
        }
    }
}

/// Nonempty sequences of positive excesses with at most `max_len` terms
/// and sum at most `budget`.
fn excess_sequences(max_len: usize, budget: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    if prefix.len() == max_len {
        return;
    }
    for h in 1..=budget {
        prefix.push(h as u32);
        excess_sequences(max_len, budget - h, prefix, out);
        prefix.pop();
    }
}

/// Multisets of shapes, chosen with non-increasing shape index so each
/// block order is produced once.
fn block_multisets(
    n: u32,
    shapes: &[Vec<u32>],
    below: usize,
    room: usize,
    budget: usize,
    chosen: &mut Vec<Vec<u32>>,
    out: &mut Vec<FanGraphSpec>,
) {
    out.push(FanGraphSpec::from_excesses(n, chosen).expect("enumerated shapes are valid"));
    for idx in (0..below).rev() {
        let shape = &shapes[idx];
        let cost: usize = shape.iter().map(|&h| h as usize).sum();
        if shape.len() > room || cost > budget {
            continue;
        }
        chosen.push(shape.clone());
        block_multisets(
            n,
            shapes,
            idx + 1,
            room - shape.len(),
            budget - cost,
            chosen,
            out,
        );
        chosen.pop();
    }
}
