use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::ideal::SquarefreeMonomialIdeal;
use super::OracleError;
use crate::graph::Vertex;

/// Most vertices a complex may carry; faces are handled as `u64` masks.
pub const COMPLEX_MAX_VERTICES: usize = 64;

/// A finite abstract simplicial complex given by its facets.
///
/// The void complex has no faces at all, while the irrelevant complex has
/// exactly one face, the empty set. They have different reduced homology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    facets: BTreeSet<Vec<Vertex>>,
}

impl SimplicialComplex {
    pub fn void<V: IntoIterator<Item = Vertex>>(vertices: V) -> Self {
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets: BTreeSet::new(),
        }
    }

    pub fn irrelevant<V: IntoIterator<Item = Vertex>>(vertices: V) -> Self {
        let mut facets = BTreeSet::new();
        facets.insert(Vec::new());
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
        }
    }

    pub fn simplex<V: IntoIterator<Item = Vertex>>(vertices: V) -> Self {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut facets = BTreeSet::new();
        facets.insert(vertices.iter().copied().collect());
        SimplicialComplex { vertices, facets }
    }

    /// The complex generated by `faces`; non-maximal faces are dropped.
    pub fn from_faces<V, F, S>(vertices: V, faces: F) -> Result<Self, OracleError>
    where
        V: IntoIterator<Item = Vertex>,
        F: IntoIterator<Item = S>,
        S: IntoIterator<Item = Vertex>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut all: Vec<BTreeSet<Vertex>> = Vec::new();
        for f in faces {
            let f: BTreeSet<Vertex> = f.into_iter().collect();
            if let Some(&x) = f.iter().find(|x| !vertices.contains(x)) {
                return Err(OracleError::UnknownVariable(x));
            }
            all.push(f);
        }
        all.sort_by_key(|f| core::cmp::Reverse(f.len()));
        let mut kept: Vec<BTreeSet<Vertex>> = Vec::new();
        for f in all {
            if !kept.iter().any(|k| f.is_subset(k)) {
                kept.push(f);
            }
        }
        Ok(SimplicialComplex {
            vertices,
            facets: kept.into_iter().map(|f| f.into_iter().collect()).collect(),
        })
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn facets(&self) -> impl ExactSizeIterator<Item = &[Vertex]> {
        self.facets.iter().map(Vec::as_slice)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Size of the largest facet, or `None` for the void complex.
    pub fn max_facet_size(&self) -> Option<usize> {
        self.facets.iter().map(Vec::len).max()
    }

    /// Geometric dimension, `-1` for the irrelevant complex and `None` when
    /// void.
    pub fn dimension(&self) -> Option<i32> {
        self.max_facet_size().map(|s| s as i32 - 1)
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        self.facets.iter().any(|f| {
            let mut it = f.iter();
            face.iter().all(|x| it.any(|y| y == x))
        })
    }

    /// Every face as a mask over the vertex order, grouped by size.
    pub(crate) fn faces_by_size(&self) -> Result<Vec<Vec<u64>>, OracleError> {
        if self.vertices.len() > COMPLEX_MAX_VERTICES {
            return Err(OracleError::Capacity {
                what: "complex vertices",
                count: self.vertices.len(),
                limit: COMPLEX_MAX_VERTICES,
            });
        }
        let index: Vec<Vertex> = self.vertices.iter().copied().collect();
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for f in &self.facets {
            let mask = f.iter().fold(0u64, |m, x| {
                m | 1 << index.binary_search(x).expect("facet vertex")
            });
            let mut sub = mask;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let top = self.max_facet_size().unwrap_or(0);
        let mut out = alloc::vec![Vec::new(); if self.is_void() { 0 } else { top + 1 }];
        for m in seen {
            out[m.count_ones() as usize].push(m);
        }
        Ok(out)
    }
}

/// The complex of all variable subsets containing no generator. For an
/// edge ideal this is the independence complex of the graph.
pub fn stanley_reisner_complex(
    ideal: &SquarefreeMonomialIdeal,
) -> Result<SimplicialComplex, OracleError> {
    let vars: Vec<Vertex> = ideal.variables().iter().copied().collect();
    if vars.len() > COMPLEX_MAX_VERTICES {
        return Err(OracleError::Capacity {
            what: "variables",
            count: vars.len(),
            limit: COMPLEX_MAX_VERTICES,
        });
    }
    let gens: Vec<u64> = ideal
        .generators()
        .map(|g| {
            g.support().iter().fold(0u64, |m, x| {
                m | 1 << vars.binary_search(x).expect("generator variable")
            })
        })
        .collect();
    let mut facets = BTreeSet::new();
    maximal_faces(&gens, vars.len(), 0, 0, &mut facets);
    Ok(SimplicialComplex {
        facets: facets
            .into_iter()
            .map(|m| {
                (0..vars.len())
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| vars[i])
                    .collect()
            })
            .collect(),
        vertices: ideal.variables().clone(),
    })
}

fn is_face(gens: &[u64], mask: u64) -> bool {
    gens.iter().all(|&g| g & mask != g)
}

/// Include/exclude each variable in turn. A variable is only excluded when
/// including it is impossible or when some later choice can still block it,
/// so every leaf is checked for maximality before being recorded.
fn maximal_faces(gens: &[u64], n: usize, i: usize, face: u64, out: &mut BTreeSet<u64>) {
    if i == n {
        if (0..n).all(|x| face >> x & 1 == 1 || !is_face(gens, face | 1 << x)) {
            out.insert(face);
        }
        return;
    }
    let with = face | 1 << i;
    if is_face(gens, with) {
        maximal_faces(gens, n, i + 1, with, out);
        // A maximal face omitting x_i must contain `g \ {x_i}` for some
        // generator g through x_i, so the part of g already decided has to
        // be chosen.
        let decided = (1u64 << i) - 1;
        let blockable = gens
            .iter()
            .any(|&g| g >> i & 1 == 1 && g & decided & !face == 0);
        if blockable {
            maximal_faces(gens, n, i + 1, face, out);
        }
    } else {
        maximal_faces(gens, n, i + 1, face, out);
    }
}
