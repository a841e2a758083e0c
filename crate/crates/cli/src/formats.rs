//! JSON documents read and written by the command line.
//!
//! Every document type here is a plain serde mirror of a core type, with
//! conversions that run the core validation. Output documents are built
//! from ordered collections so serialization is byte-stable.

use std::collections::BTreeSet;

use fanideal_core::fan::{Composite, Realization};
use fanideal_core::oracle::BettiTable;
use fanideal_core::{
    CompositeSpec, FanGraphSpec, GlueSide, Gluing, GraphError, InvariantReport, SimpleGraph,
    SpecError, Vertex,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid fan specification: {0}")]
    Spec(#[from] SpecError),
    #[error("vertex {0} is listed twice")]
    RepeatedVertex(Vertex),
    #[error("unknown gluing {0:?}; expected \"circ\" or \"star\"")]
    UnknownGluing(String),
    #[error("cannot tell the document kind: expected a graph (vertices, edges), a fan specification (n, blocks) or a composite (op, left, right)")]
    UnknownKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphDoc {
            vertices: g.vertices().collect(),
            edges: g
                .edges()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    [u, v]
                })
                .collect(),
        }
    }

    /// Rejects repeated vertices, loops, repeated edges (in either
    /// orientation) and edges with an unlisted endpoint.
    pub fn to_graph(&self) -> Result<SimpleGraph, FormatError> {
        let mut seen = BTreeSet::new();
        if let Some(&v) = self.vertices.iter().find(|&&v| !seen.insert(v)) {
            return Err(FormatError::RepeatedVertex(v));
        }
        let edges = self.edges.iter().map(|&[u, v]| (u, v));
        Ok(SimpleGraph::from_edges_strict(
            self.vertices.iter().copied(),
            edges,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockDoc {
    pub vertices: Vec<Vertex>,
    pub branch_sizes: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FanSpecDoc {
    pub n: u32,
    pub blocks: Vec<BlockDoc>,
}

impl FanSpecDoc {
    pub fn from_spec(spec: &FanGraphSpec) -> Self {
        FanSpecDoc {
            n: spec.n(),
            blocks: spec
                .blocks()
                .iter()
                .map(|b| BlockDoc {
                    vertices: b.vertices().to_vec(),
                    branch_sizes: b.branch_sizes().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_spec(&self) -> Result<FanGraphSpec, FormatError> {
        Ok(FanGraphSpec::new(
            self.n,
            self.blocks
                .iter()
                .map(|b| (b.vertices.clone(), b.branch_sizes.clone()))
                .collect(),
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlueSideDoc {
    pub spec: FanSpecDoc,
    pub leaf: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompositeDoc {
    pub op: String,
    pub left: GlueSideDoc,
    pub right: GlueSideDoc,
}

pub fn parse_gluing(name: &str) -> Result<Gluing, FormatError> {
    match name {
        "circ" => Ok(Gluing::Circ),
        "star" => Ok(Gluing::Star),
        other => Err(FormatError::UnknownGluing(other.to_owned())),
    }
}

impl CompositeDoc {
    pub fn from_spec(c: &CompositeSpec) -> Self {
        let side = |s: &GlueSide| GlueSideDoc {
            spec: FanSpecDoc::from_spec(&s.spec),
            leaf: s.leaf,
        };
        CompositeDoc {
            op: c.op.to_string(),
            left: side(&c.left),
            right: side(&c.right),
        }
    }

    pub fn to_spec(&self) -> Result<CompositeSpec, FormatError> {
        let side = |s: &GlueSideDoc| -> Result<GlueSide, FormatError> {
            Ok(GlueSide {
                spec: s.spec.to_spec()?,
                leaf: s.leaf,
            })
        };
        Ok(CompositeSpec {
            op: parse_gluing(&self.op)?,
            left: side(&self.left)?,
            right: side(&self.right)?,
        })
    }
}

/// Any input the command line accepts.
#[derive(Clone, Debug)]
pub enum InputDoc {
    Graph(SimpleGraph),
    Fan(FanGraphSpec),
    Composite(CompositeSpec),
}

impl InputDoc {
    /// Decides the kind from the top-level keys, then validates.
    pub fn parse(text: &str) -> Result<InputDoc, FormatError> {
        let value: Value = serde_json::from_str(text)?;
        let has = |k: &str| value.get(k).is_some();
        if has("op") {
            Ok(InputDoc::Composite(
                serde_json::from_value::<CompositeDoc>(value)?.to_spec()?,
            ))
        } else if has("n") && has("blocks") {
            Ok(InputDoc::Fan(
                serde_json::from_value::<FanSpecDoc>(value)?.to_spec()?,
            ))
        } else if has("vertices") && has("edges") {
            Ok(InputDoc::Graph(
                serde_json::from_value::<GraphDoc>(value)?.to_graph()?,
            ))
        } else {
            Err(FormatError::UnknownKind)
        }
    }
}

/// Where a fresh vertex of a realized fan came from (all 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotDoc {
    pub block: usize,
    pub position: usize,
    pub local: usize,
    pub vertex: Vertex,
}

/// A realized graph with its label provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildDoc {
    #[serde(flatten)]
    pub graph: GraphDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slots: Option<Vec<SlotDoc>>,
    /// `[original label, composite label]` pairs per side.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub left_map: Option<Vec<[Vertex; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right_map: Option<Vec<[Vertex; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub joint: Option<Vertex>,
}

impl BuildDoc {
    pub fn from_realization(r: &Realization) -> Self {
        BuildDoc {
            graph: GraphDoc::from_graph(&r.graph),
            slots: Some(
                r.slots
                    .iter()
                    .map(|(s, &v)| SlotDoc {
                        block: s.block,
                        position: s.position,
                        local: s.local,
                        vertex: v,
                    })
                    .collect(),
            ),
            left_map: None,
            right_map: None,
            joint: None,
        }
    }

    pub fn from_composite(c: &Composite) -> Self {
        let pairs = |m: &std::collections::BTreeMap<Vertex, Vertex>| {
            m.iter().map(|(&a, &b)| [a, b]).collect()
        };
        BuildDoc {
            graph: GraphDoc::from_graph(&c.graph),
            slots: None,
            left_map: Some(pairs(&c.left_map)),
            right_map: Some(pairs(&c.right_map)),
            joint: Some(c.joint),
        }
    }

    pub fn from_graph(g: &SimpleGraph) -> Self {
        BuildDoc {
            graph: GraphDoc::from_graph(g),
            slots: None,
            left_map: None,
            right_map: None,
            joint: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediatesDoc {
    /// Per side, in left/right order.
    pub n: Vec<u32>,
    #[serde(rename = "W")]
    pub w: Vec<usize>,
    pub p: Vec<usize>,
    #[serde(rename = "T")]
    pub t_max: Vec<usize>,
    #[serde(rename = "Tprime")]
    pub t_prime: Vec<Option<usize>>,
    pub depth_t: Option<usize>,
    pub depth_s: Option<usize>,
    pub reg_t: Option<usize>,
    pub reg_s: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub reg: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nu: Option<usize>,
    pub method: String,
    pub intermediates: IntermediatesDoc,
}

impl ReportDoc {
    pub fn from_report(r: &InvariantReport) -> Self {
        let sides = &r.intermediates.sides;
        ReportDoc {
            dim: r.dim,
            depth: r.depth,
            reg: r.reg,
            nu: r.nu,
            method: r.method.to_string(),
            intermediates: IntermediatesDoc {
                n: sides.iter().map(|s| s.n).collect(),
                w: sides.iter().map(|s| s.w_size).collect(),
                p: sides.iter().map(|s| s.p).collect(),
                t_max: sides.iter().map(|s| s.t_max).collect(),
                t_prime: sides.iter().map(|s| s.t_prime).collect(),
                depth_t: r.intermediates.depth_t,
                depth_s: r.intermediates.depth_s,
                reg_t: r.intermediates.reg_t,
                reg_s: r.intermediates.reg_s,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntryDoc {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDoc {
    pub n: usize,
    pub entries: Vec<BettiEntryDoc>,
    pub pd: usize,
    pub depth: usize,
    pub reg: usize,
}

impl BettiDoc {
    pub fn from_table(t: &BettiTable) -> Self {
        BettiDoc {
            n: t.variable_count(),
            entries: t
                .entries()
                .map(|((i, j), beta)| BettiEntryDoc { i, j, beta })
                .collect(),
            pd: t.projective_dimension(),
            depth: t.depth(),
            reg: t.regularity(),
        }
    }

    /// Rows `i`, columns `j - i`, in the usual Betti diagram layout.
    pub fn to_table_text(&self) -> String {
        let rows = self.entries.iter().map(|e| e.j - e.i).max().unwrap_or(0);
        let cols = self.pd;
        let mut out = String::from("      ");
        for i in 0..=cols {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for r in 0..=rows {
            out.push_str(&format!("{r:>4}: "));
            for i in 0..=cols {
                let beta = self
                    .entries
                    .iter()
                    .find(|e| e.i == i && e.j == i + r)
                    .map_or(0, |e| e.beta);
                if beta == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{beta:>6}"));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "pd {}  depth {}  reg {}\n",
            self.pd, self.depth, self.reg
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = SimpleGraph::path(4);
        let doc = GraphDoc::from_graph(&g);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"vertices":[1,2,3,4],"edges":[[1,2],[2,3],[3,4]]}"#
        );
        let back: GraphDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn graph_validation() {
        let parse = |s: &str| serde_json::from_str::<GraphDoc>(s).unwrap().to_graph();
        assert!(matches!(
            parse(r#"{"vertices":[1,2],"edges":[[1,1]]}"#),
            Err(FormatError::Graph(GraphError::Loop(1)))
        ));
        assert!(matches!(
            parse(r#"{"vertices":[1,2],"edges":[[1,2],[2,1]]}"#),
            Err(FormatError::Graph(GraphError::DuplicateEdge(_)))
        ));
        assert!(matches!(
            parse(r#"{"vertices":[1,1],"edges":[]}"#),
            Err(FormatError::RepeatedVertex(1))
        ));
        assert!(matches!(
            parse(r#"{"vertices":[1],"edges":[[1,2]]}"#),
            Err(FormatError::Graph(_))
        ));
    }

    #[test]
    fn input_kinds() {
        let fan = r#"{"n":2,"blocks":[{"vertices":[1],"branch_sizes":[2]},{"vertices":[2],"branch_sizes":[2]}]}"#;
        assert!(matches!(InputDoc::parse(fan), Ok(InputDoc::Fan(_))));
        let comp = format!(
            r#"{{"op":"circ","left":{{"spec":{fan},"leaf":3}},"right":{{"spec":{fan},"leaf":4}}}}"#
        );
        assert!(matches!(InputDoc::parse(&comp), Ok(InputDoc::Composite(_))));
        assert!(matches!(
            InputDoc::parse(r#"{"vertices":[1,2],"edges":[[1,2]]}"#),
            Ok(InputDoc::Graph(_))
        ));
        assert!(matches!(
            InputDoc::parse(r#"{"x":1}"#),
            Err(FormatError::UnknownKind)
        ));
        let bad = comp.replace("circ", "glue");
        assert!(matches!(
            InputDoc::parse(&bad),
            Err(FormatError::UnknownGluing(_))
        ));
        let invalid = r#"{"n":3,"blocks":[{"vertices":[1,2],"branch_sizes":[2,2]}]}"#;
        let e = InputDoc::parse(invalid).unwrap_err().to_string();
        assert!(e.contains("a must exceed position"), "{e}");
        assert!(e.contains("block 1") && e.contains("position 2"), "{e}");
    }

    #[test]
    fn fan_doc_round_trip() {
        let spec =
            FanGraphSpec::new(3, vec![(vec![1, 2], vec![2, 4]), (vec![3], vec![2])]).unwrap();
        assert_eq!(FanSpecDoc::from_spec(&spec).to_spec().unwrap(), spec);
    }

    #[test]
    fn betti_doc_layout() {
        let t = BettiTable::from_entries(3, [((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
        let doc = BettiDoc::from_table(&t);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"n":3,"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":3},{"i":2,"j":3,"beta":2}],"pd":2,"depth":1,"reg":1}"#
        );
        let text = doc.to_table_text();
        assert!(text.contains("pd 2  depth 1  reg 1"));
    }
}
