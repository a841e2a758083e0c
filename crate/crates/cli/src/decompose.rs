//! Checks of the vertex decomposition `I_G = J ∩ K` on a concrete graph.

use fanideal_core::oracle::{decompose_at_vertex, oracle_invariants};
use fanideal_core::{Field, OracleError, SimpleGraph, SquarefreeMonomialIdeal, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contract {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub vertex: Vertex,
    pub ideal: String,
    pub j: String,
    pub k: String,
    pub sum: String,
    pub intersection: String,
    pub contracts: Vec<Contract>,
}

impl DecompositionReport {
    pub fn all_pass(&self) -> bool {
        self.contracts.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "v = {}\nI_G   = {}\nJ     = {}\nK     = {}\nJ + K = {}\nJ ∩ K = {}\n",
            self.vertex, self.ideal, self.j, self.k, self.sum, self.intersection
        );
        for c in &self.contracts {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
        }
        out
    }
}

/// Builds `J` and `K` at `v` and evaluates the four contracts with the
/// oracle over `field`.
pub fn decomposition_report(
    g: &SimpleGraph,
    v: Vertex,
    field: Field,
) -> Result<DecompositionReport, OracleError> {
    let ideal = SquarefreeMonomialIdeal::edge_ideal(g);
    let d = decompose_at_vertex(g, v)?;
    let sum = d.j.sum(&d.k)?;
    let intersection = d.j.intersect(&d.k)?;
    let j = oracle_invariants(&d.j, field)?;
    let s = oracle_invariants(&sum, field)?;
    let contracts = vec![
        Contract {
            name: "intersection".into(),
            pass: intersection == ideal,
            detail: "J ∩ K = I_G".into(),
        },
        Contract {
            name: "sum".into(),
            pass: sum == d.expected_sum,
            detail: format!("J + K = {}", d.expected_sum),
        },
        Contract {
            name: "depth".into(),
            pass: j.depth == s.depth + 1,
            detail: format!("depth S/J = {}, depth S/(J+K) = {}", j.depth, s.depth),
        },
        Contract {
            name: "regularity".into(),
            pass: j.reg == s.reg,
            detail: format!("reg S/J = {}, reg S/(J+K) = {}", j.reg, s.reg),
        },
    ];
    Ok(DecompositionReport {
        vertex: v,
        ideal: ideal.to_string(),
        j: d.j.to_string(),
        k: d.k.to_string(),
        sum: sum.to_string(),
        intersection: intersection.to_string(),
        contracts,
    })
}
