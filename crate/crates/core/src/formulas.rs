//! Closed-form dimension, depth and regularity of `S/I_G` for complete
//! graphs, paths, fan graphs and their `∘` / `*` composites.
//!
//! Every function applies its formula only under the hypotheses the formula
//! is stated for. A violated hypothesis is a [`FormulaError`], never a
//! silent fallback: callers comparing against the oracle must be able to
//! tell "not applicable" from "wrong".

use alloc::vec::Vec;
use core::fmt;

use crate::fan::{
    CompositeError, FanGraphSpec, GlueSide, Gluing, Side, SpecError, TheoremQuantities,
};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Composite(#[from] CompositeError),
    #[error("n = {n}: need n >= 2 for a nonzero edge ideal")]
    TooSmall { n: u32 },
    #[error("{side} side is the degenerate fan K_{n}: the gluing formulas need k_i >= 1")]
    DegenerateSide { side: Side, n: u32 },
    #[error("{op} regularity with t = 2: {side} side has |W| = {w_size} <= n - 2 = {}, outside the stated cases", *n as usize - 2)]
    OutsideTheoremCases {
        op: Gluing,
        side: Side,
        w_size: usize,
        n: u32,
    },
    #[error("leaf removal needs T' = T - 1, got T = {t_max}, T' = {t_prime}")]
    HypothesisNotMet { t_max: usize, t_prime: usize },
    #[error("vertex {vertex} lies in W")]
    VertexInW { vertex: Vertex },
    #[error("vertex {vertex} is not a vertex of the base clique K_{n}")]
    NotBaseVertex { vertex: Vertex, n: u32 },
}

impl FormulaError {
    /// The hypothesis that failed, for reports.
    pub fn precondition(&self) -> &'static str {
        match self {
            FormulaError::Spec(_) => "valid fan specification",
            FormulaError::Composite(CompositeError::NotAFanLeaf { .. }) => {
                "leaf of a K_2 branch at position 1 (neighbour in W_{i,1})"
            }
            FormulaError::Composite(_) => {
                "valid gluing: designated leaf with neighbour of degree >= 2"
            }
            FormulaError::TooSmall { .. } => "n >= 2",
            FormulaError::DegenerateSide { .. } => "k_i >= 1 on both sides",
            FormulaError::OutsideTheoremCases { .. } => {
                "t = 2 requires |W_i| >= n_i - 1 on both sides"
            }
            FormulaError::HypothesisNotMet { .. } => "T' = T - 1",
            FormulaError::VertexInW { .. } => "v in V(K_n) \\ W",
            FormulaError::NotBaseVertex { .. } => "v in V(K_n) \\ W",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
        })
    }
}

/// Per-fan quantities entering the formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SideQuantities {
    pub n: u32,
    pub w_size: usize,
    pub p: usize,
    /// `T = max_i |W_i|`.
    pub t_max: usize,
    /// `T'`, only defined relative to a leaf.
    pub t_prime: Option<usize>,
}

impl SideQuantities {
    fn of_spec(spec: &FanGraphSpec) -> Self {
        SideQuantities {
            n: spec.n(),
            w_size: spec.w_size(),
            p: spec.p(),
            t_max: spec.max_block_size(),
            t_prime: None,
        }
    }

    fn of_theorem(q: &TheoremQuantities) -> Self {
        SideQuantities {
            n: q.n,
            w_size: q.w_size,
            p: q.p,
            t_max: q.t_max,
            t_prime: Some(q.t_prime),
        }
    }
}

/// The `t` and `s` of the gluing formulas. Depth and regularity use
/// different definitions of `t`; `s` is the amount subtracted from the sum
/// of the two sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Intermediates {
    pub sides: Vec<SideQuantities>,
    pub depth_t: Option<usize>,
    pub depth_s: Option<usize>,
    pub reg_t: Option<usize>,
    pub reg_s: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub reg: Option<usize>,
    /// Induced matching number of the graph, when it was computed.
    pub nu: Option<usize>,
    pub method: Method,
    pub intermediates: Intermediates,
}

impl InvariantReport {
    pub fn oracle(dim: usize, depth: usize, reg: usize) -> Self {
        InvariantReport {
            dim: Some(dim),
            depth: Some(depth),
            reg: Some(reg),
            nu: None,
            method: Method::Oracle,
            intermediates: Intermediates::default(),
        }
    }

    /// An empty formula report, to be filled in by the caller.
    pub fn formula() -> Self {
        InvariantReport {
            dim: None,
            depth: None,
            reg: None,
            nu: None,
            method: Method::Formula,
            intermediates: Intermediates::default(),
        }
    }
}

/// `(depth, reg)` of `S/I_{K_n}`: both are 1.
pub fn complete_invariants(n: u32) -> Result<(usize, usize), FormulaError> {
    if n < 2 {
        return Err(FormulaError::TooSmall { n });
    }
    Ok((1, 1))
}

/// `(depth, reg)` of `S/I_{P_n}`: `(⌈n/3⌉, ⌊(n+1)/3⌋)`.
pub fn path_invariants(n: u32) -> Result<(usize, usize), FormulaError> {
    if n < 2 {
        return Err(FormulaError::TooSmall { n });
    }
    let n = n as usize;
    Ok((n.div_ceil(3), (n + 1) / 3))
}

/// `dim S/I_G` for a fan graph: `|W| + 1` if `W ⊊ [n]`, otherwise `n`.
pub fn fan_dimension(spec: &FanGraphSpec) -> usize {
    let w = spec.w_size();
    if w == spec.n() as usize {
        w
    } else {
        w + 1
    }
}

/// `depth S/I_G = 1 + |W| - max_i |W_i|`; 1 for the degenerate fan.
pub fn fan_depth(spec: &FanGraphSpec) -> usize {
    if spec.is_degenerate() {
        return 1;
    }
    1 + spec.w_size() - spec.max_block_size()
}

/// `reg S/I_G`: `p` when `|W| ≥ n - 1` and every block ends with a branch
/// of excess at least 2, `p + 1` otherwise; 1 for the degenerate fan.
pub fn fan_regularity(spec: &FanGraphSpec) -> usize {
    if spec.is_degenerate() {
        return 1;
    }
    let p = spec.p();
    let covers = spec.w_size() + 1 >= spec.n() as usize;
    let terminal = spec.blocks().iter().all(|b| b.terminal_excess() >= 2);
    if covers && terminal {
        p
    } else {
        p + 1
    }
}

/// Dimension, depth and regularity of a fan graph from the formulas.
pub fn fan_report(spec: &FanGraphSpec) -> InvariantReport {
    let mut report = InvariantReport::formula();
    report.dim = Some(fan_dimension(spec));
    report.depth = Some(fan_depth(spec));
    report.reg = Some(fan_regularity(spec));
    report
        .intermediates
        .sides
        .push(SideQuantities::of_spec(spec));
    report
}

fn side_quantities(side: Side, glue: &GlueSide) -> Result<TheoremQuantities, FormulaError> {
    if glue.spec.is_degenerate() {
        return Err(FormulaError::DegenerateSide {
            side,
            n: glue.spec.n(),
        });
    }
    Ok(glue.spec.theorem_quantities(glue.leaf)?)
}

fn both_sides(left: &GlueSide, right: &GlueSide) -> Result<[TheoremQuantities; 2], FormulaError> {
    Ok([
        side_quantities(Side::Left, left)?,
        side_quantities(Side::Right, right)?,
    ])
}

fn depth_report(
    op: Gluing,
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    let qs = both_sides(left, right)?;
    let t = qs.iter().filter(|q| !q.unique_max_at_leaf()).count();
    let s = match op {
        Gluing::Circ if t <= 1 => 1,
        Gluing::Circ => 2,
        Gluing::Star if t == 0 => 0,
        Gluing::Star => 1,
    };
    let mut report = InvariantReport::formula();
    report.depth = Some(fan_depth(&left.spec) + fan_depth(&right.spec) - s);
    report.intermediates.sides = qs.iter().map(SideQuantities::of_theorem).collect();
    report.intermediates.depth_t = Some(t);
    report.intermediates.depth_s = Some(s);
    Ok(report)
}

/// Whether deleting the leaf's neighbour `v` changes the regularity of the
/// fan. `reg(G \ v)` comes from the induced matching number of the realized
/// deleted graph, which is chordal.
fn neighbor_deletion_changes_reg(q: &TheoremQuantities, glue: &GlueSide) -> bool {
    let deleted = glue
        .spec
        .realize()
        .graph
        .remove_vertex(q.site.neighbor)
        .expect("the leaf's neighbour is a vertex of the realized fan");
    deleted.induced_matching_number() != fan_regularity(&glue.spec)
}

fn reg_report(
    op: Gluing,
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    let qs = both_sides(left, right)?;
    let t = [(&qs[0], left), (&qs[1], right)]
        .into_iter()
        .filter(|(q, g)| neighbor_deletion_changes_reg(q, g))
        .count();
    let s = if t <= 1 {
        match op {
            Gluing::Circ => t,
            Gluing::Star => 0,
        }
    } else {
        for (side, q) in [(Side::Left, &qs[0]), (Side::Right, &qs[1])] {
            if q.w_size + 2 <= q.n as usize {
                return Err(FormulaError::OutsideTheoremCases {
                    op,
                    side,
                    w_size: q.w_size,
                    n: q.n,
                });
            }
        }
        let short = qs.iter().filter(|q| q.w_size + 1 == q.n as usize).count();
        match op {
            // some |W_i| = n_i - 1 → 1; all |W_i| = n_i → 2
            Gluing::Circ => {
                if short > 0 {
                    1
                } else {
                    2
                }
            }
            // all |W_i| = n_i - 1 → 0; some |W_i| = n_i → 1
            Gluing::Star => {
                if short == 2 {
                    0
                } else {
                    1
                }
            }
        }
    };
    let mut report = InvariantReport::formula();
    report.reg = Some(fan_regularity(&left.spec) + fan_regularity(&right.spec) - s);
    report.intermediates.sides = qs.iter().map(SideQuantities::of_theorem).collect();
    report.intermediates.reg_t = Some(t);
    report.intermediates.reg_s = Some(s);
    Ok(report)
}

/// `depth(G_1 ∘ G_2) = depth G_1 + depth G_2 - s`, `s = 1` if `t ≤ 1`
/// else 2, with `t = #{i : T'_i ≠ T_i - 1}`.
pub fn circ_depth_formula(
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    depth_report(Gluing::Circ, left, right)
}

/// `reg(G_1 ∘ G_2)`, with `t = #{i : reg(G_i \ v_i) ≠ reg G_i}`.
pub fn circ_regularity_formula(
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    reg_report(Gluing::Circ, left, right)
}

/// `depth(G_1 * G_2) = depth G_1 + depth G_2 - s`, `s = 0` if `t = 0`
/// else 1.
pub fn star_depth_formula(
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    depth_report(Gluing::Star, left, right)
}

/// `reg(G_1 * G_2)`, with `t` as in [`circ_regularity_formula`].
pub fn star_regularity_formula(
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    reg_report(Gluing::Star, left, right)
}

/// Depth and regularity of a composite; fails if either formula does not
/// apply.
pub fn composite_report(
    op: Gluing,
    left: &GlueSide,
    right: &GlueSide,
) -> Result<InvariantReport, FormulaError> {
    let mut depth = depth_report(op, left, right)?;
    let reg = reg_report(op, left, right)?;
    depth.reg = reg.reg;
    depth.intermediates.reg_t = reg.intermediates.reg_t;
    depth.intermediates.reg_s = reg.intermediates.reg_s;
    Ok(depth)
}

/// Predicted `depth(G \ f)`: equal to `depth G` when `T' = T - 1`.
pub fn leaf_removal_depth_identity(
    spec: &FanGraphSpec,
    leaf: Vertex,
) -> Result<usize, FormulaError> {
    let q = spec.theorem_quantities(leaf)?;
    if !q.unique_max_at_leaf() {
        return Err(FormulaError::HypothesisNotMet {
            t_max: q.t_max,
            t_prime: q.t_prime,
        });
    }
    Ok(fan_depth(spec))
}

/// The regularity drop `s` for `G = fan ∪_v P_2` with `v ∈ V(K_n) \ W`:
/// `reg(G \ v) = reg(G) - s`, where `s = 1` iff `|W| ≥ n - 2` and every
/// block ends with excess at least 2.
pub fn clique_sum_reg_drop(spec: &FanGraphSpec, v: Vertex) -> Result<usize, FormulaError> {
    if v < 1 || v > spec.n() {
        return Err(FormulaError::NotBaseVertex {
            vertex: v,
            n: spec.n(),
        });
    }
    if spec.block_of(v).is_some() {
        return Err(FormulaError::VertexInW { vertex: v });
    }
    let wide = spec.w_size() + 2 >= spec.n() as usize;
    let terminal = spec.blocks().iter().all(|b| b.terminal_excess() >= 2);
    Ok(usize::from(wide && terminal))
}

/// `reg(I) = reg(S/I) + 1`.
pub fn ideal_reg_from_quotient(quotient_reg: usize) -> usize {
    quotient_reg + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, blocks: &[(&[Vertex], &[u32])]) -> FanGraphSpec {
        FanGraphSpec::new(
            n,
            blocks
                .iter()
                .map(|(w, a)| (w.to_vec(), a.to_vec()))
                .collect(),
        )
        .unwrap()
    }

    fn p4() -> FanGraphSpec {
        spec(2, &[(&[1], &[2]), (&[2], &[2])])
    }

    fn side(s: &FanGraphSpec, neighbor: Vertex) -> GlueSide {
        let leaf = s
            .leaf_catalog()
            .into_iter()
            .find(|l| l.neighbor == neighbor)
            .unwrap()
            .leaf;
        GlueSide {
            spec: s.clone(),
            leaf,
        }
    }

    #[test]
    fn base_cases() {
        for n in [2, 5, 8] {
            assert_eq!(complete_invariants(n), Ok((1, 1)));
        }
        assert_eq!(complete_invariants(1), Err(FormulaError::TooSmall { n: 1 }));
        assert_eq!(path_invariants(4), Ok((2, 1)));
        assert_eq!(path_invariants(5), Ok((2, 2)));
        assert_eq!(path_invariants(7), Ok((3, 2)));
        assert!(path_invariants(1).is_err());
    }

    #[test]
    fn dimension_cases() {
        assert_eq!(fan_dimension(&spec(2, &[(&[1], &[3]), (&[2], &[3])])), 2);
        assert_eq!(fan_dimension(&spec(3, &[(&[1], &[3])])), 2);
        assert_eq!(fan_dimension(&FanGraphSpec::complete(4).unwrap()), 1);
    }

    #[test]
    fn depth_cases() {
        assert_eq!(fan_depth(&p4()), 2);
        assert_eq!(fan_depth(&spec(2, &[(&[1], &[3]), (&[2], &[3])])), 2);
        assert_eq!(fan_depth(&spec(4, &[(&[2, 1, 4], &[2, 5, 4])])), 1);
        assert_eq!(fan_depth(&FanGraphSpec::complete(3).unwrap()), 1);
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(fan_regularity(&spec(2, &[(&[1], &[3]), (&[2], &[3])])), 2);
        assert_eq!(fan_regularity(&spec(3, &[(&[1], &[3])])), 2);
        assert_eq!(fan_regularity(&p4()), 1);
        assert_eq!(fan_regularity(&FanGraphSpec::complete(6).unwrap()), 1);
    }

    #[test]
    fn circ_of_p4s() {
        let (l, r) = (side(&p4(), 1), side(&p4(), 2));
        let d = circ_depth_formula(&l, &r).unwrap();
        assert_eq!(d.depth, Some(2));
        assert_eq!(d.intermediates.depth_t, Some(2));
        assert_eq!(d.intermediates.depth_s, Some(2));
        let g = circ_regularity_formula(&l, &r).unwrap();
        assert_eq!(g.reg, Some(2));
        assert_eq!(g.intermediates.reg_t, Some(0));
    }

    #[test]
    fn star_of_p4s() {
        let (l, r) = (side(&p4(), 2), side(&p4(), 1));
        let d = star_depth_formula(&l, &r).unwrap();
        assert_eq!(d.depth, Some(3));
        assert_eq!(d.intermediates.depth_s, Some(1));
        let g = star_regularity_formula(&l, &r).unwrap();
        assert_eq!(g.reg, Some(2));
        let both = composite_report(Gluing::Star, &l, &r).unwrap();
        assert_eq!((both.depth, both.reg), (Some(3), Some(2)));
    }

    #[test]
    fn depth_t_case_arithmetic() {
        // Leaf in the unique largest block: t contribution 0.
        let big = spec(3, &[(&[1, 2], &[2, 3])]);
        let l = side(&big, 1);
        let r = side(&p4(), 1);
        let d = circ_depth_formula(&l, &l).unwrap();
        assert_eq!(d.intermediates.depth_t, Some(0));
        assert_eq!(d.depth, Some(2 * fan_depth(&big) - 1));
        let d = circ_depth_formula(&l, &r).unwrap();
        assert_eq!(
            (d.intermediates.depth_t, d.intermediates.depth_s),
            (Some(1), Some(1))
        );
        let d = star_depth_formula(&l, &l).unwrap();
        assert_eq!(d.intermediates.depth_s, Some(0));
        let d = star_depth_formula(&l, &r).unwrap();
        assert_eq!(d.intermediates.depth_s, Some(1));
    }

    #[test]
    fn gluing_errors() {
        let k = GlueSide {
            spec: FanGraphSpec::complete(3).unwrap(),
            leaf: 1,
        };
        let l = side(&p4(), 1);
        assert!(matches!(
            circ_depth_formula(&k, &l),
            Err(FormulaError::DegenerateSide {
                side: Side::Left,
                n: 3
            })
        ));
        let bad = GlueSide {
            spec: p4(),
            leaf: 2,
        };
        let e = star_regularity_formula(&l, &bad).unwrap_err();
        assert!(matches!(
            e,
            FormulaError::Composite(CompositeError::NotAFanLeaf { vertex: 2 })
        ));
        assert!(!e.precondition().is_empty());
    }

    #[test]
    fn regularity_t_cases() {
        // K_4 with one pendant edge: deleting v leaves K_3 and an isolated
        // vertex, so reg is unchanged on both sides.
        let s = spec(4, &[(&[1], &[2])]);
        let l = side(&s, 1);
        let r = circ_regularity_formula(&l, &l).unwrap();
        assert_eq!((r.intermediates.reg_t, r.reg), (Some(0), Some(2)));

        // A pendant edge at 1 and a triangle at 2 on K_2: deleting 1 drops
        // reg from 2 to 1, and |W| = n.
        let s = spec(2, &[(&[1], &[2]), (&[2], &[3])]);
        let l = side(&s, 1);
        let c = circ_regularity_formula(&l, &l).unwrap();
        assert_eq!(
            (c.intermediates.reg_t, c.intermediates.reg_s, c.reg),
            (Some(2), Some(2), Some(2))
        );
        let st = star_regularity_formula(&l, &l).unwrap();
        assert_eq!(
            (st.intermediates.reg_t, st.intermediates.reg_s, st.reg),
            (Some(2), Some(1), Some(3))
        );
    }

    #[test]
    fn outside_cases_error_names_the_gap() {
        let e = FormulaError::OutsideTheoremCases {
            op: Gluing::Circ,
            side: Side::Right,
            w_size: 1,
            n: 4,
        };
        assert_eq!(
            alloc::format!("{e}"),
            "circ regularity with t = 2: right side has |W| = 1 <= n - 2 = 2, outside the stated cases"
        );
        assert_eq!(
            e.precondition(),
            "t = 2 requires |W_i| >= n_i - 1 on both sides"
        );
    }

    #[test]
    fn leaf_removal_identity() {
        let s = spec(3, &[(&[1, 2], &[2, 3])]);
        assert_eq!(leaf_removal_depth_identity(&s, 4), Ok(fan_depth(&s)));
        assert_eq!(
            leaf_removal_depth_identity(&p4(), 3),
            Err(FormulaError::HypothesisNotMet {
                t_max: 1,
                t_prime: 1
            })
        );
    }

    #[test]
    fn clique_sum_drop() {
        // |W| = n - 2 and all terminal excesses >= 2.
        assert_eq!(clique_sum_reg_drop(&spec(3, &[(&[1], &[3])]), 3), Ok(1));
        // Terminal excess 1.
        assert_eq!(clique_sum_reg_drop(&spec(3, &[(&[1], &[2])]), 3), Ok(0));
        // |W| <= n - 3.
        assert_eq!(clique_sum_reg_drop(&spec(4, &[(&[1], &[3])]), 4), Ok(0));
        assert_eq!(
            clique_sum_reg_drop(&spec(3, &[(&[1], &[3])]), 1),
            Err(FormulaError::VertexInW { vertex: 1 })
        );
        assert!(matches!(
            clique_sum_reg_drop(&spec(3, &[(&[1], &[3])]), 7),
            Err(FormulaError::NotBaseVertex { .. })
        ));
    }

    #[test]
    fn quotient_shift() {
        assert_eq!(ideal_reg_from_quotient(1), 2);
        assert_eq!(ideal_reg_from_quotient(0), 1);
        assert_eq!(ideal_reg_from_quotient(3), 4);
    }

    #[test]
    fn reports_carry_intermediates() {
        let r = fan_report(&spec(3, &[(&[1, 2], &[2, 4]), (&[3], &[2])]));
        assert_eq!((r.dim, r.depth, r.reg), (Some(3), Some(2), Some(2)));
        assert_eq!(r.intermediates.sides[0].p, 1);
        assert_eq!(r.method, Method::Formula);
    }
}
