//! Deterministic instance streams for the verification campaign.
//!
//! Small fan corpora are enumerated exhaustively. Everything else is drawn
//! from a ChaCha stream seeded by the configuration, and this module is the
//! only place randomness enters the crate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use fanideal_core::fan::all_fans;
use fanideal_core::{CompositeSpec, FanGraphSpec, GlueSide, Gluing, SimpleGraph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::formats::{CompositeDoc, FanSpecDoc};

/// Largest vertex bound for which the fans family is enumerated rather than
/// sampled.
pub const EXHAUSTIVE_FAN_LIMIT: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Fans,
    Circ,
    Star,
    Paths,
    Completes,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Fans,
        Family::Circ,
        Family::Star,
        Family::Paths,
        Family::Completes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Fans => "fans",
            Family::Circ => "circ",
            Family::Star => "star",
            Family::Paths => "paths",
            Family::Completes => "completes",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!("unknown family {s:?}; expected one of fans, circ, star, paths, completes")
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub family: Family,
    pub max_vertices: usize,
    /// Number of instances to draw; unused by the exhaustive families.
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Fan(FanGraphSpec),
    Composite(CompositeSpec),
    Path(u32),
    Complete(u32),
}

impl Instance {
    pub fn graph(&self) -> SimpleGraph {
        match self {
            Instance::Fan(spec) => spec.realize().graph,
            Instance::Composite(c) => c.realize().expect("generated composites are valid").graph,
            Instance::Path(n) => SimpleGraph::path(*n),
            Instance::Complete(n) => SimpleGraph::complete(*n),
        }
    }

    /// The JSON that identifies the instance; its digest names the record.
    pub fn spec_json(&self) -> Value {
        match self {
            Instance::Fan(spec) => json!(FanSpecDoc::from_spec(spec)),
            Instance::Composite(c) => json!(CompositeDoc::from_spec(c)),
            Instance::Path(n) => json!({ "path": n }),
            Instance::Complete(n) => json!({ "complete": n }),
        }
    }
}

/// The full instance list for `config`, identical for identical configs.
pub fn generate_instances(config: &GeneratorConfig) -> Vec<Instance> {
    let max = config.max_vertices;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.family {
        Family::Paths => (2..=max as u32).map(Instance::Path).collect(),
        Family::Completes => (2..=max as u32).map(Instance::Complete).collect(),
        Family::Fans if max <= EXHAUSTIVE_FAN_LIMIT => {
            all_fans(max).into_iter().map(Instance::Fan).collect()
        }
        Family::Fans => sample_fans(&mut rng, max, config.samples),
        Family::Circ => sample_composites(&mut rng, Gluing::Circ, max, config.samples),
        Family::Star => sample_composites(&mut rng, Gluing::Star, max, config.samples),
    }
}

fn sample_fans(rng: &mut ChaCha8Rng, max: usize, samples: usize) -> Vec<Instance> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..samples.saturating_mul(50) {
        if out.len() == samples {
            break;
        }
        let Some(spec) = random_fan(rng, max, false) else {
            break;
        };
        if seen.insert(FanSpecDoc::from_spec(&spec)) {
            out.push(Instance::Fan(spec));
        }
    }
    out
}

/// A random fan with at most `max` realized vertices. With `with_leaf`, the
/// first block starts with a `K_2` branch so the fan has a gluing leaf.
pub fn random_fan<R: Rng>(rng: &mut R, max: usize, with_leaf: bool) -> Option<FanGraphSpec> {
    let min_extra = usize::from(with_leaf);
    if max < 2 + min_extra {
        return None;
    }
    let n = rng.random_range(2..=max - min_extra);
    let mut budget = max - n;
    let max_blocks = n.min(budget);
    let k = rng.random_range(min_extra..=max_blocks);
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    let mut labels = labels.into_iter();
    let mut blocks = Vec::with_capacity(k);
    let mut free_labels = n;
    for b in 0..k {
        let later = k - b - 1;
        let size_cap = (free_labels - later).min(budget - later);
        let size = rng.random_range(1..=size_cap);
        free_labels -= size;
        let mut vertices = Vec::with_capacity(size);
        let mut branch_sizes = Vec::with_capacity(size);
        for j in 1..=size {
            let spare = budget - later - (size - j) - 1;
            let h = if with_leaf && b == 0 && j == 1 {
                1
            } else {
                rng.random_range(1..=1 + spare.min(2))
            };
            budget -= h;
            vertices.push(labels.next().expect("enough labels"));
            branch_sizes.push(j as u32 + h as u32);
        }
        blocks.push((vertices, branch_sizes));
    }
    Some(FanGraphSpec::new(n as u32, blocks).expect("sampled specs are valid"))
}

fn composite_size(op: Gluing, left: usize, right: usize) -> usize {
    match op {
        Gluing::Circ => left + right - 3,
        Gluing::Star => left + right - 1,
    }
}

fn sample_composites(
    rng: &mut ChaCha8Rng,
    op: Gluing,
    max: usize,
    samples: usize,
) -> Vec<Instance> {
    let side_max = match op {
        Gluing::Circ => max,
        Gluing::Star => max.saturating_sub(2),
    };
    let pool: Vec<GlueSide> = (0..samples.max(16) * 4)
        .filter_map(|_| {
            let spec = random_fan(rng, side_max, true)?;
            let leaf = spec.leaf_catalog().choose(rng)?.leaf;
            Some(GlueSide { spec, leaf })
        })
        .collect();
    if pool.is_empty() {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..samples.saturating_mul(100) {
        if out.len() == samples {
            break;
        }
        let left = pool.choose(rng).expect("nonempty pool");
        let size = left.spec.realized_vertex_count();
        let partners: Vec<&GlueSide> = pool
            .iter()
            .filter(|r| composite_size(op, size, r.spec.realized_vertex_count()) <= max)
            .collect();
        let Some(&right) = partners.choose(rng) else {
            continue;
        };
        let c = CompositeSpec {
            op,
            left: left.clone(),
            right: right.clone(),
        };
        if c.realize().is_ok() && seen.insert(CompositeDoc::from_spec(&c)) {
            out.push(Instance::Composite(c));
        }
    }
    out
}
