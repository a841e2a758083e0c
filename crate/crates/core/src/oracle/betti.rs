use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use super::homology::reduced_ranks;
use super::ideal::SquarefreeMonomialIdeal;
use super::linalg::{rank, SignMatrix};
use super::{Field, OracleError};

/// Variable limit for the Hochster sweep over all `2^n` variable subsets.
pub const HOCHSTER_MAX_VARIABLES: usize = 16;
/// Generator limit for the Taylor sweep over all `2^m` generator subsets.
pub const TAYLOR_MAX_GENERATORS: usize = 12;
/// The Taylor sweep stores lcms as `u64` masks.
pub const TAYLOR_MAX_VARIABLES: usize = 64;

/// Graded Betti numbers `β_{i,j}` of a quotient `S/I` where `S` has `n`
/// variables. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(
        n: usize,
        entries: I,
    ) -> Self {
        let mut t = BettiTable::new(n);
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Entrywise sum of partial tables. Addition is associative and
    /// commutative, so partial sweeps can be merged in any order.
    pub fn merge(&mut self, other: &BettiTable) -> Result<(), OracleError> {
        if self.n != other.n {
            return Err(OracleError::VariableMismatch);
        }
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
        Ok(())
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `n - pd`, by Auslander–Buchsbaum.
    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

fn capacity(what: &'static str, count: usize, limit: usize) -> Result<(), OracleError> {
    if count > limit {
        Err(OracleError::Capacity { what, count, limit })
    } else {
        Ok(())
    }
}

/// Hochster's formula, prepared for sweeping subsets of the variables.
///
/// `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|σ)` where `Δ` is the Stanley–Reisner
/// complex. Subsets are indexed by their mask, so any partition of
/// `0..subset_count()` into ranges can be swept independently and merged.
#[derive(Clone, Debug)]
pub struct HochsterSweep {
    n: usize,
    is_face: Vec<bool>,
    generators: Vec<u32>,
}

impl HochsterSweep {
    pub fn new(ideal: &SquarefreeMonomialIdeal) -> Result<Self, OracleError> {
        let n = ideal.variable_count();
        capacity("variables", n, HOCHSTER_MAX_VARIABLES)?;
        let vars: Vec<_> = ideal.variables().iter().copied().collect();
        let generators: Vec<u32> = ideal
            .generators()
            .map(|g| {
                g.support().iter().fold(0u32, |m, x| {
                    m | 1 << vars.binary_search(x).expect("generator variable")
                })
            })
            .collect();
        let is_face = (0u32..1 << n)
            .map(|s| generators.iter().all(|&g| g & s != g))
            .collect();
        Ok(HochsterSweep {
            n,
            is_face,
            generators,
        })
    }

    pub fn subset_count(&self) -> u64 {
        1 << self.n
    }

    /// Contributions of the variable subsets with masks in `range`.
    pub fn sweep(&self, range: Range<u64>, field: Field) -> Result<BettiTable, OracleError> {
        field.validate()?;
        let mut table = BettiTable::new(self.n);
        for sigma in range {
            let sigma = sigma as u32;
            // Unless σ is a union of generators, some vertex of σ lies in no
            // generator inside σ and Δ|σ is a cone over it.
            let covered = self
                .generators
                .iter()
                .filter(|&&g| g & sigma == g)
                .fold(0, |acc, &g| acc | g);
            if covered != sigma {
                continue;
            }
            let size = sigma.count_ones() as usize;
            let mut faces: Vec<Vec<u64>> = alloc::vec![Vec::new(); size + 1];
            let mut sub = sigma;
            loop {
                if self.is_face[sub as usize] {
                    faces[sub.count_ones() as usize].push(u64::from(sub));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & sigma;
            }
            while faces.last().is_some_and(Vec::is_empty) {
                faces.pop();
            }
            for bucket in &mut faces {
                bucket.reverse();
            }
            for (s, r) in reduced_ranks(&faces, field).into_iter().enumerate() {
                // Reduced degree d = s - 1 contributes to i = |σ| - d - 1.
                if r > 0 {
                    table.add(size - s, size, r as u64);
                }
            }
        }
        Ok(table)
    }
}

pub fn betti_table_hochster(
    ideal: &SquarefreeMonomialIdeal,
    field: Field,
) -> Result<BettiTable, OracleError> {
    let sweep = HochsterSweep::new(ideal)?;
    sweep.sweep(0..sweep.subset_count(), field)
}

/// The Taylor complex tensored with the residue field, split by
/// multidegree.
///
/// A basis element is a subset of generators in homological degree equal
/// to its size and multidegree equal to its lcm. After setting variables
/// to zero, a boundary term survives exactly when dropping the generator
/// leaves the lcm unchanged, so each multidegree is its own complex.
#[derive(Clone, Debug)]
pub struct TaylorSweep {
    n: usize,
    /// Per lcm mask, the generator subsets having that lcm, sorted.
    classes: Vec<(u64, Vec<u32>)>,
}

impl TaylorSweep {
    pub fn new(ideal: &SquarefreeMonomialIdeal) -> Result<Self, OracleError> {
        let n = ideal.variable_count();
        let m = ideal.generator_count();
        capacity("generators", m, TAYLOR_MAX_GENERATORS)?;
        capacity("variables", n, TAYLOR_MAX_VARIABLES)?;
        let vars: Vec<_> = ideal.variables().iter().copied().collect();
        let gens: Vec<u64> = ideal
            .generators()
            .map(|g| {
                g.support().iter().fold(0u64, |acc, x| {
                    acc | 1 << vars.binary_search(x).expect("generator variable")
                })
            })
            .collect();
        let mut lcm = alloc::vec![0u64; 1 << m];
        let mut by_lcm: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for s in 0u32..1 << m {
            if s != 0 {
                let low = s.trailing_zeros();
                lcm[s as usize] = lcm[(s & (s - 1)) as usize] | gens[low as usize];
            }
            by_lcm.entry(lcm[s as usize]).or_default().push(s);
        }
        Ok(TaylorSweep {
            n,
            classes: by_lcm.into_iter().collect(),
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Contributions of the multidegree classes with indices in `range`.
    pub fn sweep(&self, range: Range<usize>, field: Field) -> Result<BettiTable, OracleError> {
        field.validate()?;
        let mut table = BettiTable::new(self.n);
        for (lcm, subsets) in &self.classes[range] {
            let j = lcm.count_ones() as usize;
            let top = subsets
                .iter()
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap_or(0);
            let mut by_size: Vec<Vec<u32>> = alloc::vec![Vec::new(); top + 1];
            for &s in subsets {
                by_size[s.count_ones() as usize].push(s);
            }
            // ranks[i] = rank of the differential out of homological degree i.
            let mut ranks = alloc::vec![0usize; top + 2];
            for i in 1..=top {
                let mut d = SignMatrix::new(by_size[i - 1].len());
                for &s in &by_size[i] {
                    let mut row = Vec::new();
                    let mut rest = s;
                    let mut k = 0;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest ^= bit;
                        if let Ok(col) = by_size[i - 1].binary_search(&(s ^ bit)) {
                            row.push((col, if k % 2 == 0 { 1 } else { -1 }));
                        }
                        k += 1;
                    }
                    d.rows.push(row);
                }
                ranks[i] = rank(&d, field);
            }
            for i in 0..=top {
                let beta = by_size[i].len() - ranks[i] - ranks[i + 1];
                table.add(i, j, beta as u64);
            }
        }
        Ok(table)
    }
}

pub fn betti_table_taylor(
    ideal: &SquarefreeMonomialIdeal,
    field: Field,
) -> Result<BettiTable, OracleError> {
    let sweep = TaylorSweep::new(ideal)?;
    sweep.sweep(0..sweep.class_count(), field)
}
