use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::complex::SimplicialComplex;
use super::linalg::{rank, SignMatrix};
use super::{Field, OracleError};

/// Boundary map from faces of size `s` to faces of size `s - 1`, with
/// faces given as sorted masks.
fn boundary(upper: &[u64], lower: &[u64]) -> SignMatrix {
    let mut m = SignMatrix::new(lower.len());
    for &face in upper {
        let mut row = Vec::with_capacity(face.count_ones() as usize);
        let mut rest = face;
        let mut k = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let col = lower
                .binary_search(&(face ^ bit))
                .expect("complex is closed under subsets");
            row.push((col, if k % 2 == 0 { 1 } else { -1 }));
            k += 1;
        }
        m.rows.push(row);
    }
    m
}

/// Reduced Betti numbers from faces bucketed by size. Entry `s` of the
/// result is the rank of reduced homology in degree `s - 1`.
pub(crate) fn reduced_ranks(faces: &[Vec<u64>], field: Field) -> Vec<usize> {
    // ranks[s] = rank of the boundary out of size-s faces; size 0 maps to 0.
    let mut ranks = alloc::vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        ranks[s] = rank(&boundary(&faces[s], &faces[s - 1]), field);
    }
    (0..faces.len())
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Ranks of reduced homology in every degree from `-1` to the dimension of
/// the complex. The void complex has no degrees at all.
pub fn reduced_homology_ranks(
    complex: &SimplicialComplex,
    field: Field,
) -> Result<BTreeMap<i32, usize>, OracleError> {
    field.validate()?;
    let faces = complex.faces_by_size()?;
    Ok(reduced_ranks(&faces, field)
        .into_iter()
        .enumerate()
        .map(|(s, r)| (s as i32 - 1, r))
        .collect())
}
